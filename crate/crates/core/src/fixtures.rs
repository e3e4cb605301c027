//! Built-in configs for the three AKNS instances.

use crate::parser::{parse_config, SessionConfig};

pub const AKNS: &str = include_str!("../fixtures/akns.modo");
pub const EX71: &str = include_str!("../fixtures/ex71.modo");
pub const EX72: &str = include_str!("../fixtures/ex72.modo");

pub const NAMES: [&str; 3] = ["akns", "ex71", "ex72"];

pub fn source(name: &str) -> Option<&'static str> {
    match name {
        "akns" => Some(AKNS),
        "ex71" => Some(EX71),
        "ex72" => Some(EX72),
        _ => None,
    }
}

pub fn load(name: &str) -> Option<SessionConfig> {
    source(name).map(|s| parse_config(s).expect("built-in fixture parses"))
}

/// Expected results for a built-in fixture.
#[derive(Clone, Copy, Debug)]
pub struct Golden {
    pub f: &'static str,
    pub big_f: &'static str,
    pub factors: &'static [&'static str],
    /// A point of the curve with Gaussian-rational coordinates.
    pub point: Option<(&'static str, &'static str)>,
}

pub fn golden(name: &str) -> Option<Golden> {
    const AKNS_F: &str = "mu^2 + 4*lambda^4 + (-2*i*u*v' + 2*i*v*u')*lambda + u^2*v^2 + u'*v'";
    const EX71_F: &str = "mu^2 + 4*lambda^4 + 16*lambda + 12";
    match name {
        "akns" => Some(Golden { f: AKNS_F, big_f: AKNS_F, factors: &[AKNS_F], point: None }),
        "ex71" => Some(Golden { f: EX71_F, big_f: EX71_F, factors: &[EX71_F], point: Some(("-1", "0")) }),
        "ex72" => Some(Golden {
            f: "mu^2 + 4*lambda^4",
            big_f: "mu^2 + 4*lambda^4",
            factors: &["mu - 2*i*lambda^2", "mu + 2*i*lambda^2"],
            point: Some(("0", "0")),
        }),
        _ => None,
    }
}
