//! Config grammar, expression evaluation and canonical rendering.

pub mod ast;
mod config;
mod error;
pub mod lexer;
pub mod render;

pub use config::{
    parse_bivar, parse_config, parse_element, parse_factor_file, parse_operator, parse_spectral, parse_value,
    SessionConfig, Value,
};
pub use error::{ParseError, ParseErrorKind};
pub use render::{render_element, render_entry, render_matrix, render_operator};
