//! Exact arithmetic in Q(i) and in the constant polynomial ring C[λ, μ].

mod bivar;
mod eval;
mod factor;

pub use bivar::{bp_gcd, BivarPoly};
pub use eval::{bp_eval_commuting, eval_terms, CommutativeRing, EvalRing, ScalarRing};
pub use factor::{
    bp_factor, bp_sqrt, bp_squarefree, discriminant_is_square, univariate_sqrt,
    verify_user_factorization, Factorization,
};
