//! Exact computation with matrix ordinary differential operators:
//! differential resultants, spectral curves and Burchnall–Chaundy ideals.

pub mod bc;
pub mod diff_field;
pub mod dres;
pub mod error;
pub mod fixtures;
pub mod frac;
pub mod gaussian;
pub mod matrix;
pub mod mpoly;
pub mod operator;
pub mod parser;
pub mod polyring;
pub mod scalar;
pub mod spectral;

pub use bc::{bc_generator, is_bc, is_bc_poly, minimal_exponents, BCReport, BcFactor, FactorSource};
pub use diff_field::{Backend, DiffField, Rule};
pub use dres::{
    companion, dres, m_matrix, p_seq, spectral_curve, spectral_matrix, spectral_matrix_at, CurveReport, SpectralPoly,
};
pub use error::{ModoError, Result};
pub use frac::Frac;
pub use gaussian::GaussianRational;
pub use matrix::Matrix;
pub use operator::{modo_commutator, modo_mul, op_eval_poly, op_eval_terms, ModoRing, Operator};
pub use polyring::{
    bp_eval_commuting, bp_factor, bp_gcd, bp_sqrt, bp_squarefree, BivarPoly, Factorization,
};
pub use spectral::{
    kernel_at_point, on_curve, phi_ratio, riccati_residual, CurvePoint, KernelBasis, RiccatiResidual,
};
pub use scalar::{Coeff, Derivation, Field, Ring, TrySqrt};

/// Element of the coefficient field K over Q(i).
pub type FieldElement = Frac<GaussianRational>;
/// Differential field description over Q(i).
pub type DerivationSpec = DiffField<GaussianRational>;
/// ℓ×ℓ matrix over K.
pub type MatK = Matrix<FieldElement>;
/// Matrix differential operator over K.
pub type Modo = Operator<FieldElement>;
/// M(L − λ, B − μ) over K[λ, μ].
pub type SpectralMatrix = Matrix<SpectralPoly>;
