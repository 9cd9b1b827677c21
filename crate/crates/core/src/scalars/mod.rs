//! Exact scalars: roots of unity, the cyclotomic fields `Q(ζ_L)`, and matrices over them.

mod cyclo;
mod matrix;
pub mod modular;
mod root;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloElem, CycloField};
pub use matrix::ScalarMatrix;
pub use modular::{ModEchelon, ModularImage};
pub use root::{root_order, RootExp};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("mixed cyclotomic fields: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("Q(zeta_{from}) is not a subfield of Q(zeta_{to})")]
    NotASubfield { from: u32, to: u32 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}
