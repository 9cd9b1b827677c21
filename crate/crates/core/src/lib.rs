//! Exact computations in the two-parameter quantum matrix algebra `M₂(α,β)` at roots of unity.
//!
//! The algebra is generated by `X11, X12, X21, X22` subject to
//!
//! ```text
//! X12 X11 = α X11 X12        X22 X21 = α X21 X22
//! X21 X11 = β X11 X21        X22 X12 = β X12 X22
//! X21 X12 = βα⁻¹ X12 X21     X22 X11 − X11 X22 = (β − α⁻¹) X12 X21
//! ```
//!
//! with `α = ζ_m^{k1}`, `β = ζ_n^{k2}`. All arithmetic is exact, over cyclotomic fields.
//!
//! - [`scalars`]: `Q(ζ_L)` arithmetic, roots of unity, sparse matrices.
//! - [`ncalgebra`]: PBW normal forms, the quantum determinant, the center.
//! - [`pidegree`]: Smith normal form and the PI degree, by invariant factors and in closed form.
//! - [`reps`]: the torsionfree simple modules `V1`, `V2`, `V3` as explicit matrices.
//! - [`iso`]: isomorphism by parameter criteria and by an intertwiner solve.

pub mod error;
pub mod iso;
pub mod linalg;
pub mod ncalgebra;
pub mod pidegree;
pub mod reps;
pub mod scalars;

pub use error::{Error, Result};
pub use ncalgebra::AlgebraParams;
