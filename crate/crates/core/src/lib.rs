//! Exact computations on plane cubics, their hyperosculating conics and the
//! curve arrangements they form.
//!
//! All arithmetic takes place in the number field K = Q(w, a) with
//! `w^2 + w + 1 = 0` and `a^3 = 2`. The crate provides homogeneous
//! polynomial arithmetic over K, Hessian-type covariants and osculating
//! conics of plane curves, Jacobian syzygies with freeness certificates,
//! local singularity invariants, and the catalogs of the nodal cubic
//! `x^3 + y^3 - xyz` and the Fermat cubic with their hyperosculating conics.

pub mod arrangements;
pub mod cayley;
pub mod claims;
pub mod error;
pub mod field;
pub mod lattice;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod singularities;
pub mod syzygy;

pub use error::{Error, Result};
pub use field::{FieldK, Rational};
pub use poly::{HomPoly, LinearChange, Monomial, ProjPoint, UniPoly, Var};
