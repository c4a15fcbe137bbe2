//! Exact diagram algebra in a preabelian category.
//!
//! The concrete category is `vectpair`: finite-dimensional rational vector
//! spaces carrying a distinguished subspace. It is preabelian and
//! quasi-abelian but not abelian, so canonical decompositions, strictness,
//! Two-Square morphisms and snake connecting morphisms are all nontrivial
//! and all decidable by exact rational arithmetic.
//!
//! Layers, bottom up:
//!
//! * [`ratmat`] — arbitrary-precision rational matrices and subspaces.
//! * [`catcore`] — generic preabelian operations over a backend contract.
//! * [`vectpair`] — the vector-pair backend plus closed-form oracles and
//!   seeded diagram generators.
//! * [`twosquare`] — the Two-Square construction (θ, ρ, η), its
//!   classification audit, induced row maps and ladder certificates.
//! * [`snake`] — both connecting morphisms δ_I and δ_II, the sign identity
//!   δ_II = −δ_I, and an element-chase oracle.
//! * [`diagdsl`] — the `.pad` diagram file format: parser, formatter,
//!   elaborator.
//! * [`report`] — the machine-readable JSON report schema.

pub mod catcore;
pub mod diagdsl;
pub mod ratmat;
pub mod report;
pub mod snake;
pub mod twosquare;
pub mod vectpair;

pub use catcore::split_seed;
pub use ratmat::{Matrix, Scalar, Subspace};
pub use vectpair::{PairMorphism, PairObject, VectPair};
