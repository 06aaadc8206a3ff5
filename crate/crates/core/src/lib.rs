//! Exact invariants of Seifert fibred 4-manifolds with torus fibres over
//! hyperbolic 2-orbifolds: normal forms, Euler classes, cohomology of the
//! base orbifold group, a rigidity decision procedure, and finite-quotient
//! counting.

pub mod cohomology;
pub mod exactmat;
pub mod monodromy;
pub mod presentation;
pub mod quotients;
pub mod rigidity;
pub mod seifert;
pub mod symplectic;

pub use exactmat::IntMatrix;
pub use seifert::{ConePoint, Geometry, SeifertData};
