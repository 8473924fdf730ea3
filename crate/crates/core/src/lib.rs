//! Finite-model construction and verification for degenerate tricategory
//! structures: commutative-monoid calculi, doubly degenerate data with a
//! machine-checked diagram library, braiding synthesis, and monoidal
//! bicategories at desk scale.

pub mod dd2;
pub mod fincat;
pub mod monbicat;
pub mod monoid;
pub mod monoidal;
pub mod td3;

pub use fincat::{FinCategory, FinFunctor, FinNatTransform};
pub use monoid::{FiniteCommutativeMonoid, MonoidHom, TwoOpSet};
pub use monoidal::FinMonoidalCategory;
