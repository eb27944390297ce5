//! Finite-order mapping classes on non-orientable surfaces.
//!
//! The crate is organized around the pipeline used to classify a periodic
//! mapping class of `M(N_g)` and decide what its normal closure contains:
//!
//! * [`nec`] — NEC signatures for cyclic quotient orbifolds, Wilkie
//!   presentations, the Hurwitz-Riemann formula, admissible epimorphisms
//!   onto `Z_n` and their topological-conjugacy invariants.
//! * [`polygon`] — fundamental polygons as combinatorial objects: surface
//!   symbols, the glued fundamental domain of the surface group, curves as
//!   chord diagrams and standard-pair certification.
//! * [`involutions`] — the signed taxonomy of order-2 actions, the five
//!   surgeries and model recipes for every conjugacy class.
//! * [`homology`] — induced actions on `H_1(N_g; Z_2)` with the intersection
//!   form, the filtration `V_g ⊇ V_g⁺ ⊇ ⟨[c]⟩`, and the integer matrices on
//!   `H_1(N_g; R)` used by the determinant homomorphism.
//! * [`closure`] — the decision predicates: whether a normal closure
//!   contains the twist subgroup and whether an element normally generates
//!   the mapping class group.

pub mod closure;
pub(crate) mod linalg2;
pub mod homology;
pub mod involutions;
pub mod nec;
pub mod polygon;
