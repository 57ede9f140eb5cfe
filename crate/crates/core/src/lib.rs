//! ctlab: equilibrium analysis for finite sender-receiver communication games
//! where the sender's preference is a transparent (public, state-independent)
//! utility plus a small state-dependent or idiosyncratic perturbation.
//!
//! The crate is organized around exact rational arithmetic: all equilibrium
//! computations (best responses, candidate solving, monotonicity checks) are
//! carried out over `BigRational`, so strict inequalities are decided exactly.
//! Floating point appears only in the Monte Carlo samplers of [`perturb`].

pub mod exact;
pub mod game;
pub mod receiver;
pub mod graph;
pub mod candidate;
pub mod stability;
pub mod modifications;
pub mod perturb;
pub mod builtin;
pub mod doc;

pub use exact::Rat;
