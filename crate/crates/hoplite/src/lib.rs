//! Crossed modules of semisimple Hopf algebras presented by finite-group
//! data, and the commuting-projector lattice models they generate on
//! combinatorial closed oriented surfaces.
//!
//! Everything is computed exactly by default: structure constants are
//! arbitrary-precision rationals, algebraic and operator identities are
//! verified entrywise, and ground-state degeneracies come out as integer
//! traces cross-checked by an independent colouring-counting oracle.
//!
//! The layering is bottom-up:
//!
//! * [`fingroup`] — finite groups as multiplication tables, actions,
//!   homomorphisms, crossed modules of groups;
//! * [`hopf`] — Hopf algebras as explicit structure tensors, with the
//!   group-algebra / function-algebra / dual / tensor / smash constructors
//!   and Haar integrals;
//! * [`xmod`] — crossed modules of Hopf algebras and the group-data
//!   construction `Fun(X)⊗ℂE → Fun(Y)⋊ℂG`;
//! * [`surface`] — combinatorial surfaces: rotation systems, plaquettes
//!   with base-points, duals;
//! * [`lattice`] — the local vertex/edge/plaquette operators, projectors,
//!   Hamiltonian, and ground-state dimension;
//! * [`oracle`] — brute-force flat-colouring counts for the group-data
//!   specializations, independent of the operator machinery;
//! * [`cli`] — config-driven verification runs and JSON reports.

pub mod cli;
pub mod fingroup;
pub mod hopf;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod surface;
pub mod xmod;
