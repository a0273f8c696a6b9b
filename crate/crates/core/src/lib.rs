//! Combinatorics of the modular branching rule for affine Hecke algebras of
//! type A.
//!
//! * [`multiseg`]: multisegments and the crystal `B(∞)` in head and tail
//!   conventions.
//! * [`multipartition`]: multipartitions and the level-`l` Fock space crystal.
//! * [`realizations`]: FLOTW, Uglov and Kleshchev realizations of `B(Λ)`,
//!   crystal isomorphisms by path transport, and the embedding `f_v` into
//!   `B(∞)`.
//! * [`hall`]: nilpotent representations of the cyclic quiver over prime
//!   fields, Hall polynomials, the PBW and canonical bases, decomposition rows.
//! * [`branching`]: the branching rule at label level and crystal graphs.
//!
//! All arithmetic is exact.

pub mod branching;
pub mod error;
pub mod hall;
pub mod multipartition;
pub mod multiseg;
pub mod par;
pub mod realizations;

pub use error::{Error, Result};
pub use multipartition::{MultiPartition, Multicharge, Node};
pub use multiseg::{AffineWeight, Convention, DimVector, Multisegment, Residue, Segment};
pub use par::Exec;
