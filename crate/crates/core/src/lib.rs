//! Exact combinatorics of affine type A highest-weight crystals on
//! multipartitions, the v-deformed Fock space that carries them, canonical
//! bases with their decomposition matrices, and Grothendieck-level branching
//! of simple classes.
//!
//! Everything is exact integer / Laurent-polynomial arithmetic; there is no
//! floating point anywhere. The layers, bottom to top:
//!
//! * [`multipartition`], [`charge`], [`dominance`], [`tableaux`] — labels,
//!   residues, orders and counting.
//! * [`laurent`] — the scalar ring `Z[v, v^-1]` with the bar involution.
//! * [`crystal`], [`freudenthal`] — the signature-rule crystal, its generated
//!   component, and an independent weight-multiplicity oracle.
//! * [`fock`] — the deformed Fock space with the Chevalley generator action.
//! * [`canonical`] — canonical bases and decomposition matrices.
//! * [`branching`] — restriction of simple classes and the branching checks.

pub mod branching;
pub mod canonical;
pub mod charge;
pub mod crystal;
pub mod dominance;
pub mod error;
pub mod fock;
pub mod freudenthal;
pub mod laurent;
pub mod multipartition;
pub mod tableaux;

pub use charge::{boundary_nodes, residue_counts, Multicharge, ReadingDirection, ResidueCounts};
pub use dominance::{dominance_compare, DominanceOrdering};
pub use laurent::{quantum_factorial, quantum_integer, LaurentPoly};
pub use multipartition::{multipartitions_of, partitions_of, Multipartition, Node, Partition};
pub use tableaux::{standard_tableaux_count, TableauxCounter};
