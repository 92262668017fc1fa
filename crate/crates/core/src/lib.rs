//! Degree-bounded Nullstellensatz certificates for non-3-colorability over GF(2).
//!
//! A graph `G` is 3-colorable iff Bayer's system
//! `x_i^3 + 1 = 0` (per vertex), `x_i^2 + x_i x_j + x_j^2 = 0` (per edge)
//! has a common zero. When it has none, multipliers `α_f` with
//! `Σ α_f f = 1` certify this, and the smallest possible `max deg α_f` is
//! the Nullstellensatz degree of `G`.
//!
//! The crate offers two routes to degree-one certificates which are
//! cross-checked against each other:
//!
//! * [`nulla`]: the general linear-algebra search at any degree bound, plus a
//!   reduced degree-one search over an equivalent polynomial family;
//! * [`pathcover`]: the combinatorial characterization by parity covers of
//!   length-two paths, with lifts between covers and certificates.
//!
//! [`graph`] holds the graph type, graph6 I/O, exact coloring oracles,
//! isomorphism-free enumeration and the Hajós operators. [`gf2`] and
//! [`poly`] are the algebra underneath.

pub mod error;
pub mod gf2;
pub mod graph;
pub mod nulla;
pub mod pathcover;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{Coloring, Edge, Graph};
