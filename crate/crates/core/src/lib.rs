//! Pilings for right-angled Artin groups: word problem, linear-time
//! conjugacy, twisted conjugacy for length-preserving automorphisms,
//! conjugacy in finite cyclic extensions and conjugacy growth tables.
//!
//! ```
//! use raag::{DefiningGraph, Word, conjugacy};
//!
//! let g = DefiningGraph::example4();
//! let u = Word::parse(&g, "a1 a2").unwrap();
//! let v = Word::parse(&g, "a2 a1").unwrap();
//! assert!(conjugacy::conjugate(&g, &u, &v));
//! ```

pub mod conjugacy;
pub mod error;
pub mod extension;
pub mod graph;
pub mod growth;
pub mod oracle;
pub mod piling;
pub mod search;
pub mod twisted;
pub mod word;

pub use error::{Error, Result};
pub use graph::{DefiningGraph, LengthPreservingAut, VertexSet};
pub use piling::{Bead, End, Piling, TileRef};
pub use word::{Letter, Sign, Word};
