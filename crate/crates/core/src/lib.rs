//! Finite fields, Paley graphs and tournaments, Hadamard matrices and
//! designs, and exact automorphism groups for all of them.
//!
//! ```
//! use paley::family::paley_graph;
//! use paley::perm::graph_automorphisms;
//! use paley::FiniteField;
//!
//! let g = paley_graph(&FiniteField::with_order(13)?)?;
//! assert_eq!(graph_automorphisms(&g)?.order_u64(), Some(78));
//! # Ok::<(), paley::Error>(())
//! ```

pub mod arith;
pub mod error;
pub mod family;
pub mod field;
pub mod graph;
pub mod hadamard;
pub mod perm;
pub mod residue;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/hadamard.md")]
    mod hadamard {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
