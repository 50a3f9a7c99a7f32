pub mod budget;
pub mod chromatic;
pub mod error;
pub mod families;
pub mod formulas;
pub mod free;
pub mod graph;
pub mod hom;
pub mod rational;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/homomorphisms.md")]
    mod homomorphisms {}
    #[doc = include_str!("../../../book/src/free-colourings.md")]
    mod free_colourings {}
    #[doc = include_str!("../../../book/src/mycielski.md")]
    mod mycielski {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
