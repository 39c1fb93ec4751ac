pub mod catalog;
pub mod decompose;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod oracle;
pub mod tutte;
pub mod wl;

pub use error::{Error, ParseErrorKind, Result};
pub use graph::{Color, ColorInterner, ColoredGraph, Vertex};
pub use wl::Coloring;
