pub mod cli;
pub mod cycle_space;
pub mod embedder;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod io;
pub mod layout;
pub mod oracle;

pub use cycle_space::{CycleBasis, EdgeSet};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Thread, VertexId};
