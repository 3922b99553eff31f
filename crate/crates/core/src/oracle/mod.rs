//! Independent ground truth for small inputs: brute-force planarity over
//! rotation systems, exhaustive generation of 2-connected graphs, and a
//! seeded generator of embedded planar graphs.

mod generate;
mod random;
mod rotations;

pub use generate::{canonical_code, enumerate_two_connected_graphs};
pub use random::random_planar_two_connected;
pub use rotations::{is_planar_bruteforce, rotation_count, DEFAULT_ROTATION_BUDGET};
