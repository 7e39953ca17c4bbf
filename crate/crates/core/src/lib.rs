//! Degree envelopes, geometric generating degrees and Hilbert-Burch data for
//! arrangements of points in the projective plane, computed exactly over a
//! large prime field.

pub mod algebra;
pub mod arrangement;
pub mod detloci;
pub mod envelope;
pub mod error;
pub mod gradedla;
pub mod hilbertburch;
pub mod ideal;

pub use error::{Error, Result};
