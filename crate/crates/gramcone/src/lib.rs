pub mod cli;
pub mod error;
pub mod indefinite;
pub mod linalg;
pub mod rat;

pub use error::Error;
pub use indefinite::{ibracket, ichain, IMatrix, IndefiniteSpace, SpaceChain, Weight};
pub use linalg::RatMatrix;
pub use rat::{Rat, RatVector};
