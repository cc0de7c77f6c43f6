pub mod cli;
pub mod cqed;
pub mod designer;
pub mod error;
pub mod netcore;
pub mod readout;
mod search;
pub mod units;

pub use error::{Error, Result};
