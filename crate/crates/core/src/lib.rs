pub mod error;
pub mod charlattice;
pub mod cli;
pub mod fieldcore;
pub mod groups;
pub mod io;
pub mod mackey;
pub mod nori;
pub mod pipeline;
pub mod smallrep;
pub mod tame;

pub use error::{Error, Result};
