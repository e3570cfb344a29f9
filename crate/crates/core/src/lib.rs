pub mod abgrp;
pub mod doldkan;
pub mod error;
#[doc(hidden)]
pub mod fuzzing;
pub mod groth;
pub mod intlin;
pub mod k0bridge;
pub mod random;
pub mod sabgrp;
pub mod simplexcat;
pub mod sset;
pub mod twocat;

pub use error::{Error, Result};
