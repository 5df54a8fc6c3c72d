pub mod abgrp;
pub mod cli;
pub mod cocyc;
pub mod cohom;
pub mod error;
pub mod group;
pub mod heis;
pub mod jacobi;
pub mod json;
pub mod mcg;
pub mod quat;
pub mod report;
pub mod sample;
pub mod sl2;
pub mod syntax;
pub mod words;

pub use error::{Error, Result};
