//! Split Levi covers, isolated semisimple classes and cuspidal Jordan
//! parameters of finite reductive groups, computed exactly.

#![allow(clippy::needless_range_loop)]

pub mod cuspdata;
pub mod error;
pub mod exactlin;
pub mod pipeline;
pub mod rootsys;
pub mod semisimple;
pub mod splitlevi;

pub use error::{Error, Result};
