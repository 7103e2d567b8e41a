//! Command-line front end for `ehrhart-core`.

pub mod commands;
pub mod grammar;
pub mod reproduce;
