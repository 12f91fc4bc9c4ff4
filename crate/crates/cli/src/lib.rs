//! Scenario scripts for the pfister library: parsing, printing and running.

pub mod ast;
pub mod parse;
pub mod print;
pub mod run;

pub use parse::{parse, Parser, SyntaxError};
pub use run::{run, Options, Report, Session};
