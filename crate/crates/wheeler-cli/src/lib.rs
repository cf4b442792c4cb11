//! Text format and DOT export backing the `wheeler` command line tool.

pub mod dot;
pub mod format;
