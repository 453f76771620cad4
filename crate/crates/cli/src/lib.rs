//! Command-line front end: `I₁` expressions, Ore fractions and finite-ring
//! criteria reports.

pub mod commands;
pub mod parse;

pub use commands::{run, ExitCode};
pub use parse::{expr_to_x_poly, parse_expr, ParseError};
