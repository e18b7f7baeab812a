//! Front end for the `diffschub` engine: operator expressions and the
//! subcommands of the `diffschub` binary.

pub mod commands;
pub mod op;

pub use op::{parse_op, print_op, OperatorExpr};
