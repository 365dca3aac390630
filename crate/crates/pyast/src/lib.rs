//! Parsing, rendering and comparison of a Python subset.

pub mod ast;
pub mod diff;
pub mod error;
pub mod interp;
pub mod lexer;
pub mod parser;
pub mod render;
pub mod visit;

pub use ast::*;
pub use diff::{ast_equal, AstDiff, Divergence};
pub use error::ParseError;
pub use parser::{parse, parse_expr, sha256_hex};
pub use render::render;
