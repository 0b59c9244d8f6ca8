//! Hand-written parsers for expressions, radicand lists, integral words and
//! nested sums.

pub mod expr;
pub mod lexer;
mod sum;
mod word;

pub use expr::{
    parse_constant, parse_constant_with, parse_expr, parse_polynomial, parse_rational_function,
    parse_rational_function_with, Env, Expr,
};
pub use lexer::parse_error;
pub use sum::parse_sum;
pub use word::parse_word;
