//! Surface syntax: expression parsing, text rendering and JSON I/O.

pub mod format;
pub mod json;
pub mod parse;

pub use format::{format_module, format_skein, format_torus, format_value};
pub use parse::{parse, parse_as, parse_module, parse_skein, parse_torus, parse_value, Family, ParseError, Value};
