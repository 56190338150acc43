pub mod driver;
pub mod lexer;
pub mod parser;
