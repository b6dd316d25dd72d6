pub mod arith;
pub mod classifier;
pub mod cli;
pub mod cyclotomic;
pub mod dixon;
pub mod groups;
pub mod io;
pub mod lie_tables;
pub mod sym_tables;
pub mod table;
