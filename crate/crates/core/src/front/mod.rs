pub mod diagram;
pub mod trace;
pub mod parse;
pub mod invariants;
pub mod render;
pub mod catalog;
