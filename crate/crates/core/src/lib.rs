pub mod character;
pub mod cyclotomic;
pub mod dual_graph;
pub mod error;
pub mod hj;
pub mod jumps;
pub mod catalog;
pub mod graph_file;
