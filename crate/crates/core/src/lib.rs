pub mod cli;
pub mod cores;
pub mod minors;
pub mod reductions;
pub mod solver;
pub mod structures;
pub mod treewidth;
