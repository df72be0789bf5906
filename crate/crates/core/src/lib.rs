pub mod graph;
pub mod distinguish;
pub mod shift;
pub mod smooth;
pub mod experiments;
pub mod cli;
