pub mod certify;
pub mod diagram;
pub mod fixtures;
pub mod graph;
pub mod invariants;
