pub mod cert;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod partition;
pub mod search;
pub mod switching;
