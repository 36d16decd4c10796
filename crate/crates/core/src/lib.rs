pub mod census;
pub mod character;
pub mod cli;
pub mod data;
pub mod digraph;
pub mod field;
pub mod graph;
pub mod group;
pub mod primes;
pub mod realizability;
