pub mod analysis;
pub mod arith;
pub mod burnside;
pub mod catalog;
pub mod characters;
pub mod group;
pub mod subgroups;
