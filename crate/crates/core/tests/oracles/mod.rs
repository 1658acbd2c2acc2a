//! Reference computations used only by the tests. They share no code paths
//! with the library beyond its public types.
#![allow(dead_code)]

pub mod degree;
pub mod numeric;
pub mod roots_of_unity;
pub mod search;
