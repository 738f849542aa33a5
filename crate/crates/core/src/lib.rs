pub mod center;
pub mod cli;
pub mod families;
pub mod frobinduction;
pub mod hopf;
pub mod linalg;
pub mod rep;
pub mod scalar;
pub mod verdict;
