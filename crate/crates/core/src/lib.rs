//! Exact quantum monodromy of the three-strand braid group at level `l`.

pub mod braidrep;
pub mod cli;
pub mod cyclo;
pub mod fusion;
pub mod modular;
pub mod orderlab;
pub mod par;
