//! Exact classification engine for Hamiltonian circle actions on the
//! Hirzebruch surfaces S2xS2 and CP2#-CP2.

pub mod actions;
pub mod algebra;
pub mod arith;
pub mod cli;
pub mod delzant;
pub mod karshon;
pub mod report;
pub mod sweep;
