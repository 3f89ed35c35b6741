pub mod braid;
pub mod burau;
pub mod cli;
pub mod error;
pub mod expr;
pub mod laurent;
pub mod linalg;
pub mod ordering;
pub mod topology;
