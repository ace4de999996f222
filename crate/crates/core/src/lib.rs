//! Finite group cohomology, dévissage of solvable groups and realizability
//! certificates for prime-to-p quotients of fundamental groups of affine
//! curves.

pub mod catalog;
pub mod cohomology;
pub mod descriptor;
pub mod devissage;
pub mod error;
pub mod gos;
pub mod group;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod realizability;
pub mod verify;

pub use error::{Error, Result};
