//! Exact symbolic engine for the explicit local Langlands correspondence of
//! the rank-two symplectic groups Sp4 and GSp4 over a non-archimedean local
//! field with odd residue characteristic.
//!
//! The engine works entirely with exact symbolic data: rational functions in
//! a formal q^{1/2} ([`qfield`]), syntactic smooth characters with declared
//! relations ([`characters`]), explicit root data and Weyl combinatorics
//! ([`rootdata`]), finite-reductive-group tables ([`finite_reductive`]),
//! supercuspidal enumeration and formal degrees ([`supercuspidal`]), a
//! reducibility decision procedure for parabolic induction ([`induction`]),
//! the Galois-side case classifier and L-packet assembly ([`galois`]), and a
//! symbolic stability ledger ([`stability`]).

pub mod characters;
pub mod error;
pub mod finite_reductive;
pub mod galois;
pub mod induction;
pub mod qfield;
pub mod rootdata;
pub mod stability;
pub mod supercuspidal;

pub use error::{EngineError, Result};
pub use qfield::{QFactored, QHalf};
