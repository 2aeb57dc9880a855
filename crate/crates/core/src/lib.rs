//! Exact combinatorics for the simple modules of cyclotomic Hecke algebras of
//! type G(r,p,n) when the deformation parameter is a root of unity.
//!
//! The pipeline runs bottom-up:
//!
//! - [`combinatorics`]: partitions, multipartitions and standard tableaux.
//! - [`parameters`]: `(e, p, delta, charges)` and everything derived from it,
//!   including the parameter sequence `Q` as root-of-unity exponents.
//! - [`afunction`]: the exact rational a-function on multipartitions.
//! - [`flotw`] and [`kleshchev`]: the two labelings of simple Ariki-Koike
//!   modules, by cylindric inequalities and by crystal growth.
//! - [`clifford`]: the cyclic component action, its orbits, and the
//!   semisimple label tables.
//! - [`classify`]: the final label set for the G(r,p,n) algebra.
//! - [`verify`] and [`cli`]: the cross-module identity harness and the
//!   command-line surface.

pub mod afunction;
pub mod classify;
pub mod cli;
pub mod clifford;
pub mod combinatorics;
mod error;
pub mod flotw;
pub mod kleshchev;
pub mod parameters;
pub mod verify;

pub use error::{Error, Result};
