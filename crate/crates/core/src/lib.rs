//! Enumeration and classification of linear codes over the ring
//! E = <2a = 2b = 0, a^2 = a, b^2 = b, ab = a, ba = b>.
//!
//! The pipeline is: enumerate binary (T, U, V) triples ([`genmat`]), span
//! the resulting generator matrices into codes, compute per-code metrics
//! ([`metrics`], [`duality`]) and fold them into per-type records
//! ([`classify`]). [`export`] and [`tables`] turn the results into files
//! and printed tables for the `nur4` binary.

pub mod classify;
pub mod duality;
pub mod error;
pub mod export;
pub mod genmat;
pub mod metrics;
pub mod ring;
pub mod tables;
pub mod words;

pub use classify::{classify_length, classify_type, ClassifyOptions, LengthReport, TypeRecord};
pub use duality::{NicePolicy, NiceReport};
pub use error::{Error, Result};
pub use genmat::{BitMatrix, Code, CodeType, EMatrix, GeneratorSpec};
pub use ring::RingElement;
pub use words::{BitWord, EWord, Side};
