//! Incremental embedding engine for dynamic graphs.
//!
//! A dynamic graph is a sequence of timestamped snapshots. Instead of
//! re-embedding every snapshot from scratch, this crate diffs consecutive
//! snapshots, regenerates biased random walks only for the nodes whose
//! neighbourhood changed, and retrains a skip-gram model warm-started from
//! the previous timestamp. Embedding spaces therefore stay aligned across
//! time, which is what makes drift-based anomaly scoring and temporal link
//! prediction work downstream.
//!
//! The crate is `no_std`-compatible (with `alloc`); everything that touches
//! the filesystem, clocks, or threads lives in the companion `dynembed`
//! crate.
//!
//! Module map:
//! - [`graph`]: snapshot ingestion, event bucketing, and delta computation.
//! - [`walk`]: second-order (p,q)-biased walk generation with a transition
//!   cache that survives across timestamps.
//! - [`sgns`]: skip-gram with negative sampling, incremental vocabulary, and
//!   warm starts.
//! - [`eval`]: edge operators, rank-based AUC, logistic regression with
//!   micro/macro F1, and embedding-drift anomaly scoring.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod eval;
pub mod graph;
mod math;
mod mix;
pub mod sgns;
pub mod walk;

pub use mix::mix64;
