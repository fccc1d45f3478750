//! Algorithmic core of the harfuse pipeline.
//!
//! Everything in this crate is pure computation over owned buffers: dense
//! linear algebra, windowing and augmentation of inertial recordings, signal
//! image formation, frequency/time-spectrum domain transforms, a small CNN
//! trained from scratch, two-stage canonical-correlation fusion, and a linear
//! one-vs-rest SVM. No IO, no global state; identical inputs produce
//! bit-identical outputs in a fixed build.
//!
//! The crate is `no_std`-compatible (`--no-default-features`) and only needs
//! `alloc`. File formats, dataset ingestion, and the CLI live in the
//! companion `harfuse` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cca;
pub mod cnn;
pub mod dataset;
pub mod domain;
pub mod exec;
pub mod linalg;
pub mod signal_image;
pub mod svm;

mod math;

pub use linalg::Matrix;
