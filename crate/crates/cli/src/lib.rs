//! Command-line front end and HTTP JSON service for the orbitloom engine.

pub mod cli;
pub mod doc;
pub mod error;
pub mod ops;
pub mod service;

pub use doc::CurveSpecDoc;
pub use error::AppError;
