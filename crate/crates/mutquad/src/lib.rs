//! Locally mutated quadratic iterations.
//!
//! A quadratic map `z² + c1` (the intact map) is overridden by a mutant map
//! `z² + c0` on a disk around a focus point, with the parameter interpolated
//! radially across a transition annulus out to radius `R`. This crate
//! evaluates the resulting piecewise map, rasterizes its prisoner set (seeds
//! whose orbit stays bounded), and quantifies the mask geometry — connected
//! components, area, Hausdorff distance, subset tests — across parameter
//! sweeps.
//!
//! Rendering is row-parallel under the default `parallel` feature and falls
//! back to a plain loop without it; both produce bit-identical output.

pub mod dynamics;
mod edt;
pub mod error;
pub mod io;
pub mod presets;
pub mod raster;
pub mod sweep;
pub mod topology;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use raster::init_worker_threads;
