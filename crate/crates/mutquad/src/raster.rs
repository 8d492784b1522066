//! Escape-time fields and prisoner masks on a pixel raster.
//!
//! Every pixel center is iterated independently, so the field is computed
//! row-parallel when the `parallel` feature is enabled (the default) and by
//! a plain loop otherwise. Both paths produce bit-identical output.

use num_complex::Complex64;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::dynamics::{iterate_orbit, MutationSpec};
use crate::error::{Error, Result};

/// Default viewport half-extent used by the presets and the CLI.
pub const DEFAULT_HALF_EXTENT: f64 = 2.0;
/// Default raster side in pixels.
pub const DEFAULT_SIDE: usize = 800;
/// Default iteration budget.
pub const DEFAULT_MAX_ITER: u32 = 256;

/// Rectangular viewport in plane units plus raster resolution.
///
/// Row 0 is the top of the image; plane `y` increases upward.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub width: usize,
    pub height: usize,
}

impl GridSpec {
    pub fn new(
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
        width: usize,
        height: usize,
    ) -> Result<Self> {
        let bounds_ok = x_min.is_finite()
            && x_max.is_finite()
            && y_min.is_finite()
            && y_max.is_finite()
            && x_min < x_max
            && y_min < y_max;
        if !bounds_ok {
            return Err(Error::InvalidGrid(format!(
                "need finite x_min < x_max and y_min < y_max, got [{x_min}, {x_max}] x [{y_min}, {y_max}]"
            )));
        }
        if width == 0 || height == 0 {
            return Err(Error::InvalidGrid("width and height must be positive".into()));
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
            width,
            height,
        })
    }

    /// Square viewport `[-half, half]²` at `side x side` pixels.
    pub fn square(half: f64, side: usize) -> Result<Self> {
        Self::new(-half, half, -half, half, side, side)
    }

    pub fn pixel_width(&self) -> f64 {
        (self.x_max - self.x_min) / self.width as f64
    }

    pub fn pixel_height(&self) -> f64 {
        (self.y_max - self.y_min) / self.height as f64
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::square(DEFAULT_HALF_EXTENT, DEFAULT_SIDE).expect("default grid is valid")
    }
}

/// Plane coordinates of the center of pixel (`col`, `row`).
///
/// Panics if the indices are out of range.
pub fn pixel_center(grid: &GridSpec, col: usize, row: usize) -> Complex64 {
    assert!(
        col < grid.width && row < grid.height,
        "pixel index ({col}, {row}) out of range for {}x{}",
        grid.width,
        grid.height
    );
    center_unchecked(grid, col, row)
}

#[inline]
fn center_unchecked(grid: &GridSpec, col: usize, row: usize) -> Complex64 {
    let x = grid.x_min + (col as f64 + 0.5) * grid.pixel_width();
    let y = grid.y_max - (row as f64 + 0.5) * grid.pixel_height();
    Complex64::new(x, y)
}

/// Per-pixel escape steps for one map on one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EscapeField {
    pub grid: GridSpec,
    pub max_iter: u32,
    /// Row-major; the sentinel value `max_iter` marks pixels that did not
    /// escape within the budget.
    pub steps: Vec<u32>,
}

/// Boolean raster of non-escaping pixels.
#[derive(Debug, Clone, PartialEq)]
pub struct PrisonerMask {
    pub grid: GridSpec,
    /// Row-major; `true` marks prisoner pixels.
    pub bits: Vec<bool>,
}

impl PrisonerMask {
    pub fn get(&self, col: usize, row: usize) -> bool {
        self.bits[row * self.grid.width + col]
    }

    pub fn true_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Prisoner area in plane units² (true pixels x pixel area).
    pub fn area(&self) -> f64 {
        self.true_count() as f64 * self.grid.pixel_width() * self.grid.pixel_height()
    }
}

fn render_row(spec: &MutationSpec, grid: &GridSpec, max_iter: u32, row: usize, out: &mut [u32]) {
    for (col, slot) in out.iter_mut().enumerate() {
        *slot = iterate_orbit(spec, center_unchecked(grid, col, row), max_iter).steps;
    }
}

/// Computes the escape field for every pixel center.
///
/// The result is a pure function of the inputs: identical across runs and
/// across any number of worker threads.
pub fn compute_field(spec: &MutationSpec, grid: &GridSpec, max_iter: u32) -> EscapeField {
    assert!(max_iter >= 1, "max_iter must be positive");
    let mut steps = vec![0u32; grid.len()];

    #[cfg(feature = "parallel")]
    steps
        .par_chunks_mut(grid.width)
        .enumerate()
        .for_each(|(row, out)| render_row(spec, grid, max_iter, row, out));

    #[cfg(not(feature = "parallel"))]
    for (row, out) in steps.chunks_mut(grid.width).enumerate() {
        render_row(spec, grid, max_iter, row, out);
    }

    EscapeField {
        grid: grid.clone(),
        max_iter,
        steps,
    }
}

/// Single-threaded variant of [`compute_field`]; same output bit for bit.
pub fn compute_field_serial(spec: &MutationSpec, grid: &GridSpec, max_iter: u32) -> EscapeField {
    assert!(max_iter >= 1, "max_iter must be positive");
    let mut steps = vec![0u32; grid.len()];
    for (row, out) in steps.chunks_mut(grid.width).enumerate() {
        render_row(spec, grid, max_iter, row, out);
    }
    EscapeField {
        grid: grid.clone(),
        max_iter,
        steps,
    }
}

/// Thresholds the field at the non-escape sentinel.
pub fn prisoner_mask(field: &EscapeField) -> PrisonerMask {
    PrisonerMask {
        grid: field.grid.clone(),
        bits: field.steps.iter().map(|&s| s == field.max_iter).collect(),
    }
}

/// Prisoner pixels with at least one non-prisoner 4-neighbor, counting the
/// image border as non-prisoner. Approximates the boundary of the mask.
pub fn boundary_mask(mask: &PrisonerMask) -> PrisonerMask {
    let (w, h) = (mask.grid.width, mask.grid.height);
    let mut bits = vec![false; w * h];
    for row in 0..h {
        for col in 0..w {
            let i = row * w + col;
            if !mask.bits[i] {
                continue;
            }
            let exposed = row == 0
                || row == h - 1
                || col == 0
                || col == w - 1
                || !mask.bits[i - 1]
                || !mask.bits[i + 1]
                || !mask.bits[i - w]
                || !mask.bits[i + w];
            bits[i] = exposed;
        }
    }
    PrisonerMask {
        grid: mask.grid.clone(),
        bits,
    }
}

#[cfg(feature = "parallel")]
/// Installs a global worker pool with `num_threads` threads. Must be called
/// before any parallel render; later calls fail once the pool exists.
pub fn init_worker_threads(num_threads: usize) -> std::result::Result<(), String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(num_threads)
        .build_global()
        .map_err(|e| e.to_string())
}

#[cfg(not(feature = "parallel"))]
/// Sequential build: worker count is fixed at one; this is a no-op.
pub fn init_worker_threads(_num_threads: usize) -> std::result::Result<(), String> {
    Ok(())
}
