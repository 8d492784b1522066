//! Serialization: binary PGM (byte-exact), PNG, and metrics CSV.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::raster::EscapeField;
use crate::sweep::SweepResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Pgm,
    Png,
}

/// Gray level per pixel: 0 for prisoners, banded escape-time shading
/// `255 - floor(min(steps, 254) * 255 / max_iter)` otherwise.
pub fn gray_levels(field: &EscapeField) -> Vec<u8> {
    field
        .steps
        .iter()
        .map(|&s| {
            if s == field.max_iter {
                0
            } else {
                (255 - s.min(254) * 255 / field.max_iter) as u8
            }
        })
        .collect()
}

/// Binary PGM (P5, maxval 255) encoding of the field. Byte-identical for
/// identical fields.
pub fn encode_pgm(field: &EscapeField) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", field.grid.width, field.grid.height).into_bytes();
    out.extend(gray_levels(field));
    out
}

pub fn write_image(field: &EscapeField, path: &Path, format: ImageFormat) -> Result<()> {
    let io_err = |source: std::io::Error| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    match format {
        ImageFormat::Pgm => fs::write(path, encode_pgm(field)).map_err(io_err),
        ImageFormat::Png => {
            let img = image::GrayImage::from_raw(
                field.grid.width as u32,
                field.grid.height as u32,
                gray_levels(field),
            )
            .expect("gray buffer matches field dimensions");
            img.save_with_format(path, image::ImageFormat::Png)
                .map_err(|e| io_err(std::io::Error::other(e)))
        }
    }
}

fn push_float(out: &mut String, v: f64) {
    // 13 significant digits, locale-independent
    out.push_str(&format!("{v:.12e}"));
}

/// CSV encoding of a sweep's per-point metrics: one row per point in axis
/// order, an empty Hausdorff field when no reference distance exists.
pub fn metrics_csv(result: &SweepResult) -> String {
    let mut out =
        String::from("axis_value,component_count,area,hausdorff_to_ref,subset_violations\n");
    for point in &result.points {
        push_float(&mut out, point.value);
        out.push(',');
        out.push_str(&point.report.component_count.to_string());
        out.push(',');
        push_float(&mut out, point.report.area);
        out.push(',');
        if let Some(h) = point.report.hausdorff_to_ref {
            push_float(&mut out, h);
        }
        out.push(',');
        out.push_str(&point.report.subset_violations.to_string());
        out.push('\n');
    }
    out
}

pub fn write_metrics(result: &SweepResult, path: &Path) -> Result<()> {
    fs::write(path, metrics_csv(result)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
