//! Prisoner-mask geometry: connected components, area, Hausdorff distance,
//! and subset tests.

use num_complex::Complex64;

use crate::edt::squared_distance_field;
use crate::error::{Error, Result};
use crate::raster::{pixel_center, PrisonerMask};

/// Metrics for one mask, optionally against a reference mask on the same
/// grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TopologyReport {
    /// Number of 8-connected components of true pixels.
    pub component_count: usize,
    /// Prisoner area in plane units².
    pub area: f64,
    /// Hausdorff distance to the reference in plane units; absent without a
    /// reference or when either mask is empty.
    pub hausdorff_to_ref: Option<f64>,
    /// Pixels set in the mask but not in the reference.
    pub subset_violations: usize,
}

struct DisjointSets {
    parent: Vec<u32>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len as u32).collect(),
        }
    }

    fn find(&mut self, mut i: u32) -> u32 {
        while self.parent[i as usize] != i {
            // path halving
            self.parent[i as usize] = self.parent[self.parent[i as usize] as usize];
            i = self.parent[i as usize];
        }
        i
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Number of 8-connected components of true pixels.
pub fn connected_components(mask: &PrisonerMask) -> usize {
    let (w, h) = (mask.grid.width, mask.grid.height);
    let mut sets = DisjointSets::new(w * h);
    for row in 0..h {
        for col in 0..w {
            let i = row * w + col;
            if !mask.bits[i] {
                continue;
            }
            // union with already-visited true neighbors: W, NW, N, NE
            if col > 0 && mask.bits[i - 1] {
                sets.union(i as u32, (i - 1) as u32);
            }
            if row > 0 {
                if col > 0 && mask.bits[i - w - 1] {
                    sets.union(i as u32, (i - w - 1) as u32);
                }
                if mask.bits[i - w] {
                    sets.union(i as u32, (i - w) as u32);
                }
                if col + 1 < w && mask.bits[i - w + 1] {
                    sets.union(i as u32, (i - w + 1) as u32);
                }
            }
        }
    }
    let mut count = 0;
    for i in 0..w * h {
        if mask.bits[i] && sets.find(i as u32) == i as u32 {
            count += 1;
        }
    }
    count
}

fn ensure_same_grid(a: &PrisonerMask, b: &PrisonerMask) -> Result<()> {
    if a.grid != b.grid {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

/// Hausdorff distance between two non-empty masks on the same grid: the
/// larger of the two directed max-min pixel-center distances, in plane
/// units. Exact, via the squared Euclidean distance transform.
pub fn hausdorff_distance(a: &PrisonerMask, b: &PrisonerMask) -> Result<f64> {
    ensure_same_grid(a, b)?;
    if a.true_count() == 0 || b.true_count() == 0 {
        return Err(Error::EmptyMask);
    }
    let g = &a.grid;
    let (px, py) = (g.pixel_width(), g.pixel_height());
    let to_b = squared_distance_field(&b.bits, g.width, g.height, px, py);
    let to_a = squared_distance_field(&a.bits, g.width, g.height, px, py);
    let mut worst = 0.0f64;
    for i in 0..g.len() {
        if a.bits[i] {
            worst = worst.max(to_b[i]);
        }
        if b.bits[i] {
            worst = worst.max(to_a[i]);
        }
    }
    Ok(worst.sqrt())
}

/// Count of pixels true in `a` but false in `b`; zero means `a ⊆ b` at
/// raster resolution. Both masks must share a grid.
pub fn subset_violations(a: &PrisonerMask, b: &PrisonerMask) -> Result<usize> {
    ensure_same_grid(a, b)?;
    Ok(a.bits
        .iter()
        .zip(&b.bits)
        .filter(|&(&in_a, &in_b)| in_a && !in_b)
        .count())
}

/// True iff every pixel whose center lies within the closed disk is a
/// prisoner pixel. The disk must intersect the viewport.
pub fn disk_in_mask(mask: &PrisonerMask, center: Complex64, radius: f64) -> Result<bool> {
    let g = &mask.grid;
    let nearest_x = center.re.clamp(g.x_min, g.x_max);
    let nearest_y = center.im.clamp(g.y_min, g.y_max);
    let dx = center.re - nearest_x;
    let dy = center.im - nearest_y;
    if dx * dx + dy * dy > radius * radius {
        return Err(Error::DiskOutsideViewport);
    }

    let (px, py) = (g.pixel_width(), g.pixel_height());
    let col_lo = (((center.re - radius - g.x_min) / px - 0.5).floor() as isize - 1).max(0) as usize;
    let col_hi =
        ((((center.re + radius - g.x_min) / px - 0.5).ceil() as isize + 1).max(0) as usize)
            .min(g.width.saturating_sub(1));
    let row_lo = (((g.y_max - (center.im + radius)) / py - 0.5).floor() as isize - 1).max(0) as usize;
    let row_hi =
        ((((g.y_max - (center.im - radius)) / py - 0.5).ceil() as isize + 1).max(0) as usize)
            .min(g.height.saturating_sub(1));

    let r_sq = radius * radius;
    for row in row_lo..=row_hi {
        for col in col_lo..=col_hi {
            let z = pixel_center(g, col, row);
            if (z - center).norm_sqr() <= r_sq && !mask.get(col, row) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bundles the metrics for one mask. `hausdorff_to_ref` stays absent when
/// there is no reference or when either mask is empty.
pub fn analyze(mask: &PrisonerMask, reference: Option<&PrisonerMask>) -> Result<TopologyReport> {
    let component_count = connected_components(mask);
    let area = mask.area();
    let (hausdorff_to_ref, violations) = match reference {
        None => (None, 0),
        Some(r) => {
            let v = subset_violations(mask, r)?;
            let h = if mask.true_count() == 0 || r.true_count() == 0 {
                None
            } else {
                Some(hausdorff_distance(mask, r)?)
            };
            (h, v)
        }
    };
    Ok(TopologyReport {
        component_count,
        area,
        hausdorff_to_ref,
        subset_violations: violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::GridSpec;

    fn mask_from(grid: &GridSpec, rows: &[&str]) -> PrisonerMask {
        assert_eq!(rows.len(), grid.height);
        let mut bits = Vec::with_capacity(grid.len());
        for row in rows {
            assert_eq!(row.len(), grid.width);
            bits.extend(row.bytes().map(|b| b == b'#'));
        }
        PrisonerMask {
            grid: grid.clone(),
            bits,
        }
    }

    fn unit_grid(w: usize, h: usize) -> GridSpec {
        GridSpec::new(0.0, w as f64, 0.0, h as f64, w, h).unwrap()
    }

    #[test]
    fn component_count_basics() {
        let g = unit_grid(4, 3);
        assert_eq!(connected_components(&mask_from(&g, &["....", "....", "...."])), 0);
        assert_eq!(connected_components(&mask_from(&g, &["....", ".#..", "...."])), 1);
        // diagonal contact counts as one component under 8-connectivity
        assert_eq!(connected_components(&mask_from(&g, &["#...", ".#..", "...."])), 1);
        assert_eq!(connected_components(&mask_from(&g, &["#.#.", "....", ".#.#"])), 4);
    }

    #[test]
    fn component_count_translation_invariant() {
        let g = unit_grid(6, 6);
        let shape = ["##....", "#.#...", "..#...", "......", "....#.", "......"];
        let shifted = ["......", ".##...", ".#.#..", "...#..", "......", ".....#"];
        assert_eq!(
            connected_components(&mask_from(&g, &shape)),
            connected_components(&mask_from(&g, &shifted))
        );
    }

    #[test]
    fn hausdorff_identical_is_zero() {
        let g = unit_grid(5, 5);
        let m = mask_from(&g, &[".....", ".###.", ".#...", ".#.#.", "....."]);
        assert_eq!(hausdorff_distance(&m, &m).unwrap(), 0.0);
    }

    #[test]
    fn hausdorff_two_single_pixels() {
        // pixel pitch 0.5: neighboring centers sit 0.5 apart
        let g = GridSpec::new(0.0, 2.0, 0.0, 2.0, 4, 4).unwrap();
        let a = mask_from(&g, &["....", ".#..", "....", "...."]);
        let b = mask_from(&g, &["....", "..#.", "....", "...."]);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 0.5);
    }

    #[test]
    fn hausdorff_rejects_empty_and_mismatched() {
        let g = unit_grid(3, 3);
        let empty = mask_from(&g, &["...", "...", "..."]);
        let full = mask_from(&g, &["###", "###", "###"]);
        assert!(matches!(
            hausdorff_distance(&empty, &full),
            Err(Error::EmptyMask)
        ));
        let other = PrisonerMask {
            grid: unit_grid(2, 2),
            bits: vec![true; 4],
        };
        assert!(matches!(
            hausdorff_distance(&full, &other),
            Err(Error::GridMismatch)
        ));
    }

    #[test]
    fn subset_violation_counts() {
        let g = unit_grid(3, 3);
        let a = mask_from(&g, &["##.", ".#.", "..."]);
        let b = mask_from(&g, &["##.", "###", "..#"]);
        assert_eq!(subset_violations(&a, &b).unwrap(), 0);
        assert_eq!(subset_violations(&b, &a).unwrap(), 3);
        let full = mask_from(&g, &["###", "###", "###"]);
        let empty = mask_from(&g, &["...", "...", "..."]);
        assert_eq!(subset_violations(&full, &empty).unwrap(), 9);
    }

    #[test]
    fn disk_checks() {
        // [-2,2]² at 40x40; mask = closed unit disk of pixel centers
        let g = GridSpec::square(2.0, 40).unwrap();
        let bits = (0..g.len())
            .map(|i| pixel_center(&g, i % 40, i / 40).norm_sqr() <= 1.0)
            .collect();
        let disk = PrisonerMask {
            grid: g.clone(),
            bits,
        };
        let origin = Complex64::new(0.0, 0.0);
        assert!(disk_in_mask(&disk, origin, 0.5).unwrap());
        assert!(!disk_in_mask(&disk, origin, 1.5).unwrap());
        // radius 0 over a prisoner pixel center
        let center = pixel_center(&g, 20, 20);
        assert!(disk_in_mask(&disk, center, 0.0).unwrap());
        assert!(matches!(
            disk_in_mask(&disk, Complex64::new(10.0, 0.0), 0.5),
            Err(Error::DiskOutsideViewport)
        ));
    }

    #[test]
    fn analyze_empty_mask() {
        let g = unit_grid(4, 4);
        let empty = mask_from(&g, &["....", "....", "....", "...."]);
        let report = analyze(&empty, None).unwrap();
        assert_eq!(report.component_count, 0);
        assert_eq!(report.area, 0.0);
        assert_eq!(report.hausdorff_to_ref, None);
        assert_eq!(report.subset_violations, 0);
    }

    #[test]
    fn analyze_against_reference() {
        let g = unit_grid(4, 4);
        let m = mask_from(&g, &["....", ".##.", ".##.", "...."]);
        let report = analyze(&m, Some(&m)).unwrap();
        assert_eq!(report.component_count, 1);
        assert_eq!(report.area, 4.0);
        assert_eq!(report.hausdorff_to_ref, Some(0.0));
        assert_eq!(report.subset_violations, 0);
    }
}
