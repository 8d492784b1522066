//! Exact squared Euclidean distance transform of a binary raster.
//!
//! Two 1-D passes of the parabolic lower-envelope method: first along each
//! row, then along each column, with independent sample spacings so the
//! distances come out in plane units even on anisotropic grids. For true
//! pixels the output is 0; for an all-false input every entry is infinite.

/// Squared distance from each pixel center to the nearest `true` pixel
/// center, in plane units², for pixel pitch (`px`, `py`).
pub(crate) fn squared_distance_field(
    bits: &[bool],
    width: usize,
    height: usize,
    px: f64,
    py: f64,
) -> Vec<f64> {
    assert_eq!(bits.len(), width * height);
    let mut out: Vec<f64> = bits
        .iter()
        .map(|&b| if b { 0.0 } else { f64::INFINITY })
        .collect();

    let mut envelope = Envelope::new(width.max(height));
    let mut buf = vec![0.0f64; width.max(height)];

    for row in 0..height {
        let line = &mut out[row * width..(row + 1) * width];
        buf[..width].copy_from_slice(line);
        transform_1d(&buf[..width], px, line, &mut envelope);
    }

    let mut col_out = vec![0.0f64; height];
    for col in 0..width {
        for row in 0..height {
            buf[row] = out[row * width + col];
        }
        transform_1d(&buf[..height], py, &mut col_out, &mut envelope);
        for row in 0..height {
            out[row * width + col] = col_out[row];
        }
    }

    out
}

struct Envelope {
    /// Sample index of each parabola in the lower envelope.
    sites: Vec<usize>,
    /// `boundaries[k]..boundaries[k+1]` is the interval where parabola k
    /// attains the envelope minimum.
    boundaries: Vec<f64>,
}

impl Envelope {
    fn new(len: usize) -> Self {
        Self {
            sites: vec![0; len],
            boundaries: vec![0.0; len + 1],
        }
    }
}

/// 1-D transform: `out[q] = min_p f[p] + (spacing * (q - p))²`.
fn transform_1d(f: &[f64], spacing: f64, out: &mut [f64], env: &mut Envelope) {
    let n = f.len();
    debug_assert_eq!(out.len(), n);
    let w = spacing * spacing;

    let mut k = 0usize;
    env.sites[0] = 0;
    env.boundaries[0] = f64::NEG_INFINITY;
    env.boundaries[1] = f64::INFINITY;

    for q in 1..n {
        if f[q] == f64::INFINITY {
            continue;
        }
        if f[env.sites[k]] == f64::INFINITY {
            // everything so far was unreachable; restart the envelope here
            debug_assert_eq!(k, 0);
            env.sites[0] = q;
            env.boundaries[0] = f64::NEG_INFINITY;
            env.boundaries[1] = f64::INFINITY;
            continue;
        }
        let mut s = intersection(f, w, env.sites[k], q);
        while s <= env.boundaries[k] {
            k -= 1;
            s = intersection(f, w, env.sites[k], q);
        }
        k += 1;
        env.sites[k] = q;
        env.boundaries[k] = s;
        env.boundaries[k + 1] = f64::INFINITY;
    }

    if f[env.sites[0]] == f64::INFINITY {
        out.fill(f64::INFINITY);
        return;
    }

    let mut k = 0usize;
    for (q, slot) in out.iter_mut().enumerate() {
        while env.boundaries[k + 1] < q as f64 {
            k += 1;
        }
        let d = (q as f64 - env.sites[k] as f64) * spacing;
        *slot = d * d + f[env.sites[k]];
    }
}

/// Abscissa (in sample indices) where the parabolas rooted at `p` and `q`
/// cross: `(f[q] + w q² - f[p] - w p²) / (2 w (q - p))`.
fn intersection(f: &[f64], w: f64, p: usize, q: usize) -> f64 {
    let fp = f[p];
    let fq = f[q];
    let p = p as f64;
    let q = q as f64;
    ((fq + w * q * q) - (fp + w * p * p)) / (2.0 * w * (q - p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(bits: &[bool], width: usize, height: usize, px: f64, py: f64) -> Vec<f64> {
        let mut out = vec![f64::INFINITY; bits.len()];
        for row in 0..height {
            for col in 0..width {
                let mut best = f64::INFINITY;
                for sr in 0..height {
                    for sc in 0..width {
                        if bits[sr * width + sc] {
                            let dx = (col as f64 - sc as f64) * px;
                            let dy = (row as f64 - sr as f64) * py;
                            best = best.min(dx * dx + dy * dy);
                        }
                    }
                }
                out[row * width + col] = best;
            }
        }
        out
    }

    #[test]
    fn single_seed() {
        let mut bits = vec![false; 25];
        bits[12] = true;
        let d = squared_distance_field(&bits, 5, 5, 1.0, 1.0);
        assert_eq!(d[12], 0.0);
        assert_eq!(d[0], 8.0);
        assert_eq!(d[13], 1.0);
        assert_eq!(d[4], 8.0);
    }

    #[test]
    fn empty_input_is_all_infinite() {
        let d = squared_distance_field(&[false; 12], 4, 3, 1.0, 1.0);
        assert!(d.iter().all(|v| v.is_infinite()));
    }

    #[test]
    fn matches_brute_force_on_patterns() {
        let patterns: Vec<Vec<bool>> = vec![
            (0..48).map(|i| i % 7 == 0).collect(),
            (0..48).map(|i| i == 47).collect(),
            (0..48).map(|i| (i / 8) % 2 == 0 && i % 3 == 1).collect(),
            vec![true; 48],
        ];
        for bits in patterns {
            let fast = squared_distance_field(&bits, 8, 6, 1.0, 1.0);
            let slow = brute(&bits, 8, 6, 1.0, 1.0);
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn anisotropic_spacing() {
        let mut bits = vec![false; 9];
        bits[4] = true;
        let d = squared_distance_field(&bits, 3, 3, 0.5, 0.25);
        let b = brute(&bits, 3, 3, 0.5, 0.25);
        assert_eq!(d, b);
        assert_eq!(d[3], 0.25); // one column over
        assert_eq!(d[1], 0.0625); // one row over
    }
}
