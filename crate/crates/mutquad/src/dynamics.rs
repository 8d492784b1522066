//! The locally mutated quadratic map and its orbit iteration.
//!
//! The map applies `z² + c0` on the closed disk `|z - focus| <= r`, the
//! intact `z² + c1` outside the transition radius `R`, and interpolates the
//! parameter linearly in the radial coordinate across the annulus in
//! between. Orbits are classified by an escape radius that guarantees the
//! modulus at least doubles on every subsequent step.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Per-step schedule for the transition radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RSchedule {
    /// The transition radius is `big_r` at every step.
    Constant,
    /// The transition radius grows with the step counter: `R_n = slope * n`
    /// at step n = 1, 2, ... (clamped below by the mutation radius `r`).
    LinearInStep { slope: f64 },
}

/// Full definition of a mutated quadratic map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MutationSpec {
    /// Mutant parameter, applied on the closed disk `|z - focus| <= r`.
    pub c0: Complex64,
    /// Intact parameter, applied wherever `|z - focus| >= R`.
    pub c1: Complex64,
    /// Mutation radius (plane units).
    pub r: f64,
    /// Transition radius `R`; the parameter interpolates from `c0` to `c1`
    /// over the annulus `r < |z - focus| < R`.
    pub big_r: f64,
    /// Center of the mutated region.
    pub focus: Complex64,
    /// Optional per-step override of the transition radius.
    pub schedule: RSchedule,
}

impl MutationSpec {
    /// Builds a constant-schedule spec, validating `0 <= r <= R` and
    /// finiteness of every field.
    pub fn new(c0: Complex64, c1: Complex64, r: f64, big_r: f64, focus: Complex64) -> Result<Self> {
        let spec = Self {
            c0,
            c1,
            r,
            big_r,
            focus,
            schedule: RSchedule::Constant,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The unperturbed map `z² + c` everywhere (empty mutation region).
    pub fn plain(c: Complex64) -> Self {
        Self {
            c0: c,
            c1: c,
            r: 0.0,
            big_r: 0.0,
            focus: Complex64::new(0.0, 0.0),
            schedule: RSchedule::Constant,
        }
    }

    /// Replaces the schedule, revalidating.
    pub fn with_schedule(mut self, schedule: RSchedule) -> Result<Self> {
        self.schedule = schedule;
        self.validate()?;
        Ok(self)
    }

    /// Returns a copy with different radii, revalidating `0 <= r <= R`.
    pub fn with_radii(&self, r: f64, big_r: f64) -> Result<Self> {
        let mut spec = *self;
        spec.r = r;
        spec.big_r = big_r;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.c0.re.is_finite()
            && self.c0.im.is_finite()
            && self.c1.re.is_finite()
            && self.c1.im.is_finite()
            && self.focus.re.is_finite()
            && self.focus.im.is_finite()
            && self.r.is_finite()
            && self.big_r.is_finite();
        if !finite {
            return Err(Error::InvalidSpec("all fields must be finite".into()));
        }
        if !(self.r >= 0.0 && self.big_r >= self.r) {
            return Err(Error::InvalidSpec(format!(
                "need 0 <= r <= R, got r = {}, R = {}",
                self.r, self.big_r
            )));
        }
        if let RSchedule::LinearInStep { slope } = self.schedule {
            if !(slope.is_finite() && slope >= 0.0) {
                return Err(Error::InvalidSpec(format!(
                    "schedule slope must be finite and nonnegative, got {slope}"
                )));
            }
        }
        Ok(())
    }

    /// Transition radius in effect at step `n` (n = 1, 2, ...).
    pub fn effective_radius(&self, n: u32) -> f64 {
        match self.schedule {
            RSchedule::Constant => self.big_r,
            RSchedule::LinearInStep { slope } => (slope * f64::from(n)).max(self.r),
        }
    }
}

/// Outcome of iterating a single seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EscapeResult {
    pub escaped: bool,
    /// Smallest n >= 0 with `|z_n| >= bailout` when `escaped` is true,
    /// otherwise `max_iter`.
    pub steps: u32,
}

/// Interpolated parameter at radial coordinate `rho`, using the spec's
/// constant transition radius.
///
/// Callers must not reach this with a degenerate annulus (`r == R`); the
/// region dispatch in [`eval_mutated`] never does.
pub fn interp_parameter(spec: &MutationSpec, rho: f64) -> Complex64 {
    debug_assert!(spec.r < spec.big_r, "degenerate annulus");
    interp_at(spec.c0, spec.c1, spec.r, spec.big_r, rho)
}

#[inline]
fn interp_at(c0: Complex64, c1: Complex64, r: f64, big_r: f64, rho: f64) -> Complex64 {
    // c0 (R - rho)/(R - r) + c1 (rho - r)/(R - r), written so that c0 == c1
    // reduces to the constant exactly
    let t = (rho - r) / (big_r - r);
    c0 + (c1 - c0) * t
}

/// One application of the mutated map with transition radius `effective_r`
/// (the spec's `R` for a constant schedule, or `R_n` during scheduled
/// iteration; `effective_r >= r` is required).
///
/// With `rho = |z - focus|`: returns `z² + c0` for `rho <= r`, `z² + c1` for
/// `rho >= effective_r`, and the interpolated parameter in between. A
/// degenerate annulus (`r == effective_r`) assigns the closed disk to `c0`
/// and everything else to `c1`, so `r = R = 0` overrides the map at the
/// single point `z == focus`.
#[inline]
pub fn eval_mutated(spec: &MutationSpec, z: Complex64, effective_r: f64) -> Complex64 {
    let d = z - spec.focus;
    let rho_sq = d.norm_sqr();
    let zz = z * z;
    // `norm_sqr` underflows to 0 within ~1e-154 of the focus, so a zero
    // mutation radius needs the exact-hit test.
    let in_core = if spec.r == 0.0 {
        d.re == 0.0 && d.im == 0.0
    } else {
        rho_sq <= spec.r * spec.r
    };
    if in_core {
        zz + spec.c0
    } else if rho_sq >= effective_r * effective_r {
        zz + spec.c1
    } else {
        zz + interp_at(spec.c0, spec.c1, spec.r, effective_r, rho_sq.sqrt())
    }
}

/// Escape radius `M = 1 + sqrt(1 + |c0| + |c1|)`: once `|z| >= M`, every
/// branch of the map at least doubles the modulus.
pub fn escape_radius(c0: Complex64, c1: Complex64) -> f64 {
    1.0 + (1.0 + c0.norm() + c1.norm()).sqrt()
}

/// Divergence threshold for constant-schedule iteration:
/// `max(M, |focus| + R)`.
///
/// For `|z| >= |focus| + R` the point is outside the mutated region, so the
/// intact map applies and the doubling guarantee of `M` carries over to a
/// focus away from the origin.
pub fn bailout_radius(spec: &MutationSpec) -> f64 {
    escape_radius(spec.c0, spec.c1).max(spec.focus.norm() + spec.big_r)
}

/// Schedule-aware bailout: bounds the transition radius over the whole run
/// (`max(r, slope * max_iter)` for a linear schedule).
pub fn bailout_for(spec: &MutationSpec, max_iter: u32) -> f64 {
    match spec.schedule {
        RSchedule::Constant => bailout_radius(spec),
        RSchedule::LinearInStep { slope } => {
            let r_max = (slope * f64::from(max_iter)).max(spec.r);
            escape_radius(spec.c0, spec.c1).max(spec.focus.norm() + r_max)
        }
    }
}

/// Iterates `z_{n+1} = f(z_n)` from `z0`, reporting the smallest step n >= 0
/// at which `|z_n|` reaches the bailout radius, or a non-escape after
/// `max_iter` applications. Non-finite intermediates count as an escape at
/// that step.
// `!(x < y)` is deliberate below: it is also true for NaN, so overflow to
// NaN/infinity counts as an escape.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn iterate_orbit(spec: &MutationSpec, z0: Complex64, max_iter: u32) -> EscapeResult {
    debug_assert!(max_iter >= 1);
    let bail = bailout_for(spec, max_iter);
    let bail_sq = bail * bail;
    let mut z = z0;
    if !(z.norm_sqr() < bail_sq) {
        return EscapeResult {
            escaped: true,
            steps: 0,
        };
    }
    for n in 1..=max_iter {
        z = eval_mutated(spec, z, spec.effective_radius(n));
        if !(z.norm_sqr() < bail_sq) {
            return EscapeResult {
                escaped: true,
                steps: n,
            };
        }
    }
    EscapeResult {
        escaped: false,
        steps: max_iter,
    }
}

/// Central-difference estimate of the anti-holomorphic Wirtinger derivative
/// `∂f/∂z̄ = (∂f/∂x + i ∂f/∂y) / 2` at `z`, with stencil step `h`.
///
/// Reliable only when all four stencil points fall in one region, i.e. `z`
/// is farther than `2h` from both boundary circles. Expect ~0 outside the
/// annulus and [`wirtinger_closed_form`] inside it.
pub fn wirtinger_diagnostic(spec: &MutationSpec, z: Complex64, h: f64) -> Complex64 {
    let f = |w: Complex64| eval_mutated(spec, w, spec.big_r);
    let ex = Complex64::new(h, 0.0);
    let ey = Complex64::new(0.0, h);
    let dx = (f(z + ex) - f(z - ex)) / (2.0 * h);
    let dy = (f(z + ey) - f(z - ey)) / (2.0 * h);
    (dx + Complex64::i() * dy) * 0.5
}

/// Exact `∂f/∂z̄` inside the transition annulus:
/// `(c1 - c0) / (R - r) * (z - focus) / (2 |z - focus|)`.
///
/// Follows from `∂ρ/∂z̄ = (z - focus) / (2ρ)` for `ρ = |z - focus|`; the `z²`
/// term contributes nothing. Nonzero whenever `c0 != c1`, which is what
/// makes the interpolated map non-analytic there.
pub fn wirtinger_closed_form(spec: &MutationSpec, z: Complex64) -> Complex64 {
    let d = z - spec.focus;
    let rho = d.norm();
    (spec.c1 - spec.c0) / (spec.big_r - spec.r) * d / (2.0 * rho)
}
