//! Parameter sweeps: vary one radius over an ordered list of values and
//! report mask metrics per point, optionally against a reference render.

use crate::dynamics::{escape_radius, MutationSpec, RSchedule};
use crate::error::{Error, Result};
use crate::raster::{compute_field, prisoner_mask, EscapeField, GridSpec, PrisonerMask};
use crate::topology::{analyze, TopologyReport};

/// Which radius the sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Vary the transition radius `R`; `r` stays at the base value.
    TransitionRadius,
    /// Vary the mutation radius `r` at fixed `R`.
    MutationRadius,
    /// Vary `r` with the annulus thickness `R - r` held constant.
    MutationRadiusFixedThickness,
}

/// Reference mask each sweep point is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    /// Plain render of the intact parameter `c1`.
    Intact,
    /// Plain render of the mutant parameter `c0`.
    Mutant,
    /// No comparison; Hausdorff stays absent and violations are zero.
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub base: MutationSpec,
    pub grid: GridSpec,
    pub max_iter: u32,
    pub axis: SweepAxis,
    /// Strictly increasing radii.
    pub values: Vec<f64>,
    pub reference: Reference,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    /// The swept radius value.
    pub value: f64,
    pub field: EscapeField,
    pub mask: PrisonerMask,
    pub report: TopologyReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Echo of the configuration that produced the points.
    pub config: SweepConfig,
    /// One entry per configured value, in axis order.
    pub points: Vec<SweepPoint>,
}

/// A single render plus its metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderOutput {
    pub field: EscapeField,
    pub mask: PrisonerMask,
    pub report: TopologyReport,
}

impl SweepConfig {
    /// The map at one sweep value.
    pub fn point_spec(&self, value: f64) -> Result<MutationSpec> {
        match self.axis {
            SweepAxis::TransitionRadius => self.base.with_radii(self.base.r, value),
            SweepAxis::MutationRadius => self.base.with_radii(value, self.base.big_r),
            SweepAxis::MutationRadiusFixedThickness => {
                let thickness = self.base.big_r - self.base.r;
                self.base.with_radii(value, value + thickness)
            }
        }
    }

    /// Validates the whole configuration, including every point spec, so a
    /// bad value fails before any rendering starts.
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.max_iter == 0 {
            return Err(Error::InvalidSweep("max_iter must be positive".into()));
        }
        for &v in &self.values {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidSweep(format!(
                    "sweep values must be finite and nonnegative, got {v}"
                )));
            }
            self.point_spec(v)
                .map_err(|e| Error::InvalidSweep(format!("value {v}: {e}")))?;
        }
        for pair in self.values.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidSweep(format!(
                    "values must be strictly increasing, got {} then {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(())
    }
}

fn plain_field(c: num_complex::Complex64, grid: &GridSpec, max_iter: u32) -> EscapeField {
    compute_field(&MutationSpec::plain(c), grid, max_iter)
}

/// Runs every sweep point in order. The reference render is computed once;
/// output is deterministic regardless of worker count.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;

    let reference_mask = match cfg.reference {
        Reference::None => None,
        Reference::Intact => Some(prisoner_mask(&plain_field(
            cfg.base.c1,
            &cfg.grid,
            cfg.max_iter,
        ))),
        Reference::Mutant => Some(prisoner_mask(&plain_field(
            cfg.base.c0,
            &cfg.grid,
            cfg.max_iter,
        ))),
    };

    let mut points = Vec::with_capacity(cfg.values.len());
    for &value in &cfg.values {
        let spec = cfg.point_spec(value)?;
        // Once the mutant disk swallows the whole escape region the map's
        // prisoner set equals the plain mutant's, so render that directly.
        let saturated = spec.r >= escape_radius(spec.c0, spec.c1) + spec.focus.norm();
        let field = if saturated {
            plain_field(spec.c0, &cfg.grid, cfg.max_iter)
        } else {
            compute_field(&spec, &cfg.grid, cfg.max_iter)
        };
        let mask = prisoner_mask(&field);
        let report = analyze(&mask, reference_mask.as_ref())?;
        points.push(SweepPoint {
            value,
            field,
            mask,
            report,
        });
    }

    Ok(SweepResult {
        config: cfg.clone(),
        points,
    })
}

/// Non-autonomous render where the transition radius follows the spec's
/// linear schedule; the per-run bailout bounds the radius by the final step.
pub fn run_scheduled(spec: &MutationSpec, grid: &GridSpec, max_iter: u32) -> Result<RenderOutput> {
    if !matches!(spec.schedule, RSchedule::LinearInStep { .. }) {
        return Err(Error::InvalidSweep(
            "scheduled render requires a linear-in-step schedule".into(),
        ));
    }
    spec.validate()?;
    let field = compute_field(spec, grid, max_iter);
    let mask = prisoner_mask(&field);
    let report = analyze(&mask, None)?;
    Ok(RenderOutput {
        field,
        mask,
        report,
    })
}
