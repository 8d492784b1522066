//! Built-in sweep presets covering transition-radius sweeps,
//! mutation-radius sweeps, fixed-thickness sweeps, time-scheduled renders,
//! and off-origin foci, under stable `figN` names.

use num_complex::Complex64;

use crate::dynamics::{MutationSpec, RSchedule};
use crate::raster::{GridSpec, DEFAULT_MAX_ITER};
use crate::sweep::{Reference, SweepAxis, SweepConfig};

/// Intact parameter used by most presets (the "three-ear rabbit").
pub const THREE_EAR_RABBIT: Complex64 = Complex64::new(-0.13, -0.77);
/// Mutant parameter of the basilica set.
pub const BASILICA: Complex64 = Complex64::new(-0.65, 0.0);
/// Mutant parameter -0.117 + 0.856i, used by the fixed-thickness and
/// off-origin sweeps and by the second scheduled render.
pub const MUTANT_B: Complex64 = Complex64::new(-0.117, 0.856);
/// Real mutant parameter 0.33, used by the third and fourth scheduled
/// renders and two mutation-radius sweeps.
pub const MUTANT_REAL: Complex64 = Complex64::new(0.33, 0.0);

const ORIGIN: Complex64 = Complex64::new(0.0, 0.0);

/// A named sweep configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub config: SweepConfig,
}

fn spec(c0: Complex64, c1: Complex64, r: f64, big_r: f64, focus: Complex64) -> MutationSpec {
    MutationSpec::new(c0, c1, r, big_r, focus).expect("preset spec is valid")
}

fn sweep(
    name: &'static str,
    base: MutationSpec,
    axis: SweepAxis,
    values: &[f64],
    reference: Reference,
) -> Preset {
    Preset {
        name,
        config: SweepConfig {
            base,
            grid: GridSpec::default(),
            max_iter: DEFAULT_MAX_ITER,
            axis,
            values: values.to_vec(),
            reference,
        },
    }
}

fn scheduled(name: &'static str, c0: Complex64, c1: Complex64, slope: f64) -> Preset {
    let base = spec(c0, c1, 0.0, 0.0, ORIGIN)
        .with_schedule(RSchedule::LinearInStep { slope })
        .expect("preset schedule is valid");
    sweep(name, base, SweepAxis::TransitionRadius, &[0.0], Reference::None)
}

/// Every named preset, in catalog order.
pub fn preset_catalog() -> Vec<Preset> {
    let rabbit = THREE_EAR_RABBIT;
    vec![
        // pointwise mutation c0 = 0 on the rabbit, widening transition
        sweep(
            "fig2",
            spec(ORIGIN, rabbit, 0.0, 0.0, ORIGIN),
            SweepAxis::TransitionRadius,
            &[0.0, 0.05, 0.1, 0.2, 0.3, 0.45, 0.525, 0.55, 0.6, 1.0, 3.0, 30.0],
            Reference::Intact,
        ),
        // growing mutation core inside a thin transition, R = 0.1
        sweep(
            "fig3",
            spec(ORIGIN, rabbit, 0.0, 0.1, ORIGIN),
            SweepAxis::MutationRadius,
            &[0.0, 0.02, 0.03, 0.04, 0.05, 0.07, 0.08, 0.10],
            Reference::Intact,
        ),
        // growing mutation core, R = 0.5
        sweep(
            "fig4",
            spec(ORIGIN, rabbit, 0.0, 0.5, ORIGIN),
            SweepAxis::MutationRadius,
            &[0.0, 0.1, 0.3, 0.5],
            Reference::Intact,
        ),
        // both radii grow together, thickness R - r = 0.1
        sweep(
            "fig5",
            spec(MUTANT_B, rabbit, 0.0, 0.1, ORIGIN),
            SweepAxis::MutationRadiusFixedThickness,
            &[0.0, 0.1, 0.2, 0.6, 0.8, 1.0, 1.1, 2.0],
            Reference::Intact,
        ),
        // time-scheduled transition radius R_n = 0.05 n
        scheduled("fig6a", ORIGIN, rabbit, 0.05),
        scheduled("fig6b", MUTANT_B, rabbit, 0.05),
        scheduled("fig6c", MUTANT_REAL, rabbit, 0.05),
        scheduled("fig6d", rabbit, MUTANT_REAL, 0.05),
        // widening transition for the basilica mutation
        sweep(
            "fig7",
            spec(BASILICA, rabbit, 0.0, 0.0, ORIGIN),
            SweepAxis::TransitionRadius,
            &[0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.525, 0.6, 1.0, 5.0, 30.0],
            Reference::Intact,
        ),
        sweep(
            "fig8",
            spec(MUTANT_B, rabbit, 0.0, 0.0, ORIGIN),
            SweepAxis::TransitionRadius,
            &[
                0.0, 0.05, 0.1, 0.2, 0.3, 0.45, 0.525, 0.7, 0.8, 1.0, 2.0, 3.0, 5.0, 10.0, 30.0,
                100.0,
            ],
            Reference::Intact,
        ),
        sweep(
            "fig9",
            spec(MUTANT_B, rabbit, 0.0, 0.1, ORIGIN),
            SweepAxis::MutationRadius,
            &[0.0, 0.02, 0.03, 0.04, 0.05, 0.07, 0.08, 0.10],
            Reference::Intact,
        ),
        sweep(
            "fig10",
            spec(MUTANT_B, rabbit, 0.0, 0.5, ORIGIN),
            SweepAxis::MutationRadius,
            &[0.0, 0.1, 0.3, 0.5],
            Reference::Intact,
        ),
        sweep(
            "fig11",
            spec(MUTANT_REAL, rabbit, 0.0, 0.1, ORIGIN),
            SweepAxis::MutationRadius,
            &[0.0, 0.04, 0.08, 0.1],
            Reference::Intact,
        ),
        // swapped roles: the rabbit is the mutation on a real intact map
        sweep(
            "fig12",
            spec(rabbit, MUTANT_REAL, 0.0, 0.5, ORIGIN),
            SweepAxis::MutationRadius,
            &[0.0, 0.4, 0.45, 0.5],
            Reference::Intact,
        ),
        // thicker constant annulus, R - r = 0.5
        sweep(
            "fig13",
            spec(MUTANT_B, rabbit, 0.0, 0.5, ORIGIN),
            SweepAxis::MutationRadiusFixedThickness,
            &[0.0, 0.1, 0.3, 0.5, 0.6, 1.0, 1.05, 2.0],
            Reference::Intact,
        ),
        // off-origin focus at (1 + i)/2
        sweep(
            "fig14",
            spec(MUTANT_B, rabbit, 0.0, 0.0, Complex64::new(0.5, 0.5)),
            SweepAxis::TransitionRadius,
            &[
                0.0, 0.2, 0.6, 1.1, 1.2, 1.21, 2.0, 3.0, 4.5, 5.0, 5.55, 6.0, 10.0, 20.0, 50.0,
                100.0,
            ],
            Reference::Intact,
        ),
        // off-origin focus at 1
        sweep(
            "fig15",
            spec(ORIGIN, rabbit, 0.0, 0.6, Complex64::new(1.0, 0.0)),
            SweepAxis::TransitionRadius,
            &[0.6, 0.8, 1.0, 1.2, 1.3, 1.5, 3.0, 50.0],
            Reference::Intact,
        ),
    ]
}

/// Looks up one preset by name.
pub fn find_preset(name: &str) -> Option<Preset> {
    preset_catalog().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_valid() {
        let catalog = preset_catalog();
        assert!(catalog.len() >= 14, "got {}", catalog.len());
        for preset in &catalog {
            preset
                .config
                .validate()
                .unwrap_or_else(|e| panic!("{}: {e}", preset.name));
        }
        let mut names: Vec<_> = catalog.iter().map(|p| p.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), catalog.len(), "duplicate preset names");
    }

    #[test]
    fn fig5_parameters() {
        let p = find_preset("fig5").unwrap();
        assert_eq!(p.config.base.c0, MUTANT_B);
        assert_eq!(p.config.base.c1, THREE_EAR_RABBIT);
        assert_eq!(p.config.axis, SweepAxis::MutationRadiusFixedThickness);
        assert!((p.config.base.big_r - p.config.base.r - 0.1).abs() < 1e-15);
        assert_eq!(p.config.values, vec![0.0, 0.1, 0.2, 0.6, 0.8, 1.0, 1.1, 2.0]);
    }

    #[test]
    fn fig15_parameters() {
        let p = find_preset("fig15").unwrap();
        assert_eq!(p.config.base.c0, Complex64::new(0.0, 0.0));
        assert_eq!(p.config.base.focus, Complex64::new(1.0, 0.0));
        assert_eq!(p.config.axis, SweepAxis::TransitionRadius);
        assert_eq!(
            p.config.values,
            vec![0.6, 0.8, 1.0, 1.2, 1.3, 1.5, 3.0, 50.0]
        );
    }

    #[test]
    fn fig2_has_twelve_panels() {
        assert_eq!(find_preset("fig2").unwrap().config.values.len(), 12);
    }

    #[test]
    fn scheduled_presets_carry_linear_schedule() {
        for name in ["fig6a", "fig6b", "fig6c", "fig6d"] {
            let p = find_preset(name).unwrap();
            assert_eq!(
                p.config.base.schedule,
                RSchedule::LinearInStep { slope: 0.05 },
                "{name}"
            );
        }
    }

    #[test]
    fn unknown_preset_is_none() {
        assert!(find_preset("fig99").is_none());
    }
}
