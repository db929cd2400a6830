//! The five reference curve families: fixed direction sets and dataset
//! generation on a uniform x grid with one value column per operator.

use serde::Serialize;

use crate::bell::Quantity;
use crate::correlation::{Correlator, MomentumConfig, MomentumFamily};
use crate::error::{Error, Result};
use crate::kinematics::{Direction, Spin};
use crate::observables::SpinOperator;

fn unit(x: f64, y: f64, z: f64) -> Direction {
    Direction::normalized(x, y, z).expect("figure directions are unit vectors")
}

fn z_axis() -> Direction {
    unit(0.0, 0.0, 1.0)
}

/// Figure 1 measurement axes: a along z, b tilted 120 degrees from it in
/// the xz-plane.
pub fn fig1_directions() -> (Direction, Direction) {
    (z_axis(), unit(3.0_f64.sqrt() / 2.0, 0.0, -0.5))
}

/// Figure 2 CHSH axes: a = b along z, c = d tilted 60 degrees.
pub fn fig2_directions() -> (Direction, Direction, Direction, Direction) {
    let tilt = unit(3.0_f64.sqrt() / 2.0, 0.0, 0.5);
    (z_axis(), z_axis(), tilt, tilt)
}

/// Figure 3 CHSH axes: as figure 2 but with c tilted 120 degrees.
pub fn fig3_directions() -> (Direction, Direction, Direction, Direction) {
    (
        z_axis(),
        z_axis(),
        unit(3.0_f64.sqrt() / 2.0, 0.0, -0.5),
        unit(3.0_f64.sqrt() / 2.0, 0.0, 0.5),
    )
}

/// Figure 4: pair axis n along z, measurement axes 60 degrees either side
/// of it (a.b = -1/2, a.n = b.n = 1/2).
pub fn fig4_directions() -> (Direction, [Direction; 2]) {
    let h = 3.0_f64.sqrt() / 2.0;
    (z_axis(), [unit(h, 0.0, 0.5), unit(-h, 0.0, 0.5)])
}

/// Figure 5: pair axis n along z and three nearly-planar measurement axes.
pub fn fig5_directions() -> (Direction, [Direction; 3]) {
    (
        z_axis(),
        [
            unit(0.995004, 0.0, 0.0998334),
            unit(-0.40899, 0.907061, 0.0998334),
            unit(-0.581043, -0.807727, 0.0998334),
        ],
    )
}

/// Three unit vectors with azimuths 2pi/3 apart, each raised `polar_tilt`
/// radians above the xy-plane; all pairwise dot products equal
/// sin^2(t) - cos^2(t)/2.
pub fn symmetric_trine(polar_tilt: f64) -> [Direction; 3] {
    let (s, c) = polar_tilt.sin_cos();
    std::array::from_fn(|j| {
        let phi = std::f64::consts::TAU * j as f64 / 3.0;
        unit(c * phi.cos(), c * phi.sin(), s)
    })
}

/// Everything fixed about one figure except the operator choice.
#[derive(Clone, Debug)]
pub struct FigureConfig {
    pub number: u8,
    pub spin: Spin,
    pub family: MomentumFamily,
    pub quantity: Quantity,
}

/// Configuration of figures 1 through 5.
pub fn figure_config(number: u8) -> Result<FigureConfig> {
    let config = match number {
        1 => {
            let (a, b) = fig1_directions();
            FigureConfig {
                number,
                spin: Spin::Half,
                family: MomentumFamily::Boosted,
                quantity: Quantity::Correlation { a, b },
            }
        }
        2 => {
            let (a, b, c, d) = fig2_directions();
            FigureConfig {
                number,
                spin: Spin::Half,
                family: MomentumFamily::Boosted,
                quantity: Quantity::Chsh { a, b, c, d },
            }
        }
        3 => {
            let (a, b, c, d) = fig3_directions();
            FigureConfig {
                number,
                spin: Spin::Half,
                family: MomentumFamily::Boosted,
                quantity: Quantity::Chsh { a, b, c, d },
            }
        }
        4 => {
            let (axis, [a, b]) = fig4_directions();
            FigureConfig {
                number,
                spin: Spin::One,
                family: MomentumFamily::CenterOfMass { axis },
                quantity: Quantity::Correlation { a, b },
            }
        }
        5 => {
            let (axis, [a, b, c]) = fig5_directions();
            FigureConfig {
                number,
                spin: Spin::One,
                family: MomentumFamily::CenterOfMass { axis },
                quantity: Quantity::BellMermin { a, b, c },
            }
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "figure number must be 1..=5, got {number}"
            )))
        }
    };
    Ok(config)
}

/// One x grid point with both operator curves.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FigureRow {
    pub x: f64,
    pub value_nw: f64,
    pub value_cz: f64,
}

/// Evaluates both operator curves of a figure on `steps` uniform grid
/// points covering [0, x_max], using closed forms where available and the
/// trace backend otherwise.
pub fn figure_dataset(number: u8, x_max: f64, steps: usize) -> Result<Vec<FigureRow>> {
    if !x_max.is_finite() || x_max <= 0.0 {
        return Err(Error::InvalidRange(format!(
            "x_max must be > 0, got {x_max}"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidRange(format!(
            "steps must be >= 2, got {steps}"
        )));
    }
    let config = figure_config(number)?;

    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let x = if i == steps - 1 {
            x_max
        } else {
            x_max * (i as f64) / ((steps - 1) as f64)
        };
        let value_at = |operator: SpinOperator| -> Result<f64> {
            let correlator = Correlator::with_best_backend(
                config.spin,
                operator,
                MomentumConfig {
                    family: config.family,
                    x,
                    mass: 1.0,
                },
            );
            let v = config.quantity.evaluate(&correlator)?;
            if !v.is_finite() {
                return Err(Error::NonFiniteValue(x));
            }
            Ok(v)
        };
        rows.push(FigureRow {
            x,
            value_nw: value_at(SpinOperator::NewtonWigner)?,
            value_cz: value_at(SpinOperator::Czachor)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datasets_cover_the_grid() {
        let rows = figure_dataset(1, 10.0, 101).unwrap();
        assert_eq!(rows.len(), 101);
        assert_eq!(rows[0].x, 0.0);
        assert_eq!(rows[100].x, 10.0);
    }

    #[test]
    fn figure_curves_at_rest() {
        let f1 = figure_dataset(1, 10.0, 11).unwrap();
        assert!((f1[0].value_nw - 0.5).abs() < 1e-12);
        assert!((f1[0].value_cz - 0.5).abs() < 1e-12);

        let f2 = figure_dataset(2, 10.0, 11).unwrap();
        assert!((f2[0].value_nw - 2.0).abs() < 1e-12);
        assert!((f2[0].value_cz - 2.0).abs() < 1e-12);

        let f3 = figure_dataset(3, 10.0, 11).unwrap();
        assert!((f3[0].value_nw - 0.5).abs() < 1e-12);
        assert!((f3[0].value_cz - 0.5).abs() < 1e-12);

        let f5 = figure_dataset(5, 1.0, 11).unwrap();
        assert!((f5[0].value_nw - 0.9668025123886512).abs() < 1e-12);
        assert!((f5[0].value_cz - 0.9668025123886512).abs() < 1e-12);
    }

    #[test]
    fn figure_four_marked_point() {
        let rows = figure_dataset(4, 10.0, 11).unwrap();
        assert!((rows[1].x - 1.0).abs() < 1e-15);
        assert!((rows[1].value_nw - 4.0 / 11.0).abs() < 1e-12);
        assert!((rows[1].value_cz - 3.5 / 13.75).abs() < 1e-12);
    }

    #[test]
    fn figure_two_matches_direct_chsh() {
        let rows = figure_dataset(2, 10.0, 6).unwrap();
        let (a, b, c, d) = fig2_directions();
        let correlator = Correlator::with_best_backend(
            Spin::Half,
            SpinOperator::NewtonWigner,
            MomentumConfig {
                family: MomentumFamily::Boosted,
                x: rows[3].x,
                mass: 1.0,
            },
        );
        let direct = crate::bell::chsh(&correlator, &a, &b, &c, &d).unwrap();
        assert!((rows[3].value_nw - direct.value).abs() < 1e-12);
    }

    #[test]
    fn trine_has_equal_pairwise_dots() {
        let [a, b, c] = symmetric_trine(0.1);
        let expect = -0.48504993338093105;
        for (u, v) in [(a, b), (b, c), (c, a)] {
            assert!((u.dot(&v) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn caption_directions_are_normalized_but_not_a_trine() {
        let (_, [a, b, c]) = fig5_directions();
        for d in [a, b, c] {
            assert!((d.vector().norm() - 1.0).abs() < 1e-14);
        }
        let dots = [a.dot(&b), b.dot(&c), c.dot(&a)];
        assert!((dots[0] - -0.39698020580350124).abs() < 1e-12);
        assert!((dots[1] - -0.4850502323576884).abs() < 1e-12);
        assert!((dots[2] - -0.5681733304217872).abs() < 1e-12);
    }

    #[test]
    fn rejects_unknown_figures_and_bad_grids() {
        assert!(figure_config(0).is_err());
        assert!(figure_config(6).is_err());
        assert!(figure_dataset(1, 0.0, 10).is_err());
        assert!(figure_dataset(1, 10.0, 1).is_err());
    }
}
