//! Spin-spin correlation functions of relativistically moving two-particle
//! singlet states, for spin-1/2 and spin-1 pairs under two relativistic
//! spin observables, together with the CHSH and Bell-Mermin inequalities
//! built from them and search routines for their extrema in the kinematic
//! parameter x and over measurement directions.
//!
//! Conventions: metric signature (+, -, -, -), natural units c = 1, and a
//! default particle mass of 1 (every reported quantity is invariant under
//! rescaling the mass).

pub mod bell;
pub mod correlation;
pub mod error;
pub mod figures;
pub mod kinematics;
pub mod observables;
pub mod scan;
pub mod states;

pub use bell::{
    bell_mermin, bell_mermin_value, chsh, chsh_value, ConfigEcho, Inequality, InequalityResult,
    Quantity, VIOLATION_TOL,
};
pub use correlation::{
    closed_form_available, corr_cz_half, corr_cz_one, corr_cz_one_cm, corr_nw_half, corr_nw_one_cm,
    correlation_oracle, verify_equivalence, Backend, Correlator, EquivalenceCase,
    EquivalenceReport, MomentumConfig, MomentumFamily,
};
pub use error::{Error, Result};
pub use figures::{
    fig1_directions, fig2_directions, fig3_directions, fig4_directions, fig5_directions,
    figure_config, figure_dataset, symmetric_trine, FigureConfig, FigureRow,
};
pub use kinematics::{
    cm_momenta, minkowski_dot, momenta_from_x, random_direction, spin_matrices, standard_boost,
    CFourVector, Direction, FourVector, Momentum, Spin, XParam,
};
pub use observables::{czachor_matrix, nw_spin_matrix, Observable, SpinOperator};
pub use scan::{
    find_local_extrema, optimize_directions, optimize_joint, sweep_x, DirectionOptimum, Extremum,
    ExtremumKind, JointOptimum, OptimizeProblem, SweepPoint, SweepResult,
};
pub use states::{polarization_vectors, spin_half_pair_state, spin_one_pair_state, PairState};
