//! Comparison functions and the contraction right-hand sides they induce.
//!
//! A comparator is a function `φ: [0, ∞) → [0, ∞)` used to shrink distances.
//! The admissible class requires, at every probed `t > 0`,
//!
//! * `φ(t) < t`, and
//! * `lim_{r → t+} φ(r) < t`, probed numerically as the maximum of `φ` over
//!   eight points in `(t, t + right_step]`.
//!
//! Membership is checked on a finite grid and reported point by point; it is
//! evidence, not proof, and the report says which points were probed.
//!
//! Three kinds are supported:
//!
//! * `linear`: `φ(t) = k·t` with `0 <= k < 1` — admitted at every arity by
//!   mapping onto that arity's published inequality shape;
//! * `linear_weights`: coefficients `(a, b, c)` with `a + b + c < 1`, the
//!   three-coordinate weighted form; its scalar reading is `(a+b+c)·t`;
//! * `custom`: an arbitrary closure, admitted at arity 4 where the
//!   inequality is `d(F(..), F(..)) <= φ(mean of coordinate distances)`.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Number of probe points used for the numeric right-limit check.
pub const RIGHT_LIMIT_PROBES: usize = 8;
/// Default width of the right-limit probe window.
pub const DEFAULT_RIGHT_STEP: f64 = 1e-3;

type PhiFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub enum ComparatorKind {
    Linear { k: f64 },
    LinearWeights { a: f64, b: f64, c: f64 },
    Custom { f: PhiFn },
}

/// A comparison function with a human-readable description.
#[derive(Clone)]
pub struct Comparator {
    kind: ComparatorKind,
    description: String,
}

impl std::fmt::Debug for Comparator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Comparator({})", self.description)
    }
}

impl Comparator {
    /// `φ(t) = k·t`, requiring `0 <= k < 1`.
    pub fn linear(k: f64) -> Result<Comparator> {
        if !(0.0..1.0).contains(&k) {
            return Err(Error::InvalidComparator(format!(
                "linear coefficient must satisfy 0 <= k < 1, got {k}"
            )));
        }
        Ok(Comparator {
            kind: ComparatorKind::Linear { k },
            description: format!("linear(k = {k:?})"),
        })
    }

    /// Weighted three-coordinate form with `a, b, c >= 0` and `a + b + c < 1`.
    pub fn linear_weights(a: f64, b: f64, c: f64) -> Result<Comparator> {
        if a < 0.0 || b < 0.0 || c < 0.0 || !(a + b + c < 1.0) {
            return Err(Error::InvalidComparator(format!(
                "weights must be nonnegative with a + b + c < 1, got ({a}, {b}, {c})"
            )));
        }
        Ok(Comparator {
            kind: ComparatorKind::LinearWeights { a, b, c },
            description: format!("linear_weights(a = {a:?}, b = {b:?}, c = {c:?})"),
        })
    }

    /// An arbitrary comparison function; `description` is carried into
    /// reports verbatim.
    pub fn custom(
        description: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Comparator {
        Comparator {
            kind: ComparatorKind::Custom { f: Arc::new(f) },
            description: description.into(),
        }
    }

    pub fn kind(&self) -> &ComparatorKind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ComparatorKind::Linear { .. } => "linear",
            ComparatorKind::LinearWeights { .. } => "linear_weights",
            ComparatorKind::Custom { .. } => "custom",
        }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// The scalar reading `φ(t)`. For `linear` this is `k·t`; for
    /// `linear_weights` the total weight is applied, `(a+b+c)·t`, which is
    /// the reading consistent with the `a + b + c < 1` admissibility bound.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        if t < 0.0 || t.is_nan() {
            return Err(Error::NegativeComparatorInput { value: t });
        }
        Ok(match &self.kind {
            ComparatorKind::Linear { k } => k * t,
            ComparatorKind::LinearWeights { a, b, c } => (a + b + c) * t,
            ComparatorKind::Custom { f } => f(t),
        })
    }
}

/// Outcome of probing one grid point for class membership.
#[derive(Clone, Debug)]
pub struct PhiPoint {
    pub t: f64,
    /// `φ(t)`.
    pub value: f64,
    /// `φ(t) < t`.
    pub below_diagonal: bool,
    /// max of `φ` over `(t, t + right_step]` stayed below `t`.
    pub right_limit_ok: bool,
    /// The largest probed value in the right window.
    pub right_max: f64,
}

impl PhiPoint {
    pub fn ok(&self) -> bool {
        self.below_diagonal && self.right_limit_ok
    }
}

/// Evidence about membership of a comparator in the admissible class,
/// gathered on a finite grid of positive arguments.
#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub right_step: f64,
    /// `φ(0)`, which must be 0 for a `[0,∞) → [0,∞)` function below the
    /// diagonal; reported, and counted as a failure when nonzero.
    pub phi_at_zero: f64,
    pub points: Vec<PhiPoint>,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.phi_at_zero == 0.0 && self.points.iter().all(PhiPoint::ok)
    }

    /// First failing grid point, if any.
    pub fn first_failure(&self) -> Option<&PhiPoint> {
        self.points.iter().find(|p| !p.ok())
    }
}

/// Probe `φ(t) < t` and the numeric right-limit condition at every point of
/// `grid` (all strictly positive), with the given probe window width.
pub fn check_phi_membership(
    c: &Comparator,
    grid: &[f64],
    right_step: f64,
) -> Result<MembershipReport> {
    if !(right_step > 0.0) {
        return Err(Error::InvalidProblem(format!(
            "right_step must be positive, got {right_step}"
        )));
    }
    let phi_at_zero = c.evaluate(0.0)?;
    let mut points = Vec::with_capacity(grid.len());
    for &t in grid {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidProblem(format!(
                "membership grid points must be positive and finite, got {t}"
            )));
        }
        let value = c.evaluate(t)?;
        let below_diagonal = value < t && value.is_finite();
        let mut right_max = f64::NEG_INFINITY;
        for i in 1..=RIGHT_LIMIT_PROBES {
            let r = t + right_step * (i as f64 / RIGHT_LIMIT_PROBES as f64);
            right_max = right_max.max(c.evaluate(r)?);
        }
        let right_limit_ok = right_max < t;
        points.push(PhiPoint {
            t,
            value,
            below_diagonal,
            right_limit_ok,
            right_max,
        });
    }
    Ok(MembershipReport {
        right_step,
        phi_at_zero,
        points,
    })
}

fn check_nonnegative(distances: &[f64]) -> Result<()> {
    for &d in distances {
        if d < 0.0 || d.is_nan() {
            return Err(Error::NegativeComparatorInput { value: d });
        }
    }
    Ok(())
}

/// Coupled right-hand side: `(k/2)·(dx + dy)`. Linear comparators only.
pub fn coupled_rhs(c: &Comparator, dx: f64, dy: f64) -> Result<f64> {
    check_nonnegative(&[dx, dy])?;
    match c.kind() {
        ComparatorKind::Linear { k } => Ok(k / 2.0 * (dx + dy)),
        _ => Err(Error::ComparatorArity {
            kind: c.kind_name(),
            arity: 2,
        }),
    }
}

/// Coupled right-hand side in the presence of a coincidence map `g`, exactly
/// as published for that theorem: `(k/2)·((dx + dy)/2)`, where the distances
/// are between g-images. Note the extra halving relative to [`coupled_rhs`];
/// both variants exist and the caller selects one.
pub fn g_coupled_rhs(c: &Comparator, dx: f64, dy: f64) -> Result<f64> {
    check_nonnegative(&[dx, dy])?;
    match c.kind() {
        ComparatorKind::Linear { k } => Ok(k / 2.0 * ((dx + dy) / 2.0)),
        _ => Err(Error::ComparatorArity {
            kind: c.kind_name(),
            arity: 2,
        }),
    }
}

/// Tripled right-hand side: `a·dx + b·dy + c·dz`. A linear comparator is
/// admitted by splitting its coefficient evenly, `a = b = c = k/3`.
pub fn tripled_rhs(cmp: &Comparator, dx: f64, dy: f64, dz: f64) -> Result<f64> {
    check_nonnegative(&[dx, dy, dz])?;
    match cmp.kind() {
        ComparatorKind::LinearWeights { a, b, c } => Ok(a * dx + b * dy + c * dz),
        ComparatorKind::Linear { k } => Ok(k / 3.0 * (dx + dy + dz)),
        ComparatorKind::Custom { .. } => Err(Error::ComparatorArity {
            kind: cmp.kind_name(),
            arity: 3,
        }),
    }
}

/// Quartet right-hand side: `φ((dx + dy + dz + dw)/4)`. Any scalar
/// comparator is admitted; the weighted three-coordinate form is not.
pub fn quartet_rhs(c: &Comparator, dx: f64, dy: f64, dz: f64, dw: f64) -> Result<f64> {
    check_nonnegative(&[dx, dy, dz, dw])?;
    match c.kind() {
        ComparatorKind::LinearWeights { .. } => Err(Error::ComparatorArity {
            kind: c.kind_name(),
            arity: 4,
        }),
        _ => c.evaluate((dx + dy + dz + dw) / 4.0),
    }
}

/// Dispatch to the published right-hand side for the given coordinate
/// distances. `g_printed` selects the extra-halved coupled variant used
/// when a coincidence map is present at arity 2.
pub fn theorem_rhs(c: &Comparator, distances: &[f64], g_printed: bool) -> Result<f64> {
    match distances.len() {
        2 => {
            if g_printed {
                g_coupled_rhs(c, distances[0], distances[1])
            } else {
                coupled_rhs(c, distances[0], distances[1])
            }
        }
        3 => tripled_rhs(c, distances[0], distances[1], distances[2]),
        4 => quartet_rhs(c, distances[0], distances[1], distances[2], distances[3]),
        n => Err(Error::InvalidProblem(format!(
            "no right-hand side at arity {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_evaluate_scales() {
        let c = Comparator::linear(0.5).unwrap();
        assert_eq!(c.evaluate(2.0).unwrap(), 1.0);
        assert_eq!(c.evaluate(0.0).unwrap(), 0.0);
    }

    #[test]
    fn negative_input_is_rejected() {
        let c = Comparator::linear(0.5).unwrap();
        assert!(matches!(
            c.evaluate(-1.0),
            Err(Error::NegativeComparatorInput { .. })
        ));
    }

    #[test]
    fn custom_evaluate_applies_the_closure() {
        let c = Comparator::custom("t/2", |t| t / 2.0);
        assert_eq!(c.evaluate(1.0).unwrap(), 0.5);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(Comparator::linear(1.0).is_err());
        assert!(Comparator::linear(-0.1).is_err());
        assert!(Comparator::linear_weights(0.5, 0.5, 0.1).is_err());
        assert!(Comparator::linear_weights(-0.1, 0.2, 0.2).is_err());
        assert!(Comparator::linear_weights(0.2, 0.3, 0.4).is_ok());
    }

    #[test]
    fn membership_passes_for_linear_half() {
        let c = Comparator::linear(0.5).unwrap();
        let report =
            check_phi_membership(&c, &[0.1, 1.0, 10.0], DEFAULT_RIGHT_STEP).unwrap();
        assert!(report.passed());
        assert_eq!(report.phi_at_zero, 0.0);
    }

    #[test]
    fn membership_fails_on_the_identity() {
        let c = Comparator::custom("t", |t| t);
        let report =
            check_phi_membership(&c, &[0.1, 1.0, 10.0], DEFAULT_RIGHT_STEP).unwrap();
        assert!(!report.passed());
        let bad = report.first_failure().unwrap();
        assert!(!bad.below_diagonal);
    }

    #[test]
    fn membership_passes_for_saturating_ratio() {
        // φ(t) = t / (1 + t): increasing, below the diagonal, and its
        // right-window maximum φ(t + h) stays below t on this grid because
        // h < t²/(1 - t) at every probed point.
        let c = Comparator::custom("t/(1+t)", |t| t / (1.0 + t));
        let report =
            check_phi_membership(&c, &[0.1, 1.0, 10.0], DEFAULT_RIGHT_STEP).unwrap();
        assert!(report.passed(), "points: {:?}", report.points);
    }

    #[test]
    fn membership_rejects_nonpositive_grid() {
        let c = Comparator::linear(0.5).unwrap();
        assert!(check_phi_membership(&c, &[0.0], DEFAULT_RIGHT_STEP).is_err());
        assert!(check_phi_membership(&c, &[-1.0], DEFAULT_RIGHT_STEP).is_err());
    }

    #[test]
    fn coupled_rhs_halves_the_coefficient() {
        let c = Comparator::linear(0.5).unwrap();
        assert_eq!(coupled_rhs(&c, 2.0, 2.0).unwrap(), 1.0);
    }

    #[test]
    fn g_coupled_rhs_is_the_printed_extra_halved_form() {
        let c = Comparator::linear(0.5).unwrap();
        assert_eq!(g_coupled_rhs(&c, 2.0, 2.0).unwrap(), 0.5);
        assert_eq!(
            g_coupled_rhs(&c, 2.0, 2.0).unwrap(),
            coupled_rhs(&c, 2.0, 2.0).unwrap() / 2.0
        );
    }

    #[test]
    fn tripled_rhs_is_the_weighted_sum() {
        let c = Comparator::linear_weights(1.0 / 16.0, 1.0 / 8.0, 1.0 / 16.0).unwrap();
        assert_eq!(tripled_rhs(&c, 16.0, 16.0, 16.0).unwrap(), 4.0);
    }

    #[test]
    fn quartet_rhs_applies_phi_to_the_mean() {
        let c = Comparator::linear(0.5).unwrap();
        assert_eq!(quartet_rhs(&c, 1.0, 1.0, 1.0, 1.0).unwrap(), 0.5);
    }

    #[test]
    fn rhs_rejects_incompatible_kind_and_arity() {
        let w = Comparator::linear_weights(0.1, 0.1, 0.1).unwrap();
        assert!(matches!(
            coupled_rhs(&w, 1.0, 1.0),
            Err(Error::ComparatorArity { arity: 2, .. })
        ));
        assert!(matches!(
            quartet_rhs(&w, 1.0, 1.0, 1.0, 1.0),
            Err(Error::ComparatorArity { arity: 4, .. })
        ));
        let custom = Comparator::custom("t/2", |t| t / 2.0);
        assert!(matches!(
            tripled_rhs(&custom, 1.0, 1.0, 1.0),
            Err(Error::ComparatorArity { arity: 3, .. })
        ));
    }

    #[test]
    fn rhs_rejects_negative_distances() {
        let c = Comparator::linear(0.5).unwrap();
        assert!(coupled_rhs(&c, -1.0, 0.0).is_err());
        assert!(quartet_rhs(&c, 0.0, -0.5, 0.0, 0.0).is_err());
    }

    #[test]
    fn linear_is_admitted_at_every_arity() {
        let c = Comparator::linear(0.6).unwrap();
        assert_eq!(coupled_rhs(&c, 1.0, 1.0).unwrap(), 0.6);
        assert!((tripled_rhs(&c, 1.0, 1.0, 1.0).unwrap() - 0.6).abs() < 1e-15);
        assert_eq!(quartet_rhs(&c, 1.0, 1.0, 1.0, 1.0).unwrap(), 0.6);
    }

    #[test]
    fn weights_scalar_reading_uses_the_total_weight() {
        let c = Comparator::linear_weights(0.0625, 0.125, 0.0625).unwrap();
        assert_eq!(c.evaluate(1.0).unwrap(), 0.25);
    }
}
