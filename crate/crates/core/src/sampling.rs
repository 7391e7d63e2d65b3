//! Sampling plans for hypothesis checks.
//!
//! Checks quantify over elements, tuples and pairs of tuples; on infinite
//! carriers they can only probe samples. A [`Sampling`] says how those
//! samples are drawn and how large the enumerations may grow, so that every
//! report can state exactly what was probed. All derived samples are
//! deterministic: grids are evenly spaced and stride-thinned, and random
//! draws come from a recorded seed.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::spaces::{Element, Space};

/// How base elements are drawn from a carrier.
#[derive(Clone, Debug)]
pub enum SampleKind {
    /// Every element; finite carriers only.
    Exhaustive,
    /// An evenly spaced grid with this many points per axis.
    Grid { points: usize },
    /// Seeded pseudo-random draws.
    Random { count: usize, seed: u64 },
}

/// A sampling plan plus enumeration budgets and check tuning.
#[derive(Clone, Debug)]
pub struct Sampling {
    pub kind: SampleKind,
    /// Cap on the number of tuples enumerated for tuple-level checks; the
    /// per-axis element set is thinned until `axisᵃʳⁱᵗʸ` fits under it.
    pub tuple_budget: usize,
    /// Cap on the number of tuple pairs probed by the contraction check;
    /// beyond it, pairs are visited with a stride.
    pub pair_budget: usize,
    /// Points per axis used for the fixed context coordinates of the
    /// monotonicity check.
    pub context_axis: usize,
    /// Allowed ratio of image distance to input distance in the numeric
    /// continuity check.
    pub continuity_factor: f64,
    /// Override for the inequality slack; defaults to the carrier's.
    pub eps_check: Option<f64>,
    /// Probe window width for the comparator right-limit condition.
    pub phi_right_step: f64,
}

impl Sampling {
    pub fn grid(points: usize) -> Sampling {
        Sampling {
            kind: SampleKind::Grid { points },
            ..Sampling::defaults()
        }
    }

    pub fn exhaustive() -> Sampling {
        Sampling {
            kind: SampleKind::Exhaustive,
            // Exhaustive quantification must not be thinned; the caller is
            // responsible for guarding domain sizes first.
            tuple_budget: usize::MAX,
            pair_budget: usize::MAX,
            ..Sampling::defaults()
        }
    }

    pub fn random(count: usize, seed: u64) -> Sampling {
        Sampling {
            kind: SampleKind::Random { count, seed },
            ..Sampling::defaults()
        }
    }

    /// The default plan for a space: exhaustive on finite carriers, the
    /// declared grid otherwise.
    pub fn for_space(space: &Space) -> Sampling {
        if space.is_finite() {
            Sampling::exhaustive()
        } else {
            Sampling::grid(space.default_grid())
        }
    }

    fn defaults() -> Sampling {
        Sampling {
            kind: SampleKind::Grid { points: 21 },
            tuple_budget: 1296,
            pair_budget: 1_000_000,
            context_axis: 4,
            continuity_factor: 100.0,
            eps_check: None,
            phi_right_step: crate::comparators::DEFAULT_RIGHT_STEP,
        }
    }

    /// One-line description embedded in reports.
    pub fn describe(&self) -> String {
        let kind = match &self.kind {
            SampleKind::Exhaustive => "exhaustive".to_string(),
            SampleKind::Grid { points } => format!("grid({points})"),
            SampleKind::Random { count, seed } => format!("random({count}, seed {seed})"),
        };
        format!(
            "{kind}, tuple_budget {}, pair_budget {}, context_axis {}",
            self.tuple_budget, self.pair_budget, self.context_axis
        )
    }

    /// Effective inequality slack for a problem on `space`.
    pub fn effective_eps(&self, space: &Space) -> f64 {
        self.eps_check.unwrap_or_else(|| space.eps_check())
    }
}

impl Default for Sampling {
    fn default() -> Sampling {
        Sampling::defaults()
    }
}

/// Draw the base element sample this plan describes.
pub fn sample_elements(space: &Space, s: &Sampling) -> Result<Vec<Element>> {
    match &s.kind {
        SampleKind::Exhaustive => space.elements().ok_or_else(|| {
            Error::InvalidProblem(
                "exhaustive sampling requires a finite carrier".into(),
            )
        }),
        SampleKind::Grid { points } => Ok(space.sample_grid(*points)),
        SampleKind::Random { count, seed } => {
            if let Some(elements) = space.elements() {
                let mut rng = StdRng::seed_from_u64(*seed);
                Ok((0..*count)
                    .map(|_| elements[rng.gen_range(0..elements.len())].clone())
                    .collect())
            } else {
                // Domain-shaped random draws: jitter the grid.
                let grid = space.sample_grid((*count).max(2));
                let mut rng = StdRng::seed_from_u64(*seed);
                Ok((0..*count)
                    .map(|_| grid[rng.gen_range(0..grid.len())].clone())
                    .collect())
            }
        }
    }
}

/// Thin `elements` evenly (keeping both endpoints) down to at most `max`.
pub fn thin(elements: &[Element], max: usize) -> Vec<Element> {
    if elements.len() <= max || max == 0 {
        return elements.to_vec();
    }
    let n = elements.len();
    let keep = max.max(2);
    (0..keep)
        .map(|i| elements[(i * (n - 1)) / (keep - 1)].clone())
        .collect()
}

/// The per-axis element set used for tuple enumeration: thinned until the
/// full `arity`-fold product fits within the tuple budget.
pub fn tuple_axis(space: &Space, s: &Sampling, arity: usize) -> Result<Vec<Element>> {
    let elements = sample_elements(space, s)?;
    if s.tuple_budget == usize::MAX {
        return Ok(elements);
    }
    let max_axis = (s.tuple_budget as f64)
        .powf(1.0 / arity as f64)
        .floor()
        .max(2.0) as usize;
    Ok(thin(&elements, max_axis))
}

/// All `arity`-tuples over `axis`, in lexicographic axis order.
pub fn tuples(axis: &[Element], arity: usize) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = vec![vec![]];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * axis.len());
        for prefix in &out {
            for e in axis {
                let mut t = prefix.clone();
                t.push(e.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Context tuples (all coordinates except the varied one) for the
/// monotonicity check: a coarse mesh on infinite carriers, everything on
/// exhaustive ones.
pub fn contexts(space: &Space, s: &Sampling, arity: usize) -> Result<Vec<Vec<Element>>> {
    let axis = match &s.kind {
        SampleKind::Exhaustive => sample_elements(space, s)?,
        _ => thin(&sample_elements(space, s)?, s.context_axis),
    };
    Ok(tuples(&axis, arity - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::two_point_chain;

    #[test]
    fn grid_sampling_spans_the_interval() {
        let space = Space::interval(0.0, 1.0, 21).unwrap();
        let s = Sampling::grid(21);
        let sample = sample_elements(&space, &s).unwrap();
        assert_eq!(sample.len(), 21);
        assert_eq!(sample[0], Element::Real(0.0));
        assert_eq!(sample[20], Element::Real(1.0));
        assert_eq!(sample[6], Element::Real(0.3));
    }

    #[test]
    fn exhaustive_requires_finite() {
        let space = Space::interval(0.0, 1.0, 5).unwrap();
        assert!(sample_elements(&space, &Sampling::exhaustive()).is_err());
        assert_eq!(
            sample_elements(&two_point_chain(), &Sampling::exhaustive())
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn thinning_keeps_endpoints() {
        let xs: Vec<Element> = (0..21).map(|i| Element::Real(i as f64)).collect();
        let t = thin(&xs, 5);
        assert_eq!(t.len(), 5);
        assert_eq!(t[0], Element::Real(0.0));
        assert_eq!(t[4], Element::Real(20.0));
    }

    #[test]
    fn tuple_axis_respects_the_budget() {
        let space = Space::interval(0.0, 1.0, 21).unwrap();
        let s = Sampling::grid(21);
        let axis4 = tuple_axis(&space, &s, 4).unwrap();
        assert!(axis4.len().pow(4) <= s.tuple_budget);
        // 21² = 441 already fits, so the pair axis is left untouched.
        let axis2 = tuple_axis(&space, &s, 2).unwrap();
        assert_eq!(axis2.len(), 21);
    }

    #[test]
    fn tuples_are_lexicographic() {
        let axis = vec![Element::Index(0), Element::Index(1)];
        let ts = tuples(&axis, 2);
        assert_eq!(ts.len(), 4);
        assert_eq!(ts[0], vec![Element::Index(0), Element::Index(0)]);
        assert_eq!(ts[1], vec![Element::Index(0), Element::Index(1)]);
        assert_eq!(ts[3], vec![Element::Index(1), Element::Index(1)]);
    }

    #[test]
    fn random_sampling_is_seed_deterministic() {
        let space = Space::interval(0.0, 1.0, 21).unwrap();
        let a = sample_elements(&space, &Sampling::random(10, 7)).unwrap();
        let b = sample_elements(&space, &Sampling::random(10, 7)).unwrap();
        assert_eq!(a, b);
    }
}
