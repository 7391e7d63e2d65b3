//! Carriers equipped with a metric and a partial order, and the
//! sign-patterned product spaces the iteration runs in.
//!
//! Three built-in carrier flavors cover everything the tool accepts from
//! problem files: finite label spaces with explicit distance/order tables,
//! closed real intervals, and closed axis-aligned boxes. A fourth, closure-
//! backed flavor exists for library users; it is the only flavor whose
//! completeness the tool cannot vouch for, which the `assumed_complete`
//! flag records.
//!
//! The product of `n` copies of a base space carries
//!
//! * the sum metric: `ρ(a, b) = Σᵢ d(aᵢ, bᵢ)`, and
//! * a sign-patterned order: coordinate `i` compares forward when the
//!   pattern says `+` and backward when it says `-`.
//!
//! The fixed patterns are `(+,-)` at arity 2, `(+,-,+)` at arity 3 and
//! `(+,-,+,-)` at arity 4; they are what makes "mixed monotone" mappings
//! order-preserving on the product.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default metric slack on real carriers: distances below this are treated
/// as zero where exact zero is meaningful. Finite carriers use exactly 0.
pub const EPS_METRIC_REAL: f64 = 1e-12;
/// Default inequality slack on real carriers for hypothesis checks.
pub const EPS_CHECK_REAL: f64 = 1e-9;

/// A point of some carrier.
///
/// `Index` is a position in a finite carrier's label list, `Real` a scalar
/// on an interval carrier, `Vector` a point of a box carrier.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Index(usize),
    Real(f64),
    Vector(Vec<f64>),
}

impl Element {
    pub fn as_real(&self) -> Option<f64> {
        match self {
            Element::Real(x) => Some(*x),
            _ => None,
        }
    }

    pub fn as_index(&self) -> Option<usize> {
        match self {
            Element::Index(i) => Some(*i),
            _ => None,
        }
    }

    /// Bare rendering used in error messages when no space is at hand.
    pub(crate) fn bare(&self) -> String {
        match self {
            Element::Index(i) => format!("#{i}"),
            Element::Real(x) => format!("{x:?}"),
            Element::Vector(v) => format!("{v:?}"),
        }
    }
}

/// Direction a product coordinate compares in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The fixed alternating sign pattern for a supported arity.
pub fn default_pattern(arity: usize) -> Result<Vec<Sign>> {
    use Sign::{Minus, Plus};
    match arity {
        2 => Ok(vec![Plus, Minus]),
        3 => Ok(vec![Plus, Minus, Plus]),
        4 => Ok(vec![Plus, Minus, Plus, Minus]),
        _ => Err(Error::InvalidProblem(format!(
            "supported arities are 2, 3 and 4, got {arity}"
        ))),
    }
}

type DistFn = Arc<dyn Fn(&Element, &Element) -> f64 + Send + Sync>;
type LeqFn = Arc<dyn Fn(&Element, &Element) -> bool + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Finite {
        labels: Vec<String>,
        distance: Vec<Vec<f64>>,
        leq: Vec<Vec<bool>>,
    },
    Interval {
        lo: f64,
        hi: f64,
        grid: usize,
    },
    BoxCarrier {
        lows: Vec<f64>,
        highs: Vec<f64>,
        grid: usize,
    },
    Custom {
        sample: Vec<Element>,
        distance: DistFn,
        leq: LeqFn,
    },
}

/// A carrier with a distance function and a partial order.
///
/// Construction validates *shapes* only (square tables, ordered bounds);
/// whether the tables actually satisfy the metric and order axioms is the
/// job of [`audit_space`], so that deliberately broken spaces can be built
/// and then diagnosed.
#[derive(Clone)]
pub struct Space {
    kind: Kind,
    assumed_complete: bool,
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Finite { labels, .. } => write!(f, "Space::finite({} elements)", labels.len()),
            Kind::Interval { lo, hi, grid } => {
                write!(f, "Space::interval([{lo}, {hi}], grid {grid})")
            }
            Kind::BoxCarrier { lows, grid, .. } => {
                write!(f, "Space::box({} axes, grid {grid})", lows.len())
            }
            Kind::Custom { sample, .. } => {
                write!(f, "Space::custom({} sample points)", sample.len())
            }
        }
    }
}

impl Space {
    /// A finite carrier given by labels, an `m x m` distance table and an
    /// `m x m` order table (`leq[i][j]` meaning `i <= j`).
    pub fn finite(
        labels: Vec<String>,
        distance: Vec<Vec<f64>>,
        leq: Vec<Vec<bool>>,
    ) -> Result<Space> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::InvalidProblem("finite carrier is empty".into()));
        }
        for (name, rows_ok) in [
            ("distance", distance.len() == m && distance.iter().all(|r| r.len() == m)),
            ("leq", leq.len() == m && leq.iter().all(|r| r.len() == m)),
        ] {
            if !rows_ok {
                return Err(Error::InvalidProblem(format!(
                    "{name} table must be {m} x {m} to match the {m} labels"
                )));
            }
        }
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != m {
            return Err(Error::InvalidProblem("carrier labels must be distinct".into()));
        }
        Ok(Space {
            kind: Kind::Finite { labels, distance, leq },
            assumed_complete: true,
        })
    }

    /// The closed interval `[lo, hi]` with `|x - y|` and the usual order.
    /// `grid` is the default number of sample points used by checks.
    pub fn interval(lo: f64, hi: f64, grid: usize) -> Result<Space> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidProblem(format!(
                "interval bounds must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        if grid < 2 {
            return Err(Error::InvalidProblem("interval grid needs at least 2 points".into()));
        }
        Ok(Space {
            kind: Kind::Interval { lo, hi, grid },
            assumed_complete: true,
        })
    }

    /// A closed box with per-axis bounds, the sum (L1) metric and the
    /// componentwise order. Incomparable pairs are expected here.
    pub fn box_carrier(lows: Vec<f64>, highs: Vec<f64>, grid: usize) -> Result<Space> {
        if lows.is_empty() || lows.len() != highs.len() {
            return Err(Error::InvalidProblem(
                "box carrier needs matching, nonempty lows/highs".into(),
            ));
        }
        for (l, h) in lows.iter().zip(&highs) {
            if !(l < h) || !l.is_finite() || !h.is_finite() {
                return Err(Error::InvalidProblem(format!(
                    "box axis bounds must be finite with lo < hi, got [{l}, {h}]"
                )));
            }
        }
        if grid < 2 {
            return Err(Error::InvalidProblem("box grid needs at least 2 points".into()));
        }
        Ok(Space {
            kind: Kind::BoxCarrier { lows, highs, grid },
            assumed_complete: true,
        })
    }

    /// A carrier backed by user closures. The tool cannot establish
    /// completeness for these, so the flag starts out `false`; callers who
    /// know better may flip it with [`Space::assume_complete`].
    pub fn custom(sample: Vec<Element>, distance: DistFn, leq: LeqFn) -> Space {
        Space {
            kind: Kind::Custom { sample, distance, leq },
            assumed_complete: false,
        }
    }

    pub fn assume_complete(mut self, yes: bool) -> Space {
        self.assumed_complete = yes;
        self
    }

    /// Whether completeness is established (built-in flavors) or merely
    /// asserted by the caller (custom flavor).
    pub fn assumed_complete(&self) -> bool {
        self.assumed_complete
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::Finite { .. })
    }

    /// Number of elements of a finite carrier.
    pub fn cardinality(&self) -> Option<usize> {
        match &self.kind {
            Kind::Finite { labels, .. } => Some(labels.len()),
            _ => None,
        }
    }

    /// All elements of a finite carrier, in label order.
    pub fn elements(&self) -> Option<Vec<Element>> {
        match &self.kind {
            Kind::Finite { labels, .. } => {
                Some((0..labels.len()).map(Element::Index).collect())
            }
            _ => None,
        }
    }

    /// The default sample resolution this space was declared with.
    pub fn default_grid(&self) -> usize {
        match &self.kind {
            Kind::Finite { labels, .. } => labels.len(),
            Kind::Interval { grid, .. } | Kind::BoxCarrier { grid, .. } => *grid,
            Kind::Custom { sample, .. } => sample.len().max(2),
        }
    }

    /// Metric slack appropriate for this carrier (exact on finite carriers).
    pub fn eps_metric(&self) -> f64 {
        if self.is_finite() {
            0.0
        } else {
            EPS_METRIC_REAL
        }
    }

    /// Inequality slack for hypothesis checks on this carrier.
    pub fn eps_check(&self) -> f64 {
        if self.is_finite() {
            0.0
        } else {
            EPS_CHECK_REAL
        }
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        match &self.kind {
            Kind::Finite { labels, .. } => labels.iter().position(|l| l == label),
            _ => None,
        }
    }

    /// Human-readable rendering of an element of this carrier.
    pub fn render(&self, e: &Element) -> String {
        match (&self.kind, e) {
            (Kind::Finite { labels, .. }, Element::Index(i)) if *i < labels.len() => {
                labels[*i].clone()
            }
            _ => e.bare(),
        }
    }

    fn mismatch(&self, e: &Element) -> Error {
        let space = match &self.kind {
            Kind::Finite { .. } => "finite",
            Kind::Interval { .. } => "interval",
            Kind::BoxCarrier { .. } => "box",
            Kind::Custom { .. } => "custom",
        };
        Error::CarrierMismatch {
            space: space.into(),
            element: e.bare(),
        }
    }

    /// Distance between two elements.
    pub fn distance(&self, a: &Element, b: &Element) -> Result<f64> {
        match &self.kind {
            Kind::Finite { distance, .. } => {
                let (i, j) = (
                    a.as_index().ok_or_else(|| self.mismatch(a))?,
                    b.as_index().ok_or_else(|| self.mismatch(b))?,
                );
                if i >= distance.len() {
                    return Err(self.mismatch(a));
                }
                if j >= distance.len() {
                    return Err(self.mismatch(b));
                }
                Ok(distance[i][j])
            }
            Kind::Interval { .. } => {
                let (x, y) = (
                    a.as_real().ok_or_else(|| self.mismatch(a))?,
                    b.as_real().ok_or_else(|| self.mismatch(b))?,
                );
                Ok((x - y).abs())
            }
            Kind::BoxCarrier { lows, .. } => match (a, b) {
                (Element::Vector(x), Element::Vector(y))
                    if x.len() == lows.len() && y.len() == lows.len() =>
                {
                    Ok(x.iter().zip(y).map(|(p, q)| (p - q).abs()).sum())
                }
                (Element::Vector(_), _) | (_, _) if !matches!(a, Element::Vector(_)) => {
                    Err(self.mismatch(a))
                }
                _ => Err(self.mismatch(b)),
            },
            Kind::Custom { distance, .. } => Ok(distance(a, b)),
        }
    }

    /// The partial order of the carrier.
    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        match &self.kind {
            Kind::Finite { leq, .. } => {
                let (i, j) = (
                    a.as_index().ok_or_else(|| self.mismatch(a))?,
                    b.as_index().ok_or_else(|| self.mismatch(b))?,
                );
                if i >= leq.len() {
                    return Err(self.mismatch(a));
                }
                if j >= leq.len() {
                    return Err(self.mismatch(b));
                }
                Ok(leq[i][j])
            }
            Kind::Interval { .. } => {
                let (x, y) = (
                    a.as_real().ok_or_else(|| self.mismatch(a))?,
                    b.as_real().ok_or_else(|| self.mismatch(b))?,
                );
                Ok(x <= y)
            }
            Kind::BoxCarrier { lows, .. } => match (a, b) {
                (Element::Vector(x), Element::Vector(y))
                    if x.len() == lows.len() && y.len() == lows.len() =>
                {
                    Ok(x.iter().zip(y).all(|(p, q)| p <= q))
                }
                _ if !matches!(a, Element::Vector(_)) => Err(self.mismatch(a)),
                _ => Err(self.mismatch(b)),
            },
            Kind::Custom { leq, .. } => Ok(leq(a, b)),
        }
    }

    /// Whether an element lies within the declared carrier (with slack
    /// `eps` on real bounds).
    pub fn contains(&self, e: &Element, eps: f64) -> bool {
        match (&self.kind, e) {
            (Kind::Finite { labels, .. }, Element::Index(i)) => *i < labels.len(),
            (Kind::Interval { lo, hi, .. }, Element::Real(x)) => {
                *x >= lo - eps && *x <= hi + eps
            }
            (Kind::BoxCarrier { lows, highs, .. }, Element::Vector(v)) => {
                v.len() == lows.len()
                    && v.iter()
                        .zip(lows.iter().zip(highs))
                        .all(|(x, (l, h))| *x >= l - eps && *x <= h + eps)
            }
            (Kind::Custom { .. }, _) => true,
            _ => false,
        }
    }

    /// A deterministic sample of the carrier with roughly `points` entries:
    /// every element of a finite carrier, an even grid on an interval, a
    /// meshed grid on a box (per-axis count reduced so the mesh stays small),
    /// and the designated sample of a custom carrier.
    pub fn sample_grid(&self, points: usize) -> Vec<Element> {
        match &self.kind {
            Kind::Finite { labels, .. } => (0..labels.len()).map(Element::Index).collect(),
            Kind::Interval { lo, hi, .. } => {
                let n = points.max(2);
                (0..n)
                    .map(|i| {
                        let t = i as f64 / (n - 1) as f64;
                        Element::Real(lo + t * (hi - lo))
                    })
                    .collect()
            }
            Kind::BoxCarrier { lows, highs, .. } => {
                let dims = lows.len();
                // Keep the mesh size near `points` overall.
                let per_axis = (points.max(2) as f64)
                    .powf(1.0 / dims as f64)
                    .floor()
                    .max(2.0) as usize;
                let mut out: Vec<Vec<f64>> = vec![vec![]];
                for (l, h) in lows.iter().zip(highs) {
                    let axis: Vec<f64> = (0..per_axis)
                        .map(|i| l + (i as f64 / (per_axis - 1) as f64) * (h - l))
                        .collect();
                    let mut next = Vec::with_capacity(out.len() * per_axis);
                    for prefix in &out {
                        for v in &axis {
                            let mut p = prefix.clone();
                            p.push(*v);
                            next.push(p);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Element::Vector).collect()
            }
            Kind::Custom { sample, .. } => sample.clone(),
        }
    }
}

/// One metric or order axiom broken by a space, with the offending points.
#[derive(Clone, Debug)]
pub enum AuditViolation {
    NonzeroSelfDistance { a: Element, value: f64 },
    NegativeDistance { a: Element, b: Element, value: f64 },
    AsymmetricDistance { a: Element, b: Element, forward: f64, backward: f64 },
    ZeroDistanceDistinct { a: Element, b: Element },
    TriangleViolation { a: Element, b: Element, c: Element, direct: f64, detour: f64 },
    NotReflexive { a: Element },
    NotAntisymmetric { a: Element, b: Element },
    NotTransitive { a: Element, b: Element, c: Element },
}

impl AuditViolation {
    pub fn describe(&self, space: &Space) -> String {
        let r = |e: &Element| space.render(e);
        match self {
            AuditViolation::NonzeroSelfDistance { a, value } => {
                format!("d({}, {}) = {value:?}, expected 0", r(a), r(a))
            }
            AuditViolation::NegativeDistance { a, b, value } => {
                format!("d({}, {}) = {value:?} is negative", r(a), r(b))
            }
            AuditViolation::AsymmetricDistance { a, b, forward, backward } => format!(
                "d({}, {}) = {forward:?} but d({}, {}) = {backward:?}",
                r(a),
                r(b),
                r(b),
                r(a)
            ),
            AuditViolation::ZeroDistanceDistinct { a, b } => {
                format!("distinct elements {} and {} are at distance 0", r(a), r(b))
            }
            AuditViolation::TriangleViolation { a, b, c, direct, detour } => format!(
                "d({}, {}) = {direct:?} exceeds d(.,{}) detour {detour:?}",
                r(a),
                r(c),
                r(b)
            ),
            AuditViolation::NotReflexive { a } => format!("{} <= {} does not hold", r(a), r(a)),
            AuditViolation::NotAntisymmetric { a, b } => format!(
                "{} <= {} and {} <= {} for distinct elements",
                r(a),
                r(b),
                r(b),
                r(a)
            ),
            AuditViolation::NotTransitive { a, b, c } => format!(
                "{} <= {} <= {} but not {} <= {}",
                r(a),
                r(b),
                r(c),
                r(a),
                r(c)
            ),
        }
    }
}

/// Result of checking the metric and order axioms on a sample.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub sample_size: usize,
    pub epsilon: f64,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the metric axioms (identity, nonnegativity, symmetry, triangle)
/// and order axioms (reflexivity, antisymmetry, transitivity) on every
/// pair and triple of `sample`, with slack `eps` on real comparisons.
/// Every violation found is listed.
pub fn audit_space(space: &Space, sample: &[Element], eps: f64) -> Result<AuditReport> {
    let n = sample.len();
    let mut violations = Vec::new();

    // Cache distances and order over the sample.
    let mut d = vec![vec![0.0; n]; n];
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            d[i][j] = space.distance(&sample[i], &sample[j])?;
            le[i][j] = space.leq(&sample[i], &sample[j])?;
        }
    }

    for i in 0..n {
        if d[i][i].abs() > eps {
            violations.push(AuditViolation::NonzeroSelfDistance {
                a: sample[i].clone(),
                value: d[i][i],
            });
        }
        if !le[i][i] {
            violations.push(AuditViolation::NotReflexive { a: sample[i].clone() });
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if d[i][j] < -eps {
                violations.push(AuditViolation::NegativeDistance {
                    a: sample[i].clone(),
                    b: sample[j].clone(),
                    value: d[i][j],
                });
            }
            if i < j {
                if (d[i][j] - d[j][i]).abs() > eps {
                    violations.push(AuditViolation::AsymmetricDistance {
                        a: sample[i].clone(),
                        b: sample[j].clone(),
                        forward: d[i][j],
                        backward: d[j][i],
                    });
                }
                if d[i][j].abs() <= eps && sample[i] != sample[j] {
                    violations.push(AuditViolation::ZeroDistanceDistinct {
                        a: sample[i].clone(),
                        b: sample[j].clone(),
                    });
                }
                if le[i][j] && le[j][i] && sample[i] != sample[j] {
                    violations.push(AuditViolation::NotAntisymmetric {
                        a: sample[i].clone(),
                        b: sample[j].clone(),
                    });
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let detour = d[i][j] + d[j][k];
                if d[i][k] > detour + eps {
                    violations.push(AuditViolation::TriangleViolation {
                        a: sample[i].clone(),
                        b: sample[j].clone(),
                        c: sample[k].clone(),
                        direct: d[i][k],
                        detour,
                    });
                }
                if le[i][j] && le[j][k] && !le[i][k] {
                    violations.push(AuditViolation::NotTransitive {
                        a: sample[i].clone(),
                        b: sample[j].clone(),
                        c: sample[k].clone(),
                    });
                }
            }
        }
    }

    Ok(AuditReport {
        sample_size: n,
        epsilon: eps,
        violations,
    })
}

/// The `n`-fold product of a base space with the sum metric and a
/// sign-patterned order.
#[derive(Clone, Debug)]
pub struct TupleSpace {
    base: Space,
    pattern: Vec<Sign>,
}

impl TupleSpace {
    /// Product space at a supported arity with the fixed alternating pattern.
    pub fn new(base: Space, arity: usize) -> Result<TupleSpace> {
        Ok(TupleSpace {
            base,
            pattern: default_pattern(arity)?,
        })
    }

    /// Product space with an explicit pattern (used for degenerate patterns
    /// in tests; problem files always get the fixed ones).
    pub fn with_pattern(base: Space, pattern: Vec<Sign>) -> Result<TupleSpace> {
        if pattern.is_empty() {
            return Err(Error::InvalidProblem("pattern must be nonempty".into()));
        }
        Ok(TupleSpace { base, pattern })
    }

    pub fn arity(&self) -> usize {
        self.pattern.len()
    }

    pub fn base(&self) -> &Space {
        &self.base
    }

    pub fn pattern(&self) -> &[Sign] {
        &self.pattern
    }

    fn check_arity(&self, t: &[Element]) -> Result<()> {
        if t.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: t.len(),
            });
        }
        Ok(())
    }

    /// Sum metric: `ρ(a, b) = Σᵢ d(aᵢ, bᵢ)`.
    pub fn product_distance(&self, a: &[Element], b: &[Element]) -> Result<f64> {
        self.check_arity(a)?;
        self.check_arity(b)?;
        let mut total = 0.0;
        for (x, y) in a.iter().zip(b) {
            total += self.base.distance(x, y)?;
        }
        Ok(total)
    }

    /// Sign-patterned product order: `a <= b` iff every `+` coordinate has
    /// `aᵢ <= bᵢ` and every `-` coordinate has `bᵢ <= aᵢ`.
    pub fn tuple_leq(&self, a: &[Element], b: &[Element]) -> Result<bool> {
        self.check_arity(a)?;
        self.check_arity(b)?;
        for (i, sign) in self.pattern.iter().enumerate() {
            let ok = match sign {
                Sign::Plus => self.base.leq(&a[i], &b[i])?,
                Sign::Minus => self.base.leq(&b[i], &a[i])?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The two-point space `{0, 1}` with the discrete metric and the chain
/// order `0 <= 1`. Used widely in tests and small demonstrations.
pub fn two_point_chain() -> Space {
    Space::finite(
        vec!["0".into(), "1".into()],
        vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        vec![vec![true, true], vec![false, true]],
    )
    .expect("static tables are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reals(xs: &[f64]) -> Vec<Element> {
        xs.iter().copied().map(Element::Real).collect()
    }

    fn indices(xs: &[usize]) -> Vec<Element> {
        xs.iter().copied().map(Element::Index).collect()
    }

    #[test]
    fn product_distance_sums_component_distances() {
        let ts = TupleSpace::new(Space::interval(-10.0, 10.0, 21).unwrap(), 4).unwrap();
        let a = reals(&[0.0, 1.0, 2.0, 3.0]);
        let b = reals(&[1.0, 3.0, 5.0, 7.0]);
        assert_eq!(ts.product_distance(&a, &b).unwrap(), 10.0);
        assert_eq!(ts.product_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn product_distance_on_discrete_metric_counts_mismatches() {
        let ts = TupleSpace::new(two_point_chain(), 4).unwrap();
        let a = indices(&[0, 1, 0, 1]);
        let b = indices(&[1, 1, 0, 0]);
        assert_eq!(ts.product_distance(&a, &b).unwrap(), 2.0);
    }

    #[test]
    fn quartet_tuple_leq_follows_the_alternating_pattern() {
        let ts = TupleSpace::new(two_point_chain(), 4).unwrap();
        let a = indices(&[0, 1, 0, 1]);
        let b = indices(&[1, 0, 1, 0]);
        assert!(ts.tuple_leq(&a, &b).unwrap());
        assert!(!ts.tuple_leq(&b, &a).unwrap());
        // Reflexive regardless of pattern.
        assert!(ts.tuple_leq(&a, &a).unwrap());
    }

    #[test]
    fn coupled_tuple_leq_rejects_wrong_second_coordinate_direction() {
        let ts = TupleSpace::new(two_point_chain(), 2).unwrap();
        let a = indices(&[0, 0]);
        let b = indices(&[1, 1]);
        // Second coordinate compares backward, and 1 <= 0 fails.
        assert!(!ts.tuple_leq(&a, &b).unwrap());
    }

    #[test]
    fn all_plus_pattern_is_componentwise_leq() {
        let base = Space::interval(0.0, 1.0, 11).unwrap();
        let ts =
            TupleSpace::with_pattern(base.clone(), vec![Sign::Plus; 4]).unwrap();
        let a = reals(&[0.1, 0.2, 0.3, 0.4]);
        let b = reals(&[0.2, 0.2, 0.9, 0.4]);
        let componentwise = a
            .iter()
            .zip(&b)
            .all(|(x, y)| base.leq(x, y).unwrap());
        assert_eq!(ts.tuple_leq(&a, &b).unwrap(), componentwise);
        assert!(ts.tuple_leq(&a, &b).unwrap());
        assert!(!ts.tuple_leq(&b, &a).unwrap());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let ts = TupleSpace::new(Space::interval(0.0, 1.0, 5).unwrap(), 4).unwrap();
        let short = reals(&[0.0, 0.0, 0.0]);
        let full = reals(&[0.0; 4]);
        assert!(matches!(
            ts.product_distance(&short, &full),
            Err(Error::ArityMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let s = two_point_chain();
        let err = s.distance(&Element::Real(0.5), &Element::Index(0));
        assert!(matches!(err, Err(Error::CarrierMismatch { .. })));
    }

    #[test]
    fn audit_passes_on_interval_grid() {
        let s = Space::interval(0.0, 1.0, 9).unwrap();
        let sample = s.sample_grid(9);
        let report = audit_space(&s, &sample, EPS_METRIC_REAL).unwrap();
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert_eq!(report.sample_size, 9);
    }

    #[test]
    fn audit_flags_signed_distance_as_asymmetric_and_negative() {
        // d(a, b) = a - b on {0, 1}: d(0, 1) = -1 breaks nonnegativity
        // and symmetry.
        let s = Space::finite(
            vec!["0".into(), "1".into()],
            vec![vec![0.0, -1.0], vec![1.0, 0.0]],
            vec![vec![true, true], vec![false, true]],
        )
        .unwrap();
        let sample = s.elements().unwrap();
        let report = audit_space(&s, &sample, 0.0).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AuditViolation::NegativeDistance { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AuditViolation::AsymmetricDistance { .. })));
    }

    #[test]
    fn audit_flags_strictly_less_as_not_reflexive() {
        // "leq" defined as strictly-less: no diagonal entries.
        let s = Space::finite(
            vec!["0".into(), "1".into()],
            vec![vec![0.0, 1.0], vec![1.0, 0.0]],
            vec![vec![false, true], vec![false, false]],
        )
        .unwrap();
        let sample = s.elements().unwrap();
        let report = audit_space(&s, &sample, 0.0).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AuditViolation::NotReflexive { .. })));
    }

    #[test]
    fn audit_flags_triangle_violation() {
        // d(0, 2) = 5 but the detour through 1 costs 2.
        let s = Space::finite(
            vec!["0".into(), "1".into(), "2".into()],
            vec![
                vec![0.0, 1.0, 5.0],
                vec![1.0, 0.0, 1.0],
                vec![5.0, 1.0, 0.0],
            ],
            vec![
                vec![true, true, true],
                vec![false, true, true],
                vec![false, false, true],
            ],
        )
        .unwrap();
        let report = audit_space(&s, &s.elements().unwrap(), 0.0).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AuditViolation::TriangleViolation { .. })));
    }

    #[test]
    fn box_carrier_has_incomparable_points() {
        let s = Space::box_carrier(vec![0.0, 0.0], vec![1.0, 1.0], 5).unwrap();
        let a = Element::Vector(vec![0.2, 0.8]);
        let b = Element::Vector(vec![0.8, 0.2]);
        assert!(!s.leq(&a, &b).unwrap());
        assert!(!s.leq(&b, &a).unwrap());
        assert_eq!(s.distance(&a, &b).unwrap(), 0.6 + 0.6000000000000001);
    }

    #[test]
    fn interval_contains_respects_slack() {
        let s = Space::interval(0.0, 1.0, 5).unwrap();
        assert!(s.contains(&Element::Real(1.0 + 1e-10), 1e-9));
        assert!(!s.contains(&Element::Real(1.01), 1e-9));
    }

    #[test]
    fn unsupported_arity_is_rejected() {
        assert!(default_pattern(5).is_err());
        assert!(default_pattern(1).is_err());
    }
}
