//! Problem statements and the checks that probe a problem's hypotheses.
//!
//! A [`Problem`] bundles a carrier, a mapping `F` of arity 2–4, an optional
//! coincidence map `g` (identity when absent), a comparator and a role
//! scheme. The checks probe, on a sample:
//!
//! * the mixed monotonicity of `F` (nondecreasing in `+` coordinates,
//!   nonincreasing in `-` coordinates, comparing g-images of the varied
//!   coordinate),
//! * the contraction inequality against the arity's published right-hand
//!   side, restricted to pattern-comparable pairs,
//! * the seed condition that starts the iteration,
//! * commutativity of `g` with `F`, and inclusion of the range of `F` in
//!   the range of `g`,
//! * a numeric continuity surrogate (or, under the order-limits assumption,
//!   the built-in carrier guarantee).
//!
//! Verdicts are data: `pass`, `fail` (always with a concrete, replayable
//! witness), `vacuous` (nothing comparable to test — distinct from pass),
//! `skipped`, and `unverifiable`. No check proves anything about points it
//! did not probe; every report records exactly what was sampled.

use std::fmt;
use std::sync::Arc;

use crate::comparators::{check_phi_membership, theorem_rhs, Comparator};
use crate::engine::RoleScheme;
use crate::error::{Error, Result};
use crate::sampling::{contexts, sample_elements, thin, tuple_axis, tuples, Sampling};
use crate::spaces::{audit_space, AuditViolation, Element, Sign, Space, TupleSpace};

type MapFn = Arc<dyn Fn(&[Element]) -> Result<Element> + Send + Sync>;
type UnaryFn = Arc<dyn Fn(&Element) -> Result<Element> + Send + Sync>;

/// A mapping `F : Xⁿ → X`.
#[derive(Clone)]
pub struct Mapping {
    arity: usize,
    label: String,
    f: MapFn,
}

impl fmt::Debug for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mapping({}, arity {})", self.label, self.arity)
    }
}

impl Mapping {
    pub fn new(
        arity: usize,
        label: impl Into<String>,
        f: impl Fn(&[Element]) -> Element + Send + Sync + 'static,
    ) -> Mapping {
        Mapping {
            arity,
            label: label.into(),
            f: Arc::new(move |args| Ok(f(args))),
        }
    }

    /// A mapping on a scalar carrier; non-real arguments evaluate to NaN,
    /// which downstream checks surface as loud failures.
    pub fn from_scalar(
        arity: usize,
        label: impl Into<String>,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Mapping {
        Mapping {
            arity,
            label: label.into(),
            f: Arc::new(move |args| {
                let xs: Vec<f64> = args
                    .iter()
                    .map(|e| e.as_real().unwrap_or(f64::NAN))
                    .collect();
                Ok(Element::Real(f(&xs)))
            }),
        }
    }

    /// A lookup table over a finite carrier of `m` elements. `table` holds
    /// the image index for every argument tuple, in lexicographic order of
    /// the argument indices (first coordinate most significant).
    pub fn finite_table(arity: usize, m: usize, table: Vec<usize>) -> Result<Mapping> {
        let expected = m
            .checked_pow(arity as u32)
            .ok_or_else(|| Error::InvalidProblem("table size overflows".into()))?;
        if table.len() != expected {
            return Err(Error::InvalidProblem(format!(
                "mapping table must have m^arity = {expected} entries, got {}",
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidProblem(format!(
                "mapping table entry {bad} is outside the carrier of {m} elements"
            )));
        }
        Ok(Mapping {
            arity,
            label: format!("table[{}]", table.len()),
            f: Arc::new(move |args| {
                let mut idx = 0usize;
                for e in args {
                    let i = e.as_index().ok_or_else(|| Error::CarrierMismatch {
                        space: "finite".into(),
                        element: e.bare(),
                    })?;
                    if i >= m {
                        return Err(Error::CarrierMismatch {
                            space: "finite".into(),
                            element: e.bare(),
                        });
                    }
                    idx = idx * m + i;
                }
                Ok(Element::Index(table[idx]))
            }),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, args: &[Element]) -> Result<Element> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        (self.f)(args)
    }
}

/// A self-map `g : X → X`, optionally with a section inverse used to pull
/// iterates back through `g`.
#[derive(Clone)]
pub struct UnaryMap {
    label: String,
    map: UnaryFn,
    inverse: Option<UnaryFn>,
}

impl fmt::Debug for UnaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "UnaryMap({}{})",
            self.label,
            if self.inverse.is_some() { ", with inverse" } else { "" }
        )
    }
}

impl UnaryMap {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(&Element) -> Element + Send + Sync + 'static,
    ) -> UnaryMap {
        UnaryMap {
            label: label.into(),
            map: Arc::new(move |e| Ok(f(e))),
            inverse: None,
        }
    }

    pub fn identity() -> UnaryMap {
        UnaryMap::new("identity", |e| e.clone()).with_inverse(|e| e.clone())
    }

    pub fn from_scalar(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> UnaryMap {
        UnaryMap {
            label: label.into(),
            map: Arc::new(move |e| {
                Ok(Element::Real(f(e.as_real().unwrap_or(f64::NAN))))
            }),
            inverse: None,
        }
    }

    pub fn with_inverse(
        mut self,
        f: impl Fn(&Element) -> Element + Send + Sync + 'static,
    ) -> UnaryMap {
        self.inverse = Some(Arc::new(move |e| Ok(f(e))));
        self
    }

    pub fn with_scalar_inverse(
        mut self,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> UnaryMap {
        self.inverse = Some(Arc::new(move |e| {
            Ok(Element::Real(f(e.as_real().unwrap_or(f64::NAN))))
        }));
        self
    }

    /// A lookup table over a finite carrier, with an optional inverse table.
    pub fn finite_table(m: usize, table: Vec<usize>, inverse: Option<Vec<usize>>) -> Result<UnaryMap> {
        if table.len() != m || table.iter().any(|&v| v >= m) {
            return Err(Error::InvalidProblem(format!(
                "g table must have {m} in-range entries"
            )));
        }
        if let Some(inv) = &inverse {
            if inv.len() != m || inv.iter().any(|&v| v >= m) {
                return Err(Error::InvalidProblem(format!(
                    "g inverse table must have {m} in-range entries"
                )));
            }
        }
        let lookup = move |table: Vec<usize>| -> UnaryFn {
            Arc::new(move |e: &Element| {
                let i = e.as_index().ok_or_else(|| Error::CarrierMismatch {
                    space: "finite".into(),
                    element: e.bare(),
                })?;
                if i >= table.len() {
                    return Err(Error::CarrierMismatch {
                        space: "finite".into(),
                        element: e.bare(),
                    });
                }
                Ok(Element::Index(table[i]))
            })
        };
        Ok(UnaryMap {
            label: format!("table[{m}]"),
            map: lookup(table),
            inverse: inverse.map(lookup),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, e: &Element) -> Result<Element> {
        (self.map)(e)
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn eval_inverse(&self, e: &Element) -> Result<Element> {
        match &self.inverse {
            Some(inv) => inv(e),
            None => Err(Error::InvalidProblem(
                "this map has no section inverse".into(),
            )),
        }
    }
}

/// Which completeness-side assumption the problem leans on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssumptionMode {
    /// Continuity of the mappings, probed numerically.
    Continuity,
    /// The order-limit property of the carrier (monotone convergent chains
    /// stay comparable to their limits); holds by construction for the
    /// built-in carrier flavors.
    OrderLimits,
}

/// A full problem statement: where the iteration runs and with what data.
#[derive(Clone, Debug)]
pub struct Problem {
    ts: TupleSpace,
    f: Mapping,
    g: Option<UnaryMap>,
    comparator: Comparator,
    scheme: RoleScheme,
    assumption: AssumptionMode,
    /// At arity 2 with `g` present, whether the contraction check uses the
    /// extra-halved right-hand side exactly as published for that theorem
    /// (the default) or the plain coupled one.
    g_rhs_printed: bool,
}

impl Problem {
    pub fn new(
        space: Space,
        f: Mapping,
        comparator: Comparator,
        scheme: RoleScheme,
    ) -> Result<Problem> {
        let arity = scheme.arity();
        if f.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: f.arity(),
            });
        }
        Ok(Problem {
            ts: TupleSpace::new(space, arity)?,
            f,
            g: None,
            comparator,
            scheme,
            assumption: AssumptionMode::Continuity,
            g_rhs_printed: true,
        })
    }

    pub fn with_g(mut self, g: UnaryMap) -> Problem {
        self.g = Some(g);
        self
    }

    pub fn with_assumption(mut self, mode: AssumptionMode) -> Problem {
        self.assumption = mode;
        self
    }

    pub fn with_g_rhs_printed(mut self, printed: bool) -> Problem {
        self.g_rhs_printed = printed;
        self
    }

    pub fn arity(&self) -> usize {
        self.ts.arity()
    }

    pub fn space(&self) -> &Space {
        self.ts.base()
    }

    pub fn tuple_space(&self) -> &TupleSpace {
        &self.ts
    }

    pub fn mapping(&self) -> &Mapping {
        &self.f
    }

    pub fn g(&self) -> Option<&UnaryMap> {
        self.g.as_ref()
    }

    pub fn comparator(&self) -> &Comparator {
        &self.comparator
    }

    pub fn scheme(&self) -> &RoleScheme {
        &self.scheme
    }

    pub fn assumption(&self) -> AssumptionMode {
        self.assumption
    }

    pub fn g_rhs_printed(&self) -> bool {
        self.g_rhs_printed
    }

    /// `g(e)`, or `e` itself when no coincidence map is set.
    pub fn g_image(&self, e: &Element) -> Result<Element> {
        match &self.g {
            Some(g) => g.eval(e),
            None => Ok(e.clone()),
        }
    }

    pub fn g_tuple(&self, t: &[Element]) -> Result<Vec<Element>> {
        t.iter().map(|e| self.g_image(e)).collect()
    }

    fn check_tuple_arity(&self, t: &[Element]) -> Result<()> {
        if t.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: t.len(),
            });
        }
        Ok(())
    }
}

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The sampled domain contained nothing the hypothesis quantifies over
    /// (for instance no comparable pairs). Deliberately not a pass.
    Vacuous,
    Skipped,
    /// The hypothesis cannot be probed with the given problem data.
    Unverifiable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::Skipped => "skipped",
            Verdict::Unverifiable => "unverifiable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Concrete data demonstrating a violation; every fail verdict carries one,
/// and [`Witness::replay`] re-evaluates it against the problem.
#[derive(Clone, Debug)]
pub enum Witness {
    Audit(AuditViolation),
    Phi {
        t: f64,
        value: f64,
        right_max: f64,
        right_step: f64,
    },
    Monotone {
        position: usize,
        context: Vec<Element>,
        low: Element,
        high: Element,
        f_low: Element,
        f_high: Element,
    },
    Contraction {
        a: Vec<Element>,
        b: Vec<Element>,
        lhs: f64,
        rhs: f64,
    },
    Seed {
        coordinate: usize,
        seed: Vec<Element>,
        g_value: Element,
        f_value: Element,
    },
    Commutativity {
        tuple: Vec<Element>,
        g_of_f: Element,
        f_of_g: Element,
        distance: f64,
    },
    RangeEscape {
        tuple: Vec<Element>,
        value: Element,
        /// Round-trip distance `d(g(g⁻¹(v)), v)` when an inverse exists,
        /// NaN when the value simply fell outside the target set.
        roundtrip: f64,
    },
    Continuity {
        which: &'static str,
        from: Vec<Element>,
        to: Vec<Element>,
        input_distance: f64,
        image_distance: f64,
        factor: f64,
    },
}

/// Build the full tuple with `e` placed at `position` inside `context`.
fn splice(context: &[Element], position: usize, e: &Element) -> Vec<Element> {
    let mut t = Vec::with_capacity(context.len() + 1);
    t.extend_from_slice(&context[..position]);
    t.push(e.clone());
    t.extend_from_slice(&context[position..]);
    t
}

/// The coordinate distances fed to the right-hand side: between g-images at
/// arity 2 with `g` present (matching that theorem's printed inequality),
/// between the raw points otherwise.
fn rhs_distances(p: &Problem, a: &[Element], b: &[Element]) -> Result<Vec<f64>> {
    let space = p.space();
    let use_g_images = p.arity() == 2 && p.g().is_some();
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        let d = if use_g_images {
            space.distance(&p.g_image(x)?, &p.g_image(y)?)?
        } else {
            space.distance(x, y)?
        };
        out.push(d);
    }
    Ok(out)
}

fn contraction_sides(p: &Problem, a: &[Element], b: &[Element]) -> Result<(f64, f64)> {
    let lhs = p
        .space()
        .distance(&p.mapping().eval(a)?, &p.mapping().eval(b)?)?;
    let printed = p.g_rhs_printed() && p.g().is_some();
    let rhs = theorem_rhs(p.comparator(), &rhs_distances(p, a, b)?, printed)?;
    Ok((lhs, rhs))
}

impl Witness {
    /// Re-evaluate the violation against `p`. Returns `true` when the
    /// violation still holds, with `eps` as the inequality slack.
    pub fn replay(&self, p: &Problem, eps: f64) -> Result<bool> {
        let space = p.space();
        match self {
            Witness::Audit(v) => {
                let eps_m = space.eps_metric();
                Ok(match v {
                    AuditViolation::NonzeroSelfDistance { a, .. } => {
                        space.distance(a, a)?.abs() > eps_m
                    }
                    AuditViolation::NegativeDistance { a, b, .. } => {
                        space.distance(a, b)? < -eps_m
                    }
                    AuditViolation::AsymmetricDistance { a, b, .. } => {
                        (space.distance(a, b)? - space.distance(b, a)?).abs() > eps_m
                    }
                    AuditViolation::ZeroDistanceDistinct { a, b } => {
                        space.distance(a, b)?.abs() <= eps_m && a != b
                    }
                    AuditViolation::TriangleViolation { a, b, c, .. } => {
                        space.distance(a, c)?
                            > space.distance(a, b)? + space.distance(b, c)? + eps_m
                    }
                    AuditViolation::NotReflexive { a } => !space.leq(a, a)?,
                    AuditViolation::NotAntisymmetric { a, b } => {
                        space.leq(a, b)? && space.leq(b, a)? && a != b
                    }
                    AuditViolation::NotTransitive { a, b, c } => {
                        space.leq(a, b)? && space.leq(b, c)? && !space.leq(a, c)?
                    }
                })
            }
            Witness::Phi { t, right_step, .. } => {
                let report = check_phi_membership(p.comparator(), &[*t], *right_step)?;
                Ok(!report.passed())
            }
            Witness::Monotone {
                position,
                context,
                low,
                high,
                ..
            } => {
                let f_low = p.mapping().eval(&splice(context, *position, low))?;
                let f_high = p.mapping().eval(&splice(context, *position, high))?;
                let ok = match p.tuple_space().pattern()[*position] {
                    Sign::Plus => space.leq(&f_low, &f_high)?,
                    Sign::Minus => space.leq(&f_high, &f_low)?,
                };
                Ok(!ok)
            }
            Witness::Contraction { a, b, .. } => {
                let (lhs, rhs) = contraction_sides(p, a, b)?;
                Ok(lhs > rhs + eps)
            }
            Witness::Seed {
                coordinate, seed, ..
            } => {
                let fv = p.mapping().eval(&p.scheme().apply(*coordinate, seed)?)?;
                let gv = p.g_image(&seed[*coordinate])?;
                let ok = match p.tuple_space().pattern()[*coordinate] {
                    Sign::Plus => space.leq(&gv, &fv)?,
                    Sign::Minus => space.leq(&fv, &gv)?,
                };
                Ok(!ok)
            }
            Witness::Commutativity { tuple, .. } => {
                let g = p.g().ok_or_else(|| {
                    Error::InvalidProblem("commutativity witness without g".into())
                })?;
                let g_of_f = g.eval(&p.mapping().eval(tuple)?)?;
                let f_of_g = p.mapping().eval(&p.g_tuple(tuple)?)?;
                Ok(space.distance(&g_of_f, &f_of_g)? > eps)
            }
            Witness::RangeEscape { tuple, .. } => {
                let v = p.mapping().eval(tuple)?;
                match p.g() {
                    None => Ok(!space.contains(&v, eps)),
                    Some(g) if g.has_inverse() => {
                        let x = g.eval_inverse(&v)?;
                        Ok(space.distance(&g.eval(&x)?, &v)? > eps)
                    }
                    Some(g) => {
                        let image: Vec<Element> = space
                            .elements()
                            .ok_or_else(|| {
                                Error::InvalidProblem(
                                    "range witness needs an inverse or a finite carrier"
                                        .into(),
                                )
                            })?
                            .iter()
                            .map(|e| g.eval(e))
                            .collect::<Result<_>>()?;
                        Ok(!image.contains(&v))
                    }
                }
            }
            Witness::Continuity {
                which,
                from,
                to,
                factor,
                ..
            } => {
                let (din, dim) = if *which == "g" {
                    let g = p.g().ok_or_else(|| {
                        Error::InvalidProblem("g-continuity witness without g".into())
                    })?;
                    (
                        space.distance(&from[0], &to[0])?,
                        space.distance(&g.eval(&from[0])?, &g.eval(&to[0])?)?,
                    )
                } else {
                    (
                        p.tuple_space().product_distance(from, to)?,
                        space.distance(&p.mapping().eval(from)?, &p.mapping().eval(to)?)?,
                    )
                };
                Ok(dim > factor * din)
            }
        }
    }

    /// Short display for reports.
    pub fn describe(&self, space: &Space) -> String {
        let r = |e: &Element| space.render(e);
        let rt = |t: &[Element]| {
            let parts: Vec<String> = t.iter().map(&r).collect();
            format!("({})", parts.join(", "))
        };
        match self {
            Witness::Audit(v) => v.describe(space),
            Witness::Phi {
                t,
                value,
                right_max,
                ..
            } => format!("phi({t:?}) = {value:?}, right-window max {right_max:?}"),
            Witness::Monotone {
                position,
                context,
                low,
                high,
                f_low,
                f_high,
            } => format!(
                "coordinate {position}: moving {} -> {} in context {} sends F from {} to {}",
                r(low),
                r(high),
                rt(context),
                r(f_low),
                r(f_high)
            ),
            Witness::Contraction { a, b, lhs, rhs } => {
                format!("pair {} / {}: lhs {lhs:?} > rhs {rhs:?}", rt(a), rt(b))
            }
            Witness::Seed {
                coordinate,
                g_value,
                f_value,
                ..
            } => format!(
                "coordinate {coordinate}: g(seed) = {} vs F(permuted seed) = {}",
                r(g_value),
                r(f_value)
            ),
            Witness::Commutativity {
                tuple,
                g_of_f,
                f_of_g,
                distance,
            } => format!(
                "at {}: g(F(..)) = {} vs F(g(..)) = {} (distance {distance:?})",
                rt(tuple),
                r(g_of_f),
                r(f_of_g)
            ),
            Witness::RangeEscape {
                tuple,
                value,
                roundtrip,
            } => {
                if roundtrip.is_nan() {
                    format!("F{} = {} is outside the target set", rt(tuple), r(value))
                } else {
                    format!(
                        "F{} = {}: g-roundtrip misses by {roundtrip:?}",
                        rt(tuple),
                        r(value)
                    )
                }
            }
            Witness::Continuity {
                which,
                input_distance,
                image_distance,
                factor,
                ..
            } => format!(
                "{which}: image distance {image_distance:?} exceeds {factor:?} x input distance {input_distance:?}"
            ),
        }
    }
}

/// One check's outcome, with what was probed to reach it.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub name: &'static str,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Comparisons actually evaluated.
    pub tested: usize,
    /// Comparisons skipped because nothing was comparable.
    pub skipped: usize,
    /// Whether the probe covered the entire domain.
    pub exhaustive: bool,
    pub detail: String,
}

impl CheckRecord {
    fn new(name: &'static str, verdict: Verdict) -> CheckRecord {
        CheckRecord {
            name,
            verdict,
            witness: None,
            tested: 0,
            skipped: 0,
            exhaustive: false,
            detail: String::new(),
        }
    }
}

/// All check outcomes for one problem under one sampling plan.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub checks: Vec<CheckRecord>,
    pub sampling: String,
    pub eps_check: f64,
}

impl HypothesisReport {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn any_inconclusive(&self) -> bool {
        self.checks
            .iter()
            .any(|c| matches!(c.verdict, Verdict::Vacuous | Verdict::Unverifiable))
    }

    /// True when every check either passed or was legitimately skipped.
    pub fn gate_ok(&self) -> bool {
        !self.any_failed() && !self.any_inconclusive()
    }

    pub fn find(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn is_exhaustive(s: &Sampling) -> bool {
    matches!(s.kind, crate::sampling::SampleKind::Exhaustive)
}

/// Metric and order axioms on a sample of the carrier.
pub fn check_space_audit(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let space = p.space();
    // The audit walks triples; keep the sample small enough for that.
    let sample = if is_exhaustive(s) {
        sample_elements(space, s)?
    } else {
        thin(&sample_elements(space, s)?, 33)
    };
    let report = audit_space(space, &sample, space.eps_metric())?;
    let mut rec = CheckRecord::new(
        "space_audit",
        if report.passed() { Verdict::Pass } else { Verdict::Fail },
    );
    rec.tested = report.sample_size;
    rec.exhaustive = is_exhaustive(s);
    rec.detail = if report.passed() {
        format!(
            "metric and order axioms hold on {} sample points (eps {:?}); completeness {}",
            report.sample_size,
            report.epsilon,
            if space.assumed_complete() {
                "established for this carrier flavor"
            } else {
                "assumed, not established"
            }
        )
    } else {
        let shown: Vec<String> = report
            .violations
            .iter()
            .take(3)
            .map(|v| v.describe(space))
            .collect();
        format!(
            "{} violation(s), e.g. {}",
            report.violations.len(),
            shown.join("; ")
        )
    };
    rec.witness = report.violations.into_iter().next().map(Witness::Audit);
    Ok(rec)
}

/// Derive the positive grid the comparator is probed on: the distinct
/// nonzero pairwise distances arising in the sample.
fn phi_grid(p: &Problem, s: &Sampling) -> Result<Vec<f64>> {
    let sample = thin(&sample_elements(p.space(), s)?, 17);
    let mut values = Vec::new();
    for i in 0..sample.len() {
        for j in (i + 1)..sample.len() {
            let d = p.space().distance(&sample[i], &sample[j])?;
            if d > 0.0 && d.is_finite() {
                values.push(d);
            }
        }
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.dedup_by(|a, b| (*a - *b).abs() <= f64::EPSILON * a.abs().max(1.0));
    if values.is_empty() {
        // Single-point or degenerate sample: fall back to a generic scale.
        values = vec![0.5, 1.0, 2.0];
    }
    Ok(thin_f64(&values, 48))
}

fn thin_f64(xs: &[f64], max: usize) -> Vec<f64> {
    if xs.len() <= max {
        return xs.to_vec();
    }
    (0..max)
        .map(|i| xs[(i * (xs.len() - 1)) / (max - 1)])
        .collect()
}

/// Comparator class membership on the distance-derived grid.
pub fn check_comparator_membership(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let grid = phi_grid(p, s)?;
    let report = check_phi_membership(p.comparator(), &grid, s.phi_right_step)?;
    let mut rec = CheckRecord::new(
        "comparator_membership",
        if report.passed() { Verdict::Pass } else { Verdict::Fail },
    );
    rec.tested = report.points.len();
    rec.detail = format!(
        "{} on {} distance-derived points, right window {:?} with {} probes, phi(0) = {:?}",
        p.comparator().description(),
        report.points.len(),
        report.right_step,
        crate::comparators::RIGHT_LIMIT_PROBES,
        report.phi_at_zero,
    );
    if !report.passed() {
        rec.witness = report
            .first_failure()
            .map(|pt| Witness::Phi {
                t: pt.t,
                value: pt.value,
                right_max: pt.right_max,
                right_step: report.right_step,
            })
            .or(Some(Witness::Phi {
                t: f64::MIN_POSITIVE,
                value: report.phi_at_zero,
                right_max: report.phi_at_zero,
                right_step: report.right_step,
            }));
    }
    Ok(rec)
}

/// Mixed monotonicity: in each `+` coordinate `F` must not decrease, in
/// each `-` coordinate it must not increase, when the varied coordinate
/// moves up in the g-image order.
pub fn check_mixed_monotone(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let space = p.space();
    let elements = sample_elements(space, s)?;
    let ctxs = contexts(space, s, p.arity())?;
    let pattern = p.tuple_space().pattern().to_vec();

    // Order the element pairs by their g-images once.
    let g_images: Vec<Element> = elements
        .iter()
        .map(|e| p.g_image(e))
        .collect::<Result<_>>()?;
    let mut ordered: Vec<(usize, usize)> = Vec::new();
    let mut incomparable = 0usize;
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            let fwd = space.leq(&g_images[i], &g_images[j])?;
            let bwd = space.leq(&g_images[j], &g_images[i])?;
            if fwd {
                ordered.push((i, j));
            }
            if bwd {
                ordered.push((j, i));
            }
            if !fwd && !bwd {
                incomparable += 1;
            }
        }
    }

    let mut rec = CheckRecord::new("mixed_monotone", Verdict::Pass);
    rec.exhaustive = is_exhaustive(s);
    rec.skipped = incomparable * pattern.len();
    'outer: for (position, sign) in pattern.iter().enumerate() {
        for ctx in &ctxs {
            for &(lo, hi) in &ordered {
                let f_low = p.mapping().eval(&splice(ctx, position, &elements[lo]))?;
                let f_high = p.mapping().eval(&splice(ctx, position, &elements[hi]))?;
                rec.tested += 1;
                let ok = match sign {
                    Sign::Plus => space.leq(&f_low, &f_high)?,
                    Sign::Minus => space.leq(&f_high, &f_low)?,
                };
                if !ok {
                    rec.verdict = Verdict::Fail;
                    rec.witness = Some(Witness::Monotone {
                        position,
                        context: ctx.clone(),
                        low: elements[lo].clone(),
                        high: elements[hi].clone(),
                        f_low,
                        f_high,
                    });
                    break 'outer;
                }
            }
        }
    }
    rec.detail = format!(
        "{} directed comparisons over {} contexts and {} ordered element pairs ({} incomparable pairs skipped){}",
        rec.tested,
        ctxs.len(),
        ordered.len(),
        incomparable,
        if rec.verdict == Verdict::Fail { "; stopped at first violation" } else { "" },
    );
    Ok(rec)
}

/// The contraction inequality on pattern-comparable tuple pairs.
pub fn check_contraction(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let eps = s.effective_eps(p.space());
    let axis = tuple_axis(p.space(), s, p.arity())?;
    let all = tuples(&axis, p.arity());
    let g_images: Vec<Vec<Element>> = all
        .iter()
        .map(|t| p.g_tuple(t))
        .collect::<Result<_>>()?;

    let n = all.len();
    let total_pairs = n.saturating_mul(n.saturating_sub(1)) / 2;
    let stride = if total_pairs > s.pair_budget {
        total_pairs.div_ceil(s.pair_budget)
    } else {
        1
    };

    let mut rec = CheckRecord::new("contraction", Verdict::Pass);
    rec.exhaustive = is_exhaustive(s) && stride == 1;
    let mut comparable = 0usize;
    let mut pair_index = 0usize;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            pair_index += 1;
            if stride > 1 && pair_index % stride != 0 {
                continue;
            }
            let ts = p.tuple_space();
            let cmp_fwd = ts.tuple_leq(&g_images[i], &g_images[j])?;
            let cmp = cmp_fwd || ts.tuple_leq(&g_images[j], &g_images[i])?;
            if !cmp {
                rec.skipped += 1;
                continue;
            }
            comparable += 1;
            let (lhs, rhs) = contraction_sides(p, &all[i], &all[j])?;
            rec.tested += 1;
            if lhs > rhs + eps {
                rec.verdict = Verdict::Fail;
                rec.witness = Some(Witness::Contraction {
                    a: all[i].clone(),
                    b: all[j].clone(),
                    lhs,
                    rhs,
                });
                break 'outer;
            }
        }
    }
    if comparable == 0 && rec.verdict == Verdict::Pass {
        rec.verdict = Verdict::Vacuous;
        rec.detail = format!(
            "no comparable tuple pairs among {} tuples (axis {} points, stride {stride}); nothing was tested",
            n,
            axis.len()
        );
        return Ok(rec);
    }
    rec.detail = format!(
        "{} comparable pairs tested out of {} visited ({} tuples, stride {stride}, eps {eps:?}){}",
        comparable,
        comparable + rec.skipped,
        n,
        if rec.verdict == Verdict::Fail { "; stopped at first violation" } else { "" },
    );
    Ok(rec)
}

/// The seed condition: for each coordinate `i`, `g(seed[i])` must sit on
/// the pattern side of `F` applied to the scheme's `i`-th argument order.
pub fn check_seed(p: &Problem, seed: &[Element]) -> Result<CheckRecord> {
    p.check_tuple_arity(seed)?;
    let space = p.space();
    let mut rec = CheckRecord::new("seed", Verdict::Pass);
    rec.exhaustive = true;
    let mut lines = Vec::with_capacity(p.arity());
    for (i, sign) in p.tuple_space().pattern().iter().enumerate() {
        let fv = p.mapping().eval(&p.scheme().apply(i, seed)?)?;
        let gv = p.g_image(&seed[i])?;
        rec.tested += 1;
        let ok = match sign {
            Sign::Plus => space.leq(&gv, &fv)?,
            Sign::Minus => space.leq(&fv, &gv)?,
        };
        lines.push(format!(
            "coordinate {i} ({sign}): g = {}, F = {} -> {}",
            space.render(&gv),
            space.render(&fv),
            if ok { "ok" } else { "violated" }
        ));
        if !ok && rec.verdict == Verdict::Pass {
            rec.verdict = Verdict::Fail;
            rec.witness = Some(Witness::Seed {
                coordinate: i,
                seed: seed.to_vec(),
                g_value: gv,
                f_value: fv,
            });
        }
    }
    rec.detail = lines.join("; ");
    Ok(rec)
}

/// `g(F(t)) = F(g(t₁), ..., g(tₙ))` on sampled tuples.
pub fn check_commutativity(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let Some(g) = p.g() else {
        let mut rec = CheckRecord::new("commutativity", Verdict::Skipped);
        rec.detail = "no coincidence map; nothing to commute".into();
        return Ok(rec);
    };
    let eps = s.effective_eps(p.space());
    let axis = tuple_axis(p.space(), s, p.arity())?;
    let mut rec = CheckRecord::new("commutativity", Verdict::Pass);
    rec.exhaustive = is_exhaustive(s);
    for t in tuples(&axis, p.arity()) {
        let g_of_f = g.eval(&p.mapping().eval(&t)?)?;
        let f_of_g = p.mapping().eval(&p.g_tuple(&t)?)?;
        let d = p.space().distance(&g_of_f, &f_of_g)?;
        rec.tested += 1;
        if d > eps {
            rec.verdict = Verdict::Fail;
            rec.witness = Some(Witness::Commutativity {
                tuple: t,
                g_of_f,
                f_of_g,
                distance: d,
            });
            break;
        }
    }
    rec.detail = format!(
        "g(F(..)) vs F(g(..)) agreed within {eps:?} on {} tuples{}",
        rec.tested,
        if rec.verdict == Verdict::Fail { "; stopped at first violation" } else { "" }
    );
    Ok(rec)
}

/// Range inclusion: every sampled value of `F` must be reachable through
/// `g` — via the section inverse when one exists, via enumeration on finite
/// carriers, and by carrier membership when `g` is absent.
pub fn check_range_inclusion(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let space = p.space();
    let eps = s.effective_eps(space);
    let axis = tuple_axis(space, s, p.arity())?;
    let mut rec = CheckRecord::new("range_inclusion", Verdict::Pass);
    rec.exhaustive = is_exhaustive(s);

    enum Mode {
        Membership,
        Inverse,
        FiniteImage(Vec<Element>),
    }
    let mode = match p.g() {
        None => Mode::Membership,
        Some(g) if g.has_inverse() => Mode::Inverse,
        Some(g) => match space.elements() {
            Some(elements) => Mode::FiniteImage(
                elements
                    .iter()
                    .map(|e| g.eval(e))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => {
                rec.verdict = Verdict::Unverifiable;
                rec.detail = "g has no section inverse and the carrier cannot be enumerated; \
                              range inclusion cannot be probed"
                    .into();
                return Ok(rec);
            }
        },
    };

    for t in tuples(&axis, p.arity()) {
        let v = p.mapping().eval(&t)?;
        rec.tested += 1;
        let (ok, roundtrip) = match &mode {
            Mode::Membership => (space.contains(&v, eps), f64::NAN),
            Mode::Inverse => {
                let g = p.g().expect("inverse mode implies g");
                let x = g.eval_inverse(&v)?;
                let d = space.distance(&g.eval(&x)?, &v)?;
                (d <= eps, d)
            }
            Mode::FiniteImage(image) => (image.contains(&v), f64::NAN),
        };
        if !ok {
            rec.verdict = Verdict::Fail;
            rec.witness = Some(Witness::RangeEscape {
                tuple: t,
                value: v,
                roundtrip,
            });
            break;
        }
    }
    rec.detail = format!(
        "{} sampled values {} ({} tuples checked)",
        rec.tested,
        match &mode {
            Mode::Membership => "stayed inside the carrier",
            Mode::Inverse => "round-tripped through the section inverse",
            Mode::FiniteImage(_) => "landed in the enumerated g-image",
        },
        rec.tested,
    );
    if rec.verdict == Verdict::Fail {
        rec.detail.push_str("; stopped at first violation");
    }
    Ok(rec)
}

/// Numeric continuity surrogate: image distances of grid-adjacent inputs
/// must stay within `continuity_factor` times the input distance. The
/// coincidence map is probed whenever present, in either assumption mode.
pub fn check_continuity(p: &Problem, s: &Sampling) -> Result<CheckRecord> {
    let space = p.space();
    let mut rec = CheckRecord::new("continuity", Verdict::Pass);
    if space.is_finite() {
        rec.detail = "finite carrier: every mapping is continuous".into();
        rec.exhaustive = true;
        return Ok(rec);
    }
    let factor = s.continuity_factor;
    let elements = sample_elements(space, s)?;

    // The coincidence map first: required whenever present.
    if let Some(g) = p.g() {
        for pair in elements.windows(2) {
            let din = space.distance(&pair[0], &pair[1])?;
            if din <= 0.0 {
                continue;
            }
            let dim = space.distance(&g.eval(&pair[0])?, &g.eval(&pair[1])?)?;
            rec.tested += 1;
            if dim > factor * din {
                rec.verdict = Verdict::Fail;
                rec.witness = Some(Witness::Continuity {
                    which: "g",
                    from: vec![pair[0].clone()],
                    to: vec![pair[1].clone()],
                    input_distance: din,
                    image_distance: dim,
                    factor,
                });
                rec.detail = format!(
                    "coincidence map jumped at grid scale (factor {factor:?}); \
                     g-continuity is required whenever g is present"
                );
                return Ok(rec);
            }
        }
    }

    // The mapping, under the continuity assumption only.
    if p.assumption() == AssumptionMode::Continuity {
        let ctxs = contexts(space, s, p.arity())?;
        let varied = thin(&elements, 9);
        for position in 0..p.arity() {
            for ctx in &ctxs {
                for pair in varied.windows(2) {
                    let din = space.distance(&pair[0], &pair[1])?;
                    if din <= 0.0 {
                        continue;
                    }
                    let a = splice(ctx, position, &pair[0]);
                    let b = splice(ctx, position, &pair[1]);
                    let dim = space
                        .distance(&p.mapping().eval(&a)?, &p.mapping().eval(&b)?)?;
                    rec.tested += 1;
                    if dim > factor * din {
                        rec.verdict = Verdict::Fail;
                        rec.witness = Some(Witness::Continuity {
                            which: "mapping",
                            from: a,
                            to: b,
                            input_distance: din,
                            image_distance: dim,
                            factor,
                        });
                        rec.detail = format!(
                            "mapping jumped at grid scale in coordinate {position} (factor {factor:?})"
                        );
                        return Ok(rec);
                    }
                }
            }
        }
    }
    rec.detail = format!(
        "image distances stayed within {factor:?} x input distance over {} probes{}",
        rec.tested,
        match (p.assumption(), p.g().is_some()) {
            (AssumptionMode::OrderLimits, true) =>
                " (coincidence map only; the mapping itself leans on order limits)",
            (AssumptionMode::OrderLimits, false) => " (nothing to probe in this mode)",
            _ => "",
        }
    );
    Ok(rec)
}

/// Under the order-limits assumption, record what the carrier guarantees.
pub fn check_order_limits(p: &Problem) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("order_limits", Verdict::Pass);
    rec.exhaustive = true;
    if p.space().assumed_complete() {
        rec.detail = "monotone convergent chains stay comparable to their limits \
                      by construction on this carrier flavor"
            .into();
    } else {
        rec.verdict = Verdict::Skipped;
        rec.detail = "custom carrier: the order-limit property is assumed, not established".into();
    }
    Ok(rec)
}

/// Run every applicable check. `seed` is checked when provided and recorded
/// as skipped otherwise.
pub fn check_all(
    p: &Problem,
    seed: Option<&[Element]>,
    s: &Sampling,
) -> Result<HypothesisReport> {
    let mut checks = vec![
        check_space_audit(p, s)?,
        check_comparator_membership(p, s)?,
        check_mixed_monotone(p, s)?,
        check_contraction(p, s)?,
    ];
    match seed {
        Some(seed) => checks.push(check_seed(p, seed)?),
        None => {
            let mut rec = CheckRecord::new("seed", Verdict::Skipped);
            rec.detail = "no seed provided".into();
            checks.push(rec);
        }
    }
    checks.push(check_commutativity(p, s)?);
    checks.push(check_range_inclusion(p, s)?);
    if p.assumption() == AssumptionMode::OrderLimits {
        checks.push(check_order_limits(p)?);
    }
    checks.push(check_continuity(p, s)?);
    Ok(HypothesisReport {
        checks,
        sampling: s.describe(),
        eps_check: s.effective_eps(p.space()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::RoleScheme;
    use crate::spaces::two_point_chain;

    /// The running quartet example: F(x,y,z,w) = (x - y + z - w)/8 + 1/2 on
    /// [0,1], phi(t) = t/2, identity coincidence map.
    pub(crate) fn quartet_mean_shift() -> Problem {
        Problem::new(
            Space::interval(0.0, 1.0, 21).unwrap(),
            Mapping::from_scalar(4, "(x - y + z - w)/8 + 1/2", |v| {
                (v[0] - v[1] + v[2] - v[3]) / 8.0 + 0.5
            }),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::quartet_alternating(),
        )
        .unwrap()
    }

    fn reals(xs: &[f64]) -> Vec<Element> {
        xs.iter().copied().map(Element::Real).collect()
    }

    #[test]
    fn mixed_monotone_passes_on_the_quartet_example() {
        let p = quartet_mean_shift();
        let rec = check_mixed_monotone(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);
        assert!(rec.tested > 0);
    }

    #[test]
    fn mixed_monotone_fails_with_witness_on_flipped_sign() {
        // F = (x + y)/4: increasing in the second coordinate, which the
        // pattern requires to be nonincreasing.
        let p = Problem::new(
            Space::interval(0.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(2, "(x + y)/4", |v| (v[0] + v[1]) / 4.0),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap();
        let rec = check_mixed_monotone(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
        let w = rec.witness.expect("fail verdicts carry witnesses");
        assert!(matches!(w, Witness::Monotone { position: 1, .. }));
        assert!(w.replay(&p, 0.0).unwrap());
    }

    #[test]
    fn constant_mapping_is_monotone_both_ways() {
        let p = Problem::new(
            Space::interval(0.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(4, "0.5", |_| 0.5),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::quartet_alternating(),
        )
        .unwrap();
        let rec = check_mixed_monotone(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
    }

    #[test]
    fn contraction_passes_on_the_quartet_example() {
        let p = quartet_mean_shift();
        let rec = check_contraction(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);
    }

    #[test]
    fn projection_fails_contraction_with_replayable_witness() {
        let p = Problem::new(
            Space::interval(0.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(4, "x", |v| v[0]),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::quartet_alternating(),
        )
        .unwrap();
        let rec = check_contraction(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
        let w = rec.witness.expect("fail verdicts carry witnesses");
        if let Witness::Contraction { lhs, rhs, .. } = &w {
            assert!(lhs > rhs);
        } else {
            panic!("wrong witness shape");
        }
        assert!(w.replay(&p, 1e-9).unwrap());
    }

    #[test]
    fn constant_mapping_contracts() {
        let p = Problem::new(
            Space::interval(0.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(4, "0.25", |_| 0.25),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::quartet_alternating(),
        )
        .unwrap();
        let rec = check_contraction(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
    }

    #[test]
    fn contraction_is_vacuous_on_an_orderless_space() {
        // Only reflexive pairs: no two distinct tuples are comparable.
        let space = Space::finite(
            vec!["0".into(), "1".into()],
            vec![vec![0.0, 1.0], vec![1.0, 0.0]],
            vec![vec![true, false], vec![false, true]],
        )
        .unwrap();
        let p = Problem::new(
            space,
            Mapping::finite_table(2, 2, vec![0, 0, 1, 1]).unwrap(),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap();
        let rec = check_contraction(&p, &Sampling::exhaustive()).unwrap();
        assert_eq!(rec.verdict, Verdict::Vacuous);
        assert!(rec.tested == 0);
    }

    #[test]
    fn seed_condition_passes_on_the_straddling_seed() {
        let p = quartet_mean_shift();
        let rec = check_seed(&p, &reals(&[0.25, 0.75, 0.25, 0.75])).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);
    }

    #[test]
    fn seed_condition_fails_reversed_with_first_coordinate_witness() {
        let p = quartet_mean_shift();
        let rec = check_seed(&p, &reals(&[0.75, 0.25, 0.75, 0.25])).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
        match rec.witness.expect("fail verdicts carry witnesses") {
            Witness::Seed {
                coordinate,
                g_value,
                f_value,
                ..
            } => {
                assert_eq!(coordinate, 0);
                // 0.75 is not <= F(0.75, 0.25, 0.75, 0.25) = 0.625.
                assert_eq!(g_value, Element::Real(0.75));
                assert_eq!(f_value, Element::Real(0.625));
            }
            _ => panic!("wrong witness shape"),
        }
    }

    #[test]
    fn fixed_point_is_a_valid_seed() {
        let p = quartet_mean_shift();
        let rec = check_seed(&p, &reals(&[0.5, 0.5, 0.5, 0.5])).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass);
    }

    #[test]
    fn commutativity_passes_for_scaling_g() {
        // g(x) = 3x commutes with F = (x - y + z - w)/12.
        let p = Problem::new(
            Space::interval(-1.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(4, "(x - y + z - w)/12", |v| {
                (v[0] - v[1] + v[2] - v[3]) / 12.0
            }),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::quartet_alternating(),
        )
        .unwrap()
        .with_g(UnaryMap::from_scalar("3x", |x| 3.0 * x).with_scalar_inverse(|v| v / 3.0));
        let rec = check_commutativity(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);
    }

    #[test]
    fn commutativity_fails_for_translation_g() {
        // g(x) = x + 1 does not commute with F = x·y (on a scalar carrier):
        // g(F) = xy + 1 but F(g, g) = (x+1)(y+1).
        let p = Problem::new(
            Space::interval(0.0, 1.0, 5).unwrap(),
            Mapping::from_scalar(2, "x*y", |v| v[0] * v[1]),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap()
        .with_g(UnaryMap::from_scalar("x + 1", |x| x + 1.0));
        let rec = check_commutativity(&p, &Sampling::grid(5)).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
        assert!(rec.witness.unwrap().replay(&p, 1e-9).unwrap());
    }

    #[test]
    fn commutativity_skipped_without_g() {
        let p = quartet_mean_shift();
        let rec = check_commutativity(&p, &Sampling::grid(5)).unwrap();
        assert_eq!(rec.verdict, Verdict::Skipped);
    }

    #[test]
    fn range_inclusion_uses_the_section_inverse() {
        let p = Problem::new(
            Space::interval(-1.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(4, "(x - y + z - w)/12", |v| {
                (v[0] - v[1] + v[2] - v[3]) / 12.0
            }),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::quartet_alternating(),
        )
        .unwrap()
        .with_g(UnaryMap::from_scalar("3x", |x| 3.0 * x).with_scalar_inverse(|v| v / 3.0));
        let rec = check_range_inclusion(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);
    }

    #[test]
    fn range_inclusion_is_unverifiable_without_inverse_on_reals() {
        let p = Problem::new(
            Space::interval(0.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(2, "x/2", |v| v[0] / 2.0),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap()
        .with_g(UnaryMap::from_scalar("x", |x| x));
        let rec = check_range_inclusion(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Unverifiable);
    }

    #[test]
    fn range_inclusion_enumerates_finite_g_images() {
        // g collapses everything to element 0, but F only produces 0, so the
        // inclusion holds.
        let p = Problem::new(
            two_point_chain(),
            Mapping::finite_table(2, 2, vec![0, 0, 0, 0]).unwrap(),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap()
        .with_g(UnaryMap::finite_table(2, vec![0, 0], None).unwrap());
        let rec = check_range_inclusion(&p, &Sampling::exhaustive()).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);

        // But a mapping that ever produces 1 escapes g's image.
        let p_bad = Problem::new(
            two_point_chain(),
            Mapping::finite_table(2, 2, vec![0, 0, 0, 1]).unwrap(),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap()
        .with_g(UnaryMap::finite_table(2, vec![0, 0], None).unwrap());
        let rec = check_range_inclusion(&p_bad, &Sampling::exhaustive()).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
        assert!(rec.witness.unwrap().replay(&p_bad, 0.0).unwrap());
    }

    #[test]
    fn range_inclusion_flags_escaping_values_without_g() {
        // F = x + y leaves [0, 1].
        let p = Problem::new(
            Space::interval(0.0, 1.0, 9).unwrap(),
            Mapping::from_scalar(2, "x + y", |v| v[0] + v[1]),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap();
        let rec = check_range_inclusion(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
    }

    #[test]
    fn continuity_passes_for_smooth_data_and_fails_for_jumps() {
        let p = quartet_mean_shift();
        let rec = check_continuity(&p, &Sampling::grid(9)).unwrap();
        assert_eq!(rec.verdict, Verdict::Pass, "{}", rec.detail);

        let jumpy = Problem::new(
            Space::interval(0.0, 1.0, 21).unwrap(),
            Mapping::from_scalar(2, "step at 1/2", |v| {
                if v[0] < 0.5 {
                    0.0
                } else {
                    1.0
                }
            }),
            Comparator::linear(0.5).unwrap(),
            RoleScheme::coupled(),
        )
        .unwrap();
        let rec = check_continuity(&jumpy, &Sampling::grid(21)).unwrap();
        assert_eq!(rec.verdict, Verdict::Fail);
        assert!(rec.witness.unwrap().replay(&jumpy, 0.0).unwrap());
    }

    #[test]
    fn check_all_passes_on_the_quartet_example() {
        let p = quartet_mean_shift();
        let seed = reals(&[0.25, 0.75, 0.25, 0.75]);
        let report = check_all(&p, Some(&seed), &Sampling::grid(21)).unwrap();
        assert!(report.gate_ok(), "checks: {:#?}", report.checks);
        assert!(report.find("contraction").is_some());
        assert!(report.find("seed").unwrap().verdict == Verdict::Pass);
    }

    #[test]
    fn verdict_monotone_in_the_comparator() {
        // If the inequality holds with phi₁ it holds with a pointwise
        // larger phi₂.
        let space = Space::interval(0.0, 1.0, 9).unwrap();
        let mk = |k: f64| {
            Problem::new(
                space.clone(),
                Mapping::from_scalar(4, "mean shift", |v| {
                    (v[0] - v[1] + v[2] - v[3]) / 8.0 + 0.5
                }),
                Comparator::linear(k).unwrap(),
                RoleScheme::quartet_alternating(),
            )
            .unwrap()
        };
        let small = check_contraction(&mk(0.5), &Sampling::grid(9)).unwrap();
        let large = check_contraction(&mk(0.75), &Sampling::grid(9)).unwrap();
        assert_eq!(small.verdict, Verdict::Pass);
        assert_eq!(large.verdict, Verdict::Pass);
    }

    #[test]
    fn mapping_arity_is_enforced() {
        let p = quartet_mean_shift();
        assert!(matches!(
            p.mapping().eval(&reals(&[0.0, 0.0])),
            Err(Error::ArityMismatch { expected: 4, got: 2 })
        ));
    }
}
