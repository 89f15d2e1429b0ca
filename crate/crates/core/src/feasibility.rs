//! Does any polarization make `M_{E,V}` semistable against the catalog?
//!
//! Every catalog entry `F` gives the linear condition `μ_w(F) <= μ_w(M)` on
//! the weights. Together with `w_i > 0` and `Σ w_i = 1` this is a small
//! rational feasibility problem, decided here by Fourier–Motzkin elimination.
//!
//! ## Algorithm
//!
//! 1. Substitute `w_n = 1 - (w_1 + ... + w_{n-1})` into every constraint.
//! 2. Eliminate `w_{n-1}, ..., w_1` in that order. Each derived row remembers
//!    the non-negative multiplier of every source constraint it came from; a
//!    row combined from a strict parent is strict.
//! 3. If a variable-free row `0 <= c` with `c < 0` (or `0 < c` with `c <= 0`)
//!    survives, its multipliers are a Farkas certificate. Otherwise
//!    back-substitute `w_1, w_2, ...` choosing the midpoint of each feasible
//!    interval.
//!
//! Certificates are checked independently by [`Certificate::verify`], which
//! only re-adds the source constraints in `n` variables.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::Destabilizer;
use crate::curve::CombCurve;
use crate::error::{Error, Result};
use crate::numerics::{syzygy_multisheaf, GeneratedPairData};
use crate::polarization::{Polarization, StabilityContext};
use crate::rational::{format, int, primitive_scale, Rational};

/// Where a source constraint comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", content = "component", rename_all = "snake_case")]
pub enum Source {
    /// Semistability against the catalog entry on component `i`.
    Catalog(usize),
    /// The open simplex facet `w_i > 0`.
    Positive(usize),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Catalog(i) => write!(f, "C{i}"),
            Source::Positive(i) => write!(f, "P{i}"),
        }
    }
}

/// `Σ coefficients_i · w_i  (<= or <)  bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coefficients: Vec<Rational>,
    pub bound: Rational,
    pub strict: bool,
    pub provenance: BTreeSet<Source>,
}

impl LinearConstraint {
    pub fn is_satisfied_by(&self, w: &[Rational]) -> bool {
        let lhs: Rational = self.coefficients.iter().zip(w).map(|(a, x)| a * x).sum();
        if self.strict {
            lhs < self.bound
        } else {
            lhs <= self.bound
        }
    }

    pub fn label(&self) -> String {
        let tags: Vec<_> = self.provenance.iter().map(Source::to_string).collect();
        tags.join("+")
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let var = format!("w{}", i + 1);
            let term = if a.is_one() {
                var
            } else if *a == -Rational::one() {
                format!("-{var}")
            } else {
                format!("{}*{var}", format(a))
            };
            terms.push(term);
        }
        let lhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        let op = if self.strict { "<" } else { "<=" };
        write!(f, "{lhs} {op} {}", format(&self.bound))
    }
}

/// Constraints on the weights of an `n`-component polarization. The simplex
/// equation `Σ w_i = 1` is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub n: usize,
    pub constraints: Vec<LinearConstraint>,
}

impl ConstraintSystem {
    pub fn new(n: usize, constraints: Vec<LinearConstraint>) -> Result<Self> {
        if n < 2 {
            return Err(Error::validation("n", "n >= 2 required"));
        }
        for c in &constraints {
            if c.coefficients.len() != n {
                return Err(Error::mismatch(
                    "constraint coefficients",
                    n,
                    c.coefficients.len(),
                ));
            }
        }
        Ok(Self { n, constraints })
    }

    /// Only the open simplex: `w_i > 0` for every `i`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, positivity_constraints(n))
    }

    pub fn catalog_constraints(&self) -> impl Iterator<Item = (usize, &LinearConstraint)> {
        self.constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| c.provenance.iter().any(|s| matches!(s, Source::Catalog(_))))
    }

    pub fn is_satisfied_by(&self, w: &Polarization) -> bool {
        w.n() == self.n
            && self
                .constraints
                .iter()
                .all(|c| c.is_satisfied_by(w.weights()))
    }
}

fn positivity_constraints(n: usize) -> Vec<LinearConstraint> {
    (1..=n)
        .map(|i| {
            let mut coefficients = vec![Rational::zero(); n];
            coefficients[i - 1] = -Rational::one();
            LinearConstraint {
                coefficients,
                bound: Rational::zero(),
                strict: true,
                provenance: BTreeSet::from([Source::Positive(i)]),
            }
        })
        .collect()
}

/// Turns each catalog entry `F` into `μ_w(F) <= μ_w(M)` and adds `w_i > 0`.
///
/// Cross-multiplying by the positive weighted ranks gives
/// `-χ(M)·Σ r_i^F w_i <= -(l - r)·χ(F)`; the row is divided by the gcd of the
/// multirank of `F`. For the kernel twists this is
/// `((l-r)(p_a-1) + d)·w_i <= (l-r)·g_i` on a tooth and
/// `((l-r)(p_a-1) + d)·w_n <= (l-r)(g_n + n - 2)` on the base.
pub fn build_constraint_system(
    curve: &CombCurve,
    pair: &GeneratedPairData,
    catalog: &[Destabilizer],
) -> Result<ConstraintSystem> {
    let syzygy = syzygy_multisheaf(curve, pair)?;
    let n = curve.n();
    let minus_chi_m = int(-syzygy.sheaf.chi());
    let syz_rank = int(pair.syzygy_rank());
    let mut constraints = Vec::with_capacity(catalog.len() + n);
    for entry in catalog {
        let ranks = entry.sheaf.multirank();
        if ranks.len() != n {
            return Err(Error::mismatch("catalog multirank", n, ranks.len()));
        }
        let content = ranks
            .iter()
            .fold(0u32, |acc, &r| num_integer::Integer::gcd(&acc, &r));
        let content = int(i64::from(content.max(1)));
        let coefficients = ranks
            .iter()
            .map(|&r| &minus_chi_m * int(i64::from(r)) / &content)
            .collect();
        let bound = -(&syz_rank * int(entry.sheaf.chi())) / &content;
        constraints.push(LinearConstraint {
            coefficients,
            bound,
            strict: false,
            provenance: BTreeSet::from([Source::Catalog(entry.source_component)]),
        });
    }
    constraints.extend(positivity_constraints(n));
    ConstraintSystem::new(n, constraints)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateTerm {
    /// Index of the source constraint in the system.
    pub index: usize,
    pub provenance: BTreeSet<Source>,
    pub multiplier: Rational,
}

/// Non-negative multipliers on source constraints whose sum, together with
/// `Σ w_i = 1`, is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub terms: Vec<CertificateTerm>,
}

/// The false statement `lhs <= rhs` (or `lhs < rhs`) a certificate derives.
///
/// `lhs` is the common coefficient of every `w_i` in the combination, which
/// becomes a constant through `Σ w_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contradiction {
    pub lhs: Rational,
    pub rhs: Rational,
    pub strict: bool,
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.strict { "<" } else { "<=" };
        write!(f, "{} {op} {}", format(&self.lhs), format(&self.rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate references constraint {0}, which does not exist")]
    UnknownConstraint(usize),
    #[error("provenance of term {0} does not match the system")]
    ProvenanceMismatch(usize),
    #[error("multiplier of term {0} is negative")]
    NegativeMultiplier(usize),
    #[error("combination leaves w{0} with a coefficient different from w1")]
    NotConstant(usize),
    #[error("combination `{0}` is not a contradiction")]
    NotContradiction(String),
}

impl Certificate {
    /// Re-adds the referenced constraints and checks that the result is false.
    pub fn verify(&self, system: &ConstraintSystem) -> Result<Contradiction, CertificateError> {
        let mut coefficients = vec![Rational::zero(); system.n];
        let mut rhs = Rational::zero();
        let mut strict = false;
        for (t, term) in self.terms.iter().enumerate() {
            let c = system
                .constraints
                .get(term.index)
                .ok_or(CertificateError::UnknownConstraint(term.index))?;
            if c.provenance != term.provenance {
                return Err(CertificateError::ProvenanceMismatch(t));
            }
            if term.multiplier.is_negative() {
                return Err(CertificateError::NegativeMultiplier(t));
            }
            if term.multiplier.is_zero() {
                continue;
            }
            for (acc, a) in coefficients.iter_mut().zip(&c.coefficients) {
                *acc += &term.multiplier * a;
            }
            rhs += &term.multiplier * &c.bound;
            strict |= c.strict;
        }
        // Σ a_i w_i = μ Σ w_i = μ needs a constant coefficient vector.
        let lhs = coefficients[0].clone();
        if let Some(i) = coefficients.iter().position(|a| *a != lhs) {
            return Err(CertificateError::NotConstant(i + 1));
        }
        let contradiction = Contradiction { lhs, rhs, strict };
        let false_statement = contradiction.lhs > contradiction.rhs
            || (contradiction.strict && contradiction.lhs == contradiction.rhs);
        if false_statement {
            Ok(contradiction)
        } else {
            Err(CertificateError::NotContradiction(
                contradiction.to_string(),
            ))
        }
    }

    /// Renders e.g. `1·C1 + 1·C2`.
    pub fn combination(&self) -> String {
        let parts: Vec<_> = self
            .terms
            .iter()
            .map(|t| {
                let tags: Vec<_> = t.provenance.iter().map(Source::to_string).collect();
                format!("{}·{}", format(&t.multiplier), tags.join("+"))
            })
            .collect();
        parts.join(" + ")
    }

    pub fn is_unit(&self) -> bool {
        self.terms.iter().all(|t| t.multiplier.is_one())
    }

    pub fn uses_only_catalog(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.provenance.iter().all(|s| matches!(s, Source::Catalog(_))))
    }
}

/// The certificate that adds every catalog constraint with multiplier one.
///
/// Returns `None` unless each of the `n` components carries exactly one
/// catalog constraint. Whether it is valid is for [`Certificate::verify`] to
/// say; it is whenever `d > (n - 1)(l - r)`.
pub fn summation_certificate(system: &ConstraintSystem) -> Option<Certificate> {
    let mut components = BTreeSet::new();
    let mut terms = Vec::new();
    for (index, c) in system.catalog_constraints() {
        for s in &c.provenance {
            if let Source::Catalog(i) = s {
                if !components.insert(*i) {
                    return None;
                }
            }
        }
        terms.push(CertificateTerm {
            index,
            provenance: c.provenance.clone(),
            multiplier: Rational::one(),
        });
    }
    (components.len() == system.n).then_some(Certificate { terms })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible(Polarization),
    Infeasible(Certificate),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }
}

/// A row over the reduced variables `w_1..w_{n-1}`, with multipliers on the
/// source constraints it was derived from.
#[derive(Debug, Clone)]
struct Row {
    coefficients: Vec<Rational>,
    bound: Rational,
    strict: bool,
    multipliers: BTreeMap<usize, Rational>,
}

impl Row {
    fn is_variable_free(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    fn is_trivially_true(&self) -> bool {
        self.is_variable_free()
            && (self.bound.is_positive() || (!self.strict && self.bound.is_zero()))
    }

    fn scale(&mut self, s: &Rational) {
        for a in &mut self.coefficients {
            *a *= s;
        }
        self.bound *= s;
        for m in self.multipliers.values_mut() {
            *m *= s;
        }
    }

    fn normalize(&mut self) {
        let s = if !self.is_variable_free() {
            primitive_scale(self.coefficients.iter())
        } else if !self.bound.is_zero() {
            self.bound.abs().recip()
        } else {
            Rational::one()
        };
        self.scale(&s);
    }

    fn positivity_uses(&self, system: &ConstraintSystem) -> usize {
        self.multipliers
            .keys()
            .filter(|&&j| {
                system.constraints[j]
                    .provenance
                    .iter()
                    .any(|s| matches!(s, Source::Positive(_)))
            })
            .count()
    }
}

fn substitute(index: usize, c: &LinearConstraint, n: usize) -> Row {
    let last = &c.coefficients[n - 1];
    let mut row = Row {
        coefficients: c.coefficients[..n - 1].iter().map(|a| a - last).collect(),
        bound: &c.bound - last,
        strict: c.strict,
        multipliers: BTreeMap::from([(index, Rational::one())]),
    };
    row.normalize();
    row
}

fn combine(upper: &Row, lower: &Row, var: usize) -> Row {
    // upper has a positive coefficient on `var`, lower a negative one
    let a = &upper.coefficients[var];
    let b = -&lower.coefficients[var];
    let coefficients = upper
        .coefficients
        .iter()
        .zip(&lower.coefficients)
        .map(|(u, l)| &b * u + a * l)
        .collect();
    let mut multipliers = BTreeMap::new();
    for (&j, m) in &upper.multipliers {
        *multipliers.entry(j).or_insert_with(Rational::zero) += &b * m;
    }
    for (&j, m) in &lower.multipliers {
        *multipliers.entry(j).or_insert_with(Rational::zero) += a * m;
    }
    let mut row = Row {
        coefficients,
        bound: &b * &upper.bound + a * &lower.bound,
        strict: upper.strict || lower.strict,
        multipliers,
    };
    row.normalize();
    row
}

/// Drops implied rows: keeps, per direction, the smallest bound (strict wins ties).
fn prune(rows: Vec<Row>) -> Vec<Row> {
    let mut best: Vec<Row> = Vec::new();
    let mut by_direction: HashMap<Vec<Rational>, usize> = HashMap::new();
    for row in rows {
        if row.is_trivially_true() {
            continue;
        }
        match by_direction.get(&row.coefficients) {
            None => {
                by_direction.insert(row.coefficients.clone(), best.len());
                best.push(row);
            }
            Some(&k) => {
                let kept = &best[k];
                let stronger = row.bound < kept.bound
                    || (row.bound == kept.bound && row.strict && !kept.strict)
                    || (row.bound == kept.bound
                        && row.strict == kept.strict
                        && row.multipliers.len() < kept.multipliers.len());
                if stronger {
                    best[k] = row;
                }
            }
        }
    }
    best
}

fn eliminate(rows: &[Row], var: usize) -> Vec<Row> {
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let mut next = Vec::new();
    for row in rows {
        match row.coefficients[var].cmp(&Rational::zero()) {
            std::cmp::Ordering::Greater => upper.push(row),
            std::cmp::Ordering::Less => lower.push(row),
            std::cmp::Ordering::Equal => next.push(row.clone()),
        }
    }
    for u in &upper {
        for l in &lower {
            next.push(combine(u, l, var));
        }
    }
    prune(next)
}

/// Decides whether the system has a solution in the open simplex.
pub fn decide(system: &ConstraintSystem) -> Result<FeasibilityResult> {
    let n = system.n;
    let vars = n - 1;
    let initial: Vec<Row> = system
        .constraints
        .iter()
        .enumerate()
        .map(|(j, c)| substitute(j, c, n))
        .collect();

    // stages[k] involves only w_1..w_k
    let mut stages = vec![Vec::new(); vars + 1];
    stages[vars] = prune(initial);
    for var in (0..vars).rev() {
        stages[var] = eliminate(&stages[var + 1], var);
    }

    let contradiction = stages[0]
        .iter()
        .enumerate()
        .min_by_key(|(k, row)| (row.positivity_uses(system), row.multipliers.len(), *k));
    if let Some((_, row)) = contradiction {
        let certificate = certificate_from(row, system);
        certificate.verify(system).map_err(|e| {
            Error::Inconsistent(format!("elimination produced a bad certificate: {e}"))
        })?;
        return Ok(FeasibilityResult::Infeasible(certificate));
    }

    let witness = back_substitute(&stages, n)?;
    if !system.is_satisfied_by(&witness) {
        return Err(Error::Inconsistent(format!(
            "back-substituted point {witness} violates the system"
        )));
    }
    Ok(FeasibilityResult::Feasible(witness))
}

fn certificate_from(row: &Row, system: &ConstraintSystem) -> Certificate {
    let values: Vec<Rational> = row.multipliers.values().cloned().collect();
    let s = primitive_scale(values.iter());
    let terms = row
        .multipliers
        .iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(&index, m)| CertificateTerm {
            index,
            provenance: system.constraints[index].provenance.clone(),
            multiplier: m * &s,
        })
        .collect();
    Certificate { terms }
}

fn back_substitute(stages: &[Vec<Row>], n: usize) -> Result<Polarization> {
    let vars = n - 1;
    let mut point: Vec<Rational> = Vec::with_capacity(n);
    for var in 0..vars {
        // (value, strict)
        let mut lo: Option<(Rational, bool)> = None;
        let mut hi: Option<(Rational, bool)> = None;
        for row in &stages[var + 1] {
            let a = &row.coefficients[var];
            if a.is_zero() {
                continue;
            }
            let fixed: Rational = row.coefficients[..var]
                .iter()
                .zip(&point)
                .map(|(c, x)| c * x)
                .sum();
            let limit = (&row.bound - fixed) / a;
            if a.is_positive() {
                let tighter = match &hi {
                    None => true,
                    Some((v, s)) => limit < *v || (limit == *v && row.strict && !s),
                };
                if tighter {
                    hi = Some((limit, row.strict));
                }
            } else {
                let tighter = match &lo {
                    None => true,
                    Some((v, s)) => limit > *v || (limit == *v && row.strict && !s),
                };
                if tighter {
                    lo = Some((limit, row.strict));
                }
            }
        }
        let value = match (lo, hi) {
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => (l + h) / int(2),
            (Some((l, _)), None) => l + Rational::one(),
            (None, Some((h, _))) => h - Rational::one(),
            (None, None) => Rational::zero(),
        };
        point.push(value);
    }
    let rest: Rational = point.iter().sum();
    point.push(Rational::one() - rest);
    Polarization::new(point)
        .map_err(|e| Error::Inconsistent(format!("back-substitution left the simplex: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridResult {
    FoundWitness(Polarization),
    NoneFound,
}

/// Scans `w = a/D` with positive integers `a_i` summing to `D`, in
/// lexicographic order, for a point whose verdict is not `UnstableAt`.
///
/// Independent of [`decide`]: it only evaluates fixed-polarization verdicts.
pub fn grid_oracle(
    curve: &CombCurve,
    pair: &GeneratedPairData,
    catalog: &[Destabilizer],
    denominator: usize,
) -> Result<GridResult> {
    let n = curve.n();
    if denominator < n {
        return Err(Error::validation(
            "denominator",
            format!("denominator >= n required, got {denominator} with n = {n}"),
        ));
    }
    let context = StabilityContext::new(curve, pair, catalog)?;
    // Integer form of μ_w(F) > μ(M) at w = a / D, with both denominators positive:
    // χ(F)·D·(l - r) > χ(M)·Σ r_i a_i.
    let syzygy = syzygy_multisheaf(curve, pair)?.sheaf;
    let tests: Vec<(Vec<i128>, i128)> = catalog
        .iter()
        .map(|f| {
            let ranks = f.sheaf.multirank().iter().map(|&r| i128::from(r)).collect();
            let lhs =
                i128::from(f.sheaf.chi()) * denominator as i128 * i128::from(pair.syzygy_rank());
            (ranks, lhs)
        })
        .collect();
    let grid = Grid {
        tests,
        chi_m: i128::from(syzygy.chi()),
        n,
    };
    let max_first = denominator - (n - 1);
    // find_map_first keeps the lexicographically first hit regardless of scheduling
    let found = (1..=max_first)
        .into_par_iter()
        .map(|first| {
            let mut parts = vec![first];
            grid.scan(denominator - first, &mut parts)
        })
        .find_map_first(|hit| hit);
    let Some(parts) = found else {
        return Ok(GridResult::NoneFound);
    };
    let d = int(denominator as i64);
    let w = Polarization::new(parts.iter().map(|&a| int(a as i64) / &d).collect())?;
    // the exact check must agree with the integer scan
    if context.verdict_at(&w)?.is_unstable() {
        return Err(Error::Inconsistent(format!(
            "grid point {w} passes the integer test but is destabilized"
        )));
    }
    Ok(GridResult::FoundWitness(w))
}

struct Grid {
    tests: Vec<(Vec<i128>, i128)>,
    chi_m: i128,
    n: usize,
}

impl Grid {
    fn passes(&self, parts: &[usize]) -> bool {
        self.tests.iter().all(|(ranks, lhs)| {
            let weighted: i128 = ranks.iter().zip(parts).map(|(r, &a)| r * a as i128).sum();
            *lhs <= self.chi_m * weighted
        })
    }

    fn scan(&self, remaining: usize, parts: &mut Vec<usize>) -> Option<Vec<usize>> {
        if parts.len() == self.n - 1 {
            parts.push(remaining);
            let hit = self.passes(parts).then(|| parts.clone());
            parts.pop();
            return hit;
        }
        let left = self.n - 1 - parts.len();
        for a in 1..=remaining - left {
            parts.push(a);
            let hit = self.scan(remaining - a, parts);
            parts.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Numerical hypotheses of the strong instability theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremHypotheses {
    /// `d / (l - r)`.
    pub ratio: Rational,
    /// `n - 1`.
    pub threshold: i64,
    /// Every `ker(ρ_i|_V)` is non-zero.
    pub kernels_nonzero: bool,
}

impl TheoremHypotheses {
    pub fn new(curve: &CombCurve, pair: &GeneratedPairData) -> Self {
        Self {
            ratio: Rational::new(pair.total_degree().into(), pair.syzygy_rank().into()),
            threshold: curve.n() as i64 - 1,
            kernels_nonzero: pair.kernel_ranks().iter().all(|&t| t > 0),
        }
    }

    pub fn hold(&self) -> bool {
        self.kernels_nonzero && self.ratio > int(self.threshold)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongVerdict {
    /// No polarization survives the catalog.
    StronglyUnstable(Certificate),
    /// This polarization passes every catalog test.
    NotDisprovedByCatalog(Polarization),
}

#[derive(Debug, Clone)]
pub struct StrongInstabilityReport {
    pub system: ConstraintSystem,
    pub verdict: StrongVerdict,
    pub hypotheses: TheoremHypotheses,
}

/// Runs the full decision and checks it against the theorem's hypotheses.
///
/// Fails with [`Error::Inconsistent`] if the hypotheses hold but a witness
/// polarization is found, or if a witness or certificate does not check out.
pub fn strong_instability_report(
    curve: &CombCurve,
    pair: &GeneratedPairData,
) -> Result<StrongInstabilityReport> {
    let catalog = crate::catalog::build_catalog(curve, pair)?;
    let system = build_constraint_system(curve, pair, &catalog)?;
    let hypotheses = TheoremHypotheses::new(curve, pair);
    let verdict = match decide(&system)? {
        FeasibilityResult::Infeasible(certificate) => StrongVerdict::StronglyUnstable(certificate),
        FeasibilityResult::Feasible(w) => {
            let verdict = StabilityContext::new(curve, pair, &catalog)?.verdict_at(&w)?;
            if verdict.is_unstable() {
                return Err(Error::Inconsistent(format!(
                    "witness {w} is destabilized by the catalog"
                )));
            }
            StrongVerdict::NotDisprovedByCatalog(w)
        }
    };
    if hypotheses.hold() && !matches!(verdict, StrongVerdict::StronglyUnstable(_)) {
        return Err(Error::Inconsistent(
            "theorem hypotheses hold but a semistable polarization was found".into(),
        ));
    }
    Ok(StrongInstabilityReport {
        system,
        verdict,
        hypotheses,
    })
}
