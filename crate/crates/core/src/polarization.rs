//! Polarizations, polarized slopes and fixed-polarization verdicts.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::catalog::Destabilizer;
use crate::curve::CombCurve;
use crate::error::{Error, Result};
use crate::numerics::{syzygy_multisheaf, GeneratedPairData, MultiSheaf};
use crate::rational::{format, int, Rational};

/// Rational weights `w_i ∈ (0, 1)` with `Σ w_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polarization {
    weights: Vec<Rational>,
}

impl Polarization {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidPolarization(format!(
                "need at least two weights, got {}",
                weights.len()
            )));
        }
        for (i, w) in weights.iter().enumerate() {
            if !w.is_positive() || *w >= Rational::one() {
                return Err(Error::InvalidPolarization(format!(
                    "w_{} = {} must lie in the open interval (0, 1)",
                    i + 1,
                    format(w)
                )));
            }
        }
        let sum: Rational = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidPolarization(format!(
                "weights sum to {}, expected 1",
                format(&sum)
            )));
        }
        Ok(Self { weights })
    }

    /// `(1/n, ..., 1/n)`.
    pub fn uniform(n: usize) -> Result<Self> {
        let w = Rational::new(1.into(), (n as i64).into());
        Self::new(vec![w; n])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// `Σ w_i r_i`.
    pub fn weighted_rank(&self, sheaf: &MultiSheaf) -> Result<Rational> {
        if sheaf.multirank().len() != self.n() {
            return Err(Error::mismatch(
                "multirank",
                self.n(),
                sheaf.multirank().len(),
            ));
        }
        let total: Rational = self
            .weights
            .iter()
            .zip(sheaf.multirank())
            .map(|(w, &r)| w * int(i64::from(r)))
            .sum();
        if total.is_zero() {
            return Err(Error::MalformedSheaf {
                label: sheaf.label().to_string(),
                message: "zero multirank has no slope".into(),
            });
        }
        Ok(total)
    }
}

impl std::fmt::Display for Polarization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<_> = self.weights.iter().map(format).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `μ_w(F) = χ(F) / Σ w_i r_i`.
pub fn slope(sheaf: &MultiSheaf, w: &Polarization) -> Result<Rational> {
    Ok(int(sheaf.chi()) / w.weighted_rank(sheaf)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeComparison {
    pub left: MultiSheaf,
    pub right: MultiSheaf,
    pub relation: Ordering,
    /// `χ_L·ρ_R(w) - χ_R·ρ_L(w)` with `ρ_X(w) = Σ w_i r_i^X`.
    pub cross_product_gap: Rational,
}

/// Compares `μ_w(a)` with `μ_w(b)` by cross-multiplication.
pub fn compare_slopes(a: &MultiSheaf, b: &MultiSheaf, w: &Polarization) -> Result<SlopeComparison> {
    let rho_a = w.weighted_rank(a)?;
    let rho_b = w.weighted_rank(b)?;
    let gap = int(a.chi()) * rho_b - int(b.chi()) * rho_a;
    Ok(SlopeComparison {
        left: a.clone(),
        right: b.clone(),
        relation: gap.cmp(&Rational::zero()),
        cross_product_gap: gap,
    })
}

/// Catalog-relative verdict at a fixed polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The first catalog entry whose slope strictly exceeds `μ_w(M)`.
    UnstableAt(Destabilizer),
    /// No violation, but some entry attains `μ_w(M)`.
    CatalogSemistableAt,
    /// Every entry has slope strictly below `μ_w(M)`.
    CatalogStableAt,
}

impl Verdict {
    pub fn is_unstable(&self) -> bool {
        matches!(self, Verdict::UnstableAt(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::UnstableAt(_) => "unstable_at",
            Verdict::CatalogSemistableAt => "catalog_semistable_at",
            Verdict::CatalogStableAt => "catalog_stable_at",
        }
    }
}

/// Caches `μ(M)` so that many polarizations can be checked cheaply.
///
/// `M_{E,V}` has constant multirank `l - r`, so its slope is `χ(M)/(l - r)`
/// for every polarization.
#[derive(Debug, Clone)]
pub struct StabilityContext<'a> {
    n: usize,
    syzygy_slope: Rational,
    catalog: &'a [Destabilizer],
}

impl<'a> StabilityContext<'a> {
    pub fn new(
        curve: &CombCurve,
        pair: &GeneratedPairData,
        catalog: &'a [Destabilizer],
    ) -> Result<Self> {
        let syzygy = syzygy_multisheaf(curve, pair)?;
        let syzygy_slope = Rational::new(syzygy.sheaf.chi().into(), pair.syzygy_rank().into());
        Ok(Self {
            n: curve.n(),
            syzygy_slope,
            catalog,
        })
    }

    pub fn syzygy_slope(&self) -> &Rational {
        &self.syzygy_slope
    }

    pub fn verdict_at(&self, w: &Polarization) -> Result<Verdict> {
        if w.n() != self.n {
            return Err(Error::mismatch("polarization", self.n, w.n()));
        }
        let mut tie = false;
        for entry in self.catalog {
            match slope(&entry.sheaf, w)?.cmp(&self.syzygy_slope) {
                Ordering::Greater => return Ok(Verdict::UnstableAt(entry.clone())),
                Ordering::Equal => tie = true,
                Ordering::Less => {}
            }
        }
        Ok(if tie {
            Verdict::CatalogSemistableAt
        } else {
            Verdict::CatalogStableAt
        })
    }
}

pub fn verdict_at(
    w: &Polarization,
    curve: &CombCurve,
    pair: &GeneratedPairData,
    catalog: &[Destabilizer],
) -> Result<Verdict> {
    StabilityContext::new(curve, pair, catalog)?.verdict_at(w)
}
