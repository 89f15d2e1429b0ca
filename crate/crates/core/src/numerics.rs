//! Numerical invariants of generated pairs and of pure one-dimensional sheaves.
//!
//! Nothing here computes cohomology. Dimensions such as `l_i` and the
//! intersection dimensions `k_i = dim V ∩ H^0(E_i(-p_i))` are inputs that are
//! only checked for mutual consistency.

use serde::{Deserialize, Serialize};

use crate::curve::CombCurve;
use crate::error::{Error, Result};

/// Numerical type `(r, d_i, l, l_i)` of a generated pair `(E, V)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratedPairData {
    rank: i64,
    degrees: Vec<i64>,
    l: i64,
    section_dims: Vec<i64>,
    total_degree: i64,
}

impl GeneratedPairData {
    /// `section_dims[i]` is `l_i = dim V_i`, the image of `V` in `H^0(E_i)`.
    pub fn new(rank: i64, degrees: Vec<i64>, l: i64, section_dims: Vec<i64>) -> Result<Self> {
        if rank < 1 {
            return Err(Error::validation(
                "rank",
                format!("r >= 1 required, got {rank}"),
            ));
        }
        if l <= rank {
            return Err(Error::validation(
                "l",
                format!("l > r required, got l = {l}, r = {rank}"),
            ));
        }
        if degrees.len() != section_dims.len() {
            return Err(Error::mismatch(
                "section_dims",
                degrees.len(),
                section_dims.len(),
            ));
        }
        if degrees.len() < 2 {
            return Err(Error::validation(
                "degrees",
                "at least two components required",
            ));
        }
        for (i, &d) in degrees.iter().enumerate() {
            if d < 0 {
                return Err(Error::validation(
                    "degrees",
                    format!("d_{} = {d} must be >= 0", i + 1),
                ));
            }
        }
        for (i, &li) in section_dims.iter().enumerate() {
            if li < rank || li > l {
                return Err(Error::validation(
                    "section_dims",
                    format!(
                        "r <= l_{} <= l required, got l_{} = {li} with r = {rank}, l = {l}",
                        i + 1,
                        i + 1
                    ),
                ));
            }
        }
        let total_degree = degrees.iter().sum();
        Ok(Self {
            rank,
            degrees,
            l,
            section_dims,
            total_degree,
        })
    }

    /// Builds the pair from kernel ranks `t_i = l - l_i` instead of `l_i`.
    pub fn from_kernel_ranks(
        rank: i64,
        degrees: Vec<i64>,
        l: i64,
        kernel_ranks: &[i64],
    ) -> Result<Self> {
        for (i, &t) in kernel_ranks.iter().enumerate() {
            if t < 0 || t > l - rank {
                return Err(Error::validation(
                    "kernel_ranks",
                    format!(
                        "0 <= t_{} <= l - r required, got t_{} = {t} with l - r = {}",
                        i + 1,
                        i + 1,
                        l - rank
                    ),
                ));
            }
        }
        let section_dims = kernel_ranks.iter().map(|t| l - t).collect();
        Self::new(rank, degrees, l, section_dims)
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn section_dims(&self) -> &[i64] {
        &self.section_dims
    }

    /// `d = d_1 + ... + d_n`.
    pub fn total_degree(&self) -> i64 {
        self.total_degree
    }

    /// Rank `l - r` of the syzygy bundle.
    pub fn syzygy_rank(&self) -> i64 {
        self.l - self.rank
    }

    /// `t_i = rk ker(ρ_i|_V) = l - l_i` for a 1-based index `i`.
    pub fn kernel_rank(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(self.l - self.section_dims[i - 1])
    }

    pub fn kernel_ranks(&self) -> Vec<i64> {
        self.section_dims.iter().map(|li| self.l - li).collect()
    }

    pub(crate) fn check_curve(&self, curve: &CombCurve) -> Result<()> {
        if curve.n() != self.n() {
            return Err(Error::mismatch("degrees", curve.n(), self.n()));
        }
        Ok(())
    }
}

/// Numerical proxy for a pure sheaf of dimension one: multirank and `χ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiSheaf {
    multirank: Vec<u32>,
    chi: i64,
    label: String,
}

impl MultiSheaf {
    pub fn new(multirank: Vec<u32>, chi: i64, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if multirank.iter().all(|&r| r == 0) {
            return Err(Error::MalformedSheaf {
                label,
                message: "multirank is zero; a pure sheaf of dimension one has some positive rank"
                    .into(),
            });
        }
        Ok(Self {
            multirank,
            chi,
            label,
        })
    }

    /// Locally free sheaf of constant rank given by its multidegree.
    ///
    /// Uses `χ = Σ (d_i + r(1 - g_i)) - r(n - 1)`. Sheaves whose multirank is
    /// not constant are refused, since their `χ` needs torsion corrections at
    /// the nodes that the multidegree alone does not determine.
    pub fn from_multidegree(
        curve: &CombCurve,
        multirank: Vec<u32>,
        multidegree: &[i64],
        label: impl Into<String>,
    ) -> Result<Self> {
        let label = label.into();
        if multirank.len() != curve.n() {
            return Err(Error::mismatch("multirank", curve.n(), multirank.len()));
        }
        if multidegree.len() != curve.n() {
            return Err(Error::mismatch("multidegree", curve.n(), multidegree.len()));
        }
        let r = multirank[0];
        if multirank.iter().any(|&x| x != r) {
            return Err(Error::MalformedSheaf {
                label,
                message: "multidegree input is only accepted for constant multirank".into(),
            });
        }
        let r = i64::from(r);
        let chi = curve
            .genera()
            .iter()
            .zip(multidegree)
            .map(|(&g, &d)| d + r * (1 - i64::from(g)))
            .sum::<i64>()
            - r * curve.node_count() as i64;
        Self::new(multirank, chi, label)
    }

    pub fn multirank(&self) -> &[u32] {
        &self.multirank
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// `χ(E)`, computed both globally and component-wise; the two must agree.
pub fn chi_bundle(curve: &CombCurve, pair: &GeneratedPairData) -> Result<i64> {
    pair.check_curve(curve)?;
    let r = pair.rank();
    let global = pair.total_degree() + r * curve.chi_structure_sheaf();
    let by_component = curve
        .genera()
        .iter()
        .zip(pair.degrees())
        .map(|(&g, &d)| d + r * (1 - i64::from(g)))
        .sum::<i64>()
        - r * curve.node_count() as i64;
    if global != by_component {
        return Err(Error::Inconsistent(format!(
            "chi(E): global form {global} differs from component-wise form {by_component}"
        )));
    }
    Ok(global)
}

/// Sign class of `χ(M_{E,V})`.
///
/// A genuine generated pair has `h^0(M) = 0`, so `χ(M) <= 0`. A zero value is
/// the boundary regime (for example `V = H^0(E)` on a rational comb); a
/// positive value cannot come from an actual pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiSign {
    Negative,
    Boundary,
    NotRealizable,
}

/// Invariants of the syzygy bundle together with the sign flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syzygy {
    pub sheaf: MultiSheaf,
    pub sign: ChiSign,
}

/// `M_{E,V}`: constant multirank `l - r` and `χ = (l - r)(1 - p_a) - d`.
///
/// The value is cross-checked against `l·χ(O_C) - χ(E)`.
pub fn syzygy_multisheaf(curve: &CombCurve, pair: &GeneratedPairData) -> Result<Syzygy> {
    let chi_e = chi_bundle(curve, pair)?;
    let rank = pair.syzygy_rank();
    let chi = rank * curve.chi_structure_sheaf() - pair.total_degree();
    let additive = pair.l() * curve.chi_structure_sheaf() - chi_e;
    if chi != additive {
        return Err(Error::Inconsistent(format!(
            "chi(M): closed form {chi} differs from l·chi(O_C) - chi(E) = {additive}"
        )));
    }
    let sign = match chi.signum() {
        -1 => ChiSign::Negative,
        0 => ChiSign::Boundary,
        _ => ChiSign::NotRealizable,
    };
    let sheaf = MultiSheaf::new(vec![rank as u32; curve.n()], chi, "M")?;
    Ok(Syzygy { sheaf, sign })
}

/// `t_n = Σ_{i<n} k_i` where `k_i = dim V ∩ H^0(E_i(-p_i))`.
pub fn base_kernel_from_intersections(curve: &CombCurve, intersections: &[i64]) -> Result<i64> {
    check_intersection_len(curve, intersections)?;
    for (i, &k) in intersections.iter().enumerate() {
        if k < 0 {
            return Err(Error::validation(
                "intersection_dims",
                format!("k_{} = {k} must be >= 0", i + 1),
            ));
        }
    }
    Ok(intersections.iter().sum())
}

/// Checks intersection dimensions against the kernel ranks of `pair`.
///
/// The base kernel is the direct sum of the intersections, so `t_n = Σ k_i`
/// exactly. For `i < n` the kernel of `ρ_i` contains the intersections of all
/// other teeth, which only gives the lower bound `t_i >= Σ_{j != i} k_j`.
pub fn check_intersections(
    curve: &CombCurve,
    pair: &GeneratedPairData,
    intersections: &[i64],
) -> Result<()> {
    pair.check_curve(curve)?;
    let base = base_kernel_from_intersections(curve, intersections)?;
    let n = curve.n();
    let t_n = pair.kernel_rank(n)?;
    if base != t_n {
        return Err(Error::validation(
            "intersection_dims",
            format!("sum of k_i is {base} but t_{n} = l - l_{n} = {t_n}"),
        ));
    }
    for i in 1..n {
        let others: i64 = base - intersections[i - 1];
        let t_i = pair.kernel_rank(i)?;
        if t_i < others {
            return Err(Error::validation(
                "intersection_dims",
                format!("t_{i} = {t_i} is below the {others} sections vanishing on C_{i}"),
            ));
        }
    }
    Ok(())
}

/// Whether two distinct teeth have non-zero intersection, which forces every
/// kernel `ker(ρ_i|_V)` to be non-zero.
///
/// With `n = 2` there is a single tooth, so the hypothesis never holds.
pub fn kernels_forced_nonzero(curve: &CombCurve, intersections: &[i64]) -> Result<bool> {
    check_intersection_len(curve, intersections)?;
    Ok(intersections.iter().filter(|&&k| k > 0).count() >= 2)
}

fn check_intersection_len(curve: &CombCurve, intersections: &[i64]) -> Result<()> {
    if intersections.len() != curve.node_count() {
        return Err(Error::mismatch(
            "intersection_dims",
            curve.node_count(),
            intersections.len(),
        ));
    }
    Ok(())
}
