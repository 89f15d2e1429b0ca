//! The fixed list of candidate destabilizing subsheaves of `M_{E,V}`.
//!
//! For a tooth `C_i` (`i < n`) the kernel `ker(ρ_i|_V) ⊗ O_{C_i}(-p_i)` sits
//! inside `M_{E,V}`; on the base the twist is by all nodes,
//! `ker(ρ_n|_V) ⊗ O_{C_n}(-p_1 - ... - p_{n-1})`. Each is `t_i` copies of a
//! line bundle on one component, so `χ` follows from Riemann–Roch there:
//! `χ(O_{C_i}(-D)) = -deg D + 1 - g_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::CombCurve;
use crate::error::Result;
use crate::numerics::{GeneratedPairData, MultiSheaf};
use crate::rational::{frac, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "component", rename_all = "snake_case")]
pub enum DestabilizerKind {
    /// `ker(ρ_i|_V) ⊗ O_{C_i}(-p_i)` on tooth `i`.
    KernelTwistNonBase(usize),
    /// `ker(ρ_n|_V) ⊗ O_{C_n}(-p_1 - ... - p_{n-1})` on the base.
    KernelTwistBase,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Destabilizer {
    pub sheaf: MultiSheaf,
    pub kind: DestabilizerKind,
    /// 1-based component carrying the sheaf.
    pub source_component: usize,
}

impl Destabilizer {
    pub fn kernel_rank(&self) -> u32 {
        self.sheaf.multirank()[self.source_component - 1]
    }
}

impl fmt::Display for Destabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sheaf.label())
    }
}

fn twist_label(i: usize, n: usize) -> String {
    if i < n {
        format!("ker(rho_{i})(x)O_C{i}(-p_{i})")
    } else {
        let nodes = match n - 1 {
            1 => "-p_1".to_string(),
            2 => "-p_1-p_2".to_string(),
            k => format!("-p_1-...-p_{k}"),
        };
        format!("ker(rho_{n})(x)O_C{n}({nodes})")
    }
}

/// Kernel twists with `t_i > 0`, in ascending component order (base last).
pub fn build_catalog(curve: &CombCurve, pair: &GeneratedPairData) -> Result<Vec<Destabilizer>> {
    pair.check_curve(curve)?;
    let n = curve.n();
    let mut catalog = Vec::new();
    for i in 1..=n {
        let t = pair.kernel_rank(i)?;
        if t == 0 {
            continue;
        }
        let g = i64::from(curve.genus(i)?);
        let twist_degree = curve.nodes_on(i)? as i64;
        // Riemann–Roch on C_i for the twist by the nodes lying on it.
        let chi_line = -twist_degree + 1 - g;
        let mut multirank = vec![0u32; n];
        multirank[i - 1] = t as u32;
        let kind = if i < n {
            DestabilizerKind::KernelTwistNonBase(i)
        } else {
            DestabilizerKind::KernelTwistBase
        };
        catalog.push(Destabilizer {
            sheaf: MultiSheaf::new(multirank, t * chi_line, twist_label(i, n))?,
            kind,
            source_component: i,
        });
    }
    Ok(catalog)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RestrictionVerdict {
    Unstable,
    Inconclusive,
}

/// Classical slope comparison on a single component `C_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub component: usize,
    pub kernel_rank: i64,
    pub degree: i64,
    /// Slope of the trivial subbundle `ker(ρ_i|_V) ⊗ O_{C_i}`; always zero.
    pub kernel_slope: Rational,
    /// `μ(M|_{C_i}) = -d_i / (l - r)`.
    pub restriction_slope: Rational,
    pub verdict: RestrictionVerdict,
}

/// `M|_{C_i}` is unstable as soon as `ker(ρ_i|_V)` is non-zero and `d_i > 0`.
pub fn restriction_slope_check(
    curve: &CombCurve,
    pair: &GeneratedPairData,
    i: usize,
) -> Result<RestrictionCheck> {
    pair.check_curve(curve)?;
    curve.check_index(i)?;
    let kernel_rank = pair.kernel_rank(i)?;
    let degree = pair.degrees()[i - 1];
    let kernel_slope = int(0);
    let restriction_slope = frac(-degree, pair.syzygy_rank());
    let verdict = if kernel_rank > 0 && kernel_slope > restriction_slope {
        RestrictionVerdict::Unstable
    } else {
        RestrictionVerdict::Inconclusive
    };
    Ok(RestrictionCheck {
        component: i,
        kernel_rank,
        degree,
        kernel_slope,
        restriction_slope,
        verdict,
    })
}
