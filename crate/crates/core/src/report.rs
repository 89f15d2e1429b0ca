//! Analysis reports.
//!
//! A [`Report`] is built once and then rendered either as JSON (the machine
//! format) or as a plain-text table. The table is rendered from the report
//! fields only, so every number it shows is also in the JSON. Rationals are
//! written as `"p/q"` strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{
    build_catalog, restriction_slope_check, DestabilizerKind, RestrictionVerdict,
};
use crate::error::Result;
use crate::feasibility::{grid_oracle, strong_instability_report, GridResult, StrongVerdict};
use crate::instance::{Instance, InstanceFile};
use crate::numerics::{chi_bundle, syzygy_multisheaf, ChiSign};
use crate::polarization::{Polarization, StabilityContext};
use crate::rational::{format, Rational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Run the grid oracle at this denominator as a cross-check.
    pub oracle_denominator: Option<usize>,
    /// Include the constraint system and the certificate terms.
    pub certificate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub n: usize,
    pub arithmetic_genus: i64,
    pub chi_structure_sheaf: i64,
    pub total_degree: i64,
    pub chi_bundle: i64,
    pub syzygy_rank: i64,
    pub chi_syzygy: i64,
    pub chi_syzygy_sign: ChiSign,
    pub syzygy_slope: String,
    pub ratio: String,
    pub threshold: i64,
    pub kernels_nonzero: bool,
    pub hypotheses_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionRow {
    pub component: usize,
    pub kernel_rank: i64,
    pub degree: i64,
    pub kernel_slope: String,
    pub restriction_slope: String,
    pub verdict: RestrictionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub tag: String,
    pub component: usize,
    pub kind: String,
    pub sheaf: String,
    pub multirank: Vec<u32>,
    pub chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintRow {
    pub tag: String,
    pub coefficients: Vec<String>,
    pub bound: String,
    pub strict: bool,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateTermRow {
    pub constraint: String,
    pub multiplier: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub combination: String,
    pub contradiction: String,
    pub unit_multipliers: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<CertificateTermRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeasibilityStatus {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub status: FeasibilityStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict_at_witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverallVerdict {
    StronglyUnstable,
    NotDisprovedByCatalog,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub denominator: usize,
    pub found: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Whether the grid result is compatible with the exact decision.
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub instance: InstanceFile,
    pub invariants: Invariants,
    pub restriction_checks: Vec<RestrictionRow>,
    pub catalog: Vec<CatalogRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraints: Option<Vec<ConstraintRow>>,
    pub feasibility: FeasibilityReport,
    pub verdict: OverallVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    pub notes: Vec<String>,
}

fn weights(w: &Polarization) -> Vec<String> {
    w.weights().iter().map(format).collect()
}

fn kind_name(kind: DestabilizerKind) -> &'static str {
    match kind {
        DestabilizerKind::KernelTwistNonBase(_) => "kernel_twist_non_base",
        DestabilizerKind::KernelTwistBase => "kernel_twist_base",
    }
}

/// Runs every analysis on a validated instance.
pub fn run_analyze(instance: &Instance, options: &AnalyzeOptions) -> Result<Report> {
    let curve = &instance.curve;
    let pair = &instance.pair;
    let syzygy = syzygy_multisheaf(curve, pair)?;
    let catalog = build_catalog(curve, pair)?;
    let context = StabilityContext::new(curve, pair, &catalog)?;
    let strong = strong_instability_report(curve, pair)?;

    let invariants = Invariants {
        n: curve.n(),
        arithmetic_genus: curve.arithmetic_genus(),
        chi_structure_sheaf: curve.chi_structure_sheaf(),
        total_degree: pair.total_degree(),
        chi_bundle: chi_bundle(curve, pair)?,
        syzygy_rank: pair.syzygy_rank(),
        chi_syzygy: syzygy.sheaf.chi(),
        chi_syzygy_sign: syzygy.sign,
        syzygy_slope: format(context.syzygy_slope()),
        ratio: format(&strong.hypotheses.ratio),
        threshold: strong.hypotheses.threshold,
        kernels_nonzero: strong.hypotheses.kernels_nonzero,
        hypotheses_hold: strong.hypotheses.hold(),
    };

    let restriction_checks = (1..=curve.n())
        .map(|i| {
            restriction_slope_check(curve, pair, i).map(|c| RestrictionRow {
                component: c.component,
                kernel_rank: c.kernel_rank,
                degree: c.degree,
                kernel_slope: format(&c.kernel_slope),
                restriction_slope: format(&c.restriction_slope),
                verdict: c.verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let catalog_rows = catalog
        .iter()
        .map(|d| CatalogRow {
            tag: format!("C{}", d.source_component),
            component: d.source_component,
            kind: kind_name(d.kind).to_string(),
            sheaf: d.sheaf.label().to_string(),
            multirank: d.sheaf.multirank().to_vec(),
            chi: d.sheaf.chi(),
        })
        .collect();

    let constraints = options.certificate.then(|| {
        strong
            .system
            .constraints
            .iter()
            .map(|c| ConstraintRow {
                tag: c.label(),
                coefficients: c.coefficients.iter().map(format).collect(),
                bound: format(&c.bound),
                strict: c.strict,
                text: c.to_string(),
            })
            .collect()
    });

    let mut notes = Vec::new();
    match syzygy.sign {
        ChiSign::Negative => {}
        ChiSign::Boundary => notes
            .push("chi(M) = 0: boundary case, negativity of chi(M) does not hold here".to_string()),
        ChiSign::NotRealizable => notes.push(
            "chi(M) > 0: no generated pair has these invariants (h^0(M) = 0 forces chi(M) <= 0)"
                .to_string(),
        ),
    }
    if catalog.is_empty() {
        notes.push("empty catalog: every kernel rank is zero".to_string());
    }

    let (feasibility, verdict, exact_feasible) = match &strong.verdict {
        StrongVerdict::StronglyUnstable(cert) => {
            let contradiction = cert
                .verify(&strong.system)
                .map_err(|e| crate::Error::Inconsistent(e.to_string()))?;
            let terms = if options.certificate {
                cert.terms
                    .iter()
                    .map(|t| CertificateTermRow {
                        constraint: strong.system.constraints[t.index].label(),
                        multiplier: format(&t.multiplier),
                    })
                    .collect()
            } else {
                Vec::new()
            };
            (
                FeasibilityReport {
                    status: FeasibilityStatus::Infeasible,
                    witness: None,
                    verdict_at_witness: None,
                    certificate: Some(CertificateReport {
                        combination: cert.combination(),
                        contradiction: contradiction.to_string(),
                        unit_multipliers: cert.is_unit(),
                        terms,
                    }),
                },
                OverallVerdict::StronglyUnstable,
                false,
            )
        }
        StrongVerdict::NotDisprovedByCatalog(w) => (
            FeasibilityReport {
                status: FeasibilityStatus::Feasible,
                witness: Some(weights(w)),
                verdict_at_witness: Some(context.verdict_at(w)?.name().to_string()),
                certificate: None,
            },
            OverallVerdict::NotDisprovedByCatalog,
            true,
        ),
    };

    let oracle = match options.oracle_denominator {
        None => None,
        Some(denominator) => {
            let result = grid_oracle(curve, pair, &catalog, denominator)?;
            let (found, witness) = match &result {
                GridResult::FoundWitness(w) => (true, Some(weights(w))),
                GridResult::NoneFound => (false, None),
            };
            // a grid witness is impossible when the system is infeasible
            let agrees = exact_feasible || !found;
            Some(OracleReport {
                denominator,
                found,
                witness,
                agrees,
            })
        }
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        instance: instance.to_file(),
        invariants,
        restriction_checks,
        catalog: catalog_rows,
        constraints,
        feasibility,
        verdict,
        oracle,
        notes,
    })
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Plain-text rendering built only from report fields.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let inv = &self.invariants;
        let _ = writeln!(out, "invariants");
        let rows: [(&str, String); 12] = [
            ("n", inv.n.to_string()),
            ("p_a(C)", inv.arithmetic_genus.to_string()),
            ("chi(O_C)", inv.chi_structure_sheaf.to_string()),
            ("d", inv.total_degree.to_string()),
            ("chi(E)", inv.chi_bundle.to_string()),
            ("rk M = l - r", inv.syzygy_rank.to_string()),
            ("chi(M)", inv.chi_syzygy.to_string()),
            ("mu(M)", inv.syzygy_slope.clone()),
            ("d/(l-r)", inv.ratio.clone()),
            ("threshold n-1", inv.threshold.to_string()),
            ("all kernels nonzero", inv.kernels_nonzero.to_string()),
            ("hypotheses hold", inv.hypotheses_hold.to_string()),
        ];
        for (name, value) in rows {
            let _ = writeln!(out, "  {name:<20} {value}");
        }

        let _ = writeln!(out, "\nrestrictions");
        let _ = writeln!(
            out,
            "  {:<4} {:>4} {:>4} {:>10} {:>12}  verdict",
            "i", "t_i", "d_i", "mu(ker)", "mu(M|C_i)"
        );
        for r in &self.restriction_checks {
            let _ = writeln!(
                out,
                "  {:<4} {:>4} {:>4} {:>10} {:>12}  {:?}",
                r.component,
                r.kernel_rank,
                r.degree,
                r.kernel_slope,
                r.restriction_slope,
                r.verdict
            );
        }

        let _ = writeln!(out, "\ncatalog");
        if self.catalog.is_empty() {
            let _ = writeln!(out, "  (empty)");
        }
        for c in &self.catalog {
            let _ = writeln!(
                out,
                "  {:<4} {:<32} multirank {:?}  chi {}",
                c.tag, c.sheaf, c.multirank, c.chi
            );
        }

        if let Some(constraints) = &self.constraints {
            let _ = writeln!(out, "\nconstraints (with w_1 + ... + w_n = 1)");
            for c in constraints {
                let _ = writeln!(out, "  {:<4} {}", c.tag, c.text);
            }
        }

        let f = &self.feasibility;
        let _ = writeln!(out, "\nfeasibility: {:?}", f.status);
        if let Some(w) = &f.witness {
            let _ = writeln!(out, "  witness w = ({})", w.join(", "));
        }
        if let Some(v) = &f.verdict_at_witness {
            let _ = writeln!(out, "  verdict at witness: {v}");
        }
        if let Some(cert) = &f.certificate {
            let _ = writeln!(
                out,
                "  certificate: {} => {}",
                cert.combination, cert.contradiction
            );
            let _ = writeln!(out, "  unit multipliers: {}", cert.unit_multipliers);
            for t in &cert.terms {
                let _ = writeln!(out, "    {} x {}", t.multiplier, t.constraint);
            }
        }

        let _ = writeln!(out, "\nverdict: {:?}", self.verdict);

        if let Some(o) = &self.oracle {
            let found = match &o.witness {
                Some(w) => format!("found ({})", w.join(", ")),
                None => "none found".to_string(),
            };
            let _ = writeln!(
                out,
                "grid oracle (D = {}): {found}; agrees: {}",
                o.denominator, o.agrees
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

/// Short result of the `feasibility` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilitySummary {
    pub schema_version: u32,
    pub status: FeasibilityStatus,
    pub verdict: OverallVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<String>,
}

pub fn run_feasibility(instance: &Instance) -> Result<FeasibilitySummary> {
    let strong = strong_instability_report(&instance.curve, &instance.pair)?;
    Ok(match &strong.verdict {
        StrongVerdict::StronglyUnstable(cert) => FeasibilitySummary {
            schema_version: SCHEMA_VERSION,
            status: FeasibilityStatus::Infeasible,
            verdict: OverallVerdict::StronglyUnstable,
            witness: None,
            contradiction: cert.verify(&strong.system).ok().map(|c| c.to_string()),
        },
        StrongVerdict::NotDisprovedByCatalog(w) => FeasibilitySummary {
            schema_version: SCHEMA_VERSION,
            status: FeasibilityStatus::Feasible,
            verdict: OverallVerdict::NotDisprovedByCatalog,
            witness: Some(weights(w)),
            contradiction: None,
        },
    })
}

/// Result of the `grid` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub schema_version: u32,
    pub denominator: usize,
    pub found: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

pub fn run_grid(instance: &Instance, denominator: usize) -> Result<GridSummary> {
    let catalog = build_catalog(&instance.curve, &instance.pair)?;
    let result = grid_oracle(&instance.curve, &instance.pair, &catalog, denominator)?;
    let witness = match &result {
        GridResult::FoundWitness(w) => Some(weights(w)),
        GridResult::NoneFound => None,
    };
    Ok(GridSummary {
        schema_version: SCHEMA_VERSION,
        denominator,
        found: witness.is_some(),
        witness,
    })
}

/// Parses a `"p/q"` field of a report back into a rational.
pub fn parse_rational_field(text: &str) -> Option<Rational> {
    crate::rational::parse(text)
}
