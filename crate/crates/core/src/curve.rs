//! Comb-like curves of compact type.
//!
//! A comb has smooth components `C_1, ..., C_n`. The last one is the base: it
//! meets every other component `C_i` in a single node `p_i`, and the other
//! components are pairwise disjoint. The dual graph is therefore a star with
//! `n - 1` edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct CombCurve {
    genera: Vec<u32>,
}

impl CombCurve {
    /// Builds a comb from the component genera `g_1, ..., g_n`; the last entry
    /// is the base component.
    pub fn new(genera: Vec<u32>) -> Result<Self> {
        if genera.len() < 2 {
            return Err(Error::validation(
                "n",
                format!("n >= 2 required, got {}", genera.len()),
            ));
        }
        Ok(Self { genera })
    }

    /// Like [`CombCurve::new`] but accepts signed input and rejects negative genera.
    pub fn from_signed(genera: &[i64]) -> Result<Self> {
        let genera = genera
            .iter()
            .enumerate()
            .map(|(i, &g)| {
                u32::try_from(g).map_err(|_| {
                    Error::validation(
                        "genera",
                        format!("g_{} = {} must be a non-negative integer", i + 1, g),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(genera)
    }

    pub fn n(&self) -> usize {
        self.genera.len()
    }

    pub fn genera(&self) -> &[u32] {
        &self.genera
    }

    /// Genus of component `i` (1-based).
    pub fn genus(&self, i: usize) -> Result<u32> {
        self.check_index(i)?;
        Ok(self.genera[i - 1])
    }

    /// 1-based index of the base component.
    pub fn base_index(&self) -> usize {
        self.genera.len()
    }

    pub fn node_count(&self) -> usize {
        self.genera.len() - 1
    }

    /// Components joined by node `p_i`, for `1 <= i < n`.
    pub fn node(&self, i: usize) -> Result<(usize, usize)> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n() - 1,
            });
        }
        Ok((i, self.base_index()))
    }

    /// Number of nodes lying on component `i`.
    pub fn nodes_on(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(if i == self.base_index() {
            self.node_count()
        } else {
            1
        })
    }

    /// `p_a(C) = g_1 + ... + g_n`.
    pub fn arithmetic_genus(&self) -> i64 {
        self.genera.iter().map(|&g| i64::from(g)).sum()
    }

    /// `chi(O_C) = 1 - p_a(C)`.
    pub fn chi_structure_sheaf(&self) -> i64 {
        1 - self.arithmetic_genus()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<Vec<i64>> for CombCurve {
    type Error = Error;

    fn try_from(genera: Vec<i64>) -> Result<Self> {
        Self::from_signed(&genera)
    }
}

impl From<CombCurve> for Vec<i64> {
    fn from(curve: CombCurve) -> Self {
        curve.genera.into_iter().map(i64::from).collect()
    }
}
