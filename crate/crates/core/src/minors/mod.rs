//! Complete-minor certificates and the exact Hadwiger number.
//!
//! A `K_h` minor is witnessed by `h` disjoint, connected, pairwise adjacent
//! branch sets. Everything that answers "yes" in this module hands back such a
//! witness, and [`check_witness`] re-validates it without trusting the search.

mod greedy;
mod oracle;
mod schedule;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use greedy::greedy_witness;
pub(crate) use greedy::max_clique;
pub use oracle::{hadwiger_oracle, ORACLE_MAX_N};
pub use schedule::{
    apply_schedule, fig3_schedule, fig3_witness, fig4_schedule, table1_schedule,
    ContractionSchedule, Fig3Labeling,
};
pub use search::{
    hadwiger, has_clique_minor, trivial_upper_bound, Budget, Decision, DecisionReport,
    HadwigerResult,
};

/// Branch sets of a complete minor. Serialises as
/// `{"h": 3, "branch_sets": [[0, 1], [2, 3], [4]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "WitnessJson", try_from = "WitnessJson")]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    h: usize,
    branch_sets: Vec<Vec<usize>>,
}

impl From<MinorWitness> for WitnessJson {
    fn from(w: MinorWitness) -> Self {
        WitnessJson {
            h: w.size(),
            branch_sets: w.branch_sets.iter().map(|s| s.to_vec()).collect(),
        }
    }
}

impl TryFrom<WitnessJson> for MinorWitness {
    type Error = String;

    fn try_from(j: WitnessJson) -> std::result::Result<Self, String> {
        if j.h != j.branch_sets.len() {
            return Err(format!(
                "h = {} but {} branch sets",
                j.h,
                j.branch_sets.len()
            ));
        }
        let mut sets = Vec::with_capacity(j.h);
        for set in j.branch_sets {
            if let Some(v) = set.iter().find(|&&v| v >= crate::graph::MAX_VERTICES) {
                return Err(format!("vertex {v} out of range"));
            }
            sets.push(set.into_iter().collect());
        }
        Ok(MinorWitness { branch_sets: sets })
    }
}

impl MinorWitness {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        MinorWitness { branch_sets }
    }

    pub fn singletons(vertices: impl IntoIterator<Item = usize>) -> Self {
        MinorWitness {
            branch_sets: vertices.into_iter().map(VertexSet::singleton).collect(),
        }
    }

    /// The order `h` of the certified complete minor.
    pub fn size(&self) -> usize {
        self.branch_sets.len()
    }

    /// Keeps the first `h` branch sets; any subfamily of a witness is one.
    pub fn truncated(mut self, h: usize) -> Self {
        self.branch_sets.truncate(h);
        self
    }

    /// Branch sets sorted by smallest member.
    pub fn normalized(mut self) -> Self {
        self.branch_sets.sort_by_key(|s| s.first());
        self
    }

    pub fn used(&self) -> VertexSet {
        self.branch_sets
            .iter()
            .fold(VertexSet::EMPTY, |a, &b| a.union(b))
    }
}

/// True iff the branch sets are non-empty, pairwise disjoint, connected and
/// pairwise adjacent in `g`.
pub fn check_witness(g: &Graph, w: &MinorWitness) -> Result<bool> {
    for s in &w.branch_sets {
        if let Some(v) = s.iter().find(|&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    let sets = &w.branch_sets;
    for (i, &a) in sets.iter().enumerate() {
        if a.is_empty() || !g.is_connected(a)? {
            return Ok(false);
        }
        for &b in &sets[i + 1..] {
            if !a.is_disjoint(b) || !g.sets_adjacent(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
