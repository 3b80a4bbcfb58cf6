//! Exact clique-minor decision by branch and bound.
//!
//! In a connected graph every `K_k` model can be grown until its branch sets
//! cover all vertices (a leftover vertex next to some branch set can join
//! it), and two adjacent branch sets can be merged. So `G` has a `K_k` minor
//! iff `V` splits into exactly `k` connected, pairwise adjacent parts. The
//! search builds that partition part by part: the next part always contains
//! the lowest remaining vertex, which fixes the order of parts.
//!
//! Pruning, for `need` parts still to place inside the remaining set `R`:
//! * `R` stays connected, since the parts still to come are pairwise adjacent
//!   and cover `R`;
//! * every placed part has at least `need` neighbours in `R`;
//! * `G[R]` has at least `C(need, 2) + |R| - need` edges;
//! * states already refuted are remembered by `(R, need, constraints)`.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::graph::{bit, Bits, Graph, VertexSet};

use super::greedy::greedy_witness;
use super::MinorWitness;

/// Search limits for one decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Some(Duration::from_secs(60)),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
            max_time: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_time: None,
        }
    }

    pub fn with_time(mut self, t: Duration) -> Self {
        self.max_time = Some(t);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// A witness of exactly the requested size.
    Yes(MinorWitness),
    /// Exhaustive search found no model.
    No,
    /// The budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionReport {
    pub decision: Decision,
    pub nodes: u64,
}

struct OutOfBudget;

const MEMO_CAP: usize = 1 << 21;

struct PartitionSearch<'a> {
    g: &'a Graph,
    k: usize,
    budget: Budget,
    started: Instant,
    nodes: u64,
    refuted: HashSet<Vec<u64>>,
    parts: Vec<(u64, u64)>,
}

impl PartitionSearch<'_> {
    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(OutOfBudget);
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(limit) = self.budget.max_time {
                if self.started.elapsed() > limit {
                    return Err(OutOfBudget);
                }
            }
        }
        Ok(())
    }

    fn connected(&self, s: u64) -> bool {
        s == 0 || self.g.reach(s.trailing_zeros() as usize, VertexSet(s)).0 == s
    }

    fn memo_key(&self, r: u64, need: usize) -> Vec<u64> {
        let mut cons: Vec<u64> = self.parts.iter().map(|p| p.1 & r).collect();
        cons.sort_unstable();
        cons.dedup();
        // a constraint implied by a smaller one is redundant
        let minimal: Vec<u64> = cons
            .iter()
            .copied()
            .filter(|&c| !cons.iter().any(|&d| d != c && d & !c == 0))
            .collect();
        let mut key = Vec::with_capacity(minimal.len() + 2);
        key.push(r);
        key.push(need as u64);
        key.extend(minimal);
        key
    }

    /// Connected sets containing `v` inside `r`, each generated once.
    fn candidates(&self, v: usize, r: u64, need: usize) -> Vec<u64> {
        let max_size = r.count_ones() as usize - (need - 1);
        let mut out = Vec::new();
        let cons: Vec<u64> = self.parts.iter().map(|p| p.1 & r).collect();
        self.grow(bit(v), self.g.row(v) & r, 0, r, max_size, &cons, &mut out);
        out.sort_by_key(|s| (s.count_ones(), *s));
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        s: u64,
        cand: u64,
        excl: u64,
        r: u64,
        max_size: usize,
        cons: &[u64],
        out: &mut Vec<u64>,
    ) {
        let rest = r & !s;
        if cons.iter().all(|&c| c & s != 0) && rest != 0 && self.connected(rest) {
            out.push(s);
        }
        if s.count_ones() as usize >= max_size {
            return;
        }
        let mut excl = excl;
        for u in Bits(cand) {
            excl |= bit(u);
            let next = (cand | (self.g.row(u) & r)) & !s & !excl;
            self.grow(s | bit(u), next, excl, r, max_size, cons, out);
        }
    }

    fn solve(&mut self, r: u64) -> Result<bool, OutOfBudget> {
        self.tick()?;
        let need = self.k - self.parts.len();
        if need == 1 {
            if r != 0 && self.parts.iter().all(|p| p.1 & r != 0) {
                self.parts.push((r, 0));
                return Ok(true);
            }
            return Ok(false);
        }
        let size = r.count_ones() as usize;
        if size < need
            || self
                .parts
                .iter()
                .any(|p| ((p.1 & r).count_ones() as usize) < need)
        {
            return Ok(false);
        }
        let within = self.g.edges_within(VertexSet(r));
        if within < need * (need - 1) / 2 + size - need {
            return Ok(false);
        }
        let key = self.memo_key(r, need);
        if self.refuted.contains(&key) {
            return Ok(false);
        }
        let v = r.trailing_zeros() as usize;
        for s in self.candidates(v, r, need) {
            let nb = self.g.neighborhood(VertexSet(s)).0;
            self.parts.push((s, nb));
            if self.solve(r & !s)? {
                return Ok(true);
            }
            self.parts.pop();
        }
        if self.refuted.len() < MEMO_CAP {
            self.refuted.insert(key);
        }
        Ok(false)
    }
}

/// Decides whether `g` has a `K_k` minor within the budget.
pub fn has_clique_minor(g: &Graph, k: usize, budget: &Budget) -> DecisionReport {
    let started = Instant::now();
    if k == 0 {
        return DecisionReport {
            decision: Decision::Yes(MinorWitness::default()),
            nodes: 0,
        };
    }
    let greedy = greedy_witness(g);
    if greedy.size() >= k {
        return DecisionReport {
            decision: Decision::Yes(greedy.truncated(k)),
            nodes: 0,
        };
    }
    let mut nodes = 0;
    let mut exhausted = true;
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        let mut search = PartitionSearch {
            g,
            k,
            budget: Budget {
                max_nodes: budget.max_nodes.saturating_sub(nodes),
                max_time: budget.max_time.map(|t| t.saturating_sub(started.elapsed())),
            },
            started: Instant::now(),
            nodes: 0,
            refuted: HashSet::new(),
            parts: Vec::new(),
        };
        let outcome = search.solve(comp.0);
        nodes += search.nodes;
        match outcome {
            Ok(true) => {
                let w = MinorWitness::new(search.parts.iter().map(|p| VertexSet(p.0)).collect());
                return DecisionReport {
                    decision: Decision::Yes(w.normalized()),
                    nodes,
                };
            }
            Ok(false) => {}
            Err(OutOfBudget) => exhausted = false,
        }
    }
    let decision = if exhausted {
        Decision::No
    } else {
        Decision::Unknown
    };
    DecisionReport { decision, nodes }
}

/// Largest `k` not excluded by vertex and edge counts in any component:
/// a `K_k` model on a connected component with `m` vertices needs at least
/// `C(k, 2) + m - k` edges there.
pub fn trivial_upper_bound(g: &Graph) -> usize {
    g.components()
        .into_iter()
        .map(|c| {
            let (m, e) = (c.len(), g.edges_within(c));
            (1..=m)
                .rev()
                .find(|&k| k * (k - 1) / 2 + m - k <= e)
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HadwigerResult {
    /// `h(G)` with a witness; `K_{h+1}` was refuted exhaustively.
    Exact {
        h: usize,
        witness: MinorWitness,
        nodes: u64,
    },
    /// Budget ran out: `lo` is witnessed, `hi` is proven.
    Bounds {
        lo: usize,
        hi: usize,
        witness: MinorWitness,
        nodes: u64,
    },
}

impl HadwigerResult {
    pub fn exact(&self) -> Option<usize> {
        match self {
            HadwigerResult::Exact { h, .. } => Some(*h),
            HadwigerResult::Bounds { .. } => None,
        }
    }

    pub fn witness(&self) -> &MinorWitness {
        match self {
            HadwigerResult::Exact { witness, .. } | HadwigerResult::Bounds { witness, .. } => {
                witness
            }
        }
    }

    pub fn lower(&self) -> usize {
        self.witness().size()
    }

    pub fn nodes(&self) -> u64 {
        match self {
            HadwigerResult::Exact { nodes, .. } | HadwigerResult::Bounds { nodes, .. } => *nodes,
        }
    }
}

/// Exact Hadwiger number: climbs from the greedy lower bound, one decision
/// per step, until a target is refuted. The budget applies per decision.
pub fn hadwiger(g: &Graph, budget: &Budget) -> HadwigerResult {
    let mut witness = greedy_witness(g);
    let hi = trivial_upper_bound(g);
    let mut nodes = 0;
    loop {
        let target = witness.size() + 1;
        if target > hi {
            return HadwigerResult::Exact {
                h: witness.size(),
                witness,
                nodes,
            };
        }
        let report = has_clique_minor(g, target, budget);
        nodes += report.nodes;
        match report.decision {
            Decision::Yes(w) => witness = w,
            Decision::No => {
                return HadwigerResult::Exact {
                    h: witness.size(),
                    witness,
                    nodes,
                }
            }
            Decision::Unknown => {
                return HadwigerResult::Bounds {
                    lo: witness.size(),
                    hi,
                    witness,
                    nodes,
                };
            }
        }
    }
}
