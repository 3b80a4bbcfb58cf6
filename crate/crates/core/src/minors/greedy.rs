//! Fast lower bound: contract a minimum-degree group into the neighbour that
//! gains it the most new adjacencies, and keep the largest clique of groups
//! seen along the way.

use crate::graph::{bit, Bits, Graph, VertexSet};

use super::MinorWitness;

/// Maximum clique of a graph given by bit rows; returns the member mask.
pub(crate) fn max_clique(rows: &[u64], alive: u64) -> u64 {
    fn expand(rows: &[u64], clique: u64, mut cand: u64, best: &mut u64) {
        if cand == 0 {
            if clique.count_ones() > best.count_ones() {
                *best = clique;
            }
            return;
        }
        while cand != 0 {
            if clique.count_ones() + cand.count_ones() <= best.count_ones() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            expand(rows, clique | bit(v), cand & rows[v], best);
        }
    }
    let mut best = 0u64;
    expand(rows, 0, alive, &mut best);
    best
}

struct Contracted {
    groups: Vec<VertexSet>,
    rows: Vec<u64>,
    alive: u64,
}

impl Contracted {
    fn new(g: &Graph) -> Self {
        Contracted {
            groups: (0..g.n()).map(VertexSet::singleton).collect(),
            rows: (0..g.n()).map(|v| g.row(v)).collect(),
            alive: crate::graph::low_mask(g.n()),
        }
    }

    fn degree(&self, v: usize) -> u32 {
        (self.rows[v] & self.alive).count_ones()
    }

    fn merge(&mut self, u: usize, w: usize) {
        let nu = self.rows[u] & !bit(w);
        self.groups[w] = self.groups[w].union(self.groups[u]);
        self.rows[w] = (self.rows[w] | nu) & !bit(u) & !bit(w);
        for x in Bits(nu) {
            self.rows[x] = (self.rows[x] & !bit(u)) | bit(w);
        }
        self.delete(u);
    }

    fn delete(&mut self, u: usize) {
        self.alive &= !bit(u);
        for x in Bits(self.rows[u]) {
            self.rows[x] &= !bit(u);
        }
        self.rows[u] = 0;
    }

    fn witness(&self, mask: u64) -> MinorWitness {
        MinorWitness::new(Bits(mask).map(|i| self.groups[i]).collect())
    }
}

fn run(g: &Graph, prefer_high_index: bool) -> MinorWitness {
    let mut c = Contracted::new(g);
    let mut best = MinorWitness::default();
    loop {
        let alive = c.alive.count_ones();
        if alive as usize <= best.size() {
            break;
        }
        let clique = max_clique(&c.rows, c.alive);
        if clique.count_ones() as usize > best.size() {
            best = c.witness(clique);
        }
        if clique == c.alive {
            break;
        }
        let pick = Bits(c.alive)
            .min_by_key(|&v| {
                (
                    c.degree(v),
                    if prefer_high_index { usize::MAX - v } else { v },
                )
            })
            .expect("alive is non-empty");
        let nbrs = c.rows[pick] & c.alive;
        if nbrs == 0 {
            c.delete(pick);
            continue;
        }
        // neighbour that learns the most new adjacencies from `pick`
        let target = Bits(nbrs)
            .max_by_key(|&w| ((nbrs & !c.rows[w] & !bit(w)).count_ones(), usize::MAX - w))
            .expect("pick has a neighbour");
        c.merge(pick, target);
    }
    best
}

/// A valid (not necessarily optimal) complete-minor witness, computed
/// deterministically.
pub fn greedy_witness(g: &Graph) -> MinorWitness {
    let a = run(g, false);
    let b = run(g, true);
    let best = if b.size() > a.size() { b } else { a };
    best.normalized()
}
