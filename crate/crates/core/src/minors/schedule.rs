//! Contraction schedules: ordered merges replayed with union-find, turning a
//! block labeling into explicit branch sets.

use serde::{Deserialize, Serialize};

use crate::constructions::BlockLabeling;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::MinorWitness;

/// Merges in original labels; step `i` joins the groups of `steps[i].0` and
/// `steps[i].1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionSchedule {
    pub steps: Vec<(usize, usize)>,
}

struct UnionFind {
    parent: Vec<usize>,
    members: Vec<VertexSet>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            members: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.members[lo] = self.members[lo].union(self.members[hi]);
    }
}

/// Replays `s` on `g`. Returns every group, singletons included, ordered by
/// smallest member; the caller picks the clique subfamily.
pub fn apply_schedule(g: &Graph, s: &ContractionSchedule) -> Result<MinorWitness> {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    for (step, &(u, v)) in s.steps.iter().enumerate() {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        let (a, b) = (uf.find(u), uf.find(v));
        if a == b {
            return Err(Error::RedundantMerge { step, u, v });
        }
        if !g.sets_adjacent(uf.members[a], uf.members[b]) {
            return Err(Error::NonAdjacentMerge { step, u, v });
        }
        uf.union(a, b);
    }
    let roots: Vec<usize> = (0..n).filter(|&v| uf.find(v) == v).collect();
    let groups = roots.into_iter().map(|v| uf.members[v]).collect();
    Ok(MinorWitness::new(groups))
}

fn expect_len(set: VertexSet, expected: usize) -> Result<()> {
    if set.len() != expected {
        return Err(Error::SizeMismatch {
            expected,
            got: set.len(),
        });
    }
    Ok(())
}

/// Keeps the groups of `w` that meet `keep`.
fn select(w: MinorWitness, keep: VertexSet) -> MinorWitness {
    MinorWitness::new(
        w.branch_sets
            .into_iter()
            .filter(|s| !s.is_disjoint(keep))
            .collect(),
    )
}

/// Contracts `x_i e¹_i` and `x_i e²_i` for the lowest `p = min(q, r)` vertices
/// of each block, matched in index order; the witness is the `p` triples plus
/// all `2q` vertices of the two `K` blocks.
pub fn table1_schedule(g: &Graph, l: &BlockLabeling, q: usize, r: usize) -> Result<MinorWitness> {
    expect_len(l.x, r)?;
    for block in [l.e1, l.k1, l.k2, l.e2] {
        expect_len(block, q)?;
    }
    let p = q.min(r);
    let mut steps = Vec::with_capacity(2 * p);
    for ((x, e1), e2) in l.x.iter().zip(l.e1.iter()).zip(l.e2.iter()).take(p) {
        steps.push((x, e1));
        steps.push((x, e2));
    }
    let triples: VertexSet = l.x.iter().take(p).collect();
    let w = apply_schedule(g, &ContractionSchedule { steps })?;
    Ok(select(w, triples.union(l.k1).union(l.k2)))
}

/// Vertex-added family with `r = 4s+4`, `q = 4s+3`: contracts the `q`
/// vertices of `X − b` onto both `E` blocks, then the edge `ab`. The witness
/// holds the triples, `{a, b}` and all `K` vertices.
pub fn fig4_schedule(g: &Graph, l: &BlockLabeling, s: usize, b: usize) -> Result<MinorWitness> {
    let (r, q) = (4 * s + 4, 4 * s + 3);
    expect_len(l.x, r)?;
    for block in [l.e1, l.k1, l.k2, l.e2] {
        expect_len(block, q)?;
    }
    let a = l
        .apex
        .ok_or_else(|| Error::Blocks("labeling has no apex".into()))?;
    if !l.small_half.contains(b) {
        return Err(Error::NotInSmallHalf(b));
    }
    let rest = l.x.difference(VertexSet::singleton(b));
    let mut steps = Vec::with_capacity(2 * q + 1);
    for ((x, e1), e2) in rest.iter().zip(l.e1.iter()).zip(l.e2.iter()) {
        steps.push((x, e1));
        steps.push((x, e2));
    }
    steps.push((a, b));
    let w = apply_schedule(g, &ContractionSchedule { steps })?;
    Ok(select(w, l.x.union(l.k1).union(l.k2)))
}

/// Named blocks of an `n = 20s + 12` host: four `T` blocks of order `2s+1`,
/// four cliques of order `2s+1`, two `E_s`, two `K_s`, and `a_1..a_4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fig3Labeling {
    pub t: [VertexSet; 4],
    pub cliques: [VertexSet; 4],
    pub e: [VertexSet; 2],
    pub k: [VertexSet; 2],
    pub a: [usize; 4],
}

impl Fig3Labeling {
    /// Blocks laid out consecutively: `T_1..T_4`, cliques, `E`, `K`, then
    /// `a_1..a_4`. Total order `20s + 12`.
    pub fn consecutive(s: usize) -> Self {
        let mut next = 0;
        let mut take = |len: usize| {
            let set = VertexSet::range(next, next + len);
            next += len;
            set
        };
        let t = [(); 4].map(|_| take(2 * s + 1));
        let cliques = [(); 4].map(|_| take(2 * s + 1));
        let e = [(); 2].map(|_| take(s));
        let k = [(); 2].map(|_| take(s));
        let base = next;
        Fig3Labeling {
            t,
            cliques,
            e,
            k,
            a: [base, base + 1, base + 2, base + 3],
        }
    }

    pub fn all(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for b in self
            .t
            .iter()
            .chain(&self.cliques)
            .chain(&self.e)
            .chain(&self.k)
        {
            s = s.union(*b);
        }
        self.a.iter().copied().fold(s, |mut acc, v| {
            acc.insert(v);
            acc
        })
    }
}

/// The five-step plan: remainders of `T_1`, `T_3` matched onto the two `K_s`
/// copies, remainders of `T_2`, `T_4` onto the two `E_s` copies (`t_i` being
/// the lowest vertex of `T_i`), then `a_3 a_4`, `a_1 t_1`, `a_1 t_3`, `a_2 t_2`,
/// `a_2 t_4`.
pub fn fig3_schedule(l: &Fig3Labeling, s: usize) -> Result<ContractionSchedule> {
    for block in l.t.iter().chain(&l.cliques) {
        expect_len(*block, 2 * s + 1)?;
    }
    for block in l.e.iter().chain(&l.k) {
        expect_len(*block, s)?;
    }
    let mut steps = Vec::new();
    let tips: Vec<usize> =
        l.t.iter()
            .map(|t| t.first().expect("non-empty block"))
            .collect();
    let k_side: Vec<usize> = l.k[0].iter().chain(l.k[1].iter()).collect();
    let e_side: Vec<usize> = l.e[0].iter().chain(l.e[1].iter()).collect();
    for (i, side) in [(0, &k_side), (2, &k_side), (1, &e_side), (3, &e_side)] {
        for (t, &m) in l.t[i].iter().skip(1).zip(side.iter()) {
            steps.push((t, m));
        }
    }
    let [a1, a2, a3, a4] = l.a;
    steps.extend([
        (a3, a4),
        (a1, tips[0]),
        (a1, tips[2]),
        (a2, tips[1]),
        (a2, tips[3]),
    ]);
    Ok(ContractionSchedule { steps })
}

/// Applies [`fig3_schedule`] on `g` and keeps the groups inside the labeled
/// blocks: `4s` triples, three merged groups and the `8s+4` clique vertices.
pub fn fig3_witness(g: &Graph, l: &Fig3Labeling, s: usize) -> Result<MinorWitness> {
    let sched = fig3_schedule(l, s)?;
    let w = apply_schedule(g, &sched)?;
    Ok(MinorWitness::new(
        w.branch_sets
            .into_iter()
            .filter(|b| b.is_subset(l.all()))
            .collect(),
    ))
}
