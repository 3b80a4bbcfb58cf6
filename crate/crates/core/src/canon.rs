//! Canonical labelling by individualisation and refinement, plus a pairwise
//! isomorphism search built on the same refinement step.
//!
//! Ordered partitions are `Vec<u64>` of cell masks. Refinement splits a cell
//! by the number of neighbours each member has in a splitter cell; sub-cells
//! are ordered by that count, so the result is invariant under relabelling.

use crate::graph::{bit, Bits, Graph};

fn split_cell(g: &Graph, cell: u64, splitter: u64) -> Vec<(u32, u64)> {
    let mut parts: Vec<(u32, u64)> = Vec::new();
    for v in Bits(cell) {
        let c = (g.row(v) & splitter).count_ones();
        match parts.iter_mut().find(|p| p.0 == c) {
            Some(p) => p.1 |= bit(v),
            None => parts.push((c, bit(v))),
        }
    }
    parts.sort_unstable_by_key(|p| p.0);
    parts
}

/// Refines `cells` to the coarsest equitable partition below it.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut j = 0;
        while j < cells.len() {
            let splitter = cells[j];
            let mut i = 0;
            while i < cells.len() {
                if cells[i].count_ones() > 1 {
                    let parts = split_cell(g, cells[i], splitter);
                    if parts.len() > 1 {
                        let k = parts.len();
                        cells.splice(i..=i, parts.into_iter().map(|p| p.1));
                        changed = true;
                        i += k;
                        continue;
                    }
                }
                i += 1;
            }
            j += 1;
        }
    }
}

/// Refines two partitions in lockstep. Returns false as soon as the two
/// graphs split a cell differently, which rules out any isomorphism that
/// respects the current cell correspondence.
pub(crate) fn refine_pair(g: &Graph, h: &Graph, cg: &mut Vec<u64>, ch: &mut Vec<u64>) -> bool {
    let mut changed = true;
    while changed {
        changed = false;
        let mut j = 0;
        while j < cg.len() {
            let (sg, sh) = (cg[j], ch[j]);
            let mut i = 0;
            while i < cg.len() {
                if cg[i].count_ones() > 1 {
                    let pg = split_cell(g, cg[i], sg);
                    let ph = split_cell(h, ch[i], sh);
                    if pg.len() != ph.len()
                        || pg
                            .iter()
                            .zip(&ph)
                            .any(|(a, b)| a.0 != b.0 || a.1.count_ones() != b.1.count_ones())
                    {
                        return false;
                    }
                    if pg.len() > 1 {
                        let k = pg.len();
                        cg.splice(i..=i, pg.into_iter().map(|p| p.1));
                        ch.splice(i..=i, ph.into_iter().map(|p| p.1));
                        changed = true;
                        i += k;
                        continue;
                    }
                }
                i += 1;
            }
            j += 1;
        }
    }
    true
}

fn individualize(cells: &[u64], target: usize, v: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(bit(v));
    out.push(cells[target] & !bit(v));
    out.extend_from_slice(&cells[target + 1..]);
    out
}

fn first_nonsingleton(cells: &[u64]) -> Option<usize> {
    cells.iter().position(|c| c.count_ones() > 1)
}

fn initial_cells(n: usize) -> Vec<u64> {
    if n == 0 {
        Vec::new()
    } else {
        vec![crate::graph::low_mask(n)]
    }
}

/// A canonical representative together with the labelling that produced it:
/// `graph == original.permute(&labeling)`.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub graph: Graph,
    pub labeling: Vec<usize>,
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let n = self.g.n();
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut r = 0u64;
            for w in Bits(self.g.row(v)) {
                r |= bit(lab[w]);
            }
            rows[lab[v]] = r;
        }
        rows
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut lab = vec![0; self.g.n()];
        for (i, c) in cells.iter().enumerate() {
            lab[c.trailing_zeros() as usize] = i;
        }
        let cert = self.certificate(&lab);
        match &self.best {
            Some((best, best_lab)) if *best == cert => {
                let mut inv = vec![0; lab.len()];
                for (v, &l) in best_lab.iter().enumerate() {
                    inv[l] = v;
                }
                let gamma: Vec<usize> = lab.iter().map(|&l| inv[l]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
            }
            Some((best, _)) if *best >= cert => {}
            _ => self.best = Some((cert, lab)),
        }
    }

    /// Orbit representative of `v` under the known automorphisms that fix
    /// every vertex of `fixed`.
    fn orbit_root(&self, fixed: &[usize], v: usize, parent: &mut [usize]) -> usize {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.automorphisms {
            if fixed.iter().all(|&f| a[f] == f) {
                for (x, &y) in a.iter().enumerate() {
                    let (rx, ry) = (find(parent, x), find(parent, y));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
        find(parent, v)
    }

    fn visit(&mut self, mut cells: Vec<u64>, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = first_nonsingleton(&cells) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        let mut parent = vec![0; self.g.n()];
        for w in Bits(cells[target]) {
            if !tried.is_empty() && !self.automorphisms.is_empty() {
                let rw = self.orbit_root(fixed, w, &mut parent);
                if tried.iter().any(|&t| {
                    let mut x = t;
                    while parent[x] != x {
                        x = parent[x];
                    }
                    x == rw
                }) {
                    continue;
                }
            }
            tried.push(w);
            fixed.push(w);
            self.visit(individualize(&cells, target, w), fixed);
            fixed.pop();
        }
    }
}

/// Canonical form: isomorphic inputs yield identical `graph` fields.
pub fn canonical_form(g: &Graph) -> Canonical {
    let mut search = CanonSearch {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(initial_cells(g.n()), &mut Vec::new());
    let labeling = search.best.map(|b| b.1).unwrap_or_default();
    Canonical {
        graph: g.permute(&labeling),
        labeling,
    }
}

fn iso_search(g: &Graph, h: &Graph, cg: Vec<u64>, ch: Vec<u64>) -> Option<Vec<usize>> {
    let mut cg = cg;
    let mut ch = ch;
    if !refine_pair(g, h, &mut cg, &mut ch) {
        return None;
    }
    let Some(target) = first_nonsingleton(&cg) else {
        let mut map = vec![0; g.n()];
        for (a, b) in cg.iter().zip(&ch) {
            map[a.trailing_zeros() as usize] = b.trailing_zeros() as usize;
        }
        return g
            .edges()
            .all(|(u, v)| h.has_edge(map[u], map[v]))
            .then_some(map);
    };
    let u = cg[target].trailing_zeros() as usize;
    for v in Bits(ch[target]) {
        let found = iso_search(
            g,
            h,
            individualize(&cg, target, u),
            individualize(&ch, target, v),
        );
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Finds a bijection `map` with `uv ∈ E(g) ⟺ map[u]map[v] ∈ E(h)`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    iso_search(g, h, initial_cells(g.n()), initial_cells(h.n()))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
