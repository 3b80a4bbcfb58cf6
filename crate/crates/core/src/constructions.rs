//! The block compositions: a self-complementary graph `X` of order `r`
//! together with `E_q`, `K_q`, `K_q`, `E_q`, arranged on a 5-cycle of
//! complete joins `X – E¹ – K¹ – K² – E² – X`.
//!
//! Vertices are laid out block by block in that order: `X = 0..r`,
//! `E¹ = r..r+q`, `K¹`, `K²`, `E²`, and for the vertex-added family the extra
//! vertex `a = 4q + r` comes last.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::sc::{find_antimorphism, generate_sc, verify_antimorphism, Antimorphism};

/// Named slices of the vertex set of a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLabeling {
    pub x: VertexSet,
    pub e1: VertexSet,
    pub k1: VertexSet,
    pub k2: VertexSet,
    pub e2: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub apex: Option<usize>,
    #[serde(skip_serializing_if = "no_members", default)]
    pub small_half: VertexSet,
}

fn no_members(s: &VertexSet) -> bool {
    s.is_empty()
}

impl BlockLabeling {
    fn five_cycle(r: usize, q: usize) -> Self {
        BlockLabeling {
            x: VertexSet::range(0, r),
            e1: VertexSet::range(r, r + q),
            k1: VertexSet::range(r + q, r + 2 * q),
            k2: VertexSet::range(r + 2 * q, r + 3 * q),
            e2: VertexSet::range(r + 3 * q, r + 4 * q),
            apex: None,
            small_half: VertexSet::EMPTY,
        }
    }

    pub fn r(&self) -> usize {
        self.x.len()
    }

    pub fn q(&self) -> usize {
        self.e1.len()
    }

    pub fn all(&self) -> VertexSet {
        let mut s = self
            .x
            .union(self.e1)
            .union(self.k1)
            .union(self.k2)
            .union(self.e2);
        if let Some(a) = self.apex {
            s.insert(a);
        }
        s
    }
}

/// A constructed graph with its block layout and complementing permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub blocks: BlockLabeling,
    pub sigma: Antimorphism,
}

fn join(g: &mut Graph, a: VertexSet, b: VertexSet) {
    for u in a {
        for v in b {
            g.set_edge(u, v);
        }
    }
}

fn clique(g: &mut Graph, a: VertexSet) {
    let vs = a.to_vec();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            g.set_edge(u, v);
        }
    }
}

fn certified(graph: Graph, blocks: BlockLabeling, sigma: Vec<usize>) -> Result<Construction> {
    if !verify_antimorphism(&graph, &sigma)? {
        return Err(Error::NotSelfComplementary);
    }
    Ok(Construction {
        graph,
        blocks,
        sigma: Antimorphism { sigma },
    })
}

/// Five-cycle composition around `x`, using the supplied antimorphism of `x`.
pub fn five_cycle_with(x: &Graph, sigma_x: &Antimorphism, q: usize) -> Result<Construction> {
    let r = x.n();
    if !verify_antimorphism(x, &sigma_x.sigma)? {
        return Err(Error::NotSelfComplementary);
    }
    if r == 0 && q == 0 {
        return Err(Error::OutOfRange(0));
    }
    let n = 4 * q + r;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let blocks = BlockLabeling::five_cycle(r, q);
    let mut g = Graph::empty(n);
    for (u, v) in x.edges() {
        g.set_edge(u, v);
    }
    clique(&mut g, blocks.k1);
    clique(&mut g, blocks.k2);
    join(&mut g, blocks.x, blocks.e1);
    join(&mut g, blocks.e1, blocks.k1);
    join(&mut g, blocks.k1, blocks.k2);
    join(&mut g, blocks.k2, blocks.e2);
    join(&mut g, blocks.e2, blocks.x);

    // X via its own antimorphism; E¹ → K¹ → E² → K² → E¹ index by index.
    let mut sigma: Vec<usize> = sigma_x.sigma.clone();
    sigma.resize(n, 0);
    for i in 0..q {
        let (e1, k1, k2, e2) = (r + i, r + q + i, r + 2 * q + i, r + 3 * q + i);
        sigma[e1] = k1;
        sigma[k1] = e2;
        sigma[e2] = k2;
        sigma[k2] = e1;
    }
    certified(g, blocks, sigma)
}

/// Five-cycle composition; the antimorphism of `x` is found by search.
pub fn five_cycle(x: &Graph, q: usize) -> Result<Construction> {
    let sigma_x = find_antimorphism(x).ok_or(Error::NotSelfComplementary)?;
    five_cycle_with(x, &sigma_x, q)
}

/// The composition with `q = 1`: order grows by four.
pub fn extend(g: &Graph) -> Result<Construction> {
    five_cycle(g, 1)
}

pub fn extend_with(g: &Graph, sigma: &Antimorphism) -> Result<Construction> {
    five_cycle_with(g, sigma, 1)
}

/// One row of the upper-bound table: `n = 4q + r` with `h = ⌊3n/5⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub r: usize,
    pub q: usize,
    pub h: usize,
}

/// `(r, q, ⌊3n/5⌋)` for the eight residues of `n mod 20` the five-cycle
/// composition covers; `None` for `n ≡ 12, 17 (mod 20)`.
pub fn table1_params(n: usize) -> Result<Option<Table1Row>> {
    if n % 4 > 1 {
        return Err(Error::NoScGraph(n));
    }
    if n < 4 {
        return Err(Error::OutOfRange(n));
    }
    let s = n / 20;
    let (r, q) = match n % 20 {
        0 => (4 * s, 4 * s),
        1 => (4 * s + 1, 4 * s),
        4 => (4 * s, 4 * s + 1),
        5 => (4 * s + 1, 4 * s + 1),
        8 => (4 * s, 4 * s + 2),
        9 => (4 * s + 1, 4 * s + 2),
        13 => (4 * s + 1, 4 * s + 3),
        16 => (4 * s + 4, 4 * s + 3),
        _ => return Ok(None),
    };
    debug_assert_eq!(4 * q + r, n);
    Ok(Some(Table1Row { r, q, h: 3 * n / 5 }))
}

/// Default inner graph of order `r`: the empty graph for `r = 0`, otherwise
/// `generate_sc(r, seed)`.
pub fn default_x(r: usize, seed: u64) -> Result<(Graph, Antimorphism)> {
    if r == 0 {
        return Ok((Graph::empty(0), Antimorphism::identity(0)));
    }
    generate_sc(r, seed)
}

/// The five-cycle instance for the table row of `n`, if there is one.
pub fn table1_instance(n: usize, seed: u64) -> Result<Option<(Table1Row, Construction)>> {
    let Some(row) = table1_params(n)? else {
        return Ok(None);
    };
    let (x, sigma_x) = default_x(row.r, seed)?;
    Ok(Some((row, five_cycle_with(&x, &sigma_x, row.q)?)))
}

/// Vertices of `x` whose degree within `x` is below `(r - 1) / 2`.
pub fn small_degree_half(x: &Graph) -> VertexSet {
    let r = x.n();
    (0..r).filter(|&v| 2 * x.degree(v) + 1 < r).collect()
}

/// Five-cycle composition with `r = 4s + 4`, `q = 4s + 3`, plus an extra
/// vertex joined to both `K` blocks and to the small-degree half of `X`.
pub fn vertex_added_with(s: usize, x: &Graph, sigma_x: &Antimorphism) -> Result<Construction> {
    let r = 4 * s + 4;
    if x.n() != r {
        return Err(Error::SizeMismatch {
            expected: r,
            got: x.n(),
        });
    }
    let small = small_degree_half(x);
    if small.len() != 2 * s + 2 {
        return Err(Error::DegreeSplit {
            small: small.len(),
            expected: 2 * s + 2,
        });
    }
    let base = five_cycle_with(x, sigma_x, 4 * s + 3)?;
    let n = base.graph.n() + 1;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let a = n - 1;
    let mut g = Graph::empty(n);
    for (u, v) in base.graph.edges() {
        g.set_edge(u, v);
    }
    let mut blocks = base.blocks;
    join(
        &mut g,
        VertexSet::singleton(a),
        blocks.k1.union(blocks.k2).union(small),
    );
    blocks.apex = Some(a);
    blocks.small_half = small;
    let mut sigma = base.sigma.sigma;
    sigma.push(a);
    certified(g, blocks, sigma)
}

pub fn vertex_added(s: usize, x: &Graph) -> Result<Construction> {
    let sigma_x = find_antimorphism(x).ok_or(Error::NotSelfComplementary)?;
    vertex_added_with(s, x, &sigma_x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn k1() -> Graph {
        Graph::complete(1)
    }

    #[test]
    fn c5_from_k1() {
        let c = five_cycle(&k1(), 1).unwrap();
        assert!(is_isomorphic(&c.graph, &Graph::cycle(5)));
        // X=0, E1=1, K1=2, K2=3, E2=4 is literally the labelled cycle
        assert_eq!(c.graph, Graph::cycle(5));
    }

    #[test]
    fn p4_from_empty_x() {
        let c = five_cycle(&Graph::empty(0), 1).unwrap();
        assert!(is_isomorphic(&c.graph, &Graph::path(4)));
        assert!(verify_antimorphism(&c.graph, &c.sigma.sigma).unwrap());
    }

    #[test]
    fn p4_with_q2_gives_sc_12() {
        let c = five_cycle(&Graph::path(4), 2).unwrap();
        assert_eq!(c.graph.n(), 12);
        assert!(verify_antimorphism(&c.graph, &c.sigma.sigma).unwrap());
        assert!(c.sigma.has_valid_cycle_type());
    }

    #[test]
    fn degenerate_parameters() {
        assert_eq!(
            five_cycle(&Graph::path(4), 0).unwrap().graph,
            Graph::path(4)
        );
        assert_eq!(
            five_cycle(&Graph::empty(0), 0).unwrap_err(),
            Error::OutOfRange(0)
        );
        assert_eq!(
            five_cycle(&Graph::complete(4), 1).unwrap_err(),
            Error::NotSelfComplementary
        );
        let bad = Antimorphism::identity(4);
        assert_eq!(
            five_cycle_with(&Graph::path(4), &bad, 1).unwrap_err(),
            Error::NotSelfComplementary
        );
    }

    #[test]
    fn block_degrees() {
        for (x, q) in [
            (Graph::path(4), 3),
            (Graph::cycle(5), 2),
            (Graph::empty(0), 2),
            (k1(), 4),
        ] {
            let r = x.n();
            let c = five_cycle(&x, q).unwrap();
            let b = &c.blocks;
            assert_eq!(b.all(), c.graph.vertices());
            for v in b.e1.union(b.e2) {
                assert_eq!(c.graph.degree(v), q + r);
            }
            for v in b.k1.union(b.k2) {
                assert_eq!(c.graph.degree(v), 3 * q - 1);
            }
            for v in b.x {
                assert_eq!(c.graph.degree(v), x.degree(v) + 2 * q);
            }
        }
    }

    #[test]
    fn table1_rows() {
        assert_eq!(
            table1_params(16).unwrap(),
            Some(Table1Row { r: 4, q: 3, h: 9 })
        );
        assert_eq!(
            table1_params(20).unwrap(),
            Some(Table1Row { r: 4, q: 4, h: 12 })
        );
        assert_eq!(table1_params(12).unwrap(), None);
        assert_eq!(table1_params(37).unwrap(), None);
        assert_eq!(
            table1_params(13).unwrap(),
            Some(Table1Row { r: 1, q: 3, h: 7 })
        );
        assert_eq!(table1_params(6).unwrap_err(), Error::NoScGraph(6));
        assert_eq!(table1_params(1).unwrap_err(), Error::OutOfRange(1));
    }

    #[test]
    fn table1_tightness_arithmetic() {
        for s in 0..=1 {
            for res in [0, 1, 4, 5, 8, 9, 13, 16] {
                let n = 20 * s + res;
                if n < 4 {
                    continue;
                }
                let row = table1_params(n).unwrap().unwrap();
                assert_eq!(4 * row.q + row.r, n);
                assert_eq!(2 * row.q + row.q.min(row.r), 3 * n / 5, "n = {n}");
            }
        }
    }

    #[test]
    fn vertex_added_on_p4() {
        let c = vertex_added(0, &Graph::path(4)).unwrap();
        assert_eq!(c.graph.n(), 17);
        let a = c.blocks.apex.unwrap();
        assert_eq!(a, 16);
        assert_eq!(c.graph.degree(a), 2 * 3 + 2);
        assert_eq!(c.sigma.sigma[a], a);
        assert!(c.sigma.has_valid_cycle_type());
        // the endpoints of P_4 have degree 1 < 3/2
        assert_eq!(c.blocks.small_half, VertexSet::from_iter([0, 3]));
    }

    #[test]
    fn vertex_added_preconditions() {
        assert_eq!(
            vertex_added(1, &Graph::path(4)).unwrap_err(),
            Error::SizeMismatch {
                expected: 8,
                got: 4
            }
        );
        assert_eq!(
            vertex_added(0, &Graph::complete(4)).unwrap_err(),
            Error::NotSelfComplementary
        );
        // right size, wrong degree split, with a bogus certificate
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(
            vertex_added_with(0, &star, &Antimorphism::identity(4)),
            Err(Error::DegreeSplit {
                small: 3,
                expected: 2
            })
        ));
    }

    #[test]
    fn vertex_added_from_generated_x() {
        for s in 0..=1 {
            for seed in 0..3 {
                let (x, sx) = generate_sc(4 * s + 4, seed).unwrap();
                let c = vertex_added_with(s, &x, &sx).unwrap();
                assert_eq!(c.graph.n(), 20 * s + 17);
                assert!(verify_antimorphism(&c.graph, &c.sigma.sigma).unwrap());
            }
        }
    }

    #[test]
    fn extend_adds_four() {
        for g in [Graph::path(4), Graph::cycle(5), k1()] {
            let e = extend(&g).unwrap();
            assert_eq!(e.graph.n(), g.n() + 4);
            assert!(verify_antimorphism(&e.graph, &e.sigma.sigma).unwrap());
        }
        assert_eq!(
            extend(&Graph::path(3)).unwrap_err(),
            Error::NotSelfComplementary
        );
    }
}
