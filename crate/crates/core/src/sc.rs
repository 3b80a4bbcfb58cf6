//! Self-complementary graphs via complementing permutations.
//!
//! An antimorphism of `G` is a permutation `σ` with `uv ∈ E ⟺ σ(u)σ(v) ∉ E`
//! for all `u ≠ v`. Its cycles all have length divisible by four, apart from
//! a single fixed point when `n ≡ 1 (mod 4)`. Conversely, any permutation of
//! that cycle type acts on unordered pairs with even orbits, and alternating
//! edge/non-edge along every pair orbit yields a self-complementary graph.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, find_isomorphism};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// A complementing permutation: `sigma[u]` is the image of `u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Antimorphism {
    pub sigma: Vec<usize>,
}

impl Antimorphism {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        check_permutation(&sigma)?;
        Ok(Antimorphism { sigma })
    }

    pub fn identity(n: usize) -> Self {
        Antimorphism {
            sigma: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// Cycle lengths in order of each cycle's smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.sigma.len()];
        let mut out = Vec::new();
        for start in 0..self.sigma.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.sigma[v];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Cycle lengths all divisible by 4, except one fixed point iff `n` is odd.
    pub fn has_valid_cycle_type(&self) -> bool {
        let lengths = self.cycle_lengths();
        let fixed = lengths.iter().filter(|&&l| l == 1).count();
        let expected_fixed = self.sigma.len() % 4;
        expected_fixed <= 1
            && fixed == expected_fixed
            && lengths.iter().all(|&l| l == 1 || l % 4 == 0)
    }

    /// The antimorphism of `g.permute(perm)` corresponding to this one of `g`.
    pub fn relabel(&self, perm: &[usize]) -> Antimorphism {
        let mut sigma = vec![0; self.sigma.len()];
        for (u, &s) in self.sigma.iter().enumerate() {
            sigma[perm[u]] = perm[s];
        }
        Antimorphism { sigma }
    }
}

fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
            return Err(Error::NotAPermutation(sigma.len()));
        }
    }
    Ok(())
}

/// Checks the edge-flip condition over all pairs.
pub fn verify_antimorphism(g: &Graph, sigma: &[usize]) -> Result<bool> {
    if sigma.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: sigma.len(),
        });
    }
    check_permutation(sigma)?;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) == g.has_edge(sigma[u], sigma[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for an isomorphism from `g` onto its complement.
pub fn find_antimorphism(g: &Graph) -> Option<Antimorphism> {
    let n = g.n();
    if n % 4 > 1 || 4 * g.edge_count() != n * n.saturating_sub(1) {
        return None;
    }
    let mut deg = g.degrees();
    let mut flipped: Vec<usize> = deg.iter().map(|d| n - 1 - d).collect();
    deg.sort_unstable();
    flipped.sort_unstable();
    if deg != flipped {
        return None;
    }
    find_isomorphism(g, &g.complement()).map(|sigma| Antimorphism { sigma })
}

/// Orbits of `sigma` on unordered pairs, each listed from its smallest pair
/// along `{u, v} -> {σu, σv}`; orbits are sorted by smallest pair.
pub fn pair_orbits(sigma: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let n = sigma.len();
    let mut seen = vec![false; n * n];
    let mut orbits = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen[u * n + v] {
                continue;
            }
            let mut orbit = Vec::new();
            let (mut a, mut b) = (u, v);
            while !seen[a * n + b] {
                seen[a * n + b] = true;
                orbit.push((a, b));
                let (x, y) = (sigma[a], sigma[b]);
                (a, b) = (x.min(y), x.max(y));
            }
            orbits.push(orbit);
        }
    }
    orbits
}

/// Builds the graph whose pair orbits alternate edge/non-edge, starting with
/// an edge on orbit `i` when `phases[i]` is true.
pub fn graph_from_phases(
    sigma: &[usize],
    orbits: &[Vec<(usize, usize)>],
    phases: &[bool],
) -> Result<Graph> {
    let mut g = Graph::empty(sigma.len());
    for (orbit, &phase) in orbits.iter().zip(phases) {
        if orbit.len() % 2 != 0 {
            return Err(Error::CycleType);
        }
        for (j, &(u, v)) in orbit.iter().enumerate() {
            if (j % 2 == 0) == phase {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

fn require_sc_order(n: usize) -> Result<()> {
    match n % 4 {
        0 | 1 => Ok(()),
        _ => Err(Error::NoScGraph(n)),
    }
}

/// Random self-complementary graph on `n` vertices, reproducible per
/// `(n, seed)`.
pub fn generate_sc(n: usize, seed: u64) -> Result<(Graph, Antimorphism)> {
    require_sc_order(n)?;
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::OutOfRange(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut units = n / 4;
    let mut at = 0;
    while units > 0 {
        let len = 4 * rng.random_range(1..=units);
        units -= len / 4;
        let cycle = &order[at..at + len];
        for i in 0..len {
            sigma[cycle[i]] = cycle[(i + 1) % len];
        }
        at += len;
    }
    let orbits = pair_orbits(&sigma);
    let phases: Vec<bool> = orbits.iter().map(|_| rng.random_bool(0.5)).collect();
    let g = graph_from_phases(&sigma, &orbits, &phases)?;
    Ok((g, Antimorphism { sigma }))
}

/// Integer partitions of `m` in non-increasing order.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// One representative permutation per valid cycle type on `n` vertices.
pub fn representative_sigmas(n: usize) -> Vec<Vec<usize>> {
    partitions(n / 4)
        .into_iter()
        .map(|parts| {
            let mut sigma: Vec<usize> = (0..n).collect();
            let mut at = 0;
            for p in parts {
                let len = 4 * p;
                for i in 0..len {
                    sigma[at + i] = at + (i + 1) % len;
                }
                at += len;
            }
            sigma
        })
        .collect()
}

/// Orders for which [`enumerate_sc`] runs without the large flag.
pub const ENUMERATE_DEFAULT: [usize; 5] = [1, 4, 5, 8, 9];
/// Orders additionally allowed when `allow_large` is set.
pub const ENUMERATE_LARGE: [usize; 2] = [12, 13];

/// All self-complementary graphs on `n` vertices up to isomorphism, in
/// canonical labelling, each with a certificate, sorted by graph6 bytes.
pub fn enumerate_sc(n: usize, allow_large: bool) -> Result<Vec<(Graph, Antimorphism)>> {
    if !(ENUMERATE_DEFAULT.contains(&n) || allow_large && ENUMERATE_LARGE.contains(&n)) {
        return Err(Error::OutOfRange(n));
    }
    let mut found: BTreeMap<Vec<u8>, (Graph, Antimorphism)> = BTreeMap::new();
    for sigma in representative_sigmas(n) {
        let orbits = pair_orbits(&sigma);
        let k = orbits.len();
        for mask in 0u64..(1u64 << k) {
            let phases: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            let g = graph_from_phases(&sigma, &orbits, &phases)?;
            let canon = canonical_form(&g);
            found.entry(encode_graph6(&canon.graph)).or_insert_with(|| {
                let cert = Antimorphism {
                    sigma: sigma.clone(),
                }
                .relabel(&canon.labeling);
                (canon.graph, cert)
            });
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_and_p4_certificates() {
        // (0)(1 2 4 3)
        let c5 = Graph::cycle(5);
        assert!(verify_antimorphism(&c5, &[0, 2, 4, 1, 3]).unwrap());
        // (0 1 3 2)
        let p4 = Graph::path(4);
        assert!(verify_antimorphism(&p4, &[1, 3, 0, 2]).unwrap());
        assert!(!verify_antimorphism(&p4, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn k4_has_no_antimorphism() {
        let k4 = Graph::complete(4);
        let perms = [[1, 2, 3, 0], [0, 1, 2, 3], [1, 0, 3, 2], [3, 2, 1, 0]];
        for p in perms {
            assert!(!verify_antimorphism(&k4, &p).unwrap());
        }
        assert!(find_antimorphism(&k4).is_none());
    }

    #[test]
    fn verify_rejects_bad_sigma() {
        let p4 = Graph::path(4);
        assert_eq!(
            verify_antimorphism(&p4, &[0, 1, 2]),
            Err(Error::SizeMismatch {
                expected: 4,
                got: 3
            })
        );
        assert_eq!(
            verify_antimorphism(&p4, &[0, 0, 1, 2]),
            Err(Error::NotAPermutation(4))
        );
        assert_eq!(
            verify_antimorphism(&p4, &[0, 1, 2, 4]),
            Err(Error::NotAPermutation(4))
        );
    }

    #[test]
    fn find_examples() {
        let sigma = find_antimorphism(&Graph::path(4)).expect("P4 is SC");
        assert!(verify_antimorphism(&Graph::path(4), &sigma.sigma).unwrap());
        assert!(sigma.has_valid_cycle_type());
        assert!(find_antimorphism(&Graph::complete(3)).is_none());
        let k1 = find_antimorphism(&Graph::complete(1)).unwrap();
        assert_eq!(k1, Antimorphism::identity(1));
        assert_eq!(
            find_antimorphism(&Graph::empty(0)),
            Some(Antimorphism::identity(0))
        );
    }

    #[test]
    fn generate_rejects_bad_orders() {
        assert_eq!(generate_sc(6, 0).unwrap_err(), Error::NoScGraph(6));
        assert_eq!(generate_sc(7, 3).unwrap_err(), Error::NoScGraph(7));
        assert_eq!(generate_sc(0, 0).unwrap_err(), Error::OutOfRange(0));
    }

    #[test]
    fn generate_is_reproducible() {
        for n in [4, 5, 8, 13, 24] {
            assert_eq!(generate_sc(n, 42).unwrap(), generate_sc(n, 42).unwrap());
        }
    }

    #[test]
    fn orbits_are_even_and_half_edges() {
        for n in [4, 5, 8, 9, 12, 13] {
            for sigma in representative_sigmas(n) {
                let orbits = pair_orbits(&sigma);
                assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), n * (n - 1) / 2);
                for orbit in &orbits {
                    assert_eq!(orbit.len() % 2, 0);
                }
                for phase in [false, true] {
                    let phases = vec![phase; orbits.len()];
                    let g = graph_from_phases(&sigma, &orbits, &phases).unwrap();
                    assert_eq!(4 * g.edge_count(), n * (n - 1));
                    assert!(verify_antimorphism(&g, &sigma).unwrap());
                }
            }
        }
    }

    #[test]
    fn representative_cycle_types() {
        assert_eq!(representative_sigmas(4), vec![vec![1, 2, 3, 0]]);
        assert_eq!(representative_sigmas(9).len(), 2);
        assert_eq!(representative_sigmas(13).len(), 3);
        for n in [4, 5, 8, 9, 12, 13, 16, 17] {
            for s in representative_sigmas(n) {
                assert!(Antimorphism::new(s).unwrap().has_valid_cycle_type());
            }
        }
    }

    #[test]
    fn invalid_cycle_types_detected() {
        assert!(!Antimorphism::identity(4).has_valid_cycle_type());
        assert!(!Antimorphism::new(vec![1, 0, 3, 2])
            .unwrap()
            .has_valid_cycle_type());
        assert!(!Antimorphism::new(vec![1, 2, 3, 0, 4, 5])
            .unwrap()
            .has_valid_cycle_type());
        assert!(Antimorphism::identity(1).has_valid_cycle_type());
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(enumerate_sc(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_sc(4, false).unwrap().len(), 1);
        assert_eq!(enumerate_sc(5, false).unwrap().len(), 2);
        assert_eq!(enumerate_sc(12, false).unwrap_err(), Error::OutOfRange(12));
        assert_eq!(enumerate_sc(6, true).unwrap_err(), Error::OutOfRange(6));
    }
}
