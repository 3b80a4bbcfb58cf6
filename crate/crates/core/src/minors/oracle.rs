//! Brute-force Hadwiger number for tiny graphs.
//!
//! Every complete-minor model is a family of blocks of some set partition of
//! `V` (the unused vertices forming one extra block), so the largest pairwise
//! adjacent family of connected blocks, maximised over all partitions, is
//! `h(G)`. Uses plain adjacency queries only; nothing is shared with the
//! branch-and-bound search.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`hadwiger_oracle`]. Bell(9) = 21147 partitions.
pub const ORACLE_MAX_N: usize = 9;

fn block_connected(g: &Graph, block: &[usize]) -> bool {
    let mut seen = vec![false; block.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..block.len() {
            if !seen[j] && g.has_edge(block[i], block[j]) {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == block.len()
}

fn blocks_touch(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)))
}

fn best_family(g: &Graph, labels: &[usize], nblocks: usize) -> usize {
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
    for (v, &b) in labels.iter().enumerate() {
        blocks[b].push(v);
    }
    let usable: Vec<&Vec<usize>> = blocks.iter().filter(|b| block_connected(g, b)).collect();
    let m = usable.len();
    let mut touch = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let t = blocks_touch(g, usable[i], usable[j]);
            touch[i][j] = t;
            touch[j][i] = t;
        }
    }
    let mut best = 0;
    for subset in 0u32..(1 << m) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..m).filter(|&i| subset >> i & 1 == 1).collect();
        let clique = members
            .iter()
            .enumerate()
            .all(|(x, &i)| members[x + 1..].iter().all(|&j| touch[i][j]));
        if clique {
            best = size;
        }
    }
    best
}

/// Exact `h(G)` by enumerating set partitions; refuses `n > 9`.
pub fn hadwiger_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::Guard(format!(
            "oracle on {n} vertices (max {ORACLE_MAX_N})"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    // restricted growth strings: labels[0] = 0, labels[i] <= 1 + max(labels[..i])
    let mut labels = vec![0usize; n];
    let mut best = 0;
    fn rec(g: &Graph, labels: &mut Vec<usize>, i: usize, used: usize, best: &mut usize) {
        if i == labels.len() {
            *best = (*best).max(best_family(g, labels, used));
            return;
        }
        for b in 0..=used {
            labels[i] = b;
            rec(g, labels, i + 1, used.max(b + 1), best);
        }
    }
    rec(g, &mut labels, 1, 1, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        for n in 0..=9 {
            assert_eq!(hadwiger_oracle(&Graph::complete(n)).unwrap(), n);
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(hadwiger_oracle(&Graph::empty(5)).unwrap(), 1);
        assert_eq!(hadwiger_oracle(&Graph::path(4)).unwrap(), 2);
        assert_eq!(hadwiger_oracle(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(
            hadwiger_oracle(&Graph::complete_bipartite(3, 3)).unwrap(),
            4
        );
        // K_{3,3} is non-planar but has no K_5 minor; K_{4,4} has one
        assert_eq!(
            hadwiger_oracle(&Graph::complete_bipartite(4, 4)).unwrap(),
            5
        );
    }

    #[test]
    fn guard() {
        assert!(matches!(
            hadwiger_oracle(&Graph::empty(10)),
            Err(Error::Guard(_))
        ));
    }
}
