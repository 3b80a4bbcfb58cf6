//! Range bounds for self-complementary graphs and the checks around them:
//! the sum bound `h(G) + h(cG) <= ⌊6n/5⌋`, `χ <= ⌊(n+1)/2⌋` and `χ <= h`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::minors::{hadwiger, max_clique, Budget, HadwigerResult};
use crate::sc::find_antimorphism;

/// Exact chromatic number is only attempted up to this order.
pub const CHROMATIC_MAX_N: usize = 24;

/// `(⌊(n+1)/2⌋, ⌊3n/5⌋)`, the range of `h(G)` over SC graphs of order `n`.
pub fn sc_bounds(n: usize) -> Result<(usize, usize)> {
    if n < 4 || n % 4 > 1 {
        return Err(Error::OutOfRange(n));
    }
    Ok((n.div_ceil(2), 3 * n / 5))
}

/// `⌊6n/5⌋`.
pub fn stiebitz_limit(n: usize) -> usize {
    6 * n / 5
}

/// Computes `h(G)` and `h(cG)` and checks their sum against `⌊6n/5⌋`;
/// `None` when either side runs out of budget.
pub fn stiebitz_check(g: &Graph, budget: &Budget) -> Option<bool> {
    let a = hadwiger(g, budget).exact()?;
    let b = hadwiger(&g.complement(), budget).exact()?;
    Some(a + b <= stiebitz_limit(g.n()))
}

struct Coloring<'a> {
    g: &'a Graph,
    color: Vec<Option<usize>>,
    /// per vertex, bit `c` set when some neighbour has colour `c`
    seen: Vec<u64>,
    best: usize,
    floor: usize,
}

impl Coloring<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| {
                let uncolored = Bits(self.g.neighbors(v).0)
                    .filter(|&u| self.color[u].is_none())
                    .count();
                (self.seen[v].count_ones(), uncolored, usize::MAX - v)
            })
    }

    fn search(&mut self, used: usize) {
        if self.best == self.floor {
            return;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            return;
        };
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.seen[v] & bit(c) != 0 {
                continue;
            }
            let saved: Vec<(usize, u64)> = Bits(self.g.neighbors(v).0)
                .map(|u| (u, self.seen[u]))
                .collect();
            self.color[v] = Some(c);
            for &(u, _) in &saved {
                self.seen[u] |= bit(c);
            }
            self.search(used.max(c + 1));
            for (u, s) in saved {
                self.seen[u] = s;
            }
            self.color[v] = None;
            if self.best == self.floor {
                return;
            }
        }
    }
}

/// Exact `χ(G)` by saturation-ordered branch and bound, seeded with the
/// clique number as a floor. Refuses `n > 24`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_MAX_N {
        return Err(Error::Guard(format!(
            "chromatic number on {n} vertices (max {CHROMATIC_MAX_N})"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut c = Coloring {
        g,
        color: vec![None; n],
        seen: vec![0; n],
        best: n + 1,
        floor: clique_number(g),
    };
    c.search(0);
    Ok(c.best)
}

pub fn clique_number(g: &Graph) -> usize {
    let rows: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).0).collect();
    max_clique(&rows, g.vertices().0).count_ones() as usize
}

/// Colours used by one greedy pass in index order.
fn greedy_colors(g: &Graph) -> usize {
    let mut color = vec![0usize; g.n()];
    let mut used = 0;
    for v in 0..g.n() {
        let taken = Bits(g.neighbors(v).0)
            .filter(|&u| u < v)
            .fold(0u64, |m, u| m | bit(color[u]));
        color[v] = (!taken).trailing_zeros() as usize;
        used = used.max(color[v] + 1);
    }
    used
}

/// A closed integer interval; `lo == hi` when the value is known exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn exact(v: usize) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn from_hadwiger(r: &HadwigerResult) -> Self {
        match *r {
            HadwigerResult::Exact { h, .. } => Interval::exact(h),
            HadwigerResult::Bounds { lo, hi, .. } => Interval { lo, hi },
        }
    }
}

/// `Some(true)` if `a <= b` holds for every value in the intervals,
/// `Some(false)` if it fails for all, `None` otherwise.
fn le(a: Interval, b: Interval) -> Option<bool> {
    if a.hi <= b.lo {
        Some(true)
    } else if a.lo > b.hi {
        Some(false)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundFlags {
    pub lower_ok: Option<bool>,
    pub upper_ok: Option<bool>,
    pub stiebitz_ok: Option<bool>,
    pub ng_ok: Option<bool>,
    pub hadwiger_conj_ok: Option<bool>,
}

impl BoundFlags {
    pub fn all_true(&self) -> bool {
        [
            self.lower_ok,
            self.upper_ok,
            self.stiebitz_ok,
            self.ng_ok,
            self.hadwiger_conj_ok,
        ]
        .iter()
        .all(|f| *f == Some(true))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub h: Interval,
    pub h_complement: Interval,
    pub chi: Interval,
    pub flags: BoundFlags,
}

/// Computes `h`, `h(cG)` and `χ` for an SC graph and evaluates every bound.
pub fn conjecture_report(g: &Graph, budget: &Budget) -> Result<BoundReport> {
    if find_antimorphism(g).is_none() {
        return Err(Error::NotSelfComplementary);
    }
    let n = g.n();
    let (lower, upper) = (n.div_ceil(2), 3 * n / 5);
    let h = Interval::from_hadwiger(&hadwiger(g, budget));
    let hc = Interval::from_hadwiger(&hadwiger(&g.complement(), budget));
    let chi = match chromatic_number(g) {
        Ok(c) => Interval::exact(c),
        Err(_) => Interval {
            lo: clique_number(g),
            hi: greedy_colors(g),
        },
    };
    let sum = Interval {
        lo: h.lo + hc.lo,
        hi: h.hi + hc.hi,
    };
    let flags = BoundFlags {
        lower_ok: le(Interval::exact(lower), h),
        upper_ok: le(h, Interval::exact(upper)),
        stiebitz_ok: le(sum, Interval::exact(stiebitz_limit(n))),
        ng_ok: le(chi, Interval::exact(lower)),
        hadwiger_conj_ok: le(chi, h),
    };
    Ok(BoundReport {
        n,
        lower,
        upper,
        h,
        h_complement: hc,
        chi,
        flags,
    })
}
