//! The `(n, h)` table: for every `h` between `⌊(n+1)/2⌋` and `⌊3n/5⌋`, one
//! self-complementary graph of order `n` with Hadwiger number exactly `h`,
//! together with its certificates.
//!
//! Top values come from the block constructions (or search where no
//! construction is available), interior values from extending the entry two
//! below at order `n - 4`, and anything left over from search.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::sc_bounds;
use crate::constructions::{default_x, extend_with, table1_instance, table1_params, vertex_added};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{decode_graph6, encode_graph6_string};
use crate::minors::{
    check_witness, fig4_schedule, greedy_witness, has_clique_minor, table1_schedule, Budget,
    Decision, MinorWitness,
};
use crate::sc::{enumerate_sc, generate_sc, verify_antimorphism, Antimorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperProof {
    /// `has_clique_minor(G, h + 1)` answered "no".
    ExhaustiveSearch,
    /// `h = ⌊3n/5⌋`, the ceiling for every SC graph of order `n`.
    StiebitzFormula,
    /// The refutation ran out of budget.
    Pending,
}

impl fmt::Display for UpperProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UpperProof::ExhaustiveSearch => "exhaustive-search",
            UpperProof::StiebitzFormula => "stiebitz-formula",
            UpperProof::Pending => "pending",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Seeded,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Table1 {
        r: usize,
        q: usize,
    },
    VertexAdded {
        s: usize,
        b: usize,
    },
    Extend {
        parent: String,
    },
    /// `key` is the seed in seeded mode and the enumeration index otherwise.
    Search {
        mode: SearchMode,
        key: u64,
    },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Table1 { r, q } => write!(f, "table1(r={r},q={q})"),
            Provenance::VertexAdded { s, b } => write!(f, "vertex-added(s={s},b={b})"),
            Provenance::Extend { parent } => write!(f, "extend({parent})"),
            Provenance::Search {
                mode: SearchMode::Seeded,
                key,
            } => write!(f, "search(seed={key})"),
            Provenance::Search {
                mode: SearchMode::Exhaustive,
                key,
            } => write!(f, "search(index={key})"),
        }
    }
}

fn graph6_ser<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&encode_graph6_string(g))
}

fn graph6_de<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
    let text = String::deserialize(d)?;
    decode_graph6(text.as_bytes()).map_err(serde::de::Error::custom)
}

/// One certified row of the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub n: usize,
    pub target_h: usize,
    #[serde(serialize_with = "graph6_ser", deserialize_with = "graph6_de")]
    pub graph: Graph,
    pub sigma: Antimorphism,
    pub lower_witness: MinorWitness,
    pub upper_proof: UpperProof,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        entry_id(self.n, self.target_h)
    }

    /// Checks everything that does not need a search: the antimorphism, the
    /// witness and the upper-proof policy.
    pub fn certify(&self) -> Result<()> {
        let reject = |why: &str| Err(Error::Certificate(format!("{}: {why}", self.id())));
        if self.graph.n() != self.n {
            return reject("order does not match n");
        }
        if !verify_antimorphism(&self.graph, &self.sigma.sigma)? {
            return reject("sigma is not an antimorphism");
        }
        if self.lower_witness.size() != self.target_h
            || !check_witness(&self.graph, &self.lower_witness)?
        {
            return reject("lower witness does not certify target_h");
        }
        if self.upper_proof == UpperProof::StiebitzFormula && self.target_h != 3 * self.n / 5 {
            return reject("formula proof used below the ceiling");
        }
        if let Provenance::Extend { parent } = &self.provenance {
            if *parent != entry_id(self.n - 4, self.target_h - 2) {
                return reject("extension parent is not (n - 4, h - 2)");
            }
        }
        Ok(())
    }

    /// [`certify`](Self::certify), plus a fresh refutation of `K_{h+1}` when
    /// the entry claims one. `Ok(false)` if the search disagrees or runs out.
    pub fn recheck(&self, budget: &Budget) -> Result<bool> {
        self.certify()?;
        if self.upper_proof != UpperProof::ExhaustiveSearch {
            return Ok(true);
        }
        Ok(has_clique_minor(&self.graph, self.target_h + 1, budget).decision == Decision::No)
    }
}

pub fn entry_id(n: usize, h: usize) -> String {
    format!("n{n}-h{h}")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Seed for `X` in the constructions and first seed of seeded search.
    pub seed: u64,
    /// Per decision; its time limit also caps a whole search run.
    pub budget: Budget,
    /// Seeds tried by one seeded search.
    pub max_candidates: u64,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions {
            seed: 0,
            budget: Budget::default(),
            max_candidates: 10_000,
        }
    }
}

/// Entries for one order, plus the `h` values no certified graph was found for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogReport {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
    pub missing: Vec<usize>,
}

impl CatalogReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
            && self
                .entries
                .iter()
                .all(|e| e.upper_proof != UpperProof::Pending)
    }

    pub fn entry(&self, h: usize) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.target_h == h)
    }
}

/// Upper proof for a graph already known to have a `K_h` minor; `None` when
/// `K_{h+1}` exists.
fn upper_proof(g: &Graph, h: usize, budget: &Budget) -> Option<UpperProof> {
    match has_clique_minor(g, h + 1, budget).decision {
        Decision::No => Some(UpperProof::ExhaustiveSearch),
        Decision::Unknown if h == 3 * g.n() / 5 => Some(UpperProof::StiebitzFormula),
        Decision::Unknown => Some(UpperProof::Pending),
        Decision::Yes(_) => None,
    }
}

/// Certifies one candidate for `h(G) = h`, or rejects it.
fn try_candidate(
    g: &Graph,
    sigma: &Antimorphism,
    h: usize,
    budget: &Budget,
    filter: bool,
) -> Option<(MinorWitness, UpperProof)> {
    let greedy = greedy_witness(g);
    if greedy.size() > h || (filter && greedy.size() < h) {
        return None;
    }
    let lower = if greedy.size() == h {
        greedy
    } else {
        match has_clique_minor(g, h, budget).decision {
            Decision::Yes(w) => w,
            _ => return None,
        }
    };
    let proof = upper_proof(g, h, budget)?;
    if proof == UpperProof::Pending {
        return None;
    }
    debug_assert!(verify_antimorphism(g, &sigma.sigma).unwrap_or(false));
    Some((lower, proof))
}

/// Looks for an SC graph of order `n` with `h(G) = h`: seeded mode walks
/// `generate_sc(n, seed)`, `generate_sc(n, seed + 1)`, ... and skips
/// candidates whose greedy bound misses `h`; exhaustive mode walks
/// `enumerate_sc(n)` (`n <= 13`). `None` if nothing qualifies in budget.
pub fn search_sc_with_h(
    n: usize,
    h: usize,
    mode: SearchMode,
    seed: u64,
    opts: &CatalogOptions,
) -> Result<Option<CatalogEntry>> {
    if h == 0 || h > n {
        return Err(Error::InvalidTarget { n, h });
    }
    if n % 4 > 1 {
        return Err(Error::NoScGraph(n));
    }
    let started = Instant::now();
    let out_of_time = || opts.budget.max_time.is_some_and(|t| started.elapsed() > t);
    let found = |graph: Graph, sigma: Antimorphism, lower, proof, key| {
        Some(CatalogEntry {
            n,
            target_h: h,
            graph,
            sigma,
            lower_witness: lower,
            upper_proof: proof,
            provenance: Provenance::Search { mode, key },
        })
    };
    match mode {
        SearchMode::Seeded => {
            for key in seed..seed.saturating_add(opts.max_candidates) {
                if out_of_time() {
                    break;
                }
                let (g, sigma) = generate_sc(n, key)?;
                if let Some((lower, proof)) = try_candidate(&g, &sigma, h, &opts.budget, true) {
                    return Ok(found(g, sigma, lower, proof, key));
                }
            }
        }
        SearchMode::Exhaustive => {
            for (i, (g, sigma)) in enumerate_sc(n, true)?.into_iter().enumerate() {
                if out_of_time() {
                    break;
                }
                if let Some((lower, proof)) = try_candidate(&g, &sigma, h, &opts.budget, false) {
                    return Ok(found(g, sigma, lower, proof, i as u64));
                }
            }
        }
    }
    Ok(None)
}

/// Builds catalogs bottom-up, reusing the order `n - 4` catalog for the
/// extension step.
pub struct CatalogBuilder {
    opts: CatalogOptions,
    done: BTreeMap<usize, CatalogReport>,
}

impl CatalogBuilder {
    pub fn new(opts: CatalogOptions) -> Self {
        CatalogBuilder {
            opts,
            done: BTreeMap::new(),
        }
    }

    pub fn catalog(&mut self, n: usize) -> Result<&CatalogReport> {
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::OutOfRange(n));
        }
        let (lower, upper) = sc_bounds(n)?;
        if !self.done.contains_key(&n) {
            if n >= 8 {
                self.catalog(n - 4)?;
            }
            let mut entries = Vec::new();
            let mut missing = Vec::new();
            for h in lower..=upper {
                let entry = if h == upper {
                    self.top(n)?
                } else {
                    self.interior(n, h)?
                };
                match entry {
                    Some(e) => {
                        e.certify()?;
                        entries.push(e);
                    }
                    None => missing.push(h),
                }
            }
            self.done.insert(
                n,
                CatalogReport {
                    n,
                    entries,
                    missing,
                },
            );
        }
        Ok(&self.done[&n])
    }

    fn top(&self, n: usize) -> Result<Option<CatalogEntry>> {
        let h = 3 * n / 5;
        let seed = self.opts.seed;
        let (graph, sigma, lower, provenance) = if let Some(row) = table1_params(n)? {
            let (_, c) = table1_instance(n, seed)?.expect("row exists");
            let w = table1_schedule(&c.graph, &c.blocks, row.q, row.r)?;
            (
                c.graph,
                c.sigma,
                w,
                Provenance::Table1 { r: row.r, q: row.q },
            )
        } else if n % 20 == 17 {
            let s = (n - 17) / 20;
            let (x, _) = default_x(4 * s + 4, seed)?;
            let c = vertex_added(s, &x)?;
            let b = c
                .blocks
                .small_half
                .first()
                .expect("small half is non-empty");
            let w = fig4_schedule(&c.graph, &c.blocks, s, b)?;
            (c.graph, c.sigma, w, Provenance::VertexAdded { s, b })
        } else {
            return self.by_search(n, h);
        };
        debug_assert_eq!(lower.size(), h);
        let proof = upper_proof(&graph, h, &self.opts.budget).ok_or_else(|| {
            Error::Certificate(format!(
                "{}: K_{} minor above the ceiling",
                entry_id(n, h),
                h + 1
            ))
        })?;
        Ok(Some(CatalogEntry {
            n,
            target_h: h,
            graph,
            sigma,
            lower_witness: lower,
            upper_proof: proof,
            provenance,
        }))
    }

    fn interior(&self, n: usize, h: usize) -> Result<Option<CatalogEntry>> {
        if let Some(parent) = n
            .checked_sub(4)
            .and_then(|p| self.done.get(&p))
            .and_then(|r| r.entry(h - 2))
        {
            let c = extend_with(&parent.graph, &parent.sigma)?;
            // {e¹, k¹} and {k², e²} see all of X and each other
            let b = &c.blocks;
            let mut sets = parent.lower_witness.branch_sets.clone();
            sets.push(VertexSet::from_iter([
                b.e1.first().unwrap(),
                b.k1.first().unwrap(),
            ]));
            sets.push(VertexSet::from_iter([
                b.k2.first().unwrap(),
                b.e2.first().unwrap(),
            ]));
            let lower = MinorWitness::new(sets);
            if let Some(proof) = upper_proof(&c.graph, h, &self.opts.budget) {
                return Ok(Some(CatalogEntry {
                    n,
                    target_h: h,
                    graph: c.graph,
                    sigma: c.sigma,
                    lower_witness: lower,
                    upper_proof: proof,
                    provenance: Provenance::Extend {
                        parent: parent.id(),
                    },
                }));
            }
        }
        self.by_search(n, h)
    }

    fn by_search(&self, n: usize, h: usize) -> Result<Option<CatalogEntry>> {
        let found = search_sc_with_h(n, h, SearchMode::Seeded, self.opts.seed, &self.opts)?;
        if found.is_some() || n > 13 {
            return Ok(found);
        }
        search_sc_with_h(n, h, SearchMode::Exhaustive, 0, &self.opts)
    }
}

/// Catalog for a single order with a fresh builder.
pub fn theorem1_catalog(n: usize, opts: &CatalogOptions) -> Result<CatalogReport> {
    CatalogBuilder::new(opts.clone()).catalog(n).cloned()
}

#[derive(Serialize)]
struct SummaryRow {
    id: String,
    n: usize,
    h: usize,
    provenance: String,
    upper_proof: UpperProof,
    graph6: String,
}

#[derive(Serialize)]
struct Summary {
    complete: bool,
    rows: Vec<SummaryRow>,
    missing: Vec<String>,
}

/// Writes `<id>.g6` and `<id>.json` per entry plus `summary.md` and
/// `summary.json`. Contents depend only on the reports, never on timing.
pub fn emit_catalog(reports: &[CatalogReport], dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut write = |name: String, contents: String| -> Result<()> {
        let path = dir.join(name);
        fs::write(&path, contents)?;
        written.push(path);
        Ok(())
    };
    let mut rows = Vec::new();
    let mut missing = Vec::new();
    for report in reports {
        for e in &report.entries {
            let g6 = encode_graph6_string(&e.graph);
            write(format!("{}.g6", e.id()), format!("{g6}\n"))?;
            let json = serde_json::to_string_pretty(e).map_err(|err| Error::Io(err.to_string()))?;
            write(format!("{}.json", e.id()), format!("{json}\n"))?;
            rows.push(SummaryRow {
                id: e.id(),
                n: e.n,
                h: e.target_h,
                provenance: e.provenance.to_string(),
                upper_proof: e.upper_proof,
                graph6: g6,
            });
        }
        missing.extend(report.missing.iter().map(|&h| entry_id(report.n, h)));
    }
    let complete = reports.iter().all(CatalogReport::is_complete);
    let mut md =
        String::from("| n | h | provenance | upper proof | graph6 |\n|---|---|---|---|---|\n");
    for r in &rows {
        md.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            r.n,
            r.h,
            r.provenance,
            r.upper_proof,
            r.graph6.replace('|', "\\|")
        ));
    }
    for id in &missing {
        md.push_str(&format!("\nmissing: {id}\n"));
    }
    let summary = Summary {
        complete,
        rows,
        missing,
    };
    let json = serde_json::to_string_pretty(&summary).map_err(|err| Error::Io(err.to_string()))?;
    write("summary.md".into(), md)?;
    write("summary.json".into(), format!("{json}\n"))?;
    Ok(written)
}

/// Orders run by default: the smallest member of each residue class mod 20.
pub const DEFAULT_ORDERS: [usize; 10] = [4, 5, 8, 9, 12, 13, 16, 17, 20, 21];

/// Orders in `[from, to]` that the driver attempts. Classes `12 mod 20`
/// beyond 12 need heavy search and are skipped unless `all_classes` is set.
pub fn driver_orders(from: usize, to: usize, all_classes: bool) -> Vec<usize> {
    (from.max(4)..=to)
        .filter(|n| n % 4 <= 1)
        .filter(|&n| all_classes || n % 20 != 12 || n == 12)
        .collect()
}
