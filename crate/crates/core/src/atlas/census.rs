//! The `(reg, deg h)` census over a list of connected graphs on `n` vertices.
//!
//! Graphs are processed in fixed-size chunks; each chunk is mapped in parallel
//! and folded into the running census with [`RdCensus::merge`], which is
//! commutative and associative, so scheduling never changes the result. After
//! every chunk the running census can be written to a checkpoint file and a
//! later run resumes from it.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cw::{cw_formula_invariants, decompose_structure, is_cameron_walker, CwFormula};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{summarize, GraphSummary};

const CHUNK: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdPoint {
    pub r: usize,
    pub d: usize,
    /// number of isomorphism classes realising the pair
    pub multiplicity: u64,
    /// graph6 of the first realising graph in input order
    pub witness: String,
    pub witness_index: u64,
}

/// A graph that broke one of the per-graph checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdCensus {
    pub n: usize,
    pub total_graphs: u64,
    /// sorted by `(r, d)`
    pub points: Vec<RdPoint>,
    /// the same, restricted to Cameron-Walker graphs
    pub cw_points: Vec<RdPoint>,
    pub cw_graphs: u64,
    pub violations: Vec<Violation>,
}

impl RdCensus {
    pub fn empty(n: usize) -> Self {
        RdCensus {
            n,
            total_graphs: 0,
            points: Vec::new(),
            cw_points: Vec::new(),
            cw_graphs: 0,
            violations: Vec::new(),
        }
    }

    pub fn pairs(&self) -> std::collections::BTreeSet<(usize, usize)> {
        self.points.iter().map(|p| (p.r, p.d)).collect()
    }

    pub fn cw_pairs(&self) -> std::collections::BTreeSet<(usize, usize)> {
        self.cw_points.iter().map(|p| (p.r, p.d)).collect()
    }

    pub fn point(&self, r: usize, d: usize) -> Option<&RdPoint> {
        self.points.iter().find(|p| (p.r, p.d) == (r, d))
    }

    pub fn merge(mut self, other: RdCensus) -> RdCensus {
        assert_eq!(self.n, other.n, "merging censuses for different n");
        self.total_graphs += other.total_graphs;
        self.cw_graphs += other.cw_graphs;
        self.points = merge_points(self.points, other.points);
        self.cw_points = merge_points(self.cw_points, other.cw_points);
        self.violations.extend(other.violations);
        self.violations
            .sort_by(|a, b| (&a.graph6, &a.reason).cmp(&(&b.graph6, &b.reason)));
        self.violations.dedup();
        self
    }

    /// Census CSV: `n,r,d,multiplicity,witness_graph6`, sorted by `(r, d)`.
    pub fn to_csv(&self) -> String {
        points_csv(self.n, &self.points)
    }

    pub fn cw_csv(&self) -> String {
        points_csv(self.n, &self.cw_points)
    }

    /// Scatter data `r,d,cw` where `cw` is 1 for Cameron-Walker-realisable pairs.
    pub fn plot_csv(&self) -> String {
        let cw = self.cw_pairs();
        let mut s = String::from("r,d,cw\n");
        for p in &self.points {
            s.push_str(&format!(
                "{},{},{}\n",
                p.r,
                p.d,
                u8::from(cw.contains(&(p.r, p.d)))
            ));
        }
        s
    }
}

fn merge_points(a: Vec<RdPoint>, b: Vec<RdPoint>) -> Vec<RdPoint> {
    let mut map: BTreeMap<(usize, usize), RdPoint> =
        a.into_iter().map(|p| ((p.r, p.d), p)).collect();
    for p in b {
        match map.get_mut(&(p.r, p.d)) {
            Some(q) => {
                q.multiplicity += p.multiplicity;
                if p.witness_index < q.witness_index {
                    q.witness = p.witness;
                    q.witness_index = p.witness_index;
                }
            }
            None => {
                map.insert((p.r, p.d), p);
            }
        }
    }
    map.into_values().collect()
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    n: usize,
    r: usize,
    d: usize,
    multiplicity: u64,
    witness_graph6: String,
}

pub fn points_csv(n: usize, points: &[RdPoint]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if points.is_empty() {
        w.write_record(["n", "r", "d", "multiplicity", "witness_graph6"])
            .expect("writing to memory");
    }
    for p in points {
        w.serialize(CsvRow {
            n,
            r: p.r,
            d: p.d,
            multiplicity: p.multiplicity,
            witness_graph6: p.witness.clone(),
        })
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii output")
}

/// Parses a census CSV back into points (witness indices are not stored, so
/// they are set to the row number).
pub fn parse_points_csv(text: &str) -> Result<(usize, Vec<RdPoint>)> {
    let bad = |line: u64, msg: String| Error::AtLine {
        line: line as usize,
        source: Box::new(Error::InvalidArgument(msg)),
    };
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| bad(1, e.to_string()))?;
    if header != vec!["n", "r", "d", "multiplicity", "witness_graph6"] {
        return Err(bad(1, format!("unexpected header {header:?}")));
    }
    let mut n = None;
    let mut points = Vec::new();
    for row in rdr.deserialize::<CsvRow>() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            bad(line, e.to_string())
        })?;
        if *n.get_or_insert(row.n) != row.n {
            return Err(bad(points.len() as u64 + 2, "mixed vertex counts".into()));
        }
        points.push(RdPoint {
            r: row.r,
            d: row.d,
            multiplicity: row.multiplicity,
            witness: row.witness_graph6,
            witness_index: points.len() as u64,
        });
    }
    Ok((n.unwrap_or(0), points))
}

/// What the census records about one graph.
#[derive(Clone, Debug)]
pub struct GraphOutcome {
    pub summary: GraphSummary,
    pub cw: bool,
    pub violations: Vec<String>,
}

/// Per-graph bounds: `im <= reg <= m <= n/2`, `reg + deg h <= n`,
/// `reg <= (n-1)/2` for `n >= 3`; for Cameron-Walker graphs additionally the
/// decomposition formulas, `r <= d`, the characterising inequalities, and the
/// pendant-triangle count `n - r - d = #{j : t_j > 0}`.
pub fn examine(g: &Graph) -> Result<GraphOutcome> {
    let n = g.n();
    let s = summarize(g)?;
    let (r, d) = (s.reg, s.deg_h);
    let mut violations = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            violations.push(what);
        }
    };
    check(s.im <= r, format!("im {} > reg {r}", s.im));
    check(r <= s.m, format!("reg {r} > m {}", s.m));
    check(2 * s.m <= n, format!("m {} > n/2", s.m));
    check(r + d <= n, format!("reg + deg h = {} > n", r + d));
    if n >= 3 {
        check(2 * r < n, format!("reg {r} > floor((n-1)/2)"));
    }
    let cw = is_cameron_walker(g)?;
    if cw {
        match decompose_structure(g) {
            Ok(dec) => {
                let f = cw_formula_invariants(&dec);
                let got = CwFormula {
                    n,
                    dim: s.dim,
                    deg_h: d,
                    reg: r,
                };
                check(f == got, format!("formula {f:?} != computed {got:?}"));
                check(
                    n - (r + d).min(n) == dec.attached(),
                    format!("n - r - d != #attached ({})", dec.attached()),
                );
            }
            Err(e) => check(false, format!("decomposition: {e}")),
        }
        check(r <= d, format!("Cameron-Walker with reg {r} > deg h {d}"));
        check(
            crate::constructions::check_cw_region(r, d, n).is_ok(),
            format!("Cameron-Walker pair ({r}, {d}) outside the region"),
        );
    }
    Ok(GraphOutcome {
        summary: s,
        cw,
        violations,
    })
}

fn census_of_chunk(n: usize, graphs: &[Graph], offset: usize) -> Result<RdCensus> {
    graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let graph6 = g.to_graph6();
            let wrap = |e: Error| Error::InGraph {
                graph6: graph6.clone(),
                source: Box::new(e),
            };
            if g.n() != n {
                return Err(wrap(Error::InvalidArgument(format!(
                    "expected {n} vertices, found {}",
                    g.n()
                ))));
            }
            if !g.is_connected() {
                return Err(wrap(Error::Disconnected));
            }
            let out = examine(g).map_err(wrap)?;
            let point = RdPoint {
                r: out.summary.reg,
                d: out.summary.deg_h,
                multiplicity: 1,
                witness: graph6.clone(),
                witness_index: (offset + i) as u64,
            };
            Ok(RdCensus {
                n,
                total_graphs: 1,
                cw_points: if out.cw {
                    vec![point.clone()]
                } else {
                    Vec::new()
                },
                cw_graphs: u64::from(out.cw),
                points: vec![point],
                violations: out
                    .violations
                    .into_iter()
                    .map(|reason| Violation {
                        graph6: graph6.clone(),
                        reason,
                    })
                    .collect(),
            })
        })
        .try_reduce(|| RdCensus::empty(n), |a, b| Ok(a.merge(b)))
}

/// Census of `graphs`, which must all be connected on `n` vertices.
pub fn compute_census(n: usize, graphs: &[Graph]) -> Result<RdCensus> {
    compute_census_checkpointed(n, graphs, None)
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    n: usize,
    input_len: usize,
    done: usize,
    partial: RdCensus,
}

/// As [`compute_census`], resuming from and updating `checkpoint` if given.
/// The checkpoint is removed once the census is complete.
pub fn compute_census_checkpointed(
    n: usize,
    graphs: &[Graph],
    checkpoint: Option<&Path>,
) -> Result<RdCensus> {
    let (mut census, mut done) = (RdCensus::empty(n), 0);
    if let Some(path) = checkpoint.filter(|p| p.exists()) {
        let text = fs::read_to_string(path)?;
        let cp: Checkpoint = serde_json::from_str(&text)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if cp.n != n || cp.input_len != graphs.len() || cp.done > graphs.len() {
            return Err(Error::Checkpoint(format!(
                "{} belongs to a different run (n = {}, {} graphs)",
                path.display(),
                cp.n,
                cp.input_len
            )));
        }
        census = cp.partial;
        done = cp.done;
    }
    while done < graphs.len() {
        let end = (done + CHUNK).min(graphs.len());
        census = census.merge(census_of_chunk(n, &graphs[done..end], done)?);
        done = end;
        if let Some(path) = checkpoint {
            let cp = Checkpoint {
                n,
                input_len: graphs.len(),
                done,
                partial: census.clone(),
            };
            write_atomic(
                path,
                &serde_json::to_string(&cp).expect("census serializes"),
            )?;
        }
    }
    if let Some(path) = checkpoint.filter(|p| p.exists()) {
        fs::remove_file(path)?;
    }
    Ok(census)
}

pub(crate) fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}
