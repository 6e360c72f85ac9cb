//! Named verification suites: each one checks a family of identities or set
//! equalities and reports every failure it finds.
//!
//! Census-based suites take a `census` callback so callers can supply cached
//! censuses; [`fresh_census`] enumerates and computes from scratch.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::atlas::{
    compute_census, count_cw, enumerate_connected, lattice_cw, verify_cw_characterization,
    verify_sandwich, RdCensus,
};
use crate::constructions::{build_cw, CwSpec};
use crate::cw::{
    cw_formula_invariants, decompose_cw, is_cameron_walker, pendant_triangle_check, spec_formula,
    CwFormula,
};
use crate::error::{Error, Result};
use crate::graph::{independence_number, Graph, VertexSet};
use crate::invariants::{hilbert_data, regularity, HOCHSTER_LIMIT};

/// Failures listed per report before the rest are only counted.
const MAX_LISTED: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suite {
    /// `im <= reg <= m <= n/2` and `reg + deg h <= n` over censuses
    Lemma2_1,
    /// suspension laws on random graphs
    Lemma2_2,
    /// additivity over disjoint unions on random graphs
    Lemma2_3,
    /// `reg = n/2` is never attained by a connected graph on even `n`
    Lemma3_3,
    /// `A(n) ⊆ RD(n) ⊆ B(n)` and `RD(n) ⊆ RD(n+1)`
    Thm3_6,
    /// Cameron-Walker formulas on random specs
    Thm4_3,
    /// Cameron-Walker pairs equal the region, with constructed witnesses
    Thm5_1,
    /// pendant triangles account for `n - r - d`
    Thm5_2,
    /// closed-form count against the region, and its growth rate
    Thm5_4,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma2_1,
        Suite::Lemma2_2,
        Suite::Lemma2_3,
        Suite::Lemma3_3,
        Suite::Thm3_6,
        Suite::Thm4_3,
        Suite::Thm5_1,
        Suite::Thm5_2,
        Suite::Thm5_4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Lemma2_1 => "lemma2.1",
            Suite::Lemma2_2 => "lemma2.2",
            Suite::Lemma2_3 => "lemma2.3",
            Suite::Lemma3_3 => "lemma3.3",
            Suite::Thm3_6 => "thm3.6",
            Suite::Thm4_3 => "thm4.3",
            Suite::Thm5_1 => "thm5.1",
            Suite::Thm5_2 => "thm5.2",
            Suite::Thm5_4 => "thm5.4",
        }
    }

    /// Whether the suite reads censuses (and so is bounded by the generator).
    pub fn uses_census(self) -> bool {
        matches!(
            self,
            Suite::Lemma2_1 | Suite::Lemma3_3 | Suite::Thm3_6 | Suite::Thm5_1 | Suite::Thm5_2
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| {
                let ids: Vec<_> = Suite::ALL.iter().map(|s| s.id()).collect();
                Error::InvalidArgument(format!(
                    "unknown suite {s:?}; expected one of {}",
                    ids.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// inclusive vertex-count range for census and counting suites
    pub n_min: usize,
    pub n_max: usize,
    /// random cases for the sampling suites
    pub samples: usize,
    pub seed: u64,
}

impl VerifyOptions {
    /// Defaults per suite: censuses for `n <= 8`, counts up to 500, 200 random
    /// graphs on at most 9 vertices, 500 random specs on at most 10.
    pub fn defaults_for(suite: Suite) -> Self {
        let (n_min, n_max, samples) = match suite {
            Suite::Lemma2_1 | Suite::Thm3_6 => (3, 8, 0),
            Suite::Lemma3_3 => (4, 8, 0),
            Suite::Thm5_1 => (5, 8, 0),
            Suite::Thm5_2 => (5, 8, 200),
            Suite::Thm5_4 => (5, 500, 0),
            Suite::Lemma2_2 | Suite::Lemma2_3 => (2, 9, 200),
            Suite::Thm4_3 => (3, 10, 500),
        };
        VerifyOptions {
            n_min,
            n_max,
            samples,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    /// number of individual cases checked
    pub checked: u64,
    pub failure_count: u64,
    /// the first failures, described
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failure_count: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        }
    }

    fn report(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite: suite.id().to_string(),
            passed: self.failure_count == 0 && self.checked > 0,
            checked: self.checked,
            failure_count: self.failure_count,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

/// Enumerates the connected graphs on `n` vertices and computes their census.
pub fn fresh_census(n: usize) -> Result<RdCensus> {
    compute_census(n, &enumerate_connected(n)?)
}

/// Runs `suite`, fetching censuses through `census`.
pub fn run_suite(
    suite: Suite,
    opts: &VerifyOptions,
    census: &mut dyn FnMut(usize) -> Result<RdCensus>,
) -> Result<SuiteReport> {
    if opts.n_min > opts.n_max {
        return Err(Error::InvalidArgument(format!(
            "empty range {}..{}",
            opts.n_min, opts.n_max
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut tally = Tally::default();
    let range = opts.n_min..=opts.n_max;
    match suite {
        Suite::Lemma2_1 => {
            for n in range {
                let c = census(n)?;
                tally.checked += c.total_graphs;
                for v in &c.violations {
                    tally.fail(format!("n = {n}, {}: {}", v.graph6, v.reason));
                }
            }
        }
        Suite::Lemma3_3 => {
            for n in range.filter(|n| n % 2 == 0) {
                let c = census(n)?;
                let hits: Vec<_> = c.points.iter().filter(|p| 2 * p.r == n).collect();
                tally.check(hits.is_empty(), || {
                    format!("n = {n}: reg = {} attained by {}", n / 2, hits[0].witness)
                });
            }
        }
        Suite::Thm3_6 => {
            let mut previous: Option<RdCensus> = None;
            for n in range {
                let c = census(n)?;
                let rep = verify_sandwich(&c);
                tally.check(rep.a_not_realized.is_empty(), || {
                    format!(
                        "n = {n}: A(n) points not realised: {:?}",
                        rep.a_not_realized
                    )
                });
                tally.check(rep.realized_outside_b.is_empty(), || {
                    format!(
                        "n = {n}: realised points outside B(n): {:?}",
                        rep.realized_outside_b
                    )
                });
                tally.notes.push(format!(
                    "n = {n}: {} points, band B\\A realised {:?}",
                    c.points.len(),
                    rep.band_realized
                ));
                if let Some(prev) = previous {
                    let lost: Vec<_> = prev.pairs().difference(&c.pairs()).copied().collect();
                    tally.check(lost.is_empty(), || {
                        format!("RD({}) not contained in RD({n}): {lost:?}", n - 1)
                    });
                }
                previous = Some(c);
            }
        }
        Suite::Thm5_1 => {
            for n in range.filter(|&n| n >= 5) {
                let rep = verify_cw_characterization(&census(n)?);
                tally.check(rep.holds(), || format!("n = {n}: {rep:?}"));
                tally
                    .notes
                    .push(format!("n = {n}: {} region points", rep.lattice_size));
            }
        }
        Suite::Thm5_2 => {
            for n in range {
                let c = census(n)?;
                tally.checked += c.cw_graphs;
                for v in c
                    .violations
                    .iter()
                    .filter(|v| v.reason.contains("attached"))
                {
                    tally.fail(format!("n = {n}, {}: {}", v.graph6, v.reason));
                }
            }
            for _ in 0..opts.samples {
                let spec = random_spec(&mut rng, 10);
                let g = build_cw(&spec)?;
                if !is_cameron_walker(&g)? {
                    continue;
                }
                let rep = pendant_triangle_check(&g)?;
                tally.check(rep.holds(), || format!("{spec:?}: {rep:?}"));
            }
        }
        Suite::Thm5_4 => {
            for n in range.filter(|&n| n >= 5) {
                let (count, size) = (count_cw(n), lattice_cw(n).len() as u64);
                tally.check(count == size, || {
                    format!("n = {n}: formula {count}, region {size}")
                });
                if n >= 20 {
                    let dev = (count as f64 / (n * n) as f64 - 1.0 / 12.0).abs();
                    tally.check(dev <= 3.0 / n as f64, || {
                        format!("n = {n}: |count/n^2 - 1/12| = {dev} > 3/n")
                    });
                }
            }
        }
        Suite::Lemma2_2 => {
            let n_max = opts.n_max.min(HOCHSTER_LIMIT - 1);
            for _ in 0..opts.samples {
                let g = random_connected(&mut rng, opts.n_min.max(2), n_max);
                let s = random_independent_set(&mut rng, &g);
                check_suspension(&g, s, &mut tally)?;
            }
        }
        Suite::Lemma2_3 => {
            let n_max = opts.n_max.min(HOCHSTER_LIMIT);
            if n_max < 4 {
                return Err(Error::InvalidArgument("lemma2.3 needs n_max >= 4".into()));
            }
            for _ in 0..opts.samples {
                let g1 = random_connected(&mut rng, 2, n_max - 2);
                let g2 = random_connected(&mut rng, 2, n_max - g1.n());
                let u = g1.disjoint_union(&g2)?;
                let (h1, h2, hu) = (hilbert_data(&g1), hilbert_data(&g2), hilbert_data(&u));
                let regs = (regularity(&g1)?, regularity(&g2)?, regularity(&u)?);
                tally.check(regs.2 == regs.0 + regs.1, || {
                    format!(
                        "{} + {}: reg {} != {} + {}",
                        g1.to_graph6(),
                        g2.to_graph6(),
                        regs.2,
                        regs.0,
                        regs.1
                    )
                });
                tally.check(hu.deg_h == h1.deg_h + h2.deg_h, || {
                    format!(
                        "{} + {}: deg h {} != {} + {}",
                        g1.to_graph6(),
                        g2.to_graph6(),
                        hu.deg_h,
                        h1.deg_h,
                        h2.deg_h
                    )
                });
            }
        }
        Suite::Thm4_3 => {
            let n_max = opts.n_max.min(HOCHSTER_LIMIT);
            for _ in 0..opts.samples {
                let spec = random_spec(&mut rng, n_max);
                let g = build_cw(&spec)?;
                let computed = CwFormula {
                    n: g.n(),
                    dim: independence_number(&g),
                    deg_h: hilbert_data(&g).deg_h,
                    reg: regularity(&g)?,
                };
                let f = spec_formula(&spec);
                tally.check(f == computed, || {
                    format!("{spec:?}: formula {f:?}, computed {computed:?}")
                });
                if is_cameron_walker(&g)? {
                    let from_dec = cw_formula_invariants(&decompose_cw(&g)?);
                    tally.check(from_dec == computed, || {
                        format!(
                            "{}: decomposition gives {from_dec:?}, computed {computed:?}",
                            g.to_graph6()
                        )
                    });
                }
            }
        }
    }
    Ok(tally.report(suite))
}

fn check_suspension(g: &Graph, s: VertexSet, tally: &mut Tally) -> Result<()> {
    let gs = g.s_suspension(s)?;
    let label = || {
        format!(
            "{} with S = {:?}",
            g.to_graph6(),
            s.iter().collect::<Vec<_>>()
        )
    };
    let (r, rs) = (regularity(g)?, regularity(&gs)?);
    tally.check(r == rs, || format!("{}: reg {r} -> {rs}", label()));

    let (h, hs) = (hilbert_data(g), hilbert_data(&gs));
    // H_{G^S} = H_G + t/(1-t)^{|S|+1}, compared over a common denominator
    let k = s.len();
    let power = h.dim.max(hs.dim).max(k + 1);
    let lhs = crate::invariants::trim(hs.numerator_over(power));
    let mut rhs = h.numerator_over(power);
    let extra = crate::invariants::one_minus_t_pow(power - k - 1);
    if rhs.len() < extra.len() + 1 {
        rhs.resize(extra.len() + 1, 0);
    }
    for (i, c) in extra.iter().enumerate() {
        rhs[i + 1] += c;
    }
    let rhs = crate::invariants::trim(rhs);
    tally.check(lhs == rhs, || {
        format!("{}: Hilbert series identity fails", label())
    });

    if k < h.dim {
        tally.check(hs.dim == h.dim, || {
            format!("{}: dim {} -> {}", label(), h.dim, hs.dim)
        });
    }
    if k + 1 == h.dim {
        tally.check(hs.deg_h == h.deg_h, || {
            format!("{}: deg h {} -> {}", label(), h.deg_h, hs.deg_h)
        });
    }
    Ok(())
}

/// A random connected graph on `lo..=hi` vertices: a random tree plus each
/// other edge with a random density.
pub fn random_connected(rng: &mut impl Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi.max(lo));
    let mut g = Graph::empty(n).expect("small n");
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("valid edge");
    }
    let density: f64 = rng.gen_range(0.0..0.7);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// A random independent set, from empty up to maximal.
pub fn random_independent_set(rng: &mut impl Rng, g: &Graph) -> VertexSet {
    let mut order: Vec<usize> = g.vertices().iter().collect();
    order.shuffle(rng);
    let target = rng.gen_range(0..=g.n());
    let mut s = 0u64;
    let mut blocked = 0u64;
    for v in order {
        if (s.count_ones() as usize) >= target {
            break;
        }
        if blocked >> v & 1 == 0 {
            s |= 1 << v;
            blocked |= 1 << v | g.neighbors(v).bits();
        }
    }
    VertexSet(s)
}

/// A random valid construction spec on at most `n_max` vertices.
pub fn random_spec(rng: &mut impl Rng, n_max: usize) -> CwSpec {
    assert!(n_max >= 3, "a spec needs at least 3 vertices");
    loop {
        let m = rng.gen_range(1..=3);
        let p = rng.gen_range(1..=3);
        let mut core_edges = Vec::new();
        // a spanning tree of K_{m,p} first, then random extra edges
        let mut order: Vec<(bool, usize)> = (0..m)
            .map(|i| (false, i))
            .chain((0..p).map(|j| (true, j)))
            .collect();
        order.shuffle(rng);
        let mut placed: Vec<(bool, usize)> = Vec::new();
        for &x in &order {
            let other: Vec<_> = placed.iter().filter(|y| y.0 != x.0).collect();
            if !placed.is_empty() {
                if other.is_empty() {
                    break;
                }
                let y = other[rng.gen_range(0..other.len())];
                let (i, j) = if x.0 { (y.1, x.1) } else { (x.1, y.1) };
                core_edges.push((i, j));
            }
            placed.push(x);
        }
        for i in 0..m {
            for j in 0..p {
                if !core_edges.contains(&(i, j)) && rng.gen_bool(0.4) {
                    core_edges.push((i, j));
                }
            }
        }
        core_edges.sort_unstable();
        let s = (0..m).map(|_| rng.gen_range(1..=2)).collect();
        let t = (0..p).map(|_| rng.gen_range(0..=2)).collect();
        let spec = CwSpec { core_edges, s, t };
        if spec.vertex_count() <= n_max && spec.validate().is_ok() {
            return spec;
        }
    }
}
