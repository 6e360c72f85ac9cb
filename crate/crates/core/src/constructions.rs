//! Builders for the explicit graph families and the witnesses realising
//! prescribed `(reg, deg h)` pairs.
//!
//! Vertex orders are fixed so that graph6 output is stable:
//! * `D_r`: edges `{2k, 2k+1}`.
//! * ribbon: `x_1..x_5` are `0..4`, with `4` the common vertex.
//! * stars: centre `0`; triangle `k` of a star triangle is `{0, 2k+1, 2k+2}`.
//! * `K_{a,b}`: parts `0..a` and `a..a+b`.
//! * Cameron-Walker graphs: `v_1..v_m`, then `w_1..w_p`, then the leaves of
//!   each `v_i` in order, then the triangle pairs of each `w_j` in order.
//! * suspensions append the new vertex last.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{independence_number, max_independent_set_below, Graph, VertexSet};

/// Parameters of `G_{a,b,c}`: `a, b >= 1`, `0 <= c <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl CwParams {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == 0 || b == 0 || c > b {
            return Err(Error::InvalidCwSpec(format!(
                "need a, b >= 1 and 0 <= c <= b, got (a, b, c) = ({a}, {b}, {c})"
            )));
        }
        Ok(CwParams { a, b, c })
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.a + self.b + 2 * self.c
    }

    /// The pair `(a + c, a + b)` that `G_{a,b,c}` realises.
    pub fn expected_rd(&self) -> (usize, usize) {
        (self.a + self.c, self.a + self.b)
    }

    pub fn to_spec(&self) -> CwSpec {
        let core_edges = (0..self.a)
            .flat_map(|i| (0..self.b).map(move |j| (i, j)))
            .collect();
        let t = (0..self.b).map(|j| usize::from(j < self.c)).collect();
        CwSpec {
            core_edges,
            s: vec![1; self.a],
            t,
        }
    }
}

/// Bipartite core on `{v_0..v_{m-1}} x {w_0..w_{p-1}}`, leaf counts `s` on the
/// `v` side and pendant triangle counts `t` on the `w` side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwSpec {
    /// `(i, j)` joins `v_i` and `w_j`.
    pub core_edges: Vec<(usize, usize)>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

impl CwSpec {
    pub fn m(&self) -> usize {
        self.s.len()
    }

    pub fn p(&self) -> usize {
        self.t.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.m() + self.p() + self.s.iter().sum::<usize>() + 2 * self.t.iter().sum::<usize>()
    }

    pub fn validate(&self) -> Result<()> {
        let (m, p) = (self.m(), self.p());
        if m == 0 || p == 0 {
            return Err(Error::InvalidCwSpec(
                "both core parts must be nonempty".into(),
            ));
        }
        if let Some(i) = self.s.iter().position(|&s| s == 0) {
            return Err(Error::InvalidCwSpec(format!("v_{i} carries no leaf")));
        }
        if let Some(&(i, j)) = self.core_edges.iter().find(|&&(i, j)| i >= m || j >= p) {
            return Err(Error::InvalidCwSpec(format!(
                "core edge ({i}, {j}) outside {m} x {p}"
            )));
        }
        let core = self.core_graph()?;
        if !core.is_connected() {
            return Err(Error::InvalidCwSpec("core is disconnected".into()));
        }
        Ok(())
    }

    fn core_graph(&self) -> Result<Graph> {
        let m = self.m();
        let edges: Vec<_> = self.core_edges.iter().map(|&(i, j)| (i, m + j)).collect();
        Graph::from_edge_list(m + self.p(), &edges)
    }
}

pub fn build_dr(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::InvalidArgument("D_r needs r >= 1".into()));
    }
    let edges: Vec<_> = (0..r).map(|k| (2 * k, 2 * k + 1)).collect();
    Graph::from_edge_list(2 * r, &edges)
}

pub fn build_ribbon() -> Graph {
    Graph::from_edge_list(5, &[(4, 0), (4, 1), (4, 2), (4, 3), (0, 1), (2, 3)])
        .expect("fixed edge list")
}

/// `K_{1,k}`.
pub fn build_star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("a star needs k >= 1 rays".into()));
    }
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edge_list(k + 1, &edges)
}

/// `k` triangles sharing vertex `0`.
pub fn build_star_triangle(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "a star triangle needs k >= 1 triangles".into(),
        ));
    }
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        let (x, y) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, x), (0, y), (x, y)]);
    }
    Graph::from_edge_list(2 * k + 1, &edges)
}

pub fn build_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("K_{a,b} needs a, b >= 1".into()));
    }
    let edges: Vec<_> = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, a + j)))
        .collect();
    Graph::from_edge_list(a + b, &edges)
}

pub fn build_cw(spec: &CwSpec) -> Result<Graph> {
    spec.validate()?;
    let (m, p) = (spec.m(), spec.p());
    let mut g = Graph::empty(spec.vertex_count())?;
    for &(i, j) in &spec.core_edges {
        g.add_edge(i, m + j)?;
    }
    let mut next = m + p;
    for (i, &s) in spec.s.iter().enumerate() {
        for _ in 0..s {
            g.add_edge(i, next)?;
            next += 1;
        }
    }
    for (j, &t) in spec.t.iter().enumerate() {
        for _ in 0..t {
            let (x, y) = (next, next + 1);
            g.add_edge(m + j, x)?;
            g.add_edge(m + j, y)?;
            g.add_edge(x, y)?;
            next += 2;
        }
    }
    Ok(g)
}

/// `G_{a,b,c}`: core `K_{a,b}`, one leaf per `v_i`, a pendant triangle on `w_1..w_c`.
pub fn build_g_abc(p: CwParams) -> Result<Graph> {
    build_cw(&p.to_spec())
}

/// Suspension over the lexicographically first independent set of size `dim - 1`;
/// keeps `(reg, deg h)` for graphs without isolated vertices.
pub fn suspend_preserving(g: &Graph) -> Result<Graph> {
    let dim = independence_number(g);
    let s = max_independent_set_below(g, dim.saturating_sub(1))?;
    g.s_suspension(s)
}

/// Suspension of the disjoint union of `parts`, realising the sum of their pairs.
pub fn suspended_union(parts: &[Graph]) -> Result<Graph> {
    let mut union = Graph::empty(0)?;
    for part in parts {
        if let Some(v) = part.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        union = union.disjoint_union(part)?;
    }
    suspend_preserving(&union)
}

/// A connected graph whose edge ideal has regularity `r` and h-polynomial of degree `d`.
///
/// * `r < d`: `D_r` suspended over one endpoint of each edge, then `d - r - 1`
///   further suspensions each also avoiding every earlier apex; `r + d` vertices.
/// * `r = d`: `D_r` suspended over `r - 1` endpoints; `2r + 1` vertices
///   (`D_1` itself for `r = d = 1`).
/// * `d = r - 1`, `r` even: `D_r` coned off, `2r + 1` vertices.
/// * `d = r - 1`, `r` odd: the cone over `D_{r-1}` plus a disjoint edge, suspended
///   over `r - 1` vertices; `2r + 2` vertices.
///
/// Pairs with `d <= r - 2` are rejected.
pub fn realize_rd(r: usize, d: usize) -> Result<Graph> {
    let unsupported = |reason: &str| Error::UnsupportedPair {
        r,
        d,
        reason: reason.to_string(),
    };
    if r == 0 || d == 0 {
        return Err(unsupported("need r, d >= 1"));
    }
    if d + 2 <= r {
        return Err(unsupported(
            "d <= r - 2 needs a building block that is not constructed here",
        ));
    }
    let dr = build_dr(r)?;
    if r < d {
        let base: Vec<usize> = (0..r).map(|k| 2 * k).collect();
        let mut g = dr;
        for i in 0..d - r {
            let apexes = (0..i).map(|j| 2 * r + j);
            g = g.s_suspension(VertexSet::from_vertices(base.iter().copied().chain(apexes)))?;
        }
        Ok(g)
    } else if r == d {
        if r == 1 {
            return Ok(dr);
        }
        dr.s_suspension(VertexSet::from_vertices((0..r - 1).map(|k| 2 * k)))
    } else if r.is_multiple_of(2) {
        dr.s_suspension(VertexSet::EMPTY)
    } else {
        let cone = build_dr(r - 1)?.s_suspension(VertexSet::EMPTY)?;
        let union = cone.disjoint_union(&build_dr(1)?)?;
        let s = max_independent_set_below(&union, r - 1)?;
        union.s_suspension(s)
    }
}

/// Repeated dimension-preserving suspensions up to `n_target` vertices.
pub fn pad_to_n(g: &Graph, n_target: usize) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    if n_target < g.n() {
        return Err(Error::InvalidArgument(format!(
            "cannot pad a {}-vertex graph down to {n_target}",
            g.n()
        )));
    }
    let mut out = g.clone();
    while out.n() < n_target {
        out = suspend_preserving(&out)?;
    }
    Ok(out)
}

/// Checks the three inequalities characterising Cameron-Walker pairs.
pub fn check_cw_region(r: usize, d: usize, n: usize) -> Result<()> {
    let fail = |constraint| {
        Err(Error::CwConstraint {
            r,
            d,
            n,
            constraint,
        })
    };
    if r < 2 || 2 * r + 1 > n {
        return fail("2 <= r <= floor((n-1)/2)");
    }
    if d < r || d + r > n {
        return fail("r <= d <= n - r");
    }
    if d + 2 * r < n + 1 {
        return fail("d >= n + 1 - 2r");
    }
    Ok(())
}

/// `G_{d+2r-n, n-2r, n-r-d}`, an `n`-vertex Cameron-Walker graph with pair `(r, d)`.
pub fn realize_cw(r: usize, d: usize, n: usize) -> Result<Graph> {
    check_cw_region(r, d, n)?;
    build_g_abc(CwParams::new(d + 2 * r - n, n - 2 * r, n - r - d)?)
}
