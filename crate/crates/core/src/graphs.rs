//! Ordered graphs, Hessenberg functions and colourings.
//!
//! Vertices are stored 0-based (`0..n`) in their natural order; user-facing
//! text is 1-based. A Hessenberg function keeps its 1-based values, so the
//! edge `{i, j}` (0-based, `i < j`) belongs to `G(h)` exactly when `j < h[i]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple graph on the vertex set `0 < 1 < ... < n-1`.
///
/// This is the canonical representative of its isomorphism class of ordered
/// graphs, so structural equality is isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl OrderedGraph {
    /// Builds a graph from 0-based edges in either orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!(
                    "self loop at vertex {}",
                    a + 1
                )));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{}, {}}} out of range for {n} vertices",
                    a + 1,
                    b + 1
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        let before = out.len();
        out.dedup();
        if out.len() != before {
            return Err(Error::InvalidGraph("duplicate edge".into()));
        }
        Ok(OrderedGraph { n, edges: out })
    }

    /// The edgeless graph on `n` vertices; `empty(0)` is the unit `G_0`.
    pub fn empty(n: usize) -> Self {
        OrderedGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        OrderedGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Induced subgraph on a vertex subset, relabelled order-preservingly.
    pub fn induced(&self, vertices: &[usize]) -> OrderedGraph {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let pos = |v: usize| sorted.binary_search(&v).ok();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)))
            .collect();
        OrderedGraph {
            n: sorted.len(),
            edges,
        }
    }

    /// The Hessenberg function `h` with `G(h) = self`, when one exists.
    pub fn hessenberg(&self) -> Result<HessenbergFunction> {
        let mut values: Vec<usize> = (1..=self.n).collect();
        for &(u, v) in &self.edges {
            values[u] = values[u].max(v + 1);
        }
        let h = HessenbergFunction::new(values).map_err(|_| self.not_unit_interval())?;
        if &h.graph() != self {
            return Err(self.not_unit_interval());
        }
        Ok(h)
    }

    fn not_unit_interval(&self) -> Error {
        Error::NotUnitInterval(format!("edges {}", self.edge_string()))
    }

    pub fn is_unit_interval(&self) -> bool {
        self.hessenberg().is_ok()
    }

    pub(crate) fn edge_string(&self) -> String {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|(u, v)| format!("{{{},{}}}", u + 1, v + 1))
            .collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, E={})", self.n, self.edge_string())
    }
}

/// Nondecreasing `h: [n] -> [n]` with `i <= h(i)`; values are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        for (i, &v) in values.iter().enumerate() {
            if v < i + 1 || v > n {
                return Err(Error::InvalidHessenberg(format!(
                    "h({}) = {v} is outside [{}, {n}]",
                    i + 1,
                    i + 1
                )));
            }
            if i > 0 && values[i - 1] > v {
                return Err(Error::InvalidHessenberg(format!(
                    "h({}) = {} > h({}) = {v}",
                    i,
                    values[i - 1],
                    i + 1
                )));
            }
        }
        Ok(HessenbergFunction { values })
    }

    /// `h(i) = i`: the edgeless graph.
    pub fn identity(n: usize) -> Self {
        HessenbergFunction {
            values: (1..=n).collect(),
        }
    }

    /// `h(i) = n`: the complete graph.
    pub fn full(n: usize) -> Self {
        HessenbergFunction { values: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Whether the 0-based pair `i < j` is an edge of `G(h)`.
    pub fn allows(&self, i: usize, j: usize) -> bool {
        i < j && j < self.values[i]
    }

    /// The natural unit interval graph `G(h)`.
    pub fn graph(&self) -> OrderedGraph {
        let n = self.n();
        let edges = (0..n)
            .flat_map(|i| (i + 1..self.values[i]).map(move |j| (i, j)))
            .collect();
        OrderedGraph { n, edges }
    }

    /// Concatenation, matching the lexicographic union of the graphs.
    pub fn concat(&self, other: &HessenbergFunction) -> HessenbergFunction {
        let shift = self.n();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|v| v + shift));
        HessenbergFunction { values }
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        HessenbergFunction::new(v)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.values
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;

    /// Parses comma-separated values, optionally prefixed by `h=`.
    /// The empty string is the function on `n = 0`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix("h=").unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(HessenbergFunction::identity(0));
        }
        let values = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidHessenberg(format!("bad value {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HessenbergFunction::new(values)
    }
}

/// All Hessenberg functions on `[n]` in lexicographic order of values.
pub fn enumerate_hessenberg(n: usize) -> Vec<HessenbergFunction> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        let i = prefix.len();
        if i == n {
            out.push(HessenbergFunction {
                values: prefix.clone(),
            });
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1).max(i + 1);
        for v in lo..=n {
            prefix.push(v);
            rec(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// An arbitrary function from vertices to colours `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    r: usize,
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(r: usize, colours: Vec<usize>) -> Result<Self> {
        if let Some(c) = colours.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::InvalidColouring(format!(
                "colour {c} outside 1..={r}"
            )));
        }
        Ok(Colouring { r, colours })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    /// `alpha[i]` = number of vertices with colour `i + 1`.
    pub fn type_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.r];
        for &c in &self.colours {
            counts[c - 1] += 1;
        }
        counts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Monochromatic,
    Ascent,
    Descent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AscentMode {
    Strict,
    Weak,
}

/// Classifies the edge `{u, v}` by comparing colours in vertex order.
pub fn classify_edge(colours: &[usize], u: usize, v: usize) -> EdgeClass {
    let (lo, hi) = (u.min(v), u.max(v));
    match colours[lo].cmp(&colours[hi]) {
        std::cmp::Ordering::Equal => EdgeClass::Monochromatic,
        std::cmp::Ordering::Less => EdgeClass::Ascent,
        std::cmp::Ordering::Greater => EdgeClass::Descent,
    }
}

/// Counts edges `u < v` with `c(u) < c(v)` (strict) or `c(u) <= c(v)` (weak).
pub fn ascent_count(g: &OrderedGraph, colours: &[usize], mode: AscentMode) -> usize {
    g.edges
        .iter()
        .filter(|&&(u, v)| match mode {
            AscentMode::Strict => colours[u] < colours[v],
            AscentMode::Weak => colours[u] <= colours[v],
        })
        .count()
}

pub fn monochromatic_count(g: &OrderedGraph, colours: &[usize]) -> usize {
    g.edges
        .iter()
        .filter(|&&(u, v)| colours[u] == colours[v])
        .count()
}

/// The list of colour-class restrictions `(G|κ⁻¹(1), …, G|κ⁻¹(r))`.
pub fn restrict(g: &OrderedGraph, kappa: &Colouring) -> Vec<OrderedGraph> {
    assert_eq!(g.n, kappa.n(), "colouring size");
    let mut classes = vec![Vec::new(); kappa.r];
    for (v, &c) in kappa.colours.iter().enumerate() {
        classes[c - 1].push(v);
    }
    classes.iter().map(|cls| g.induced(cls)).collect()
}

/// Lexicographic union: earlier summands precede later ones.
pub fn lex_union(graphs: &[OrderedGraph]) -> OrderedGraph {
    let mut n = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges.iter().map(|&(u, v)| (u + n, v + n)));
        n += g.n;
    }
    OrderedGraph { n, edges }
}

/// Connected components as sorted vertex lists, ordered by minimum vertex.
pub fn connected_components(g: &OrderedGraph) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..g.n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(u, v) in &g.edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; g.n];
    for v in 0..g.n {
        let root = find(&mut parent, v);
        if slot[root] == usize::MAX {
            slot[root] = comps.len();
            comps.push(Vec::new());
        }
        comps[slot[root]].push(v);
    }
    comps
}

/// Finest factorization into connected lexicographic summands.
pub fn decompose_multiplicative(g: &OrderedGraph) -> Result<Vec<OrderedGraph>> {
    let comps = connected_components(g);
    let mut next = 0;
    for c in &comps {
        let contiguous = c.first() == Some(&next) && c.windows(2).all(|w| w[1] == w[0] + 1);
        if !contiguous {
            return Err(Error::NotDecomposable(format!("edges {}", g.edge_string())));
        }
        next += c.len();
    }
    Ok(comps.iter().map(|c| g.induced(c)).collect())
}

/// Iterates over all functions `[n] -> [r]` in lexicographic order.
pub fn all_colourings(n: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 {
        Some(1)
    } else {
        r.checked_pow(n as u32)
    };
    let total = total.expect("colouring count overflow");
    (0..total).map(move |mut k| {
        let mut c = vec![1; n];
        for slot in c.iter_mut().rev() {
            *slot = 1 + k % r;
            k /= r;
        }
        c
    })
}

/// All colourings in which colour `i + 1` is used exactly `alpha[i]` times,
/// in lexicographic order.
pub fn colourings_of_type(alpha: &[usize]) -> Vec<Vec<usize>> {
    fn rec(left: &mut [usize], prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in 0..left.len() {
            if left[c] > 0 {
                left[c] -= 1;
                prefix.push(c + 1);
                rec(left, prefix, n, out);
                prefix.pop();
                left[c] += 1;
            }
        }
    }
    let n = alpha.iter().sum();
    let mut out = Vec::new();
    rec(&mut alpha.to_vec(), &mut Vec::with_capacity(n), n, &mut out);
    out
}
