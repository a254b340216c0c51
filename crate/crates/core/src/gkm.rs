//! The combinatorial model of torus-equivariant cohomology of regular
//! semisimple Hessenberg varieties.
//!
//! A vertex of the moment graph is a bijection `β` from the `R` indeterminates
//! to the `L` indeterminates, stored as a word `w` with `β(R_i) = L_{w(i)}`.
//! Elements are vectors of polynomials indexed by vertices; the primary
//! storage is the `R`-representation `g_β(R_1, ..., R_n)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, Family, MPoly, Monomial, QPoly, QRational};
use crate::graphs::HessenbergFunction;
use crate::symfun::{partitions_of, Partition, SymElementP, SymFunctionJson};

/// Default cap on `n` for full pipeline runs.
pub const DEFAULT_MAX_N: usize = 5;

/// Permutation of `0..n`, stored as its word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// `β ∈ S(L←R)` with `β(R_i) = L_{w(i)}`.
pub type Bijection = Permutation;

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; word.len()];
        for &x in &word {
            if x >= word.len() || seen[x] {
                return Err(Error::Parse(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    /// Parses a 1-based word such as `"2,1,3"`.
    pub fn parse_one_based(s: &str) -> Result<Self> {
        let word = s
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::Parse(format!("bad permutation entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The transposition of positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w: Vec<usize> = (0..n).collect();
        w.swap(i, j);
        Permutation(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn has_inversion(&self, i: usize, j: usize) -> bool {
        self.0[i] > self.0[j]
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::from_parts_unsorted(lengths)
    }

    /// A permutation of the given cycle type, with cycles on consecutive points.
    pub fn of_cycle_type(lambda: &Partition) -> Permutation {
        let mut w = Vec::with_capacity(lambda.size());
        let mut start = 0;
        for &k in lambda.parts() {
            w.extend((start + 1..start + k).chain(std::iter::once(start)));
            start += k;
        }
        Permutation(w)
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All bijections for a given `n`, in topological order: sorted by
/// inversion count, then lexicographically. Every moment-graph edge raises
/// the inversion count, so this order is valid for every `h`.
#[derive(Debug, PartialEq, Eq)]
pub struct VertexSet {
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl VertexSet {
    /// Shared instance for `n`; elements over the same `n` share one set.
    pub fn for_n(n: usize) -> Arc<VertexSet> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<VertexSet>>>> = OnceLock::new();
        let mut cache = CACHE
            .get_or_init(Default::default)
            .lock()
            .expect("vertex cache");
        cache
            .entry(n)
            .or_insert_with(|| {
                let mut perms = Permutation::all(n);
                perms.sort_by_cached_key(|w| (w.inversions(), w.clone()));
                let index = perms
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, w)| (w, i))
                    .collect();
                Arc::new(VertexSet { perms, index })
            })
            .clone()
    }

    pub fn n(&self) -> usize {
        self.perms[0].n()
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, v: usize) -> &Permutation {
        &self.perms[v]
    }

    pub fn index_of(&self, w: &Permutation) -> usize {
        self.index[w]
    }
}

/// Directed edge `β -> β ∘ (R_i ↔ R_j)`, label `(i, j)` with `i < j` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentEdge {
    pub source: usize,
    pub target: usize,
    pub label: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct MomentGraph {
    h: HessenbergFunction,
    vertices: Arc<VertexSet>,
    edges: Vec<MomentEdge>,
    in_edges: Vec<Vec<usize>>,
    out_edges: Vec<Vec<usize>>,
}

pub fn build_moment_graph(h: &HessenbergFunction) -> MomentGraph {
    let n = h.n();
    let vertices = VertexSet::for_n(n);
    let labels: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| h.allows(i, j))
        .collect();
    let mut edges = Vec::new();
    let mut in_edges = vec![Vec::new(); vertices.len()];
    let mut out_edges = vec![Vec::new(); vertices.len()];
    for (source, w) in vertices.perms().iter().enumerate() {
        for &(i, j) in &labels {
            if w.has_inversion(i, j) {
                continue;
            }
            let target = vertices.index_of(&w.compose(&Permutation::transposition(n, i, j)));
            in_edges[target].push(edges.len());
            out_edges[source].push(edges.len());
            edges.push(MomentEdge {
                source,
                target,
                label: (i, j),
            });
        }
    }
    MomentGraph {
        h: h.clone(),
        vertices,
        edges,
        in_edges,
        out_edges,
    }
}

impl MomentGraph {
    pub fn h(&self) -> &HessenbergFunction {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn vertices(&self) -> &Arc<VertexSet> {
        &self.vertices
    }

    pub fn edges(&self) -> &[MomentEdge] {
        &self.edges
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = &MomentEdge> {
        self.in_edges[v].iter().map(|&e| &self.edges[e])
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &MomentEdge> {
        self.out_edges[v].iter().map(|&e| &self.edges[e])
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    /// True iff every edge goes forward in the stored vertex order.
    pub fn is_topologically_ordered(&self) -> bool {
        self.edges.iter().all(|e| e.source < e.target)
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.in_edges[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.out_edges[v].is_empty())
            .collect()
    }

    /// Vertices reachable from `start` along directed paths, including itself.
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        // Targets always follow sources, so one forward sweep suffices.
        for v in start..self.vertices.len() {
            if seen[v] {
                for e in self.out_edges(v) {
                    seen[e.target] = true;
                }
            }
        }
        seen
    }
}

/// A vector of polynomials indexed by the vertices, in `R`-representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GKMElement {
    vertices: Arc<VertexSet>,
    coords: Vec<MPoly>,
}

impl GKMElement {
    /// `coords[v]` is the coordinate at `vertices.perm(v)`; all must be `R`-polynomials in `n` variables.
    pub fn new(vertices: Arc<VertexSet>, coords: Vec<MPoly>) -> Result<Self> {
        let n = vertices.n();
        if coords.len() != vertices.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                vertices.len()
            )));
        }
        if let Some(p) = coords
            .iter()
            .find(|p| p.family() != Family::R || p.nvars() != n)
        {
            return Err(Error::FamilyMismatch(format!(
                "coordinate in {}[{}], expected R[{n}]",
                p.family(),
                p.nvars()
            )));
        }
        Ok(GKMElement { vertices, coords })
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let vertices = VertexSet::for_n(n);
        let coords = vec![MPoly::constant(Family::R, n, c); vertices.len()];
        GKMElement { vertices, coords }
    }

    /// The unit: every coordinate is 1.
    pub fn unit(n: usize) -> Self {
        GKMElement::constant(n, BigRational::one())
    }

    pub fn zero(n: usize) -> Self {
        GKMElement::constant(n, BigRational::zero())
    }

    pub fn n(&self) -> usize {
        self.vertices.n()
    }

    pub fn vertices(&self) -> &Arc<VertexSet> {
        &self.vertices
    }

    pub fn coords(&self) -> &[MPoly] {
        &self.coords
    }

    pub fn coord(&self, beta: &Bijection) -> &MPoly {
        &self.coords[self.vertices.index_of(beta)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MPoly::is_zero)
    }

    /// `f_β(L) = g_β(β(R_1), ..., β(R_n))` at every vertex.
    pub fn l_coords(&self) -> Vec<MPoly> {
        self.coords
            .iter()
            .zip(self.vertices.perms())
            .map(|(g, beta)| to_l(g, beta))
            .collect()
    }

    pub fn add(&self, other: &GKMElement) -> GKMElement {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        GKMElement {
            vertices: self.vertices.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &GKMElement) -> GKMElement {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        GKMElement {
            vertices: self.vertices.clone(),
            coords,
        }
    }

    /// Multiplication by an `R`-polynomial, coordinatewise.
    pub fn mul_r(&self, c: &MPoly) -> GKMElement {
        GKMElement {
            vertices: self.vertices.clone(),
            coords: self.coords.iter().map(|g| c * g).collect(),
        }
    }

    /// Multiplication by an `L`-polynomial: at `β` it acts as `c(β(R))`.
    pub fn mul_l(&self, c: &MPoly) -> GKMElement {
        let coords = self
            .coords
            .iter()
            .zip(self.vertices.perms())
            .map(|(g, beta)| &to_r(c, beta) * g)
            .collect();
        GKMElement {
            vertices: self.vertices.clone(),
            coords,
        }
    }
}

/// `g(R) -> g(β(R))` as an `L`-polynomial.
fn to_l(g: &MPoly, beta: &Bijection) -> MPoly {
    g.substitute_variables(beta.word(), Some(Family::L))
}

/// Inverse of [`to_l`].
fn to_r(f: &MPoly, beta: &Bijection) -> MPoly {
    f.substitute_variables(beta.inverse().word(), Some(Family::R))
}

pub fn satisfies_edge_conditions(x: &GKMElement, m: &MomentGraph) -> bool {
    x.n() == m.n()
        && m.edges().iter().all(|e| {
            let d = &x.coords[e.source] - &x.coords[e.target];
            d.divisible_by_difference(e.label.0, e.label.1)
        })
}

/// Assigns coordinates vertex by vertex in topological order.
///
/// `chooser(v, assigned)` sees the coordinates of all earlier vertices and
/// returns the coordinate at `v`; every incoming edge condition at `v` is
/// checked as soon as it returns.
pub fn build_element(
    m: &MomentGraph,
    mut chooser: impl FnMut(usize, &[MPoly]) -> Result<MPoly>,
) -> Result<GKMElement> {
    let n = m.n();
    let mut coords: Vec<MPoly> = Vec::with_capacity(m.vertices.len());
    for v in 0..m.vertices.len() {
        let g = chooser(v, &coords)?;
        if g.family() != Family::R || g.nvars() != n {
            return Err(Error::FamilyMismatch(format!(
                "chooser returned {}[{}]",
                g.family(),
                g.nvars()
            )));
        }
        for e in m.in_edges(v) {
            let (i, j) = e.label;
            if !(&coords[e.source] - &g).divisible_by_difference(i, j) {
                return Err(Error::ChooserViolation {
                    vertex: m.vertices.perm(v).to_string(),
                    edge: (i + 1, j + 1),
                });
            }
        }
        coords.push(g);
    }
    GKMElement::new(m.vertices.clone(), coords)
}

/// How the undetermined part of a flow-up coordinate is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FreeVariablePolicy {
    /// The canonical interpolant, with no multiple of the label product added.
    #[default]
    Zero,
    /// Adds the label product times the sum of all monomials of the missing degree.
    One,
}

/// Product of `R_i - R_j` over the labels of the edges into `v`.
fn in_label_product(m: &MomentGraph, v: usize) -> MPoly {
    let n = m.n();
    m.in_edges(v).fold(MPoly::one(Family::R, n), |acc, e| {
        &acc * &MPoly::difference(Family::R, n, e.label.0, e.label.1)
    })
}

/// Homogeneous degree-`d` polynomial `g` with `g ≡ g_s (mod R_i - R_j)` for
/// every edge `s -> v` with label `(i, j)`.
///
/// Interpolates one edge at a time: once `g` satisfies the first `k`
/// conditions, adding `P·t` with `P` the product of those `k` labels keeps
/// them, and `t` is forced modulo the next label by exact division.
fn interpolate(
    m: &MomentGraph,
    v: usize,
    d: u32,
    assigned: &[MPoly],
    policy: FreeVariablePolicy,
) -> Result<MPoly> {
    let n = m.n();
    let mut in_edges: Vec<&MomentEdge> = m.in_edges(v).collect();
    in_edges.sort_by_key(|e| e.label);
    let mut g = MPoly::zero(Family::R, n);
    let mut prod = MPoly::one(Family::R, n);
    for e in &in_edges {
        let (i, j) = e.label;
        let diff = (&assigned[e.source] - &g).identify_variables(i, j);
        if !diff.is_zero() {
            let t = diff
                .exact_divide(&prod.identify_variables(i, j))
                .map_err(|_| {
                    Error::Infeasible(format!(
                        "no degree-{d} coordinate at {} meets the edge condition for label ({},{})",
                        m.vertices.perm(v),
                        i + 1,
                        j + 1
                    ))
                })?;
            g = &g + &(&prod * &t);
        }
        prod = &prod * &MPoly::difference(Family::R, n, i, j);
    }
    if !g.is_homogeneous_of(d) {
        return Err(Error::Infeasible(format!(
            "coordinate at {} is not homogeneous of degree {d}",
            m.vertices.perm(v)
        )));
    }
    if policy == FreeVariablePolicy::One && in_edges.len() as u32 <= d {
        let rest = d - in_edges.len() as u32;
        let all = MPoly::from_terms(
            Family::R,
            n,
            Monomial::all_of_degree(n, rest)
                .into_iter()
                .map(|mono| (mono.exps().to_vec(), BigRational::one())),
        );
        g = &g + &(&prod * &all);
    }
    Ok(g)
}

/// Flow-up vector at `beta`: zero off the vertices reachable from `beta`,
/// the product of incoming labels at `beta`, and homogeneous of that degree below.
pub fn flow_up_vector(m: &MomentGraph, beta: &Bijection) -> Result<GKMElement> {
    flow_up_vector_with(m, beta, FreeVariablePolicy::Zero)
}

pub fn flow_up_vector_with(
    m: &MomentGraph,
    beta: &Bijection,
    policy: FreeVariablePolicy,
) -> Result<GKMElement> {
    let b = m.vertices.index_of(beta);
    let n = m.n();
    let d = m.in_degree(b) as u32;
    let reach = m.reachable_from(b);
    build_element(m, |v, assigned| {
        if !reach[v] {
            Ok(MPoly::zero(Family::R, n))
        } else if v == b {
            Ok(in_label_product(m, v))
        } else {
            interpolate(m, v, d, assigned, policy)
        }
    })
}

/// `w · x`: the coordinate at `w ∘ β` of the result is `g_β`.
pub fn dot_action(w: &Permutation, x: &GKMElement) -> GKMElement {
    let vs = &x.vertices;
    let mut coords = vec![MPoly::zero(Family::R, x.n()); vs.len()];
    for (v, g) in x.coords.iter().enumerate() {
        coords[vs.index_of(&w.compose(vs.perm(v)))] = g.clone();
    }
    GKMElement {
        vertices: vs.clone(),
        coords,
    }
}

/// The same action computed in `L`-coordinates: `f_{w∘β}(L) = f_β(L_{w(1)}, ..., L_{w(n)})`.
pub fn dot_action_l_coords(w: &Permutation, x: &GKMElement) -> Vec<MPoly> {
    let vs = &x.vertices;
    let mut out = vec![MPoly::zero(Family::L, x.n()); vs.len()];
    for (v, f) in x.l_coords().into_iter().enumerate() {
        out[vs.index_of(&w.compose(vs.perm(v)))] = f.substitute_variables(w.word(), None);
    }
    out
}

/// Which polynomial ring the module is viewed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    L,
    R,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::L => write!(f, "L"),
            Ring::R => write!(f, "R"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(Ring::L),
            "R" => Ok(Ring::R),
            _ => Err(Error::Parse(format!("ring must be L or R, got {s:?}"))),
        }
    }
}

/// A Frobenius characteristic tagged with its inputs, as written to disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusRecord {
    pub h: HessenbergFunction,
    pub ring: Ring,
    #[serde(flatten)]
    pub value: SymFunctionJson,
}

impl FrobeniusRecord {
    pub fn new(h: &HessenbergFunction, ring: Ring, value: &SymElementP) -> Self {
        FrobeniusRecord {
            h: h.clone(),
            ring,
            value: value.into(),
        }
    }
}

/// A flow-up basis together with the data needed to take coordinates.
#[derive(Debug, Clone)]
pub struct FlowUpBasis {
    graph: MomentGraph,
    basis: Vec<GKMElement>,
    degrees: Vec<usize>,
    /// Vertices where `basis[v]` may be nonzero, ascending.
    support: Vec<Vec<usize>>,
    l_coords: Vec<Vec<MPoly>>,
}

impl FlowUpBasis {
    pub fn new(h: &HessenbergFunction) -> Result<Self> {
        FlowUpBasis::with_policy(h, FreeVariablePolicy::Zero)
    }

    pub fn with_policy(h: &HessenbergFunction, policy: FreeVariablePolicy) -> Result<Self> {
        let graph = build_moment_graph(h);
        let perms = graph.vertices.perms().to_vec();
        let basis = perms
            .par_iter()
            .map(|beta| flow_up_vector_with(&graph, beta, policy))
            .collect::<Result<Vec<_>>>()?;
        let degrees = (0..perms.len()).map(|v| graph.in_degree(v)).collect();
        let support = (0..perms.len())
            .map(|v| {
                let reach = graph.reachable_from(v);
                (0..perms.len()).filter(|&u| reach[u]).collect()
            })
            .collect();
        let l_coords = basis.iter().map(GKMElement::l_coords).collect();
        Ok(FlowUpBasis {
            graph,
            basis,
            degrees,
            support,
            l_coords,
        })
    }

    pub fn graph(&self) -> &MomentGraph {
        &self.graph
    }

    /// `F_β` for the vertex `β` at topological position `v`.
    pub fn element(&self, v: usize) -> &GKMElement {
        &self.basis[v]
    }

    pub fn elements(&self) -> &[GKMElement] {
        &self.basis
    }

    pub fn get(&self, beta: &Bijection) -> &GKMElement {
        &self.basis[self.graph.vertices.index_of(beta)]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    fn coords_in(&self, v: usize, ring: Ring) -> &[MPoly] {
        match ring {
            Ring::R => &self.basis[v].coords,
            Ring::L => &self.l_coords[v],
        }
    }

    /// Triangular elimination, stopping after vertex `last`.
    fn eliminate(&self, x: &GKMElement, ring: Ring, last: usize) -> Result<Vec<MPoly>> {
        let family = match ring {
            Ring::R => Family::R,
            Ring::L => Family::L,
        };
        let mut residual = match ring {
            Ring::R => x.coords.clone(),
            Ring::L => x.l_coords(),
        };
        let n = x.n();
        let mut out = vec![MPoly::zero(family, n); self.basis.len()];
        for v in 0..=last {
            if residual[v].is_zero() {
                continue;
            }
            let f = self.coords_in(v, ring);
            let c = residual[v].exact_divide(&f[v]).map_err(|_| {
                Error::NotInSpan(format!(
                    "coordinate {} at {} is not a multiple of {}",
                    residual[v],
                    self.graph.vertices.perm(v),
                    f[v]
                ))
            })?;
            for &u in &self.support[v] {
                if !f[u].is_zero() {
                    residual[u] = &residual[u] - &(&c * &f[u]);
                }
            }
            out[v] = c;
        }
        if last + 1 == self.basis.len() {
            if let Some(v) = residual.iter().position(|p| !p.is_zero()) {
                return Err(Error::NotInSpan(format!(
                    "residual survives at {}",
                    self.graph.vertices.perm(v)
                )));
            }
        }
        Ok(out)
    }
}

/// The unique `c_β` with `x = Σ c_β F_β`, as polynomials in the chosen
/// family; entry `v` belongs to the vertex at topological position `v`.
pub fn coordinates(x: &GKMElement, b: &FlowUpBasis, ring: Ring) -> Result<Vec<MPoly>> {
    if x.n() != b.graph.n() {
        return Err(Error::PreconditionViolated(
            "element and basis have different n".into(),
        ));
    }
    b.eliminate(x, ring, b.basis.len() - 1)
}

/// `Σ_β q^{deg F_β} · [F_β](w · F_β)`.
pub fn graded_trace(w: &Permutation, b: &FlowUpBasis, ring: Ring) -> Result<QPoly> {
    let mut coeffs: Vec<BigRational> =
        vec![BigRational::zero(); b.degrees.iter().max().map_or(1, |d| d + 1)];
    for (v, fb) in b.basis.iter().enumerate() {
        let moved = dot_action(w, fb);
        let c = b.eliminate(&moved, ring, v)?.swap_remove(v);
        if !c.is_constant() {
            return Err(Error::NonScalarDiagonal(format!(
                "coefficient {c} at {} for w = {w}",
                b.graph.vertices.perm(v)
            )));
        }
        coeffs[b.degrees[v]] += c.constant_term();
    }
    Ok(QPoly::new(coeffs))
}

/// `(1/n!) Σ_w tr_q(w) p_{cycle type(w)}`, one trace per conjugacy class.
pub fn frobenius(h: &HessenbergFunction, ring: Ring) -> Result<SymElementP> {
    frobenius_with_basis(&FlowUpBasis::new(h)?, ring)
}

pub fn frobenius_with_basis(b: &FlowUpBasis, ring: Ring) -> Result<SymElementP> {
    let n = b.graph.n();
    let classes = partitions_of(n);
    let traces = classes
        .par_iter()
        .map(|lambda| graded_trace(&Permutation::of_cycle_type(lambda), b, ring))
        .collect::<Result<Vec<_>>>()?;
    let mut out = SymElementP::zero();
    for (lambda, tr) in classes.into_iter().zip(traces) {
        let z = BigRational::from_integer(lambda.z());
        out.add_term(lambda, &QRational::from_poly(tr).scale(&z.recip()));
    }
    Ok(out)
}

/// The defining sum over every permutation; used to cross-check [`frobenius`].
pub fn frobenius_all_permutations(b: &FlowUpBasis, ring: Ring) -> Result<SymElementP> {
    let n = b.graph.n();
    let mut out = SymElementP::zero();
    let inv = BigRational::from_integer(factorial(n)).recip();
    for w in Permutation::all(n) {
        let tr = graded_trace(&w, b, ring)?;
        out.add_term(w.cycle_type(), &QRational::from_poly(tr).scale(&inv));
    }
    Ok(out)
}

/// `Σ_β (-1)^{inv(β)} 1_β ∏_{edges {i,j} of G(h)} (R_i - R_j)`.
pub fn sign_element(h: &HessenbergFunction) -> GKMElement {
    let n = h.n();
    let vertices = VertexSet::for_n(n);
    let prod = h
        .graph()
        .edges()
        .iter()
        .fold(MPoly::one(Family::R, n), |acc, &(i, j)| {
            &acc * &MPoly::difference(Family::R, n, i, j)
        });
    let neg = prod.scale(&BigRational::from_integer((-1).into()));
    let coords = vertices
        .perms()
        .iter()
        .map(|w| {
            if w.inversions() % 2 == 0 {
                prod.clone()
            } else {
                neg.clone()
            }
        })
        .collect();
    GKMElement { vertices, coords }
}

/// Graded Frobenius characteristic of the polynomial ring itself:
/// `(1/n!) Σ_w ∏ p_{λ_i}/(1 - q^{λ_i})` for `L`, `∏ p_{λ_i}/(1 - q)^{λ_i}` for `R`.
pub fn frob_poly_ring(n: usize, ring: Ring) -> SymElementP {
    let mut out = SymElementP::zero();
    for lambda in partitions_of(n) {
        let den = lambda.parts().iter().fold(QPoly::one(), |acc, &k| {
            let f = match ring {
                Ring::L => &QPoly::one() - &QPoly::q_pow(k),
                Ring::R => QPoly::from_ints(&[1, -1]).pow(k as u32),
            };
            &acc * &f
        });
        let z = QPoly::constant(BigRational::from_integer(lambda.z()));
        let c = QRational::new(QPoly::one(), &den * &z).expect("nonzero denominator");
        out.add_term(lambda, &c);
    }
    out
}
