//! The Hopf algebra of ordered graphs over `Q(q)`.
//!
//! Multiplication is lexicographic union; `Δ_r` sums `q^{asc(κ)} G|_κ` over
//! all colourings `κ: V -> [r]`, counting strict ascents.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::QRational;
use crate::graphs::{
    all_colourings, ascent_count, lex_union, restrict, AscentMode, Colouring, OrderedGraph,
};

/// Finite `Q(q)`-linear combination of ordered graphs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OGElement {
    terms: BTreeMap<OrderedGraph, QRational>,
}

impl OGElement {
    pub fn zero() -> Self {
        OGElement::default()
    }

    pub fn basis(g: OrderedGraph) -> Self {
        OGElement::from_terms([(g, QRational::one())])
    }

    /// The unit `G_0`.
    pub fn unit() -> Self {
        OGElement::basis(OrderedGraph::empty(0))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (OrderedGraph, QRational)>) -> Self {
        let mut x = OGElement::zero();
        for (g, c) in terms {
            x.add_term(g, &c);
        }
        x
    }

    pub fn add_term(&mut self, g: OrderedGraph, c: &QRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrderedGraph, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &OrderedGraph) -> QRational {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        OGElement::from_terms(self.terms.iter().map(|(g, a)| (g.clone(), a * c)))
    }

    pub fn add(&self, other: &OGElement) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        out
    }
}

impl fmt::Display for OGElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("({c})*{g}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Finite combination of `r`-tuples of ordered graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OGTensor {
    arity: usize,
    terms: BTreeMap<Vec<OrderedGraph>, QRational>,
}

impl OGTensor {
    pub fn zero(arity: usize) -> Self {
        OGTensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(graphs: Vec<OrderedGraph>) -> Self {
        let mut t = OGTensor::zero(graphs.len());
        t.add_term(graphs, &QRational::one());
        t
    }

    /// `x_1 ⊗ ... ⊗ x_r`, expanded multilinearly.
    pub fn tensor(factors: &[OGElement]) -> Self {
        let mut acc = OGTensor::pure(Vec::new());
        for x in factors {
            let mut next = OGTensor::zero(acc.arity + 1);
            for (key, a) in &acc.terms {
                for (g, b) in &x.terms {
                    let mut k = key.clone();
                    k.push(g.clone());
                    next.add_term(k, &(a * b));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, key: Vec<OrderedGraph>, c: &QRational) {
        assert_eq!(key.len(), self.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<OrderedGraph>, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[OrderedGraph]) -> QRational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `Δ_{rs[i]}` to the `i`-th slot and flattens the result.
    pub fn comultiply_slots(&self, rs: &[usize]) -> OGTensor {
        assert_eq!(rs.len(), self.arity, "one arity per slot");
        let mut out = OGTensor::zero(rs.iter().sum());
        for (key, c) in &self.terms {
            let pieces: Vec<OGTensor> = key
                .iter()
                .zip(rs)
                .map(|(g, &r)| og_comultiply(&OGElement::basis(g.clone()), r))
                .collect();
            let mut acc = OGTensor::pure(Vec::new());
            for p in &pieces {
                acc = acc.concat(p);
            }
            for (k, a) in acc.terms {
                out.add_term(k, &(&a * c));
            }
        }
        out
    }

    /// Multiplies consecutive groups of slots, `sizes[i]` slots per group.
    pub fn multiply_groups(&self, sizes: &[usize]) -> OGTensor {
        assert_eq!(sizes.iter().sum::<usize>(), self.arity, "group sizes");
        let mut out = OGTensor::zero(sizes.len());
        for (key, c) in &self.terms {
            let mut start = 0;
            let mut k = Vec::with_capacity(sizes.len());
            for &s in sizes {
                k.push(lex_union(&key[start..start + s]));
                start += s;
            }
            out.add_term(k, c);
        }
        out
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute_slots(&self, perm: &[usize]) -> OGTensor {
        assert_eq!(perm.len(), self.arity, "slot permutation");
        let mut out = OGTensor::zero(self.arity);
        for (key, c) in &self.terms {
            out.add_term(perm.iter().map(|&i| key[i].clone()).collect(), c);
        }
        out
    }

    /// Tensor product `self ⊗ other`.
    pub fn concat(&self, other: &OGTensor) -> OGTensor {
        let mut out = OGTensor::zero(self.arity + other.arity);
        for (ka, a) in &self.terms {
            for (kb, b) in &other.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                out.add_term(k, &(a * b));
            }
        }
        out
    }
}

/// `∇_r`: the multilinear extension of lexicographic union.
pub fn og_multiply(x: &OGTensor) -> OGElement {
    let mut out = OGElement::zero();
    for (key, c) in &x.terms {
        out.add_term(lex_union(key), c);
    }
    out
}

/// `Δ_r`. For `r = 0` this is the counit: it keeps only the coefficient of `G_0`.
pub fn og_comultiply(x: &OGElement, r: usize) -> OGTensor {
    let mut out = OGTensor::zero(r);
    for (g, c) in &x.terms {
        let n = g.n();
        for kappa in all_colourings(n, r) {
            let asc = ascent_count(g, &kappa, AscentMode::Strict);
            let kappa = Colouring::new(r, kappa).expect("colours in range");
            out.add_term(restrict(g, &kappa), &(c * &QRational::q_pow(asc)));
        }
    }
    out
}

/// Keeps the terms on exactly `n` vertices.
pub fn og_grade_project(x: &OGElement, n: usize) -> OGElement {
    OGElement {
        terms: x
            .terms
            .iter()
            .filter(|(g, _)| g.n() == n)
            .map(|(g, c)| (g.clone(), c.clone()))
            .collect(),
    }
}

/// Multiplicative characters of OG determined by the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Character {
    /// 1 on edgeless graphs, 0 otherwise.
    Zeta0,
    /// 1 on every graph.
    Zeta1,
    /// `q^{#E}`.
    ZetaQ,
    /// `t^{#E}` for a fixed scalar `t`.
    ZetaT(QRational),
}

impl Character {
    /// The value on a graph with `edges` edges.
    pub fn on_edge_count(&self, edges: usize) -> QRational {
        match self {
            Character::Zeta0 if edges == 0 => QRational::one(),
            Character::Zeta0 => QRational::zero(),
            Character::Zeta1 => QRational::one(),
            Character::ZetaQ => QRational::q_pow(edges),
            Character::ZetaT(t) => t.pow(edges as i32).expect("nonnegative power"),
        }
    }

    pub fn on_graph(&self, g: &OrderedGraph) -> QRational {
        self.on_edge_count(g.edge_count())
    }
}

pub fn og_character(x: &OGElement, zeta: &Character) -> QRational {
    x.terms.iter().fold(QRational::zero(), |acc, (g, c)| {
        &acc + &(c * &zeta.on_graph(g))
    })
}

/// `ζ ⊗ ... ⊗ ζ` on a tensor.
pub fn og_character_tensor(x: &OGTensor, zeta: &Character) -> QRational {
    x.terms.iter().fold(QRational::zero(), |acc, (key, c)| {
        let v = key.iter().fold(c.clone(), |p, g| &p * &zeta.on_graph(g));
        &acc + &v
    })
}
