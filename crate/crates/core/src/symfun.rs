//! Quasisymmetric functions in the monomial basis `M_α` and symmetric
//! functions in the power-sum basis `p_λ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, BigRational, QPoly, QRational};

/// Finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_parts_unsorted(self.0.clone())
    }
}

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        assert!(!parts.contains(&0), "zero part");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `z(λ) = ∏_k k^{m_k} m_k!`, the centralizer order of cycle type `λ`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let m = self.0[i..].iter().take_while(|&&p| p == k).count();
            acc *= BigInt::from(k).pow(m as u32) * factorial(m);
            i += m;
        }
        acc
    }
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=left {
            prefix.push(first);
            rec(left - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, in lexicographic order of parts.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in 1..=left.min(max) {
            prefix.push(first);
            rec(left - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, QRational>, key: K, c: &QRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Quasi-shuffle of two compositions with multiplicities.
fn quasi_shuffle(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, BigInt> {
    fn rec(
        a: &[usize],
        b: &[usize],
        prefix: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, BigInt>,
    ) {
        match (a.split_first(), b.split_first()) {
            (None, None) => *out.entry(prefix.clone()).or_default() += 1,
            (Some((&x, ra)), None) | (None, Some((&x, ra))) => {
                prefix.push(x);
                rec(ra, &[], prefix, out);
                prefix.pop();
            }
            (Some((&x, ra)), Some((&y, rb))) => {
                prefix.push(x);
                rec(ra, b, prefix, out);
                prefix.pop();
                prefix.push(y);
                rec(a, rb, prefix, out);
                prefix.pop();
                prefix.push(x + y);
                rec(ra, rb, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    rec(a, b, &mut Vec::with_capacity(a.len() + b.len()), &mut out);
    out
}

/// Quasisymmetric function in the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QSymElement {
    terms: BTreeMap<Composition, QRational>,
}

impl QSymElement {
    pub fn zero() -> Self {
        QSymElement::default()
    }

    pub fn one() -> Self {
        QSymElement::monomial(Composition::empty())
    }

    pub fn monomial(alpha: Composition) -> Self {
        QSymElement::from_terms([(alpha, QRational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Composition, QRational)>) -> Self {
        let mut x = QSymElement::zero();
        for (a, c) in terms {
            x.add_term(a, &c);
        }
        x
    }

    pub fn add_term(&mut self, alpha: Composition, c: &QRational) {
        add_into(&mut self.terms, alpha, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Composition) -> QRational {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        QSymElement::from_terms(self.terms.iter().map(|(a, x)| (a.clone(), x * c)))
    }

    pub fn add(&self, other: &QSymElement) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &QSymElement) -> Self {
        self.add(&other.scale(&QRational::from_int(-1)))
    }

    /// Applies a map to every coefficient, e.g. evaluation at a value of `q`.
    pub fn map_coeffs(&self, f: impl Fn(&QRational) -> QRational) -> Self {
        QSymElement::from_terms(self.terms.iter().map(|(a, c)| (a.clone(), f(c))))
    }
}

/// Quasi-shuffle product.
pub fn qsym_multiply(a: &QSymElement, b: &QSymElement) -> QSymElement {
    let mut out = QSymElement::zero();
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let c = ca * cb;
            for (k, m) in quasi_shuffle(&ka.0, &kb.0) {
                out.add_term(Composition(k), &c.scale(&BigRational::from_integer(m)));
            }
        }
    }
    out
}

/// Number of distinct rearrangements of a multiset of parts.
fn rearrangement_count(lambda: &Partition) -> BigInt {
    let mut count = factorial(lambda.len());
    let mut i = 0;
    while i < lambda.0.len() {
        let m = lambda.0[i..]
            .iter()
            .take_while(|&&p| p == lambda.0[i])
            .count();
        count /= factorial(m);
        i += m;
    }
    count
}

/// True iff coefficients are constant on rearrangement classes.
pub fn is_symmetric(x: &QSymElement) -> bool {
    let mut classes: BTreeMap<Partition, (&QRational, BigInt)> = BTreeMap::new();
    for (a, c) in &x.terms {
        let entry = classes.entry(a.sorted()).or_insert((c, BigInt::zero()));
        if entry.0 != c {
            return false;
        }
        entry.1 += 1;
    }
    classes
        .iter()
        .all(|(lambda, (_, seen))| *seen == rearrangement_count(lambda))
}

/// `ζ_Q`: evaluation at `x = (1, 0, 0, ...)`.
pub fn zeta_q(x: &QSymElement) -> QRational {
    x.terms
        .iter()
        .filter(|(a, _)| a.len() <= 1)
        .fold(QRational::zero(), |acc, (_, c)| &acc + c)
}

/// `ζ_Q ∘ (id ∗ (S ∘ E_q))` on `M_α`:
/// `(-1)^{r-1} q^{α_2 + ... + α_r} + (-1)^r q^{|α|}`, and `M_() ↦ 1`.
pub fn eval_id_s_eq_zeta_q(x: &QSymElement) -> QRational {
    let mut acc = QRational::zero();
    for (a, c) in &x.terms {
        let v = if a.is_empty() {
            QRational::one()
        } else {
            let r = a.len();
            let tail: usize = a.0[1..].iter().sum();
            let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
            let coeffs = |k: usize, s: i64| {
                let mut v = vec![0i64; k + 1];
                v[k] = s;
                QPoly::from_ints(&v)
            };
            QRational::from_poly(&coeffs(tail, sign(r - 1)) + &coeffs(a.size(), sign(r)))
        };
        acc = &acc + &(c * &v);
    }
    acc
}

/// Symmetric function in the power-sum basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymElementP {
    terms: BTreeMap<Partition, QRational>,
}

impl SymElementP {
    pub fn zero() -> Self {
        SymElementP::default()
    }

    pub fn one() -> Self {
        SymElementP::power_sum(Partition::empty())
    }

    pub fn power_sum(lambda: Partition) -> Self {
        SymElementP::from_terms([(lambda, QRational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QRational)>) -> Self {
        let mut x = SymElementP::zero();
        for (l, c) in terms {
            x.add_term(l, &c);
        }
        x
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QRational) {
        add_into(&mut self.terms, lambda, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> QRational {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        SymElementP::from_terms(self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    pub fn add(&self, other: &SymElementP) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymElementP) -> Self {
        self.add(&other.scale(&QRational::from_int(-1)))
    }

    pub fn multiply(&self, other: &SymElementP) -> Self {
        let mut out = SymElementP::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                let mut parts = la.0.clone();
                parts.extend_from_slice(&lb.0);
                out.add_term(Partition::from_parts_unsorted(parts), &(ca * cb));
            }
        }
        out
    }
}

/// Expands each `p_λ` as the product of the `M_(λ_i)`.
pub fn p_to_m(x: &SymElementP) -> QSymElement {
    let mut out = QSymElement::zero();
    for (lambda, c) in &x.terms {
        let mut prod: BTreeMap<Vec<usize>, BigInt> = BTreeMap::from([(Vec::new(), BigInt::one())]);
        for &k in &lambda.0 {
            let mut next = BTreeMap::new();
            for (a, m) in &prod {
                for (b, mm) in quasi_shuffle(a, &[k]) {
                    *next.entry(b).or_insert_with(BigInt::zero) += m * mm;
                }
            }
            prod = next;
        }
        for (a, m) in prod {
            out.add_term(Composition(a), &c.scale(&BigRational::from_integer(m)));
        }
    }
    out
}

/// Inverse of [`p_to_m`] on the symmetric subspace.
///
/// Peels off the longest monomials first: `M_λ` with `ℓ(λ)` maximal can only
/// come from `p_λ` itself.
pub fn m_to_p(x: &QSymElement) -> Result<SymElementP> {
    if !is_symmetric(x) {
        return Err(Error::NotSymmetric);
    }
    let mut residual = x.clone();
    let mut out = SymElementP::zero();
    while let Some(alpha) = residual
        .terms
        .keys()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .cloned()
    {
        let lambda = alpha.sorted();
        let key = Composition(lambda.0.clone());
        let image = p_to_m(&SymElementP::power_sum(lambda.clone()));
        let c = residual
            .coeff(&key)
            .checked_div(&image.coeff(&key))
            .expect("leading coefficient of p_λ is nonzero");
        residual = residual.sub(&image.scale(&c));
        out.add_term(lambda, &c);
    }
    Ok(out)
}

/// `φ_c`: multiplies `p_λ` by `∏ c(λ_i)`.
pub fn sym_diag_endo(x: &SymElementP, c: impl Fn(usize) -> QRational) -> SymElementP {
    let mut out = SymElementP::zero();
    for (lambda, a) in &x.terms {
        let f = lambda.0.iter().fold(a.clone(), |acc, &k| &acc * &c(k));
        out.add_term(lambda.clone(), &f);
    }
    out
}

/// `ω`: `p_k ↦ (-1)^{k+1} p_k`.
pub fn omega(x: &SymElementP) -> SymElementP {
    sym_diag_endo(x, |k| QRational::from_int(if k % 2 == 1 { 1 } else { -1 }))
}

/// The antipode `S`: `p_k ↦ -p_k`.
pub fn antipode(x: &SymElementP) -> SymElementP {
    sym_diag_endo(x, |_| QRational::from_int(-1))
}

/// `E_t`: `p_k ↦ t^k p_k`.
pub fn eulerian(x: &SymElementP, t: &QRational) -> SymElementP {
    sym_diag_endo(x, |k| t.pow(k as i32).expect("nonnegative power"))
}

/// `id ∗ (S ∘ E_q)`: `p_k ↦ (1 - q^k) p_k`.
pub fn id_star_s_eq(x: &SymElementP) -> SymElementP {
    sym_diag_endo(x, one_minus_q_pow)
}

pub(crate) fn one_minus_q_pow(k: usize) -> QRational {
    QRational::from_poly(&QPoly::one() - &QPoly::q_pow(k))
}

/// `r`-fold tensor of power-sum symmetric functions.
pub type SymTensorP = BTreeMap<Vec<Partition>, QRational>;

/// `Δ_r`: each part of `λ` goes to one of `r` slots.
pub fn sym_comultiply(x: &SymElementP, r: usize) -> SymTensorP {
    assert!(r >= 1, "Δ_r on Sym needs r >= 1");
    let mut out = SymTensorP::new();
    for (lambda, c) in &x.terms {
        let l = lambda.len();
        let total = r.pow(l as u32);
        for mut code in 0..total {
            let mut slots = vec![Vec::new(); r];
            for &k in &lambda.0 {
                slots[code % r].push(k);
                code /= r;
            }
            let key = slots
                .into_iter()
                .map(Partition::from_parts_unsorted)
                .collect();
            add_into(&mut out, key, c);
        }
    }
    out
}

/// `∇_r` on a tensor: multiplies the slots together.
pub fn sym_tensor_multiply(t: &SymTensorP) -> SymElementP {
    let mut out = SymElementP::zero();
    for (key, c) in t {
        let parts = key.iter().flat_map(|p| p.0.iter().copied()).collect();
        out.add_term(Partition::from_parts_unsorted(parts), c);
    }
    out
}

/// Kronecker product: `p_λ ⋆ p_μ = δ_{λμ} z(λ) p_λ`.
pub fn kronecker(a: &SymElementP, b: &SymElementP) -> SymElementP {
    let mut out = SymElementP::zero();
    for (lambda, ca) in &a.terms {
        if let Some(cb) = b.terms.get(lambda) {
            let z = BigRational::from_integer(lambda.z());
            out.add_term(lambda.clone(), &(ca * cb).scale(&z));
        }
    }
    out
}

/// `Σ_{λ ⊢ n} p_λ / z(λ)`, the Frobenius image of the trivial representation.
pub fn trivial_character(n: usize) -> SymElementP {
    SymElementP::from_terms(partitions_of(n).into_iter().map(|l| {
        let z = BigRational::from_integer(l.z());
        (l, QRational::from_rational(z.recip()))
    }))
}

fn join_index(parts: &[usize]) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| format!("({c})*M[{}]", join_index(&a.0)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for SymElementP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("({c})*p[{}]", join_index(&l.0)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    M,
    #[serde(rename = "p")]
    P,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: Vec<usize>,
    pub coeff: QRational,
}

/// Serialized form shared by both bases; terms are sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFunctionJson {
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

impl From<&QSymElement> for SymFunctionJson {
    fn from(x: &QSymElement) -> Self {
        SymFunctionJson {
            basis: Basis::M,
            terms: x
                .terms
                .iter()
                .map(|(a, c)| TermJson {
                    index: a.0.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }
}

impl From<&SymElementP> for SymFunctionJson {
    fn from(x: &SymElementP) -> Self {
        SymFunctionJson {
            basis: Basis::P,
            terms: x
                .terms
                .iter()
                .map(|(l, c)| TermJson {
                    index: l.0.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&SymFunctionJson> for QSymElement {
    type Error = Error;
    fn try_from(j: &SymFunctionJson) -> Result<Self> {
        if j.basis != Basis::M {
            return Err(Error::Parse("expected basis M".into()));
        }
        let mut x = QSymElement::zero();
        for t in &j.terms {
            x.add_term(Composition::new(t.index.clone())?, &t.coeff);
        }
        Ok(x)
    }
}

impl TryFrom<&SymFunctionJson> for SymElementP {
    type Error = Error;
    fn try_from(j: &SymFunctionJson) -> Result<Self> {
        if j.basis != Basis::P {
            return Err(Error::Parse("expected basis p".into()));
        }
        let mut x = SymElementP::zero();
        for t in &j.terms {
            x.add_term(Partition::new(t.index.clone())?, &t.coeff);
        }
        Ok(x)
    }
}
