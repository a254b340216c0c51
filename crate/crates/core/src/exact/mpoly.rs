use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rational_to_string, ArithOp};
use crate::error::{Error, Result};

/// Which set of indeterminates a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L,
    R,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::L => write!(f, "L"),
            Family::R => write!(f, "R"),
        }
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// All exponent vectors of total degree `d` in `nvars` variables, in
    /// increasing graded-lex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
            if slots == 1 {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=left {
                prefix.push(e);
                rec(prefix, left - e, slots - 1, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(&mut Vec::with_capacity(nvars), d, nvars, &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over `Q` in `n` indeterminates of one family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    family: Family,
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero(family: Family, nvars: usize) -> Self {
        MPoly {
            family,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(family: Family, nvars: usize, c: BigRational) -> Self {
        let mut p = MPoly::zero(family, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(family: Family, nvars: usize) -> Self {
        MPoly::constant(family, nvars, BigRational::one())
    }

    /// The variable `X_i` (0-based index).
    pub fn var(family: Family, nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(family, nvars);
        p.add_term(Monomial(e), BigRational::one());
        p
    }

    /// `X_i - X_j`.
    pub fn difference(family: Family, nvars: usize, i: usize, j: usize) -> Self {
        &MPoly::var(family, nvars, i) - &MPoly::var(family, nvars, j)
    }

    pub fn from_terms(
        family: Family,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut p = MPoly::zero(family, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &MPoly) -> Result<()> {
        if self.family != other.family || self.nvars != other.nvars {
            return Err(Error::FamilyMismatch(format!(
                "{}[{}] vs {}[{}]",
                self.family, self.nvars, other.family, other.nvars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_compatible(other)?;
        let mut out = MPoly::zero(self.family, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.family, self.nvars);
        }
        MPoly {
            family: self.family,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Replaces each `X_i` by `X_{sigma[i]}` and optionally retags the family.
    pub fn substitute_variables(&self, sigma: &[usize], retag: Option<Family>) -> MPoly {
        assert_eq!(sigma.len(), self.nvars, "substitution length");
        let mut out = MPoly::zero(retag.unwrap_or(self.family), self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[sigma[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitutes `X_i := X_j`, leaving a polynomial with `X_i` absent.
    pub fn identify_variables(&self, i: usize, j: usize) -> MPoly {
        let mut out = MPoly::zero(self.family, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(Monomial(identify_exps(&m.0, i, j)), c.clone());
        }
        out
    }

    /// True iff `X_i - X_j` divides this polynomial.
    pub fn divisible_by_difference(&self, i: usize, j: usize) -> bool {
        assert!(i != j && i < self.nvars && j < self.nvars);
        // A linear form X_i - X_j divides g iff g vanishes at X_i = X_j.
        self.identify_variables(i, j).is_zero()
    }

    /// Exact quotient `self / d`, via leading-term division.
    pub fn exact_divide(&self, d: &MPoly) -> Result<MPoly> {
        self.check_compatible(d)?;
        let (lm, lc) = match d.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.family, self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::NotDivisible(format!("{self} by {d}")));
            }
            let tm = m.div(&lm);
            let tc = c / &lc;
            for (dm, dc) in &d.terms {
                rem.add_term(tm.mul(dm), -(&tc * dc));
            }
            quot.add_term(tm, tc);
        }
        Ok(quot)
    }
}

pub(crate) fn identify_exps(e: &[u32], i: usize, j: usize) -> Vec<u32> {
    let mut e = e.to_vec();
    e[j] += e[i];
    e[i] = 0;
    e
}

/// Checked ring operation; `ArithOp::Div` performs exact division.
pub fn mpoly_arith(a: &MPoly, b: &MPoly, op: ArithOp) -> Result<MPoly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.exact_divide(b),
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    /// Panics on family mismatch; use [`MPoly::try_add`] for a checked sum.
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("MPoly addition")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_sub(rhs).expect("MPoly subtraction")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("MPoly multiplication")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            family: self.family,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MPoly {
    /// Terms in decreasing graded-lex order, variables numbered from 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("{}{}", self.family, i + 1)
                        } else {
                            format!("{}{}^{}", self.family, i + 1, e)
                        }
                    })
                    .collect();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                rational_to_string(&abs)
            };
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn r(i: usize) -> MPoly {
        MPoly::var(Family::R, 3, i)
    }

    #[test]
    fn square_expansion() {
        let d = &r(0) - &r(1);
        let sq = &d * &d;
        assert_eq!(sq.to_string(), "R1^2 - 2*R1*R2 + R2^2");
    }

    #[test]
    fn cancellation_and_unit() {
        let d = &r(0) - &r(1);
        assert!((&d + &(&r(1) - &r(0))).is_zero());
        assert_eq!(&d * &MPoly::one(Family::R, 3), d);
    }

    #[test]
    fn family_mismatch() {
        let l = MPoly::var(Family::L, 3, 0);
        assert!(matches!(
            mpoly_arith(&l, &r(0), ArithOp::Add),
            Err(Error::FamilyMismatch(_))
        ));
        let short = MPoly::var(Family::R, 2, 0);
        assert!(matches!(
            mpoly_arith(&short, &r(0), ArithOp::Mul),
            Err(Error::FamilyMismatch(_))
        ));
    }

    #[test]
    fn divisibility_by_linear_difference() {
        assert!((&r(0) - &r(1)).divisible_by_difference(0, 1));
        assert!(!(&r(0) + &r(1)).divisible_by_difference(0, 1));
        let g = &(&r(0) * &r(0)) - &(&r(1) * &r(1));
        assert!(g.divisible_by_difference(0, 1));
        assert!(!g.divisible_by_difference(0, 2));
    }

    #[test]
    fn exact_division() {
        let g = &(&r(0) * &r(0)) - &(&r(1) * &r(1));
        let d = &r(0) - &r(1);
        assert_eq!(g.exact_divide(&d).unwrap(), &r(0) + &r(1));
        assert!(MPoly::zero(Family::R, 3)
            .exact_divide(&d)
            .unwrap()
            .is_zero());
        assert!(matches!(
            r(0).exact_divide(&r(1)),
            Err(Error::NotDivisible(_))
        ));
        assert_eq!(
            g.exact_divide(&MPoly::zero(Family::R, 3)),
            Err(Error::DivisionByZero)
        );
        // A nonzero constant divides everything.
        let half = MPoly::constant(Family::R, 3, crate::exact::rat_frac(1, 2));
        assert_eq!(g.exact_divide(&half).unwrap(), g.scale(&rat(2)));
    }

    #[test]
    fn substitution() {
        let d = &r(0) - &r(1);
        assert_eq!(d.substitute_variables(&[1, 0, 2], None), &r(1) - &r(0));
        assert_eq!(r(0).substitute_variables(&[0, 1, 2], None), r(0));
        // R1*R3 under 1->2->3->1 becomes R2*R1.
        let g = &r(0) * &r(2);
        assert_eq!(g.substitute_variables(&[1, 2, 0], None), &r(1) * &r(0));
        let l = d.substitute_variables(&[0, 1, 2], Some(Family::L));
        assert_eq!(l.family(), Family::L);
        assert_eq!(l.to_string(), "L1 - L2");
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(vec![0, 0, 2]);
        let b = Monomial::new(vec![1, 0, 0]);
        let c = Monomial::new(vec![0, 1, 1]);
        assert!(a > b);
        assert!(c > a);
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
        assert!(Monomial::all_of_degree(0, 1).is_empty());
    }
}
