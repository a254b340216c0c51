//! The Hopf morphisms `Ψ_ζ: OG -> QSym` and direct colouring-sum oracles.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{binomial, BigRational, QRational};
use crate::graphs::{
    all_colourings, ascent_count, colourings_of_type, monochromatic_count, restrict, AscentMode,
    Colouring, OrderedGraph,
};
use crate::oghopf::{
    og_character_tensor, og_comultiply, og_grade_project, Character, OGElement, OGTensor,
};
use crate::symfun::{compositions_of, Composition, QSymElement};

/// `Ψ_ζ(G)`: the coefficient of `M_α` sums `q^{asc(κ)} ∏ ζ(G|_{κ⁻¹(i)})`
/// over colourings `κ` of type `α`.
pub fn psi(g: &OrderedGraph, zeta: &Character) -> QSymElement {
    let mut out = QSymElement::zero();
    for alpha in compositions_of(g.n()) {
        let r = alpha.len();
        // Group by (ascents, edge counts of the pieces) before touching Q(q).
        let mut tally: BTreeMap<(usize, Vec<usize>), u64> = BTreeMap::new();
        for kappa in colourings_of_type(alpha.parts()) {
            let asc = ascent_count(g, &kappa, AscentMode::Strict);
            let pieces = restrict(g, &Colouring::new(r, kappa).expect("typed colouring"));
            let edges = pieces.iter().map(OrderedGraph::edge_count).collect();
            *tally.entry((asc, edges)).or_default() += 1;
        }
        let mut coeff = QRational::zero();
        for ((asc, edges), count) in tally {
            let value = edges.iter().fold(QRational::q_pow(asc), |acc, &e| {
                &acc * &zeta.on_edge_count(e)
            });
            coeff = &coeff + &value.scale(&BigRational::from_integer(count.into()));
        }
        out.add_term(alpha, &coeff);
    }
    out
}

/// `Ψ_ζ(G)` through the abstract route `(ζ ⊗ ... ⊗ ζ) ∘ (π_{α_1} ⊗ ... ⊗ π_{α_r}) ∘ Δ_r`.
///
/// Materializes `r^n` tensor terms; meant as a cross-check at small `n`.
pub fn psi_via_coproduct(g: &OrderedGraph, zeta: &Character) -> QSymElement {
    let x = OGElement::basis(g.clone());
    let mut out = QSymElement::zero();
    let mut by_arity: BTreeMap<usize, OGTensor> = BTreeMap::new();
    for alpha in compositions_of(g.n()) {
        let delta = by_arity
            .entry(alpha.len())
            .or_insert_with(|| og_comultiply(&x, alpha.len()));
        let mut projected = OGTensor::zero(alpha.len());
        for (key, c) in delta.terms() {
            let in_grade = key
                .iter()
                .zip(alpha.parts())
                .all(|(h, &a)| !og_grade_project(&OGElement::basis(h.clone()), a).is_zero());
            if in_grade {
                projected.add_term(key.clone(), c);
            }
        }
        out.add_term(alpha, &og_character_tensor(&projected, zeta));
    }
    out
}

/// Colouring statistics used by [`csf_bruteforce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CsfMode {
    /// Proper colourings weighted by `q^{strict ascents}`.
    ProperStrict,
    /// All colourings weighted by `q^{strict ascents}`.
    AllStrict,
    /// All colourings weighted by `q^{weak ascents}`.
    AllWeak,
    /// All colourings weighted by `q^{strict ascents} t^{monochromatic edges}`.
    MonoWeighted(QRational),
}

/// Collects `Σ_κ weight(κ) x_κ` over all `κ: V -> [n]` and reads off
/// monomial coefficients from the packed exponent vectors.
pub fn csf_bruteforce(g: &OrderedGraph, mode: &CsfMode) -> QSymElement {
    let n = g.n();
    let mut tally: BTreeMap<(Vec<usize>, usize, usize), u64> = BTreeMap::new();
    for kappa in all_colourings(n, n) {
        let mut content = vec![0; n];
        for &c in &kappa {
            content[c - 1] += 1;
        }
        let used = content.iter().take_while(|&&m| m > 0).count();
        if content[used..].iter().any(|&m| m > 0) {
            continue;
        }
        content.truncate(used);
        let mono = monochromatic_count(g, &kappa);
        if mode == &CsfMode::ProperStrict && mono > 0 {
            continue;
        }
        let asc = match mode {
            CsfMode::AllWeak => ascent_count(g, &kappa, AscentMode::Weak),
            _ => ascent_count(g, &kappa, AscentMode::Strict),
        };
        *tally.entry((content, asc, mono)).or_default() += 1;
    }
    let mut out = QSymElement::zero();
    for ((content, asc, mono), count) in tally {
        let mut w = QRational::q_pow(asc);
        if let CsfMode::MonoWeighted(t) = mode {
            w = &w * &t.pow(mono as i32).expect("nonnegative power");
        }
        let alpha = Composition::new(content).expect("packed content has positive parts");
        out.add_term(alpha, &w.scale(&BigRational::from_integer(count.into())));
    }
    out
}

/// Number of proper colourings `V -> [r]`.
pub fn chromatic_polynomial(g: &OrderedGraph, r: usize) -> QRational {
    let count = all_colourings(g.n(), r)
        .filter(|kappa| monochromatic_count(g, kappa) == 0)
        .count();
    QRational::from_int(count as i64)
}

/// Specializes `q = 1` and `x = (1^r, 0, 0, ...)`: each `M_α` contributes
/// `binomial(r, ℓ(α))`. Returns `None` if a coefficient has a pole at `q = 1`.
pub fn specialize_at_ones(x: &QSymElement, r: usize) -> Option<BigRational> {
    let one = BigRational::from_integer(1.into());
    let mut acc = BigRational::zero();
    for (alpha, c) in x.terms() {
        acc += c.eval(&one)? * BigRational::from_integer(binomial(r, alpha.len()));
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QPoly;
    use crate::graphs::HessenbergFunction;

    fn m(parts: &[usize]) -> QSymElement {
        QSymElement::monomial(Composition::new(parts.to_vec()).unwrap())
    }
    fn qp(c: &[i64]) -> QRational {
        QRational::from_poly(QPoly::from_ints(c))
    }
    fn k2() -> OrderedGraph {
        OrderedGraph::complete(2)
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi(&k2(), &Character::Zeta0),
            m(&[1, 1]).scale(&qp(&[1, 1]))
        );
        let want = m(&[2])
            .scale(&QRational::q())
            .add(&m(&[1, 1]).scale(&qp(&[1, 1])));
        assert_eq!(psi(&k2(), &Character::ZetaQ), want);
        for zeta in [Character::Zeta0, Character::Zeta1, Character::ZetaQ] {
            assert_eq!(psi(&OrderedGraph::empty(0), &zeta), QSymElement::one());
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            csf_bruteforce(&k2(), &CsfMode::ProperStrict),
            m(&[1, 1]).scale(&qp(&[1, 1]))
        );
        let edgeless = csf_bruteforce(&OrderedGraph::empty(2), &CsfMode::ProperStrict);
        assert_eq!(edgeless, m(&[2]).add(&m(&[1, 1]).scale(&qp(&[2]))));
        let weak = m(&[2])
            .scale(&QRational::q())
            .add(&m(&[1, 1]).scale(&qp(&[1, 1])));
        assert_eq!(csf_bruteforce(&k2(), &CsfMode::AllWeak), weak);
        assert_eq!(
            csf_bruteforce(&OrderedGraph::empty(0), &CsfMode::AllStrict),
            QSymElement::one()
        );
    }

    #[test]
    fn chromatic_polynomial_examples() {
        assert_eq!(chromatic_polynomial(&k2(), 2), QRational::from_int(2));
        assert!(chromatic_polynomial(&k2(), 1).is_zero());
        assert_eq!(
            chromatic_polynomial(&OrderedGraph::empty(1), 5),
            QRational::from_int(5)
        );
    }

    #[test]
    fn routes_agree_on_path() {
        let g = HessenbergFunction::new(vec![2, 3, 3]).unwrap().graph();
        let t = QRational::from_int(7);
        for zeta in [
            Character::Zeta0,
            Character::Zeta1,
            Character::ZetaQ,
            Character::ZetaT(t),
        ] {
            assert_eq!(psi(&g, &zeta), psi_via_coproduct(&g, &zeta), "{zeta:?}");
        }
    }

    #[test]
    fn specialization_counts_colourings() {
        let g = HessenbergFunction::new(vec![2, 3, 3]).unwrap().graph();
        let x = csf_bruteforce(&g, &CsfMode::ProperStrict);
        // Path on three vertices: r (r-1)^2.
        assert_eq!(
            specialize_at_ones(&x, 3),
            Some(BigRational::from_integer(12.into()))
        );
    }
}
