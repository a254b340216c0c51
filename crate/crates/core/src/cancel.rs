//! Cancellation of the alternating sum `Σ_r Σ_κ (-1)^r q^{stat(κ)}` over
//! colourings `κ: [n] -> {0} ∪ [r]` that use every positive colour.
//!
//! `stat(κ)` counts positively coloured vertices plus weak ascents, with
//! colour 0 below every positive colour. When the last two vertices are
//! adjacent, [`involution`] pairs the terms off with opposite signs.

use serde::{Deserialize, Serialize};

use crate::chromatic::psi;
use crate::error::{Error, Result};
use crate::exact::{QPoly, QRational};
use crate::graphs::{all_colourings, ascent_count, AscentMode, OrderedGraph};
use crate::oghopf::Character;
use crate::symfun::eval_id_s_eq_zeta_q;

/// Colouring into `{0} ∪ [r]` in which every colour of `[r]` occurs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroColouring {
    r: usize,
    colours: Vec<usize>,
}

impl ZeroColouring {
    pub fn new(r: usize, colours: Vec<usize>) -> Result<Self> {
        let mut used = vec![false; r + 1];
        for &c in &colours {
            if c > r {
                return Err(Error::InvalidColouring(format!(
                    "colour {c} outside 0..={r}"
                )));
            }
            used[c] = true;
        }
        if let Some(c) = (1..=r).find(|&c| !used[c]) {
            return Err(Error::InvalidColouring(format!(
                "colour {c} of 1..={r} is unused"
            )));
        }
        Ok(ZeroColouring { r, colours })
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

    fn count(&self, c: usize) -> usize {
        self.colours.iter().filter(|&&x| x == c).count()
    }

    /// Removes the now-empty colour `c`, shifting higher colours down.
    fn delete_colour(&mut self, c: usize) {
        debug_assert!(c >= 1 && self.count(c) == 0);
        for x in &mut self.colours {
            if *x > c {
                *x -= 1;
            }
        }
        self.r -= 1;
    }

    /// Opens a fresh colour directly above `c` and returns its name.
    fn insert_above(&mut self, c: usize) -> usize {
        for x in &mut self.colours {
            if *x > c {
                *x += 1;
            }
        }
        self.r += 1;
        c + 1
    }
}

/// Number of positively coloured vertices plus weak ascents.
pub fn stat(kappa: &ZeroColouring, g: &OrderedGraph) -> usize {
    assert_eq!(kappa.n(), g.n(), "colouring size");
    let positive = kappa.colours.iter().filter(|&&c| c > 0).count();
    positive + ascent_count(g, &kappa.colours, AscentMode::Weak)
}

/// Every zero-colouring of `[n]`, ordered by `r` and then lexicographically.
pub fn zero_colourings(n: usize) -> Vec<ZeroColouring> {
    let mut out = Vec::new();
    for r in 0..=n {
        for shifted in all_colourings(n, r + 1) {
            let colours: Vec<usize> = shifted.into_iter().map(|c| c - 1).collect();
            if let Ok(k) = ZeroColouring::new(r, colours) {
                out.push(k);
            }
        }
    }
    out
}

fn sign(r: usize) -> i64 {
    if r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn alternating_sum(g: &OrderedGraph) -> QRational {
    let mut coeffs: Vec<i64> = Vec::new();
    for kappa in zero_colourings(g.n()) {
        let s = stat(&kappa, g);
        if coeffs.len() <= s {
            coeffs.resize(s + 1, 0);
        }
        coeffs[s] += sign(kappa.r);
    }
    QRational::from_poly(QPoly::from_ints(&coeffs))
}

/// The sign-reversing involution, driven by the colours of the last two vertices.
///
/// Each case either moves one vertex down into an existing colour class,
/// deleting the colour it left, or moves it up into a fresh colour; the two
/// moves undo each other. Colour 0 is never deleted.
pub fn involution(kappa: &ZeroColouring, g: &OrderedGraph) -> Result<ZeroColouring> {
    let n = g.n();
    if n < 2 || !g.has_edge(n - 2, n - 1) {
        return Err(Error::PreconditionViolated(format!(
            "the last two vertices must be adjacent in {g}"
        )));
    }
    if kappa.n() != n {
        return Err(Error::PreconditionViolated(format!(
            "colouring of {} vertices on a graph with {n}",
            kappa.n()
        )));
    }
    let (a, b) = (n - 2, n - 1);
    let mut k = kappa.clone();
    let last = k.colours[b];
    if last == 0 {
        let i = k.colours[a];
        if i >= 1 && k.count(i) == 1 {
            k.colours[a] = i - 1;
            k.delete_colour(i);
        } else {
            k.colours[a] = k.insert_above(i);
        }
    } else if last == 1 && k.count(1) == 1 {
        // Vertex `a` moves along the colours 0, 2, 3, ..., skipping 1.
        let i = k.colours[a];
        if i >= 2 && k.count(i) == 1 {
            k.colours[a] = if i == 2 { 0 } else { i - 1 };
            k.delete_colour(i);
        } else {
            let below = if i == 0 { 1 } else { i };
            k.colours[a] = k.insert_above(below);
        }
    } else if k.count(last) == 1 {
        k.colours[b] = last - 1;
        k.delete_colour(last);
    } else {
        k.colours[b] = k.insert_above(last);
    }
    Ok(k)
}

/// Outcome of checking the involution against every term of the sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellationReport {
    /// `h` notation when the graph is a natural unit interval graph, else its edge list.
    pub graph: String,
    pub terms: usize,
    /// Terms whose partner is distinct, maps back, has opposite sign and equal stat.
    pub paired: usize,
    pub fixed_points: usize,
    pub sum: QRational,
    /// `ζ_Q ∘ (id ∗ (S ∘ E_q)) ∘ Ψ_q` on the graph; must equal `sum`.
    pub via_psi: QRational,
    /// The single-vertex graph, where no involution applies and the sum is `1 - q`.
    pub base_case: bool,
    pub pass: bool,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    graph: String,
    terms: usize,
    paired: usize,
    fixed_points: usize,
    sum: QRational,
    pass: bool,
}

impl CancellationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            graph: self.graph.clone(),
            terms: self.terms,
            paired: self.paired,
            fixed_points: self.fixed_points,
            sum: self.sum.clone(),
            pass: self.pass,
        })
        .expect("report serializes")
    }
}

fn graph_label(g: &OrderedGraph) -> String {
    match g.hessenberg() {
        Ok(h) => format!("h={h}"),
        Err(_) => g.to_string(),
    }
}

pub fn verify_cancellation(g: &OrderedGraph) -> Result<CancellationReport> {
    let terms = zero_colourings(g.n());
    let sum = alternating_sum(g);
    let via_psi = eval_id_s_eq_zeta_q(&psi(g, &Character::ZetaQ));
    if g.n() == 1 {
        let one_minus_q = QRational::from_poly(QPoly::from_ints(&[1, -1]));
        let pass = sum == one_minus_q && via_psi == one_minus_q;
        return Ok(CancellationReport {
            graph: graph_label(g),
            terms: terms.len(),
            paired: 0,
            fixed_points: terms.len(),
            sum,
            via_psi,
            base_case: true,
            pass,
        });
    }
    let mut paired = 0;
    let mut fixed_points = 0;
    for kappa in &terms {
        let image = involution(kappa, g)?;
        if &image == kappa {
            fixed_points += 1;
            continue;
        }
        let back = involution(&image, g)?;
        let ok =
            &back == kappa && image.r.abs_diff(kappa.r) == 1 && stat(&image, g) == stat(kappa, g);
        if ok {
            paired += 1;
        }
    }
    let pass = paired == terms.len() && fixed_points == 0 && sum.is_zero() && via_psi == sum;
    Ok(CancellationReport {
        graph: graph_label(g),
        terms: terms.len(),
        paired,
        fixed_points,
        sum,
        via_psi,
        base_case: false,
        pass,
    })
}
