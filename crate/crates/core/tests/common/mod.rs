#![allow(dead_code)]

use qchromatic::exact::{QPoly, QRational};
use qchromatic::graphs::{enumerate_hessenberg, HessenbergFunction, OrderedGraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn hessenberg_up_to(n: usize) -> Vec<HessenbergFunction> {
    (0..=n).flat_map(enumerate_hessenberg).collect()
}

/// Ordered graph on `n` vertices with each pair present with probability 1/2.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> OrderedGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    OrderedGraph::new(n, edges).expect("valid edges")
}

pub fn random_graph_up_to(rng: &mut ChaCha8Rng, max_n: usize) -> OrderedGraph {
    let n = rng.gen_range(0..=max_n);
    random_graph(rng, n)
}

pub fn qp(c: &[i64]) -> QRational {
    QRational::from_poly(QPoly::from_ints(c))
}
