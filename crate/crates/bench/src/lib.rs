//! Deterministic inputs for the benchmarks in `benches/`.

use domiperf::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random graphs on `n` vertices with edge probability `p`, fixed
/// by `seed`.
pub fn random_graphs(seed: u64, count: usize, n: usize, p: f64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect::<Vec<_>>();
            Graph::from_edges(n, edges).expect("n is small")
        })
        .collect()
}
