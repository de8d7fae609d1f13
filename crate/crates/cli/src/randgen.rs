//! Seeded random connected graphs for oracle batteries.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use septree::Space;

fn vertex_name(i: usize) -> String {
    format!("v{i:02}")
}

/// A connected graph on `n` vertices: a uniform random recursive spanning
/// tree plus each remaining pair independently with probability `extra`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> Space {
    assert!(n >= 2);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for child in 1..n {
        edges.push((rng.gen_range(0..child), child));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.gen_bool(extra) {
                edges.push((i, j));
            }
        }
    }
    Space::new(
        (0..n).map(vertex_name),
        edges
            .into_iter()
            .map(|(i, j)| (vertex_name(i), vertex_name(j))),
    )
    .expect("generated graph is connected by construction")
}

/// Deterministic battery of `count` graphs with `min_n..=max_n` vertices.
pub fn battery(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Space> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_connected_graph(&mut rng, n, 0.25)
        })
        .collect()
}
