//! Random quivers with compatible automorphism, for property tests.

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use super::datum::RootDatum;
use super::quiver::QuiverInput;

/// A random valid quiver with automorphism. Orbits are cycles of length 1 to
/// 4 (odd exactly when the length is odd), joined along a random spanning
/// tree plus extra edges; candidates failing validation are redrawn.
pub fn random_quiver(seed: u64) -> (QuiverInput, RootDatum) {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let input = candidate(&mut rng);
        if let Ok(d) = RootDatum::from_quiver(&input) {
            return (input, d);
        }
    }
}

fn candidate(rng: &mut StdRng) -> QuiverInput {
    let k = rng.gen_range(1..=4usize);
    let mut sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
    let anchor = rng.gen_range(0..k);
    sizes[anchor] = 1;
    let mut start = Vec::with_capacity(k);
    let mut n = 0;
    for &s in &sizes {
        start.push(n);
        n += s;
    }
    let vertex = |orbit: usize, step: usize| start[orbit] + step % sizes[orbit];
    let mut edges = Vec::new();
    let mut link = |rng: &mut StdRng, i: usize, j: usize| {
        let copies = if sizes[i] % 2 == 1 && sizes[j] % 2 == 1 { 2 * rng.gen_range(1..=2) } else { rng.gen_range(1..=2) };
        let len = sizes[i].lcm(&sizes[j]);
        for _ in 0..copies {
            let offset = rng.gen_range(0..sizes[j]);
            let forward = rng.gen_bool(0.5);
            for t in 0..len {
                let (x, y) = (vertex(i, t), vertex(j, t + offset));
                edges.push(if forward { (x, y) } else { (y, x) });
            }
        }
    };
    for j in 1..k {
        let i = rng.gen_range(0..j);
        link(rng, i, j);
    }
    if k > 2 && rng.gen_bool(0.3) {
        let i = rng.gen_range(0..k);
        let j = rng.gen_range(0..k);
        if i != j {
            link(rng, i, j);
        }
    }
    let id = |v: usize| Value::String(v.to_string());
    let mut automorphism = std::collections::BTreeMap::new();
    let mut parity = std::collections::BTreeMap::new();
    for (o, &s) in sizes.iter().enumerate() {
        for t in 0..s {
            automorphism.insert(vertex(o, t).to_string(), id(vertex(o, t + 1)));
        }
        parity.insert(start[o].to_string(), (s % 2) as u8);
    }
    let mut order: Vec<Value> = (0..k).map(|o| id(start[o])).collect();
    if rng.gen_bool(0.5) {
        order.reverse();
    }
    QuiverInput {
        name: Some("random".into()),
        vertices: (0..n).map(id).collect(),
        edges: edges.into_iter().map(|(s, t)| (id(s), id(t))).collect(),
        automorphism,
        parity,
        order: Some(order),
    }
}
