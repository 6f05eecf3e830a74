//! Seeded random instance generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use revarc::oracle::UndirectedGraph;
use revarc::{ArcSet, Digraph};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random multidigraph: each ordered pair gets multiplicity in `0..=max_mult`
/// with probability `density`.
pub fn random_multidigraph(
    rng: &mut ChaCha8Rng,
    n: usize,
    density: f64,
    max_mult: usize,
) -> Digraph {
    let mut d = Digraph::new(n).unwrap();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                for _ in 0..rng.gen_range(1..=max_mult) {
                    d.add_arc(u, v).unwrap();
                }
            }
        }
    }
    d
}

/// Union of `cycles` random Hamiltonian cycles plus `extra` random arcs;
/// at least `cycles`-arc-connected. Arc order is shuffled.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, cycles: usize, extra: usize) -> Digraph {
    let mut arcs = Vec::new();
    for _ in 0..cycles {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 0..n {
            arcs.push((order[i], order[(i + 1) % n]));
        }
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        arcs.push((u, v));
    }
    arcs.shuffle(rng);
    Digraph::from_arcs(n, &arcs).unwrap()
}

pub fn random_subset(rng: &mut ChaCha8Rng, d: &Digraph, p: f64) -> ArcSet {
    d.arcs()
        .iter()
        .filter(|_| rng.gen_bool(p))
        .map(|a| a.id)
        .collect()
}

/// Union of `cycles` undirected Hamiltonian cycles plus `extra` random
/// closed triangles: every degree is even and the graph is
/// `2·cycles`-edge-connected.
pub fn random_eulerian_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    cycles: usize,
    extra: usize,
) -> UndirectedGraph {
    let mut edges = Vec::new();
    for _ in 0..cycles {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 0..n {
            let (a, b) = (order[i], order[(i + 1) % n]);
            edges.push((a.min(b), a.max(b)));
        }
    }
    for _ in 0..extra {
        let mut tri: Vec<usize> = (0..n).collect();
        tri.shuffle(rng);
        let (a, b, c) = (tri[0], tri[1], tri[2]);
        for (x, y) in [(a, b), (b, c), (c, a)] {
            edges.push((x.min(y), x.max(y)));
        }
    }
    UndirectedGraph { n, edges }
}

/// Orients every edge uniformly at random.
pub fn random_orientation(rng: &mut ChaCha8Rng, graph: &UndirectedGraph) -> Digraph {
    let arcs: Vec<_> = graph
        .edges
        .iter()
        .map(|&(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    Digraph::from_arcs(graph.n, &arcs).unwrap()
}

/// Applies a vertex permutation and shuffles the arc order; returns the new
/// digraph and the image of `f`.
pub fn relabel(rng: &mut ChaCha8Rng, d: &Digraph, f: &ArcSet) -> (Digraph, ArcSet) {
    let n = d.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut order: Vec<usize> = (0..d.arc_count()).collect();
    order.shuffle(rng);
    let mut out = Digraph::new(n).unwrap();
    let mut out_f = ArcSet::new();
    for &i in &order {
        let arc = d.arcs()[i];
        let id = out.add_arc(perm[arc.tail], perm[arc.head]).unwrap();
        if f.contains(arc.id) {
            out_f.insert(id);
        }
    }
    (out, out_f)
}

/// Every arc copied `t` times; copies of an `F` arc stay in `F`.
pub fn scale(d: &Digraph, f: &ArcSet, t: usize) -> (Digraph, ArcSet) {
    let mut out = Digraph::new(d.vertex_count()).unwrap();
    let mut g = ArcSet::new();
    for a in d.arcs() {
        for _ in 0..t {
            let id = out.add_arc(a.tail, a.head).unwrap();
            if f.contains(a.id) {
                g.insert(id);
            }
        }
    }
    (out, g)
}

/// An instance meeting the single-step guarantee: `F` reversed gives a
/// k-arc-connected digraph and `λ(D) <= ⌊(k+1)/2⌋`. `None` if the random draw
/// misses the second condition.
pub fn guarantee_instance(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Option<(Digraph, ArcSet)> {
    let extra = rng.gen_range(0..=n);
    let h = random_connected(rng, n, k, extra);
    let p = rng.gen_range(0.15..0.6);
    let f = random_subset(rng, &h, p);
    let d = h.reverse_set(&f).unwrap();
    let lambda = revarc::arc_connectivity(&d).unwrap().value;
    (!f.is_empty() && lambda <= k.div_ceil(2)).then_some((d, f))
}
