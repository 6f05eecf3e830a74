//! Brute-force ground truth and named fixture instances.
//!
//! Nothing here calls into the flow-based code paths: connectivity is
//! evaluated by enumerating vertex subsets, so these functions can check
//! the fast implementations independently.

use std::collections::{HashMap, VecDeque};

use crate::certificate::Certificate;
use crate::digraph::{ArcId, ArcSet, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::io::parse_digraph;

const MAX_BRUTEFORCE_VERTICES: usize = 20;
const MAX_SEQUENCE_VERTICES: usize = 12;
const MAX_SEQUENCE_F: usize = 20;
const MAX_EXHAUSTIVE_SEED_VERTICES: usize = 8;
const MAX_SEED_LEAVES: u64 = 1 << 22;

fn check_bruteforce_size(n: usize) -> Result<()> {
    if !(2..=MAX_BRUTEFORCE_VERTICES).contains(&n) {
        return Err(Error::OracleLimit(format!(
            "brute force needs 2 <= n <= {MAX_BRUTEFORCE_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

fn in_degree_mask(digraph: &Digraph, mask: u32) -> usize {
    digraph
        .arcs()
        .iter()
        .filter(|a| mask >> a.tail & 1 == 0 && mask >> a.head & 1 == 1)
        .count()
}

/// `λ(D)` as the minimum in-degree over all `2ⁿ - 2` nonempty proper subsets.
pub fn lambda_bruteforce(digraph: &Digraph) -> Result<usize> {
    let n = digraph.vertex_count();
    check_bruteforce_size(n)?;
    let full = (1u32 << n) - 1;
    Ok((1..full)
        .map(|mask| in_degree_mask(digraph, mask))
        .min()
        .expect("n >= 2 gives a proper subset"))
}

/// Every nonempty proper subset as a bitmask, with its in-degree.
pub fn all_cuts(digraph: &Digraph) -> Result<Vec<(u32, usize)>> {
    let n = digraph.vertex_count();
    check_bruteforce_size(n)?;
    let full = (1u32 << n) - 1;
    Ok((1..full)
        .map(|mask| (mask, in_degree_mask(digraph, mask)))
        .collect())
}

/// Minimum in-degree over sets containing `t` but not `s`, with every set
/// attaining it (as bitmasks).
pub fn min_cut_bruteforce(digraph: &Digraph, s: Vertex, t: Vertex) -> Result<(usize, Vec<u32>)> {
    let n = digraph.vertex_count();
    check_bruteforce_size(n)?;
    if s == t || s >= n || t >= n {
        return Err(Error::OracleLimit(format!("bad terminals {s}, {t}")));
    }
    let cuts: Vec<_> = all_cuts(digraph)?
        .into_iter()
        .filter(|&(mask, _)| mask >> t & 1 == 1 && mask >> s & 1 == 0)
        .collect();
    let best = cuts
        .iter()
        .map(|&(_, d)| d)
        .min()
        .expect("the singleton sink qualifies");
    Ok((
        best,
        cuts.into_iter()
            .filter(|&(_, d)| d == best)
            .map(|(mask, _)| mask)
            .collect(),
    ))
}

fn monotone_bfs(
    digraph: &Digraph,
    f: &ArcSet,
    mut goal: impl FnMut(u32, usize) -> bool,
) -> Result<Option<Vec<ArcId>>> {
    let n = digraph.vertex_count();
    if n > MAX_SEQUENCE_VERTICES || f.len() > MAX_SEQUENCE_F {
        return Err(Error::OracleLimit(format!(
            "sequence search needs n <= {MAX_SEQUENCE_VERTICES} and |F| <= {MAX_SEQUENCE_F}"
        )));
    }
    f.validate(digraph)?;
    let members: Vec<ArcId> = f.iter().collect();
    let mut lambdas: HashMap<u32, usize> = HashMap::new();
    let mut lambda_of = |mask: u32| -> Result<usize> {
        if let Some(&l) = lambdas.get(&mask) {
            return Ok(l);
        }
        let mut d = digraph.clone();
        for (bit, &id) in members.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                d.reverse_in_place(id)?;
            }
        }
        let l = lambda_bruteforce(&d)?;
        lambdas.insert(mask, l);
        Ok(l)
    };

    let mut parent: HashMap<u32, (u32, usize)> = HashMap::new();
    let mut queue = VecDeque::from([0u32]);
    let mut found = None;
    while let Some(state) = queue.pop_front() {
        let lambda = lambda_of(state)?;
        if goal(state, lambda) {
            found = Some(state);
            break;
        }
        for bit in 0..members.len() {
            let next = state | 1 << bit;
            if next == state || next == 0 || parent.contains_key(&next) {
                continue;
            }
            if lambda_of(next)? >= lambda {
                parent.insert(next, (state, bit));
                queue.push_back(next);
            }
        }
    }
    Ok(found.map(|mut state| {
        let mut path = Vec::new();
        while let Some(&(prev, bit)) = parent.get(&state) {
            path.push(members[bit]);
            state = prev;
        }
        path.reverse();
        path
    }))
}

/// Shortest sequence of single reversals of distinct `F` arcs, each keeping
/// `λ` non-decreasing, that reaches `λ >= k`. `None` if no such sequence
/// exists.
pub fn exhaustive_sequence_exists(
    digraph: &Digraph,
    f: &ArcSet,
    k: usize,
) -> Result<Option<Vec<ArcId>>> {
    monotone_bfs(digraph, f, |_, lambda| lambda >= k)
}

/// An order reversing all of `F` with `λ` non-decreasing at every step.
pub fn exhaustive_full_order(digraph: &Digraph, f: &ArcSet) -> Result<Option<Vec<ArcId>>> {
    let full = if f.is_empty() {
        0
    } else {
        u32::MAX >> (32 - f.len())
    };
    monotone_bfs(digraph, f, |state, _| state == full)
}

/// An undirected multigraph given by its edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl UndirectedGraph {
    pub fn underlying(digraph: &Digraph) -> Self {
        UndirectedGraph {
            n: digraph.vertex_count(),
            edges: digraph.underlying_edges(),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn all_degrees_even(&self) -> bool {
        (0..self.n).all(|v| self.degree(v).is_multiple_of(2))
    }

    /// Minimum number of edges crossing a nonempty proper subset.
    pub fn edge_connectivity_bruteforce(&self) -> Result<usize> {
        check_bruteforce_size(self.n)?;
        let full = (1u32 << self.n) - 1;
        Ok((1..full)
            .map(|mask| {
                self.edges
                    .iter()
                    .filter(|&&(a, b)| (mask >> a & 1) != (mask >> b & 1))
                    .count()
            })
            .min()
            .expect("n >= 2"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedSearch {
    /// Enumerate orientations (n <= 8).
    Exhaustive,
    /// Orient along closed trails; needs every degree even.
    Eulerian,
    /// Eulerian when all degrees are even, exhaustive otherwise.
    Auto,
}

/// Orientation with `d⁻(v) = d⁺(v)` at every vertex, built by walking
/// closed trails. `None` if some degree is odd.
pub fn eulerian_orientation(graph: &UndirectedGraph) -> Option<Digraph> {
    if !graph.all_degrees_even() {
        return None;
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); graph.n];
    for (i, &(a, b)) in graph.edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut used = vec![false; graph.edges.len()];
    let mut cursor = vec![0usize; graph.n];
    let mut oriented = vec![(0, 0); graph.edges.len()];
    for start in 0..graph.n {
        loop {
            // Walk until stuck; with even degrees that only happens at `start`.
            let mut v = start;
            let mut moved = false;
            loop {
                while cursor[v] < incident[v].len() && used[incident[v][cursor[v]]] {
                    cursor[v] += 1;
                }
                let Some(&e) = incident[v].get(cursor[v]) else {
                    break;
                };
                used[e] = true;
                let (a, b) = graph.edges[e];
                let w = if a == v { b } else { a };
                oriented[e] = (v, w);
                v = w;
                moved = true;
            }
            debug_assert_eq!(v, start);
            if !moved {
                break;
            }
        }
    }
    Digraph::from_arcs(graph.n, &oriented).ok()
}

fn exhaustive_orientation(graph: &UndirectedGraph, k: usize) -> Option<Digraph> {
    let n = graph.n;
    if !(2..=MAX_EXHAUSTIVE_SEED_VERTICES).contains(&n) {
        return None;
    }
    // Parallel edges only matter through how many point each way.
    let mut pairs: Vec<((Vertex, Vertex), Vec<usize>)> = Vec::new();
    for (i, &(a, b)) in graph.edges.iter().enumerate() {
        let key = (a.min(b), a.max(b));
        match pairs.iter_mut().find(|(p, _)| *p == key) {
            Some((_, ids)) => ids.push(i),
            None => pairs.push((key, vec![i])),
        }
    }
    pairs.sort();
    let mut last_pair = vec![None; n];
    for (p, ((a, b), _)) in pairs.iter().enumerate() {
        last_pair[*a] = Some(p);
        last_pair[*b] = Some(p);
    }
    if last_pair.iter().any(Option::is_none) && k > 0 {
        return None;
    }

    struct State<'a> {
        pairs: &'a [((Vertex, Vertex), Vec<usize>)],
        last_pair: &'a [Option<usize>],
        forward: Vec<usize>,
        indeg: Vec<usize>,
        outdeg: Vec<usize>,
        leaves: u64,
        graph: &'a UndirectedGraph,
        k: usize,
    }

    impl State<'_> {
        fn build(&self) -> Digraph {
            let mut arcs = vec![(0, 0); self.graph.edges.len()];
            for (p, ((a, b), ids)) in self.pairs.iter().enumerate() {
                for (j, &e) in ids.iter().enumerate() {
                    arcs[e] = if j < self.forward[p] {
                        (*a, *b)
                    } else {
                        (*b, *a)
                    };
                }
            }
            Digraph::from_arcs(self.graph.n, &arcs).expect("edges are valid")
        }

        fn search(&mut self, p: usize) -> Option<Digraph> {
            if p == self.pairs.len() {
                self.leaves += 1;
                let d = self.build();
                return (lambda_bruteforce(&d).ok()? >= self.k).then_some(d);
            }
            if self.leaves >= MAX_SEED_LEAVES {
                return None;
            }
            let ((a, b), ids) = &self.pairs[p];
            let (a, b, c) = (*a, *b, ids.len());
            let mut choices: Vec<usize> = (0..=c).collect();
            choices.sort_by_key(|&j| (2 * j).abs_diff(c));
            for j in choices {
                self.forward[p] = j;
                self.outdeg[a] += j;
                self.indeg[b] += j;
                self.outdeg[b] += c - j;
                self.indeg[a] += c - j;
                let ok = [a, b].iter().all(|&v| {
                    self.last_pair[v] != Some(p)
                        || (self.indeg[v] >= self.k && self.outdeg[v] >= self.k)
                });
                let found = if ok { self.search(p + 1) } else { None };
                self.outdeg[a] -= j;
                self.indeg[b] -= j;
                self.outdeg[b] -= c - j;
                self.indeg[a] -= c - j;
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }

    let mut state = State {
        pairs: &pairs,
        last_pair: &last_pair,
        forward: vec![0; pairs.len()],
        indeg: vec![0; n],
        outdeg: vec![0; n],
        leaves: 0,
        graph,
        k,
    };
    state.search(0)
}

/// A k-arc-connected orientation of `graph`, if the chosen search finds one.
pub fn find_seed_orientation(
    graph: &UndirectedGraph,
    k: usize,
    search: SeedSearch,
) -> Option<Digraph> {
    let eulerian = || {
        let d = eulerian_orientation(graph)?;
        let lambda = if d.vertex_count() <= MAX_BRUTEFORCE_VERTICES {
            lambda_bruteforce(&d).ok()?
        } else {
            crate::connectivity::arc_connectivity(&d).ok()?.value
        };
        (lambda >= k).then_some(d)
    };
    match search {
        SeedSearch::Exhaustive => exhaustive_orientation(graph, k),
        SeedSearch::Eulerian => eulerian(),
        SeedSearch::Auto if graph.all_degrees_even() => eulerian(),
        SeedSearch::Auto => exhaustive_orientation(graph, k),
    }
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub digraph: Digraph,
    pub f: ArcSet,
    pub k: usize,
    pub expected_lambda: usize,
    pub expected_lambda_reversed: usize,
    /// Display names per vertex.
    pub labels: Vec<String>,
    /// Hand-drawn blocking certificate, where one exists.
    pub certificate: Option<Certificate>,
}

const FIG1: &str = include_str!("../fixtures/fig1.txt");
const FIG1_CERT: &str = include_str!("../fixtures/fig1.cert");
const FIG2: &str = include_str!("../fixtures/fig2.txt");
const FIG2_CERT: &str = include_str!("../fixtures/fig2.cert");

fn parameter(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    rest.parse().ok()
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}

/// Looks up a fixture: `fig1`, `fig2`, `triangle_example`, `cycle(n)` or
/// `bidirected_clique(n)` (the parentheses are optional).
pub fn fixture(name: &str) -> Result<Fixture> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let from_text =
        |text: &str, cert: Option<&str>, k, lambda, reversed, labels: &[&str]| -> Result<Fixture> {
            let (digraph, f) = parse_digraph(text)?;
            let certificate = cert
                .map(|c| Certificate::parse(c, digraph.vertex_count()))
                .transpose()?;
            Ok(Fixture {
                name: name.to_string(),
                digraph,
                f,
                k,
                expected_lambda: lambda,
                expected_lambda_reversed: reversed,
                labels: labels.iter().map(|s| s.to_string()).collect(),
                certificate,
            })
        };
    match name {
        "fig1" => from_text(
            FIG1,
            Some(FIG1_CERT),
            4,
            3,
            4,
            &["A", "B", "C", "D", "F", "G"],
        ),
        "fig2" => from_text(
            FIG2,
            Some(FIG2_CERT),
            6,
            4,
            6,
            &[
                "Au", "Ac", "Bu", "Bc", "Cu", "Cc", "Du", "Dc", "Eu", "Ec", "Fu", "Fc", "Gu", "Gc",
                "Hu", "Hc",
            ],
        ),
        "triangle_example" => {
            let digraph = Digraph::from_arcs(3, &[(0, 1), (0, 1), (1, 2), (2, 1), (2, 0), (0, 2)])?;
            Ok(Fixture {
                name: name.to_string(),
                digraph,
                f: [ArcId(0)].into_iter().collect(),
                k: 2,
                expected_lambda: 1,
                expected_lambda_reversed: 2,
                labels: vec!["u".into(), "v".into(), "w".into()],
                certificate: None,
            })
        }
        _ => {
            if let Some(n) = parameter(name, "cycle") {
                if n < 2 {
                    return Err(unknown());
                }
                let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Fixture {
                    name: name.to_string(),
                    digraph: Digraph::from_arcs(n, &arcs)?,
                    f: ArcSet::new(),
                    k: 1,
                    expected_lambda: 1,
                    expected_lambda_reversed: 1,
                    labels: numeric_labels(n),
                    certificate: None,
                })
            } else if let Some(n) = parameter(name, "bidirected_clique") {
                if n < 2 {
                    return Err(unknown());
                }
                let arcs: Vec<_> = (0..n)
                    .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                    .collect();
                Ok(Fixture {
                    name: name.to_string(),
                    digraph: Digraph::from_arcs(n, &arcs)?,
                    f: ArcSet::new(),
                    k: n - 1,
                    expected_lambda: n - 1,
                    expected_lambda_reversed: n - 1,
                    labels: numeric_labels(n),
                    certificate: None,
                })
            } else {
                Err(unknown())
            }
        }
    }
}
