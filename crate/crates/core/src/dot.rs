//! Graphviz export. Arcs of `F` are blue; certificate `IN` sets are drawn as
//! red clusters and `OUT` sets as green clusters, nested along the laminar
//! order.

use std::fmt::Write as _;

use crate::certificate::Certificate;
use crate::digraph::{ArcSet, Digraph, VertexSet};

pub fn to_dot(digraph: &Digraph, f: &ArcSet, certificate: Option<&Certificate>) -> String {
    let labels: Vec<String> = (0..digraph.vertex_count()).map(|v| v.to_string()).collect();
    to_dot_labeled(digraph, f, certificate, &labels)
}

struct Cluster<'a> {
    set: &'a VertexSet,
    color: &'static str,
    tag: &'static str,
    children: Vec<usize>,
}

fn cluster_forest<'a>(cert: &'a Certificate) -> Option<(Vec<Cluster<'a>>, Vec<usize>)> {
    let mut clusters: Vec<Cluster> = cert
        .f_in
        .iter()
        .map(|s| (s, "red", "IN"))
        .chain(cert.f_out.iter().map(|s| (s, "green", "OUT")))
        .map(|(set, color, tag)| Cluster {
            set,
            color,
            tag,
            children: Vec::new(),
        })
        .collect();
    for (i, a) in clusters.iter().enumerate() {
        for b in &clusters[i + 1..] {
            if !a.set.is_laminar_with(b.set) {
                return None;
            }
        }
    }
    // Parent: the smallest strictly larger (or equal, earlier) containing set.
    let contains = |outer: usize, inner: usize, cs: &[Cluster]| {
        outer != inner
            && cs[inner].set.is_subset(cs[outer].set)
            && (cs[outer].set != cs[inner].set || outer < inner)
    };
    let mut roots = Vec::new();
    for i in 0..clusters.len() {
        let parent = (0..clusters.len())
            .filter(|&j| contains(j, i, &clusters))
            .min_by_key(|&j| (clusters[j].set.len(), std::cmp::Reverse(j)));
        match parent {
            Some(j) => clusters[j].children.push(i),
            None => roots.push(i),
        }
    }
    Some((clusters, roots))
}

fn write_cluster(
    out: &mut String,
    clusters: &[Cluster],
    i: usize,
    placed: &mut [bool],
    labels: &[String],
    depth: usize,
) {
    let pad = "  ".repeat(depth);
    let c = &clusters[i];
    let _ = writeln!(out, "{pad}subgraph cluster_{i} {{");
    let _ = writeln!(out, "{pad}  color=\"{}\"; label=\"{}\";", c.color, c.tag);
    for &child in &c.children {
        write_cluster(out, clusters, child, placed, labels, depth + 1);
    }
    for v in c.set.iter() {
        if !placed[v] {
            placed[v] = true;
            let _ = writeln!(out, "{pad}  {v} [label=\"{}\"];", labels[v]);
        }
    }
    let _ = writeln!(out, "{pad}}}");
}

/// DOT text with vertex display names taken from `labels`.
pub fn to_dot_labeled(
    digraph: &Digraph,
    f: &ArcSet,
    certificate: Option<&Certificate>,
    labels: &[String],
) -> String {
    let n = digraph.vertex_count();
    let mut out = String::from("digraph D {\n");
    let mut placed = vec![false; n];

    if let Some(cert) = certificate {
        let _ = writeln!(
            out,
            "  // root s={} lambda={} k={}",
            cert.root, cert.lambda, cert.k
        );
        for (tag, sets) in [("IN", &cert.f_in), ("OUT", &cert.f_out)] {
            for set in sets {
                let names: Vec<&str> = set.iter().map(|v| labels[v].as_str()).collect();
                let _ = writeln!(out, "  // {tag} {{{}}}", names.join(", "));
            }
        }
        if let Some((clusters, roots)) = cluster_forest(cert) {
            for root in roots {
                write_cluster(&mut out, &clusters, root, &mut placed, labels, 1);
            }
        }
    }
    for v in 0..n {
        if !placed[v] {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", labels[v]);
        }
    }
    for arc in digraph.arcs() {
        let color = if f.contains(arc.id) {
            ", color=blue"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{}\"{color}];",
            arc.tail, arc.head, arc.id
        );
    }
    out.push_str("}\n");
    out
}
