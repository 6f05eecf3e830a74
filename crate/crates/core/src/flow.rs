//! Dinic's blocking-flow max-flow on unit-capacity multigraphs.
//!
//! Parallel arcs are merged into one residual edge with integer capacity,
//! which keeps the residual graph at most one edge pair per ordered vertex
//! pair.

use std::collections::{HashMap, VecDeque};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: usize,
    rev: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    graph: Vec<Vec<Edge>>,
    level: Vec<Option<usize>>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn from_digraph(digraph: &Digraph) -> Self {
        let n = digraph.vertex_count();
        let mut multiplicity: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        let mut order = Vec::new();
        for arc in digraph.arcs() {
            let entry = multiplicity.entry((arc.tail, arc.head)).or_insert_with(|| {
                order.push((arc.tail, arc.head));
                0
            });
            *entry += 1;
        }
        let mut net = FlowNetwork {
            graph: vec![Vec::new(); n],
            level: vec![None; n],
            iter: vec![0; n],
        };
        for (tail, head) in order {
            net.add_edge(tail, head, multiplicity[&(tail, head)]);
        }
        net
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: usize) {
        let rev_from = self.graph[to].len();
        let rev_to = self.graph[from].len();
        self.graph[from].push(Edge {
            to,
            cap,
            rev: rev_from,
        });
        self.graph[to].push(Edge {
            to: from,
            cap: 0,
            rev: rev_to,
        });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = None);
        self.level[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let next = self.level[v].map(|l| l + 1);
            for e in &self.graph[v] {
                if e.cap > 0 && self.level[e.to].is_none() {
                    self.level[e.to] = next;
                    queue.push_back(e.to);
                }
            }
        }
        self.level[t].is_some()
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: usize) -> usize {
        if v == t {
            return pushed;
        }
        let next = self.level[v].map(|l| l + 1);
        while self.iter[v] < self.graph[v].len() {
            let i = self.iter[v];
            let Edge { to, cap, rev } = self.graph[v][i];
            if cap > 0 && self.level[to] == next {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.graph[v][i].cap -= d;
                    self.graph[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until it is maximum or reaches `limit`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(s, t, limit - flow);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow == limit {
                    break;
                }
            }
        }
        flow
    }

    /// Vertices that can still reach `t` in the residual graph.
    pub(crate) fn sink_side(&self, t: usize) -> VertexSet {
        let n = self.graph.len();
        let mut side = VertexSet::empty(n);
        side.insert(t);
        let mut queue = VecDeque::from([t]);
        while let Some(y) = queue.pop_front() {
            for e in &self.graph[y] {
                let x = e.to;
                if !side.contains(x) && self.graph[x][e.rev].cap > 0 {
                    side.insert(x);
                    queue.push_back(x);
                }
            }
        }
        side
    }
}

/// Result of an `s`-`t` max-flow computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: usize,
    /// Inclusion-minimal sink side over all minimum `s`-`t` cuts.
    pub sink_side: VertexSet,
}

/// Maximum number of arc-disjoint `s`→`t` paths, with the minimal sink side.
pub fn max_flow(digraph: &Digraph, s: Vertex, t: Vertex) -> Result<MaxFlow> {
    let n = digraph.vertex_count();
    for v in [s, t] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let mut net = FlowNetwork::from_digraph(digraph);
    let value = net.max_flow(s, t, usize::MAX);
    Ok(MaxFlow {
        value,
        sink_side: net.sink_side(t),
    })
}

/// `min(max_flow(s, t), limit)`, stopping augmentation at `limit`.
pub fn bounded_flow_value(digraph: &Digraph, s: Vertex, t: Vertex, limit: usize) -> usize {
    FlowNetwork::from_digraph(digraph).max_flow(s, t, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let flow = max_flow(&d, 0, 1).unwrap();
        assert_eq!(flow.value, 1);
        assert_eq!(flow.sink_side.members(), vec![1]);
    }

    #[test]
    fn cycle_gives_segment_before_sink() {
        let d = Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let flow = max_flow(&d, 1, 3).unwrap();
        assert_eq!(flow.value, 1);
        // Arc 2->3 is saturated; only 3 reaches the sink.
        assert_eq!(flow.sink_side.members(), vec![3]);
        let flow = max_flow(&d, 3, 1).unwrap();
        assert_eq!(flow.sink_side.members(), vec![1]);
    }

    #[test]
    fn parallel_arcs_add_capacity() {
        let d = Digraph::from_arcs(3, &[(0, 1), (0, 1), (0, 1), (1, 2), (1, 2)]).unwrap();
        let flow = max_flow(&d, 0, 2).unwrap();
        assert_eq!(flow.value, 2);
        assert_eq!(flow.sink_side.members(), vec![2]);
    }

    #[test]
    fn unreachable_sink() {
        let d = Digraph::from_arcs(3, &[(0, 1), (2, 1)]).unwrap();
        let flow = max_flow(&d, 0, 2).unwrap();
        assert_eq!(flow.value, 0);
        assert_eq!(flow.sink_side.members(), vec![2]);
    }

    #[test]
    fn bounded_stops_early() {
        let d = Digraph::from_arcs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(bounded_flow_value(&d, 0, 1, 2), 2);
        assert_eq!(bounded_flow_value(&d, 0, 1, 5), 3);
    }

    #[test]
    fn same_endpoints_rejected() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(max_flow(&d, 1, 1), Err(Error::SameEndpoints(1)));
    }
}
