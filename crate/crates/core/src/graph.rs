//! The graph of a domain, connectivity notions, median-graph verification,
//! maximal chains, and inversion triples.
//!
//! Vertices are the domain's orders; an edge joins `u` and `w` when no
//! third member of the domain lies between them. Edges are additionally
//! flagged when their endpoints differ by one adjacent transposition
//! (a permutahedron edge).

use std::collections::BTreeSet;

use crate::domain::Domain;
use crate::order::{between_by_positions, kendall_by_positions, AltId, LinearOrder};
use crate::{Caps, Error, Result};

/// An edge of the domain graph; `a < b` index the domain's sorted orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub a: u32,
    pub b: u32,
    /// True when the endpoints differ by a single neighbouring swap.
    pub permutahedron: bool,
}

/// The graph induced by Kemeny-betweenness intervals within a domain.
#[derive(Clone, Debug)]
pub struct DomainGraph {
    vertex_count: usize,
    edges: Vec<GraphEdge>,
}

impl DomainGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when every edge is a permutahedron edge.
    pub fn all_edges_adjacent(&self) -> bool {
        self.edges.iter().all(|e| e.permutahedron)
    }

    /// Median verification of the underlying abstract graph.
    pub fn is_median(&self) -> bool {
        let pairs: Vec<(u32, u32)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        is_median_graph(self.vertex_count, &pairs)
    }

    /// Connectivity of the underlying abstract graph.
    pub fn abstract_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let adj = adjacency(self.vertex_count, self.edges.iter().map(|e| (e.a, e.b)));
        let dist = bfs(&adj, 0);
        dist.iter().all(|&d| d != u32::MAX)
    }
}

/// Builds `G_D`: edges are exactly the pairs whose induced interval within
/// the domain is the pair itself.
pub fn build_graph(domain: &Domain, caps: &Caps) -> Result<DomainGraph> {
    let nv = domain.len();
    if nv > caps.graph_vertices {
        return Err(Error::cap(
            "domain graph construction",
            nv as u64,
            "graph",
            caps.graph_vertices as u64,
        ));
    }
    let positions: Vec<Vec<u8>> = domain.orders().iter().map(LinearOrder::positions).collect();
    let mut edges = Vec::new();
    for i in 0..nv {
        for j in (i + 1)..nv {
            let blocked = (0..nv).any(|k| {
                k != i && k != j && between_by_positions(&positions[k], &positions[i], &positions[j])
            });
            if !blocked {
                edges.push(GraphEdge {
                    a: i as u32,
                    b: j as u32,
                    permutahedron: domain.orders()[i].is_adjacent(&domain.orders()[j]),
                });
            }
        }
    }
    Ok(DomainGraph {
        vertex_count: nv,
        edges,
    })
}

/// A domain is connected when its graph is a subgraph of the permutahedron,
/// i.e. every edge joins orders differing by one neighbouring swap.
pub fn is_connected(domain: &Domain, caps: &Caps) -> Result<bool> {
    Ok(build_graph(domain, caps)?.all_edges_adjacent())
}

fn adjacency(nv: usize, edges: impl Iterator<Item = (u32, u32)>) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); nv];
    for (a, b) in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    adj
}

fn bfs(adj: &[Vec<u32>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source as u32]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x as usize] {
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// True iff every vertex triple has exactly one vertex lying on shortest
/// paths between each of the three pairs.
///
/// Disconnected graphs verify false. Interval sets are computed from BFS
/// distances and intersected as bitsets.
pub fn is_median_graph(vertex_count: usize, edges: &[(u32, u32)]) -> bool {
    if vertex_count == 0 {
        return false;
    }
    if vertex_count == 1 {
        return true;
    }
    let adj = adjacency(vertex_count, edges.iter().copied());
    let dist: Vec<Vec<u32>> = (0..vertex_count).map(|v| bfs(&adj, v)).collect();
    if dist[0].contains(&u32::MAX) {
        return false;
    }
    let words = vertex_count.div_ceil(64);
    // interval[u][w] as a bitset over vertices
    let mut intervals = vec![vec![0u64; words]; vertex_count * vertex_count];
    for u in 0..vertex_count {
        for w in u..vertex_count {
            let mut bits = vec![0u64; words];
            for m in 0..vertex_count {
                if dist[u][m] + dist[m][w] == dist[u][w] {
                    bits[m / 64] |= 1 << (m % 64);
                }
            }
            intervals[u * vertex_count + w] = bits.clone();
            intervals[w * vertex_count + u] = bits;
        }
    }
    for x in 0..vertex_count {
        for y in (x + 1)..vertex_count {
            for z in (y + 1)..vertex_count {
                let a = &intervals[x * vertex_count + y];
                let b = &intervals[y * vertex_count + z];
                let c = &intervals[x * vertex_count + z];
                let mut medians = 0u32;
                for i in 0..words {
                    medians += (a[i] & b[i] & c[i]).count_ones();
                }
                if medians != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// A path inside a domain from `w` to its reversal along adjacent swaps,
/// each step resolving one pair; length `C(n,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalChain {
    path: Vec<LinearOrder>,
    swaps: Vec<(AltId, AltId)>,
}

impl MaximalChain {
    fn from_path(path: Vec<LinearOrder>) -> Self {
        let swaps = path
            .windows(2)
            .map(|step| {
                let (x, y) = (&step[0], &step[1]);
                let i = (0..x.len())
                    .find(|&i| x.ranking()[i] != y.ranking()[i])
                    .expect("consecutive chain orders must differ");
                let (a, b) = (x.ranking()[i], x.ranking()[i + 1]);
                (a.min(b), a.max(b))
            })
            .collect();
        MaximalChain { path, swaps }
    }

    pub fn path(&self) -> &[LinearOrder] {
        &self.path
    }

    /// Unordered pairs in the order they are switched along the chain.
    pub fn swaps(&self) -> &[(AltId, AltId)] {
        &self.swaps
    }

    pub fn start(&self) -> &LinearOrder {
        self.path.first().expect("chains are nonempty")
    }

    pub fn end(&self) -> &LinearOrder {
        self.path.last().expect("chains are nonempty")
    }
}

/// A triple `[i, j, k]`, `i < j < k`, whose pairs a chain switches in the
/// order `(j,k), (i,k), (i,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InversionTriple {
    pub i: AltId,
    pub j: AltId,
    pub k: AltId,
}

impl InversionTriple {
    pub fn display(&self, alts: &crate::order::AlternativeSet) -> String {
        format!(
            "[{},{},{}]",
            alts.label(self.i),
            alts.label(self.j),
            alts.label(self.k)
        )
    }
}

/// All inversion triples of a maximal chain.
pub fn inversion_triples(chain: &MaximalChain) -> BTreeSet<InversionTriple> {
    let n = chain.start().len();
    let mut when = vec![usize::MAX; n * n];
    for (step, &(a, b)) in chain.swaps().iter().enumerate() {
        debug_assert!(
            when[a as usize * n + b as usize] == usize::MAX,
            "pair switched twice"
        );
        when[a as usize * n + b as usize] = step;
    }
    let at = |a: AltId, b: AltId| when[a as usize * n + b as usize];
    let mut out = BTreeSet::new();
    for i in 0..n as AltId {
        for j in (i + 1)..n as AltId {
            for k in (j + 1)..n as AltId {
                let (jk, ik, ij) = (at(j, k), at(i, k), at(i, j));
                if jk != usize::MAX && jk < ik && ik < ij {
                    out.insert(InversionTriple { i, j, k });
                }
            }
        }
    }
    out
}

/// Monotone-path search state shared by the chain operations.
struct ChainSearch<'a> {
    orders: &'a [LinearOrder],
    adj: Vec<Vec<u32>>,
    /// Kendall distance of each vertex to the target.
    dist: Vec<usize>,
    target: u32,
}

impl<'a> ChainSearch<'a> {
    fn new(domain: &'a Domain, target: u32) -> Self {
        let orders = domain.orders();
        let positions: Vec<Vec<u8>> = orders.iter().map(LinearOrder::positions).collect();
        let nv = orders.len();
        let mut adj = vec![Vec::new(); nv];
        for i in 0..nv {
            for j in (i + 1)..nv {
                if orders[i].is_adjacent(&orders[j]) {
                    adj[i].push(j as u32);
                    adj[j].push(i as u32);
                }
            }
        }
        let dist = positions
            .iter()
            .map(|p| kendall_by_positions(p, &positions[target as usize]))
            .collect();
        ChainSearch {
            orders,
            adj,
            dist,
            target,
        }
    }

    /// Memoized: can `x` reach the target along steps that each reduce the
    /// Kendall distance by exactly one?
    fn can_reach(&self, x: u32, memo: &mut Vec<Option<bool>>) -> bool {
        if let Some(cached) = memo[x as usize] {
            return cached;
        }
        let result = x == self.target
            || self.adj[x as usize]
                .iter()
                .filter(|&&y| self.dist[y as usize] + 1 == self.dist[x as usize])
                .any(|&y| self.can_reach(y, memo));
        memo[x as usize] = Some(result);
        result
    }

    fn reconstruct(&self, start: u32, memo: &mut Vec<Option<bool>>) -> Vec<LinearOrder> {
        let mut path = vec![self.orders[start as usize].clone()];
        let mut x = start;
        while x != self.target {
            let next = self.adj[x as usize]
                .iter()
                .copied()
                .filter(|&y| self.dist[y as usize] + 1 == self.dist[x as usize])
                .find(|&y| self.can_reach(y, memo))
                .expect("reachable vertex must have a viable successor");
            path.push(self.orders[next as usize].clone());
            x = next;
        }
        path
    }

    fn all_paths(&self, start: u32, limit: usize, out: &mut Vec<Vec<u32>>) {
        let mut current = vec![start];
        self.enumerate(start, limit, &mut current, out);
    }

    fn enumerate(&self, x: u32, limit: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if out.len() >= limit {
            return;
        }
        if x == self.target {
            out.push(current.clone());
            return;
        }
        for &y in &self.adj[x as usize] {
            if self.dist[y as usize] + 1 == self.dist[x as usize] {
                current.push(y);
                self.enumerate(y, limit, current, out);
                current.pop();
            }
        }
    }
}

fn reversed_pair_indices(domain: &Domain) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for (i, u) in domain.orders().iter().enumerate() {
        let rev = u.reverse();
        if rev < *u {
            continue; // each pair once, from its lexicographically smaller end
        }
        if let Ok(j) = domain.orders().binary_search(&rev) {
            pairs.push((i as u32, j as u32));
        }
    }
    pairs
}

/// Semi-connected: the domain has maximal width and some reversed pair is
/// joined inside the domain by a monotone path of adjacent swaps of length
/// `C(n,2)`.
pub fn is_semi_connected(domain: &Domain, caps: &Caps) -> Result<bool> {
    if domain.len() > caps.graph_vertices {
        return Err(Error::cap(
            "semi-connectivity search",
            domain.len() as u64,
            "graph",
            caps.graph_vertices as u64,
        ));
    }
    for (start, target) in reversed_pair_indices(domain) {
        let search = ChainSearch::new(domain, target);
        let mut memo = vec![None; domain.len()];
        if search.can_reach(start, &mut memo) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A maximal chain inside the domain from `w` to its reversal, when one
/// exists. Both `w` and its reversal must belong to the domain.
pub fn find_maximal_chain(
    domain: &Domain,
    w: &LinearOrder,
    caps: &Caps,
) -> Result<Option<MaximalChain>> {
    if domain.len() > caps.graph_vertices {
        return Err(Error::cap(
            "maximal chain search",
            domain.len() as u64,
            "graph",
            caps.graph_vertices as u64,
        ));
    }
    let Ok(start) = domain.orders().binary_search(w) else {
        return Err(Error::Precondition("chain start is not in the domain".into()));
    };
    let Ok(target) = domain.orders().binary_search(&w.reverse()) else {
        return Err(Error::Precondition(
            "reversal of the chain start is not in the domain".into(),
        ));
    };
    let search = ChainSearch::new(domain, target as u32);
    let mut memo = vec![None; domain.len()];
    if !search.can_reach(start as u32, &mut memo) {
        return Ok(None);
    }
    let path = search.reconstruct(start as u32, &mut memo);
    Ok(Some(MaximalChain::from_path(path)))
}

/// Every maximal chain from `w` to its reversal, up to `limit` chains.
/// Intended for small domains.
pub fn all_maximal_chains(
    domain: &Domain,
    w: &LinearOrder,
    limit: usize,
    caps: &Caps,
) -> Result<Vec<MaximalChain>> {
    if domain.len() > caps.graph_vertices {
        return Err(Error::cap(
            "maximal chain enumeration",
            domain.len() as u64,
            "graph",
            caps.graph_vertices as u64,
        ));
    }
    let Ok(start) = domain.orders().binary_search(w) else {
        return Err(Error::Precondition("chain start is not in the domain".into()));
    };
    let Ok(target) = domain.orders().binary_search(&w.reverse()) else {
        return Err(Error::Precondition(
            "reversal of the chain start is not in the domain".into(),
        ));
    };
    let search = ChainSearch::new(domain, target as u32);
    let mut paths = Vec::new();
    search.all_paths(start as u32, limit, &mut paths);
    Ok(paths
        .into_iter()
        .map(|p| {
            MaximalChain::from_path(p.into_iter().map(|i| domain.orders()[i as usize].clone()).collect())
        })
        .collect())
}

/// Inversion triples of one canonical maximal chain: the chain launched
/// from the lexicographically smallest member of a reversed pair. `None`
/// when the domain has no such chain.
pub fn domain_inversion_triples(
    domain: &Domain,
    caps: &Caps,
) -> Result<Option<BTreeSet<InversionTriple>>> {
    for (start, _) in reversed_pair_indices(domain) {
        let w = domain.orders()[start as usize].clone();
        if let Some(chain) = find_maximal_chain(domain, &w, caps)? {
            return Ok(Some(inversion_triples(&chain)));
        }
    }
    Ok(None)
}
