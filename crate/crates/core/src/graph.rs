//! Multigraphs with loops and parallel edges, the counting oracles built on
//! them, and the generators for the graph families used by the catalog.
//!
//! The orientation counters here are deliberately brute force: they are the
//! independent oracles for the Tutte evaluations T(2,0) and T(0,2), so they
//! enumerate all 2^|E| direction vectors instead of sharing any machinery
//! with the polynomial engines.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A multigraph: `vertices` counts vertices 0..V-1, `edges` is a list of
/// unordered endpoint pairs. Loops (u = v) and duplicate pairs are allowed
/// and never simplified implicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return Err(Error::ElementOutOfRange {
                    index: u.max(v),
                    size: vertices,
                });
            }
        }
        Ok(Multigraph { vertices, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == v).count()
    }

    /// Degree with loops counting twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Number of connected components of the spanning subgraph (V, A).
    /// Isolated vertices count.
    pub fn components_of(&self, edge_set: Subset) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for e in edge_set.iter() {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        uf.components
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.components
    }

    pub fn is_connected(&self) -> bool {
        self.vertices <= 1 || self.components() == 1
    }

    /// Rank of an edge set in the graphic matroid: V - c(V, A).
    pub fn graphic_rank(&self, edge_set: Subset) -> usize {
        self.vertices - self.components_of(edge_set)
    }

    /// Delete vertex `v` with its incident edges; remaining vertices are
    /// re-indexed downward.
    pub fn vertex_delete(&self, v: usize) -> Result<Multigraph> {
        if v >= self.vertices {
            return Err(Error::ElementOutOfRange { index: v, size: self.vertices });
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Multigraph::new(self.vertices - 1, edges)
    }

    /// Vertex 2-connectivity: connected, at least 3 vertices, no cut vertex.
    pub fn is_2connected(&self) -> bool {
        if self.vertices < 3 || !self.is_connected() {
            return false;
        }
        articulation_points(self).is_empty()
    }

    /// Length of a shortest cycle; `None` for forests. Loops give 1 and
    /// parallel edges give 2.
    pub fn girth(&self) -> Option<usize> {
        if self.loop_count() > 0 {
            return Some(1);
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Some(2);
            }
        }
        simple_girth(self.vertices, &seen)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        (0..self.vertices).all(|v| self.degree(v) == k)
    }

    /// Exact spanning-tree count via the Matrix-Tree theorem. Loops are
    /// ignored; parallel edges count with multiplicity.
    pub fn spanning_tree_count(&self) -> Result<BigInt> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.vertices <= 1 {
            return Ok(BigInt::one());
        }
        let n = self.vertices - 1;
        let mut lap = vec![vec![BigInt::zero(); n]; n];
        for &(u, v) in &self.edges {
            if u == v {
                continue;
            }
            if u < n {
                lap[u][u] += 1;
            }
            if v < n {
                lap[v][v] += 1;
            }
            if u < n && v < n {
                lap[u][v] -= 1;
                lap[v][u] -= 1;
            }
        }
        Ok(bareiss_determinant(lap))
    }

    /// Number of acyclic orientations, by enumeration of all direction
    /// vectors over non-loop edges. A loop admits no acyclic orientation,
    /// matching the factor y(2,0) = 0 in the Tutte semantics.
    pub fn count_acyclic_orientations(&self, max_edges: usize) -> Result<BigInt> {
        self.check_orientation_budget(max_edges)?;
        if self.loop_count() > 0 {
            return Ok(BigInt::zero());
        }
        let count = self.count_orientations_where(OrientationTest::Acyclic);
        Ok(BigInt::from(count))
    }

    /// Number of totally cyclic orientations (every edge on a directed
    /// cycle). Each loop is a directed cycle on its own and doubles the
    /// count, matching the factor y(0,2) = 2.
    pub fn count_totally_cyclic_orientations(&self, max_edges: usize) -> Result<BigInt> {
        self.check_orientation_budget(max_edges)?;
        let count = self.count_orientations_where(OrientationTest::TotallyCyclic);
        Ok(BigInt::from(count) << self.loop_count())
    }

    fn check_orientation_budget(&self, max_edges: usize) -> Result<()> {
        let k = self.edges.len() - self.loop_count();
        if k > max_edges {
            return Err(Error::ResourceLimit(format!(
                "orientation enumeration over {k} non-loop edges exceeds cap {max_edges}"
            )));
        }
        Ok(())
    }

    fn count_orientations_where(&self, test: OrientationTest) -> u64 {
        let non_loops: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| u != v)
            .collect();
        let k = non_loops.len();
        let total = 1u64 << k;
        // Partition the mask range; each worker reuses its own scratch.
        let chunk = 1u64 << k.saturating_sub(12).min(48);
        let ranges: Vec<(u64, u64)> = (0..total.div_ceil(chunk))
            .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
            .collect();
        ranges
            .into_par_iter()
            .map(|(lo, hi)| {
                let mut scratch = OrientationScratch::new(self.vertices, k);
                (lo..hi)
                    .filter(|&mask| scratch.test(&non_loops, mask, test))
                    .count() as u64
            })
            .sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OrientationTest {
    Acyclic,
    TotallyCyclic,
}

struct OrientationScratch {
    heads: Vec<usize>,
    tails: Vec<usize>,
    indegree: Vec<usize>,
    queue: Vec<usize>,
    comp: Vec<usize>,
    order: Vec<usize>,
    visited: Vec<bool>,
    stack: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    radj: Vec<Vec<usize>>,
}

impl OrientationScratch {
    fn new(vertices: usize, edges: usize) -> Self {
        OrientationScratch {
            heads: vec![0; edges],
            tails: vec![0; edges],
            indegree: vec![0; vertices],
            queue: Vec::with_capacity(vertices),
            comp: vec![usize::MAX; vertices],
            order: Vec::with_capacity(vertices),
            visited: vec![false; vertices],
            stack: Vec::with_capacity(vertices),
            adj: vec![Vec::new(); vertices],
            radj: vec![Vec::new(); vertices],
        }
    }

    fn orient(&mut self, edges: &[(usize, usize)], mask: u64) {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                self.tails[i] = u;
                self.heads[i] = v;
            } else {
                self.tails[i] = v;
                self.heads[i] = u;
            }
        }
    }

    fn test(&mut self, edges: &[(usize, usize)], mask: u64, test: OrientationTest) -> bool {
        self.orient(edges, mask);
        match test {
            OrientationTest::Acyclic => self.is_acyclic(edges.len()),
            OrientationTest::TotallyCyclic => self.is_totally_cyclic(edges.len()),
        }
    }

    /// Kahn's algorithm: acyclic iff every vertex gets removed.
    fn is_acyclic(&mut self, k: usize) -> bool {
        let n = self.indegree.len();
        self.indegree.fill(0);
        for i in 0..k {
            self.indegree[self.heads[i]] += 1;
        }
        self.queue.clear();
        for v in 0..n {
            if self.indegree[v] == 0 {
                self.queue.push(v);
            }
        }
        let mut removed = 0;
        while let Some(v) = self.queue.pop() {
            removed += 1;
            for i in 0..k {
                if self.tails[i] == v {
                    self.indegree[self.heads[i]] -= 1;
                    if self.indegree[self.heads[i]] == 0 {
                        self.queue.push(self.heads[i]);
                    }
                }
            }
        }
        removed == n
    }

    /// Every directed edge lies on a cycle iff its endpoints share a
    /// strongly connected component (Kosaraju).
    fn is_totally_cyclic(&mut self, k: usize) -> bool {
        let n = self.comp.len();
        for v in 0..n {
            self.adj[v].clear();
            self.radj[v].clear();
        }
        for i in 0..k {
            self.adj[self.tails[i]].push(self.heads[i]);
            self.radj[self.heads[i]].push(self.tails[i]);
        }
        self.visited.fill(false);
        self.order.clear();
        for s in 0..n {
            if self.visited[s] {
                continue;
            }
            self.stack.clear();
            self.stack.push((s, 0));
            self.visited[s] = true;
            while let Some(&mut (v, ref mut next)) = self.stack.last_mut() {
                if *next < self.adj[v].len() {
                    let w = self.adj[v][*next];
                    *next += 1;
                    if !self.visited[w] {
                        self.visited[w] = true;
                        self.stack.push((w, 0));
                    }
                } else {
                    self.order.push(v);
                    self.stack.pop();
                }
            }
        }
        self.comp.fill(usize::MAX);
        let mut c = 0;
        for idx in (0..self.order.len()).rev() {
            let s = self.order[idx];
            if self.comp[s] != usize::MAX {
                continue;
            }
            self.queue.clear();
            self.queue.push(s);
            self.comp[s] = c;
            while let Some(v) = self.queue.pop() {
                for i in 0..self.radj[v].len() {
                    let w = self.radj[v][i];
                    if self.comp[w] == usize::MAX {
                        self.comp[w] = c;
                        self.queue.push(w);
                    }
                }
            }
            c += 1;
        }
        (0..k).all(|i| self.comp[self.tails[i]] == self.comp[self.heads[i]])
    }
}

/// Union-find with path halving.
pub struct UnionFind {
    parent: Vec<usize>,
    pub components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            self.components -= 1;
            true
        }
    }
}

/// Fraction-free Gaussian elimination (Bareiss). Exact over BigInt.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn articulation_points(g: &Multigraph) -> Vec<usize> {
    let n = g.vertices;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        if u != v {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut cut = vec![false; n];
    let mut timer = 0;
    // Iterative DFS: (vertex, entering edge index, next adjacency slot).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (v, pe, ref mut slot)) = stack.last_mut() {
            if *slot < adj[v].len() {
                let (w, e) = adj[v][*slot];
                *slot += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    (0..n).filter(|&v| cut[v]).collect()
}

/// Girth of a simple graph given as a deduplicated edge set; `None` if acyclic.
fn simple_girth(n: usize, edges: &std::collections::HashSet<(usize, usize)>) -> Option<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let cycle = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// Exact chromatic-polynomial evaluation via the Tutte specialization
/// chi_G(k) = (-1)^{r(E)} k^{c(G)} T_G(1-k, 0).
pub fn chromatic_eval(g: &Multigraph, k: &BigRational) -> Result<BigRational> {
    let tutte = crate::tutte::tutte_of_graph(g)?;
    let c = g.components().max(if g.vertices == 0 { 0 } else { 1 });
    let rank = g.vertices - c;
    let x = BigRational::one() - k;
    let value = tutte.evaluate(&x, &BigRational::zero());
    let sign = if rank.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let mut kc = BigRational::one();
    for _ in 0..c {
        kc *= k;
    }
    Ok(sign * kc * value)
}

/// Stanley's identity: the number of acyclic orientations is |chi_G(-1)|.
pub fn acyclic_orientations_via_chromatic(g: &Multigraph) -> Result<BigInt> {
    let v = chromatic_eval(g, &-BigRational::one())?;
    debug_assert!(v.is_integer());
    Ok(v.abs().to_integer())
}

// --- family generators -----------------------------------------------------

/// Wheel W_n: hub vertex 0 joined to every rim vertex 1..=n; the rim is an
/// n-cycle. Edges 0..n-1 are the rim, n..2n-1 the spokes. W_1 has a loop at
/// its single rim vertex and W_2 a doubled rim edge.
pub fn wheel(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(Error::InvalidConstruction("wheel requires n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let j = if i == n { 1 } else { i + 1 };
        edges.push((i, j));
    }
    for i in 1..=n {
        edges.push((0, i));
    }
    Multigraph::new(n + 1, edges)
}

/// Rim edge indices of `wheel(n)`, the circuit-hyperplane relaxed in the whirl.
pub fn wheel_rim(n: usize) -> Subset {
    Subset::from_elements(0..n)
}

pub fn complete(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(Error::InvalidConstruction("complete requires n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges)
}

pub fn complete_bipartite(n: usize, m: usize) -> Result<Multigraph> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidConstruction("complete bipartite requires n, m >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..m {
            edges.push((u, n + v));
        }
    }
    Multigraph::new(n + m, edges)
}

/// The n x n grid graph L_n.
pub fn square_lattice(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(Error::InvalidConstruction("lattice requires n >= 1".into()));
    }
    let idx = |r: usize, c: usize| r * n + c;
    let mut edges = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if c + 1 < n {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < n {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Multigraph::new(n * n, edges)
}

/// Cycle C_n; C_1 is a loop and C_2 a parallel pair.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(Error::InvalidConstruction("cycle requires n >= 1".into()));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::new(n, edges)
}

/// Path with n edges (a tree on n+1 vertices).
pub fn path_tree(n: usize) -> Result<Multigraph> {
    let edges = (0..n).map(|i| (i, i + 1)).collect();
    Multigraph::new(n + 1, edges)
}

/// The Petersen graph: outer 5-cycle 0..4, inner 5-cycle 5..9 joined as a
/// pentagram, spokes i -- i+5.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    Multigraph { vertices: 10, edges }
}

// --- canonical forms --------------------------------------------------------

pub type CanonKey = (usize, Vec<(u16, u16)>);

/// Relabel vertices by iterated degree refinement and return the sorted edge
/// list. Deterministic and cheap; equal keys imply isomorphic graphs, but
/// isomorphic graphs may receive different keys (refinement ties are broken
/// by original labels). Used as the deletion-contraction memo key.
pub fn refinement_key(g: &Multigraph) -> CanonKey {
    let colors = refine_colors(g, vec![0; g.vertices]);
    let mut order: Vec<usize> = (0..g.vertices).collect();
    order.sort_by_key(|&v| (colors[v], v));
    relabel_edges(g, &order)
}

/// Complete canonical form by individualization-refinement: the
/// lexicographically smallest relabeled edge list over the search tree.
/// Isomorphic graphs receive identical keys. Exponential in the worst case
/// but fine for the corpus scale (<= 10 vertices).
pub fn canonical_key(g: &Multigraph) -> CanonKey {
    let mut best: Option<CanonKey> = None;
    canon_search(g, vec![0; g.vertices], &mut best);
    best.expect("canonical search explores at least one leaf")
}

fn canon_search(g: &Multigraph, colors: Vec<u32>, best: &mut Option<CanonKey>) {
    let colors = refine_colors(g, colors);
    // First color class with more than one member, by color id.
    let mut class: Option<(u32, Vec<usize>)> = None;
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let members: Vec<usize> = (0..g.vertices).filter(|&v| colors[v] == c).collect();
        if members.len() > 1 {
            class = Some((c, members));
            break;
        }
    }
    match class {
        None => {
            let mut order: Vec<usize> = (0..g.vertices).collect();
            order.sort_by_key(|&v| colors[v]);
            let key = relabel_edges(g, &order);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
        }
        Some((_, members)) => {
            for &v in &members {
                // Individualize v below its classmates; refinement re-densifies.
                let split: Vec<u32> = colors
                    .iter()
                    .enumerate()
                    .map(|(u, &c)| 2 * c + (u != v) as u32)
                    .collect();
                canon_search(g, split, best);
            }
        }
    }
}

fn refine_colors(g: &Multigraph, mut colors: Vec<u32>) -> Vec<u32> {
    if g.vertices == 0 {
        return colors;
    }
    loop {
        let mut sigs: Vec<(u32, usize, Vec<u32>)> = (0..g.vertices)
            .map(|v| {
                let mut neighbor_colors = Vec::new();
                let mut loops = 0;
                for &(a, b) in &g.edges {
                    if a == v && b == v {
                        loops += 1;
                    } else if a == v {
                        neighbor_colors.push(colors[b]);
                    } else if b == v {
                        neighbor_colors.push(colors[a]);
                    }
                }
                neighbor_colors.sort_unstable();
                (colors[v], loops, neighbor_colors)
            })
            .collect();
        let mut distinct: Vec<&(u32, usize, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let new_colors: Vec<u32> = (0..g.vertices)
            .map(|v| distinct.binary_search(&&sigs[v]).unwrap() as u32)
            .collect();
        let stable = new_colors == colors;
        colors = new_colors;
        if stable {
            return colors;
        }
        sigs.clear();
    }
}

fn relabel_edges(g: &Multigraph, order: &[usize]) -> CanonKey {
    let mut label = vec![0u16; g.vertices];
    for (new, &old) in order.iter().enumerate() {
        label[old] = new as u16;
    }
    let mut edges: Vec<(u16, u16)> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label[u], label[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    (g.vertices, edges)
}
