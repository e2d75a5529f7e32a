//! The three Tutte-polynomial engines: subset expansion, deletion and
//! contraction, and basis activities. They share nothing beyond the rank
//! oracle, which is the point: agreement between them is the workbench's
//! strongest internal check.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{refinement_key, CanonKey, Multigraph};
use crate::limits::Limits;
use crate::matroid::Matroid;
use crate::poly::TuttePolynomial;
use crate::report::{CheckReport, InstanceRef, Verdict};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Subsets,
    DeletionContraction,
    Activities,
}

pub fn compute(m: &Matroid, engine: Engine, limits: &Limits) -> Result<TuttePolynomial> {
    match engine {
        Engine::Subsets => tutte_by_subsets(m, limits),
        Engine::DeletionContraction => tutte_by_deletion_contraction(m, limits),
        Engine::Activities => tutte_by_activities(m, None, limits),
    }
}

// --- subset expansion --------------------------------------------------------

/// Definition by corank-nullity expansion: accumulate the counts
/// c[z][n] = #{A : z(A)=z, n(A)=n} over all 2^m subsets, then apply the
/// exact binomial change of basis from the (x-1),(y-1) powers to t_ij.
pub fn tutte_by_subsets(m: &Matroid, limits: &Limits) -> Result<TuttePolynomial> {
    let size = m.size();
    if size > limits.max_subset_bits {
        return Err(Error::ResourceLimit(format!(
            "subset expansion over {size} elements exceeds cap {} (TUTTE_MAX_BITS)",
            limits.max_subset_bits
        )));
    }
    let r = m.full_rank();
    let counts = match m.as_graph() {
        Some(g) => corank_nullity_counts_graphic(g, r),
        None => corank_nullity_counts_generic(m, r),
    };
    Ok(counts_to_coefficients(&counts, r, size - r))
}

fn corank_nullity_counts_generic(m: &Matroid, r: usize) -> Vec<Vec<u64>> {
    let size = m.size();
    let corank_cols = size - r + 1;
    let total: u64 = 1u64 << size;
    // Wide masks get split across workers; each tallies locally.
    let chunk = 1u64 << size.saturating_sub(13).min(48);
    let ranges: Vec<(u64, u64)> = (0..total.div_ceil(chunk))
        .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
        .collect();
    ranges
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut counts = vec![vec![0u64; corank_cols]; r + 1];
            for mask in lo..hi {
                let s = Subset(mask);
                let rank = m.rank(s);
                counts[r - rank][s.cardinality() - rank] += 1;
            }
            counts
        })
        .reduce(
            || vec![vec![0u64; corank_cols]; r + 1],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(&b) {
                    for (ca, cb) in ra.iter_mut().zip(rb) {
                        *ca += cb;
                    }
                }
                a
            },
        )
}

/// Graphic fast path: depth-first include/exclude over edges with an
/// undoable union-find, so each subset costs O(1) amortized instead of a
/// fresh component count.
fn corank_nullity_counts_graphic(g: &Multigraph, r: usize) -> Vec<Vec<u64>> {
    let size = g.edge_count();
    let corank_cols = size - r + 1;
    // Split the recursion at the first few edges for the worker pool.
    let split = size.min(6);
    (0u64..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut counts = vec![vec![0u64; corank_cols]; r + 1];
            let mut uf = RewindableUnionFind::new(g.vertices);
            let mut included = 0usize;
            for e in 0..split {
                if prefix >> e & 1 == 1 {
                    let (u, v) = g.edges[e];
                    uf.union(u, v);
                    included += 1;
                }
            }
            tally_recursive(g, split, included, &mut uf, r, &mut counts);
            counts
        })
        .reduce(
            || vec![vec![0u64; corank_cols]; r + 1],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(&b) {
                    for (ca, cb) in ra.iter_mut().zip(rb) {
                        *ca += cb;
                    }
                }
                a
            },
        )
}

fn tally_recursive(
    g: &Multigraph,
    e: usize,
    included: usize,
    uf: &mut RewindableUnionFind,
    full_rank: usize,
    counts: &mut [Vec<u64>],
) {
    if e == g.edge_count() {
        let rank = g.vertices - uf.components;
        counts[full_rank - rank][included - rank] += 1;
        return;
    }
    tally_recursive(g, e + 1, included, uf, full_rank, counts);
    let (u, v) = g.edges[e];
    let token = uf.union(u, v);
    tally_recursive(g, e + 1, included + 1, uf, full_rank, counts);
    uf.undo(token);
}

/// Union-find without path compression so unions can be rolled back.
struct RewindableUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

#[derive(Clone, Copy)]
enum UndoToken {
    Noop,
    Attached { child: usize, parent: usize },
}

impl RewindableUnionFind {
    fn new(n: usize) -> Self {
        RewindableUnionFind { parent: (0..n).collect(), size: vec![1; n], components: n }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> UndoToken {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return UndoToken::Noop;
        }
        let (child, parent) = if self.size[ra] <= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[child] = parent;
        self.size[parent] += self.size[child];
        self.components -= 1;
        UndoToken::Attached { child, parent }
    }

    fn undo(&mut self, token: UndoToken) {
        if let UndoToken::Attached { child, parent } = token {
            self.parent[child] = child;
            self.size[parent] -= self.size[child];
            self.components += 1;
        }
    }
}

/// t_ij = sum_{z >= i, n >= j} c[z][n] binom(z,i)(-1)^{z-i} binom(n,j)(-1)^{n-j}.
fn counts_to_coefficients(counts: &[Vec<u64>], r: usize, corank: usize) -> TuttePolynomial {
    let binom = binomial_table(r.max(corank) + 1);
    let mut out = TuttePolynomial::zero(r + 1, corank + 1);
    for (z, row) in counts.iter().enumerate() {
        for (n, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = BigInt::from(c);
            for i in 0..=z {
                for j in 0..=n {
                    let mut term = &c * &binom[z][i] * &binom[n][j];
                    if (z - i + n - j) % 2 == 1 {
                        term = -term;
                    }
                    *out.at_mut(i, j) += term;
                }
            }
        }
    }
    debug_assert!(!out.has_negative_coefficient());
    out
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        let (prev, cur) = t.split_at_mut(i);
        cur[0][0] = BigInt::one();
        for j in 1..=i {
            cur[0][j] = if j == i {
                BigInt::one()
            } else {
                &prev[i - 1][j - 1] + &prev[i - 1][j]
            };
        }
    }
    t
}

/// The corank-nullity profile counts[z][n] = #{A : z(A) = z, n(A) = n}.
/// This is the whole subset expansion; every evaluation of T at a point is a
/// weighted sum over it.
pub fn corank_nullity_counts(m: &Matroid, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    let size = m.size();
    if size > limits.max_subset_bits {
        return Err(Error::ResourceLimit(format!(
            "subset expansion over {size} elements exceeds cap {} (TUTTE_MAX_BITS)",
            limits.max_subset_bits
        )));
    }
    let r = m.full_rank();
    Ok(match m.as_graph() {
        Some(g) => corank_nullity_counts_graphic(g, r),
        None => corank_nullity_counts_generic(m, r),
    })
}

/// T(x, y) = sum over the profile of c[z][n] (x-1)^z (y-1)^n, exactly.
pub fn evaluate_from_counts(
    counts: &[Vec<u64>],
    x: &num_rational::BigRational,
    y: &num_rational::BigRational,
) -> num_rational::BigRational {
    use num_rational::BigRational;
    let xm = x - BigRational::one();
    let ym = y - BigRational::one();
    let mut total = BigRational::zero();
    let mut xpow = BigRational::one();
    for row in counts {
        let mut ypow = BigRational::one();
        let mut row_sum = BigRational::zero();
        for &c in row {
            if c != 0 {
                row_sum += &ypow * BigRational::from(BigInt::from(c));
            }
            ypow *= &ym;
        }
        total += &xpow * row_sum;
        xpow *= &xm;
    }
    total
}

// --- deletion-contraction ------------------------------------------------------

/// Shared memo for graphic subproblems, keyed on the degree-refinement
/// canonical form. Key equality is structural, so a collision between
/// non-isomorphic graphs is impossible; isomorphic graphs that refine
/// differently merely miss. Last write wins and all writes for one key carry
/// the same polynomial.
pub struct GraphicMemo {
    map: Mutex<HashMap<CanonKey, TuttePolynomial>>,
}

impl GraphicMemo {
    pub fn new() -> Self {
        GraphicMemo { map: Mutex::new(HashMap::new()) }
    }

    fn get(&self, key: &CanonKey) -> Option<TuttePolynomial> {
        self.map.lock().unwrap().get(key).cloned()
    }

    fn put(&self, key: CanonKey, value: TuttePolynomial) {
        self.map.lock().unwrap().insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for GraphicMemo {
    fn default() -> Self {
        Self::new()
    }
}

/// Definition by the linear recursion T_M = T_{M\e} + T_{M/e} on the lowest
/// indexed element that is neither a loop nor a coloop, with base case
/// x^i y^j. Graphic matroids recurse on multigraphs with memoization.
pub fn tutte_by_deletion_contraction(m: &Matroid, limits: &Limits) -> Result<TuttePolynomial> {
    tutte_by_deletion_contraction_memo(m, limits, &GraphicMemo::new())
}

pub fn tutte_by_deletion_contraction_memo(
    m: &Matroid,
    limits: &Limits,
    memo: &GraphicMemo,
) -> Result<TuttePolynomial> {
    let mut budget = limits.delcon_node_budget;
    match m.as_graph() {
        Some(g) => delcon_graph(g, memo, &mut budget),
        None => delcon_general(m, &mut budget),
    }
}

/// Tutte polynomial of a multigraph (deletion-contraction with memo).
pub fn tutte_of_graph(g: &Multigraph) -> Result<TuttePolynomial> {
    if g.edge_count() > 64 {
        return Err(Error::ResourceLimit("graphs limited to 64 edges".into()));
    }
    let mut budget = Limits::default().delcon_node_budget;
    delcon_graph(g, &GraphicMemo::new(), &mut budget)
}

fn spend(budget: &mut u64) -> Result<()> {
    if *budget == 0 {
        return Err(Error::ResourceLimit(
            "deletion-contraction recursion budget exhausted".into(),
        ));
    }
    *budget -= 1;
    Ok(())
}

fn delcon_general(m: &Matroid, budget: &mut u64) -> Result<TuttePolynomial> {
    spend(budget)?;
    let size = m.size();
    let full = m.ground_set();
    let r = m.full_rank();
    let mut loops = 0usize;
    let mut coloops = 0usize;
    let mut pivot = None;
    for e in 0..size {
        let is_loop = m.rank(Subset::singleton(e)) == 0;
        let is_coloop = r > 0 && m.rank(full.remove(e)) == r - 1;
        if is_loop {
            loops += 1;
        } else if is_coloop {
            coloops += 1;
        } else if pivot.is_none() {
            pivot = Some(e);
        }
    }
    match pivot {
        None => Ok(TuttePolynomial::monomial(coloops, loops)),
        Some(e) => {
            let del = delcon_general(&m.delete(Subset::singleton(e))?, budget)?;
            let con = delcon_general(&m.contract(Subset::singleton(e))?, budget)?;
            Ok(del.add(&con))
        }
    }
}

fn delcon_graph(g: &Multigraph, memo: &GraphicMemo, budget: &mut u64) -> Result<TuttePolynomial> {
    spend(budget)?;
    let full_rank = g.graphic_rank(Subset::full(g.edge_count().min(64)));
    let mut loops = 0usize;
    let mut coloops = 0usize;
    let mut pivot = None;
    let full = Subset::full(g.edge_count().min(64));
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        if u == v {
            loops += 1;
        } else if g.graphic_rank(full.remove(e)) == full_rank - 1 {
            coloops += 1;
        } else if pivot.is_none() {
            pivot = Some(e);
        }
    }
    let Some(e) = pivot else {
        return Ok(TuttePolynomial::monomial(coloops, loops));
    };
    let key = refinement_key(g);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit);
    }
    let deleted = edge_delete(g, e);
    let contracted = edge_contract(g, e);
    let result = delcon_graph(&deleted, memo, budget)?.add(&delcon_graph(&contracted, memo, budget)?);
    memo.put(key, result.clone());
    Ok(result)
}

fn edge_delete(g: &Multigraph, e: usize) -> Multigraph {
    let mut edges = g.edges.clone();
    edges.remove(e);
    Multigraph { vertices: g.vertices, edges }
}

fn edge_contract(g: &Multigraph, e: usize) -> Multigraph {
    let (u, v) = g.edges[e];
    let (keep, gone) = (u.min(v), u.max(v));
    let map = |w: usize| {
        if w == gone {
            keep
        } else if w > gone {
            w - 1
        } else {
            w
        }
    };
    let edges = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, &(a, b))| (map(a), map(b)))
        .collect();
    Multigraph { vertices: g.vertices - 1, edges }
}

// --- basis activities ------------------------------------------------------------

/// Per-basis activity counts under a fixed element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityTally {
    pub basis: Subset,
    pub internal: usize,
    pub external: usize,
}

/// The activity census of all bases, together with the element order it was
/// computed under.
#[derive(Clone, Debug)]
pub struct ActivityProfile {
    /// Element indices listed smallest-first.
    pub order: Vec<usize>,
    pub tallies: Vec<ActivityTally>,
}

/// Internal/external activity of every basis with respect to `order`
/// (element indices listed smallest-first; `None` means the natural order).
pub fn basis_activities(
    m: &Matroid,
    order: Option<&[usize]>,
    limits: &Limits,
) -> Result<ActivityProfile> {
    let size = m.size();
    let natural: Vec<usize> = (0..size).collect();
    let order = order.unwrap_or(&natural);
    if order.len() != size {
        return Err(Error::InvalidConstruction(format!(
            "element order has {} entries, ground set has {size}",
            order.len()
        )));
    }
    let mut priority = vec![usize::MAX; size];
    for (rank, &e) in order.iter().enumerate() {
        if e >= size || priority[e] != usize::MAX {
            return Err(Error::InvalidConstruction(
                "element order is not a permutation of the ground set".into(),
            ));
        }
        priority[e] = rank;
    }
    let r = m.full_rank();
    let bases = m.enumerate_bases(limits)?;
    let mut out = Vec::with_capacity(bases.len());
    for &basis in &bases {
        let complement = basis.complement(size);
        let mut internal = 0usize;
        for e in basis.iter() {
            // e is internally active iff it is the order-smallest element of
            // the unique cocircuit disjoint from basis \ {e}: no smaller f
            // outside the basis re-spans.
            let stripped = basis.remove(e);
            let active = complement
                .iter()
                .filter(|&f| priority[f] < priority[e])
                .all(|f| m.rank(stripped.insert(f)) < r);
            if active {
                internal += 1;
            }
        }
        let mut external = 0usize;
        for f in complement.iter() {
            // f is externally active iff it is the order-smallest element of
            // the unique circuit inside basis + {f}: an element e belongs to
            // that circuit exactly when basis + f - e still spans.
            let extended = basis.insert(f);
            let active = basis
                .iter()
                .filter(|&e| priority[e] < priority[f])
                .all(|e| m.rank(extended.remove(e)) < r);
            if active {
                external += 1;
            }
        }
        out.push(ActivityTally { basis, internal, external });
    }
    Ok(ActivityProfile { order: order.to_vec(), tallies: out })
}

/// Definition by basis activities: t_ij counts bases with i internally and
/// j externally active elements. Independent of the order used.
pub fn tutte_by_activities(
    m: &Matroid,
    order: Option<&[usize]>,
    limits: &Limits,
) -> Result<TuttePolynomial> {
    let r = m.full_rank();
    let corank = m.size() - r;
    let mut out = TuttePolynomial::zero(r + 1, corank + 1);
    for tally in basis_activities(m, order, limits)?.tallies {
        *out.at_mut(tally.internal, tally.external) += 1;
    }
    Ok(out)
}

// --- coefficient relations ---------------------------------------------------------

/// Externally supplied packing facts for the max-degree clauses.
#[derive(Clone, Copy, Debug, Default)]
pub struct PackingHint {
    pub two_disjoint_bases: bool,
    pub union_of_two_bases: bool,
}

/// Check the linear coefficient identities: vanishing outside the (r, m-r)
/// box, the corner values t_{r0} = t_{0,m-r} = 1 with their zero rows and
/// columns (for loopless coloopless matroids), t_10 = t_01 for m >= 2, and,
/// given a packing hint, vanishing above the anti-diagonal.
pub fn check_coefficient_relations(
    p: &TuttePolynomial,
    m: &Matroid,
    hint: Option<PackingHint>,
    instance: InstanceRef,
) -> CheckReport {
    let r = m.full_rank();
    let corank = m.size() - r;
    let mut bad: Vec<(usize, usize, String)> = Vec::new();
    let mut clauses: Vec<(&str, Verdict)> = Vec::new();

    // Clause 1: t_ij = 0 whenever i > r or j > m-r.
    let mut c1 = Verdict::Pass;
    for i in 0..p.rows() {
        for j in 0..p.cols() {
            if (i > r || j > corank) && !p.coefficient(i, j).is_zero() {
                c1 = Verdict::Fail;
                bad.push((i, j, "outside_box".into()));
            }
        }
    }
    clauses.push(("bounds", c1));

    let loopless = m.loops().is_empty();
    let coloopless = m.coloops().is_empty();
    if loopless && coloopless {
        let mut c2 = Verdict::Pass;
        if p.coefficient(r, 0) != BigInt::one() {
            c2 = Verdict::Fail;
            bad.push((r, 0, "corner_r0".into()));
        }
        if p.coefficient(0, corank) != BigInt::one() {
            c2 = Verdict::Fail;
            bad.push((0, corank, "corner_0corank".into()));
        }
        clauses.push(("corners", c2));
        let mut c3 = Verdict::Pass;
        for j in 1..=corank {
            if !p.coefficient(r, j).is_zero() {
                c3 = Verdict::Fail;
                bad.push((r, j, "top_row".into()));
            }
        }
        for i in 1..=r {
            if !p.coefficient(i, corank).is_zero() {
                c3 = Verdict::Fail;
                bad.push((i, corank, "last_col".into()));
            }
        }
        clauses.push(("extremal_zeros", c3));
    } else {
        clauses.push(("corners", Verdict::Skip));
        clauses.push(("extremal_zeros", Verdict::Skip));
    }

    if m.size() >= 2 {
        let v = if p.coefficient(1, 0) == p.coefficient(0, 1) {
            Verdict::Pass
        } else {
            bad.push((1, 0, "t10_ne_t01".into()));
            Verdict::Fail
        };
        clauses.push(("t10_eq_t01", v));
    } else {
        clauses.push(("t10_eq_t01", Verdict::Skip));
    }

    match hint {
        Some(h) => {
            let mut check_antidiag = |limit: usize, label: &'static str| -> Verdict {
                let mut v = Verdict::Pass;
                for i in 0..p.rows() {
                    for j in 0..p.cols() {
                        if i + j > limit && !p.coefficient(i, j).is_zero() {
                            v = Verdict::Fail;
                            bad.push((i, j, label.into()));
                        }
                    }
                }
                v
            };
            if h.two_disjoint_bases {
                let v = check_antidiag(corank, "max_degree_disjoint");
                clauses.push(("max_degree_disjoint", v));
            } else {
                clauses.push(("max_degree_disjoint", Verdict::Skip));
            }
            if h.union_of_two_bases {
                let v = check_antidiag(r, "max_degree_union");
                clauses.push(("max_degree_union", v));
            } else {
                clauses.push(("max_degree_union", Verdict::Skip));
            }
        }
        None => {
            clauses.push(("max_degree_disjoint", Verdict::Skip));
            clauses.push(("max_degree_union", Verdict::Skip));
        }
    }

    let overall = if clauses.iter().any(|&(_, v)| v == Verdict::Fail) {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    let mut report = CheckReport::new("coefficient-relations", instance, overall);
    for (name, v) in clauses {
        report.set_value(
            name,
            match v {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Skip => "precondition unmet",
            },
        );
    }
    report.set_value("rank", r.to_string());
    report.set_value("corank", corank.to_string());
    if !bad.is_empty() {
        report.witness = Some(serde_json::json!(bad
            .iter()
            .map(|(i, j, label)| serde_json::json!({"i": i, "j": j, "clause": label}))
            .collect::<Vec<_>>()));
    }
    report
}
