//! The matroid abstraction: a rank oracle over an integer-indexed ground set,
//! plus every construction and recognizer the workbench needs.
//!
//! Matroids are immutable after construction and cheap to clone (shared
//! internals). Rank queries are memoized per instance in a mask-indexed
//! cache; concurrent queries may duplicate work but always store identical
//! values, so the cache needs no locking.

use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::limits::Limits;
use crate::subset::Subset;

/// Construction provenance, serializable as the JSON instance descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Descriptor {
    Uniform { r: usize, n: usize },
    Graphic { graph: Multigraph },
    Bases { m: usize, bases: Vec<Vec<usize>> },
    Dual { child: Box<Descriptor> },
    Delete { child: Box<Descriptor>, elements: Vec<usize> },
    Contract { child: Box<Descriptor>, elements: Vec<usize> },
    DirectSum { parts: Vec<Descriptor> },
    Stretch2 { child: Box<Descriptor> },
    Thicken2 { child: Box<Descriptor> },
    Relax { child: Box<Descriptor>, hyperplane: Vec<usize> },
    Catalan { n: usize, trimmed: bool },
    Whirl { n: usize },
}

enum Oracle {
    Uniform { rank: usize },
    Graphic { graph: Multigraph },
    Bases { bases: Vec<u64> },
    Dual { child: Matroid },
    /// One flattened minor layer: `kept[i]` is the child element behind
    /// element i, `contracted` is a child-side set added to every query.
    Minor { child: Matroid, kept: Vec<usize>, contracted: Subset, contracted_rank: usize },
    DirectSum { parts: Vec<Matroid>, offsets: Vec<usize> },
    Thicken2 { child: Matroid },
    /// Lattice-path matroid of Dyck paths of length 2n; independence by
    /// greedy leftmost slot assignment.
    Catalan { n: usize },
    Relax { child: Matroid, hyperplane: Subset },
}

struct Inner {
    size: usize,
    oracle: Oracle,
    descriptor: Descriptor,
    cache: RankCache,
    full_rank: OnceLock<usize>,
    unverified_bases: bool,
}

/// A matroid on ground set {0, ..., m-1} with a memoized rank oracle.
#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("size", &self.size())
            .field("rank", &self.full_rank())
            .field("descriptor", &self.0.descriptor)
            .finish()
    }
}

/// Dense mask-indexed memo for ranks; ranks fit a byte, 0xFF means unset.
/// Disabled above `CACHE_BITS` elements to bound memory.
struct RankCache {
    slots: OnceLock<Vec<AtomicU8>>,
    enabled: bool,
}

const CACHE_BITS: usize = 22;
const UNSET: u8 = u8::MAX;

impl RankCache {
    fn new(size: usize, enabled: bool) -> RankCache {
        RankCache { slots: OnceLock::new(), enabled: enabled && size <= CACHE_BITS }
    }

    fn get(&self, size: usize, mask: u64) -> Option<usize> {
        if !self.enabled {
            return None;
        }
        let slots = self.slots.get_or_init(|| {
            (0..1u64 << size).map(|_| AtomicU8::new(UNSET)).collect()
        });
        match slots[mask as usize].load(Ordering::Relaxed) {
            UNSET => None,
            r => Some(r as usize),
        }
    }

    fn put(&self, mask: u64, rank: usize) {
        if let Some(slots) = self.slots.get() {
            slots[mask as usize].store(rank as u8, Ordering::Relaxed);
        }
    }
}

impl Matroid {
    fn build(size: usize, oracle: Oracle, descriptor: Descriptor) -> Matroid {
        Matroid::build_flagged(size, oracle, descriptor, false)
    }

    fn build_flagged(
        size: usize,
        oracle: Oracle,
        descriptor: Descriptor,
        unverified_bases: bool,
    ) -> Matroid {
        // The uniform rank formula is cheaper than a cache probe.
        let cache_worthwhile = !matches!(oracle, Oracle::Uniform { .. });
        Matroid(Arc::new(Inner {
            size,
            oracle,
            descriptor,
            cache: RankCache::new(size, cache_worthwhile),
            full_rank: OnceLock::new(),
            unverified_bases,
        }))
    }

    // --- constructions ------------------------------------------------------

    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n || n > 64 {
            return Err(Error::InvalidConstruction(format!(
                "uniform matroid U_{{{r},{n}}} requires r <= n <= 64"
            )));
        }
        Ok(Matroid::build(n, Oracle::Uniform { rank: r }, Descriptor::Uniform { r, n }))
    }

    pub fn graphic(graph: &Multigraph) -> Result<Matroid> {
        if graph.edge_count() > 64 {
            return Err(Error::InvalidConstruction(
                "graphic matroid limited to 64 edges".into(),
            ));
        }
        Ok(Matroid::build(
            graph.edge_count(),
            Oracle::Graphic { graph: graph.clone() },
            Descriptor::Graphic { graph: graph.clone() },
        ))
    }

    /// Matroid given by an explicit non-empty list of bases. Equicardinality
    /// always holds on return; the exchange axiom is verified for ground sets
    /// up to `limits.bases_verify_max_elements`, beyond which the instance is
    /// accepted carrying an `unverified` flag.
    pub fn from_bases(m: usize, bases: &[Subset], limits: &Limits) -> Result<Matroid> {
        if m > 64 {
            return Err(Error::InvalidConstruction("ground set limited to 64 elements".into()));
        }
        if bases.is_empty() {
            return Err(Error::InvalidConstruction("basis list must be non-empty".into()));
        }
        let full = Subset::full(m);
        let rank = bases[0].cardinality();
        let mut masks: Vec<u64> = Vec::with_capacity(bases.len());
        for b in bases {
            if !b.is_subset_of(full) {
                return Err(Error::ElementOutOfRange {
                    index: b.elements().into_iter().max().unwrap_or(0),
                    size: m,
                });
            }
            if b.cardinality() != rank {
                return Err(Error::InvalidConstruction(
                    "listed bases are not equicardinal".into(),
                ));
            }
            masks.push(b.0);
        }
        masks.sort_unstable();
        masks.dedup();
        let unverified = m > limits.bases_verify_max_elements;
        if !unverified {
            verify_exchange_axiom(&masks)?;
        }
        let descriptor = Descriptor::Bases {
            m,
            bases: masks.iter().map(|&b| Subset(b).elements()).collect(),
        };
        Ok(Matroid::build_flagged(m, Oracle::Bases { bases: masks }, descriptor, unverified))
    }

    /// Dual matroid: r*(A) = |A| - r(E) + r(E \ A).
    pub fn dual(&self) -> Matroid {
        Matroid::build(
            self.size(),
            Oracle::Dual { child: self.clone() },
            Descriptor::Dual { child: Box::new(self.descriptor().clone()) },
        )
    }

    /// Deletion M \ S, re-indexed to 0..m-|S|-1.
    pub fn delete(&self, s: Subset) -> Result<Matroid> {
        self.check_subset(s)?;
        let descriptor = Descriptor::Delete {
            child: Box::new(self.descriptor().clone()),
            elements: s.elements(),
        };
        Ok(self.minor(s, Subset::EMPTY, descriptor))
    }

    /// Contraction M / S, re-indexed to 0..m-|S|-1.
    pub fn contract(&self, s: Subset) -> Result<Matroid> {
        self.check_subset(s)?;
        let descriptor = Descriptor::Contract {
            child: Box::new(self.descriptor().clone()),
            elements: s.elements(),
        };
        Ok(self.minor(s, s, descriptor))
    }

    /// Shared minor builder: drop `removed`, contract `contracted` (both in
    /// this matroid's indices). Consecutive minors flatten into one layer.
    fn minor(&self, removed: Subset, contracted: Subset, descriptor: Descriptor) -> Matroid {
        let kept_here: Vec<usize> = Subset::full(self.size()).difference(removed).elements();
        let (child, kept, contracted_total) = match &self.0.oracle {
            Oracle::Minor { child, kept: parent_kept, contracted: parent_con, .. } => {
                let lift =
                    |s: Subset| Subset::from_elements(s.iter().map(|e| parent_kept[e]));
                let kept: Vec<usize> = kept_here.iter().map(|&e| parent_kept[e]).collect();
                (child.clone(), kept, parent_con.union(lift(contracted)))
            }
            _ => (self.clone(), kept_here, contracted),
        };
        let contracted_rank = child.rank(contracted_total);
        let size = kept.len();
        Matroid::build(
            size,
            Oracle::Minor { child, kept, contracted: contracted_total, contracted_rank },
            descriptor,
        )
    }

    pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
        let total: usize = parts.iter().map(|p| p.size()).sum();
        if total > 64 {
            return Err(Error::InvalidConstruction("direct sum exceeds 64 elements".into()));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut at = 0;
        for p in parts {
            offsets.push(at);
            at += p.size();
        }
        Ok(Matroid::build(
            total,
            Oracle::DirectSum { parts: parts.to_vec(), offsets },
            Descriptor::DirectSum {
                parts: parts.iter().map(|p| p.descriptor().clone()).collect(),
            },
        ))
    }

    /// 2-thickening: element i becomes the parallel pair {2i, 2i+1}.
    pub fn thicken2(&self) -> Result<Matroid> {
        if self.size() * 2 > 64 {
            return Err(Error::InvalidConstruction("2-thickening exceeds 64 elements".into()));
        }
        Ok(Matroid::build(
            self.size() * 2,
            Oracle::Thicken2 { child: self.clone() },
            Descriptor::Thicken2 { child: Box::new(self.descriptor().clone()) },
        ))
    }

    /// 2-stretching: element i becomes the series pair {2i, 2i+1}. Realized
    /// through the dual identity: the stretch is the dual of the thickening
    /// of the dual.
    pub fn stretch2(&self) -> Result<Matroid> {
        if self.size() * 2 > 64 {
            return Err(Error::InvalidConstruction("2-stretching exceeds 64 elements".into()));
        }
        let inner = self.dual().thicken2()?.dual();
        Ok(Matroid::build(
            self.size() * 2,
            inner.0.oracle_clone_shallow(),
            Descriptor::Stretch2 { child: Box::new(self.descriptor().clone()) },
        ))
    }

    /// Relaxation of a circuit-hyperplane H: the bases become the bases of
    /// the child plus H itself. H is verified eagerly; a set that is not a
    /// circuit-hyperplane fails construction.
    pub fn relax(&self, hyperplane: Subset) -> Result<Matroid> {
        self.check_subset(hyperplane)?;
        let r = self.full_rank();
        if hyperplane.cardinality() != r {
            return Err(Error::InvalidConstruction(format!(
                "relaxation set has {} elements, expected rank {r}",
                hyperplane.cardinality()
            )));
        }
        if self.rank(hyperplane) != r.saturating_sub(1) || r == 0 {
            return Err(Error::InvalidConstruction(
                "relaxation set is not a hyperplane (rank must be r(E)-1)".into(),
            ));
        }
        for e in hyperplane.iter() {
            let proper = hyperplane.remove(e);
            if self.rank(proper) != proper.cardinality() {
                return Err(Error::InvalidConstruction(
                    "relaxation set is not a circuit (a proper subset is dependent)".into(),
                ));
            }
        }
        Ok(Matroid::build(
            self.size(),
            Oracle::Relax { child: self.clone(), hyperplane },
            Descriptor::Relax {
                child: Box::new(self.descriptor().clone()),
                hyperplane: hyperplane.elements(),
            },
        ))
    }

    /// Catalan matroid M_n over 2n elements (bases are up-step sets of Dyck
    /// paths), or its trimmed version N_n with the forced isthmus (element 1)
    /// and loop (element 2n) deleted.
    pub fn catalan(n: usize, trimmed: bool) -> Result<Matroid> {
        if n < 1 {
            return Err(Error::InvalidConstruction("catalan matroid requires n >= 1".into()));
        }
        if trimmed && n < 2 {
            return Err(Error::InvalidConstruction("trimmed catalan requires n >= 2".into()));
        }
        if 2 * n > 64 {
            return Err(Error::InvalidConstruction("catalan matroid exceeds 64 elements".into()));
        }
        let full = Matroid::build(
            2 * n,
            Oracle::Catalan { n },
            Descriptor::Catalan { n, trimmed: false },
        );
        if !trimmed {
            return Ok(full);
        }
        let removed = Subset::from_elements([0, 2 * n - 1]);
        Ok(full.minor(removed, Subset::EMPTY, Descriptor::Catalan { n, trimmed: true }))
    }

    /// The whirl W^n: relax the rim of the wheel's cycle matroid.
    pub fn whirl(n: usize) -> Result<Matroid> {
        if n < 2 {
            return Err(Error::InvalidConstruction("whirl requires n >= 2".into()));
        }
        let wheel = crate::graph::wheel(n)?;
        let graphic = Matroid::graphic(&wheel)?;
        let relaxed = graphic.relax(crate::graph::wheel_rim(n))?;
        Ok(Matroid::build(
            relaxed.size(),
            relaxed.0.oracle_clone_shallow(),
            Descriptor::Whirl { n },
        ))
    }

    pub fn from_descriptor(d: &Descriptor, limits: &Limits) -> Result<Matroid> {
        match d {
            Descriptor::Uniform { r, n } => Matroid::uniform(*r, *n),
            Descriptor::Graphic { graph } => {
                let graph = Multigraph::new(graph.vertices, graph.edges.clone())?;
                Matroid::graphic(&graph)
            }
            Descriptor::Bases { m, bases } => {
                for b in bases {
                    for &e in b {
                        if e >= *m {
                            return Err(Error::ElementOutOfRange { index: e, size: *m });
                        }
                    }
                }
                let subsets: Vec<Subset> =
                    bases.iter().map(|b| Subset::from_elements(b.iter().copied())).collect();
                Matroid::from_bases(*m, &subsets, limits)
            }
            Descriptor::Dual { child } => Ok(Matroid::from_descriptor(child, limits)?.dual()),
            Descriptor::Delete { child, elements } => {
                let child = Matroid::from_descriptor(child, limits)?;
                child.delete(Subset::from_elements(elements.iter().copied()))
            }
            Descriptor::Contract { child, elements } => {
                let child = Matroid::from_descriptor(child, limits)?;
                child.contract(Subset::from_elements(elements.iter().copied()))
            }
            Descriptor::DirectSum { parts } => {
                let built: Result<Vec<Matroid>> =
                    parts.iter().map(|p| Matroid::from_descriptor(p, limits)).collect();
                Matroid::direct_sum(&built?)
            }
            Descriptor::Stretch2 { child } => Matroid::from_descriptor(child, limits)?.stretch2(),
            Descriptor::Thicken2 { child } => Matroid::from_descriptor(child, limits)?.thicken2(),
            Descriptor::Relax { child, hyperplane } => {
                let child = Matroid::from_descriptor(child, limits)?;
                child.relax(Subset::from_elements(hyperplane.iter().copied()))
            }
            Descriptor::Catalan { n, trimmed } => Matroid::catalan(*n, *trimmed),
            Descriptor::Whirl { n } => Matroid::whirl(*n),
        }
    }

    // --- oracle --------------------------------------------------------------

    pub fn size(&self) -> usize {
        self.0.size
    }

    /// The backing multigraph when this matroid is plainly graphic (not a
    /// derived construction over one).
    pub fn as_graph(&self) -> Option<&Multigraph> {
        match &self.0.oracle {
            Oracle::Graphic { graph } => Some(graph),
            _ => None,
        }
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.0.descriptor
    }

    /// True for bases-list matroids too large for exchange-axiom verification.
    pub fn exchange_unverified(&self) -> bool {
        self.0.unverified_bases
    }

    pub fn full_rank(&self) -> usize {
        *self.0.full_rank.get_or_init(|| self.rank(self.ground_set()))
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.ground_set()) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: s.elements().into_iter().max().unwrap_or(0),
                size: self.size(),
            })
        }
    }

    /// Checked rank query.
    pub fn rank_checked(&self, s: Subset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.rank(s))
    }

    /// Rank of a subset. Panics if the mask has bits outside the ground set.
    pub fn rank(&self, s: Subset) -> usize {
        assert!(
            s.is_subset_of(self.ground_set()),
            "subset {s:?} out of range for ground set of size {}",
            self.size()
        );
        if let Some(r) = self.0.cache.get(self.size(), s.0) {
            return r;
        }
        let r = self.rank_uncached(s);
        self.0.cache.put(s.0, r);
        r
    }

    fn rank_uncached(&self, s: Subset) -> usize {
        match &self.0.oracle {
            Oracle::Uniform { rank } => s.cardinality().min(*rank),
            Oracle::Graphic { graph } => graph.graphic_rank(s),
            Oracle::Bases { bases } => bases
                .iter()
                .map(|&b| (b & s.0).count_ones() as usize)
                .max()
                .unwrap_or(0),
            Oracle::Dual { child } => {
                let m = child.size();
                s.cardinality() + child.rank(s.complement(m)) - child.full_rank()
            }
            Oracle::Minor { child, kept, contracted, contracted_rank } => {
                let lifted = Subset::from_elements(s.iter().map(|e| kept[e]));
                child.rank(lifted.union(*contracted)) - contracted_rank
            }
            Oracle::DirectSum { parts, offsets } => parts
                .iter()
                .zip(offsets)
                .map(|(p, &off)| {
                    let local = Subset((s.0 >> off) & Subset::full(p.size()).0);
                    p.rank(local)
                })
                .sum(),
            Oracle::Thicken2 { child } => {
                let mut proj = 0u64;
                for e in s.iter() {
                    proj |= 1u64 << (e / 2);
                }
                child.rank(Subset(proj))
            }
            Oracle::Catalan { n } => {
                // Greedy leftmost slot assignment: element at 1-indexed
                // position a can be the j-th up-step iff j <= a <= 2j-1.
                let mut slot = 0usize;
                let mut rank = 0usize;
                for e in s.iter() {
                    let a = e + 1;
                    let next = (slot + 1).max(a / 2 + 1);
                    if next <= *n && a >= next {
                        slot = next;
                        rank += 1;
                    }
                }
                rank
            }
            Oracle::Relax { child, hyperplane } => {
                let r = child.rank(s);
                if hyperplane.is_subset_of(s) && r == child.full_rank() - 1 {
                    r + 1
                } else {
                    r
                }
            }
        }
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.cardinality()
    }

    pub fn corank(&self, s: Subset) -> usize {
        self.full_rank() - self.rank(s)
    }

    pub fn nullity(&self, s: Subset) -> usize {
        s.cardinality() - self.rank(s)
    }

    // --- recognizers ----------------------------------------------------------

    /// Elements of rank zero.
    pub fn loops(&self) -> Subset {
        Subset::from_elements(
            (0..self.size()).filter(|&e| self.rank(Subset::singleton(e)) == 0),
        )
    }

    /// Elements in every basis: r(E \ e) = r(E) - 1.
    pub fn coloops(&self) -> Subset {
        let full = self.ground_set();
        let r = self.full_rank();
        Subset::from_elements(
            (0..self.size()).filter(|&e| self.rank(full.remove(e)) == r.saturating_sub(1) && r > 0),
        )
    }

    /// Paving: every circuit has size at least r(E); equivalently every
    /// subset of size r(E)-1 is independent.
    pub fn is_paving(&self) -> bool {
        let r = self.full_rank();
        if r <= 1 {
            return true;
        }
        Subset::all_of_size(self.size(), r - 1).all(|s| self.is_independent(s))
    }

    /// All bases in ascending mask order. Refuses ground sets above the
    /// configured enumeration cap.
    pub fn enumerate_bases(&self, limits: &Limits) -> Result<Vec<Subset>> {
        if self.size() > limits.max_basis_enum_elements {
            return Err(Error::ResourceLimit(format!(
                "basis enumeration over {} elements exceeds cap {}",
                self.size(),
                limits.max_basis_enum_elements
            )));
        }
        let r = self.full_rank();
        Ok(Subset::all_of_size(self.size(), r)
            .filter(|&s| self.rank(s) == r)
            .collect())
    }
}

impl Inner {
    /// Clone just the oracle (children stay shared) so a construction can be
    /// re-tagged with a different provenance descriptor.
    fn oracle_clone_shallow(&self) -> Oracle {
        match &self.oracle {
            Oracle::Uniform { rank } => Oracle::Uniform { rank: *rank },
            Oracle::Graphic { graph } => Oracle::Graphic { graph: graph.clone() },
            Oracle::Bases { bases } => Oracle::Bases { bases: bases.clone() },
            Oracle::Dual { child } => Oracle::Dual { child: child.clone() },
            Oracle::Minor { child, kept, contracted, contracted_rank } => Oracle::Minor {
                child: child.clone(),
                kept: kept.clone(),
                contracted: *contracted,
                contracted_rank: *contracted_rank,
            },
            Oracle::DirectSum { parts, offsets } => {
                Oracle::DirectSum { parts: parts.clone(), offsets: offsets.clone() }
            }
            Oracle::Thicken2 { child } => Oracle::Thicken2 { child: child.clone() },
            Oracle::Catalan { n } => Oracle::Catalan { n: *n },
            Oracle::Relax { child, hyperplane } => {
                Oracle::Relax { child: child.clone(), hyperplane: *hyperplane }
            }
        }
    }
}

/// Basis exchange: for all B1, B2 in the family and e in B1 \ B2 there is
/// f in B2 \ B1 with B1 - e + f in the family.
fn verify_exchange_axiom(masks: &[u64]) -> Result<()> {
    let set: std::collections::HashSet<u64> = masks.iter().copied().collect();
    for &b1 in masks {
        for &b2 in masks {
            if b1 == b2 {
                continue;
            }
            let mut only1 = b1 & !b2;
            while only1 != 0 {
                let e = only1 & only1.wrapping_neg();
                only1 ^= e;
                let stripped = b1 ^ e;
                let mut only2 = b2 & !b1;
                let mut found = false;
                while only2 != 0 {
                    let f = only2 & only2.wrapping_neg();
                    only2 ^= f;
                    if set.contains(&(stripped | f)) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Err(Error::InvalidConstruction(format!(
                        "basis exchange fails for B1={:?}, B2={:?}, e={}",
                        Subset(b1),
                        Subset(b2),
                        Subset(e).min_element().unwrap()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Spot-check of the rank axioms: normalization, bounds, monotone unit
/// increase, and submodularity. Exhaustive over all subset pairs for small
/// ground sets, otherwise over seeded pseudo-random pairs.
pub fn verify_rank_axioms(m: &Matroid, random_pairs: usize, seed: u64) -> std::result::Result<(), String> {
    if m.rank(Subset::EMPTY) != 0 {
        return Err("r(empty) != 0".into());
    }
    let size = m.size();
    let full_rank = m.full_rank();
    let check_single = |a: Subset| -> std::result::Result<(), String> {
        let r = m.rank(a);
        if r > a.cardinality() {
            return Err(format!("r({a:?}) = {r} exceeds |A|"));
        }
        if r > full_rank {
            return Err(format!("r({a:?}) = {r} exceeds r(E)"));
        }
        for e in a.complement(size).iter() {
            let re = m.rank(a.insert(e));
            if re < r || re > r + 1 {
                return Err(format!("unit increase fails at {a:?} + {e}"));
            }
        }
        Ok(())
    };
    let check_pair = |a: Subset, b: Subset| -> std::result::Result<(), String> {
        let lhs = m.rank(a.union(b)) + m.rank(a.intersection(b));
        let rhs = m.rank(a) + m.rank(b);
        if lhs > rhs {
            return Err(format!("submodularity fails for {a:?}, {b:?}"));
        }
        Ok(())
    };
    if size <= 10 {
        for a in Subset::all(size) {
            check_single(a)?;
            for b in Subset::all(size) {
                check_pair(a, b)?;
            }
        }
    } else {
        let mut state = seed | 1;
        let mut next = || {
            // xorshift64*
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            state.wrapping_mul(0x2545_F491_4F6C_DD1D)
        };
        let mask = Subset::full(size).0;
        for _ in 0..random_pairs {
            let a = Subset(next() & mask);
            let b = Subset(next() & mask);
            check_single(a)?;
            check_pair(a, b)?;
        }
    }
    Ok(())
}

/// True when both matroids have identical rank oracles (exhaustive; intended
/// for desk-scale ground sets).
pub fn same_rank_oracle(a: &Matroid, b: &Matroid) -> bool {
    a.size() == b.size() && Subset::all(a.size()).all(|s| a.rank(s) == b.rank(s))
}
