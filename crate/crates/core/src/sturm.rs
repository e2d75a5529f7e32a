//! Sturm sequences over exact rationals: distinct-root counting, root
//! isolation, and the nonnegativity certificate used by the convexity
//! checks. Everything here is exact; a verdict is a proof, not a sample.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::RatPoly;

/// Sturm chain of a square-free polynomial: p0, p1 = p0', then negated
/// remainders, each rescaled to primitive integer form (positive scaling
/// preserves the sign structure).
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(g: &RatPoly) -> SturmChain {
        let mut chain = vec![g.primitive()];
        let d = g.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let n = chain.len();
                let (_, rem) = chain[n - 2].div_rem(&chain[n - 1]);
                if rem.is_zero() {
                    break;
                }
                chain.push(rem.scaled(&-BigRational::one()).primitive());
            }
        }
        SturmChain { chain }
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None; // sign > 0?
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if let Some(prev) = last {
                if prev != positive {
                    count += 1;
                }
            }
            last = Some(positive);
        }
        count
    }

    /// Distinct roots in (a, b]. Exact when neither endpoint is a root of
    /// the chain's head.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Verdict of the exact nonnegativity check on a closed interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Nonnegativity {
    NonNegative { distinct_interior_roots: usize },
    Negative { witness: BigRational, value: BigRational },
}

impl Nonnegativity {
    pub fn holds(&self) -> bool {
        matches!(self, Nonnegativity::NonNegative { .. })
    }
}

/// Certify f(t) >= 0 for all t in [a, b], exactly. The sign of f is
/// constant between consecutive distinct roots, so isolating the roots of
/// the square-free part and evaluating f once inside every root-free gap
/// (plus both endpoints) decides the claim.
pub fn certify_nonnegative(f: &RatPoly, a: &BigRational, b: &BigRational) -> Nonnegativity {
    assert!(a < b, "interval must be non-degenerate");
    if f.is_zero() {
        return Nonnegativity::NonNegative { distinct_interior_roots: 0 };
    }
    for endpoint in [a, b] {
        let v = f.eval(endpoint);
        if v.is_negative() {
            return Nonnegativity::Negative { witness: endpoint.clone(), value: v };
        }
    }
    let mut g = f.squarefree_part();
    // Deflate endpoint roots so every Sturm evaluation point is a non-root.
    for endpoint in [a, b] {
        while g.eval(endpoint).is_zero() {
            let linear = RatPoly::new(vec![-endpoint.clone(), BigRational::one()]);
            let (q, r) = g.div_rem(&linear);
            debug_assert!(r.is_zero());
            g = q;
        }
    }
    if g.degree() == 0 {
        return Nonnegativity::NonNegative { distinct_interior_roots: 0 };
    }
    let chain = SturmChain::new(&g);
    let mut intervals: Vec<(BigRational, BigRational)> = Vec::new();
    isolate_roots(&chain, &g, a.clone(), b.clone(), &mut intervals);
    intervals.sort_by(|x, y| x.0.cmp(&y.0));
    // Shrink isolating intervals off the domain endpoints so that both ends
    // of every interval are usable gap samples.
    for (lo, hi) in intervals.iter_mut() {
        while lo == a || hi == b {
            let mid = off_root_midpoint(&g, lo, hi);
            if chain.count_roots(lo, &mid) == 1 {
                *hi = mid;
            } else {
                *lo = mid;
            }
        }
    }
    // Sample f once in every root-free gap: interval endpoints bracket each
    // root strictly inside (a, b), so they cover all gaps.
    for (lo, hi) in &intervals {
        for t in [lo, hi] {
            let v = f.eval(t);
            if v.is_negative() {
                return Nonnegativity::Negative { witness: t.clone(), value: v };
            }
        }
    }
    Nonnegativity::NonNegative { distinct_interior_roots: intervals.len() }
}

/// Isolate the distinct roots of g in the open interval (a, b) into disjoint
/// intervals (lo, hi), each holding exactly one root, with non-root rational
/// endpoints. Requires g(a) != 0 and g(b) != 0.
fn isolate_roots(
    chain: &SturmChain,
    g: &RatPoly,
    a: BigRational,
    b: BigRational,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let n = chain.count_roots(&a, &b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((a, b));
        return;
    }
    let mid = off_root_midpoint(g, &a, &b);
    isolate_roots(chain, g, a, mid.clone(), out);
    isolate_roots(chain, g, mid, b, out);
}

/// A rational point near the middle of (a, b) that is not a root of g.
fn off_root_midpoint(g: &RatPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mut mid = (a + b) / &two;
    let mut offset = (b - a) / BigRational::from_integer(4.into());
    while g.eval(&mid).is_zero() {
        mid = (a + b) / &two + &offset;
        offset /= &two;
    }
    mid
}
