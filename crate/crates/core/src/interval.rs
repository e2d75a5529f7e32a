//! Outward interval arithmetic over exact rationals. Field operations are
//! exact; only the irrational enclosures (roots, exp, pi) carry width, and
//! that width is certified by construction: truncated series with explicit
//! remainder bounds and integer bisection for roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn exact(q: BigRational) -> Interval {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn of_int(n: i64) -> Interval {
        Interval::exact(BigRational::from_integer(n.into()))
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        self.lo <= *q && *q <= self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Reciprocal of an interval strictly above zero.
    pub fn recip(&self) -> Interval {
        assert!(self.lo.is_positive(), "reciprocal requires a positive interval");
        Interval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    pub fn div(&self, other: &Interval) -> Interval {
        self.mul(&other.recip())
    }

    pub fn pow(&self, k: u32) -> Interval {
        let mut out = Interval::exact(BigRational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

fn precision_eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Enclosure of q^(1/k) for q >= 0 with width 2^-bits, by integer bisection
/// of m |-> m^k against q * 2^(k*bits).
pub fn nth_root(q: &BigRational, k: u32, bits: u32) -> Interval {
    assert!(!q.is_negative(), "nth_root requires a nonnegative argument");
    assert!(k >= 1);
    if q.is_zero() {
        return Interval::exact(BigRational::zero());
    }
    let scale = BigInt::one() << bits;
    // target: largest m with m^k * denom <= numer * scale^k.
    let rhs = q.numer() * scale.pow(k);
    let denom = q.denom().clone();
    let mut lo = BigInt::zero();
    // Upper bound: max(1, q) + 1 scaled.
    let bound = if *q >= BigRational::one() {
        (q.numer() / q.denom() + 2) * &scale
    } else {
        &scale + 1
    };
    let mut hi = bound;
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        if mid.pow(k) * &denom <= rhs {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval {
        lo: BigRational::new(lo.clone(), scale.clone()),
        hi: BigRational::new(lo + 1, scale),
    }
}

/// Monotone image of an interval under x^(1/k).
pub fn nth_root_interval(x: &Interval, k: u32, bits: u32) -> Interval {
    Interval { lo: nth_root(&x.lo, k, bits).lo, hi: nth_root(&x.hi, k, bits).hi }
}

pub fn sqrt_interval(x: &Interval, bits: u32) -> Interval {
    nth_root_interval(x, 2, bits)
}

/// Enclosure of e^x for a nonnegative interval x, by the Taylor series with
/// an explicit geometric remainder bound.
pub fn exp_interval(x: &Interval, bits: u32) -> Interval {
    assert!(!x.lo.is_negative(), "exp enclosure implemented for nonnegative arguments");
    Interval { lo: exp_lower(&x.lo, bits), hi: exp_upper(&x.hi, bits) }
}

fn exp_terms(q: &BigRational, bits: u32) -> (BigRational, BigRational) {
    // Partial sum and a rigorous remainder bound:
    // sum_{k>N} q^k/k! <= q^(N+1)/(N+1)! * 1/(1 - q/(N+2)) once q < N+2.
    let eps = precision_eps(bits + 2);
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut n = 0usize;
    loop {
        n += 1;
        term = term * q / BigRational::from_integer(n.into());
        sum += &term;
        let n_plus_2 = BigRational::from_integer((n + 2).into());
        if *q < n_plus_2 {
            let next = &term * q / BigRational::from_integer((n + 1).into());
            let tail = &next / (BigRational::one() - q / n_plus_2);
            if tail <= eps {
                return (sum, tail);
            }
        }
        assert!(n < 10_000, "exp series failed to converge");
    }
}

fn exp_lower(q: &BigRational, bits: u32) -> BigRational {
    // All terms are nonnegative for q >= 0, so the partial sum undershoots.
    exp_terms(q, bits).0
}

fn exp_upper(q: &BigRational, bits: u32) -> BigRational {
    let (sum, tail) = exp_terms(q, bits);
    sum + tail
}

/// Machin's formula with alternating-series bounds:
/// pi = 16 arctan(1/5) - 4 arctan(1/239).
pub fn pi(bits: u32) -> Interval {
    let a = arctan_inv(5, bits + 6);
    let b = arctan_inv(239, bits + 6);
    Interval::of_int(16).mul(&a).sub(&Interval::of_int(4).mul(&b))
}

/// Enclosure of arctan(1/x) for integer x >= 2: consecutive partial sums of
/// the alternating series bracket the value.
fn arctan_inv(x: i64, bits: u32) -> Interval {
    let eps = precision_eps(bits);
    let x2 = BigRational::from_integer((x * x).into());
    let mut term = BigRational::new(BigInt::one(), x.into());
    let mut sum = term.clone();
    let mut k = 0u32;
    loop {
        k += 1;
        term = -term / &x2 * BigRational::new((2 * k as i64 - 1).into(), (2 * k as i64 + 1).into());
        let prev = sum.clone();
        sum += &term;
        if term.abs() <= eps {
            let (lo, hi) = if sum < prev { (sum, prev) } else { (prev, sum) };
            return Interval { lo, hi };
        }
        assert!(k < 10_000, "arctan series failed to converge");
    }
}
