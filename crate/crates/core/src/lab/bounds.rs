//! Certified bound checks for 3-regular graphs of girth at least 5: the
//! acyclic-orientation lower bound (2^(3/8) 3^(3/8) 4^(1/8))^n and the
//! spanning-tree upper bound (2 beta / 3n) e^((12/sqrt(pi)) beta^(-5/2))
//! (4/sqrt(3))^n with beta = ceil(ln n / ln(9/8)). Both bounds are evaluated
//! in outward-rounded interval arithmetic so a passing verdict is rigorous.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::interval::{exp_interval, nth_root, pi, sqrt_interval, Interval};
use crate::limits::Limits;
use crate::report::{decimal_string, CheckReport, InstanceRef, Rounding, Verdict};

/// The lower-bound base 2^(3/8) 3^(3/8) 4^(1/8) collapses to 864^(1/8);
/// the whole bound is 864^(n/8).
fn acyclic_lower_bound(n: usize, bits: u32) -> Interval {
    let power = BigRational::from(BigInt::from(864).pow(n as u32));
    nth_root(&power, 8, bits)
}

/// Smallest integer b with (9/8)^b >= n, i.e. ceil(ln n / ln(9/8)),
/// computed by exact rational comparison.
fn beta(n: usize) -> u32 {
    let target = BigRational::from_integer(n.into());
    let ratio = BigRational::new(9.into(), 8.into());
    let mut power = BigRational::one();
    let mut b = 0u32;
    while power < target {
        power *= &ratio;
        b += 1;
    }
    b
}

fn spanning_upper_bound(n: usize, b: u32, bits: u32) -> Interval {
    // (2 beta / 3n), exact.
    let prefactor = Interval::exact(BigRational::new(
        BigInt::from(2 * b as i64),
        BigInt::from(3 * n as i64),
    ));
    // exp((12 / sqrt(pi)) * beta^(-5/2)).
    let sqrt_pi = sqrt_interval(&pi(bits), bits);
    let twelve_over = Interval::of_int(12).div(&sqrt_pi);
    let beta_52 = nth_root(&BigRational::from(BigInt::from(b).pow(5)), 2, bits);
    let exponent = twelve_over.mul(&beta_52.recip());
    let exp_term = exp_interval(&exponent, bits);
    // (4 / sqrt(3))^n = 4^n / sqrt(3^n).
    let sqrt_3n = nth_root(&BigRational::from(BigInt::from(3).pow(n as u32)), 2, bits);
    let four_n = Interval::exact(BigRational::from(BigInt::from(4).pow(n as u32)));
    let growth = four_n.div(&sqrt_3n);
    prefactor.mul(&exp_term).mul(&growth)
}

/// Verify the girth-5 cubic bounds on a concrete graph: computes tau by
/// Matrix-Tree and alpha by orientation enumeration, then certifies
/// alpha >= lower and tau <= upper against outward-rounded enclosures.
pub fn cubic_girth5_bounds(
    g: &Multigraph,
    precision_bits: u32,
    limits: &Limits,
    instance: InstanceRef,
) -> Result<CheckReport> {
    if !g.is_k_regular(3) {
        return Err(Error::Precondition("graph is not 3-regular".into()));
    }
    if g.girth().is_none_or(|girth| girth < 5) {
        return Err(Error::Precondition("graph girth is below 5".into()));
    }
    let n = g.vertices;
    let tau = g.spanning_tree_count()?;
    let alpha = g.count_acyclic_orientations(limits.max_orientation_edges)?;
    let lower = acyclic_lower_bound(n, precision_bits);
    let b = beta(n);
    let upper = spanning_upper_bound(n, b, precision_bits);

    let alpha_q = BigRational::from(alpha.clone());
    let tau_q = BigRational::from(tau.clone());
    // Outward certification: alpha must clear the top of the lower-bound
    // enclosure, tau must fit under the bottom of the upper-bound enclosure.
    let alpha_certified = alpha_q >= lower.hi;
    let alpha_refuted = alpha_q < lower.lo;
    let tau_certified = tau_q <= upper.lo;
    let tau_refuted = tau_q > upper.hi;

    let verdict = if alpha_certified && tau_certified {
        Verdict::Pass
    } else if alpha_refuted || tau_refuted {
        Verdict::Fail
    } else {
        Verdict::Skip // indeterminate at this precision
    };
    let mut report = CheckReport::new("cubic-girth5-bounds", instance, verdict);
    report.set_value("vertices", n.to_string());
    report.set_value("beta", b.to_string());
    report.set_int("tau", &tau);
    report.set_int("alpha", &alpha);
    report.set_value("alpha_lower_bound_lo", decimal_string(&lower.lo, 30, Rounding::Down));
    report.set_value("alpha_lower_bound_hi", decimal_string(&lower.hi, 30, Rounding::Up));
    report.set_value("tau_upper_bound_lo", decimal_string(&upper.lo, 30, Rounding::Down));
    report.set_value("tau_upper_bound_hi", decimal_string(&upper.hi, 30, Rounding::Up));
    report.set_value("precision_bits", precision_bits.to_string());
    if verdict == Verdict::Skip {
        report.set_value("note", "enclosures too wide; raise precision");
    }
    Ok(report)
}
