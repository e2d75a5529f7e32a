//! Closed-form values for the named families: wheel spanning trees through
//! Lucas numbers, wheel acyclic orientations, Cayley's count for complete
//! graphs, and the trimmed-Catalan coefficient formula with its binomial
//! identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::TuttePolynomial;
use crate::report::{CheckReport, InstanceRef, Verdict};

/// One named closed-form quantity for a family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormValue {
    pub family: String,
    pub n: usize,
    pub quantity: String,
    pub value: BigInt,
}

/// Lucas numbers by the recursion L_1 = 1, L_2 = 3, L_k = L_{k-1} + L_{k-2}.
pub fn lucas(k: usize) -> BigInt {
    assert!(k >= 1);
    let mut pair = (BigInt::from(1), BigInt::from(3)); // (L_1, L_2)
    if k == 1 {
        return pair.0;
    }
    for _ in 2..k {
        pair = (pair.1.clone(), pair.0 + pair.1);
    }
    pair.1
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn catalan_number(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Closed-form quantities for a family at parameter n:
/// wheels give tau = L_{2n} - 2 and alpha = 3^n - 3; whirls inherit both
/// through the polynomial identity (bases = tau + 1, t20 = alpha + 2);
/// complete graphs give Cayley's tau = n^{n-2}; the trimmed Catalan matroid
/// gives t20 = t02 = binom(2(n-1), n-1) and t11 = C_n.
pub fn closed_form(family: &str, n: usize) -> Result<Vec<ClosedFormValue>> {
    let value = |quantity: &str, value: BigInt| ClosedFormValue {
        family: family.to_string(),
        n,
        quantity: quantity.to_string(),
        value,
    };
    match family {
        "wheel" => {
            if n < 1 {
                return Err(Error::Precondition("wheel closed forms need n >= 1".into()));
            }
            Ok(vec![
                value("tau", lucas(2 * n) - 2),
                value("alpha", BigInt::from(3).pow(n as u32) - 3),
            ])
        }
        "whirl" => {
            if n < 2 {
                return Err(Error::Precondition("whirl closed forms need n >= 2".into()));
            }
            Ok(vec![
                value("bases", lucas(2 * n) - 1),
                value("t20", BigInt::from(3).pow(n as u32) - 1),
            ])
        }
        "complete" => {
            if n < 2 {
                return Err(Error::Precondition("complete closed forms need n >= 2".into()));
            }
            Ok(vec![value("tau", BigInt::from(n).pow(n as u32 - 2))])
        }
        "catalan" => {
            if n < 2 {
                return Err(Error::Precondition("catalan closed forms need n >= 2".into()));
            }
            let m = n - 1;
            Ok(vec![
                value("t20", binomial(2 * m, m)),
                value("t02", binomial(2 * m, m)),
                value("t11", catalan_number(n)),
            ])
        }
        other => Err(Error::InvalidConstruction(format!("unknown closed-form family '{other}'"))),
    }
}

/// The Tutte polynomial of the trimmed Catalan matroid N_n from its closed
/// form: t_{(i-1)(j-1)} = ((i+j-2)/(n-1)) binom(2n-i-j-1, n-i-j+1) for
/// i, j >= 1. Every coefficient must clear to an integer.
pub fn catalan_tutte_formula(n: usize) -> Result<TuttePolynomial> {
    if n < 2 {
        return Err(Error::Precondition("the trimmed Catalan matroid needs n >= 2".into()));
    }
    // N_n has rank n-1 on 2n-2 elements, so the matrix is n x n.
    let mut out = TuttePolynomial::zero(n, n);
    let denom = BigInt::from(n as i64 - 1);
    for i in 1..=n {
        for j in 1..=n {
            let scale = BigInt::from((i + j) as i64 - 2);
            if scale.is_zero() {
                continue;
            }
            let upper = 2 * n as i64 - i as i64 - j as i64 - 1;
            let lower = n as i64 - i as i64 - j as i64 + 1;
            if upper < 0 || lower < 0 || lower > upper {
                continue;
            }
            let num = scale * binomial(upper as usize, lower as usize);
            let q = BigRational::new(num.clone(), denom.clone());
            if !q.is_integer() {
                return Err(Error::Internal(format!(
                    "catalan coefficient ({},{}) is not an integer: {}/{}",
                    i - 1,
                    j - 1,
                    num,
                    denom
                )));
            }
            *out.at_mut(i - 1, j - 1) = q.to_integer();
        }
    }
    Ok(out)
}

/// Exact verification of
/// sum_{k=0}^m (k/m) binom(2m-k-1, m-k) 2^k = binom(2m, m).
pub fn catalan_binomial_identity(m: usize, instance: InstanceRef) -> Result<CheckReport> {
    if m < 1 {
        return Err(Error::Precondition("the identity needs m >= 1".into()));
    }
    let mut sum = BigRational::zero();
    for k in 1..=m {
        let num = BigInt::from(k) * binomial(2 * m - k - 1, m - k) * (BigInt::one() << k);
        sum += BigRational::new(num, BigInt::from(m));
    }
    let rhs = BigRational::from(binomial(2 * m, m));
    let verdict = if sum == rhs { Verdict::Pass } else { Verdict::Fail };
    let mut report = CheckReport::new("catalan-binomial-identity", instance, verdict);
    report.set_value("m", m.to_string());
    report.set_rational("lhs", &sum);
    report.set_rational("rhs", &rhs);
    Ok(report)
}
