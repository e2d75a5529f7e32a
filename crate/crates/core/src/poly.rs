//! Exact polynomial containers: the dense Tutte coefficient matrix over
//! BigInt and univariate polynomials over BigRational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Tutte polynomial sum t_ij x^i y^j stored as a dense coefficient matrix,
/// rows indexed by the x-power i, columns by the y-power j.
#[derive(Clone)]
pub struct TuttePolynomial {
    rows: usize,
    cols: usize,
    coeffs: Vec<BigInt>,
}

impl TuttePolynomial {
    pub fn zero(rows: usize, cols: usize) -> TuttePolynomial {
        TuttePolynomial { rows, cols, coeffs: vec![BigInt::zero(); rows * cols] }
    }

    /// The constant polynomial 1 (empty matroid).
    pub fn one() -> TuttePolynomial {
        let mut p = TuttePolynomial::zero(1, 1);
        p.coeffs[0] = BigInt::one();
        p
    }

    /// The monomial x^i y^j.
    pub fn monomial(i: usize, j: usize) -> TuttePolynomial {
        let mut p = TuttePolynomial::zero(i + 1, j + 1);
        *p.at_mut(i, j) = BigInt::one();
        p
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> TuttePolynomial {
        let r = rows.len().max(1);
        let c = rows.iter().map(|row| row.len()).max().unwrap_or(0).max(1);
        let mut p = TuttePolynomial::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                *p.at_mut(i, j) = v;
            }
        }
        p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        if i < self.rows && j < self.cols {
            self.coeffs[i * self.cols + j].clone()
        } else {
            BigInt::zero()
        }
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.coeffs[i * self.cols + j]
    }

    pub fn add_assign(&mut self, other: &TuttePolynomial) {
        debug_assert!(other.rows <= self.rows && other.cols <= self.cols);
        for i in 0..other.rows {
            for j in 0..other.cols {
                self.coeffs[i * self.cols + j] += &other.coeffs[i * other.cols + j];
            }
        }
    }

    /// Sum with shape growing to fit.
    pub fn add(&self, other: &TuttePolynomial) -> TuttePolynomial {
        let mut out = TuttePolynomial::zero(self.rows.max(other.rows), self.cols.max(other.cols));
        out.add_assign(self);
        out.add_assign(other);
        out
    }

    /// Polynomial product; Tutte polynomials multiply under direct sum.
    pub fn multiply(&self, other: &TuttePolynomial) -> TuttePolynomial {
        let mut out = TuttePolynomial::zero(self.rows + other.rows - 1, self.cols + other.cols - 1);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self.coeffs[i1 * self.cols + j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = &other.coeffs[i2 * other.cols + j2];
                        if b.is_zero() {
                            continue;
                        }
                        out.coeffs[(i1 + i2) * out.cols + (j1 + j2)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Swap x and y: the Tutte polynomial of the dual.
    pub fn transpose(&self) -> TuttePolynomial {
        let mut out = TuttePolynomial::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.coeffs[j * out.cols + i] = self.coeffs[i * self.cols + j].clone();
            }
        }
        out
    }

    /// Drop all-zero trailing rows and columns (shape at least 1x1).
    pub fn trimmed(&self) -> TuttePolynomial {
        let mut rows = self.rows;
        while rows > 1 && (0..self.cols).all(|j| self.coeffs[(rows - 1) * self.cols + j].is_zero())
        {
            rows -= 1;
        }
        let mut cols = self.cols;
        while cols > 1 && (0..rows).all(|i| self.coeffs[i * self.cols + cols - 1].is_zero()) {
            cols -= 1;
        }
        let mut out = TuttePolynomial::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.coeffs[i * cols + j] = self.coeffs[i * self.cols + j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.coeffs.iter().any(|c| c.is_negative())
    }

    /// Sum of all coefficients, i.e. the evaluation at (1,1).
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact evaluation by double Horner.
    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for i in (0..self.rows).rev() {
            let mut row_val = BigRational::zero();
            for j in (0..self.cols).rev() {
                row_val = row_val * y + BigRational::from(self.coeffs[i * self.cols + j].clone());
            }
            acc = acc * x + row_val;
        }
        acc
    }

    pub fn evaluate_int(&self, x: i64, y: i64) -> BigInt {
        let v = self.evaluate(&BigRational::from_integer(x.into()), &BigRational::from_integer(y.into()));
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Substitute (x, y) = (t, p - t): the restriction of T to the segment
    /// x + y = p, as a univariate polynomial in t.
    pub fn restrict_to_segment(&self, p: &BigRational) -> RatPoly {
        let mut acc = RatPoly::zero();
        // (p - t)^j built incrementally.
        let linear = RatPoly::new(vec![p.clone(), -BigRational::one()]);
        let mut pow_linear = RatPoly::constant(BigRational::one());
        for j in 0..self.cols {
            for i in 0..self.rows {
                let c = &self.coeffs[i * self.cols + j];
                if c.is_zero() {
                    continue;
                }
                let term = pow_linear.shifted(i).scaled(&BigRational::from(c.clone()));
                acc = acc.add(&term);
            }
            pow_linear = pow_linear.multiply(&linear);
        }
        acc
    }

    /// JSON form: {"rows": r+1, "cols": m-r+1, "coeffs": [["decimal", ...]]}.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.coeffs[i * self.cols + j].to_string()).collect())
            .collect();
        serde_json::json!({
            "rows": self.rows,
            "cols": self.cols,
            "coeffs": coeffs,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<TuttePolynomial> {
        let rows = v.get("rows")?.as_u64()? as usize;
        let cols = v.get("cols")?.as_u64()? as usize;
        let coeffs = v.get("coeffs")?.as_array()?;
        let mut p = TuttePolynomial::zero(rows, cols);
        for (i, row) in coeffs.iter().enumerate() {
            for (j, c) in row.as_array()?.iter().enumerate() {
                *p.at_mut(i, j) = c.as_str()?.parse().ok()?;
            }
        }
        Some(p)
    }

    /// Human-readable rendering, highest x-powers first.
    pub fn to_latex(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for i in (0..self.rows).rev() {
            for j in 0..self.cols {
                let c = &self.coeffs[i * self.cols + j];
                if c.is_zero() {
                    continue;
                }
                let mut term = String::new();
                if !c.is_one() || (i == 0 && j == 0) {
                    term.push_str(&c.to_string());
                }
                match i {
                    0 => {}
                    1 => term.push('x'),
                    _ => term.push_str(&format!("x^{{{i}}}")),
                }
                match j {
                    0 => {}
                    1 => term.push('y'),
                    _ => term.push_str(&format!("y^{{{j}}}")),
                }
                terms.push(term);
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl PartialEq for TuttePolynomial {
    fn eq(&self, other: &Self) -> bool {
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.coefficient(i, j) != other.coefficient(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for TuttePolynomial {}

impl std::fmt::Debug for TuttePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_latex())
    }
}

/// Univariate polynomial over exact rationals, coefficients in ascending
/// degree order with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> RatPoly {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> RatPoly {
        RatPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                a + b
            })
            .collect();
        RatPoly::new(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.scaled(&-BigRational::one()))
    }

    pub fn scaled(&self, k: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by t^k.
    pub fn shifted(&self, k: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn multiply(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect();
        RatPoly::new(coeffs)
    }

    /// Euclidean division: (quotient, remainder) with deg(rem) < deg(self).
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len();
        if rem.len() < d {
            return (RatPoly::zero(), RatPoly::new(rem));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigRational::zero(); rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let v = c * &q;
                rem[k + i] -= v;
            }
            quot[k] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Rescale by a positive rational so coefficients are coprime integers.
    /// Root sets and signs are preserved.
    pub fn primitive(&self) -> RatPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from(denom_lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        RatPoly::new(ints.into_iter().map(|v| BigRational::from(&v / &g)).collect())
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        a
    }

    /// Square-free part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> RatPoly {
        if self.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        let (q, r) = self.primitive().div_rem(&g);
        debug_assert!(r.is_zero());
        q.primitive()
    }
}

impl std::fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
