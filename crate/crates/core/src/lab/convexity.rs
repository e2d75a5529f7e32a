//! Convexity of the Tutte polynomial along the segments x + y = p, either
//! certified exactly (Sturm nonnegativity of the second derivative) or
//! sampled on a grid (midpoint convexity, a necessary condition only), plus
//! the exploratory whole-quadrant probe.

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::poly::{RatPoly, TuttePolynomial};
use crate::report::{exact_string, CheckReport, InstanceRef, Verdict};
use crate::sturm::{certify_nonnegative, Nonnegativity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvexityMethod {
    ExactSturm,
    Grid { density: usize },
}

#[derive(Clone, Debug)]
pub struct SegmentConvexityReport {
    pub p: BigRational,
    pub method: ConvexityMethod,
    pub convex: bool,
    /// Second derivative of the restriction (empty coefficient list when the
    /// restriction is affine).
    pub second_derivative: RatPoly,
    /// For a negative Sturm verdict: a point t with f''(t) < 0. For a grid
    /// verdict: the violating midpoint pair (t1, t2).
    pub violation: Option<(BigRational, BigRational)>,
    pub distinct_interior_roots: usize,
}

impl SegmentConvexityReport {
    pub fn to_report(&self, instance: InstanceRef) -> CheckReport {
        let verdict = if self.convex { Verdict::Pass } else { Verdict::Fail };
        let mut report = CheckReport::new("segment-convexity", instance, verdict);
        report.set_value("p", exact_string(&self.p));
        report.set_value(
            "method",
            match self.method {
                ConvexityMethod::ExactSturm => "exact-sturm".to_string(),
                ConvexityMethod::Grid { density } => format!("grid:{density}"),
            },
        );
        if matches!(self.method, ConvexityMethod::Grid { .. }) {
            report.set_value("certificate", "necessary-condition only");
        } else {
            report.set_value("certificate", "exact");
            report.set_value(
                "f_second",
                format!("{:?}", self.second_derivative),
            );
            report.set_value(
                "interior_roots_inspected",
                self.distinct_interior_roots.to_string(),
            );
        }
        if let Some((a, b)) = &self.violation {
            report.witness = Some(json!({
                "at": exact_string(a),
                "and": exact_string(b),
            }));
        }
        report
    }
}

/// Is T convex along the portion of x + y = p in the positive quadrant?
/// The exact method certifies f'' >= 0 on [0, p] by Sturm root isolation;
/// the grid method tests midpoint convexity on a uniform rational grid.
pub fn check_segment_convexity(
    tutte: &TuttePolynomial,
    p: &BigRational,
    method: ConvexityMethod,
) -> Result<SegmentConvexityReport> {
    if *p <= BigRational::zero() {
        return Err(Error::Precondition("segment parameter p must be positive".into()));
    }
    let f = tutte.restrict_to_segment(p);
    let f_second = f.derivative().derivative();
    match method {
        ConvexityMethod::ExactSturm => {
            if f_second.is_zero() {
                return Ok(SegmentConvexityReport {
                    p: p.clone(),
                    method,
                    convex: true,
                    second_derivative: f_second,
                    violation: None,
                    distinct_interior_roots: 0,
                });
            }
            let verdict = certify_nonnegative(&f_second, &BigRational::zero(), p);
            Ok(match verdict {
                Nonnegativity::NonNegative { distinct_interior_roots } => {
                    SegmentConvexityReport {
                        p: p.clone(),
                        method,
                        convex: true,
                        second_derivative: f_second,
                        violation: None,
                        distinct_interior_roots,
                    }
                }
                Nonnegativity::Negative { witness, value } => SegmentConvexityReport {
                    p: p.clone(),
                    method,
                    convex: false,
                    second_derivative: f_second,
                    violation: Some((witness, value)),
                    distinct_interior_roots: 0,
                },
            })
        }
        ConvexityMethod::Grid { density } => {
            if density < 2 {
                return Err(Error::Precondition("grid density must be at least 2".into()));
            }
            let points: Vec<BigRational> = (0..=density)
                .map(|i| p * BigRational::new(i.into(), density.into()))
                .collect();
            let values: Vec<BigRational> = points.iter().map(|t| f.eval(t)).collect();
            let two = BigRational::from_integer(2.into());
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    let mid = (&points[i] + &points[j]) / &two;
                    let lhs = f.eval(&mid) * &two;
                    let rhs = &values[i] + &values[j];
                    if lhs > rhs {
                        return Ok(SegmentConvexityReport {
                            p: p.clone(),
                            method,
                            convex: false,
                            second_derivative: f_second,
                            violation: Some((points[i].clone(), points[j].clone())),
                            distinct_interior_roots: 0,
                        });
                    }
                }
            }
            Ok(SegmentConvexityReport {
                p: p.clone(),
                method,
                convex: true,
                second_derivative: f_second,
                violation: None,
                distinct_interior_roots: 0,
            })
        }
    }
}

/// Exploratory probe for convexity over the whole positive quadrant:
/// midpoint convexity over all pairs of points of a uniform grid on
/// [0, bound]^2. Finding a violation proves non-convexity; finding none
/// certifies nothing.
pub fn quadrant_convexity_probe(
    tutte: &TuttePolynomial,
    bound: &BigRational,
    density: usize,
    instance: InstanceRef,
) -> Result<CheckReport> {
    if *bound <= BigRational::zero() || density < 2 {
        return Err(Error::Precondition(
            "quadrant probe needs a positive bound and density >= 2".into(),
        ));
    }
    // Midpoints of grid pairs live on the doubled grid; evaluate T there
    // once and scan pairs by lookup.
    let steps = 2 * density;
    let mut values = vec![vec![BigRational::zero(); steps + 1]; steps + 1];
    for (i, row) in values.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let x = bound * BigRational::new(i.into(), steps.into());
            let y = bound * BigRational::new(j.into(), steps.into());
            *slot = tutte.evaluate(&x, &y);
        }
    }
    let mut violations = 0u64;
    let mut first: Option<serde_json::Value> = None;
    // Grid point i maps to doubled-grid index 2i, so the midpoint of grid
    // points i1 and i2 sits at doubled-grid index i1 + i2.
    for i1 in 0..=density {
        for j1 in 0..=density {
            for i2 in i1..=density {
                for j2 in 0..=density {
                    if i2 == i1 && j2 < j1 {
                        continue;
                    }
                    let lhs = &values[i1 + i2][j1 + j2];
                    let rhs = &values[2 * i1][2 * j1] + &values[2 * i2][2 * j2];
                    if lhs + lhs > rhs {
                        violations += 1;
                        if first.is_none() {
                            let coord = |k: usize| {
                                exact_string(&(bound * BigRational::new(k.into(), density.into())))
                            };
                            first = Some(json!({
                                "p1": [coord(i1), coord(j1)],
                                "p2": [coord(i2), coord(j2)],
                            }));
                        }
                    }
                }
            }
        }
    }
    let verdict = if violations == 0 { Verdict::Pass } else { Verdict::Fail };
    let mut report = CheckReport::new("quadrant-convexity-probe", instance, verdict);
    report.set_value("bound", exact_string(bound));
    report.set_value("density", density.to_string());
    report.set_value("violations", violations.to_string());
    report.set_value("certificate", "exploratory only");
    if let Some(w) = first {
        report.witness = Some(w);
    }
    Ok(report)
}
