//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see them). Tolerances are exact equalities or certified inequalities
//! throughout; there is nothing to calibrate.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use tuttelab::catalog::{self, catalog};
use tuttelab::graph::{self, chromatic_eval};
use tuttelab::lab::bounds::cubic_girth5_bounds;
use tuttelab::lab::closed_form::{
    binomial, catalan_binomial_identity, catalan_number, catalan_tutte_formula, closed_form, lucas,
};
use tuttelab::lab::convexity::{
    check_segment_convexity, quadrant_convexity_probe, ConvexityMethod,
};
use tuttelab::lab::search::{conjecture_search, family_range_corpus, multigraph_corpus};
use tuttelab::lab::{
    self, check_family_inequality_with, check_merino_welsh, check_paving_dichotomy,
    conjecture_points,
};
use tuttelab::packing::{
    check_inequality_equivalence, packing_certificate, two_disjoint_bases_bruteforce,
};
use tuttelab::tutte::{
    check_coefficient_relations, corank_nullity_counts, evaluate_from_counts,
    tutte_by_activities, tutte_by_deletion_contraction, tutte_by_subsets, PackingHint,
};
use tuttelab::{InstanceRef, Limits, Matroid, TuttePolynomial, Verdict};

fn limits() -> Limits {
    Limits::default()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn rat2(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn report_line(criterion: u32, name: &str, started: Instant) {
    println!(
        "ACCEPTANCE {criterion} ({name}): pass in {:.2?}",
        started.elapsed()
    );
}

#[test]
fn criterion_01_engine_agreement() {
    let t0 = Instant::now();
    let limits = limits();
    let suite: Vec<_> = catalog().into_iter().filter(|e| e.matroid.size() <= 16).collect();
    assert!(suite.len() >= 30, "need at least 30 instances, have {}", suite.len());
    for entry in &suite {
        let subsets = tutte_by_subsets(&entry.matroid, &limits).unwrap();
        let delcon = tutte_by_deletion_contraction(&entry.matroid, &limits).unwrap();
        let activities = tutte_by_activities(&entry.matroid, None, &limits).unwrap();
        assert_eq!(subsets, delcon, "subsets vs delcon on {}", entry.id);
        assert_eq!(subsets, activities, "subsets vs activities on {}", entry.id);
    }
    assert!(t0.elapsed().as_secs() <= 300, "over the 5 minute budget");
    println!("  engines agreed on {} instances", suite.len());
    report_line(1, "three-engine agreement", t0);
}

#[test]
fn criterion_02_paper_values() {
    let t0 = Instant::now();
    let lims = limits();
    // tau(K_4) = 16, alpha*(K_4) = 24, alpha(K_3) = 6, tau(K_3) = 3.
    let k4 = graph::complete(4).unwrap();
    let k3 = graph::complete(3).unwrap();
    assert_eq!(k4.spanning_tree_count().unwrap(), BigInt::from(16));
    assert_eq!(
        k4.count_totally_cyclic_orientations(lims.max_orientation_edges).unwrap(),
        BigInt::from(24)
    );
    assert_eq!(
        k3.count_acyclic_orientations(lims.max_orientation_edges).unwrap(),
        BigInt::from(6)
    );
    assert_eq!(k3.spanning_tree_count().unwrap(), BigInt::from(3));

    // Wheels n <= 8: tau = L_{2n} - 2 and alpha = 3^n - 3, engine vs closed
    // form (Matrix-Tree, orientation enumeration, and Tutte evaluations).
    for n in 1..=8usize {
        let w = graph::wheel(n).unwrap();
        let forms = closed_form("wheel", n).unwrap();
        let tau_formula = forms[0].value.clone();
        let alpha_formula = forms[1].value.clone();
        assert_eq!(tau_formula, lucas(2 * n) - 2);
        assert_eq!(w.spanning_tree_count().unwrap(), tau_formula, "tau(W_{n})");
        assert_eq!(
            w.count_acyclic_orientations(lims.max_orientation_edges).unwrap(),
            alpha_formula,
            "alpha(W_{n})"
        );
        let m = Matroid::graphic(&w).unwrap();
        let counts = corank_nullity_counts(&m, &lims).unwrap();
        assert_eq!(
            evaluate_from_counts(&counts, &rat(1), &rat(1)),
            BigRational::from(tau_formula),
            "T(1,1) on W_{n}"
        );
        assert_eq!(
            evaluate_from_counts(&counts, &rat(2), &rat(0)),
            BigRational::from(alpha_formula),
            "T(2,0) on W_{n}"
        );
    }

    // T_{W^n} = T_{W_n} - xy + x + y as polynomials, n <= 6.
    for n in 2..=6usize {
        let wheel_poly =
            tutte_by_subsets(&Matroid::graphic(&graph::wheel(n).unwrap()).unwrap(), &lims)
                .unwrap();
        let whirl_poly = tutte_by_subsets(&Matroid::whirl(n).unwrap(), &lims).unwrap();
        let mut adjusted = wheel_poly.clone();
        *adjusted.at_mut(1, 1) -= 1;
        *adjusted.at_mut(1, 0) += 1;
        *adjusted.at_mut(0, 1) += 1;
        assert_eq!(whirl_poly, adjusted, "whirl identity at n = {n}");
    }

    // Cayley: tau(K_n) = n^{n-2} for n <= 7.
    for n in 2..=7usize {
        assert_eq!(
            graph::complete(n).unwrap().spanning_tree_count().unwrap(),
            BigInt::from(n).pow(n as u32 - 2),
            "Cayley at n = {n}"
        );
    }

    // Wheel chromatic polynomial x(x-2)^n + (-1)^n x(x-2) at six rational
    // points for n <= 6, plus Stanley's |chi(-1)| = alpha.
    let points = [rat(-1), rat(0), rat2(1, 2), rat(2), rat(3), rat2(7, 3)];
    for n in 1..=6usize {
        let w = graph::wheel(n).unwrap();
        for k in &points {
            let direct = chromatic_eval(&w, k).unwrap();
            let x = k.clone();
            let sign = if n % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            let mut pow = BigRational::one();
            for _ in 0..n {
                pow *= &x - rat(2);
            }
            let formula = &x * pow + sign * &x * (&x - rat(2));
            assert_eq!(direct, formula, "chi(W_{n}) at {k}");
        }
        let alpha = w.count_acyclic_orientations(lims.max_orientation_edges).unwrap();
        let stanley = chromatic_eval(&w, &rat(-1)).unwrap().abs();
        assert_eq!(BigRational::from(alpha), stanley, "Stanley on W_{n}");
    }
    report_line(2, "paper values reproduced", t0);
}

#[test]
fn criterion_03_catalan_suite() {
    let t0 = Instant::now();
    let lims = limits();
    // Closed-form T_{N_n} matches the engine for n <= 6.
    for n in 2..=6usize {
        let formula = catalan_tutte_formula(n).unwrap();
        let engine = tutte_by_subsets(&Matroid::catalan(n, true).unwrap(), &lims).unwrap();
        assert_eq!(formula, engine, "N_{n} closed form vs engine");
    }
    // Values for n <= 8: T(2,0) = T(0,2) = binom(2m, m), T(1,1) = C_n.
    for n in 2..=8usize {
        let formula = catalan_tutte_formula(n).unwrap();
        let m = n - 1;
        assert_eq!(formula.evaluate_int(2, 0), binomial(2 * m, m), "T_N{n}(2,0)");
        assert_eq!(formula.evaluate_int(0, 2), binomial(2 * m, m), "T_N{n}(0,2)");
        assert_eq!(formula.evaluate_int(1, 1), catalan_number(n), "T_N{n}(1,1)");
    }
    // Binomial identity, exactly, for m <= 50.
    for m in 1..=50usize {
        let r = catalan_binomial_identity(m, InstanceRef::name("id")).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "identity at m = {m}");
    }
    assert!(t0.elapsed().as_secs() <= 60, "over the 1 minute budget");
    report_line(3, "catalan suite", t0);
}

#[test]
fn criterion_04_packing_oracle_equivalence() {
    let t0 = Instant::now();
    let lims = limits();
    let mut checked = 0;
    for entry in catalog() {
        let m = &entry.matroid;
        if m.size() > 14 {
            continue;
        }
        let fast = tuttelab::packing::two_disjoint_bases(m).unwrap();
        let brute = two_disjoint_bases_bruteforce(m, &lims).unwrap();
        assert_eq!(fast.holds(), brute, "disjoint verdict on {}", entry.id);
        assert!(!fast.fallback_used, "fallback on {}", entry.id);
        let fast_union = tuttelab::packing::union_of_two_bases(m).unwrap();
        let brute_union = two_disjoint_bases_bruteforce(&m.dual(), &lims).unwrap();
        assert_eq!(fast_union.holds(), brute_union, "union verdict on {}", entry.id);
        let eq = check_inequality_equivalence(m, &lims, InstanceRef::name(&entry.id)).unwrap();
        assert_eq!(eq.verdict, Verdict::Pass, "inequalities (7)-(9) on {}", entry.id);
        checked += 1;
    }
    assert!(checked >= 30);
    println!("  packing verdicts and inequality equivalence on {checked} instances");
    report_line(4, "packing oracle equivalence", t0);
}

#[test]
fn criterion_05_paving_dichotomy() {
    let t0 = Instant::now();
    let mut checked = 0;
    for entry in catalog() {
        let m = &entry.matroid;
        if !m.is_paving() || !m.coloops().is_empty() {
            continue;
        }
        let report = check_paving_dichotomy(m, InstanceRef::name(&entry.id)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "dichotomy on {}", entry.id);
        // Positive witnesses are part of the certificate.
        let cert = packing_certificate(m).unwrap();
        let pair = if 2 * m.full_rank() > m.size() { &cert.union } else { &cert.disjoint };
        let (b1, b2) = pair.witness.expect("dichotomy must produce witnesses");
        assert_eq!(m.rank(b1), m.full_rank());
        assert_eq!(m.rank(b2), m.full_rank());
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} coloopless paving instances");
    println!("  dichotomy verified with witnesses on {checked} instances");
    report_line(5, "paving dichotomy", t0);
}

#[test]
fn criterion_06_family_inequality_and_basic22() {
    let t0 = Instant::now();
    let lims = limits();
    let a_values = [rat(2), rat2(5, 2), rat(3), rat(4)];
    let mut positive = 0;
    for entry in catalog() {
        let m = &entry.matroid;
        let cert = packing_certificate(m).unwrap();
        if cert.hypothesis_holds() {
            positive += 1;
            for a in &a_values {
                let r = check_family_inequality_with(
                    m,
                    a,
                    &cert,
                    &lims,
                    InstanceRef::name(&entry.id),
                )
                .unwrap();
                assert_eq!(r.verdict, Verdict::Pass, "{} at a = {a}", entry.id);
            }
        }
        // Theorem basic_2_2 on loopless coloopless instances:
        // max{T(4,0), T(0,4)} >= T(2,2).
        if m.loops().is_empty() && m.coloops().is_empty() {
            let counts = corank_nullity_counts(m, &lims).unwrap();
            let t40 = evaluate_from_counts(&counts, &rat(4), &rat(0));
            let t04 = evaluate_from_counts(&counts, &rat(0), &rat(4));
            let t22 = evaluate_from_counts(&counts, &rat(2), &rat(2));
            assert!(t40.max(t04) >= t22, "basic_2_2 on {}", entry.id);
            assert_eq!(
                evaluate_from_counts(&counts, &rat(2), &rat(2)),
                BigRational::from(BigInt::one() << m.size()),
                "T(2,2) = 2^m on {}",
                entry.id
            );
        }
    }
    assert!(positive >= 25, "only {positive} positively certified instances");
    println!("  family inequality at 4 a-values on {positive} instances");
    report_line(6, "family inequality and basic_2_2", t0);
}

#[test]
fn criterion_07_sturm_convexity() {
    let t0 = Instant::now();
    let lims = limits();
    let p_values = [rat2(1, 2), rat(1), rat(2), rat(3), rat2(7, 2)];
    let mut checked = 0;
    for entry in catalog() {
        let m = &entry.matroid;
        if !m.is_paving() || !m.coloops().is_empty() {
            continue;
        }
        let poly = lab::tutte_auto(m, &lims).unwrap();
        let dual_poly = tutte_by_subsets(&m.dual(), &lims).unwrap();
        for p in &p_values {
            let r = check_segment_convexity(&poly, p, ConvexityMethod::ExactSturm).unwrap();
            assert!(r.convex, "{} not certified convex at p = {p}", entry.id);
            // The corollary: the dual is convex too.
            let rd = check_segment_convexity(&dual_poly, p, ConvexityMethod::ExactSturm).unwrap();
            assert!(rd.convex, "dual of {} not convex at p = {p}", entry.id);
        }
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} coloopless paving instances");

    // The standing non-convexity witness U_{1,2} + U_{0,1}: quadrant probe
    // flags it while every segment stays convex.
    let witness = Matroid::direct_sum(&[
        Matroid::uniform(1, 2).unwrap(),
        Matroid::uniform(0, 1).unwrap(),
    ])
    .unwrap();
    let wpoly = lab::tutte_auto(&witness, &lims).unwrap();
    for p in &p_values {
        let r = check_segment_convexity(&wpoly, p, ConvexityMethod::ExactSturm).unwrap();
        assert!(r.convex, "witness must stay segment-convex at p = {p}");
    }
    let probe =
        quadrant_convexity_probe(&wpoly, &rat(2), 8, InstanceRef::name("u12+u01")).unwrap();
    assert_eq!(probe.verdict, Verdict::Fail, "probe must flag y(x+y)");
    println!("  sturm-certified convexity on {checked} instances and their duals");
    report_line(7, "segment convexity", t0);
}

#[test]
fn criterion_08_conjecture_harness() {
    let t0 = Instant::now();
    let lims = limits();
    // (a) Built-in families at their listed parameter ranges.
    let mut corpus = family_range_corpus("wheel", 2, 8).unwrap();
    corpus.extend(family_range_corpus("whirl", 2, 8).unwrap());
    corpus.extend(family_range_corpus("Knm", 2, 5).unwrap());
    corpus.extend(family_range_corpus("Kn", 3, 6).unwrap());
    corpus.extend(family_range_corpus("cycle", 2, 8).unwrap());
    corpus.extend(family_range_corpus("tree", 1, 6).unwrap());
    corpus.extend(family_range_corpus("lattice", 2, 3).unwrap());
    for n in 2..=7usize {
        corpus.push((format!("catalan:{n}"), Matroid::catalan(n, false).unwrap()));
        corpus.push((format!("catalan:{n},trimmed"), Matroid::catalan(n, true).unwrap()));
    }
    for r in 0..=4usize {
        for n in r..=8usize {
            corpus.push((format!("uniform:{r},{n}"), Matroid::uniform(r, n).unwrap()));
        }
    }
    corpus.push(("fano".into(), catalog::fano()));
    corpus.push(("dual(fano)".into(), catalog::fano().dual()));
    let family_count = corpus.len();
    let reports = conjecture_search(&corpus, &lims).unwrap();
    for r in &reports {
        assert_ne!(r.verdict, Verdict::Fail, "counterexample flagged: {}", r.to_json_line());
    }

    // (b) All connected multigraphs with at most 9 edges.
    let mg = multigraph_corpus(9).unwrap();
    let mg_count = mg.len();
    let reports = conjecture_search(&mg, &lims).unwrap();
    let mut qualified = 0;
    for r in &reports {
        assert_ne!(r.verdict, Verdict::Fail, "counterexample flagged: {}", r.to_json_line());
        if r.verdict == Verdict::Pass {
            qualified += 1;
        }
    }
    assert!(t0.elapsed().as_secs() <= 1800, "over the 30 minute budget");
    println!(
        "  zero counterexamples over {family_count} family instances and {mg_count} multigraphs ({qualified} qualified)"
    );
    report_line(8, "conjecture harness", t0);
}

#[test]
fn criterion_09_petersen_bounds() {
    let t0 = Instant::now();
    let report = cubic_girth5_bounds(
        &graph::petersen(),
        128,
        &limits(),
        InstanceRef::name("petersen"),
    )
    .unwrap();
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.values);
    assert_eq!(report.values["tau"], "2000");
    report_line(9, "petersen girth-5 bounds", t0);
}

#[test]
fn criterion_10_coefficient_identities_and_failure_case() {
    let t0 = Instant::now();
    let lims = limits();
    for entry in catalog() {
        let m = &entry.matroid;
        let poly = lab::tutte_auto(m, &lims).unwrap();
        let cert = packing_certificate(m).unwrap();
        let hint = PackingHint {
            two_disjoint_bases: cert.disjoint.holds(),
            union_of_two_bases: cert.union.holds(),
        };
        let report =
            check_coefficient_relations(&poly, m, Some(hint), InstanceRef::name(&entry.id));
        assert_eq!(report.verdict, Verdict::Pass, "relations on {}", entry.id);
    }

    // The loop + isthmus failure reproduces exactly: T = xy.
    let li = catalog::loop_isthmus();
    let poly = lab::tutte_auto(&li, &lims).unwrap();
    assert_eq!(poly, TuttePolynomial::monomial(1, 1));
    let mw = check_merino_welsh(&li, &lims, InstanceRef::name("loop-isthmus")).unwrap();
    assert_eq!(mw.verdict, Verdict::Fail);
    assert_eq!(mw.values["t20"], "0");
    assert_eq!(mw.values["t02"], "0");
    assert_eq!(mw.values["t11"], "1");
    // Eq (2) failure consistency: T(2,0) T(0,2) = 0 < 1 = T(1,1)^2.
    let pts = conjecture_points(&li, &lims).unwrap();
    assert!(pts.t20 * pts.t02 < &pts.t11 * &pts.t11);
    assert!(pts.t11.is_one());
    assert!(!BigRational::zero().is_one());
    report_line(10, "coefficient identities and failure case", t0);
}
