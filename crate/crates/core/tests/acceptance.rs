//! Acceptance gate. Every criterion prints one `PASS`/`FAIL` line; the test
//! fails if any criterion fails. Thresholds are pinned below.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use laurent_cf::cf::{certify_by_doubling, continuant, expand, expand_series, running_max, Precision};
use laurent_cf::laurent::{
    CoefficientSource, ConstantSource, FiniteSource, RationalFunctionSource, TruncatedSeries,
};
use laurent_cf::theorem::{r1_rprime1, ClosedFormContext, IdentityId};
use laurent_cf::word::{word_prefix, LengthSeq};
use laurent_cf::{theta_source, CfExpansion, Poly, Rat};

/// Quotients a_1..a_28: the n = 6 block of the closed form ends at a_28.
const DEPTH_TERMS: usize = 28;
const DEPTH_N: usize = 6;
const START_PRECISION: usize = 64;
const PRECISION_CAP: usize = 1 << 20;

const E0_BUDGET: Duration = Duration::from_secs(1);
const DEPTH_BUDGET: Duration = Duration::from_secs(60);
const IDENTITY_BUDGET: Duration = Duration::from_secs(30);

const CLOSED_FORM_IDENTITY_N_MAX: usize = 10;
const MEASURE_LOW: f64 = 2.95;
const MEASURE_HIGH: f64 = 3.0;
const PROPERTY_CASES: u32 = 256;
const MIN_PROPERTY_CASES: u32 = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn theta() -> Arc<dyn CoefficientSource> {
    Arc::new(theta_source())
}

/// The depth-6 expansion, with the time it took to build.
fn depth_expansion() -> &'static (CfExpansion, Duration) {
    static E: OnceLock<(CfExpansion, Duration)> = OnceLock::new();
    E.get_or_init(|| {
        let start = Instant::now();
        let e = certify_by_doubling(theta(), DEPTH_TERMS, START_PRECISION, PRECISION_CAP)
            .expect("depth-6 expansion");
        (e, start.elapsed())
    })
}

fn frac_poly(c: &[(i64, i64)]) -> Poly {
    Poly::from_coeffs(c.iter().map(|&(n, d)| Rat::frac(n, d)).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, took: Duration) -> Result<(), String> {
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

fn criterion_1_e0() -> Outcome {
    let start = Instant::now();
    let s = TruncatedSeries::from_source(theta(), 30).map_err(|e| e.to_string())?;
    let e = expand_series(&s, 4).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let want = [
        frac_poly(&[(-2, 1), (1, 1)]),
        frac_poly(&[(1, 4), (1, 2)]),
        frac_poly(&[(76, 25), (8, 5)]),
        frac_poly(&[(25, 24), (-125, 48)]),
    ];
    ensure(e.certified() >= 4, || format!("only {} certified", e.certified()))?;
    ensure(e.partial_quotients() == want, || {
        format!("got {:?}", e.partial_quotients())
    })?;
    within(E0_BUDGET, took)?;
    Ok(format!("a_1..a_4 exact, {took:?}"))
}

fn criterion_2_a5_a6() -> Outcome {
    let start = Instant::now();
    let s = TruncatedSeries::from_source(theta(), 30).map_err(|e| e.to_string())?;
    let e = expand_series(&s, 6).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let a5 = Poly::from_ints(&[2, 1, 1]).scale(&Rat::frac(144, 625));
    let a6 = Poly::from_ints(&[-1, 1]).scale(&Rat::frac(625, 528));
    ensure(e.certified() >= 6, || format!("only {} certified", e.certified()))?;
    ensure(e.a(5).ok() == Some(&a5), || format!("a_5 = {:?}", e.a(5)))?;
    ensure(e.a(6).ok() == Some(&a6), || format!("a_6 = {:?}", e.a(6)))?;
    within(E0_BUDGET, took)?;
    Ok(format!("a_5, a_6 exact, {took:?}"))
}

fn criterion_3_theorem_depth() -> Outcome {
    let (e, build) = depth_expansion();
    let start = Instant::now();
    let ctx = ClosedFormContext::new();
    let mut max_deg = 0;
    for n in 1..=DEPTH_N {
        let c = ctx.check_quadruple(n, e).map_err(|e| e.to_string())?;
        ensure(c.ok, || c.to_string())?;
        let q = ctx.quadruple(n).map_err(|e| e.to_string())?;
        max_deg = max_deg.max(q.a1.degree().unwrap_or(0));
    }
    let took = *build + start.elapsed();
    within(DEPTH_BUDGET, took)?;
    let precision = match e.precision() {
        Precision::Truncated(n) => n,
        Precision::Exact => 0,
    };
    Ok(format!(
        "(E_n) exact for n <= {DEPTH_N}; max quotient degree {max_deg}, precision {precision}, {took:?}"
    ))
}

fn criterion_4_mu() -> Outcome {
    let (e, _) = depth_expansion();
    let mu4 = e.mu(4).map_err(|e| e.to_string())?;
    let mu8 = e.mu(8).map_err(|e| e.to_string())?;
    ensure(*mu4 == Rat::frac(-25, 12), || format!("mu_4 = {mu4}"))?;
    ensure(*mu8 == Rat::frac(-25, 32), || format!("mu_8 = {mu8}"))?;
    Ok("mu_4 = -25/12, mu_8 = -25/32".into())
}

fn criterion_5_convergents() -> Outcome {
    let (e, _) = depth_expansion();
    let ctx = ClosedFormContext::new();
    for n in 1..=DEPTH_N {
        let c4 = e.convergent(4 * n).map_err(|e| e.to_string())?;
        let s = ctx.s_poly(n).map_err(|e| e.to_string())?;
        ensure(c4.y_star == s, || format!("y*_{} != S_{n}", 4 * n))?;
        let c6 = e.convergent(4 * n + 2).map_err(|e| e.to_string())?;
        let sp = ctx.sprime_poly(n).map_err(|e| e.to_string())?;
        ensure(c6.y_star == sp, || format!("y*_{} != S'_{n}", 4 * n + 2))?;
    }
    let (r1, r1p) = r1_rprime1();
    let x4 = e.convergent(4).map_err(|e| e.to_string())?.x_star;
    let x6 = e.convergent(6).map_err(|e| e.to_string())?.x_star;
    ensure(x4 == r1, || format!("x*_4 = {x4}"))?;
    ensure(x6 == r1p, || format!("x*_6 = {x6}"))?;
    Ok(format!("S_n, S'_n for n <= {DEPTH_N}; R_1, R'_1"))
}

fn criterion_6_identities() -> Outcome {
    let (e, _) = depth_expansion();
    let start = Instant::now();
    let ctx = ClosedFormContext::new();
    let mut count = 0;
    for n in 1..=CLOSED_FORM_IDENTITY_N_MAX {
        let ids: &[IdentityId] = if n >= 2 {
            &[IdentityId::Eq15, IdentityId::Eq26]
        } else {
            &[IdentityId::Eq15]
        };
        for &id in ids {
            let c = ctx.check_identity(id, n, None).map_err(|e| e.to_string())?;
            ensure(c.ok, || c.to_string())?;
            count += 1;
        }
    }
    for id in [IdentityId::Eq8, IdentityId::I, IdentityId::III] {
        let reachable: Vec<usize> = (id.min_n()..)
            .take_while(|&n| id.depth_needed(n) <= e.certified())
            .collect();
        ensure(!reachable.is_empty(), || format!("{id} unreachable"))?;
        for n in reachable {
            let c = ctx.check_identity(id, n, Some(e)).map_err(|e| e.to_string())?;
            ensure(c.ok, || c.to_string())?;
            count += 1;
        }
    }
    let took = start.elapsed();
    within(IDENTITY_BUDGET, took)?;
    Ok(format!("{count} identity instances exact, {took:?}"))
}

fn criterion_7_measure() -> Outcome {
    let (e, _) = depth_expansion();
    let est = e.measure_estimate().map_err(|e| e.to_string())?;
    let max = running_max(&est).ok_or("no estimates")?.to_f64();
    ensure((MEASURE_LOW..=MEASURE_HIGH).contains(&max), || {
        format!("running max {max} outside [{MEASURE_LOW}, {MEASURE_HIGH}]")
    })?;
    let at24 = est
        .iter()
        .find(|(n, _)| *n == 24)
        .map(|(_, v)| v.clone())
        .ok_or("no estimate at n = 24")?;
    let want = Rat::from(2) + Rat::frac(287, 289);
    ensure(at24 == want, || format!("nu_24 = {at24}"))?;
    Ok(format!("running max {max}, nu_24 = {at24}"))
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let config = Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new(config);
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))?;
    Ok(PROPERTY_CASES)
}

fn random_expansion() -> impl Strategy<Value = CfExpansion> {
    prop_oneof![
        // random word over {1, 2}
        prop::collection::vec((1i64..=2).prop_map(Rat::from), 4..24),
        // random small integers
        prop::collection::vec((-3i64..=3).prop_map(Rat::from), 2..16),
    ]
    .prop_map(|coeffs: Vec<Rat>| {
        let s = TruncatedSeries::from_coeffs(coeffs).unwrap();
        expand_series(&s, 64).unwrap()
    })
}

fn check_determinants(e: &CfExpansion) -> Result<(), TestCaseError> {
    for n in 1..=e.len() {
        let det = &(e.x(n).unwrap() * e.y(n - 1).unwrap()) - &(e.x(n - 1).unwrap() * e.y(n).unwrap());
        let sign = if n % 2 == 1 { 1 } else { -1 };
        prop_assert_eq!(det, Poly::constant(Rat::from(sign)));
    }
    Ok(())
}

fn check_coprime(e: &CfExpansion, n: usize) -> Result<(), TestCaseError> {
    prop_assert_eq!(e.x(n).unwrap().gcd(e.y(n).unwrap()).unwrap(), Poly::one());
    Ok(())
}

fn check_delta(e: &CfExpansion, m: usize, n: usize) -> Result<(), TestCaseError> {
    let c = continuant(&e.partial_quotients()[m + 1..n]);
    let want = if m.is_multiple_of(2) { c } else { -c };
    prop_assert_eq!(e.delta(m, n).unwrap(), want);
    Ok(())
}

fn check_mu(e: &CfExpansion) -> Result<(), TestCaseError> {
    let mut prod = Rat::one();
    for n in 1..=e.len() {
        prod = prod * e.lambda(n).unwrap();
        prop_assert_eq!(e.mu(n).unwrap(), &prod);
        prop_assert_eq!(e.y(n).unwrap().leading_coeff().unwrap(), &prod);
    }
    Ok(())
}

fn word_by_recursion(n: usize) -> Vec<u8> {
    match n {
        0 => vec![],
        1 => vec![1],
        _ => {
            let (prev, prev2) = (word_by_recursion(n - 1), word_by_recursion(n - 2));
            let mut w = prev.clone();
            w.push(2);
            w.extend(&prev2);
            w.push(2);
            w.extend(&prev);
            w
        }
    }
}

fn criterion_8_properties() -> Outcome {
    let (theta_e, _) = depth_expansion();
    let mut report = Vec::new();
    let len = theta_e.len();

    // Enumerated over the theta expansion first.
    check_determinants(theta_e).map_err(|e| format!("theta determinants: {e}"))?;
    check_mu(theta_e).map_err(|e| format!("theta mu: {e}"))?;
    for n in 1..=len {
        check_coprime(theta_e, n).map_err(|e| format!("theta coprime n={n}: {e}"))?;
    }
    for n in 2..=12 {
        for m in 1..n {
            check_delta(theta_e, m, n).map_err(|e| format!("theta delta({m},{n}): {e}"))?;
        }
    }

    let cases = run_property("determinant", random_expansion(), |e| check_determinants(&e))?;
    report.push(format!("determinant {cases}"));

    let cases = run_property("coprimality", random_expansion(), |e| {
        (1..=e.len()).try_for_each(|n| check_coprime(&e, n))
    })?;
    report.push(format!("coprime {cases}"));

    let cases = run_property("delta-continuant", (random_expansion(), 2usize..=len, any::<prop::sample::Index>()), |(e, n, idx)| {
        for m in 1..e.len() {
            for k in m + 1..=e.len() {
                check_delta(&e, m, k)?;
            }
        }
        // sampled pair on the deep theta expansion
        let m = 1 + idx.index(n - 1);
        check_delta(theta_e, m, n)
    })?;
    report.push(format!("delta {cases}"));

    let cases = run_property("mu-product", random_expansion(), |e| check_mu(&e))?;
    report.push(format!("mu {cases}"));

    let cases = run_property("prefix-stability", 4usize..200, |n| {
        let s = TruncatedSeries::from_source(theta(), n).unwrap();
        let a = expand_series(&s, 20).unwrap();
        let b = expand_series(&s.extend(2 * n).unwrap(), 20).unwrap();
        let k = a.certified().min(b.certified());
        prop_assert_eq!(&a.partial_quotients()[..k], &b.partial_quotients()[..k]);
        prop_assert_eq!(&a.partial_quotients()[..k], &theta_e.partial_quotients()[..k.min(len)]);
        Ok(())
    })?;
    report.push(format!("stability {cases}"));

    let words: Vec<Vec<u8>> = (0..=12).map(word_by_recursion).collect();
    let cases = run_property("word-laws", (2usize..=12, 0.0f64..=1.0), |(n, frac)| {
        let w = &words[n];
        let seq = LengthSeq::new();
        prop_assert_eq!(w.len(), seq.get_usize(n).unwrap());
        let k = (w.len() as f64 * frac) as usize;
        prop_assert_eq!(word_prefix(k), w[..k].to_vec());
        prop_assert!((seq.get(n) + seq.get(n - 1)).bit(0));
        Ok(())
    })?;
    report.push(format!("word {cases}"));

    let ctx = ClosedFormContext::new();
    let cases = run_property("r-s-L", 1usize..=300, |n| {
        let r = ctx.r(n).unwrap();
        let l = Rat::from(num_bigint::BigInt::from(ctx.big_l(n).unwrap()));
        prop_assert_eq!(r.clone() * Rat::frac(25, 4), l);
        let (mut a, mut b) = (Rat::frac(12, 25), Rat::frac(32, 25));
        for _ in 1..n {
            let next = Rat::from(2) * &b + &a;
            a = b;
            b = next;
        }
        prop_assert_eq!(&a, &r);
        prop_assert_eq!(ctx.s(n).unwrap(), a.clone() + b);
        if 4 * n + 2 <= theta_e.certified() {
            // third route, through the expansion
            prop_assert_eq!(-(theta_e.mu(4 * n).unwrap().recip().unwrap()), a);
        }
        Ok(())
    })?;
    report.push(format!("r/s/L {cases}"));

    ensure(PROPERTY_CASES >= MIN_PROPERTY_CASES, || "too few cases".into())?;
    Ok(report.join(", "))
}

fn criterion_9_rational_regression() -> Outcome {
    let inputs: Vec<(Poly, Poly)> = vec![
        (Poly::one(), Poly::from_ints(&[-2, 1])),
        (Poly::from_ints(&[1, 2, 2, 1]), Poly::x_pow(4)),
        (r1_rprime1().0, Poly::from_ints(&[0, 0, -1, 0, 1])),
        (r1_rprime1().1, &Poly::x_pow(7) - &Poly::one()),
        (
            frac_poly(&[(3, 7), (-1, 2), (5, 3)]),
            frac_poly(&[(1, 1), (0, 1), (2, 5), (-4, 9), (1, 1)]),
        ),
    ];
    for (num, den) in &inputs {
        let e = expand(num, den, Precision::Exact, 1000).map_err(|e| e.to_string())?;
        ensure(e.terminated(), || format!("{num} / {den} did not terminate"))?;
        let k = e.len();
        let (x, y) = (e.x(k).unwrap(), e.y(k).unwrap());
        ensure(num * y == den * x, || format!("{num} / {den} reconstructs to {x} / {y}"))?;
    }
    // Sources that know their rational value come back as finite, terminated expansions.
    let sources: Vec<Arc<dyn CoefficientSource>> = vec![
        Arc::new(ConstantSource(Rat::one())),
        Arc::new(FiniteSource(vec![Rat::from(1), Rat::from(2), Rat::from(2), Rat::from(1)])),
        Arc::new(
            RationalFunctionSource::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[3, 0, -1, 1]))
                .map_err(|e| e.to_string())?,
        ),
    ];
    for src in sources {
        let (num, den) = src.as_rational().ok_or("no rational form")?;
        let e = certify_by_doubling(Arc::clone(&src), 10, 4, 1 << 12).map_err(|e| e.to_string())?;
        ensure(e.terminated() && e.len() < 10, || format!("{src:?} not finite"))?;
        let k = e.len();
        ensure(&num * e.y(k).unwrap() == &den * e.x(k).unwrap(), || {
            format!("{src:?} reconstruction mismatch")
        })?;
    }
    Ok(format!("{} exact inputs and 3 rational sources terminate and reconstruct", inputs.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 (E_0) reproduction", criterion_1_e0),
        ("2 a_5, a_6 reproduction", criterion_2_a5_a6),
        ("3 theorem at depth n <= 6", criterion_3_theorem_depth),
        ("4 mu milestones", criterion_4_mu),
        ("5 convergent identification", criterion_5_convergents),
        ("6 identity suite", criterion_6_identities),
        ("7 irrationality-measure estimate", criterion_7_measure),
        ("8 property suites", criterion_8_properties),
        ("9 rational-input regression", criterion_9_rational_regression),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

/// Stretch goal beyond the gate: the n = 7 block (precision 8192).
#[test]
#[ignore = "slow; run with --ignored"]
fn theorem_holds_for_n_seven() {
    let e = certify_by_doubling(theta(), 32, START_PRECISION, PRECISION_CAP).unwrap();
    let ctx = ClosedFormContext::new();
    for n in 1..=7 {
        assert!(ctx.check_quadruple(n, &e).unwrap().ok, "n = {n}");
    }
}
