//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use polycount_core::asymptotics::{convergence_report, AsymptoticConstants, Kind};
use polycount_core::automata::{generic_language, rooted_wheel_series_automaton};
use polycount_core::closed_form;
use polycount_core::halfplane::{wheels_not_p3_series, wheels_not_p3_series_without};
use polycount_core::oracle::{brute_force_counts, fixed_pair_counts};
use polycount_core::polytopes::{
    achiral_report, coefficient_table, coefficient_table_with_stats, extraction, oriented_polytope_series,
    oriented_polytope_series_printed, polytope_series,
};
use polycount_core::series::TruncatedSeries;
use polycount_core::verify::{run_verification, Status, REGRESSION_CONFIGURATION};
use polycount_core::wheels::{
    oriented_wheel_series, oriented_wheel_series_integral, wheel_series, wheel_series_integral, WheelSeriesBundle,
};
use polycount_core::Exec;

/// Relative error of `c(d+3,d)·d/γ^d` against its limit at `d = 200`,
/// measured at 0.01211 and frozen with a small margin.
const TOLERANCE_AT_200: f64 = 0.0125;
/// The relative error decays like `a/d`; `d · error` was measured between
/// 2.33 (d = 50) and 2.45 (d = 1000).
const ERROR_TIMES_D: f64 = 2.5;
const CONVERGENCE_MAX_D: usize = 1000;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ints(s: &TruncatedSeries, lo: usize, hi: usize) -> Vec<i64> {
    (lo..=hi).map(|i| s.coeff(i).to_integer().to_i64().expect("small coefficient")).collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion_1() -> Outcome {
    let expected = vec![1, 7, 31, 116, 379, 1133, 3210];
    let (got, took) = timed(|| ints(&polytope_series(11).unwrap(), 5, 11));
    outcome(
        got == expected && took < Duration::from_secs(1),
        format!("P x^5..x^11 = {got:?} in {:.3}s", took.as_secs_f64()),
    )
}

fn criterion_2() -> Outcome {
    let expected = vec![1, 7, 38, 170, 617, 1979, 5859];
    let got = ints(&oriented_polytope_series(11).unwrap(), 5, 11);
    let printed_form = ints(&oriented_polytope_series_printed(11).unwrap(), 5, 11);
    let mut detail = format!("P+ x^5..x^11 = {got:?}, expected {expected:?}");
    if got != expected {
        detail += &format!(
            "; the counts follow the brute-force oracle, while the printed closed form expands to {printed_form:?} \
             because its W+_notP3 term lacks x^8/((1-x)^4(1+x)^3)"
        );
    }
    outcome(got == expected, detail)
}

fn criterion_3() -> Outcome {
    let ((identity, nonneg, oracle_direct, printed_consistent), took) = timed(|| {
        let n = 200;
        let e = extraction::extract(n, Exec::Parallel).unwrap();
        let rational = closed_form::achiral().expand_integers(n).unwrap();
        let identity = (0..=n).all(|i| &e.p[i] * 2u32 - &e.p_plus[i] == rational[i]);
        let nonneg = coefficient_table(497, Exec::Parallel)
            .map(|rows| rows.iter().all(|r| !r.c.is_negative() && !r.c_plus.is_negative() && !r.c_minus.is_negative()))
            .unwrap_or(false);
        let oracle_direct = (5..=10).all(|m| {
            let o = brute_force_counts(m, Exec::Parallel);
            o.achiral_direct == o.c_minus && BigInt::from(o.c_minus) == rational[m as usize]
        });
        let printed = closed_form::achiral_printed().expand(n).unwrap();
        let p = TruncatedSeries::from_integers(&e.p, n);
        let two = num_rational::BigRational::from_integer(2.into());
        let printed_consistent = &p.scale(&two) - &oriented_polytope_series_printed(n).unwrap() == printed;
        (identity, nonneg, oracle_direct, printed_consistent)
    });
    outcome(
        identity && nonneg && oracle_direct && took < Duration::from_secs(30),
        format!(
            "2P - P+ = P- to x^200: {identity}; nonnegative integers to x^500: {nonneg}; \
             directly counted achiral diagrams agree for n <= 10: {oracle_direct}; \
             printed closed forms mutually consistent: {printed_consistent}; {:.2}s",
            took.as_secs_f64()
        ),
    )
}

fn criterion_4() -> Outcome {
    let (result, took) = timed(|| {
        let p = polytope_series(12).unwrap();
        let pp = oriented_polytope_series(12).unwrap();
        let mut bad = Vec::new();
        for n in 5..=10u32 {
            let o = brute_force_counts(n, Exec::Parallel);
            let i = n as usize;
            let series = (ints(&p, i, i)[0], ints(&pp, i, i)[0]);
            let series = (series.0 as u64, series.1 as u64, (2 * series.0 - series.1) as u64);
            if (o.c, o.c_plus, o.c_minus) != series {
                bad.push(format!("n={n}: oracle {:?} series {series:?}", (o.c, o.c_plus, o.c_minus)));
            }
        }
        let b = WheelSeriesBundle::compute(8);
        let mut cells = 0;
        for n in 1..=8u32 {
            for (k, f) in fixed_pair_counts(n, Exec::Parallel) {
                cells += 1;
                let at = |s: &polycount_core::series::BivariateSeries| s.coeff(n as usize, k).to_integer().to_u64();
                if (Some(f.rooted), Some(f.rotation_pairs), Some(f.reflection_pairs))
                    != (at(&b.rooted), at(&b.rotation), at(&b.reflection))
                {
                    bad.push(format!("fixed pairs n={n} k={k}"));
                }
            }
        }
        (bad, cells)
    });
    let (bad, cells) = result;
    outcome(
        bad.is_empty() && took < Duration::from_secs(300),
        if bad.is_empty() {
            format!("P, P+, P- agree for 5 <= n <= 10; R, R+, R- agree on {cells} (n,k) cells; {:.2}s", took.as_secs_f64())
        } else {
            bad.join("; ")
        },
    )
}

fn criterion_5() -> Outcome {
    let n = 30;
    let r = rooted_wheel_series_automaton(n).unwrap() == closed_form::rooted(n);
    let l = generic_language(1, 0, 1, n).unwrap() == closed_form::l10(n);
    outcome(r && l, format!("R automaton = closed form: {r}; L10 automaton = closed form: {l} (order {n})"))
}

fn criterion_6() -> Outcome {
    let n = 50;
    let w = wheel_series_integral(n).unwrap() == wheel_series(n);
    let wp = oriented_wheel_series_integral(n).unwrap() == oriented_wheel_series(n);
    outcome(
        w && wp,
        format!(
            "W integral = closed form: {w}; W+ integral = closed form: {wp} (order {n}; cubic logarithm read as \
             ln(1 - 2x^3e/(1 - 2x^e)^2), the (1 - 2x)^2e reading gives 951 at x^10 against 947 counted)"
        ),
    )
}

fn criterion_7() -> Outcome {
    let n = 50;
    let unoriented = wheels_not_p3_series(false, n) == closed_form::wheels_not_p3().expand(n).unwrap();
    let oriented_sum = wheels_not_p3_series(true, n);
    let printed = closed_form::oriented_wheels_not_p3_printed().expand(n).unwrap();
    let oriented = oriented_sum == printed;
    let rederived = oriented_sum == closed_form::oriented_wheels_not_p3().expand(n).unwrap();
    let regression = wheels_not_p3_series_without(false, n, &[REGRESSION_CONFIGURATION])
        != closed_form::wheels_not_p3().expand(n).unwrap();
    let mut detail = format!(
        "unoriented = printed: {unoriented}; oriented = printed: {oriented}; \
         dropping configuration {} changes the series: {regression}",
        REGRESSION_CONFIGURATION + 1
    );
    if !oriented {
        let i = oriented_sum.first_difference_with(&printed).unwrap();
        detail += &format!(
            "; oriented sum first differs at x^{i} ({} vs {}), equals the printed form plus x^8/((1-x)^4(1+x)^3): {rederived}",
            oriented_sum.coeff(i),
            printed.coeff(i)
        );
    }
    outcome(unoriented && oriented && regression, detail)
}

fn criterion_8() -> Outcome {
    let k = AsymptoticConstants::get();
    let consts = (k.gamma - 2.839).abs() <= 0.001
        && (k.lambda - 1.6850).abs() <= 0.0005
        && (k.big_c - 12.1278).abs() <= 0.001
        && (k.big_c_prime - 0.0346).abs() <= 0.001;
    let rows = coefficient_table(20, Exec::Parallel).unwrap();
    let frac = |d: usize| {
        let r = &rows[d - 2];
        r.c_minus.to_f64().unwrap() / r.c.to_f64().unwrap()
    };
    let (f10, f20) = (frac(10), frac(20));
    outcome(
        consts && f10 < 0.10 && f20 < 0.001,
        format!(
            "gamma={:.6} lambda={:.6} C={:.6} C'={:.6}; c-/c = {f10:.5} at d=10, {f20:.3e} at d=20",
            k.gamma, k.lambda, k.big_c, k.big_c_prime
        ),
    )
}

fn criterion_9() -> Outcome {
    let r = convergence_report(CONVERGENCE_MAX_D, Exec::Parallel).unwrap();
    let rows: Vec<_> = r.rows_of(Kind::Combinatorial).filter(|row| row.d >= 50).collect();
    let monotone = rows.windows(2).all(|w| w[1].ratio > w[0].ratio && w[1].ratio < 1.0);
    let at_200 = rows.iter().find(|row| row.d == 200).unwrap().relative_error;
    let worst = rows.iter().map(|row| row.d as f64 * row.relative_error).fold(0.0, f64::max);
    outcome(
        monotone && at_200 <= TOLERANCE_AT_200 && worst <= ERROR_TIMES_D,
        format!(
            "ratio increases to 1 for 50 <= d <= {CONVERGENCE_MAX_D}: {monotone}; relative error {at_200:.5} at d=200 \
             (tolerance {TOLERANCE_AT_200}); max d*error {worst:.3} (bound {ERROR_TIMES_D})"
        ),
    )
}

fn criterion_10() -> Outcome {
    let ((rows, stats), took) = timed(|| coefficient_table_with_stats(5000, Exec::Parallel).unwrap());
    let ladder = [625usize, 1250, 2500, 5000];
    let ops: Vec<u64> = ladder
        .iter()
        .map(|&n| if n == 5000 { stats.operations } else { coefficient_table_with_stats(n, Exec::Parallel).unwrap().1.operations })
        .collect();
    let ratios: Vec<f64> = ops.windows(2).map(|w| w[1] as f64 / w[0] as f64).collect();
    let sub_quadratic = ratios.iter().all(|&x| x > 1.0 && x < 3.0);
    outcome(
        rows.len() == 4999 && took < Duration::from_secs(60) && sub_quadratic,
        format!(
            "N=5000 in {:.2}s; operation counts {ops:?} over N={ladder:?}, doubling ratios {:?}",
            took.as_secs_f64(),
            ratios.iter().map(|x| format!("{x:.3}")).collect::<Vec<_>>()
        ),
    )
}

fn criterion_11() -> Outcome {
    let r = achiral_report(14).unwrap();
    let v = run_verification(8, Exec::Parallel).unwrap();
    let check = v.get("achiral closed form vs identity route").unwrap();
    let stated = check.status == Status::Finding && check.detail.contains("count of record") && v.exit_code() == 0;
    let which = if r.matches_identity() {
        "the closed form expands to the identity route".to_string()
    } else if r.matches_printed_line {
        "the closed form expands to the printed first-terms line".to_string()
    } else {
        format!(
            "the closed form expands to neither: 1,7,24,62,141,287 from x^5, departing from the identity route \
             1,7,24,63,143,293 at x^{}; the printed line carries the closed-form values one power higher from 24 on",
            r.first_difference.unwrap()
        )
    };
    outcome(stated, format!("{which}; verify states it as a finding and exits {}", v.exit_code()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("P first terms", criterion_1),
        ("P+ first terms", criterion_2),
        ("achiral identity and positivity", criterion_3),
        ("oracle equivalence", criterion_4),
        ("automata vs closed forms", criterion_5),
        ("Burnside integral vs closed forms", criterion_6),
        ("P3 configuration sums and regression", criterion_7),
        ("asymptotic constants", criterion_8),
        ("convergence to the leading term", criterion_9),
        ("performance and scaling", criterion_10),
        ("achiral closed form report", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
