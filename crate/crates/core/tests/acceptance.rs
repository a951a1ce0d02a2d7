//! Acceptance suite. Runs each criterion sequentially so that wall-clock
//! bounds are measured without contention from other tests, prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chebknot::alexander::{torus_knot_n2, torus_link_n2, torus_n2};
use chebknot::chebgen::{
    cheb_recurrence, second_kind_basis, trig_crosscheck, ChebParams, Family,
};
use chebknot::verify::{self, Ranges, Suite, TRIG_TOLERANCE};
use chebknot::{Polynomial, Rational};

use common::{
    first_kind_h, general_rows, monic_kind_k, poly, published_alexander, published_tables,
    second_kind_h, standard_kind_k,
};

type Outcome = Result<(), String>;

fn family_rows(k: u32, h: u32, len: usize) -> Vec<Polynomial> {
    Family::new(k, h).unwrap().sequence().take(len).collect()
}

fn compare(label: &str, got: &[Polynomial], want: &[Polynomial]) -> Outcome {
    for (n, (g, w)) in got.iter().zip(want).enumerate() {
        if g != w {
            return Err(format!("{label} n={n}: got {g:?}, want {w:?}"));
        }
    }
    Ok(())
}

fn golden_tables() -> Outcome {
    for (k, h, rows) in published_tables() {
        let want: Vec<Polynomial> = rows.iter().map(|s| poly(s)).collect();
        compare(&format!("T^({k},{h})"), &family_rows(k, h, 6), &want)?;
        let direct: Vec<Polynomial> = (0..6)
            .map(|n| cheb_recurrence(ChebParams::new(k, h, n).unwrap()))
            .collect();
        compare(&format!("cheb_recurrence({k},{h})"), &direct, &want)?;
        if k == 2 {
            let basis: Vec<Polynomial> =
                (0..6).map(|n| second_kind_basis(h, n).unwrap()).collect();
            compare(&format!("V^({h})"), &basis, &want)?;
        }
    }
    for k in 1..=5 {
        compare(&format!("standard k={k}"), &family_rows(k, 1, 6), &standard_kind_k(k as i64))?;
        compare(&format!("monic k={k}"), &family_rows(k, 2, 6), &monic_kind_k(k as i64))?;
    }
    for h in 1..=5 {
        compare(&format!("first kind h={h}"), &family_rows(1, h, 6), &first_kind_h(h as i64))?;
        let basis: Vec<Polynomial> = (0..6).map(|n| second_kind_basis(h, n).unwrap()).collect();
        compare(&format!("second kind h={h}"), &basis, &second_kind_h(h as i64))?;
    }
    Ok(())
}

fn general_table() -> Outcome {
    for k in 1..=5 {
        for h in 1..=5 {
            let got: Vec<Polynomial> = (0..6)
                .map(|n| cheb_recurrence(ChebParams::new(k, h, n).unwrap()))
                .collect();
            compare(&format!("T^({k},{h})"), &got, &general_rows(k as i64, h as i64))?;
        }
    }
    Ok(())
}

fn suite(s: Suite, ranges: Ranges) -> Outcome {
    let reports = verify::run(s, &ranges).map_err(|e| e.to_string())?;
    for r in &reports {
        if !r.passed() {
            let first = &r.failures[0];
            return Err(format!(
                "{}: {} failure(s), first at {:?}",
                r.identity,
                r.failures.len(),
                first.params
            ));
        }
    }
    Ok(())
}

fn ranges(k_max: u32, h_max: u32, n_max: u32) -> Ranges {
    Ranges { k_max, h_max, n_max, ..Ranges::default() }
}

fn alexander_examples() -> Outcome {
    for (n, want) in published_alexander() {
        let got = torus_n2(n).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("n={n}: got {got:?}, want {want:?}"));
        }
    }
    for n in (1..=99).step_by(2) {
        let d = torus_knot_n2(n).map_err(|e| e.to_string())?;
        if d.eval(&Rational::one()) != Some(Rational::one()) {
            return Err(format!("knot n={n}: value at 1 is not 1"));
        }
    }
    for n in (2..=98).step_by(2) {
        let d = torus_link_n2(n).map_err(|e| e.to_string())?;
        if d.bar() != -&d {
            return Err(format!("link n={n}: not antisymmetric"));
        }
    }
    Ok(())
}

fn trig_bound() -> Outcome {
    suite(Suite::Trig, Ranges { samples: 1000, ..ranges(5, 5, 30) })?;
    for k in 1..=5 {
        for h in 1..=5 {
            let d = trig_crosscheck(ChebParams::new(k, h, 0).unwrap(), 1000);
            if d.is_nan() || d >= TRIG_TOLERANCE {
                return Err(format!("k={k} h={h} n=0: deviation {d:e}"));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        ("golden tables", 1, Box::new(golden_tables)),
        ("generalized table", 1, Box::new(general_table)),
        (
            "triple construction k<=10 h<=10 n<=50",
            10,
            Box::new(|| suite(Suite::RecurrenceVsClosed, ranges(10, 10, 50))),
        ),
        (
            "equidistance k<=10 h<=10 n<=50",
            10,
            Box::new(|| suite(Suite::Equidistance, ranges(10, 10, 50))),
        ),
        (
            "connection h<=10 n<=50",
            5,
            Box::new(|| suite(Suite::Connection, ranges(1, 10, 50))),
        ),
        ("alexander examples", 1, Box::new(alexander_examples)),
        ("skein tower 3<=n<=99", 2, Box::new(|| suite(Suite::Skein, ranges(1, 1, 99)))),
        (
            "bridge t1h/t2h odd n<=99 h<=10",
            10,
            Box::new(|| {
                suite(Suite::BridgeT1h, ranges(1, 10, 99))?;
                suite(Suite::BridgeT2h, ranges(1, 10, 99))
            }),
        ),
        (
            "inverse recipe odd n<=99 h<=5",
            10,
            Box::new(|| suite(Suite::InverseRecipe, ranges(1, 5, 99))),
        ),
        ("trig cross-check k<=5 h<=5 n<=30", 5, Box::new(trig_bound)),
    ];

    let mut failed = 0;
    for (i, (name, limit_s, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let limit = Duration::from_secs(*limit_s);
        let verdict = match outcome {
            Ok(()) if elapsed < limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over {limit_s} s)"),
            Err(msg) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {verdict} {name} [{} ms, limit {limit_s} s]",
            i + 1,
            elapsed.as_millis()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
