//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact integer equality; each line also reports the wall time against its
//! budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use csfkit::bijections::Reading;
use csfkit::verify::{self, CheckResult};

struct Line {
    id: u32,
    what: &'static str,
    budget: Duration,
    ok: bool,
    note: String,
    took: Duration,
}

fn run(id: u32, what: &'static str, budget_secs: u64, f: impl FnOnce() -> csfkit::Result<(bool, String)>) -> Line {
    let start = Instant::now();
    let (ok, note) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let took = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    Line { id, what, budget, ok: ok && took <= budget, note, took }
}

fn summary(c: &CheckResult) -> String {
    let mut s = format!("{} instances, {} failures", c.instances, c.failures);
    if let Some(cx) = &c.counterexample {
        s += &format!(", counterexample {cx}");
    }
    s
}

fn main() -> ExitCode {
    let lines = vec![
        run(1, "X_{K_n} = n! e_n, n <= 6", 1, || {
            let c = verify::complete_graph_law(6)?;
            Ok((c.passed, summary(&c)))
        }),
        run(2, "stable partitions, colourings and edge subsets agree, |U| <= 6", 120, || {
            let c = verify::oracle_triangle(6)?;
            Ok((c.passed, summary(&c)))
        }),
        run(3, "inc(U) e-positive for |U| <= 7, claw negative", 600, || {
            let c = verify::e_positivity(7)?;
            let claw = &c.detail["claw_control"];
            Ok((c.passed, format!("{}, claw min coefficient {} at {}", summary(&c), claw["min_coeff"], claw["witness"])))
        }),
        run(4, "p_k^U equals the correct-sequence sum, |U| <= 5, k <= 5", 120, || {
            let c = verify::power_sums(5, 5)?;
            Ok((c.passed, summary(&c)))
        }),
        run(5, "c_n(inc U) counts Hamiltonian correct sequences, |U| <= 6", 120, || {
            let c = verify::top_coefficient(6)?;
            Ok((c.passed, summary(&c)))
        }),
        run(6, "explicit sets sum to m^U_lambda, |U| <= 5, degree <= 6", 900, || {
            let c = verify::m_sets(5, 6)?;
            let two = &c.detail["two_rows"];
            Ok((
                c.passed,
                format!(
                    "{}, 2^l1^k reading {} (strict {}/{}, non-strict {}/{})",
                    summary(&c),
                    two["matching_reading"],
                    two["strict_matches"],
                    two["instances"],
                    two["non_strict_matches"],
                    two["instances"]
                ),
            ))
        }),
        run(7, "bijections l1k, l2, l21 round-trip, |U| <= 4", 900, || {
            let configs = verify::default_bijection_configs();
            let repaired = verify::bijections(4, &configs, Reading::Repaired)?;
            let printed = verify::bijections(4, &configs, Reading::Printed)?;
            let mut note = format!("repaired: {}", summary(&repaired));
            note += &format!("; printed case analysis: {} of {} configurations fail", printed.failures, configs.len());
            if let Some(cx) = &printed.counterexample {
                note += &format!(", first finding {cx}");
            }
            Ok((repaired.passed, note))
        }),
        run(8, "Cauchy identity |U| <= 4, alpha coefficients |U| <= 3, entries <= 2", 300, || {
            let c = verify::cauchy(4)?;
            let a = verify::alpha_coefficients(3, 2)?;
            Ok((c.passed && a.passed, format!("cauchy {}; alpha {}", summary(&c), summary(&a))))
        }),
        run(9, "sink counts equal e-coefficient sums, |U| <= 5", 60, || {
            let c = verify::sinks(5)?;
            Ok((c.passed, summary(&c)))
        }),
        run(10, "UIO counts are Catalan and (2+2)-, (3+1)-free, n <= 8", 60, || {
            let c = verify::structural(8)?;
            Ok((c.passed, format!("{}, counts {}", summary(&c), c.detail["counts"])))
        }),
    ];
    let mut all = true;
    for l in &lines {
        all &= l.ok;
        println!(
            "criterion {:>2} {} {}: {} [exact, {:.2}s of {}s]",
            l.id,
            if l.ok { "PASS" } else { "FAIL" },
            l.what,
            l.note,
            l.took.as_secs_f64(),
            l.budget.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
