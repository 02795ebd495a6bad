//! Acceptance gate: one pass/fail line per criterion, evaluated from a
//! single full suite run.

use hopfcalc::report::{CheckResult, Report, Status};
use hopfcalc::suite::run_suite;

struct Criterion {
    number: usize,
    description: &'static str,
    select: fn(&CheckResult) -> bool,
}

fn starts(c: &CheckResult, prefixes: &[&str]) -> bool {
    prefixes.iter().any(|p| c.check_id.starts_with(p))
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            description: "confluence certified for all five quotient presentations",
            select: |c| c.check_id == "confluence.rules_close",
        },
        Criterion {
            number: 2,
            description: "commutation identities and the coproduct of F, both (p,q) presets",
            select: |c| c.check_id == "fgen.commutation",
        },
        Criterion {
            number: 3,
            description: "F^3 central and (1,1)-primitive",
            select: |c| c.check_id == "fgen.cube_central_primitive",
        },
        Criterion {
            number: 4,
            description: "coradical Hopf subalgebra of dim 18, basis factorization, coideal",
            select: |c| {
                starts(
                    c,
                    &[
                        "presentation.coradical_dim18",
                        "presentation.factorization",
                        "presentation.coideal",
                    ],
                )
            },
        },
        Criterion {
            number: 5,
            description: "both original cubic relations reduce to zero in the quotient",
            select: |c| c.check_id == "presentation.cubic_relations",
        },
        Criterion {
            number: 6,
            description: "quantum sl2 identities, Casimir closed form, nilpotent E",
            select: |c| starts(c, &["qsl2."]),
        },
        Criterion {
            number: 7,
            description: "Casimir minimal polynomial and square-zero ideal generator",
            select: |c| c.check_id == "casimir.min_poly",
        },
        Criterion {
            number: 8,
            description: "small quantum group has dimension 108",
            select: |c| c.check_id == "smallquantum.dim108",
        },
        Criterion {
            number: 9,
            description: "central primitive c and the root-free presentation census",
            select: |c| starts(c, &["central_c.", "rootfree."]),
        },
        Criterion {
            number: 10,
            description: "cleft extension: section, colinearity, coradical inverses",
            select: |c| starts(c, &["cleft."]),
        },
        Criterion {
            number: 11,
            description: "skew-primitive census dims, stable at higher weight",
            select: |c| starts(c, &["primitives."]),
        },
        Criterion {
            number: 12,
            description: "Nichols braiding, kernels, rank sequences, 9-vs-10 adjudicated",
            select: |c| starts(c, &["nichols."]),
        },
        Criterion {
            number: 13,
            description: "cross-field replication over F7 with an F13 smoke test",
            select: |c| c.field == "F7" || c.field == "F13",
        },
        Criterion {
            number: 14,
            description: "all three corrupted presentations fail their designated checks",
            select: |c| starts(c, &["negative."]),
        },
    ]
}

fn evaluate(report: &Report, criterion: &Criterion) -> Result<usize, String> {
    let selected: Vec<&CheckResult> =
        report.checks.iter().filter(|c| (criterion.select)(c)).collect();
    if selected.is_empty() {
        return Err("no checks selected".to_string());
    }
    if !selected.iter().any(|c| c.status == Status::Pass) {
        return Err("no passing check among the selected".to_string());
    }
    let failed: Vec<String> = selected
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} [{}/{}]: {}", c.check_id, c.algebra, c.field, c.details))
        .collect();
    if failed.is_empty() {
        Ok(selected.len())
    } else {
        Err(failed.join("; "))
    }
}

#[test]
fn acceptance() {
    let report = run_suite("*", None, None);
    let mut failures = 0usize;
    for criterion in criteria() {
        match evaluate(&report, &criterion) {
            Ok(n) => println!(
                "criterion {:>2}: PASS ({n} checks) - {}",
                criterion.number, criterion.description
            ),
            Err(why) => {
                failures += 1;
                println!(
                    "criterion {:>2}: FAIL - {}: {}",
                    criterion.number, criterion.description, why
                );
            }
        }
    }
    println!(
        "suite: {} checks, {} passed, {} failed, {} skipped",
        report.summary.total, report.summary.pass, report.summary.fail, report.summary.skipped
    );
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
    assert!(report.passed());
}
