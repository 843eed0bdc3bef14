//! Seeded randomized consistency suite behind `check --property-suite`.

use std::collections::BTreeMap;

use azumaya::algebra::{center, enveloping, opposite, Algebra};
use azumaya::engine::{chi0, chi1, chi2, chi_bar, is_left_azumaya, is_right_azumaya, separability};
use azumaya::graded::braiding;
use azumaya::laws::{
    check_monad_distributive_law, check_yang_baxter, composite_monad, involutive_transfer, BDLaw,
};
use azumaya::linalg::Field;
use azumaya::random;

use crate::report::SuiteReport;

pub const DEFAULT_CASES: usize = 50;

fn check_algebra(
    a: &Algebra,
    tally: &mut BTreeMap<String, usize>,
) -> Result<Vec<String>, azumaya::Error> {
    let mut bad = Vec::new();
    let mut note = |name: &str, ok: bool, bad: &mut Vec<String>| {
        *tally.entry(name.to_string()).or_default() += 1;
        if !ok {
            bad.push(name.to_string());
        }
    };
    let tau = braiding(a.space(), a.space())?;
    let (c0, c1, cb, c2) = (chi0(a)?, chi1(a)?, chi_bar(a)?, chi2(a)?);
    note(
        "chi_bar_factors_through_chi1",
        cb == c1.compose(&tau)?,
        &mut bad,
    );
    let inv = [
        c0.is_invertible(),
        c1.is_invertible(),
        cb.is_invertible(),
        c2.is_invertible(),
    ];
    note(
        "comparison_maps_agree",
        inv.iter().all(|&x| x == inv[0]),
        &mut bad,
    );

    let left = is_left_azumaya(a)?;
    note(
        "left_equals_right",
        left.left_azumaya == left.right_azumaya,
        &mut bad,
    );
    let op = is_right_azumaya(&opposite(a)?)?;
    note(
        "opposite_swap",
        left.left_azumaya == op.right_azumaya,
        &mut bad,
    );
    if left.left_azumaya {
        note("azumaya_is_central", center(a)?.dimension == 1, &mut bad);
        note("azumaya_is_separable", separability(a)?.is_some(), &mut bad);
    }

    let law = BDLaw::braiding(a)?;
    note(
        "braiding_is_bd_law",
        check_yang_baxter(&law)? && check_monad_distributive_law(&law)?.all_pass(),
        &mut bad,
    );
    note(
        "composite_is_enveloping",
        composite_monad(&law)? == enveloping(a)?,
        &mut bad,
    );
    if let Some((x, y)) = involutive_transfer(&law)? {
        note("involutive_transfer", x == y, &mut bad);
    }
    Ok(bad)
}

/// Runs `cases` random algebras over `F_7` generated from `seed`.
pub fn run_suite(seed: u64, cases: usize) -> SuiteReport {
    let f7 = Field::prime(7).expect("7 is prime");
    let mut rng = random::rng(seed);
    let mut checks = BTreeMap::new();
    let mut violations = Vec::new();
    for case in 0..cases {
        let outcome =
            random::graded_algebra(&mut rng, f7, 3).and_then(|a| check_algebra(&a, &mut checks));
        match outcome {
            Ok(bad) => violations.extend(bad.into_iter().map(|b| format!("case {case}: {b}"))),
            Err(e) => violations.push(format!("case {case}: {e}")),
        }
    }
    SuiteReport {
        seed,
        cases,
        checks,
        passed: violations.is_empty(),
        violations,
    }
}
