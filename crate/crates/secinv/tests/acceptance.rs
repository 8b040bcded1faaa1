//! Acceptance criteria, one pass/fail line per criterion (run with
//! `cargo test --test acceptance -- --nocapture` to see the lines).
//! The long D14 instance is `#[ignore]`d; run it explicitly with
//! `cargo test --test acceptance -- --ignored`.

mod common;

use common::{load_example, run_example};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secinv::group::{permutation_invariant_dimension, GroupRepresentation};
use secinv::molien::{molien_series, MolienProfile};
use secinv::secondary::{irreducible_only, Algorithm, SecondaryOptions, SecondaryResult};

struct Criterion {
    ok: bool,
    detail: String,
}

fn report(label: &'static str, ok: bool, detail: String) {
    println!("{}: {label} -- {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{label}: {detail}");
}

fn counts_of(result: &SecondaryResult) -> (usize, u32, usize, u32) {
    (
        result.total_secondaries(),
        result.max_secondary_degree(),
        result.total_irreducibles(),
        result.max_irreducible_degree(),
    )
}

fn check_example(
    label: &'static str,
    example: usize,
    expected: (usize, u32, usize, u32),
    threads: usize,
) {
    let result = run_example(example, Algorithm::Improved, threads);
    let got = counts_of(&result);
    report(
        label,
        got == expected,
        format!(
            "example {example}: (secondaries, max deg, irreducibles, max irred deg) \
             got {got:?}, published {expected:?}"
        ),
    );
}

#[test]
fn example_1_counts() {
    check_example("example 1 (S2, 13 vars)", 1, (32, 6, 15, 2), 1);
}

#[test]
fn example_2_counts() {
    check_example("example 2 (S3 action, 6 vars)", 2, (12, 9, 4, 3), 1);
}

#[test]
fn example_3_counts() {
    check_example("example 3 (A4 action, 6 vars)", 3, (18, 11, 8, 5), 1);
}

#[test]
fn example_4_counts() {
    check_example("example 4 (D6 action, 6 vars)", 4, (120, 14, 10, 4), 2);
}

#[test]
fn example_5_counts() {
    check_example("example 5 (D8 action, 8 vars)", 5, (64, 11, 24, 5), 2);
}

#[test]
#[ignore = "long-running stretch benchmark (D14, 360 secondaries)"]
fn example_6_counts() {
    check_example("example 6 (D14 action, 7 vars)", 6, (360, 18, 19, 7), 4);
}

#[test]
fn molien_totals() {
    let mut all = Vec::new();
    for (example, expected) in [(1usize, 32i64), (4, 120), (6, 360)] {
        let (group, system) = load_example(example);
        let profile = MolienProfile::compute(&group, system.degrees()).unwrap();
        all.push(Criterion {
            ok: profile.total == BigInt::from(expected),
            detail: format!("example {example}: total {} vs {expected}", profile.total),
        });
    }
    let ok = all.iter().all(|c| c.ok);
    let detail = all
        .iter()
        .map(|c| c.detail.as_str())
        .collect::<Vec<_>>()
        .join("; ");
    report("molien totals for examples 1, 4, 6", ok, detail);
}

#[test]
fn molien_oracle_small_groups() {
    // Every permutation group of order <= 24 found from random generator
    // pairs: series coefficients a_0..a_6 must equal the monomial orbit
    // counts (Burnside / direct orbit enumeration).
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6c69656e);
    let mut checked = 0usize;
    let mut ok = true;
    let mut detail = String::new();
    while checked < 40 {
        let n = rand::Rng::gen_range(&mut rng, 2usize..=4);
        let gens = vec![
            common::random_permutation(&mut rng, n),
            common::random_permutation(&mut rng, n),
        ];
        let group = GroupRepresentation::close(gens).unwrap();
        if group.order() > 24 {
            continue;
        }
        checked += 1;
        let series = molien_series(&group, 6).unwrap();
        for d in 0..=6u32 {
            let orbit = permutation_invariant_dimension(&group, d)
                .expect("permutation group oracle applies");
            if series[d as usize] != BigInt::from(orbit) {
                ok = false;
                detail = format!(
                    "group order {} on {n} vars: a_{d} = {} but orbit count {orbit}",
                    group.order(),
                    series[d as usize]
                );
            }
        }
    }
    if ok {
        detail = format!("{checked} permutation groups (order <= 24), degrees 0..6 agree");
    }
    report("molien oracle (orbit counting)", ok, detail);
}

#[test]
fn irreducible_only_matches_full_search() {
    // The normal-form variant must flag exactly the same irreducible
    // invariants (same polynomials, same degrees) as the full search.
    let mut ok = true;
    let mut details = Vec::new();
    for example in 1..=5usize {
        let threads = if example >= 4 { 2 } else { 1 };
        let full = run_example(example, Algorithm::Improved, threads);
        let (group, system) = load_example(example);
        let opts = SecondaryOptions {
            threads,
            ..SecondaryOptions::default()
        };
        let nf = irreducible_only(&system, &group, opts).unwrap();
        let full_irr: Vec<String> = full
            .irreducibles()
            .iter()
            .map(|s| s.poly.to_text())
            .collect();
        let nf_irr: Vec<String> = nf.irreducibles().iter().map(|s| s.poly.to_text()).collect();
        if full_irr != nf_irr {
            ok = false;
            details.push(format!(
                "example {example}: {} vs {} irreducibles",
                full_irr.len(),
                nf_irr.len()
            ));
        } else {
            details.push(format!("example {example}: {} equal", full_irr.len()));
        }
    }
    report(
        "irreducible-only variant equals full search (examples 1-5)",
        ok,
        details.join("; "),
    );
}
