//! Helpers shared by the integration suites.
#![allow(dead_code)]

use rand::Rng;
use secinv::examples::instance;
use secinv::group::{validate_primaries, GroupRepresentation, PrimarySystem, QMatrix};
use secinv::monomial::{Monomial, MonomialOrder};
use secinv::poly::{rat_int, Polynomial, Rational};
use secinv::secondary::{compute_secondaries, Algorithm, SecondaryOptions, SecondaryResult};

pub fn load_example(n: usize) -> (GroupRepresentation, PrimarySystem) {
    let inst = instance(n).expect("built-in example");
    let group = GroupRepresentation::close(inst.generators.clone()).expect("finite closure");
    let polys = inst
        .parse_primaries(MonomialOrder::DegRevLex)
        .expect("primaries parse");
    let system = validate_primaries(&polys, &group).expect("valid primaries");
    (group, system)
}

pub fn run_example(n: usize, algorithm: Algorithm, threads: usize) -> SecondaryResult {
    let (group, system) = load_example(n);
    let opts = SecondaryOptions {
        algorithm,
        threads,
        ..SecondaryOptions::default()
    };
    compute_secondaries(&system, &group, opts).expect("search succeeds")
}

/// Uniformly random permutation of 1..=n as a matrix.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    let mut cols: Vec<usize> = (1..=n).collect();
    // Fisher-Yates
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        cols.swap(i, j);
    }
    QMatrix::from_column_units(&cols)
}

/// Random homogeneous polynomial of the given degree: each monomial kept
/// with probability ~1/2 and given a small random nonzero coefficient.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    nvars: usize,
    degree: u32,
    order: MonomialOrder,
) -> Polynomial {
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    for m in secinv::monomial::monomials_of_degree_desc(nvars, degree, order) {
        if rng.gen_bool(0.5) {
            let c = loop {
                let v = rng.gen_range(-5i64..=5);
                if v != 0 {
                    break v;
                }
            };
            terms.push((m, rat_int(c)));
        }
    }
    Polynomial::from_terms(nvars, order, terms)
}

/// Random polynomial, not necessarily homogeneous.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    order: MonomialOrder,
) -> Polynomial {
    let mut acc = Polynomial::zero(nvars, order);
    for d in 0..=max_degree {
        if rng.gen_bool(0.6) {
            let part = random_homogeneous(rng, nvars, d, order);
            acc = acc.add(&part).expect("same ring");
        }
    }
    acc
}

/// Elementary symmetric primaries, valid for any permutation group.
pub fn symmetric_primaries(n: usize, group: &GroupRepresentation) -> PrimarySystem {
    let order = MonomialOrder::DegRevLex;
    let polys: Vec<Polynomial> = (1..=n)
        .map(|k| secinv::examples::elementary_symmetric(n, k, order))
        .collect();
    validate_primaries(&polys, group).expect("elementary symmetric polynomials are primaries")
}
