//! The degree-truncated basis must make exactly the same membership
//! decisions as a full Groebner basis, on random ideals and on the
//! extension sequence of a real secondary-invariant run.

mod common;

use common::{load_example, random_homogeneous};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secinv::groebner::{buchberger, reduce, TruncatedGroebnerBasis};
use secinv::monomial::MonomialOrder;
use secinv::poly::Polynomial;
use secinv::secondary::Algorithm;

#[test]
fn random_ideals_agree_with_full_buchberger() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x74727563676200);
    let orders = [
        MonomialOrder::DegRevLex,
        MonomialOrder::DegLex,
        MonomialOrder::Lex,
    ];
    for case in 0..200usize {
        let nvars = rng.gen_range(2usize..=3);
        let order = orders[case % orders.len()];
        let ngens = rng.gen_range(2usize..=4);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(1u32..=3);
                random_homogeneous(&mut rng, nvars, d, order)
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let bound = rng.gen_range(3u32..=6);
        let full = buchberger(&gens);
        let tgb = TruncatedGroebnerBasis::new(&gens, bound, nvars, order).unwrap();
        assert!(tgb.verify_invariant());
        // Membership of random homogeneous probes must agree up to the
        // validity bound.
        for _ in 0..10 {
            let d = rng.gen_range(1u32..=bound);
            let probe = random_homogeneous(&mut rng, nvars, d, order);
            let truncated_member = tgb.member_up_to_degree(&probe).unwrap();
            let full_member = reduce(&probe, &full).is_zero();
            assert_eq!(
                truncated_member, full_member,
                "case {case}: membership disagrees at degree {d} \
                 (nvars {nvars}, order {order:?})"
            );
        }
    }
}

#[test]
fn example_2_extension_sequence_revalidated() {
    // Re-run the degree-by-degree extension of example 2 and check every
    // acceptance decision against a freshly computed full Groebner basis
    // of <P union S_d>.
    let (_, system) = load_example(2);
    let result = common::run_example(2, Algorithm::Improved, 1);
    for level in &result.levels {
        if level.degree == 0 {
            continue;
        }
        let mut gens: Vec<Polynomial> = system.polys().to_vec();
        for inv in &level.invariants {
            // Before acceptance: not a member of <P union earlier same-degree>.
            let full = buchberger(&gens);
            let r = reduce(&inv.poly, &full);
            assert!(
                !r.is_zero(),
                "degree {} invariant wrongly accepted: already a member",
                level.degree
            );
            gens.push(inv.poly.clone());
        }
        // After the degree completes, every remaining degree-d invariant of
        // the final answer at this degree is a member (count is exact).
        let full = buchberger(&gens);
        for inv in &level.invariants {
            assert!(reduce(&inv.poly, &full).is_zero());
        }
    }
}

#[test]
fn truncated_extension_matches_full_recomputation() {
    // Extending a truncated basis by a non-member and raising the bound
    // must agree with recomputing from scratch, on random data.
    let mut rng = ChaCha8Rng::seed_from_u64(0xe47e);
    let order = MonomialOrder::DegRevLex;
    let mut done = 0usize;
    while done < 40 {
        let nvars = rng.gen_range(2usize..=3);
        let gens: Vec<Polynomial> = (0..2)
            .map(|_| {
                let d = rng.gen_range(1u32..=2);
                random_homogeneous(&mut rng, nvars, d, order)
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let d = rng.gen_range(2u32..=4);
        let p = random_homogeneous(&mut rng, nvars, d, order);
        if p.is_zero() {
            continue;
        }
        let tgb = TruncatedGroebnerBasis::new(&gens, d, nvars, order).unwrap();
        if tgb.member_up_to_degree(&p).unwrap() {
            continue;
        }
        let extended = tgb.extend(&p).unwrap();
        assert!(extended.verify_invariant());
        // Oracle: full basis of the enlarged ideal.
        let mut enlarged = gens.clone();
        enlarged.push(p.clone());
        let full = buchberger(&enlarged);
        for _ in 0..8 {
            let pd = rng.gen_range(1u32..=d);
            let probe = random_homogeneous(&mut rng, nvars, pd, order);
            assert_eq!(
                extended.member_up_to_degree(&probe).unwrap(),
                reduce(&probe, &full).is_zero(),
                "extension membership mismatch (nvars {nvars}, degree {pd})"
            );
        }
        done += 1;
    }
}
