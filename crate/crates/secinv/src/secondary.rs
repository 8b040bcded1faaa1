//! The secondary-invariant search: the classical full-Groebner variants
//! (kept as oracles), the incremental truncated-basis variant, the
//! restricted power-product refinement, and the irreducible-only
//! normal-form variant.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, reduce_counted, ReductionStats, TruncatedGroebnerBasis};
use crate::group::{GroupRepresentation, PrimarySystem, ReynoldsDegreeBasis, DEFAULT_BATCH_SIZE};
use crate::molien::MolienProfile;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Exhaust B_d, recompute a full Groebner basis per acceptance.
    Basic,
    /// Power products first, m_d early break, full Groebner recomputes.
    Refined,
    /// Truncated basis with incremental extension; all power products.
    New,
    /// Truncated basis plus the i*s power-product restriction.
    Improved,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Basic => "basic",
            Algorithm::Refined => "refined",
            Algorithm::New => "new",
            Algorithm::Improved => "improved",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "basic" => Some(Algorithm::Basic),
            "refined" => Some(Algorithm::Refined),
            "new" => Some(Algorithm::New),
            "improved" => Some(Algorithm::Improved),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Product of previously found irreducible secondary invariants.
    PowerProduct,
    /// Accepted directly from the Reynolds-image pool B_d.
    ReynoldsImage,
    /// The constant 1 spanning degree zero.
    Unit,
}

#[derive(Debug, Clone)]
pub struct SecondaryInvariant {
    /// The invariant itself; in the irreducible-only variant, reducible
    /// entries hold normal forms modulo the primary basis instead.
    pub poly: Polynomial,
    /// Normal form modulo the Groebner basis of the primary ideal; only
    /// populated by the irreducible-only variant, where it is the value
    /// used to assemble candidate products.
    pub normal_form: Option<Polynomial>,
    pub provenance: Provenance,
    pub irreducible: bool,
    /// Sorted labels (registry indices) of the irreducible factors; the
    /// canonical-factor dedup rule keys off the smallest label.
    pub factors: Vec<usize>,
}

impl SecondaryInvariant {
    fn product_operand(&self) -> &Polynomial {
        self.normal_form.as_ref().unwrap_or(&self.poly)
    }
}

#[derive(Debug, Clone)]
pub struct DegreeLevel {
    pub degree: u32,
    /// Molien-derived target m_d.
    pub target: usize,
    pub invariants: Vec<SecondaryInvariant>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Counters {
    pub reductions: u64,
    pub reduction_steps: u64,
    pub candidates_generated: u64,
    pub candidates_accepted: u64,
    pub full_gb_recomputations: u64,
    pub basis_size: usize,
}

#[derive(Debug, Clone)]
pub struct SecondaryResult {
    pub levels: Vec<DegreeLevel>,
    pub counters: Counters,
    /// True when reducible entries are normal forms (irreducible-only run).
    pub normal_forms: bool,
}

impl SecondaryResult {
    pub fn total_secondaries(&self) -> usize {
        self.levels.iter().map(|l| l.invariants.len()).sum()
    }

    pub fn total_irreducibles(&self) -> usize {
        self.levels
            .iter()
            .flat_map(|l| &l.invariants)
            .filter(|s| s.irreducible)
            .count()
    }

    pub fn max_secondary_degree(&self) -> u32 {
        self.levels
            .iter()
            .filter(|l| !l.invariants.is_empty())
            .map(|l| l.degree)
            .max()
            .unwrap_or(0)
    }

    pub fn max_irreducible_degree(&self) -> u32 {
        self.levels
            .iter()
            .filter(|l| l.invariants.iter().any(|s| s.irreducible))
            .map(|l| l.degree)
            .max()
            .unwrap_or(0)
    }

    pub fn per_degree_counts(&self) -> Vec<(u32, usize, usize, usize)> {
        self.levels
            .iter()
            .map(|l| {
                (
                    l.degree,
                    l.target,
                    l.invariants.len(),
                    l.invariants.iter().filter(|s| s.irreducible).count(),
                )
            })
            .collect()
    }

    pub fn irreducibles(&self) -> Vec<&SecondaryInvariant> {
        self.levels
            .iter()
            .flat_map(|l| &l.invariants)
            .filter(|s| s.irreducible)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct SecondaryOptions {
    pub algorithm: Algorithm,
    pub batch_size: usize,
    pub threads: usize,
    /// Abort (instead of continuing to the Molien-implied bound) when the
    /// search passes this degree. `None` means no extra cap.
    pub max_degree: Option<u32>,
}

impl Default for SecondaryOptions {
    fn default() -> Self {
        SecondaryOptions {
            algorithm: Algorithm::Improved,
            batch_size: DEFAULT_BATCH_SIZE,
            threads: 1,
            max_degree: None,
        }
    }
}

/// One admissible power product i*s at the current degree.
#[derive(Debug, Clone)]
pub struct CandidateProduct {
    pub irreducible_label: usize,
    pub irreducible_degree: u32,
    pub cofactor_degree: u32,
    pub cofactor_index: usize,
    pub product: Polynomial,
    pub factors: Vec<usize>,
}

/// Registry entry for a discovered irreducible secondary invariant.
#[derive(Debug, Clone)]
struct IrreducibleRef {
    degree: u32,
    level_index: usize,
}

struct SearchState {
    levels: Vec<DegreeLevel>,
    /// Discovery-ordered irreducible registry: label = position.
    irreducibles: Vec<IrreducibleRef>,
    counters: Counters,
}

impl SearchState {
    fn new() -> Self {
        SearchState {
            levels: Vec::new(),
            irreducibles: Vec::new(),
            counters: Counters::default(),
        }
    }

    fn level(&self, d: u32) -> &DegreeLevel {
        &self.levels[d as usize]
    }

    fn irreducible_poly(&self, label: usize) -> &SecondaryInvariant {
        let r = &self.irreducibles[label];
        &self.levels[r.degree as usize].invariants[r.level_index]
    }

    fn accepted_total(&self) -> usize {
        self.levels.iter().map(|l| l.invariants.len()).sum()
    }
}

/// Restricted power-product candidates at degree `d`: products i*s with
/// i irreducible of smaller degree and s a secondary invariant of the
/// complementary degree, deduplicated so each distinct factor multiset
/// appears once (the attached irreducible must carry the smallest label).
/// Order: ascending irreducible label (labels are discovered in degree
/// order), then cofactor index.
fn restricted_candidates(state: &SearchState, d: u32) -> Vec<(usize, u32, usize)> {
    let mut out = Vec::new();
    for (label, irr) in state.irreducibles.iter().enumerate() {
        if irr.degree >= d {
            continue;
        }
        let cd = d - irr.degree;
        let level = state.level(cd);
        for (ci, s) in level.invariants.iter().enumerate() {
            // canonical-factor rule: attach the smallest label
            if let Some(&min) = s.factors.first() {
                if label > min {
                    continue;
                }
            } else {
                // the degree-0 constant never appears as a cofactor here
                continue;
            }
            out.push((label, cd, ci));
        }
    }
    out
}

/// Public enumeration of the restricted candidates, materialized with
/// their product polynomials. Exposed for the dedup-rule tests.
pub fn candidate_products(result: &SecondaryResult, d: u32) -> Vec<CandidateProduct> {
    let mut state = SearchState::new();
    state.levels = result.levels.clone();
    for level in &state.levels.clone() {
        for (i, inv) in level.invariants.iter().enumerate() {
            if inv.irreducible {
                state.irreducibles.push(IrreducibleRef {
                    degree: level.degree,
                    level_index: i,
                });
            }
        }
    }
    restricted_candidates(&state, d)
        .into_iter()
        .map(|(label, cd, ci)| {
            let irr = state.irreducible_poly(label);
            let s = &state.level(cd).invariants[ci];
            let product = irr
                .product_operand()
                .mul(s.product_operand())
                .expect("same ring");
            let mut factors = s.factors.clone();
            factors.push(label);
            factors.sort_unstable();
            CandidateProduct {
                irreducible_label: label,
                irreducible_degree: irr.poly.degree().unwrap_or(0),
                cofactor_degree: cd,
                cofactor_index: ci,
                product,
                factors,
            }
        })
        .collect()
}

/// All power products of degree `d` of the discovered irreducibles
/// (unrestricted enumeration used by the refined and plain-new variants).
/// Deterministic: depth-first over labels with descending exponents.
fn all_power_products(state: &SearchState, d: u32) -> Vec<(Polynomial, Vec<usize>)> {
    let mut out = Vec::new();
    let irr: Vec<(usize, u32)> = state
        .irreducibles
        .iter()
        .enumerate()
        .filter(|(_, r)| r.degree < d)
        .map(|(label, r)| (label, r.degree))
        .collect();
    fn rec(
        state: &SearchState,
        irr: &[(usize, u32)],
        pos: usize,
        remaining: u32,
        acc: Option<Polynomial>,
        factors: &mut Vec<usize>,
        out: &mut Vec<(Polynomial, Vec<usize>)>,
    ) {
        if remaining == 0 {
            if let Some(p) = acc {
                out.push((p, factors.clone()));
            }
            return;
        }
        if pos >= irr.len() {
            return;
        }
        let (label, deg) = irr[pos];
        let max_e = remaining / deg;
        for e in (0..=max_e).rev() {
            let mut next = acc.clone();
            for _ in 0..e {
                let ip = state.irreducible_poly(label).product_operand();
                next = Some(match next {
                    None => ip.clone(),
                    Some(p) => p.mul(ip).expect("same ring"),
                });
                factors.push(label);
            }
            rec(state, irr, pos + 1, remaining - e * deg, next, factors, out);
            for _ in 0..e {
                factors.pop();
            }
        }
    }
    rec(state, &irr, 0, d, None, &mut Vec::new(), &mut out);
    // keep only genuine products (a single factor cannot reach degree d,
    // but guard against duplicates of the same multiset anyway)
    out.retain(|(_, f)| !f.is_empty());
    let mut seen = std::collections::HashSet::new();
    out.retain(|(_, f)| {
        let mut key = f.clone();
        key.sort_unstable();
        seen.insert(key)
    });
    for (_, f) in &mut out {
        f.sort_unstable();
    }
    out
}

enum MembershipEngine {
    /// Full Groebner basis of <P union accepted S>, recomputed on accept.
    Full {
        generators: Vec<Polynomial>,
        basis: Vec<Polynomial>,
    },
    /// Degree-truncated basis extended in place.
    Truncated(TruncatedGroebnerBasis),
}

impl MembershipEngine {
    /// Remainder of the candidate modulo the current basis.
    fn remainder(&self, p: &Polynomial, stats: &mut ReductionStats) -> Polynomial {
        match self {
            MembershipEngine::Full { basis, .. } => reduce_counted(p, basis, stats),
            MembershipEngine::Truncated(tgb) => tgb.remainder_counted(p, stats),
        }
    }

    /// Record an acceptance: the candidate (or its remainder) joins the
    /// ideal basis.
    fn accept(&mut self, candidate: &Polynomial, remainder: Polynomial, counters: &mut Counters) {
        match self {
            MembershipEngine::Full { generators, basis } => {
                generators.push(candidate.clone());
                *basis = buchberger(generators);
                counters.full_gb_recomputations += 1;
            }
            MembershipEngine::Truncated(tgb) => {
                tgb.extend_with_remainder(remainder)
                    .expect("remainder is nonzero homogeneous of the current degree");
            }
        }
    }

    fn basis_size(&self) -> usize {
        match self {
            MembershipEngine::Full { basis, .. } => basis.len(),
            MembershipEngine::Truncated(tgb) => tgb.elements().len(),
        }
    }
}

struct Search<'a> {
    primaries: &'a PrimarySystem,
    group: &'a GroupRepresentation,
    order: MonomialOrder,
    opts: SecondaryOptions,
    profile: MolienProfile,
    state: SearchState,
    engine: MembershipEngine,
    /// Groebner basis of <P> alone. The membership ideal at degree d is
    /// <P union S_d> with the *same-degree* acceptances only (lower-degree
    /// secondaries contribute through <P> already), so the engine is
    /// rebuilt from this basis at the start of every degree.
    base_basis: Vec<Polynomial>,
    /// Same basis, kept only when normal forms are requested
    /// (irreducible-only variant).
    primary_basis: Option<Vec<Polynomial>>,
}

fn bigint_to_usize(v: &BigInt, what: &str) -> Result<usize> {
    v.to_usize().ok_or_else(|| {
        Error::Problem(format!("{what} ({v}) does not fit in this machine's word size"))
    })
}

impl<'a> Search<'a> {
    fn new(
        primaries: &'a PrimarySystem,
        group: &'a GroupRepresentation,
        opts: SecondaryOptions,
        irreducible_only: bool,
    ) -> Result<Self> {
        let order = primaries
            .polys()
            .first()
            .map(|p| p.order())
            .unwrap_or_default();
        let profile = MolienProfile::compute(group, primaries.degrees())?;
        let use_truncated = matches!(opts.algorithm, Algorithm::New | Algorithm::Improved);
        let gb_p = buchberger(primaries.polys());
        let engine = if use_truncated {
            MembershipEngine::Truncated(TruncatedGroebnerBasis::from_full_basis(
                gb_p.clone(),
                0,
                group.n(),
                order,
            )?)
        } else {
            MembershipEngine::Full {
                generators: primaries.polys().to_vec(),
                basis: gb_p.clone(),
            }
        };
        let base_basis = gb_p.clone();
        let primary_basis = if irreducible_only { Some(gb_p) } else { None };
        let mut state = SearchState::new();
        state.levels.push(DegreeLevel {
            degree: 0,
            target: 1,
            invariants: vec![SecondaryInvariant {
                poly: Polynomial::one(group.n(), order),
                normal_form: None,
                provenance: Provenance::Unit,
                irreducible: false,
                factors: vec![],
            }],
        });
        Ok(Search {
            primaries,
            group,
            order,
            opts,
            profile,
            state,
            engine,
            base_basis,
            primary_basis,
        })
    }

    /// Start a fresh membership ideal <P union S_d> for the degree:
    /// the basis of <P> plus nothing yet.
    fn reset_engine(&mut self, d: u32) -> Result<()> {
        self.engine = if matches!(self.opts.algorithm, Algorithm::New | Algorithm::Improved) {
            // A full Groebner basis is in particular a homogeneous
            // Groebner basis up to degree d; same-degree extensions keep
            // it valid at d by the extension theorem.
            MembershipEngine::Truncated(TruncatedGroebnerBasis::from_full_basis(
                self.base_basis.clone(),
                d,
                self.group.n(),
                self.order,
            )?)
        } else {
            MembershipEngine::Full {
                generators: self.primaries.polys().to_vec(),
                basis: self.base_basis.clone(),
            }
        };
        Ok(())
    }

    fn run(mut self) -> Result<SecondaryResult> {
        let total = bigint_to_usize(&self.profile.total, "secondary invariant total")?;
        let cap = match self.opts.max_degree {
            Some(user_cap) => user_cap.min(self.profile.max_degree),
            None => self.profile.max_degree,
        };
        let mut d = 0u32;
        while self.state.accepted_total() < total {
            d += 1;
            if d > cap {
                return Err(Error::DegreeCapOverrun {
                    cap,
                    found: self.state.accepted_total(),
                    expected: total,
                });
            }
            self.run_degree(d)?;
            self.state.counters.basis_size = self
                .state
                .counters
                .basis_size
                .max(self.engine.basis_size());
        }
        let counters = self.state.counters;
        Ok(SecondaryResult {
            levels: self.state.levels,
            counters,
            normal_forms: self.primary_basis.is_some(),
        })
    }

    fn run_degree(&mut self, d: u32) -> Result<()> {
        self.reset_engine(d)?;
        let m_d = bigint_to_usize(&self.profile.count_at(d), "secondary count")?;
        self.state.levels.push(DegreeLevel {
            degree: d,
            target: m_d,
            invariants: Vec::new(),
        });
        let use_md_break = !matches!(self.opts.algorithm, Algorithm::Basic);
        if use_md_break && m_d == 0 {
            return Ok(());
        }

        // Step 2: power products of irreducibles of smaller degree.
        if !matches!(self.opts.algorithm, Algorithm::Basic) {
            let done = match self.opts.algorithm {
                Algorithm::Improved => {
                    let cands = restricted_candidates(&self.state, d);
                    self.try_products(d, m_d, cands)?
                }
                _ => {
                    let products = all_power_products(&self.state, d);
                    self.try_unrestricted_products(d, m_d, products)?
                }
            };
            if done {
                return Ok(());
            }
        }

        // Step 3: Reynolds images of the degree-d monomials.
        let mut pool = ReynoldsDegreeBasis::with_batch_size(
            d,
            self.group,
            self.order,
            self.opts.batch_size,
        );
        loop {
            if use_md_break && self.current_count(d) == m_d {
                return Ok(());
            }
            let batch = pool.next_batch();
            if batch.is_empty() {
                break;
            }
            // Speculative pre-reduction: remainders computed concurrently
            // against the current basis stay valid until an acceptance
            // extends it; stale ones are recomputed sequentially. Output
            // is bit-identical to the sequential run.
            let speculative: Vec<Option<Polynomial>> = if self.opts.threads > 1 {
                let basis: Vec<Polynomial> = match &self.engine {
                    MembershipEngine::Full { basis, .. } => basis.clone(),
                    MembershipEngine::Truncated(tgb) => tgb.elements().to_vec(),
                };
                use rayon::prelude::*;
                batch
                    .par_iter()
                    .map(|b| Some(crate::groebner::reduce(b, &basis)))
                    .collect()
            } else {
                vec![None; batch.len()]
            };
            let mut basis_stale = false;
            for (b, pre) in batch.into_iter().zip(speculative) {
                if use_md_break && self.current_count(d) == m_d {
                    return Ok(());
                }
                self.state.counters.candidates_generated += 1;
                let pre = if basis_stale { None } else { pre };
                if self.try_reynolds_candidate(d, b, pre)? {
                    basis_stale = true;
                }
            }
        }
        if self.current_count(d) != m_d {
            return Err(Error::InvalidPrimaries(format!(
                "degree {d} exhausted with {} of {} secondary invariants; \
                 the supplied primaries are inconsistent",
                self.current_count(d),
                m_d
            )));
        }
        Ok(())
    }

    fn current_count(&self, d: u32) -> usize {
        self.state.levels[d as usize].invariants.len()
    }

    /// Restricted i*s candidates (improved / irreducible-only path).
    /// Returns true when the degree target was met.
    fn try_products(&mut self, d: u32, m_d: usize, cands: Vec<(usize, u32, usize)>) -> Result<bool> {
        for (label, cd, ci) in cands {
            if self.current_count(d) == m_d {
                return Ok(true);
            }
            self.state.counters.candidates_generated += 1;
            let (mut product, factors) = {
                let irr = self.state.irreducible_poly(label);
                let s = &self.state.level(cd).invariants[ci];
                let product = irr
                    .product_operand()
                    .mul(s.product_operand())
                    .expect("same ring");
                let mut factors = s.factors.clone();
                factors.push(label);
                factors.sort_unstable();
                (product, factors)
            };
            let mut nf = None;
            if let Some(gp) = &self.primary_basis {
                let mut stats = ReductionStats::default();
                product = reduce_counted(&product, gp, &mut stats);
                self.add_stats(stats);
                if product.is_zero() {
                    continue;
                }
                nf = Some(product.clone());
            }
            let mut stats = ReductionStats::default();
            let r = self.engine.remainder(&product, &mut stats);
            self.add_stats(stats);
            if r.is_zero() {
                continue;
            }
            self.engine.accept(&product, r, &mut self.state.counters);
            self.state.counters.candidates_accepted += 1;
            self.state.levels[d as usize].invariants.push(SecondaryInvariant {
                poly: product,
                normal_form: nf,
                provenance: Provenance::PowerProduct,
                irreducible: false,
                factors,
            });
        }
        Ok(self.current_count(d) == m_d)
    }

    /// Unrestricted power products (refined / plain-new path).
    fn try_unrestricted_products(
        &mut self,
        d: u32,
        m_d: usize,
        products: Vec<(Polynomial, Vec<usize>)>,
    ) -> Result<bool> {
        for (product, factors) in products {
            if self.current_count(d) == m_d {
                return Ok(true);
            }
            self.state.counters.candidates_generated += 1;
            let mut stats = ReductionStats::default();
            let r = self.engine.remainder(&product, &mut stats);
            self.add_stats(stats);
            if r.is_zero() {
                continue;
            }
            self.engine.accept(&product, r, &mut self.state.counters);
            self.state.counters.candidates_accepted += 1;
            self.state.levels[d as usize].invariants.push(SecondaryInvariant {
                poly: product,
                normal_form: None,
                provenance: Provenance::PowerProduct,
                irreducible: false,
                factors,
            });
        }
        Ok(self.current_count(d) == m_d)
    }

    /// Returns true when the candidate was accepted (basis extended).
    fn try_reynolds_candidate(
        &mut self,
        d: u32,
        b: Polynomial,
        precomputed: Option<Polynomial>,
    ) -> Result<bool> {
        let r = match precomputed {
            Some(r) => {
                self.state.counters.reductions += 1;
                r
            }
            None => {
                let mut stats = ReductionStats::default();
                let r = self.engine.remainder(&b, &mut stats);
                self.add_stats(stats);
                r
            }
        };
        if r.is_zero() {
            return Ok(false);
        }
        self.engine.accept(&b, r, &mut self.state.counters);
        self.state.counters.candidates_accepted += 1;
        let nf = match &self.primary_basis {
            None => None,
            Some(gp) => {
                let mut stats = ReductionStats::default();
                let out = reduce_counted(&b, gp, &mut stats);
                self.state.counters.reductions += stats.reductions;
                self.state.counters.reduction_steps += stats.steps;
                Some(out)
            }
        };
        // The basic variant never forms power products, so it cannot tell
        // reducible invariants apart; it reports no irreducibility data.
        let flag_irreducible = !matches!(self.opts.algorithm, Algorithm::Basic);
        let level = &mut self.state.levels[d as usize];
        let level_index = level.invariants.len();
        level.invariants.push(SecondaryInvariant {
            poly: b,
            normal_form: nf,
            provenance: Provenance::ReynoldsImage,
            irreducible: flag_irreducible,
            factors: if flag_irreducible {
                vec![self.state.irreducibles.len()]
            } else {
                vec![]
            },
        });
        if flag_irreducible {
            self.state.irreducibles.push(IrreducibleRef {
                degree: d,
                level_index,
            });
        }
        Ok(true)
    }

    fn add_stats(&mut self, stats: ReductionStats) {
        self.state.counters.reductions += stats.reductions;
        self.state.counters.reduction_steps += stats.steps;
    }
}

/// Compute all secondary invariants (and flag the irreducible ones) with
/// the selected algorithm variant.
pub fn compute_secondaries(
    primaries: &PrimarySystem,
    group: &GroupRepresentation,
    opts: SecondaryOptions,
) -> Result<SecondaryResult> {
    Search::new(primaries, group, opts, false)?.run()
}

/// Irreducible-only search: reducible secondary invariants are held as
/// normal forms modulo the primary ideal and never materialized in raw
/// form. Requires the truncated-basis engine.
pub fn irreducible_only(
    primaries: &PrimarySystem,
    group: &GroupRepresentation,
    opts: SecondaryOptions,
) -> Result<SecondaryResult> {
    let opts = SecondaryOptions {
        algorithm: Algorithm::Improved,
        ..opts
    };
    Search::new(primaries, group, opts, true)?.run()
}
