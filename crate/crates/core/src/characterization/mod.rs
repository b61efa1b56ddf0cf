//! Finite-model verification of the lexicographic characterization.
//!
//! Strong monotonicity plus weak independence of worse alternatives (or plain
//! independence of worse alternatives) should leave the lexicographic order as
//! the only weak order on any product grid. [`Search`] enumerates every weak
//! order of a grid, filters them through compiled axiom checks and reports the
//! survivors. [`proof_trace_check`] replays the argument's individual steps
//! against a concrete relation.

mod compiled;
mod weak_orders;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::axioms::AxiomId;
use crate::raf::{first_difference_of, GridSpec, PriorityContext, Raf};
use crate::relations::{lex_compare, ComparisonOutcome, PreferenceRelation};
use crate::{Error, Result};

use compiled::CompiledAxiom;
pub use weak_orders::{fubini, fubini_table, WeakOrders, HARD_MAX_POINTS};
use weak_orders::RankWalker;

/// Default bound on the number of points a weak-order enumeration may cover.
pub const DEFAULT_MAX_POINTS: usize = 9;

/// Survivors kept verbatim in a report.
pub const SURVIVOR_LISTING: usize = 10;

/// A total preorder on a finite list of RAFs, stored as ranks (0 = best block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedRelation {
    domain: Arc<[Raf]>,
    ranks: Vec<u32>,
}

impl RankedRelation {
    pub fn new(domain: impl Into<Arc<[Raf]>>, ranks: Vec<u32>) -> Result<Self> {
        let domain = domain.into();
        if domain.len() != ranks.len() {
            return Err(Error::ArityMismatch {
                expected: domain.len(),
                found: ranks.len(),
            });
        }
        if let Some(first) = domain.first() {
            for (i, p) in domain.iter().enumerate() {
                first.ensure_same_context(p)?;
                if domain[..i].contains(p) {
                    return Err(Error::DuplicatePoint(format!("{p}")));
                }
            }
        }
        let top = ranks.iter().copied().max().unwrap_or(0);
        if let Some(missing) = (0..=top).find(|r| !ranks.contains(r)) {
            return Err(Error::NonContiguousRanks { missing });
        }
        Ok(RankedRelation { domain, ranks })
    }

    pub(crate) fn from_parts(domain: Arc<[Raf]>, ranks: Vec<u32>) -> Self {
        RankedRelation { domain, ranks }
    }

    pub fn domain(&self) -> &[Raf] {
        &self.domain
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Outcome of comparing domain points `i` and `j`.
    pub fn outcome(&self, i: usize, j: usize) -> ComparisonOutcome {
        ComparisonOutcome::from_ordering(self.ranks[j].cmp(&self.ranks[i]))
    }

    /// Indifference blocks, best first, each in domain order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let top = self.ranks.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut blocks = alloc::vec![Vec::new(); top];
        for (i, &r) in self.ranks.iter().enumerate() {
            blocks[r as usize].push(i);
        }
        blocks
    }

    /// Human-readable chain such as `(1, 1) ≻ (1, 0) ∼ (0, 1) ≻ (0, 0)`.
    pub fn chain(&self) -> String {
        self.blocks()
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&i| format!("{}", self.domain[i]))
                    .collect::<Vec<_>>()
                    .join(" ∼ ")
            })
            .collect::<Vec<_>>()
            .join(" ≻ ")
    }
}

/// The witness `C` of the argument: `B`'s values up to and including the
/// first differing index `k`, `A`'s values after it.
pub fn construct_proof_witness(a: &Raf, b: &Raf) -> Result<Raf> {
    a.ensure_same_context(b)?;
    let k = first_difference_of(a.values(), b.values()).ok_or(Error::EqualInputs)?;
    let values = b.values()[..=k]
        .iter()
        .chain(&a.values()[k + 1..])
        .cloned()
        .collect();
    Raf::new(values, a.context())
}

/// Outcomes observed while replaying the argument for one pair `(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    /// 1-based first differing index of `A` and `B`.
    pub k: usize,
    pub witness: Raf,
    /// What strong monotonicity predicts for `(C, A)`.
    pub predicted_ca: ComparisonOutcome,
    pub observed_ca: ComparisonOutcome,
    /// `(A, B)` and `(A, C)` share the first differing index and the sign
    /// there, so weak IWA applies to them.
    pub independence_hypothesis: bool,
    pub observed_ab: ComparisonOutcome,
    pub observed_ac: ComparisonOutcome,
    pub lex_ab: ComparisonOutcome,
}

impl ProofTrace {
    pub fn monotonicity_step(&self) -> bool {
        self.observed_ca == self.predicted_ca
    }

    pub fn independence_step(&self) -> bool {
        self.independence_hypothesis
            && self.observed_ab.at_least_as_good() == self.observed_ac.at_least_as_good()
    }

    pub fn conclusion_step(&self) -> bool {
        self.observed_ab == self.lex_ab
    }

    pub fn passed(&self) -> bool {
        self.monotonicity_step() && self.independence_step() && self.conclusion_step()
    }
}

/// Builds `C` for `(A, B)` and checks each step of the argument against the
/// outcomes `rel` actually produces.
pub fn proof_trace_check<R: PreferenceRelation + ?Sized>(rel: &R, a: &Raf, b: &Raf) -> Result<ProofTrace> {
    let c = construct_proof_witness(a, b)?;
    let k = first_difference_of(a.values(), b.values()).ok_or(Error::EqualInputs)?;
    // C differs from A at k only.
    let predicted_ca = ComparisonOutcome::from_ordering(c.values()[k].cmp(&a.values()[k]));
    let ab_sign = a.values()[k].cmp(&b.values()[k]);
    let ac_sign = a.values()[k].cmp(&c.values()[k]);
    let independence_hypothesis = first_difference_of(a.values(), c.values()) == Some(k)
        && ab_sign.is_ne()
        && ab_sign == ac_sign;
    Ok(ProofTrace {
        k: k + 1,
        predicted_ca,
        observed_ca: rel.compare(&c, a)?,
        independence_hypothesis,
        observed_ab: rel.compare(a, b)?,
        observed_ac: rel.compare(a, &c)?,
        lex_ab: lex_compare(a, b)?,
        witness: c,
    })
}

fn validate_points(points: &[Raf], max_points: usize) -> Result<()> {
    let bound = max_points.min(HARD_MAX_POINTS);
    let first = points.first().ok_or(Error::EmptySample)?;
    if points.len() > bound {
        return Err(Error::TooManyPoints {
            points: points.len(),
            max: bound,
        });
    }
    points.iter().try_for_each(|p| first.ensure_same_context(p))
}

/// Every weak order on `points`, each exactly once, in canonical order.
pub fn enumerate_weak_orders(points: &[Raf]) -> Result<WeakOrders> {
    enumerate_weak_orders_bounded(points, DEFAULT_MAX_POINTS)
}

pub fn enumerate_weak_orders_bounded(points: &[Raf], max_points: usize) -> Result<WeakOrders> {
    validate_points(points, max_points)?;
    Ok(WeakOrders::new(points.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Skip candidates that break a strong-monotonicity pair while they are
    /// being built. Only has an effect when strong monotonicity is filtered on.
    pub prune: bool,
    pub max_points: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            prune: false,
            max_points: DEFAULT_MAX_POINTS,
        }
    }
}

/// Accumulated counts for a contiguous range of the candidate stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    /// Candidates that reached the axiom filters.
    pub examined: u64,
    /// Candidates skipped by pruning.
    pub pruned: u128,
    /// Per filtered axiom, candidates passing it.
    pub axiom_passes: Vec<u64>,
    pub survivor_count: u64,
    /// `(stream index, ranks)` of the first [`SURVIVOR_LISTING`] survivors.
    pub survivors: Vec<(u128, Vec<u32>)>,
}

impl Tally {
    fn empty(axioms: usize) -> Self {
        Tally {
            axiom_passes: alloc::vec![0; axioms],
            ..Tally::default()
        }
    }

    /// Appends a tally covering the stream range right after this one.
    pub fn merge(&mut self, next: Tally) {
        self.examined += next.examined;
        self.pruned += next.pruned;
        if self.axiom_passes.len() < next.axiom_passes.len() {
            self.axiom_passes.resize(next.axiom_passes.len(), 0);
        }
        for (mine, theirs) in self.axiom_passes.iter_mut().zip(&next.axiom_passes) {
            *mine += theirs;
        }
        self.survivor_count += next.survivor_count;
        let room = SURVIVOR_LISTING.saturating_sub(self.survivors.len());
        self.survivors.extend(next.survivors.into_iter().take(room));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    /// Position in the canonical (unpruned) enumeration stream.
    pub index: u128,
    pub relation: RankedRelation,
    /// Agrees with the lexicographic relation on every ordered pair.
    pub equals_lex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub grid: String,
    pub points: usize,
    pub axioms: Vec<AxiomId>,
    pub pruned: bool,
    /// Size of the covered search space: examined plus pruned.
    pub enumerated: u128,
    pub examined: u64,
    pub pruned_candidates: u128,
    /// Candidates (among those examined) satisfying each axiom on its own.
    pub axiom_counts: Vec<(AxiomId, u64)>,
    /// Candidates satisfying every axiom of the set.
    pub survivor_count: u64,
    pub survivors: Vec<Survivor>,
}

impl CharacterizationReport {
    /// Exactly one survivor, and it is the lexicographic order.
    pub fn lex_unique(&self) -> bool {
        self.survivor_count == 1 && self.survivors.first().is_some_and(|s| s.equals_lex)
    }

    pub fn count_for(&self, axiom: AxiomId) -> Option<u64> {
        self.axiom_counts.iter().find(|(a, _)| *a == axiom).map(|(_, c)| *c)
    }
}

/// A configured weak-order search over one point set.
///
/// The candidate stream is split into tasks by the best block of the weak
/// order; tasks cover consecutive index ranges, so merging their tallies in
/// task order gives the same result however they were scheduled.
#[derive(Debug, Clone)]
pub struct Search {
    domain: Arc<[Raf]>,
    description: String,
    axioms: Vec<AxiomId>,
    compiled: Vec<CompiledAxiom>,
    better: Option<Vec<u32>>,
    lex: Vec<ComparisonOutcome>,
    task_bases: Vec<u128>,
    prune: bool,
}

impl Search {
    pub fn new(spec: &GridSpec, axioms: &[AxiomId], opts: &VerifyOptions) -> Result<Self> {
        let size = spec.size();
        let bound = opts.max_points.min(HARD_MAX_POINTS);
        if size > bound {
            return Err(Error::TooManyPoints {
                points: size,
                max: bound,
            });
        }
        let ctx = PriorityContext::indexed(spec.arity())?;
        Self::over_points(spec.points(&ctx)?, spec.describe(), axioms, opts)
    }

    pub fn over_points(
        points: Vec<Raf>,
        description: String,
        axioms: &[AxiomId],
        opts: &VerifyOptions,
    ) -> Result<Self> {
        validate_points(&points, opts.max_points)?;
        let compiled = axioms
            .iter()
            .map(|&a| CompiledAxiom::compile(a, &points))
            .collect::<Result<Vec<_>>>()?;
        let n = points.len();

        let better = if opts.prune {
            compiled
                .iter()
                .find(|c| c.axiom == AxiomId::StrongMonotonicity)
                .and_then(CompiledAxiom::strict_pairs)
                .map(|pairs| {
                    let mut better = alloc::vec![0u32; n];
                    for &(a, b) in pairs {
                        better[b as usize] |= 1 << a;
                    }
                    better
                })
        } else {
            None
        };

        let mut lex = Vec::with_capacity(n * n);
        for a in &points {
            for b in &points {
                lex.push(lex_compare(a, b)?);
            }
        }

        let fub = fubini_table(n);
        let mut task_bases = Vec::with_capacity((1usize << n) - 1);
        let mut base = 0u128;
        for first in 1u32..(1u32 << n) {
            task_bases.push(base);
            base += fub[n - first.count_ones() as usize];
        }

        Ok(Search {
            domain: points.into(),
            description,
            axioms: axioms.to_vec(),
            compiled,
            better,
            lex,
            task_bases,
            prune: opts.prune,
        })
    }

    pub fn points(&self) -> &[Raf] {
        &self.domain
    }

    pub fn task_count(&self) -> usize {
        self.task_bases.len()
    }

    /// Runs the candidates whose best block is the `task + 1` bitmask.
    pub fn run_task(&self, task: usize) -> Tally {
        let mut tally = Tally::empty(self.compiled.len());
        let base = self.task_bases[task];
        let mut verdicts = alloc::vec![false; self.compiled.len()];
        let mut walker =
            RankWalker::with_first_block(self.domain.len(), self.better.clone(), task as u32 + 1);
        while let Some(local) = walker.advance() {
            let ranks = walker.ranks();
            if self.evaluate(ranks, &mut verdicts) {
                tally.survivor_count += 1;
                if tally.survivors.len() < SURVIVOR_LISTING {
                    tally.survivors.push((base + local, ranks.to_vec()));
                }
            }
            for (count, &ok) in tally.axiom_passes.iter_mut().zip(&verdicts) {
                *count += ok as u64;
            }
        }
        tally.examined = walker.emitted();
        tally.pruned = walker.pruned();
        tally
    }

    /// All tasks, in order, on the calling thread.
    pub fn run(&self) -> Tally {
        let mut total = Tally::empty(self.compiled.len());
        for task in 0..self.task_count() {
            total.merge(self.run_task(task));
        }
        total
    }

    fn evaluate(&self, ranks: &[u32], verdicts: &mut [bool]) -> bool {
        let mut all = true;
        for (v, c) in verdicts.iter_mut().zip(&self.compiled) {
            *v = c.holds(ranks);
            all &= *v;
        }
        all
    }

    /// Calls `f(stream index, ranks, per-axiom verdicts)` for every examined
    /// candidate, in stream order.
    pub fn for_each_candidate(&self, mut f: impl FnMut(u128, &[u32], &[bool])) {
        let mut verdicts = alloc::vec![false; self.compiled.len()];
        let mut walker = RankWalker::new(self.domain.len(), self.better.clone());
        while let Some(index) = walker.advance() {
            self.evaluate(walker.ranks(), &mut verdicts);
            f(index, walker.ranks(), &verdicts);
        }
    }

    /// True iff `ranks` give the same outcome as the lexicographic relation on
    /// every ordered pair of the domain.
    pub fn agrees_with_lex(&self, ranks: &[u32]) -> bool {
        let n = self.domain.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                ComparisonOutcome::from_ordering(ranks[j].cmp(&ranks[i])) == self.lex[i * n + j]
            })
        })
    }

    /// Ranks of the lexicographic order on this domain.
    pub fn lex_ranks(&self) -> Vec<u32> {
        let n = self.domain.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| self.lex[j * n + i] == ComparisonOutcome::FirstPreferred)
                    .count() as u32
            })
            .collect()
    }

    pub fn report(&self, tally: Tally) -> CharacterizationReport {
        let survivors = tally
            .survivors
            .into_iter()
            .map(|(index, ranks)| Survivor {
                index,
                equals_lex: self.agrees_with_lex(&ranks),
                relation: RankedRelation::from_parts(Arc::clone(&self.domain), ranks),
            })
            .collect();
        CharacterizationReport {
            grid: self.description.clone(),
            points: self.domain.len(),
            axioms: self.axioms.clone(),
            pruned: self.prune && self.better.is_some(),
            enumerated: tally.examined as u128 + tally.pruned,
            examined: tally.examined,
            pruned_candidates: tally.pruned,
            axiom_counts: self.axioms.iter().copied().zip(tally.axiom_passes).collect(),
            survivor_count: tally.survivor_count,
            survivors,
        }
    }
}

/// Enumerates every weak order of the grid, keeps those satisfying all of
/// `axioms`, and compares the survivors with the lexicographic order.
pub fn verify_characterization(
    spec: &GridSpec,
    axioms: &[AxiomId],
    prune: bool,
) -> Result<CharacterizationReport> {
    let search = Search::new(
        spec,
        axioms,
        &VerifyOptions {
            prune,
            ..VerifyOptions::default()
        },
    )?;
    Ok(search.report(search.run()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axioms, CheckConfig};
    use crate::rational::Rational;
    use crate::relations::{table_relation, Lexicographic};
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn spec(levels: &[&str], k: usize) -> GridSpec {
        GridSpec::new(levels.iter().map(|v| q(v)).collect(), k).unwrap()
    }

    fn raf(ctx: &Arc<PriorityContext>, vals: &[&str]) -> Raf {
        Raf::new(vals.iter().map(|v| q(v)).collect(), ctx).unwrap()
    }

    const SM: AxiomId = AxiomId::StrongMonotonicity;
    const WIWA: AxiomId = AxiomId::WeakIWA;

    #[test]
    fn proof_witness_examples() {
        let ctx = PriorityContext::new(["$40", "$10"]).unwrap();
        let a = raf(&ctx, &["1/5", "4/5"]);
        let b = raf(&ctx, &["1/10", "9/10"]);
        assert_eq!(construct_proof_witness(&a, &b).unwrap(), raf(&ctx, &["1/10", "4/5"]));
        let c = raf(&ctx, &["1/5", "1/2"]);
        assert_eq!(construct_proof_witness(&a, &c).unwrap(), c);
        assert_eq!(construct_proof_witness(&a, &a), Err(Error::EqualInputs));
    }

    #[test]
    fn proof_trace_for_lex_and_for_indifference() {
        let ctx = PriorityContext::new(["$40", "$10"]).unwrap();
        let a = raf(&ctx, &["1/5", "4/5"]);
        let b = raf(&ctx, &["1/10", "9/10"]);
        let trace = proof_trace_check(&Lexicographic::new(), &a, &b).unwrap();
        assert!(trace.passed());
        assert_eq!(trace.k, 1);
        assert_eq!(trace.observed_ab, ComparisonOutcome::FirstPreferred);

        let pts = spec(&["0", "1"], 2).points(&PriorityContext::indexed(2).unwrap()).unwrap();
        let flat = table_relation(RankedRelation::new(pts.clone(), vec![0; 4]).unwrap());
        let trace = proof_trace_check(&flat, &pts[3], &pts[0]).unwrap();
        assert!(!trace.monotonicity_step());
        assert!(trace.independence_step());
    }

    #[test]
    fn enumeration_counts_small() {
        let pts = spec(&["0", "1/2", "1"], 2).points(&PriorityContext::indexed(2).unwrap()).unwrap();
        assert_eq!(enumerate_weak_orders(&pts[..1]).unwrap().count(), 1);
        assert_eq!(enumerate_weak_orders(&pts[..3]).unwrap().count(), 13);
        assert_eq!(enumerate_weak_orders(&pts[..4]).unwrap().count(), 75);
        let ten: Vec<Raf> = spec(&["0", "1/3", "2/3", "1"], 2)
            .points(&PriorityContext::indexed(2).unwrap())
            .unwrap()[..10]
            .to_vec();
        assert_eq!(
            enumerate_weak_orders(&ten).err(),
            Some(Error::TooManyPoints { points: 10, max: 9 })
        );
    }

    #[test]
    fn binary_square_controls() {
        let grid = spec(&["0", "1"], 2);
        let both = verify_characterization(&grid, &[SM, WIWA], false).unwrap();
        assert_eq!(both.enumerated, 75);
        assert!(both.lex_unique());

        let sm = verify_characterization(&grid, &[SM], false).unwrap();
        assert_eq!(sm.survivor_count, 3);
        let search = Search::new(&grid, &[SM], &VerifyOptions::default()).unwrap();
        let reversed = {
            let rev = Lexicographic::reversed();
            let pts = search.points();
            (0..4)
                .map(|i| (0..4).filter(|&j| rev.compare(&pts[j], &pts[i]).unwrap() == ComparisonOutcome::FirstPreferred).count() as u32)
                .collect::<Vec<_>>()
        };
        let listed: Vec<&[u32]> = sm.survivors.iter().map(|s| s.relation.ranks()).collect();
        assert!(listed.contains(&search.lex_ranks().as_slice()));
        assert!(listed.contains(&reversed.as_slice()));

        let wiwa = verify_characterization(&grid, &[WIWA], false).unwrap();
        assert!(wiwa.survivor_count >= 2);
        assert!(wiwa.survivors.iter().any(|s| s.relation.ranks().iter().all(|&r| r == 0)));
    }

    #[test]
    fn compiled_checks_match_quadruple_checkers() {
        let grid = spec(&["0", "1"], 2);
        let pts = grid.points(&PriorityContext::indexed(2).unwrap()).unwrap();
        let filters = [
            AxiomId::StrongMonotonicity,
            AxiomId::WeakDominance,
            AxiomId::StrongDominance,
            AxiomId::NonCompensation,
            AxiomId::Axiom2MS,
            AxiomId::IWA,
            AxiomId::WeakIWA,
        ];
        let search = Search::over_points(pts.clone(), "{0,1}^2".into(), &filters, &VerifyOptions::default()).unwrap();
        let mut seen = 0;
        search.for_each_candidate(|_, ranks, verdicts| {
            seen += 1;
            let table = table_relation(RankedRelation::new(pts.clone(), ranks.to_vec()).unwrap());
            let report = check_axioms(&table, &pts, &filters, &CheckConfig::default()).unwrap();
            for (r, &v) in report.results.iter().zip(verdicts) {
                assert_eq!(r.passed(), v, "{} on {:?}", r.axiom, ranks);
            }
        });
        assert_eq!(seen, 75);
    }

    #[test]
    fn pruning_preserves_survivors_and_indices() {
        let grid = spec(&["0", "1"], 3);
        let axioms = [SM, WIWA];
        let plain = Search::new(&grid, &axioms, &VerifyOptions::default()).unwrap();
        let pruned = Search::new(&grid, &axioms, &VerifyOptions { prune: true, ..Default::default() }).unwrap();

        let mut plain_survivors = BTreeSet::new();
        let mut plain_sm_counts = [0u64; 2];
        plain.for_each_candidate(|i, r, v| {
            if v[0] {
                plain_sm_counts[0] += 1;
                plain_sm_counts[1] += v[1] as u64;
            }
            if v.iter().all(|&x| x) {
                plain_survivors.insert((i, r.to_vec()));
            }
        });
        let mut pruned_survivors = BTreeSet::new();
        pruned.for_each_candidate(|i, r, v| {
            assert!(v[0], "pruned walk only reaches strongly monotonic candidates");
            if v.iter().all(|&x| x) {
                pruned_survivors.insert((i, r.to_vec()));
            }
        });
        assert_eq!(plain_survivors, pruned_survivors);

        let report = pruned.report(pruned.run());
        assert_eq!(report.enumerated, 545_835);
        assert_eq!(report.count_for(SM), Some(plain_sm_counts[0]));
        assert_eq!(report.count_for(WIWA), Some(plain_sm_counts[1]));
        assert!(report.lex_unique());
    }

    #[test]
    fn order_axioms_cannot_filter() {
        let grid = spec(&["0", "1"], 2);
        assert_eq!(
            verify_characterization(&grid, &[AxiomId::Transitive], false).err(),
            Some(Error::UnsupportedAxiom(AxiomId::Transitive))
        );
        let big = spec(&["0", "1/4", "1/2", "3/4", "1"], 2);
        assert_eq!(
            verify_characterization(&big, &[SM], true).err(),
            Some(Error::TooManyPoints { points: 25, max: 9 })
        );
    }

    #[test]
    fn fubini_small_values() {
        assert_eq!(fubini_table(5), vec![1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn chain_rendering() {
        let pts = spec(&["0", "1"], 2).points(&PriorityContext::indexed(2).unwrap()).unwrap();
        let rel = RankedRelation::new(pts, vec![2, 1, 1, 0]).unwrap();
        assert_eq!(rel.chain(), "(1, 1) ≻ (0, 1) ∼ (1, 0) ≻ (0, 0)");
    }
}
