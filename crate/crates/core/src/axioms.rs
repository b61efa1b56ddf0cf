//! Executable axiom checkers.
//!
//! Every checker takes an arbitrary [`PreferenceRelation`] and a finite sample
//! of RAFs, enumerates the qualifying tuples in canonical order (sample
//! indices, lexicographically) and reports the first violation, or all of them
//! on request. The weak relation `A ≿ B` is read off the three-valued outcome
//! as `FirstPreferred | Indifferent`.
//!
//! Quadruple axioms scan all `n⁴` ordered quadruples while the sample has at
//! most [`CheckConfig::exhaustive_cap`] points and fall back to seeded uniform
//! draws above that.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::raf::Raf;
use crate::relations::{ComparisonOutcome, PreferenceRelation};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    Reflexive,
    MirrorConsistent,
    Connected,
    Transitive,
    WeakDominance,
    StrongMonotonicity,
    StrongDominance,
    NonCompensation,
    Axiom2MS,
    IWA,
    WeakIWA,
}

impl AxiomId {
    pub const ALL: [AxiomId; 11] = [
        AxiomId::Reflexive,
        AxiomId::MirrorConsistent,
        AxiomId::Connected,
        AxiomId::Transitive,
        AxiomId::WeakDominance,
        AxiomId::StrongMonotonicity,
        AxiomId::StrongDominance,
        AxiomId::NonCompensation,
        AxiomId::Axiom2MS,
        AxiomId::IWA,
        AxiomId::WeakIWA,
    ];

    pub const ORDER: [AxiomId; 4] = [
        AxiomId::Reflexive,
        AxiomId::MirrorConsistent,
        AxiomId::Connected,
        AxiomId::Transitive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Reflexive => "Reflexive",
            AxiomId::MirrorConsistent => "MirrorConsistent",
            AxiomId::Connected => "Connected",
            AxiomId::Transitive => "Transitive",
            AxiomId::WeakDominance => "WeakDominance",
            AxiomId::StrongMonotonicity => "StrongMonotonicity",
            AxiomId::StrongDominance => "StrongDominance",
            AxiomId::NonCompensation => "NonCompensation",
            AxiomId::Axiom2MS => "Axiom2MS",
            AxiomId::IWA => "IWA",
            AxiomId::WeakIWA => "WeakIWA",
        }
    }

    /// Number of RAFs in one tuple of this axiom.
    pub fn tuple_size(self) -> usize {
        match self {
            AxiomId::Reflexive => 1,
            AxiomId::MirrorConsistent
            | AxiomId::Connected
            | AxiomId::WeakDominance
            | AxiomId::StrongMonotonicity
            | AxiomId::StrongDominance => 2,
            AxiomId::Transitive => 3,
            AxiomId::NonCompensation | AxiomId::Axiom2MS | AxiomId::IWA | AxiomId::WeakIWA => 4,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom `{0}`")]
pub struct UnknownAxiom(pub alloc::string::String);

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    /// Stable names plus the short forms `SM`, `SD`, `WD`, `NC`, `Axiom2`.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let s = s.trim();
        let alias = match s {
            "SM" => Some(AxiomId::StrongMonotonicity),
            "SD" => Some(AxiomId::StrongDominance),
            "WD" => Some(AxiomId::WeakDominance),
            "NC" => Some(AxiomId::NonCompensation),
            "Axiom2" => Some(AxiomId::Axiom2MS),
            _ => None,
        };
        alias
            .or_else(|| AxiomId::ALL.into_iter().find(|a| a.name() == s))
            .ok_or_else(|| UnknownAxiom(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Largest sample scanned exhaustively by quadruple axioms.
    pub exhaustive_cap: usize,
    /// Quadruple draws when the sample exceeds the cap.
    pub draws: u64,
    pub seed: u64,
    /// Keep every violation instead of only the first.
    pub all_violations: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            exhaustive_cap: 12,
            draws: 20_000,
            seed: 0,
            all_violations: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sampled { draws: u64, seed: u64 },
}

/// One comparison that took part in a violation. `first` and `second` index
/// into [`AxiomViolation::witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Observation {
    pub first: usize,
    pub second: usize,
    pub outcome: ComparisonOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: AxiomId,
    /// Sample indices of the offending tuple.
    pub points: Vec<usize>,
    pub witness: Vec<Raf>,
    /// 1-based alternative index for `IWA`, `WeakIWA` and `Axiom2MS`.
    pub k: Option<usize>,
    pub observed: Vec<Observation>,
}

impl AxiomViolation {
    /// Re-evaluates the witness against `rel`; true iff it still violates the
    /// axiom.
    pub fn replay<R: PreferenceRelation + ?Sized>(&self, rel: &R) -> Result<bool> {
        let geo = Geometry::new(&self.witness, false);
        let mut out = Outcomes::direct(rel, &self.witness);
        let tuple: Vec<usize> = (0..self.witness.len()).collect();
        Ok(matches!(
            evaluate(self.axiom, &tuple, &geo, &mut out)?,
            Eval::Violated { .. }
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    /// No tuple met the axiom's hypotheses.
    VacuousPass,
    Fail,
}

impl AxiomStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomStatus::Pass => "pass",
            AxiomStatus::VacuousPass => "vacuous-pass",
            AxiomStatus::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    pub mode: ScanMode,
    pub tuples_examined: u64,
    /// Tuples meeting the axiom's hypotheses.
    pub qualifying: u64,
    pub violation_count: u64,
    /// The first violation, or all of them with `all_violations`.
    pub violations: Vec<AxiomViolation>,
}

impl AxiomResult {
    pub fn status(&self) -> AxiomStatus {
        if self.violation_count > 0 {
            AxiomStatus::Fail
        } else if self.qualifying == 0 {
            AxiomStatus::VacuousPass
        } else {
            AxiomStatus::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn first_violation(&self) -> Option<&AxiomViolation> {
        self.violations.first()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, axiom: AxiomId) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

/// Coordinate signs between sample points, precomputed for small samples.
pub(crate) struct Geometry<'a> {
    points: &'a [Raf],
    arity: usize,
    table: Option<Vec<Ordering>>,
}

impl<'a> Geometry<'a> {
    pub(crate) fn new(points: &'a [Raf], precompute: bool) -> Self {
        let arity = points.first().map_or(0, Raf::arity);
        let table = precompute.then(|| {
            let n = points.len();
            let mut t = Vec::with_capacity(n * n * arity);
            for a in points {
                for b in points {
                    t.extend(a.values().iter().zip(b.values()).map(|(x, y)| x.cmp(y)));
                }
            }
            t
        });
        Geometry {
            points,
            arity,
            table,
        }
    }

    #[inline]
    pub(crate) fn sign(&self, i: usize, j: usize, c: usize) -> Ordering {
        match &self.table {
            Some(t) => t[(i * self.points.len() + j) * self.arity + c],
            None => self.points[i].values()[c].cmp(&self.points[j].values()[c]),
        }
    }

    pub(crate) fn first_difference(&self, i: usize, j: usize) -> Option<usize> {
        (0..self.arity).find(|&c| self.sign(i, j, c).is_ne())
    }

    fn same_signs_through(&self, (a, b): (usize, usize), (c, d): (usize, usize), last: usize) -> bool {
        (0..=last).all(|x| self.sign(a, b, x) == self.sign(c, d, x))
    }

    /// The single coordinate where `i` and `j` differ, if exactly one.
    pub(crate) fn single_difference(&self, i: usize, j: usize) -> Option<usize> {
        let mut found = None;
        for c in 0..self.arity {
            if self.sign(i, j, c).is_ne() {
                if found.is_some() {
                    return None;
                }
                found = Some(c);
            }
        }
        found
    }

    pub(crate) fn strictly_dominates(&self, i: usize, j: usize) -> bool {
        (0..self.arity).all(|c| self.sign(i, j, c) == Ordering::Greater)
    }

    pub(crate) fn pointwise_geq_distinct(&self, i: usize, j: usize) -> bool {
        let mut differs = false;
        for c in 0..self.arity {
            match self.sign(i, j, c) {
                Ordering::Less => return false,
                Ordering::Greater => differs = true,
                Ordering::Equal => {}
            }
        }
        differs
    }

    // Hypotheses of the quadruple axioms, shared by the checkers and the
    // public qualification predicates.

    fn non_compensation(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.arity == 0 || self.same_signs_through((a, b), (c, d), self.arity - 1)
    }

    fn axiom2(&self, a: usize, b: usize, c: usize, d: usize) -> Option<usize> {
        let y = self.single_difference(a, b)?;
        let cd_agree_off_y = (0..self.arity).all(|x| x == y || self.sign(c, d, x).is_eq());
        (cd_agree_off_y && self.sign(a, c, y).is_eq() && self.sign(b, d, y).is_eq()).then_some(y)
    }

    fn iwa_at(&self, a: usize, b: usize, c: usize, d: usize, k: usize) -> bool {
        self.sign(a, b, k).is_ne() && self.same_signs_through((a, b), (c, d), k)
    }

    fn iwa(&self, a: usize, b: usize, c: usize, d: usize) -> Option<usize> {
        (0..self.arity).find(|&k| self.iwa_at(a, b, c, d, k))
    }

    fn weak_iwa(&self, a: usize, b: usize, c: usize, d: usize) -> Option<usize> {
        let k = self.first_difference(a, b)?;
        (self.first_difference(c, d) == Some(k) && self.sign(a, b, k) == self.sign(c, d, k))
            .then_some(k)
    }
}

/// Outcome lookups, memoized when the sample is small enough for a dense table.
struct Outcomes<'a, R: ?Sized> {
    rel: &'a R,
    points: &'a [Raf],
    memo: Option<Vec<Option<ComparisonOutcome>>>,
}

const DENSE_OUTCOME_LIMIT: usize = 1 << 22;

impl<'a, R: PreferenceRelation + ?Sized> Outcomes<'a, R> {
    fn direct(rel: &'a R, points: &'a [Raf]) -> Self {
        Outcomes {
            rel,
            points,
            memo: None,
        }
    }

    fn memoized(rel: &'a R, points: &'a [Raf]) -> Self {
        let n = points.len();
        let memo = n
            .checked_mul(n)
            .filter(|&sq| sq <= DENSE_OUTCOME_LIMIT)
            .map(|sq| vec![None; sq]);
        Outcomes { rel, points, memo }
    }

    fn get(&mut self, i: usize, j: usize) -> Result<ComparisonOutcome> {
        let n = self.points.len();
        if let Some(memo) = &mut self.memo {
            if let Some(o) = memo[i * n + j] {
                return Ok(o);
            }
            let o = self.rel.compare(&self.points[i], &self.points[j])?;
            memo[i * n + j] = Some(o);
            Ok(o)
        } else {
            self.rel.compare(&self.points[i], &self.points[j])
        }
    }
}

enum Eval {
    NotApplicable,
    Holds,
    /// `k` is 0-based; observations index into the tuple.
    Violated {
        k: Option<usize>,
        observed: Vec<Observation>,
    },
}

fn obs(first: usize, second: usize, outcome: ComparisonOutcome) -> Observation {
    Observation {
        first,
        second,
        outcome,
    }
}

fn biconditional<R: PreferenceRelation + ?Sized>(
    t: &[usize],
    k: Option<usize>,
    out: &mut Outcomes<'_, R>,
) -> Result<Eval> {
    let ab = out.get(t[0], t[1])?;
    let cd = out.get(t[2], t[3])?;
    Ok(if ab.at_least_as_good() == cd.at_least_as_good() {
        Eval::Holds
    } else {
        Eval::Violated {
            k,
            observed: vec![obs(0, 1, ab), obs(2, 3, cd)],
        }
    })
}

fn require_strict<R: PreferenceRelation + ?Sized>(
    t: &[usize],
    out: &mut Outcomes<'_, R>,
) -> Result<Eval> {
    let ab = out.get(t[0], t[1])?;
    Ok(if ab == ComparisonOutcome::FirstPreferred {
        Eval::Holds
    } else {
        Eval::Violated {
            k: None,
            observed: vec![obs(0, 1, ab)],
        }
    })
}

fn evaluate<R: PreferenceRelation + ?Sized>(
    axiom: AxiomId,
    t: &[usize],
    geo: &Geometry<'_>,
    out: &mut Outcomes<'_, R>,
) -> Result<Eval> {
    use ComparisonOutcome::Indifferent;
    match axiom {
        AxiomId::Reflexive => {
            let aa = out.get(t[0], t[0])?;
            Ok(if aa == Indifferent {
                Eval::Holds
            } else {
                Eval::Violated {
                    k: None,
                    observed: vec![obs(0, 0, aa)],
                }
            })
        }
        AxiomId::MirrorConsistent | AxiomId::Connected => {
            let ab = out.get(t[0], t[1])?;
            let ba = out.get(t[1], t[0])?;
            let ok = if axiom == AxiomId::MirrorConsistent {
                ba == ab.mirror()
            } else {
                ab.at_least_as_good() || ba.at_least_as_good()
            };
            Ok(if ok {
                Eval::Holds
            } else {
                Eval::Violated {
                    k: None,
                    observed: vec![obs(0, 1, ab), obs(1, 0, ba)],
                }
            })
        }
        AxiomId::Transitive => {
            let ab = out.get(t[0], t[1])?;
            if !ab.at_least_as_good() {
                return Ok(Eval::NotApplicable);
            }
            let bc = out.get(t[1], t[2])?;
            if !bc.at_least_as_good() {
                return Ok(Eval::NotApplicable);
            }
            let ac = out.get(t[0], t[2])?;
            Ok(if ac.at_least_as_good() {
                Eval::Holds
            } else {
                Eval::Violated {
                    k: None,
                    observed: vec![obs(0, 1, ab), obs(1, 2, bc), obs(0, 2, ac)],
                }
            })
        }
        AxiomId::WeakDominance => {
            if geo.strictly_dominates(t[0], t[1]) {
                require_strict(t, out)
            } else {
                Ok(Eval::NotApplicable)
            }
        }
        AxiomId::StrongMonotonicity => match geo.single_difference(t[0], t[1]) {
            Some(y) if geo.sign(t[0], t[1], y) == Ordering::Greater => require_strict(t, out),
            _ => Ok(Eval::NotApplicable),
        },
        AxiomId::StrongDominance => {
            if geo.pointwise_geq_distinct(t[0], t[1]) {
                require_strict(t, out)
            } else {
                Ok(Eval::NotApplicable)
            }
        }
        AxiomId::NonCompensation => {
            if geo.non_compensation(t[0], t[1], t[2], t[3]) {
                biconditional(t, None, out)
            } else {
                Ok(Eval::NotApplicable)
            }
        }
        AxiomId::Axiom2MS => match geo.axiom2(t[0], t[1], t[2], t[3]) {
            Some(y) => biconditional(t, Some(y), out),
            None => Ok(Eval::NotApplicable),
        },
        AxiomId::IWA => match geo.iwa(t[0], t[1], t[2], t[3]) {
            Some(k) => biconditional(t, Some(k), out),
            None => Ok(Eval::NotApplicable),
        },
        AxiomId::WeakIWA => match geo.weak_iwa(t[0], t[1], t[2], t[3]) {
            Some(k) => biconditional(t, Some(k), out),
            None => Ok(Eval::NotApplicable),
        },
    }
}

fn validate_sample(sample: &[Raf]) -> Result<()> {
    let first = sample.first().ok_or(Error::EmptySample)?;
    sample.iter().try_for_each(|p| first.ensure_same_context(p))
}

struct Tuples {
    n: usize,
    size: usize,
    mode: ScanMode,
    current: Vec<usize>,
    produced: u64,
    rng: Option<ChaCha8Rng>,
}

impl Tuples {
    fn new(axiom: AxiomId, n: usize, cfg: &CheckConfig) -> Self {
        let size = axiom.tuple_size();
        let mode = if size == 4 && n > cfg.exhaustive_cap {
            ScanMode::Sampled {
                draws: cfg.draws,
                seed: cfg.seed,
            }
        } else {
            ScanMode::Exhaustive
        };
        let rng = matches!(mode, ScanMode::Sampled { .. }).then(|| ChaCha8Rng::seed_from_u64(cfg.seed));
        Tuples {
            n,
            size,
            mode,
            current: Vec::new(),
            produced: 0,
            rng,
        }
    }

    // Ordered pairs skip the diagonal; every other size runs over n^size.
    fn skips(&self, t: &[usize]) -> bool {
        self.size == 2 && t[0] == t[1]
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if let ScanMode::Sampled { draws, .. } = self.mode {
            if self.produced == draws {
                return None;
            }
            let rng = self.rng.as_mut().expect("sampled mode has an rng");
            let n = self.n;
            self.current.clear();
            self.current.extend((0..self.size).map(|_| rng.gen_range(0..n)));
            self.produced += 1;
            return Some(&self.current);
        }
        loop {
            if self.current.is_empty() {
                if self.produced > 0 || self.n == 0 {
                    return None;
                }
                self.current = vec![0; self.size];
            } else {
                let mut pos = self.size;
                loop {
                    if pos == 0 {
                        self.current.clear();
                        self.produced = u64::MAX;
                        return None;
                    }
                    pos -= 1;
                    self.current[pos] += 1;
                    if self.current[pos] < self.n {
                        break;
                    }
                    self.current[pos] = 0;
                }
            }
            if !self.skips(&self.current) {
                self.produced = self.produced.saturating_add(1);
                return Some(&self.current);
            }
        }
    }
}

fn scan<R: PreferenceRelation + ?Sized>(
    axiom: AxiomId,
    sample: &[Raf],
    geo: &Geometry<'_>,
    out: &mut Outcomes<'_, R>,
    cfg: &CheckConfig,
) -> Result<AxiomResult> {
    let mut tuples = Tuples::new(axiom, sample.len(), cfg);
    let mut result = AxiomResult {
        axiom,
        mode: tuples.mode,
        tuples_examined: 0,
        qualifying: 0,
        violation_count: 0,
        violations: Vec::new(),
    };
    while let Some(t) = tuples.advance() {
        result.tuples_examined += 1;
        match evaluate(axiom, t, geo, out)? {
            Eval::NotApplicable => {}
            Eval::Holds => result.qualifying += 1,
            Eval::Violated { k, observed } => {
                result.qualifying += 1;
                result.violation_count += 1;
                if cfg.all_violations || result.violations.is_empty() {
                    result.violations.push(AxiomViolation {
                        axiom,
                        points: t.to_vec(),
                        witness: t.iter().map(|&i| sample[i].clone()).collect(),
                        k: k.map(|k| k + 1),
                        observed,
                    });
                }
            }
        }
    }
    Ok(result)
}

/// Runs the named checkers in the given order.
pub fn check_axioms<R: PreferenceRelation + ?Sized>(
    rel: &R,
    sample: &[Raf],
    axioms: &[AxiomId],
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    validate_sample(sample)?;
    let geo = Geometry::new(sample, sample.len() <= cfg.exhaustive_cap.max(16));
    let mut out = Outcomes::memoized(rel, sample);
    let results = axioms
        .iter()
        .map(|&axiom| scan(axiom, sample, &geo, &mut out, cfg))
        .collect::<Result<_>>()?;
    Ok(AxiomReport { results })
}

/// Reflexivity, mirror consistency, connectedness and transitivity.
pub fn check_order_axioms<R: PreferenceRelation + ?Sized>(rel: &R, sample: &[Raf]) -> Result<AxiomReport> {
    check_axioms(rel, sample, &AxiomId::ORDER, &CheckConfig::default())
}

pub fn check_weak_dominance<R: PreferenceRelation + ?Sized>(rel: &R, sample: &[Raf]) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::WeakDominance], &CheckConfig::default())
}

pub fn check_strong_monotonicity<R: PreferenceRelation + ?Sized>(
    rel: &R,
    sample: &[Raf],
) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::StrongMonotonicity], &CheckConfig::default())
}

pub fn check_strong_dominance<R: PreferenceRelation + ?Sized>(rel: &R, sample: &[Raf]) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::StrongDominance], &CheckConfig::default())
}

pub fn check_non_compensation<R: PreferenceRelation + ?Sized>(
    rel: &R,
    sample: &[Raf],
) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::NonCompensation], &CheckConfig::default())
}

pub fn check_axiom2_ms<R: PreferenceRelation + ?Sized>(rel: &R, sample: &[Raf]) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::Axiom2MS], &CheckConfig::default())
}

pub fn check_iwa<R: PreferenceRelation + ?Sized>(rel: &R, sample: &[Raf]) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::IWA], &CheckConfig::default())
}

pub fn check_weak_iwa<R: PreferenceRelation + ?Sized>(rel: &R, sample: &[Raf]) -> Result<AxiomReport> {
    check_axioms(rel, sample, &[AxiomId::WeakIWA], &CheckConfig::default())
}

fn quad_geometry(a: &Raf, b: &Raf, c: &Raf, d: &Raf) -> Result<[Raf; 4]> {
    let quad = [a.clone(), b.clone(), c.clone(), d.clone()];
    validate_sample(&quad)?;
    Ok(quad)
}

/// The 1-based index `k` at which `(a, b, c, d)` meets the weak IWA
/// hypotheses, if it does.
pub fn weak_iwa_index(a: &Raf, b: &Raf, c: &Raf, d: &Raf) -> Result<Option<usize>> {
    let quad = quad_geometry(a, b, c, d)?;
    Ok(Geometry::new(&quad, false).weak_iwa(0, 1, 2, 3).map(|k| k + 1))
}

/// Whether `(a, b, c, d)` meets the IWA hypotheses at the 1-based index `k`.
pub fn iwa_qualifies_at(a: &Raf, b: &Raf, c: &Raf, d: &Raf, k: usize) -> Result<bool> {
    let quad = quad_geometry(a, b, c, d)?;
    Ok(k >= 1 && k <= a.arity() && Geometry::new(&quad, false).iwa_at(0, 1, 2, 3, k - 1))
}

/// The 1-based coordinate `y` of an Axiom-2 quadruple, if it is one.
pub fn axiom2_coordinate(a: &Raf, b: &Raf, c: &Raf, d: &Raf) -> Result<Option<usize>> {
    let quad = quad_geometry(a, b, c, d)?;
    Ok(Geometry::new(&quad, false).axiom2(0, 1, 2, 3).map(|y| y + 1))
}

/// Whether the up-sets and down-sets of `(a, b)` and `(c, d)` coincide.
pub fn non_compensation_qualifies(a: &Raf, b: &Raf, c: &Raf, d: &Raf) -> Result<bool> {
    let quad = quad_geometry(a, b, c, d)?;
    Ok(Geometry::new(&quad, false).non_compensation(0, 1, 2, 3))
}
