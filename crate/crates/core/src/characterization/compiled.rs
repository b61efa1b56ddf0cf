//! Axioms specialised to rank vectors over a fixed point set.
//!
//! For a relation given by ranks every quadruple axiom reduces to a statement
//! about ordered pairs: two pairs that meet the hypotheses together must get
//! the same `≿` verdict. Grouping the pairs by the hypothesis key turns an
//! `n⁴` scan into an `n²` one, which is what makes enumerating millions of
//! candidates affordable. The generic quadruple checkers in
//! [`crate::axioms`] stay the reference; the tests compare both on every weak
//! order of small grids.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::axioms::{AxiomId, Geometry};
use crate::raf::Raf;
use crate::rational::Rational;
use crate::{Error, Result};

type Pair = (u8, u8);

#[derive(Debug, Clone)]
enum Constraint {
    /// Every pair must be strictly ordered: `rank[a] < rank[b]`.
    Strict(Vec<Pair>),
    /// Every group must be uniformly `≿` or uniformly not `≿`.
    Uniform(Vec<Vec<Pair>>),
}

#[derive(Debug, Clone)]
pub(crate) struct CompiledAxiom {
    pub(crate) axiom: AxiomId,
    constraint: Constraint,
}

fn sign_code(o: Ordering) -> i8 {
    o as i8
}

fn grouped<K: Ord>(keyed: impl Iterator<Item = (K, Pair)>) -> Constraint {
    let mut groups: BTreeMap<K, Vec<Pair>> = BTreeMap::new();
    for (key, pair) in keyed {
        groups.entry(key).or_default().push(pair);
    }
    Constraint::Uniform(groups.into_values().filter(|g| g.len() > 1).collect())
}

impl CompiledAxiom {
    pub(crate) fn compile(axiom: AxiomId, points: &[Raf]) -> Result<Self> {
        let n = points.len();
        debug_assert!(n <= u8::MAX as usize + 1);
        let geo = Geometry::new(points, true);
        let arity = points.first().map_or(0, Raf::arity);
        let all_pairs = (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
        let distinct_pairs = all_pairs.clone().filter(|(a, b)| a != b);
        let pair = |a: usize, b: usize| (a as u8, b as u8);

        let constraint = match axiom {
            AxiomId::StrongMonotonicity => Constraint::Strict(
                distinct_pairs
                    .filter(|&(a, b)| {
                        geo.single_difference(a, b)
                            .is_some_and(|y| geo.sign(a, b, y) == Ordering::Greater)
                    })
                    .map(|(a, b)| pair(a, b))
                    .collect(),
            ),
            AxiomId::WeakDominance => Constraint::Strict(
                distinct_pairs
                    .filter(|&(a, b)| geo.strictly_dominates(a, b))
                    .map(|(a, b)| pair(a, b))
                    .collect(),
            ),
            AxiomId::StrongDominance => Constraint::Strict(
                distinct_pairs
                    .filter(|&(a, b)| geo.pointwise_geq_distinct(a, b))
                    .map(|(a, b)| pair(a, b))
                    .collect(),
            ),
            AxiomId::NonCompensation => grouped(all_pairs.map(|(a, b)| {
                let key: Vec<i8> = (0..arity).map(|c| sign_code(geo.sign(a, b, c))).collect();
                (key, pair(a, b))
            })),
            AxiomId::Axiom2MS => grouped(distinct_pairs.filter_map(|(a, b)| {
                let y = geo.single_difference(a, b)?;
                let key: (usize, Rational, Rational) = (
                    y,
                    points[a].values()[y].clone(),
                    points[b].values()[y].clone(),
                );
                Some((key, pair(a, b)))
            })),
            AxiomId::IWA => grouped(all_pairs.flat_map(|(a, b)| {
                let geo = &geo;
                (0..arity).filter_map(move |k| {
                    if geo.sign(a, b, k).is_eq() {
                        return None;
                    }
                    let prefix: Vec<i8> = (0..=k).map(|c| sign_code(geo.sign(a, b, c))).collect();
                    Some(((k, prefix), pair(a, b)))
                })
            })),
            AxiomId::WeakIWA => grouped(distinct_pairs.filter_map(|(a, b)| {
                let k = geo.first_difference(a, b)?;
                Some(((k, sign_code(geo.sign(a, b, k))), pair(a, b)))
            })),
            AxiomId::Reflexive
            | AxiomId::MirrorConsistent
            | AxiomId::Connected
            | AxiomId::Transitive => return Err(Error::UnsupportedAxiom(axiom)),
        };
        Ok(CompiledAxiom { axiom, constraint })
    }

    /// Strictly ordered pairs forced by this axiom, if it is pairwise.
    pub(crate) fn strict_pairs(&self) -> Option<&[Pair]> {
        match &self.constraint {
            Constraint::Strict(pairs) => Some(pairs),
            Constraint::Uniform(_) => None,
        }
    }

    #[inline]
    pub(crate) fn holds(&self, ranks: &[u32]) -> bool {
        let weak = |&(a, b): &Pair| ranks[a as usize] <= ranks[b as usize];
        match &self.constraint {
            Constraint::Strict(pairs) => pairs
                .iter()
                .all(|&(a, b)| ranks[a as usize] < ranks[b as usize]),
            Constraint::Uniform(groups) => groups.iter().all(|g| {
                let first = weak(&g[0]);
                g[1..].iter().all(|p| weak(p) == first)
            }),
        }
    }
}
