//! Enumeration of weak orders (ordered set partitions) on up to
//! [`HARD_MAX_POINTS`] points.
//!
//! A weak order is built best block first: pick a nonempty subset of the
//! points not yet placed, give it the next rank, repeat. Subsets are tried in
//! increasing bitmask order, which fixes a canonical stream order. With a
//! forced-strict-pair table the walker refuses any block that contains a point
//! while something required to beat it is still unplaced, and accounts for
//! the skipped subtree by its Fubini size so candidate indices agree with the
//! unpruned stream.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::RankedRelation;
use crate::raf::Raf;

/// Bitmask width bounds the point count.
pub const HARD_MAX_POINTS: usize = 24;

/// Ordered Bell (Fubini) numbers `a(0..=n)`, via `a(n) = Σ_k k!·S(n, k)`.
pub fn fubini_table(n: usize) -> Vec<u128> {
    // Stirling numbers of the second kind, row by row.
    let mut stirling = vec![1u128];
    let mut out = vec![1u128];
    for m in 1..=n {
        let mut next = vec![0u128; m + 1];
        for k in 1..=m {
            let stay = if k < m { (k as u128) * stirling[k] } else { 0 };
            next[k] = stay + stirling[k - 1];
        }
        stirling = next;
        let mut factorial = 1u128;
        let mut total = 0u128;
        for (k, s) in stirling.iter().enumerate().skip(1) {
            factorial *= k as u128;
            total += factorial * s;
        }
        out.push(total);
    }
    out
}

/// Number of weak orders on `n` points.
pub fn fubini(n: usize) -> u128 {
    fubini_table(n)[n]
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    remaining: u32,
    allowed: u32,
    subset: u32,
    /// When nonzero this frame tries exactly this subset.
    only: u32,
}

/// Depth-first walker over rank vectors.
#[derive(Debug, Clone)]
pub(crate) struct RankWalker {
    n: usize,
    /// `better[q]`: points that must be ranked strictly above `q`.
    better: Option<Vec<u32>>,
    stack: Vec<Frame>,
    ranks: Vec<u32>,
    root: Option<Frame>,
    fubini: Vec<u128>,
    /// Candidates passed so far, emitted or pruned.
    position: u128,
    emitted: u64,
    pruned: u128,
}

impl RankWalker {
    pub(crate) fn new(n: usize, better: Option<Vec<u32>>) -> Self {
        Self::with_first_block(n, better, 0)
    }

    /// Restricts the walk to weak orders whose best block is `first`
    /// (`0` means no restriction).
    pub(crate) fn with_first_block(n: usize, better: Option<Vec<u32>>, first: u32) -> Self {
        assert!(n <= HARD_MAX_POINTS);
        let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
        let mut walker = RankWalker {
            n,
            better,
            stack: Vec::with_capacity(n),
            ranks: vec![0; n],
            root: None,
            fubini: fubini_table(n),
            position: 0,
            emitted: 0,
            pruned: 0,
        };
        walker.root = (n > 0).then(|| Frame {
            remaining: full,
            allowed: walker.allowed(full),
            subset: 0,
            only: first,
        });
        walker
    }

    fn allowed(&self, remaining: u32) -> u32 {
        match &self.better {
            None => remaining,
            Some(better) => {
                let mut allowed = 0;
                let mut bits = remaining;
                while bits != 0 {
                    let q = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if better[q] & remaining == 0 {
                        allowed |= 1 << q;
                    }
                }
                allowed
            }
        }
    }

    /// Moves to the next candidate and returns its index in the unpruned
    /// stream (relative to this walker's start).
    pub(crate) fn advance(&mut self) -> Option<u128> {
        if let Some(root) = self.root.take() {
            self.stack.push(root);
        }
        loop {
            let depth = self.stack.len();
            let top = self.stack.last_mut()?;
            let next = if top.only != 0 {
                if top.subset == 0 {
                    top.only
                } else {
                    0
                }
            } else {
                (top.subset | !top.remaining).wrapping_add(1) & top.remaining
            };
            if next == 0 {
                self.stack.pop();
                continue;
            }
            top.subset = next;
            let rest = top.remaining & !next;
            if next & !top.allowed != 0 {
                let skipped = self.fubini[rest.count_ones() as usize];
                self.pruned += skipped;
                self.position += skipped;
                continue;
            }
            let rank = (depth - 1) as u32;
            let mut bits = next;
            while bits != 0 {
                self.ranks[bits.trailing_zeros() as usize] = rank;
                bits &= bits - 1;
            }
            if rest == 0 {
                let index = self.position;
                self.position += 1;
                self.emitted += 1;
                return Some(index);
            }
            let allowed = self.allowed(rest);
            self.stack.push(Frame {
                remaining: rest,
                allowed,
                subset: 0,
                only: 0,
            });
        }
    }

    pub(crate) fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub(crate) fn emitted(&self) -> u64 {
        self.emitted
    }

    pub(crate) fn pruned(&self) -> u128 {
        self.pruned
    }

    pub(crate) fn len(&self) -> usize {
        self.n
    }
}

/// Stream of every weak order on a point set, as [`RankedRelation`]s.
#[derive(Debug, Clone)]
pub struct WeakOrders {
    domain: Arc<[Raf]>,
    walker: RankWalker,
}

impl WeakOrders {
    pub(crate) fn new(domain: Arc<[Raf]>) -> Self {
        let walker = RankWalker::new(domain.len(), None);
        WeakOrders { domain, walker }
    }
}

impl Iterator for WeakOrders {
    type Item = RankedRelation;

    fn next(&mut self) -> Option<RankedRelation> {
        self.walker.advance()?;
        debug_assert_eq!(self.walker.len(), self.domain.len());
        Some(RankedRelation::from_parts(
            Arc::clone(&self.domain),
            self.walker.ranks().to_vec(),
        ))
    }
}
