//! Folding pairs `(w, J)` over a μ-chain, their statistics and admissibility.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chain::MuChain;
use crate::error::{Error, Result};
use crate::qbg::{edge_by_criterion, EdgeKind};
use crate::weyl::{RootLabel, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoldingPair {
    pub w: WeylElement,
    /// 1-based, strictly increasing chain positions.
    pub positions: Vec<usize>,
}

impl FoldingPair {
    pub fn new(chain: &MuChain, w: WeylElement, positions: Vec<usize>) -> Result<Self> {
        let ok = w.lie() == chain.lie()
            && positions.windows(2).all(|p| p[0] < p[1])
            && positions.iter().all(|&p| p >= 1 && p <= chain.len());
        if !ok {
            return Err(Error::InvalidPositions(positions));
        }
        Ok(FoldingPair { w, positions })
    }

    pub fn roots(&self, chain: &MuChain) -> Vec<RootLabel> {
        self.positions.iter().map(|&p| chain.root(p)).collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FoldSign {
    Positive,
    Negative,
}

/// `π(w, J) = (w_0, ..., w_s)` together with the sign of each fold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedChain {
    pub elements: Vec<WeylElement>,
    pub signs: Vec<FoldSign>,
}

impl FoldedChain {
    pub fn end(&self) -> &WeylElement {
        self.elements.last().expect("w_0 is always present")
    }
}

pub fn fold_chain(chain: &MuChain, fp: &FoldingPair) -> FoldedChain {
    let mut elements = vec![fp.w.clone()];
    let mut signs = Vec::with_capacity(fp.positions.len());
    for &p in &fp.positions {
        let prev = elements.last().unwrap();
        let next = prev.apply_root(chain.root(p));
        signs.push(if next.length() < prev.length() { FoldSign::Positive } else { FoldSign::Negative });
        elements.push(next);
    }
    FoldedChain { elements, signs }
}

/// `(J⁺, J⁻)` as position lists.
pub fn fold_sets(chain: &MuChain, fp: &FoldingPair) -> (Vec<usize>, Vec<usize>) {
    let folded = fold_chain(chain, fp);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (&p, s) in fp.positions.iter().zip(&folded.signs) {
        match s {
            FoldSign::Positive => plus.push(p),
            FoldSign::Negative => minus.push(p),
        }
    }
    (plus, minus)
}

/// `w r̂_{j_1} ... r̂_{j_s}(μ)`.
pub fn weight_of(chain: &MuChain, fp: &FoldingPair) -> Vec<i64> {
    let mut lambda = chain.mu_vector();
    for &p in fp.positions.iter().rev() {
        lambda = chain.root(p).affine_reflect(&lambda, chain.level(p) as i64);
    }
    fp.w.act(&lambda)
}

/// `Σ_{j ∈ J⁻} l_j`.
pub fn level_of(chain: &MuChain, fp: &FoldingPair) -> usize {
    fold_sets(chain, fp).1.iter().map(|&p| chain.level(p)).sum()
}

/// Membership in the admissible set via the defining length identity.
pub fn is_admissible_by_identity(chain: &MuChain, fp: &FoldingPair) -> bool {
    let folded = fold_chain(chain, fp);
    let (_, minus) = fold_sets(chain, fp);
    let rho: i64 = minus.iter().map(|&p| chain.root(p).rho_pairing(chain.lie())).sum();
    let total = fp.w.length() as i64 + folded.end().length() as i64 - fp.positions.len() as i64 + 2 * rho;
    total == 0
}

/// Membership via paths: every step `w_i -> w_{i-1}` is an edge and `w_s` is the identity.
pub fn is_admissible_by_path(chain: &MuChain, fp: &FoldingPair) -> bool {
    let folded = fold_chain(chain, fp);
    let steps_ok = fp
        .positions
        .iter()
        .enumerate()
        .all(|(i, &p)| edge_by_criterion(&folded.elements[i + 1], chain.root(p)).is_some());
    steps_ok && folded.end().is_identity()
}

pub fn is_admissible(chain: &MuChain, fp: &FoldingPair) -> bool {
    let result = is_admissible_by_path(chain, fp);
    debug_assert_eq!(result, is_admissible_by_identity(chain, fp), "admissibility tests disagree");
    result
}

pub fn folding_json(chain: &MuChain, fp: &FoldingPair) -> Value {
    let (_, minus) = fold_sets(chain, fp);
    json!({
        "schema": "charge-lab.folding.v1",
        "w": fp.w.window_values(),
        "J": fp.positions,
        "Jminus": minus,
        "weight": chain.lie().normalize_weight(&weight_of(chain, fp)),
        "level": level_of(chain, fp),
    })
}

/// A DFS state: positions `1..=pending` still to be decided.
#[derive(Clone, Debug)]
struct Frame {
    pending: usize,
    v: WeylElement,
    /// Selected positions, in decreasing order.
    taken: Vec<usize>,
    level: usize,
}

/// An admissible pair together with its level, as produced by the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissible {
    pub pair: FoldingPair,
    pub level: usize,
}

/// Streams the admissible folding pairs of a chain.
///
/// Positions are scanned from `m` down to `1` starting at the identity; a
/// position is either skipped or taken when the current element has an edge
/// labelled by its root. Each leaf is one admissible pair.
pub struct AdmissibleIter<'a> {
    chain: &'a MuChain,
    stack: Vec<Frame>,
}

impl<'a> AdmissibleIter<'a> {
    fn from_frames(chain: &'a MuChain, mut frames: Vec<Frame>) -> Self {
        frames.reverse();
        AdmissibleIter { chain, stack: frames }
    }

    fn expand(chain: &MuChain, f: Frame) -> (Option<Frame>, Frame) {
        let p = f.pending;
        let r = chain.root(p);
        let take = edge_by_criterion(&f.v, r).map(|kind| {
            let mut taken = f.taken.clone();
            taken.push(p);
            // Building backwards, an edge v -> v r means the forward fold goes
            // from v r to v; a quantum edge is a negative fold.
            let extra = if kind == EdgeKind::Quantum { chain.level(p) } else { 0 };
            Frame { pending: p - 1, v: f.v.apply_root(r), taken, level: f.level + extra }
        });
        (take, Frame { pending: p - 1, ..f })
    }
}

impl Iterator for AdmissibleIter<'_> {
    type Item = Admissible;

    fn next(&mut self) -> Option<Admissible> {
        while let Some(f) = self.stack.pop() {
            if f.pending == 0 {
                let mut positions = f.taken;
                positions.reverse();
                return Some(Admissible { pair: FoldingPair { w: f.v, positions }, level: f.level });
            }
            let (take, skip) = Self::expand(self.chain, f);
            if let Some(t) = take {
                self.stack.push(t);
            }
            self.stack.push(skip);
        }
        None
    }
}

pub fn enumerate_admissible(chain: &MuChain) -> AdmissibleIter<'_> {
    let root = Frame { pending: chain.len(), v: WeylElement::identity(chain.lie()), taken: Vec::new(), level: 0 };
    AdmissibleIter::from_frames(chain, vec![root])
}

/// Splits the search into independent subtrees, in the same order the
/// sequential iterator visits them.
pub fn admissible_subtrees(chain: &MuChain, depth: usize) -> Vec<AdmissibleIter<'_>> {
    let mut frontier =
        vec![Frame { pending: chain.len(), v: WeylElement::identity(chain.lie()), taken: Vec::new(), level: 0 }];
    for _ in 0..depth.min(chain.len()) {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for f in frontier {
            if f.pending == 0 {
                next.push(f);
                continue;
            }
            let (take, skip) = AdmissibleIter::expand(chain, f);
            next.push(skip);
            next.extend(take);
        }
        frontier = next;
    }
    frontier.into_iter().map(|f| AdmissibleIter::from_frames(chain, vec![f])).collect()
}

/// All admissible pairs, searched in parallel; the order matches [`enumerate_admissible`].
pub fn collect_admissible(chain: &MuChain) -> Vec<Admissible> {
    admissible_subtrees(chain, 8)
        .into_par_iter()
        .map(|it| it.collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
