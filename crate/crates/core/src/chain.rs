//! The explicit ω_k-chains and the μ-chains built from them.

use std::fmt;
use std::ops::Range;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::weyl::{Family, LieType, Partition, RootLabel};

/// `Γ(k)` for type A; for type C the pair `(Γ_r(k), Γ_l(k))` concatenated.
pub fn omega_chain(lie: LieType, k: usize) -> Result<Vec<RootLabel>> {
    let (mut right, left) = omega_chain_parts(lie, k)?;
    right.extend(left);
    Ok(right)
}

/// `(Γ_r(k), Γ_l(k))`; in type A the right part is empty.
pub fn omega_chain_parts(lie: LieType, k: usize) -> Result<(Vec<RootLabel>, Vec<RootLabel>)> {
    let n = lie.n();
    let max = match lie.family() {
        Family::A => n - 1,
        Family::C => n,
    };
    if k == 0 || k > max {
        return Err(Error::ChainIndex { k, max });
    }
    match lie.family() {
        Family::A => {
            let mut out = Vec::with_capacity(k * (n - k));
            for i in 1..=k {
                for j in (k + 1..=n).rev() {
                    out.push(RootLabel::Diff(i, j));
                }
            }
            Ok((Vec::new(), out))
        }
        Family::C => {
            let mut right = Vec::new();
            for i in 2..=k {
                right.extend((1..i).map(|h| RootLabel::Sum(h, i)));
            }
            let mut left = Vec::new();
            for i in 1..=k {
                left.extend((1..i).map(|h| RootLabel::Sum(h, i)));
                left.extend((k + 1..=n).map(|j| RootLabel::Sum(i, j)));
                left.push(RootLabel::Long(i));
                left.extend((k + 1..=n).rev().map(|j| RootLabel::Diff(i, j)));
            }
            Ok((right, left))
        }
    }
}

/// One factor `Γ^j = Γ(μ'_j)` of a μ-chain, as half-open 0-based ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    /// The column index `j`; segments appear in chain order `j = μ_1, ..., 1`.
    pub column: usize,
    /// `μ'_j`.
    pub height: usize,
    /// `Γ_r^j`; empty in type A.
    pub right: Range<usize>,
    /// `Γ_l^j`, or all of `Γ^j` in type A.
    pub left: Range<usize>,
}

impl Segment {
    pub fn range(&self) -> Range<usize> {
        self.right.start..self.left.end
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuChain {
    lie: LieType,
    mu: Partition,
    roots: Vec<RootLabel>,
    levels: Vec<usize>,
    segments: Vec<Segment>,
}

impl MuChain {
    pub fn new(lie: LieType, mu: &[i64]) -> Result<Self> {
        let mu = lie.dominant(mu)?;
        Self::from_partition(lie, mu)
    }

    pub fn from_partition(lie: LieType, mu: Partition) -> Result<Self> {
        let mu = lie.dominant(&mu.padded(0))?;
        let conj = mu.conjugate();
        let mut roots = Vec::new();
        let mut segments = Vec::new();
        for j in (1..=mu.width()).rev() {
            let height = conj.parts()[j - 1];
            let (right, left) = omega_chain_parts(lie, height)?;
            let start = roots.len();
            let mid = start + right.len();
            roots.extend(right);
            roots.extend(left);
            segments.push(Segment { column: j, height, right: start..mid, left: mid..roots.len() });
        }
        let levels = (0..roots.len())
            .map(|i| roots[..=i].iter().filter(|&&r| r == roots[i]).count())
            .collect();
        Ok(MuChain { lie, mu, roots, levels, segments })
    }

    /// A chain given by an explicit root sequence, e.g. another reduced alcove path for `mu`.
    /// Levels are recomputed from the roots; there is no column structure, so such a chain
    /// supports folding, weights and levels but not the filling map.
    pub fn from_roots(lie: LieType, mu: &[i64], roots: Vec<RootLabel>) -> Result<Self> {
        let mu = lie.dominant(mu)?;
        if let Some(r) = roots.iter().find(|r| !r.is_valid_for(lie)) {
            return Err(Error::InvalidRoot(format!("{r} is not a positive root of {lie}")));
        }
        let levels = (0..roots.len())
            .map(|i| roots[..=i].iter().filter(|&&r| r == roots[i]).count())
            .collect();
        Ok(MuChain { lie, mu, roots, levels, segments: Vec::new() })
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn mu_vector(&self) -> Vec<i64> {
        self.mu.padded(self.lie.n())
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[RootLabel] {
        &self.roots
    }

    /// The root at 1-based position `p`.
    pub fn root(&self, p: usize) -> RootLabel {
        self.roots[p - 1]
    }

    /// The affine level `l_p` at 1-based position `p`.
    pub fn level(&self, p: usize) -> usize {
        self.levels[p - 1]
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Segments in chain order, i.e. for `j = μ_1` down to `1`.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// The segment `Γ^j`.
    pub fn segment(&self, j: usize) -> &Segment {
        &self.segments[self.segments.len() - j]
    }

    pub fn to_json(&self) -> Value {
        let segments: Vec<Value> = self
            .segments
            .iter()
            .map(|s| {
                json!({
                    "column": s.column,
                    "height": s.height,
                    "right": [s.right.start + 1, s.right.end],
                    "left": [s.left.start + 1, s.left.end],
                })
            })
            .collect();
        json!({
            "schema": "charge-lab.chain.v1",
            "type": self.lie.family().to_string(),
            "n": self.lie.n(),
            "mu": self.mu.parts(),
            "roots": self.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "levels": self.levels,
            "segments": segments,
        })
    }
}

impl fmt::Display for MuChain {
    /// Type A factors are separated by `|`. Type C factors are separated by
    /// `||`, and each factor shows `Γ_r | Γ_l`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |r: &Range<usize>| {
            self.roots[r.clone()].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        let parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| match self.lie.family() {
                Family::A => list(&s.left),
                Family::C => format!("{} | {}", list(&s.right), list(&s.left)).trim_start().to_string(),
            })
            .collect();
        let sep = if self.lie.is_c() { " || " } else { " | " };
        f.write_str(&parts.join(sep))
    }
}
