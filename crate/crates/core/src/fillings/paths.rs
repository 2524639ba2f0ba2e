//! The greedy path constructions that invert the filling map.

use crate::error::{Error, Result};
use crate::kn::condition1;
use crate::weyl::{Letter, RootLabel, WeylElement};

fn pos(i: usize) -> Letter {
    Letter(i as i32)
}

/// Moves the value `c` into position `i` by transpositions `(i, m)`, `m`
/// running through `list`, taking `m` whenever `v(i) ≺ v(m) ≺ c`.
///
/// Positions in `list` may be barred (type C).
pub fn path_a(u: &WeylElement, i: usize, c: Letter, list: &[Letter]) -> Result<(Vec<RootLabel>, WeylElement)> {
    let lie = u.lie();
    let mut v = u.clone();
    let mut steps = Vec::new();
    if v.value(pos(i)) == c {
        return Ok((steps, v));
    }
    for &m in list {
        let x = v.value(m);
        if x == c {
            let r = RootLabel::from_positions(pos(i), m)?;
            steps.push(r);
            return Ok((steps, v.apply_root(r)));
        }
        if lie.circ_between(v.value(pos(i)), x, c) {
            let r = RootLabel::from_positions(pos(i), m)?;
            steps.push(r);
            v = v.apply_root(r);
        }
    }
    Err(Error::Unreachable { position: i as i32, target: c.0 })
}

/// `M(u, i, C')`: the `≺_{u(i)}`-largest of `u(i)` and the values `u(l)`,
/// `#C' < l ≤ n`, with `u(i) ≺ u(l) ⪯ C'(i)`.
pub fn circular_max(u: &WeylElement, i: usize, cp: &[Letter]) -> Letter {
    let lie = u.lie();
    let base = u.value(pos(i));
    let target = lie.circ_rank(base, cp[i - 1]);
    (cp.len() + 1..=lie.n())
        .map(|l| u.value(pos(l)))
        .filter(|&x| {
            let r = lie.circ_rank(base, x);
            r > 0 && r <= target
        })
        .max_by_key(|&x| lie.circ_rank(base, x))
        .unwrap_or(base)
}

/// The output of [`path_c`]: the stage I roots, the remaining roots, and the end point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathC {
    pub head: Vec<RootLabel>,
    pub tail: Vec<RootLabel>,
    pub end: WeylElement,
}

impl PathC {
    pub fn roots(&self) -> Vec<RootLabel> {
        self.head.iter().chain(&self.tail).copied().collect()
    }
}

/// The segment of the path towards column `cp` that fixes position `i`; its
/// labels form a subsequence of the reverse of `Γ_{ki}`, `k = #cp`.
///
/// Requires Condition 1′ for `cp` over `u[1, k]` and `u[i+1, k] = cp[i+1, k]`.
pub fn path_c(u: &WeylElement, i: usize, cp: &[Letter]) -> Result<PathC> {
    let k = cp.len();
    let n = u.lie().n();
    let current = u.prefix(k);
    if i == 0 || i > k || current[i..] != cp[i..] {
        return Err(Error::PathHypothesis(format!("position {i} with unmatched tail")));
    }
    if !condition1(u.lie(), cp, &current) {
        return Err(Error::PathHypothesis("condition 1' fails".into()));
    }
    let m = circular_max(u, i, cp);
    let stage1: Vec<Letter> = (k + 1..=n).map(pos).collect();
    let (head, ua) = path_a(u, i, m, &stage1)?;
    let mut tail = Vec::new();
    let mut ua2 = ua.clone();
    if ua.value(pos(i)).sign() != cp[i - 1].sign() {
        tail.push(RootLabel::Long(i));
        ua2 = ua.apply_root(RootLabel::Long(i));
    }
    let rest: Vec<Letter> = (k + 1..=n)
        .rev()
        .chain((1..i).rev())
        .map(|l| pos(l).bar())
        .collect();
    let (s, end) = path_a(&ua2, i, cp[i - 1], &rest)?;
    tail.extend(s);
    Ok(PathC { head, tail, end })
}
