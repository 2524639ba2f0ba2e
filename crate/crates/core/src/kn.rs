//! Kashiwara-Nakashima columns, their splitting, and conditions on column pairs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::weyl::{LieType, Letter};

pub type Column = Vec<Letter>;

fn values(col: &[Letter]) -> Vec<i32> {
    col.iter().map(|x| x.0).collect()
}

pub fn is_strictly_increasing(col: &[Letter]) -> bool {
    col.windows(2).all(|w| w[0] < w[1])
}

/// No `(z, z̄)` with `z = x_p`, `z̄ = x_q` and `q - p ≤ k - z`.
pub fn is_kn_column(col: &[Letter]) -> bool {
    if !is_strictly_increasing(col) {
        return false;
    }
    let k = col.len() as i64;
    for (p, &x) in col.iter().enumerate() {
        if x.is_barred() {
            continue;
        }
        if let Some(q) = col.iter().position(|&y| y == x.bar()) {
            if (q as i64 - p as i64) <= k - x.0 as i64 {
                return false;
            }
        }
    }
    true
}

/// A split column `(rC, lC)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitColumn {
    pub right: Column,
    pub left: Column,
}

/// Splits a column by the substitution sets `I = {z_1 > ... > z_r}` and
/// `J = {t_1 > ... > t_r}`; fails when some `t_i` does not exist.
pub fn split_column(col: &[Letter]) -> Result<SplitColumn> {
    let fail = || Error::SplitFailed(values(col));
    if !is_strictly_increasing(col) {
        return Err(Error::InvalidColumn { column: values(col), reason: "not strictly increasing".into() });
    }
    let present: BTreeSet<u32> = col.iter().map(|x| x.abs()).collect();
    let mut zs: Vec<i32> = col.iter().filter(|x| !x.is_barred() && col.contains(&x.bar())).map(|x| x.0).collect();
    zs.sort_unstable_by(|a, b| b.cmp(a));
    let mut ts = Vec::with_capacity(zs.len());
    let mut bound = i32::MAX;
    for &z in &zs {
        let below = z.min(bound);
        let t = (1..below).rev().find(|&t| !present.contains(&(t as u32))).ok_or_else(fail)?;
        ts.push(t);
        bound = t;
    }
    let mut right = col.to_vec();
    let mut left = col.to_vec();
    for (&z, &t) in zs.iter().zip(&ts) {
        for x in right.iter_mut() {
            if x.0 == -z {
                *x = Letter(-t);
            }
        }
        for x in left.iter_mut() {
            if x.0 == z {
                *x = Letter(t);
            }
        }
    }
    right.sort();
    left.sort();
    Ok(SplitColumn { right, left })
}

/// The column with the positive part of `right` and the negative part of `left`.
pub fn join_split(right: &[Letter], left: &[Letter]) -> Column {
    let mut col: Column = right.iter().filter(|x| !x.is_barred()).chain(left.iter().filter(|x| x.is_barred())).copied().collect();
    col.sort();
    col
}

/// Whether `(right, left)` is the splitting of some KN column.
pub fn is_split_pair(right: &[Letter], left: &[Letter]) -> bool {
    if right.len() != left.len() || !is_strictly_increasing(right) || !is_strictly_increasing(left) {
        return false;
    }
    let col = join_split(right, left);
    col.len() == right.len()
        && is_kn_column(&col)
        && split_column(&col).is_ok_and(|s| s.right == right && s.left == left)
}

/// The entrywise largest sorted column `C ≤ A` with `C ∩ B = ∅`, over `Z`.
pub fn maxcol(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len()];
    let mut cap = i64::MAX;
    for (i, &ai) in a.iter().enumerate().rev() {
        let mut c = ai.min(cap.saturating_sub(1));
        while b.contains(&c) {
            c -= 1;
        }
        out[i] = c;
        cap = c;
    }
    out
}

/// [`maxcol`] checked to stay inside `1..=n`.
pub fn maxcol_in_range(a: &[i64], b: &[i64], n: usize) -> Result<Vec<i64>> {
    let c = maxcol(a, b);
    match c.iter().find(|&&x| x < 1 || x > n as i64) {
        Some(&x) => Err(Error::MaxcolRange(x, n)),
        None => Ok(c),
    }
}

/// Which conditions hold for adjacent columns `C'C` (`C'` on the left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub cond1: bool,
    pub cond2: bool,
    /// Only meaningful for columns of equal height; `false` otherwise.
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
    pub int: Vec<Letter>,
}

/// Condition 1 (or 1′): for `i < l ≤ #C'`, neither `C(i) = C'(l)` nor `C(i) ≺ C'(l) ≺ C'(i)`.
pub fn condition1(lie: LieType, cp: &[Letter], c: &[Letter]) -> bool {
    (0..cp.len()).all(|i| {
        (i + 1..cp.len()).all(|l| c[i] != cp[l] && !lie.circ_between(c[i], cp[l], cp[i]))
    })
}

/// Condition 2 (or 2′): `C'(i)` is the `≺_{C(i)}`-minimum of `C'(i), ..., C'(#C')`.
pub fn condition2(lie: LieType, cp: &[Letter], c: &[Letter]) -> bool {
    (0..cp.len()).all(|i| {
        let rank = |x: Letter| lie.circ_rank(c[i], x);
        cp[i..].iter().all(|&x| rank(cp[i]) <= rank(x))
    })
}

/// `int(C, C')`: letters strictly between `C(i)` and `C'(i)`, minus `±C(i)`.
pub fn interval_set(lie: LieType, cp: &[Letter], c: &[Letter]) -> Vec<Letter> {
    let alphabet = lie.alphabet();
    let mut out = BTreeSet::new();
    for (&a, &b) in c.iter().zip(cp) {
        out.extend(alphabet.iter().filter(|&&x| a < x && x < b));
    }
    for &a in c {
        out.remove(&a);
        out.remove(&a.bar());
    }
    out.into_iter().collect()
}

pub fn check_pair_conditions(lie: LieType, cp: &[Letter], c: &[Letter]) -> PairReport {
    let same = cp.len() == c.len();
    let abs = |col: &[Letter]| col.iter().map(|x| x.abs()).collect::<BTreeSet<_>>();
    let n = Letter(lie.n() as i32);
    let r2 = same
        && c.iter().zip(cp).all(|(&a, &b)| (a <= b && b <= n) || (n.bar() <= a && a <= b));
    let int = if same { interval_set(lie, cp, c) } else { Vec::new() };
    PairReport {
        cond1: cp.len() <= c.len() && condition1(lie, cp, c),
        cond2: cp.len() <= c.len() && condition2(lie, cp, c),
        r1: same && abs(cp) == abs(c),
        r2,
        r3: same && int.is_empty(),
        int,
    }
}

/// Increasing columns of height `k`: `k`-subsets of `[n]` in type A, and
/// subsets of `[n̄]` without a pair `i, ī` in type C.
pub fn all_columns(lie: LieType, k: usize) -> Vec<Column> {
    let n = lie.n();
    let mut out = Vec::new();
    if lie.is_c() {
        // choose absolute values, then signs
        for set in subsets(n, k) {
            for mask in 0u32..(1 << k) {
                let mut col: Column = set
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| Letter(if mask >> i & 1 == 1 { -(v as i32) } else { v as i32 }))
                    .collect();
                col.sort();
                out.push(col);
            }
        }
    } else {
        out.extend(subsets(n, k).into_iter().map(|s| s.into_iter().map(|v| Letter(v as i32)).collect()));
    }
    out.sort();
    out
}

/// Every strictly increasing column of height `k` over `[n̄]`, pairs `i, ī` allowed.
pub fn all_increasing_columns(n: usize, k: usize) -> Vec<Column> {
    let alphabet = LieType::c(n).alphabet();
    subsets(2 * n, k).into_iter().map(|s| s.into_iter().map(|i| alphabet[i - 1]).collect()).collect()
}

/// All KN columns of height `k` over `[n̄]`.
pub fn enumerate_kn_columns(n: usize, k: usize) -> Vec<Column> {
    all_increasing_columns(n, k).into_iter().filter(|c| is_kn_column(c)).collect()
}

/// `k`-subsets of `1..=n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}
