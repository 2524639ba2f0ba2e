//! Root data and Weyl group arithmetic for types A_{n-1} and C_n.
//!
//! Both types share one carrier. Letters are signed integers: `i` is the
//! unbarred letter and `-i` its bar. The ordered alphabet of type C is
//! `1 < 2 < ... < n < n̄ < ... < 1̄`; type A only uses the unbarred half.
//! Weyl group elements are stored in window notation, which for type A is
//! the ordinary one-line notation of a permutation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
}

impl Family {
    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::C => 'C',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::Parse(format!("unknown Lie type {other:?}"))),
        }
    }
}

/// A root system of type A_{n-1} (acting on `[n]`) or C_n (acting on `[n̄]`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    n: usize,
}

impl LieType {
    /// Ranks above 16 are rejected; nothing in this crate is feasible there.
    pub const MAX_N: usize = 16;

    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::A => 2,
            Family::C => 1,
        };
        if n < min || n > Self::MAX_N {
            return Err(Error::InvalidRank { family: family.as_char(), n });
        }
        Ok(LieType { family, n })
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("type A needs 2 <= n <= 16")
    }

    pub fn c(n: usize) -> Self {
        Self::new(Family::C, n).expect("type C needs 1 <= n <= 16")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn is_c(self) -> bool {
        self.family == Family::C
    }

    /// Letters in clockwise order: `1, ..., n` and then `n̄, ..., 1̄` in type C.
    /// This coincides with the linear order of the alphabet.
    pub fn alphabet(self) -> Vec<Letter> {
        let n = self.n as i32;
        let mut out: Vec<Letter> = (1..=n).map(Letter).collect();
        if self.is_c() {
            out.extend((1..=n).rev().map(|i| Letter(-i)));
        }
        out
    }

    pub fn contains(self, x: Letter) -> bool {
        let a = x.0.unsigned_abs() as usize;
        a >= 1 && a <= self.n && (x.0 > 0 || self.is_c())
    }

    fn circle_len(self) -> usize {
        match self.family {
            Family::A => self.n,
            Family::C => 2 * self.n,
        }
    }

    fn circle_index(self, x: Letter) -> usize {
        if x.0 > 0 {
            x.0 as usize - 1
        } else {
            (2 * self.n as i32 + x.0) as usize
        }
    }

    /// Rank of `x` in the circular order starting at `base`; `base` itself has rank 0.
    pub fn circ_rank(self, base: Letter, x: Letter) -> usize {
        let len = self.circle_len();
        (self.circle_index(x) + len - self.circle_index(base)) % len
    }

    /// `a ≺ b ≺ c` in the circular order starting at `a`, strict on both sides.
    pub fn circ_between(self, a: Letter, b: Letter, c: Letter) -> bool {
        let rb = self.circ_rank(a, b);
        rb > 0 && rb < self.circ_rank(a, c)
    }

    /// Positive roots; type A gives `(i,j)`, type C adds `(i,j̄)` and `(i,ī)`.
    pub fn positive_roots(self) -> Vec<RootLabel> {
        let n = self.n;
        let mut roots = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                roots.push(RootLabel::Diff(i, j));
            }
        }
        if self.is_c() {
            for i in 1..=n {
                for j in i + 1..=n {
                    roots.push(RootLabel::Sum(i, j));
                }
            }
            for i in 1..=n {
                roots.push(RootLabel::Long(i));
            }
        }
        roots
    }

    /// `ρ = (n-1, ..., 0)` in type A and `(n, ..., 1)` in type C.
    pub fn rho(self) -> Vec<i64> {
        let n = self.n as i64;
        match self.family {
            Family::A => (0..n).map(|i| n - 1 - i).collect(),
            Family::C => (0..n).map(|i| n - i).collect(),
        }
    }

    /// Validates a dominant weight given as a partition; trailing zeros are optional.
    pub fn dominant(self, mu: &[i64]) -> Result<Partition> {
        if mu.len() > self.n {
            return Err(Error::NotDominant(mu.to_vec(), format!("more than n = {} parts", self.n)));
        }
        if mu.iter().any(|&p| p < 0) {
            return Err(Error::NotDominant(mu.to_vec(), "negative part".into()));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(mu.to_vec(), "parts are not weakly decreasing".into()));
        }
        let parts: Vec<usize> = mu.iter().map(|&p| p as usize).filter(|&p| p > 0).collect();
        if self.family == Family::A && parts.len() >= self.n {
            return Err(Error::NotDominant(
                mu.to_vec(),
                format!("type A requires mu_{} = 0", self.n),
            ));
        }
        Ok(Partition { parts })
    }

    /// Type A weights live in `Z^n / Z(1,...,1)`; the representative with last
    /// coordinate zero is returned. Type C weights are returned unchanged.
    pub fn normalize_weight(self, weight: &[i64]) -> Vec<i64> {
        match self.family {
            Family::A => {
                let last = *weight.last().unwrap_or(&0);
                weight.iter().map(|&c| c - last).collect()
            }
            Family::C => weight.to_vec(),
        }
    }

    pub fn weights_equal(self, a: &[i64], b: &[i64]) -> bool {
        a.len() == b.len() && self.normalize_weight(a) == self.normalize_weight(b)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.n - 1),
            Family::C => write!(f, "C{}", self.n),
        }
    }
}

/// A letter of `[n̄]`; negative values are barred.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    pub fn abs(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `+1` for unbarred letters, `-1` for barred ones.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn value(self) -> i32 {
        self.0
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0 < 0, self.0).cmp(&(other.0 < 0, other.0))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{305}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// Accepts `3`, `-3`, `3b`, `~3` and `3` followed by a combining overline or macron.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidLetter(s.to_string());
        let (digits, barred) = if let Some(rest) = t.strip_prefix('-').or_else(|| t.strip_prefix('~')) {
            (rest, true)
        } else if let Some(rest) = t
            .strip_suffix('b')
            .or_else(|| t.strip_suffix('\u{305}'))
            .or_else(|| t.strip_suffix('\u{304}'))
        {
            (rest, true)
        } else {
            (t, false)
        };
        let v: i32 = digits.parse().map_err(|_| bad())?;
        if v <= 0 {
            return Err(bad());
        }
        Ok(Letter(if barred { -v } else { v }))
    }
}

/// A positive root, doubling as the reflection it names.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootLabel {
    /// `(i,j)`: `ε_i - ε_j`, with `i < j`.
    Diff(usize, usize),
    /// `(i,j̄)`: `ε_i + ε_j`, with `i < j` (type C only).
    Sum(usize, usize),
    /// `(i,ī)`: `2ε_i` (type C only).
    Long(usize),
}

impl RootLabel {
    /// The reflection exchanging the values at positions `p` and `q` of `[n̄]`.
    pub fn from_positions(p: Letter, q: Letter) -> Result<RootLabel> {
        let bad = || Error::InvalidRoot(format!("positions {p},{q}"));
        if p.0 == 0 || q.0 == 0 || p == q {
            return Err(bad());
        }
        let (p, q) = match (p.is_barred(), q.is_barred()) {
            (true, true) => (p.bar(), q.bar()),
            (true, false) => (q, p),
            _ => (p, q),
        };
        let i = p.0 as usize;
        if !q.is_barred() {
            let j = q.0 as usize;
            Ok(RootLabel::Diff(i.min(j), i.max(j)))
        } else {
            let m = q.abs() as usize;
            if m == i {
                Ok(RootLabel::Long(i))
            } else {
                Ok(RootLabel::Sum(i.min(m), i.max(m)))
            }
        }
    }

    /// The two positions of `[n̄]` exchanged by the reflection (besides their bars).
    pub fn positions(self) -> (Letter, Letter) {
        match self {
            RootLabel::Diff(i, j) => (Letter(i as i32), Letter(j as i32)),
            RootLabel::Sum(i, j) => (Letter(i as i32), Letter(-(j as i32))),
            RootLabel::Long(i) => (Letter(i as i32), Letter(-(i as i32))),
        }
    }

    pub fn is_valid_for(self, lie: LieType) -> bool {
        let n = lie.n();
        match self {
            RootLabel::Diff(i, j) => 1 <= i && i < j && j <= n,
            RootLabel::Sum(i, j) => lie.is_c() && 1 <= i && i < j && j <= n,
            RootLabel::Long(i) => lie.is_c() && 1 <= i && i <= n,
        }
    }

    /// `⟨λ, α^∨⟩`.
    pub fn coroot_pairing(self, lambda: &[i64]) -> i64 {
        match self {
            RootLabel::Diff(i, j) => lambda[i - 1] - lambda[j - 1],
            RootLabel::Sum(i, j) => lambda[i - 1] + lambda[j - 1],
            RootLabel::Long(i) => lambda[i - 1],
        }
    }

    pub fn root_vector(self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        match self {
            RootLabel::Diff(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = -1;
            }
            RootLabel::Sum(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = 1;
            }
            RootLabel::Long(i) => v[i - 1] = 2,
        }
        v
    }

    pub fn coroot_vector(self, n: usize) -> Vec<i64> {
        match self {
            RootLabel::Long(i) => {
                let mut v = vec![0; n];
                v[i - 1] = 1;
                v
            }
            _ => self.root_vector(n),
        }
    }

    /// `⟨ρ, α^∨⟩`, always a positive integer.
    pub fn rho_pairing(self, lie: LieType) -> i64 {
        self.coroot_pairing(&lie.rho())
    }

    /// The affine reflection `s_{α,l}`: `λ ↦ λ - (⟨λ,α^∨⟩ - l) α`.
    pub fn affine_reflect(self, lambda: &[i64], level: i64) -> Vec<i64> {
        let c = self.coroot_pairing(lambda) - level;
        let alpha = self.root_vector(lambda.len());
        lambda.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.positions();
        write!(f, "({p},{q})")
    }
}

impl FromStr for RootLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("root {s:?}")))?;
        let p: Letter = a.parse()?;
        let q: Letter = b.parse()?;
        let root = RootLabel::from_positions(p, q)?;
        if root.positions() != (p, q) {
            return Err(Error::InvalidRoot(s.to_string()));
        }
        Ok(root)
    }
}

/// A permutation (type A) or signed permutation (type C) in window notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    lie: LieType,
    window: Vec<Letter>,
}

impl WeylElement {
    pub fn identity(lie: LieType) -> Self {
        WeylElement { lie, window: (1..=lie.n() as i32).map(Letter).collect() }
    }

    pub fn from_window(lie: LieType, window: &[i32]) -> Result<Self> {
        let err = |reason: &str| Error::InvalidElement { window: window.to_vec(), reason: reason.into() };
        if window.len() != lie.n() {
            return Err(err("window length differs from the rank"));
        }
        let mut seen = vec![false; lie.n() + 1];
        for &x in window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > lie.n() {
                return Err(err("entry out of range"));
            }
            if x < 0 && !lie.is_c() {
                return Err(err("barred entry in type A"));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(err("repeated absolute value"));
            }
        }
        Ok(WeylElement { lie, window: window.iter().map(|&x| Letter(x)).collect() })
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn window(&self) -> &[Letter] {
        &self.window
    }

    pub fn window_values(&self) -> Vec<i32> {
        self.window.iter().map(|l| l.0).collect()
    }

    /// `w(p)` for any position `p` of `[n̄]`, using `w(ī) = bar(w(i))`.
    pub fn value(&self, pos: Letter) -> Letter {
        let x = self.window[pos.abs() as usize - 1];
        if pos.is_barred() {
            x.bar()
        } else {
            x
        }
    }

    /// The window prefix `w[1, k]`.
    pub fn prefix(&self, k: usize) -> Vec<Letter> {
        self.window[..k].to_vec()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, x)| x.0 == i as i32 + 1)
    }

    /// Coxeter length: inversions in type A, and in type C the count of
    /// `(k,l) ∈ [n] × [n̄]` with `k ≤ |l|` and `w(k) > w(l)`.
    pub fn length(&self) -> usize {
        let n = self.window.len();
        let w = &self.window;
        let mut count = 0;
        for k in 0..n {
            for l in k + 1..n {
                if w[k] > w[l] {
                    count += 1;
                }
            }
        }
        if self.lie.is_c() {
            for k in 0..n {
                for m in k..n {
                    if w[k] > w[m].bar() {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// `(-1)^{ℓ(w)}`.
    pub fn det(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Right multiplication by the reflection `s_r`; acts on positions.
    pub fn apply_root(&self, r: RootLabel) -> WeylElement {
        debug_assert!(r.is_valid_for(self.lie), "{r} is not a root of {}", self.lie);
        let mut window = self.window.clone();
        match r {
            RootLabel::Diff(i, j) => window.swap(i - 1, j - 1),
            RootLabel::Sum(i, j) => {
                window[i - 1] = self.window[j - 1].bar();
                window[j - 1] = self.window[i - 1].bar();
            }
            RootLabel::Long(i) => window[i - 1] = self.window[i - 1].bar(),
        }
        WeylElement { lie: self.lie, window }
    }

    /// Exchanges the values at positions `p` and `q` of `[n̄]`.
    pub fn swap_positions(&self, p: Letter, q: Letter) -> Result<WeylElement> {
        let r = RootLabel::from_positions(p, q)?;
        if !r.is_valid_for(self.lie) {
            return Err(Error::InvalidRoot(r.to_string()));
        }
        Ok(self.apply_root(r))
    }

    /// The linear action on weights: `w ε_i = sign(w(i)) ε_{|w(i)|}`.
    pub fn act(&self, lambda: &[i64]) -> Vec<i64> {
        let mut out = vec![0; lambda.len()];
        for (i, x) in self.window.iter().enumerate() {
            out[x.abs() as usize - 1] = x.sign() as i64 * lambda[i];
        }
        out
    }

    /// All elements of the Weyl group, in lexicographic order of windows.
    pub fn all(lie: LieType) -> Vec<WeylElement> {
        let n = lie.n();
        let mut out = Vec::new();
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        loop {
            if lie.is_c() {
                for mask in 0u32..(1 << n) {
                    let window: Vec<Letter> = perm
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| Letter(if mask >> i & 1 == 1 { -x } else { x }))
                        .collect();
                    out.push(WeylElement { lie, window });
                }
            } else {
                out.push(WeylElement { lie, window: perm.iter().map(|&x| Letter(x)).collect() });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out.sort();
        out
    }

    /// The longest element: `n ... 1` in type A, `1̄ ... n̄` in type C.
    pub fn longest(lie: LieType) -> WeylElement {
        let n = lie.n() as i32;
        let window = match lie.family() {
            Family::A => (1..=n).rev().map(Letter).collect(),
            Family::C => (1..=n).map(|i| Letter(-i)).collect(),
        };
        WeylElement { lie, window }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.lie.n() >= 10;
        for (i, x) in self.window.iter().enumerate() {
            if wide && i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A partition without trailing zeros, used for dominant weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            let mu = parts.iter().map(|&p| p as i64).collect();
            return Err(Error::NotDominant(mu, "parts are not weakly decreasing".into()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `μ_1`, the number of columns.
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse lexicographic order.
    pub fn all_of_size(size: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rest: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                rec(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated list such as `3,2,1`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("integer list {s:?}"))))
        .collect()
}
