//! Reference implementations used only by the tests. Everything here works on
//! plain vectors and recomputes from definitions, without calling into the library
//! beyond converting its root labels.
#![allow(dead_code)]

use std::collections::BTreeMap;

use chargelab::RootLabel;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    A,
    C,
}

/// Coefficients keyed by `(q-degree, exponent vector)`.
/// `(w, J, level, weight)`.
pub type Pair = (Vec<i32>, Vec<usize>, u32, Vec<i64>);

pub type Terms = BTreeMap<(u32, Vec<i64>), i64>;

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of KN columns of height `k` in type `C_n`: `dim Λ^k - dim Λ^{k-2}` of the vector representation.
pub fn kn_count(n: usize, k: usize) -> usize {
    binom(2 * n, k) - if k >= 2 { binom(2 * n, k - 2) } else { 0 }
}

pub fn conjugate(mu: &[usize]) -> Vec<usize> {
    let width = mu.first().copied().unwrap_or(0);
    (1..=width).map(|j| mu.iter().filter(|&&m| m >= j).count()).collect()
}

/// `|B_μ|` as a product over columns.
pub fn b_mu_count(kind: Kind, n: usize, mu: &[usize]) -> usize {
    conjugate(mu)
        .iter()
        .map(|&h| match kind {
            Kind::A => binom(n, h),
            Kind::C => kn_count(n, h),
        })
        .product()
}

/// Partitions of `size` with at most `max_len` parts.
pub fn partitions(size: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if len == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(left - p, p, len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn padded(mu: &[usize], n: usize) -> Vec<i64> {
    let mut v: Vec<i64> = mu.iter().map(|&m| m as i64).collect();
    v.resize(n, 0);
    v
}

// ---- the Weyl group as signed windows ------------------------------------

pub fn group(kind: Kind, n: usize) -> Vec<Vec<i32>> {
    fn perms(rest: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for idx in 0..rest.len() {
            let x = rest.remove(idx);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(idx, x);
        }
    }
    let mut ps = Vec::new();
    perms(&mut (1..=n as i32).collect(), &mut Vec::new(), &mut ps);
    match kind {
        Kind::A => ps,
        Kind::C => ps
            .into_iter()
            .flat_map(|p| {
                (0u32..1 << n).map(move |mask| {
                    p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect()
                })
            })
            .collect(),
    }
}

pub fn root_vector(r: RootLabel, n: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    match r {
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

/// `2α / (α, α)`.
pub fn coroot_vector(r: RootLabel, n: usize) -> Vec<i64> {
    match r {
        RootLabel::Long(i) => {
            let mut v = vec![0; n];
            v[i - 1] = 1;
            v
        }
        _ => root_vector(r, n),
    }
}

pub fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn rho(kind: Kind, n: usize) -> Vec<i64> {
    match kind {
        Kind::A => (0..n as i64).rev().collect(),
        Kind::C => (1..=n as i64).rev().collect(),
    }
}

pub fn positive_roots(kind: Kind, n: usize) -> Vec<RootLabel> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(RootLabel::Diff(i, j));
            if kind == Kind::C {
                out.push(RootLabel::Sum(i, j));
            }
        }
        if kind == Kind::C {
            out.push(RootLabel::Long(i));
        }
    }
    out
}

/// `w(v)` with `w(ε_k) = ±ε_{|w(k)|}`.
pub fn act(w: &[i32], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (k, &x) in w.iter().enumerate() {
        out[x.unsigned_abs() as usize - 1] += x.signum() as i64 * v[k];
    }
    out
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// The number of positive roots sent to negative roots.
pub fn length(kind: Kind, w: &[i32]) -> usize {
    let n = w.len();
    positive_roots(kind, n).into_iter().filter(|&r| !is_positive(&act(w, &root_vector(r, n)))).count()
}

/// `w s_α` as a window.
pub fn times_reflection(w: &[i32], r: RootLabel) -> Vec<i32> {
    let n = w.len();
    let alpha = root_vector(r, n);
    let coroot = coroot_vector(r, n);
    (0..n)
        .map(|k| {
            let mut e = vec![0; n];
            e[k] = 1;
            let c = coroot[k];
            let s: Vec<i64> = e.iter().zip(&alpha).map(|(x, a)| x - c * a).collect();
            let image = act(w, &s);
            let (m, &sign) = image.iter().enumerate().find(|(_, &x)| x != 0).expect("signed unit vector");
            (m as i32 + 1) * sign as i32
        })
        .collect()
}

/// `Some(true)` for a Bruhat cover, `Some(false)` for a quantum edge.
pub fn qbg_edge(kind: Kind, w: &[i32], r: RootLabel) -> Option<bool> {
    let n = w.len();
    let l = length(kind, w) as i64;
    let v = times_reflection(w, r);
    let lv = length(kind, &v) as i64;
    let height = pair(&rho(kind, n), &coroot_vector(r, n));
    if lv == l + 1 {
        Some(true)
    } else if lv == l - 2 * height + 1 {
        Some(false)
    } else {
        None
    }
}

// ---- the Ram-Yip sum from the chain roots ---------------------------------

/// All admissible folding pairs of a chain, found by walking back from the
/// identity along reversed QBG edges; returns `(w, J, level, weight)`.
pub fn admissible_pairs(kind: Kind, n: usize, roots: &[RootLabel], mu: &[i64]) -> Vec<Pair> {
    let levels: Vec<i64> =
        (0..roots.len()).map(|i| roots[..=i].iter().filter(|&&r| r == roots[i]).count() as i64).collect();
    let mut out = Vec::new();
    // Stack entries: (current element, positions chosen so far in decreasing order, level, λ).
    let mut stack = vec![((1..=n as i32).collect::<Vec<_>>(), Vec::<usize>::new(), 0u32, mu.to_vec())];
    while let Some((u, js, level, lambda)) = stack.pop() {
        let bound = js.last().copied().unwrap_or(roots.len() + 1);
        let mut positions = js.clone();
        positions.reverse();
        out.push((u.clone(), positions, level, act(&u, &lambda)));
        for p in 1..bound {
            let r = roots[p - 1];
            // The path runs `w_{i-1} <- w_i`, so `u` needs an edge to `u s_r`.
            let Some(up) = qbg_edge(kind, &u, r) else { continue };
            let prev = times_reflection(&u, r);
            let coroot = coroot_vector(r, n);
            let alpha = root_vector(r, n);
            let shift = pair(&lambda, &coroot) - levels[p - 1];
            let reflected: Vec<i64> = lambda.iter().zip(&alpha).map(|(x, a)| x - shift * a).collect();
            // A quantum edge back means `w_{i-1} < w_i`: a negative fold, which carries its level.
            let add = if up { 0 } else { levels[p - 1] as u32 };
            let mut next = js.clone();
            next.push(p);
            stack.push((prev, next, level + add, reflected));
        }
    }
    out
}

pub fn ram_yip_terms(kind: Kind, n: usize, roots: &[RootLabel], mu: &[i64]) -> Terms {
    let mut t = Terms::new();
    for (_, _, level, weight) in admissible_pairs(kind, n, roots, mu) {
        *t.entry((level, weight)).or_insert(0) += 1;
    }
    t
}

// ---- characters -----------------------------------------------------------

/// The Schur polynomial `s_μ(x_1..x_n)` by enumerating semistandard tableaux.
pub fn schur(mu: &[usize], n: usize) -> BTreeMap<Vec<i64>, i64> {
    let cells: Vec<(usize, usize)> =
        mu.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut out = BTreeMap::new();
    let mut t: Vec<Vec<usize>> = mu.iter().map(|&len| vec![0; len]).collect();
    fn go(idx: usize, cells: &[(usize, usize)], n: usize, t: &mut Vec<Vec<usize>>, out: &mut BTreeMap<Vec<i64>, i64>) {
        if idx == cells.len() {
            let mut x = vec![0i64; n];
            for row in t.iter() {
                for &v in row {
                    x[v - 1] += 1;
                }
            }
            *out.entry(x).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo = [if c > 0 { t[r][c - 1] } else { 1 }, if r > 0 { t[r - 1][c] + 1 } else { 1 }];
        for v in lo[0].max(lo[1])..=n {
            t[r][c] = v;
            go(idx + 1, cells, n, t, out);
        }
    }
    go(0, &cells, n, &mut t, &mut out);
    out
}

fn sign_of(w: &[i32]) -> i64 {
    let abs: Vec<i32> = w.iter().map(|x| x.abs()).collect();
    let mut inv = 0;
    for i in 0..abs.len() {
        for j in i + 1..abs.len() {
            if abs[i] > abs[j] {
                inv += 1;
            }
        }
    }
    let negs = w.iter().filter(|&&x| x < 0).count();
    if (inv + negs) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn alternant(kind: Kind, lambda: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let mut out = BTreeMap::new();
    for w in group(kind, lambda.len()) {
        *out.entry(act(&w, lambda)).or_insert(0) += sign_of(&w);
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn multiply(a: &BTreeMap<Vec<i64>, i64>, b: &BTreeMap<Vec<i64>, i64>) -> BTreeMap<Vec<i64>, i64> {
    let mut out = BTreeMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let z: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(z).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

// ---- charge ---------------------------------------------------------------

/// Lascoux-Schützenberger charge by cyclic extraction of standard subwords.
pub fn classical_charge(word: &[usize]) -> usize {
    let len = word.len();
    let mut used = vec![false; len];
    let mut total = 0;
    while used.iter().any(|u| !u) {
        let Some(mut pos) = (0..len).rev().find(|&p| !used[p] && word[p] == 1) else {
            panic!("content is not a partition");
        };
        used[pos] = true;
        let mut index = 0;
        for letter in 2.. {
            let left = (0..pos).rev().find(|&p| !used[p] && word[p] == letter);
            let found = match left {
                Some(p) => Some(p),
                None => (pos + 1..len).rev().find(|&p| !used[p] && word[p] == letter).inspect(|_| index += 1),
            };
            match found {
                Some(p) => {
                    used[p] = true;
                    pos = p;
                    total += index;
                }
                None => break,
            }
        }
    }
    total
}

/// `1 < 2 < ... < n < n̄ < ... < 1̄` on signed integers.
pub fn letter_key(x: i32) -> i64 {
    if x > 0 {
        x as i64
    } else {
        1_000 - x.abs() as i64
    }
}

/// The bottom word of the charge biword of a type A filling (columns listed shortest first).
pub fn charge_word_a(columns: &[Vec<i32>]) -> Vec<usize> {
    let m = columns.len();
    let mut biletters: Vec<(i32, usize)> = columns
        .iter()
        .enumerate()
        .flat_map(|(idx, col)| col.iter().map(move |&x| (x, m - idx)))
        .collect();
    biletters.sort_by(|a, b| b.cmp(a));
    biletters.into_iter().map(|(_, j)| j).collect()
}

/// `Σ arm(c)` over descents; halved for type C.
pub fn arm_sum(kind: Kind, columns: &[Vec<i32>]) -> usize {
    let mut total = 0;
    for c in 1..columns.len() {
        for (i, &x) in columns[c].iter().enumerate() {
            if let Some(&left) = columns[c - 1].get(i) {
                if letter_key(x) > letter_key(left) {
                    total += (0..c).filter(|&d| columns[d].len() > i).count();
                }
            }
        }
    }
    match kind {
        Kind::A => total,
        Kind::C => {
            assert!(total % 2 == 0, "type C arm sum is even");
            total / 2
        }
    }
}

// ---- brute-force paths ----------------------------------------------------

/// Subsequences of `seq` that label a QBG path from `u` and end in an element accepted by `accept`.
pub fn paths_from(kind: Kind, u: &[i32], seq: &[RootLabel], accept: impl Fn(&[i32]) -> bool) -> Vec<Vec<RootLabel>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << seq.len() {
        let mut v = u.to_vec();
        let mut labels = Vec::new();
        let mut ok = true;
        for (b, &r) in seq.iter().enumerate() {
            if mask >> b & 1 == 1 {
                if qbg_edge(kind, &v, r).is_none() {
                    ok = false;
                    break;
                }
                v = times_reflection(&v, r);
                labels.push(r);
            }
        }
        if ok && accept(&v) {
            out.push(labels);
        }
    }
    out
}

/// Sorted columns of height `k` over `[n]` (type A) or `[n̄]` with distinct absolute values (type C).
pub fn sorted_columns(kind: Kind, n: usize, k: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let set: Vec<i32> = (1..=n as i32).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let signs = if kind == Kind::C { 1u32 << k } else { 1 };
        for s in 0..signs {
            let mut col: Vec<i32> = set.iter().enumerate().map(|(i, &v)| if s >> i & 1 == 1 { -v } else { v }).collect();
            col.sort_by_key(|&x| letter_key(x));
            out.push(col);
        }
    }
    out
}

/// `a ≺ b ≺ c` strictly in the circular order on the alphabet that starts at `a`.
pub fn circ_between(kind: Kind, n: usize, a: i32, b: i32, c: i32) -> bool {
    let alphabet: Vec<i32> = match kind {
        Kind::A => (1..=n as i32).collect(),
        Kind::C => (1..=n as i32).chain((1..=n as i32).rev().map(|x| -x)).collect(),
    };
    let at = |x: i32| alphabet.iter().position(|&y| y == x).expect("letter in alphabet");
    let size = alphabet.len();
    let rank = |x: i32| (at(x) + size - at(a)) % size;
    0 < rank(b) && rank(b) < rank(c)
}

/// Condition 1 (1′ in type C) for the column pair `cp c`, `cp` on the left.
pub fn condition_one(kind: Kind, n: usize, cp: &[i32], c: &[i32]) -> bool {
    (0..cp.len()).all(|i| (i + 1..cp.len()).all(|l| c[i] != cp[l] && !circ_between(kind, n, c[i], cp[l], cp[i])))
}

/// `max{C : C ≤ A entrywise, C ∩ B = ∅}` by search; `None` if the maximum is not attained entrywise.
pub fn maxcol_search(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let k = a.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let lo = a[0] - (k + b.len()) as i64 - 1;
    let mut best: Option<Vec<i64>> = None;
    let mut all = Vec::new();
    fn go(i: usize, lo: i64, a: &[i64], b: &[i64], cur: &mut Vec<i64>, all: &mut Vec<Vec<i64>>) {
        if i == a.len() {
            all.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(lo, |&x| x + 1);
        for c in start..=a[i] {
            if !b.contains(&c) {
                cur.push(c);
                go(i + 1, lo, a, b, cur, all);
                cur.pop();
            }
        }
    }
    go(0, lo, a, b, &mut Vec::new(), &mut all);
    for c in &all {
        if all.iter().all(|d| d.iter().zip(c).all(|(x, y)| x <= y)) {
            best = Some(c.clone());
        }
    }
    best
}
