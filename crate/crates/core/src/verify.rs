//! Exhaustive small-rank checks of the identities the library relies on.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chain::{omega_chain_parts, MuChain};
use crate::error::{Error, Result};
use crate::fillings::{
    arm_statistic, b_mu_size, charge_of, column_path, content, enumerate_b_mu, filling_map, inverse_filling_map, ord,
    path_a, path_c, validate_b_mu, Filling,
};
use crate::folding::{collect_admissible, is_admissible_by_identity, is_admissible_by_path, weight_of, FoldingPair};
use crate::kn::{self, condition1, is_split_pair, maxcol, maxcol_in_range};
use crate::poly::{charge_formula_t0, ram_yip_t0, weyl_character, BigPoly};
use crate::qbg::{edge_by_criterion, edge_by_length, EdgeKind};
use crate::weyl::{Family, LieType, Letter, Partition, RootLabel, WeylElement};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Qbg,
    Kn,
    Bijection,
    Transport,
    Poly,
    Paths,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Qbg, Suite::Kn, Suite::Bijection, Suite::Transport, Suite::Poly, Suite::Paths];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qbg => "qbg",
            Suite::Kn => "kn",
            Suite::Bijection => "bijection",
            Suite::Transport => "transport",
            Suite::Poly => "poly",
            Suite::Paths => "paths",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Deliberate corruption used to confirm that the harness can fail.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Reverses the kind of the first up edge found by the criterion.
    FlipEdge,
}

impl FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flip-edge" => Ok(Fault::FlipEdge),
            _ => Err(Error::Parse(format!("unknown fault {s:?}"))),
        }
    }
}

/// Which suites run, for which families, and up to which rank and size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    pub suites: Vec<Suite>,
    pub families: Vec<Family>,
    pub a_max_n: usize,
    pub a_max_size: usize,
    pub c_max_n: usize,
    pub c_max_size: usize,
    /// Ranks for the QBG sweep, which is cheap enough to go higher.
    pub qbg_a_max_n: usize,
    pub qbg_c_max_n: usize,
    /// Rank bound for the exponential path searches.
    pub paths_max_n: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            suites: Suite::ALL.to_vec(),
            families: vec![Family::A, Family::C],
            a_max_n: 3,
            a_max_size: 4,
            c_max_n: 2,
            c_max_size: 3,
            qbg_a_max_n: 4,
            qbg_c_max_n: 3,
            paths_max_n: 3,
        }
    }
}

impl Scope {
    /// `default`, a suite name such as `poly`, or a family-qualified suite such as `A-qbg`.
    /// `n` caps the rank of every selected family.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Scope> {
        let mut scope = Scope::default();
        if name != "default" && name != "all" {
            let (family, suite) = match name.split_once('-') {
                Some((f, s)) if f.len() == 1 => (Some(f.parse::<Family>()?), s),
                _ => (None, name),
            };
            scope.suites = vec![suite.parse()?];
            if let Some(f) = family {
                scope.families = vec![f];
            }
        }
        if let Some(n) = n {
            for f in &scope.families {
                LieType::new(*f, n)?;
            }
            scope.a_max_n = n;
            scope.c_max_n = n;
            scope.qbg_a_max_n = n;
            scope.qbg_c_max_n = n;
            scope.paths_max_n = n;
        }
        Ok(scope)
    }

    fn has(&self, f: Family) -> bool {
        self.families.contains(&f)
    }

    /// Every `(type, μ)` pair in range, `μ = ∅` included.
    pub fn cases(&self) -> Vec<(LieType, Partition)> {
        let mut out = Vec::new();
        if self.has(Family::A) {
            for n in 2..=self.a_max_n {
                for size in 0..=self.a_max_size {
                    out.extend(Partition::all_of_size(size, n - 1).into_iter().map(|p| (LieType::a(n), p)));
                }
            }
        }
        if self.has(Family::C) {
            for n in 1..=self.c_max_n {
                for size in 0..=self.c_max_size {
                    out.extend(Partition::all_of_size(size, n).into_iter().map(|p| (LieType::c(n), p)));
                }
            }
        }
        out
    }

    fn qbg_types(&self) -> Vec<LieType> {
        let mut out = Vec::new();
        if self.has(Family::A) {
            out.extend((2..=self.qbg_a_max_n).map(LieType::a));
        }
        if self.has(Family::C) {
            out.extend((1..=self.qbg_c_max_n).map(LieType::c));
        }
        out
    }

    fn path_types(&self) -> Vec<LieType> {
        let mut out = Vec::new();
        if self.has(Family::A) {
            out.extend((2..=self.paths_max_n).map(LieType::a));
        }
        if self.has(Family::C) {
            out.extend((1..=self.paths_max_n).map(LieType::c));
        }
        out
    }
}

/// The outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Up to [`MAX_EXAMPLES`] descriptions of failing cases.
    pub examples: Vec<String>,
}

pub const MAX_EXAMPLES: usize = 5;

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    cases: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: 0, examples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        let room = MAX_EXAMPLES - self.examples.len();
        self.examples.extend(other.examples.into_iter().take(room));
        self
    }

    fn finish(self, suite: Suite, name: impl Into<String>) -> CheckResult {
        CheckResult { suite, name: name.into(), cases: self.cases, failures: self.failures, examples: self.examples }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                json!({
                    "suite": r.suite.name(),
                    "check": r.name,
                    "cases": r.cases,
                    "failures": r.failures,
                    "examples": r.examples,
                    "status": if r.passed() { "pass" } else { "fail" },
                })
            })
            .collect();
        json!({"schema": "charge-lab.verify.v1", "passed": self.passed(), "results": results})
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}/{} ({} cases, {} failures)", r.suite.name(), r.name, r.cases, r.failures)?;
            for e in &r.examples {
                writeln!(f, "    {e}")?;
            }
        }
        let failed = self.results.iter().filter(|r| !r.passed()).count();
        write!(f, "{} checks, {} failed", self.results.len(), failed)
    }
}

pub fn run(scope: &Scope, fault: Option<Fault>) -> Report {
    let mut results = Vec::new();
    for &suite in &scope.suites {
        match suite {
            Suite::Qbg => results.extend(qbg_suite(scope, fault)),
            Suite::Kn => results.extend(kn_suite()),
            Suite::Bijection => results.extend(bijection_suite(scope)),
            Suite::Transport => results.extend(transport_suite(scope)),
            Suite::Poly => results.extend(poly_suite(scope)),
            Suite::Paths => results.extend(paths_suite(scope)),
        }
    }
    Report { results }
}

fn qbg_suite(scope: &Scope, fault: Option<Fault>) -> Vec<CheckResult> {
    let mut flipped = fault != Some(Fault::FlipEdge);
    let mut out = Vec::new();
    for lie in scope.qbg_types() {
        let mut t = Tally::new();
        for w in WeylElement::all(lie) {
            for r in lie.positive_roots() {
                let mut crit = edge_by_criterion(&w, r);
                if !flipped && crit == Some(EdgeKind::Up) {
                    crit = Some(EdgeKind::Quantum);
                    flipped = true;
                }
                let len = edge_by_length(&w, r);
                t.check(crit == len, || format!("{w} {r}: criterion {crit:?}, length {len:?}"));
            }
        }
        out.push(t.finish(Suite::Qbg, format!("{lie} criterion = length")));
    }
    out
}

fn signed_abs_split(col: &[Letter]) -> (Vec<i64>, Vec<i64>) {
    let pos = col.iter().filter(|x| !x.is_barred()).map(|x| x.0 as i64).collect();
    let mut neg: Vec<i64> = col.iter().filter(|x| x.is_barred()).map(|x| x.abs() as i64).collect();
    neg.sort_unstable();
    (pos, neg)
}

/// The second characterization of split pairs: `|D'_-| = maxcol(|D_-|, D'_+)`
/// within `[n]`, and `D_+ = (D'_+ ∪ |D'_-|) \ |D_-|`.
pub fn maxcol_characterization(n: usize, dp: &[Letter], d: &[Letter]) -> bool {
    let (dp_pos, dp_neg) = signed_abs_split(dp);
    let (d_pos, d_neg) = signed_abs_split(d);
    let Ok(m) = maxcol_in_range(&d_neg, &dp_pos, n) else { return false };
    let union: BTreeSet<i64> = dp_pos.iter().chain(&dp_neg).copied().collect();
    let expected: BTreeSet<i64> = union.difference(&d_neg.iter().copied().collect()).copied().collect();
    m == dp_neg && d_pos.iter().copied().collect::<BTreeSet<_>>() == expected && d_pos.len() == expected.len()
}

fn kn_suite() -> Vec<CheckResult> {
    let n = 3;
    let lie = LieType::c(n);
    let mut decomposition = Tally::new();
    let sets: Vec<Vec<i64>> =
        (0..=n).flat_map(|k| kn::subsets(n, k)).map(|s| s.into_iter().map(|v| v as i64).collect()).collect();
    for a in &sets {
        for b in &sets {
            let lhs = maxcol(a, b);
            let inter: Vec<i64> = a.iter().filter(|x| b.contains(x)).copied().collect();
            let union: Vec<i64> = a.iter().chain(b).copied().collect::<BTreeSet<_>>().into_iter().collect();
            let mut rhs: Vec<i64> = a.iter().filter(|x| !b.contains(x)).copied().collect();
            rhs.extend(maxcol(&inter, &union));
            rhs.sort_unstable();
            let disjoint = rhs.windows(2).all(|w| w[0] < w[1]);
            decomposition.check(lhs == rhs && disjoint, || format!("maxcol({a:?}, {b:?}) = {lhs:?}, split form {rhs:?}"));
        }
    }
    let mut equivalence = Tally::new();
    for k in 1..=n {
        let cols = kn::all_columns(lie, k);
        for dp in &cols {
            for d in &cols {
                let r = kn::check_pair_conditions(lie, dp, d);
                let first = r.r1 && r.r2 && r.r3;
                let second = maxcol_characterization(n, dp, d);
                let third = is_split_pair(dp, d);
                equivalence.check(first == second && second == third, || {
                    format!("{:?} {:?}: conditions {first}, maxcol {second}, split {third}", values(dp), values(d))
                });
            }
        }
    }
    let mut splitting = Tally::new();
    for n in 1..=4 {
        for k in 1..=n {
            for c in kn::enumerate_kn_columns(n, k) {
                let ok = kn::split_column(&c).is_ok_and(|s| is_split_pair(&s.right, &s.left) && kn::join_split(&s.right, &s.left) == c);
                splitting.check(ok, || format!("split of {:?}", values(&c)));
            }
        }
    }
    vec![
        decomposition.finish(Suite::Kn, "maxcol decomposition over [3]"),
        equivalence.finish(Suite::Kn, "split pair characterizations over C3 columns"),
        splitting.finish(Suite::Kn, "KN split round trip, n <= 4"),
    ]
}

fn values(col: &[Letter]) -> Vec<i32> {
    col.iter().map(|x| x.0).collect()
}

fn bijection_case(lie: LieType, mu: &Partition) -> Tally {
    let mut t = Tally::new();
    let chain = MuChain::from_partition(lie, mu.clone()).expect("dominant");
    let admissible = collect_admissible(&chain);
    let size = b_mu_size(lie, mu);
    t.check(admissible.len() == size, || format!("{lie} {mu}: {} admissible pairs, |B_mu| = {size}", admissible.len()));
    let mut images = BTreeSet::new();
    for a in &admissible {
        let sigma = filling_map(&chain, &a.pair);
        let tau = ord(&sigma);
        t.check(validate_b_mu(&tau).is_ok(), || format!("{lie} {mu}: ord f({}) = {:?} outside B_mu", a.pair.w, tau.values()));
        images.insert(tau);
        let back = inverse_filling_map(&chain, &sigma);
        t.check(back.as_ref() == Ok(&a.pair), || format!("{lie} {mu}: round trip of {} {:?} gave {back:?}", a.pair.w, a.pair.positions));
        t.check(is_admissible_by_identity(&chain, &a.pair) && is_admissible_by_path(&chain, &a.pair), || {
            format!("{lie} {mu}: {} {:?} fails an admissibility test", a.pair.w, a.pair.positions)
        });
    }
    t.check(images.len() == admissible.len(), || format!("{lie} {mu}: ord f is not injective"));
    t
}

fn bijection_suite(scope: &Scope) -> Vec<CheckResult> {
    let cases = scope.cases();
    let tally = cases.par_iter().map(|(lie, mu)| bijection_case(*lie, mu)).reduce(Tally::new, Tally::merge);
    vec![tally.finish(Suite::Bijection, "|F(mu)| = |B_mu|, ord f injective, round trip")]
}

fn transport_case(lie: LieType, mu: &Partition) -> (Tally, Tally) {
    let chain = MuChain::from_partition(lie, mu.clone()).expect("dominant");
    let mut stats = Tally::new();
    for a in collect_admissible(&chain) {
        let sigma = filling_map(&chain, &a.pair);
        let charge = charge_of(&ord(&sigma));
        let arms = arm_statistic(&sigma);
        stats.check(charge.as_ref() == Ok(&a.level) && arms == a.level, || {
            format!("{lie} {mu} {} {:?}: level {}, charge {charge:?}, arms {arms}", a.pair.w, a.pair.positions, a.level)
        });
    }
    // content = weight on every folding pair, admissible or not, for short chains
    let mut weights = Tally::new();
    if chain.len() <= 10 {
        for w in WeylElement::all(lie) {
            for mask in 0u32..(1 << chain.len()) {
                let positions: Vec<usize> = (0..chain.len()).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
                let fp = FoldingPair::new(&chain, w.clone(), positions).expect("valid positions");
                let sigma = filling_map(&chain, &fp);
                let c = content(&sigma);
                let wt = weight_of(&chain, &fp);
                weights.check(c.as_ref() == Ok(&wt), || format!("{lie} {mu} {w} {:?}: content {c:?}, weight {wt:?}", fp.positions));
            }
        }
    }
    (stats, weights)
}

fn transport_suite(scope: &Scope) -> Vec<CheckResult> {
    let cases = scope.cases();
    let (stats, weights) = cases
        .par_iter()
        .map(|(lie, mu)| transport_case(*lie, mu))
        .reduce(|| (Tally::new(), Tally::new()), |a, b| (a.0.merge(b.0), a.1.merge(b.1)));
    vec![
        stats.finish(Suite::Transport, "level = charge = arm statistic"),
        weights.finish(Suite::Transport, "content = weight on all folding pairs"),
    ]
}

fn poly_case(lie: LieType, mu: &Partition) -> Tally {
    let mut t = Tally::new();
    let m = mu.padded(lie.n());
    let ry: BigPoly = ram_yip_t0(lie, &m).expect("dominant");
    let ch: BigPoly = charge_formula_t0(lie, &m).expect("B_mu is valid");
    t.check(ry == ch, || format!("{lie} {mu}: Ram-Yip {ry} vs charge {ch}"));
    let chi = weyl_character::<num_bigint::BigInt>(lie, &m);
    let q0 = ry.specialize_q(0);
    t.check(chi.as_ref() == Ok(&q0), || format!("{lie} {mu}: q=0 part {q0} vs character {chi:?}"));
    t.check(ry.is_invariant(lie), || format!("{lie} {mu}: not W-invariant"));
    t.check(ry.coefficients_nonnegative(), || format!("{lie} {mu}: negative coefficient"));
    let total: num_bigint::BigInt = ry.specialize_q(1).at_x_one().into_iter().sum();
    let size = b_mu_size(lie, mu);
    t.check(total == num_bigint::BigInt::from(size), || format!("{lie} {mu}: value at q=1, x=1 is {total}, |B_mu| = {size}"));
    t
}

fn poly_suite(scope: &Scope) -> Vec<CheckResult> {
    let cases = scope.cases();
    let tally = cases.par_iter().map(|(lie, mu)| poly_case(*lie, mu)).reduce(Tally::new, Tally::merge);
    vec![tally.finish(Suite::Poly, "Ram-Yip = charge formula, q=0 = character, invariance, positivity")]
}

/// Applies the labels as a path from `u`; `None` unless every step is a QBG edge.
pub fn walk(u: &WeylElement, labels: &[RootLabel]) -> Option<WeylElement> {
    let mut v = u.clone();
    for &r in labels {
        edge_by_criterion(&v, r)?;
        v = v.apply_root(r);
    }
    Some(v)
}

/// All subsequences of `seq` labelling a QBG path from `u` whose end satisfies `accept`.
pub fn valid_subsequences(
    u: &WeylElement,
    seq: &[RootLabel],
    accept: impl Fn(&WeylElement) -> bool,
) -> Vec<Vec<RootLabel>> {
    assert!(seq.len() < 24, "subsequence search is exponential");
    (0u32..(1 << seq.len()))
        .filter_map(|mask| {
            let sub: Vec<RootLabel> = (0..seq.len()).filter(|b| mask >> b & 1 == 1).map(|b| seq[b]).collect();
            walk(u, &sub).filter(|v| accept(v)).map(|_| sub)
        })
        .collect()
}

/// The reversed block of `Γ_l(k)` that moves position `i`.
pub fn reversed_block(lie: LieType, k: usize, i: usize) -> Vec<RootLabel> {
    let n = lie.n();
    let mut out: Vec<RootLabel> = (k + 1..=n).map(|j| RootLabel::Diff(i, j)).collect();
    out.push(RootLabel::Long(i));
    out.extend((k + 1..=n).rev().map(|j| RootLabel::Sum(i, j)));
    out.extend((1..i).rev().map(|h| RootLabel::Sum(h, i)));
    out
}

fn paths_case(lie: LieType) -> (Tally, Tally) {
    let n = lie.n();
    let max_k = if lie.is_c() { n } else { n - 1 };
    let mut rows = Tally::new();
    let mut cols = Tally::new();
    for u in WeylElement::all(lie) {
        for k in 1..=max_k {
            // one position at a time
            for i in 1..=k {
                if lie.is_c() {
                    for cp in kn::all_columns(lie, k) {
                        let current = u.prefix(k);
                        if current[i..] != cp[i..] || !condition1(lie, &cp, &current) {
                            continue;
                        }
                        let target = cp[i - 1];
                        let found = valid_subsequences(&u, &reversed_block(lie, k, i), |v| v.value(Letter(i as i32)) == target);
                        let greedy = path_c(&u, i, &cp).map(|p| p.roots());
                        rows.check(found.len() == 1 && greedy.as_ref() == Ok(&found[0]), || {
                            format!("{u} i={i} C'={:?}: {} paths, greedy {greedy:?}", values(&cp), found.len())
                        });
                    }
                } else {
                    let list: Vec<Letter> = (k + 1..=n).map(|m| Letter(m as i32)).collect();
                    let seq: Vec<RootLabel> = (k + 1..=n).map(|m| RootLabel::Diff(i, m)).collect();
                    for &c in &u.window()[k..] {
                        let found = valid_subsequences(&u, &seq, |v| v.value(Letter(i as i32)) == c);
                        let (greedy, _) = path_a(&u, i, c, &list).expect("c is reachable");
                        let blocked = u.window()[i..k].iter().any(|&a| lie.circ_between(u.value(Letter(i as i32)), a, c));
                        let ok = if blocked { found.is_empty() } else { found == [greedy.clone()] };
                        rows.check(ok, || format!("{u} i={i} c={c}: {} paths, greedy {greedy:?}", found.len()));
                    }
                }
            }
            // whole columns
            let (right, left) = omega_chain_parts(lie, k).expect("k in range");
            let chains: Vec<(bool, Vec<RootLabel>)> = if lie.is_c() {
                vec![(false, left.into_iter().rev().collect()), (true, right.into_iter().rev().collect())]
            } else {
                vec![(false, left.into_iter().rev().collect())]
            };
            for target in kn::all_columns(lie, k) {
                let current = u.prefix(k);
                for (is_right, seq) in &chains {
                    let found = valid_subsequences(&u, seq, |v| v.prefix(k) == target);
                    let mut expect = condition1(lie, &target, &current);
                    if *is_right {
                        let (mut a, mut b) = (target.clone(), current.clone());
                        a.sort();
                        b.sort();
                        expect &= is_split_pair(&a, &b);
                    }
                    let ok = if expect {
                        let greedy = column_path(&u, &target).map(|p| p.0);
                        found.len() == 1 && greedy.as_ref() == Ok(&found[0])
                    } else {
                        found.is_empty()
                    };
                    cols.check(ok, || {
                        format!("{u} -> {:?} ({}): expected path {expect}, found {}", values(&target), if *is_right { "right" } else { "left" }, found.len())
                    });
                }
            }
        }
    }
    (rows, cols)
}

fn paths_suite(scope: &Scope) -> Vec<CheckResult> {
    let types = scope.path_types();
    let (rows, cols) = types
        .par_iter()
        .map(|&lie| paths_case(lie))
        .reduce(|| (Tally::new(), Tally::new()), |a, b| (a.0.merge(b.0), a.1.merge(b.1)));
    vec![
        rows.finish(Suite::Paths, "greedy single-position path is the unique one"),
        cols.finish(Suite::Paths, "column paths exist exactly under the column conditions and are unique"),
    ]
}

/// `B_μ` listed with its charges, in enumeration order.
pub fn charges(lie: LieType, mu: &Partition) -> Result<Vec<(Filling, usize)>> {
    enumerate_b_mu(lie, mu).into_iter().map(|t| charge_of(&t).map(|c| (t, c))).collect()
}
