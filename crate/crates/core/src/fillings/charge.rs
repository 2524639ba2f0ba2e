//! Charge words and the charge statistic in types A and C.

use std::fmt;

use super::{validate_b_mu, Filling};
use crate::error::{Error, Result};
use crate::weyl::Letter;

/// A column label `j` or `j'`; ordered `1 < 1' < 2 < 2' < ...`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnLabel {
    pub index: usize,
    pub primed: bool,
}

impl ColumnLabel {
    pub fn plain(index: usize) -> Self {
        ColumnLabel { index, primed: false }
    }

    /// Position in the label alphabet, starting at 0 (type C ranks interleave primes).
    fn rank(self, split: bool) -> usize {
        if split {
            2 * (self.index - 1) + self.primed as usize
        } else {
            self.index - 1
        }
    }
}

impl fmt::Display for ColumnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.primed { "'" } else { "" })
    }
}

/// The charge word with the iteration that selected each bottom letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeTrace {
    pub tops: Vec<Letter>,
    pub bottoms: Vec<ColumnLabel>,
    /// 1-based iteration of each bottom letter.
    pub iterations: Vec<usize>,
    /// Charge added by each iteration.
    pub contributions: Vec<usize>,
    pub charge: usize,
}

impl ChargeTrace {
    /// Bottom letters with their iteration subscripts, e.g. `1_3 1_2 3_1`.
    pub fn indexed_bottoms(&self) -> Vec<String> {
        self.bottoms.iter().zip(&self.iterations).map(|(b, i)| format!("{b}_{i}")).collect()
    }
}

impl fmt::Display for ChargeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bottoms = self.indexed_bottoms();
        let tops: Vec<String> = self.tops.iter().map(|x| x.to_string()).collect();
        let width = |s: &str| s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count();
        let cell = tops.iter().chain(&bottoms).map(|s| width(s)).max().unwrap_or(1);
        let pad = |s: &String| format!("{}{}", " ".repeat(cell - width(s)), s);
        writeln!(f, "{}", tops.iter().map(pad).collect::<Vec<_>>().join(" "))?;
        writeln!(f, "{}", bottoms.iter().map(pad).collect::<Vec<_>>().join(" "))?;
        write!(f, "charge = {}", self.charge)
    }
}

struct Selection {
    iterations: Vec<usize>,
    contributions: Vec<usize>,
}

/// The cycle-selection algorithm on a word of label ranks.
///
/// In split mode ranks `2j-2, 2j-1` stand for `j, j'`; a wrap to reach a
/// primed letter is an error, and a wrap to reach `j+1` adds `k - j` where
/// `k` is the number of unprimed letters selected in the iteration.
fn select(ranks: &[usize], split: bool) -> Result<Selection> {
    let top = ranks.iter().copied().max().map_or(0, |r| r + 1);
    let mut counts = vec![0usize; top];
    for &r in ranks {
        counts[r] += 1;
    }
    if split {
        for j in 0..top / 2 + top % 2 {
            let (a, b) = (counts[2 * j], counts.get(2 * j + 1).copied().unwrap_or(0));
            if a != b {
                return Err(Error::NotPartitionContent(format!("{} letters {} but {} letters {}'", a, j + 1, b, j + 1)));
            }
        }
    }
    let step = if split { 2 } else { 1 };
    for r in (step..top).step_by(step) {
        if counts[r] > counts[r - step] {
            return Err(Error::NotPartitionContent(format!("more letters {} than {}", r / step + 1, r / step)));
        }
    }

    let mut iterations = vec![0usize; ranks.len()];
    let mut contributions = Vec::new();
    let mut left = ranks.len();
    let mut round = 0;
    while left > 0 {
        round += 1;
        let mut wraps = Vec::new();
        let mut at = None::<usize>;
        let mut rank = 0;
        loop {
            let free = |p: &usize| iterations[*p] == 0 && ranks[*p] == rank;
            let nearer = at.and_then(|a| (0..a).rev().find(free));
            let p = match nearer {
                Some(p) => p,
                None => match (0..ranks.len()).rev().find(free) {
                    None => break,
                    Some(p) => {
                        if at.is_some() {
                            if split && rank % 2 == 1 {
                                return Err(Error::ChargePrecondition(format!(
                                    "iteration {round}: letter {}' is not to the left of the selected {}",
                                    rank / 2 + 1,
                                    rank / 2 + 1
                                )));
                            }
                            wraps.push(rank / step);
                        }
                        p
                    }
                },
            };
            iterations[p] = round;
            left -= 1;
            at = Some(p);
            rank += 1;
        }
        // letters selected this round: 1..k (and primes)
        let k = rank.div_ceil(step);
        contributions.push(wraps.iter().map(|&j| k - j).sum());
    }
    Ok(Selection { iterations, contributions })
}

/// The Lascoux-Schützenberger charge of a word over `1, 2, ...`.
pub fn ls_charge(word: &[usize]) -> Result<usize> {
    if word.contains(&0) {
        return Err(Error::InvalidLetter("0".into()));
    }
    let ranks: Vec<usize> = word.iter().map(|&j| j - 1).collect();
    Ok(select(&ranks, false)?.contributions.iter().sum())
}

/// The charge of a word over `1 < 1' < 2 < 2' < ...`.
pub fn split_charge(word: &[ColumnLabel]) -> Result<usize> {
    if word.iter().any(|l| l.index == 0) {
        return Err(Error::InvalidLetter("0".into()));
    }
    let ranks: Vec<usize> = word.iter().map(|l| l.rank(true)).collect();
    Ok(select(&ranks, true)?.contributions.iter().sum())
}

/// Parses `1132214323` (single digits) or whitespace/comma separated labels such as `1 1' 2`.
pub fn parse_word(s: &str) -> Result<Vec<ColumnLabel>> {
    let s = s.trim();
    let tokens: Vec<String> = if s.contains([' ', ',']) {
        s.split([' ', ',']).filter(|t| !t.is_empty()).map(str::to_string).collect()
    } else {
        let mut out: Vec<String> = Vec::new();
        for c in s.chars() {
            match c {
                '\'' | '′' => match out.last_mut() {
                    Some(last) => last.push('\''),
                    None => return Err(Error::Parse(format!("word {s:?} starts with a prime"))),
                },
                _ => out.push(c.to_string()),
            }
        }
        out
    };
    tokens
        .iter()
        .map(|t| {
            let t = t.replace('′', "'");
            let (digits, primed) = match t.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (t.as_str(), false),
            };
            match digits.parse::<usize>() {
                Ok(index) if index > 0 => Ok(ColumnLabel { index, primed }),
                _ => Err(Error::InvalidLetter(t.clone())),
            }
        })
        .collect()
}

/// Biletters `(entry, label)` of `tau` in decreasing order.
pub fn charge_word(tau: &Filling) -> Vec<(Letter, ColumnLabel)> {
    let mut word: Vec<(Letter, ColumnLabel)> = tau
        .columns()
        .iter()
        .enumerate()
        .flat_map(|(idx, col)| {
            let label = tau.label(idx);
            col.iter().map(move |&x| (x, label))
        })
        .collect();
    word.sort_by(|a, b| b.cmp(a));
    word
}

/// The charge of `tau` with its full trace; `tau` must lie in `B_μ`.
pub fn charge_trace(tau: &Filling) -> Result<ChargeTrace> {
    validate_b_mu(tau)?;
    let split = tau.lie().is_c();
    let word = charge_word(tau);
    let ranks: Vec<usize> = word.iter().map(|(_, l)| l.rank(split)).collect();
    let sel = select(&ranks, split)?;
    Ok(ChargeTrace {
        tops: word.iter().map(|&(x, _)| x).collect(),
        bottoms: word.iter().map(|&(_, l)| l).collect(),
        iterations: sel.iterations,
        charge: sel.contributions.iter().sum(),
        contributions: sel.contributions,
    })
}

pub fn charge_of(tau: &Filling) -> Result<usize> {
    charge_trace(tau).map(|t| t.charge)
}

/// Type A charge of a tensor product of increasing columns.
pub fn charge_a(tau: &Filling) -> Result<usize> {
    if tau.lie().is_c() {
        return Err(Error::InvalidFilling("expected a type A filling".into()));
    }
    charge_of(tau)
}

/// Type C charge of a tensor product of split KN columns.
pub fn charge_c(tau: &Filling) -> Result<usize> {
    if !tau.lie().is_c() {
        return Err(Error::InvalidFilling("expected a type C filling".into()));
    }
    charge_of(tau)
}
