//! Fillings, the filling map and its inverse, and the sorted fillings `B_μ`.
//!
//! Columns are listed left to right. In type A a filling of shape μ is
//! `C^{μ_1} ... C^1`; in type C a filling of shape 2μ is
//! `C_r^{μ_1} C_l^{μ_1} ... C_r^1 C_l^1`.

pub mod charge;
pub mod paths;

use std::fmt;

use serde_json::{json, Value};

use crate::chain::MuChain;
use crate::error::{Error, Result};
use crate::folding::{fold_chain, is_admissible, FoldingPair};
use crate::kn::{self, condition1, is_split_pair, is_strictly_increasing, Column};
use crate::weyl::{Family, LieType, Letter, Partition, RootLabel, WeylElement};

pub use charge::{charge_a, charge_c, charge_of, ls_charge, ChargeTrace, ColumnLabel};
pub use paths::{path_a, path_c, PathC};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    lie: LieType,
    columns: Vec<Column>,
}

impl Filling {
    /// Checks entries against the alphabet, distinct absolute values within
    /// each column, and that heights weakly increase from left to right (in
    /// type C, columns come in pairs of equal height).
    pub fn new(lie: LieType, columns: Vec<Column>) -> Result<Self> {
        for col in &columns {
            let bad = |reason: &str| Error::InvalidColumn { column: col.iter().map(|x| x.0).collect(), reason: reason.into() };
            if col.is_empty() {
                return Err(bad("empty column"));
            }
            if col.len() > lie.n() {
                return Err(bad("taller than the rank"));
            }
            if let Some(x) = col.iter().find(|&&x| !lie.contains(x)) {
                return Err(bad(&format!("letter {x} outside the alphabet")));
            }
            let mut abs: Vec<u32> = col.iter().map(|x| x.abs()).collect();
            abs.sort_unstable();
            abs.dedup();
            if abs.len() != col.len() {
                return Err(bad("repeated absolute value"));
            }
        }
        if columns.windows(2).any(|w| w[0].len() > w[1].len()) {
            return Err(Error::InvalidFilling("column heights must weakly increase from left to right".into()));
        }
        if lie.family() == Family::A && columns.iter().any(|c| c.len() == lie.n()) {
            return Err(Error::InvalidFilling(format!("type A columns have height below n = {}", lie.n())));
        }
        if lie.is_c() && (columns.len() % 2 == 1 || columns.chunks(2).any(|p| p[0].len() != p[1].len())) {
            return Err(Error::InvalidFilling("type C fillings consist of pairs of equal-height columns".into()));
        }
        Ok(Filling { lie, columns })
    }

    pub fn from_values(lie: LieType, columns: &[Vec<i32>]) -> Result<Self> {
        Self::new(lie, columns.iter().map(|c| c.iter().map(|&x| Letter(x)).collect()).collect())
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn values(&self) -> Vec<Vec<i32>> {
        self.columns.iter().map(|c| c.iter().map(|x| x.0).collect()).collect()
    }

    /// The partition μ (not 2μ).
    pub fn shape(&self) -> Partition {
        let step = if self.lie.is_c() { 2 } else { 1 };
        let heights: Vec<usize> = self.columns.iter().step_by(step).rev().map(|c| c.len()).collect();
        Partition::new(heights).expect("heights are sorted").conjugate()
    }

    /// Labels `μ_1, ..., 1` in type A and `μ_1', μ_1, ..., 1', 1` in type C.
    pub fn label(&self, idx: usize) -> ColumnLabel {
        let from_right = self.columns.len() - 1 - idx;
        if self.lie.is_c() {
            ColumnLabel { index: from_right / 2 + 1, primed: from_right % 2 == 1 }
        } else {
            ColumnLabel { index: from_right + 1, primed: false }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "charge-lab.filling.v1",
            "type": self.lie.family().to_string(),
            "n": self.lie.n(),
            "shape": self.shape().parts(),
            "split": self.lie.is_c(),
            "columns": self.values(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("filling JSON: {m}"));
        let family: Family = v["type"].as_str().ok_or_else(|| err("missing type"))?.parse()?;
        let n = v["n"].as_u64().ok_or_else(|| err("missing n"))? as usize;
        let lie = LieType::new(family, n)?;
        let cols: Vec<Vec<i32>> = serde_json::from_value(v["columns"].clone()).map_err(|e| err(&e.to_string()))?;
        let f = Self::from_values(lie, &cols)?;
        if let Some(shape) = v.get("shape") {
            let parts: Vec<usize> = serde_json::from_value(shape.clone()).map_err(|e| err(&e.to_string()))?;
            if f.shape().parts() != parts.as_slice() {
                return Err(err("shape does not match the columns"));
            }
        }
        Ok(f)
    }
}

/// Parses columns written `1,3,-3 | 3,-4,-3`; `/` also separates columns.
/// Letters accept the forms of [`Letter`]'s parser.
pub fn parse_columns(s: &str) -> Result<Vec<Column>> {
    s.split(['|', '/'])
        .map(|col| {
            col.split([',', ' '])
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.parse::<Letter>())
                .collect::<Result<Column>>()
        })
        .filter(|c| !matches!(c, Ok(v) if v.is_empty()))
        .collect()
}

fn display_width(s: &str) -> usize {
    s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count()
}

impl fmt::Display for Filling {
    /// Rows top to bottom; shorter columns sit on the left with blanks below.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.columns.iter().map(|c| c.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| display_width(s)).max().unwrap_or(1);
        let rows = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
        for r in 0..rows {
            let line: Vec<String> = cells
                .iter()
                .map(|col| {
                    let s = col.get(r).map(String::as_str).unwrap_or("");
                    format!("{}{}", " ".repeat(width - display_width(s)), s)
                })
                .collect();
            let line = line.join(" ");
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// The filling map `f(w, J)` by window prefixes of the intermediate elements.
pub fn filling_map(chain: &MuChain, fp: &FoldingPair) -> Filling {
    let mut pi = fp.w.clone();
    let mut columns = Vec::new();
    let mut taken = fp.positions.iter().map(|&p| p - 1).peekable();
    let mut advance = |pi: &mut WeylElement, end: usize| {
        while let Some(&p) = taken.peek() {
            if p >= end {
                break;
            }
            *pi = pi.apply_root(chain.roots()[p]);
            taken.next();
        }
    };
    for seg in chain.segments() {
        if chain.lie().is_c() {
            columns.push(pi.prefix(seg.height));
            advance(&mut pi, seg.right.end);
        }
        columns.push(pi.prefix(seg.height));
        advance(&mut pi, seg.left.end);
    }
    Filling { lie: chain.lie(), columns }
}

/// The content: counts of `i` in type A, half of `#i - #ī` in type C.
pub fn content(f: &Filling) -> Result<Vec<i64>> {
    let n = f.lie.n();
    let mut c = vec![0i64; n];
    for x in f.columns.iter().flatten() {
        c[x.abs() as usize - 1] += x.sign() as i64;
    }
    if f.lie.is_c() {
        if let Some(i) = c.iter().position(|v| v % 2 != 0) {
            return Err(Error::OddContent(i as u32 + 1));
        }
        c.iter_mut().for_each(|v| *v /= 2);
    }
    Ok(c)
}

/// Sorts each column increasingly.
pub fn ord(f: &Filling) -> Filling {
    let mut columns = f.columns.clone();
    columns.iter_mut().for_each(|c| c.sort());
    Filling { lie: f.lie, columns }
}

/// Whether `tau` lies in `B_μ`: increasing columns in type A, split KN columns in type C.
pub fn validate_b_mu(tau: &Filling) -> Result<()> {
    if tau.lie.is_c() {
        for (j, pair) in tau.columns.chunks(2).enumerate() {
            if !is_split_pair(&pair[0], &pair[1]) {
                return Err(Error::InvalidFilling(format!("columns {} and {} do not form a split KN column", 2 * j + 1, 2 * j + 2)));
            }
        }
    } else if let Some(j) = tau.columns.iter().position(|c| !is_strictly_increasing(c)) {
        return Err(Error::InvalidFilling(format!("column {} is not increasing", j + 1)));
    }
    Ok(())
}

/// Builds `B_μ` from KN columns written one per tensor factor, splitting each.
pub fn from_kn_columns(lie: LieType, kn_columns: &[Column]) -> Result<Filling> {
    if !lie.is_c() {
        return Filling::new(lie, kn_columns.to_vec());
    }
    let mut columns = Vec::new();
    for c in kn_columns {
        if !kn::is_kn_column(c) {
            return Err(Error::InvalidColumn { column: c.iter().map(|x| x.0).collect(), reason: "not a KN column".into() });
        }
        let s = kn::split_column(c)?;
        columns.push(s.right);
        columns.push(s.left);
    }
    Filling::new(lie, columns)
}

/// The unique `σ` with `ord(σ) = τ`, increasing rightmost column, and
/// adjacent columns related by Condition 2 (hence Condition 1).
pub fn reconstruct_sigma(tau: &Filling) -> Result<Filling> {
    validate_b_mu(tau)?;
    let lie = tau.lie;
    let mut columns: Vec<Column> = Vec::with_capacity(tau.columns.len());
    for col in tau.columns.iter().rev() {
        let built = match columns.last() {
            None => col.clone(),
            Some(right) => {
                let mut pool = col.clone();
                let mut out = Vec::with_capacity(pool.len());
                for &base in right.iter().take(col.len()) {
                    let (idx, _) = pool
                        .iter()
                        .enumerate()
                        .min_by_key(|(_, &x)| lie.circ_rank(base, x))
                        .expect("pool is non-empty");
                    out.push(pool.remove(idx));
                }
                out
            }
        };
        columns.push(built);
    }
    columns.reverse();
    Ok(Filling { lie, columns })
}

/// Checks the image conditions of the filling map and names the first failure.
pub fn check_image(f: &Filling) -> Result<()> {
    let lie = f.lie;
    let cols = &f.columns;
    let Some(last) = cols.last() else { return Ok(()) };
    if !is_strictly_increasing(last) {
        return Err(Error::NotInImage("the rightmost column is not increasing".into()));
    }
    if lie.is_c() {
        for (j, pair) in cols.chunks(2).enumerate() {
            let (mut r, mut l) = (pair[0].clone(), pair[1].clone());
            r.sort();
            l.sort();
            if !is_split_pair(&r, &l) {
                return Err(Error::NotInImage(format!("sorted columns {} and {} are not a split KN column", 2 * j + 1, 2 * j + 2)));
            }
        }
    }
    for j in 0..cols.len().saturating_sub(1) {
        if !condition1(lie, &cols[j], &cols[j + 1]) {
            return Err(Error::NotInImage(format!("condition 1 fails between columns {} and {}", j + 1, j + 2)));
        }
    }
    Ok(())
}

/// Maps a root sequence onto positions of a chain segment by greedy matching.
fn match_positions(chain: &MuChain, range: std::ops::Range<usize>, roots: &[RootLabel], what: &str) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(roots.len());
    let mut cursor = range.end;
    for &r in roots {
        let found = (range.start..cursor).rev().find(|&p| chain.roots()[p] == r);
        match found {
            Some(p) => {
                out.push(p + 1);
                cursor = p;
            }
            None => return Err(Error::NotInImage(format!("{what}: {r} does not fit the reversed chain segment"))),
        }
    }
    Ok(out)
}

/// The greedy path from `u` to an element with prefix `col`, fixing
/// positions `k, k-1, ..., 1` in turn (`path-A` in type A, `path-C` in type C).
/// Its labels come in the order of the reversed column chain.
pub fn column_path(u: &WeylElement, col: &[Letter]) -> Result<(Vec<RootLabel>, WeylElement)> {
    let lie = u.lie();
    let k = col.len();
    let to_image = |e: Error| match e {
        Error::Unreachable { .. } | Error::PathHypothesis(_) => Error::NotInImage(e.to_string()),
        other => other,
    };
    let mut u = u.clone();
    let mut roots = Vec::new();
    let list: Vec<Letter> = (k + 1..=lie.n()).map(|m| Letter(m as i32)).collect();
    for i in (1..=k).rev() {
        if lie.is_c() {
            let p = path_c(&u, i, col).map_err(to_image)?;
            roots.extend(p.roots());
            u = p.end;
        } else {
            let (steps, v) = path_a(&u, i, col[i - 1], &list).map_err(to_image)?;
            roots.extend(steps);
            u = v;
        }
    }
    Ok((roots, u))
}

/// The unique admissible pair mapped to `sigma` by the filling map.
pub fn inverse_filling_map(chain: &MuChain, sigma: &Filling) -> Result<FoldingPair> {
    let lie = chain.lie();
    if sigma.lie != lie {
        return Err(Error::InvalidFilling("Lie type differs from the chain".into()));
    }
    let heights: Vec<usize> = chain
        .segments()
        .iter()
        .flat_map(|s| std::iter::repeat_n(s.height, if lie.is_c() { 2 } else { 1 }))
        .collect();
    if sigma.columns.iter().map(|c| c.len()).collect::<Vec<_>>() != heights {
        return Err(Error::InvalidFilling(format!("shape differs from {}", chain.mu())));
    }
    check_image(sigma)?;
    let mut u = WeylElement::identity(lie);
    let mut positions = Vec::new();
    for (s, seg) in chain.segments().iter().enumerate().rev() {
        if lie.is_c() {
            let (roots, v) = column_path(&u, &sigma.columns[2 * s + 1])?;
            positions.extend(match_positions(chain, seg.left.clone(), &roots, "left column")?);
            let (roots, v) = column_path(&v, &sigma.columns[2 * s])?;
            positions.extend(match_positions(chain, seg.right.clone(), &roots, "right column")?);
            u = v;
        } else {
            let (roots, v) = column_path(&u, &sigma.columns[s])?;
            positions.extend(match_positions(chain, seg.left.clone(), &roots, "column")?);
            u = v;
        }
    }
    positions.sort_unstable();
    let fp = FoldingPair::new(chain, u, positions)?;
    if !is_admissible(chain, &fp) || filling_map(chain, &fp) != *sigma {
        return Err(Error::NotInImage("the reconstructed path is not a quantum Bruhat path".into()));
    }
    Ok(fp)
}

/// A cell `(column index, row)` of a filling, both 0-based.
pub type Cell = (usize, usize);

/// Cells whose entry exceeds the entry to their left.
pub fn descents(sigma: &Filling) -> Vec<Cell> {
    let cols = &sigma.columns;
    let mut out = Vec::new();
    for j in 1..cols.len() {
        for (r, x) in cols[j].iter().enumerate() {
            if cols[j - 1].get(r).is_some_and(|left| x > left) {
                out.push((j, r));
            }
        }
    }
    out
}

/// Number of cells to the left in the same row.
pub fn arm(sigma: &Filling, cell: Cell) -> usize {
    sigma.columns[..cell.0].iter().filter(|c| c.len() > cell.1).count()
}

/// `Σ arm` over descents, halved in type C.
pub fn arm_statistic(sigma: &Filling) -> usize {
    let total: usize = descents(sigma).into_iter().map(|c| arm(sigma, c)).sum();
    if sigma.lie.is_c() {
        total / 2
    } else {
        total
    }
}

/// The columns allowed in one tensor factor of `B_μ` of height `k`.
pub fn factor_columns(lie: LieType, k: usize) -> Vec<(Column, Option<Column>)> {
    match lie.family() {
        Family::A => kn::all_columns(lie, k).into_iter().map(|c| (c, None)).collect(),
        Family::C => kn::enumerate_kn_columns(lie.n(), k)
            .into_iter()
            .map(|c| {
                let s = kn::split_column(&c).expect("KN columns split");
                (s.right, Some(s.left))
            })
            .collect(),
    }
}

/// Every element of `B_μ`, in lexicographic order of the factors.
pub fn enumerate_b_mu(lie: LieType, mu: &Partition) -> Vec<Filling> {
    let conj = mu.conjugate();
    let factors: Vec<Vec<Vec<Column>>> = (1..=mu.width())
        .rev()
        .map(|j| {
            factor_columns(lie, conj.parts()[j - 1])
                .into_iter()
                .map(|(a, b)| std::iter::once(a).chain(b).collect())
                .collect()
        })
        .collect();
    let mut out = vec![Vec::new()];
    for choices in &factors {
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for c in choices {
                let mut v: Vec<Column> = prefix.clone();
                v.extend(c.iter().cloned());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(|columns| Filling { lie, columns }).collect()
}

/// `|B_μ|` as a product of column counts, without enumerating.
pub fn b_mu_size(lie: LieType, mu: &Partition) -> usize {
    mu.conjugate().parts().iter().map(|&k| factor_columns(lie, k).len()).product()
}

/// The monotone entries along the folded chain, exposed for tests of the
/// path structure: `π(w,J)` as windows.
pub fn path_windows(chain: &MuChain, fp: &FoldingPair) -> Vec<Vec<i32>> {
    fold_chain(chain, fp).elements.iter().map(|w| w.window_values()).collect()
}
