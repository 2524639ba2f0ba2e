//! Sparse Laurent polynomials in `x_1..x_n` with polynomial dependence on `q`,
//! and the two formulas for `P_μ(X; q, 0)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chain::MuChain;
use crate::error::{Error, Result};
use crate::fillings::{charge_of, content, enumerate_b_mu};
use crate::folding::collect_admissible;
use crate::folding::weight_of;
use crate::weyl::{LieType, WeylElement};

/// An exact integer coefficient ring.
pub trait Coefficient:
    Integer + Signed + Clone + fmt::Debug + fmt::Display + ToPrimitive + From<i64> + Send + Sync + 'static
{
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}

/// `q^q x^x`; sorted by increasing `q`, then decreasing `x` (so `x1` precedes `x2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub x: Vec<i64>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q.cmp(&other.q).then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<C> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

pub type IntPoly = LaurentPoly<i64>;
pub type WidePoly = LaurentPoly<i128>;
pub type BigPoly = LaurentPoly<BigInt>;

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn monomial(coeff: C, q: u32, x: Vec<i64>) -> Self {
        let mut p = Self::zero(x.len());
        p.add_term(coeff, q, x);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(C::one(), 0, vec![0; n])
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, q: u32, x: &[i64]) -> C {
        self.terms.get(&Monomial { q, x: x.to_vec() }).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, coeff: C, q: u32, x: Vec<i64>) {
        assert_eq!(x.len(), self.n, "exponent length");
        if coeff.is_zero() {
            return;
        }
        let key = Monomial { q, x };
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = c.clone() + coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(c.clone(), m.q, m.x.clone());
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let x = a.x.iter().zip(&b.x).map(|(u, v)| u + v).collect();
                out.add_term(ca.clone() * cb.clone(), a.q + b.q, x);
            }
        }
        out
    }

    /// Exact quotient; fails unless `other` divides `self`.
    ///
    /// Long division by the lexicographically largest term of `(q, x)`. Every
    /// quotient term of an exact division lies in the box given by the
    /// per-variable degree ranges, which bounds the loop.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        let inexact = |why: &str| Error::InexactDivision(why.to_string());
        if other.is_zero() {
            return Err(inexact("division by zero"));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let (lo_p, hi_p) = self.degree_box();
        let (lo_d, hi_d) = other.degree_box();
        let lo: Vec<i64> = lo_p.iter().zip(&lo_d).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_p.iter().zip(&hi_d).map(|(a, b)| a - b).collect();
        let key = |m: &Monomial| {
            let mut k = vec![m.q as i64];
            k.extend(&m.x);
            k
        };
        let mut rem: BTreeMap<Vec<i64>, C> = self.terms.iter().map(|(m, c)| (key(m), c.clone())).collect();
        let div: Vec<(Vec<i64>, C)> = other.terms.iter().map(|(m, c)| (key(m), c.clone())).collect();
        let (lead_d, lead_c) = div.iter().max_by(|a, b| a.0.cmp(&b.0)).cloned().expect("non-zero");
        let mut quotient = Self::zero(self.n);
        while let Some((lead, c)) = rem.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            let e: Vec<i64> = lead.iter().zip(&lead_d).map(|(a, b)| a - b).collect();
            if e.iter().zip(lo.iter().zip(&hi)).any(|(v, (l, h))| v < l || v > h) {
                return Err(inexact("remainder left over"));
            }
            let qc = c.exact_div(&lead_c).ok_or_else(|| inexact("coefficient does not divide"))?;
            for (k, dc) in &div {
                let t: Vec<i64> = k.iter().zip(&e).map(|(a, b)| a + b).collect();
                let entry = rem.entry(t.clone()).or_insert_with(C::zero);
                *entry = entry.clone() - qc.clone() * dc.clone();
                if entry.is_zero() {
                    rem.remove(&t);
                }
            }
            quotient.add_term(qc, e[0] as u32, e[1..].to_vec());
        }
        Ok(quotient)
    }

    /// Per-coordinate minimum and maximum of `(q, x)` over the support.
    fn degree_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.n + 1];
        let mut hi = vec![i64::MIN; self.n + 1];
        for m in self.terms.keys() {
            for (i, v) in std::iter::once(m.q as i64).chain(m.x.iter().copied()).enumerate() {
                lo[i] = lo[i].min(v);
                hi[i] = hi[i].max(v);
            }
        }
        (lo, hi)
    }

    /// Substitutes `q = q0`.
    pub fn specialize_q(&self, q0: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for _ in 0..m.q {
                v = v * C::from(q0);
            }
            out.add_term(v, 0, m.x.clone());
        }
        out
    }

    /// The value at `x_1 = ... = x_n = 1` as a polynomial in `q`, low degree first.
    pub fn at_x_one(&self) -> Vec<C> {
        let top = self.terms.keys().map(|m| m.q as usize).max().map_or(0, |d| d + 1);
        let mut out = vec![C::zero(); top];
        for (m, c) in &self.terms {
            out[m.q as usize] = out[m.q as usize].clone() + c.clone();
        }
        out
    }

    /// The substitution `x^λ -> x^{w(λ)}`.
    pub fn act(&self, w: &WeylElement) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(c.clone(), m.q, w.act(&m.x));
        }
        out
    }

    pub fn is_invariant(&self, lie: LieType) -> bool {
        WeylElement::all(lie).iter().all(|w| self.act(w) == *self)
    }

    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficients of `x^λ` for partition-like (weakly decreasing) `λ`,
    /// as polynomials in `q`.
    pub fn dominant_table(&self) -> Vec<(Vec<i64>, Vec<C>)> {
        let mut table: BTreeMap<Vec<i64>, Vec<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.x.windows(2).all(|w| w[0] >= w[1]) {
                let row = table.entry(m.x.clone()).or_default();
                if row.len() <= m.q as usize {
                    row.resize(m.q as usize + 1, C::zero());
                }
                row[m.q as usize] = c.clone();
            }
        }
        let mut out: Vec<_> = table.into_iter().collect();
        out.reverse();
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let coeff = match c.to_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!({"q": m.q, "x": m.x, "coeff": coeff})
            })
            .collect();
        json!({"schema": "charge-lab.poly.v1", "n": self.n, "terms": terms})
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    match m.q {
        0 => {}
        1 => parts.push("q".to_string()),
        d => parts.push(format!("q^{d}")),
    }
    for (i, &e) in m.x.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            e => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    /// `q^2*x1*x2^-1 + 3*x1 - x2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mono = fmt_monomial(m);
            let abs = c.abs();
            let body = match (abs.is_one(), mono.is_empty()) {
                (_, true) => abs.to_string(),
                (true, false) => mono,
                (false, false) => format!("{abs}*{mono}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                write!(f, "{}{}", if c.is_negative() { "-" } else { "" }, body)?;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

fn merge<C: Coefficient>(mut a: LaurentPoly<C>, b: LaurentPoly<C>) -> LaurentPoly<C> {
    a.add_assign(&b);
    a
}

/// `Σ q^{level} x^{weight}` over admissible folding pairs.
pub fn ram_yip_t0<C: Coefficient>(lie: LieType, mu: &[i64]) -> Result<LaurentPoly<C>> {
    let chain = MuChain::new(lie, mu)?;
    let n = lie.n();
    Ok(collect_admissible(&chain)
        .par_iter()
        .map(|a| LaurentPoly::monomial(C::one(), a.level as u32, weight_of(&chain, &a.pair)))
        .reduce(|| LaurentPoly::zero(n), merge))
}

/// `Σ q^{charge} x^{content}` over `B_μ`.
pub fn charge_formula_t0<C: Coefficient>(lie: LieType, mu: &[i64]) -> Result<LaurentPoly<C>> {
    let mu = lie.dominant(mu)?;
    let n = lie.n();
    enumerate_b_mu(lie, &mu)
        .par_iter()
        .map(|tau| -> Result<LaurentPoly<C>> {
            Ok(LaurentPoly::monomial(C::one(), charge_of(tau)? as u32, content(tau)?))
        })
        .try_reduce(|| LaurentPoly::zero(n), |a, b| Ok(merge(a, b)))
}

/// `Σ det(w) x^{w(λ)}`.
pub fn alternant<C: Coefficient>(lie: LieType, lambda: &[i64]) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(lie.n());
    for w in WeylElement::all(lie) {
        out.add_term(C::from(w.det()), 0, w.act(lambda));
    }
    out
}

/// The irreducible character of highest weight `μ` as a ratio of alternants.
pub fn weyl_character<C: Coefficient>(lie: LieType, mu: &[i64]) -> Result<LaurentPoly<C>> {
    let mu = lie.dominant(mu)?.padded(lie.n());
    let rho = lie.rho();
    let shifted: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
    alternant::<C>(lie, &shifted).exact_div(&alternant(lie, &rho))
}
