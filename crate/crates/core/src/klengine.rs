//! Kazhdan-Lusztig polynomials over an enumerated Coxeter group, Verma
//! composition multiplicities, and graded Ext dimensions for regular blocks.
//!
//! Polynomials are computed through the R-polynomial recursion: for a left
//! descent `s` of `y`,
//!
//! ```text
//! R(x, y) = R(sx, sy)                     if sx < x
//! R(x, y) = (q-1) R(x, sy) + q R(sx, sy)  otherwise
//! ```
//!
//! and `P(x, y)` is then the unique polynomial of degree at most
//! `(l(y) - l(x) - 1) / 2` with
//! `q^(l(y)-l(x)) P(1/q) - P(q) = sum_(x < z <= y) R(x, z) P(z, y)`.
//! The mirror half of that identity is re-checked on every fill, which traps
//! both recursion and convention bugs.

use std::collections::HashMap;
use std::io::Write;
use std::sync::Mutex;

use crate::rootsys::{CoxeterGroup, RootSystem, Weight};
use crate::scalar::Scalar;
use crate::weightlat::{require_dominant, IntegralData};
use crate::{Error, Result};

/// A Kazhdan-Lusztig polynomial with nonnegative integer coefficients;
/// `coeffs[k]` is the coefficient of `q^k`. The zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KlPoly {
    pub coeffs: Vec<u64>,
}

impl KlPoly {
    pub fn zero() -> Self {
        KlPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        KlPoly { coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl std::fmt::Display for KlPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (k, 1) => format!("q^{k}"),
                (k, c) => format!("{c}q^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// Signed polynomial used internally for R-polynomials.
type IPoly = Vec<i64>;

fn ipoly_trim(p: &mut IPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn ipoly_add_scaled_shift(acc: &mut IPoly, p: &[i64], scale: i64, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

fn ipoly_mul(a: &[i64], b: &[i64]) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ipoly_trim(&mut out);
    out
}

#[derive(Default)]
struct Tables {
    r: HashMap<(u32, u32), IPoly>,
    p: HashMap<(u32, u32), KlPoly>,
}

/// Memoized table of Kazhdan-Lusztig polynomials over one enumerated group.
/// Entries are permanent once computed; the interior lock serializes fills,
/// so a shared reference can be used from any number of threads.
pub struct KlTable<'g, S> {
    group: &'g CoxeterGroup<S>,
    tables: Mutex<Tables>,
}

impl<'g, S: Scalar> KlTable<'g, S> {
    pub fn new(group: &'g CoxeterGroup<S>) -> Self {
        KlTable {
            group,
            tables: Mutex::new(Tables::default()),
        }
    }

    pub fn group(&self) -> &'g CoxeterGroup<S> {
        self.group
    }

    /// The polynomial `P(x, y)`, zero when `x` is not below `y` in Bruhat
    /// order. Indices are element indices in the underlying group.
    pub fn polynomial(&self, x: usize, y: usize) -> Result<KlPoly> {
        if x >= self.group.len() || y >= self.group.len() {
            return Err(Error::GroupMismatch);
        }
        let mut t = self.tables.lock().unwrap();
        Ok(self.fill_p(&mut t, x, y))
    }

    /// Multiplicity read-out `P(x, y)(1)`.
    pub fn value_at_one(&self, x: usize, y: usize) -> Result<u64> {
        Ok(self.polynomial(x, y)?.eval_at_one())
    }

    fn fill_r(&self, t: &mut Tables, x: usize, y: usize) -> IPoly {
        if x == y {
            return vec![1];
        }
        if self.group.length(x) >= self.group.length(y) {
            return vec![];
        }
        let key = (x as u32, y as u32);
        if let Some(r) = t.r.get(&key) {
            return r.clone();
        }
        let s = (0..self.group.num_generators())
            .find(|&g| self.group.length(self.group.left_mul_gen(y, g)) < self.group.length(y))
            .expect("y has positive length");
        let sy = self.group.left_mul_gen(y, s);
        let sx = self.group.left_mul_gen(x, s);
        let r = if self.group.length(sx) < self.group.length(x) {
            self.fill_r(t, sx, sy)
        } else {
            // (q - 1) R(x, sy) + q R(sx, sy)
            let a = self.fill_r(t, x, sy);
            let b = self.fill_r(t, sx, sy);
            let mut out = IPoly::new();
            ipoly_add_scaled_shift(&mut out, &a, -1, 0);
            ipoly_add_scaled_shift(&mut out, &a, 1, 1);
            ipoly_add_scaled_shift(&mut out, &b, 1, 1);
            ipoly_trim(&mut out);
            out
        };
        t.r.insert(key, r.clone());
        r
    }

    fn fill_p(&self, t: &mut Tables, x: usize, y: usize) -> KlPoly {
        if x == y {
            return KlPoly::one();
        }
        let (lx, ly) = (self.group.length(x), self.group.length(y));
        if lx >= ly {
            return KlPoly::zero();
        }
        let key = (x as u32, y as u32);
        if let Some(p) = t.p.get(&key) {
            return p.clone();
        }

        // F = sum over z with x < z <= y of R(x, z) P(z, y).
        let mut f = IPoly::new();
        for z in 0..self.group.len() {
            if self.group.length(z) <= lx || self.group.length(z) > ly {
                continue;
            }
            let r = self.fill_r(t, x, z);
            if r.is_empty() {
                continue;
            }
            let p = self.fill_p(t, z, y);
            if p.is_zero() {
                continue;
            }
            let p_signed: IPoly = p.coeffs.iter().map(|&c| c as i64).collect();
            let prod = ipoly_mul(&r, &p_signed);
            ipoly_add_scaled_shift(&mut f, &prod, 1, 0);
        }
        ipoly_trim(&mut f);

        // Split q^L P(1/q) - P(q) = F: the low half determines P, the high
        // half must mirror it.
        let l = ly - lx;
        let max_deg = (l - 1) / 2;
        let mut coeffs: Vec<i64> = vec![0; max_deg + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = -*f.get(k).unwrap_or(&0);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        for (k, &c) in f.iter().enumerate() {
            assert!(k <= l, "R*P sum exceeds the length difference at ({x},{y})");
            let expected = if k <= max_deg {
                -coeffs.get(k).copied().unwrap_or(0)
            } else {
                coeffs.get(l - k).copied().unwrap_or(0)
            };
            assert_eq!(
                c, expected,
                "mirror identity violated at q^{k} for pair ({x},{y})"
            );
        }
        let poly = KlPoly {
            coeffs: coeffs
                .into_iter()
                .map(|c| u64::try_from(c).expect("KL coefficients are nonnegative"))
                .collect(),
        };
        t.p.insert(key, poly.clone());
        poly
    }

    /// Compute the whole table.
    pub fn fill_all(&self) -> Result<()> {
        for y in 0..self.group.len() {
            for x in 0..self.group.len() {
                self.polynomial(x, y)?;
            }
        }
        Ok(())
    }

    /// Dump every nonzero entry, one line per pair:
    /// `x_word;y_word;coeff0,coeff1,...`, identity word rendered as `e`.
    /// Lines are sorted by (y length, y word, x length, x word).
    pub fn dump(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let word_str = |i: usize| -> String {
            let w = &self.group.elt(i).word;
            if w.is_empty() {
                "e".into()
            } else {
                w.iter().map(|g| (g + 1).to_string()).collect()
            }
        };
        let mut keys: Vec<(usize, usize)> = {
            let t = self.tables.lock().unwrap();
            t.p.keys().map(|&(x, y)| (x as usize, y as usize)).collect()
        };
        for i in 0..self.group.len() {
            keys.push((i, i));
        }
        keys.sort_by_key(|&(x, y)| {
            (
                self.group.length(y),
                self.group.elt(y).word.clone(),
                self.group.length(x),
                self.group.elt(x).word.clone(),
            )
        });
        keys.dedup();
        for (x, y) in keys {
            let p = self.polynomial(x, y).expect("indices in range");
            if p.is_zero() {
                continue;
            }
            let coeffs: Vec<String> = p.coeffs.iter().map(|c| c.to_string()).collect();
            writeln!(out, "{};{};{}", word_str(x), word_str(y), coeffs.join(","))?;
        }
        Ok(())
    }
}

/// One linkage class worth of Kazhdan-Lusztig data: a dominant base weight,
/// the coset structure modulo its dot stabilizer, and the polynomial table
/// of the integral Weyl group.
///
/// The index convention, fixed here once and validated against the
/// small-rank sum-formula oracle: for `x`, `y` in the integral Weyl group of
/// a dominant `base`,
///
/// ```text
/// [M(x.base) : L(y.base)] = P(x+, y+)(1)
/// ```
///
/// where `x+` is the longest element of the coset of `x` modulo the
/// stabilizer of `base`. For regular `base` this is plain `P(x, y)(1)`.
pub struct BlockContext<'a, S> {
    rs: &'a RootSystem<S>,
    data: &'a IntegralData<S>,
    pub base: Weight<S>,
    /// Element indices of the dot stabilizer of `base`.
    pub stabilizer: Vec<usize>,
    pub table: KlTable<'a, S>,
}

impl<'a, S: Scalar> BlockContext<'a, S> {
    /// Context for the linkage class of the dominant weight `base`, using
    /// the integral Weyl group carried by `data` (any weight linked to
    /// `base` yields the same group).
    pub fn new(rs: &'a RootSystem<S>, data: &'a IntegralData<S>, base: Weight<S>) -> Result<Self> {
        require_dominant(rs, &base)?;
        let stabilizer: Vec<usize> = (0..data.group.len())
            .filter(|&i| crate::rootsys::dot_action(rs, data.group.elt(i), &base) == base)
            .collect();
        Ok(BlockContext {
            rs,
            data,
            base,
            stabilizer,
            table: KlTable::new(&data.group),
        })
    }

    pub fn group(&self) -> &CoxeterGroup<S> {
        &self.data.group
    }

    pub fn is_regular(&self) -> bool {
        self.stabilizer.len() == 1
    }

    /// Map from each weight of the dot orbit of `base` to the longest
    /// element carrying `base` there; those are the longest coset
    /// representatives the multiplicity convention evaluates at.
    pub fn orbit_longest_reps(&self) -> std::collections::BTreeMap<Weight<S>, usize> {
        let g = &self.data.group;
        let mut reps: std::collections::BTreeMap<Weight<S>, usize> =
            std::collections::BTreeMap::new();
        for i in 0..g.len() {
            let w = crate::rootsys::dot_action(self.rs, g.elt(i), &self.base);
            match reps.get(&w) {
                Some(&j) if g.length(j) >= g.length(i) => {}
                _ => {
                    reps.insert(w, i);
                }
            }
        }
        reps
    }

    /// The longest element of `x`'s left coset modulo the stabilizer.
    pub fn longest_in_coset(&self, x: usize) -> usize {
        let g = &self.data.group;
        let mut best = x;
        for &u in &self.stabilizer {
            let c = g.mul(x, u);
            if g.length(c) > g.length(best) {
                best = c;
            }
        }
        best
    }

    /// Composition multiplicity `[M(x.base) : L(y.base)]`.
    pub fn composition_multiplicity(&self, x: usize, y: usize) -> Result<u64> {
        if x >= self.data.group.len() || y >= self.data.group.len() {
            return Err(Error::GroupMismatch);
        }
        self.table
            .value_at_one(self.longest_in_coset(x), self.longest_in_coset(y))
    }

    /// Graded Ext dimensions between the standard object at `x.base` and
    /// the simple at `y.base`, for regular blocks: degree-`k` entry is the
    /// coefficient of `q^((l(y)-l(x)-k)/2)` in `P(x, y)`, so that the top
    /// degree is `l(y)-l(x)`, degree zero is nonzero only at `x = y`, and
    /// the total equals the composition multiplicity.
    pub fn ext_dimensions(&self, x: usize, y: usize) -> Result<Vec<u64>> {
        if !self.is_regular() {
            return Err(Error::SingularBlock);
        }
        if x >= self.data.group.len() || y >= self.data.group.len() {
            return Err(Error::GroupMismatch);
        }
        let p = self.table.polynomial(x, y)?;
        if p.is_zero() {
            return Ok(vec![]);
        }
        let l = self.data.group.length(y) - self.data.group.length(x);
        let dims = (0..=l)
            .map(|k| {
                if (l - k).is_multiple_of(2) {
                    p.coeff((l - k) / 2)
                } else {
                    0
                }
            })
            .collect();
        Ok(dims)
    }
}
