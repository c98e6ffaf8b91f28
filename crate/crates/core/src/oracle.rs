//! Independent small-rank ground truth used to pin conventions: the Jantzen
//! sum formula, multiplicity matrices it forces in rank at most two, and a
//! brute-force minimality check. Compiled for the test suite; the shipping
//! computation path never calls into this module.

use std::collections::BTreeMap;

use crate::rootsys::{RootSystem, Weight};
use crate::scalar::Scalar;
use crate::weightlat::{order_leq, require_dominant, IntegralData, MinimalityOrder};
use crate::{Error, Result};

/// A signed formal sum of Verma classes in the Grothendieck group.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalSum<S> {
    terms: BTreeMap<Weight<S>, i64>,
}

impl<S: Scalar> FormalSum<S> {
    pub fn new() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, w: Weight<S>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn coeff(&self, w: &Weight<S>) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight<S>, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }
}

/// Right-hand side of the Jantzen sum formula for the Verma at `mu`: the sum
/// of the classes `[M(s_gamma . mu)]` over the positive integral roots
/// `gamma` whose reflection strictly lowers `mu` under the dot action.
pub fn jantzen_sum<S: Scalar>(
    rs: &RootSystem<S>,
    data: &IntegralData<S>,
    mu: &Weight<S>,
) -> FormalSum<S> {
    let shifted = mu.add(&rs.rho);
    let mut out = FormalSum::new();
    for root in data.integral_positive_roots(rs) {
        let p = rs.pairing_root(&shifted, root);
        if p.is_positive() {
            // s_gamma . mu = mu - <mu + rho, gamma^> gamma
            out.add_term(mu.sub(&root.weight.scaled(&p)), 1);
        }
    }
    out
}

/// A composition-multiplicity matrix over the dot orbit of a dominant base:
/// `entries[i][j] = [M(weights[i]) : L(weights[j])]`. Weights are listed
/// from the bottom of the block upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityMatrix<S> {
    pub weights: Vec<Weight<S>>,
    pub entries: Vec<Vec<u64>>,
}

impl<S: Scalar> MultiplicityMatrix<S> {
    pub fn get(&self, mu: &Weight<S>, nu: &Weight<S>) -> Option<u64> {
        let i = self.weights.iter().position(|w| w == mu)?;
        let j = self.weights.iter().position(|w| w == nu)?;
        Some(self.entries[i][j])
    }
}

/// The unique multiplicity matrix over the linkage class of a dominant
/// `base` that is consistent with unitriangularity, ones on the diagonal,
/// and the Jantzen sum formula — valid in rank at most two, where all block
/// multiplicities are zero or one, so a simple occurs in a Verma radical
/// exactly when it occurs in the sum-formula class.
///
/// Errors with `Underdetermined` outside that scope rather than guessing.
pub fn rank_le2_multiplicities<S: Scalar>(
    rs: &RootSystem<S>,
    data: &IntegralData<S>,
    base: &Weight<S>,
) -> Result<MultiplicityMatrix<S>> {
    require_dominant(rs, base)?;
    if data.integral_simples.len() > 2 {
        return Err(Error::Underdetermined(format!(
            "integral rank {} exceeds 2",
            data.integral_simples.len()
        )));
    }

    // Bottom-up over the orbit: expanding the sum formula only ever refers
    // to strictly lower rows.
    let mut weights = data.dot_orbit(rs, base);
    weights.sort_by(|a, b| rs.height(a).cmp(&rs.height(b)).then_with(|| a.cmp(b)));
    let n = weights.len();
    let pos = |w: &Weight<S>| weights.iter().position(|x| x == w);

    let mut entries: Vec<Vec<u64>> = vec![vec![0; n]; n];
    for i in 0..n {
        entries[i][i] = 1;
        let jsum = jantzen_sum(rs, data, &weights[i]);
        // Expand Verma classes into simples via the rows already solved.
        let mut simple_coeffs = vec![0i64; n];
        for (nu, c) in jsum.iter() {
            let j = pos(nu)
                .ok_or_else(|| Error::Inconsistency("sum formula left the linkage class".into()))?;
            if j >= i {
                return Err(Error::Inconsistency(
                    "sum formula failed to lower the weight".into(),
                ));
            }
            for k in 0..n {
                simple_coeffs[k] += c * entries[j][k] as i64;
            }
        }
        for k in 0..i {
            match simple_coeffs[k] {
                0 => {}
                c if c > 0 => entries[i][k] = 1,
                _ => {
                    return Err(Error::Underdetermined(
                        "negative coefficient in the expanded sum formula".into(),
                    ))
                }
            }
        }
    }
    Ok(MultiplicityMatrix { weights, entries })
}

/// Literal minimality: enumerate the orbit of `mu` under the dot stabilizer
/// of the base weight, compare all pairs in the selected order, and check
/// that `mu` is the unique minimum.
pub fn brute_minimality<S: Scalar>(
    rs: &RootSystem<S>,
    data: &IntegralData<S>,
    mu: &Weight<S>,
    order: MinimalityOrder,
) -> Result<bool> {
    require_dominant(rs, &data.lambda)?;
    if !mu.sub(&data.lambda).is_integral() {
        return Err(Error::NotLinked {
            mu: mu.to_string(),
            lambda: data.lambda.to_string(),
        });
    }
    let orbit = data.stabilizer_orbit(rs, mu);
    let n = orbit.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = order_leq(rs, order, &orbit[i], &orbit[j]);
        }
    }
    let minima: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq[i][j])).collect();
    Ok(minima.len() == 1 && orbit[minima[0]] == *mu)
}
