//! Exact formal characters of finite-dimensional simple modules: weight
//! multiplicities by the Freudenthal recursion, dimensions by the Weyl
//! product formula, duals, tensor products, and the zero-weight dimension of
//! the endomorphism module.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::rootsys::{RootSystem, Weight};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Formal character: a finite multiset of weights with positive integer
/// multiplicities. Iteration order is the lexicographic order on
/// coordinates, so serialization is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character<S> {
    mults: BTreeMap<Weight<S>, u64>,
}

impl<S: Scalar> Character<S> {
    pub fn trivial(rank: usize) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(Weight::zero(rank), 1);
        Character { mults }
    }

    pub fn mult(&self, w: &Weight<S>) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight<S>, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    pub fn support_len(&self) -> usize {
        self.mults.len()
    }

    /// Total dimension.
    pub fn dim(&self) -> Result<u64> {
        self.mults
            .values()
            .try_fold(0u64, |acc, &m| acc.checked_add(m).ok_or(Error::Overflow))
    }

    /// Character of the dual module: multiplicities at negated weights.
    pub fn dual(&self) -> Self {
        Character {
            mults: self.mults.iter().map(|(w, &m)| (w.neg(), m)).collect(),
        }
    }

    /// Convolution of multiplicity maps; total dimensions multiply.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let mut mults: BTreeMap<Weight<S>, u64> = BTreeMap::new();
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                let m = ma.checked_mul(mb).ok_or(Error::Overflow)?;
                let entry = mults.entry(a.add(b)).or_insert(0);
                *entry = entry.checked_add(m).ok_or(Error::Overflow)?;
            }
        }
        Ok(Character { mults })
    }

    /// Sum of squared multiplicities: the dimension of the zero-weight space
    /// of `End V = V (x) V*`.
    pub fn end_zero_dim(&self) -> Result<u64> {
        self.mults.values().try_fold(0u64, |acc, &m| {
            let sq = m.checked_mul(m).ok_or(Error::Overflow)?;
            acc.checked_add(sq).ok_or(Error::Overflow)
        })
    }

    /// The highest weight of the character (maximal height in the support).
    pub fn highest_weight(&self, rs: &RootSystem<S>) -> Option<Weight<S>> {
        self.mults
            .keys()
            .max_by(|a, b| rs.height(a).cmp(&rs.height(b)).then_with(|| a.cmp(b)))
            .cloned()
    }
}

fn require_dominant_integral<S: Scalar>(rs: &RootSystem<S>, nu: &Weight<S>) -> Result<()> {
    if rs.is_dominant_integral(nu) {
        Ok(())
    } else {
        Err(Error::NotDominantIntegral(nu.to_string()))
    }
}

/// Weyl dimension formula, as an exact integer.
pub fn weyl_dim<S: Scalar>(rs: &RootSystem<S>, nu: &Weight<S>) -> Result<u64> {
    require_dominant_integral(rs, nu)?;
    let shifted = nu.add(&rs.rho);
    let mut acc = S::one();
    for root in &rs.positive_roots {
        acc = acc * rs.pairing_root(&shifted, root) / rs.pairing_root(&rs.rho, root);
    }
    let n = acc
        .to_int()
        .ok_or_else(|| Error::Inconsistency("Weyl dimension is not an integer".into()))?;
    u64::try_from(n).map_err(|_| Error::Inconsistency("Weyl dimension is not positive".into()))
}

/// Membership test for the support of the module with highest weight `nu`:
/// a weight lies in the support exactly when its dominant conjugate is
/// reachable from `nu` by subtracting simple roots.
fn in_support<S: Scalar>(rs: &RootSystem<S>, nu: &Weight<S>, w: &Weight<S>) -> bool {
    let dom = rs.dominantize(w);
    rs.in_positive_root_cone(&nu.sub(&dom))
}

/// Full weight multiplicity map of the simple module with highest weight
/// `nu`, by the Freudenthal recursion over dominant weights extended along
/// Weyl orbits.
pub fn character<S: Scalar>(rs: &RootSystem<S>, nu: &Weight<S>) -> Result<Character<S>> {
    require_dominant_integral(rs, nu)?;

    // Collect the full support by walking down simple roots from nu.
    let mut support: BTreeSet<Weight<S>> = BTreeSet::new();
    support.insert(nu.clone());
    let mut queue = VecDeque::from([nu.clone()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..rs.rank {
            let next = w.sub(&rs.simple_root(i).weight);
            if !support.contains(&next) && in_support(rs, nu, &next) {
                support.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    // Dominant support, from high to low.
    let mut dominant: Vec<Weight<S>> = support
        .iter()
        .filter(|w| rs.is_dominant_integral(w))
        .cloned()
        .collect();
    dominant.sort_by(|a, b| rs.height(b).cmp(&rs.height(a)).then_with(|| a.cmp(b)));

    let norm_shifted = |w: &Weight<S>| {
        let s = w.add(&rs.rho);
        rs.inner(&s, &s)
    };
    let top_norm = norm_shifted(nu);

    let mut dominant_mult: BTreeMap<Weight<S>, u64> = BTreeMap::new();
    for mu in &dominant {
        if mu == nu {
            dominant_mult.insert(mu.clone(), 1);
            continue;
        }
        // 2 * sum over positive roots alpha and k >= 1 of
        //   mult(mu + k*alpha) * (mu + k*alpha, alpha)
        let mut numer = S::zero();
        for root in &rs.positive_roots {
            let mut k = 1i64;
            loop {
                let up = mu.add(&root.weight.scaled(&S::from_int(k)));
                if !support.contains(&up) {
                    break;
                }
                let m = dominant_mult
                    .get(&rs.dominantize(&up))
                    .copied()
                    .expect("higher weights already computed");
                numer = numer + S::from_int(m as i64) * rs.inner_with_root(&up, root);
                k += 1;
            }
        }
        numer = S::from_int(2) * numer;
        let denom = top_norm.clone() - norm_shifted(mu);
        let m = (numer / denom).to_int().ok_or_else(|| {
            Error::Inconsistency("Freudenthal multiplicity is not an integer".into())
        })?;
        if m <= 0 {
            return Err(Error::Inconsistency(
                "Freudenthal multiplicity is not positive".into(),
            ));
        }
        dominant_mult.insert(mu.clone(), m as u64);
    }

    let mults: BTreeMap<Weight<S>, u64> = support
        .into_iter()
        .map(|w| {
            let m = dominant_mult[&rs.dominantize(&w)];
            (w, m)
        })
        .collect();
    Ok(Character { mults })
}
