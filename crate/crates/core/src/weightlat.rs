//! Linkage combinatorics of a parameter weight: the integral subsystem, its
//! Weyl group, the dot stabilizer, dominance, and the minimality test that
//! governs which simple modules survive.

use std::collections::BTreeMap;

use crate::rootsys::{dot_action, CoxeterGroup, Root, RootSystem, Weight};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Which partial order backs the minimality test.
///
/// The two candidate readings of "minimal" differ: orbit elements always
/// differ by integer combinations of positive integral roots, which makes
/// `RootLattice` the order that matches the closed form at `lambda = -rho`;
/// `DominantCone` compares by "difference is a dominant integral weight" and
/// is kept selectable so reports can surface any disagreement.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MinimalityOrder {
    #[default]
    RootLattice,
    DominantCone,
}

/// Integral-linkage data of a weight: the integral roots, a simple system
/// for them, the enumerated integral Weyl group, and the dot stabilizer.
#[derive(Clone, Debug)]
pub struct IntegralData<S> {
    pub lambda: Weight<S>,
    /// Indices (into the ambient positive roots) of the positive integral
    /// roots; the set of integral roots is closed under negation.
    pub integral_positives: Vec<usize>,
    /// Indices of the simple system of the integral subsystem: positive
    /// integral roots not expressible as a sum of two positive integral
    /// roots.
    pub integral_simples: Vec<usize>,
    /// The integral Weyl group, generated by reflections in the integral
    /// simples. Element words are reduced words over those generators.
    pub group: CoxeterGroup<S>,
    /// Indices (into `group`) of the elements fixing `lambda` under the dot
    /// action.
    pub stabilizer: Vec<usize>,
}

fn integral_positive_indices<S: Scalar>(rs: &RootSystem<S>, lambda: &Weight<S>) -> Vec<usize> {
    rs.positive_roots
        .iter()
        .enumerate()
        .filter(|(_, r)| rs.pairing_root(lambda, r).is_integer())
        .map(|(i, _)| i)
        .collect()
}

fn integral_simple_indices<S: Scalar>(rs: &RootSystem<S>, positives: &[usize]) -> Vec<usize> {
    // A positive integral root is simple for the subsystem exactly when it
    // is not the sum of two positive integral roots.
    positives
        .iter()
        .copied()
        .filter(|&i| {
            let target = &rs.positive_roots[i].simple_coords;
            !positives.iter().any(|&a| {
                positives.iter().any(|&b| {
                    let (ra, rb) = (&rs.positive_roots[a], &rs.positive_roots[b]);
                    (0..rs.rank).all(|k| ra.simple_coords[k] + rb.simple_coords[k] == target[k])
                })
            })
        })
        .collect()
}

/// Compute the full integral-linkage data of `lambda`. The integral Weyl
/// group is enumerated up to `cap` elements.
pub fn integral_data<S: Scalar>(
    rs: &RootSystem<S>,
    lambda: &Weight<S>,
    cap: usize,
) -> Result<IntegralData<S>> {
    let integral_positives = integral_positive_indices(rs, lambda);
    let integral_simples = integral_simple_indices(rs, &integral_positives);
    let group = CoxeterGroup::generate(rs, &integral_simples, cap)?;
    let stabilizer = (0..group.len())
        .filter(|&i| dot_action(rs, group.elt(i), lambda) == *lambda)
        .collect();
    Ok(IntegralData {
        lambda: lambda.clone(),
        integral_positives,
        integral_simples,
        group,
        stabilizer,
    })
}

impl<S: Scalar> IntegralData<S> {
    pub fn integral_positive_roots<'a>(
        &'a self,
        rs: &'a RootSystem<S>,
    ) -> impl Iterator<Item = &'a Root<S>> {
        self.integral_positives
            .iter()
            .map(|&i| &rs.positive_roots[i])
    }

    /// Whether the stabilizer of `lambda` is trivial.
    pub fn is_regular(&self) -> bool {
        self.stabilizer.len() == 1
    }

    /// The most dominant element of the dot orbit of `mu` under the integral
    /// Weyl group.
    pub fn dominantize_dot(&self, rs: &RootSystem<S>, mu: &Weight<S>) -> Weight<S> {
        let mut cur = mu.clone();
        'outer: loop {
            for &i in &self.integral_simples {
                let root = &rs.positive_roots[i];
                let p = rs.pairing_root(&cur.add(&rs.rho), root);
                if p.is_negative() {
                    // dot reflection: s.mu = mu - <mu + rho, gamma^> gamma
                    cur = cur.sub(&root.weight.scaled(&p));
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// The full dot orbit of `mu` under the integral Weyl group.
    pub fn dot_orbit(&self, rs: &RootSystem<S>, mu: &Weight<S>) -> Vec<Weight<S>> {
        let mut seen = BTreeMap::new();
        for i in 0..self.group.len() {
            let w = dot_action(rs, self.group.elt(i), mu);
            seen.entry(w).or_insert(i);
        }
        seen.into_keys().collect()
    }

    /// Orbit of `mu` under the dot stabilizer of `lambda`.
    pub fn stabilizer_orbit(&self, rs: &RootSystem<S>, mu: &Weight<S>) -> Vec<Weight<S>> {
        let mut out: Vec<Weight<S>> = Vec::new();
        for &i in &self.stabilizer {
            let w = dot_action(rs, self.group.elt(i), mu);
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }
}

/// Dominance relative to the integral subsystem: the pairing of
/// `lambda + rho` with every positive integral coroot is a nonnegative
/// integer. Returns the offending root on failure, for error reporting.
pub fn dominance_failure<S: Scalar>(
    rs: &RootSystem<S>,
    lambda: &Weight<S>,
) -> Option<(Weight<S>, S)> {
    let shifted = lambda.add(&rs.rho);
    for root in &rs.positive_roots {
        let p = rs.pairing_root(&shifted, root);
        if p.is_integer() && p.is_negative() {
            return Some((root.weight.clone(), p));
        }
    }
    None
}

pub fn is_dominant<S: Scalar>(rs: &RootSystem<S>, lambda: &Weight<S>) -> bool {
    dominance_failure(rs, lambda).is_none()
}

pub(crate) fn require_dominant<S: Scalar>(rs: &RootSystem<S>, lambda: &Weight<S>) -> Result<()> {
    match dominance_failure(rs, lambda) {
        None => Ok(()),
        Some((root, value)) => Err(Error::NotDominant {
            lambda: lambda.to_string(),
            root: root.to_string(),
            value: value.to_frac_string(),
        }),
    }
}

/// General position: no root pairs integrally with `lambda`, so the integral
/// Weyl group is trivial.
pub fn is_general_position<S: Scalar>(rs: &RootSystem<S>, lambda: &Weight<S>) -> bool {
    integral_positive_indices(rs, lambda).is_empty()
}

/// `upper >= lower` in the selected order.
pub fn order_leq<S: Scalar>(
    rs: &RootSystem<S>,
    order: MinimalityOrder,
    lower: &Weight<S>,
    upper: &Weight<S>,
) -> bool {
    let diff = upper.sub(lower);
    match order {
        MinimalityOrder::RootLattice => rs.in_positive_root_cone(&diff),
        MinimalityOrder::DominantCone => rs.is_dominant_integral(&diff),
    }
}

/// Whether `mu` is the unique minimal element of its orbit under the dot
/// stabilizer of the dominant weight in `data`, i.e. every orbit element
/// dominates `mu` in the selected order.
///
/// Errors when the base weight is not dominant or `mu` is not linked to it.
pub fn is_minimal<S: Scalar>(
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
    Ok(orbit.iter().all(|nu| order_leq(rs, order, mu, nu)))
}

/// Partition of candidate weights into dot orbits of the integral Weyl
/// group; `lambda_class` indexes the class containing `lambda`, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkagePartition {
    pub classes: Vec<Vec<usize>>,
    pub lambda_class: Option<usize>,
}

pub fn linkage_classes<S: Scalar>(
    rs: &RootSystem<S>,
    data: &IntegralData<S>,
    candidates: &[Weight<S>],
) -> LinkagePartition {
    let mut keys: Vec<Weight<S>> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let key = data.dominantize_dot(rs, c);
        match keys.iter().position(|k| *k == key) {
            Some(p) => classes[p].push(i),
            None => {
                keys.push(key);
                classes.push(vec![i]);
            }
        }
    }
    let lambda_key = data.dominantize_dot(rs, &data.lambda);
    let lambda_class = keys.iter().position(|k| *k == lambda_key);
    LinkagePartition {
        classes,
        lambda_class,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{enumerate_weyl_group, TypeLetter, DEFAULT_WEYL_CAP};
    use crate::{Rat, Weight as W};
    use num::{Signed, Zero};

    fn rs(letter: TypeLetter, rank: usize) -> RootSystem<Rat> {
        RootSystem::new(letter, rank).unwrap()
    }

    fn data(rs: &RootSystem<Rat>, lam: &W) -> IntegralData<Rat> {
        integral_data(rs, lam, DEFAULT_WEYL_CAP).unwrap()
    }

    #[test]
    fn integral_weight_has_full_group() {
        let a2 = rs(TypeLetter::A, 2);
        let lam = W::from_ints(&[3, 0]);
        let d = data(&a2, &lam);
        assert_eq!(d.integral_positives.len(), 3);
        assert_eq!(d.integral_simples.len(), 2);
        assert_eq!(d.group.len(), 6);
    }

    #[test]
    fn half_integral_sl2_is_general_position() {
        let a1 = rs(TypeLetter::A, 1);
        let lam = W::parse("1/2").unwrap();
        let d = data(&a1, &lam);
        assert!(d.integral_positives.is_empty());
        assert_eq!(d.group.len(), 1);
        assert!(is_general_position(&a1, &lam));
        assert!(!is_general_position(&a1, &W::from_ints(&[0])));
    }

    #[test]
    fn a2_half_integral_has_one_integral_root() {
        let a2 = rs(TypeLetter::A, 2);
        let lam = W::parse("1/2,0").unwrap();
        let d = data(&a2, &lam);
        assert_eq!(d.integral_positives.len(), 1);
        let root = &a2.positive_roots[d.integral_positives[0]];
        assert_eq!(root.weight, a2.simple_root(1).weight);
        assert_eq!(d.group.len(), 2);
        assert!(!is_general_position(&a2, &lam));
    }

    #[test]
    fn integral_data_is_translation_invariant() {
        let b2 = rs(TypeLetter::B, 2);
        let lam = W::parse("1/2,0").unwrap();
        let beta = W::from_ints(&[2, -1]);
        let d1 = data(&b2, &lam);
        let d2 = data(&b2, &lam.add(&beta));
        assert_eq!(d1.integral_positives, d2.integral_positives);
        assert_eq!(d1.integral_simples, d2.integral_simples);
    }

    #[test]
    fn integral_roots_closed_under_integral_reflections() {
        let b2 = rs(TypeLetter::B, 2);
        let lam = W::parse("1/2,0").unwrap();
        let d = data(&b2, &lam);
        for &i in &d.integral_positives {
            for &j in &d.integral_positives {
                let img = b2.reflect(&b2.positive_roots[i], &b2.positive_roots[j].weight);
                let dom = if b2.in_positive_root_cone(&img) {
                    img.clone()
                } else {
                    img.neg()
                };
                assert!(d
                    .integral_positives
                    .iter()
                    .any(|&k| b2.positive_roots[k].weight == dom));
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let a1 = rs(TypeLetter::A, 1);
        assert!(is_dominant(&a1, &W::zero(1)));
        assert!(is_dominant(&a1, &W::from_ints(&[-1])));
        assert!(!is_dominant(&a1, &W::from_ints(&[-2])));
        // vacuous dominance off the integral lattice
        assert!(is_dominant(&a1, &W::parse("-5/2").unwrap()));
    }

    #[test]
    fn stabilizer_matches_zero_pairing_generators() {
        let a2 = rs(TypeLetter::A, 2);
        // lambda + rho pairs to zero exactly with the first simple coroot
        let lam = W::from_ints(&[-1, 0]);
        let d = data(&a2, &lam);
        assert_eq!(d.stabilizer.len(), 2);
        // -rho is fixed by everything
        let d2 = data(&a2, &W::from_ints(&[-1, -1]));
        assert_eq!(d2.stabilizer.len(), d2.group.len());
        // regular weights have trivial stabilizer
        let d3 = data(&a2, &W::zero(2));
        assert_eq!(d3.stabilizer, vec![0]);
    }

    #[test]
    fn dominant_stabilizer_is_generated_by_wall_reflections() {
        // for dominant lambda the dot stabilizer must be the subgroup
        // generated by reflections in the integral positive roots pairing
        // lambda + rho to zero
        for (letter, rank, lam) in [
            (TypeLetter::A, 2, W::from_ints(&[-1, 0])),
            (TypeLetter::A, 2, W::from_ints(&[-1, -1])),
            (TypeLetter::B, 2, W::from_ints(&[0, -1])),
            (TypeLetter::G, 2, W::from_ints(&[-1, 0])),
        ] {
            let r = rs(letter, rank);
            let d = data(&r, &lam);
            let shifted = lam.add(&r.rho);
            let walls: Vec<usize> = d
                .integral_positives
                .iter()
                .copied()
                .filter(|&i| r.pairing_root(&shifted, &r.positive_roots[i]).is_zero())
                .collect();
            let sub = CoxeterGroup::generate(&r, &walls, usize::MAX).unwrap();
            let generated: std::collections::BTreeSet<_> = (0..sub.len())
                .map(|i| d.group.index_of(sub.elt(i)).unwrap())
                .collect();
            let stab: std::collections::BTreeSet<_> = d.stabilizer.iter().copied().collect();
            assert_eq!(generated, stab, "{letter}{rank} at {lam}");
        }
    }

    #[test]
    fn minimality_examples_sl2() {
        let a1 = rs(TypeLetter::A, 1);
        let neg_rho = W::from_ints(&[-1]);
        let d = data(&a1, &neg_rho);
        for order in [MinimalityOrder::RootLattice, MinimalityOrder::DominantCone] {
            assert!(is_minimal(&a1, &d, &neg_rho, order).unwrap());
        }
        // orbit of 1 under the stabilizer is {1, -3}
        assert!(!is_minimal(&a1, &d, &W::from_ints(&[1]), MinimalityOrder::RootLattice).unwrap());
        assert!(is_minimal(&a1, &d, &W::from_ints(&[-3]), MinimalityOrder::RootLattice).unwrap());
        // regular lambda: singleton orbits, everything is minimal
        let d0 = data(&a1, &W::zero(1));
        assert!(is_minimal(&a1, &d0, &W::from_ints(&[4]), MinimalityOrder::RootLattice).unwrap());
        // non-linked mu is an error
        assert!(matches!(
            is_minimal(
                &a1,
                &d,
                &W::parse("1/3").unwrap(),
                MinimalityOrder::RootLattice
            ),
            Err(Error::NotLinked { .. })
        ));
        // non-dominant base is an error
        let bad = data(&a1, &W::from_ints(&[-4]));
        assert!(matches!(
            is_minimal(&a1, &bad, &W::from_ints(&[0]), MinimalityOrder::RootLattice),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn minimal_iff_antidominant_at_neg_rho() {
        // at lambda = -rho the stabilizer is everything, so minimality must
        // pick out exactly the weights with antidominant mu + rho
        let a2 = rs(TypeLetter::A, 2);
        let neg_rho = W::from_ints(&[-1, -1]);
        let d = data(&a2, &neg_rho);
        for mu in d.dot_orbit(&a2, &W::from_ints(&[0, 0])) {
            let anti = a2
                .positive_roots
                .iter()
                .all(|r| !a2.pairing_root(&mu.add(&a2.rho), r).is_positive());
            assert_eq!(
                is_minimal(&a2, &d, &mu, MinimalityOrder::RootLattice).unwrap(),
                anti
            );
        }
    }

    #[test]
    fn linkage_class_examples() {
        let a1 = rs(TypeLetter::A, 1);
        let lam = W::zero(1);
        let d = data(&a1, &lam);
        let g = enumerate_weyl_group(&a1, DEFAULT_WEYL_CAP).unwrap();
        let s_lam = dot_action(&a1, g.elt(1), &lam);
        let p = linkage_classes(&a1, &d, &[lam.clone(), s_lam]);
        assert_eq!(p.classes, vec![vec![0, 1]]);
        assert_eq!(p.lambda_class, Some(0));

        let lam_h = W::parse("1/2").unwrap();
        let dh = data(&a1, &lam_h);
        let p2 = linkage_classes(&a1, &dh, &[lam_h.clone(), W::parse("-5/2").unwrap()]);
        assert_eq!(p2.classes.len(), 2);

        let a2 = rs(TypeLetter::A, 2);
        let d2 = data(&a2, &W::zero(2));
        let orbit = d2.dot_orbit(&a2, &W::zero(2));
        assert_eq!(orbit.len(), 6);
        let p3 = linkage_classes(&a2, &d2, &orbit);
        assert_eq!(p3.classes.len(), 1);
        assert_eq!(p3.classes[0].len(), 6);
    }
}
