//! Root systems, weights and Weyl groups for the simple types A–G.
//!
//! Weights are stored in fundamental-weight coordinates. Each root also
//! carries cached simple-root and coroot coordinates (both integer vectors),
//! so pairings against coroots reduce to integer dot products with the
//! weight's coordinates.

use std::collections::{HashMap, VecDeque};

use crate::mat::Matrix;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Default enumeration cap: the order of W(E6). F4 and below is the intended
/// working range for full block computations.
pub const DEFAULT_WEYL_CAP: usize = 51840;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(TypeLetter::A),
            'B' => Some(TypeLetter::B),
            'C' => Some(TypeLetter::C),
            'D' => Some(TypeLetter::D),
            'E' => Some(TypeLetter::E),
            'F' => Some(TypeLetter::F),
            'G' => Some(TypeLetter::G),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }
}

impl std::fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A point of the dual Cartan space, in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Weight<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![S::zero(); rank],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| S::from_int(c)).collect(),
        }
    }

    /// Parse a comma-separated list of rationals, e.g. `"1/2,0"`.
    pub fn parse(s: &str) -> Option<Self> {
        let coords = s
            .split(',')
            .map(S::parse_frac)
            .collect::<Option<Vec<_>>>()?;
        if coords.is_empty() {
            return None;
        }
        Some(Weight { coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &S {
        &self.coords[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Weight {
            coords: self.coords.iter().map(|a| S::zero() - a.clone()).collect(),
        }
    }

    pub fn scaled(&self, k: &S) -> Self {
        Weight {
            coords: self.coords.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// All coordinates integral, i.e. the weight lies in the weight lattice.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_frac_string()).collect()
    }
}

impl<S: Scalar> std::fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.to_strings().join(","))
    }
}

/// A root together with its cached coordinate representations.
///
/// `coroot_coords` expresses the coroot in the simple-coroot basis, so
/// `pairing(mu, alpha) = sum_i coroot_coords[i] * mu_i` over the
/// fundamental-weight coordinates of `mu`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root<S> {
    pub weight: Weight<S>,
    pub simple_coords: Vec<i64>,
    pub coroot_coords: Vec<i64>,
    pub norm: S,
}

impl<S: Scalar> Root<S> {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// Static data of a simple root system.
#[derive(Clone, Debug)]
pub struct RootSystem<S> {
    pub type_letter: TypeLetter,
    pub rank: usize,
    /// `cartan[i][j]` is the pairing of the j-th simple root with the i-th
    /// simple coroot.
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root<S>>,
    pub rho: Weight<S>,
    /// Symmetrizers: half the squared length of each simple root, up to one
    /// overall positive scale.
    symmetrizers: Vec<S>,
    /// Base change from fundamental-weight to simple-root coordinates.
    inv_cartan: Matrix<S>,
    /// Indices of the simple roots inside `positive_roots`.
    simple_indices: Vec<usize>,
    /// Fundamental coordinates of every root (positive and negative) mapped
    /// to (positive-root index, negated?).
    root_lookup: HashMap<Vec<S>, (usize, bool)>,
}

fn cartan_matrix(letter: TypeLetter, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let invalid = || Error::InvalidType {
        letter: letter.as_char(),
        rank,
    };
    if n == 0 || n > 8 {
        return Err(invalid());
    }
    let ok = match letter {
        TypeLetter::A => n >= 1,
        TypeLetter::B | TypeLetter::C => n >= 2,
        TypeLetter::D => n >= 4,
        TypeLetter::E => (6..=8).contains(&n),
        TypeLetter::F => n == 4,
        TypeLetter::G => n == 2,
    };
    if !ok {
        return Err(invalid());
    }

    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |i: usize, j: usize, aij: i64, aji: i64, a: &mut Vec<Vec<i64>>| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match letter {
        TypeLetter::A => {
            for i in 0..n - 1 {
                edge(i, i + 1, -1, -1, &mut a);
            }
        }
        TypeLetter::B => {
            // last simple root short
            for i in 0..n - 1 {
                edge(i, i + 1, -1, -1, &mut a);
            }
            a[n - 1][n - 2] = -2;
        }
        TypeLetter::C => {
            // last simple root long
            for i in 0..n - 1 {
                edge(i, i + 1, -1, -1, &mut a);
            }
            a[n - 2][n - 1] = -2;
        }
        TypeLetter::D => {
            // chain 0..n-2 with the fork node n-1 attached at n-3
            for i in 0..n - 2 {
                edge(i, i + 1, -1, -1, &mut a);
            }
            edge(n - 3, n - 1, -1, -1, &mut a);
        }
        TypeLetter::E => {
            // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to node 4.
            edge(0, 2, -1, -1, &mut a);
            edge(1, 3, -1, -1, &mut a);
            for i in 2..n - 1 {
                edge(i, i + 1, -1, -1, &mut a);
            }
        }
        TypeLetter::F => {
            edge(0, 1, -1, -1, &mut a);
            edge(1, 2, -1, -2, &mut a);
            edge(2, 3, -1, -1, &mut a);
        }
        TypeLetter::G => {
            // first simple root short
            edge(0, 1, -3, -1, &mut a);
        }
    }
    Ok(a)
}

fn expected_positive_count(letter: TypeLetter, n: usize) -> usize {
    match letter {
        TypeLetter::A => n * (n + 1) / 2,
        TypeLetter::B | TypeLetter::C => n * n,
        TypeLetter::D => n * (n - 1),
        TypeLetter::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        TypeLetter::F => 24,
        TypeLetter::G => 6,
    }
}

/// Known Weyl group orders, used by tests and the enumeration cap.
pub fn weyl_order(letter: TypeLetter, n: usize) -> u128 {
    let fact = |k: usize| -> u128 { (1..=k as u128).product() };
    match letter {
        TypeLetter::A => fact(n + 1),
        TypeLetter::B | TypeLetter::C => (1u128 << n) * fact(n),
        TypeLetter::D => (1u128 << (n - 1)) * fact(n),
        TypeLetter::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        TypeLetter::F => 1152,
        TypeLetter::G => 12,
    }
}

impl<S: Scalar> RootSystem<S> {
    /// Build the full root-system data for a simple type of rank at most 8.
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(letter, rank)?;
        let n = rank;

        // Symmetrizers from d_i * a[i][j] = d_j * a[j][i], spread along the
        // Dynkin graph from d_0 = 1.
        let mut sym: Vec<Option<S>> = vec![None; n];
        sym[0] = Some(S::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && sym[j].is_none() {
                    let d = sym[i].clone().unwrap() * S::from_int(cartan[i][j])
                        / S::from_int(cartan[j][i]);
                    sym[j] = Some(d);
                    queue.push_back(j);
                }
            }
        }
        let symmetrizers: Vec<S> = sym.into_iter().map(|d| d.expect("connected")).collect();

        // Close the simple roots under simple reflections, in simple-root
        // coordinates: s_i(b) changes only b_i, to b_i - sum_j a[i][j] b_j.
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..n {
            let mut b = vec![0i64; n];
            b[i] = 1;
            seen.insert(b.clone(), all.len());
            all.push(b);
        }
        let mut head = 0;
        while head < all.len() {
            let b = all[head].clone();
            head += 1;
            for i in 0..n {
                let mut nb = b.clone();
                let pair: i64 = (0..n).map(|j| cartan[i][j] * b[j]).sum();
                nb[i] -= pair;
                if !seen.contains_key(&nb) {
                    seen.insert(nb.clone(), all.len());
                    all.push(nb);
                }
            }
        }

        let inner_simple = |b: &[i64], c: &[i64]| -> S {
            let mut acc = S::zero();
            for i in 0..n {
                for j in 0..n {
                    if b[i] != 0 && c[j] != 0 && cartan[i][j] != 0 {
                        acc =
                            acc + S::from_int(b[i] * c[j] * cartan[i][j]) * symmetrizers[i].clone();
                    }
                }
            }
            acc
        };

        let mut positive_roots = Vec::new();
        for b in all.iter().filter(|b| b.iter().all(|&x| x >= 0)) {
            let fund: Vec<i64> = (0..n)
                .map(|i| (0..n).map(|j| cartan[i][j] * b[j]).sum())
                .collect();
            let norm = inner_simple(b, b);
            let coroot_coords: Vec<i64> = (0..n)
                .map(|i| {
                    let k =
                        S::from_int(2) * symmetrizers[i].clone() * S::from_int(b[i]) / norm.clone();
                    k.to_int().expect("coroot coordinates are integers")
                })
                .collect();
            positive_roots.push(Root {
                weight: Weight::from_ints(&fund),
                simple_coords: b.clone(),
                coroot_coords,
                norm,
            });
        }
        positive_roots.sort_by_key(|r: &Root<S>| (r.height(), r.simple_coords.clone()));
        if positive_roots.len() != expected_positive_count(letter, n) {
            return Err(Error::Inconsistency(format!(
                "positive root count {} differs from expected {}",
                positive_roots.len(),
                expected_positive_count(letter, n)
            )));
        }

        let cartan_s = Matrix::from_rows(
            cartan
                .iter()
                .map(|row| row.iter().map(|&x| S::from_int(x)).collect())
                .collect(),
        );
        let inv_cartan = cartan_s
            .inverse()
            .ok_or_else(|| Error::Inconsistency("Cartan matrix is singular".into()))?;

        let mut root_lookup = HashMap::new();
        for (idx, r) in positive_roots.iter().enumerate() {
            root_lookup.insert(r.weight.coords().to_vec(), (idx, false));
            root_lookup.insert(r.weight.neg().coords().to_vec(), (idx, true));
        }
        let simple_indices = (0..n)
            .map(|i| {
                positive_roots
                    .iter()
                    .position(|r| {
                        r.simple_coords
                            .iter()
                            .enumerate()
                            .all(|(j, &b)| b == i64::from(j == i))
                    })
                    .expect("simple root present")
            })
            .collect();

        Ok(RootSystem {
            type_letter: letter,
            rank,
            cartan,
            positive_roots,
            rho: Weight::from_ints(&vec![1; n]),
            symmetrizers,
            inv_cartan,
            simple_indices,
            root_lookup,
        })
    }

    pub fn simple_root(&self, i: usize) -> &Root<S> {
        &self.positive_roots[self.simple_indices[i]]
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_indices[i]
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight<S> {
        let mut c = vec![S::zero(); self.rank];
        c[i] = S::one();
        Weight::new(c)
    }

    /// The positive root of maximal height.
    pub fn highest_root(&self) -> &Root<S> {
        self.positive_roots.last().expect("nonempty")
    }

    /// Exact pairing of `mu` with the coroot of `alpha` (given in
    /// fundamental-weight coordinates). Errors when `alpha` is not a root.
    pub fn pairing(&self, mu: &Weight<S>, alpha: &Weight<S>) -> Result<S> {
        let (idx, neg) = self
            .root_lookup
            .get(alpha.coords())
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        let p = self.pairing_root(mu, &self.positive_roots[*idx]);
        Ok(if *neg { S::zero() - p } else { p })
    }

    /// Pairing against a root borrowed from this system; no lookup.
    pub fn pairing_root(&self, mu: &Weight<S>, root: &Root<S>) -> S {
        let mut acc = S::zero();
        for (k, c) in root.coroot_coords.iter().zip(mu.coords()) {
            if *k != 0 {
                acc = acc + S::from_int(*k) * c.clone();
            }
        }
        acc
    }

    /// Simple-root coordinates of a weight (exact rationals in general).
    pub fn simple_coords(&self, w: &Weight<S>) -> Vec<S> {
        self.inv_cartan.apply(w.coords())
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self, w: &Weight<S>) -> S {
        self.simple_coords(w)
            .into_iter()
            .fold(S::zero(), |a, b| a + b)
    }

    /// Whether `w` is a nonnegative-integer combination of positive roots
    /// (equivalently, of simple roots).
    pub fn in_positive_root_cone(&self, w: &Weight<S>) -> bool {
        self.simple_coords(w)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Whether `w` is a dominant integral weight.
    pub fn is_dominant_integral(&self, w: &Weight<S>) -> bool {
        w.coords()
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Cartan inner product of two weights, exact.
    pub fn inner(&self, a: &Weight<S>, b: &Weight<S>) -> S {
        // (a, b) = sum_j g_j(b) d_j c_j(a) with g the simple-root coordinates.
        let g = self.simple_coords(b);
        let mut acc = S::zero();
        for ((gj, dj), aj) in g.iter().zip(&self.symmetrizers).zip(a.coords()) {
            acc = acc + gj.clone() * dj.clone() * aj.clone();
        }
        acc
    }

    /// Inner product of a weight with a root of this system.
    pub fn inner_with_root(&self, a: &Weight<S>, root: &Root<S>) -> S {
        let mut acc = S::zero();
        for j in 0..self.rank {
            if root.simple_coords[j] != 0 {
                acc = acc
                    + S::from_int(root.simple_coords[j])
                        * self.symmetrizers[j].clone()
                        * a.coord(j).clone();
            }
        }
        acc
    }

    /// Reflection of `w` in the hyperplane of `root`.
    pub fn reflect(&self, root: &Root<S>, w: &Weight<S>) -> Weight<S> {
        let p = self.pairing_root(w, root);
        w.sub(&root.weight.scaled(&p))
    }

    /// Matrix of the reflection in `root`, acting on fundamental coordinates.
    pub fn reflection_matrix(&self, root: &Root<S>) -> Matrix<S> {
        let n = self.rank;
        let mut m: Matrix<S> = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let d = m.get(i, j).clone()
                    - S::from_int(root.coroot_coords[j]) * root.weight.coord(i).clone();
                m.set(i, j, d);
            }
        }
        m
    }

    /// The dominant representative of `w` under the ordinary Weyl action.
    pub fn dominantize(&self, w: &Weight<S>) -> Weight<S> {
        let mut cur = w.clone();
        'outer: loop {
            for i in 0..self.rank {
                if cur.coord(i).is_negative() {
                    cur = self.reflect(self.simple_root(i), &cur);
                    continue 'outer;
                }
            }
            return cur;
        }
    }
}

/// A Weyl-group element: reduced word over the group's generators, exact
/// action matrix on fundamental coordinates, and Coxeter length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElt<S> {
    pub word: Vec<usize>,
    pub matrix: Matrix<S>,
    pub length: usize,
}

/// An enumerated finite reflection group: the full Weyl group, or the
/// integral Weyl group of a weight generated by reflections in a chosen
/// simple system.
///
/// Immutable after construction; safe to share across threads.
#[derive(Clone, Debug)]
pub struct CoxeterGroup<S> {
    /// Indices (into the ambient positive roots) of the generating roots.
    pub generator_roots: Vec<usize>,
    elements: Vec<WeylElt<S>>,
    index: HashMap<Matrix<S>, usize>,
    /// `left_mul[e][g]` is the index of `s_g * w_e`.
    left_mul: Vec<Vec<usize>>,
    /// `right_mul[e][g]` is the index of `w_e * s_g`.
    right_mul: Vec<Vec<usize>>,
}

impl<S: Scalar> CoxeterGroup<S> {
    /// Breadth-first enumeration from the identity, appending generators on
    /// the right in ascending index order, deduplicating by action matrix.
    /// Words come out reduced, in length order, lexicographically smallest
    /// first among ties.
    pub fn generate(rs: &RootSystem<S>, generator_roots: &[usize], cap: usize) -> Result<Self> {
        let n = rs.rank;
        let gen_mats: Vec<Matrix<S>> = generator_roots
            .iter()
            .map(|&g| rs.reflection_matrix(&rs.positive_roots[g]))
            .collect();

        let mut elements = vec![WeylElt {
            word: Vec::new(),
            matrix: Matrix::identity(n),
            length: 0,
        }];
        let mut index = HashMap::new();
        index.insert(elements[0].matrix.clone(), 0usize);

        let mut head = 0;
        while head < elements.len() {
            for (g, gm) in gen_mats.iter().enumerate() {
                let m = elements[head].matrix.mul(gm);
                if !index.contains_key(&m) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    let mut word = elements[head].word.clone();
                    word.push(g);
                    index.insert(m.clone(), elements.len());
                    let length = word.len();
                    elements.push(WeylElt {
                        word,
                        matrix: m,
                        length,
                    });
                }
            }
            head += 1;
        }

        let left_mul = elements
            .iter()
            .map(|e| {
                gen_mats
                    .iter()
                    .map(|gm| index[&gm.mul(&e.matrix)])
                    .collect()
            })
            .collect();
        let right_mul = elements
            .iter()
            .map(|e| gen_mats.iter().map(|gm| index[&e.matrix.mul(gm)]).collect())
            .collect();

        Ok(CoxeterGroup {
            generator_roots: generator_roots.to_vec(),
            elements,
            index,
            left_mul,
            right_mul,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.generator_roots.len()
    }

    pub fn elements(&self) -> &[WeylElt<S>] {
        &self.elements
    }

    pub fn elt(&self, i: usize) -> &WeylElt<S> {
        &self.elements[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, e: &WeylElt<S>) -> Result<usize> {
        self.index
            .get(&e.matrix)
            .copied()
            .ok_or(Error::GroupMismatch)
    }

    pub fn left_mul_gen(&self, e: usize, g: usize) -> usize {
        self.left_mul[e][g]
    }

    pub fn right_mul_gen(&self, e: usize, g: usize) -> usize {
        self.right_mul[e][g]
    }

    /// Index of the product `w_a * w_b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut cur = a;
        for &g in &self.elements[b].word {
            cur = self.right_mul[cur][g];
        }
        cur
    }

    pub fn inverse(&self, a: usize) -> usize {
        let mut cur = self.identity_index();
        for &g in self.elements[a].word.iter().rev() {
            cur = self.right_mul[cur][g];
        }
        cur
    }

    /// Index of the longest element.
    pub fn longest_index(&self) -> usize {
        let max = self.elements.iter().map(|e| e.length).max().unwrap();
        let mut at = self
            .elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.length == max);
        let (idx, _) = at.next().unwrap();
        debug_assert!(at.next().is_none(), "longest element must be unique");
        idx
    }

    fn first_left_descent(&self, y: usize) -> Option<usize> {
        (0..self.num_generators()).find(|&g| self.length(self.left_mul[y][g]) < self.length(y))
    }

    /// Bruhat order via the lifting property (equivalent to the subword
    /// characterization).
    pub fn bruhat_leq_idx(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        if self.length(x) >= self.length(y) {
            return false;
        }
        let s = self.first_left_descent(y).expect("y is not the identity");
        let sy = self.left_mul[y][s];
        let sx = self.left_mul[x][s];
        if self.length(sx) < self.length(x) {
            self.bruhat_leq_idx(sx, sy)
        } else {
            self.bruhat_leq_idx(x, sy)
        }
    }

    /// Bruhat order on elements; errors when either element does not belong
    /// to this enumerated group.
    pub fn bruhat_leq(&self, x: &WeylElt<S>, y: &WeylElt<S>) -> Result<bool> {
        Ok(self.bruhat_leq_idx(self.index_of(x)?, self.index_of(y)?))
    }

    /// Indices of all reflections of the group (conjugates of generators).
    pub fn reflection_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for w in 0..self.len() {
            for g in 0..self.num_generators() {
                let t = self.mul(self.mul(w, self.right_mul[0][g]), self.inverse(w));
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Full Bruhat order computed independently from reflection-lowering
    /// chains; quadratic, intended for cross-checks on small groups.
    pub fn bruhat_matrix_by_chains(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let refl = self.reflection_indices();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.length(i));
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &y in &order {
            if self.length(y) == 0 {
                continue;
            }
            let covers: Vec<usize> = refl
                .iter()
                .map(|&t| self.mul(t, y))
                .filter(|&z| self.length(z) + 1 == self.length(y))
                .collect();
            for row in leq.iter_mut() {
                if !row[y] {
                    row[y] = covers.iter().any(|&z| row[z]);
                }
            }
        }
        leq
    }
}

/// Enumerate the full Weyl group of `rs` (error if its order exceeds `cap`).
pub fn enumerate_weyl_group<S: Scalar>(rs: &RootSystem<S>, cap: usize) -> Result<CoxeterGroup<S>> {
    let gens: Vec<usize> = (0..rs.rank).map(|i| rs.simple_root_index(i)).collect();
    CoxeterGroup::generate(rs, &gens, cap)
}

/// The translated (dot) action `w.lam = w(lam + rho) - rho`.
pub fn dot_action<S: Scalar>(rs: &RootSystem<S>, w: &WeylElt<S>, lam: &Weight<S>) -> Weight<S> {
    let shifted = lam.add(&rs.rho);
    Weight::new(w.matrix.apply(shifted.coords())).sub(&rs.rho)
}
