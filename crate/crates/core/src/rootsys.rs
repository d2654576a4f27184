//! The root systems `A2` and `G2` inside `H^2(BT) = Z^3`, their Weyl groups,
//! and the encoding of `W(G2)` as `S3 x {+,-}`.
//!
//! Weyl group elements are 2x2 integer matrices acting on coordinates in the
//! simple-root basis. The reflections of `G2` are not integral on the
//! `t`-lattice, but they are on the root lattice, which is the only place
//! they are ever applied.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("{weight} is not a root of {system}")]
    NotARoot { system: RootSystem, weight: Weight },
    #[error("reflecting {gamma} in {beta} leaves the integer lattice")]
    NonIntegralReflection { beta: Weight, gamma: Weight },
    #[error("{0} is not in the root lattice")]
    NotInRootLattice(Weight),
    #[error("matrix is not an element of W(G2)")]
    NotInWeylGroup,
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootSystem {
    A2,
    G2,
}

impl RootSystem {
    pub fn name(&self) -> &'static str {
        match self {
            RootSystem::A2 => "a2",
            RootSystem::G2 => "g2",
        }
    }

    /// `A2`: `t1 - t2`, `t2 - t3`. `G2`: `s1`, `s3 - s1`.
    pub fn simple_roots(&self) -> [Weight; 2] {
        match self {
            RootSystem::A2 => [Weight([1, -1, 0]), Weight([0, 1, -1])],
            RootSystem::G2 => [Weight::s(1), Weight::s(3) - Weight::s(1)],
        }
    }

    /// The full root list, sorted.
    pub fn roots(&self) -> Vec<Weight> {
        let mut out = BTreeSet::new();
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    out.insert(Weight::t(i) - Weight::t(j));
                }
            }
        }
        if *self == RootSystem::G2 {
            for i in 1..=3 {
                let long = 3 * Weight::t(i) - (Weight::t(1) + Weight::t(2) + Weight::t(3));
                out.insert(long);
                out.insert(-long);
            }
        }
        out.into_iter().collect()
    }

    /// Roots with non-negative simple-root coordinates.
    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots()
            .into_iter()
            .filter(|w| {
                let c = self.to_root_coords(w).unwrap();
                c[0] >= 0 && c[1] >= 0
            })
            .map(|weight| Root { system: *self, weight })
            .collect()
    }

    pub fn from_root_coords(&self, c: [i64; 2]) -> Weight {
        let [a1, a2] = self.simple_roots();
        c[0] * a1 + c[1] * a2
    }

    /// Solves `w = a*alpha1 + b*alpha2` over the integers.
    pub fn to_root_coords(&self, w: &Weight) -> Option<[i64; 2]> {
        let [a1, a2] = self.simple_roots();
        let (x, y) = (a1.coeffs(), a2.coeffs());
        let v = w.coeffs();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = x[i] * y[j] - x[j] * y[i];
            if det == 0 {
                continue;
            }
            let a_num = v[i] * y[j] - v[j] * y[i];
            let b_num = x[i] * v[j] - x[j] * v[i];
            if a_num % det != 0 || b_num % det != 0 {
                return None;
            }
            let c = [a_num / det, b_num / det];
            return (self.from_root_coords(c) == *w).then_some(c);
        }
        None
    }

    /// Number of positive roots, which is the valency of the labeled graph.
    pub fn rank_of_positive_system(&self) -> usize {
        self.roots().len() / 2
    }

    pub fn weyl_group_order(&self) -> usize {
        match self {
            RootSystem::A2 => 6,
            RootSystem::G2 => 12,
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootSystem {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a2" => Ok(RootSystem::A2),
            "g2" => Ok(RootSystem::G2),
            other => Err(format!("unknown root system {other:?}")),
        }
    }
}

/// An element of a root system's finite root list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    system: RootSystem,
    weight: Weight,
}

impl Root {
    pub fn new(system: RootSystem, weight: Weight) -> Result<Self, RootError> {
        if system.roots().contains(&weight) {
            Ok(Root { system, weight })
        } else {
            Err(RootError::NotARoot { system, weight })
        }
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }
}

/// `sigma_beta(gamma) = gamma - 2 (beta.gamma)/(beta.beta) beta`.
pub fn reflect(beta: &Root, gamma: &Weight) -> Result<Weight, RootError> {
    let b = beta.weight;
    let num = 2 * b.dot(gamma);
    let den = b.dot(&b);
    if num % den != 0 {
        return Err(RootError::NonIntegralReflection { beta: b, gamma: *gamma });
    }
    Ok(*gamma - (num / den) * b)
}

/// A Weyl group element acting on simple-root coordinates. Column `j` holds
/// the coordinates of the image of the `j`-th simple root.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootLatticeMatrix {
    system: RootSystem,
    m: [[i64; 2]; 2],
}

impl RootLatticeMatrix {
    pub fn identity(system: RootSystem) -> Self {
        RootLatticeMatrix { system, m: [[1, 0], [0, 1]] }
    }

    /// The reflection in `root`, written in the simple-root basis.
    pub fn reflection(root: &Root) -> Self {
        let system = root.system;
        let mut m = [[0; 2]; 2];
        for (j, alpha) in system.simple_roots().iter().enumerate() {
            let image = reflect(root, alpha).expect("roots reflect integrally");
            let c = system.to_root_coords(&image).expect("reflection preserves the root lattice");
            m[0][j] = c[0];
            m[1][j] = c[1];
        }
        RootLatticeMatrix { system, m }
    }

    /// `sigma_1` or `sigma_2`.
    pub fn simple_reflection(system: RootSystem, i: usize) -> Self {
        let root = Root::new(system, system.simple_roots()[i - 1]).unwrap();
        Self::reflection(&root)
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn determinant(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (&self.m, &other.m);
        let mut m = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        RootLatticeMatrix { system: self.system, m }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(self.system), |acc, _| acc.compose(self))
    }

    pub fn apply_coords(&self, c: [i64; 2]) -> [i64; 2] {
        [self.m[0][0] * c[0] + self.m[0][1] * c[1], self.m[1][0] * c[0] + self.m[1][1] * c[1]]
    }

    /// The image of a root-lattice weight, back in `t`-coordinates.
    pub fn apply_to_weight(&self, gamma: &Weight) -> Result<Weight, RootError> {
        let c = self.system.to_root_coords(gamma).ok_or(RootError::NotInRootLattice(*gamma))?;
        Ok(self.system.from_root_coords(self.apply_coords(c)))
    }

    pub fn apply_to_root(&self, gamma: &Root) -> Weight {
        self.apply_to_weight(&gamma.weight).expect("roots lie in the root lattice")
    }
}

/// Closure of `generators` under right multiplication, in breadth-first order
/// starting from the identity.
fn generate(system: RootSystem, generators: &[RootLatticeMatrix]) -> Vec<RootLatticeMatrix> {
    let id = RootLatticeMatrix::identity(system);
    let mut seen = BTreeSet::from([id]);
    let mut order = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in generators {
            let next = w.compose(g);
            if seen.insert(next) {
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    order
}

/// All elements of the Weyl group, generated by the two simple reflections.
pub fn enumerate_weyl_group(system: RootSystem) -> Vec<RootLatticeMatrix> {
    let s1 = RootLatticeMatrix::simple_reflection(system, 1);
    let s2 = RootLatticeMatrix::simple_reflection(system, 2);
    generate(system, &[s1, s2])
}

/// `W(Phi) = <sigma1 sigma2 sigma1, sigma2>`, the reflection subgroup of the
/// roots `±(s_i - s_j)` of `G2`.
pub fn short_root_subgroup() -> Vec<RootLatticeMatrix> {
    let s1 = RootLatticeMatrix::simple_reflection(RootSystem::G2, 1);
    let s2 = RootLatticeMatrix::simple_reflection(RootSystem::G2, 2);
    generate(RootSystem::G2, &[s1.compose(&s2).compose(&s1), s2])
}

/// `rho = (sigma1 sigma2)^3`, which acts as `-1` on every root.
pub fn rho() -> RootLatticeMatrix {
    let s1 = RootLatticeMatrix::simple_reflection(RootSystem::G2, 1);
    let s2 = RootLatticeMatrix::simple_reflection(RootSystem::G2, 2);
    s1.compose(&s2).pow(3)
}

/// A permutation of `{1,2,3}` in one-line notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation([u8; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([1, 2, 3]);

    pub fn new(one_line: [u8; 3]) -> Result<Self, RootError> {
        let mut sorted = one_line;
        sorted.sort_unstable();
        if sorted == [1, 2, 3] {
            Ok(Permutation(one_line))
        } else {
            Err(RootError::InvalidPermutation(format!("{one_line:?}")))
        }
    }

    /// All six permutations in lexicographic order.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(6);
        for a in 1..=3u8 {
            for b in 1..=3u8 {
                for c in 1..=3u8 {
                    if let Ok(p) = Permutation::new([a, b, c]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// The transposition `(i, j)`.
    pub fn transposition(i: usize, j: usize) -> Self {
        let mut p = [1, 2, 3];
        p.swap(i - 1, j - 1);
        Permutation(p)
    }

    pub fn one_line(&self) -> [u8; 3] {
        self.0
    }

    /// `v(i)`, for `i` in `1..=3`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `self ∘ other`. Composing on the right with a transposition swaps two
    /// positions of the one-line word.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation([self.0[other.0[0] as usize - 1], self.0[other.0[1] as usize - 1], self.0[other.0[2] as usize - 1]])
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0u8; 3];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for Permutation {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        let digits: Vec<u8> = s.bytes().map(|b| b.wrapping_sub(b'0')).collect();
        match digits.as_slice() {
            [a, b, c] => Permutation::new([*a, *b, *c]),
            _ => Err(RootError::InvalidPermutation(s.to_string())),
        }
    }
}

/// `+ < -`, which fixes the vertex order of the labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(&self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(&self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A vertex of a labeled graph: a permutation together with a sign. Vertices
/// of the `A2` graph always carry `+`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElement {
    pub perm: Permutation,
    pub sign: Sign,
}

impl WeylElement {
    pub fn new(perm: Permutation, sign: Sign) -> Self {
        WeylElement { perm, sign }
    }

    pub fn plus(perm: Permutation) -> Self {
        WeylElement { perm, sign: Sign::Plus }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.perm, self.sign.symbol())
    }
}

/// Reads off `(pi, eps)` from `w(s_i) = eps * s_{pi(i)}`; returns `None` if
/// `w` does not act on `{±s_i}` that way.
fn signed_action_on_s(w: &RootLatticeMatrix) -> Option<(Permutation, i64)> {
    let mut perm = [0u8; 3];
    let mut signs = [0i64; 3];
    for i in 1..=3 {
        let image = w.apply_to_weight(&Weight::s(i)).ok()?;
        let (k, eps) = (1..=3).flat_map(|k| [(k, 1), (k, -1)]).find(|&(k, eps)| eps * Weight::s(k) == image)?;
        perm[i - 1] = k as u8;
        signs[i - 1] = eps;
    }
    (signs[0] == signs[1] && signs[1] == signs[2]).then(|| (Permutation(perm), signs[0]))
}

/// The bijection `W(G2) -> S3 x {+,-}`. The sign is `+` exactly on the
/// subgroup `W(Phi)`; the permutation records how `w` permutes `s1, s2, s3`
/// up to the global sign.
pub fn psi_encode(w: &RootLatticeMatrix) -> Result<WeylElement, RootError> {
    if w.system != RootSystem::G2 {
        return Err(RootError::NotInWeylGroup);
    }
    let (perm, _) = signed_action_on_s(w).ok_or(RootError::NotInWeylGroup)?;
    let sign = if short_root_subgroup().contains(w) { Sign::Plus } else { Sign::Minus };
    Ok(WeylElement { perm, sign })
}

/// For `A2` the Weyl group is `S3` acting by `w(t_i) = t_{v(i)}`; returns `v`.
pub fn a2_encode(w: &RootLatticeMatrix) -> Result<Permutation, RootError> {
    if w.system != RootSystem::A2 {
        return Err(RootError::NotInWeylGroup);
    }
    let image = |r: Weight| w.apply_to_weight(&r).map(|x| x.coeffs());
    let a = image(Weight([1, -1, 0]))?;
    let b = image(Weight([0, 1, -1]))?;
    let pos = |c: [i64; 3], v: i64| c.iter().position(|&x| x == v).map(|i| i as u8 + 1);
    let one_line = (|| Some([pos(a, 1)?, pos(a, -1)?, pos(b, -1)?]))().ok_or(RootError::NotInWeylGroup)?;
    Permutation::new(one_line)
}

/// Encodes a Weyl group element as a graph vertex.
pub fn encode_vertex(w: &RootLatticeMatrix) -> Result<WeylElement, RootError> {
    match w.system {
        RootSystem::A2 => a2_encode(w).map(WeylElement::plus),
        RootSystem::G2 => psi_encode(w),
    }
}
