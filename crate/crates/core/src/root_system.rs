//! Cartan data, roots and coroots, and the finite Weyl group.
//!
//! Conventions: weights are written in the fundamental-weight basis and
//! coroots in the simple-coroot basis, so that `<omega_i, alpha_j^vee> =
//! delta_ij` and the pairing of a weight with a coroot is a dot product.
//! Row `i` of the Cartan matrix holds the fundamental-weight coordinates of
//! the simple root `alpha_i`, i.e. `cartan[i][j] = <alpha_i, alpha_j^vee>`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// Weyl groups larger than this are not enumerated by default.
pub const DEFAULT_WEYL_BOUND: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        IntMatrix { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            entries: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        IntMatrix { dim: n, entries }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        IntMatrix { dim: n, entries }
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[i * n + j] * v[j]).sum())
            .collect()
    }

    pub fn apply<T: Scalar>(&self, v: &[T]) -> Vec<T> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.entries[i * n + j];
                    if a != 0 {
                        acc = acc + x.clone() * T::from_int(a);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }
}

/// A Cartan datum: family, rank and the integer Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    cartan: IntMatrix,
    /// Squared lengths of the simple roots, normalized to small integers.
    lengths: Vec<i64>,
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedFamily {
            family: family.letter().to_string(),
            rank,
        };
        let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        let (lengths, edges): (Vec<i64>, Vec<(usize, usize)>) = match (family, rank) {
            (Family::A, n) if (1..=8).contains(&n) => (vec![2; n], chain(n)),
            (Family::B, n) if (2..=8).contains(&n) => {
                let mut l = vec![2; n];
                l[n - 1] = 1;
                (l, chain(n))
            }
            (Family::C, n) if (2..=8).contains(&n) => {
                let mut l = vec![1; n];
                l[n - 1] = 2;
                (l, chain(n))
            }
            (Family::D, n) if (4..=8).contains(&n) => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                (vec![2; n], e)
            }
            (Family::E, n) if (6..=8).contains(&n) => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![2; n], e)
            }
            (Family::F, 4) => (vec![2, 2, 1, 1], chain(4)),
            (Family::G, 2) => (vec![1, 3], chain(2)),
            _ => return Err(unsupported()),
        };
        // Doubled Gram matrix of the simple roots.
        let n = rank;
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = 2 * lengths[i];
        }
        for &(i, j) in &edges {
            let v = -lengths[i].max(lengths[j]);
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        Ok(CartanDatum {
            family,
            rank,
            cartan: IntMatrix::from_rows(&rows),
            lengths,
        })
    }

    /// Validates a user supplied Cartan matrix against the declared family and rank.
    pub fn with_matrix(family: Family, rank: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let datum = CartanDatum::new(family, rank)?;
        let ok = rows.len() == rank
            && rows.iter().all(|r| r.len() == rank)
            && IntMatrix::from_rows(rows) == datum.cartan;
        if ok {
            Ok(datum)
        } else {
            Err(Error::UnsupportedFamily {
                family: format!("{} (Cartan matrix mismatch)", family.letter()),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    /// Accepts names like `A2`, `g2`, `E6`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("bad root system name {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad root system name {s:?}")))?;
        CartanDatum::new(family, rank)
    }
}

/// A coroot written in the simple-coroot basis.
///
/// Since `<omega_i, alpha_j^vee> = delta_ij`, these coordinates are also the
/// row of pairings with the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coroot {
    coords: Vec<i64>,
}

impl Coroot {
    pub fn new(coords: Vec<i64>) -> Self {
        Coroot { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn pairing_row(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Coroot {
        Coroot::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// Exact pairing `<lambda, coroot>`.
pub fn coroot_pairing<T: Scalar>(lambda: &Weight<T>, coroot: &Coroot) -> Result<T> {
    lambda.check_rank(coroot.coords.len())?;
    Ok(lambda.pair(&coroot.coords))
}

/// Element of the finite Weyl group acting on fundamental-weight coordinates.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: IntMatrix,
    inverse: IntMatrix,
    word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state)
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            matrix: IntMatrix::identity(rank),
            inverse: IntMatrix::identity(rank),
            word: Some(Vec::new()),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &IntMatrix {
        &self.inverse
    }

    /// A word in the simple reflections (0-based), when known.
    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.dim()
    }

    /// Composition `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &WeylElement) -> WeylElement {
        let word = match (&self.word, &rhs.word) {
            (Some(a), Some(b)) => Some([a.as_slice(), b.as_slice()].concat()),
            _ => None,
        };
        WeylElement {
            matrix: self.matrix.mul(&rhs.matrix),
            inverse: rhs.inverse.mul(&self.inverse),
            word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            word: self.word.as_ref().map(|w| w.iter().rev().copied().collect()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn act<T: Scalar>(&self, lambda: &Weight<T>) -> Weight<T> {
        Weight::new(self.matrix.apply(lambda.coords()))
    }

    pub fn act_int(&self, lambda: &[i64]) -> Vec<i64> {
        self.matrix.apply_int(lambda)
    }

    /// Image of a coroot: the coroot `w(alpha^vee)` with
    /// `<w lambda, w alpha^vee> = <lambda, alpha^vee>`.
    pub fn act_on_coroot(&self, coroot: &Coroot) -> Coroot {
        Coroot::new(self.inverse.transpose().apply_int(&coroot.coords))
    }
}

/// `finite_act(w, lambda)`.
pub fn finite_act<T: Scalar>(w: &WeylElement, lambda: &Weight<T>) -> Weight<T> {
    w.act(lambda)
}

/// Plain description of a root system for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub name: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub positive_coroots: Vec<Vec<i64>>,
    pub highest_coroot: Vec<i64>,
    pub coxeter_number: usize,
    pub degrees: Vec<usize>,
    pub weyl_order: u64,
}

/// Roots, coroots, weights and the finite Weyl group of a Cartan datum.
#[derive(Clone, Debug)]
pub struct RootSystem {
    datum: CartanDatum,
    /// Positive roots in the simple-root basis, sorted by height.
    roots: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    roots_omega: Vec<Vec<i64>>,
    coroots: Vec<Coroot>,
    coroot_lookup: HashMap<Vec<i64>, usize>,
    highest_coroot: usize,
    highest_root: usize,
    weyl_bound: usize,
    weyl: Option<Vec<WeylElement>>,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        Self::with_weyl_bound(datum, DEFAULT_WEYL_BOUND)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn with_weyl_bound(datum: CartanDatum, weyl_bound: usize) -> Result<Self> {
        let n = datum.rank;
        let cartan = &datum.cartan;
        // <beta, alpha_i^vee> for beta in simple-root coordinates
        let pair_simple = |beta: &[i64], i: usize| -> i64 {
            (0..n).map(|j| beta[j] * cartan.get(j, i)).sum()
        };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let p = pair_simple(&beta, i);
                let mut image = beta.clone();
                image[i] -= p;
                if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let gram = |a: &[i64], b: &[i64]| -> i64 {
            // doubled inner product
            let mut acc = 0;
            for i in 0..n {
                for j in 0..n {
                    let g = if i == j {
                        2 * datum.lengths[i]
                    } else {
                        datum.lengths[j] * cartan.get(i, j)
                    };
                    acc += a[i] * b[j] * g;
                }
            }
            acc
        };
        let mut coroots = Vec::with_capacity(roots.len());
        let mut roots_omega = Vec::with_capacity(roots.len());
        for beta in &roots {
            let norm = gram(beta, beta) / 2;
            let coords: Vec<i64> = (0..n)
                .map(|j| {
                    let num = beta[j] * datum.lengths[j];
                    debug_assert_eq!(num % norm, 0);
                    num / norm
                })
                .collect();
            coroots.push(Coroot::new(coords));
            roots_omega.push((0..n).map(|k| pair_simple(beta, k)).collect());
        }
        let coroot_lookup = coroots
            .iter()
            .enumerate()
            .map(|(i, c)| (c.coords.clone(), i))
            .collect();
        let highest_coroot = (0..coroots.len())
            .max_by_key(|&i| (coroots[i].height(), std::cmp::Reverse(i)))
            .expect("nonempty root system");
        let highest_root = roots.len() - 1;

        let mut rs = RootSystem {
            datum,
            roots,
            roots_omega,
            coroots,
            coroot_lookup,
            highest_coroot,
            highest_root,
            weyl_bound,
            weyl: None,
        };
        if rs.weyl_order() <= weyl_bound as u128 {
            rs.weyl = Some(rs.generate_weyl());
        }
        Ok(rs)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        RootSystem::new(name.parse()?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn family(&self) -> Family {
        self.datum.family
    }

    pub fn name(&self) -> String {
        self.datum.name()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    /// Positive roots in the simple-root basis.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Positive root `a` in fundamental-weight coordinates.
    pub fn root_omega(&self, a: usize) -> &[i64] {
        &self.roots_omega[a]
    }

    pub fn positive_coroots(&self) -> &[Coroot] {
        &self.coroots
    }

    pub fn coroot(&self, a: usize) -> &Coroot {
        &self.coroots[a]
    }

    /// Index of a coroot among the positive ones together with its sign.
    pub fn locate_coroot(&self, coords: &[i64]) -> Option<(usize, i64)> {
        if let Some(&i) = self.coroot_lookup.get(coords) {
            return Some((i, 1));
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.coroot_lookup.get(&neg).map(|&i| (i, -1))
    }

    /// Index of the highest coroot (the bounding wall of the fundamental alcove).
    pub fn highest_coroot(&self) -> usize {
        self.highest_coroot
    }

    /// Index of the highest root (the highest long root).
    pub fn highest_root(&self) -> usize {
        self.highest_root
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.num_positive_roots() / self.rank()
    }

    /// `rho` in fundamental-weight coordinates: every coordinate is one.
    pub fn rho<T: Scalar>(&self) -> Weight<T> {
        Weight::from_ints(&vec![1; self.rank()])
    }

    pub fn fundamental_weight<T: Scalar>(&self, i: usize) -> Weight<T> {
        Weight::fundamental(self.rank(), i)
    }

    /// Degrees of the basic invariants.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank();
        match self.family() {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|k| 2 * k).collect(),
            Family::D => {
                let mut d: Vec<usize> = (1..n).map(|k| 2 * k).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }

    pub fn summary(&self) -> Summary {
        Summary {
            name: self.name(),
            rank: self.rank(),
            cartan_matrix: self.datum.cartan_matrix().rows(),
            positive_roots: self.roots.clone(),
            positive_coroots: self.coroots.iter().map(|c| c.coords().to_vec()).collect(),
            highest_coroot: self.coroot(self.highest_coroot).coords().to_vec(),
            coxeter_number: self.coxeter_number(),
            degrees: self.degrees(),
            weyl_order: u64::try_from(self.weyl_order()).unwrap_or(u64::MAX),
        }
    }

    pub fn weyl_order(&self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let mut w = self.reflection(i);
        w.word = Some(vec![i]);
        w
    }

    /// Reflection in the positive root with index `a`.
    pub fn reflection(&self, a: usize) -> WeylElement {
        let n = self.rank();
        let alpha = &self.roots_omega[a];
        let check = &self.coroots[a].coords;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|l| i64::from(k == l) - alpha[k] * check[l])
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_rows(&rows);
        WeylElement {
            matrix: m.clone(),
            inverse: m,
            word: None,
        }
    }

    fn generate_weyl(&self) -> Vec<WeylElement> {
        let gens: Vec<WeylElement> = (0..self.rank()).map(|i| self.simple_reflection(i)).collect();
        let id = WeylElement::identity(self.rank());
        let mut seen: HashSet<IntMatrix> = HashSet::new();
        seen.insert(id.matrix.clone());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let current = out[head].clone();
            head += 1;
            for g in &gens {
                let next = current.compose(g);
                if seen.insert(next.matrix.clone()) {
                    out.push(next);
                }
            }
        }
        out
    }

    /// All elements of the finite Weyl group, in breadth-first (length) order.
    pub fn weyl_elements(&self) -> Result<&[WeylElement]> {
        self.weyl.as_deref().ok_or(Error::WeylGroupTooLarge {
            order: self.weyl_order(),
            bound: self.weyl_bound,
        })
    }

    /// Entry of the finite Coxeter matrix; `None` stands for infinity.
    fn coxeter_from_product(p: i64) -> Option<u32> {
        match p {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// Coxeter matrix of the affine Weyl group generated by the reflections in
    /// the walls of the fundamental alcove. Index 0 is the affine node, index
    /// `k >= 1` is the simple reflection `k - 1`. `None` means infinity.
    pub fn affine_coxeter_matrix(&self) -> Vec<Vec<Option<u32>>> {
        let n = self.rank();
        let theta_check = &self.coroots[self.highest_coroot].coords;
        let theta = &self.roots_omega[self.highest_coroot];
        // (root in omega coords, coroot coords) for nodes 0..=n
        let node = |g: usize| -> (Vec<i64>, Vec<i64>) {
            if g == 0 {
                (theta.clone(), theta_check.clone())
            } else {
                (self.roots_omega[g - 1].clone(), self.coroots[g - 1].coords.clone())
            }
        };
        (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i == j {
                            return Some(1);
                        }
                        let (ai, ci) = node(i);
                        let (aj, cj) = node(j);
                        let pij: i64 = ai.iter().zip(&cj).map(|(x, y)| x * y).sum();
                        let pji: i64 = aj.iter().zip(&ci).map(|(x, y)| x * y).sum();
                        Self::coxeter_from_product(pij * pji)
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// `build_root_system(datum)`.
pub fn build_root_system(datum: CartanDatum) -> Result<RootSystem> {
    RootSystem::new(datum)
}

/// `enumerate_weyl(rs)`.
pub fn enumerate_weyl(rs: &RootSystem) -> Result<&[WeylElement]> {
    rs.weyl_elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::Q;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    /// Independent orbit enumeration: closure of the simple roots under
    /// reflections written directly in fundamental-weight coordinates.
    fn oracle_root_count(rs: &RootSystem) -> usize {
        let n = rs.rank();
        let c = rs.datum().cartan_matrix();
        let mut seen: HashSet<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c.get(i, j)).collect()).collect();
        let mut frontier: Vec<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let p = beta[i];
                let img: Vec<i64> = (0..n).map(|k| beta[k] - p * c.get(i, k)).collect();
                if seen.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        seen.len() / 2
    }

    #[test]
    fn root_counts_and_weyl_orders() {
        for (name, roots, order) in [
            ("A1", 1, 2),
            ("A2", 3, 6),
            ("A3", 6, 24),
            ("B2", 4, 8),
            ("C3", 9, 48),
            ("B3", 9, 48),
            ("D4", 12, 192),
            ("G2", 6, 12),
            ("F4", 24, 1152),
            ("E6", 36, 51840),
        ] {
            let r = rs(name);
            assert_eq!(r.num_positive_roots(), roots, "{name}");
            assert_eq!(oracle_root_count(&r), roots, "{name}");
            assert_eq!(r.weyl_order(), order, "{name}");
            assert_eq!(r.weyl_elements().unwrap().len() as u128, order, "{name}");
        }
    }

    #[test]
    fn large_weyl_groups_are_refused() {
        let r = rs("E7");
        assert!(matches!(r.weyl_elements(), Err(Error::WeylGroupTooLarge { .. })));
        assert_eq!(r.num_positive_roots(), 63);
    }

    #[test]
    fn unsupported_pairs_are_rejected() {
        assert!(CartanDatum::new(Family::G, 3).is_err());
        assert!(CartanDatum::new(Family::D, 3).is_err());
        assert!(CartanDatum::new(Family::A, 9).is_err());
        assert!("X2".parse::<CartanDatum>().is_err());
    }

    #[test]
    fn cartan_matrices_are_valid() {
        for name in ["A3", "B3", "C3", "D5", "E6", "E8", "F4", "G2"] {
            let d: CartanDatum = name.parse().unwrap();
            let c = d.cartan_matrix();
            for i in 0..d.rank() {
                assert_eq!(c.get(i, i), 2);
                for j in 0..d.rank() {
                    if i != j {
                        assert!(c.get(i, j) <= 0);
                        assert_eq!(c.get(i, j) == 0, c.get(j, i) == 0);
                    }
                }
            }
        }
        let b2: CartanDatum = "B2".parse().unwrap();
        assert_eq!(b2.cartan_matrix().rows(), vec![vec![2, -2], vec![-1, 2]]);
        assert!(CartanDatum::with_matrix(Family::B, 2, &[vec![2, -1], vec![-1, 2]]).is_err());
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let w1: Weight<Q> = a2.fundamental_weight(0);
        assert_eq!(coroot_pairing(&w1, a2.coroot(0)).unwrap(), q(1, 1));
        assert_eq!(coroot_pairing(&w1, a2.coroot(1)).unwrap(), q(0, 1));
        let theta = a2.coroot(a2.highest_coroot());
        assert_eq!(theta.coords(), &[1, 1]);
        assert_eq!(coroot_pairing(&a2.rho::<Q>(), theta).unwrap(), q(2, 1));
        let a1 = rs("A1");
        let half: Weight<Q> = Weight::parse_list("1/2").unwrap();
        assert_eq!(coroot_pairing(&half, a1.coroot(0)).unwrap(), q(1, 2));
        assert!(coroot_pairing(&half, a2.coroot(0)).is_err());
    }

    #[test]
    fn finite_action_examples() {
        let a1 = rs("A1");
        let c: Weight<Q> = Weight::parse_list("5/3").unwrap();
        assert_eq!(finite_act(&a1.simple_reflection(0), &c), -&c);
        let id = WeylElement::identity(1);
        assert_eq!(finite_act(&id, &c), c);
        let a2 = rs("A2");
        let w2: Weight<Q> = a2.fundamental_weight(1);
        assert_eq!(finite_act(&a2.simple_reflection(0), &w2), w2);
    }

    #[test]
    fn highest_coroot_bounds_rho() {
        // <rho, theta^vee> = h - 1 for every irreducible system
        for name in ["A1", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let r = rs(name);
            let theta = r.coroot(r.highest_coroot());
            let v: Q = r.rho::<Q>().pair(theta.coords());
            assert_eq!(v, q(r.coxeter_number() as i64 - 1, 1), "{name}");
        }
    }

    #[test]
    fn simple_reflections_satisfy_coxeter_relations() {
        for name in ["A3", "B3", "G2", "D4", "F4"] {
            let r = rs(name);
            let cox = r.affine_coxeter_matrix();
            for i in 0..r.rank() {
                let si = r.simple_reflection(i);
                assert!(si.compose(&si).is_identity());
                for j in 0..r.rank() {
                    if i == j {
                        continue;
                    }
                    let m = cox[i + 1][j + 1].unwrap();
                    let mut p = WeylElement::identity(r.rank());
                    let sij = si.compose(&r.simple_reflection(j));
                    for _ in 0..m {
                        p = p.compose(&sij);
                    }
                    assert!(p.is_identity(), "{name} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn affine_coxeter_matrices() {
        let a1 = rs("A1").affine_coxeter_matrix();
        assert_eq!(a1[0][1], None);
        let a2 = rs("A2").affine_coxeter_matrix();
        assert_eq!(a2[0][1], Some(3));
        assert_eq!(a2[0][2], Some(3));
        let g2 = rs("G2").affine_coxeter_matrix();
        // the affine node attaches to exactly one finite node
        let links: Vec<Option<u32>> = vec![g2[0][1], g2[0][2]];
        assert!(links.contains(&Some(2)) && links.contains(&Some(3)));
        assert_eq!(g2[1][2], Some(6));
    }

    #[test]
    fn weyl_action_is_compatible_with_coroot_action() {
        // <w lambda, alpha^vee> = <lambda, w^{-1} alpha^vee>, with the coroot action
        // computed independently from the reflection formula on coroots.
        for name in ["A2", "B2", "G2", "A3"] {
            let r = rs(name);
            let n = r.rank();
            let cartan = r.datum().cartan_matrix();
            let reflect_coroot = |i: usize, c: &[i64]| -> Vec<i64> {
                // s_i(c) = c - <alpha_i, c> alpha_i^vee
                let p: i64 = (0..n).map(|k| cartan.get(i, k) * c[k]).sum();
                let mut out = c.to_vec();
                out[i] -= p;
                out
            };
            let lambda: Weight<Q> = Weight::new((0..n).map(|k| q(2 * k as i64 + 1, 7)).collect());
            for w in r.weyl_elements().unwrap() {
                let word = w.word().unwrap();
                for co in r.positive_coroots() {
                    // w^{-1} = reversed word; apply letters of w in order
                    let mut image = co.coords().to_vec();
                    for &i in word.iter() {
                        image = reflect_coroot(i, &image);
                    }
                    let lhs = w.act(&lambda).pair(co.coords());
                    let rhs = lambda.pair(&image);
                    assert_eq!(lhs, rhs);
                    assert_eq!(w.inverse().act_on_coroot(co).coords(), image.as_slice());
                }
            }
        }
    }
}
