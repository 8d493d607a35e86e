//! The affine coroot hyperplane arrangement, alcoves and faces, the affine
//! Weyl group, and membership tests for `V`, `V^reg` and the fundamental
//! domain `S` in pairs of real weights.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::root_system::{IntMatrix, RootSystem, WeylElement};
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::Q;

/// The hyperplane `<lambda, alpha^vee> = level` for a positive coroot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineHyperplane {
    pub coroot: usize,
    pub level: i64,
}

impl AffineHyperplane {
    pub fn new(coroot: usize, level: i64) -> Self {
        AffineHyperplane { coroot, level }
    }

    /// `<lambda, alpha^vee> - level`, positive on the upper side.
    pub fn eval<T: Scalar>(&self, rs: &RootSystem, lambda: &Weight<T>) -> T {
        lambda.pair(rs.coroot(self.coroot).coords()) - T::from_int(self.level)
    }

    pub fn contains<T: Scalar>(&self, rs: &RootSystem, lambda: &Weight<T>) -> bool {
        self.eval(rs, lambda).is_zero()
    }
}

impl fmt::Display for AffineHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(coroot {}, level {})", self.coroot, self.level)
    }
}

impl Serialize for AffineHyperplane {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.coroot as i64, self.level].serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineHyperplane {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [c, l] = <[i64; 2]>::deserialize(d)?;
        Ok(AffineHyperplane::new(c as usize, l))
    }
}

/// An alcove, identified by the integer parts of the pairings with every
/// positive coroot: `floors[a] < <lambda, alpha_a^vee> < floors[a] + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alcove {
    floors: Vec<i64>,
}

impl Alcove {
    pub fn new(floors: Vec<i64>) -> Self {
        Alcove { floors }
    }

    pub fn fundamental(rs: &RootSystem) -> Self {
        Alcove::new(vec![0; rs.num_positive_roots()])
    }

    pub fn floors(&self) -> &[i64] {
        &self.floors
    }

    /// Parses `"0,1,-1"` or a JSON array.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        s.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i64>().map_err(|e| Error::Parse(format!("bad floor {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(Alcove::new)
    }

    pub fn contains<T: Scalar>(&self, rs: &RootSystem, lambda: &Weight<T>) -> bool {
        rs.positive_coroots().iter().zip(&self.floors).all(|(c, &k)| {
            let p = lambda.pair(c.coords());
            p > T::from_int(k) && p < T::from_int(k + 1)
        })
    }

    pub fn closure_contains<T: Scalar>(&self, rs: &RootSystem, lambda: &Weight<T>) -> bool {
        rs.positive_coroots().iter().zip(&self.floors).all(|(c, &k)| {
            let p = lambda.pair(c.coords());
            p >= T::from_int(k) && p <= T::from_int(k + 1)
        })
    }

    /// Largest `|floor|`-type extent: the alcove lies in the box of radius `r`
    /// iff every floor is in `[-r, r - 1]`.
    pub fn within_radius(&self, radius: i64) -> bool {
        self.floors.iter().all(|&k| -radius <= k && k < radius)
    }
}

impl fmt::Display for Alcove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.floors)
    }
}

/// A stratum of the stratification cut out by the hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    /// Hyperplanes containing the face, sorted by coroot index.
    pub equalities: Vec<AffineHyperplane>,
    /// For strict coroots the floor of the pairing, for equality coroots the level.
    pub floors: Vec<i64>,
}

impl Face {
    pub fn is_alcove(&self) -> bool {
        self.equalities.is_empty()
    }

    pub fn codimension_hint(&self) -> usize {
        self.equalities.len()
    }

    pub fn closure_contains<T: Scalar>(&self, rs: &RootSystem, lambda: &Weight<T>) -> bool {
        let mut eq = self.equalities.iter().peekable();
        for (a, c) in rs.positive_coroots().iter().enumerate() {
            let p = lambda.pair(c.coords());
            let k = self.floors[a];
            if eq.peek().is_some_and(|h| h.coroot == a) {
                eq.next();
                if p != T::from_int(k) {
                    return false;
                }
            } else if p < T::from_int(k) || p > T::from_int(k + 1) {
                return false;
            }
        }
        true
    }
}

/// An element `lambda -> linear(lambda) + translation` of the (extended)
/// affine Weyl group. Translations by the root lattice give the affine Weyl
/// group proper; arbitrary integral translations give its extension by the
/// weight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    linear: WeylElement,
    translation: Vec<i64>,
}

impl Serialize for AffineWeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AffineWeylElement", 2)?;
        st.serialize_field("linear", &self.linear.matrix().rows())?;
        st.serialize_field("translation", &self.translation)?;
        st.end()
    }
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement {
            linear: WeylElement::identity(rank),
            translation: vec![0; rank],
        }
    }

    pub fn new(linear: WeylElement, translation: Vec<i64>) -> Self {
        assert_eq!(linear.rank(), translation.len());
        AffineWeylElement { linear, translation }
    }

    pub fn translation_by(nu: &[i64]) -> Self {
        AffineWeylElement::new(WeylElement::identity(nu.len()), nu.to_vec())
    }

    /// Reflection in `H`: `lambda -> lambda - (<lambda, alpha^vee> - n) alpha`.
    pub fn reflection(rs: &RootSystem, h: AffineHyperplane) -> Self {
        let alpha = rs.root_omega(h.coroot);
        AffineWeylElement::new(
            rs.reflection(h.coroot),
            alpha.iter().map(|&a| a * h.level).collect(),
        )
    }

    /// Simple affine reflection with generator index `g`: `0` is the
    /// reflection in the highest-coroot wall, `k >= 1` the finite simple
    /// reflection `k - 1`.
    pub fn simple(rs: &RootSystem, g: usize) -> Self {
        AffineWeylElement::reflection(rs, fundamental_wall(rs, g))
    }

    pub fn linear(&self) -> &WeylElement {
        &self.linear
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &AffineWeylElement) -> AffineWeylElement {
        let wt = self.linear.act_int(&rhs.translation);
        AffineWeylElement {
            linear: self.linear.compose(&rhs.linear),
            translation: wt.iter().zip(&self.translation).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let inv = self.linear.inverse();
        let t = inv.act_int(&self.translation);
        AffineWeylElement {
            linear: inv,
            translation: t.into_iter().map(|x| -x).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(|&x| x == 0)
    }

    pub fn act<T: Scalar>(&self, lambda: &Weight<T>) -> Weight<T> {
        let moved = self.linear.act(lambda);
        Weight::new(
            moved
                .coords()
                .iter()
                .zip(&self.translation)
                .map(|(x, &t)| x.clone() + T::from_int(t))
                .collect(),
        )
    }

    /// Image of a hyperplane, normalized to a positive coroot. The flag is
    /// `true` when the upper side of `h` is sent to the upper side of the image.
    pub fn act_on_hyperplane(&self, rs: &RootSystem, h: AffineHyperplane) -> (AffineHyperplane, bool) {
        let image = self.linear.act_on_coroot(rs.coroot(h.coroot));
        let shift: i64 = image
            .coords()
            .iter()
            .zip(&self.translation)
            .map(|(c, t)| c * t)
            .sum();
        let level = h.level + shift;
        let (idx, sign) = rs
            .locate_coroot(image.coords())
            .expect("Weyl group permutes coroots");
        if sign > 0 {
            (AffineHyperplane::new(idx, level), true)
        } else {
            (AffineHyperplane::new(idx, -level), false)
        }
    }

    /// Whether the translation part lies in the root lattice, i.e. the element
    /// belongs to the affine Weyl group generated by the hyperplane reflections.
    pub fn is_in_affine_weyl(&self, rs: &RootSystem) -> bool {
        let n = rs.rank();
        let c = rs.datum().cartan_matrix();
        // t_k = sum_j c_j cartan[j][k]; solve the transposed system
        let m: Vec<Vec<Q>> = (0..n)
            .map(|k| (0..n).map(|j| Q::from_int(c.get(j, k))).collect())
            .collect();
        let b: Vec<Q> = self.translation.iter().map(|&t| Q::from_int(t)).collect();
        linalg::solve(&m, &b).is_some_and(|x| x.iter().all(Scalar::is_integral))
    }
}

/// `affine_group_op`.
pub enum AffineOp<'a, T> {
    Compose(&'a AffineWeylElement, &'a AffineWeylElement),
    Invert(&'a AffineWeylElement),
    Act(&'a AffineWeylElement, &'a Weight<T>),
}

pub enum AffineOpResult<T> {
    Element(AffineWeylElement),
    Point(Weight<T>),
}

pub fn affine_group_op<T: Scalar>(op: AffineOp<'_, T>) -> AffineOpResult<T> {
    match op {
        AffineOp::Compose(a, b) => AffineOpResult::Element(a.compose(b)),
        AffineOp::Invert(a) => AffineOpResult::Element(a.inverse()),
        AffineOp::Act(a, l) => AffineOpResult::Point(a.act(l)),
    }
}

/// Wall of the fundamental alcove with generator index `g`.
pub fn fundamental_wall(rs: &RootSystem, g: usize) -> AffineHyperplane {
    if g == 0 {
        AffineHyperplane::new(rs.highest_coroot(), 1)
    } else {
        AffineHyperplane::new(g - 1, 0)
    }
}

/// `rho / h`, the interior point of the fundamental alcove used as witness.
pub fn fundamental_witness<T: Scalar>(rs: &RootSystem) -> Weight<T> {
    rs.rho::<T>().scale(&(T::one() / T::from_int(rs.coxeter_number() as i64)))
}

/// Vertices of the closed fundamental alcove; vertex `g` is opposite the wall `g`.
pub fn fundamental_vertices<T: Scalar>(rs: &RootSystem) -> Vec<Weight<T>> {
    let theta = rs.coroot(rs.highest_coroot()).coords();
    let mut out = vec![Weight::zero(rs.rank())];
    for (i, &c) in theta.iter().enumerate() {
        out.push(Weight::<T>::fundamental(rs.rank(), i).scale(&(T::one() / T::from_int(c))));
    }
    out
}

/// `fundamental_alcove(rs)`: the alcove together with its witness `rho / h`.
pub fn fundamental_alcove<T: Scalar>(rs: &RootSystem) -> (Alcove, Weight<T>) {
    (Alcove::fundamental(rs), fundamental_witness(rs))
}

/// A wall of a located alcove.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    pub hyperplane: AffineHyperplane,
    /// Generator index of the wall (its orbit label).
    pub wall_type: usize,
    pub neighbor: Alcove,
    /// `true` when the neighbour lies on the upper side of the hyperplane.
    pub neighbor_above: bool,
}

/// An alcove together with the unique affine Weyl element carrying the
/// fundamental alcove onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveFrame {
    pub alcove: Alcove,
    pub element: AffineWeylElement,
}

impl AlcoveFrame {
    pub fn fundamental(rs: &RootSystem) -> Self {
        AlcoveFrame {
            alcove: Alcove::fundamental(rs),
            element: AffineWeylElement::identity(rs.rank()),
        }
    }

    /// Frame of `element(A_0)`.
    pub fn from_element(rs: &RootSystem, element: AffineWeylElement) -> Self {
        let w = element.act(&fundamental_witness::<Q>(rs));
        let alcove = alcove_of_point(rs, &w).expect("image of the witness is regular");
        AlcoveFrame { alcove, element }
    }

    /// Locates an alcove from its floors by walking a gallery from `A_0`.
    /// Fails with `EmptyAlcove` when no alcove has these floors.
    pub fn locate(rs: &RootSystem, alcove: &Alcove) -> Result<Self> {
        if alcove.floors.len() != rs.num_positive_roots() {
            return Err(Error::RankMismatch {
                expected: rs.num_positive_roots(),
                got: alcove.floors.len(),
            });
        }
        let mut frame = AlcoveFrame::fundamental(rs);
        // every step crosses one separating hyperplane, so the walk is bounded
        loop {
            if frame.alcove == *alcove {
                return Ok(frame);
            }
            let step = (0..=rs.rank()).find(|&g| {
                let (h, _) = frame.element.act_on_hyperplane(rs, fundamental_wall(rs, g));
                let current_above = frame.alcove.floors[h.coroot] >= h.level;
                let target_above = alcove.floors[h.coroot] >= h.level;
                current_above != target_above
            });
            match step {
                Some(g) => frame = frame.cross(rs, g),
                None => return Err(Error::EmptyAlcove),
            }
        }
    }

    /// The neighbouring frame across the wall of type `g`.
    pub fn cross(&self, rs: &RootSystem, g: usize) -> AlcoveFrame {
        let (h, _) = self.element.act_on_hyperplane(rs, fundamental_wall(rs, g));
        let mut floors = self.alcove.floors.clone();
        floors[h.coroot] = if floors[h.coroot] >= h.level { h.level - 1 } else { h.level };
        AlcoveFrame {
            alcove: Alcove::new(floors),
            element: self.element.compose(&AffineWeylElement::simple(rs, g)),
        }
    }

    /// Walls indexed by generator type `0..=rank`.
    pub fn walls(&self, rs: &RootSystem) -> Vec<Wall> {
        (0..=rs.rank())
            .map(|g| {
                let (h, _) = self.element.act_on_hyperplane(rs, fundamental_wall(rs, g));
                let above_now = self.alcove.floors[h.coroot] >= h.level;
                let mut floors = self.alcove.floors.clone();
                floors[h.coroot] = if above_now { h.level - 1 } else { h.level };
                Wall {
                    hyperplane: h,
                    wall_type: g,
                    neighbor: Alcove::new(floors),
                    neighbor_above: !above_now,
                }
            })
            .collect()
    }

    pub fn wall_of_type(&self, rs: &RootSystem, g: usize) -> AffineHyperplane {
        self.element.act_on_hyperplane(rs, fundamental_wall(rs, g)).0
    }

    /// Type of a hyperplane that is a wall of this alcove.
    pub fn type_of_wall(&self, rs: &RootSystem, h: AffineHyperplane) -> Option<usize> {
        (0..=rs.rank()).find(|&g| self.wall_of_type(rs, g) == h)
    }

    pub fn witness<T: Scalar>(&self, rs: &RootSystem) -> Weight<T> {
        self.element.act(&fundamental_witness(rs))
    }

    /// Vertices of the closed alcove; vertex `g` is opposite the wall of type `g`.
    pub fn vertices<T: Scalar>(&self, rs: &RootSystem) -> Vec<Weight<T>> {
        fundamental_vertices::<T>(rs)
            .iter()
            .map(|v| self.element.act(v))
            .collect()
    }
}

/// All alcoves with every floor in `[-radius, radius - 1]`, sorted by floors.
pub fn enumerate_alcoves(rs: &RootSystem, radius: i64) -> Vec<AlcoveFrame> {
    let start = AlcoveFrame::fundamental(rs);
    if !start.alcove.within_radius(radius) {
        return Vec::new();
    }
    let mut seen: HashSet<Alcove> = HashSet::new();
    seen.insert(start.alcove.clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(frame) = queue.pop_front() {
        for g in 0..=rs.rank() {
            let next = frame.cross(rs, g);
            if next.alcove.within_radius(radius) && seen.insert(next.alcove.clone()) {
                queue.push_back(next);
            }
        }
        out.push(frame);
    }
    out.sort_by(|a, b| a.alcove.cmp(&b.alcove));
    out
}

/// Index of frames by alcove, for repeated lookups.
pub fn frame_index(frames: &[AlcoveFrame]) -> HashMap<Alcove, usize> {
    frames
        .iter()
        .enumerate()
        .map(|(i, f)| (f.alcove.clone(), i))
        .collect()
}

/// Hyperplanes containing `lambda`.
pub fn hyperplanes_through<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> Vec<AffineHyperplane> {
    rs.positive_coroots()
        .iter()
        .enumerate()
        .filter_map(|(a, c)| {
            let p = lambda.pair(c.coords());
            p.is_integral().then(|| AffineHyperplane::new(a, p.floor_int()))
        })
        .collect()
}

pub fn is_regular<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> bool {
    rs.positive_coroots()
        .iter()
        .all(|c| !lambda.pair(c.coords()).is_integral())
}

/// `alcove_of_point`: the alcove containing a regular point.
pub fn alcove_of_point<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> Result<Alcove> {
    lambda.check_rank(rs.rank())?;
    let mut floors = Vec::with_capacity(rs.num_positive_roots());
    for (a, c) in rs.positive_coroots().iter().enumerate() {
        let p = lambda.pair(c.coords());
        if p.is_integral() {
            return Err(Error::PointOnWall(AffineHyperplane::new(a, p.floor_int()).to_string()));
        }
        floors.push(p.floor_int());
    }
    Ok(Alcove::new(floors))
}

/// `face_of_point`.
pub fn face_of_point<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> Face {
    let mut equalities = Vec::new();
    let floors = rs
        .positive_coroots()
        .iter()
        .enumerate()
        .map(|(a, c)| {
            let p = lambda.pair(c.coords());
            let k = p.floor_int();
            if p.is_integral() {
                equalities.push(AffineHyperplane::new(a, k));
            }
            k
        })
        .collect();
    Face { equalities, floors }
}

/// `lambda ⪯ mu`: `lambda` lies in the closure of the face containing `mu`.
pub fn preceq<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>, mu: &Weight<T>) -> bool {
    face_of_point(rs, mu).closure_contains(rs, lambda)
}

/// Order of the stabilizer of `lambda` in the affine Weyl group: the order of
/// the group generated by the reflections in the hyperplanes through `lambda`.
pub fn stabilizer_order<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> usize {
    let gens: Vec<IntMatrix> = hyperplanes_through(rs, lambda)
        .iter()
        .map(|h| rs.reflection(h.coroot).matrix().clone())
        .collect();
    match gens.len() {
        0 => 1,
        1 => 2,
        _ => {
            let id = IntMatrix::identity(rs.rank());
            let mut seen = HashSet::from([id.clone()]);
            let mut stack = vec![id];
            while let Some(m) = stack.pop() {
                for g in &gens {
                    let next = m.mul(g);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
            seen.len()
        }
    }
}

/// Stabilizer of order at most two, i.e. at most one hyperplane through `lambda`.
pub fn in_almost_regular<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> bool {
    hyperplanes_through(rs, lambda).len() <= 1
}

pub fn in_v<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>, mu: &Weight<T>) -> bool {
    in_almost_regular(rs, lambda) && (is_regular(rs, lambda) || preceq(rs, lambda, mu))
}

pub fn in_vreg<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>, mu: &Weight<T>) -> bool {
    if !in_almost_regular(rs, lambda) {
        return false;
    }
    if is_regular(rs, lambda) {
        return true;
    }
    match alcove_of_point(rs, mu) {
        Ok(a) => a.closure_contains(rs, lambda),
        Err(_) => false,
    }
}

pub fn in_s<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>, mu: &Weight<T>) -> bool {
    let a0 = Alcove::fundamental(rs);
    in_vreg(rs, lambda, mu)
        && (a0.contains(rs, lambda) || (a0.closure_contains(rs, lambda) && a0.contains(rs, mu)))
}

/// Moves `lambda` into the closed fundamental alcove by simple affine
/// reflections. Returns the accumulated element and the image.
pub fn fold_to_closure<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> (AffineWeylElement, Weight<T>) {
    let theta = rs.coroot(rs.highest_coroot()).coords();
    let mut element = AffineWeylElement::identity(rs.rank());
    let mut point = lambda.clone();
    loop {
        let g = match point.coords().iter().position(|x| x.is_negative()) {
            Some(i) => i + 1,
            None if point.pair(theta) > T::one() => 0,
            None => return (element, point),
        };
        let s = AffineWeylElement::simple(rs, g);
        point = s.act(&point);
        element = s.compose(&element);
    }
}

/// `normalize_to_S`: the unique element `w` with `(w lambda, w mu)` in `S`.
pub fn normalize_to_s<T: Scalar>(
    rs: &RootSystem,
    lambda: &Weight<T>,
    mu: &Weight<T>,
) -> Result<(AffineWeylElement, Weight<T>, Weight<T>)> {
    lambda.check_rank(rs.rank())?;
    mu.check_rank(rs.rank())?;
    if !in_vreg(rs, lambda, mu) {
        return Err(Error::NotInVreg);
    }
    let (mut element, l) = fold_to_closure(rs, lambda);
    let mut m = element.act(mu);
    let a0 = Alcove::fundamental(rs);
    if !a0.contains(rs, &l) && !a0.contains(rs, &m) {
        let g = (0..=rs.rank())
            .find(|&g| fundamental_wall(rs, g).contains(rs, &l))
            .expect("boundary point lies on a wall");
        let s = AffineWeylElement::simple(rs, g);
        m = s.act(&m);
        element = s.compose(&element);
        if !a0.contains(rs, &m) {
            return Err(Error::NotInVreg);
        }
    }
    Ok((element, l, m))
}

/// `is_above(A, A', H)`: whether `A'` lies in `H + V^+`, for alcoves sharing
/// a codimension-one face in `H`.
pub fn is_above(rs: &RootSystem, a: &Alcove, a_prime: &Alcove, h: AffineHyperplane) -> Result<bool> {
    let frame = AlcoveFrame::locate(rs, a)?;
    frame
        .walls(rs)
        .into_iter()
        .find(|w| w.hyperplane == h && w.neighbor == *a_prime)
        .map(|w| w.neighbor_above)
        .ok_or(Error::NotAdjacent)
}

/// `walls_and_adjacency(A)`.
pub fn walls_and_adjacency(rs: &RootSystem, a: &Alcove) -> Result<Vec<(AffineHyperplane, Alcove)>> {
    let frame = AlcoveFrame::locate(rs, a)?;
    Ok(frame
        .walls(rs)
        .into_iter()
        .map(|w| (w.hyperplane, w.neighbor))
        .collect())
}

/// A point of the open codimension-one face of `h` that lies on no other
/// hyperplane. Deterministic.
pub fn generic_point_on<T: Scalar>(rs: &RootSystem, h: AffineHyperplane) -> Weight<T> {
    let n = rs.rank();
    let coroot = rs.coroot(h.coroot).coords();
    let j = coroot.iter().position(|&c| c != 0).expect("nonzero coroot");
    for (attempt, p) in [1009i64, 1013, 1019, 1021, 1031, 1033, 1039, 1049].iter().enumerate() {
        let mut coords: Vec<T> = (0..n)
            .map(|k| T::from_ratio((k as i64 + 2) * (k as i64 + 3 + attempt as i64) + 1, *p))
            .collect();
        let rest = (0..n)
            .filter(|&k| k != j)
            .fold(T::zero(), |acc, k| acc + coords[k].clone() * T::from_int(coroot[k]));
        coords[j] = (T::from_int(h.level) - rest) / T::from_int(coroot[j]);
        let point = Weight::new(coords);
        if hyperplanes_through(rs, &point).len() == 1 {
            return point;
        }
    }
    unreachable!("a generic point exists on every hyperplane")
}

/// Type of the codimension-one face of `h` containing `point`: the wall of
/// `A_0` onto which folding carries it.
pub fn wall_type_at<T: Scalar>(rs: &RootSystem, h: AffineHyperplane, point: &Weight<T>) -> Option<usize> {
    if !h.contains(rs, point) || hyperplanes_through(rs, point).len() != 1 {
        return None;
    }
    let (_, folded) = fold_to_closure(rs, point);
    (0..=rs.rank()).find(|&g| fundamental_wall(rs, g).contains(rs, &folded))
}

/// Orbit label of `h`, read off at a canonical generic point.
///
/// When two walls of `A_0` are conjugate (joined by an odd Coxeter label, as
/// in `A_n` for `n >= 2`) a single hyperplane carries faces of several types;
/// use [`wall_type_at`] or [`AlcoveFrame::type_of_wall`] for those.
pub fn wall_type(rs: &RootSystem, h: AffineHyperplane) -> usize {
    let p = generic_point_on::<Q>(rs, h);
    wall_type_at(rs, h, &p).expect("generic point lies on exactly one hyperplane")
}
