//! Words in the affine braid group, positive lifts of straight paths between
//! alcoves, and a bounded word-problem search.
//!
//! Words are read left to right in the order the walls are crossed. The
//! letter `(i, +1)` crosses a wall of type `i` upward.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::alcove::{Alcove, AffineHyperplane, AffineWeylElement, AlcoveFrame};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::Q;

/// Default node bound of [`equal_up_to_braid_moves`].
pub const DEFAULT_SEARCH_BOUND: usize = 100_000;

/// A generator of the affine braid group or its inverse. Serialized as `[index, sign]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(usize, i8)", try_from = "(usize, i8)")]
pub struct Letter {
    pub generator: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(generator: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Letter { generator, sign }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            sign: -self.sign,
        }
    }
}

impl From<Letter> for (usize, i8) {
    fn from(l: Letter) -> Self {
        (l.generator, l.sign)
    }
}

impl TryFrom<(usize, i8)> for Letter {
    type Error = String;

    fn try_from((g, s): (usize, i8)) -> std::result::Result<Self, String> {
        if s == 1 || s == -1 {
            Ok(Letter { generator: g, sign: s })
        } else {
            Err(format!("letter sign must be 1 or -1, got {s}"))
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign > 0 {
            write!(f, "s{}", self.generator)
        } else {
            write!(f, "s{}^-1", self.generator)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        BraidWord::new(pairs.iter().map(|&(g, s)| Letter::new(g, s)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &BraidWord) -> BraidWord {
        BraidWord::new([self.letters.as_slice(), other.letters.as_slice()].concat())
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn free_reduce(&self) -> BraidWord {
        BraidWord::new(free_reduce_letters(&self.letters))
    }

    /// Checks every generator index against the affine diagram of `rs`.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        match self.letters.iter().find(|l| l.generator > rs.rank()) {
            Some(l) => Err(Error::Parse(format!(
                "generator {} out of range for {}",
                l.generator,
                rs.name()
            ))),
            None => Ok(()),
        }
    }

    /// Sum of signs per generator.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut out = vec![0; num_generators];
        for l in &self.letters {
            out[l.generator] += i64::from(l.sign);
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// `braid_group_op`.
pub enum BraidOp<'a> {
    Compose(&'a BraidWord, &'a BraidWord),
    Invert(&'a BraidWord),
    FreeReduce(&'a BraidWord),
}

pub fn braid_group_op(op: BraidOp<'_>) -> BraidWord {
    match op {
        BraidOp::Compose(a, b) => a.compose(b),
        BraidOp::Invert(a) => a.invert(),
        BraidOp::FreeReduce(a) => a.free_reduce(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn sign(self) -> i8 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub hyperplane: AffineHyperplane,
    pub direction: Direction,
    pub wall_type: usize,
}

/// Consecutive alcoves of a straight path and the walls crossed between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gallery {
    pub alcoves: Vec<Alcove>,
    pub crossings: Vec<Crossing>,
}

impl Gallery {
    pub fn word(&self) -> BraidWord {
        BraidWord::new(
            self.crossings
                .iter()
                .map(|c| Letter::new(c.wall_type, c.direction.sign()))
                .collect(),
        )
    }
}

/// Hyperplane crossings of the open segment `p -> q`, sorted by time.
/// Both endpoints must be regular.
pub fn segment_crossings(
    rs: &RootSystem,
    p: &Weight<Q>,
    q: &Weight<Q>,
) -> Result<Vec<(Q, AffineHyperplane, Direction)>> {
    let mut out = Vec::new();
    for (a, c) in rs.positive_coroots().iter().enumerate() {
        let x = p.pair(c.coords());
        let y = q.pair(c.coords());
        if x.is_integral() || y.is_integral() {
            return Err(Error::PointOnWall(format!("endpoint on a wall of coroot {a}")));
        }
        let (lo, hi, dir) = if x < y {
            (x.floor_int() + 1, y.floor_int(), Direction::Up)
        } else {
            (y.floor_int() + 1, x.floor_int(), Direction::Down)
        };
        for n in lo..=hi {
            let t = (Q::from_int(n) - x.clone()) / (y.clone() - x.clone());
            out.push((t, AffineHyperplane::new(a, n), dir));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    if out.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::DegenerateSegment);
    }
    Ok(out)
}

/// Gallery traced by the segment from `p` (in `start`) to `q`. Returns the
/// gallery and the frame of the final alcove.
pub fn gallery_along(
    rs: &RootSystem,
    start: &AlcoveFrame,
    p: &Weight<Q>,
    q: &Weight<Q>,
) -> Result<(Gallery, AlcoveFrame)> {
    if !start.alcove.contains(rs, p) {
        return Err(Error::PathStartMismatch);
    }
    let mut frame = start.clone();
    let mut gallery = Gallery {
        alcoves: vec![frame.alcove.clone()],
        crossings: Vec::new(),
    };
    for (_, h, direction) in segment_crossings(rs, p, q)? {
        let wall_type = frame
            .type_of_wall(rs, h)
            .expect("a generic segment leaves an alcove through one of its walls");
        frame = frame.cross(rs, wall_type);
        gallery.alcoves.push(frame.alcove.clone());
        gallery.crossings.push(Crossing {
            hyperplane: h,
            direction,
            wall_type,
        });
    }
    Ok((gallery, frame))
}

/// Interior point of an alcove with the given positive barycentric weights.
pub fn interior_point(rs: &RootSystem, frame: &AlcoveFrame, weights: &[i64]) -> Weight<Q> {
    let verts = frame.vertices::<Q>(rs);
    let total: i64 = weights.iter().sum();
    let mut acc = Weight::zero(rs.rank());
    for (v, &w) in verts.iter().zip(weights) {
        acc = &acc + &v.scale(&Q::from_int(w));
    }
    acc.scale(&Q::from_ratio(1, total))
}

/// A random interior point of the alcove.
pub fn random_interior_point<R: Rng + ?Sized>(rs: &RootSystem, frame: &AlcoveFrame, rng: &mut R) -> Weight<Q> {
    let weights: Vec<i64> = (0..=rs.rank()).map(|_| rng.gen_range(1..=997)).collect();
    interior_point(rs, frame, &weights)
}

fn deterministic_witness(rs: &RootSystem, frame: &AlcoveFrame, attempt: usize) -> Weight<Q> {
    if attempt == 0 {
        return frame.witness(rs);
    }
    let weights: Vec<i64> = (0..=rs.rank())
        .map(|g| 1 + ((g as i64 + 1) * (attempt as i64 + 3) * 7919) % 97)
        .collect();
    interior_point(rs, frame, &weights)
}

/// Positive lift along the segment between two given interior witnesses.
pub fn positive_lift_between(
    rs: &RootSystem,
    a: &AlcoveFrame,
    a_prime: &AlcoveFrame,
    p: &Weight<Q>,
    q: &Weight<Q>,
) -> Result<BraidWord> {
    if !a_prime.alcove.contains(rs, q) {
        return Err(Error::PathStartMismatch);
    }
    let (gallery, end) = gallery_along(rs, a, p, q)?;
    debug_assert_eq!(end.alcove, a_prime.alcove);
    Ok(gallery.word())
}

/// `positive_lift(A, A')` with deterministic witnesses, re-sampled on degeneracy.
pub fn positive_lift(rs: &RootSystem, a: &Alcove, a_prime: &Alcove) -> Result<BraidWord> {
    let fa = AlcoveFrame::locate(rs, a)?;
    let fb = AlcoveFrame::locate(rs, a_prime)?;
    positive_lift_frames(rs, &fa, &fb)
}

pub fn positive_lift_frames(rs: &RootSystem, a: &AlcoveFrame, b: &AlcoveFrame) -> Result<BraidWord> {
    for attempt in 0..64 {
        let p = deterministic_witness(rs, a, attempt);
        let q = deterministic_witness(rs, b, 2 * attempt);
        match positive_lift_between(rs, a, b, &p, &q) {
            Err(Error::DegenerateSegment) => continue,
            other => return other,
        }
    }
    Err(Error::DegenerateSegment)
}

/// Positive lift along a segment between random witnesses.
pub fn positive_lift_sampled<R: Rng + ?Sized>(
    rs: &RootSystem,
    a: &AlcoveFrame,
    b: &AlcoveFrame,
    rng: &mut R,
) -> Result<BraidWord> {
    for _ in 0..64 {
        let p = random_interior_point(rs, a, rng);
        let q = random_interior_point(rs, b, rng);
        match positive_lift_between(rs, a, b, &p, &q) {
            Err(Error::DegenerateSegment) => continue,
            other => return other,
        }
    }
    Err(Error::DegenerateSegment)
}

/// Image in the affine Weyl group: `s_{i_1} s_{i_2} ... s_{i_k}`. A word
/// read off a gallery starting at `w A_0` ends at `w u A_0`, where `u` is
/// the image.
pub fn project_to_affine_weyl(rs: &RootSystem, word: &BraidWord) -> AffineWeylElement {
    let gens: Vec<AffineWeylElement> = (0..=rs.rank()).map(|g| AffineWeylElement::simple(rs, g)).collect();
    word.letters
        .iter()
        .fold(AffineWeylElement::identity(rs.rank()), |acc, l| acc.compose(&gens[l.generator]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordEquality {
    Equal,
    Distinct,
    Unknown,
}

impl fmt::Display for WordEquality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordEquality::Equal => "equal",
            WordEquality::Distinct => "distinct",
            WordEquality::Unknown => "unknown",
        })
    }
}

/// Length preserving rewrites `L -> R` coming from the braid relations: for
/// every cyclic rotation of a relator of length `2m`, the first half equals
/// the inverse of the second half.
#[derive(Clone, Debug)]
pub struct BraidRewriter {
    rules: Vec<(Vec<Letter>, Vec<Letter>)>,
    orbit: Vec<usize>,
}

impl BraidRewriter {
    #[allow(clippy::needless_range_loop)]
    pub fn new(rs: &RootSystem) -> Self {
        let m = rs.affine_coxeter_matrix();
        let n = m.len();
        let mut rules: HashSet<(Vec<Letter>, Vec<Letter>)> = HashSet::new();
        let mut orbit: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for j in i + 1..n {
                let Some(mij) = m[i][j] else { continue };
                let mij = mij as usize;
                if mij % 2 == 1 {
                    union(&mut orbit, i, j);
                }
                let alt = |a: usize, b: usize| -> Vec<Letter> {
                    (0..mij)
                        .map(|k| Letter::new(if k % 2 == 0 { a } else { b }, 1))
                        .collect()
                };
                let lhs = alt(i, j);
                let rhs = alt(j, i);
                let mut relator = lhs.clone();
                relator.extend(rhs.iter().rev().map(|l| l.inverse()));
                let inverse_relator: Vec<Letter> = relator.iter().rev().map(|l| l.inverse()).collect();
                for r in [relator, inverse_relator] {
                    let len = r.len();
                    for k in 0..len {
                        let rot: Vec<Letter> = (0..len).map(|t| r[(k + t) % len]).collect();
                        let (l, rest) = rot.split_at(mij);
                        let replacement: Vec<Letter> = rest.iter().rev().map(|x| x.inverse()).collect();
                        if l != replacement.as_slice() {
                            rules.insert((l.to_vec(), replacement));
                        }
                    }
                }
            }
        }
        let orbit = (0..n).map(|g| find(&mut orbit, g)).collect();
        let mut rules: Vec<_> = rules.into_iter().collect();
        rules.sort();
        BraidRewriter { rules, orbit }
    }

    pub fn rules(&self) -> &[(Vec<Letter>, Vec<Letter>)] {
        &self.rules
    }

    /// Exponent sums over conjugacy classes of generators: the abelianization.
    pub fn abelianization(&self, word: &BraidWord) -> Vec<i64> {
        let mut out = vec![0; self.orbit.len()];
        for l in word.letters() {
            out[self.orbit[l.generator]] += i64::from(l.sign);
        }
        out
    }

    /// Words reachable by one rewrite, freely reduced.
    pub fn neighbors(&self, word: &[Letter]) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        for (l, r) in &self.rules {
            let k = l.len();
            if k > word.len() {
                continue;
            }
            for pos in 0..=word.len() - k {
                if word[pos..pos + k] == l[..] {
                    let mut next = Vec::with_capacity(word.len());
                    next.extend_from_slice(&word[..pos]);
                    next.extend_from_slice(r);
                    next.extend_from_slice(&word[pos + k..]);
                    out.push(free_reduce_letters(&next));
                }
            }
        }
        out
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Three-valued word problem test. `Distinct` only when the abelianization
/// or the image in the affine Weyl group differ; `Unknown` when the bounded
/// search over braid rewrites and free reductions finds no common word.
pub fn equal_up_to_braid_moves(rs: &RootSystem, w1: &BraidWord, w2: &BraidWord, bound: usize) -> WordEquality {
    let rewriter = BraidRewriter::new(rs);
    equal_with(rs, &rewriter, w1, w2, bound)
}

pub fn equal_with(
    rs: &RootSystem,
    rewriter: &BraidRewriter,
    w1: &BraidWord,
    w2: &BraidWord,
    bound: usize,
) -> WordEquality {
    let a = w1.free_reduce();
    let b = w2.free_reduce();
    if a == b {
        return WordEquality::Equal;
    }
    if rewriter.abelianization(&a) != rewriter.abelianization(&b)
        || project_to_affine_weyl(rs, &a) != project_to_affine_weyl(rs, &b)
    {
        return WordEquality::Distinct;
    }
    let (a, b) = strip_common(a.letters(), b.letters());
    if bidirectional_search(rewriter, a, b, bound) {
        WordEquality::Equal
    } else {
        WordEquality::Unknown
    }
}

fn strip_common<'a>(a: &'a [Letter], b: &'a [Letter]) -> (&'a [Letter], &'a [Letter]) {
    let pre = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let (a, b) = (&a[pre..], &b[pre..]);
    let suf = a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count();
    (&a[..a.len() - suf], &b[..b.len() - suf])
}

type Frontier = BinaryHeap<Reverse<(usize, Vec<Letter>)>>;

/// Best-first search from both ends, shortest words first.
fn bidirectional_search(rewriter: &BraidRewriter, a: &[Letter], b: &[Letter], bound: usize) -> bool {
    let mut seen: [HashSet<Vec<Letter>>; 2] = [HashSet::new(), HashSet::new()];
    let mut heaps: [Frontier; 2] = [BinaryHeap::new(), BinaryHeap::new()];
    for (side, w) in [a, b].into_iter().enumerate() {
        seen[side].insert(w.to_vec());
        heaps[side].push(Reverse((w.len(), w.to_vec())));
    }
    while seen[0].len() + seen[1].len() < bound {
        let side = match (heaps[0].peek(), heaps[1].peek()) {
            (None, None) => return false,
            (Some(_), None) => 0,
            (None, Some(_)) => 1,
            (Some(x), Some(y)) => usize::from(y.0 .0 < x.0 .0),
        };
        let Reverse((_, word)) = heaps[side].pop().expect("nonempty heap");
        for next in rewriter.neighbors(&word) {
            if seen[1 - side].contains(&next) {
                return true;
            }
            if seen[side].insert(next.clone()) {
                heaps[side].push(Reverse((next.len(), next)));
            }
        }
    }
    false
}
