//! Points of the covering of `V^reg` as pairs (braid word, point of `S`),
//! deck transformations, transport along piecewise linear paths, and lifted
//! phases of the central charge.
//!
//! Transport keeps a home alcove `C = u A_0`, `u` the image of the word, with
//! `lambda` in the closure of `C` and `mu` in `C` whenever `lambda` is on a
//! wall. When `lambda` crosses a wall `H` of `C` into `C'`, the word gains the
//! wall's type with sign `+1` if `mu` already lies in `C'`, and `-1` if `mu`
//! is still in `C`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::alcove::{alcove_of_point, hyperplanes_through, in_s, AffineHyperplane, AlcoveFrame};
use crate::braid::{project_to_affine_weyl, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::kmodel::{ChargeValue, KClass, KModel};
use crate::root_system::RootSystem;
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoveringPoint {
    pub word: BraidWord,
    pub lambda: Weight<Q>,
    pub mu: Weight<Q>,
}

impl CoveringPoint {
    /// `make_covering_point`: the base must lie in `S`.
    pub fn new(rs: &RootSystem, word: BraidWord, lambda: Weight<Q>, mu: Weight<Q>) -> Result<Self> {
        lambda.check_rank(rs.rank())?;
        mu.check_rank(rs.rank())?;
        word.validate(rs)?;
        if !in_s(rs, &lambda, &mu) {
            return Err(Error::NotInS);
        }
        Ok(CoveringPoint { word, lambda, mu })
    }

    /// The image of the word applied diagonally to the base.
    pub fn project(&self, rs: &RootSystem) -> (Weight<Q>, Weight<Q>) {
        let u = project_to_affine_weyl(rs, &self.word);
        (u.act(&self.lambda), u.act(&self.mu))
    }

    /// Frame of the home alcove `u A_0`.
    pub fn home(&self, rs: &RootSystem) -> AlcoveFrame {
        AlcoveFrame::from_element(rs, project_to_affine_weyl(rs, &self.word))
    }

    pub fn free_reduced(&self) -> CoveringPoint {
        CoveringPoint {
            word: self.word.free_reduce(),
            ..self.clone()
        }
    }
}

/// `deck_act(b, pt)`: prepends `b` to the word; the base is unchanged.
pub fn deck_act(b: &BraidWord, pt: &CoveringPoint) -> CoveringPoint {
    CoveringPoint {
        word: b.compose(&pt.word),
        lambda: pt.lambda.clone(),
        mu: pt.mu.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Waypoint {
    pub lambda: Weight<Q>,
    pub mu: Weight<Q>,
}

/// Piecewise linear path in `(lambda, mu)` space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportPath {
    pub waypoints: Vec<Waypoint>,
}

impl TransportPath {
    pub fn new(points: Vec<(Weight<Q>, Weight<Q>)>) -> Self {
        TransportPath {
            waypoints: points.into_iter().map(|(lambda, mu)| Waypoint { lambda, mu }).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        TransportPath {
            waypoints: self.waypoints.iter().rev().cloned().collect(),
        }
    }

    pub fn num_segments(&self) -> usize {
        self.waypoints.len().saturating_sub(1)
    }

    /// Point at local parameter `t` of segment `k`.
    pub fn at(&self, k: usize, t: &Q) -> (Weight<Q>, Weight<Q>) {
        let (a, b) = (&self.waypoints[k], &self.waypoints[k + 1]);
        (a.lambda.lerp(&b.lambda, t), a.mu.lerp(&b.mu, t))
    }

    /// Image under an affine Weyl element applied diagonally.
    pub fn map(&self, w: &crate::alcove::AffineWeylElement) -> Self {
        TransportPath {
            waypoints: self
                .waypoints
                .iter()
                .map(|p| Waypoint {
                    lambda: w.act(&p.lambda),
                    mu: w.act(&p.mu),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportEvent {
    pub segment: usize,
    #[serde(with = "exact_q")]
    pub t: Q,
    pub hyperplane: AffineHyperplane,
    pub letter: Letter,
}

mod exact_q {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::Scalar;
    use crate::Q;

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_exact_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        Q::parse_exact(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportResult {
    pub point: CoveringPoint,
    pub events: Vec<TransportEvent>,
}

/// Sorted parameters in `[0, 1]` where a coordinate pairing of `a + t (b - a)`
/// with a positive coroot is an integer, together with `0` and `1`.
fn critical_times(rs: &RootSystem, a: &Weight<Q>, b: &Weight<Q>, out: &mut Vec<Q>) {
    for c in rs.positive_coroots() {
        let x = a.pair(c.coords());
        let y = b.pair(c.coords());
        if x == y {
            continue;
        }
        let (lo, hi) = if x < y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
        let first = if lo.is_integral() { lo.floor_int() } else { lo.floor_int() + 1 };
        for n in first..=hi.floor_int() {
            out.push((Q::from_int(n) - x.clone()) / (y.clone() - x.clone()));
        }
    }
}

/// Parameters to inspect on one segment: critical times and midpoints between them.
fn sample_times(rs: &RootSystem, path: &TransportPath, k: usize) -> Vec<Q> {
    let (a, b) = (&path.waypoints[k], &path.waypoints[k + 1]);
    let mut crit = vec![Q::zero(), Q::from_int(1)];
    critical_times(rs, &a.lambda, &b.lambda, &mut crit);
    critical_times(rs, &a.mu, &b.mu, &mut crit);
    crit.sort();
    crit.dedup();
    let mut out = Vec::with_capacity(2 * crit.len());
    for w in crit.windows(2) {
        out.push(w[0].clone());
        out.push((&w[0] + &w[1]) / Q::from_int(2));
    }
    out.push(Q::from_int(1));
    out
}

struct Transporter<'a> {
    rs: &'a RootSystem,
    frame: AlcoveFrame,
    word: BraidWord,
    events: Vec<TransportEvent>,
}

impl Transporter<'_> {
    fn step(&mut self, segment: usize, t: &Q, lambda: &Weight<Q>, mu: &Weight<Q>) -> Result<()> {
        let rs = self.rs;
        let walls = hyperplanes_through(rs, lambda);
        match walls.len() {
            0 => {
                if self.frame.alcove.contains(rs, lambda) {
                    return Ok(());
                }
                // lambda left the home alcove through a wall while mu stayed in it
                let target = alcove_of_point(rs, lambda)?;
                let wall = self
                    .frame
                    .walls(rs)
                    .into_iter()
                    .find(|w| w.neighbor == target)
                    .ok_or_else(|| Error::NonTransversalCrossing(format!("jump to {target} at segment {segment}")))?;
                self.cross(segment, t, wall.hyperplane, wall.wall_type, -1);
                Ok(())
            }
            1 => {
                let h = walls[0];
                let g = self.frame.type_of_wall(rs, h).ok_or_else(|| {
                    Error::NonTransversalCrossing(format!("{h} is not a wall of the home alcove"))
                })?;
                if self.frame.alcove.contains(rs, mu) {
                    return Ok(());
                }
                let next = self.frame.cross(rs, g);
                if next.alcove.contains(rs, mu) {
                    self.cross(segment, t, h, g, 1);
                    Ok(())
                } else {
                    Err(Error::PathLeavesVreg(segment))
                }
            }
            _ => Err(Error::NonTransversalCrossing(format!(
                "lambda meets {} hyperplanes at segment {segment}",
                walls.len()
            ))),
        }
    }

    fn cross(&mut self, segment: usize, t: &Q, h: AffineHyperplane, g: usize, sign: i8) {
        let letter = Letter::new(g, sign);
        self.frame = self.frame.cross(self.rs, g);
        self.word = self.word.compose(&BraidWord::new(vec![letter]));
        self.events.push(TransportEvent {
            segment,
            t: t.clone(),
            hyperplane: h,
            letter,
        });
    }
}

/// `transport(pt, path)`.
pub fn transport(rs: &RootSystem, pt: &CoveringPoint, path: &TransportPath) -> Result<TransportResult> {
    let Some(first) = path.waypoints.first() else {
        return Ok(TransportResult {
            point: pt.clone(),
            events: Vec::new(),
        });
    };
    let (l0, m0) = pt.project(rs);
    if first.lambda != l0 || first.mu != m0 {
        return Err(Error::PathStartMismatch);
    }
    let mut tr = Transporter {
        rs,
        frame: pt.home(rs),
        word: pt.word.clone(),
        events: Vec::new(),
    };
    for k in 0..path.num_segments() {
        for t in sample_times(rs, path, k) {
            let (lambda, mu) = path.at(k, &t);
            tr.step(k, &t, &lambda, &mu)?;
        }
    }
    let last = path.waypoints.last().expect("nonempty");
    let inv = tr.frame.element.inverse();
    let point = CoveringPoint {
        word: tr.word,
        lambda: inv.act(&last.lambda),
        mu: inv.act(&last.mu),
    };
    debug_assert!(in_s(rs, &point.lambda, &point.mu));
    Ok(TransportResult {
        point,
        events: tr.events,
    })
}

/// `arg(Z) / pi` in `(-1, 1]`.
pub fn principal_phase(z: &ChargeValue<Q>) -> Result<f64> {
    if z.is_zero() {
        return Err(Error::VanishingCharge);
    }
    if z.im.is_zero() {
        return Ok(if z.re.is_negative() { 1.0 } else { 0.0 });
    }
    Ok(z.to_complex().arg() / PI)
}

/// Central charge of a class at the projection of a covering point.
pub fn charge_at(model: &KModel, pt: &CoveringPoint, m: &KClass) -> Result<ChargeValue<Q>> {
    let (lambda, mu) = pt.project(model.root_system());
    model.central_charge(&lambda, &mu, m, true)
}

/// `phase(pt, M)`.
pub fn phase(model: &KModel, pt: &CoveringPoint, m: &KClass) -> Result<f64> {
    principal_phase(&charge_at(model, pt, m)?)
}

/// Window `k` with `k < phase <= k + 1`.
pub fn window(phase: f64) -> i64 {
    phase.ceil() as i64 - 1
}

/// Integer phase forced by an exactly real charge, closest to `approx`.
fn snap(z: &ChargeValue<Q>, approx: f64) -> f64 {
    if !z.im.is_zero() {
        return approx;
    }
    let odd = z.re.is_negative();
    let mut k = approx.round() as i64;
    if (k.rem_euclid(2) == 1) != odd {
        k += if approx > k as f64 { 1 } else { -1 };
    }
    k as f64
}

fn angle_between(a: &ChargeValue<Q>, b: &ChargeValue<Q>) -> f64 {
    let (za, zb) = (a.to_complex(), b.to_complex());
    (za.conj() * zb).arg() / PI
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseRecord {
    pub class: KClass,
    pub start_phase: f64,
    pub end_phase: f64,
    pub start_window: i64,
    pub end_window: i64,
}

/// One sample of a phase track, for trace export.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub t: f64,
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
    pub charges: Vec<(f64, f64)>,
    pub phases: Vec<f64>,
    pub event: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseTrack {
    pub transport: TransportResult,
    pub records: Vec<PhaseRecord>,
    pub rows: Vec<TraceRow>,
}

/// Largest phase change allowed between consecutive samples before bisecting.
const MAX_STEP: f64 = 0.125;
const MAX_DEPTH: u32 = 24;

/// `phase_track`: transports `pt` along `path` and continues the phase of
/// every class. `steps` uniform samples per segment are added to the
/// critical times; further points are bisected in where the phase moves fast.
pub fn phase_track(
    model: &KModel,
    pt: &CoveringPoint,
    path: &TransportPath,
    classes: &[KClass],
    steps: u32,
) -> Result<PhaseTrack> {
    let rs = model.root_system();
    let tr = transport(rs, pt, path)?;
    let (l0, m0) = pt.project(rs);
    let mut current: Vec<ChargeValue<Q>> = classes
        .iter()
        .map(|m| model.central_charge(&l0, &m0, m, false))
        .collect::<Result<_>>()?;
    let mut lifted: Vec<f64> = current
        .iter()
        .map(|z| principal_phase(z).map(|p| snap(z, p)))
        .collect::<Result<_>>()?;
    let start = lifted.clone();
    let mut rows = vec![row(0.0, &l0, &m0, &current, &lifted, None)];
    for k in 0..path.num_segments() {
        let mut times = sample_times(rs, path, k);
        let steps = steps.max(1);
        times.extend((1..steps).map(|j| Q::from_ratio(i64::from(j), i64::from(steps))));
        times.sort();
        times.dedup();
        for pair in times.windows(2) {
            advance(model, path, k, classes, &pair[0], &pair[1], &mut current, &mut lifted, 0)?;
            let (lambda, mu) = path.at(k, &pair[1]);
            let event = tr
                .events
                .iter()
                .find(|e| e.segment == k && e.t == pair[1])
                .map(|e| e.letter.to_string());
            rows.push(row(k as f64 + pair[1].to_f64(), &lambda, &mu, &current, &lifted, event));
        }
    }
    let records = classes
        .iter()
        .zip(start.iter().zip(&lifted))
        .map(|(m, (&s, &e))| PhaseRecord {
            class: m.clone(),
            start_phase: s,
            end_phase: e,
            start_window: window(s),
            end_window: window(e),
        })
        .collect();
    Ok(PhaseTrack {
        transport: tr,
        records,
        rows,
    })
}

#[allow(clippy::too_many_arguments)]
fn advance(
    model: &KModel,
    path: &TransportPath,
    k: usize,
    classes: &[KClass],
    a: &Q,
    b: &Q,
    current: &mut [ChargeValue<Q>],
    lifted: &mut [f64],
    depth: u32,
) -> Result<()> {
    let (lambda, mu) = path.at(k, b);
    let next: Vec<ChargeValue<Q>> = classes
        .iter()
        .map(|m| model.central_charge(&lambda, &mu, m, false))
        .collect::<Result<_>>()?;
    if next.iter().any(ChargeValue::is_zero) {
        return Err(Error::VanishingCharge);
    }
    let steps: Vec<f64> = current.iter().zip(&next).map(|(x, y)| angle_between(x, y)).collect();
    let affine = classes.iter().all(|m| {
        model
            .d_polynomial::<Q>(m)
            .is_ok_and(|d| d.degree().unwrap_or(0) <= 1)
    });
    // for affine charges Z moves on a straight line, so one step is exact
    if !affine && depth < MAX_DEPTH && steps.iter().any(|s| s.abs() > MAX_STEP) {
        let mid = (a + b) / Q::from_int(2);
        advance(model, path, k, classes, a, &mid, current, lifted, depth + 1)?;
        return advance(model, path, k, classes, &mid, b, current, lifted, depth + 1);
    }
    if affine {
        // a straight segment through the origin would have opposite endpoints
        for (x, y) in current.iter().zip(&next) {
            let cross = x.re.clone() * y.im.clone() - x.im.clone() * y.re.clone();
            let dot = x.re.clone() * y.re.clone() + x.im.clone() * y.im.clone();
            if cross.is_zero() && dot.is_negative() {
                return Err(Error::VanishingCharge);
            }
        }
    }
    for ((l, s), z) in lifted.iter_mut().zip(&steps).zip(&next) {
        *l = snap(z, *l + s);
    }
    current.clone_from_slice(&next);
    Ok(())
}

fn row(
    t: f64,
    lambda: &Weight<Q>,
    mu: &Weight<Q>,
    z: &[ChargeValue<Q>],
    phases: &[f64],
    event: Option<String>,
) -> TraceRow {
    TraceRow {
        t,
        lambda: lambda.to_f64(),
        mu: mu.to_f64(),
        charges: z.iter().map(|c| (c.re.to_f64(), c.im.to_f64())).collect(),
        phases: phases.to_vec(),
        event,
    }
}

/// CSV with columns `t, lambda_i, mu_i, re_z_k, im_z_k, phase_k, event`.
pub fn trace_csv(rows: &[TraceRow], rank: usize, nclasses: usize) -> String {
    let mut out = String::from("t");
    for i in 1..=rank {
        let _ = write!(out, ",lambda_{i}");
    }
    for i in 1..=rank {
        let _ = write!(out, ",mu_{i}");
    }
    for k in 0..nclasses {
        let _ = write!(out, ",re_z_{k},im_z_{k},lifted_phase_{k}");
    }
    out.push_str(",event\n");
    for r in rows {
        let _ = write!(out, "{}", r.t);
        for x in r.lambda.iter().chain(&r.mu) {
            let _ = write!(out, ",{x}");
        }
        for ((re, im), p) in r.charges.iter().zip(&r.phases) {
            let _ = write!(out, ",{re},{im},{p}");
        }
        let _ = writeln!(out, ",{}", r.event.as_deref().unwrap_or(""));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SanityEntry {
    pub class: KClass,
    pub re: String,
    pub im: String,
    pub vanishes_on_wall: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SanityReport {
    pub lambda: Weight<Q>,
    pub mu: Weight<Q>,
    pub wall: Option<AffineHyperplane>,
    pub entries: Vec<SanityEntry>,
    pub pass: bool,
}

/// `stability_sanity` with the simple classes of the home alcove.
pub fn stability_sanity(model: &KModel, pt: &CoveringPoint) -> Result<SanityReport> {
    let classes = model.simple_classes_of(&pt.home(model.root_system()))?;
    stability_sanity_with(model, pt, &classes)
}

/// Interior `lambda`: every class in the open upper half plane. `lambda` on
/// a wall: classes vanishing on the wall on the negative real axis, all
/// others in the open upper half plane.
pub fn stability_sanity_with(model: &KModel, pt: &CoveringPoint, classes: &[KClass]) -> Result<SanityReport> {
    if !model.is_kleinian() {
        return Err(Error::UnsupportedModel("zero-section"));
    }
    let rs = model.root_system();
    let (lambda, mu) = pt.project(rs);
    let walls = hyperplanes_through(rs, &lambda);
    let wall = walls.first().copied();
    let mut entries = Vec::new();
    for m in classes {
        let z = model.central_charge(&lambda, &mu, m, true)?;
        let d = model.d_polynomial::<Q>(m)?;
        let vanishes = wall.is_some_and(|h| {
            d.div_affine(&crate::poly::Polynomial::coroot_form(rs.coroot(h.coroot).coords(), h.level))
                .is_some()
        });
        let ok = if vanishes {
            z.is_negative_real()
        } else {
            z.im.is_positive()
        };
        entries.push(SanityEntry {
            class: m.clone(),
            re: z.re.to_exact_string(),
            im: z.im.to_exact_string(),
            vanishes_on_wall: vanishes,
            ok,
        });
    }
    let pass = entries.iter().all(|e| e.ok);
    Ok(SanityReport {
        lambda,
        mu,
        wall,
        entries,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn w(s: &str) -> Weight<Q> {
        Weight::parse_list(s).unwrap()
    }

    fn word(p: &[(usize, i8)]) -> BraidWord {
        BraidWord::from_pairs(p)
    }

    fn path(points: &[(&str, &str)]) -> TransportPath {
        TransportPath::new(points.iter().map(|(l, m)| (w(l), w(m))).collect())
    }

    #[test]
    fn covering_point_examples() {
        let a1 = rs("A1");
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        assert_eq!(p.project(&a1), (w("1/2"), w("1/2")));
        let p = CoveringPoint::new(&a1, word(&[(0, 1)]), w("1/2"), w("1/2")).unwrap();
        assert_eq!(p.project(&a1), (w("3/2"), w("3/2")));
        assert_eq!(
            CoveringPoint::new(&a1, BraidWord::empty(), w("1"), w("1")),
            Err(Error::NotInS)
        );
    }

    #[test]
    fn deck_examples() {
        let a1 = rs("A1");
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        assert_eq!(deck_act(&BraidWord::empty(), &p), p);
        let b = word(&[(0, 1), (1, -1)]);
        assert_eq!(deck_act(&b, &deck_act(&b.invert(), &p)).free_reduced(), p);
        let q = deck_act(&word(&[(0, 1)]), &p);
        assert_eq!(q.word, word(&[(0, 1)]));
        assert_eq!((q.lambda, q.mu), (w("1/2"), w("1/2")));
    }

    #[test]
    fn transport_examples() {
        let a1 = rs("A1");
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        // mu runs ahead of lambda, so it is already across when lambda hits the wall
        let r = transport(&a1, &p, &path(&[("1/2", "1/2"), ("3/2", "8/5")])).unwrap();
        assert_eq!(r.point.word, word(&[(0, 1)]));
        assert_eq!((r.point.lambda.clone(), r.point.mu.clone()), (w("1/2"), w("2/5")));
        let r = transport(&a1, &p, &path(&[("1/2", "1/2"), ("1/2", "1/2")])).unwrap();
        assert_eq!(r.point, p);
        let lp = path(&[("1/2", "1/2"), ("3/2", "1/2"), ("1/2", "1/2")]);
        let r = transport(&a1, &p, &lp).unwrap();
        assert_eq!(r.point.free_reduced(), p);
        assert_eq!(r.events.len(), 2);
    }

    #[test]
    fn transport_rejects_bad_paths() {
        let a1 = rs("A1");
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        assert_eq!(
            transport(&a1, &p, &path(&[("1/2", "1/2"), ("3/2", "3/2")])),
            Err(Error::PathLeavesVreg(0))
        );
        assert_eq!(
            transport(&a1, &p, &path(&[("1/3", "1/2"), ("1/2", "1/2")])),
            Err(Error::PathStartMismatch)
        );
        let a2 = rs("A2");
        let p = CoveringPoint::new(&a2, BraidWord::empty(), w("1/3,1/3"), w("1/3,1/3")).unwrap();
        assert!(matches!(
            transport(&a2, &p, &path(&[("1/3,1/3", "1/3,1/3"), ("-1/3,-1/3", "1/3,1/3")])),
            Err(Error::NonTransversalCrossing(_))
        ));
    }

    #[test]
    fn loop_around_a_wall_stratum_is_a_full_twist() {
        let a1 = rs("A1");
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        // lambda crosses with mu behind, mu follows, lambda returns with mu ahead, mu returns
        let lp = path(&[
            ("1/2", "1/2"),
            ("3/2", "1/2"),
            ("3/2", "3/2"),
            ("1/2", "3/2"),
            ("1/2", "1/2"),
        ]);
        let r = transport(&a1, &p, &lp).unwrap();
        assert_eq!(r.point.word.free_reduce(), word(&[(0, -1), (0, -1)]));
    }

    #[test]
    fn phase_examples() {
        let a1 = rs("A1");
        let m = KModel::kleinian(&a1).unwrap();
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        assert_eq!(phase(&m, &p, &KClass::new(vec![0, 1])).unwrap(), 0.75);
        assert_eq!(phase(&m, &p, &KClass::new(vec![1, 0])).unwrap(), 0.75);
    }

    #[test]
    fn phase_drops_a_window_when_mu_leads() {
        let a1 = rs("A1");
        let m = KModel::kleinian(&a1).unwrap();
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        let lp = path(&[("1/2", "1/2"), ("1/2", "3/2"), ("3/2", "3/2")]);
        let cls = KClass::new(vec![1, -1]);
        let track = phase_track(&m, &p, &lp, &[cls], 16).unwrap();
        let rec = &track.records[0];
        assert_eq!(rec.start_phase, 0.75);
        assert_eq!((rec.start_window, rec.end_window), (0, -1));
        assert!(track.rows.iter().any(|r| r.phases[0] == 0.0));
        assert_eq!(track.transport.point.word, word(&[(0, 1)]));
    }

    #[test]
    fn sanity_examples() {
        let a1 = rs("A1");
        let m = KModel::kleinian(&a1).unwrap();
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/3"), w("1/5")).unwrap();
        assert!(stability_sanity(&m, &p).unwrap().pass);
        // lambda = 1, mu = 3/2 is the image of (1, 1/2) under the reflection in c = 1
        let p = CoveringPoint::new(&a1, word(&[(0, 1)]), w("1"), w("1/2")).unwrap();
        assert_eq!(p.project(&a1), (w("1"), w("3/2")));
        let r = stability_sanity_with(&m, &p, &[KClass::new(vec![-1, 1]), KClass::new(vec![0, 1])]).unwrap();
        assert!(r.pass);
        assert!(r.entries[0].vanishes_on_wall);
        assert_eq!(r.entries[0].re, "-1/2");
        assert_eq!((r.entries[1].re.as_str(), r.entries[1].im.as_str()), ("-3/2", "1"));
        assert!(stability_sanity(&m, &p).unwrap().pass);
    }

    #[test]
    fn csv_has_one_column_group_per_class() {
        let a1 = rs("A1");
        let m = KModel::kleinian(&a1).unwrap();
        let p = CoveringPoint::new(&a1, BraidWord::empty(), w("1/2"), w("1/2")).unwrap();
        let classes = m.simple_classes_of(&p.home(&a1)).unwrap();
        let track = phase_track(&m, &p, &path(&[("1/2", "1/2"), ("3/2", "8/5")]), &classes, 4).unwrap();
        let csv = trace_csv(&track.rows, 1, classes.len());
        let header = csv.lines().next().unwrap();
        assert_eq!(
            header,
            "t,lambda_1,mu_1,re_z_0,im_z_0,lifted_phase_0,re_z_1,im_z_1,lifted_phase_1,event"
        );
        assert!(csv.lines().any(|l| l.ends_with(",s0")));
    }
}
