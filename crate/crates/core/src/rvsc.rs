//! Audit of the K-theoretic shadow of a real variation of stability
//! conditions: positivity of charges on alcoves, the wall dichotomy, and the
//! `(-1)^n` shift rule across walls.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alcove::{enumerate_alcoves, is_above, AffineHyperplane, Alcove, AlcoveFrame};
use crate::error::{Error, Result};
use crate::kmodel::{KClass, KModel};
use crate::poly::{factor_over_directions, Polynomial};
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::Q;

/// Default barycentric grid resolution for the sampling fallback.
pub const DEFAULT_RESOLUTION: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Vertex,
    Factorization,
    Sampling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Positivity {
    Positive,
    NonpositiveWitness { point: Weight<Q>, value: String },
    Undecided,
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityResult {
    #[serde(flatten)]
    pub verdict: Positivity,
    pub method: Method,
}

fn witness(point: Weight<Q>, value: &Q) -> Positivity {
    Positivity::NonpositiveWitness {
        point,
        value: value.to_exact_string(),
    }
}

fn centroid(vertices: &[Weight<Q>]) -> Weight<Q> {
    let mut acc = Weight::zero(vertices[0].rank());
    for v in vertices {
        acc = &acc + v;
    }
    acc.scale(&Q::from_ratio(1, vertices.len() as i64))
}

/// Sign of an affine function on the open simplex: `Some(1)` or `Some(-1)`
/// when strictly one-signed, `None` when it vanishes somewhere inside.
fn affine_sign_on_simplex(d: &Polynomial<Q>, vertices: &[Weight<Q>]) -> Option<i32> {
    let vals: Vec<Q> = vertices.iter().map(|v| d.eval_weight(v)).collect();
    if vals.iter().all(|x| !x.is_negative()) && vals.iter().any(|x| x.is_positive()) {
        Some(1)
    } else if vals.iter().all(|x| !x.is_positive()) && vals.iter().any(|x| x.is_negative()) {
        Some(-1)
    } else {
        None
    }
}

/// Interior barycentric grid points `sum k_g v_g / res` with every `k_g >= 1`.
fn grid_points(vertices: &[Weight<Q>], res: u32) -> Vec<Weight<Q>> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 1..=left.saturating_sub(slots as u32 - 1) {
            cur.push(k);
            rec(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let m = vertices.len();
    let res = res.max(m as u32);
    let mut combos = Vec::new();
    rec(res, m, &mut Vec::new(), &mut combos);
    combos
        .into_iter()
        .map(|ks| {
            let mut acc = Weight::zero(vertices[0].rank());
            for (v, k) in vertices.iter().zip(ks) {
                acc = &acc + &v.scale(&Q::from_int(i64::from(k)));
            }
            acc.scale(&Q::from_ratio(1, i64::from(res)))
        })
        .collect()
}

/// Positivity of `d` on the open simplex spanned by `vertices`, by the
/// cascade vertex evaluation, linear factorization, grid sampling.
pub fn simplex_positivity(
    d: &Polynomial<Q>,
    vertices: &[Weight<Q>],
    directions: &[Vec<i64>],
    resolution: u32,
) -> PositivityResult {
    let c = centroid(vertices);
    let at_c = d.eval_weight(&c);
    if !at_c.is_positive() {
        return PositivityResult {
            verdict: witness(c, &at_c),
            method: Method::Vertex,
        };
    }
    if d.degree().unwrap_or(0) <= 1 {
        let verdict = match vertices.iter().find(|v| d.eval_weight(v).is_negative()) {
            None => Positivity::Positive,
            Some(v) => negative_near(d, v, &c),
        };
        return PositivityResult {
            verdict,
            method: Method::Vertex,
        };
    }
    if let Some((k, factors)) = factor_over_directions(d, directions) {
        let signs: Option<Vec<i32>> = factors.iter().map(|f| affine_sign_on_simplex(f, vertices)).collect();
        if let Some(signs) = signs {
            let sign = signs.iter().product::<i32>() * k.sign_int();
            if sign > 0 {
                return PositivityResult {
                    verdict: Positivity::Positive,
                    method: Method::Factorization,
                };
            }
        }
    }
    let verdict = grid_points(vertices, resolution)
        .into_iter()
        .find_map(|p| {
            let v = d.eval_weight(&p);
            (!v.is_positive()).then(|| witness(p, &v))
        })
        .unwrap_or(Positivity::Undecided);
    PositivityResult {
        verdict,
        method: Method::Sampling,
    }
}

/// Interior point near a vertex where an affine `d` is negative.
fn negative_near(d: &Polynomial<Q>, v: &Weight<Q>, c: &Weight<Q>) -> Positivity {
    let mut eps = Q::from_ratio(1, 2);
    loop {
        let p = v.lerp(c, &eps);
        let val = d.eval_weight(&p);
        if val.is_negative() {
            return witness(p, &val);
        }
        eps *= Q::from_ratio(1, 2);
    }
}

fn coroot_directions(model: &KModel) -> Vec<Vec<i64>> {
    model
        .root_system()
        .positive_coroots()
        .iter()
        .map(|c| c.coords().to_vec())
        .collect()
}

/// `check_positivity` of `d_M` on the alcove.
pub fn check_positivity(model: &KModel, frame: &AlcoveFrame, m: &KClass, resolution: u32) -> Result<PositivityResult> {
    if m.is_zero() {
        return Err(Error::ZeroClass);
    }
    let d = model.d_polynomial::<Q>(m)?;
    let verts = frame.vertices::<Q>(model.root_system());
    Ok(simplex_positivity(&d, &verts, &coroot_directions(model), resolution))
}

pub fn hyperplane_form(model: &KModel, h: AffineHyperplane) -> Polynomial<Q> {
    Polynomial::coroot_form(model.root_system().coroot(h.coroot).coords(), h.level)
}

/// `vanishing_order(d, H)`.
pub fn vanishing_order(model: &KModel, d: &Polynomial<Q>, h: AffineHyperplane) -> Result<u32> {
    d.vanishing_order(&hyperplane_form(model, h))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "restriction", rename_all = "kebab-case")]
pub enum WallVerdict {
    IdenticallyZero,
    Positive { method: Method },
    MixedSign { point: Weight<Q>, value: String },
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCheck {
    pub wall: AffineHyperplane,
    pub wall_type: usize,
    #[serde(flatten)]
    pub verdict: WallVerdict,
}

/// On every wall `F` of `A`, `d_M` is either identically
/// zero or positive on the open face.
pub fn wall_dichotomy(model: &KModel, frame: &AlcoveFrame, m: &KClass, resolution: u32) -> Result<Vec<FaceCheck>> {
    let rs = model.root_system();
    let d = model.d_polynomial::<Q>(m)?;
    let verts = frame.vertices::<Q>(rs);
    let dirs = coroot_directions(model);
    Ok(frame
        .walls(rs)
        .into_iter()
        .map(|wall| {
            let l = hyperplane_form(model, wall.hyperplane);
            let verdict = if d.div_affine(&l).is_some() {
                WallVerdict::IdenticallyZero
            } else {
                let face: Vec<Weight<Q>> = verts
                    .iter()
                    .enumerate()
                    .filter(|(g, _)| *g != wall.wall_type)
                    .map(|(_, v)| v.clone())
                    .collect();
                let r = simplex_positivity(&d, &face, &dirs, resolution);
                match r.verdict {
                    Positivity::Positive => WallVerdict::Positive { method: r.method },
                    Positivity::NonpositiveWitness { point, value } => WallVerdict::MixedSign { point, value },
                    Positivity::Undecided => WallVerdict::Undecided,
                }
            };
            FaceCheck {
                wall: wall.hyperplane,
                wall_type: wall.wall_type,
                verdict,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallEntry {
    pub class: KClass,
    pub order: u32,
    /// `(-1)^n d_M > 0` on the upper alcove; `None` for order zero.
    pub sign_rule: Option<bool>,
    /// Order zero classes: whether `d_M` stays positive on the upper alcove.
    pub stays_positive: Option<bool>,
    /// Sign of `d_M` flips across the wall exactly when the order is odd.
    pub parity_consistent: bool,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallReport {
    pub wall: AffineHyperplane,
    pub lower: Alcove,
    pub upper: Alcove,
    pub entries: Vec<WallEntry>,
    /// Class indices grouped by vanishing order.
    pub filtration: BTreeMap<u32, Vec<usize>>,
    pub pass: bool,
}

/// `check_wall_shift(A, A', H)` for the classes `simples`, with `A'` above `A`.
pub fn check_wall_shift(
    model: &KModel,
    a: &Alcove,
    a_prime: &Alcove,
    h: AffineHyperplane,
    simples: &[KClass],
    resolution: u32,
) -> Result<WallReport> {
    let rs = model.root_system();
    if !is_above(rs, a, a_prime, h)? {
        return Err(Error::NotAbove);
    }
    let lower = AlcoveFrame::locate(rs, a)?;
    let upper = AlcoveFrame::locate(rs, a_prime)?;
    let l = hyperplane_form(model, h);
    let upper_verts = upper.vertices::<Q>(rs);
    let dirs = coroot_directions(model);
    // probe points across the centre of the shared face
    let face_centre = {
        let g = lower.type_of_wall(rs, h).expect("shared wall");
        let verts = lower.vertices::<Q>(rs);
        let face: Vec<Weight<Q>> = verts
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != g)
            .map(|(_, v)| v.clone())
            .collect();
        centroid(&face)
    };
    let eps = Q::from_ratio(1, 1_000_000);
    let below = face_centre.lerp(&lower.witness::<Q>(rs), &eps);
    let above = face_centre.lerp(&upper.witness::<Q>(rs), &eps);
    let mut entries = Vec::new();
    let mut filtration: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, m) in simples.iter().enumerate() {
        let d = model.d_polynomial::<Q>(m)?;
        let order = d.vanishing_order(&l)?;
        filtration.entry(order).or_default().push(idx);
        let signed = if order % 2 == 1 { d.scale(&Q::from_int(-1)) } else { d.clone() };
        let r = simplex_positivity(&signed, &upper_verts, &dirs, resolution);
        let (sign_rule, stays_positive) = if order == 0 {
            (None, Some(r.verdict.is_positive()))
        } else {
            (Some(r.verdict.is_positive()), None)
        };
        let quotient = (0..order).fold(d.clone(), |p, _| p.div_affine(&l).expect("order divides"));
        let parity_consistent = if quotient.eval_weight(&face_centre).is_zero() {
            true
        } else {
            let flips = d.eval_weight(&below).sign_int() != d.eval_weight(&above).sign_int();
            flips == (order % 2 == 1)
        };
        entries.push(WallEntry {
            class: m.clone(),
            order,
            sign_rule,
            stays_positive,
            parity_consistent,
            method: r.method,
        });
    }
    let pass = entries.iter().all(|e| e.sign_rule != Some(false) && e.parity_consistent);
    Ok(WallReport {
        wall: h,
        lower: a.clone(),
        upper: a_prime.clone(),
        entries,
        filtration,
        pass,
    })
}

/// A model together with candidate simple classes per alcove.
#[derive(Clone, Debug)]
pub struct RvscInstance {
    pub model: KModel,
    pub simples: BTreeMap<Alcove, Vec<KClass>>,
}

impl RvscInstance {
    /// Transported wall-functional classes on every alcove within `radius`.
    pub fn transported(model: &KModel, radius: i64) -> Result<Self> {
        let rs = model.root_system();
        let simples = enumerate_alcoves(rs, radius)
            .iter()
            .map(|f| Ok((f.alcove.clone(), model.simple_classes_of(f)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(RvscInstance {
            model: model.clone(),
            simples,
        })
    }

    /// Replaces one class by its negative.
    pub fn with_negated(mut self, alcove: &Alcove, index: usize) -> Self {
        if let Some(list) = self.simples.get_mut(alcove) {
            list[index] = list[index].neg();
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub alcove: Alcove,
    pub class: KClass,
    pub positivity: PositivityResult,
    pub walls: Vec<FaceCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RvscReport {
    pub schema: u32,
    pub model: String,
    pub radius: i64,
    pub pass: bool,
    pub alcoves: usize,
    pub sampling_fallbacks: usize,
    pub max_order: u32,
    pub two_term: bool,
    pub positivity_failures: usize,
    pub dichotomy_violations: usize,
    pub wall_failures: usize,
    pub pairs: Vec<PairReport>,
    pub wall_reports: Vec<WallReport>,
}

/// `check_rvsc`: positivity and dichotomy for every (alcove, class) pair and
/// the shift rule for every adjacent pair within `radius`.
pub fn check_rvsc(instance: &RvscInstance, radius: i64, resolution: u32) -> Result<RvscReport> {
    let model = &instance.model;
    let rs = model.root_system();
    let frames: Vec<AlcoveFrame> = enumerate_alcoves(rs, radius)
        .into_iter()
        .filter(|f| instance.simples.contains_key(&f.alcove))
        .collect();
    let per_alcove: Vec<(Vec<PairReport>, Vec<WallReport>)> = frames
        .par_iter()
        .map(|frame| -> Result<_> {
            let simples = &instance.simples[&frame.alcove];
            let mut pairs = Vec::new();
            for m in simples {
                pairs.push(PairReport {
                    alcove: frame.alcove.clone(),
                    class: m.clone(),
                    positivity: check_positivity(model, frame, m, resolution)?,
                    walls: wall_dichotomy(model, frame, m, resolution)?,
                });
            }
            let mut walls = Vec::new();
            for wall in frame.walls(rs) {
                if wall.neighbor_above && instance.simples.contains_key(&wall.neighbor) {
                    walls.push(check_wall_shift(
                        model,
                        &frame.alcove,
                        &wall.neighbor,
                        wall.hyperplane,
                        simples,
                        resolution,
                    )?);
                }
            }
            Ok((pairs, walls))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    let mut wall_reports = Vec::new();
    for (p, w) in per_alcove {
        pairs.extend(p);
        wall_reports.extend(w);
    }
    let sampling_fallbacks = pairs
        .iter()
        .filter(|p| p.positivity.method == Method::Sampling)
        .count()
        + pairs
            .iter()
            .flat_map(|p| &p.walls)
            .filter(|w| matches!(w.verdict, WallVerdict::Positive { method: Method::Sampling } | WallVerdict::Undecided))
            .count()
        + wall_reports
            .iter()
            .flat_map(|w| &w.entries)
            .filter(|e| e.method == Method::Sampling)
            .count();
    let positivity_failures = pairs.iter().filter(|p| !p.positivity.verdict.is_positive()).count();
    let dichotomy_violations = pairs
        .iter()
        .flat_map(|p| &p.walls)
        .filter(|w| matches!(w.verdict, WallVerdict::MixedSign { .. } | WallVerdict::Undecided))
        .count();
    let wall_failures = wall_reports.iter().filter(|w| !w.pass).count();
    let max_order = wall_reports
        .iter()
        .flat_map(|w| &w.entries)
        .map(|e| e.order)
        .max()
        .unwrap_or(0);
    let two_term = max_order <= 1;
    let pass = positivity_failures == 0
        && dichotomy_violations == 0
        && wall_failures == 0
        && (two_term || !model.is_kleinian());
    Ok(RvscReport {
        schema: 1,
        model: model.name(),
        radius,
        pass,
        alcoves: frames.len(),
        sampling_fallbacks,
        max_order,
        two_term,
        positivity_failures,
        dichotomy_violations,
        wall_failures,
        pairs,
        wall_reports,
    })
}
