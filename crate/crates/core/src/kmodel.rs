//! Grothendieck-group models with their charge polynomials `d_M`, the
//! central charge `Z = -d_M(mu) + i d_M(lambda)`, and the affine Weyl group
//! action on classes.
//!
//! Kleinian model: basis `[O_pt]` (index 0) and `[O_{C_i}(-1)]` (index `i`),
//! with `d = a_0 + sum_i a_i <lambda, alpha_i^vee>`. Zero-section model:
//! formal symbols `[i_* O(mu)]` with `d(lambda) = chi(lambda + mu)`.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alcove::{AffineWeylElement, AlcoveFrame, Alcove};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::root_system::{Family, RootSystem};
use crate::scalar::Scalar;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Kleinian,
    /// Integral weights `mu` labelling the symbols, in fundamental-weight coordinates.
    ZeroSection(Vec<Vec<i64>>),
}

#[derive(Clone, Debug)]
pub struct KModel {
    kind: ModelKind,
    rs: RootSystem,
}

/// Integer coefficient vector over a model's basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KClass {
    pub coeffs: Vec<i64>,
}

impl KClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        KClass { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        KClass::new(vec![0; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut c = KClass::zero(dim);
        c.coeffs[i] = 1;
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &KClass) -> KClass {
        KClass::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &KClass) -> KClass {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KClass {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> KClass {
        KClass::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    /// Class of the homological shift by `n`.
    pub fn shift(&self, n: i64) -> KClass {
        self.scale(if n % 2 == 0 { 1 } else { -1 })
    }
}

/// Generators of the affine Weyl action on classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KGenerator {
    /// Simple affine reflection with generator index `0..=rank`.
    Reflection(usize),
    /// Translation by an integral weight.
    Translation(Vec<i64>),
}

/// JSON form of a class: `{"model": ..., "coeffs": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassJson {
    pub model: String,
    pub coeffs: Vec<i64>,
}

/// `Z` at a point, kept exact; [`ChargeValue::to_complex`] is for display.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeValue<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> ChargeValue<T> {
    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// On the negative real axis.
    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }
}

impl KModel {
    /// `build_model`.
    pub fn new(kind: ModelKind, rs: &RootSystem) -> Result<Self> {
        match &kind {
            ModelKind::Kleinian if !rs.family().is_simply_laced() => {
                return Err(Error::NotSimplyLaced(rs.family().letter()))
            }
            ModelKind::ZeroSection(mus) => {
                if let Some(m) = mus.iter().find(|m| m.len() != rs.rank()) {
                    return Err(Error::RankMismatch {
                        expected: rs.rank(),
                        got: m.len(),
                    });
                }
            }
            ModelKind::Kleinian => {}
        }
        Ok(KModel { kind, rs: rs.clone() })
    }

    pub fn kleinian(rs: &RootSystem) -> Result<Self> {
        KModel::new(ModelKind::Kleinian, rs)
    }

    pub fn zero_section(rs: &RootSystem, mus: Vec<Vec<i64>>) -> Result<Self> {
        KModel::new(ModelKind::ZeroSection(mus), rs)
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn is_kleinian(&self) -> bool {
        self.kind == ModelKind::Kleinian
    }

    pub fn dimension(&self) -> usize {
        match &self.kind {
            ModelKind::Kleinian => self.rs.rank() + 1,
            ModelKind::ZeroSection(mus) => mus.len(),
        }
    }

    pub fn name(&self) -> String {
        match &self.kind {
            ModelKind::Kleinian => format!("kleinian-{}", self.rs.name()),
            ModelKind::ZeroSection(_) => format!("zero-section-{}", self.rs.name()),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match &self.kind {
            ModelKind::Kleinian => std::iter::once("[O_pt]".to_string())
                .chain((1..=self.rs.rank()).map(|i| format!("[O_C{i}(-1)]")))
                .collect(),
            ModelKind::ZeroSection(mus) => mus.iter().map(|m| format!("[i_*O({m:?})]")).collect(),
        }
    }

    pub fn basis(&self) -> Vec<KClass> {
        (0..self.dimension()).map(|i| KClass::basis(self.dimension(), i)).collect()
    }

    pub fn check_class(&self, m: &KClass) -> Result<()> {
        if m.coeffs.len() == self.dimension() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.dimension(),
                got: m.coeffs.len(),
            })
        }
    }

    pub fn to_json(&self, m: &KClass) -> KClassJson {
        KClassJson {
            model: self.name(),
            coeffs: m.coeffs.clone(),
        }
    }

    pub fn from_json(&self, j: &KClassJson) -> Result<KClass> {
        let m = KClass::new(j.coeffs.clone());
        self.check_class(&m)?;
        Ok(m)
    }

    /// `d_polynomial`.
    pub fn d_polynomial<T: Scalar>(&self, m: &KClass) -> Result<Polynomial<T>> {
        self.check_class(m)?;
        let n = self.rs.rank();
        match &self.kind {
            ModelKind::Kleinian => {
                let lin: Vec<T> = m.coeffs[1..].iter().map(|&c| T::from_int(c)).collect();
                Ok(Polynomial::affine(&lin, T::from_int(m.coeffs[0])))
            }
            ModelKind::ZeroSection(mus) => {
                let chi = euler_chi_polynomial::<T>(&self.rs);
                let mut acc = Polynomial::zero(n);
                for (mu, &c) in mus.iter().zip(&m.coeffs) {
                    if c != 0 {
                        let t: Vec<T> = mu.iter().map(|&x| T::from_int(x)).collect();
                        acc = &acc + &chi.translate(&t).scale(&T::from_int(c));
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Kleinian class whose charge is the given integral affine functional.
    pub fn class_of_affine(&self, lin: &[i64], c0: i64) -> Result<KClass> {
        if !self.is_kleinian() {
            return Err(Error::UnsupportedModel("zero-section"));
        }
        let mut coeffs = vec![c0];
        coeffs.extend_from_slice(lin);
        Ok(KClass::new(coeffs))
    }

    fn class_of_polynomial(&self, p: &Polynomial<crate::Q>) -> KClass {
        let (lin, c0) = p.as_affine().expect("affine functional");
        let int = |x: &crate::Q| {
            assert!(x.is_integral(), "affine Weyl images of integral functionals are integral");
            x.floor_int()
        };
        KClass::new(std::iter::once(int(&c0)).chain(lin.iter().map(int)).collect())
    }

    /// `k_action`: translations twist, `d(lambda) -> d(lambda + nu)`;
    /// reflections act by `d -> d o s`.
    pub fn k_action(&self, g: &KGenerator, m: &KClass) -> Result<KClass> {
        if !self.is_kleinian() {
            return Err(Error::UnsupportedModel("zero-section"));
        }
        let d = self.d_polynomial::<crate::Q>(m)?;
        let moved = match g {
            KGenerator::Translation(nu) => {
                if nu.len() != self.rs.rank() {
                    return Err(Error::RankMismatch {
                        expected: self.rs.rank(),
                        got: nu.len(),
                    });
                }
                let t: Vec<crate::Q> = nu.iter().map(|&x| crate::Q::from_int(x)).collect();
                d.translate(&t)
            }
            KGenerator::Reflection(i) => {
                let s = AffineWeylElement::simple(&self.rs, *i);
                compose_affine(&d, &s)
            }
        };
        Ok(self.class_of_polynomial(&moved))
    }

    /// Class with charge `d_M o w^{-1}`.
    pub fn transform(&self, w: &AffineWeylElement, m: &KClass) -> Result<KClass> {
        if !self.is_kleinian() {
            return Err(Error::UnsupportedModel("zero-section"));
        }
        let d = self.d_polynomial::<crate::Q>(m)?;
        Ok(self.class_of_polynomial(&compose_affine(&d, &w.inverse())))
    }

    /// Classes whose charges are the defining affine functionals of `A`:
    /// `<lambda, alpha_i^vee>` for `i = 1..rank`, then `1 - <lambda, theta^vee>`,
    /// transported from `A_0`.
    pub fn simple_classes(&self, a: &Alcove) -> Result<Vec<KClass>> {
        let frame = AlcoveFrame::locate(&self.rs, a)?;
        self.simple_classes_of(&frame)
    }

    pub fn simple_classes_of(&self, frame: &AlcoveFrame) -> Result<Vec<KClass>> {
        if !self.is_kleinian() {
            return Err(Error::UnsupportedModel("zero-section"));
        }
        let n = self.rs.rank();
        let theta = self.rs.coroot(self.rs.highest_coroot()).coords();
        let mut base: Vec<KClass> = (1..=n).map(|i| KClass::basis(n + 1, i)).collect();
        let mut last = vec![1];
        last.extend(theta.iter().map(|c| -c));
        base.push(KClass::new(last));
        base.iter().map(|m| self.transform(&frame.element, m)).collect()
    }

    /// `central_charge`; in strict mode `(lambda, mu)` must lie in `V^reg`.
    pub fn central_charge<T: Scalar>(
        &self,
        lambda: &Weight<T>,
        mu: &Weight<T>,
        m: &KClass,
        strict: bool,
    ) -> Result<ChargeValue<T>> {
        lambda.check_rank(self.rs.rank())?;
        mu.check_rank(self.rs.rank())?;
        if strict && !crate::alcove::in_vreg(&self.rs, lambda, mu) {
            return Err(Error::NotInVreg);
        }
        let d = self.d_polynomial::<T>(m)?;
        Ok(ChargeValue {
            re: -d.eval_weight(mu),
            im: d.eval_weight(lambda),
        })
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Display for KModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub lambda: Weight<crate::Q>,
    /// `(re, im)` of the charge of each scanned class.
    pub charges: Vec<(String, String)>,
}

/// Charges of `classes` at `(lambda, mu)` for `lambda` on the grid with
/// `steps + 1` points per axis spanning `[lo, hi]^rank`, in lexicographic order.
pub fn charge_scan(
    model: &KModel,
    classes: &[KClass],
    mu: &Weight<crate::Q>,
    lo: &crate::Q,
    hi: &crate::Q,
    steps: u32,
) -> Result<Vec<ScanRow>> {
    type Q = crate::Q;
    let n = model.rs.rank();
    mu.check_rank(n)?;
    for m in classes {
        model.check_class(m)?;
    }
    let steps = steps.max(1);
    let axis: Vec<Q> = (0..=steps)
        .map(|k| lo.clone() + (hi.clone() - lo.clone()) * Q::from_ratio(i64::from(k), i64::from(steps)))
        .collect();
    let total = axis.len().pow(n as u32);
    let polys: Vec<Polynomial<Q>> = classes.iter().map(|m| model.d_polynomial(m)).collect::<Result<_>>()?;
    let at_mu: Vec<Q> = polys.iter().map(|d| -d.eval_weight(mu)).collect();
    Ok((0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut coords = vec![Q::from_int(0); n];
            for c in coords.iter_mut().rev() {
                *c = axis[idx % axis.len()].clone();
                idx /= axis.len();
            }
            let lambda = Weight::new(coords);
            let charges = polys
                .iter()
                .zip(&at_mu)
                .map(|(d, re)| (re.to_exact_string(), d.eval_weight(&lambda).to_exact_string()))
                .collect();
            ScanRow { lambda, charges }
        })
        .collect())
}

/// `p o w` for an affine Weyl element acting on fundamental-weight coordinates.
pub fn compose_affine(p: &Polynomial<crate::Q>, w: &AffineWeylElement) -> Polynomial<crate::Q> {
    let m = w.linear().matrix();
    let n = p.nvars();
    let rows: Vec<Vec<crate::Q>> = (0..n)
        .map(|i| (0..n).map(|j| crate::Q::from_int(m.get(i, j))).collect())
        .collect();
    let t: Vec<crate::Q> = w.translation().iter().map(|&x| crate::Q::from_int(x)).collect();
    p.substitute_affine(&rows, &t)
}

/// `prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>` as a polynomial.
pub fn euler_chi_polynomial<T: Scalar>(rs: &RootSystem) -> Polynomial<T> {
    let n = rs.rank();
    let mut acc = Polynomial::one(n);
    for c in rs.positive_coroots() {
        let h = c.height();
        let lin: Vec<T> = c.coords().iter().map(|&x| T::from_ratio(x, h)).collect();
        acc = &acc * &Polynomial::affine(&lin, T::one());
    }
    acc
}

pub fn euler_chi<T: Scalar>(rs: &RootSystem, lambda: &Weight<T>) -> T {
    rs.positive_coroots()
        .iter()
        .map(|c| (lambda.pair(c.coords()) + T::from_int(c.height())) / T::from_int(c.height()))
        .fold(T::one(), |a, b| a * b)
}

/// Parses `kleinian` or `zero-section:mu;mu;...` with `mu` comma separated.
pub fn parse_model(text: &str, rs: &RootSystem) -> Result<KModel> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("kleinian") {
        return KModel::kleinian(rs);
    }
    let rest = text
        .strip_prefix("zero-section")
        .ok_or_else(|| Error::Parse(format!("unknown model {text:?}")))?;
    let list = rest.strip_prefix(':').unwrap_or("");
    let mus = if list.trim().is_empty() {
        vec![vec![0; rs.rank()]]
    } else {
        list.split(';')
            .map(|m| {
                m.split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad weight {m:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
    };
    KModel::zero_section(rs, mus)
}

/// Families admitting the Kleinian model.
pub fn is_kleinian_family(f: Family) -> bool {
    f.is_simply_laced()
}
