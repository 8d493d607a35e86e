//! Multivariate polynomials with scalar coefficients, in the variables
//! `x_i = <lambda, alpha_i^vee>` (fundamental-weight coordinates).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::Q;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Exponent, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, T::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Polynomial::monomial(nvars, unit(nvars, i), T::one())
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: T) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Polynomial::zero(nvars);
        p.add_term(exp, c);
        p
    }

    /// `c0 + sum_i coeffs[i] x_i`.
    pub fn affine(coeffs: &[T], c0: T) -> Self {
        let n = coeffs.len();
        let mut p = Polynomial::constant(n, c0);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(unit(n, i), c.clone());
        }
        p
    }

    /// `<lambda, coroot> - level` as a polynomial in `lambda`.
    pub fn coroot_form(coroot: &[i64], level: i64) -> Self {
        let coeffs: Vec<T> = coroot.iter().map(|&c| T::from_int(c)).collect();
        Polynomial::affine(&coeffs, T::from_int(-level))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, T)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Exponent, c: T) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> T {
        self.terms.get(exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == k)
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Sum of the components of positive degree.
    pub fn positive_degree_part(&self) -> Self {
        let mut p = self.clone();
        p.terms.remove(&vec![0; self.nvars]);
        p
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.nvars);
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t = t * xi.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval_weight(&self, lambda: &Weight<T>) -> T {
        self.eval(lambda.coords())
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c.clone() * T::from_int(i64::from(e[i])));
        }
        out
    }

    /// `g(d/dx) self`: every variable of `g` becomes the matching partial derivative.
    pub fn apply_operator(&self, g: &Polynomial<T>) -> Self {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &g.terms {
            let mut d = self.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    if d.is_zero() {
                        break;
                    }
                    d = d.derivative(i);
                }
            }
            out = &out + &d.scale(c);
        }
        out
    }

    /// Substitutes `x_i -> images[i]`.
    pub fn compose(&self, images: &[Polynomial<T>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map_or(0, |p| p.nvars);
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Polynomial<T>>> = images
            .iter()
            .zip(&maxdeg)
            .map(|(img, &m)| {
                let mut v = vec![Polynomial::one(n)];
                for k in 1..=m as usize {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Polynomial::zero(n);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// `x -> self(M x + t)`, with `M` given by rows.
    pub fn substitute_affine(&self, rows: &[Vec<T>], t: &[T]) -> Self {
        let images: Vec<Polynomial<T>> = rows
            .iter()
            .zip(t)
            .map(|(row, ti)| Polynomial::affine(row, ti.clone()))
            .collect();
        self.compose(&images)
    }

    /// `x -> self(x + t)`.
    pub fn translate(&self, t: &[T]) -> Self {
        let n = self.nvars;
        let rows: Vec<Vec<T>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        self.substitute_affine(&rows, t)
    }

    /// Coefficients of the linear part and the constant, when the degree is at most one.
    pub fn as_affine(&self) -> Option<(Vec<T>, T)> {
        if self.degree().unwrap_or(0) > 1 {
            return None;
        }
        let lin = (0..self.nvars).map(|i| self.coeff(&unit(self.nvars, i))).collect();
        Some((lin, self.constant_term()))
    }

    /// Exact quotient by an affine linear form, or `None` when it does not divide.
    pub fn div_affine(&self, l: &Polynomial<T>) -> Option<Self> {
        let (lin, c0) = l.as_affine()?;
        let j = lin.iter().position(|c| !c.is_zero())?;
        if self.is_zero() {
            return Some(self.clone());
        }
        // self = sum_k p_k x_j^k, l = a x_j + r
        let a = lin[j].clone();
        let mut r_lin = lin.clone();
        r_lin[j] = T::zero();
        let r = Polynomial::affine(&r_lin, c0);
        let top = self.terms.keys().map(|e| e[j]).max().unwrap_or(0);
        let mut slices: Vec<Polynomial<T>> = vec![Polynomial::zero(self.nvars); top as usize + 1];
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[j];
            f[j] = 0;
            slices[k as usize].add_term(f, c.clone());
        }
        // synthetic division from the top slice down
        let inv_a = T::one() / a;
        let mut q: Vec<Polynomial<T>> = vec![Polynomial::zero(self.nvars); top as usize];
        let mut carry = slices[top as usize].clone();
        for k in (0..top as usize).rev() {
            q[k] = carry.scale(&inv_a);
            carry = &slices[k] - &(&r * &q[k]);
        }
        if !carry.is_zero() {
            return None;
        }
        let mut out = Polynomial::zero(self.nvars);
        for (k, qk) in q.into_iter().enumerate() {
            for (e, c) in qk.terms {
                let mut f = e;
                f[j] += k as u32;
                out.add_term(f, c);
            }
        }
        Some(out)
    }

    /// Largest `n` with `l^n` dividing `self`.
    pub fn vanishing_order(&self, l: &Polynomial<T>) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut n = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_affine(l) {
            p = q;
            n += 1;
        }
        Ok(n)
    }

    /// Restriction to the hyperplane `l = 0`, expressed by eliminating the
    /// first variable with a nonzero coefficient in `l`.
    pub fn restrict_to_zero_set(&self, l: &Polynomial<T>) -> Option<Self> {
        let (lin, c0) = l.as_affine()?;
        let j = lin.iter().position(|c| !c.is_zero())?;
        let n = self.nvars;
        let images: Vec<Polynomial<T>> = (0..n)
            .map(|i| {
                if i != j {
                    return Polynomial::var(n, i);
                }
                let inv = -(T::one() / lin[j].clone());
                let mut coeffs: Vec<T> = lin.iter().map(|c| c.clone() * inv.clone()).collect();
                coeffs[j] = T::zero();
                Polynomial::affine(&coeffs, c0.clone() * inv)
            })
            .collect();
        Some(self.compose(&images))
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }
}

fn unit(n: usize, i: usize) -> Exponent {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Polynomial<T> {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let g: Exponent = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c.clone() * d.clone());
            }
        }
        out
    }
}

/// Monomial key such as `x1^2*x3`, variables numbered from 1; `1` for the constant.
pub fn monomial_key(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn parse_monomial_key(key: &str, nvars: usize) -> Result<Exponent> {
    let mut e = vec![0; nvars];
    let key = key.trim();
    if key == "1" {
        return Ok(e);
    }
    for factor in key.split('*') {
        let factor = factor.trim();
        let body = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("bad monomial factor {factor:?}")))?;
        let (idx, pow) = match body.split_once('^') {
            Some((i, p)) => (i, p),
            None => (body, "1"),
        };
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
        let p: u32 = pow.parse().map_err(|_| Error::Parse(format!("bad power {factor:?}")))?;
        if i == 0 || i > nvars {
            return Err(Error::Parse(format!("variable {factor:?} out of range")));
        }
        e[i - 1] += p;
    }
    Ok(e)
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest degree first
        let mut terms: Vec<(&Exponent, &T)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let key = monomial_key(e);
            if key == "1" {
                write!(f, "{}", abs.to_exact_string())?;
            } else if abs.is_one() {
                write!(f, "{key}")?;
            } else {
                write!(f, "{}*{key}", abs.to_exact_string())?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{"nvars": n, "terms": {"x1^2*x2": "3/2", ...}}`.
impl<T: Scalar> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            nvars: usize,
            terms: BTreeMap<String, String>,
        }
        Repr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (monomial_key(e), c.to_exact_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Polynomial<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            nvars: usize,
            terms: BTreeMap<String, String>,
        }
        let r = Repr::deserialize(d)?;
        let mut p = Polynomial::zero(r.nvars);
        for (k, v) in r.terms {
            let e = parse_monomial_key(&k, r.nvars).map_err(serde::de::Error::custom)?;
            let c = T::parse_exact(&v).ok_or_else(|| serde::de::Error::custom(format!("bad coefficient {v:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Rational roots of a univariate polynomial given by ascending coefficients.
/// Returns `None` when the integer coefficients are too large to enumerate divisors.
pub fn rational_roots(coeffs: &[Q]) -> Option<Vec<Q>> {
    let mut c: Vec<Q> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    // strip the root at zero
    let lead_zero = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    if lead_zero > 0 {
        roots.push(Q::zero());
        c.drain(..lead_zero);
    }
    if c.len() <= 1 {
        return Some(roots);
    }
    let denom_lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Q::from_integer(denom_lcm.clone())).to_integer()).collect();
    let a0 = ints[0].abs().to_u64()?;
    let an = ints.last().expect("nonempty").abs().to_u64()?;
    let eval = |x: &Q| c.iter().rev().fold(Q::zero(), |acc, k| acc * x + k);
    for p in divisors(a0)? {
        for q in divisors(an)? {
            for s in [1i64, -1] {
                let x = Q::new(BigInt::from(s) * BigInt::from(p), BigInt::from(q));
                if eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: u64) -> Option<Vec<u64>> {
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Restriction of `p` to the line `base + t * dir`, as ascending coefficients in `t`.
pub fn restrict_to_line(p: &Polynomial<Q>, base: &[Q], dir: &[Q]) -> Vec<Q> {
    let t = Polynomial::<Q>::var(1, 0);
    let images: Vec<Polynomial<Q>> = base
        .iter()
        .zip(dir)
        .map(|(b, d)| &Polynomial::constant(1, b.clone()) + &t.scale(d))
        .collect();
    let u = p.compose(&images);
    let deg = u.degree().unwrap_or(0) as usize;
    (0..=deg).map(|k| u.coeff(&[k as u32])).collect()
}

/// Factors `p` as `c * prod l_k` with every `l_k` an affine form
/// `<x, v> - r` whose linear part is one of the given directions. `None`
/// when `p` does not split this way.
pub fn factor_over_directions(p: &Polynomial<Q>, directions: &[Vec<i64>]) -> Option<(Q, Vec<Polynomial<Q>>)> {
    if p.is_zero() {
        return None;
    }
    let n = p.nvars();
    let mut rest = p.clone();
    let mut factors = Vec::new();
    // a fixed generic base point keeps the candidate levels deterministic
    let base: Vec<Q> = (0..n).map(|i| Q::from_ratio(2 * i as i64 + 3, 7 + 4 * i as i64)).collect();
    for v in directions {
        let Some(j) = v.iter().position(|&c| c != 0) else { continue };
        let mut dir = vec![Q::zero(); n];
        dir[j] = Q::from_ratio(1, v[j]);
        loop {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let uni = restrict_to_line(&rest, &base, &dir);
            let roots = rational_roots(&uni)?;
            let level0: Q = base.iter().zip(v).map(|(b, &c)| b * Q::from_int(c)).sum();
            let mut found = false;
            for t0 in roots {
                let level = &level0 + &t0;
                let coeffs: Vec<Q> = v.iter().map(|&c| Q::from_int(c)).collect();
                let l = Polynomial::affine(&coeffs, -level);
                if let Some(q) = rest.div_affine(&l) {
                    rest = q;
                    factors.push(l);
                    found = true;
                    break;
                }
            }
            if !found {
                break;
            }
        }
    }
    (rest.degree() == Some(0)).then(|| (rest.constant_term(), factors))
}
