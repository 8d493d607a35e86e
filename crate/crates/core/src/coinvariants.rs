//! The coinvariant algebra `Sym(h*) / (Sym(h*)^W_+)` in the symbols
//! `omega_1..omega_r`, exponentials of weights, and harmonic polynomials.
//!
//! A symbol `omega_i` acts on functions of `lambda` as `d/dx_i`, so that
//! `<exp(lambda), M> = d_M(lambda)` under [`pairing`].

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::Echelon;
use crate::poly::{monomial_key, Exponent, Polynomial};
use crate::root_system::{RootSystem, WeylElement};
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::Q;

/// Exponent vectors of total degree `k` in `n` variables, in descending lex order.
pub fn monomials(n: usize, k: u32) -> Vec<Exponent> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(n, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// `w . f`: substitutes `omega_j -> w(omega_j)`.
pub fn act_on_symbols(w: &WeylElement, f: &Polynomial<Q>) -> Polynomial<Q> {
    let n = f.nvars();
    let m = w.matrix();
    let images: Vec<Polynomial<Q>> = (0..n)
        .map(|j| {
            let col: Vec<Q> = (0..n).map(|i| Q::from_int(m.get(i, j))).collect();
            Polynomial::affine(&col, Q::from_int(0))
        })
        .collect();
    f.compose(&images)
}

/// Reynolds average of `f` over `W`.
pub fn reynolds(rs: &RootSystem, f: &Polynomial<Q>) -> Result<Polynomial<Q>> {
    let ws = rs.weyl_elements()?;
    let mut acc = Polynomial::zero(f.nvars());
    for w in ws {
        acc = &acc + &act_on_symbols(w, f);
    }
    Ok(acc.scale(&Q::from_ratio(1, ws.len() as i64)))
}

fn to_vector(p: &Polynomial<Q>, cols: &[Exponent]) -> Vec<Q> {
    cols.iter().map(|e| p.coeff(e)).collect()
}

/// Generators of the ideal `(Sym(h*)^W_+)`, one per basic degree, obtained
/// as Reynolds averages of monomials and pruned against the ideal generated
/// in lower degrees.
pub fn invariant_generators(rs: &RootSystem) -> Result<Vec<Polynomial<Q>>> {
    let n = rs.rank();
    let top = *rs.degrees().iter().max().expect("nonempty degrees") as u32;
    let mut gens: Vec<Polynomial<Q>> = Vec::new();
    for d in 1..=top {
        let cols = monomials(n, d);
        let mut ideal = Echelon::empty(cols.len());
        for g in &gens {
            let dg = g.degree().expect("nonzero generator");
            for m in monomials(n, d - dg) {
                let prod = g * &Polynomial::monomial(n, m, Q::from_int(1));
                ideal.insert(&to_vector(&prod, &cols));
            }
        }
        for m in &cols {
            let avg = reynolds(rs, &Polynomial::monomial(n, m.clone(), Q::from_int(1)))?;
            if avg.is_zero() {
                continue;
            }
            if ideal.insert(&to_vector(&avg, &cols)) {
                gens.push(normalize(avg));
            }
        }
    }
    Ok(gens)
}

/// Scales so that the leading coefficient is one.
fn normalize(p: Polynomial<Q>) -> Polynomial<Q> {
    let lead = p.terms().last().map(|(_, c)| c.clone()).expect("nonzero");
    p.scale(&(Q::from_int(1) / lead))
}

#[derive(Clone, Debug)]
struct GradedPiece {
    degree: u32,
    columns: Vec<Exponent>,
    ideal: Echelon<Q>,
    /// Column indices of the standard monomials.
    standard: Vec<usize>,
}

/// Graded monomial basis of the coinvariant algebra with reduction data.
#[derive(Clone, Debug)]
pub struct CoinvariantBasis {
    nvars: usize,
    generators: Vec<Polynomial<Q>>,
    pieces: Vec<GradedPiece>,
    basis: Vec<Exponent>,
    offsets: Vec<usize>,
}

impl CoinvariantBasis {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let generators = invariant_generators(rs)?;
        Ok(Self::from_generators(rs.rank(), rs.num_positive_roots() as u32, generators))
    }

    /// Builds the quotient by graded elimination up to `top + 1`.
    pub fn from_generators(nvars: usize, top: u32, generators: Vec<Polynomial<Q>>) -> Self {
        let mut pieces = Vec::new();
        let mut basis = Vec::new();
        let mut offsets = Vec::new();
        for k in 0..=top + 1 {
            let columns = monomials(nvars, k);
            let mut ideal = Echelon::empty(columns.len());
            for g in &generators {
                let dg = g.degree().expect("nonzero generator");
                if dg > k {
                    continue;
                }
                for m in monomials(nvars, k - dg) {
                    let prod = g * &Polynomial::monomial(nvars, m, Q::from_int(1));
                    ideal.insert(&to_vector(&prod, &columns));
                }
            }
            let pivots: HashSet<usize> = ideal.pivots.iter().copied().collect();
            let standard: Vec<usize> = (0..columns.len()).filter(|i| !pivots.contains(i)).collect();
            offsets.push(basis.len());
            basis.extend(standard.iter().map(|&i| columns[i].clone()));
            pieces.push(GradedPiece {
                degree: k,
                columns,
                ideal,
                standard,
            });
        }
        offsets.push(basis.len());
        CoinvariantBasis {
            nvars,
            generators,
            pieces,
            basis,
            offsets,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<Q>] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Exponent] {
        &self.basis
    }

    /// Dimension of each graded piece, from degree zero up to the top degree.
    pub fn hilbert_series(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.pieces.iter().map(|p| p.standard.len()).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    pub fn top_degree(&self) -> usize {
        self.hilbert_series().len().saturating_sub(1)
    }

    pub fn degree_of(&self, index: usize) -> u32 {
        self.basis[index].iter().sum()
    }

    pub fn reduce(&self, p: &Polynomial<Q>) -> CoinvariantElement {
        let mut coeffs = vec![Q::from_int(0); self.basis.len()];
        for piece in &self.pieces {
            let part = p.homogeneous_part(piece.degree);
            if part.is_zero() {
                continue;
            }
            let v = piece.ideal.reduce(&to_vector(&part, &piece.columns));
            let off = self.offsets[piece.degree as usize];
            for (slot, &col) in piece.standard.iter().enumerate() {
                coeffs[off + slot] = v[col].clone();
            }
        }
        let beyond = p.degree().unwrap_or(0) as usize >= self.pieces.len();
        debug_assert!(!beyond || self.pieces.last().is_some_and(|p| p.standard.is_empty()));
        CoinvariantElement { coeffs }
    }

    pub fn lift(&self, v: &CoinvariantElement) -> Polynomial<Q> {
        Polynomial::from_terms(
            self.nvars,
            self.basis.iter().cloned().zip(v.coeffs.iter().cloned()),
        )
    }

    pub fn one(&self) -> CoinvariantElement {
        self.reduce(&Polynomial::one(self.nvars))
    }

    pub fn mul(&self, a: &CoinvariantElement, b: &CoinvariantElement) -> CoinvariantElement {
        self.reduce(&(&self.lift(a) * &self.lift(b)))
    }

    /// `sum_k lambda^k / k!` truncated at the top degree, with `lambda = sum_i lambda_i omega_i`.
    pub fn exp_class(&self, lambda: &Weight<Q>) -> CoinvariantElement {
        let l = Polynomial::affine(lambda.coords(), Q::from_int(0));
        let mut term = Polynomial::one(self.nvars);
        let mut acc = term.clone();
        for k in 1..self.pieces.len() {
            term = (&term * &l).scale(&Q::from_ratio(1, k as i64));
            acc = &acc + &term;
        }
        self.reduce(&acc)
    }

    /// `exp(lambda) + i exp(mu)`.
    pub fn quasi_exponential(&self, lambda: &Weight<Q>, mu: &Weight<Q>) -> ComplexElement {
        ComplexElement {
            re: self.exp_class(lambda),
            im: self.exp_class(mu),
        }
    }

    pub fn to_json(&self, v: &CoinvariantElement) -> BTreeMap<String, String> {
        self.basis
            .iter()
            .zip(&v.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (monomial_key(e).replace('x', "w"), c.to_exact_string()))
            .collect()
    }
}

/// Coefficient vector over a [`CoinvariantBasis`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoinvariantElement {
    #[serde(with = "crate::scalar::exact_vec")]
    pub coeffs: Vec<Q>,
}

impl CoinvariantElement {
    pub fn add(&self, other: &Self) -> Self {
        CoinvariantElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        CoinvariantElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }
}

/// `re + i im` over the complexified coinvariant algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexElement {
    pub re: CoinvariantElement,
    pub im: CoinvariantElement,
}

impl ComplexElement {
    pub fn mul_real(&self, basis: &CoinvariantBasis, r: &CoinvariantElement) -> Self {
        ComplexElement {
            re: basis.mul(&self.re, r),
            im: basis.mul(&self.im, r),
        }
    }
}

/// `(f(d/dx) d)(0)`.
pub fn pairing(f: &Polynomial<Q>, d: &Polynomial<Q>) -> Q {
    d.apply_operator(f).constant_term()
}

pub fn pair_element(basis: &CoinvariantBasis, v: &CoinvariantElement, d: &Polynomial<Q>) -> Q {
    pairing(&basis.lift(v), d)
}

/// Pairing of a complex element, as `(re, im)`.
pub fn pair_complex(basis: &CoinvariantBasis, v: &ComplexElement, d: &Polynomial<Q>) -> (Q, Q) {
    (pair_element(basis, &v.re, d), pair_element(basis, &v.im, d))
}

/// Annihilated by every generator operator `g(d/dx)`.
pub fn is_harmonic(generators: &[Polynomial<Q>], p: &Polynomial<Q>) -> bool {
    generators.iter().all(|g| p.apply_operator(g).is_zero())
}

/// `sum_{w in W} p(w lambda)`.
pub fn weyl_sum<T: Scalar>(rs: &RootSystem, p: &Polynomial<T>, lambda: &Weight<T>) -> Result<T> {
    let mut acc = T::zero();
    for w in rs.weyl_elements()? {
        acc = acc + p.eval_weight(&w.act(lambda));
    }
    Ok(acc)
}

/// Weyl sums of the homogeneous components of positive degree, by degree.
pub fn weyl_sums_by_degree(rs: &RootSystem, p: &Polynomial<Q>, lambda: &Weight<Q>) -> Result<Vec<(u32, Q)>> {
    let top = p.degree().unwrap_or(0);
    (1..=top)
        .map(|k| Ok((k, weyl_sum(rs, &p.homogeneous_part(k), lambda)?)))
        .collect()
}
