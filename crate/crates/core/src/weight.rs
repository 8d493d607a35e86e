use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of the real Cartan space, in fundamental-weight coordinates.
///
/// Coordinate `i` equals the pairing with the `i`-th simple coroot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Weight<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![T::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight::new(coords.iter().map(|&c| T::from_int(c)).collect())
    }

    /// The fundamental weight with index `i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i] = T::one();
        w
    }

    pub fn parse(items: &[&str]) -> Result<Self> {
        items
            .iter()
            .map(|s| T::parse_exact(s).ok_or_else(|| Error::Parse(format!("bad scalar {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }

    /// Parses a comma separated list such as `"1/2,1/3"`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let items: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        Self::parse(&items)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn scale(&self, c: &T) -> Self {
        Weight::new(self.coords.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Pairing with a coroot given by its coordinates in the simple-coroot basis.
    pub fn pair(&self, coroot: &[i64]) -> T {
        debug_assert_eq!(coroot.len(), self.coords.len());
        let mut acc = T::zero();
        for (x, &c) in self.coords.iter().zip(coroot) {
            if c != 0 {
                acc = acc + x.clone() * T::from_int(c);
            }
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Scalar::is_integral)
    }

    /// Integer coordinates, if all coordinates are integers.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.coords.iter().map(Scalar::floor_int).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(Scalar::to_exact_string).collect()
    }

    /// Point on the segment from `self` to `other` at parameter `t`.
    pub fn lerp(&self, other: &Self, t: &T) -> Self {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + (b.clone() - a.clone()) * t.clone())
                .collect(),
        )
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: rank,
                got: self.rank(),
            })
        }
    }
}

impl<T: Scalar> Add for &Weight<T> {
    type Output = Weight<T>;

    fn add(self, rhs: Self) -> Weight<T> {
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Weight<T> {
    type Output = Weight<T>;

    fn sub(self, rhs: Self) -> Weight<T> {
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Neg for &Weight<T> {
    type Output = Weight<T>;

    fn neg(self) -> Weight<T> {
        Weight::new(self.coords.iter().map(|a| -a.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// Weights cross serialization boundaries as lists of "p/q" strings.
impl<T: Scalar> Serialize for Weight<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Weight<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
        let mut coords = Vec::with_capacity(raw.len());
        for v in raw {
            let text = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Number(n) => n.to_string(),
                other => return Err(serde::de::Error::custom(format!("bad coordinate {other}"))),
            };
            coords.push(
                T::parse_exact(&text)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad coordinate {text:?}")))?,
            );
        }
        Ok(Weight::new(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn json_uses_rational_strings() {
        let w: Weight<Q> = Weight::parse_list("1/2, -3").unwrap();
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, r#"["1/2","-3"]"#);
        let back: Weight<Q> = serde_json::from_str(r#"["1/2", -3]"#).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn pairing_is_linear() {
        let a: Weight<Q> = Weight::parse_list("1/2,1/3").unwrap();
        let b: Weight<Q> = Weight::parse_list("2,-1").unwrap();
        let c = [1, 2];
        assert_eq!((&a + &b).pair(&c), a.pair(&c) + b.pair(&c));
    }
}
