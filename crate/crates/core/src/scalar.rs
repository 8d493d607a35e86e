//! Scalar abstraction shared by every geometric and algebraic routine.
//!
//! The exact type [`crate::Q`] (arbitrary precision rationals) is what the
//! verifiers are meant to run on. Floating point types implement the same
//! trait so that the geometry can be evaluated cheaply, but every sign or
//! vanishing decision made with them is only as good as the rounding.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    /// Greatest integer not exceeding `self`.
    fn floor_int(&self) -> i64;

    fn is_integral(&self) -> bool;

    fn to_f64(&self) -> f64;

    /// Parses `"p/q"`, `"p"` and, for floating types, decimal literals.
    fn parse_exact(s: &str) -> Option<Self>;

    /// Rendering used at every serialization boundary.
    fn to_exact_string(&self) -> String {
        self.to_string()
    }

    /// Sign as -1, 0 or 1.
    fn sign_int(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_int(v: i64) -> Self {
                v as $t
            }

            fn floor_int(&self) -> i64 {
                self.floor() as i64
            }

            fn is_integral(&self) -> bool {
                self.fract() == 0.0
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn parse_exact(s: &str) -> Option<Self> {
                let s = s.trim();
                match s.split_once('/') {
                    Some((n, d)) => {
                        let n: $t = n.trim().parse().ok()?;
                        let d: $t = d.trim().parse().ok()?;
                        (d != 0.0).then(|| n / d)
                    }
                    None => s.parse().ok(),
                }
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn floor_int(&self) -> i64 {
        self.floor().to_integer()
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_exact(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn floor_int(&self) -> i64 {
        self.floor()
            .to_integer()
            .to_i64()
            .expect("floor out of i64 range")
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Ok(r) = s.parse::<BigRational>() {
            return Some(r);
        }
        // Decimal literal such as "0.25" is read exactly.
        let (int, frac) = s.split_once('.')?;
        let digits = format!("{int}{frac}");
        let numer: BigInt = digits.parse().ok()?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        Some(BigRational::new(numer, denom))
    }
}

/// Convenience for building exact values in code: `q(1, 2)` is one half.
pub fn q<T: Scalar>(numer: i64, denom: i64) -> T {
    T::from_ratio(numer, denom)
}

/// Lossless conversion of a float into the rational type (used for sampling).
pub fn rational_from_f64(v: f64) -> Option<BigRational> {
    BigRational::from_f64(v)
}

/// Serde helpers for scalar lists written as exact strings.
pub mod exact_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Scalar;

    pub fn serialize<T: Scalar, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(Scalar::to_exact_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|v| {
                let text = match v {
                    serde_json::Value::String(s) => s,
                    serde_json::Value::Number(n) => n.to_string(),
                    other => return Err(serde::de::Error::custom(format!("bad scalar {other}"))),
                };
                T::parse_exact(&text).ok_or_else(|| serde::de::Error::custom(format!("bad scalar {text:?}")))
            })
            .collect()
    }
}
