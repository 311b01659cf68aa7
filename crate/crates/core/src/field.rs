//! Exact scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! A [`Field`] is a lightweight descriptor; a [`FieldElement`] carries its
//! field with it so that mixing ℚ with GF(p), or GF(p) with GF(q), is caught
//! at the operation rather than silently reduced.
//!
//! The `checked_*` methods report mixed-field operands and division by zero
//! as [`FieldError`]s. The `std::ops` impls are for code that has already
//! established a common field (every matrix does this once at construction)
//! and panic on the same conditions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed-field operands: {left} and {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("malformed scalar {text:?} for {field}")]
    Malformed { text: String, field: Field },
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// The ground field: ℚ or GF(p) for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Field {
    modulus: Option<u64>,
}

impl Field {
    pub const RATIONAL: Field = Field { modulus: None };

    pub fn rational() -> Field {
        Field::RATIONAL
    }

    /// GF(p). Primality is checked here, once, by trial division.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if is_prime(p) {
            Ok(Field { modulus: Some(p) })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn is_rational(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self.modulus {
            None => FieldElement(Repr::Q(BigRational::from_integer(BigInt::from(n)))),
            Some(p) => FieldElement(Repr::Fp {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            }),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.modulus {
            None => FieldElement(Repr::Q(BigRational::from_integer(n.clone()))),
            Some(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement(Repr::Fp {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                })
            }
        }
    }

    /// `num/den` in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Parse `"int"` or, over ℚ only, `"int/int"`.
    pub fn parse(&self, text: &str) -> Result<FieldElement, FieldError> {
        let malformed = || FieldError::Malformed {
            text: text.to_string(),
            field: *self,
        };
        let t = text.trim();
        match self.modulus {
            None => {
                let (num, den) = match t.split_once('/') {
                    Some((n, d)) => (parse_int(n).ok_or_else(malformed)?, parse_int(d).ok_or_else(malformed)?),
                    None => (parse_int(t).ok_or_else(malformed)?, BigInt::one()),
                };
                if den.is_zero() {
                    return Err(FieldError::ZeroDenominator(text.to_string()));
                }
                Ok(FieldElement(Repr::Q(BigRational::new(num, den))))
            }
            Some(_) => {
                let n = parse_int(t).ok_or_else(malformed)?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    /// A uniformly chosen element; over ℚ a fraction with numerator in
    /// `[-bound, bound]` and denominator in `[1, bound]`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> FieldElement {
        let bound = bound.max(1);
        match self.modulus {
            None => {
                let n = rng.gen_range(-bound..=bound);
                let d = rng.gen_range(1..=bound);
                FieldElement(Repr::Q(BigRational::new(BigInt::from(n), BigInt::from(d))))
            }
            Some(p) => FieldElement(Repr::Fp {
                value: rng.gen_range(0..p),
                modulus: p,
            }),
        }
    }

    /// A nonzero sample, for rescaling experiments.
    pub fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> FieldElement {
        loop {
            let x = self.sample(rng, bound);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "Q"),
            Some(p) => write!(f, "GF({p})"),
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut k = 3u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

/// An exact scalar in ℚ or GF(p). Immutable; `Send + Sync`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

impl FieldElement {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Q(_) => Field::RATIONAL,
            Repr::Fp { modulus, .. } => Field {
                modulus: Some(*modulus),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_zero(),
            Repr::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_one(),
            Repr::Fp { value, .. } => *value == 1,
        }
    }

    /// The canonical rational value, if this is an element of ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(q) => Some(q),
            Repr::Fp { .. } => None,
        }
    }

    /// The residue in `[0, p)`, if this is an element of GF(p).
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Q(_) => None,
            Repr::Fp { value, .. } => Some(*value),
        }
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), FieldError> {
        let (l, r) = (self.field(), other.field());
        if l == r {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch { left: l, right: r })
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Q(q) => FieldElement(Repr::Q(q.recip())),
            Repr::Fp { value, modulus } => FieldElement(Repr::Fp {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    fn neg_ref(&self) -> FieldElement {
        match &self.0 {
            Repr::Q(q) => FieldElement(Repr::Q(-q)),
            Repr::Fp { value, modulus } => FieldElement(Repr::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            }),
        }
    }

    fn add_unchecked(&self, other: &FieldElement) -> FieldElement {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => FieldElement(Repr::Q(a + b)),
            (Repr::Fp { value: a, modulus }, Repr::Fp { value: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *modulus as u128;
                FieldElement(Repr::Fp {
                    value: s as u64,
                    modulus: *modulus,
                })
            }
            _ => panic!("mixed-field operands: {} and {}", self.field(), other.field()),
        }
    }

    fn mul_unchecked(&self, other: &FieldElement) -> FieldElement {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => FieldElement(Repr::Q(a * b)),
            (Repr::Fp { value: a, modulus }, Repr::Fp { value: b, .. }) => {
                let s = (*a as u128 * *b as u128) % *modulus as u128;
                FieldElement(Repr::Fp {
                    value: s as u64,
                    modulus: *modulus,
                })
            }
            _ => panic!("mixed-field operands: {} and {}", self.field(), other.field()),
        }
    }

    /// In-place `self += a * b`; the hot loop of matrix multiplication.
    pub(crate) fn add_mul_assign(&mut self, a: &FieldElement, b: &FieldElement) {
        match (&mut self.0, &a.0, &b.0) {
            (Repr::Fp { value, modulus }, Repr::Fp { value: x, .. }, Repr::Fp { value: y, .. }) => {
                let p = *modulus as u128;
                *value = ((*value as u128 + (*x as u128 * *y as u128) % p) % p) as u64;
            }
            (Repr::Q(acc), Repr::Q(x), Repr::Q(y)) => {
                if x.is_zero() || y.is_zero() {
                    return;
                }
                *acc += x * y;
            }
            _ => panic!("mixed-field operands in multiply-accumulate"),
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} has no inverse mod {p}");
    t.rem_euclid(p as i128) as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

/// Product of a sequence of elements; `one` for the empty product.
pub fn product<'a, I>(field: Field, items: I) -> FieldElement
where
    I: IntoIterator<Item = &'a FieldElement>,
{
    items.into_iter().fold(field.one(), |acc, x| &acc * x)
}
