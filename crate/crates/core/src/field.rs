//! Exact scalars over Q, the Gaussian rationals Q(i), and prime fields GF(p).
//!
//! Every [`Scalar`] is kept in canonical form (reduced fractions with positive
//! denominators, residues in `0..p`), so structural equality is field equality.
//!
//! Text grammar, whitespace-insensitive:
//!
//! ```text
//! rational   := ["-"] digits ["/" digits]
//! gaussian   := rational | [rational] [("+"|"-") [rational] "i"]
//! primefield := ["-"] digits ["/" digits]      (reduced mod p)
//! ```

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

mod rational;

pub use rational::Rat;

/// A prime modulus below 2^32, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        let small = u32::try_from(p).map_err(|_| Error::NotPrime(p))?;
        if is_prime(small) {
            Ok(Prime(small))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The ground field every scalar and matrix is declared over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rationals,
    GaussianRationals,
    PrimeField(Prime),
}

impl FieldTag {
    pub fn prime(p: u64) -> Result<Self> {
        Prime::new(p).map(FieldTag::PrimeField)
    }

    /// Builds a tag from the short names used in matrix documents:
    /// `"Q"`, `"Qi"` and `"Fp"` (the latter with a modulus).
    pub fn from_descriptor(name: &str, modulus: Option<u64>) -> Result<Self> {
        match (name, modulus) {
            ("Q", None) => Ok(FieldTag::Rationals),
            ("Qi", None) => Ok(FieldTag::GaussianRationals),
            ("Fp", Some(p)) => FieldTag::prime(p),
            ("Fp", None) => Err(Error::Document("field Fp requires a modulus \"p\"".into())),
            (_, Some(_)) => Err(Error::Document(format!(
                "field {name:?} does not take a modulus"
            ))),
            _ => Err(Error::Document(format!("unknown field {name:?}"))),
        }
    }

    /// Short name plus modulus, the inverse of [`FieldTag::from_descriptor`].
    pub fn descriptor(self) -> (&'static str, Option<u64>) {
        match self {
            FieldTag::Rationals => ("Q", None),
            FieldTag::GaussianRationals => ("Qi", None),
            FieldTag::PrimeField(p) => ("Fp", Some(p.get() as u64)),
        }
    }

    pub fn modulus(self) -> Option<u32> {
        match self {
            FieldTag::PrimeField(p) => Some(p.get()),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldTag::PrimeField(_))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        self.from_ratio(n, 1).expect("denominator 1 is never zero")
    }

    /// `num / den` in this field. Fails if `den` vanishes in the field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.scalar_from_ratio(BigInt::from(num), BigInt::from(den))
    }

    fn scalar_from_ratio(self, num: BigInt, den: BigInt) -> Result<Scalar> {
        match self {
            FieldTag::Rationals | FieldTag::GaussianRationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let q = Rat::new(num, den);
                Ok(match self {
                    FieldTag::Rationals => Scalar::Rational(q),
                    _ => Scalar::Gaussian(q, Rat::zero()),
                })
            }
            FieldTag::PrimeField(p) => {
                let n = reduce_big(&num, p);
                let d = reduce_big(&den, p);
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Modular(n, p).div_mod(Scalar::Modular(d, p)))
            }
        }
    }

    /// The imaginary unit. Only exists in Q(i).
    pub fn imaginary_unit(self) -> Option<Scalar> {
        match self {
            FieldTag::GaussianRationals => Some(Scalar::Gaussian(Rat::zero(), Rat::one())),
            _ => None,
        }
    }

    /// All field elements in residue order; `None` for infinite fields.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            FieldTag::PrimeField(p) => Some((0..p.get()).map(move |v| Scalar::Modular(v, p))),
            _ => None,
        }
    }

    pub fn parse(self, text: &str) -> Result<Scalar> {
        parse_scalar(text, self)
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::GaussianRationals => write!(f, "Q(i)"),
            FieldTag::PrimeField(p) => write!(f, "GF({})", p.get()),
        }
    }
}

fn reduce_big(n: &BigInt, p: Prime) -> u32 {
    let m = BigInt::from(p.get());
    let r = ((n % &m) + &m) % &m;
    u32::try_from(r).expect("residue below a u32 modulus")
}

/// An exact field element. Canonical: equal values compare and hash equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rat),
    /// `re + im·i`
    Gaussian(Rat, Rat),
    Modular(u32, Prime),
}

impl Scalar {
    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rationals,
            Scalar::Gaussian(..) => FieldTag::GaussianRationals,
            Scalar::Modular(_, p) => FieldTag::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gaussian(re, im) => re.is_zero() && im.is_zero(),
            Scalar::Modular(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Gaussian(re, im) => re.is_one() && im.is_zero(),
            Scalar::Modular(v, _) => *v == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Gaussian(re, im) => {
                let norm = re * re + im * im;
                Scalar::Gaussian(re / &norm, -(im / &norm))
            }
            Scalar::Modular(v, p) => Scalar::Modular(mod_inverse(*v, p.get()), *p),
        })
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => Scalar::Gaussian(a + c, b + d),
            (Scalar::Modular(a, p), Scalar::Modular(b, _)) => {
                Scalar::Modular(((*a as u64 + *b as u64) % p.get() as u64) as u32, *p)
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => {
                Scalar::Gaussian(a * c - b * d, a * d + b * c)
            }
            (Scalar::Modular(a, p), Scalar::Modular(b, _)) => {
                Scalar::Modular(((*a as u64 * *b as u64) % p.get() as u64) as u32, *p)
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(-re, -im),
            Scalar::Modular(v, p) => Scalar::Modular((p.get() - v) % p.get(), *p),
        }
    }

    fn div_mod(self, other: Scalar) -> Scalar {
        self.mul_unchecked(&other.inv().expect("nonzero divisor"))
    }
}

fn mod_inverse(v: u32, p: u32) -> u32 {
    let (mut old_r, mut r) = (v as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i64) as u32
}

// Operators panic on field mismatch or division by zero; the `checked_*`
// methods are the fallible forms. Matrix code validates fields up front.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_unchecked(b));
forward_binop!(Sub, sub, |a, b| a.add_unchecked(&b.neg_ref()));
forward_binop!(Mul, mul, |a, b| a.mul_unchecked(b));
forward_binop!(Div, div, |a, b| a
    .mul_unchecked(&b.inv().expect("division by zero")));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

fn fmt_rational(q: &Rat) -> String {
    q.to_string()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&fmt_rational(q)),
            Scalar::Modular(v, _) => write!(f, "{v}"),
            Scalar::Gaussian(re, im) => {
                if im.is_zero() {
                    return f.write_str(&fmt_rational(re));
                }
                let coeff = if im.abs().is_one() {
                    String::new()
                } else {
                    fmt_rational(&im.abs())
                };
                let sign = if im.is_negative() { "-" } else { "+" };
                if re.is_zero() {
                    let sign = if im.is_negative() { "-" } else { "" };
                    write!(f, "{sign}{coeff}i")
                } else {
                    write!(f, "{}{sign}{coeff}i", fmt_rational(re))
                }
            }
        }
    }
}

fn parse_error(text: &str, field: FieldTag, reason: &'static str) -> Error {
    Error::Parse {
        text: text.to_string(),
        field,
        reason,
    }
}

/// Parses `["-"] digits ["/" digits]` into a numerator/denominator pair.
/// `allow_empty` accepts "", "+" and "-" as ±1 (the coefficient of a bare `i`).
fn parse_ratio(
    body: &str,
    text: &str,
    field: FieldTag,
    allow_empty: bool,
) -> Result<(BigInt, BigInt)> {
    let (negative, rest) = match body.as_bytes().first() {
        Some(b'-') => (true, &body[1..]),
        Some(b'+') if allow_empty => (false, &body[1..]),
        _ => (false, body),
    };
    if rest.is_empty() {
        if allow_empty {
            let one = if negative { -1 } else { 1 };
            return Ok((BigInt::from(one), BigInt::one()));
        }
        return Err(parse_error(text, field, "missing digits"));
    }
    let (num, den) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(text, field, "expected decimal digits"));
        }
        Ok(BigInt::from_str(s).expect("validated digits"))
    };
    let mut n = digits(num)?;
    let d = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(parse_error(text, field, "zero denominator"));
    }
    if negative {
        n = -n;
    }
    Ok((n, d))
}

/// Parses one matrix entry in the field's grammar and returns it canonicalized.
pub fn parse_scalar(text: &str, field: FieldTag) -> Result<Scalar> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_error(text, field, "empty entry"));
    }
    match field {
        FieldTag::Rationals => {
            let (n, d) = parse_ratio(&compact, text, field, false)?;
            Ok(Scalar::Rational(Rat::new(n, d)))
        }
        FieldTag::PrimeField(p) => {
            let (n, d) = parse_ratio(&compact, text, field, false)?;
            let d = reduce_big(&d, p);
            if d == 0 {
                return Err(parse_error(text, field, "denominator vanishes mod p"));
            }
            Ok(Scalar::Modular(reduce_big(&n, p), p).div_mod(Scalar::Modular(d, p)))
        }
        FieldTag::GaussianRationals => {
            let Some(body) = compact.strip_suffix('i') else {
                let (n, d) = parse_ratio(&compact, text, field, false)?;
                return Ok(Scalar::Gaussian(Rat::new(n, d), Rat::zero()));
            };
            // The imaginary part starts at the last sign that is not leading.
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(idx, _)| idx)
                .last();
            let (re, im) = match split {
                Some(idx) => (&body[..idx], &body[idx..]),
                None => ("", body),
            };
            let re = if re.is_empty() {
                Rat::zero()
            } else {
                let (n, d) = parse_ratio(re, text, field, false)?;
                Rat::new(n, d)
            };
            let (n, d) = parse_ratio(im, text, field, true)?;
            Ok(Scalar::Gaussian(re, Rat::new(n, d)))
        }
    }
}
