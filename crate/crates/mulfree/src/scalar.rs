//! Extended-precision real and complex scalars.
//!
//! Every value carries an explicit mantissa width in bits. Binary operations
//! promote to the larger operand precision; nothing silently truncates.
//! Real arithmetic is delegated to MPFR (via `rug`), complex arithmetic is
//! built on top of the real layer so that precision handling stays uniform.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::{Complete, Float, Integer};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Smallest mantissa width the scalar layer accepts.
pub const MIN_PRECISION_BITS: u32 = 64;

/// Mantissa width sufficient for degree-`n` work with time scale `s_mag`:
/// coefficients of the scaled families reach `binom(n, n/2) * e^{s_mag*n/2}`,
/// and the width covers that magnitude with at least 64 guard bits.
///
/// Returns `max(192, ceil(2*(n + s_mag*n/ln 4)) + 64)`.
pub fn required_bits(n: usize, s_mag: f64) -> u32 {
    assert!(s_mag >= 0.0, "time scale magnitude must be nonnegative");
    let ln4 = 2.0 * std::f64::consts::LN_2;
    let raw = (2.0 * (n as f64 + s_mag * n as f64 / ln4)).ceil() + 64.0;
    (raw as u32).max(192)
}

fn clamp_prec(prec: u32) -> u32 {
    prec.max(MIN_PRECISION_BITS)
}

/// Errors from parsing serialized scalars.
#[derive(Debug, thiserror::Error)]
pub enum ScalarError {
    #[error("missing '@precision' suffix in {0:?}")]
    MissingPrecision(String),
    #[error("invalid precision tag in {0:?}")]
    InvalidPrecision(String),
    #[error("precision {0} below the {MIN_PRECISION_BITS}-bit minimum")]
    PrecisionTooSmall(u32),
    #[error("invalid numeric literal {0:?}")]
    InvalidNumber(String),
    #[error("non-finite value {0:?}")]
    NonFinite(String),
}

/// Arbitrary-precision real number with an explicit mantissa width.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct BigReal {
    x: Float,
}

impl BigReal {
    pub fn zero(prec: u32) -> Self {
        BigReal { x: Float::new(clamp_prec(prec)) }
    }

    pub fn one(prec: u32) -> Self {
        BigReal::from_u64(1, prec)
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), v) }
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), v) }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), v) }
    }

    pub fn from_integer(v: &Integer, prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), v) }
    }

    pub fn pi(prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), Constant::Pi) }
    }

    /// 2^exponent, exact.
    pub fn exp2_of(exponent: i32, prec: u32) -> Self {
        let mut x = Float::with_val(clamp_prec(prec), 1);
        x <<= exponent;
        BigReal { x }
    }

    /// 2^x for a real exponent; safe for exponents far outside f64 range
    /// after exponentiation.
    pub fn exp2_from_f64(x: f64, prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), x).exp2() }
    }

    pub fn prec(&self) -> u32 {
        self.x.prec()
    }

    /// Rounded (or exactly extended) copy at the given precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        BigReal { x: Float::with_val(clamp_prec(prec), &self.x) }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite()
    }

    pub fn is_negative(&self) -> bool {
        self.x.is_sign_negative() && !self.x.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.x.to_f64()
    }

    pub fn abs(&self) -> Self {
        BigReal { x: self.x.abs_ref().complete(self.prec()) }
    }

    pub fn sqrt(&self) -> Self {
        BigReal { x: self.x.sqrt_ref().complete(self.prec()) }
    }

    pub fn exp(&self) -> Self {
        BigReal { x: self.x.exp_ref().complete(self.prec()) }
    }

    pub fn ln(&self) -> Self {
        BigReal { x: self.x.ln_ref().complete(self.prec()) }
    }

    /// log2 as f64; -inf for zero. Safe for values far outside f64 range.
    pub fn log2_f64(&self) -> f64 {
        if self.x.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.x.abs_ref().complete(64).log2().to_f64()
    }

    pub fn cos(&self) -> Self {
        BigReal { x: self.x.cos_ref().complete(self.prec()) }
    }

    pub fn sin(&self) -> Self {
        BigReal { x: self.x.sin_ref().complete(self.prec()) }
    }

    /// atan2(self, x): the argument of the point (x, self).
    pub fn atan2(&self, x: &BigReal) -> Self {
        let p = self.prec().max(x.prec());
        BigReal { x: self.x.atan2_ref(&x.x).complete(p) }
    }

    pub fn hypot(&self, other: &BigReal) -> Self {
        let p = self.prec().max(other.prec());
        BigReal { x: self.x.hypot_ref(&other.x).complete(p) }
    }

    pub fn pow_u32(&self, e: u32) -> Self {
        BigReal { x: (&self.x).pow(e).complete(self.prec()) }
    }

    pub fn floor(&self) -> Self {
        BigReal { x: self.x.floor_ref().complete(self.prec()) }
    }

    pub fn max_of(&self, other: &BigReal) -> Self {
        if self.partial_cmp(other) == Some(Ordering::Less) { other.clone() } else { self.clone() }
    }

    /// Decimal serialization tagged with the precision: `"-1.25e3@256"`.
    /// Emits exactly as many digits as round-tripping at the same precision
    /// requires.
    pub fn to_tagged_string(&self) -> String {
        format!("{}@{}", self.to_decimal_string(), self.prec())
    }

    /// Plain decimal form without the precision tag (full digits).
    pub fn to_decimal_string(&self) -> String {
        self.x.to_string_radix(10, None)
    }

    pub fn parse_tagged(s: &str) -> Result<Self, ScalarError> {
        let (num, prec) = s
            .rsplit_once('@')
            .ok_or_else(|| ScalarError::MissingPrecision(s.to_owned()))?;
        let prec: u32 = prec
            .parse()
            .map_err(|_| ScalarError::InvalidPrecision(s.to_owned()))?;
        if prec < MIN_PRECISION_BITS {
            return Err(ScalarError::PrecisionTooSmall(prec));
        }
        Self::parse_decimal(num, prec)
    }

    pub fn parse_decimal(num: &str, prec: u32) -> Result<Self, ScalarError> {
        let incomplete =
            Float::parse(num).map_err(|_| ScalarError::InvalidNumber(num.to_owned()))?;
        let x = Float::with_val(clamp_prec(prec), incomplete);
        if !x.is_finite() {
            return Err(ScalarError::NonFinite(num.to_owned()));
        }
        Ok(BigReal { x })
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tagged_string())
    }
}

impl Serialize for BigReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_tagged_string())
    }
}

impl<'de> Deserialize<'de> for BigReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BigReal::parse_tagged(&s).map_err(D::Error::custom)
    }
}

macro_rules! bigreal_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let p = self.prec().max(rhs.prec());
                BigReal { x: (&self.x).$method(&rhs.x).complete(p) }
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
    };
}

bigreal_binop!(Add, add);
bigreal_binop!(Sub, sub);
bigreal_binop!(Mul, mul);
bigreal_binop!(Div, div);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { x: (-&self.x).complete(self.prec()) }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

/// Arbitrary-precision complex number; real and imaginary parts share one
/// mantissa width.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    re: BigReal,
    im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        let p = re.prec().max(im.prec());
        BigComplex { re: re.with_prec(p), im: im.with_prec(p) }
    }

    pub fn from_real(re: BigReal) -> Self {
        let im = BigReal::zero(re.prec());
        BigComplex { re, im }
    }

    pub fn from_f64s(re: f64, im: f64, prec: u32) -> Self {
        BigComplex { re: BigReal::from_f64(re, prec), im: BigReal::from_f64(im, prec) }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex { re: BigReal::zero(prec), im: BigReal::zero(prec) }
    }

    pub fn one(prec: u32) -> Self {
        BigComplex { re: BigReal::one(prec), im: BigReal::zero(prec) }
    }

    pub fn re(&self) -> &BigReal {
        &self.re
    }

    pub fn im(&self) -> &BigReal {
        &self.im
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        BigComplex { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, r: &BigReal) -> Self {
        BigComplex { re: &self.re * r, im: &self.im * r }
    }

    pub fn abs(&self) -> BigReal {
        self.re.hypot(&self.im)
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> BigReal {
        self.im.atan2(&self.re)
    }

    pub fn norm_sqr(&self) -> BigReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        BigComplex { re: &self.re / &d, im: &(-&self.im) / &d }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        BigComplex { re: &m * &self.im.cos(), im: &m * &self.im.sin() }
    }

    /// Principal logarithm: `ln|z| + i arg(z)`.
    pub fn ln(&self) -> Self {
        BigComplex { re: self.abs().ln(), im: self.arg() }
    }

    /// Integer power by binary exponentiation. Exact branch handling for
    /// negative reals; `0^0 = 1`.
    pub fn pow_u64(&self, e: u64) -> Self {
        let mut acc = BigComplex::one(self.prec());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power through the principal logarithm: `exp(e * ln z)`.
    /// Requires `z != 0` for `e > 0`; `0^0 = 1`.
    pub fn pow_u64_via_log(&self, e: u64) -> Self {
        if e == 0 {
            return BigComplex::one(self.prec());
        }
        if self.is_zero() {
            return BigComplex::zero(self.prec());
        }
        let e = BigReal::from_u64(e, self.prec());
        self.ln().scale(&e).exp()
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// log2 of the modulus as f64; -inf for zero.
    pub fn abs_log2(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.abs().log2_f64()
    }

    pub fn to_tagged_pair(&self) -> (String, String) {
        (self.re.to_tagged_string(), self.im.to_tagged_string())
    }

    pub fn parse_tagged_pair(re: &str, im: &str) -> Result<Self, ScalarError> {
        Ok(BigComplex::new(BigReal::parse_tagged(re)?, BigReal::parse_tagged(im)?))
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.re.to_tagged_string(), self.im.to_tagged_string())
    }
}

impl Serialize for BigComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (re, im) = self.to_tagged_pair();
        (re, im).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BigComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (re, im) = <(String, String)>::deserialize(deserializer)?;
        BigComplex::parse_tagged_pair(&re, &im).map_err(D::Error::custom)
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        BigComplex { re, im }
    }
}

impl Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let d = rhs.norm_sqr();
        let re = &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &d;
        let im = &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &d;
        BigComplex { re, im }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

macro_rules! bigcomplex_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                (&self).$method(rhs)
            }
        }
    };
}

bigcomplex_owned_binop!(Add, add);
bigcomplex_owned_binop!(Sub, sub);
bigcomplex_owned_binop!(Mul, mul);
bigcomplex_owned_binop!(Div, div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

/// Exact binomial coefficient.
pub(crate) fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::binomial_u(n as u32, k as u32).complete()
}
