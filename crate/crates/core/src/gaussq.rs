//! Exact arithmetic in the Gaussian rationals Q(i).
//!
//! Every classifier in this crate works over Q(i) as a computable stand-in
//! for the complex numbers. A value is stored as `(a + b i) / d` with
//! integers `a, b, d`, `d > 0` and `gcd(a, b, d) = 1`, so structural
//! equality is field equality and a product needs a single normalization.
//!
//! The text format is `p/q` for rationals (the denominator is omitted when it
//! is 1) and `a+b*i` / `a-b*i` when the imaginary part is nonzero, e.g.
//! `-1/2+3/4*i`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl GaussianRational {
    /// Normalizes `(a + b i) / d`; `d != 0`.
    fn reduced(mut a: BigInt, mut b: BigInt, mut d: BigInt) -> Self {
        debug_assert!(!d.is_zero());
        if d.is_negative() {
            a = -a;
            b = -b;
            d = -d;
        }
        if d.is_one() {
            return GaussianRational { a, b, d };
        }
        // Word-sized fast path; values stay small in most workloads.
        if let (Some(a0), Some(b0), Some(d0)) = (a.to_i128(), b.to_i128(), d.to_i128()) {
            let g = d0
                .unsigned_abs()
                .gcd(&a0.unsigned_abs())
                .gcd(&b0.unsigned_abs()) as i128;
            return if g == 1 {
                GaussianRational { a, b, d }
            } else {
                GaussianRational {
                    a: (a0 / g).into(),
                    b: (b0 / g).into(),
                    d: (d0 / g).into(),
                }
            };
        }
        {
            let mut g = d.gcd(&a);
            if !g.is_one() {
                g = g.gcd(&b);
                if !g.is_one() {
                    a /= &g;
                    b /= &g;
                    d /= &g;
                }
            }
        }
        GaussianRational { a, b, d }
    }

    /// `(a, b, d)` as machine integers when all three fit in an `i64`.
    fn small(&self) -> Option<(i128, i128, i128)> {
        Some((
            self.a.to_i64()? as i128,
            self.b.to_i64()? as i128,
            self.d.to_i64()? as i128,
        ))
    }

    fn reduced_small(a: i128, b: i128, d: i128) -> Self {
        let g = d
            .unsigned_abs()
            .gcd(&a.unsigned_abs())
            .gcd(&b.unsigned_abs()) as i128;
        let g = if d < 0 { -g } else { g };
        GaussianRational {
            a: (a / g).into(),
            b: (b / g).into(),
            d: (d / g).into(),
        }
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        let (ra, rd) = re.into_raw();
        let (ia, id) = im.into_raw();
        if rd == id {
            return Self::reduced(ra, ia, rd);
        }
        Self::reduced(ra * &id, ia * &rd, rd * id)
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            a: n.into(),
            b: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `num/den` as a real element. Panics if `den == 0`.
    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::reduced(num.into(), BigInt::zero(), den.into())
    }

    /// `(a/b) + (c/d) i`. Panics on zero denominators.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            Rational::new(a.into(), b.into()),
            Rational::new(c.into(), d.into()),
        )
    }

    pub fn i() -> Self {
        GaussianRational {
            a: BigInt::zero(),
            b: BigInt::one(),
            d: BigInt::one(),
        }
    }

    pub fn re(&self) -> Rational {
        Rational::new(self.a.clone(), self.d.clone())
    }

    pub fn im(&self) -> Rational {
        Rational::new(self.b.clone(), self.d.clone())
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// |z|^2 = re^2 + im^2.
    pub fn norm_sqr(&self) -> Rational {
        Rational::new(&self.a * &self.a + &self.b * &self.b, &self.d * &self.d)
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = &self.a * &self.a + &self.b * &self.b;
        Some(Self::reduced(&self.d * &self.a, -(&self.d * &self.b), n))
    }

    /// Panics on zero.
    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero")
    }

    /// Integer power; negative exponents invert. Panics on `0^k`, `k < 0`.
    pub fn powi(&self, k: i32) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one() && self.d.is_one()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        let (a, d) = r.into_raw();
        GaussianRational {
            a,
            b: BigInt::zero(),
            d,
        }
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $imp<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $imp<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $imp<&'b GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

fn add_sub(x: &GaussianRational, y: &GaussianRational, negate: bool) -> GaussianRational {
    let (ya, yb) = if negate {
        (-&y.a, -&y.b)
    } else {
        (y.a.clone(), y.b.clone())
    };
    if let (Some((xa, xb, xd)), Some((ya, yb, yd))) = (x.small(), y.small()) {
        let (ya, yb) = if negate { (-ya, -yb) } else { (ya, yb) };
        // each product is below 2^126, so the sums cannot overflow
        return GaussianRational::reduced_small(xa * yd + ya * xd, xb * yd + yb * xd, xd * yd);
    }
    if x.d == y.d {
        return GaussianRational::reduced(&x.a + ya, &x.b + yb, x.d.clone());
    }
    GaussianRational::reduced(
        &x.a * &y.d + ya * &x.d,
        &x.b * &y.d + yb * &x.d,
        &x.d * &y.d,
    )
}

forward_binop!(Add, add, |x, y| add_sub(x, y, false));
forward_binop!(Sub, sub, |x, y| add_sub(x, y, true));
forward_binop!(Mul, mul, |x, y| {
    if x.is_zero() || y.is_zero() {
        return GaussianRational::zero();
    }
    if let (Some((xa, xb, xd)), Some((ya, yb, yd))) = (x.small(), y.small()) {
        return GaussianRational::reduced_small(xa * ya - xb * yb, xa * yb + xb * ya, xd * yd);
    }
    if x.b.is_zero() && y.b.is_zero() {
        return GaussianRational::reduced(&x.a * &y.a, BigInt::zero(), &x.d * &y.d);
    }
    GaussianRational::reduced(
        &x.a * &y.a - &x.b * &y.b,
        &x.a * &y.b + &x.b * &y.a,
        &x.d * &y.d,
    )
});
// (xa + xb i)/xd * yd (ya - yb i) / (ya^2 + yb^2); division by zero panics.
forward_binop!(Div, div, |x, y| {
    assert!(!y.is_zero(), "division by zero");
    if x.is_zero() {
        return GaussianRational::zero();
    }
    if y.b.is_zero() {
        return GaussianRational::reduced(&x.a * &y.d, &x.b * &y.d, &x.d * &y.a);
    }
    let n = &y.a * &y.a + &y.b * &y.b;
    GaussianRational::reduced(
        (&x.a * &y.a + &x.b * &y.b) * &y.d,
        (&x.b * &y.a - &x.a * &y.b) * &y.d,
        &x.d * n,
    )
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// The involution a -> -1 - a.
pub fn flat(a: &GaussianRational) -> GaussianRational {
    -GaussianRational::one() - a
}

/// Membership in the fundamental domain of `flat`: re(a) > -1/2, or
/// re(a) = -1/2 and im(a) >= 0.
pub fn in_k_flat(a: &GaussianRational) -> bool {
    // re(a) + 1/2 has the sign of 2 a.a + a.d
    let s = BigInt::from(2) * &a.a + &a.d;
    s.is_positive() || (s.is_zero() && !a.b.is_negative())
}

/// Representative of `{a, flat(a)}` inside the fundamental domain.
pub fn kflat_rep(a: &GaussianRational) -> GaussianRational {
    if in_k_flat(a) {
        a.clone()
    } else {
        flat(a)
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re(), f)?;
        if self.b.is_zero() {
            return Ok(());
        }
        if self.b.is_negative() {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        fmt_rational(&self.im().abs(), f)?;
        write!(f, "*i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    if num.is_empty() || num.trim_start_matches(['+', '-']).is_empty() {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = match den {
        Some(d) => {
            if !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                return Err(bad());
            }
            BigInt::from_str(d).map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

// Coefficient of `i`: "", "+", "-" stand for 1, 1, -1; a trailing '*' is
// allowed before the unit.
fn parse_imag_coeff(s: &str) -> Result<Rational> {
    let s = s.strip_suffix('*').unwrap_or(s);
    match s {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        _ => {
            let (sign, body) = match s.as_bytes()[0] {
                b'+' => (1, &s[1..]),
                b'-' => (-1, &s[1..]),
                _ => (1, s),
            };
            let r = parse_rational(body)?;
            Ok(if sign < 0 { -r } else { r })
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(parse_rational(&compact)?.into());
        };
        // The sign separating real and imaginary parts is the last '+'/'-'
        // that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => Ok(Self::new(
                parse_rational(&body[..k])?,
                parse_imag_coeff(&body[k..])?,
            )),
            None => Ok(Self::new(Rational::zero(), parse_imag_coeff(body)?)),
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}

/// Accepts the text format or a bare JSON integer.
struct ScalarVisitor;

impl serde::de::Visitor<'_> for ScalarVisitor {
    type Value = GaussianRational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a Gaussian rational such as \"3/4-2*i\" or an integer")
    }

    fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
        Ok(GaussianRational::from_int(v))
    }

    fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
        Ok(Rational::from_integer(v.into()).into())
    }
}
