//! Exact scalars: reduced rationals and Gaussian rationals `a + b·i`.
//!
//! Text syntax is `p/q` (or a bare integer `p`) for rationals and
//! `p/q+r/s*i` for Gaussian rationals; `i` alone is the imaginary unit and
//! `r/s*i` a purely imaginary value.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FieldError;

/// An exact rational number, always stored in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Rational, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Result<Rational, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        (0..exp).fold(Rational::one(), |acc, _| &acc * self)
    }

    /// Lossy conversion, for diagnostics and floating-point cross-checks only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Rational, FieldError> {
        let bad = || FieldError::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        if num.is_empty() || den.is_empty() || den.starts_with(['+', '-']) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Rational::from_big(num, den)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    /// Panics on a zero divisor; use [`Rational::checked_div`] for a recoverable error.
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// An element `re + im·i` of the Gaussian rationals ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> GaussianRational {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_ints(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from(re), Rational::from(im))
    }

    /// `(a/b) + (c/d)·i`.
    pub fn from_fracs(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(Rational::new(a, b), Rational::new(c, d))
    }

    pub fn zero() -> GaussianRational {
        GaussianRational::default()
    }

    pub fn one() -> GaussianRational {
        GaussianRational::real(Rational::one())
    }

    pub fn i() -> GaussianRational {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `|x|² = x·conj(x)`, as a rational.
    pub fn modulus_squared(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<GaussianRational, FieldError> {
        let m = self.modulus_squared().inv()?;
        Ok(GaussianRational::new(&self.re * &m, -(&self.im * &m)))
    }

    pub fn checked_div(&self, other: &GaussianRational) -> Result<GaussianRational, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> GaussianRational {
        GaussianRational::new(&self.re * r, &self.im * r)
    }

    pub fn pow(&self, exp: u32) -> GaussianRational {
        (0..exp).fold(GaussianRational::one(), |acc, _| &acc * self)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> GaussianRational {
        GaussianRational::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> GaussianRational {
        GaussianRational::real(Rational::from(n))
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        GaussianRational::new(re, im)
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on a zero divisor; use [`GaussianRational::checked_div`] for a recoverable error.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("gaussian rational division by zero")
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re = &self.re + &rhs.re;
        self.im = &self.im + &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re = &self.re - &rhs.re;
        self.im = &self.im - &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}*i", self.re, self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<GaussianRational, FieldError> {
        let bad = || FieldError::Parse(s.to_string());
        if s == "i" {
            return Ok(GaussianRational::i());
        }
        if s == "-i" {
            return Ok(-GaussianRational::i());
        }
        let Some(body) = s.strip_suffix("*i") else {
            return Ok(GaussianRational::real(s.parse()?));
        };
        // Split `re±im` at the first sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i);
        match split {
            None => Ok(GaussianRational::new(Rational::zero(), body.parse()?)),
            Some(pos) => {
                let re: Rational = body[..pos].parse()?;
                let im_text = &body[pos..];
                // `+-r/s` is accepted as well as `-r/s`.
                let im_text = im_text.strip_prefix('+').unwrap_or(im_text);
                if im_text.is_empty() {
                    return Err(bad());
                }
                let im: Rational = im_text.parse()?;
                Ok(GaussianRational::new(re, im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn product_of_conjugates_is_modulus() {
        assert_eq!(&g("1+1*i") * &g("1-1*i"), g("2"));
    }

    #[test]
    fn inverse_of_imaginary() {
        assert_eq!(g("2*i").inv().unwrap(), g("-1/2*i"));
    }

    #[test]
    fn alpha_at_small_t22() {
        // 1 / (1 - |t22|^2) at t22 = 1/2
        let t22 = g("1/2");
        let denom = &GaussianRational::one() - &GaussianRational::real(t22.modulus_squared());
        let alpha = GaussianRational::one().checked_div(&denom).unwrap();
        assert_eq!(alpha, g("4/3"));
        assert!((&alpha * &denom).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            GaussianRational::one().checked_div(&GaussianRational::zero()),
            Err(FieldError::DivisionByZero)
        );
        assert!(Rational::zero().inv().is_err());
    }

    #[test]
    fn conj_and_modulus() {
        assert_eq!(g("3/2-1*i").conj(), g("3/2+1*i"));
        assert_eq!(g("1/2+1/2*i").modulus_squared(), Rational::new(1, 2));
    }

    #[test]
    fn reduction_is_canonical() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!("2/4".parse::<Rational>().unwrap(), "1/2".parse().unwrap());
        assert_eq!(Rational::new(0, 7).denom(), &BigInt::from(1));
        assert_eq!(Rational::new(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn text_forms() {
        assert_eq!(g("i"), GaussianRational::from_ints(0, 1));
        assert_eq!(g("0/1+1/1*i"), GaussianRational::i());
        assert_eq!(g("1/2+-1/3*i"), GaussianRational::from_fracs(1, 2, -1, 3));
        assert_eq!(g("-1/2-1/3*i"), GaussianRational::from_fracs(-1, 2, -1, 3));
        assert_eq!(g("-5"), GaussianRational::from(-5));
        for s in ["7/3", "-1/2*i", "1/2+3*i", "-4-1/9*i", "0"] {
            assert_eq!(g(s).to_string(), s);
        }
        for s in ["", "1/", "/2", "1/2+*i", "abc", "1/-2"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s}");
        }
    }
}
