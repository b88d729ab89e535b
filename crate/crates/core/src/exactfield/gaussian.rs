use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A complex number `re + i·im` with arbitrary-precision rational parts.
///
/// `BigRational` keeps every fraction reduced with a positive denominator,
/// so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

pub type GQ = GaussianRational;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(rat(n), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    /// `a/b + i·c/d`
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            BigRational::new(a.into(), b.into()),
            BigRational::new(c.into(), d.into()),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
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

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|q|² = q·conj(q)`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// `true` for coefficients that print without parentheses.
    pub(crate) fn is_simple(&self) -> bool {
        self.re.is_zero() || self.im.is_zero()
    }

    /// A real or purely imaginary value whose nonzero part is negative.
    pub(crate) fn is_negative_simple(&self) -> bool {
        self.is_simple() && (self.re.is_negative() || (self.re.is_zero() && self.im.is_negative()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn fmt_imag(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_one() {
        write!(f, "i")
    } else if (-r).is_one() {
        write!(f, "-i")
    } else {
        fmt_rational(r, f)?;
        write!(f, "*i")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => fmt_imag(&self.im, f),
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&self.re, f)?;
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                fmt_imag(&self.im, f)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn add(self, o: &GQ) -> GQ {
        GQ::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn sub(self, o: &GQ) -> GQ {
        GQ::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn mul(self, o: &GQ) -> GQ {
        GQ::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn div(self, o: &GQ) -> GQ {
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for &GQ {
    type Output = GQ;
    fn neg(self) -> GQ {
        GQ::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GQ {
    type Output = GQ;
    fn neg(self) -> GQ {
        GQ::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GQ> for GQ {
            type Output = GQ;
            fn $m(self, o: GQ) -> GQ {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GQ> for GQ {
    fn add_assign(&mut self, o: &GQ) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GQ> for GQ {
    fn sub_assign(&mut self, o: &GQ) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

/// Lexicographic on `(re, im)`; used only to give containers a fixed order.
impl Ord for GQ {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.re.cmp(&o.re).then_with(|| self.im.cmp(&o.im))
    }
}

impl PartialOrd for GQ {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl From<i64> for GQ {
    fn from(n: i64) -> Self {
        GQ::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_with_conjugate_is_real() {
        let a = GQ::from_parts(1, 1, 1, 1);
        let b = GQ::from_parts(1, 1, -1, 1);
        assert_eq!(&a * &b, GQ::from_int(2));
        assert!(GQ::from_parts(3, 7, -2, 5).norm_sqr() > BigRational::zero());
    }

    #[test]
    fn fractions_stay_reduced() {
        let q = GQ::from_parts(2, 4, -6, -8);
        assert_eq!(q.re, BigRational::new(1.into(), 2.into()));
        assert_eq!(q.im, BigRational::new(3.into(), 4.into()));
        assert!(q.im.denom().is_positive());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GQ::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(GQ::i().to_string(), "i");
        assert_eq!((-GQ::i()).to_string(), "-i");
        assert_eq!(GQ::from_parts(1, 2, 3, 1).to_string(), "(1/2+3*i)");
        assert_eq!(GQ::from_parts(1, 1, -1, 3).to_string(), "(1-1/3*i)");
    }

    #[test]
    fn inverse_and_division() {
        let q = GQ::from_parts(2, 3, -5, 7);
        assert_eq!(&q * &q.inv().unwrap(), GQ::one());
        assert!(GQ::zero().inv().is_none());
        assert_eq!(GQ::i().pow(2), GQ::from_int(-1));
    }
}
