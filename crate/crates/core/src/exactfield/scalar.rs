use std::fmt;

use super::chart::Chart;
use super::gaussian::GQ;
use super::poly::{write_poly, Poly};
use super::ExactError;

/// Element of the fraction field `Q(i)(x_1, …, x_m)`.
///
/// Canonical form: `gcd(num, den) = 1`, the graded-lex leading coefficient
/// of `den` is 1, and zero is `0/1`. Structural equality is therefore
/// semantic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

/// `(a, b)` with their common factor removed.
fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if b.is_constant() || a.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_constant() {
        return (a.clone(), b.clone());
    }
    (
        a.div_exact(&g).expect("gcd divides"),
        b.div_exact(&g).expect("gcd divides"),
    )
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::constant(GQ::one())
    }

    pub fn constant(c: GQ) -> Self {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(GQ::from_int(n))
    }

    pub fn ratio(a: i64, b: i64) -> Self {
        Scalar::constant(GQ::from_ratio(a, b))
    }

    pub fn i() -> Self {
        Scalar::constant(GQ::i())
    }

    pub fn var(v: usize) -> Self {
        Scalar::from_poly(Poly::var(v))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.constant_value() {
            let inv = c.inv().expect("nonzero denominator");
            return Scalar {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        if g.is_constant() {
            return Self::normalized(num, den);
        }
        Self::normalized(
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    }

    /// Like `canonical` for a numerator and denominator already known to be
    /// coprime: only the leading coefficient of the denominator is fixed.
    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let lc = den
            .leading()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        if lc.is_one() {
            return Scalar { num, den };
        }
        let inv = lc.inv().expect("nonzero denominator");
        Scalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<GQ> {
        if self.den.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::canonical(self.num.add(&o.num), self.den.clone());
        }
        // Both operands are reduced, so only the common factor of the
        // denominators can cancel.
        let g = self.den.gcd(&o.den);
        if g.is_constant() {
            return Self::normalized(
                self.num.mul(&o.den).add(&o.num.mul(&self.den)),
                self.den.mul(&o.den),
            );
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides denominator");
        let d2 = o.den.div_exact(&g).expect("gcd divides denominator");
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        if num.is_zero() {
            return Scalar::zero();
        }
        let h = num.gcd(&g);
        if h.is_constant() {
            return Self::normalized(num, d1.mul(&o.den));
        }
        Self::normalized(
            num.div_exact(&h).expect("gcd divides numerator"),
            d1.mul(&o.den.div_exact(&h).expect("gcd divides denominator")),
        )
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_constant() && o.den.is_constant() {
            return Scalar {
                num: self.num.mul(&o.num),
                den: Poly::one(),
            };
        }
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, c: &GQ) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ExactError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(Self::normalized(base.num.pow(k), base.den.pow(k)))
    }

    /// Formal partial derivative in chart symbol `v`, every symbol
    /// (conjugates included) treated as independent.
    pub fn derivative(&self, v: usize) -> Scalar {
        if self.den.is_constant() {
            return Scalar {
                num: self.num.derivative(v),
                den: self.den.clone(),
            };
        }
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return Self::canonical(dn, self.den.clone());
        }
        Self::canonical(
            dn.mul(&self.den).sub(&self.num.mul(&dd)),
            self.den.mul(&self.den),
        )
    }

    /// Checked derivative by symbol name.
    pub fn differentiate(&self, chart: &Chart, symbol: &str) -> Result<Scalar, ExactError> {
        Ok(self.derivative(chart.index_of(symbol)?))
    }

    /// `i ↦ -i` on coefficients and the chart involution on symbols.
    pub fn conjugate(&self, chart: &Chart) -> Scalar {
        Self::normalized(self.num.conj(chart), self.den.conj(chart))
    }

    /// Value at a point; `None` where the denominator vanishes.
    pub fn eval(&self, point: &[GQ]) -> Option<GQ> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(point) / &d)
    }

    /// Canonical text, parseable by [`super::parse_scalar`].
    pub fn to_text(&self, chart: &Chart) -> String {
        let mut s = String::new();
        let paren = |p: &Poly| !p.is_monomial();
        if self.den.is_constant() {
            write_poly(&self.num, chart, &mut s).unwrap();
            return s;
        }
        let mut n = String::new();
        write_poly(&self.num, chart, &mut n).unwrap();
        let mut d = String::new();
        write_poly(&self.den, chart, &mut d).unwrap();
        if paren(&self.num) {
            s.push_str(&format!("({n})"));
        } else {
            s.push_str(&n);
        }
        s.push('/');
        if paren(&self.den) || d.contains('*') {
            s.push_str(&format!("({d})"));
        } else {
            s.push_str(&d);
        }
        s
    }

    /// Pivot complexity used by elimination: 0 for nonzero constants.
    pub(crate) fn weight(&self) -> usize {
        if self.is_constant() {
            0
        } else {
            self.num.num_terms() + self.den.num_terms() + self.num.total_degree() as usize
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl From<GQ> for Scalar {
    fn from(c: GQ) -> Self {
        Scalar::constant(c)
    }
}
