use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::chart::Chart;
use super::gaussian::GQ;

/// Exponent vector with trailing zeros trimmed, so the same monomial has
/// one representation regardless of chart size.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize, e: u32) -> Self {
        let mut x = vec![0; v + 1];
        x[v] = e;
        Monomial(x).trimmed()
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let len = self.0.len().max(o.0.len());
        Monomial((0..len).map(|i| self.exp(i) + o.exp(i)).collect())
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if o.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, &e) in o.0.iter().enumerate() {
            if out[i] < e {
                return None;
            }
            out[i] -= e;
        }
        Some(Monomial(out).trimmed())
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let len = self.0.len().min(o.0.len());
        Monomial((0..len).map(|i| self.0[i].min(o.0[i])).collect()).trimmed()
    }

    fn with_exp(&self, v: usize, e: u32) -> Monomial {
        let mut x = self.0.clone();
        if x.len() <= v {
            x.resize(v + 1, 0);
        }
        x[v] = e;
        Monomial(x).trimmed()
    }

    /// Largest variable index with a nonzero exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic, earlier symbols dominate.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let len = self.0.len().max(o.0.len());
            for i in 0..len {
                match self.exp(i).cmp(&o.exp(i)) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Multivariate polynomial over the Gaussian rationals. Zero coefficients
/// are never stored; terms are kept in ascending graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GQ>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GQ::one())
    }

    pub fn constant(c: GQ) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: GQ, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(v: usize) -> Self {
        Self::term(GQ::one(), Monomial::var(v, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<GQ> {
        match self.terms.len() {
            0 => Some(GQ::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GQ)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &GQ)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: GQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &GQ) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &GQ, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative in variable `v`.
    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * &GQ::from_int(e as i64));
            }
        }
        out
    }

    /// Conjugation through the chart involution; coefficients get `i ↦ -i`.
    pub fn conj(&self, chart: &Chart) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; chart.len().max(m.exponents().len())];
            let mut sign = 1i32;
            for (a, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (b, s) = chart.conj_of(a);
                exps[b] += e;
                if s < 0 && e % 2 == 1 {
                    sign = -sign;
                }
            }
            let c = if sign < 0 { -c.conj() } else { c.conj() };
            out.add_term(Monomial::from_exponents(exps), c);
        }
        out
    }

    pub fn eval(&self, point: &[GQ]) -> GQ {
        let mut acc = GQ::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let x = point.get(v).cloned().unwrap_or_else(GQ::zero);
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Replace variable `v` by the polynomial `value`.
    pub fn substitute(&self, v: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        let mut powers: Vec<Poly> = vec![Poly::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let rest = m.with_exp(v, 0);
            out = out.add(&powers[e].mul_term(c, &rest));
        }
        out
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::last_var).max()
    }

    /// Coefficients of `self` viewed as a polynomial in `v`; entry `k`
    /// multiplies `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        if let Some(c) = d.constant_value() {
            let inv = c.inv()?;
            return Some(self.scale(&inv));
        }
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc * &dinv;
            rem = rem.sub(&d.mul_term(&qc, &qm));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().unwrap()),
            _ => self.clone(),
        }
    }

    fn monomial_gcd(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return Poly::one();
        }
        if self.is_monomial() || o.is_monomial() {
            let m = self.monomial_gcd().gcd(&o.monomial_gcd());
            return Poly::term(GQ::one(), m);
        }
        if provably_coprime(self, o) {
            return Poly::one();
        }
        gcd_rec(self, o).monic()
    }

    /// Pseudo-remainder `lc(b)^(deg a − deg b + 1)·a mod b` in variable `v`.
    fn prem(&self, b: &Poly, v: usize) -> Poly {
        let da = self.degree_in(v);
        let db = b.degree_in(v);
        if da < db {
            return self.clone();
        }
        let lb = b.coeffs_in(v)[db as usize].clone();
        let mut r = self.clone();
        let mut steps = 0;
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.coeffs_in(v)[dr as usize].clone();
            let shift = Monomial::var(v, dr - db);
            r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&GQ::one(), &shift));
            steps += 1;
        }
        r.mul(&lb.pow(da - db + 1 - steps))
    }

    fn leading_in(&self, v: usize) -> Poly {
        self.coeffs_in(v).pop().unwrap_or_else(Poly::zero)
    }
}

/// Content of `p` with respect to `v`: gcd of its coefficients in `v`.
fn content_in(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic() } else { g.gcd(&c) };
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn primitive_in(p: &Poly, v: usize) -> Poly {
    let c = content_in(p, v);
    if c.is_constant() {
        p.clone()
    } else {
        p.div_exact(&c).expect("content divides polynomial")
    }
}

/// `a` and `b` restricted to the line through a fixed point along `v`,
/// as dense coefficient vectors in `v`.
fn image_in(p: &Poly, v: usize, point: &[GQ]) -> Vec<GQ> {
    let mut out = vec![GQ::zero(); p.degree_in(v) as usize + 1];
    for (m, c) in &p.terms {
        let mut t = c.clone();
        for (u, &e) in m.exponents().iter().enumerate() {
            if u != v && e > 0 {
                t = &t * &point[u].pow(e);
            }
        }
        out[m.exp(v) as usize] += &t;
    }
    out
}

/// Euclid over the Gaussian rationals; degree of the univariate gcd.
fn univariate_gcd_degree(mut a: Vec<GQ>, mut b: Vec<GQ>) -> usize {
    let trim = |x: &mut Vec<GQ>| {
        while x.last().is_some_and(GQ::is_zero) {
            x.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb = b.last().unwrap().inv().expect("trimmed");
        while a.len() >= b.len() {
            let f = &a[a.len() - 1] * &lb;
            let shift = a.len() - b.len();
            for (k, y) in b.iter().enumerate() {
                let t = &f * y;
                a[shift + k] -= &t;
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when `gcd(a, b)` provably has degree zero in `v`: at a point where
/// neither leading coefficient in `v` vanishes, the degree of the gcd of the
/// images bounds the degree of the true gcd.
fn coprime_image(a: &Poly, b: &Poly, v: usize) -> bool {
    let n = a.max_var().max(b.max_var()).map_or(0, |x| x + 1);
    for attempt in 0..3u64 {
        let point: Vec<GQ> = (0..n as u64)
            .map(|u| GQ::from_int(((u * 7 + attempt * 13 + 3) % 17) as i64 + 2))
            .collect();
        let ia = image_in(a, v, &point);
        let ib = image_in(b, v, &point);
        if ia.last().is_some_and(GQ::is_zero) || ib.last().is_some_and(GQ::is_zero) {
            continue;
        }
        return univariate_gcd_degree(ia, ib) == 0;
    }
    false
}

/// A common factor can only involve symbols present in both inputs, and
/// must have degree zero in each of them when every image test passes.
fn provably_coprime(a: &Poly, b: &Poly) -> bool {
    let n = a.max_var().max(b.max_var()).map_or(0, |x| x + 1);
    (0..n)
        .filter(|&v| a.contains_var(v) && b.contains_var(v))
        .all(|v| coprime_image(a, b, v))
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    let v = match (a.max_var(), b.max_var()) {
        (Some(x), Some(y)) => x.max(y),
        _ => return Poly::one(),
    };
    if !a.contains_var(v) {
        return a.gcd(&content_in(b, v));
    }
    if !b.contains_var(v) {
        return b.gcd(&content_in(a, v));
    }
    if coprime_image(a, b, v) {
        return content_in(a, v).gcd(&content_in(b, v));
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = ca.gcd(&cb);
    let mut p = primitive_in(a, v);
    let mut q = primitive_in(b, v);
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    if p.div_exact(&q).is_some() {
        return q.mul(&c);
    }
    // Subresultant remainder sequence.
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let d = p.degree_in(v) - q.degree_in(v);
        let r = p.prem(&q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return c;
        }
        p = q;
        q = r
            .div_exact(&g.mul(&h.pow(d)))
            .expect("subresultant quotient is exact");
        g = p.leading_in(v);
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant quotient is exact"),
        };
    }
    let p = q;
    let g = if p.degree_in(v) == 0 {
        Poly::one()
    } else {
        primitive_in(&p, v)
    };
    g.mul(&c)
}

impl Ord for Poly {
    fn cmp(&self, o: &Self) -> Ordering {
        self.terms.iter().rev().cmp(o.terms.iter().rev())
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Writes a polynomial in the canonical text form using symbol names from
/// `chart`, leading term first.
pub fn write_poly(p: &Poly, chart: &Chart, f: &mut impl fmt::Write) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative_simple();
        let mag = if negative { -c } else { c.clone() };
        if idx == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || m.is_one() {
            factors.push(mag.to_string());
        }
        for (v, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(chart.name(v).to_string()),
                _ => factors.push(format!("{}^{}", chart.name(v), e)),
            }
        }
        write!(f, "{}", factors.join("*"))?;
    }
    Ok(())
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .rev()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else {
                    format!("{c}*x^{:?}", m.exponents())
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize) -> Poly {
        Poly::var(v)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(GQ::from_int(n))
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::var(0, 1);
        let b = Monomial::var(1, 2);
        assert!(b > a);
        assert!(Monomial::var(0, 2) > Monomial::var(0, 1).mul(&Monomial::var(1, 1)));
        assert!(Monomial::var(0, 1) > Monomial::var(1, 1));
    }

    #[test]
    fn gcd_of_products() {
        let f = x(0).add(&x(1)).mul(&x(2).sub(&c(3)));
        let g = x(0).add(&x(1)).mul(&x(0).sub(&x(2)));
        assert_eq!(f.gcd(&g), x(0).add(&x(1)));
        let h = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(h.gcd(&x(0).sub(&x(1))), x(0).sub(&x(1)));
        assert_eq!(x(0).gcd(&x(1)), Poly::one());
    }

    #[test]
    fn gcd_with_gaussian_coefficients() {
        let i = Poly::constant(GQ::i());
        let p = x(0).add(&i.mul(&x(1)));
        let f = p.mul(&p).mul(&x(2).add(&c(1)));
        let g = p.mul(&x(2).sub(&c(1))).mul(&x(1));
        assert_eq!(f.gcd(&g), p.monic());
    }

    #[test]
    fn exact_division() {
        let p = x(0).add(&c(2)).mul(&x(1).sub(&x(0)));
        assert_eq!(p.div_exact(&x(0).add(&c(2))).unwrap(), x(1).sub(&x(0)));
        assert!(p.div_exact(&x(2)).is_none());
    }

    #[test]
    fn substitution_and_derivative() {
        let p = x(0).pow(2).mul(&x(1));
        assert_eq!(p.derivative(0), c(2).mul(&x(0)).mul(&x(1)));
        assert!(p.derivative(2).is_zero());
        let s = p.substitute(0, &x(2).add(&c(1)));
        assert_eq!(s, x(2).add(&c(1)).pow(2).mul(&x(1)));
    }
}
