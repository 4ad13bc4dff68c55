//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Every polynomial lives over the fixed variable universe `x > y > t > s`.
//! The first two are the curve coordinates, the last two the family
//! parameters. Front-ends that use other names map them onto these slots.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

pub const NVARS: usize = 4;

/// Exponent vector, indexed by [`Var`].
pub type Exponents = [u32; NVARS];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    T = 2,
    S = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::T, Var::S];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::T => "t",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A polynomial in `Z[x, y, t, s]`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

fn exps_of(v: Var, k: u32) -> Exponents {
    let mut e = [0; NVARS];
    e[v.index()] = k;
    e
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(exps_of(v, 1), 1)
    }

    pub fn monomial<T: Into<BigInt>>(e: Exponents, c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I, T>(it: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, T)>,
        T: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&[0; NVARS]).map_or(false, |c| c.is_one())
    }

    /// True when the polynomial has no variables (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Constant coefficient value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Degree in `v`; `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    /// Degree in `v`, with 0 for the zero polynomial.
    pub fn deg(&self, v: Var) -> u32 {
        self.degree(v).unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    /// Variables that occur with positive degree, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.depends_on(v)).collect()
    }

    /// True when every variable of the polynomial is in `vars`.
    pub fn only_in(&self, vars: &[Var]) -> bool {
        self.variables().iter().all(|v| vars.contains(v))
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Exact division of every coefficient by the integer `c`.
    pub fn div_integer(&self, c: &BigInt) -> Option<MPoly> {
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*e, q);
        }
        Some(MPoly { terms })
    }

    /// Multiplies by the monomial `c * e`.
    pub fn mul_monomial(&self, e: &Exponents, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(f, a)| {
                    let mut g = *f;
                    for i in 0..NVARS {
                        g[i] += e[i];
                    }
                    (g, a * c)
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MPoly {
        let i = v.index();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                terms.insert(f, c * BigInt::from(e[i]));
            }
        }
        MPoly { terms }
    }

    /// Coefficients of `self` viewed as a polynomial in `v`, indexed by power.
    /// Each coefficient is free of `v`. Empty for the zero polynomial.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let i = v.index();
        let n = match self.degree(v) {
            Some(d) => d as usize + 1,
            None => return Vec::new(),
        };
        let mut out = vec![MPoly::zero(); n];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut f = *e;
            f[i] = 0;
            out[k].terms.insert(f, c.clone());
        }
        out
    }

    /// Inverse of [`MPoly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let i = v.index();
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                debug_assert_eq!(e[i], 0);
                let mut f = *e;
                f[i] = k as u32;
                terms.insert(f, a.clone());
            }
        }
        MPoly { terms }
    }

    /// Leading coefficient and degree with respect to `v`.
    /// The zero polynomial yields `(0, None)`, standing for degree minus infinity.
    pub fn leading_coefficient(&self, v: Var) -> (MPoly, Option<u32>) {
        match self.degree(v) {
            None => (MPoly::zero(), None),
            Some(d) => {
                let i = v.index();
                let terms = self
                    .terms
                    .iter()
                    .filter(|(e, _)| e[i] == d)
                    .map(|(e, c)| {
                        let mut f = *e;
                        f[i] = 0;
                        (f, c.clone())
                    })
                    .collect();
                (MPoly { terms }, Some(d))
            }
        }
    }

    /// Leading term under graded-lex order with `x > y > t > s`.
    pub fn grlex_leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            })
    }

    /// Leading term under lex order with `x > y > t > s`.
    pub fn lex_leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Gcd of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content-free, sign-normalized associate. Rejects zero.
    pub fn normalize(&self) -> Result<MPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("normalize"));
        }
        Ok(self.normalized())
    }

    /// Like [`MPoly::normalize`] but maps zero to zero.
    pub fn normalized(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let mut g = self.integer_content();
        if self.grlex_leading().map_or(false, |(_, c)| c.is_negative()) {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.div_integer(&g).expect("content divides")
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return self.div_integer(&c);
        }
        let (de, dc) = d.lex_leading().map(|(e, c)| (*e, c.clone()))?;
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((re, rc)) = r.lex_leading().map(|(e, c)| (*e, c.clone())) {
            let mut m = [0; NVARS];
            for i in 0..NVARS {
                if re[i] < de[i] {
                    return None;
                }
                m[i] = re[i] - de[i];
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            // Subtract qc * x^m * d in place.
            for (e, c) in &d.terms {
                let mut f = *e;
                for i in 0..NVARS {
                    f[i] += m[i];
                }
                r.add_term(f, -(c * &qc));
            }
            q.terms.insert(m, qc);
        }
        Some(q)
    }

    /// Substitutes rational values for some variables.
    ///
    /// Returns `(p, u)` with `u > 0` rational and `u * p` equal to the exact
    /// substitution; `p` has integer coefficients and content 1 (or is zero).
    pub fn specialize(&self, bindings: &[(Var, Rational)]) -> (MPoly, Rational) {
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut val = Rational::from_integer(c.clone());
            let mut f = *e;
            for (v, r) in bindings {
                let k = f[v.index()];
                if k > 0 {
                    val *= num_traits::pow(r.clone(), k as usize);
                    f[v.index()] = 0;
                }
            }
            let slot = acc.entry(f).or_insert_with(Rational::zero);
            *slot += val;
        }
        acc.retain(|_, c| !c.is_zero());
        if acc.is_empty() {
            return (MPoly::zero(), Rational::one());
        }
        let den = acc.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = acc
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * (&den / c.denom()))));
        let unit = Rational::new(num.clone(), den.clone());
        let terms = acc
            .into_iter()
            .map(|(e, c)| (e, c.numer() * (&den / c.denom()) / &num))
            .collect();
        (MPoly { terms }, unit)
    }

    /// Evaluates at a full rational point (unbound variables must not occur).
    pub fn eval_rational(&self, point: &[(Var, Rational)]) -> Rational {
        let (p, u) = self.specialize(point);
        debug_assert!(p.is_constant());
        match p.as_constant() {
            Some(c) => u * Rational::from_integer(c),
            None => panic!("eval_rational: unbound variables remain"),
        }
    }

    /// Replaces variable `v` by the polynomial `q`.
    pub fn compose(&self, v: Var, q: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(v);
        // Horner in q.
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Exchanges the roles of two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    f.swap(a.index(), b.index());
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Maps `v` to `-v`.
    pub fn negate_var(&self, v: Var) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let c = if e[v.index()] % 2 == 1 { -c } else { c.clone() };
                    (*e, c)
                })
                .collect(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exponents {
        let mut m = [u32::MAX; NVARS];
        for e in self.terms.keys() {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.is_zero() {
            [0; NVARS]
        } else {
            m
        }
    }

    /// Divides by the monomial `x^e` (which must divide every term).
    pub fn div_monomial(&self, e: &Exponents) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(f, c)| {
                    let mut g = *f;
                    for i in 0..NVARS {
                        g[i] -= e[i];
                    }
                    (g, c.clone())
                })
                .collect(),
        }
    }

    /// Dense integer coefficients (low to high) of a polynomial in `v` alone.
    pub fn to_univariate(&self, v: Var) -> Option<Vec<BigInt>> {
        if !self.only_in(&[v]) {
            return None;
        }
        let n = self.degree(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); n];
        for (e, c) in &self.terms {
            out[e[v.index()] as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[BigInt]) -> MPoly {
        MPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (exps_of(v, k as u32), c.clone())),
        )
    }

    /// Prints with the given names for `x, y, t, s`.
    pub fn display_with(&self, names: &[&str; NVARS]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Highest grlex term first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if !mag.is_one() || is_const {
                factors.push(mag.to_string());
            }
            for v in Var::ALL {
                match e[v.index()] {
                    0 => {}
                    1 => factors.push(names[v.index()].to_string()),
                    k => factors.push(format!("{}^{}", names[v.index()], k)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&["x", "y", "t", "s"]))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for i in 0..NVARS {
                    e[i] += e2[i];
                }
                let prod = c1 * c2;
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += prod;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Shorthand constructors used across the crate and its tests.
pub fn x() -> MPoly {
    MPoly::var(Var::X)
}
pub fn y() -> MPoly {
    MPoly::var(Var::Y)
}
pub fn t() -> MPoly {
    MPoly::var(Var::T)
}
pub fn s() -> MPoly {
    MPoly::var(Var::S)
}
pub fn c<T: Into<BigInt>>(v: T) -> MPoly {
    MPoly::constant(v)
}

/// `a/b` as a [`Rational`].
pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancels_and_identities() {
        assert_eq!(&(&x() + &c(1)) + &(-x()), c(1));
        let p = &(&x() * &y()) + &c(3);
        assert_eq!(&p + &MPoly::zero(), p);
        let q = &t().pow(2) + &s().pow(2);
        assert_eq!(q.num_terms(), 2);
        assert_eq!(q.to_string(), "t^2 + s^2");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&(&x() - &c(1)) * &(&x() + &c(1)), &x().pow(2) - &c(1));
        let p = &(&t() * &s()) + &c(-2);
        assert_eq!(&p * &MPoly::one(), p);
        assert_eq!(&(&t() + &s()) * &(&t() - &s()), &t().pow(2) - &s().pow(2));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!((&y().pow(2) - &x()).derivative(Var::Y), y().scale(&BigInt::from(2)));
        assert!(c(7).derivative(Var::X).is_zero());
        let cassini = &(&(&(&x().pow(2) + &y().pow(2)) + &t().pow(2)).pow(2)
            - &(&c(4) * &(&t().pow(2) * &x().pow(2))))
            - &s().pow(4);
        assert_eq!(cassini.derivative(Var::S), &c(-4) * &s().pow(3));
    }

    #[test]
    fn specialize_examples() {
        let p = &(&x().pow(2) + &y().pow(2)) - &t();
        let (q, u) = p.specialize(&[(Var::T, rat(1, 1))]);
        assert_eq!(q, &(&x().pow(2) + &y().pow(2)) - &c(1));
        assert_eq!(u, rat(1, 1));

        let (q, u) = (&t() * &x()).specialize(&[(Var::T, rat(1, 2))]);
        assert_eq!(q, x());
        assert_eq!(u, rat(1, 2));

        let f = &(&(&c(-1) + &x().pow(2)) + &(&t() * &(&x() - &y())))
            + &(&s() * &(&x().pow(3) - &y()));
        let (q, u) = f.specialize(&[(Var::T, rat(0, 1)), (Var::S, rat(0, 1))]);
        assert_eq!(q, &x().pow(2) - &c(1));
        assert_eq!(u, rat(1, 1));
    }

    #[test]
    fn specialize_negative_unit_is_kept_in_poly() {
        let (q, u) = (&c(-6) * &x()).specialize(&[]);
        assert_eq!(q, -x());
        assert_eq!(u, rat(6, 1));
    }

    #[test]
    fn leading_coefficient_examples() {
        let cassini = &(&(&(&x().pow(2) + &y().pow(2)) + &t().pow(2)).pow(2)
            - &(&c(4) * &(&t().pow(2) * &x().pow(2))))
            - &s().pow(4);
        assert_eq!(cassini.leading_coefficient(Var::Y), (c(1), Some(4)));
        let p = &x().pow(2) - &c(1);
        assert_eq!(p.leading_coefficient(Var::Y), (p.clone(), Some(0)));
        let q = &(&s() * &y().pow(3)) + &(&t() * &y());
        assert_eq!(q.leading_coefficient(Var::Y), (s(), Some(3)));
        assert_eq!(MPoly::zero().leading_coefficient(Var::Y), (MPoly::zero(), None));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!((&c(-4) * &x()).normalize().unwrap(), x());
        let p = &(&c(6) * &t().pow(2)) - &(&c(6) * &s().pow(2));
        let n = p.normalize().unwrap();
        assert_eq!(n, &t().pow(2) - &s().pow(2));
        assert_eq!(n.normalize().unwrap(), n);
        assert!(MPoly::zero().normalize().is_err());
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &t()) * &(&(&y() * &s()) - &c(3));
        let b = &y() * &s() - &c(3);
        assert_eq!(a.div_exact(&b), Some(&x() + &t()));
        assert_eq!(a.div_exact(&(&x() + &c(1))), None);
    }

    #[test]
    fn compose_shear() {
        // x^2 - 1 with x -> x + y
        let p = &x().pow(2) - &c(1);
        let q = p.compose(Var::X, &(&x() + &y()));
        assert_eq!(q, &(&(&x().pow(2) + &(&c(2) * &(&x() * &y()))) + &y().pow(2)) - &c(1));
    }
}
