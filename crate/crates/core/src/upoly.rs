//! Dense univariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{MPoly, Rational, Var};

/// Coefficients low to high, no trailing zeros. The zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self.to_mpoly(Var::T))
    }
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    /// `den * x - num` for the rational `num/den`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    /// Reads a polynomial that involves at most the variable `v`.
    pub fn from_mpoly(p: &MPoly, v: Var) -> Option<Self> {
        p.to_univariate(v).map(Self::new)
    }

    /// Reads a polynomial in at most one variable, whichever it is.
    pub fn from_any(p: &MPoly) -> Option<Self> {
        match p.variables().as_slice() {
            [] => Some(Self::new(vec![p.as_constant().unwrap_or_default()])),
            [v] => Self::from_mpoly(p, *v),
            _ => None,
        }
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        MPoly::from_univariate(v, &self.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `p(x) -> p(-x)`.
    pub fn reflect(&self) -> Self {
        UPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Highest power of `x` dividing the polynomial, and the quotient.
    pub fn split_zero_root(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            k,
            UPoly {
                coeffs: self.coeffs[k..].to_vec(),
            },
        )
    }

    /// `den^deg * p(num/den)`, an integer with the sign of `p(num/den)`.
    pub fn eval_scaled(&self, r: &Rational) -> BigInt {
        let (n, d) = (r.numer(), r.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, r: &Rational) -> Ordering {
        self.eval_scaled(r).sign_ordering()
    }

    /// Pseudo-remainder scaled by a positive factor `|lc(b)|^(da - db + 1)`,
    /// so signs are preserved.
    pub fn prem_pos(&self, b: &Self) -> Self {
        let n = b.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= n {
            return self.clone();
        }
        let lcb = b.lc().clone();
        let alcb = lcb.abs();
        let sgn = if lcb.is_negative() { -BigInt::one() } else { BigInt::one() };
        let steps = r.len() - n;
        for _ in 0..steps {
            let d = r.len() - 1;
            let c = r[d].clone();
            // r <- |lcb| r - sgn c x^(d-n) b
            for a in r.iter_mut() {
                *a *= &alcb;
            }
            let f = &c * &sgn;
            for (i, bi) in b.coeffs.iter().enumerate() {
                r[i + d - n] -= &f * bi;
            }
            debug_assert!(r[d].is_zero());
            r.pop();
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
            if r.len() <= n {
                break;
            }
        }
        Self::new(r)
    }

    /// Exact quotient, `None` when `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let n = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let m = self.degree()?;
        if m < n {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); m - n + 1];
        for k in (0..=m - n).rev() {
            let (qk, rem) = r[k + n].div_rem(d.lc());
            if !rem.is_zero() {
                return None;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * di;
            }
            q[k] = qk;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem_pos(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Square-free part, primitive with positive leading coefficient.
    pub fn squarefree(&self) -> Self {
        if self.deg() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).expect("gcd divides").primitive()
    }

    /// Roots of `self` mapped by `x -> a * x`, i.e. the polynomial `p(a x)`
    /// for an integer `a`.
    pub fn scale_arg(&self, a: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= a;
        }
        Self::new(out)
    }

    /// `2^deg p(x/2)`.
    pub fn halve_arg(&self) -> Self {
        let deg = self.deg();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c << (deg - i))
                .collect(),
        )
    }

    /// `p(x + 1)`.
    pub fn shift_one(&self) -> Self {
        self.shift(&BigInt::one())
    }

    /// `p(x + a)` by repeated synthetic division.
    pub fn shift(&self, a: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if a.is_zero() || n < 2 {
            return self.clone();
        }
        let unit = a.is_one();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let v = if unit { c[j + 1].clone() } else { &c[j + 1] * a };
                c[j] += v;
            }
        }
        Self::new(c)
    }

    /// Descartes bound on the number of roots in the open interval
    /// `(lo, hi)`: the sign variations of `(1+y)^n p((lo + hi y)/(1 + y))`.
    pub fn descartes_bound(&self, lo: &Rational, hi: &Rational) -> usize {
        let n = self.deg();
        let (ln, ld) = (lo.numer(), lo.denom());
        let w = hi - lo;
        // u(x) = ld^n p(x / ld), so p(lo + w x) is proportional to u(ln + ld w x).
        let mut pw = BigInt::one();
        let mut u = vec![BigInt::zero(); n + 1];
        for i in (0..=n).rev() {
            u[i] = &self.coeffs[i] * &pw;
            pw *= ld;
        }
        let r = UPoly::new(u).shift(ln);
        let (wn, wd) = ((w.numer() * ld), w.denom().clone());
        let mut a = BigInt::one();
        let mut b = BigInt::one();
        let mut v = vec![BigInt::zero(); n + 1];
        for i in (0..=n).rev() {
            v[i] = &r.coeffs[i] * &b;
            b *= &wd;
        }
        for c in v.iter_mut() {
            *c *= &a;
            a *= &wn;
        }
        UPoly::new(v).reverse().shift_one().sign_variations()
    }

    /// `x^deg p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn sign_variations(&self) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for c in &self.coeffs {
            let s = match c.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => continue,
                num_bigint::Sign::Plus => 1,
            };
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Power-of-two bound `2^k` strictly exceeding every root modulus.
    pub fn root_bound_log2(&self) -> u64 {
        let lc = self.lc().abs();
        let mut best = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = c.abs().div_ceil(&lc);
            if q > best {
                best = q;
            }
        }
        // Cauchy: |root| < 1 + max |c_i / lc| <= 2^k.
        (best + 1u32).bits()
    }

    /// Sturm sequence, each member scaled by positive factors only.
    pub fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].prem_pos(&seq[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            let g = r.content();
            seq.push(UPoly {
                coeffs: r.coeffs.iter().map(|c| c / &g).collect(),
            });
        }
        seq
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut v = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of distinct real roots in `(a, b]` from a Sturm sequence; `None`
/// bounds mean infinity.
pub fn sturm_count(seq: &[UPoly], a: Option<&Rational>, b: Option<&Rational>) -> usize {
    let at = |x: Option<&Rational>, neg: bool| {
        variations(seq.iter().map(|p| match x {
            Some(r) => p.sign_at(r),
            None => {
                let s = p.lc().sign_ordering();
                if neg && p.deg() % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        }))
    };
    at(a, true).saturating_sub(at(b, false))
}
