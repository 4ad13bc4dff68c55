//! Real root isolation, real algebraic numbers and rational sample points.
//!
//! Isolation uses Descartes' rule of signs with dyadic bisection on the
//! square-free part. Every irrational number is kept as a square-free
//! defining polynomial plus an open interval whose endpoints are not roots,
//! so refinement is plain bisection by sign. Rational roots are detected
//! exactly and stored with a linear defining polynomial and a degenerate
//! interval `[r, r]`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::elim;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational, Var};
use crate::upoly::{sturm_count, UPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    defining: UPoly,
    lo: Rational,
    hi: Rational,
    value: Option<Rational>,
}

/// Serialized as `{"defining": [c0, c1, ...], "interval": [lo, hi]}` with
/// all numbers as exact decimal or `a/b` strings.
impl serde::Serialize for AlgebraicNumber {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<String> = self.defining.coeffs().iter().map(|c| c.to_string()).collect();
        let mut st = ser.serialize_struct("AlgebraicNumber", 2)?;
        st.serialize_field("defining", &coeffs)?;
        st.serialize_field("interval", &[self.lo.to_string(), self.hi.to_string()])?;
        st.end()
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Some(v) => write!(f, "{v}"),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.defining.to_mpoly(Var::T),
                self.lo,
                self.hi
            ),
        }
    }
}

impl AlgebraicNumber {
    pub fn rational(r: Rational) -> Self {
        AlgebraicNumber {
            defining: UPoly::linear_root(&r),
            lo: r.clone(),
            hi: r.clone(),
            value: Some(r),
        }
    }

    /// The unique root of square-free `defining` in the open interval
    /// `(lo, hi)`; endpoints must not be roots. Detects rational roots.
    pub fn from_interval(defining: UPoly, lo: Rational, hi: Rational) -> Self {
        let mut a = AlgebraicNumber {
            defining: defining.primitive(),
            lo,
            hi,
            value: None,
        };
        a.detect_rational();
        a
    }

    pub fn defining(&self) -> &UPoly {
        &self.defining
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn rational_value(&self) -> Option<&Rational> {
        self.value.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.value.is_some()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Midpoint of the isolating interval as a float.
    pub fn to_f64(&self) -> f64 {
        let m = match &self.value {
            Some(v) => v.clone(),
            None => {
                let mut a = self.clone();
                let tol = Rational::new(BigInt::one(), BigInt::one() << 60u32);
                let scale = self.lo.abs().max(self.hi.abs()).max(Rational::one());
                a.refine_mut(&(tol * scale));
                (&a.lo + &a.hi) / Rational::from_integer(2.into())
            }
        };
        m.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact sign of `defining` at `r` relative to the root: `Less` when
    /// `r` is below the root.
    fn side_of(&self, r: &Rational) -> Ordering {
        if let Some(v) = &self.value {
            return r.cmp(v);
        }
        if r <= &self.lo {
            return Ordering::Less;
        }
        if r >= &self.hi {
            return Ordering::Greater;
        }
        let sr = self.defining.sign_at(r);
        if sr == Ordering::Equal {
            return Ordering::Equal;
        }
        if sr == self.defining.sign_at(&self.lo) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Shrinks the interval using the split point `m`.
    fn split_at(&mut self, m: &Rational) -> Ordering {
        let side = self.side_of(m);
        if self.value.is_none() {
            match side {
                Ordering::Less => {
                    if m > &self.lo {
                        self.lo = m.clone()
                    }
                }
                Ordering::Greater => {
                    if m < &self.hi {
                        self.hi = m.clone()
                    }
                }
                Ordering::Equal => *self = AlgebraicNumber::rational(m.clone()),
            }
        }
        side
    }

    fn bisect(&mut self) {
        if self.value.is_none() {
            let m = (&self.lo + &self.hi) / Rational::from_integer(2.into());
            self.split_at(&m);
        }
    }

    fn refine_mut(&mut self, width: &Rational) {
        while self.value.is_none() && &self.width() >= width {
            self.bisect();
        }
    }

    /// Same number with an isolating interval narrower than `width`.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        let mut a = self.clone();
        a.refine_mut(width);
        a
    }

    fn detect_rational(&mut self) {
        if self.value.is_some() {
            return;
        }
        if self.defining.deg() == 1 {
            let c = self.defining.coeffs();
            let r = Rational::new(-c[0].clone(), c[1].clone());
            *self = AlgebraicNumber::rational(r);
            return;
        }
        // A rational root n/q of a primitive polynomial has q | lc, so
        // lc * root is an integer. Once lc * (lo, hi) holds at most one
        // integer, that integer is the only candidate.
        let lc = Rational::from_integer(self.defining.lc().abs());
        loop {
            if self.value.is_some() {
                return;
            }
            let (a, b) = (&self.lo * &lc, &self.hi * &lc);
            let m = a.floor() + Rational::one();
            if m >= b {
                return;
            }
            if &b - &a <= Rational::one() {
                let cand = &m / &lc;
                if self.defining.sign_at(&cand) == Ordering::Equal {
                    *self = AlgebraicNumber::rational(cand);
                }
                return;
            }
            self.bisect();
        }
    }

    /// Exact equality test.
    pub fn same_as(&self, o: &AlgebraicNumber) -> bool {
        match (&self.value, &o.value) {
            (Some(a), Some(b)) => a == b,
            (Some(_), None) | (None, Some(_)) => false,
            (None, None) => {
                let lo = (&self.lo).max(&o.lo);
                let hi = (&self.hi).min(&o.hi);
                if lo >= hi {
                    return false;
                }
                let g = self.defining.gcd(&o.defining);
                if g.deg() == 0 {
                    return false;
                }
                let (sl, sh) = (g.sign_at(lo), g.sign_at(hi));
                sl != Ordering::Equal && sh != Ordering::Equal && sl != sh
            }
        }
    }

    /// Exact comparison, refining both intervals as needed.
    pub fn compare(&mut self, o: &mut AlgebraicNumber) -> Ordering {
        if self.same_as(o) {
            return Ordering::Equal;
        }
        loop {
            match (&self.value, &o.value) {
                (Some(a), Some(b)) => return a.cmp(b),
                (Some(a), None) => return o.split_at(&a.clone()),
                (None, Some(b)) => return self.split_at(&b.clone()).reverse(),
                (None, None) => {
                    if self.hi <= o.lo {
                        return Ordering::Less;
                    }
                    if o.hi <= self.lo {
                        return Ordering::Greater;
                    }
                    self.bisect();
                    o.bisect();
                }
            }
        }
    }

    /// Position of a rational relative to this number, refining as needed.
    pub fn cmp_rational(&mut self, r: &Rational) -> Ordering {
        self.split_at(r).reverse()
    }
}

/// Simplest rational (smallest denominator, then smallest magnitude) in the
/// open interval `(lo, hi)`; `lo == hi` returns that value.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo >= hi {
        return lo.clone();
    }
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_pos(&-hi, Some(&-lo));
    }
    simplest_pos(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` for `0 <= lo < hi`; `None` is infinity.
fn simplest_pos(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let n = lo.floor();
    let next = &n + Rational::one();
    match hi {
        None => next,
        Some(h) if &next < h => next,
        Some(h) => {
            // Both ends lie in [n, n+1].
            let inv_hi = (h - &n).recip();
            let d = lo - &n;
            let inv_lo = if d.is_zero() { None } else { Some(d.recip()) };
            n + simplest_pos(&inv_hi, inv_lo.as_ref()).recip()
        }
    }
}

fn simplest_below(x: &Rational) -> Rational {
    if x.is_positive() {
        Rational::zero()
    } else {
        -simplest_pos(&-x, None)
    }
}

fn simplest_above(x: &Rational) -> Rational {
    if x.is_negative() {
        Rational::zero()
    } else {
        simplest_pos(x, None)
    }
}

/// Strictly increasing real algebraic numbers with a rational sample in
/// every gap, including one below the first root and one above the last.
#[derive(Clone, Debug, Default)]
pub struct SortedRootList {
    roots: Vec<AlgebraicNumber>,
    gaps: Vec<Rational>,
}

impl SortedRootList {
    /// Builds the list from pairwise distinct numbers in any order.
    pub fn from_distinct(mut roots: Vec<AlgebraicNumber>) -> Self {
        // Insertion sort with exact comparisons; inputs are small.
        for i in 1..roots.len() {
            let mut j = i;
            while j > 0 {
                let (a, b) = roots.split_at_mut(j);
                if a[j - 1].compare(&mut b[0]) == Ordering::Greater {
                    roots.swap(j - 1, j);
                    j -= 1;
                } else {
                    break;
                }
            }
        }
        let gaps = gap_samples(&mut roots);
        SortedRootList { roots, gaps }
    }

    pub fn empty() -> Self {
        SortedRootList {
            roots: vec![],
            gaps: vec![Rational::zero()],
        }
    }

    pub fn roots(&self) -> &[AlgebraicNumber] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<AlgebraicNumber> {
        self.roots
    }

    /// `len + 1` samples: below, between and above the roots.
    pub fn gaps(&self) -> &[Rational] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Index of a root equal to `a`, if any.
    pub fn position(&self, a: &AlgebraicNumber) -> Option<usize> {
        self.roots.iter().position(|r| r.same_as(a))
    }

    /// Number of roots strictly below the rational `r`, and whether `r` is
    /// itself one of the roots.
    pub fn locate(&self, r: &Rational) -> (usize, bool) {
        let mut below = 0;
        for root in &self.roots {
            let mut root = root.clone();
            match root.cmp_rational(r) {
                Ordering::Less => below += 1,
                Ordering::Equal => return (below, true),
                Ordering::Greater => return (below, false),
            }
        }
        (below, false)
    }
}

fn is_root_of_any(r: &Rational, roots: &[AlgebraicNumber]) -> bool {
    roots.iter().any(|a| a.defining.sign_at(r) == Ordering::Equal)
}

fn gap_samples(roots: &mut [AlgebraicNumber]) -> Vec<Rational> {
    if roots.is_empty() {
        return vec![Rational::zero()];
    }
    let mut gaps = Vec::with_capacity(roots.len() + 1);
    let mut below = simplest_below(&roots[0].lo);
    while is_root_of_any(&below, roots) {
        below -= Rational::one();
    }
    gaps.push(below);
    for i in 0..roots.len() - 1 {
        loop {
            let (l, h) = (roots[i].hi.clone(), roots[i + 1].lo.clone());
            let found = if l < h {
                sample_in(&l, &h, roots)
            } else if l == h && !roots[i].is_rational() && !roots[i + 1].is_rational() {
                Some(l).filter(|r| !is_root_of_any(r, roots))
            } else {
                None
            };
            if let Some(r) = found {
                gaps.push(r);
                break;
            }
            roots[i].bisect();
            roots[i + 1].bisect();
        }
    }
    let mut above = simplest_above(&roots[roots.len() - 1].hi);
    while is_root_of_any(&above, roots) {
        above += Rational::one();
    }
    gaps.push(above);
    gaps
}

fn sample_in(l: &Rational, h: &Rational, roots: &[AlgebraicNumber]) -> Option<Rational> {
    let r = simplest_between(l, h);
    if !is_root_of_any(&r, roots) {
        return Some(r);
    }
    let w = h - l;
    for j in 1..8u32 {
        let den = BigInt::one() << j;
        for k in (1..(1u64 << j)).step_by(2) {
            let r = l + &w * Rational::new(BigInt::from(k), den.clone());
            if !is_root_of_any(&r, roots) {
                return Some(r);
            }
        }
    }
    None
}

/// Dyadic isolating interval `(c / 2^j, (c + 1) / 2^j)`, or an exact root
/// `c / 2^j`, in scaled coordinates.
struct Dyadic {
    c: BigInt,
    j: u32,
    exact: bool,
}

/// Roots of `q` in `(0, 1)` by Descartes bisection. `q` must be square-free
/// and nonzero at 0 and 1.
fn isolate_unit(q: UPoly) -> Vec<Dyadic> {
    let mut out = vec![];
    let mut stack = vec![(q, BigInt::zero(), 0u32)];
    let x_minus_one = UPoly::from_i64(&[-1, 1]);
    while let Some((q, c, j)) = stack.pop() {
        match q.reverse().shift_one().sign_variations() {
            0 => continue,
            1 => {
                out.push(Dyadic { c, j, exact: false });
                continue;
            }
            _ => {}
        }
        let mut left = q.halve_arg().primitive();
        let c2 = &c << 1u32;
        let at_one: BigInt = left.coeffs().iter().sum();
        if at_one.is_zero() {
            out.push(Dyadic {
                c: &c2 + 1u32,
                j: j + 1,
                exact: true,
            });
            left = left.div_exact(&x_minus_one).expect("root at 1");
        }
        let right = left.shift_one();
        stack.push((right, &c2 + 1u32, j + 1));
        stack.push((left, c2, j + 1));
    }
    out
}

/// All distinct real roots of `p`, sorted.
pub fn isolate_real_roots(p: &UPoly) -> Result<SortedRootList> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_real_roots"));
    }
    if p.deg() == 0 {
        return Ok(SortedRootList::empty());
    }
    let sq = p.squarefree();
    let (zero_mult, core) = sq.split_zero_root();
    let mut roots = vec![];
    if zero_mult > 0 {
        roots.push(AlgebraicNumber::rational(Rational::zero()));
    }
    if core.deg() > 0 {
        let k = core.root_bound_log2();
        let scale = BigInt::one() << k;
        let mut exact = vec![];
        let mut open = vec![];
        for negative in [false, true] {
            let base = if negative { core.reflect() } else { core.clone() };
            let q = base.scale_arg(&scale).primitive();
            for d in isolate_unit(q) {
                let den = BigInt::one() << d.j;
                let to_orig = |c: &BigInt| {
                    let v = Rational::new(c * &scale, den.clone());
                    if negative {
                        -v
                    } else {
                        v
                    }
                };
                if d.exact {
                    exact.push(to_orig(&d.c));
                } else {
                    let (a, b) = (to_orig(&d.c), to_orig(&(&d.c + 1u32)));
                    open.push(if negative { (b, a) } else { (a, b) });
                }
            }
        }
        // Interval endpoints may be the exact roots found during bisection;
        // divide those out so no endpoint is a root of the defining polynomial.
        let mut def = core.clone();
        for r in &exact {
            def = def.div_exact(&UPoly::linear_root(r)).expect("exact root");
            roots.push(AlgebraicNumber::rational(r.clone()));
        }
        for (lo, hi) in open {
            roots.push(AlgebraicNumber::from_interval(def.clone(), lo, hi));
        }
    }
    Ok(SortedRootList::from_distinct(roots))
}

/// Isolates the real roots of a polynomial in at most one variable.
pub fn isolate_mpoly(p: &MPoly) -> Result<SortedRootList> {
    let u = UPoly::from_any(p).ok_or(Error::NotUnivariate("isolate_real_roots"))?;
    isolate_real_roots(&u)
}

/// Number of distinct real roots of `p` from its Sturm sequence.
pub fn sturm_root_count(p: &UPoly) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    sturm_count(&p.squarefree().sturm_sequence(), None, None)
}

/// Union of several root lists with exact duplicate removal.
pub fn merge_root_sets(lists: &[SortedRootList]) -> SortedRootList {
    let mut all: Vec<AlgebraicNumber> = vec![];
    for l in lists {
        for r in &l.roots {
            if !all.iter().any(|a| a.same_as(r)) {
                all.push(r.clone());
            }
        }
    }
    SortedRootList::from_distinct(all)
}

/// Exact sign of `p(alpha)`.
pub fn sign_at(p: &UPoly, alpha: &AlgebraicNumber) -> Ordering {
    if p.is_zero() {
        return Ordering::Equal;
    }
    if let Some(v) = &alpha.value {
        return p.sign_at(v);
    }
    let g = p.gcd(&alpha.defining);
    if g.deg() > 0 {
        let (sl, sh) = (g.sign_at(&alpha.lo), g.sign_at(&alpha.hi));
        if sl != sh && sl != Ordering::Equal && sh != Ordering::Equal {
            return Ordering::Equal;
        }
    }
    let mut a = alpha.clone();
    loop {
        let sl = p.sign_at(&a.lo);
        if sl != Ordering::Equal && p.descartes_bound(&a.lo, &a.hi) == 0 {
            return sl;
        }
        a.bisect();
        if let Some(v) = &a.value {
            return p.sign_at(v);
        }
    }
}

/// Sign of a polynomial in `var` only at `alpha`.
pub fn sign_at_mpoly(p: &MPoly, var: Var, alpha: &AlgebraicNumber) -> Ordering {
    let u = UPoly::from_mpoly(p, var).expect("polynomial in one variable");
    sign_at(&u, alpha)
}

/// Real roots in `s` of `p(alpha, s)` for `p` in `t, s`.
///
/// Candidates come from the resultant eliminating `t` against the defining
/// polynomial of `alpha`. A candidate is kept when `p(alpha, .)` changes
/// sign across its interval (decided exactly), or when it is a root of the
/// fiber gcd of `p` and `dp/ds`, which is read off the subresultant chain
/// and handled recursively.
pub fn roots_at_algebraic_fiber(p: &MPoly, alpha: &AlgebraicNumber) -> Result<SortedRootList> {
    if !p.only_in(&[Var::T, Var::S]) {
        return Err(Error::NotUnivariate("roots_at_algebraic_fiber: expected t, s"));
    }
    if let Some(v) = &alpha.value {
        let (q, _) = p.specialize(&[(Var::T, v.clone())]);
        if q.is_zero() {
            return Err(Error::DegenerateFiber);
        }
        return isolate_mpoly(&q);
    }
    let coeffs: Vec<UPoly> = p
        .coeffs_in(Var::S)
        .iter()
        .map(|c| UPoly::from_mpoly(c, Var::T).expect("coefficient in t"))
        .collect();
    let top = match (0..coeffs.len())
        .rev()
        .find(|&i| sign_at(&coeffs[i], alpha) != Ordering::Equal)
    {
        Some(i) => i,
        None => return Err(Error::DegenerateFiber),
    };
    if top == 0 {
        return Ok(SortedRootList::empty());
    }
    let trunc: Vec<MPoly> = coeffs[..=top].iter().map(|c| c.to_mpoly(Var::T)).collect();
    let q = MPoly::from_coeffs_in(Var::S, &trunc);

    let content = coeffs[..=top]
        .iter()
        .fold(UPoly::zero(), |g, c| g.gcd(c));
    let def = alpha
        .defining
        .div_exact(&alpha.defining.gcd(&content))
        .expect("gcd divides");
    let res = elim::resultant(&q, &def.to_mpoly(Var::T), Var::T);
    let candidates = isolate_mpoly(&res)?;

    let mut found: Vec<AlgebraicNumber> = vec![];
    for beta in candidates.roots() {
        let at = |s: &Rational| {
            let (u, _) = q.specialize(&[(Var::S, s.clone())]);
            sign_at_mpoly(&u, Var::T, alpha)
        };
        let keep = match &beta.value {
            Some(v) => at(v) == Ordering::Equal,
            None => {
                let (sl, sh) = (at(&beta.lo), at(&beta.hi));
                sl != Ordering::Equal && sh != Ordering::Equal && sl != sh
            }
        };
        if keep {
            found.push(beta.clone());
        }
    }

    let mut lists = vec![SortedRootList::from_distinct(found)];
    if let Some(g) = fiber_gcd(&q, alpha) {
        lists.push(roots_at_algebraic_fiber(&g, alpha)?);
    }
    Ok(merge_root_sets(&lists))
}

/// A polynomial whose specialization at `alpha` is the gcd of `q(alpha, s)`
/// and its `s`-derivative, or `None` when that gcd is constant. The leading
/// `s`-coefficient of `q` must not vanish at `alpha`.
pub(crate) fn fiber_gcd(q: &MPoly, alpha: &AlgebraicNumber) -> Option<MPoly> {
    let (prs, scalars) = elim::subresultant_prs(q, &q.derivative(Var::S), Var::S);
    for i in (1..prs.len()).rev() {
        if sign_at_mpoly(&scalars[i], Var::T, alpha) == Ordering::Equal {
            continue;
        }
        if prs[i].deg(Var::S) == 0 {
            return None;
        }
        let (lc, _) = prs[i].leading_coefficient(Var::S);
        let num = &scalars[i] * &prs[i];
        return Some(num.div_exact(&lc).expect("subresultant is polynomial"));
    }
    None
}
