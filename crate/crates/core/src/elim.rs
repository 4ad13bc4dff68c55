//! Elimination kernel: gcd, contents, square-free parts, resultants and
//! discriminants over `Z[x, y, t, s]`.
//!
//! Resultants and gcds run on the recursive representation (a polynomial in
//! one main variable with [`MPoly`] coefficients) using the subresultant
//! polynomial remainder sequence. A fraction-free Bareiss determinant of the
//! Sylvester matrix is kept as an independent reference.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponents, MPoly, Rational, Var, NVARS};
use crate::upoly::UPoly;

/// Dense coefficient vector in the main variable, low to high, no trailing zeros.
type Dense = Vec<MPoly>;

fn trim(mut v: Dense) -> Dense {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn deg(v: &Dense) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn lc(v: &Dense) -> &MPoly {
    v.last().expect("nonzero polynomial")
}

fn dense_scale(v: &Dense, c: &MPoly) -> Dense {
    trim(v.iter().map(|a| a * c).collect())
}

fn dense_div(v: &Dense, c: &MPoly) -> Dense {
    if c.is_one() {
        return v.clone();
    }
    v.iter()
        .map(|a| a.div_exact(c).expect("exact coefficient division"))
        .collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let n = deg(b).expect("prem by zero");
    let m = match deg(a) {
        Some(m) if m >= n => m,
        _ => return a.clone(),
    };
    let lcb = lc(b).clone();
    let mut r = a.clone();
    let mut e = (m - n + 1) as u32;
    while let Some(d) = deg(&r) {
        if d < n {
            break;
        }
        let c = lc(&r).clone();
        let shift = d - n;
        let mut next: Dense = r.iter().map(|a| a * &lcb).collect();
        for (i, bi) in b.iter().enumerate() {
            let prod = &c * bi;
            next[i + shift] = &next[i + shift] - &prod;
        }
        debug_assert!(next[d].is_zero());
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        let f = lcb.pow(e);
        r = dense_scale(&r, &f);
    }
    r
}

/// Subresultant PRS of `f` and `g` with respect to `v` (Brown's algorithm).
///
/// Returns the sequence `[f, g, ...]` (with `f, g` swapped when
/// `deg f < deg g`) and, aligned with it, the principal scalar
/// subresultants; the first scalar is 1 by convention.
pub fn subresultant_prs(f: &MPoly, g: &MPoly, v: Var) -> (Vec<MPoly>, Vec<MPoly>) {
    let (prs, sc) = subresultant_prs_dense(f.coeffs_in(v), g.coeffs_in(v));
    (
        prs.iter().map(|d| MPoly::from_coeffs_in(v, d)).collect(),
        sc,
    )
}

fn subresultant_prs_dense(f: Dense, g: Dense) -> (Vec<Dense>, Vec<MPoly>) {
    let (mut f, mut g) = (trim(f), trim(g));
    if deg(&f) < deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    if f.is_empty() {
        return (vec![], vec![]);
    }
    if g.is_empty() {
        return (vec![f], vec![MPoly::one()]);
    }
    let n = deg(&f).unwrap();
    let mut m = deg(&g).unwrap();
    let mut d = n - m;
    let mut h = prem(&f, &g);
    if (d + 1) % 2 == 1 {
        h = h.iter().map(|c| -c).collect();
    }
    let mut lcg = lc(&g).clone();
    let mut cc = lcg.pow(d as u32);
    let mut scalars = vec![MPoly::one(), cc.clone()];
    let mut prs = vec![f, g.clone()];
    cc = -cc;
    let mut g = g;
    while !h.is_empty() {
        let k = deg(&h).unwrap();
        prs.push(h.clone());
        let f = std::mem::replace(&mut g, h);
        d = m - k;
        m = k;
        let b = -(&lcg * &cc.pow(d as u32));
        h = dense_div(&prem(&f, &g), &b);
        lcg = lc(&g).clone();
        if d > 1 {
            let q = cc.pow(d as u32 - 1);
            let num = (-&lcg).pow(d as u32);
            cc = num.div_exact(&q).expect("exact subresultant scalar");
        } else {
            cc = -&lcg;
        }
        scalars.push(-&cc);
    }
    (prs, scalars)
}

/// Resultant of `p` and `q` with respect to `v`, matching the determinant of
/// the Sylvester matrix with the rows of `p` first.
pub fn resultant(p: &MPoly, q: &MPoly, v: Var) -> MPoly {
    resultant_checked(p, q, v).0
}

/// Like [`resultant`] but also reports whether an input was zero.
pub fn resultant_checked(p: &MPoly, q: &MPoly, v: Var) -> (MPoly, bool) {
    if p.is_zero() || q.is_zero() {
        return (MPoly::zero(), true);
    }
    let n = p.deg(v);
    let m = q.deg(v);
    if m == 0 {
        return (q.pow(n), false);
    }
    if n == 0 {
        return (p.pow(m), false);
    }
    let (prs, sc) = subresultant_prs_dense(p.coeffs_in(v), q.coeffs_in(v));
    let last = prs.last().unwrap();
    let r = if deg(last) != Some(0) {
        MPoly::zero()
    } else {
        sc.last().unwrap().clone()
    };
    // The PRS works with the higher-degree operand first.
    let r = if n < m && (n * m) % 2 == 1 { -r } else { r };
    (r, false)
}

/// `Res_v(p, dp/dv)`, without dividing out the leading coefficient.
pub fn discriminant(p: &MPoly, v: Var) -> Result<MPoly> {
    if p.deg(v) == 0 {
        return Err(Error::DegreeZero {
            op: "discriminant",
            var: v.name(),
        });
    }
    Ok(resultant(p, &p.derivative(v), v))
}

/// Sylvester matrix of `p` and `q` in `v`: `deg q` rows of `p`, then `deg p` rows of `q`.
pub fn sylvester_matrix(p: &MPoly, q: &MPoly, v: Var) -> Vec<Vec<MPoly>> {
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let n = pc.len().saturating_sub(1);
    let m = qc.len().saturating_sub(1);
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![MPoly::zero(); size];
        for (j, c) in pc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![MPoly::zero(); size];
        for (j, c) in qc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn bareiss_determinant(mut a: Vec<Vec<MPoly>>) -> MPoly {
    let n = a.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return MPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss exact division");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Resultant through the Bareiss determinant of the Sylvester matrix.
pub fn resultant_bareiss(p: &MPoly, q: &MPoly, v: Var) -> MPoly {
    if p.is_zero() || q.is_zero() {
        return MPoly::zero();
    }
    bareiss_determinant(sylvester_matrix(p, q, v))
}

fn content_dense(coeffs: &[MPoly]) -> MPoly {
    let mut cs: Vec<&MPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    cs.sort_by_key(|c| (c.total_degree(), c.num_terms()));
    let mut ic = BigInt::zero();
    for c in &cs {
        ic = ic.gcd(&c.integer_content());
    }
    let mut g = MPoly::zero();
    for c in cs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    // The polynomial gcd is content-free; put the integer content back.
    g.scale(&ic)
}

/// Gcd of the coefficients of `p` as a polynomial in `v`, in normalized form.
pub fn content(p: &MPoly, v: Var) -> Result<MPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("content"));
    }
    Ok(content_dense(&p.coeffs_in(v)))
}

/// `p / content(p, v)`.
pub fn primitive_part(p: &MPoly, v: Var) -> Result<MPoly> {
    let c = content(p, v)?;
    Ok(p.div_exact(&c).expect("content divides"))
}

fn monomial_gcd(a: &Exponents, b: &Exponents) -> Exponents {
    let mut m = [0; NVARS];
    for i in 0..NVARS {
        m[i] = a[i].min(b[i]);
    }
    m
}

/// Greatest common divisor, in normalized form (`gcd(0, 0) = 0`).
pub fn gcd(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if let (Some(a), Some(b)) = (p.as_constant(), q.as_constant()) {
        return MPoly::constant(a.gcd(&b));
    }
    // Split off monomial parts, which the PRS handles poorly.
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mg = monomial_gcd(&mp, &mq);
    let p1 = p.div_monomial(&mp);
    let q1 = q.div_monomial(&mq);
    let core = gcd_no_monomial(&p1, &q1);
    core.mul_monomial(&mg, &BigInt::one()).normalized()
}

fn gcd_no_monomial(p: &MPoly, q: &MPoly) -> MPoly {
    if let (Some(a), Some(b)) = (p.as_constant(), q.as_constant()) {
        return MPoly::constant(a.gcd(&b));
    }
    if p == q {
        return p.normalized();
    }
    // Cheap divisibility checks.
    if p.num_terms() <= q.num_terms() {
        if q.div_exact(p).is_some() {
            return p.normalized();
        }
    } else if p.div_exact(q).is_some() {
        return q.normalized();
    }
    // A variable that only one side has lets us drop to its content.
    for v in Var::ALL {
        let (dp, dq) = (p.depends_on(v), q.depends_on(v));
        if dp && !dq {
            return gcd(&content_dense(&p.coeffs_in(v)), q);
        }
        if dq && !dp {
            return gcd(p, &content_dense(&q.coeffs_in(v)));
        }
    }
    // Both depend on the same variables; eliminate the one of lowest degree.
    let v = Var::ALL
        .into_iter()
        .filter(|&v| p.depends_on(v))
        .min_by_key(|&v| p.deg(v).max(q.deg(v)))
        .expect("non-constant");
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let cp = content_dense(&pc);
    let cq = content_dense(&qc);
    let cg = gcd(&cp, &cq);
    if image_gcd_is_constant(p, q, v) {
        return cg.normalized();
    }
    let pp = dense_div(&pc, &cp);
    let qp = dense_div(&qc, &cq);
    let (prs, _) = subresultant_prs_dense(pp, qp);
    let last = prs.last().unwrap();
    let g = if deg(last) == Some(0) {
        MPoly::one()
    } else {
        let c = content_dense(last);
        MPoly::from_coeffs_in(v, &dense_div(last, &c))
    };
    (&g * &cg).normalized()
}

/// Whether `gcd(p, q)` has degree 0 in `v`, decided by evaluating the other
/// variables at small integers where neither leading coefficient in `v`
/// vanishes. The gcd's image divides both images with undiminished degree,
/// so a constant image gcd is a proof. `false` means "unknown".
fn image_gcd_is_constant(p: &MPoly, q: &MPoly, v: Var) -> bool {
    let others: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&w| w != v && (p.depends_on(w) || q.depends_on(w)))
        .collect();
    if others.is_empty() {
        return false;
    }
    let (dp, dq) = (p.deg(v) as usize, q.deg(v) as usize);
    for attempt in 0..3i64 {
        let point: Vec<(Var, Rational)> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, Rational::from_integer((2 + 3 * attempt + 5 * i as i64).into())))
            .collect();
        let image = |f: &MPoly| UPoly::from_mpoly(&f.specialize(&point).0, v);
        let (Some(a), Some(b)) = (image(p), image(q)) else {
            continue;
        };
        if a.degree() != Some(dp) || b.degree() != Some(dq) {
            continue;
        }
        return a.gcd(&b).deg() == 0;
    }
    false
}

/// Gcd of a list of polynomials.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a MPoly>>(ps: I) -> MPoly {
    let mut g = MPoly::zero();
    for p in ps {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Product of the distinct irreducible factors of `p`, each once, normalized.
///
/// Factors free of every variable in `vars` are split off first and reduced
/// over their own variables, so the result is the full square-free part.
pub fn squarefree_part(p: &MPoly, vars: &[Var]) -> Result<MPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    Ok(sqf_rec(&p.normalized(), vars))
}

fn sqf_rec(p: &MPoly, vars: &[Var]) -> MPoly {
    if p.is_constant() {
        return MPoly::one();
    }
    let mono = p.monomial_content();
    let mut mono_sqf = MPoly::one();
    for v in Var::ALL {
        if mono[v.index()] > 0 {
            mono_sqf = &mono_sqf * &MPoly::var(v);
        }
    }
    let p = p.div_monomial(&mono);
    let active: Vec<Var> = vars.iter().copied().filter(|&v| p.depends_on(v)).collect();
    if active.is_empty() {
        let rest: Vec<Var> = p.variables();
        if rest.is_empty() {
            return mono_sqf;
        }
        return (&mono_sqf * &sqf_rec(&p, &rest)).normalized();
    }
    // Content with respect to the active variables jointly.
    let c = joint_content(&p, &active);
    let (c_part, p) = if c.is_constant() {
        (MPoly::one(), p)
    } else {
        let others = c.variables();
        (sqf_rec(&c, &others), p.div_exact(&c).expect("content divides"))
    };
    let mut g = p.clone();
    for &v in &active {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, &p.derivative(v));
    }
    let core = p.div_exact(&g).expect("gcd divides");
    (&(&mono_sqf * &c_part) * &core).normalized()
}

/// Gcd of the coefficients of `p` seen as a polynomial in `vars` jointly.
pub fn joint_content(p: &MPoly, vars: &[Var]) -> MPoly {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<Vec<u32>, Vec<(Exponents, BigInt)>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let key: Vec<u32> = vars.iter().map(|v| e[v.index()]).collect();
        let mut f = *e;
        for v in vars {
            f[v.index()] = 0;
        }
        groups.entry(key).or_default().push((f, c.clone()));
    }
    let coeffs: Vec<MPoly> = groups.into_values().map(MPoly::from_terms).collect();
    content_dense(&coeffs)
}

/// Splits `p` into `(q, u)` where `u` collects every factor depending only on `v`
/// (normalized, integer content excluded) and `p = q * u` exactly.
pub fn remove_univariate_factors(p: &MPoly, v: Var) -> Result<(MPoly, MPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("remove_univariate_factors"));
    }
    let others: Vec<Var> = Var::ALL.into_iter().filter(|&w| w != v).collect();
    let u = joint_content(p, &others).normalized();
    let u = if u.is_constant() { MPoly::one() } else { u };
    let q = p.div_exact(&u).expect("content divides");
    Ok((q, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c, s, t, x, y};

    #[test]
    fn gcd_examples() {
        let a = &(&x() - &c(1)).pow(2) * &(&x() + &c(2));
        let b = &(&x() - &c(1)) * &(&x() + &c(3));
        assert_eq!(gcd(&a, &b), &x() - &c(1));
        let p = &c(-3) * &(&t() + &s());
        assert_eq!(gcd(&p, &MPoly::zero()), &t() + &s());
        assert_eq!(gcd(&(&t().pow(2) - &s().pow(2)), &(&t() - &s())), &t() - &s());
    }

    #[test]
    fn gcd_multivariate() {
        let f1 = &(&x() * &t()) + &(&y() - &s());
        let f2 = &(&x().pow(2) + &t()) - &c(3);
        let f3 = &(&y() * &s()) + &c(1);
        let a = &(&f1 * &f2) * &f3.pow(2);
        let b = &(&f1 * &f3) * &(&x() - &t());
        assert_eq!(gcd(&a, &b), (&f1 * &f3).normalized());
    }

    #[test]
    fn content_examples() {
        let p = &(&t() * &x().pow(2)) + &(&t() * &s());
        assert_eq!(content(&p, Var::X).unwrap(), t());
        assert_eq!(content(&(&x().pow(2) + &c(1)), Var::X).unwrap(), c(1));
        assert_eq!(content(&(&(&c(2) * &x()) + &c(2)), Var::X).unwrap(), c(2));
        assert!(content(&MPoly::zero(), Var::X).is_err());
    }

    #[test]
    fn squarefree_examples() {
        let p = &(&x() - &c(1)).pow(2) * &(&x() + &c(2));
        assert_eq!(
            squarefree_part(&p, &[Var::X]).unwrap(),
            &(&x().pow(2) + &x()) - &c(2)
        );
        let q = &(&x() * &y()) + &(&t() * &s());
        assert_eq!(squarefree_part(&q, &[Var::X]).unwrap(), q.normalized());
        let r = &(&c(4) * &t()) * &(&t().pow(2) - &c(1)).pow(2);
        assert_eq!(squarefree_part(&r, &[Var::T]).unwrap(), &t().pow(3) - &t());
    }

    #[test]
    fn squarefree_keeps_factors_outside_vars() {
        let p = &t().pow(3) * &(&x() - &c(1)).pow(2);
        assert_eq!(squarefree_part(&p, &[Var::X]).unwrap(), (&t() * &(&x() - &c(1))));
        let q = &(&t() + &s()).pow(2) * &(&x() - &s());
        assert_eq!(
            squarefree_part(&q, &[Var::X]).unwrap(),
            (&(&t() + &s()) * &(&x() - &s())).normalized()
        );
    }

    #[test]
    fn resultant_examples() {
        let a = MPoly::var(Var::T);
        let b = MPoly::var(Var::S);
        assert_eq!(resultant(&(&x() - &a), &(&x() - &b), Var::X), &a - &b);
        assert_eq!(resultant(&(&y().pow(2) - &x()), &(&c(2) * &y()), Var::Y), &c(-4) * &x());
        assert_eq!(resultant(&(&x().pow(2) - &t()), &(&c(2) * &x()), Var::X), &c(-4) * &t());
    }

    #[test]
    fn resultant_degree_zero_operand() {
        let p = &x().pow(3) + &t();
        assert_eq!(resultant(&p, &c(5), Var::X), c(125));
        assert_eq!(resultant(&c(5), &p, Var::X), c(125));
        assert!(resultant_checked(&p, &MPoly::zero(), Var::X).1);
    }

    #[test]
    fn resultant_matches_bareiss_small() {
        let p = &(&(&x().pow(3) * &t()) - &(&x() * &s())) + &c(2);
        let q = &(&x().pow(2) * &s()) + &(&x() * &t()) - &c(1);
        assert_eq!(resultant(&p, &q, Var::X), resultant_bareiss(&p, &q, Var::X));
        assert_eq!(resultant(&q, &p, Var::X), resultant_bareiss(&q, &p, Var::X));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&(&y().pow(2) - &x()), Var::Y).unwrap(), &c(-4) * &x());
        assert_eq!(discriminant(&(&x().pow(2) - &t()), Var::X).unwrap(), &c(-4) * &t());
        assert!(discriminant(&(&x() + &c(1)), Var::Y).is_err());
    }

    #[test]
    fn remove_univariate_examples() {
        let p = &x().pow(2) - &c(1);
        assert_eq!(remove_univariate_factors(&p, Var::T).unwrap(), (p.clone(), c(1)));
        let q = &(&t() * &(&t() - &c(1))) * &(&x() + &t());
        assert_eq!(
            remove_univariate_factors(&q, Var::T).unwrap(),
            (&x() + &t(), &t().pow(2) - &t())
        );
    }
}
