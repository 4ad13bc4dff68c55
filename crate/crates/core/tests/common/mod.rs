//! Fixtures, random generators and a numeric oracle shared by the
//! integration tests.
#![allow(dead_code)]

use curvefam::cli::{parse_polynomial, VarNames};
use curvefam::elim;
use curvefam::poly::{MPoly, Rational, Var};
use curvefam::realalg;
use rand::Rng;

pub fn parse(text: &str) -> MPoly {
    parse_polynomial(text, &VarNames::standard()).unwrap().poly
}

pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

pub fn cassini() -> MPoly {
    parse("(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4")
}

/// The offset family of `y^2 - 2 p x` with `p = t`, `d = s`.
pub fn offset() -> MPoly {
    let text = "-8*d^2*y^2*x^2+y^4*p^2+4*x^2*y^4+4*y^6-12*d^2*y^4+12*y^2*d^4+4*d^4*x^2\
        -4*d^6-20*p^2*d^2*y^2+4*p*y^2*x*d^2-4*p^4*d^2-8*p^2*d^4-8*p^2*d^2*x^2-16*p*x^3*d^2\
        -16*p*x^3*y^2+32*p^2*y^2*x^2-4*p^3*y^2*x-20*p*x*y^4+16*p*x*d^4+16*p^3*d^2*x\
        +16*p^2*x^4-16*p^3*x^3+4*p^4*x^2";
    let names = VarNames::new(["x", "y"], &["p", "d"]).unwrap();
    parse_polynomial(text, &names).unwrap().poly
}

pub fn linear_system() -> MPoly {
    parse("-1 + x^2 + t*(x-y) + s*(x^3-y)")
}

pub fn fixtures() -> Vec<(&'static str, MPoly)> {
    vec![
        ("cassini", cassini()),
        ("offset", offset()),
        ("linear system", linear_system()),
    ]
}

/// Sparse polynomial with `terms` random monomials, exponent of each
/// variable in `vars` at most `max_deg`, coefficients in `-c..=c`.
pub fn random_poly<R: Rng>(rng: &mut R, vars: &[Var], max_deg: u32, terms: usize, c: i64) -> MPoly {
    let mut out = MPoly::zero();
    for _ in 0..terms {
        let mut e = [0u32; 4];
        for v in vars {
            e[v.index()] = rng.gen_range(0..=max_deg);
        }
        let k = loop {
            let k = rng.gen_range(-c..=c);
            if k != 0 {
                break k;
            }
        };
        out = &out + &MPoly::monomial(e, k);
    }
    out
}

/// Random family `y^n + (lower terms in y)` with `n` in 2..=3 and every
/// other exponent at most 2. Being monic in `y` keeps it in normal
/// position without a shear.
pub fn random_monic_family<R: Rng>(rng: &mut R) -> MPoly {
    let n = rng.gen_range(2..=3u32);
    let mut out = MPoly::monomial([0, n, 0, 0], 1);
    for _ in 0..rng.gen_range(2..=4) {
        let e = [
            rng.gen_range(0..=2),
            rng.gen_range(0..n),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
        ];
        let k = loop {
            let k = rng.gen_range(-5i64..=5);
            if k != 0 {
                break k;
            }
        };
        out = &out + &MPoly::monomial(e, k);
    }
    out
}

/// Dense polynomial in `x, y` of total degree at most `deg`, each
/// coefficient zero with probability one half.
pub fn random_curve<R: Rng>(rng: &mut R, deg: u32) -> MPoly {
    let mut out = MPoly::zero();
    for i in 0..=deg {
        for j in 0..=(deg - i) {
            if rng.gen_bool(0.5) {
                out = &out + &MPoly::monomial([i, j, 0, 0], rng.gen_range(-4i64..=4));
            }
        }
    }
    out
}

pub fn random_rational<R: Rng>(rng: &mut R, range: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    Rational::new(rng.gen_range(-range * den..=range * den).into(), den.into())
}

fn abs_roots(p: &MPoly) -> Vec<f64> {
    if p.is_zero() || p.is_constant() {
        return vec![];
    }
    realalg::isolate_mpoly(p)
        .unwrap()
        .roots()
        .iter()
        .map(|a| a.to_f64().abs())
        .collect()
}

/// `Res_v(a, b)` after removing the common factor, times that factor when it
/// is free of `v`. A common factor in `v` alone is a family of lines along
/// the other axis; the projection in the other direction sees it.
fn projection(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    if b.is_zero() {
        return MPoly::zero();
    }
    let g = elim::gcd(a, b);
    let a = a.div_exact(&g).unwrap();
    let b = b.div_exact(&g).unwrap();
    let mut r = elim::resultant(&a, &b, v);
    if !g.is_constant() && !g.depends_on(v) {
        r = &r * &g;
    }
    r
}

/// Extent of a curve for the grid oracle.
#[derive(Clone, Copy, Debug)]
pub struct GridBox {
    /// Half-widths `(X, Y)` of a box holding every point where a tangent is
    /// horizontal or vertical, every singular point, and every branch over
    /// the extreme abscissae. Each component meets it in a connected set.
    pub outer: (f64, f64),
    /// Half-widths of the smaller box around the critical points alone,
    /// where components come close and the grid is refined.
    pub inner: (f64, f64),
}

pub fn bounding_box(g: &MPoly) -> GridBox {
    let (gx, gy) = (g.derivative(Var::X), g.derivative(Var::Y));
    let mut xs = abs_roots(&projection(g, &gy, Var::Y).normalized());
    xs.extend(abs_roots(&projection(g, &gx, Var::Y).normalized()));
    let mut ys = abs_roots(&projection(g, &gx, Var::X).normalized());
    ys.extend(abs_roots(&projection(g, &gy, Var::X).normalized()));
    let widen = |v: &[f64]| v.iter().cloned().fold(1.0f64, f64::max) * 1.5 + 1.0;
    let x_max = widen(&xs);
    let y_inner = widen(&ys);
    for x0 in [-x_max, 0.0, x_max] {
        let r = Rational::from_float(x0).unwrap();
        let (u, _) = g.specialize(&[(Var::X, r)]);
        if !u.is_zero() {
            ys.extend(abs_roots(&u));
        }
    }
    GridBox { outer: (x_max, widen(&ys)), inner: (x_max, y_inner) }
}

/// Grid lines `-H + (k + 1/7) 2H/n` for `k = 0..=n`, with `H` the half-width
/// rounded up to an integer, merged with the same pattern over the inner
/// half-width when that is much smaller. Small denominators keep the
/// specializations cheap; the offset keeps lines off simple rational points.
fn grid_lines(outer: f64, inner: f64, n: usize) -> Vec<Rational> {
    let uniform = |half: f64, n: usize| {
        let h = Rational::from_integer((half.ceil() as i64).into());
        let step = &h * Rational::new(2.into(), (n as i64).into());
        (0..=n)
            .map(|k| -&h + &step * Rational::new((7 * k as i64 + 1).into(), 7.into()))
            .collect::<Vec<_>>()
    };
    if inner.ceil() * 4.0 > outer.ceil() {
        return uniform(outer, n);
    }
    let mut lines = uniform(outer, n / 2);
    lines.extend(uniform(inner, n / 2));
    lines.sort();
    lines.dedup();
    lines
}

/// For each real root `r` of `u` inside the grid, the cells `j` with
/// `lines[j] <= r <= lines[j + 1]`: one cell, or two when `r` is a grid line.
fn crossings(u: &MPoly, lines: &[Rational]) -> Vec<Vec<usize>> {
    if u.is_zero() || u.is_constant() {
        return vec![];
    }
    let (lo, hi) = (&lines[0], &lines[lines.len() - 1]);
    let last = lines.len() - 2;
    let mut out = vec![];
    for root in realalg::isolate_mpoly(u).unwrap().roots() {
        if let Some(r) = root.rational_value() {
            if r < lo || r > hi {
                continue;
            }
            let k = lines.partition_point(|l| l < r);
            out.push(if lines.get(k) == Some(r) {
                [k.checked_sub(1), (k <= last).then_some(k)].into_iter().flatten().collect()
            } else {
                vec![k - 1]
            });
            continue;
        }
        // An irrational root is the only root of its defining polynomial in
        // its interval and is simple, so the sign flips exactly once there.
        let (a, b) = root.interval();
        if b <= lo || a >= hi {
            continue;
        }
        let p = root.defining();
        let sa = p.sign_at(a);
        let (ja, jb) = (lines.partition_point(|l| l <= a), lines.partition_point(|l| l < b));
        let k = ja + lines[ja..jb].partition_point(|l| p.sign_at(l) == sa);
        if k > 0 && k <= last + 1 {
            out.push(vec![k - 1]);
        }
    }
    out
}

/// Connected components of the curve `g = 0` traced on a grid of about `n`
/// lines per axis over the outer box. The crossings with every grid line are
/// found exactly; all crossings on the boundary of one cell are joined.
/// Two components sharing a cell are merged and an oval inside a single
/// cell is missed; a finer grid removes both. Isolated points are invisible.
pub fn grid_components(g: &MPoly, bx: GridBox, n: usize) -> usize {
    let xs = grid_lines(bx.outer.0, bx.inner.0, n);
    let ys = grid_lines(bx.outer.1, bx.inner.1, n);
    let (nx, ny) = (xs.len() - 1, ys.len() - 1);
    let mut parent: Vec<usize> = vec![];
    // Crossing ids on the boundary of each cell.
    let mut cell_points: Vec<Vec<usize>> = vec![vec![]; nx * ny];
    let mut add = |cells: &[(usize, usize)], parent: &mut Vec<usize>| {
        let id = parent.len();
        parent.push(id);
        for &(i, j) in cells {
            cell_points[i * ny + j].push(id);
        }
    };
    for (i, x0) in xs.iter().enumerate() {
        let (u, _) = g.specialize(&[(Var::X, x0.clone())]);
        for rows in crossings(&u, &ys) {
            let cols = [i.checked_sub(1), (i < nx).then_some(i)];
            let sides: Vec<(usize, usize)> = cols
                .into_iter()
                .flatten()
                .flat_map(|c| rows.iter().map(move |&j| (c, j)))
                .collect();
            add(&sides, &mut parent);
        }
    }
    for (j, y0) in ys.iter().enumerate() {
        let (u, _) = g.specialize(&[(Var::Y, y0.clone())]);
        for cols in crossings(&u, &xs) {
            let rows = [j.checked_sub(1), (j < ny).then_some(j)];
            let sides: Vec<(usize, usize)> = rows
                .into_iter()
                .flatten()
                .flat_map(|r| cols.iter().map(move |&i| (i, r)))
                .collect();
            add(&sides, &mut parent);
        }
    }
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for pts in &cell_points {
        for w in pts.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut roots = std::collections::BTreeSet::new();
    for k in 0..parent.len() {
        roots.insert(find(&mut parent, k));
    }
    roots.len()
}

/// Number of real roots of `g(x0, y)` by Sturm's theorem.
pub fn sturm_fiber_count(g: &MPoly, x0: &Rational) -> usize {
    let (u, _) = g.specialize(&[(Var::X, x0.clone())]);
    let u = curvefam::upoly::UPoly::from_any(&u).unwrap();
    if u.is_zero() {
        return usize::MAX;
    }
    realalg::sturm_root_count(&u)
}
