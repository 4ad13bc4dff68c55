//! Two-parameter families `F(x, y, t, s)`: discriminant polynomials, the
//! critical set of the `t` axis and a cell decomposition of the `(t, s)`
//! plane over which the topology type of `F(x, y, t0, s0) = 0` is constant.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::curvetopo::{self, TopologyGraph};
use crate::elim;
use crate::error::{Error, Result};
use crate::family1d;
use crate::poly::{MPoly, Rational, Var};
use crate::realalg::{self, AlgebraicNumber, SortedRootList};

/// Number of shears tried before normalization gives up.
const MAX_SHEARS: usize = 16;

/// A family in normal position.
#[derive(Clone, Debug)]
pub struct FamilyInput {
    /// The normalized polynomial, after the shear.
    pub f: MPoly,
    /// The original polynomial as given.
    pub raw: MPoly,
    /// `x` was replaced by `x + shear * y`.
    pub shear: i64,
    /// Factor depending only on `t, s` found in the input; always `1` for
    /// accepted families.
    pub removed_param_factor: MPoly,
    /// `M` and `R`, found while choosing the shear.
    m_r: (MPoly, MPoly),
}

/// The polynomials driving the decomposition. Fields not used by the
/// selected branch are zero.
#[derive(Clone, Debug)]
pub struct DiscriminantData {
    /// Square-free part of `D_y F`, in `x, t, s`.
    pub m: MPoly,
    /// Square-free part of `D_x M`, in `t, s`.
    pub r: MPoly,
    /// Square-free part of `Res_s(F, R)`, in `x, y, t`.
    pub gtilde: MPoly,
    /// `gtilde` without its factors in `t` alone.
    pub g: MPoly,
    /// The factors of `gtilde` in `t` alone.
    pub t_line_factors: MPoly,
    /// Content of `R` as a polynomial in `s`; its roots are vertical lines.
    pub rs_content: MPoly,
    /// `F` without `y`: square-free part of `D_x F`, in `t, s`.
    pub p: MPoly,
    /// `F` without `y`: square-free part of `Res_s(P, F)`, in `x, t`.
    pub j: MPoly,
    /// `M` without `x`: square-free part of `Res_s(F, M)`, in `x, y, t`.
    pub k: MPoly,
}

/// Which case of the construction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "generic_R")]
    GenericR,
    #[serde(rename = "R_univariate_t")]
    RUnivariateT,
    #[serde(rename = "R_univariate_s")]
    RUnivariateS,
    #[serde(rename = "R_zero_M_zero")]
    RZeroMZero,
    #[serde(rename = "R_zero_M_ts")]
    RZeroMTs,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap_or_default())
    }
}

fn shear_sequence() -> impl Iterator<Item = i64> {
    (0..MAX_SHEARS as i64).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

fn apply_shear(f: &MPoly, k: i64) -> MPoly {
    if k == 0 {
        return f.clone();
    }
    let xk = &MPoly::var(Var::X) + &(&MPoly::constant(k) * &MPoly::var(Var::Y));
    f.compose(Var::X, &xk)
}

fn lc_y_free_of_x(f: &MPoly) -> bool {
    f.deg(Var::Y) == 0 || !f.leading_coefficient(Var::Y).0.depends_on(Var::X)
}

/// Square-free part, hypothesis checks and a shear making the leading
/// coefficients in `y` of `F` and of `Res_s(F, R)` free of `x`.
pub fn normalize_family(raw: &MPoly) -> Result<FamilyInput> {
    if raw.is_zero() {
        return Err(Error::ZeroPolynomial("normalize_family"));
    }
    if !raw.depends_on(Var::X) && !raw.depends_on(Var::Y) {
        return Err(Error::Hypothesis("family involves neither x nor y".into()));
    }
    let sq = elim::squarefree_part(raw, &Var::ALL)?;
    let param = elim::joint_content(&sq, &[Var::X, Var::Y]).normalized();
    if !param.is_constant() {
        return Err(Error::Hypothesis(format!(
            "factor {param} depends only on the parameters"
        )));
    }
    for k in shear_sequence() {
        let f = apply_shear(&sq, k).normalized();
        if !lc_y_free_of_x(&f) {
            continue;
        }
        let (m, r) = m_and_r(&f)?;
        // lc_y of a product is the product of the lc_y, so the resultant
        // itself can be tested in place of its square-free part.
        let res_ok = r.is_zero()
            || !r.depends_on(Var::S)
            || !r.depends_on(Var::T)
            || lc_y_free_of_x(&elim::resultant(&f, &r, Var::S));
        if res_ok {
            return Ok(FamilyInput {
                f,
                raw: raw.clone(),
                shear: k,
                removed_param_factor: MPoly::one(),
                m_r: (m, r),
            });
        }
    }
    Err(Error::Hypothesis(format!(
        "no shear among the first {MAX_SHEARS} puts the family in normal position"
    )))
}

/// `M` and `R` alone, without the later eliminations.
pub fn primary_discriminants(fi: &FamilyInput) -> (MPoly, MPoly) {
    fi.m_r.clone()
}

/// `M`, `R`, `G~`, `G` and their companions for a normalized family.
pub fn compute_discriminants(fi: &FamilyInput) -> Result<DiscriminantData> {
    let (m, r) = fi.m_r.clone();
    discriminants_from(&fi.f, m, r)
}

fn sqf(p: &MPoly, vars: &[Var]) -> Result<MPoly> {
    if p.is_zero() {
        return Ok(MPoly::zero());
    }
    Ok(elim::squarefree_part(p, vars)?.normalized())
}

fn m_and_r(f: &MPoly) -> Result<(MPoly, MPoly)> {
    let m = if f.deg(Var::Y) == 0 {
        MPoly::zero()
    } else {
        sqf(&elim::discriminant(f, Var::Y)?, &[Var::X, Var::T, Var::S])?
    };
    let r = if m.deg(Var::X) == 0 {
        MPoly::zero()
    } else {
        sqf(&elim::discriminant(&m, Var::X)?, &[Var::T, Var::S])?
    };
    Ok((m, r))
}

fn discriminants_from(f: &MPoly, m: MPoly, r: MPoly) -> Result<DiscriminantData> {
    let zero = MPoly::zero;
    let mut d = DiscriminantData {
        m,
        r,
        gtilde: zero(),
        g: zero(),
        t_line_factors: zero(),
        rs_content: zero(),
        p: zero(),
        j: zero(),
        k: zero(),
    };
    if !d.r.is_zero() {
        d.rs_content = if d.r.depends_on(Var::S) {
            elim::content(&d.r, Var::S)?
        } else {
            d.r.clone()
        };
        if d.r.depends_on(Var::S) && d.r.depends_on(Var::T) {
            d.gtilde = sqf(&elim::resultant(f, &d.r, Var::S), &[Var::X, Var::Y, Var::T])?;
            if !d.gtilde.is_zero() {
                let (g, u) = elim::remove_univariate_factors(&d.gtilde, Var::T)?;
                d.g = g.normalized();
                d.t_line_factors = u;
            }
        }
    } else if d.m.is_zero() {
        d.p = sqf(&elim::discriminant(f, Var::X)?, &[Var::T, Var::S])?;
        if d.p.depends_on(Var::S) {
            d.j = sqf(&elim::resultant(&d.p, f, Var::S), &[Var::X, Var::T])?;
        }
    } else if d.m.depends_on(Var::S) {
        d.k = sqf(&elim::resultant(f, &d.m, Var::S), &[Var::X, Var::Y, Var::T])?;
    }
    Ok(d)
}

/// The case of the construction selected by the shape of `R` and `M`.
pub fn branch_of(d: &DiscriminantData) -> Branch {
    if d.r.is_zero() {
        if d.m.is_zero() {
            Branch::RZeroMZero
        } else {
            Branch::RZeroMTs
        }
    } else if !d.r.depends_on(Var::S) {
        Branch::RUnivariateT
    } else if !d.r.depends_on(Var::T) {
        Branch::RUnivariateS
    } else {
        Branch::GenericR
    }
}

/// Real roots of a polynomial in `t` alone; empty for constants.
fn roots_in_t(p: &MPoly) -> Result<SortedRootList> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("roots_in_t"));
    }
    if p.is_constant() {
        return Ok(SortedRootList::empty());
    }
    realalg::isolate_mpoly(p)
}

/// Critical `t` values of a one-parameter family `h(x, y, t)`: its factors in
/// `t` alone contribute their roots, the rest goes through `family1d`.
fn critical_values(h: &MPoly) -> Result<SortedRootList> {
    if h.is_zero() || h.is_constant() {
        return Ok(SortedRootList::empty());
    }
    let h = sqf(h, &[Var::X, Var::Y, Var::T])?;
    let (q, u) = elim::remove_univariate_factors(&h, Var::T)?;
    let mut lists = vec![roots_in_t(&u)?];
    if q.depends_on(Var::X) || q.depends_on(Var::Y) {
        lists.push(family1d::critical_set(&q.normalized())?.points);
    }
    Ok(realalg::merge_root_sets(&lists))
}

/// Roots of `D_s(p)` for `p` in `t, s`, or of `p` itself when it has no `s`.
fn s_discriminant_roots(p: &MPoly) -> Result<SortedRootList> {
    if !p.depends_on(Var::S) {
        return roots_in_t(p);
    }
    let d = elim::discriminant(p, Var::S)?;
    if d.is_zero() {
        return Err(Error::Hypothesis(format!("D_s of {p} vanishes")));
    }
    roots_in_t(&sqf(&d, &[Var::T])?)
}

/// The set of `t` values split off for a generic `R`: roots of `D_s R`
/// together with a critical set of the family `G`.
pub fn compute_a(d: &DiscriminantData) -> Result<SortedRootList> {
    if d.r.is_zero() || !d.r.depends_on(Var::S) || !d.r.depends_on(Var::T) {
        return Err(Error::Hypothesis(
            "the critical t values need R to involve both t and s".into(),
        ));
    }
    Ok(realalg::merge_root_sets(&[
        s_discriminant_roots(&d.r)?,
        critical_values(&d.g)?,
    ]))
}

/// A coordinate of a sample point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coord {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl Coord {
    pub fn of(a: &AlgebraicNumber) -> Coord {
        match a.rational_value() {
            Some(v) => Coord::Rational(v.clone()),
            None => Coord::Algebraic(a.clone()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coord::Rational(r) => Some(r),
            Coord::Algebraic(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coord::Rational(r) => AlgebraicNumber::rational(r.clone()).to_f64(),
            Coord::Algebraic(a) => a.to_f64(),
        }
    }
}

impl Serialize for Coord {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Coord::Rational(r) => ser.serialize_str(&r.to_string()),
            Coord::Algebraic(a) => a.serialize(ser),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Point,
    VerticalSegment,
    BranchArc,
    BranchBand,
    FullPlaneRegion,
}

impl CellKind {
    pub fn dim(self) -> usize {
        match self {
            CellKind::Point => 0,
            CellKind::VerticalSegment | CellKind::BranchArc => 1,
            CellKind::BranchBand | CellKind::FullPlaneRegion => 2,
        }
    }
}

/// A piece `t = t0, lo < s < hi` of a non-vertical critical line lying
/// inside a merged region.
#[derive(Clone, Debug, Serialize)]
pub struct LineSegment {
    pub t: AlgebraicNumber,
    pub s_lo: Option<AlgebraicNumber>,
    pub s_hi: Option<AlgebraicNumber>,
}

/// Exact description of a cell. Intervals of the `t` axis are numbered
/// left to right between consecutive critical values; `branch` is the rank
/// of a root of the curve polynomial in `s` over such an interval, and band
/// `b` lies between branches `b - 1` and `b`.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Description {
    Point {
        t: AlgebraicNumber,
        s: AlgebraicNumber,
    },
    VerticalSegment {
        t: AlgebraicNumber,
        s_lo: Option<AlgebraicNumber>,
        s_hi: Option<AlgebraicNumber>,
    },
    BranchArc {
        interval: usize,
        branch: usize,
        t_lo: Option<AlgebraicNumber>,
        t_hi: Option<AlgebraicNumber>,
    },
    BranchBand {
        interval: usize,
        band: usize,
        branches: usize,
        t_lo: Option<AlgebraicNumber>,
        t_hi: Option<AlgebraicNumber>,
    },
    Region {
        /// `(interval, band)` pairs.
        bands: Vec<(usize, usize)>,
        segments: Vec<LineSegment>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyStatus {
    Labeled,
    SkippedAlgebraicSample,
    NotRequested,
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub dim: usize,
    pub kind: CellKind,
    pub description: Description,
    pub sample: (Coord, Coord),
    pub topology_status: TopologyStatus,
    pub topology: Option<TopologyGraph>,
}

impl Cell {
    fn new(kind: CellKind, description: Description, sample: (Coord, Coord)) -> Cell {
        Cell {
            dim: kind.dim(),
            kind,
            description,
            sample,
            topology_status: TopologyStatus::NotRequested,
            topology: None,
        }
    }

    /// Both coordinates of the sample, when rational.
    pub fn rational_sample(&self) -> Option<(Rational, Rational)> {
        Some((
            self.sample.0.as_rational()?.clone(),
            self.sample.1.as_rational()?.clone(),
        ))
    }

    pub fn canonical_code(&self) -> Option<&str> {
        self.topology.as_ref().map(|g| g.canonical_code.as_str())
    }
}

/// The cell decomposition of the parameter plane.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub family: FamilyInput,
    pub data: DiscriminantData,
    pub branch: Branch,
    /// Critical values of `t` used for the sweep (vertical lines included).
    pub a_set: SortedRootList,
    /// The polynomial in `t, s` whose zero set carries the 0- and 1-cells.
    pub curve: MPoly,
    pub cells: Vec<Cell>,
    pub diagnostics: Vec<String>,
    vertical: Vec<bool>,
    gap_roots: Vec<SortedRootList>,
}

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    /// Compute topology labels at rational samples.
    pub label_topology: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            label_topology: true,
        }
    }
}

/// Normalizes and decomposes in one call.
pub fn analyze(raw: &MPoly, opts: &DecomposeOptions) -> Result<Decomposition> {
    decompose(&normalize_family(raw)?, opts)
}

/// Cell decomposition of the `(t, s)` plane for a normalized family.
pub fn decompose(fi: &FamilyInput, opts: &DecomposeOptions) -> Result<Decomposition> {
    let data = compute_discriminants(fi)?;
    let branch = branch_of(&data);
    let mut diagnostics = vec![];
    let (curve, a_set) = match branch {
        Branch::GenericR => (data.r.clone(), compute_a(&data)?),
        Branch::RUnivariateT => (data.r.clone(), roots_in_t(&data.r)?),
        Branch::RUnivariateS => {
            let a = horizontal_critical_values(&fi.f, &data.r, &mut diagnostics)?;
            (data.r.clone(), a)
        }
        Branch::RZeroMZero | Branch::RZeroMTs => return decompose_degenerate(fi, &data, opts),
    };
    finish(fi, data, branch, curve, a_set, diagnostics, opts)
}

/// The construction for `R = 0`: the curve `P = 0` (when `F` has no `y`) or
/// `M = 0` (when `M` has no `x`) replaces `R = 0`, and the critical values
/// come from `D_s` of that curve and the family `J` or `K`.
pub fn decompose_degenerate(
    fi: &FamilyInput,
    data: &DiscriminantData,
    opts: &DecomposeOptions,
) -> Result<Decomposition> {
    let branch = branch_of(data);
    let (curve, companion) = match branch {
        Branch::RZeroMZero => (data.p.clone(), &data.j),
        Branch::RZeroMTs => (data.m.clone(), &data.k),
        _ => {
            return Err(Error::Hypothesis(
                "degenerate decomposition needs R = 0".into(),
            ))
        }
    };
    if curve.is_zero() {
        return Err(Error::Hypothesis("family is constant in x and y".into()));
    }
    let a_set = realalg::merge_root_sets(&[
        s_discriminant_roots(&curve)?,
        critical_values(companion)?,
    ]);
    finish(fi, data.clone(), branch, curve, a_set, vec![], opts)
}

/// `R` in `s` alone: the horizontal lines `s = b` are cut at the critical
/// values of the families `F(x, y, t, b)`.
fn horizontal_critical_values(
    f: &MPoly,
    r: &MPoly,
    diagnostics: &mut Vec<String>,
) -> Result<SortedRootList> {
    let roots = realalg::isolate_mpoly(r)?;
    let mut lists = vec![];
    for b in roots.roots() {
        match b.rational_value() {
            Some(v) => {
                let (h, _) = f.specialize(&[(Var::S, v.clone())]);
                match critical_values(&h) {
                    Ok(l) => lists.push(l),
                    Err(e) => diagnostics.push(format!(
                        "horizontal line s = {v} left unsplit: {e}"
                    )),
                }
            }
            None => diagnostics.push(format!(
                "horizontal line s = {b} has an irrational parameter and is left unsplit"
            )),
        }
    }
    Ok(realalg::merge_root_sets(&lists))
}

/// Roots in `s` of `curve(t0, s)`; `t0` must not be a vertical line.
fn s_roots_at(curve: &MPoly, t0: &Rational) -> Result<SortedRootList> {
    if !curve.depends_on(Var::S) {
        return Ok(SortedRootList::empty());
    }
    let (q, _) = curve.specialize(&[(Var::T, t0.clone())]);
    if q.is_zero() {
        return Err(Error::DegenerateFiber);
    }
    if q.is_constant() {
        return Ok(SortedRootList::empty());
    }
    realalg::isolate_mpoly(&q)
}

/// Split points of a vertical line `t = t0` from the one-parameter family
/// `F(x, y, t0, s)`, or `None` when the line is left whole.
fn vertical_line_points(
    f: &MPoly,
    t0: &AlgebraicNumber,
    diagnostics: &mut Vec<String>,
) -> Option<SortedRootList> {
    let Some(v) = t0.rational_value() else {
        diagnostics.push(format!(
            "vertical line t = {t0} has an irrational abscissa and is kept as a single cell"
        ));
        return None;
    };
    let (h, _) = f.specialize(&[(Var::T, v.clone())]);
    match critical_values(&h.swap_vars(Var::T, Var::S)) {
        Ok(l) => Some(l),
        Err(e) => {
            diagnostics.push(format!(
                "vertical line t = {v} kept as a single cell: {e}"
            ));
            None
        }
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn finish(
    fi: &FamilyInput,
    data: DiscriminantData,
    branch: Branch,
    curve: MPoly,
    a_set: SortedRootList,
    mut diagnostics: Vec<String>,
    opts: &DecomposeOptions,
) -> Result<Decomposition> {
    let has_s = curve.depends_on(Var::S);
    let content = if has_s {
        elim::content(&curve, Var::S)?
    } else {
        curve.clone()
    };
    let columns = realalg::merge_root_sets(&[a_set, roots_in_t(&content)?]);
    let vertical: Vec<bool> = columns
        .roots()
        .iter()
        .map(|a| {
            content.depends_on(Var::T)
                && realalg::sign_at_mpoly(&content, Var::T, a) == Ordering::Equal
        })
        .collect();
    let gap_roots: Vec<SortedRootList> = columns
        .gaps()
        .iter()
        .map(|t0| s_roots_at(&curve, t0))
        .collect::<Result<_>>()?;

    let n = columns.len();
    let bound = |j: usize| -> (Option<AlgebraicNumber>, Option<AlgebraicNumber>) {
        (
            j.checked_sub(1).map(|i| columns.roots()[i].clone()),
            columns.roots().get(j).cloned(),
        )
    };
    let mut offsets = vec![0];
    for l in &gap_roots {
        offsets.push(offsets.last().unwrap() + l.len() + 1);
    }
    let mut dsu = Dsu((0..*offsets.last().unwrap()).collect());
    let mut segments: Vec<(usize, LineSegment)> = vec![];
    let (mut points, mut lines) = (vec![], vec![]);

    for j in 0..=n {
        let t_j = &columns.gaps()[j];
        let (t_lo, t_hi) = bound(j);
        for (l, beta) in gap_roots[j].roots().iter().enumerate() {
            lines.push(Cell::new(
                CellKind::BranchArc,
                Description::BranchArc {
                    interval: j,
                    branch: l,
                    t_lo: t_lo.clone(),
                    t_hi: t_hi.clone(),
                },
                (Coord::Rational(t_j.clone()), Coord::of(beta)),
            ));
        }
        if j == n {
            break;
        }
        let a = &columns.roots()[j];
        if vertical[j] {
            let split = vertical_line_points(&fi.f, a, &mut diagnostics);
            let pts = split.unwrap_or_else(|| SortedRootList::from_distinct(vec![]));
            for p in pts.roots() {
                points.push(Cell::new(
                    CellKind::Point,
                    Description::Point {
                        t: a.clone(),
                        s: p.clone(),
                    },
                    (Coord::of(a), Coord::of(p)),
                ));
            }
            for (q, s_q) in pts.gaps().iter().enumerate() {
                lines.push(Cell::new(
                    CellKind::VerticalSegment,
                    Description::VerticalSegment {
                        t: a.clone(),
                        s_lo: q.checked_sub(1).map(|i| pts.roots()[i].clone()),
                        s_hi: pts.roots().get(q).cloned(),
                    },
                    (Coord::of(a), Coord::Rational(s_q.clone())),
                ));
            }
            continue;
        }
        let pts = if has_s {
            realalg::roots_at_algebraic_fiber(&curve, a)?
        } else {
            SortedRootList::empty()
        };
        for p in pts.roots() {
            points.push(Cell::new(
                CellKind::Point,
                Description::Point {
                    t: a.clone(),
                    s: p.clone(),
                },
                (Coord::of(a), Coord::of(p)),
            ));
        }
        // Each open piece of the line t = a between points joins one band
        // on each side; a horizontal probe at height s* finds which.
        for (q, s_star) in pts.gaps().iter().enumerate() {
            let (left, right) = if has_s {
                let (h, _) = curve.specialize(&[(Var::S, s_star.clone())]);
                let probe = realalg::merge_root_sets(&[columns.clone(), roots_in_t(&h)?]);
                let pos = probe.position(a).expect("column is in the probe list");
                let band = |t1: &Rational| -> Result<usize> {
                    let (below, on) = s_roots_at(&curve, t1)?.locate(s_star);
                    if on {
                        return Err(Error::Certification(
                            "horizontal probe met the curve".into(),
                        ));
                    }
                    Ok(below)
                };
                (band(&probe.gaps()[pos])?, band(&probe.gaps()[pos + 1])?)
            } else {
                (0, 0)
            };
            let (lb, rb) = (offsets[j] + left, offsets[j + 1] + right);
            dsu.union(lb, rb);
            segments.push((
                lb,
                LineSegment {
                    t: a.clone(),
                    s_lo: q.checked_sub(1).map(|i| pts.roots()[i].clone()),
                    s_hi: pts.roots().get(q).cloned(),
                },
            ));
        }
    }

    let mut regions = vec![];
    let total = *offsets.last().unwrap();
    let locate_band = |idx: usize| -> (usize, usize) {
        let j = offsets.iter().rposition(|&o| o <= idx).unwrap();
        (j, idx - offsets[j])
    };
    for idx in 0..total {
        if dsu.find(idx) != idx {
            continue;
        }
        let members: Vec<usize> = (0..total).filter(|&i| dsu.find(i) == idx).collect();
        let (j, b) = locate_band(idx);
        let t_j = columns.gaps()[j].clone();
        let s_b = gap_roots[j].gaps()[b].clone();
        let sample = (Coord::Rational(t_j), Coord::Rational(s_b));
        if members.len() == 1 {
            let (t_lo, t_hi) = bound(j);
            regions.push(Cell::new(
                CellKind::BranchBand,
                Description::BranchBand {
                    interval: j,
                    band: b,
                    branches: gap_roots[j].len(),
                    t_lo,
                    t_hi,
                },
                sample,
            ));
        } else {
            let segs = segments
                .iter()
                .filter(|(band, _)| dsu.find(*band) == idx)
                .map(|(_, s)| s.clone())
                .collect();
            regions.push(Cell::new(
                CellKind::FullPlaneRegion,
                Description::Region {
                    bands: members.into_iter().map(locate_band).collect(),
                    segments: segs,
                },
                sample,
            ));
        }
    }

    let mut cells = points;
    cells.extend(lines);
    cells.extend(regions);
    if opts.label_topology {
        let f = &fi.f;
        cells.par_iter_mut().for_each(|c| label(f, c));
        for c in &cells {
            if c.topology_status == TopologyStatus::Failed {
                diagnostics.push(format!(
                    "topology labeling failed for the {:?} cell at sample ({}, {})",
                    c.kind,
                    coord_text(&c.sample.0),
                    coord_text(&c.sample.1)
                ));
            }
        }
    }
    Ok(Decomposition {
        family: fi.clone(),
        data,
        branch,
        a_set: columns,
        curve,
        cells,
        diagnostics,
        vertical,
        gap_roots,
    })
}

fn coord_text(c: &Coord) -> String {
    match c {
        Coord::Rational(r) => r.to_string(),
        Coord::Algebraic(a) => a.to_string(),
    }
}

/// Topology graph of the member `F(x, y, t0, s0)` of the family.
pub fn topology_at(f: &MPoly, t0: &Rational, s0: &Rational) -> Result<TopologyGraph> {
    let (h, _) = f.specialize(&[(Var::T, t0.clone()), (Var::S, s0.clone())]);
    curvetopo::curve_topology(&h)
}

fn label(f: &MPoly, c: &mut Cell) {
    match c.rational_sample() {
        None => c.topology_status = TopologyStatus::SkippedAlgebraicSample,
        Some((t0, s0)) => match topology_at(f, &t0, &s0) {
            Ok(g) => {
                c.topology = Some(g);
                c.topology_status = TopologyStatus::Labeled;
            }
            Err(_) => c.topology_status = TopologyStatus::Failed,
        },
    }
}

fn strictly_between(
    lo: &Option<AlgebraicNumber>,
    hi: &Option<AlgebraicNumber>,
    v: &Rational,
) -> bool {
    let above = lo
        .as_ref()
        .is_none_or(|a| a.clone().cmp_rational(v) == Ordering::Less);
    let below = hi
        .as_ref()
        .is_none_or(|a| a.clone().cmp_rational(v) == Ordering::Greater);
    above && below
}

impl Decomposition {
    /// Real roots in `s` of the curve polynomial over a rational `t0` that
    /// is not a critical value.
    pub fn s_roots(&self, t0: &Rational) -> Result<SortedRootList> {
        s_roots_at(&self.curve, t0)
    }

    /// Number of cells of dimension 0, 1 and 2.
    pub fn counts(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for cell in &self.cells {
            c[cell.dim] += 1;
        }
        c
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim == dim)
    }

    /// Index of the open `t` interval containing `t0`, or `None` when `t0`
    /// is one of the critical values.
    fn interval_of(&self, t0: &Rational) -> Option<usize> {
        match self.a_set.locate(t0) {
            (j, false) => Some(j),
            _ => None,
        }
    }

    fn in_band(&self, j: usize, b: usize, t0: &Rational, s0: &Rational) -> bool {
        self.interval_of(t0) == Some(j)
            && s_roots_at(&self.curve, t0).is_ok_and(|l| l.locate(s0) == (b, false))
    }

    /// Whether the rational point `(t0, s0)` lies in the cell, decided from
    /// the cell's description alone.
    pub fn contains(&self, cell: &Cell, t0: &Rational, s0: &Rational) -> bool {
        let on_line = |t: &AlgebraicNumber| t.clone().cmp_rational(t0) == Ordering::Equal;
        match &cell.description {
            Description::Point { t, s } => {
                on_line(t) && s.clone().cmp_rational(s0) == Ordering::Equal
            }
            Description::VerticalSegment { t, s_lo, s_hi } => {
                on_line(t) && strictly_between(s_lo, s_hi, s0)
            }
            Description::BranchArc {
                interval, branch, ..
            } => {
                self.interval_of(t0) == Some(*interval)
                    && s_roots_at(&self.curve, t0).is_ok_and(|l| l.locate(s0) == (*branch, true))
            }
            Description::BranchBand { interval, band, .. } => {
                self.in_band(*interval, *band, t0, s0)
            }
            Description::Region { bands, segments } => {
                bands.iter().any(|&(j, b)| self.in_band(j, b, t0, s0))
                    || segments
                        .iter()
                        .any(|g| on_line(&g.t) && strictly_between(&g.s_lo, &g.s_hi, s0))
            }
        }
    }

    /// Whether `(t0, s0)` lies on the curve or on a vertical critical line.
    pub fn on_lower_locus(&self, t0: &Rational, s0: &Rational) -> bool {
        let t_crit = match self.a_set.locate(t0) {
            (j, true) => self.vertical[j],
            _ => false,
        };
        t_crit || self.curve.eval_rational(&[(Var::T, t0.clone()), (Var::S, s0.clone())]).is_zero()
    }

    /// Indices of the cells containing `(t0, s0)`.
    pub fn classify(&self, t0: &Rational, s0: &Rational) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| self.contains(&self.cells[i], t0, s0))
            .collect()
    }

    /// Rational abscissae inside the `j`-th open interval: its sample and
    /// one point on each side of it.
    fn interval_abscissae(&self, j: usize) -> Vec<Rational> {
        let t_j = self.a_set.gaps()[j].clone();
        let one = Rational::one();
        let mut out = vec![t_j.clone()];
        let left = match j.checked_sub(1) {
            None => &t_j - &one,
            Some(i) => {
                let mut a = self.a_set.roots()[i].clone();
                let mut w = one.clone();
                while *a.interval().1 >= t_j {
                    w /= Rational::from_integer(16.into());
                    a = a.refine(&w);
                }
                (a.interval().1 + &t_j) / Rational::from_integer(2.into())
            }
        };
        let right = match self.a_set.roots().get(j) {
            None => &t_j + &one,
            Some(a) => {
                let mut a = a.clone();
                let mut w = one.clone();
                while *a.interval().0 <= t_j {
                    w /= Rational::from_integer(16.into());
                    a = a.refine(&w);
                }
                (a.interval().0 + &t_j) / Rational::from_integer(2.into())
            }
        };
        out.push(left);
        out.push(right);
        out
    }

    /// Rational points of a 1- or 2-cell away from its stored sample, for
    /// checking that labels do not depend on the sample. Arcs only yield
    /// points where the branch happens to be rational.
    pub fn extra_samples(&self, cell: &Cell) -> Result<Vec<(Rational, Rational)>> {
        let mut out = vec![];
        let band_points = |j: usize, b: usize, out: &mut Vec<(Rational, Rational)>| -> Result<()> {
            for t1 in self.interval_abscissae(j) {
                let l = s_roots_at(&self.curve, &t1)?;
                if l.len() != self.gap_roots[j].len() {
                    return Err(Error::Certification(format!(
                        "branch count changes inside interval {j}"
                    )));
                }
                out.push((t1, l.gaps()[b].clone()));
            }
            Ok(())
        };
        match &cell.description {
            Description::BranchBand { interval, band, .. } => band_points(*interval, *band, &mut out)?,
            Description::Region { bands, .. } => {
                for &(j, b) in bands {
                    band_points(j, b, &mut out)?;
                }
            }
            Description::BranchArc {
                interval, branch, ..
            } => {
                for t1 in self.interval_abscissae(*interval) {
                    let l = s_roots_at(&self.curve, &t1)?;
                    if let Some(v) = l.roots().get(*branch).and_then(|r| r.rational_value()) {
                        out.push((t1, v.clone()));
                    }
                }
            }
            Description::VerticalSegment { t, s_lo, s_hi } => {
                if let Some(t0) = t.rational_value() {
                    let mut candidates = vec![];
                    for k in -4..=4i64 {
                        candidates.push(Rational::new(k.into(), 3.into()));
                        candidates.push(Rational::from_integer((k * 7).into()));
                    }
                    for s in candidates {
                        if strictly_between(s_lo, s_hi, &s) {
                            out.push((t0.clone(), s));
                        }
                    }
                }
            }
            Description::Point { .. } => {}
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c, rat, s, t, x, y};

    fn cassini() -> MPoly {
        let q = &(&x().pow(2) + &y().pow(2)) + &t().pow(2);
        &(&q.pow(2) - &(&c(4) * &(&t().pow(2) * &x().pow(2)))) - &s().pow(4)
    }

    fn linear_system() -> MPoly {
        let a = &(&c(-1) + &x().pow(2)) + &(&t() * &(&x() - &y()));
        &a + &(&s() * &(&x().pow(3) - &y()))
    }

    fn no_labels() -> DecomposeOptions {
        DecomposeOptions {
            label_topology: false,
        }
    }

    #[test]
    fn normalization_examples() {
        let fi = normalize_family(&cassini()).unwrap();
        assert_eq!(fi.shear, 0);
        let sq = normalize_family(&cassini().pow(2)).unwrap();
        assert_eq!(sq.f, fi.f);
        let bad = &(&t() - &s()) * &(&x() + &y());
        assert!(matches!(normalize_family(&bad), Err(Error::Hypothesis(_))));
        assert!(normalize_family(&MPoly::zero()).is_err());
    }

    #[test]
    fn shear_fixes_leading_coefficient() {
        // lc_y of x*y^2 + y + t - s involves x.
        let f = &(&(&x() * &y().pow(2)) + &y()) + &(&t() - &s());
        let fi = normalize_family(&f).unwrap();
        assert_ne!(fi.shear, 0);
        assert!(!fi.f.leading_coefficient(Var::Y).0.depends_on(Var::X));
    }

    #[test]
    fn cassini_decomposition() {
        let d = analyze(&cassini(), &no_labels()).unwrap();
        let want = [
            s(),
            t(),
            &(&c(2) * &t().pow(2)) - &s().pow(2),
            &(&c(2) * &t().pow(2)) + &s().pow(2),
            &t() - &s(),
            &t() + &s(),
            &t().pow(2) + &s().pow(2),
        ]
        .iter()
        .fold(MPoly::one(), |a, b| &a * b);
        assert_eq!(d.data.r, want.normalized());
        assert_eq!(d.branch, Branch::GenericR);
        assert_eq!(d.a_set.len(), 1);
        assert_eq!(d.a_set.roots()[0].rational_value(), Some(&rat(0, 1)));
        assert_eq!(d.counts(), [1, 12, 12]);
        assert_eq!(d.data.t_line_factors, t());
    }

    #[test]
    fn linear_system_decomposition() {
        let d = analyze(&linear_system(), &DecomposeOptions::default()).unwrap();
        assert_eq!(d.branch, Branch::RZeroMTs);
        assert_eq!(d.data.m, (&t() + &s()).normalized());
        let k = &(&(&c(-1) + &x().pow(2)) + &(&t() * &x())) - &(&t() * &x().pow(3));
        assert_eq!(d.data.k, k.normalized());
        assert_eq!(d.counts(), [3, 4, 2]);
        let pts: Vec<(Rational, Rational)> = d.cells_of_dim(0).map(|c| c.rational_sample().unwrap()).collect();
        assert_eq!(
            pts,
            vec![(rat(-1, 1), rat(1, 1)), (rat(0, 1), rat(0, 1)), (rat(1, 1), rat(-1, 1))]
        );
        let codes = |dim| {
            let mut v: Vec<String> = d
                .cells_of_dim(dim)
                .map(|c| c.canonical_code().unwrap().to_string())
                .collect();
            v.dedup();
            v
        };
        for dim in 0..3 {
            assert_eq!(codes(dim).len(), 1, "dimension {dim}");
        }
        let two_lines = topology_at(&(&x().pow(2) - &c(1)), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(codes(0)[0], two_lines.canonical_code);
        let line = topology_at(&y(), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(codes(2)[0], line.canonical_code);
        let three = &(&x().pow(3) - &x()) * &c(1);
        let three = topology_at(&three, &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(codes(1)[0], three.canonical_code);
    }

    #[test]
    fn family_without_y() {
        let f = &(&x().pow(2) - &t()) - &s();
        let d = analyze(&f, &no_labels()).unwrap();
        assert_eq!(d.branch, Branch::RZeroMZero);
        assert_eq!(d.data.p, &t() + &s());
        assert_eq!(d.counts(), [0, 1, 2]);
    }

    #[test]
    fn univariate_r() {
        let circle = |p: MPoly| &(&x().pow(2) + &y().pow(2)) - &p;
        let d = analyze(&circle(t()), &DecomposeOptions::default()).unwrap();
        assert_eq!(d.branch, Branch::RUnivariateT);
        assert_eq!(d.counts(), [0, 1, 2]);
        assert!(matches!(d.cells[0].kind, CellKind::VerticalSegment));
        let d = analyze(&circle(s()), &DecomposeOptions::default()).unwrap();
        assert_eq!(d.branch, Branch::RUnivariateS);
        assert_eq!(d.counts(), [0, 1, 2]);
        let codes: Vec<_> = d.cells.iter().map(|c| c.canonical_code().unwrap()).collect();
        assert_ne!(codes[1], codes[2]);
        assert_ne!(codes[0], codes[1]);
    }

    #[test]
    fn partition_is_sound_on_cassini() {
        let d = analyze(&cassini(), &no_labels()).unwrap();
        for a in -6..=6i64 {
            for b in -6..=6i64 {
                let (t0, s0) = (rat(a, 3), rat(b, 2));
                let hits = d.classify(&t0, &s0);
                assert_eq!(hits.len(), 1, "({t0}, {s0}) in {hits:?}");
                let dim2 = d.cells[hits[0]].dim == 2;
                assert_eq!(dim2, !d.on_lower_locus(&t0, &s0));
            }
        }
    }
}
