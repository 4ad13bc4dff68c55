//! Topology type of a single real plane curve `f(x, y) = 0`.
//!
//! A vertical sweep over the critical x-values of a sheared copy of the
//! curve gives the branch structure. From it we build a plane map on the
//! sphere, with one extra vertex at infinity, and serialize it canonically
//! (minimum over start darts and both orientations). Equal codes mean the
//! curves are related by a homeomorphism of the plane.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::elim;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational, Var};
use crate::realalg::{self, AlgebraicNumber, SortedRootList};

/// Largest shear parameter magnitude tried before giving up.
const MAX_SHEAR: i64 = 64;

/// The change of coordinates `x -> x + k y` applied before sweeping.
/// `vertical_lines` marks the case `deg_y f = 0`, swept with `x, y` swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Shear {
    pub k: i64,
    pub vertical_lines: bool,
}

impl Shear {
    pub fn identity() -> Self {
        Shear {
            k: 0,
            vertical_lines: false,
        }
    }
}

/// One critical fiber of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Event {
    pub left_branches: usize,
    /// `(left degree, right degree)` of each fiber point, bottom to top.
    pub vertices: Vec<(usize, usize)>,
    pub right_branches: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Unbounded {
    pub left: usize,
    pub right: usize,
    pub up: usize,
    pub down: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyGraph {
    pub shear: Shear,
    pub events: Vec<Event>,
    /// Sweep abscissae of the events, in sheared coordinates (in `y` for
    /// vertical lines).
    pub event_abscissae: Vec<AlgebraicNumber>,
    /// Branch count in each open gap between events, left to right.
    pub gap_branches: Vec<usize>,
    pub unbounded_branches: Unbounded,
    /// Connected components in the plane (isolated points included).
    pub components: usize,
    pub isolated_points: usize,
    pub canonical_code: String,
}

impl TopologyGraph {
    /// Check that every event's degree sums match the adjacent gaps.
    pub fn check_consistency(&self) -> Result<()> {
        for (i, e) in self.events.iter().enumerate() {
            let l: usize = e.vertices.iter().map(|v| v.0).sum();
            let r: usize = e.vertices.iter().map(|v| v.1).sum();
            if l != e.left_branches
                || r != e.right_branches
                || self.gap_branches[i] != e.left_branches
                || self.gap_branches[i + 1] != e.right_branches
            {
                return Err(Error::Certification(format!(
                    "degree sums at event {i} do not match the adjacent branch counts"
                )));
            }
        }
        Ok(())
    }
}

impl TopologyGraph {
    /// Number of curve points on the sweep line through `x0`, read off the
    /// descriptor.
    pub fn fiber_count(&self, x0: &Rational) -> usize {
        for (i, a) in self.event_abscissae.iter().enumerate() {
            match a.clone().cmp_rational(x0) {
                std::cmp::Ordering::Equal => return self.events[i].vertices.len(),
                std::cmp::Ordering::Greater => return self.gap_branches[i],
                std::cmp::Ordering::Less => {}
            }
        }
        *self.gap_branches.last().expect("at least one gap")
    }
}

/// Topology-type equality at the level of canonical codes.
pub fn same_topology(a: &TopologyGraph, b: &TopologyGraph) -> bool {
    a.canonical_code == b.canonical_code
}

/// Cases where codes differ although the coarse counts agree; these deserve
/// a closer look.
pub fn borderline(a: &TopologyGraph, b: &TopologyGraph) -> bool {
    !same_topology(a, b) && a.components == b.components && a.isolated_points == b.isolated_points
}

/// Exact fiber data of a curve in generic position.
#[derive(Clone, Debug)]
pub(crate) struct Sweep {
    /// Branch counts per gap.
    gaps: Vec<usize>,
    /// Per event: number of fiber points and the index of the critical one.
    fibers: Vec<(usize, Option<usize>)>,
    xs: Vec<AlgebraicNumber>,
}

fn as_ts(g: &MPoly) -> MPoly {
    g.swap_vars(Var::X, Var::T).swap_vars(Var::Y, Var::S)
}

fn count_fiber(g: &MPoly, x0: &Rational) -> Result<usize> {
    let (u, _) = g.specialize(&[(Var::X, x0.clone())]);
    Ok(realalg::isolate_mpoly(&u)?.len())
}

/// Sweeps `g`, or returns `None` when `g` is not in generic position: the
/// leading `y`-coefficient must be constant and each critical fiber may hold
/// at most one real critical point.
fn sweep(g: &MPoly) -> Result<Option<Sweep>> {
    let (lc, _) = g.leading_coefficient(Var::Y);
    if !lc.is_constant() {
        return Ok(None);
    }
    let disc = elim::discriminant(g, Var::Y)?;
    let events = if disc.is_constant() {
        SortedRootList::empty()
    } else {
        realalg::isolate_mpoly(&elim::squarefree_part(&disc, &[Var::X])?)?
    };
    let p = as_ts(g);
    let mut fibers = vec![];
    for alpha in events.roots() {
        let fiber = realalg::roots_at_algebraic_fiber(&p, alpha)?;
        let crit = match realalg::fiber_gcd(&p, alpha) {
            None => None,
            Some(h) => {
                let c = realalg::roots_at_algebraic_fiber(&h, alpha)?;
                match c.len() {
                    0 => None,
                    1 => Some(fiber.position(&c.roots()[0]).ok_or_else(|| {
                        Error::Certification("critical point missing from its fiber".into())
                    })?),
                    _ => return Ok(None),
                }
            }
        };
        fibers.push((fiber.len(), crit));
    }
    let gaps = events
        .gaps()
        .iter()
        .map(|x0| count_fiber(g, x0))
        .collect::<Result<Vec<_>>>()?;
    for (i, &(m, c)) in fibers.iter().enumerate() {
        let ok = match c {
            None => gaps[i] == m && gaps[i + 1] == m,
            Some(_) => gaps[i] + 1 >= m && gaps[i + 1] + 1 >= m,
        };
        if !ok {
            return Err(Error::Certification(format!(
                "fiber {i} has {m} points between gaps of {} and {} branches",
                gaps[i],
                gaps[i + 1]
            )));
        }
    }
    Ok(Some(Sweep {
        gaps,
        fibers,
        xs: events.into_roots(),
    }))
}

fn shear_sequence() -> impl Iterator<Item = i64> {
    (0..=MAX_SHEAR).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

fn apply_shear(f: &MPoly, k: i64) -> MPoly {
    if k == 0 {
        return f.clone();
    }
    let sub = &MPoly::var(Var::X) + &(&MPoly::constant(k) * &MPoly::var(Var::Y));
    f.compose(Var::X, &sub)
}

fn shear_and_sweep(f: &MPoly) -> Result<(MPoly, Shear, Sweep)> {
    if f.is_constant() {
        let empty = Sweep {
            gaps: vec![0],
            fibers: vec![],
            xs: vec![],
        };
        return Ok((f.clone(), Shear::identity(), empty));
    }
    if f.deg(Var::Y) == 0 {
        let g = f.swap_vars(Var::X, Var::Y);
        let sw = sweep(&g)?.expect("horizontal lines are in generic position");
        let shear = Shear {
            k: 0,
            vertical_lines: true,
        };
        return Ok((g, shear, sw));
    }
    for k in shear_sequence() {
        let g = apply_shear(f, k);
        if let Some(sw) = sweep(&g)? {
            let shear = Shear {
                k,
                vertical_lines: false,
            };
            return Ok((g, shear, sw));
        }
    }
    Err(Error::Certification(format!(
        "no generic shear with |k| <= {MAX_SHEAR}"
    )))
}

fn check_curve(f: &MPoly) -> Result<MPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("curve_topology"));
    }
    if !f.only_in(&[Var::X, Var::Y]) {
        return Err(Error::Hypothesis("curve must involve only x and y".into()));
    }
    elim::squarefree_part(f, &[Var::X, Var::Y])
}

/// Generic-position shear of `f` in `x, y`. A curve without `y` is returned
/// unchanged: it is a union of vertical lines and handled as such.
pub fn shear_to_generic(f: &MPoly) -> Result<(MPoly, Shear)> {
    let f = check_curve(f)?;
    if f.deg(Var::Y) == 0 {
        return Ok((f, Shear::identity()));
    }
    let (g, shear, _) = shear_and_sweep(&f)?;
    Ok((g, shear))
}

/// Combinatorial topology descriptor of the real curve `f = 0`.
pub fn curve_topology(f: &MPoly) -> Result<TopologyGraph> {
    let f = check_curve(f)?;
    let (_, shear, sw) = shear_and_sweep(&f)?;
    let graph = build_graph(&sw);
    let mut events = vec![];
    for (i, &(m, c)) in sw.fibers.iter().enumerate() {
        let mut vertices = vec![(1, 1); m];
        if let Some(c) = c {
            vertices[c] = (sw.gaps[i] + 1 - m, sw.gaps[i + 1] + 1 - m);
        }
        events.push(Event {
            left_branches: sw.gaps[i],
            vertices,
            right_branches: sw.gaps[i + 1],
        });
    }
    let (left, right) = (sw.gaps[0], *sw.gaps.last().unwrap());
    let unbounded_branches = if shear.vertical_lines {
        Unbounded {
            left: 0,
            right: 0,
            up: right,
            down: left,
        }
    } else {
        Unbounded {
            left,
            right,
            up: 0,
            down: 0,
        }
    };
    let tg = TopologyGraph {
        shear,
        events,
        event_abscissae: sw.xs.clone(),
        gap_branches: sw.gaps.clone(),
        unbounded_branches,
        components: graph.plane_components(),
        isolated_points: graph.isolated_points(),
        canonical_code: graph.canonical_code()?,
    };
    tg.check_consistency()?;
    Ok(tg)
}

/// Union-find over `0..n`.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Plane map on the sphere. Vertex 0 is the point at infinity. Darts come
/// in pairs `2e, 2e + 1` (left and right end of edge `e`).
#[derive(Clone, Debug)]
struct PlaneMap {
    vertices: usize,
    dart_vertex: Vec<usize>,
    alpha: Vec<usize>,
    /// Next dart counterclockwise around the same vertex.
    sigma: Vec<usize>,
    /// Complement region on the left of each dart.
    left_face: Vec<usize>,
    /// Region containing each vertex without darts.
    vertex_face: Vec<Option<usize>>,
    faces: usize,
}

/// Fiber index reached by branch `r` of the adjacent gap, where the gap has
/// `n` branches, the fiber `m` points and the critical point index `c`.
fn attach(r: usize, n: usize, m: usize, c: Option<usize>) -> usize {
    match c {
        None => r,
        Some(c) => {
            let k = n + 1 - m;
            if r < c {
                r
            } else if r < c + k {
                c
            } else {
                r + 1 - k
            }
        }
    }
}

fn build_graph(sw: &Sweep) -> PlaneMap {
    let ne = sw.fibers.len();
    // Vertex ids.
    let mut vbase = vec![1usize];
    for &(m, _) in &sw.fibers {
        vbase.push(vbase.last().unwrap() + m);
    }
    let vertices = *vbase.last().unwrap();
    // Edge ids and region cells.
    let mut ebase = vec![0usize];
    let mut cbase = vec![0usize];
    for &n in &sw.gaps {
        ebase.push(ebase.last().unwrap() + n);
        cbase.push(cbase.last().unwrap() + n + 1);
    }
    let mut sbase = vec![*cbase.last().unwrap()];
    for &(m, _) in &sw.fibers {
        sbase.push(sbase.last().unwrap() + m + 1);
    }
    let ncells = *sbase.last().unwrap();
    let nd = 2 * ebase.last().unwrap();

    let mut dart_vertex = vec![0; nd];
    let mut alpha = vec![0; nd];
    let mut left_face = vec![0; nd];
    let mut rotation: Vec<Vec<usize>> = vec![vec![]; vertices];
    let mut dsu = Dsu::new(ncells);

    for (g, &n) in sw.gaps.iter().enumerate() {
        for r in 0..n {
            let e = ebase[g] + r;
            let (dl, dr) = (2 * e, 2 * e + 1);
            alpha[dl] = dr;
            alpha[dr] = dl;
            left_face[dl] = cbase[g] + r + 1;
            left_face[dr] = cbase[g] + r;
            dart_vertex[dl] = if g == 0 {
                0
            } else {
                let (m, c) = sw.fibers[g - 1];
                vbase[g - 1] + attach(r, n, m, c)
            };
            dart_vertex[dr] = if g == ne {
                0
            } else {
                let (m, c) = sw.fibers[g];
                vbase[g] + attach(r, n, m, c)
            };
        }
    }
    // Rotations: at a fiber point, right darts bottom to top then left darts
    // top to bottom; at infinity, left ends bottom to top then right ends
    // top to bottom.
    for (g, &n) in sw.gaps.iter().enumerate() {
        for r in 0..n {
            let dl = 2 * (ebase[g] + r);
            if g == 0 {
                rotation[0].push(dl);
            } else {
                rotation[dart_vertex[dl]].push(dl);
            }
        }
        for r in (0..n).rev() {
            let dr = 2 * (ebase[g] + r) + 1;
            if g != ne {
                rotation[dart_vertex[dr]].push(dr);
            }
        }
    }
    for r in (0..sw.gaps[ne]).rev() {
        rotation[0].push(2 * (ebase[ne] + r) + 1);
    }
    let mut sigma = vec![0; nd];
    for rot in &rotation {
        for (i, &d) in rot.iter().enumerate() {
            sigma[d] = rot[(i + 1) % rot.len()];
        }
    }
    // Regions: gap cells meet the fiber segments they touch.
    for (i, &(m, c)) in sw.fibers.iter().enumerate() {
        for g in [i, i + 1] {
            let n = sw.gaps[g];
            let at = |r: isize| -> isize {
                if r < 0 {
                    -1
                } else if r as usize >= n {
                    m as isize
                } else {
                    attach(r as usize, n, m, c) as isize
                }
            };
            for cell in 0..=n as isize {
                let (lo, hi) = (at(cell - 1), at(cell));
                for seg in lo + 1..=hi {
                    dsu.union(cbase[g] + cell as usize, sbase[i] + seg as usize);
                }
            }
        }
    }
    let mut ids = BTreeMap::new();
    let mut face_id = |dsu: &mut Dsu, cell: usize| {
        let r = dsu.find(cell);
        let next = ids.len();
        *ids.entry(r).or_insert(next)
    };
    for f in left_face.iter_mut() {
        *f = face_id(&mut dsu, *f);
    }
    let mut vertex_face = vec![None; vertices];
    if rotation[0].is_empty() {
        vertex_face[0] = Some(face_id(&mut dsu, cbase[0]));
    }
    for (i, &(m, _)) in sw.fibers.iter().enumerate() {
        for p in 0..m {
            if rotation[vbase[i] + p].is_empty() {
                vertex_face[vbase[i] + p] = Some(face_id(&mut dsu, sbase[i] + p));
            }
        }
    }
    // Regions not bordering any dart or vertex cannot exist: every cell
    // meets the curve or is the whole plane.
    let faces = ids.len();
    PlaneMap {
        vertices,
        dart_vertex,
        alpha,
        sigma,
        left_face,
        vertex_face,
        faces,
    }
}

/// A connected piece of the map: its darts, or a single vertex without
/// darts.
#[derive(Clone, Debug)]
struct Component {
    darts: Vec<usize>,
    vertex: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Parent {
    Infinity,
    Face(usize),
}

impl PlaneMap {
    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices];
        for &v in &self.dart_vertex {
            deg[v] += 1;
        }
        deg
    }

    fn isolated_points(&self) -> usize {
        self.degrees().iter().skip(1).filter(|&&d| d == 0).count()
    }

    /// Components of the curve itself, without the point at infinity.
    fn plane_components(&self) -> usize {
        let mut dsu = Dsu::new(self.vertices);
        let mut lines = 0;
        for e in 0..self.alpha.len() / 2 {
            let (u, v) = (self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1]);
            match (u, v) {
                (0, 0) => lines += 1,
                (0, _) | (_, 0) => {}
                _ => dsu.union(u, v),
            }
        }
        let roots: std::collections::BTreeSet<usize> =
            (1..self.vertices).map(|v| dsu.find(v)).collect();
        roots.len() + lines
    }

    /// Removes vertices of degree two away from infinity, keeping one vertex
    /// on each closed loop. Returns the compacted map.
    fn smoothed(&self) -> PlaneMap {
        let nd = self.alpha.len();
        let mut alpha = self.alpha.clone();
        let mut alive = vec![true; nd];
        let deg = self.degrees();
        let mut keep_vertex = vec![true; self.vertices];
        for v in 1..self.vertices {
            if deg[v] != 2 {
                continue;
            }
            let d1 = (0..nd).find(|&d| alive[d] && self.dart_vertex[d] == v).unwrap();
            let d2 = self.sigma[d1];
            if alpha[d1] == d2 {
                continue;
            }
            let (a, b) = (alpha[d1], alpha[d2]);
            alpha[a] = b;
            alpha[b] = a;
            alive[d1] = false;
            alive[d2] = false;
            keep_vertex[v] = false;
        }
        let dmap: Vec<Option<usize>> = {
            let mut next = 0;
            alive
                .iter()
                .map(|&a| {
                    a.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let vmap: Vec<Option<usize>> = {
            let mut next = 0;
            keep_vertex
                .iter()
                .map(|&k| {
                    k.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let live: Vec<usize> = (0..nd).filter(|&d| alive[d]).collect();
        PlaneMap {
            vertices: vmap.iter().flatten().count(),
            dart_vertex: live
                .iter()
                .map(|&d| vmap[self.dart_vertex[d]].unwrap())
                .collect(),
            alpha: live.iter().map(|&d| dmap[alpha[d]].unwrap()).collect(),
            sigma: live.iter().map(|&d| dmap[self.sigma[d]].unwrap()).collect(),
            left_face: live.iter().map(|&d| self.left_face[d]).collect(),
            vertex_face: (0..self.vertices)
                .filter(|&v| keep_vertex[v])
                .map(|v| self.vertex_face[v])
                .collect(),
            faces: self.faces,
        }
    }

    fn components(&self) -> Vec<Component> {
        let nd = self.alpha.len();
        let mut dsu = Dsu::new(self.vertices);
        for d in 0..nd {
            dsu.union(self.dart_vertex[d], self.dart_vertex[self.alpha[d]]);
        }
        let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
        for v in 0..self.vertices {
            let r = dsu.find(v);
            by_root.entry(r).or_insert(Component {
                darts: vec![],
                vertex: v,
            });
        }
        for d in 0..nd {
            let r = dsu.find(self.dart_vertex[d]);
            by_root.get_mut(&r).unwrap().darts.push(d);
        }
        by_root.into_values().collect()
    }

    /// Region on the right of dart `d` (the face traced by `sigma . alpha`),
    /// or on its left in the mirror image.
    fn face_of(&self, d: usize, mirror: bool) -> usize {
        if mirror {
            self.left_face[d]
        } else {
            self.left_face[self.alpha[d]]
        }
    }

    fn next_around(&self, d: usize, mirror: bool, inverse: &[usize]) -> usize {
        if mirror {
            inverse[d]
        } else {
            self.sigma[d]
        }
    }

    /// Euler characteristic check on every component, and consistency of
    /// the region labels along traced faces.
    fn validate(&self) -> Result<()> {
        let comps = self.components();
        let mut seen = vec![false; self.alpha.len()];
        let mut adjacency = 0;
        for comp in &comps {
            if comp.darts.is_empty() {
                adjacency += 1;
                continue;
            }
            let verts: std::collections::BTreeSet<usize> =
                comp.darts.iter().map(|&d| self.dart_vertex[d]).collect();
            let mut nfaces = 0;
            let mut regions = std::collections::BTreeSet::new();
            for &d0 in &comp.darts {
                if seen[d0] {
                    continue;
                }
                nfaces += 1;
                let label = self.face_of(d0, false);
                regions.insert(label);
                let mut d = d0;
                loop {
                    seen[d] = true;
                    if self.face_of(d, false) != label {
                        return Err(Error::Certification(
                            "face trace crosses a region boundary".into(),
                        ));
                    }
                    d = self.sigma[self.alpha[d]];
                    if d == d0 {
                        break;
                    }
                }
            }
            let euler = verts.len() as isize - (comp.darts.len() / 2) as isize + nfaces;
            if euler != 2 {
                return Err(Error::Certification(format!(
                    "component map has Euler characteristic {euler}"
                )));
            }
            if regions.len() != nfaces as usize {
                return Err(Error::Certification(
                    "two faces of one component share a region".into(),
                ));
            }
            adjacency += regions.len();
        }
        // Components and regions form a tree on the sphere.
        if adjacency + 1 != comps.len() + self.faces {
            return Err(Error::Certification(
                "component and region incidences do not form a tree".into(),
            ));
        }
        Ok(())
    }

    fn canonical_code(&self) -> Result<String> {
        self.validate()?;
        let m = self.smoothed();
        let comps = m.components();
        let (a, b) = (m.encode(&comps, false), m.encode(&comps, true));
        Ok(a.min(b))
    }

    fn encode(&self, comps: &[Component], mirror: bool) -> String {
        let mut inverse = vec![0; self.sigma.len()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inverse[s] = d;
        }
        // Regions adjacent to each component and components around each region.
        let mut comp_faces: Vec<Vec<usize>> = vec![];
        let mut face_comps: Vec<Vec<usize>> = vec![vec![]; self.faces];
        for (i, c) in comps.iter().enumerate() {
            let mut fs: Vec<usize> = if c.darts.is_empty() {
                vec![self.vertex_face[c.vertex].expect("region of isolated vertex")]
            } else {
                c.darts.iter().map(|&d| self.face_of(d, mirror)).collect()
            };
            fs.sort_unstable();
            fs.dedup();
            for &f in &fs {
                face_comps[f].push(i);
            }
            comp_faces.push(fs);
        }
        let root = comps
            .iter()
            .position(|c| c.vertex == 0 || c.darts.iter().any(|&d| self.dart_vertex[d] == 0))
            .expect("component at infinity");
        let ctx = Ctx {
            map: self,
            comps,
            face_comps: &face_comps,
            inverse: &inverse,
            mirror,
        };
        ctx.code(root, Parent::Infinity)
    }
}

struct Ctx<'a> {
    map: &'a PlaneMap,
    comps: &'a [Component],
    face_comps: &'a [Vec<usize>],
    inverse: &'a [usize],
    mirror: bool,
}

impl Ctx<'_> {
    fn children(&self, face: usize, except: usize) -> String {
        let mut codes: Vec<String> = self.face_comps[face]
            .iter()
            .filter(|&&c| c != except)
            .map(|&c| self.code(c, Parent::Face(face)))
            .collect();
        codes.sort();
        codes.concat()
    }

    fn code(&self, ci: usize, parent: Parent) -> String {
        let comp = &self.comps[ci];
        let map = self.map;
        if comp.darts.is_empty() {
            return if comp.vertex == 0 {
                let f = map.vertex_face[0].expect("region at infinity");
                format!("I({})", self.children(f, ci))
            } else {
                "P".to_string()
            };
        }
        // Annotation of each region around this component.
        let mut notes: BTreeMap<usize, String> = BTreeMap::new();
        for &d in &comp.darts {
            let f = map.face_of(d, self.mirror);
            notes.entry(f).or_insert_with(|| {
                if parent == Parent::Face(f) {
                    "^".to_string()
                } else {
                    format!("({})", self.children(f, ci))
                }
            });
        }
        let mut table: Vec<&String> = notes.values().collect();
        table.sort();
        table.dedup();
        let note_index = |d: usize| -> usize {
            let s = &notes[&map.face_of(d, self.mirror)];
            table.binary_search(&s).unwrap()
        };
        let starts: Vec<usize> = comp
            .darts
            .iter()
            .copied()
            .filter(|&d| match parent {
                Parent::Infinity => map.dart_vertex[d] == 0,
                Parent::Face(f) => map.face_of(d, self.mirror) == f,
            })
            .collect();
        let mut best: Option<Vec<(usize, usize, usize, bool)>> = None;
        let mut num = vec![usize::MAX; map.alpha.len()];
        for &d0 in &starts {
            let mut order = vec![d0];
            num[d0] = 0;
            let mut i = 0;
            while i < order.len() {
                let d = order[i];
                for nb in [map.next_around(d, self.mirror, self.inverse), map.alpha[d]] {
                    if num[nb] == usize::MAX {
                        num[nb] = order.len();
                        order.push(nb);
                    }
                }
                i += 1;
            }
            let word: Vec<_> = order
                .iter()
                .map(|&d| {
                    (
                        num[map.next_around(d, self.mirror, self.inverse)],
                        num[map.alpha[d]],
                        note_index(d),
                        map.dart_vertex[d] == 0,
                    )
                })
                .collect();
            for &d in &order {
                num[d] = usize::MAX;
            }
            if best.as_ref().map_or(true, |b| word < *b) {
                best = Some(word);
            }
        }
        let word = best.expect("start dart");
        let mut out = format!("M{}[", word.len());
        for (s, a, n, inf) in word {
            out.push_str(&format!("{s},{a},{n}{};", if inf { "*" } else { "" }));
        }
        out.push('|');
        for t in table {
            out.push_str(t);
            out.push(';');
        }
        out.push(']');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c, x, y};

    fn topo(f: &MPoly) -> TopologyGraph {
        curve_topology(f).unwrap()
    }

    fn circle() -> MPoly {
        &(&x().pow(2) + &y().pow(2)) - &c(1)
    }

    fn cassini(t: i64, s: i64) -> MPoly {
        let r = &(&(&x().pow(2) + &y().pow(2)) + &c(t * t)).pow(2);
        &(r - &(&c(4 * t * t) * &x().pow(2))) - &c(s.pow(4))
    }

    #[test]
    fn circle_is_one_oval() {
        let g = topo(&circle());
        assert_eq!(g.events.len(), 2);
        assert_eq!(g.gap_branches, vec![0, 2, 0]);
        assert_eq!(g.unbounded_branches, Unbounded::default());
        assert_eq!(g.components, 1);
        assert_eq!(shear_to_generic(&circle()).unwrap().1, Shear::identity());
    }

    #[test]
    fn parallel_lines() {
        let f = &x().pow(2) - &c(1);
        let g = topo(&f);
        assert!(g.events.is_empty());
        assert_eq!(g.components, 2);
        assert_eq!(g.unbounded_branches.up, 2);
        assert_eq!(shear_to_generic(&f).unwrap().1, Shear::identity());
        let h = topo(&(&y().pow(2) - &c(4)));
        assert!(same_topology(&g, &h));
    }

    #[test]
    fn cassini_ovals() {
        let two = topo(&cassini(2, 1));
        let one = topo(&cassini(1, 2));
        assert_eq!(two.components, 2);
        assert_eq!(one.components, 1);
        assert!(same_topology(&one, &topo(&circle())));
        assert!(!same_topology(&one, &two));
    }

    #[test]
    fn nodal_cubic() {
        let f = &(&y().pow(2) - &x().pow(3)) - &x().pow(2);
        let (_, sh) = shear_to_generic(&f).unwrap();
        assert_eq!(sh, Shear::identity());
        let g = topo(&f);
        assert_eq!(g.events.len(), 2);
        assert_eq!(g.components, 1);
        assert!(g.events.iter().any(|e| e.vertices.contains(&(2, 2))));
    }

    #[test]
    fn mirror_and_affine_invariance() {
        let f = &(&y().pow(2) - &x().pow(3)) - &x().pow(2);
        let g = topo(&f);
        assert!(same_topology(&g, &topo(&f.negate_var(Var::X))));
        assert!(same_topology(&g, &topo(&f.negate_var(Var::Y))));
        let shifted = circle().compose(Var::X, &(&(&c(3) * &x()) + &c(5)));
        assert!(same_topology(&topo(&circle()), &topo(&shifted)));
    }

    #[test]
    fn distinguishes_line_configurations() {
        let one_line = topo(&y());
        let crossing = topo(&(&x() * &y()));
        let parallel = topo(&(&y() * &(&y() - &c(1))));
        let three = topo(&(&(&y() * &(&y() - &c(1))) * &(&y() + &c(1))));
        let codes = [&one_line, &crossing, &parallel, &three];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(same_topology(codes[i], codes[j]), i == j, "{i} {j}");
            }
        }
        assert_eq!(crossing.components, 1);
        assert_eq!(three.components, 3);
    }

    #[test]
    fn isolated_point_and_nesting() {
        let pt = topo(&(&x().pow(2) + &y().pow(2)));
        assert_eq!(pt.isolated_points, 1);
        assert_eq!(pt.components, 1);
        // Oval with a point inside versus oval with a point outside.
        let inside = &(&x().pow(2) + &y().pow(2)) * &(&(&x().pow(2) + &y().pow(2)) - &c(1));
        let xs = &x() - &c(3);
        let outside = &(&xs.pow(2) + &y().pow(2)) * &(&(&x().pow(2) + &y().pow(2)) - &c(1));
        let (a, b) = (topo(&inside), topo(&outside));
        assert_eq!(a.components, 2);
        assert!(!same_topology(&a, &b));
        assert!(borderline(&a, &b));
        // Two nested ovals versus two separate ovals.
        let nested = &(&(&x().pow(2) + &y().pow(2)) - &c(1)) * &(&(&x().pow(2) + &y().pow(2)) - &c(4));
        assert!(!same_topology(&topo(&nested), &topo(&cassini(2, 1))));
    }

    #[test]
    fn empty_curves() {
        let e1 = topo(&(&(&x().pow(2) + &y().pow(2)) + &c(1)));
        let e2 = topo(&c(3));
        assert_eq!(e1.components, 0);
        assert!(same_topology(&e1, &e2));
        assert!(curve_topology(&MPoly::zero()).is_err());
    }
}
