//! Triangulations of a convex `n`-gon.
//!
//! Vertices are labelled `1..=n` counterclockwise. An [`Arc`] joins two
//! distinct vertices; it is a boundary segment when the vertices are
//! cyclically adjacent and a diagonal otherwise. A [`Triangulation`] is a
//! maximal set of pairwise non-crossing diagonals, which always has `n - 3`
//! members.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest polygon [`enumerate_triangulations`] accepts without an explicit bound.
pub const DEFAULT_ENUMERATION_BOUND: usize = 14;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon needs at least 4 vertices, got {0}")]
    TooSmall(usize),
    #[error("endpoint {vertex} is outside 1..={n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("arc endpoints must be distinct, got [{0},{0}]")]
    DegenerateArc(usize),
    #[error("{0} is a boundary segment, not a diagonal")]
    NotADiagonal(Arc),
    #[error("diagonal {0} is listed twice")]
    DuplicateDiagonal(Arc),
    #[error("a triangulation of the {n}-gon has {expected} diagonals, got {found}")]
    WrongCardinality {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("diagonals {0} and {1} cross")]
    Crossing(Arc, Arc),
    #[error("{0} is not a diagonal of the triangulation")]
    NotInTriangulation(Arc),
    #[error("enumeration supports {min}..={max} vertices, got {n}")]
    EnumerationBound { n: usize, min: usize, max: usize },
}

/// Counterclockwise distance from vertex `from` to vertex `to`.
pub(crate) fn ccw(n: usize, from: usize, to: usize) -> usize {
    (to + n - from) % n
}

/// Whether `x` lies strictly inside the counterclockwise walk from `a` to `b`.
pub(crate) fn in_open(n: usize, x: usize, a: usize, b: usize) -> bool {
    let d = ccw(n, a, x);
    d > 0 && d < ccw(n, a, b)
}

/// Whether `x` lies on the counterclockwise walk from `a` to `b`, ends included.
pub(crate) fn in_closed(n: usize, x: usize, a: usize, b: usize) -> bool {
    ccw(n, a, x) <= ccw(n, a, b)
}

/// Reduces any integer vertex coordinate to the label range `1..=n`.
pub(crate) fn wrap(n: usize, v: i64) -> usize {
    (v - 1).rem_euclid(n as i64) as usize + 1
}

/// An unordered pair of distinct polygon vertices, stored as `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Arc {
    lo: usize,
    hi: usize,
}

impl Arc {
    /// Builds the arc joining `a` and `b` in either order.
    ///
    /// Panics if `a == b`; use [`Arc::checked`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Arc {
        assert_ne!(a, b, "arc endpoints must be distinct");
        Arc {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    /// Builds an arc of the `n`-gon, validating both endpoints.
    pub fn checked(n: usize, a: usize, b: usize) -> Result<Arc, PolygonError> {
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(PolygonError::EndpointOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(PolygonError::DegenerateArc(a));
        }
        Ok(Arc::new(a, b))
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint at all.
    pub fn other(&self, v: usize) -> Option<usize> {
        if self.lo == v {
            Some(self.hi)
        } else if self.hi == v {
            Some(self.lo)
        } else {
            None
        }
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        self.has_endpoint(other.lo) || self.has_endpoint(other.hi)
    }

    pub fn is_boundary(&self, n: usize) -> bool {
        self.hi - self.lo == 1 || (self.lo == 1 && self.hi == n)
    }

    pub fn is_diagonal(&self, n: usize) -> bool {
        !self.is_boundary(n)
    }

    /// Whether the open segments intersect. Arcs sharing an endpoint never cross.
    pub fn crosses(&self, other: &Arc) -> bool {
        if self.shares_endpoint(other) {
            return false;
        }
        let inside = |x: usize| self.lo < x && x < self.hi;
        inside(other.lo) != inside(other.hi)
    }

    /// Rotates both endpoints by `k` steps counterclockwise.
    pub fn rotated(&self, n: usize, k: i64) -> Arc {
        Arc::new(wrap(n, self.lo as i64 + k), wrap(n, self.hi as i64 + k))
    }

    pub(crate) fn check_in(&self, n: usize) -> Result<(), PolygonError> {
        Arc::checked(n, self.lo, self.hi).map(|_| ())
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.lo, a.hi]
    }
}

impl TryFrom<[usize; 2]> for Arc {
    type Error = PolygonError;

    fn try_from([a, b]: [usize; 2]) -> Result<Self, Self::Error> {
        if a == b {
            return Err(PolygonError::DegenerateArc(a));
        }
        Ok(Arc::new(a, b))
    }
}

/// Crossing test with range checks against the `n`-gon.
pub fn crosses(n: usize, d1: Arc, d2: Arc) -> Result<bool, PolygonError> {
    d1.check_in(n)?;
    d2.check_in(n)?;
    Ok(d1.crosses(&d2))
}

/// Every arc of the `n`-gon (diagonals and boundary segments) in lexicographic order.
pub fn all_arcs(n: usize) -> Vec<Arc> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| Arc::new(i, j)))
        .collect()
}

/// The `n` boundary segments `[i, i+1]` and `[1, n]`.
pub fn boundary_segments(n: usize) -> Vec<Arc> {
    (1..=n)
        .map(|i| Arc::new(i, wrap(n, i as i64 + 1)))
        .collect()
}

/// Catalan number `C_k`.
pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// A validated triangulation; diagonals are kept sorted.
///
/// Serializes as `{"n": 6, "diagonals": [[1,3], ...]}` and is validated on
/// the way in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriangulation")]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Arc>,
}

#[derive(Deserialize)]
struct RawTriangulation {
    n: usize,
    diagonals: Vec<Arc>,
}

impl TryFrom<RawTriangulation> for Triangulation {
    type Error = PolygonError;

    fn try_from(raw: RawTriangulation) -> Result<Self, Self::Error> {
        validate(raw.n, &raw.diagonals)
    }
}

/// Checks every triangulation invariant and returns the validated value.
pub fn validate(n: usize, diagonals: &[Arc]) -> Result<Triangulation, PolygonError> {
    if n < 4 {
        return Err(PolygonError::TooSmall(n));
    }
    let mut sorted = diagonals.to_vec();
    for d in &sorted {
        d.check_in(n)?;
        if d.is_boundary(n) {
            return Err(PolygonError::NotADiagonal(*d));
        }
    }
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(PolygonError::DuplicateDiagonal(w[0]));
    }
    if sorted.len() != n - 3 {
        return Err(PolygonError::WrongCardinality {
            n,
            expected: n - 3,
            found: sorted.len(),
        });
    }
    for (k, x) in sorted.iter().enumerate() {
        if let Some(y) = sorted[k + 1..].iter().find(|y| x.crosses(y)) {
            return Err(PolygonError::Crossing(*x, *y));
        }
    }
    Ok(Triangulation {
        n,
        diagonals: sorted,
    })
}

impl Triangulation {
    pub fn new(n: usize, diagonals: &[Arc]) -> Result<Self, PolygonError> {
        validate(n, diagonals)
    }

    /// The fan triangulation: every diagonal has `apex` as an endpoint.
    pub fn fan(n: usize, apex: usize) -> Result<Self, PolygonError> {
        let ds: Vec<Arc> = (2..n - 1)
            .map(|k| Arc::new(apex, wrap(n, (apex + k) as i64)))
            .collect();
        validate(n, &ds)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Arc] {
        &self.diagonals
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.diagonals.binary_search(a).is_ok()
    }

    /// Position of `a` in the sorted diagonal list; this is its quiver vertex.
    pub fn index_of(&self, a: &Arc) -> Option<usize> {
        self.diagonals.binary_search(a).ok()
    }

    /// A diagonal of the triangulation or a boundary segment.
    pub fn is_edge(&self, a: &Arc) -> bool {
        a.is_boundary(self.n) || self.contains(a)
    }

    /// The `n - 2` triangles as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n;
        let mut out = Vec::with_capacity(n - 2);
        for x in 1..=n {
            for y in x + 1..=n {
                if !self.is_edge(&Arc::new(x, y)) {
                    continue;
                }
                for z in y + 1..=n {
                    if self.is_edge(&Arc::new(x, z)) && self.is_edge(&Arc::new(y, z)) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// Number of triangles with two boundary sides.
    pub fn ears(&self) -> usize {
        let n = self.n;
        self.triangles()
            .iter()
            .filter(|t| {
                let sides = [
                    Arc::new(t[0], t[1]),
                    Arc::new(t[1], t[2]),
                    Arc::new(t[0], t[2]),
                ];
                sides.iter().filter(|s| s.is_boundary(n)).count() == 2
            })
            .count()
    }

    /// The apexes `(r, s)` of the two triangles on either side of diagonal
    /// `a = [p, q]`, with `r` strictly between `p` and `q`.
    pub fn apexes(&self, a: &Arc) -> Result<(usize, usize), PolygonError> {
        if !self.contains(a) {
            return Err(PolygonError::NotInTriangulation(*a));
        }
        let (p, q) = a.endpoints();
        let apex = |inside: bool| {
            (1..=self.n)
                .filter(|&x| x != p && x != q && (p < x && x < q) == inside)
                .find(|&x| self.is_edge(&Arc::new(p, x)) && self.is_edge(&Arc::new(x, q)))
                .expect("every diagonal borders two triangles")
        };
        Ok((apex(true), apex(false)))
    }

    /// The same triangulation rotated `k` steps counterclockwise.
    pub fn rotated(&self, k: i64) -> Triangulation {
        let mut ds: Vec<Arc> = self
            .diagonals
            .iter()
            .map(|d| d.rotated(self.n, k))
            .collect();
        ds.sort();
        Triangulation {
            n: self.n,
            diagonals: ds,
        }
    }

    /// Vertex degrees in the triangulation, indexed `1..=n` (index 0 unused).
    pub(crate) fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for d in &self.diagonals {
            deg[d.lo] += 1;
            deg[d.hi] += 1;
        }
        deg
    }
}

/// All triangulations of the `n`-gon, `4 <= n <= DEFAULT_ENUMERATION_BOUND`.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>, PolygonError> {
    enumerate_triangulations_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// All triangulations of the `n`-gon in lexicographic order of their sorted
/// diagonal lists; `Catalan(n - 2)` of them.
pub fn enumerate_triangulations_bounded(
    n: usize,
    bound: usize,
) -> Result<Vec<Triangulation>, PolygonError> {
    if n < 4 || n > bound {
        return Err(PolygonError::EnumerationBound {
            n,
            min: 4,
            max: bound,
        });
    }
    // The triangle on edge [1,2] has some apex k; the rest splits into the
    // chains 2..k and k..1.
    let mut out = Vec::with_capacity(catalan(n - 2) as usize);
    for k in 3..=n {
        let left = chain(n, 2, k - 2);
        let right = chain(n, k, n - k + 1);
        for l in &left {
            for r in &right {
                let mut ds: Vec<Arc> = l.iter().chain(r.iter()).copied().collect();
                if k != 3 {
                    ds.push(Arc::new(2, k));
                }
                if k != n {
                    ds.push(Arc::new(k, 1));
                }
                ds.sort();
                out.push(Triangulation { n, diagonals: ds });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Triangulations of the sub-polygon on the `len + 1` consecutive vertices
/// starting at `start`, excluding its closing chord.
fn chain(n: usize, start: usize, len: usize) -> Vec<Vec<Arc>> {
    if len < 2 {
        return vec![Vec::new()];
    }
    let end = wrap(n, (start + len) as i64);
    let mut out = Vec::new();
    for m in 1..len {
        let apex = wrap(n, (start + m) as i64);
        let left = chain(n, start, m);
        let right = chain(n, apex, len - m);
        for l in &left {
            for r in &right {
                let mut ds: Vec<Arc> = l.iter().chain(r.iter()).copied().collect();
                if m >= 2 {
                    ds.push(Arc::new(start, apex));
                }
                if len - m >= 2 {
                    ds.push(Arc::new(apex, end));
                }
                out.push(ds);
            }
        }
    }
    out
}

/// The quadrilateral framing a diagonal `a = [p, q]`.
///
/// Its corners `p, r, q, s` are in counterclockwise order. The sides are
/// `b = [q,r]`, `c = [q,s]`, `d = [s,p]` and `e = [p,r]`: `b` and `c` meet
/// at `q`, `d` and `e` meet at `p`, `b` is opposite `d` and `c` is opposite
/// `e`. In the quiver of the triangulation this gives `b -> a -> c` and
/// `d -> a -> e` whenever those sides are diagonals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quadrilateral {
    pub a: Arc,
    pub b: Arc,
    pub c: Arc,
    pub d: Arc,
    pub e: Arc,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
}

impl Quadrilateral {
    fn from_corners(a: Arc, p: usize, q: usize, r: usize, s: usize) -> Self {
        Quadrilateral {
            a,
            b: Arc::new(q, r),
            c: Arc::new(q, s),
            d: Arc::new(s, p),
            e: Arc::new(p, r),
            p,
            q,
            r,
            s,
        }
    }

    /// The other labelling, exchanging `(b, c)` with `(d, e)`.
    pub fn swapped(&self) -> Self {
        Quadrilateral::from_corners(self.a, self.q, self.p, self.s, self.r)
    }

    /// The diagonal `[r, s]` that replaces `a` under a flip.
    pub fn flipped_diagonal(&self) -> Arc {
        Arc::new(self.r, self.s)
    }

    pub fn sides(&self) -> [Arc; 4] {
        [self.b, self.c, self.d, self.e]
    }
}

/// The framing quadrilateral of `a`, labelled with `p = a.lo()`.
pub fn quadrilateral(t: &Triangulation, a: Arc) -> Result<Quadrilateral, PolygonError> {
    let (r, s) = t.apexes(&a)?;
    Ok(Quadrilateral::from_corners(a, a.lo(), a.hi(), r, s))
}

/// Replaces `a` by the other diagonal of its quadrilateral.
pub fn flip(t: &Triangulation, a: Arc) -> Result<(Triangulation, Arc), PolygonError> {
    let quad = quadrilateral(t, a)?;
    let a2 = quad.flipped_diagonal();
    let mut ds: Vec<Arc> = t.diagonals.iter().copied().filter(|d| *d != a).collect();
    ds.push(a2);
    ds.sort();
    Ok((
        Triangulation {
            n: t.n,
            diagonals: ds,
        },
        a2,
    ))
}

/// Number of triangles at each vertex, `q[0]` belonging to vertex 1.
pub fn quiddity(t: &Triangulation) -> Vec<u64> {
    // A vertex of degree k in the triangulation sees k + 1 triangles.
    t.degrees()[1..].iter().map(|&k| k as u64 + 1).collect()
}
