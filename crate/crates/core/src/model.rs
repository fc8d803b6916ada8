//! Domain types shared by every family, plus the canonical JSON encoding.
//!
//! All structures are immutable once built; constructors validate the type
//! invariants and return [`Error::InvariantViolation`] rather than repairing
//! input. The one documented exception is poset input, whose relation is
//! transitively closed on load.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number used for sequence values and coordinates.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`; the result is reduced to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim())
        .map_err(|_| Error::MalformedInput(format!("bad rational numerator in {s:?}")))?;
    let den = BigInt::from_str(den.trim())
        .map_err(|_| Error::MalformedInput(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::MalformedInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` in lowest terms with `q > 0`, or `"p"` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------------
// Colored complete graphs
// ---------------------------------------------------------------------------

/// Complete graph on `n` labeled vertices whose edges carry colors `1..=c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredCompleteGraph {
    n: usize,
    c: u8,
    // symmetric n*n matrix, zero on the diagonal
    colors: Vec<u8>,
}

impl ColoredCompleteGraph {
    /// Builds the graph by asking `color(u, v)` for every pair `u < v`.
    pub fn from_fn(n: usize, c: usize, mut color: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if c == 0 || c > u8::MAX as usize {
            return Err(Error::InvariantViolation(format!(
                "color count must be in 1..=255, got {c}"
            )));
        }
        let mut colors = vec![0u8; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let col = color(u, v);
                if col == 0 || col > c {
                    return Err(Error::InvariantViolation(format!(
                        "edge {{{u},{v}}} has color {col} outside 1..={c}"
                    )));
                }
                colors[u * n + v] = col as u8;
                colors[v * n + u] = col as u8;
            }
        }
        Ok(Self { n, c: c as u8, colors })
    }

    pub fn uniform(n: usize, c: usize, color: usize) -> Result<Self> {
        Self::from_fn(n, c, |_, _| color)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.c as usize
    }

    /// Color of the edge `{u, v}`; `u != v`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> usize {
        debug_assert!(u != v);
        self.colors[u * self.n + v] as usize
    }

    /// Every edge once as `(u, v, color)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.color(u, v))))
    }

    /// Neighborhoods in the spanning subgraph formed by edges of `color`.
    pub fn color_neighborhoods(&self, color: usize) -> Vec<FixedBitSet> {
        (0..self.n)
            .map(|u| {
                let mut set = FixedBitSet::with_capacity(self.n);
                for v in 0..self.n {
                    if v != u && self.color(u, v) == color {
                        set.insert(v);
                    }
                }
                set
            })
            .collect()
    }

    /// Induced subgraph on `keep`, relabeled in the given order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let m = keep.len();
        let mut colors = vec![0u8; m * m];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i != j {
                    colors[i * m + j] = self.color(u, v) as u8;
                }
            }
        }
        Self { n: m, c: self.c, colors }
    }

    /// Adds one vertex whose edge to `u` has color `new_colors[u]`.
    pub fn extend(&self, new_colors: &[usize]) -> Result<Self> {
        if new_colors.len() != self.n {
            return Err(Error::InvariantViolation("extension must color every old vertex".into()));
        }
        let n = self.n;
        Self::from_fn(n + 1, self.num_colors(), |u, v| {
            if v == n {
                new_colors[u]
            } else {
                self.color(u, v)
            }
        })
    }
}

// ---------------------------------------------------------------------------
// Finite posets
// ---------------------------------------------------------------------------

/// Finite strict partial order on elements `0..n`, kept transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    // up[a] = { b : a < b }, down[b] = { a : a < b }
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl FinitePoset {
    pub fn antichain(n: usize) -> Self {
        Self::from_relations(n, std::iter::empty()).expect("an antichain is a poset")
    }

    /// Transitive closure of the given `a < b` pairs. Cycles are rejected.
    pub fn from_relations(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvariantViolation(format!("relation ({a},{b}) out of range 0..{n}")));
            }
            if a == b {
                return Err(Error::InvariantViolation(format!("reflexive relation ({a},{a})")));
            }
            up[a].insert(b);
        }
        // Warshall closure over the pivot element
        for m in 0..n {
            let via = up[m].clone();
            for row in up.iter_mut() {
                if row.contains(m) {
                    row.union_with(&via);
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| up[a].contains(a)) {
            return Err(Error::InvariantViolation(format!("relation has a cycle through {a}")));
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        Ok(Self { n, up, down })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    /// Elements strictly above `a`.
    pub fn above(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// Elements strictly below `b`.
    pub fn below(&self, b: usize) -> &FixedBitSet {
        &self.down[b]
    }

    /// All pairs `(a, b)` with `a < b`, lexicographically ordered.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.up[a].ones().map(move |b| (a, b)))
            .collect()
    }

    /// A linear extension: elements ordered so that `a < b` implies `a` first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (self.down[a].count_ones(..), a));
        order
    }

    /// Relabels elements: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let pairs = self.relations().into_iter().map(|(a, b)| (perm[a], perm[b]));
        Self::from_relations(self.n, pairs).expect("relabeling preserves the order")
    }
}

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

/// Finite sequence of pairwise distinct positive rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberSequence {
    values: Vec<Rational>,
}

impl NumberSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::InvariantViolation(format!("sequence value {v} is not positive")));
        }
        let mut seen = HashSet::with_capacity(values.len());
        for v in &values {
            if !seen.insert(v) {
                return Err(Error::InvariantViolation(format!("duplicate sequence value {v}")));
            }
        }
        Ok(Self { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Order type: `ranks()[t]` is the number of values smaller than `values[t]`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.values.len()).collect();
        idx.sort_by(|&a, &b| self.values[a].cmp(&self.values[b]));
        let mut ranks = vec![0; idx.len()];
        for (r, &t) in idx.iter().enumerate() {
            ranks[t] = r;
        }
        ranks
    }
}

// ---------------------------------------------------------------------------
// Planar point sets
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(rat(x), rat(y))
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Which general-position convention a point set obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PositionMode {
    /// Distinct x and distinct y coordinates.
    Monotone,
    /// Distinct x coordinates and no three points collinear.
    Cupcap,
    /// No three points collinear.
    Convex,
}

impl fmt::Display for PositionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PositionMode::Monotone => "monotone",
            PositionMode::Cupcap => "cupcap",
            PositionMode::Convex => "convex",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarPointSet {
    points: Vec<Point>,
    mode: PositionMode,
}

fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

impl PlanarPointSet {
    pub fn new(points: Vec<Point>, mode: PositionMode) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::InvariantViolation(format!("duplicate point {p}")));
            }
        }
        if matches!(mode, PositionMode::Monotone | PositionMode::Cupcap) {
            let mut xs = HashSet::new();
            if let Some(p) = points.iter().find(|p| !xs.insert(&p.x)) {
                return Err(Error::InvariantViolation(format!("repeated x coordinate at {p}")));
            }
        }
        if mode == PositionMode::Monotone {
            let mut ys = HashSet::new();
            if let Some(p) = points.iter().find(|p| !ys.insert(&p.y)) {
                return Err(Error::InvariantViolation(format!("repeated y coordinate at {p}")));
            }
        }
        if matches!(mode, PositionMode::Cupcap | PositionMode::Convex) {
            let n = points.len();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if cross(&points[i], &points[j], &points[k]).is_zero() {
                            return Err(Error::InvariantViolation(format!(
                                "collinear points {i}, {j}, {k}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self { points, mode })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn mode(&self) -> PositionMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Copy with one point removed.
    pub fn without(&self, index: usize) -> Self {
        let mut points = self.points.clone();
        points.remove(index);
        Self { points, mode: self.mode }
    }

    /// Reading the y-coordinates in x order gives the matching sequence (monotone mode).
    pub fn to_sequence_values(&self) -> Vec<Rational> {
        let mut pts: Vec<&Point> = self.points.iter().collect();
        pts.sort_by(|a, b| a.x.cmp(&b.x));
        pts.into_iter().map(|p| p.y.clone()).collect()
    }
}

// ---------------------------------------------------------------------------
// Canonical encoding
// ---------------------------------------------------------------------------

/// Any structure that has a canonical JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Graph(ColoredCompleteGraph),
    Poset(FinitePoset),
    Sequence(NumberSequence),
    Points(PlanarPointSet),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Wire {
    Graph {
        n: usize,
        c: usize,
        edges: Vec<(usize, usize, usize)>,
    },
    Poset {
        n: usize,
        lt: Vec<(usize, usize)>,
    },
    Sequence {
        values: Vec<String>,
    },
    Points {
        mode: PositionMode,
        points: Vec<(String, String)>,
    },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Graph(_) => "graph",
            Structure::Poset(_) => "poset",
            Structure::Sequence(_) => "sequence",
            Structure::Points(_) => "points",
        }
    }

    fn to_wire(&self) -> Wire {
        match self {
            Structure::Graph(g) => Wire::Graph {
                n: g.n(),
                c: g.num_colors(),
                edges: g.edges().collect(),
            },
            Structure::Poset(p) => Wire::Poset {
                n: p.len(),
                lt: p.relations(),
            },
            Structure::Sequence(s) => Wire::Sequence {
                values: s.values().iter().map(format_rational).collect(),
            },
            Structure::Points(p) => Wire::Points {
                mode: p.mode(),
                points: p
                    .points()
                    .iter()
                    .map(|q| (format_rational(&q.x), format_rational(&q.y)))
                    .collect(),
            },
        }
    }

    fn from_wire(wire: Wire) -> Result<Self> {
        match wire {
            Wire::Graph { n, c, edges } => {
                let pairs = n * n.saturating_sub(1) / 2;
                if edges.len() != pairs {
                    return Err(Error::InvariantViolation(format!(
                        "graph on {n} vertices needs {pairs} edges, got {}",
                        edges.len()
                    )));
                }
                let mut table = vec![0usize; n * n];
                for (u, v, col) in edges {
                    if u >= n || v >= n || u == v {
                        return Err(Error::InvariantViolation(format!("bad edge [{u},{v}]")));
                    }
                    let (a, b) = (u.min(v), u.max(v));
                    if table[a * n + b] != 0 {
                        return Err(Error::InvariantViolation(format!("edge [{a},{b}] listed twice")));
                    }
                    table[a * n + b] = col;
                }
                ColoredCompleteGraph::from_fn(n, c, |u, v| table[u * n + v]).map(Structure::Graph)
            }
            Wire::Poset { n, lt } => FinitePoset::from_relations(n, lt).map(Structure::Poset),
            Wire::Sequence { values } => {
                let values = values.iter().map(|v| parse_rational(v)).collect::<Result<Vec<_>>>()?;
                NumberSequence::new(values).map(Structure::Sequence)
            }
            Wire::Points { mode, points } => {
                let points = points
                    .iter()
                    .map(|(x, y)| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
                    .collect::<Result<Vec<_>>>()?;
                PlanarPointSet::new(points, mode).map(Structure::Points)
            }
        }
    }
}

/// Deterministic compact JSON encoding of a structure.
pub fn canonical_serialize(structure: &Structure) -> String {
    serde_json::to_string(&structure.to_wire()).expect("wire types always serialize")
}

/// Parses and validates a canonical JSON document.
pub fn canonical_parse(bytes: &[u8]) -> Result<Structure> {
    let wire: Wire = serde_json::from_slice(bytes).map_err(|e| Error::MalformedInput(e.to_string()))?;
    Structure::from_wire(wire)
}

impl From<ColoredCompleteGraph> for Structure {
    fn from(g: ColoredCompleteGraph) -> Self {
        Structure::Graph(g)
    }
}

impl From<FinitePoset> for Structure {
    fn from(p: FinitePoset) -> Self {
        Structure::Poset(p)
    }
}

impl From<NumberSequence> for Structure {
    fn from(s: NumberSequence) -> Self {
        Structure::Sequence(s)
    }
}

impl From<PlanarPointSet> for Structure {
    fn from(p: PlanarPointSet) -> Self {
        Structure::Points(p)
    }
}
