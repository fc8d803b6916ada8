use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{format_rational, Point, Rational};

/// Sign of the turn `p -> q -> r`: `+1` counterclockwise, `-1` clockwise,
/// `0` collinear.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    sign(&det)
}

pub(crate) fn sign(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// A line of the arrangement: `y = slope * x + intercept`, or `x = at`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Line {
    Sloped { slope: Rational, intercept: Rational },
    Vertical { at: Rational },
}

impl Line {
    pub fn through(p: &Point, q: &Point) -> Self {
        if p.x == q.x {
            Line::Vertical { at: p.x.clone() }
        } else {
            let slope = (&q.y - &p.y) / (&q.x - &p.x);
            let intercept = &p.y - &slope * &p.x;
            Line::Sloped { slope, intercept }
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Line::Sloped { slope, intercept } => slope * &p.x + intercept == p.y,
            Line::Vertical { at } => *at == p.x,
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Sloped { slope, intercept } => write!(f, "y = {slope}x + {intercept}"),
            Line::Vertical { at } => write!(f, "x = {at}"),
        }
    }
}

impl Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Line::Sloped { slope, intercept } => [format_rational(slope), format_rational(intercept)].serialize(s),
            Line::Vertical { at } => [format_rational(at)].serialize(s),
        }
    }
}

/// Fails on a repeated point, a collinear triple, or (when `distinct_x`) two
/// points sharing an x-coordinate.
pub fn check_general_position(points: &[Point], distinct_x: bool) -> Result<()> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(Error::DegenerateInput(format!("repeated point {}", points[i])));
            }
            if distinct_x && points[i].x == points[j].x {
                return Err(Error::DegenerateInput(format!(
                    "points {} and {} share an x-coordinate",
                    points[i], points[j]
                )));
            }
            for m in j + 1..n {
                if orientation(&points[i], &points[j], &points[m]) == 0 {
                    return Err(Error::DegenerateInput(format!(
                        "points {}, {}, {} are collinear",
                        points[i], points[j], points[m]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Signs of `orientation(a, b, c)` for all index triples of a point list.
#[derive(Clone, Debug)]
pub struct OrientTable {
    n: usize,
    signs: Vec<i8>,
}

impl OrientTable {
    pub fn new(points: &[Point]) -> Self {
        let n = points.len();
        let mut t = Self { n, signs: vec![0; n * n * n] };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    t.set_all(a, b, c, orientation(&points[a], &points[b], &points[c]));
                }
            }
        }
        t
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> i8 {
        self.signs[(a * self.n + b) * self.n + c]
    }

    // Sets all six permutations from the sign of (a, b, c).
    fn set_all(&mut self, a: usize, b: usize, c: usize, o: i8) {
        let n = self.n;
        let mut put = |x: usize, y: usize, z: usize, v: i8| self.signs[(x * n + y) * n + z] = v;
        put(a, b, c, o);
        put(b, c, a, o);
        put(c, a, b, o);
        put(b, a, c, -o);
        put(a, c, b, -o);
        put(c, b, a, -o);
    }

    /// This table plus one point (index `n`) whose sign against every pair
    /// `(i, j)`, `i < j`, is given in lexicographic pair order.
    pub fn with_point(&self, pair_signs: &[i8]) -> Self {
        let n = self.n;
        let m = n + 1;
        let mut t = Self { n: m, signs: vec![0; m * m * m] };
        for a in 0..n {
            for b in 0..n {
                let src = (a * n + b) * n;
                let dst = (a * m + b) * m;
                t.signs[dst..dst + n].copy_from_slice(&self.signs[src..src + n]);
            }
        }
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                t.set_all(i, j, n, pair_signs[idx]);
                idx += 1;
            }
        }
        t
    }
}

/// Integer linear forms `(A, B, C)`, one per pair `i < j` in lexicographic
/// order, with `orientation(p_i, p_j, s) = sign(A s.x + B s.y + C)`.
pub(crate) struct PairForms {
    forms: Vec<(BigInt, BigInt, BigInt)>,
}

impl PairForms {
    pub(crate) fn new(points: &[Point]) -> Self {
        let n = points.len();
        let mut forms = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let (p, q) = (&points[i], &points[j]);
                let dx = &q.x - &p.x;
                let dy = &q.y - &p.y;
                let c = &dy * &p.x - &dx * &p.y;
                let (a, b) = (-dy, dx);
                // clear denominators; the scale is positive so signs are kept
                let scale = a.denom().lcm(b.denom()).lcm(c.denom());
                let int = |r: &Rational| r.numer() * (&scale / r.denom());
                forms.push((int(&a), int(&b), int(&c)));
            }
        }
        Self { forms }
    }

    pub(crate) fn signs(&self, s: &Point) -> Vec<i8> {
        // s = (X / dx, Y / dy); multiply through by dx * dy > 0
        let x = s.x.numer() * s.y.denom();
        let y = s.y.numer() * s.x.denom();
        let w = s.x.denom() * s.y.denom();
        self.forms
            .iter()
            .map(|(a, b, c)| match (a * &x + b * &y + c * &w).sign() {
                Sign::Plus => 1,
                Sign::Minus => -1,
                Sign::NoSign => 0,
            })
            .collect()
    }
}
