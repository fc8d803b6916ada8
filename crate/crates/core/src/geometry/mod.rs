//! Planar point sets: exact predicates, arrangement cell sampling, cup/cap and
//! convex-polygon dynamic programs, the cup/cap and convex constructions,
//! their verifiers, and SVG rendering.

mod arrangement;
mod chains;
mod fixtures;
mod predicates;
mod render;

pub use arrangement::{cell_samples, LineArrangementSample};
pub use predicates::{check_general_position, orientation, Line, OrientTable};
pub use render::{render_svg, Overlay};

use crate::error::{Error, Result};
use crate::model::{format_rational, rat, PlanarPointSet, Point, PositionMode};
use crate::par;
use crate::report::{Mode, VerificationReport, Witness};

use chains::ChainDp;
use predicates::PairForms;

/// Indices of `points` sorted by x.
fn x_order(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.cmp(&points[b].x));
    order
}

fn longest_chain(points: &[Point], turn: i8) -> Result<Vec<usize>> {
    check_general_position(points, true)?;
    let t = OrientTable::new(points);
    let order = x_order(points);
    Ok(ChainDp::new(&t, &order, turn).longest().into_iter().map(|i| order[i]).collect())
}

fn longest_chain_through(points: &[Point], p: &Point, turn: i8) -> Result<usize> {
    let mut all = points.to_vec();
    all.push(p.clone());
    check_general_position(&all, true)?;
    let t = OrientTable::new(&all);
    let order = x_order(&all);
    let at = order.iter().position(|&i| i == points.len()).expect("p is listed");
    Ok(ChainDp::new(&t, &order, turn).longest_through(&t, &order, at, turn))
}

/// Indices of a longest cup (points on a convex function graph), by x.
pub fn longest_cup(points: &[Point]) -> Result<Vec<usize>> {
    longest_chain(points, 1)
}

/// Indices of a longest cap (points on a concave function graph), by x.
pub fn longest_cap(points: &[Point]) -> Result<Vec<usize>> {
    longest_chain(points, -1)
}

pub fn max_cup(points: &[Point]) -> Result<usize> {
    longest_cup(points).map(|c| c.len())
}

pub fn max_cap(points: &[Point]) -> Result<usize> {
    longest_cap(points).map(|c| c.len())
}

/// Longest cup of `points` plus `p` that uses `p`.
pub fn max_cup_through(points: &[Point], p: &Point) -> Result<usize> {
    longest_chain_through(points, p, 1)
}

/// Longest cap of `points` plus `p` that uses `p`.
pub fn max_cap_through(points: &[Point], p: &Point) -> Result<usize> {
    longest_chain_through(points, p, -1)
}

/// Largest subset of `points` plus `p` in convex position having `p` as a vertex.
pub fn max_convex_through(points: &[Point], p: &Point) -> Result<usize> {
    let mut all = points.to_vec();
    all.push(p.clone());
    check_general_position(&all, false)?;
    Ok(chains::max_convex_through(&OrientTable::new(&all), points.len()))
}

/// Indices of the convex hull vertices, counterclockwise from the lowest-x point.
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    let mut order = (0..points.len()).collect::<Vec<_>>();
    order.sort_by(|&a, &b| points[a].x.cmp(&points[b].x).then_with(|| points[a].y.cmp(&points[b].y)));
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 { order.clone() } else { order.iter().rev().copied().collect() };
        for &i in &seq {
            while hull.len() >= start + 2
                && orientation(&points[hull[hull.len() - 2]], &points[hull[hull.len() - 1]], &points[i]) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

// Precomputed data for checking many candidate new points against one set.
struct SampleChecker<'a> {
    points: &'a [Point],
    table: OrientTable,
    forms: PairForms,
    order: Vec<usize>,
}

impl<'a> SampleChecker<'a> {
    fn new(points: &'a [Point]) -> Self {
        Self {
            points,
            table: OrientTable::new(points),
            forms: PairForms::new(points),
            order: x_order(points),
        }
    }

    fn extended(&self, s: &Point) -> (OrientTable, Vec<i8>) {
        let signs = self.forms.signs(s);
        (self.table.with_point(&signs), signs)
    }

    // (longest cup through s, longest cap through s, signs, x-rank of s)
    fn cup_cap(&self, s: &Point) -> (usize, usize, Vec<i8>, usize) {
        let (t, signs) = self.extended(s);
        let rank = self.order.iter().take_while(|&&i| self.points[i].x < s.x).count();
        let mut order = self.order.clone();
        order.insert(rank, self.points.len());
        let cup = ChainDp::new(&t, &order, 1).longest_through(&t, &order, rank, 1);
        let cap = ChainDp::new(&t, &order, -1).longest_through(&t, &order, rank, -1);
        (cup, cap, signs, rank)
    }

    fn convex(&self, s: &Point) -> (usize, Vec<i8>) {
        let (t, signs) = self.extended(s);
        (chains::max_convex_through(&t, self.points.len()), signs)
    }
}

fn sample_witness(s: &Point, signs: Vec<i8>, x_rank: Option<usize>) -> Witness {
    Witness::Sample {
        point: (format_rational(&s.x), format_rational(&s.y)),
        signs,
        x_rank,
    }
}

/// Decides whether every new point (in general position) creates a `k`-cup or
/// an `l`-cap through it; sat mode also requires `P` to have neither.
pub fn verify_cupcap(p: &PlanarPointSet, k: usize, l: usize, mode: Mode) -> Result<VerificationReport> {
    let pts = p.points();
    let arr = cell_samples(p, PositionMode::Cupcap)?;
    if mode == Mode::Sat {
        for (cup, limit) in [(true, k), (false, l)] {
            let chain = if cup { longest_cup(pts)? } else { longest_cap(pts)? };
            if chain.len() >= limit {
                return Ok(VerificationReport::contains_forbidden(Witness::PointChain {
                    cup,
                    indices: chain[..limit].to_vec(),
                }));
            }
        }
    }
    let checker = SampleChecker::new(pts);
    let (free, examined) = par::first_hit_with_cost(&arr.samples, |s| {
        let (cup, cap, signs, rank) = checker.cup_cap(s);
        let hit = (cup < k && cap < l).then(|| sample_witness(s, signs, Some(rank)));
        (hit, 1)
    });
    Ok(VerificationReport::from_search(mode, free, examined))
}

/// Every cell sample that extends to no `k`-cup and no `l`-cap.
pub fn cupcap_free_samples(p: &PlanarPointSet, k: usize, l: usize) -> Result<Vec<Point>> {
    let arr = cell_samples(p, PositionMode::Cupcap)?;
    let checker = SampleChecker::new(p.points());
    let hits = par::map(&arr.samples, |s| {
        let (cup, cap, _, _) = checker.cup_cap(s);
        cup < k && cap < l
    });
    Ok(arr.samples.into_iter().zip(hits).filter(|(_, h)| *h).map(|(s, _)| s).collect())
}

/// Decides whether every new point (in general position) lies on a convex
/// `n`-set together with points of `P`.
pub fn verify_convex(p: &PlanarPointSet, n: usize) -> Result<VerificationReport> {
    let arr = cell_samples(p, PositionMode::Convex)?;
    let checker = SampleChecker::new(p.points());
    let (free, examined) = par::first_hit_with_cost(&arr.samples, |s| {
        let (size, signs) = checker.convex(s);
        ((size < n).then(|| sample_witness(s, signs, None)), 1)
    });
    Ok(VerificationReport::from_search(Mode::Semisat, free, examined))
}

/// `n - 1 + floor((n - 2) / d)`.
pub fn osat_convex_lower_bound(n: usize, d: usize) -> Result<usize> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidThreshold(format!("need n >= 2 and d >= 1, got n={n}, d={d}")));
    }
    Ok(n - 1 + (n - 2) / d)
}

/// `m` points on `y = -x^2` at `x = 1..=m`.
pub fn construct_cap(m: usize) -> PlanarPointSet {
    let pts = (1..=m as i64).map(|x| Point::from_ints(x, -x * x)).collect();
    PlanarPointSet::new(pts, PositionMode::Cupcap).expect("points on a parabola")
}

/// `m` points on `y = x^2` at `x = 1..=m`.
pub fn construct_cup(m: usize) -> PlanarPointSet {
    let pts = (1..=m as i64).map(|x| Point::from_ints(x, x * x)).collect();
    PlanarPointSet::new(pts, PositionMode::Cupcap).expect("points on a parabola")
}

fn reflect_y(p: &PlanarPointSet) -> PlanarPointSet {
    let pts = p.points().iter().map(|q| Point::new(q.x.clone(), -q.y.clone())).collect();
    PlanarPointSet::new(pts, PositionMode::Cupcap).expect("reflection keeps general position")
}

/// Point set where every new point creates a `k`-cup or an `l`-cap:
/// an `(l-1)`-cap for `k = 3`, a `(k-1)`-cup for `l = 3`, `2k - 2` points for
/// `l = 4` (mirrored for `k = 4`) and `2k + 2l - 10` points for `k, l >= 5`.
pub fn construct_cupcap_semisat(k: usize, l: usize) -> Result<PlanarPointSet> {
    if k < 3 || l < 3 {
        return Err(Error::InvalidThreshold(format!("need k, l >= 3, got k={k}, l={l}")));
    }
    Ok(match (k, l) {
        (3, _) => construct_cap(l - 1),
        (_, 3) => construct_cup(k - 1),
        (4, 4) => fixtures::four_four(),
        (_, 4) => fixtures::cups_with_four(k),
        (4, _) => reflect_y(&fixtures::cups_with_four(l)),
        _ => fixtures::general(k, l),
    })
}

/// Vertices of a centrally symmetric convex `(2n - 4)`-gon with generators
/// `(1, i)`, `i = 0..n-2`: partial sums, then the same steps reversed in sign.
pub fn construct_convex_semisat(n: usize) -> Result<PlanarPointSet> {
    if n < 3 {
        return Err(Error::InvalidThreshold(format!("need n >= 3, got {n}")));
    }
    let gens: Vec<(i64, i64)> = (0..n as i64 - 2).map(|s| (1, s)).collect();
    let mut cur = (0i64, 0i64);
    let mut pts = vec![Point::from_ints(0, 0)];
    for &(dx, dy) in &gens {
        cur = (cur.0 + dx, cur.1 + dy);
        pts.push(Point::from_ints(cur.0, cur.1));
    }
    for &(dx, dy) in &gens[..gens.len() - 1] {
        cur = (cur.0 - dx, cur.1 - dy);
        pts.push(Point::from_ints(cur.0, cur.1));
    }
    PlanarPointSet::new(pts, PositionMode::Convex)
}

/// Point offset used when a verifier needs an arbitrary location.
pub fn origin() -> Point {
    Point::new(rat(0), rat(0))
}
