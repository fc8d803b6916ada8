use num_traits::Signed;

use crate::model::{rat, PlanarPointSet, Point, PositionMode, Rational};

// Cores listed by increasing x. Chains are index lists in x order; caps A1
// (grown leftwards) and A2 (rightwards), cups U1 (leftwards) and U2
// (rightwards).

const FOUR_FOUR: [(i64, i64); 6] = [(-4, 2), (-3, 2), (-2, 4), (2, -4), (3, -2), (4, -2)];

const FIVE_FOUR: [(i64, i64); 8] = [(-5, 6), (-3, -1), (-2, -1), (0, 6), (1, -4), (2, -3), (4, 2), (6, -3)];
const FIVE_FOUR_U1: [usize; 4] = [0, 1, 2, 3];
const FIVE_FOUR_U2: [usize; 4] = [3, 4, 5, 6];

// centrally symmetric: point i reflects to point 9 - i, caps to cups
const FIVE_FIVE: [(i64, i64); 10] = [
    (-12, 4),
    (-9, -3),
    (-6, -8),
    (-5, 4),
    (-3, 11),
    (3, -11),
    (5, -4),
    (6, 8),
    (9, 3),
    (12, -4),
];
const FIVE_FIVE_A1: [usize; 4] = [0, 3, 8, 9];
const FIVE_FIVE_A2: [usize; 4] = [2, 3, 4, 9];
const FIVE_FIVE_U1: [usize; 4] = [0, 5, 6, 7];
const FIVE_FIVE_U2: [usize; 4] = [0, 1, 6, 9];

fn points(coords: &[(i64, i64)]) -> Vec<Point> {
    coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
}

fn finish(pts: Vec<Point>) -> PlanarPointSet {
    PlanarPointSet::new(pts, PositionMode::Cupcap).expect("fixture in general position")
}

pub(super) fn four_four() -> PlanarPointSet {
    finish(points(&FOUR_FOUR))
}

/// The `l = 4` family: `2k - 2` points, `k >= 5`.
pub(super) fn cups_with_four(k: usize) -> PlanarPointSet {
    let mut g = Grower::new(points(&FIVE_FOUR));
    let (mut u1, mut u2) = (FIVE_FOUR_U1.to_vec(), FIVE_FOUR_U2.to_vec());
    for _ in 5..k {
        g.grow(&mut u1, End::Left, true);
        g.grow(&mut u2, End::Right, true);
    }
    finish(g.pts)
}

/// The `k, l >= 5` family: `2k + 2l - 10` points.
pub(super) fn general(k: usize, l: usize) -> PlanarPointSet {
    let mut g = Grower::new(points(&FIVE_FIVE));
    let (mut a1, mut a2) = (FIVE_FIVE_A1.to_vec(), FIVE_FIVE_A2.to_vec());
    let (mut u1, mut u2) = (FIVE_FIVE_U1.to_vec(), FIVE_FIVE_U2.to_vec());
    for _ in 5..l {
        g.grow(&mut a1, End::Left, false);
        g.grow(&mut a2, End::Right, false);
    }
    for _ in 5..k {
        g.grow(&mut u1, End::Left, true);
        g.grow(&mut u2, End::Right, true);
    }
    finish(g.pts)
}

#[derive(Clone, Copy)]
enum End {
    Left,
    Right,
}

struct Grower {
    pts: Vec<Point>,
}

impl Grower {
    fn new(pts: Vec<Point>) -> Self {
        Self { pts }
    }

    fn steepest(&self) -> Rational {
        let mut m = rat(0);
        for (i, p) in self.pts.iter().enumerate() {
            for q in &self.pts[i + 1..] {
                let s = slope(p, q).abs();
                if s > m {
                    m = s;
                }
            }
        }
        m
    }

    /// Appends a point continuing `chain` (a cup or a cap, by x) past its
    /// `end`, one bounding-box width further out, along a line steeper than
    /// every line spanned so far and bent the way the chain bends.
    fn grow(&mut self, chain: &mut Vec<usize>, end: End, cup: bool) {
        let delta = self.steepest() * rat(2) + rat(1);
        let (lo, hi) = self.pts.iter().fold((self.pts[0].x.clone(), self.pts[0].x.clone()), |(lo, hi), p| {
            (lo.min(p.x.clone()), hi.max(p.x.clone()))
        });
        let width = hi - lo + rat(1);
        let n = chain.len();
        let q = match end {
            End::Left => {
                let (f1, f2) = (&self.pts[chain[0]], &self.pts[chain[1]]);
                let s = slope(f1, f2);
                let s = if cup { s - delta } else { s + delta };
                Point::new(&f1.x - &width, &f1.y - &width * s)
            }
            End::Right => {
                let (g1, g2) = (&self.pts[chain[n - 2]], &self.pts[chain[n - 1]]);
                let s = slope(g1, g2);
                let s = if cup { s + delta } else { s - delta };
                Point::new(&g2.x + &width, &g2.y + &width * s)
            }
        };
        self.pts.push(q);
        let idx = self.pts.len() - 1;
        match end {
            End::Left => chain.insert(0, idx),
            End::Right => chain.push(idx),
        }
    }
}

fn slope(p: &Point, q: &Point) -> Rational {
    (&q.y - &p.y) / (&q.x - &p.x)
}
