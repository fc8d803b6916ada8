use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{rat, PlanarPointSet, Point, PositionMode, Rational};

use super::predicates::{check_general_position, Line};

/// The lines spanned by a point set (plus a vertical line through every point
/// in cupcap mode) and one sample point strictly inside every cell.
#[derive(Clone, Debug, Serialize)]
pub struct LineArrangementSample {
    pub lines: Vec<Line>,
    pub samples: Vec<Point>,
}

/// One interior point per cell of the arrangement.
///
/// Sweeps a vertical line from `x = -inf`. Between events the sloped lines
/// keep a fixed bottom-to-top order and every gap between neighbours is part
/// of one cell. A cell is sampled in the slab right after its leftmost point:
/// cells unbounded to the left before the first event, cells opening at a
/// crossing between the reversed lines of that crossing's bundle, and every
/// gap after a vertical line.
pub fn cell_samples(p: &PlanarPointSet, mode: PositionMode) -> Result<LineArrangementSample> {
    let verticals = match mode {
        PositionMode::Cupcap => true,
        PositionMode::Convex => false,
        PositionMode::Monotone => {
            return Err(Error::MalformedInput("cell sampling needs cupcap or convex mode".into()));
        }
    };
    check_general_position(p.points(), verticals)?;
    Ok(arrangement_samples(p.points(), verticals))
}

pub(crate) fn arrangement_samples(points: &[Point], verticals: bool) -> LineArrangementSample {
    let n = points.len();
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            lines.push(Line::through(&points[i], &points[j]));
        }
    }
    if verticals {
        lines.extend(points.iter().map(|q| Line::Vertical { at: q.x.clone() }));
    }
    let samples = sweep(&lines);
    LineArrangementSample { lines, samples }
}

struct Sloped {
    slope: Rational,
    intercept: Rational,
}

impl Sloped {
    fn at(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }
}

// Which lines cross at each event abscissa, and whether a vertical line is there.
#[derive(Default)]
struct Event {
    lines: Vec<usize>,
    vertical: bool,
}

fn sweep(lines: &[Line]) -> Vec<Point> {
    let mut sloped: Vec<Sloped> = Vec::new();
    let mut events: BTreeMap<Rational, Event> = BTreeMap::new();
    for line in lines {
        match line {
            Line::Sloped { slope, intercept } => sloped.push(Sloped {
                slope: slope.clone(),
                intercept: intercept.clone(),
            }),
            Line::Vertical { at } => events.entry(at.clone()).or_default().vertical = true,
        }
    }
    let m = sloped.len();
    for i in 0..m {
        for j in i + 1..m {
            if sloped[i].slope != sloped[j].slope {
                let x = (&sloped[j].intercept - &sloped[i].intercept) / (&sloped[i].slope - &sloped[j].slope);
                let e = events.entry(x).or_default();
                e.lines.push(i);
                e.lines.push(j);
            }
        }
    }

    // bottom-to-top order at x = -inf: steeper lines are lower, parallel
    // lines by intercept
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        sloped[b]
            .slope
            .cmp(&sloped[a].slope)
            .then_with(|| sloped[a].intercept.cmp(&sloped[b].intercept))
    });
    let mut pos = vec![0; m];
    for (idx, &l) in order.iter().enumerate() {
        pos[l] = idx;
    }

    let xs: Vec<Rational> = events.keys().cloned().collect();
    let mut samples = Vec::new();
    let first_x = xs.first().map_or_else(|| rat(0), |x| x - rat(1));
    for gap in 0..=m {
        samples.push(gap_sample(&sloped, &order, gap, &first_x));
    }

    for (e_idx, (x, event)) in events.iter().enumerate() {
        let sample_x = match xs.get(e_idx + 1) {
            Some(next) => (x + next) / rat(2),
            None => x + rat(1),
        };
        let mut touched: Vec<usize> = event.lines.iter().map(|&l| pos[l]).collect();
        touched.sort_unstable();
        touched.dedup();
        let mut new_gaps = Vec::new();
        let mut start = 0;
        while start < touched.len() {
            let y = sloped[order[touched[start]]].at(x);
            let mut end = start + 1;
            while end < touched.len()
                && touched[end] == touched[end - 1] + 1
                && sloped[order[touched[end]]].at(x) == y
            {
                end += 1;
            }
            let (lo, hi) = (touched[start], touched[end - 1]);
            if hi > lo {
                order[lo..=hi].reverse();
                for (idx, &l) in order[lo..=hi].iter().enumerate() {
                    pos[l] = lo + idx;
                }
                new_gaps.extend(lo + 1..=hi);
            }
            start = end;
        }
        if event.vertical {
            new_gaps = (0..=m).collect();
        }
        for gap in new_gaps {
            samples.push(gap_sample(&sloped, &order, gap, &sample_x));
        }
    }
    samples
}

// Point at abscissa `x` inside gap `gap` (0 = below every line).
fn gap_sample(sloped: &[Sloped], order: &[usize], gap: usize, x: &Rational) -> Point {
    let m = order.len();
    let y = if m == 0 {
        rat(0)
    } else if gap == 0 {
        sloped[order[0]].at(x) - rat(1)
    } else if gap == m {
        sloped[order[m - 1]].at(x) + rat(1)
    } else {
        (sloped[order[gap - 1]].at(x) + sloped[order[gap]].at(x)) / rat(2)
    };
    Point::new(x.clone(), y)
}
