//! Monotone subsequences: the gamma map, the `R`/`V`/`W` matrices and their
//! completion, saturating extensions, the tableau pairing, the semisaturated
//! point construction and the insertion-class verifier.

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::{format_rational, rat, ratio, NumberSequence, PlanarPointSet, Point, PositionMode, Rational};
use crate::par;
use crate::report::{Mode, VerificationReport, Witness};

/// Per position `(i, j)`: longest decreasing and longest increasing
/// subsequence ending there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaTable {
    pub entries: Vec<(usize, usize)>,
}

impl GammaTable {
    /// Later positions beat earlier ones in at least one coordinate.
    pub fn satisfies_observation(&self) -> bool {
        let e = &self.entries;
        (0..e.len()).all(|t| (0..t).all(|s| e[t].0 > e[s].0 || e[t].1 > e[s].1))
    }
}

fn run_ends<T: Ord>(a: &[T]) -> (Vec<usize>, Vec<usize>) {
    let m = a.len();
    let mut dec = vec![1; m];
    let mut inc = vec![1; m];
    for t in 0..m {
        for s in 0..t {
            if a[s] > a[t] {
                dec[t] = dec[t].max(dec[s] + 1);
            } else {
                inc[t] = inc[t].max(inc[s] + 1);
            }
        }
    }
    (dec, inc)
}

fn run_starts<T: Ord>(a: &[T]) -> (Vec<usize>, Vec<usize>) {
    let m = a.len();
    let mut dec = vec![1; m];
    let mut inc = vec![1; m];
    for t in (0..m).rev() {
        for s in t + 1..m {
            if a[s] < a[t] {
                dec[t] = dec[t].max(dec[s] + 1);
            } else {
                inc[t] = inc[t].max(inc[s] + 1);
            }
        }
    }
    (dec, inc)
}

pub fn gamma(a: &NumberSequence) -> GammaTable {
    let (dec, inc) = run_ends(a.values());
    GammaTable { entries: dec.into_iter().zip(inc).collect() }
}

fn longest_run<T: Ord>(a: &[T], increasing: bool) -> Vec<usize> {
    let (dec, inc) = run_ends(a);
    let len = if increasing { &inc } else { &dec };
    let Some(mut t) = (0..a.len()).max_by_key(|&t| (len[t], std::cmp::Reverse(t))) else {
        return Vec::new();
    };
    let mut out = vec![t];
    while len[t] > 1 {
        t = (0..t)
            .find(|&s| len[s] + 1 == len[t] && ((a[s] < a[t]) == increasing))
            .expect("run length is realized");
        out.push(t);
    }
    out.reverse();
    out
}

/// Positions of a longest increasing subsequence.
pub fn longest_increasing<T: Ord>(a: &[T]) -> Vec<usize> {
    longest_run(a, true)
}

/// Positions of a longest decreasing subsequence.
pub fn longest_decreasing<T: Ord>(a: &[T]) -> Vec<usize> {
    longest_run(a, false)
}

/// `rows x cols` matrix of nonnegative rationals; zero marks an empty cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PIMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Rational>,
}

impl PIMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, cells: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::MalformedInput("ragged matrix".into()));
        }
        let r = rows.len();
        Ok(Self { rows: r, cols, cells: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.cells[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.cells[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.cells.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    /// Rows in reverse order.
    pub fn flip_rows(&self) -> Self {
        let mut rows = self.to_rows();
        rows.reverse();
        Self { rows: self.rows, cols: self.cols, cells: rows.into_iter().flatten().collect() }
    }

    pub fn has_zero(&self) -> bool {
        self.cells.iter().any(Zero::is_zero)
    }

    fn positive(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| (idx / self.cols, idx % self.cols, v))
    }

    pub fn is_partially_increasing(&self) -> bool {
        if self.cells.iter().any(Signed::is_negative) {
            return false;
        }
        let mut values: Vec<&Rational> = self.positive().map(|e| e.2).collect();
        values.sort();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let cells: Vec<_> = self.positive().collect();
        cells.iter().all(|&(i1, j1, v1)| {
            cells
                .iter()
                .all(|&(i2, j2, v2)| !(i1 <= i2 && j1 <= j2) || v1 <= v2)
        })
    }
}

impl Serialize for PIMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        rows.serialize(s)
    }
}

/// The `l x k` matrices `R` (positions, 1-based), `V` (values) and `W`
/// (`V` with its rows reversed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceMatrices {
    pub r: PIMatrix,
    pub v: PIMatrix,
    pub w: PIMatrix,
}

pub fn matrices(a: &NumberSequence, k: usize, l: usize) -> Result<SequenceMatrices> {
    let g = gamma(a);
    let mut r = PIMatrix::zeros(l, k);
    let mut v = PIMatrix::zeros(l, k);
    for (t, &(i, j)) in g.entries.iter().enumerate() {
        if i > l || j > k {
            return Err(Error::PreconditionViolated(format!(
                "position {} has gamma ({i},{j}) outside the {l}x{k} box",
                t + 1
            )));
        }
        r.set(i - 1, j - 1, rat(t as i64 + 1));
        v.set(i - 1, j - 1, a.values()[t].clone());
    }
    let w = v.flip_rows();
    Ok(SequenceMatrices { r, v, w })
}

/// Fills every zero, in row-major order, keeping the matrix partially
/// increasing: `max + 1` with nothing weakly southeast, otherwise `t - e`
/// where `t` is the smallest southeast entry and `e = min(t, d) / 2` with `d`
/// the smallest gap between distinct positive entries.
pub fn complete_partially_increasing(m: &PIMatrix) -> Result<PIMatrix> {
    if !m.is_partially_increasing() {
        return Err(Error::PreconditionViolated("matrix is not partially increasing".into()));
    }
    let mut out = m.clone();
    for i0 in 0..m.rows {
        for j0 in 0..m.cols {
            if !out.get(i0, j0).is_zero() {
                continue;
            }
            let south_east = out
                .positive()
                .filter(|&(i, j, _)| i >= i0 && j >= j0)
                .map(|e| e.2)
                .min()
                .cloned();
            let value = match south_east {
                None => out.positive().map(|e| e.2).max().cloned().unwrap_or_else(Rational::zero) + rat(1),
                Some(t) => {
                    let mut values: Vec<&Rational> = out.positive().map(|e| e.2).collect();
                    values.sort();
                    let gap = values.windows(2).map(|w| w[1] - w[0]).min();
                    let eps = gap.map_or(t.clone(), |d| d.min(t.clone())) / rat(2);
                    t - eps
                }
            };
            out.set(i0, j0, value);
        }
    }
    debug_assert!(out.is_partially_increasing());
    Ok(out)
}

/// Entries replaced by their rank `1..=rows*cols` (positive entries only).
fn relabel_to_ranks(m: &PIMatrix) -> PIMatrix {
    let mut order: Vec<usize> = (0..m.cells.len()).collect();
    order.sort_by(|&a, &b| m.cells[a].cmp(&m.cells[b]));
    let mut out = m.clone();
    for (rank, idx) in order.into_iter().enumerate() {
        out.cells[idx] = rat(rank as i64 + 1);
    }
    out
}

/// Extension of `a` to length `kl` that stays free of increasing
/// `(k+1)`-runs and decreasing `(l+1)`-runs, and the completed `R'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatingExtension {
    pub sequence: NumberSequence,
    pub completed_r: PIMatrix,
    /// 0-based positions of the inserted values in `sequence`.
    pub inserted: Vec<usize>,
}

pub fn extend_saturate_detailed(a: &NumberSequence, k: usize, l: usize) -> Result<SaturatingExtension> {
    let mats = matrices(a, k, l)?;
    if a.len() == k * l {
        return Err(Error::AlreadyExtremal(format!("length {} already equals kl", a.len())));
    }
    let r = relabel_to_ranks(&complete_partially_increasing(&mats.r)?);
    let v = complete_partially_increasing(&mats.w)?.flip_rows();
    let mut out = vec![Rational::zero(); k * l];
    let mut inserted = Vec::new();
    for i in 0..l {
        for j in 0..k {
            let pos = r.get(i, j).to_integer().to_usize().expect("ranks are small") - 1;
            out[pos] = v.get(i, j).clone();
            if mats.r.get(i, j).is_zero() {
                inserted.push(pos);
            }
        }
    }
    inserted.sort_unstable();
    Ok(SaturatingExtension { sequence: NumberSequence::new(out)?, completed_r: r, inserted })
}

/// Extension of a non-extremal free sequence to length `kl`, free of the
/// same runs; this is the witness that `a` was not saturated.
pub fn extend_saturate(a: &NumberSequence, k: usize, l: usize) -> Result<NumberSequence> {
    extend_saturate_detailed(a, k, l).map(|e| e.sequence)
}

/// `(R, W)` for an extremal saturated permutation of `1..=kl`.
pub fn rsk_phi(a: &NumberSequence, k: usize, l: usize) -> Result<(PIMatrix, PIMatrix)> {
    let n = k * l;
    let is_perm = a.len() == n && {
        let mut seen = vec![false; n];
        a.values().iter().all(|v| {
            let ok = v.is_integer() && *v >= rat(1) && *v <= rat(n as i64);
            if ok {
                let idx = v.to_integer().to_usize().expect("checked range") - 1;
                !std::mem::replace(&mut seen[idx], true)
            } else {
                false
            }
        })
    };
    if !is_perm {
        return Err(Error::PreconditionViolated(format!("not a permutation of 1..={n}")));
    }
    let mats = matrices(a, k, l)?;
    Ok((mats.r, mats.w))
}

/// Standard Young tableaux of the `l x k` rectangle, by the hook length formula.
pub fn count_rect_syt(k: usize, l: usize) -> BigUint {
    let mut num = BigUint::one();
    for t in 2..=k * l {
        num *= BigUint::from(t);
    }
    let mut den = BigUint::one();
    for i in 0..l {
        for j in 0..k {
            den *= BigUint::from((l - 1 - i) + (k - 1 - j) + 1);
        }
    }
    num / den
}

/// Semisaturated monotone point set of `min(2k+l-5, 2l+k-5)` points: the
/// increasing-run construction, mirrored in x when the other order is smaller.
pub fn construct_semisat(k: usize, l: usize) -> PlanarPointSet {
    if k <= 1 || l <= 1 {
        return PlanarPointSet::new(Vec::new(), PositionMode::Monotone).expect("empty set");
    }
    if l < k {
        let pts = construct_semisat_increasing(l, k).points().to_vec();
        let mirrored = pts.into_iter().map(|p| Point::new(-p.x, p.y)).collect();
        return PlanarPointSet::new(mirrored, PositionMode::Monotone).expect("mirror keeps coordinates distinct");
    }
    construct_semisat_increasing(k, l)
}

/// Two increasing `(k-2)`-runs with a decreasing `(l-1)`-run inset between
/// them: `2k + l - 5` points, never mirrored. Empty when `k` or `l` is below 2.
pub fn construct_semisat_increasing(k: usize, l: usize) -> PlanarPointSet {
    if k <= 1 || l <= 1 {
        return PlanarPointSet::new(Vec::new(), PositionMode::Monotone).expect("empty set");
    }
    let runs = (k - 2) as i64;
    let gap = l as i64;
    // last point of the lower run is (a, a); the upper run starts at (a2, a2)
    let a = rat(runs);
    let a2 = rat(runs + gap);
    let eps = ratio(gap, 8);
    let mut pts: Vec<Point> = (1..=runs).map(|i| Point::from_ints(i, i)).collect();
    pts.extend((0..runs).map(|i| Point::from_ints(runs + gap + i, runs + gap + i)));
    let count = l - 1;
    let start = Point::new(&a + &eps, &a2 - &eps);
    if count == 1 {
        pts.push(start);
    } else {
        let span = (&a2 - &eps) - (&a + &eps);
        let step = span / rat(count as i64 - 1);
        for t in 0..count {
            let d = &step * rat(t as i64);
            pts.push(Point::new(&start.x + &d, &start.y - &d));
        }
    }
    PlanarPointSet::new(pts, PositionMode::Monotone).expect("construction is in general position")
}

// First insertion (position, value class) creating no increasing k-run and
// no decreasing l-run through the new value. `ranks` is the order type.
fn free_insertion(ranks: &[usize], k: usize, l: usize) -> (Option<(usize, usize)>, u64) {
    let m = ranks.len();
    let (dec_end, inc_end) = run_ends(ranks);
    let (dec_start, inc_start) = run_starts(ranks);
    let positions: Vec<usize> = (0..=m).collect();
    par::first_hit_with_cost(&positions, |&pos| {
        let mut count = 0;
        for class in 0..=m {
            count += 1;
            let mut inc = 1;
            let mut dec = 1;
            let (mut best_il, mut best_dl, mut best_ir, mut best_dr) = (0, 0, 0, 0);
            for (i, &r) in ranks.iter().enumerate() {
                let below = r < class;
                if i < pos {
                    if below {
                        best_il = best_il.max(inc_end[i]);
                    } else {
                        best_dl = best_dl.max(dec_end[i]);
                    }
                } else if below {
                    best_dr = best_dr.max(dec_start[i]);
                } else {
                    best_ir = best_ir.max(inc_start[i]);
                }
            }
            inc += best_il + best_ir;
            dec += best_dl + best_dr;
            if inc < k && dec < l {
                return (Some((pos, class)), count);
            }
        }
        (None, count)
    })
}

// Representative of the open interval holding `class` existing values below it.
fn class_representative(sorted: &[Rational], class: usize) -> Rational {
    match (class.checked_sub(1).and_then(|c| sorted.get(c)), sorted.get(class)) {
        (None, None) => rat(1),
        (None, Some(hi)) => hi / rat(2),
        (Some(lo), None) => lo + rat(1),
        (Some(lo), Some(hi)) => (lo + hi) / rat(2),
    }
}

fn forbidden_run<T: Ord>(a: &[T], k: usize, l: usize) -> Option<Witness> {
    let inc = longest_increasing(a);
    if inc.len() >= k {
        return Some(Witness::Subsequence { increasing: true, positions: inc[..k].to_vec() });
    }
    let dec = longest_decreasing(a);
    if dec.len() >= l {
        return Some(Witness::Subsequence { increasing: false, positions: dec[..l].to_vec() });
    }
    None
}

/// Decides `(k, l)`-(semi)saturation of a sequence by trying one
/// representative value per (insertion position, value interval) class.
pub fn verify(a: &NumberSequence, k: usize, l: usize, mode: Mode) -> VerificationReport {
    if mode == Mode::Sat {
        if let Some(w) = forbidden_run(a.values(), k, l) {
            return VerificationReport::contains_forbidden(w);
        }
    }
    let (free, examined) = free_insertion(&a.ranks(), k, l);
    let mut sorted = a.values().to_vec();
    sorted.sort();
    let witness = free.map(|(position, class)| Witness::Insertion {
        position,
        value: format_rational(&class_representative(&sorted, class)),
    });
    VerificationReport::from_search(mode, witness, examined)
}

/// Same verifier on a monotone point set read as a sequence in x order; the
/// witness is a new point.
pub fn verify_points(p: &PlanarPointSet, k: usize, l: usize, mode: Mode) -> Result<VerificationReport> {
    if p.mode() != PositionMode::Monotone {
        return Err(Error::MalformedInput(format!("expected a monotone point set, got {}", p.mode())));
    }
    let mut pts = p.points().to_vec();
    pts.sort_by(|a, b| a.x.cmp(&b.x));
    let ys: Vec<Rational> = pts.iter().map(|q| q.y.clone()).collect();
    if mode == Mode::Sat {
        if let Some(w) = forbidden_run(&ys, k, l) {
            return Ok(VerificationReport::contains_forbidden(w));
        }
    }
    let seq_ranks = {
        let mut idx: Vec<usize> = (0..ys.len()).collect();
        idx.sort_by(|&a, &b| ys[a].cmp(&ys[b]));
        let mut r = vec![0; ys.len()];
        for (rank, &t) in idx.iter().enumerate() {
            r[t] = rank;
        }
        r
    };
    let (free, examined) = free_insertion(&seq_ranks, k, l);
    let xs: Vec<Rational> = pts.iter().map(|q| q.x.clone()).collect();
    let mut sorted_y = ys.clone();
    sorted_y.sort();
    let witness = free.map(|(position, class)| {
        let x = class_representative_signed(&xs, position);
        let y = class_representative_signed(&sorted_y, class);
        Witness::Sample {
            point: (format_rational(&x), format_rational(&y)),
            signs: Vec::new(),
            x_rank: Some(position),
        }
    });
    Ok(VerificationReport::from_search(mode, witness, examined))
}

// Like `class_representative` but for coordinates of any sign.
fn class_representative_signed(sorted: &[Rational], class: usize) -> Rational {
    match (class.checked_sub(1).and_then(|c| sorted.get(c)), sorted.get(class)) {
        (None, None) => Rational::zero(),
        (None, Some(hi)) => hi - rat(1),
        (Some(lo), None) => lo + rat(1),
        (Some(lo), Some(hi)) => (lo + hi) / rat(2),
    }
}
