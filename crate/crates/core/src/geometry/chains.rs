use super::predicates::OrientTable;

/// Longest cups (`turn = 1`) or caps (`turn = -1`) over points listed in
/// increasing x order. `end[a][b]` is the longest chain whose last two points
/// are positions `a < b`; `start[a][b]` the longest whose first two are.
pub(crate) struct ChainDp {
    n: usize,
    end: Vec<u16>,
    start: Vec<u16>,
    parent: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl ChainDp {
    pub(crate) fn new(t: &OrientTable, order: &[usize], turn: i8) -> Self {
        let n = order.len();
        let mut end = vec![0u16; n * n];
        let mut start = vec![0u16; n * n];
        let mut parent = vec![NONE; n * n];
        for b in 0..n {
            for c in b + 1..n {
                let mut best = 2;
                let mut arg = NONE;
                for a in 0..b {
                    let prev = end[a * n + b];
                    if prev + 1 > best && t.get(order[a], order[b], order[c]) == turn {
                        best = prev + 1;
                        arg = a as u32;
                    }
                }
                end[b * n + c] = best;
                parent[b * n + c] = arg;
            }
        }
        for b in (0..n).rev() {
            for a in (0..b).rev() {
                let mut best = 2;
                for c in b + 1..n {
                    let next = start[b * n + c];
                    if next + 1 > best && t.get(order[a], order[b], order[c]) == turn {
                        best = next + 1;
                    }
                }
                start[a * n + b] = best;
            }
        }
        Self { n, end, start, parent }
    }

    /// Positions (in `order`) of one longest chain.
    pub(crate) fn longest(&self) -> Vec<usize> {
        let n = self.n;
        if n < 2 {
            return (0..n).collect();
        }
        let mut best = (0u16, 0, 0);
        for b in 0..n {
            for c in b + 1..n {
                if self.end[b * n + c] > best.0 {
                    best = (self.end[b * n + c], b, c);
                }
            }
        }
        let (_, mut b, mut c) = best;
        let mut out = vec![c, b];
        while self.parent[b * n + c] != NONE {
            let a = self.parent[b * n + c] as usize;
            out.push(a);
            c = b;
            b = a;
        }
        out.reverse();
        out
    }

    /// Length of the longest chain containing position `p`.
    pub(crate) fn longest_through(&self, t: &OrientTable, order: &[usize], p: usize, turn: i8) -> usize {
        let n = self.n;
        let mut best = 1u16;
        for a in 0..p {
            best = best.max(self.end[a * n + p]);
        }
        for c in p + 1..n {
            best = best.max(self.start[p * n + c]);
        }
        for a in 0..p {
            let left = self.end[a * n + p];
            for c in p + 1..n {
                if t.get(order[a], order[p], order[c]) == turn {
                    best = best.max(left + self.start[p * n + c] - 1);
                }
            }
        }
        best as usize
    }
}

/// Largest convex polygon among the table's points having `p` as a vertex.
///
/// Every such polygon, listed counterclockwise from `p`, starts with some
/// `q` and continues through points left of the ray `p -> q` in angular
/// order, turning left at every vertex including the closing turn into `p`.
pub(crate) fn max_convex_through(t: &OrientTable, p: usize) -> usize {
    let n = t.len();
    let others: Vec<usize> = (0..n).filter(|&v| v != p).collect();
    match others.len() {
        0 => return 1,
        1 => return 2,
        _ => {}
    }
    let mut best = 3;
    for &q in &others {
        let mut cand: Vec<usize> = others.iter().copied().filter(|&r| r != q && t.get(p, q, r) > 0).collect();
        if cand.is_empty() {
            continue;
        }
        cand.sort_by(|&a, &b| 0.cmp(&t.get(p, a, b)));
        // chain q, cand...; f[i][j]: polygon p, q, ..., cand[i], cand[j] so far
        let m = cand.len();
        let mut f = vec![0usize; m * m];
        for j in 0..m {
            for k in j + 1..m {
                let mut v = 0;
                if t.get(q, cand[j], cand[k]) > 0 {
                    v = 4;
                }
                for i in 0..j {
                    let prev = f[i * m + j];
                    if prev > 0 && prev + 1 > v && t.get(cand[i], cand[j], cand[k]) > 0 {
                        v = prev + 1;
                    }
                }
                f[j * m + k] = v;
                if v > best && t.get(cand[j], cand[k], p) > 0 {
                    best = v;
                }
            }
        }
    }
    best
}
