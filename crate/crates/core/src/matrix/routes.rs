//! Orders in which the 3q cells of a matrix are read.
//!
//! Cells are numbered `row*q + col` with rows X=0, W=1, Y=2.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Which lattice neighbours a fold-line may step to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adjacency {
    /// Horizontal and vertical unit steps.
    Orthogonal,
    /// Diagonal unit steps as well.
    King,
}

impl Adjacency {
    fn adjacent(self, q: usize, a: usize, b: usize) -> bool {
        let (ra, ca) = ((a / q) as i64, (a % q) as i64);
        let (rb, cb) = ((b / q) as i64, (b % q) as i64);
        let (dr, dc) = ((ra - rb).abs(), (ca - cb).abs());
        match self {
            Adjacency::Orthogonal => dr + dc == 1,
            Adjacency::King => dr.max(dc) == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Route {
    /// 1: snake X forward, W backward, Y forward.
    /// 3: column snake, odd columns x e y and even ones y e x.
    /// 5: the zigzag through pairs of columns.
    /// 2, 4, 6: the same on the column-reversed matrix.
    Met(u8),
    /// x1…xq e1…eq y1…yq
    RowMajor,
    /// x1 e1 y1 x2 e2 y2 …
    ColumnMajor,
    /// Cell indices in visit order.
    Permutation(Vec<usize>),
    /// Disjoint fold-lines read one after another.
    FoldLines { lines: Vec<Vec<usize>>, adjacency: Adjacency },
    /// The token order of the inner route, reversed.
    Reciprocal(Box<Route>),
}

fn cell(row: usize, col: usize, q: usize) -> usize {
    row * q + col
}

fn met1(q: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..q).map(|c| cell(0, c, q)).collect();
    out.extend((0..q).rev().map(|c| cell(1, c, q)));
    out.extend((0..q).map(|c| cell(2, c, q)));
    out
}

fn met3(q: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(3 * q);
    for c in 0..q {
        let rows = if c % 2 == 0 { [0, 1, 2] } else { [2, 1, 0] };
        out.extend(rows.iter().map(|&r| cell(r, c, q)));
    }
    out
}

fn met5(q: usize) -> Vec<usize> {
    // 1-based column indices below
    let mut out = Vec::with_capacity(3 * q);
    let mut used = vec![false; 3 * q];
    let mut take = |row: usize, col: usize, out: &mut Vec<usize>| {
        if col >= 1 && col <= q {
            let c = cell(row, col - 1, q);
            if !used[c] {
                used[c] = true;
                out.push(c);
            }
        }
    };
    for (r, c) in [(2, 2), (2, 1), (1, 1), (0, 1)] {
        take(r, c, &mut out);
    }
    let mut j = 1;
    while 2 * j + 2 <= q {
        for (r, c) in [(1, 2 * j), (2, 2 * j + 1), (2, 2 * j + 2), (1, 2 * j + 1), (0, 2 * j), (0, 2 * j + 1)] {
            take(r, c, &mut out);
        }
        j += 1;
    }
    for r in 0..3 {
        for c in 1..=q {
            take(r, c, &mut out);
        }
    }
    out
}

fn mirror_columns(cells: Vec<usize>, q: usize) -> Vec<usize> {
    cells.into_iter().map(|c| cell(c / q, q - 1 - c % q, q)).collect()
}

fn is_permutation(cells: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    cells.len() == n && cells.iter().all(|&c| c < n && !std::mem::replace(&mut seen[c], true))
}

/// Consecutive cells are lattice neighbours and no cell repeats.
pub fn is_fold_line(q: usize, adjacency: Adjacency, cells: &[usize]) -> bool {
    let mut seen = vec![false; 3 * q];
    cells.iter().all(|&c| c < 3 * q && !std::mem::replace(&mut seen[c], true))
        && cells.windows(2).all(|w| adjacency.adjacent(q, w[0], w[1]))
}

impl Route {
    pub fn reciprocal(self) -> Route {
        match self {
            Route::Reciprocal(inner) => *inner,
            r => Route::Reciprocal(Box::new(r)),
        }
    }

    /// The visit order for a q-column matrix.
    pub fn cells(&self, q: usize) -> Result<Vec<usize>> {
        let cells = match self {
            Route::Met(1) => met1(q),
            Route::Met(3) => met3(q),
            Route::Met(5) => met5(q),
            Route::Met(k @ (2 | 4 | 6)) => mirror_columns(Route::Met(k - 1).cells(q)?, q),
            Route::Met(k) => return Err(Error::IndexOutOfRange(*k as i64)),
            Route::RowMajor => (0..3 * q).collect(),
            Route::ColumnMajor => (0..q).flat_map(|c| (0..3).map(move |r| cell(r, c, q))).collect(),
            Route::Permutation(p) => p.clone(),
            Route::FoldLines { lines, adjacency } => {
                if !lines.iter().all(|l| is_fold_line(q, *adjacency, l)) {
                    return Err(Error::RouteSizeMismatch(q));
                }
                lines.concat()
            }
            Route::Reciprocal(inner) => {
                let mut c = inner.cells(q)?;
                c.reverse();
                c
            }
        };
        if !is_permutation(&cells, 3 * q) {
            return Err(Error::RouteSizeMismatch(q));
        }
        Ok(cells)
    }

    /// `met1`…`met6`, `row`, `column`, a comma list of cell indices, or any
    /// of these prefixed with `rev-`.
    pub fn parse(s: &str) -> Result<Route> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("rev-") {
            return Ok(Route::parse(rest)?.reciprocal());
        }
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "row" => return Ok(Route::RowMajor),
            "column" => return Ok(Route::ColumnMajor),
            _ => {}
        }
        if let Some(k) = lower.strip_prefix("met").and_then(|k| k.parse::<u8>().ok()) {
            if (1..=6).contains(&k) {
                return Ok(Route::Met(k));
            }
        }
        let cells: Option<Vec<usize>> = s.split(',').map(|t| t.trim().parse().ok()).collect();
        match cells {
            Some(c) if !c.is_empty() => Ok(Route::Permutation(c)),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown route {s}") }),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |c: &[usize]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Route::Met(k) => write!(f, "met{k}"),
            Route::RowMajor => f.write_str("row"),
            Route::ColumnMajor => f.write_str("column"),
            Route::Permutation(p) => f.write_str(&join(p)),
            Route::FoldLines { lines, .. } => {
                write!(f, "fold[{}]", lines.iter().map(|l| join(l)).collect::<Vec<_>>().join(" | "))
            }
            Route::Reciprocal(inner) => write!(f, "rev-{inner}"),
        }
    }
}

/// Every directed path that visits all 3q cells once, in lexicographic
/// order. Exponential; meant for q ≤ 3.
pub fn fold_line_census(q: usize, adjacency: Adjacency) -> Vec<Vec<usize>> {
    let n = 3 * q;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(q: usize, adj: Adjacency, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if path.len() == used.len() {
            out.push(path.clone());
            return;
        }
        let last = *path.last().expect("seeded");
        for c in 0..used.len() {
            if !used[c] && adj.adjacent(q, last, c) {
                used[c] = true;
                path.push(c);
                go(q, adj, path, used, out);
                path.pop();
                used[c] = false;
            }
        }
    }
    for start in 0..n {
        used[start] = true;
        path.push(start);
        go(q, adjacency, &mut path, &mut used, &mut out);
        path.pop();
        used[start] = false;
    }
    out
}

/// Entry m is the number of unordered groups of m directed fold-lines, each
/// of at least two cells, that together cover the 3q cells exactly once.
/// Ordered sequences are counted by a subset DP and then divided by m!.
pub fn fold_line_groups(q: usize, adjacency: Adjacency) -> Vec<BigUint> {
    let n = 3 * q;
    assert!(n <= 24, "fold-line DP is limited to 8 columns");
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let max_lines = n / 2;
    // state: (covered cells, current end, current line has ≥ 2 cells) → counts by lines started
    type Key = (u32, usize, bool);
    let mut memo: HashMap<Key, Vec<BigUint>> = HashMap::new();
    fn count(
        key: Key,
        q: usize,
        full: u32,
        max_lines: usize,
        adj: Adjacency,
        memo: &mut HashMap<Key, Vec<BigUint>>,
    ) -> Vec<BigUint> {
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let (mask, last, long) = key;
        let mut out = vec![BigUint::zero(); max_lines + 1];
        if mask == full {
            if long {
                out[0] = BigUint::one();
            }
        } else {
            for c in 0..3 * q {
                if mask & (1 << c) != 0 {
                    continue;
                }
                if adj.adjacent(q, last, c) {
                    let sub = count((mask | 1 << c, c, true), q, full, max_lines, adj, memo);
                    for (o, s) in out.iter_mut().zip(&sub) {
                        *o += s;
                    }
                }
                if long {
                    let sub = count((mask | 1 << c, c, false), q, full, max_lines, adj, memo);
                    for m in 0..max_lines {
                        out[m + 1] += &sub[m];
                    }
                }
            }
        }
        memo.insert(key, out.clone());
        out
    }
    // index m: lines counted including the first
    let mut ordered = vec![BigUint::zero(); max_lines + 1];
    for start in 0..n {
        let sub = count((1 << start, start, false), q, full, max_lines, adjacency, &mut memo);
        for m in 0..max_lines {
            ordered[m + 1] += &sub[m];
        }
    }
    let mut fact = BigUint::one();
    for (m, v) in ordered.iter_mut().enumerate().skip(1) {
        fact *= BigUint::from(m);
        *v /= &fact;
    }
    ordered
}
