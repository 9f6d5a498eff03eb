//! Big-integer counts of matrices, strings and lobster leaf additions.

use super::routes::{fold_line_groups, Adjacency};
use super::TopsnutMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::render_all;
use crate::labelling::Labelling;
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::fmt;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// q!·2^q matrices per labelled graph (edge orders × orientations).
pub fn matrix_count(q: u64) -> BigUint {
    factorial(q) * pow2(q)
}

/// The closed form (3q)!·q!·2^{q−1}.
pub fn tbpaw_count(q: u64) -> BigUint {
    assert!(q >= 1, "needs at least one edge");
    factorial(3 * q) * factorial(q) * pow2(q - 1)
}

/// (matrix, cell permutation) pairs: (3q)!·q!·2^q.
pub fn raw_pair_count(q: u64) -> BigUint {
    factorial(3 * q) * matrix_count(q)
}

/// Σ over fold-line group sizes, each group read in all m! orders, times
/// the q!·2^q matrices.
pub fn fold_line_tbpaw_count(q: usize, adjacency: Adjacency) -> BigUint {
    let groups = fold_line_groups(q, adjacency);
    let sum = groups.iter().enumerate().fold(BigUint::zero(), |acc, (m, g)| acc + g * factorial(m as u64));
    matrix_count(q as u64) * sum
}

/// A product of factorials and a power of two, kept unexpanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCount {
    pub factorials: Vec<u64>,
    pub power_of_two: u64,
}

impl FactoredCount {
    pub fn raw_pairs(q: u64) -> Self {
        FactoredCount { factorials: vec![3 * q, q], power_of_two: q }
    }

    pub fn closed_form(q: u64) -> Self {
        FactoredCount { factorials: vec![3 * q, q], power_of_two: q.saturating_sub(1) }
    }

    pub fn value(&self) -> BigUint {
        self.factorials.iter().fold(pow2(self.power_of_two), |acc, &f| acc * factorial(f))
    }
}

impl fmt::Display for FactoredCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.factorials {
            write!(f, "({k}!)·")?;
        }
        write!(f, "2^{}", self.power_of_two)
    }
}

fn check_nonneg(xs: &[i64]) -> Result<()> {
    if xs.iter().any(|&x| x < 0) {
        Err(Error::NegativeArgument)
    } else {
        Ok(())
    }
}

/// Partitions of m into parts of size at most k.
pub fn partition_count_a(m: i64, k: i64) -> Result<BigUint> {
    check_nonneg(&[m, k])?;
    let (m, k) = (m as usize, k as usize);
    // row j holds A(i, j) for i in 0..=m
    let mut prev: Vec<BigUint> = (0..=m).map(|i| if i == 0 { BigUint::one() } else { BigUint::zero() }).collect();
    for j in 1..=k {
        let mut cur = prev.clone();
        for i in j..=m {
            let add = cur[i - j].clone();
            cur[i] += add;
        }
        prev = cur;
    }
    Ok(prev[m].clone())
}

/// Partitions of m into exactly k positive parts.
pub fn partition_count_p(m: i64, k: i64) -> Result<BigUint> {
    check_nonneg(&[m, k])?;
    if k > m {
        return Ok(BigUint::zero());
    }
    if k == 0 {
        return Ok(if m == 0 { BigUint::one() } else { BigUint::zero() });
    }
    partition_count_a(m - k, k)
}

/// Ways of hanging m new leaves on a p-vertex tree: Σ_{k=1}^{m} P(m,k)·p!.
pub fn leaf_lobster_count(m: i64, p: u64) -> Result<BigUint> {
    check_nonneg(&[m])?;
    let pf = factorial(p);
    (1..=m).try_fold(BigUint::zero(), |acc, k| Ok(acc + partition_count_p(m, k)? * &pf))
}

fn all_matrices(g: &Graph, l: &Labelling) -> Result<Vec<TopsnutMatrix>> {
    let q = g.q();
    let mut out = Vec::new();
    for order in (0..q).permutations(q) {
        for bits in 0..1u32 << q {
            let flip: Vec<bool> = (0..q).map(|i| bits >> i & 1 == 1).collect();
            out.push(TopsnutMatrix::from_graph(g, l, &order, &flip)?);
        }
    }
    Ok(out)
}

/// Distinct matrices over every edge order and orientation.
pub fn distinct_matrix_count(g: &Graph, l: &Labelling) -> Result<usize> {
    Ok(all_matrices(g, l)?.into_iter().collect::<HashSet<_>>().len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCensus {
    pub matrices: usize,
    pub raw_pairs: usize,
    pub distinct_token_sequences: usize,
    pub distinct_strings: usize,
}

/// Reads every matrix of (g, l) along every permutation of its cells.
/// Limited to q ≤ 2: beyond that (3q)! is too large to walk.
pub fn raw_pair_census(g: &Graph, l: &Labelling) -> Result<PairCensus> {
    if g.q() > 2 {
        return Err(Error::DegenerateParameters(format!("census walks (3q)! orders; q={} is too large", g.q())));
    }
    let ms = all_matrices(g, l)?;
    let n = 3 * g.q();
    let mut tokens = HashSet::new();
    let mut strings = HashSet::new();
    let mut raw = 0;
    for m in &ms {
        for perm in (0..n).permutations(n) {
            let t: Vec<_> = perm.iter().map(|&c| m.cell(c).clone()).collect();
            strings.insert(render_all(&t));
            tokens.insert(t);
            raw += 1;
        }
    }
    Ok(PairCensus {
        matrices: ms.len(),
        raw_pairs: raw,
        distinct_token_sequences: tokens.len(),
        distinct_strings: strings.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(tbpaw_count(1), big(6));
        assert_eq!(tbpaw_count(2), big(2880));
        assert_eq!(raw_pair_count(1), big(12));
        assert_eq!(matrix_count(3), big(48));
    }

    #[test]
    fn factored_headline() {
        let f = FactoredCount::raw_pairs(190);
        assert_eq!(f.to_string(), "(570!)·(190!)·2^190");
        assert_eq!(FactoredCount::raw_pairs(2).value(), raw_pair_count(2));
        assert_eq!(FactoredCount::closed_form(2).value(), tbpaw_count(2));
    }

    #[test]
    fn small_partitions() {
        assert_eq!(partition_count_a(4, 2).unwrap(), big(3));
        assert_eq!(partition_count_p(4, 2).unwrap(), big(2));
        for m in 0..20 {
            assert_eq!(partition_count_a(m, 1).unwrap(), big(1));
        }
        assert_eq!(partition_count_a(5, 0).unwrap(), big(0));
        assert_eq!(partition_count_a(0, 0).unwrap(), big(1));
        assert_eq!(partition_count_a(-1, 2), Err(Error::NegativeArgument));
        // p(5) = 7 partitions, times 3!
        assert_eq!(leaf_lobster_count(5, 3).unwrap(), big(42));
    }

    #[test]
    fn path_matrices() {
        let g = generate::path(3);
        let l = Labelling::total(&g, &[0, 2, 1], &[2, 1]);
        assert_eq!(distinct_matrix_count(&g, &l).unwrap(), 8);
    }

    #[test]
    fn k2_census() {
        let g = generate::path(2);
        let l = Labelling::total(&g, &[0, 1], &[1]);
        let c = raw_pair_census(&g, &l).unwrap();
        assert_eq!(c.raw_pairs, 12);
        // both matrices hold the cells 0, 1, 1
        assert_eq!(c.distinct_token_sequences, 3);
    }
}
