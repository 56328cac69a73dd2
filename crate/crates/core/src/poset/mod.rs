//! The tableau order on nonempty subsets of `[n]`, its covers and chains,
//! and a brute-force check of the Bruhat-quotient isomorphism.

mod bruhat;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use bruhat::{bruhat_iso_check, quotient_element, BruhatOrder, SignedPerm};

use crate::tableaux::{elements, full_set, gale_leq, subset_string, subsets_in_order, Subset, Tableau};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("subset is empty or outside [n]")]
    BadElement,
    #[error("the full set is the top element and has no upper cover")]
    TopElement,
    #[error("n = {0} exceeds the bound {1}")]
    TooLarge(usize, usize),
}

fn check(n: usize, c: Subset) -> Result<(), PosetError> {
    if c == 0 || c & !full_set(n) != 0 {
        Err(PosetError::BadElement)
    } else {
        Ok(())
    }
}

/// `A` below-or-equal `B` in the tableau order.
pub fn leq(n: usize, a: Subset, b: Subset) -> Result<bool, PosetError> {
    check(n, a)?;
    check(n, b)?;
    Ok(gale_leq(a, b))
}

/// Maximal runs `[a, b]` of consecutive elements.
pub fn intervals(c: Subset) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for x in elements(c) {
        match out.last_mut() {
            Some(last) if last.1 + 1 == x => last.1 = x,
            _ => out.push((x, x)),
        }
    }
    out
}

/// Upper covers: one elevation per maximal run.
pub fn covers(n: usize, c: Subset) -> Result<Vec<Subset>, PosetError> {
    check(n, c)?;
    if c == 1 << (n - 1) {
        return Err(PosetError::TopElement);
    }
    let mut out: Vec<Subset> = intervals(c)
        .into_iter()
        .map(|(_, b)| (c & !(1 << (b - 1)) | (1 << b)) & full_set(n))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Hasse edges `(lower, upper)` computed from the order relation alone.
pub fn hasse_edges(n: usize) -> Vec<(Subset, Subset)> {
    let all = subsets_in_order(n);
    let mut out = Vec::new();
    for &a in &all {
        for &b in &all {
            if a == b || !gale_leq(a, b) {
                continue;
            }
            let between = all.iter().any(|&c| c != a && c != b && gale_leq(a, c) && gale_leq(c, b));
            if !between {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn hasse_dot(n: usize) -> String {
    let mut s = format!("digraph T{} {{\n", n);
    for (a, b) in hasse_edges(n) {
        s.push_str(&format!("  \"{}\" -> \"{}\";\n", subset_string(a), subset_string(b)));
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCensus {
    pub n: usize,
    pub rank: usize,
    pub graded: bool,
    pub maximal_chains: BigInt,
    /// `by_length[k]` counts chains with `k` elements, including the empty chain.
    pub by_length: Vec<BigInt>,
}

/// Chain statistics by dynamic programming over a linear extension.
pub fn chain_census(n: usize, bound: usize) -> Result<ChainCensus, PosetError> {
    if n > bound {
        return Err(PosetError::TooLarge(n, bound));
    }
    let order = subsets_in_order(n);
    let m = order.len();
    let below: Vec<Vec<usize>> =
        (0..m).map(|j| (0..j).filter(|&i| gale_leq(order[i], order[j])).collect()).collect();
    // Chains ending at each element, by number of elements.
    let mut ending: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    // Saturated chains from the bottom: longest, shortest, count.
    let mut longest = vec![0usize; m];
    let mut shortest = vec![0usize; m];
    let mut count = vec![BigInt::zero(); m];
    for j in 0..m {
        let mut row = vec![BigInt::zero(), BigInt::one()];
        for &i in &below[j] {
            for (k, c) in ending[i].iter().enumerate() {
                if row.len() <= k + 1 {
                    row.resize(k + 2, BigInt::zero());
                }
                row[k + 1] += c;
            }
        }
        ending.push(row);
        let lower_covers: Vec<usize> = below[j]
            .iter()
            .copied()
            .filter(|&i| !below[j].iter().any(|&k| k != i && gale_leq(order[i], order[k])))
            .collect();
        if lower_covers.is_empty() {
            count[j] = BigInt::one();
        } else {
            longest[j] = lower_covers.iter().map(|&i| longest[i] + 1).max().unwrap();
            shortest[j] = lower_covers.iter().map(|&i| shortest[i] + 1).min().unwrap();
            count[j] = lower_covers.iter().map(|&i| count[i].clone()).sum();
        }
    }
    let mut by_length = vec![BigInt::one()];
    for row in &ending {
        for (k, c) in row.iter().enumerate() {
            if by_length.len() <= k {
                by_length.resize(k + 1, BigInt::zero());
            }
            by_length[k] += c;
        }
    }
    let top = m - 1;
    debug_assert_eq!(order[top], 1 << (n - 1));
    let minimal = (0..m).filter(|&j| below[j].is_empty()).count();
    let maximal = (0..m).filter(|&i| !(0..m).any(|j| j != i && gale_leq(order[i], order[j]))).count();
    Ok(ChainCensus {
        n,
        rank: longest[top],
        graded: minimal == 1 && maximal == 1 && longest[top] == shortest[top],
        maximal_chains: count[top].clone(),
        by_length,
    })
}

/// Number of maximal chains predicted by the staircase hook-type formula
/// `binom(n+1,2)! prod_{a<n} a! / prod_{b<=n} (2b-1)!`.
pub fn thrall_count(n: usize) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i));
    let mut num = fact(n * (n + 1) / 2);
    for a in 1..n {
        num *= fact(a);
    }
    let den = (1..=n).fold(BigInt::one(), |acc, b| acc * fact(2 * b - 1));
    num / den
}

/// Whether the columns of a reduced tableau form a maximal chain of `T_n`.
pub fn is_maximal_chain(t: &Tableau) -> bool {
    let n = t.n();
    let cols = t.columns();
    if !t.is_reduced() || cols.first() != Some(&full_set(n)) || cols.last() != Some(&(1 << (n - 1))) {
        return false;
    }
    cols.windows(2).all(|w| covers(n, w[0]).map(|c| c.contains(&w[1])).unwrap_or(false))
}

/// The parts `lambda^(i)_j`, `j <= i`, of the flag are exactly `1..=binom(n+1,2)`.
pub fn flag_parts_cover(t: &Tableau) -> bool {
    let n = t.n();
    let r = n * (n + 1) / 2;
    let flag = t.flag();
    let mut seen: Vec<usize> = (1..=n).flat_map(|i| (1..=i).map(|j| flag[i].part(j)).collect::<Vec<_>>()).collect();
    seen.sort_unstable();
    seen.dedup();
    seen == (1..=r).collect::<Vec<_>>()
}
