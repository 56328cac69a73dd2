//! Brute-force enumeration of finite-index sublattices of `Z_p^n`, with
//! elementary-divisor types, flags of partitions and Hermite compositions.
//!
//! A sublattice of index `p^k` in `Z_p^n` is the closure of a sublattice of
//! `Z^n` containing `p^k Z^n`, so all normal forms are computed over the
//! integers without truncation. Every elementary divisor is a power of `p`.

mod census;
mod ext;

pub use census::{
    census, census_with, f_in, f_pr, verify_fnt, verify_series_coefficients, Census, CensusKey, CheckReport, GroupBy, Target,
};
pub use ext::{count_extensions, extension_counts, verify_extensions, ExtensionKind};

use serde::Serialize;

use crate::tableaux::{Partition, Tableau};

pub const LATTICE_BUDGET: u128 = 10_000_000;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix is not in Hermite normal form: {0}")]
    NotHnf(String),
    #[error("generators do not span a lattice of full rank")]
    NotFullRank,
    #[error("enumeration would visit {0} lattices, above the budget of {1}")]
    Budget(u128, u128),
    #[error("flag of partitions is not a chain of horizontal strips")]
    BadFlag,
    #[error("series construction failed: {0}")]
    Series(String),
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn check_prime(p: u64) -> Result<(), OracleError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(OracleError::NotPrime(p))
    }
}

/// Upper-triangular Hermite normal form; rows generate the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HnfLattice {
    p: u64,
    rows: Vec<Vec<i64>>,
}

impl HnfLattice {
    pub fn new(p: u64, rows: Vec<Vec<i64>>) -> Result<HnfLattice, OracleError> {
        check_prime(p)?;
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(OracleError::NotHnf("matrix is not square".into()));
            }
            if r[..i].iter().any(|&x| x != 0) {
                return Err(OracleError::NotHnf(format!("row {} has entries below the diagonal", i + 1)));
            }
            if valuation_exact(r[i] as i128, p).is_none() {
                return Err(OracleError::NotHnf(format!("diagonal entry {} is not a power of {p}", r[i])));
            }
        }
        for j in 0..n {
            for i in 0..j {
                if rows[i][j] < 0 || rows[i][j] >= rows[j][j] {
                    return Err(OracleError::NotHnf(format!("entry ({}, {}) is not reduced", i + 1, j + 1)));
                }
            }
        }
        Ok(HnfLattice { p, rows })
    }

    pub fn identity(n: usize, p: u64) -> HnfLattice {
        let rows = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        HnfLattice { p, rows }
    }

    /// The lattice spanned by integer generators (and, implicitly, by `p^k Z^n` for large `k`).
    pub fn from_generators(p: u64, n: usize, gens: &[Vec<i128>]) -> Result<HnfLattice, OracleError> {
        check_prime(p)?;
        let m = hnf(gens.to_vec(), n)?;
        if m.iter().enumerate().any(|(i, r)| valuation_exact(r[i], p).is_none()) {
            return Err(OracleError::NotHnf("index is not a power of p".into()));
        }
        Ok(HnfLattice { p, rows: m.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect() })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn wide(&self) -> Vec<Vec<i128>> {
        self.rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
    }

    /// Hermite composition: valuations of the diagonal.
    pub fn delta(&self) -> Vec<usize> {
        (0..self.n()).map(|i| valuation(self.rows[i][i] as i128, self.p)).collect()
    }

    pub fn index_exponent(&self) -> usize {
        self.delta().iter().sum()
    }

    pub fn smith_type(&self) -> Partition {
        smith_type(&self.wide(), self.p)
    }

    /// `L ∩ V_i` with `V_i` spanned by the last `i` basis vectors: the
    /// bottom-right `i x i` block of the normal form.
    pub fn intersection(&self, i: usize) -> HnfLattice {
        let k = self.n() - i;
        let rows = self.rows[k..].iter().map(|r| r[k..].to_vec()).collect();
        HnfLattice { p: self.p, rows }
    }

    /// Image under projection onto the first `i` coordinates.
    pub fn projection(&self, i: usize) -> HnfLattice {
        let rows = self.rows[..i].iter().map(|r| r[..i].to_vec()).collect();
        HnfLattice { p: self.p, rows }
    }

    /// `lambda^(0), ..., lambda^(n)`: types of `V_i / (L ∩ V_i)`.
    pub fn intersection_flag(&self) -> Vec<Partition> {
        (0..=self.n()).map(|i| self.intersection(i).smith_type()).collect()
    }

    /// `lambda_(0), ..., lambda_(n)`: types of the images in the first `i` coordinates.
    pub fn projection_flag(&self) -> Vec<Partition> {
        let w = self.wide();
        (0..=self.n())
            .map(|i| smith_type(&w.iter().map(|r| r[..i].to_vec()).collect::<Vec<_>>(), self.p))
            .collect()
    }

    pub fn record(&self) -> Result<LatticeRecord, OracleError> {
        LatticeRecord::new(self.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeRecord {
    pub source: HnfLattice,
    pub smith_type: Partition,
    pub intersection_flag: Vec<Partition>,
    pub projection_flag: Vec<Partition>,
    pub intersection_tableau: Tableau,
    pub projection_tableau: Tableau,
    pub delta: Vec<usize>,
}

impl LatticeRecord {
    pub fn new(source: HnfLattice) -> Result<LatticeRecord, OracleError> {
        let n = source.n();
        let intersection_flag = source.intersection_flag();
        let projection_flag = source.projection_flag();
        let intersection_tableau = Tableau::from_flag(n, &intersection_flag).map_err(|_| OracleError::BadFlag)?;
        let projection_tableau = Tableau::from_flag(n, &projection_flag).map_err(|_| OracleError::BadFlag)?;
        Ok(LatticeRecord {
            smith_type: source.smith_type(),
            delta: source.delta(),
            source,
            intersection_flag,
            projection_flag,
            intersection_tableau,
            projection_tableau,
        })
    }

    /// Both flags end in the Smith type, and the Hermite composition has the right size.
    pub fn invariants_hold(&self) -> bool {
        let n = self.source.n();
        self.intersection_flag[n] == self.smith_type
            && self.projection_flag[n] == self.smith_type
            && self.delta.iter().sum::<usize>() == self.smith_type.size()
    }
}

fn valuation(x: i128, p: u64) -> usize {
    assert!(x != 0, "valuation of zero");
    let (mut x, p) = (x.abs(), p as i128);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// `Some(k)` if `x = p^k`.
fn valuation_exact(x: i128, p: u64) -> Option<usize> {
    if x <= 0 {
        return None;
    }
    let v = valuation(x, p);
    (x == (p as i128).pow(v as u32)).then_some(v)
}

/// Row-style Hermite normal form of a full-rank lattice in `Z^n`.
fn hnf(mut rows: Vec<Vec<i128>>, n: usize) -> Result<Vec<Vec<i128>>, OracleError> {
    let mut out: Vec<Vec<i128>> = Vec::with_capacity(n);
    for j in 0..n {
        rows.retain(|r| r.iter().any(|&x| x != 0));
        loop {
            let piv = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[j] != 0)
                .min_by_key(|(_, r)| r[j].abs())
                .map(|(k, _)| k)
                .ok_or(OracleError::NotFullRank)?;
            let pr = rows[piv].clone();
            let mut done = true;
            for (k, r) in rows.iter_mut().enumerate() {
                if k != piv && r[j] != 0 {
                    let f = r[j].div_euclid(pr[j]);
                    for (x, y) in r.iter_mut().zip(&pr) {
                        *x -= f * y;
                    }
                    done &= r[j] == 0;
                }
            }
            if done {
                let mut r = rows.swap_remove(piv);
                if r[j] < 0 {
                    r.iter_mut().for_each(|x| *x = -*x);
                }
                out.push(r);
                break;
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            let f = out[i][j].div_euclid(out[j][j]);
            if f != 0 {
                let rj = out[j].clone();
                for (x, y) in out[i].iter_mut().zip(&rj) {
                    *x -= f * y;
                }
            }
        }
    }
    Ok(out)
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .filter(|&c| m[0][c] != 0)
            .map(|c| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect()).collect()
}

/// Elementary-divisor type of the lattice spanned by the rows of a matrix of
/// full column rank, via determinantal divisors.
pub fn smith_type(rows: &[Vec<i128>], p: u64) -> Partition {
    let c = rows.first().map_or(0, |r| r.len());
    let mut prev = 0;
    let mut parts = Vec::with_capacity(c);
    for k in 1..=c {
        let mut best: Option<usize> = None;
        for rs in subsets_of_size(rows.len(), k) {
            for cs in subsets_of_size(c, k) {
                let m: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&j| rows[r][j]).collect()).collect();
                let d = det(&m);
                if d != 0 {
                    let v = valuation(d, p);
                    best = Some(best.map_or(v, |b| b.min(v)));
                }
            }
        }
        let v = best.expect("matrix has full column rank");
        parts.push(v - prev);
        prev = v;
    }
    Partition::from_parts(parts)
}

/// Diagonal exponent vectors `(a_1..a_n)` with `sum a_i <= bound`.
pub fn cells(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

pub fn cell_size(p: u64, cell: &[usize]) -> u128 {
    cell.iter().enumerate().map(|(j, &a)| (p as u128).pow((a * j) as u32)).product()
}

/// Number of sublattices of index at most `p^bound`, without enumerating them.
pub fn lattice_count(n: usize, p: u64, bound: usize) -> u128 {
    cells(n, bound).iter().map(|c| cell_size(p, c)).sum()
}

fn check_budget(n: usize, p: u64, bound: usize) -> Result<(), OracleError> {
    check_prime(p)?;
    // p^(bound * n) bounds the size of the largest cell; avoid overflow first.
    if (bound * n) as f64 * (p as f64).log2() > 100.0 {
        return Err(OracleError::Budget(u128::MAX, LATTICE_BUDGET));
    }
    let total = lattice_count(n, p, bound);
    if total > LATTICE_BUDGET {
        return Err(OracleError::Budget(total, LATTICE_BUDGET));
    }
    Ok(())
}

/// All lattices with the given diagonal exponents.
pub fn lattices_in_cell(p: u64, cell: &[usize]) -> impl Iterator<Item = HnfLattice> + '_ {
    let n = cell.len();
    let diag: Vec<i64> = cell.iter().map(|&a| (p as i64).pow(a as u32)).collect();
    // Free entries (i, j), i < j, each ranging over 0..diag[j].
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = cell_size(p, cell);
    (0..total).map(move |mut code| {
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            rows[i][i] = diag[i];
        }
        for &(i, j) in &slots {
            let m = diag[j] as u128;
            rows[i][j] = (code % m) as i64;
            code /= m;
        }
        HnfLattice { p, rows }
    })
}

/// Every sublattice of `Z_p^n` of index at most `p^bound`, each exactly once.
pub fn enumerate_sublattices(n: usize, p: u64, bound: usize) -> Result<Vec<HnfLattice>, OracleError> {
    check_budget(n, p, bound)?;
    Ok(cells(n, bound).iter().flat_map(|c| lattices_in_cell(p, c).collect::<Vec<_>>()).collect())
}

/// Coefficients of `prod_{i<n} 1/(1 - p^i t)` up to `t^bound`.
pub fn zeta_coefficients(n: usize, p: u64, bound: usize) -> Vec<u128> {
    let mut c = vec![0u128; bound + 1];
    c[0] = 1;
    for i in 0..n {
        let r = (p as u128).pow(i as u32);
        for k in 1..=bound {
            c[k] += r * c[k - 1];
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn small_counts() {
        let at_two = enumerate_sublattices(2, 2, 1).unwrap().into_iter().filter(|l| l.index_exponent() == 1).count();
        assert_eq!(at_two, 3);
        let exact4 = enumerate_sublattices(2, 2, 2).unwrap().into_iter().filter(|l| l.index_exponent() == 2).count();
        assert_eq!(exact4, 7);
        assert_eq!(enumerate_sublattices(1, 5, 6).unwrap().len(), 7);
        assert!(matches!(enumerate_sublattices(4, 3, 12), Err(OracleError::Budget(..))));
        assert!(matches!(enumerate_sublattices(2, 4, 1), Err(OracleError::NotPrime(4))));
    }

    #[test]
    fn smith_types() {
        let l = HnfLattice::new(3, vec![vec![9, 0], vec![0, 3]]).unwrap();
        assert_eq!(l.smith_type(), part(&[2, 1]));
        assert_eq!(HnfLattice::new(2, vec![vec![2, 1], vec![0, 2]]).unwrap().smith_type(), part(&[2]));
        assert_eq!(HnfLattice::identity(3, 2).smith_type(), Partition::empty());
    }

    #[test]
    fn flags() {
        let m = HnfLattice::new(2, vec![vec![4, 4, 1], vec![0, 8, 4], vec![0, 0, 8]]).unwrap();
        let want = vec![part(&[]), part(&[3]), part(&[4, 2]), part(&[5, 3])];
        assert_eq!(m.intersection_flag(), want);
        let d = HnfLattice::new(3, vec![vec![3, 0, 0], vec![0, 27, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(d.intersection_flag(), vec![part(&[]), part(&[]), part(&[3]), part(&[3, 1])]);
        assert_eq!(d.projection_flag(), vec![part(&[]), part(&[1]), part(&[3, 1]), part(&[3, 1])]);
        let id = HnfLattice::identity(3, 2);
        assert!(id.intersection_flag().iter().chain(&id.projection_flag()).all(|l| l.is_empty()));
    }

    #[test]
    fn projection_flag_witness() {
        let want = vec![part(&[]), part(&[3]), part(&[4, 2]), part(&[5, 3])];
        let w = HnfLattice::new(2, vec![vec![8, 4, 1], vec![0, 8, 0], vec![0, 0, 4]]).unwrap();
        assert_eq!(w.projection_flag(), want);
        // v(b12 b23 - 8 b13) = 3 fails here, and so does the flag.
        let bad = HnfLattice::new(2, vec![vec![8, 4, 1], vec![0, 8, 2], vec![0, 0, 4]]).unwrap();
        assert_ne!(bad.projection_flag(), want);
    }

    #[test]
    fn hnf_roundtrip() {
        let l = HnfLattice::new(3, vec![vec![3, 2, 5], vec![0, 9, 4], vec![0, 0, 27]]).unwrap();
        let mixed = vec![vec![3, 11, 9], vec![0, 9, 4], vec![3, 2, 32], vec![0, 0, 27]];
        assert_eq!(HnfLattice::from_generators(3, 3, &mixed).unwrap(), l);
    }

    #[test]
    fn counts_match_zeta() {
        for (n, p) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let mut by_index = vec![0u128; 6];
            for l in enumerate_sublattices(n, p, 5).unwrap() {
                by_index[l.index_exponent()] += 1;
            }
            assert_eq!(by_index, zeta_coefficients(n, p, 5), "n = {n}, p = {p}");
        }
    }
}
