use std::collections::BTreeMap;

use super::partition::Partition;
use super::tableau::{bracket_product, Tableau};
use super::TableauError;
use crate::algebra::Poly;

/// A Gelfand-Tsetlin pattern: `rows[r-1]` holds `a_{r,1}, ..., a_{r,r}`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<usize>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<GtPattern, TableauError> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(TableauError::BadPattern);
            }
        }
        for r in 0..rows.len().saturating_sub(1) {
            for j in 0..=r {
                if !(rows[r][j] <= rows[r + 1][j] && rows[r + 1][j] <= rows[r + 1][j + 1]) {
                    return Err(TableauError::BadPattern);
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `a_{rs}`, both 1-based.
    pub fn entry(&self, r: usize, s: usize) -> usize {
        self.rows[r - 1][s - 1]
    }

    /// `lambda^(k)_i = a_{n+1-i, k+1-i}` for `k = 0..n`.
    pub fn flag(&self) -> Vec<Partition> {
        let n = self.n();
        (0..=n)
            .map(|k| Partition::from_parts((1..=k).map(|i| self.entry(n + 1 - i, k + 1 - i)).collect()))
            .collect()
    }

    pub fn from_tableau(t: &Tableau) -> GtPattern {
        let n = t.n();
        let flag = t.flag();
        let rows = (1..=n).map(|r| (1..=r).map(|s| flag[n - r + s].part(n + 1 - r)).collect()).collect();
        GtPattern { rows }
    }

    pub fn to_tableau(&self) -> Tableau {
        Tableau::from_flag(self.n(), &self.flag()).expect("interlacing gives horizontal strips")
    }

    /// `Psi_A`: a value occurring `k` times in `lambda^(m-1)` and `k-1` times in
    /// `lambda^(m)` contributes `1 - Y^k`.
    pub fn psi(&self) -> Poly {
        let flag = self.flag();
        let mut exps = Vec::new();
        for m in 2..flag.len() {
            let count = |p: &Partition| {
                let mut c: BTreeMap<usize, usize> = BTreeMap::new();
                for &x in p.parts() {
                    *c.entry(x).or_default() += 1;
                }
                c
            };
            let (small, big) = (count(&flag[m - 1]), count(&flag[m]));
            for (&v, &k) in &small {
                if big.get(&v).copied().unwrap_or(0) + 1 == k {
                    exps.push(k);
                }
            }
        }
        bracket_product(&exps)
    }

    /// Exponent vector of `x^wt`: `|lambda^(k)| - |lambda^(k-1)|`.
    pub fn weight(&self) -> Vec<usize> {
        let f = self.flag();
        (1..f.len()).map(|k| f[k].size() - f[k - 1].size()).collect()
    }
}

/// All flags `() = lambda^(0) <= ... <= lambda^(n) = lambda` of horizontal strips.
pub fn flags_with_top(lambda: &Partition, n: usize) -> Vec<Vec<Partition>> {
    fn below(top: &Partition, k: usize) -> Vec<Partition> {
        // mu with at most k-1 parts and lambda^(k) - mu a horizontal strip.
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k.saturating_sub(1));
        fn go(i: usize, top: &Partition, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i + 1 == k {
                out.push(Partition::from_parts(cur.clone()));
                return;
            }
            for v in top.part(i + 2)..=top.part(i + 1) {
                cur.push(v);
                go(i + 1, top, k, cur, out);
                cur.pop();
            }
        }
        go(0, top, k, &mut cur, &mut out);
        out
    }
    if lambda.len() > n {
        return Vec::new();
    }
    let mut partial: Vec<Vec<Partition>> = vec![vec![lambda.clone()]];
    for k in (1..=n).rev() {
        partial = partial
            .into_iter()
            .flat_map(|f| {
                below(f.last().unwrap(), k).into_iter().map(move |mu| {
                    let mut g = f.clone();
                    g.push(mu);
                    g
                })
            })
            .collect();
    }
    partial
        .into_iter()
        .map(|mut f| {
            f.reverse();
            f
        })
        .collect()
}

/// All patterns whose flag ends in `lambda`.
pub fn patterns_with_top(lambda: &Partition, n: usize) -> Vec<GtPattern> {
    flags_with_top(lambda, n)
        .iter()
        .map(|f| GtPattern::from_tableau(&Tableau::from_flag(n, f).expect("strips")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn figure_example() {
        let t = Tableau::from_rows(3, &[vec![1, 1, 1, 1, 2, 2, 3, 3], vec![2, 2, 2, 3], vec![3, 3]]).unwrap();
        let a = GtPattern::from_tableau(&t);
        assert_eq!(a.rows(), &[vec![2], vec![3, 4], vec![4, 6, 8]]);
        assert_eq!(a.to_tableau(), t);
    }

    #[test]
    fn psi_examples() {
        let t = Tableau::new(3, &[vec![1, 2], vec![1, 2], vec![1, 3], vec![2], vec![3]]).unwrap();
        assert_eq!(GtPattern::from_tableau(&t).psi(), parse_poly("(1-Y)^3").unwrap());
        let zero = GtPattern::from_tableau(&Tableau::empty(3));
        assert_eq!(zero.rows(), &[vec![0], vec![0, 0], vec![0, 0, 0]]);
        assert_eq!(zero.psi(), Poly::one());
    }

    #[test]
    fn pattern_count() {
        // Number of SSYT of shape (2,1) with entries in [3].
        assert_eq!(patterns_with_top(&Partition::new(&[2, 1]).unwrap(), 3).len(), 8);
    }
}
