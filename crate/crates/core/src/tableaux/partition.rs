use std::fmt;

use serde::{Deserialize, Serialize};

use super::TableauError;
use crate::algebra::{Monomial, Poly, Var};

/// A partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Partition, TableauError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotAPartition(parts.to_vec()));
        }
        Ok(Partition::from_sorted(parts.to_vec()))
    }

    /// Sort a multiset of parts into a partition.
    pub fn from_parts(mut parts: Vec<usize>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    fn from_sorted(mut parts: Vec<usize>) -> Partition {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.first();
        Partition((1..=w).map(|a| self.0.iter().filter(|&&p| p >= a).count()).collect())
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.len())).map(|i| self.part(i)).collect()
    }

    /// The increment vector `(l1 - l2, ..., l_{n-1} - l_n, l_n)`.
    pub fn inc(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.part(i) - self.part(i + 1) * usize::from(i < n)).collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Whether `self - mu` is a horizontal strip.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        if !self.contains(mu) {
            return false;
        }
        let (lc, mc) = (self.conjugate(), mu.conjugate());
        (1..=self.first()).all(|a| lc.part(a) - mc.part(a) <= 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A pair `(lambda, mu)` in `P_n x P_{n-1}` with `lambda - mu` a horizontal strip.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StripPair {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StripGeometry {
    /// Corner cells `(row, column)`.
    pub corners: Vec<(usize, usize)>,
    pub i_set: Vec<usize>,
    pub j_set: Vec<usize>,
    pub nu: Partition,
    pub gamma: Partition,
    pub gap: usize,
}

impl StripPair {
    pub fn new(n: usize, lambda: Partition, mu: Partition) -> Result<StripPair, TableauError> {
        if n == 0 || lambda.len() > n || mu.len() > n - 1 {
            return Err(TableauError::NotAHostPair);
        }
        if !lambda.is_horizontal_strip_over(&mu) {
            return Err(TableauError::NotAHostPair);
        }
        Ok(StripPair { n, lambda, mu })
    }

    /// `inc_a(mu') = mu'_a - mu'_{a+1}`.
    pub fn mu_conj_inc(&self, a: usize) -> usize {
        let mc = self.mu.conjugate();
        mc.part(a) - mc.part(a + 1)
    }

    pub fn geometry(&self) -> StripGeometry {
        let (lc, mc) = (self.lambda.conjugate(), self.mu.conjugate());
        let mut corners: Vec<(usize, usize)> = (1..=self.lambda.first())
            .filter(|&a| mc.part(a) == lc.part(a) && mc.part(a + 1) < lc.part(a + 1))
            .map(|a| (mc.part(a), a))
            .collect();
        corners.sort_unstable();
        let n = self.n;
        let nu: Vec<usize> = (1..n)
            .map(|i| ((i + 1)..=n).map(|j| self.lambda.part(j) - self.mu.part(j)).sum())
            .collect();
        let gamma: Vec<usize> = (1..n).map(|i| self.mu.part(i) - nu[i - 1]).collect();
        let gap = gamma.iter().sum();
        StripGeometry {
            i_set: corners.iter().map(|c| c.0).collect(),
            j_set: corners.iter().map(|c| c.1).collect(),
            corners,
            nu: Partition::from_sorted(nu),
            gamma: Partition::from_sorted(gamma),
            gap,
        }
    }

    /// The jigsaw dual `(lambda~, mu~)`.
    pub fn jigsaw(&self) -> StripPair {
        let n = self.n;
        let l1 = self.lambda.first();
        let lt: Vec<usize> = (1..=n).map(|i| l1 - self.lambda.part(n + 1 - i)).collect();
        let mt: Vec<usize> = (1..n).map(|i| l1 - self.mu.part(n - i)).collect();
        StripPair { n, lambda: Partition::from_sorted(lt), mu: Partition::from_sorted(mt) }
    }

    pub fn strip_size(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    /// `q^gap * prod_{a in J} (1 - q^{-inc_a(mu')})`, a Laurent polynomial in `q`.
    pub fn ext_in(&self) -> Poly {
        let g = self.geometry();
        let q = |e: i32| Monomial::from_pairs([(Var::q(), e)]);
        g.j_set.iter().fold(Poly::term(1, q(g.gap as i32)), |acc, &a| {
            &acc * &Poly::one_minus(&q(-(self.mu_conj_inc(a) as i32)))
        })
    }

    /// The intersection formula applied to the jigsaw dual.
    pub fn ext_pr(&self) -> Poly {
        self.jigsaw().ext_in()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn conjugate_and_inc() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[5, 3, 0]).inc(3), vec![2, 3, 0]);
        assert_eq!(Partition::empty().inc(3), vec![0, 0, 0]);
    }

    #[test]
    fn kitchen_sink_geometry() {
        let pair = StripPair::new(6, p(&[9, 8, 7, 6, 2, 1]), p(&[9, 7, 7, 3, 2])).unwrap();
        let g = pair.geometry();
        assert_eq!(g.corners, vec![(3, 7), (4, 3)]);
        assert_eq!(g.nu, p(&[5, 4, 4, 1, 1]));
        assert_eq!(g.gamma, p(&[4, 3, 3, 2, 1]));
        assert_eq!(g.gap, 13);
        let d = pair.jigsaw();
        assert_eq!(d.lambda, p(&[8, 7, 3, 2, 1, 0]));
        assert_eq!(d.mu, p(&[7, 6, 2, 2, 0]));
        assert_eq!(d.geometry().gap, 5 * pair.strip_size() - g.nu.size());
    }

    #[test]
    fn small_geometry() {
        let g = StripPair::new(2, p(&[3]), p(&[3])).unwrap().geometry();
        assert!(g.corners.is_empty());
        assert_eq!(g.nu, Partition::empty());
        assert_eq!(g.gamma, p(&[3]));
        assert_eq!(g.gap, 3);
    }

    #[test]
    fn big_example_extensions() {
        use crate::algebra::parse_poly;
        let pair = StripPair::new(9, p(&[12, 9, 7, 6, 6, 6, 4, 2, 1]), p(&[9, 9, 6, 6, 6, 4, 4, 2])).unwrap();
        let g = pair.geometry();
        assert_eq!(g.j_set, vec![9, 4]);
        assert_eq!(g.gap, 26);
        assert_eq!(pair.jigsaw().geometry().gamma, p(&[6, 6, 6, 4, 4, 4, 3, 3]));
        let sq = parse_poly("1 - q^{-2}").unwrap();
        assert_eq!(pair.ext_in(), &parse_poly("q^{26}").unwrap() * &(&sq * &sq));
        assert_eq!(pair.ext_pr(), &parse_poly("q^{36}").unwrap() * &(&sq * &sq));
    }

    #[test]
    fn rejects_non_strips() {
        assert!(StripPair::new(2, p(&[2, 2]), p(&[])).is_err());
        assert!(Partition::new(&[1, 2]).is_err());
    }
}
