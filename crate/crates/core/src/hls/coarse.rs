use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{check_bound, HlsError, HlsSeries};
use crate::algebra::{Monomial, Poly, RatFunc, Subst, Var};
use crate::tableaux::{bracket_product, gale_leq, next_permutation, pair_legs, subsets_in_order};

/// A coarse series `numerator(Y, X) / (1 - X)^r`.
#[derive(Clone, Debug)]
pub struct CoarseHls {
    pub n: usize,
    pub r: usize,
    pub numerator: Poly,
}

impl CoarseHls {
    pub fn ratfunc(&self) -> RatFunc {
        RatFunc::new(self.numerator.clone(), vec![Monomial::var(Var::big_x()); self.r]).expect("X is not 1")
    }
}

/// Coarse numerator over `(1 - X)^r`, `r = binom(n+1,2)`, from the chain sums
/// `c_l(Y) = sum over l-element chains of Phi`.
pub fn coarse_chain_numerator(n: usize, bound: usize) -> Result<CoarseHls, HlsError> {
    check_bound(n, bound)?;
    let r = n * (n + 1) / 2;
    let order = subsets_in_order(n);
    let m = order.len();
    let mut ending: Vec<Vec<Poly>> = Vec::with_capacity(m);
    let mut by_len = vec![Poly::zero(); r + 1];
    by_len[0] = Poly::one();
    for j in 0..m {
        let mut row = vec![Poly::zero(); r + 1];
        row[1] = Poly::one();
        for i in 0..j {
            if !gale_leq(order[i], order[j]) {
                continue;
            }
            let phi = bracket_product(&pair_legs(order[i], order[j]));
            for l in 1..r {
                if !ending[i][l].is_zero() {
                    row[l + 1] = &row[l + 1] + &(&ending[i][l] * &phi);
                }
            }
        }
        for l in 1..=r {
            by_len[l] = &by_len[l] + &row[l];
        }
        ending.push(row);
    }
    let x = Var::big_x();
    let one_minus = Poly::one_minus(&Monomial::var(x));
    let numerator = by_len
        .iter()
        .enumerate()
        .map(|(l, c)| c.mul_monomial(&Monomial::from_pairs([(x, l as i32)])) * one_minus.pow((r - l) as u32))
        .sum();
    Ok(CoarseHls { n, r, numerator })
}

/// Coefficients of `HLS_n(y0, X) (1 - X)^r` for `r = binom(n+1,2)`.
pub fn h_vector(n: usize, y0: i64, bound: usize) -> Result<Vec<BigInt>, HlsError> {
    let c = coarse_chain_numerator(n, bound)?;
    let p = c.numerator.substitute(&Subst::new().with(Var::y(), y0, Monomial::one()))?;
    let mut h = p.univariate(Var::big_x()).unwrap_or_default();
    while h.len() > 1 && h.last().map_or(false, |c| c.is_zero()) {
        h.pop();
    }
    Ok(h)
}

/// Cancel `1 - v` factors of the denominator against the numerator while it divides exactly.
pub fn reduce_one_minus(f: &RatFunc, v: Var) -> RatFunc {
    let mv = Monomial::var(v);
    let mut num = f.numerator().clone();
    let mut den = f.denominator().to_vec();
    while let Some(pos) = den.iter().position(|m| *m == mv) {
        match num.div_one_minus(v) {
            Some(q) => {
                num = q;
                den.remove(pos);
            }
            None => break,
        }
    }
    RatFunc::new(num, den).expect("factors came from a valid rational function")
}

/// Replace every `X_C` by `X` and cancel explicit `1 - X` factors.
pub fn coarsen(s: &HlsSeries) -> RatFunc {
    let mut sub = Subst::new();
    for c in subsets_in_order(s.n) {
        sub.set(Var::x_set(c), 1, Monomial::var(Var::big_x()));
    }
    let f = s.ratfunc().substitute(&sub).expect("monomial substitution");
    reduce_one_minus(&f, Var::big_x())
}

/// Substitute `Y = y0` and cancel `1 - X` factors.
pub fn special_value_y(f: &RatFunc, y0: i64) -> Result<RatFunc, HlsError> {
    let g = f.substitute(&Subst::new().with(Var::y(), y0, Monomial::one()))?;
    Ok(reduce_one_minus(&g, Var::big_x()))
}

/// Eulerian polynomial coefficients by counting descents over `S_n`.
pub fn eulerian(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n.max(1)];
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        let des = w.windows(2).filter(|p| p[1] < p[0]).count();
        out[des] += 1;
        if !next_permutation(&mut w) {
            break;
        }
    }
    out
}

/// Positivity up to `k = binom(n-1,2)`, vanishing after, and palindromy on `[0, k]`.
pub fn depth_conjecture(n: usize, h: &[BigInt]) -> bool {
    let k = (n.saturating_sub(1)) * n.saturating_sub(2) / 2;
    let at = |i: usize| h.get(i).cloned().unwrap_or_else(BigInt::zero);
    (0..=k).all(|i| at(i).is_positive())
        && (k + 1..h.len()).all(|i| at(i).is_zero())
        && (0..=k).all(|i| at(i) == at(k - i))
}

/// `binom(n,2)! / prod_{i<n} (2i-1)^{n-i}`, when the division is exact.
pub fn h_minus_sum_prediction(n: usize) -> Option<BigInt> {
    let fact = (1..=n * n.saturating_sub(1) / 2).fold(BigInt::one(), |a, i| a * BigInt::from(i));
    let den = (1..n).fold(BigInt::one(), |a, i| a * num_traits::pow(BigInt::from(2 * i - 1), n - i));
    if (&fact % &den).is_zero() {
        Some(fact / den)
    } else {
        None
    }
}

/// `2^n - 1 - binom(n+1,2)`.
pub fn h_minus_first_prediction(n: usize) -> BigInt {
    (BigInt::one() << n) - 1 - BigInt::from(n * (n + 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian(3), ints(&[1, 4, 1]));
        assert_eq!(eulerian(1), ints(&[1]));
    }

    #[test]
    fn h_vectors_small() {
        assert_eq!(h_vector(4, 0, 6).unwrap(), ints(&[1, 5, 5, 1]));
        assert_eq!(h_vector(3, -1, 6).unwrap(), ints(&[1, 1, 6, 6, 1, 1]));
        assert_eq!(h_vector(1, -1, 6).unwrap(), ints(&[1]));
    }
}
