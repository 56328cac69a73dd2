use num_bigint::BigInt;

use super::poly::Poly;
use super::var::Var;
use super::AlgebraError;

/// Gaussian binomial `[n choose k]_v` by the q-Pascal rule.
pub fn gaussian(n: usize, k: usize, v: Var) -> Poly {
    if k > n {
        return Poly::zero();
    }
    // row[j] holds [m choose j] for the current m.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for m in 1..=n {
        let mut next = vec![vec![BigInt::from(1)]; m + 1];
        for j in 1..m {
            let mut c = row[j - 1].clone();
            let shifted = &row[j];
            if c.len() < shifted.len() + j {
                c.resize(shifted.len() + j, BigInt::from(0));
            }
            for (d, x) in shifted.iter().enumerate() {
                c[d + j] += x;
            }
            next[j] = c;
        }
        row = next;
    }
    Poly::from_univariate(v, &row[k])
}

/// The multinomial `binom(n, I)_v` for `I` a subset of `[n]`, via
/// `binom(n, I) = binom(n, k) binom(k, I - {k})` with `k = max I`.
pub fn gaussian_binomial(n: usize, set: &[usize], v: Var) -> Result<Poly, AlgebraError> {
    if set.iter().any(|&i| i == 0 || i > n) {
        return Err(AlgebraError::NotASubset(n));
    }
    let mut s: Vec<usize> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    let mut acc = Poly::one();
    let mut top = n;
    while let Some(k) = s.pop() {
        acc = &acc * &gaussian(top, k, v);
        top = k;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn examples() {
        let y = Var::y();
        assert_eq!(gaussian_binomial(4, &[], y).unwrap(), Poly::one());
        assert_eq!(gaussian_binomial(2, &[1], y).unwrap(), parse_poly("1+Y").unwrap());
        assert_eq!(gaussian_binomial(3, &[1, 2], y).unwrap(), parse_poly("(1+Y+Y^2)(1+Y)").unwrap());
        assert!(gaussian_binomial(2, &[3], y).is_err());
    }
}
