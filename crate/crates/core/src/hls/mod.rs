//! The series `HLS_n` as an explicit rational function, its coarsenings and special values.

mod coarse;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

pub use coarse::{
    coarse_chain_numerator, coarsen, depth_conjecture, eulerian, h_minus_first_prediction, h_minus_sum_prediction,
    h_vector, reduce_one_minus, special_value_y, CoarseHls,
};

use crate::algebra::{Monomial, Poly, RatFunc, Subst, Var};
use crate::par::{self, Strategy};
use crate::tableaux::{bracket_product, full_set, gale_leq, pair_legs, reduced_tableaux, subsets_in_order, Subset};

pub const DEFAULT_BOUND: usize = 4;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum HlsError {
    #[error("n = {0} exceeds the bound {1}")]
    BoundExceeded(usize, usize),
    #[error("n must be positive")]
    Zero,
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

fn check_bound(n: usize, bound: usize) -> Result<(), HlsError> {
    if n == 0 {
        Err(HlsError::Zero)
    } else if n > bound {
        Err(HlsError::BoundExceeded(n, bound))
    } else {
        Ok(())
    }
}

/// `HLS_n = N_n / prod_C (1 - X_C)`.
#[derive(Clone, Debug)]
pub struct HlsSeries {
    pub n: usize,
    pub numerator: Poly,
}

fn x_mono(c: Subset) -> Monomial {
    Monomial::var(Var::x_set(c))
}

/// All nonempty subsets in the order used for denominators.
pub fn denominator_sets(n: usize) -> Vec<Subset> {
    subsets_in_order(n)
}

impl HlsSeries {
    pub fn denominator(&self) -> Vec<Monomial> {
        denominator_sets(self.n).into_iter().map(x_mono).collect()
    }

    pub fn ratfunc(&self) -> RatFunc {
        RatFunc::new(self.numerator.clone(), self.denominator()).expect("X_C is never 1")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "numerator": self.numerator.to_json(),
            "denominator_factors": self.denominator().iter().map(|m| Poly::term(1, m.clone()).to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn to_latex(&self) -> String {
        format!("\\mathsf{{N}}_{}(Y,\\bm{{X}}) = {}", self.n, self.numerator.to_latex())
    }
}

/// `HLS_n` with the default bound `n <= 4`.
pub fn hls_series(n: usize) -> Result<HlsSeries, HlsError> {
    hls_series_with(n, DEFAULT_BOUND, Strategy::default())
}

/// Chain dynamic programme over a linear extension of the tableau order.
/// State `s` holds the sum over chains whose last column is the `s`th element
/// (or none), each chain weighted by its leg polynomial, `X_C` for chosen
/// columns and `1 - X_C` for skipped ones.
pub fn hls_series_with(n: usize, bound: usize, strategy: Strategy) -> Result<HlsSeries, HlsError> {
    check_bound(n, bound)?;
    let order = subsets_in_order(n);
    let m = order.len();
    let mut state: Vec<Poly> = vec![Poly::zero(); m + 1];
    state[0] = Poly::one();
    let states: Vec<usize> = (0..=m).collect();
    for (j, &c) in order.iter().enumerate() {
        let xc = x_mono(c);
        let one_minus = Poly::one_minus(&xc);
        let feeds: Vec<Poly> = par::map(strategy, &states[..=j], |&s| {
            if s == 0 {
                return state[0].clone();
            }
            let a = order[s - 1];
            if state[s].is_zero() || !gale_leq(a, c) {
                return Poly::zero();
            }
            &state[s] * &bracket_product(&pair_legs(a, c))
        });
        let fresh: Poly = feeds.into_iter().sum::<Poly>().mul_monomial(&xc);
        state = par::map(strategy, &states, |&s| if s <= j { &state[s] * &one_minus } else { Poly::zero() });
        state[j + 1] = fresh;
    }
    Ok(HlsSeries { n, numerator: state.into_iter().sum() })
}

/// Definition-level sum over reduced tableaux of `Phi_T prod X_C/(1-X_C)`.
pub fn hls_by_tableaux(n: usize) -> RatFunc {
    let mut acc = RatFunc::from_poly(Poly::zero());
    for t in reduced_tableaux(n) {
        let mut term = RatFunc::from_poly(t.leg_polynomial());
        for &c in t.columns() {
            let g = RatFunc::geometric(x_mono(c)).expect("X_C is never 1");
            term = term.mul(&g).mul_poly(&Poly::term(1, x_mono(c)));
        }
        acc = acc.add(&term);
    }
    acc
}

/// `sum_T Phi_T prod_{C in T} X_C prod_{C not in T} (1 - X_C)` by direct summation.
pub fn numerator_by_tableaux(n: usize) -> Poly {
    let all = subsets_in_order(n);
    reduced_tableaux(n)
        .iter()
        .map(|t| {
            let mut p = t.leg_polynomial();
            for &c in &all {
                if t.columns().contains(&c) {
                    p = p.mul_monomial(&x_mono(c));
                } else {
                    p = &p * &Poly::one_minus(&x_mono(c));
                }
            }
            p
        })
        .sum()
}

/// Laurent substitution `Y -> Y^{-1}`, `X_C -> X_C^{-1}`.
pub fn invert_variables(n: usize, p: &Poly) -> Result<Poly, HlsError> {
    let mut s = Subst::new();
    s.set(Var::y(), 1, Monomial::var(Var::y()).inverse());
    for c in subsets_in_order(n) {
        s.set(Var::x_set(c), 1, x_mono(c).inverse());
    }
    Ok(p.substitute(&s)?)
}

/// Check `HLS_n(1/Y, 1/X) = (-1)^n Y^{-binom(n,2)} X_[n] HLS_n(Y, X)` after
/// clearing denominators with `1 - 1/X_C = -(1/X_C)(1 - X_C)`.
pub fn verify_functional_equation(s: &HlsSeries) -> Result<bool, HlsError> {
    let n = s.n;
    let sets = subsets_in_order(n);
    let mut prod_x = Monomial::one();
    for &c in &sets {
        prod_x = prod_x.mul(&x_mono(c));
    }
    let sign = |k: usize| if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let lhs = invert_variables(n, &s.numerator)?.mul_monomial(&prod_x).scale(&sign(sets.len()));
    let shift = Monomial::from_pairs([(Var::y(), -((n * (n - 1) / 2) as i32))]).mul(&x_mono(full_set(n)));
    let rhs = s.numerator.mul_monomial(&shift).scale(&sign(n));
    Ok(lhs == rhs)
}

/// Same identity compared as rational functions, without clearing by hand.
pub fn verify_functional_equation_rational(s: &HlsSeries) -> Result<bool, HlsError> {
    let n = s.n;
    let mut sub = Subst::new();
    sub.set(Var::y(), 1, Monomial::var(Var::y()).inverse());
    for c in subsets_in_order(n) {
        sub.set(Var::x_set(c), 1, x_mono(c).inverse());
    }
    let lhs = s.ratfunc().substitute(&sub)?;
    let sign: BigInt = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let shift = Monomial::from_pairs([(Var::y(), -((n * (n - 1) / 2) as i32))]).mul(&x_mono(full_set(n)));
    let rhs = s.ratfunc().mul_poly(&Poly::term(sign, shift));
    Ok(crate::algebra::rat_equal(&lhs, &rhs))
}

/// Monomials of `N_n` whose total degree in the `X_C` is one.
pub fn linear_terms(s: &HlsSeries) -> Vec<Monomial> {
    let is_x = |v: Var| v.set_mask().is_some();
    s.numerator.terms().filter(|(m, _)| m.degree_in(&is_x) == 1).map(|(m, _)| m.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn small_numerators() {
        assert_eq!(hls_series(1).unwrap().numerator, Poly::one());
        assert_eq!(hls_series(2).unwrap().numerator, parse_poly("1 - Y X_{1|2}").unwrap());
        assert!(hls_series(5).is_err());
        assert!(hls_series(0).is_err());
    }

    #[test]
    fn strategies_agree() {
        let a = hls_series_with(3, 4, Strategy::Sequential).unwrap();
        let b = hls_series_with(3, 4, Strategy::Parallel).unwrap();
        assert_eq!(a.numerator, b.numerator);
    }

    #[test]
    fn dual_routes_agree() {
        for n in 1..=3 {
            let s = hls_series(n).unwrap();
            assert!(crate::algebra::rat_equal(&s.ratfunc(), &hls_by_tableaux(n)));
            assert_eq!(s.numerator, numerator_by_tableaux(n));
        }
    }

    #[test]
    fn functional_equation_small() {
        for n in 1..=3 {
            let s = hls_series(n).unwrap();
            assert!(verify_functional_equation(&s).unwrap());
            assert!(verify_functional_equation_rational(&s).unwrap());
        }
    }
}
