use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Monomial, Poly, Subst};
use super::var::Var;
use super::AlgebraError;

/// `num / prod (1 - m)` over a multiset of monomials `m`.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Vec<Monomial>,
}

/// Multiset difference of sorted vectors.
fn sorted_minus(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut j = 0;
    for m in a {
        while j < b.len() && b[j] < *m {
            j += 1;
        }
        if j < b.len() && b[j] == *m {
            j += 1;
        } else {
            out.push(m.clone());
        }
    }
    out
}

impl RatFunc {
    pub fn new(num: Poly, den: Vec<Monomial>) -> Result<RatFunc, AlgebraError> {
        if den.iter().any(|m| m.is_one()) {
            return Err(AlgebraError::ZeroDenominator);
        }
        let mut den = den;
        den.sort();
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Vec::new() }
    }

    /// `1 / (1 - m)`.
    pub fn geometric(m: Monomial) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(Poly::one(), vec![m])
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &[Monomial] {
        &self.den
    }

    pub fn den_product(&self) -> Poly {
        self.den.iter().map(Poly::one_minus).product()
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        den.sort();
        RatFunc { num: &self.num * &other.num, den }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        RatFunc { num: &self.num * p, den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let only_a = sorted_minus(&self.den, &other.den);
        let only_b = sorted_minus(&other.den, &self.den);
        let fa: Poly = only_b.iter().map(Poly::one_minus).product();
        let fb: Poly = only_a.iter().map(Poly::one_minus).product();
        let mut den = self.den.clone();
        den.extend(only_b);
        den.sort();
        RatFunc { num: &self.num * &fa + &other.num * &fb, den }
    }

    /// Remove a denominator factor `1 - m` by multiplying the numerator
    /// with it when the factor is not present (used for clearing).
    pub fn cancel_factor(&self, m: &Monomial) -> Option<RatFunc> {
        let pos = self.den.iter().position(|d| d == m)?;
        let mut den = self.den.clone();
        den.remove(pos);
        Some(RatFunc { num: self.num.clone(), den })
    }

    pub fn substitute(&self, s: &Subst) -> Result<RatFunc, AlgebraError> {
        let mut num = self.num.substitute(s)?;
        let mut den = Vec::new();
        for m in &self.den {
            let img = Poly::term(1, m.clone()).substitute(s)?;
            let mut it = img.terms();
            let (mono, c) = match it.next() {
                None => continue,
                Some((mono, c)) => (mono.clone(), c.clone()),
            };
            if c.is_one() {
                if mono.is_one() {
                    return Err(AlgebraError::ZeroDenominator);
                }
                den.push(mono);
            } else if c == -BigInt::one() {
                // 1 + m = (1 - m^2) / (1 - m)
                num = &num * &Poly::one_minus(&mono);
                den.push(mono.pow(2));
            } else {
                return Err(AlgebraError::NonMonomialFactor(m.to_string()));
            }
        }
        RatFunc::new(num, den)
    }

    /// Power-series expansion truncated to grading degree `bound`.
    pub fn series_expand(&self, grading: &dyn Fn(Var) -> bool, bound: i64) -> Result<Poly, AlgebraError> {
        for m in &self.den {
            if m.degree_in(grading) <= 0 || m.pairs().iter().any(|&(v, e)| grading(v) && e < 0) {
                return Err(AlgebraError::NotExpandable(m.to_string()));
            }
        }
        let lo = self.num.min_degree_in(grading).unwrap_or(0).min(0);
        let reach = bound - lo;
        let mut acc = Poly::one();
        for m in &self.den {
            let d = m.degree_in(grading);
            let geo = Poly::from_terms((0..=reach / d).map(|k| (m.pow(k as i32), BigInt::one())));
            acc = acc.mul_truncated(&geo, grading, reach);
        }
        let full = &acc * &self.num;
        Ok(full.truncate(grading, bound))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "numerator": self.num.to_json(),
            "denominator_factors": self.den.iter().map(|m| Poly::term(1, m.clone()).to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_empty() {
            return self.num.to_latex();
        }
        let factors: Vec<String> = self.den.iter().map(|m| format!("(1 - {})", Poly::term(1, m.clone()).to_latex())).collect();
        format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), factors.join(""))
    }
}

/// Rewrite `1/(1 - m)` with `m` leading-negative as `-m^{-1}/(1 - m^{-1})`.
fn orient(f: &RatFunc) -> RatFunc {
    let mut num = f.num.clone();
    let mut den = Vec::with_capacity(f.den.len());
    for m in &f.den {
        if m.pairs().first().is_some_and(|&(_, e)| e < 0) {
            let k = m.inverse();
            num = num.mul_monomial(&k).scale(&-BigInt::one());
            den.push(k);
        } else {
            den.push(m.clone());
        }
    }
    den.sort();
    RatFunc { num, den }
}

/// Equality of rational functions by cross-multiplication.
pub fn rat_equal(f: &RatFunc, g: &RatFunc) -> bool {
    let (f, g) = (&orient(f), &orient(g));
    let only_f = sorted_minus(&f.den, &g.den);
    let only_g = sorted_minus(&g.den, &f.den);
    let lhs = &f.num * &only_g.iter().map(Poly::one_minus).product::<Poly>();
    let rhs = &g.num * &only_f.iter().map(Poly::one_minus).product::<Poly>();
    lhs == rhs
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        rat_equal(self, other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_latex())
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Var {
        Var::big_x()
    }

    #[test]
    fn equality_examples() {
        let m = Monomial::var(x());
        let a = RatFunc::geometric(m.clone()).unwrap();
        let b = RatFunc::new(&Poly::one() + &Poly::var(x()), vec![m.pow(2)]).unwrap();
        let c = RatFunc::geometric(m.pow(2)).unwrap();
        assert!(rat_equal(&a, &b));
        assert!(!rat_equal(&a, &c));
    }

    #[test]
    fn expand_geometric() {
        let z = Var::z(1, 1);
        let f = RatFunc::geometric(Monomial::var(z)).unwrap();
        let s = f.series_expand(&|v| v == z, 3).unwrap();
        let want: Vec<BigInt> = vec![1.into(); 4];
        assert_eq!(s, Poly::from_univariate(z, &want));
    }

    #[test]
    fn expand_rejects_degree_zero() {
        let f = RatFunc::geometric(Monomial::var(Var::q())).unwrap();
        assert!(f.series_expand(&|v| v == Var::z(1, 1), 3).is_err());
    }

    #[test]
    fn substitute_to_minus() {
        // 1/(1-X) at X -> -X is 1/(1+X) = (1-X)/(1-X^2)
        let f = RatFunc::geometric(Monomial::var(x())).unwrap();
        let g = f.substitute(&Subst::new().with(x(), -1, Monomial::var(x()))).unwrap();
        let s = g.series_expand(&|v| v == x(), 4).unwrap();
        let want: Vec<BigInt> = [1, -1, 1, -1, 1].iter().map(|&c| c.into()).collect();
        assert_eq!(s, Poly::from_univariate(x(), &want));
    }
}
