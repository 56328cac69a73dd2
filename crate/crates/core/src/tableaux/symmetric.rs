use super::gt::patterns_with_top;
use super::partition::Partition;
use super::TableauError;
use crate::algebra::{Monomial, Poly, Subst, Var};

fn x_power(wt: &[usize]) -> Monomial {
    Monomial::from_pairs(wt.iter().enumerate().map(|(i, &e)| (Var::lx(i + 1), e as i32)))
}

/// Hall-Littlewood `P_lambda(x_1..x_n; t)` as a sum of `Psi_A(t) x^wt(A)` over
/// Gelfand-Tsetlin patterns, with `t` written as the variable `var_t`.
pub fn hall_littlewood(lambda: &Partition, n: usize, var_t: Var) -> Result<Poly, TableauError> {
    if lambda.len() > n {
        return Err(TableauError::TooManyParts);
    }
    let to_t = Subst::new().with(Var::y(), 1, Monomial::var(var_t));
    Ok(patterns_with_top(lambda, n)
        .into_iter()
        .map(|a| a.psi().substitute(&to_t).expect("monomial image").mul_monomial(&x_power(&a.weight())))
        .sum())
}

/// Schur polynomial `s_lambda(x_1..x_n)`.
pub fn schur(lambda: &Partition, n: usize) -> Result<Poly, TableauError> {
    if lambda.len() > n {
        return Err(TableauError::TooManyParts);
    }
    Ok(patterns_with_top(lambda, n).into_iter().map(|a| Poly::term(1, x_power(&a.weight()))).sum())
}

/// Monomial symmetric polynomial `m_lambda(x_1..x_n)`.
pub fn monomial_symmetric(lambda: &Partition, n: usize) -> Result<Poly, TableauError> {
    if lambda.len() > n {
        return Err(TableauError::TooManyParts);
    }
    let mut exps = lambda.padded(n);
    exps.sort_unstable();
    let mut terms = Vec::new();
    loop {
        terms.push((x_power(&exps), 1.into()));
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(Poly::from_terms(terms))
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn small_cases() {
        let t = Var::t(1);
        assert_eq!(hall_littlewood(&p(&[1]), 2, t).unwrap(), parse_poly("x_1 + x_2").unwrap());
        assert_eq!(
            hall_littlewood(&p(&[2]), 2, t).unwrap(),
            parse_poly("x_1^2 + (1 - t_1) x_1 x_2 + x_2^2").unwrap()
        );
        assert_eq!(hall_littlewood(&p(&[1, 1]), 2, t).unwrap(), parse_poly("x_1 x_2").unwrap());
        assert_eq!(schur(&p(&[2, 1]), 2).unwrap(), parse_poly("x_1^2 x_2 + x_1 x_2^2").unwrap());
        assert!(schur(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial_symmetric(&p(&[2]), 2).unwrap(), parse_poly("x_1^2 + x_2^2").unwrap());
    }
}
