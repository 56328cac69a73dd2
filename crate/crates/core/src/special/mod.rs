//! Substitutions of `HLS_n` giving lattice, Hecke, quiver and symplectic
//! generating functions, and the identities relating them.

mod checks;

use num_bigint::BigInt;
use num_traits::One;

pub use checks::{
    bgs_check, hecke_b_invariance, hecke_palindromic, hecke_vanishing, igusa_check, littlewood_checks,
    reciprocity_checks, upsilon_check, weak_order_check, zeta_check, HeckeVanishing, LittlewoodReport,
    ReciprocityReport,
};

use crate::algebra::{gaussian_binomial, Monomial, Poly, RatFunc, Subst, Var};
use crate::hls::{HlsError, HlsSeries};
use crate::tableaux::{
    bracket_product, elements, full_set, next_permutation, pair_legs, reduced_tableaux, subsets_in_order,
    z_monomial, Subset,
};

/// `d(n, C)`, with `d(n, {}) = 0`.
pub fn schubert_dimension(n: usize, c: Subset) -> i32 {
    let missing: usize = (1..=n).filter(|&i| c >> (i - 1) & 1 == 0).sum();
    let r = n - c.count_ones() as usize;
    (missing - r * (r + 1) / 2) as i32
}

fn q_pow(e: i32) -> Monomial {
    Monomial::from_pairs([(Var::q(), e)])
}

fn x_prod(c: Subset) -> Monomial {
    Monomial::from_pairs(elements(c).into_iter().map(|i| (Var::lx(i), 1)))
}

fn big_x() -> Monomial {
    Monomial::var(Var::big_x())
}

/// A uniform description of a substitution `Y -> y`, `X_C -> image(C)`.
#[derive(Clone, Debug)]
pub struct SubstitutionRecipe {
    pub name: &'static str,
    pub n: usize,
    pub y: (BigInt, Monomial),
    pub images: Vec<(Subset, Monomial)>,
}

impl SubstitutionRecipe {
    pub fn new(name: &'static str, n: usize, y: (BigInt, Monomial), image: impl Fn(Subset) -> Monomial) -> Self {
        let images = subsets_in_order(n).into_iter().map(|c| (c, image(c))).collect();
        SubstitutionRecipe { name, n, y, images }
    }

    fn subst(&self) -> Subst {
        let mut s = Subst::new();
        s.set(Var::y(), self.y.0.clone(), self.y.1.clone());
        for (c, m) in &self.images {
            s.set(Var::x_set(*c), 1, m.clone());
        }
        s
    }

    pub fn apply_numerator(&self, s: &HlsSeries) -> Result<Poly, HlsError> {
        Ok(s.numerator.substitute(&self.subst())?)
    }

    pub fn apply(&self, s: &HlsSeries) -> Result<RatFunc, HlsError> {
        assert_eq!(s.n, self.n, "recipe and series degrees differ");
        Ok(s.ratfunc().substitute(&self.subst())?)
    }
}

fn q_inverse() -> (BigInt, Monomial) {
    (BigInt::one(), q_pow(-1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineKind {
    Intersection,
    Projection,
}

pub fn affine_schubert_recipe(n: usize, kind: AffineKind) -> SubstitutionRecipe {
    SubstitutionRecipe::new("affS", n, q_inverse(), |c| {
        let d = match kind {
            AffineKind::Intersection => schubert_dimension(n, c),
            AffineKind::Projection => schubert_dimension(n, full_set(n) & !c),
        };
        q_pow(d).mul(&z_monomial(n, c).expect("nonempty subset"))
    })
}

/// Affine Schubert series of intersection or projection type in `q` and `Z_{ij}`.
pub fn affine_schubert(s: &HlsSeries, kind: AffineKind) -> Result<RatFunc, HlsError> {
    affine_schubert_recipe(s.n, kind).apply(s)
}

/// `C* = { n - i + 1 : i in C }`.
pub fn star(n: usize, c: Subset) -> Subset {
    elements(c).into_iter().fold(0, |acc, i| acc | 1 << (n - i))
}

pub fn hermite_smith_recipe(n: usize) -> SubstitutionRecipe {
    SubstitutionRecipe::new("HS", n, q_inverse(), |c| {
        let ys = Monomial::from_pairs(elements(star(n, c)).into_iter().map(|i| (Var::ly(i), 1)));
        q_pow(schubert_dimension(n, c)).mul(&Monomial::var(Var::lx(c.count_ones() as usize))).mul(&ys)
    })
}

/// Hermite-Smith series in `q`, `x_i`, `y_i`.
pub fn hermite_smith(s: &HlsSeries) -> Result<RatFunc, HlsError> {
    hermite_smith_recipe(s.n).apply(s)
}

/// `Y -> Y`, `X_C -> x_C X`.
pub fn hecke_recipe(n: usize, y: (BigInt, Monomial)) -> SubstitutionRecipe {
    SubstitutionRecipe::new("hecke", n, y, |c| x_prod(c).mul(&big_x()))
}

/// The Hecke series `H_n(x, X) = HLS_n(1/q, (x_C X)) / (1 - X)`.
pub fn hecke_series(s: &HlsSeries) -> Result<RatFunc, HlsError> {
    let f = hecke_recipe(s.n, q_inverse()).apply(s)?;
    Ok(f.mul(&RatFunc::geometric(big_x()).expect("X is not 1")))
}

/// `H_n^num(Y, x, X)` as the substituted numerator of `HLS_n`.
pub fn hecke_numerator(s: &HlsSeries) -> Result<Poly, HlsError> {
    hecke_recipe(s.n, (BigInt::one(), Monomial::var(Var::y()))).apply_numerator(s)
}

/// `H_n^num` as the explicit sum over reduced tableaux.
pub fn hecke_numerator_by_tableaux(n: usize) -> Poly {
    let all = subsets_in_order(n);
    reduced_tableaux(n)
        .iter()
        .map(|t| {
            let mut p = t.leg_polynomial();
            for &c in &all {
                let m = x_prod(c).mul(&big_x());
                p = if t.columns().contains(&c) { p.mul_monomial(&m) } else { &p * &Poly::one_minus(&m) };
            }
            p
        })
        .sum()
}

/// The Igusa function `sum_I binom(n, I)_Y prod_{i in I} Z_i / (1 - Z_i)`.
pub fn igusa(n: usize) -> RatFunc {
    let mut acc = RatFunc::from_poly(Poly::zero());
    for mask in 0..(1u32 << n) {
        let set = elements(mask);
        let coeff = gaussian_binomial(n, &set, Var::y()).expect("subset of [n]");
        let mut term = RatFunc::from_poly(coeff);
        for &i in &set {
            let z = Monomial::var(Var::zi(i));
            term = term.mul(&RatFunc::geometric(z.clone()).expect("Z_i is not 1")).mul_poly(&Poly::term(1, z));
        }
        acc = acc.add(&term);
    }
    acc
}

/// `Y -> Y`, `X_C -> Y^{d(n, [n] - C)} Z_{#C}`.
pub fn igusa_recipe(n: usize) -> SubstitutionRecipe {
    SubstitutionRecipe::new("igusa", n, (BigInt::one(), Monomial::var(Var::y())), |c| {
        Monomial::from_pairs([
            (Var::y(), schubert_dimension(n, full_set(n) & !c)),
            (Var::zi(c.count_ones() as usize), 1),
        ])
    })
}

/// Sum over strict containment chains of `prod X_C / (1 - X_C)`, built
/// with the same chain recursion as `HLS_n` but unit weights.
pub fn weak_order_zeta(n: usize) -> Result<RatFunc, HlsError> {
    if n == 0 || n > 4 {
        return Err(HlsError::BoundExceeded(n, 4));
    }
    let order = subsets_in_order(n);
    let mut state: Vec<Poly> = vec![Poly::one()];
    let mut last: Vec<Option<Subset>> = vec![None];
    for &c in &order {
        let xc = Monomial::var(Var::x_set(c));
        let fresh: Poly = state
            .iter()
            .zip(&last)
            .filter(|(_, l)| l.map_or(true, |a| a != c && a & c == c))
            .map(|(p, _)| p.clone())
            .sum::<Poly>()
            .mul_monomial(&xc);
        let om = Poly::one_minus(&xc);
        state = state.iter().map(|p| p * &om).collect();
        state.push(fresh);
        last.push(Some(c));
    }
    let den = order.iter().map(|&c| Monomial::var(Var::x_set(c))).collect();
    Ok(RatFunc::new(state.into_iter().sum(), den)?)
}

/// `v_C = (max(C_0 ∩ [i]_0))_{i in [n]}`.
pub fn quiver_vector(n: usize, c: Subset) -> Vec<usize> {
    (1..=n).map(|i| elements(c).into_iter().filter(|&x| x <= i).max().unwrap_or(0)).collect()
}

pub fn quiver_recipe(n: usize) -> SubstitutionRecipe {
    SubstitutionRecipe::new("quiver", n, q_inverse(), |c| {
        let ts = quiver_vector(n, c).into_iter().enumerate().map(|(i, v)| (Var::t(i + 1), v as i32));
        q_pow(schubert_dimension(n, c)).mul(&Monomial::from_pairs(ts))
    })
}

/// Local zeta function of `o^i` at `t`: `prod_{j<i} 1/(1 - q^j t)`.
pub fn lattice_zeta(i: usize, t: Var) -> RatFunc {
    let den = (0..i).map(|j| Monomial::from_pairs([(Var::q(), j as i32), (t, 1)])).collect();
    RatFunc::new(Poly::one(), den).expect("t is not 1")
}

/// Representation zeta function of `V_n(o)` in `t_i = q^{-s_i}`; the lattice
/// factor for vertex `i` is evaluated at `t_{i+1}`.
pub fn quiver_zeta(s: &HlsSeries) -> Result<RatFunc, HlsError> {
    let mut f = quiver_recipe(s.n).apply(s)?;
    for i in 1..s.n {
        f = f.mul(&lattice_zeta(i, Var::t(i + 1)));
    }
    Ok(f)
}

/// `maj(C) = sum of the elements of C`.
pub fn maj(c: Subset) -> i32 {
    elements(c).into_iter().sum::<usize>() as i32
}

/// `1/(1 - u^n) HLS_n(1/q, (q^{maj C} u^n)_C)` with `u = q^{-s}`.
pub fn symplectic_integral(s: &HlsSeries) -> Result<RatFunc, HlsError> {
    let n = s.n as i32;
    let recipe = SubstitutionRecipe::new("gsp", s.n, q_inverse(), |c| {
        Monomial::from_pairs([(Var::q(), maj(c)), (Var::u(), n)])
    });
    let pre = RatFunc::geometric(Monomial::from_pairs([(Var::u(), n)])).expect("u^n is not 1");
    Ok(recipe.apply(s)?.mul(&pre))
}

/// `sum_{w in S_n} q^{-l(w)} prod_{i in Des w} X_i / prod_{i=0}^n (1 - X_i)`
/// with `X_i = q^{binom(n+1,2) - binom(i+1,2)} u^n`.
pub fn bgs_form(n: usize) -> RatFunc {
    let r = (n * (n + 1) / 2) as i32;
    let xi = |i: usize| Monomial::from_pairs([(Var::q(), r - (i * (i + 1) / 2) as i32), (Var::u(), n as i32)]);
    let mut num = Poly::zero();
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        let inv: i32 = (0..n).map(|i| (i + 1..n).filter(|&j| w[i] > w[j]).count() as i32).sum();
        let mut m = q_pow(-inv);
        for i in 1..n {
            if w[i] < w[i - 1] {
                m = m.mul(&xi(i));
            }
        }
        num = &num + &Poly::term(1, m);
        if !next_permutation(&mut w) {
            break;
        }
    }
    RatFunc::new(num, (0..=n).map(xi).collect()).expect("X_i is not 1")
}

/// Leg polynomial of a tableau given by its columns.
pub fn phi_of_columns(cols: &[Subset]) -> Poly {
    cols.windows(2).map(|w| bracket_product(&pair_legs(w[0], w[1]))).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_den, parse_poly, rat_equal};
    use crate::hls::hls_series;

    fn rf(num: &str, den: &str) -> RatFunc {
        RatFunc::new(parse_poly(num).unwrap(), parse_den(den).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let s1 = hls_series(1).unwrap();
        let s2 = hls_series(2).unwrap();
        assert!(rat_equal(&affine_schubert(&s1, AffineKind::Intersection).unwrap(), &rf("1", "(1 - Z_{11})")));
        assert!(rat_equal(
            &affine_schubert(&s2, AffineKind::Intersection).unwrap(),
            &rf("1 - Z_{11} Z_{21}^2", "(1 - q Z_{11} Z_{21})(1 - Z_{21})(1 - Z_{11} Z_{22})")
        ));
        assert!(rat_equal(
            &affine_schubert(&s2, AffineKind::Projection).unwrap(),
            &rf("1 - Z_{11} Z_{21}^2", "(1 - Z_{11} Z_{21})(1 - q Z_{21})(1 - Z_{11} Z_{22})")
        ));
        assert!(rat_equal(&hermite_smith(&s1).unwrap(), &rf("1", "(1 - x_1 y_1)")));
        assert!(rat_equal(
            &quiver_zeta(&s2).unwrap(),
            &rf("1 - t_1 t_2^3", "(1 - t_2)(1 - t_2^2)(1 - t_1 t_2^2)(1 - q t_1 t_2)")
        ));
        assert!(rat_equal(&symplectic_integral(&s1).unwrap(), &rf("1", "(1 - u)(1 - q u)")));
        assert!(rat_equal(&bgs_form(1), &rf("1", "(1 - u)(1 - q u)")));
    }

    #[test]
    fn quiver_vectors() {
        assert_eq!(quiver_vector(3, 0b101), vec![1, 1, 3]);
        assert_eq!(quiver_vector(3, 0b010), vec![0, 2, 2]);
    }

    #[test]
    fn igusa_one() {
        assert!(rat_equal(&igusa(1), &rf("1", "(1 - Z_1)")));
    }
}
