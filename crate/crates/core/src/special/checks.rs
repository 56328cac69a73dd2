use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    affine_schubert, bgs_form, hecke_numerator, hecke_series, hermite_smith, igusa, igusa_recipe, symplectic_integral,
    weak_order_zeta, AffineKind, SubstitutionRecipe,
};
use crate::algebra::{rat_equal, Monomial, Poly, RatFunc, Subst, Var};
use crate::hls::{HlsError, HlsSeries};
use crate::tableaux::{elements, next_permutation};

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn x_prod(c: u32) -> Monomial {
    Monomial::from_pairs(elements(c).into_iter().map(|i| (Var::lx(i), 1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LittlewoodReport {
    pub schur_identity: bool,
    pub x1_product: bool,
}

/// `HLS_n(Y, (x_C))` against the Littlewood-type product, generic `Y` and `Y = 0`.
pub fn littlewood_checks(s: &HlsSeries) -> Result<LittlewoodReport, HlsError> {
    let n = s.n;
    let y = Monomial::var(Var::y());
    let at = |yv: (BigInt, Monomial)| SubstitutionRecipe::new("littlewood", n, yv, x_prod).apply(s);
    let mut den = Vec::new();
    let mut num = Poly::one();
    for j in 1..=n {
        den.push(Monomial::var(Var::lx(j)));
        for i in 1..j {
            let xx = Monomial::from_pairs([(Var::lx(i), 1), (Var::lx(j), 1)]);
            den.push(xx.clone());
            num = &num * &Poly::one_minus(&y.mul(&xx));
        }
    }
    let product = RatFunc::new(num, den.clone())?;
    let schur_product = RatFunc::new(Poly::one(), den)?;
    Ok(LittlewoodReport {
        schur_identity: rat_equal(&at((BigInt::zero(), Monomial::one()))?, &schur_product),
        x1_product: rat_equal(&at((BigInt::one(), y))?, &product),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub affs_in: bool,
    pub affs_pr: bool,
    pub hecke: bool,
}

fn invert_all(f: &RatFunc, vars: &[Var]) -> Result<RatFunc, HlsError> {
    let mut sub = Subst::new();
    for &v in vars {
        sub.set(v, 1, Monomial::var(v).inverse());
    }
    Ok(f.substitute(&sub)?)
}

/// The self-reciprocity corollaries for affine Schubert and Hecke series.
pub fn reciprocity_checks(s: &HlsSeries) -> Result<ReciprocityReport, HlsError> {
    let n = s.n;
    let binom = (n * (n - 1) / 2) as i32;
    let mut zvars = vec![Var::q()];
    for i in 1..=n {
        for j in 1..=i {
            zvars.push(Var::z(i, j));
        }
    }
    let diag = Monomial::from_pairs((1..=n).map(|i| (Var::z(i, i), 1)));
    let factor = Poly::term(sign(n), Monomial::from_pairs([(Var::q(), binom)]).mul(&diag));
    let mut affs = [false; 2];
    for (slot, kind) in [AffineKind::Intersection, AffineKind::Projection].into_iter().enumerate() {
        let f = affine_schubert(s, kind)?;
        affs[slot] = rat_equal(&invert_all(&f, &zvars)?, &f.mul_poly(&factor));
    }
    let mut hvars = vec![Var::q(), Var::big_x()];
    hvars.extend((1..=n).map(Var::lx));
    let h = hecke_series(s)?;
    let hfactor = Poly::term(
        sign(n + 1),
        Monomial::from_pairs([(Var::q(), binom), (Var::big_x(), 2)]).mul(&x_prod((1 << n) - 1)),
    );
    let hecke = rat_equal(&invert_all(&h, &hvars)?, &h.mul_poly(&hfactor));
    Ok(ReciprocityReport { affs_in: affs[0], affs_pr: affs[1], hecke })
}

/// Invariance of the Hecke series under permuting the `x_i` and under
/// `x_k -> 1/x_k, X -> x_k X`.
pub fn hecke_b_invariance(s: &HlsSeries) -> Result<bool, HlsError> {
    let n = s.n;
    let h = hecke_series(s)?;
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        let mut sub = Subst::new();
        for (i, &wi) in w.iter().enumerate() {
            sub.set(Var::lx(i + 1), 1, Monomial::var(Var::lx(wi)));
        }
        if !rat_equal(&h.substitute(&sub)?, &h) {
            return Ok(false);
        }
        if !next_permutation(&mut w) {
            break;
        }
    }
    for k in 1..=n {
        let mut sub = Subst::new();
        sub.set(Var::lx(k), 1, Monomial::var(Var::lx(k)).inverse());
        sub.set(Var::big_x(), 1, Monomial::from_pairs([(Var::lx(k), 1), (Var::big_x(), 1)]));
        if !rat_equal(&h.substitute(&sub)?, &h) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeVanishing {
    pub degree: i64,
    pub degree_ok: bool,
    pub linear_zero: bool,
    pub second_highest_but_one_zero: bool,
}

/// `deg_X H^num = 2^n - 2` and vanishing of the `X^1` and `X^{2^n - 3}` coefficients.
pub fn hecke_vanishing(s: &HlsSeries) -> Result<HeckeVanishing, HlsError> {
    let h = hecke_numerator(s)?;
    let coeffs = h.coefficients_in(Var::big_x());
    let top = (1i64 << s.n) - 2;
    let degree = coeffs.keys().next_back().map(|&d| d as i64).unwrap_or(0);
    let zero_at = |d: i64| coeffs.get(&(d as i32)).map_or(true, |p| p.is_zero());
    Ok(HeckeVanishing {
        degree,
        degree_ok: degree == top,
        linear_zero: zero_at(1),
        second_highest_but_one_zero: top < 3 || zero_at(top - 1),
    })
}

/// `H^num(1/Y, 1/x, 1/X) = (-1)^{n+1} Y^{-binom(n,2)} (x_1..x_n)^{1 - 2^{n-1}} X^{2 - 2^n} H^num(Y, x, X)`.
pub fn hecke_palindromic(s: &HlsSeries) -> Result<bool, HlsError> {
    let n = s.n;
    let h = hecke_numerator(s)?;
    let mut sub = Subst::new();
    for v in [Var::y(), Var::big_x()].into_iter().chain((1..=n).map(Var::lx)) {
        sub.set(v, 1, Monomial::var(v).inverse());
    }
    let lhs = h.substitute(&sub)?;
    let e = 1 - (1i32 << (n - 1));
    let m = Monomial::from_pairs(
        [(Var::y(), -((n * (n - 1) / 2) as i32)), (Var::big_x(), 2 - (1i32 << n))]
            .into_iter()
            .chain((1..=n).map(|i| (Var::lx(i), e))),
    );
    Ok(lhs == h.mul_monomial(&m).scale(&sign(n + 1)))
}

fn upsilon(n: usize, i: usize, j: usize) -> Monomial {
    let j = j as i32;
    if i == n {
        Monomial::from_pairs([(Var::lx(j as usize), 1), (Var::ly(1), j)])
    } else {
        let mut pairs = vec![(Var::ly(n - i + 1), j)];
        if n - i > 0 {
            pairs.push((Var::ly(n - i), -j));
        }
        Monomial::from_pairs(pairs)
    }
}

/// The Hermite-Smith series equals the intersection affine Schubert series under `Upsilon_n`.
pub fn upsilon_check(s: &HlsSeries) -> Result<bool, HlsError> {
    let n = s.n;
    let mut sub = Subst::new();
    for i in 1..=n {
        for j in 1..=i {
            sub.set(Var::z(i, j), 1, upsilon(n, i, j));
        }
    }
    let via = affine_schubert(s, AffineKind::Intersection)?.substitute(&sub)?;
    Ok(rat_equal(&via, &hermite_smith(s)?))
}

/// The symplectic integral against its descent form over `S_n`.
pub fn bgs_check(s: &HlsSeries) -> Result<bool, HlsError> {
    Ok(rat_equal(&symplectic_integral(s)?, &bgs_form(s.n)))
}

/// `I_n(Y, Z) = HLS_n(Y, (Y^{d(n,[n]-C)} Z_{#C}))`.
pub fn igusa_check(s: &HlsSeries) -> Result<bool, HlsError> {
    Ok(rat_equal(&igusa(s.n), &igusa_recipe(s.n).apply(s)?))
}

/// Chain sum over containment flags against `HLS_n(1, X)`.
pub fn weak_order_check(s: &HlsSeries) -> Result<bool, HlsError> {
    let at_one = SubstitutionRecipe::new("weak", s.n, (BigInt::one(), Monomial::one()), |c| {
        Monomial::var(Var::x_set(c))
    })
    .apply(s)?;
    Ok(rat_equal(&weak_order_zeta(s.n)?, &at_one))
}

/// `zeta_{Z^n,p}` three ways: the Igusa form, the Hermite-Smith form, and
/// the product of shifted Riemann factors, with `u = p^{-s}` and `q = p`.
pub fn zeta_check(s: &HlsSeries) -> Result<bool, HlsError> {
    let n = s.n;
    let u = Var::u();
    let product = RatFunc::new(
        Poly::one(),
        (0..n).map(|i| Monomial::from_pairs([(Var::q(), i as i32), (u, 1)])).collect(),
    )?;
    let mut sub = Subst::new();
    sub.set(Var::y(), 1, Monomial::from_pairs([(Var::q(), -1)]));
    for i in 1..=n {
        sub.set(Var::zi(i), 1, Monomial::from_pairs([(Var::q(), (i * (n - i)) as i32), (u, i as i32)]));
    }
    let via_igusa = igusa(n).substitute(&sub)?;
    let mut hs_sub = Subst::new();
    for i in 1..=n {
        hs_sub.set(Var::lx(i), 1, Monomial::from_pairs([(u, i as i32)]));
        hs_sub.set(Var::ly(i), 1, Monomial::one());
    }
    let via_hs = hermite_smith(s)?.substitute(&hs_sub)?;
    Ok(rat_equal(&via_igusa, &product) && rat_equal(&via_hs, &product))
}
