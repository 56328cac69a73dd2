use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hls_core::algebra::{Monomial, Poly, Subst, Var};
use hls_core::tableaux::*;

fn all_small_tableaux() -> impl Iterator<Item = Tableau> {
    (1..=4).flat_map(|n| bounded_tableaux(n, 4))
}

#[test]
fn leg_polynomial_is_psi_of_pattern() {
    let mut seen = 0;
    for t in all_small_tableaux() {
        assert_eq!(t.leg_polynomial(), GtPattern::from_tableau(&t).psi(), "{t}");
        seen += 1;
    }
    let by_patterns: usize = (1..=4)
        .map(|n| {
            (0..=4 * n)
                .flat_map(|m| partitions_of(m, 4, n))
                .map(|parts| patterns_with_top(&Partition::new(&parts).unwrap(), n).len())
                .sum::<usize>()
        })
        .sum();
    assert_eq!(seen, by_patterns);
    assert_eq!(seen, 3106);
}

#[test]
fn leg_polynomial_times_phantom_is_dyck_polynomial() {
    for t in all_small_tableaux() {
        assert_eq!(&t.leg_polynomial() * &phantom_factor(&t), dyck_word(&t).polynomial(), "{t}");
    }
}

fn random_tableau(rng: &mut StdRng) -> Tableau {
    let n = rng.gen_range(1..=6);
    let width = rng.gen_range(0..=8);
    let order = subsets_in_order(n);
    let mut cols: Vec<Subset> = Vec::new();
    for _ in 0..width {
        let choices: Vec<Subset> = order.iter().copied().filter(|&c| cols.last().map_or(true, |&l| gale_leq(l, c))).collect();
        cols.push(choices[rng.gen_range(0..choices.len())]);
    }
    Tableau::from_masks(n, cols).unwrap()
}

#[test]
fn pattern_round_trip() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let t = random_tableau(&mut rng);
        let a = GtPattern::from_tableau(&t);
        let again = GtPattern::new(a.rows().to_vec()).unwrap();
        assert_eq!(again.to_tableau(), t);
        assert_eq!(a.flag(), t.flag());
        assert_eq!(a.weight(), t.weight());
    }
}

fn without_full_columns(t: &Tableau) -> Tableau {
    let full = full_set(t.n());
    Tableau::from_masks(t.n(), t.columns().iter().copied().filter(|&c| c != full).collect()).unwrap()
}

fn dual_flag(t: &Tableau) -> Vec<Partition> {
    let flag = t.flag();
    let top = flag[t.n()].first();
    (0..=t.n()).map(|i| Partition::from_parts((1..=i).map(|j| top - flag[i].part(j)).collect())).collect()
}

#[test]
fn complements() {
    for n in 1..=4 {
        for t in reduced_tableaux(n) {
            let c = t.complement();
            assert!(c.is_reduced());
            assert_eq!(c.complement(), without_full_columns(&t), "{t}");
            assert_eq!(c.leg_polynomial(), t.leg_polynomial(), "{t}");
            assert_eq!(Tableau::from_flag(n, &dual_flag(&t)).unwrap(), c, "{t}");
        }
    }
    for t in all_small_tableaux() {
        assert_eq!(t.complement().leg_polynomial(), t.leg_polynomial(), "{t}");
    }
}

#[test]
fn schubert_sums() {
    for t in all_small_tableaux() {
        let n = t.n();
        let flag = t.flag();
        for k in 1..n {
            let pair = StripPair::new(k + 1, flag[k + 1].clone(), flag[k].clone()).unwrap();
            assert_eq!(t.schubert_sum(k + 1) - t.schubert_sum(k), pair.geometry().gap, "{t} k={k}");
        }
        let conj = t.shape().conjugate();
        let want: usize = conj.parts().iter().map(|&l| l * (n - l)).sum();
        assert_eq!(t.schubert_sum(n) + t.comp_schubert_sum(n), want, "{t}");
    }
}

fn partitions_of(m: usize, max: usize, len: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    if len == 0 {
        return vec![];
    }
    (1..=m.min(max))
        .rev()
        .flat_map(|a| {
            partitions_of(m - a, a, len - 1).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

fn permute(p: &Poly, perm: &[usize]) -> Poly {
    let mut s = Subst::new();
    for (i, &j) in perm.iter().enumerate() {
        s.set(Var::lx(i + 1), 1, Monomial::var(Var::lx(j + 1)));
    }
    p.substitute(&s).unwrap()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i32)>) {
        if cur.len() == used.len() {
            let inv = (0..cur.len()).flat_map(|i| (i + 1..cur.len()).map(move |j| (i, j))).filter(|&(i, j)| cur[i] > cur[j]).count();
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn x(i: usize) -> Poly {
    Poly::var(Var::lx(i))
}

/// `v_lambda(t) * Vandermonde * P_lambda = sum_w sgn(w) w(x^lambda prod_{i<j} (x_i - t x_j))`.
fn symmetrization_holds(lambda: &Partition, n: usize) -> bool {
    let t = Poly::var(Var::t(1));
    let mut f = Poly::term(1, Monomial::from_pairs((0..n).map(|i| (Var::lx(i + 1), lambda.part(i + 1) as i32))));
    let mut vandermonde = Poly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            f = &f * &(&x(i) - &(&t * &x(j)));
            vandermonde = &vandermonde * &(&x(i) - &x(j));
        }
    }
    let mut rhs = Poly::zero();
    for (perm, sign) in permutations(n) {
        rhs = &rhs + &permute(&f, &perm).scale(&sign.into());
    }
    let mut v = Poly::one();
    let padded = lambda.padded(n);
    let mut i = 0;
    while i < n {
        let m = padded[i..].iter().take_while(|&&x| x == padded[i]).count();
        for k in 1..=m {
            let tk = Poly::from_univariate(Var::t(1), &(0..k).map(|_| 1.into()).collect::<Vec<_>>());
            v = &v * &tk;
        }
        i += m;
    }
    let lhs = &(&v * &vandermonde) * &hall_littlewood(lambda, n, Var::t(1)).unwrap();
    lhs == rhs
}

#[test]
fn hall_littlewood_properties() {
    let n = 3;
    let at = |p: &Poly, c: i64| p.substitute(&Subst::new().with(Var::t(1), c, Monomial::one())).unwrap();
    for m in 0..=6 {
        for parts in partitions_of(m, m, n) {
            let lambda = Partition::new(&parts).unwrap();
            let hl = hall_littlewood(&lambda, n, Var::t(1)).unwrap();
            for (perm, _) in permutations(n) {
                assert_eq!(permute(&hl, &perm), hl, "{lambda}");
            }
            assert_eq!(at(&hl, 0), schur(&lambda, n).unwrap(), "{lambda}");
            assert_eq!(at(&hl, 1), monomial_symmetric(&lambda, n).unwrap(), "{lambda}");
            assert!(symmetrization_holds(&lambda, n), "{lambda}");
        }
    }
    assert!(symmetrization_holds(&Partition::new(&[2]).unwrap(), 2));
}
