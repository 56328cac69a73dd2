use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{cells, check_budget, lattices_in_cell, OracleError};
use crate::algebra::{Monomial, Poly, RatFunc, Subst, Var};
use crate::hls::hls_series;
use crate::par::{self, Strategy};
use crate::special::{affine_schubert, hermite_smith, AffineKind};
use crate::tableaux::{bounded_tableaux, Partition, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusKey {
    pub intersection: Tableau,
    pub projection: Tableau,
    pub delta: Vec<usize>,
    pub smith_type: Partition,
}

/// Exact counts of all sublattices of index at most `p^bound`.
#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    pub p: u64,
    pub bound: usize,
    pub counts: BTreeMap<CensusKey, u64>,
    /// Lattices whose flags or Hermite composition broke an invariant.
    pub invariant_failures: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupBy {
    Tableau,
    Delta,
    Type,
    All,
}

impl FromStr for GroupBy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tableau" => Ok(GroupBy::Tableau),
            "delta" => Ok(GroupBy::Delta),
            "type" => Ok(GroupBy::Type),
            "all" => Ok(GroupBy::All),
            _ => Err(format!("unknown grouping {s:?}")),
        }
    }
}

pub fn census(n: usize, p: u64, bound: usize) -> Result<Census, OracleError> {
    census_with(n, p, bound, Strategy::default())
}

pub fn census_with(n: usize, p: u64, bound: usize, strategy: Strategy) -> Result<Census, OracleError> {
    check_budget(n, p, bound)?;
    let parts = par::map(strategy, &cells(n, bound), |cell| {
        let mut counts = BTreeMap::new();
        let mut bad = 0u64;
        for l in lattices_in_cell(p, cell) {
            match l.record() {
                Ok(r) if r.invariants_hold() => {
                    let key = CensusKey {
                        intersection: r.intersection_tableau,
                        projection: r.projection_tableau,
                        delta: r.delta,
                        smith_type: r.smith_type,
                    };
                    *counts.entry(key).or_insert(0u64) += 1;
                }
                _ => bad += 1,
            }
        }
        (counts, bad)
    });
    let mut counts = BTreeMap::new();
    let mut invariant_failures = 0;
    for (part, bad) in parts {
        invariant_failures += bad;
        for (k, c) in part {
            *counts.entry(k).or_insert(0) += c;
        }
    }
    Ok(Census { n, p, bound, counts, invariant_failures })
}

impl Census {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn by_intersection(&self) -> BTreeMap<Tableau, u64> {
        let mut m = BTreeMap::new();
        for (k, c) in &self.counts {
            *m.entry(k.intersection.clone()).or_insert(0) += c;
        }
        m
    }

    pub fn by_projection(&self) -> BTreeMap<Tableau, u64> {
        let mut m = BTreeMap::new();
        for (k, c) in &self.counts {
            *m.entry(k.projection.clone()).or_insert(0) += c;
        }
        m
    }

    /// Counts merged over the fields not selected, in a deterministic order.
    pub fn grouped(&self, by: GroupBy) -> Vec<(serde_json::Value, u64)> {
        type Key = (Option<(Tableau, Tableau)>, Option<Vec<usize>>, Option<Partition>);
        let mut m: BTreeMap<Key, u64> = BTreeMap::new();
        for (k, c) in &self.counts {
            let t = matches!(by, GroupBy::Tableau | GroupBy::All).then(|| (k.intersection.clone(), k.projection.clone()));
            let d = matches!(by, GroupBy::Delta | GroupBy::All).then(|| k.delta.clone());
            let l = matches!(by, GroupBy::Type | GroupBy::All).then(|| k.smith_type.clone());
            *m.entry((t, d, l)).or_insert(0) += c;
        }
        m.into_iter()
            .map(|((t, d, l), c)| {
                let mut obj = serde_json::Map::new();
                if let Some((a, b)) = t {
                    obj.insert("intersection".into(), a.to_json());
                    obj.insert("projection".into(), b.to_json());
                }
                if let Some(d) = d {
                    obj.insert("delta".into(), serde_json::json!(d));
                }
                if let Some(l) = l {
                    obj.insert("type".into(), serde_json::json!(l.parts()));
                }
                (serde_json::Value::Object(obj), c)
            })
            .collect()
    }

    /// CSV with columns `tableau-json,delta,type,count`; unselected columns are empty.
    pub fn to_csv(&self, by: GroupBy) -> String {
        let mut out = String::from("tableau-json,delta,type,count\n");
        for (k, c) in self.grouped(by) {
            let tab = match (k.get("intersection"), k.get("projection")) {
                (Some(a), Some(b)) => serde_json::json!({"intersection": a, "projection": b}).to_string(),
                _ => String::new(),
            };
            let field = |name: &str| k.get(name).map(|v| v.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{}\n", quote(&tab), quote(&field("delta")), quote(&field("type")), c));
        }
        out
    }
}

fn quote(s: &str) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!("\"{}\"", s.replace('"', "\"\""))
    }
}

/// Value of a Laurent polynomial in `q` at an integer, if it is an integer.
pub(crate) fn eval_q(terms: &[(i32, BigInt)], p: u64) -> Option<BigInt> {
    let lo = terms.iter().map(|t| t.0).min().unwrap_or(0).min(0);
    let pb = BigInt::from(p);
    let num: BigInt = terms.iter().map(|(e, c)| c * pb.pow((e - lo) as u32)).sum();
    let den = pb.pow((-lo) as u32);
    (&num % &den).is_zero().then(|| num / den)
}

pub(crate) fn q_terms(poly: &Poly) -> Vec<(i32, BigInt)> {
    poly.terms().map(|(m, c)| (m.exp(Var::q()), c.clone())).collect()
}

fn q_monomial(e: i32) -> Monomial {
    Monomial::from_pairs([(Var::q(), e)])
}

/// `q^{D_n(T)} Phi_T(1/q)`.
pub fn f_in(t: &Tableau) -> Poly {
    let phi = t.leg_polynomial().substitute(&Subst::new().with(Var::y(), 1, q_monomial(-1))).expect("monomial image");
    phi.mul_monomial(&q_monomial(t.schubert_sum(t.n()) as i32))
}

/// `q^{compD_n(T)} Phi_T(1/q)`.
pub fn f_pr(t: &Tableau) -> Poly {
    let phi = t.leg_polynomial().substitute(&Subst::new().with(Var::y(), 1, q_monomial(-1))).expect("monomial image");
    phi.mul_monomial(&q_monomial(t.comp_schubert_sum(t.n()) as i32))
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub compared: usize,
    pub mismatches: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.compared > 0
    }

    pub(crate) fn check(&mut self, good: bool, what: impl FnOnce() -> String) {
        self.compared += 1;
        if !good && self.mismatches.len() < 20 {
            self.mismatches.push(what());
        }
    }
}

/// Lattice counts by intersection and projection tableau against the closed
/// formulas, over every tableau of size at most `bound`.
pub fn verify_fnt(c: &Census) -> CheckReport {
    let mut r = CheckReport::default();
    r.check(c.invariant_failures == 0, || format!("{} lattices broke an invariant", c.invariant_failures));
    let (inter, proj) = (c.by_intersection(), c.by_projection());
    let count = |m: &BTreeMap<Tableau, u64>, t: &Tableau| BigInt::from(*m.get(t).unwrap_or(&0));
    for t in bounded_tableaux(c.n, c.bound).into_iter().filter(|t| t.shape().size() <= c.bound) {
        let want_in = eval_q(&q_terms(&f_in(&t)), c.p);
        r.check(want_in == Some(count(&inter, &t)), || format!("in {t}: {:?} vs {}", want_in, count(&inter, &t)));
        let want_pr = eval_q(&q_terms(&f_pr(&t)), c.p);
        r.check(want_pr == Some(count(&proj, &t)), || format!("pr {t}: {:?} vs {}", want_pr, count(&proj, &t)));
        let comp = t.complement();
        r.check(f_pr(&t) == f_in(&comp), || format!("formula duality at {t}"));
        if comp.shape().size() <= c.bound {
            r.check(count(&proj, &t) == count(&inter, &comp), || format!("census duality at {t}"));
        }
    }
    let total_in: u64 = inter.values().sum();
    r.check(total_in == c.total(), || "tableau counts do not add up".into());
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    AffsIn,
    AffsPr,
    Hs,
}

impl FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "affS_in" | "affs-in" => Ok(Target::AffsIn),
            "affS_pr" | "affs-pr" => Ok(Target::AffsPr),
            "HS" | "hs" => Ok(Target::Hs),
            _ => Err(format!("unknown series {s:?}")),
        }
    }
}

fn flag_monomial(t: &Tableau) -> Monomial {
    let flag = t.flag();
    Monomial::from_pairs(
        (1..=t.n()).flat_map(|i| flag[i].inc(i).into_iter().enumerate().map(move |(j, e)| (Var::z(i, j + 1), e as i32))),
    )
}

fn census_monomial(n: usize, k: &CensusKey, target: Target) -> Monomial {
    match target {
        Target::AffsIn => flag_monomial(&k.intersection),
        Target::AffsPr => flag_monomial(&k.projection),
        Target::Hs => Monomial::from_pairs(
            k.smith_type
                .inc(n)
                .into_iter()
                .enumerate()
                .map(|(j, e)| (Var::lx(j + 1), e as i32))
                .chain(k.delta.iter().enumerate().map(|(i, &d)| (Var::ly(i + 1), d as i32))),
        ),
    }
}

/// Weighting that makes the degree of a term equal to the index exponent.
fn weighted(f: &RatFunc, n: usize, target: Target) -> RatFunc {
    let mut s = Subst::new();
    for j in 1..=n {
        let v = if target == Target::Hs { Var::lx(j) } else { Var::z(n, j) };
        s.set(v, 1, Monomial::from_pairs([(v, 1), (Var::u(), j as i32)]));
    }
    f.substitute(&s).expect("monomial images")
}

/// Coefficients of the series, expanded to index `p^bound` with symbolic `q`
/// and then evaluated at `q = p`, against the census.
pub fn verify_series_coefficients(c: &Census, target: Target) -> Result<CheckReport, OracleError> {
    let s = hls_series(c.n).map_err(|e| OracleError::Series(e.to_string()))?;
    let f = match target {
        Target::AffsIn => affine_schubert(&s, AffineKind::Intersection),
        Target::AffsPr => affine_schubert(&s, AffineKind::Projection),
        Target::Hs => hermite_smith(&s),
    }
    .expect("substitution into a bounded series");
    let series = weighted(&f, c.n, target).series_expand(&|v| v == Var::u(), c.bound as i64).expect("expandable");
    let mut laurent: HashMap<Monomial, Vec<(i32, BigInt)>> = HashMap::new();
    for (m, coef) in series.terms() {
        let key = m.restrict(&|v| v != Var::u() && v != Var::q());
        laurent.entry(key).or_default().push((m.exp(Var::q()), coef.clone()));
    }
    let mut expanded: HashMap<Monomial, BigInt> = HashMap::new();
    let mut r = CheckReport::default();
    for (m, terms) in laurent {
        match eval_q(&terms, c.p) {
            Some(v) if v.is_zero() => {}
            Some(v) => {
                expanded.insert(m, v);
            }
            None => r.check(false, || format!("non-integral coefficient at {m}")),
        }
    }
    let mut counted: HashMap<Monomial, BigInt> = HashMap::new();
    for (k, cnt) in &c.counts {
        *counted.entry(census_monomial(c.n, k, target)).or_insert_with(BigInt::zero) += *cnt;
    }
    r.check(counted.values().sum::<BigInt>() == BigInt::from(c.total()), || "census total".into());
    for (m, v) in &counted {
        let e = expanded.get(m).cloned().unwrap_or_default();
        r.check(&e == v, || format!("{m}: series {e}, census {v}"));
    }
    for (m, e) in &expanded {
        r.check(counted.contains_key(m), || format!("{m}: series {e}, census 0"));
    }
    r.check(expanded.get(&Monomial::one()) == Some(&BigInt::one()), || "constant term".into());
    Ok(r)
}
