use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::var::Var;
use super::AlgebraError;

/// A Laurent monomial: sorted `(var, exponent)` pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial(vec![(v, e)]).normalized());
        }
        m
    }

    fn normalized(mut self) -> Monomial {
        self.0.retain(|&(_, e)| e != 0);
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> i32 {
        match self.0.binary_search_by(|p| p.0.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn degree_in(&self, grading: &dyn Fn(Var) -> bool) -> i64 {
        self.0.iter().filter(|p| grading(p.0)).map(|&(_, e)| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&(_, e)| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Drop the variables rejected by `keep`.
    pub fn restrict(&self, keep: &dyn Fn(Var) -> bool) -> Monomial {
        Monomial(self.0.iter().copied().filter(|p| keep(p.0)).collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// smallest variable where the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{}^{{{}}}", v, e) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Images for a substitution: each variable maps to `coeff * monomial`.
/// Variables without an entry map to themselves.
#[derive(Clone, Default, Debug)]
pub struct Subst {
    map: HashMap<Var, (BigInt, Monomial)>,
}

impl Subst {
    pub fn new() -> Subst {
        Subst::default()
    }

    pub fn set(&mut self, v: Var, coeff: impl Into<BigInt>, m: Monomial) -> &mut Self {
        self.map.insert(v, (coeff.into(), m));
        self
    }

    pub fn with(mut self, v: Var, coeff: impl Into<BigInt>, m: Monomial) -> Self {
        self.set(v, coeff, m);
        self
    }

    pub fn get(&self, v: Var) -> Option<&(BigInt, Monomial)> {
        self.map.get(&v)
    }
}

/// A sparse Laurent polynomial with arbitrary-precision coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Poly {
        Poly::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Poly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// `1 - m`.
    pub fn one_minus(m: &Monomial) -> Poly {
        Poly::one() - Poly::term(1, m.clone())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Poly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Poly::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Poly {
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keep the terms whose grading degree is at most `bound`.
    pub fn truncate(&self, grading: &dyn Fn(Var) -> bool, bound: i64) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(grading) <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated to grading degree at most `bound`, assuming both
    /// factors only carry nonnegative grading degrees.
    pub fn mul_truncated(&self, other: &Poly, grading: &dyn Fn(Var) -> bool, bound: i64) -> Poly {
        let a: Vec<(&Monomial, &BigInt, i64)> =
            self.terms.iter().map(|(m, c)| (m, c, m.degree_in(grading))).collect();
        let b: Vec<(&Monomial, &BigInt, i64)> =
            other.terms.iter().map(|(m, c)| (m, c, m.degree_in(grading))).collect();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for &(ma, ca, da) in &a {
            for &(mb, cb, db) in &b {
                if da + db <= bound {
                    *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        Poly::from_map(acc)
    }

    pub fn substitute(&self, s: &Subst) -> Result<Poly, AlgebraError> {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        'terms: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = Monomial::one();
            for &(v, e) in m.pairs() {
                match s.get(v) {
                    None => mono = mono.mul(&Monomial(vec![(v, e)])),
                    Some((k, img)) => {
                        if k.is_zero() {
                            if e < 0 {
                                return Err(AlgebraError::ZeroToNegativePower(v.to_string()));
                            }
                            continue 'terms;
                        }
                        if e < 0 && !k.abs().is_one() {
                            return Err(AlgebraError::NonIntegralImage(v.to_string()));
                        }
                        coeff *= num_traits::pow(k.clone(), e.unsigned_abs() as usize);
                        mono = mono.mul(&img.pow(e));
                    }
                }
            }
            *acc.entry(mono).or_insert_with(BigInt::zero) += coeff;
        }
        Ok(Poly::from_map(acc))
    }

    /// Evaluate every variable at an integer; negative exponents are rejected
    /// unless the value is a unit.
    pub fn eval_int(&self, values: &dyn Fn(Var) -> Option<BigInt>) -> Result<Poly, AlgebraError> {
        let mut s = Subst::new();
        for v in self.vars() {
            if let Some(val) = values(v) {
                s.set(v, val, Monomial::one());
            }
        }
        self.substitute(&s)
    }

    /// Split by the exponent of `v`: `self = sum_k coeff_k * v^k`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, Poly> {
        let mut out: BTreeMap<i32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let rest = m.restrict(&|w| w != v);
            out.entry(e).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    /// Exact division by `1 - v`, if it divides.
    pub fn div_one_minus(&self, v: Var) -> Option<Poly> {
        // With p = sum_k c_k v^k and p = (1 - v) r, r_k = sum_{j<=k} c_j.
        let by = self.coefficients_in(v);
        let (lo, hi) = match (by.keys().next(), by.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return Some(Poly::zero()),
        };
        let mut run = Poly::zero();
        let mut out = Poly::zero();
        for k in lo..=hi {
            if let Some(c) = by.get(&k) {
                run = &run + c;
            }
            if k < hi {
                out = &out + &run.mul_monomial(&Monomial(vec![(v, k)]).normalized());
            }
        }
        if run.is_zero() {
            Some(out)
        } else {
            None
        }
    }

    /// Coefficient list of a polynomial in the single variable `v` with
    /// integer coefficients and nonnegative exponents.
    pub fn univariate(&self, v: Var) -> Option<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < 0 || m.pairs().len() > usize::from(e != 0) {
                return None;
            }
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] += c;
        }
        Some(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[BigInt]) -> Poly {
        Poly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial(vec![(v, k as i32)]).normalized(), c.clone())),
        )
    }

    pub fn min_degree_in(&self, grading: &dyn Fn(Var) -> bool) -> Option<i64> {
        self.terms.keys().map(|m| m.degree_in(grading)).min()
    }

    pub fn max_degree_in(&self, grading: &dyn Fn(Var) -> bool) -> Option<i64> {
        self.terms.keys().map(|m| m.degree_in(grading)).max()
    }

    /// JSON form: `[{"coeff": "...", "exps": {name: e}}]` in ascending order.
    pub fn to_json(&self) -> serde_json::Value {
        let arr = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: serde_json::Map<String, serde_json::Value> =
                    m.pairs().iter().map(|&(v, e)| (v.to_string(), e.into())).collect();
                serde_json::json!({"coeff": c.to_string(), "exps": exps})
            })
            .collect();
        serde_json::Value::Array(arr)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&a.to_string());
                continue;
            }
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            let parts: Vec<String> = m
                .pairs()
                .iter()
                .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{}^{{{}}}", v, e) })
                .collect();
            out.push_str(&parts.join(""));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_latex())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Poly { terms }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Poly::from_map(acc)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for p in iter {
            for (m, c) in p.terms {
                *acc.entry(m).or_insert_with(BigInt::zero) += c;
            }
        }
        Poly::from_map(acc)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}
