use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::census::{eval_q, q_terms, CheckReport};
use super::{cells, check_budget, enumerate_sublattices, lattices_in_cell, HnfLattice, OracleError};
use crate::tableaux::{Partition, StripPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    /// `L ∩ V_{n-1} = L0`.
    Intersection,
    /// Image in the first `n-1` coordinates is `L0`.
    Projection,
}

fn restrict(l: &HnfLattice, kind: ExtensionKind) -> HnfLattice {
    let m = l.n() - 1;
    match kind {
        ExtensionKind::Intersection => l.intersection(m),
        ExtensionKind::Projection => l.projection(m),
    }
}

/// Exhaustive count of `L <= Z_p^n` of type `lambda` restricting to `base`.
pub fn count_extensions(
    n: usize,
    p: u64,
    base: &HnfLattice,
    lambda: &Partition,
    kind: ExtensionKind,
) -> Result<u64, OracleError> {
    if base.n() + 1 != n || base.p() != p {
        return Err(OracleError::NotHnf("base lattice must have rank n - 1 over the same prime".into()));
    }
    let k = lambda.size();
    check_budget(n, p, k)?;
    let mut count = 0;
    for cell in cells(n, k).into_iter().filter(|c| c.iter().sum::<usize>() == k) {
        count += lattices_in_cell(p, &cell).filter(|l| &restrict(l, kind) == base && &l.smith_type() == lambda).count();
    }
    Ok(count as u64)
}

/// Counts of `(restriction, type)` over all lattices of index at most `p^bound`.
pub fn extension_counts(
    n: usize,
    p: u64,
    bound: usize,
    kind: ExtensionKind,
) -> Result<BTreeMap<(HnfLattice, Partition), u64>, OracleError> {
    let mut m = BTreeMap::new();
    for l in enumerate_sublattices(n, p, bound)? {
        *m.entry((restrict(&l, kind), l.smith_type())).or_insert(0) += 1;
    }
    Ok(m)
}

fn partitions(n: usize, bound: usize) -> Vec<Partition> {
    fn rec(max: usize, left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_parts(cur.clone()));
        if slots == 0 {
            return;
        }
        for a in 1..=max.min(left) {
            cur.push(a);
            rec(a, left - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound, bound, n, &mut Vec::new(), &mut out);
    out
}

/// Every base lattice of index at most `p^bound` and every type of size at
/// most `bound`: the exhaustive count equals the closed formula on host
/// pairs and vanishes elsewhere.
pub fn verify_extensions(n: usize, p: u64, bound: usize, kind: ExtensionKind) -> Result<CheckReport, OracleError> {
    let counts = extension_counts(n, p, bound, kind)?;
    let mut r = CheckReport::default();
    for base in enumerate_sublattices(n - 1, p, bound)? {
        let mu = base.smith_type();
        for lambda in partitions(n, bound) {
            let got = BigInt::from(*counts.get(&(base.clone(), lambda.clone())).unwrap_or(&0));
            let want = match StripPair::new(n, lambda.clone(), mu.clone()) {
                Ok(pair) if lambda.contains(&mu) => {
                    let f = match kind {
                        ExtensionKind::Intersection => pair.ext_in(),
                        ExtensionKind::Projection => pair.ext_pr(),
                    };
                    eval_q(&q_terms(&f), p)
                }
                _ => Some(BigInt::from(0)),
            };
            r.check(want.as_ref() == Some(&got), || format!("{kind:?} {base:?} {lambda}: {want:?} vs {got}"));
        }
    }
    Ok(r)
}
