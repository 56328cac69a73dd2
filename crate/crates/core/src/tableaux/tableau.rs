use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::TableauError;
use crate::algebra::{Monomial, Poly, Var};

/// Subsets of `[n]` are bitmasks with bit `i-1` standing for `i`.
pub type Subset = u32;

pub fn elements(s: Subset) -> Vec<usize> {
    (0..32).filter(|b| s >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn subset_of(items: &[usize]) -> Subset {
    items.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub fn full_set(n: usize) -> Subset {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// The two-column criterion: `#A >= #B` and `A(k) <= B(k)` for `k <= #B`.
pub fn gale_leq(a: Subset, b: Subset) -> bool {
    if a.count_ones() < b.count_ones() {
        return false;
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        if a.trailing_zeros() > b.trailing_zeros() {
            return false;
        }
        a &= a - 1;
        b &= b - 1;
    }
    true
}

/// Nonempty subsets of `[n]`, larger first, then lexicographically; this is
/// a linear extension of the Gale order.
pub fn subsets_in_order(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (1..=full_set(n)).collect();
    all.sort_by(|&a, &b| b.count_ones().cmp(&a.count_ones()).then_with(|| elements(a).cmp(&elements(b))));
    all
}

pub fn subset_string(s: Subset) -> String {
    elements(s).iter().map(|i| i.to_string()).collect::<Vec<_>>().join("")
}

/// Lengths of the leg sets of the adjacent column pair `(a, b)`, `a` left of `b`.
pub fn pair_legs(a: Subset, b: Subset) -> Vec<usize> {
    let ea = elements(a);
    let eb = elements(b);
    let mut out = Vec::new();
    for (i, &tb) in eb.iter().enumerate() {
        if a >> (tb - 1) & 1 == 1 {
            continue;
        }
        let ta = ea[i];
        assert!(ta < tb, "adjacent columns violate the row condition");
        let leg = ea.iter().filter(|&&x| ta <= x && x <= tb).count();
        out.push(leg);
    }
    out
}

/// `prod (1 - Y^e)` over the given exponents.
pub fn bracket_product(exps: &[usize]) -> Poly {
    let y = Var::y();
    exps.iter()
        .map(|&e| Poly::one_minus(&Monomial::from_pairs([(y, e as i32)])))
        .product()
}

/// Schubert dimension `d(n, C) = sum_{i not in C} i - binom(n - #C + 1, 2)`.
pub fn schubert_dim(n: usize, c: Subset) -> Result<usize, TableauError> {
    if c == 0 || c & !full_set(n) != 0 {
        return Err(TableauError::BadColumn);
    }
    let missing: usize = (1..=n).filter(|&i| c >> (i - 1) & 1 == 0).sum();
    let r = n - c.count_ones() as usize;
    Ok(missing - r * (r + 1) / 2)
}

/// A semistandard tableau stored as its column sets, left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Tableau {
    n: usize,
    cols: Vec<Subset>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn empty(n: usize) -> Tableau {
        Tableau { n, cols: Vec::new() }
    }

    pub fn from_masks(n: usize, cols: Vec<Subset>) -> Result<Tableau, TableauError> {
        let full = full_set(n);
        if cols.iter().any(|&c| c == 0 || c & !full != 0) {
            return Err(TableauError::BadColumn);
        }
        if cols.windows(2).any(|w| !gale_leq(w[0], w[1])) {
            return Err(TableauError::NotSemistandard);
        }
        Ok(Tableau { n, cols })
    }

    pub fn new(n: usize, cols: &[Vec<usize>]) -> Result<Tableau, TableauError> {
        for c in cols {
            if c.windows(2).any(|w| w[0] >= w[1]) || c.iter().any(|&i| i == 0 || i > n) {
                return Err(TableauError::BadColumn);
            }
        }
        Tableau::from_masks(n, cols.iter().map(|c| subset_of(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Subset] {
        &self.cols
    }

    pub fn column_sets(&self) -> Vec<Vec<usize>> {
        self.cols.iter().map(|&c| elements(c)).collect()
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn is_reduced(&self) -> bool {
        self.cols.windows(2).all(|w| w[0] != w[1])
    }

    /// Entry in row `i`, column `j` (both 1-based).
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        let c = *self.cols.get(j.checked_sub(1)?)?;
        elements(c).get(i.checked_sub(1)?).copied()
    }

    /// Row-wise content: `rows[i][j]`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let sets = self.column_sets();
        let h = sets.iter().map(|c| c.len()).max().unwrap_or(0);
        (0..h).map(|i| sets.iter().filter_map(|c| c.get(i).copied()).collect()).collect()
    }

    pub fn from_rows(n: usize, rows: &[Vec<usize>]) -> Result<Tableau, TableauError> {
        let w = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); w];
        for r in rows {
            if r.len() > w {
                return Err(TableauError::NotSemistandard);
            }
            for (j, &x) in r.iter().enumerate() {
                cols[j].push(x);
            }
        }
        Tableau::new(n, &cols)
    }

    /// Shape of the subtableau with entries at most `k`.
    pub fn shape_upto(&self, k: usize) -> Partition {
        let lim = full_set(k);
        let heights: Vec<usize> = self.cols.iter().map(|&c| (c & lim).count_ones() as usize).collect();
        Partition::from_parts(heights).conjugate()
    }

    pub fn shape(&self) -> Partition {
        self.shape_upto(self.n)
    }

    /// `lambda^(0), ..., lambda^(n)`.
    pub fn flag(&self) -> Vec<Partition> {
        (0..=self.n).map(|k| self.shape_upto(k)).collect()
    }

    /// Inverse of [`Tableau::flag`]; `flag[0]` must be empty.
    pub fn from_flag(n: usize, flag: &[Partition]) -> Result<Tableau, TableauError> {
        if flag.len() != n + 1 || !flag[0].is_empty() {
            return Err(TableauError::BadFlag);
        }
        for k in 1..=n {
            if flag[k].len() > k || !flag[k].is_horizontal_strip_over(&flag[k - 1]) {
                return Err(TableauError::BadFlag);
            }
        }
        let w = flag[n].first();
        let mut cols = vec![0u32; w];
        for k in 1..=n {
            for i in 1..=flag[k].len() {
                for col in cols.iter_mut().take(flag[k].part(i)).skip(flag[k - 1].part(i)) {
                    *col |= 1 << (k - 1);
                }
            }
        }
        Tableau::from_masks(n, cols)
    }

    /// Weight: number of entries equal to each `k`.
    pub fn weight(&self) -> Vec<usize> {
        (1..=self.n).map(|k| self.cols.iter().filter(|&&c| c >> (k - 1) & 1 == 1).count()).collect()
    }

    /// Leg lengths over all cells with a right neighbour.
    pub fn legs(&self) -> Vec<usize> {
        self.cols.windows(2).flat_map(|w| pair_legs(w[0], w[1])).collect()
    }

    /// The leg polynomial in `Y`.
    pub fn leg_polynomial(&self) -> Poly {
        bracket_product(&self.legs())
    }

    /// Columns `[n] - C_l, ..., [n] - C_1`, dropping empty ones.
    pub fn complement(&self) -> Tableau {
        let full = full_set(self.n);
        let cols = self.cols.iter().rev().map(|&c| full & !c).filter(|&c| c != 0).collect();
        Tableau { n: self.n, cols }
    }

    /// `D_k(T)`: Schubert dimensions summed over the columns of `T^(k)`.
    pub fn schubert_sum(&self, k: usize) -> usize {
        let lim = full_set(k);
        self.cols
            .iter()
            .map(|&c| c & lim)
            .filter(|&c| c != 0)
            .map(|c| schubert_dim(k, c).expect("column inside [k]"))
            .sum()
    }

    pub fn comp_schubert_sum(&self, k: usize) -> usize {
        self.complement().schubert_sum(k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson { n: self.n, columns: self.column_sets() }).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Tableau, TableauError> {
        let t: TableauJson = serde_json::from_value(v.clone()).map_err(|_| TableauError::BadColumn)?;
        Tableau::new(t.n, &t.columns)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.cols.iter().map(|&c| subset_string(c)).collect();
        write!(f, "[{}]", cols.join("|"))
    }
}

/// The monomial `Z_{n,C}`.
pub fn z_monomial(n: usize, c: Subset) -> Result<Monomial, TableauError> {
    if c == 0 || c & !full_set(n) != 0 {
        return Err(TableauError::BadColumn);
    }
    let mut e = elements(c);
    e.push(n + 1);
    let mut pairs = Vec::new();
    for k in 1..e.len() {
        for row in e[k - 1]..e[k] {
            pairs.push((Var::z(row, k), 1));
        }
    }
    Ok(Monomial::from_pairs(pairs))
}

/// All chains of the Gale order (reduced tableaux), in lexicographic order of
/// column sequences, starting with the empty tableau.
pub fn reduced_tableaux(n: usize) -> Vec<Tableau> {
    let order = subsets_in_order(n);
    let mut out = vec![Tableau::empty(n)];
    let mut stack: Vec<usize> = Vec::new();
    fn walk(order: &[Subset], from: usize, stack: &mut Vec<usize>, n: usize, out: &mut Vec<Tableau>) {
        for j in from..order.len() {
            if let Some(&last) = stack.last() {
                if !gale_leq(order[last], order[j]) {
                    continue;
                }
            }
            stack.push(j);
            out.push(Tableau { n, cols: stack.iter().map(|&i| order[i]).collect() });
            walk(order, j + 1, stack, n, out);
            stack.pop();
        }
    }
    walk(&order, 0, &mut stack, n, &mut out);
    out
}

/// All tableaux with at most `b` columns, in lexicographic order.
pub fn bounded_tableaux(n: usize, b: usize) -> Vec<Tableau> {
    let order = subsets_in_order(n);
    let mut out = vec![Tableau::empty(n)];
    fn walk(order: &[Subset], from: usize, cols: &mut Vec<Subset>, b: usize, n: usize, out: &mut Vec<Tableau>) {
        if cols.len() == b {
            return;
        }
        for j in from..order.len() {
            if let Some(&last) = cols.last() {
                if !gale_leq(last, order[j]) {
                    continue;
                }
            }
            cols.push(order[j]);
            out.push(Tableau { n, cols: cols.clone() });
            walk(order, j, cols, b, n, out);
            cols.pop();
        }
    }
    walk(&order, 0, &mut Vec::new(), b, n, &mut out);
    out
}
