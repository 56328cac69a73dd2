use std::fmt;

use super::tableau::{bracket_product, elements, Tableau};
use super::TableauError;
use crate::algebra::Poly;

/// A Dyck word; `false` is an up-step `0`, `true` a down-step `1`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DyckWord(Vec<bool>);

impl DyckWord {
    pub fn new(steps: Vec<bool>) -> Result<DyckWord, TableauError> {
        let mut h: i64 = 0;
        for &s in &steps {
            h += if s { -1 } else { 1 };
            if h < 0 {
                return Err(TableauError::NotDyck);
            }
        }
        if h != 0 {
            return Err(TableauError::NotDyck);
        }
        Ok(DyckWord(steps))
    }

    pub fn parse(s: &str) -> Result<DyckWord, TableauError> {
        let steps: Result<Vec<bool>, _> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '.')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(TableauError::NotDyck),
            })
            .collect();
        DyckWord::new(steps?)
    }

    pub fn steps(&self) -> &[bool] {
        &self.0
    }

    /// `(peaks, valleys)` altitudes over the maximal `0^l 1^m` blocks.
    pub fn peaks_valleys(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut tp, mut bt) = (Vec::new(), Vec::new());
        let mut h = 0usize;
        let mut i = 0;
        let w = &self.0;
        while i < w.len() {
            while i < w.len() && !w[i] {
                h += 1;
                i += 1;
            }
            tp.push(h);
            while i < w.len() && w[i] {
                h -= 1;
                i += 1;
            }
            bt.push(h);
        }
        (tp, bt)
    }

    /// `P(w) = prod [tp_k]! / [bt_k]!` with `[m] = 1 - Y^m`.
    pub fn polynomial(&self) -> Poly {
        let (tp, bt) = self.peaks_valleys();
        let top = tp.iter().chain(bt.iter()).copied().max().unwrap_or(0);
        let mut mult = vec![0i64; top + 1];
        for &p in &tp {
            for m in mult.iter_mut().take(p + 1).skip(1) {
                *m += 1;
            }
        }
        for &v in &bt {
            for m in mult.iter_mut().take(v + 1).skip(1) {
                *m -= 1;
            }
        }
        let mut exps = Vec::new();
        for (e, &k) in mult.iter().enumerate() {
            assert!(k >= 0, "valleys of a Dyck word lie below its peaks");
            exps.extend(std::iter::repeat(e).take(k as usize));
        }
        bracket_product(&exps)
    }

    pub fn concat(&self, other: &DyckWord) -> DyckWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        DyckWord(v)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", if s { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// `[0]! [1]! ... `: `prod_{j<=m} (1 - Y^j)`.
pub fn bracket_factorial(m: usize) -> Poly {
    bracket_product(&(1..=m).collect::<Vec<_>>())
}

fn pair_word(a: u32, b: u32) -> DyckWord {
    let (ca, cb) = (a & !b, b & !a);
    let mut items: Vec<(usize, bool)> = elements(ca).into_iter().map(|x| (x, false)).collect();
    items.extend(elements(cb).into_iter().map(|x| (x, true)));
    items.sort_unstable();
    let mut steps: Vec<bool> = items.into_iter().map(|p| p.1).collect();
    let extra = (ca.count_ones() - cb.count_ones()) as usize;
    steps.extend(std::iter::repeat(true).take(extra));
    DyckWord::new(steps).expect("the tableau condition yields a Dyck word")
}

/// The Dyck word of a tableau: concatenation over adjacent column pairs.
pub fn dyck_word(t: &Tableau) -> DyckWord {
    t.columns().windows(2).fold(DyckWord::default(), |w, p| w.concat(&pair_word(p[0], p[1])))
}

/// `prod_s [#C_s - #C_{s+1}]!`.
pub fn phantom_factor(t: &Tableau) -> Poly {
    t.columns()
        .windows(2)
        .map(|p| bracket_factorial((p[0].count_ones() - p[1].count_ones()) as usize))
        .product()
}
