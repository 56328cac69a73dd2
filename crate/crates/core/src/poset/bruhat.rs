//! Signed permutations and a brute-force Bruhat order on the hyperoctahedral group.

use std::collections::{HashMap, HashSet, VecDeque};

use super::PosetError;
use crate::tableaux::{elements, full_set, gale_leq, subsets_in_order, Subset};

/// A signed permutation in window notation: `w(i) = self.0[i - 1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPerm(pub Vec<i32>);

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm((1..=n as i32).collect())
    }

    /// `s_0` negates 1; `s_i` swaps `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> SignedPerm {
        let mut w = SignedPerm::identity(n);
        if i == 0 {
            w.0[0] = -1;
        } else {
            w.0.swap(i - 1, i);
        }
        w
    }

    fn apply(&self, x: i32) -> i32 {
        let v = self.0[(x.unsigned_abs() - 1) as usize];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    /// Composition `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            let sign = if v < 0 { -1 } else { 1 };
            out[(v.unsigned_abs() - 1) as usize] = sign * (i as i32 + 1);
        }
        SignedPerm(out)
    }

    pub fn is_ascending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

/// Word-length function and Bruhat order on `B_n`, computed from
/// the Cayley graph and the reflection relation.
pub struct BruhatOrder {
    pub n: usize,
    pub elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    pub length: Vec<usize>,
    above: Vec<Vec<bool>>,
}

impl BruhatOrder {
    pub fn new(n: usize) -> BruhatOrder {
        let gens: Vec<SignedPerm> = (0..n).map(|i| SignedPerm::simple(n, i)).collect();
        let mut elements = vec![SignedPerm::identity(n)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut length = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let w = elements[i].compose(g);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), elements.len());
                    length.push(length[i] + 1);
                    queue.push_back(elements.len());
                    elements.push(w);
                }
            }
        }
        let mut reflections = HashSet::new();
        for u in &elements {
            for g in &gens {
                reflections.insert(u.compose(g).compose(&u.inverse()));
            }
        }
        let m = elements.len();
        let mut step: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (i, w) in elements.iter().enumerate() {
            for t in &reflections {
                let j = index[&w.compose(t)];
                if length[j] > length[i] {
                    step[i].push(j);
                }
            }
        }
        let mut above = vec![vec![false; m]; m];
        for (i, row) in above.iter_mut().enumerate() {
            let mut stack = vec![i];
            row[i] = true;
            while let Some(a) = stack.pop() {
                for &b in &step[a] {
                    if !row[b] {
                        row[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        BruhatOrder { n, elements, index, length, above }
    }

    pub fn leq(&self, a: &SignedPerm, b: &SignedPerm) -> bool {
        self.above[self.index[a]][self.index[b]]
    }

    pub fn len_of(&self, w: &SignedPerm) -> usize {
        self.length[self.index[w]]
    }

    /// Minimal coset representatives for the parabolic subgroup generated by `s_1, ..., s_{n-1}`.
    pub fn quotient(&self) -> Vec<SignedPerm> {
        self.elements
            .iter()
            .filter(|w| {
                (1..self.n).all(|i| self.len_of(w) < self.len_of(&w.compose(&SignedPerm::simple(self.n, i))))
            })
            .cloned()
            .collect()
    }
}

/// `w_k = s_{k-1} ... s_1 s_0`, and `w_I` the product over `I` in increasing order.
pub fn quotient_element(n: usize, set: Subset) -> SignedPerm {
    let mut out = SignedPerm::identity(n);
    for k in elements(set) {
        let mut wk = SignedPerm::identity(n);
        for i in (0..k).rev() {
            wk = wk.compose(&SignedPerm::simple(n, i));
        }
        out = out.compose(&wk);
    }
    out
}

/// `g(I) = { n - j + 1 : j in [n] \ I }`.
fn g_map(n: usize, set: Subset) -> Subset {
    elements(full_set(n) & !set).into_iter().fold(0, |acc, j| acc | 1 << (n - j))
}

/// Order with the empty set adjoined on top.
fn leq_with_top(a: Subset, b: Subset) -> bool {
    b == 0 || (a != 0 && gale_leq(a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatReport {
    pub n: usize,
    pub quotient_size: usize,
    pub bijective: bool,
    pub ascending: bool,
    pub order_preserving: bool,
}

impl BruhatReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.ascending && self.order_preserving
    }
}

/// Check that `I -> w_{g(I)}` is an order isomorphism onto the quotient.
pub fn bruhat_iso_check(n: usize) -> Result<BruhatReport, PosetError> {
    if n == 0 || n > 5 {
        return Err(PosetError::TooLarge(n, 5));
    }
    let order = BruhatOrder::new(n);
    let quotient = order.quotient();
    let mut domain = subsets_in_order(n);
    domain.push(0);
    let image: Vec<SignedPerm> = domain.iter().map(|&s| quotient_element(n, g_map(n, s))).collect();
    let qset: HashSet<&SignedPerm> = quotient.iter().collect();
    let iset: HashSet<&SignedPerm> = image.iter().collect();
    let bijective = iset.len() == domain.len() && iset == qset;
    let ascending = quotient.iter().all(SignedPerm::is_ascending)
        && order.elements.iter().filter(|w| w.is_ascending()).count() == quotient.len();
    let mut order_preserving = true;
    for (a, wa) in domain.iter().zip(&image) {
        for (b, wb) in domain.iter().zip(&image) {
            if leq_with_top(*a, *b) != order.leq(wa, wb) {
                order_preserving = false;
            }
        }
    }
    Ok(BruhatReport { n, quotient_size: quotient.len(), bijective, ascending, order_preserving })
}
