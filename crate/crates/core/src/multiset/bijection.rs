use std::fmt;

use crate::perm::next_permutation;

/// A partial bijection `(I, J, alpha)` from `[n]` to `[m]`, stored as the
/// pairs `(i, alpha(i))` sorted by `i`. Indices are 0-based; the rendering
/// is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    n: usize,
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialBijection {
    /// Returns `None` unless the pairs are in range with distinct sources and
    /// distinct targets.
    pub fn new(n: usize, m: usize, mut pairs: Vec<(usize, usize)>) -> Option<Self> {
        pairs.sort_unstable();
        let in_range = pairs.iter().all(|&(i, j)| i < n && j < m);
        let distinct_i = pairs.windows(2).all(|w| w[0].0 != w[1].0);
        let mut js: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        js.sort_unstable();
        let distinct_j = js.windows(2).all(|w| w[0] != w[1]);
        (in_range && distinct_i && distinct_j).then_some(PartialBijection { n, m, pairs })
    }

    pub fn empty(n: usize, m: usize) -> Self {
        PartialBijection {
            n,
            m,
            pairs: Vec::new(),
        }
    }

    pub fn source_size(&self) -> usize {
        self.n
    }

    pub fn target_size(&self) -> usize {
        self.m
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `|I|`
    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    /// The inverse partial bijection `[m] -> [n]`.
    pub fn inverse(&self) -> Self {
        let pairs = self.pairs.iter().map(|&(i, j)| (j, i)).collect();
        PartialBijection::new(self.m, self.n, pairs).expect("inverse of a bijection")
    }
}

impl fmt::Display for PartialBijection {
    /// `[2]->[1]{1->1}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]{{", self.n, self.m)?;
        for (k, (i, j)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}->{}", i + 1, j + 1)?;
        }
        f.write_str("}")
    }
}

/// Calls `visit` with the pairs of every partial bijection `[n] -> [m]`.
///
/// Order: rank `k` from 0 to `min(n, m)`; then subsets `I` of `[n]` in
/// lexicographic order; then subsets `J` of `[m]` in lexicographic order;
/// then bijections `I -> J` by lexicographic order of the image sequence.
pub fn for_each_partial_bijection(n: usize, m: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    let mut pairs = Vec::with_capacity(n.min(m));
    for k in 0..=n.min(m) {
        let mut sources: Vec<usize> = (0..k).collect();
        loop {
            let mut targets: Vec<usize> = (0..k).collect();
            loop {
                let mut images = targets.clone();
                loop {
                    pairs.clear();
                    pairs.extend(sources.iter().copied().zip(images.iter().copied()));
                    visit(&pairs);
                    if !next_permutation(&mut images) {
                        break;
                    }
                }
                if !next_combination(&mut targets, m) {
                    break;
                }
            }
            if !next_combination(&mut sources, n) {
                break;
            }
        }
    }
}

/// All partial bijections `[n] -> [m]`, in the order of
/// [`for_each_partial_bijection`].
pub fn partial_bijections(n: usize, m: usize) -> Vec<PartialBijection> {
    let mut out = Vec::new();
    for_each_partial_bijection(n, m, |pairs| {
        out.push(PartialBijection {
            n,
            m,
            pairs: pairs.to_vec(),
        })
    });
    out
}

/// `sum_k C(n,k) C(m,k) k!`, saturating at `u128::MAX`.
pub fn partial_bijection_count(n: usize, m: usize) -> u128 {
    let mut total: u128 = 0;
    // term_k = C(n,k) C(m,k) k! ; term_{k+1} = term_k (n-k)(m-k) / (k+1)
    let mut term: u128 = 1;
    for k in 0..=n.min(m) {
        total = total.saturating_add(term);
        term = term.saturating_mul(((n - k) * (m - k)) as u128) / (k as u128 + 1);
    }
    total
}

/// Advances a sorted `k`-subset of `0..n` to its lexicographic successor.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}
