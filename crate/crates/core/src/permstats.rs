//! Permutation words, the statistics exc/des/maj/inv, Gessel's hook
//! factorization, `lec`, contents, and inversions of ordered set partitions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::TQPoly;

pub type Letter = u32;

/// A word of distinct positive letters. The support need not be `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    letters: Vec<Letter>,
}

impl Perm {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord("letters must be positive".into()));
        }
        let distinct: BTreeSet<_> = letters.iter().collect();
        if distinct.len() != letters.len() {
            return Err(Error::InvalidWord("letters must be distinct".into()));
        }
        Ok(Perm { letters })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            letters: (1..=n as Letter).collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the support is exactly `{1, ..., n}`.
    pub fn is_full(&self) -> bool {
        let n = self.letters.len() as Letter;
        self.letters.iter().all(|&x| x <= n)
    }

    pub fn exc(&self) -> Result<usize> {
        if !self.is_full() {
            return Err(Error::ExcUndefined);
        }
        Ok(self
            .letters
            .iter()
            .enumerate()
            .filter(|&(i, &x)| x as usize > i + 1)
            .count())
    }

    pub fn des(&self) -> usize {
        descent_positions(&self.letters).count()
    }

    pub fn maj(&self) -> usize {
        descent_positions(&self.letters).sum()
    }

    pub fn inv(&self) -> usize {
        inversions(&self.letters)
    }

    pub fn stats(&self) -> Result<StatRecord> {
        Ok(StatRecord {
            exc: self.exc()?,
            des: self.des(),
            maj: self.maj(),
            inv: self.inv(),
        })
    }

    pub fn hook_factorization(&self) -> HookFactorization {
        hook_factorize(self)
    }

    pub fn lec(&self) -> usize {
        lec(self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_word(&self.letters, false))
    }
}

/// 1-based positions `i` with `w_i > w_{i+1}`.
fn descent_positions(w: &[Letter]) -> impl Iterator<Item = usize> + '_ {
    w.windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] > pair[1])
        .map(|(i, _)| i + 1)
}

/// Number of pairs `i < j` with `w_i > w_j`.
pub fn inversions<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for (i, a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|b| a > *b).count();
    }
    count
}

pub fn is_increasing<T: Ord>(w: &[T]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

/// `x1 > x2` and `x2 < x3 < ... < xm`, `m >= 2`.
pub fn is_hook<T: Ord>(w: &[T]) -> bool {
    w.len() >= 2 && w[0] > w[1] && is_increasing(&w[1..])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StatRecord {
    pub exc: usize,
    pub des: usize,
    pub maj: usize,
    pub inv: usize,
}

pub fn stats(w: &Perm) -> Result<StatRecord> {
    w.stats()
}

/// `p tau_1 ... tau_k` with `p` increasing and every `tau_i` a hook.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookFactorization {
    pub prefix: Vec<Letter>,
    pub hooks: Vec<Vec<Letter>>,
}

impl HookFactorization {
    pub fn concat(&self) -> Vec<Letter> {
        let mut out = self.prefix.clone();
        for h in &self.hooks {
            out.extend_from_slice(h);
        }
        out
    }

    pub fn lec(&self) -> usize {
        self.hooks.iter().map(|h| inversions(h)).sum()
    }

    /// `Cont(pi) = (cont(p), cont(tau_1), ..., cont(tau_k))`.
    pub fn contents(&self) -> OrderedSetPartition {
        let blocks = std::iter::once(&self.prefix)
            .chain(&self.hooks)
            .map(|w| w.iter().copied().collect())
            .collect();
        OrderedSetPartition { blocks }
    }

    pub fn is_valid(&self) -> bool {
        is_increasing(&self.prefix) && self.hooks.iter().all(|h| is_hook(h))
    }
}

impl fmt::Display for HookFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_word(&self.prefix, false))?;
        for h in &self.hooks {
            write!(f, "|{}", crate::notation::render_word(h, false))?;
        }
        Ok(())
    }
}

/// Splits a word of distinct letters into the canonical increasing prefix
/// followed by hooks, working from the right.
pub fn hook_factorize_slice<T: Ord + Clone>(w: &[T]) -> (Vec<T>, Vec<Vec<T>>) {
    let mut hooks = Vec::new();
    let mut end = w.len();
    loop {
        // start of the maximal increasing suffix of w[..end]
        let mut start = end.saturating_sub(1);
        while start > 0 && w[start - 1] < w[start] {
            start -= 1;
        }
        if start == 0 {
            break;
        }
        hooks.push(w[start - 1..end].to_vec());
        end = start - 1;
    }
    hooks.reverse();
    (w[..end].to_vec(), hooks)
}

pub fn hook_factorize(w: &Perm) -> HookFactorization {
    let (prefix, hooks) = hook_factorize_slice(&w.letters);
    HookFactorization { prefix, hooks }
}

/// Sum of `inv` over the hooks of the hook factorization.
pub fn lec(w: &Perm) -> usize {
    hook_factorize(w).lec()
}

/// A sequence of pairwise disjoint blocks; each block is stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<BTreeSet<Letter>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<BTreeSet<Letter>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            for &x in b {
                if !seen.insert(x) {
                    return Err(Error::InvalidParameter(format!(
                        "letter {x} appears in more than one block"
                    )));
                }
            }
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn from_vecs(blocks: &[Vec<Letter>]) -> Result<Self> {
        Self::new(blocks.iter().map(|b| b.iter().copied().collect()).collect())
    }

    pub fn blocks(&self) -> &[BTreeSet<Letter>] {
        &self.blocks
    }

    /// Pairs `(k, l)` with `k` in an earlier block than `l` and `k > l`.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        for (i, earlier) in self.blocks.iter().enumerate() {
            for later in &self.blocks[i + 1..] {
                for &k in earlier {
                    count += later.range(..k).count();
                }
            }
        }
        count
    }
}

pub fn partition_inv(p: &OrderedSetPartition) -> usize {
    p.inv()
}

/// Lexicographic successor; returns `false` at the last permutation.
pub fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All orderings of `letters` (sorted first) in lexicographic order.
pub fn permutations_of(letters: &[Letter]) -> impl Iterator<Item = Vec<Letter>> {
    let mut current: Option<Vec<Letter>> = {
        let mut v = letters.to_vec();
        v.sort_unstable();
        Some(v)
    };
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(out)
    })
}

/// `S_n` in lexicographic order.
pub fn symmetric_group(n: usize) -> impl Iterator<Item = Perm> {
    let letters: Vec<Letter> = (1..=n as Letter).collect();
    permutations_of(&letters).map(|letters| Perm { letters })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistributionKind {
    /// `q^{maj - exc} t^{exc}`
    MajExc,
    /// `q^{inv - lec} t^{lec}`
    InvLec,
}

/// Builds `sum q^a t^b` from `(b, a)` exponent pairs.
pub(crate) fn accumulate<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> TQPoly {
    let mut counts: Vec<Vec<u64>> = Vec::new();
    for (t_exp, q_exp) in pairs {
        if counts.len() <= t_exp {
            counts.resize(t_exp + 1, Vec::new());
        }
        let row = &mut counts[t_exp];
        if row.len() <= q_exp {
            row.resize(q_exp + 1, 0);
        }
        row[q_exp] += 1;
    }
    TQPoly::from_nested(counts)
}

/// Exhaustive generating polynomial over `S_n`; zero for `n = 0`.
pub fn distribution(n: usize, kind: DistributionKind) -> TQPoly {
    if n == 0 {
        return TQPoly::zero();
    }
    accumulate(symmetric_group(n).map(|w| match kind {
        DistributionKind::MajExc => {
            let exc = w.exc().expect("elements of S_n have full support");
            (exc, w.maj() - exc)
        }
        DistributionKind::InvLec => {
            let lec = w.lec();
            (lec, w.inv() - lec)
        }
    }))
}
