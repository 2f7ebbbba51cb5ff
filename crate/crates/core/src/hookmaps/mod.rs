//! The involutions `d` and `d'` on quasi-hooks and the maps built from them:
//! the lec-complementing involution on `S_n`, the bijection on
//! two-pix-permutations, and its r-colored analogue.

mod colored;
mod twopix;

pub use colored::{
    colored_distribution, colored_version, enumerate_colored, enumerate_two_pix_colored, th5_map,
    two_pix_colored_gf, ColoredLetter, PixColoredWord, TwoPixColored,
};
pub use twopix::{enumerate_two_pix, lemma4_map, two_pix_gf, TwoPix};

use crate::error::{Error, Result};
use crate::permstats::{hook_factorize_slice, is_increasing, Perm};

/// A word made of one leading letter followed by the remaining letters in
/// increasing order. With content `x_1 < ... < x_m` and leader `x_j` the
/// word has `j - 1` inversions; it is a hook iff `j >= 2` and increasing
/// iff `j = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiHook<T> {
    content: Vec<T>,
    leader_rank: usize,
}

impl<T: Ord + Clone> QuasiHook<T> {
    pub fn new(mut content: Vec<T>, leader_rank: usize) -> Result<Self> {
        content.sort();
        if content.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidWord("repeated letter".into()));
        }
        if leader_rank == 0 || leader_rank > content.len() {
            return Err(Error::InvalidParameter(format!(
                "leader rank {leader_rank} outside 1..={}",
                content.len()
            )));
        }
        Ok(QuasiHook {
            content,
            leader_rank,
        })
    }

    pub fn increasing(content: Vec<T>) -> Result<Self> {
        Self::new(content, 1)
    }

    pub fn from_word(word: &[T]) -> Result<Self> {
        if word.is_empty() || !is_increasing(&word[1..]) {
            return Err(Error::NotAQuasiHook);
        }
        let mut content = word.to_vec();
        content.sort();
        let leader_rank = 1 + content.iter().position(|x| *x == word[0]).unwrap();
        Self::new(content, leader_rank)
    }

    pub fn to_word(&self) -> Vec<T> {
        let j = self.leader_rank - 1;
        let mut w = Vec::with_capacity(self.content.len());
        w.push(self.content[j].clone());
        w.extend(self.content[..j].iter().cloned());
        w.extend(self.content[j + 1..].iter().cloned());
        w
    }

    /// Sorted content.
    pub fn content(&self) -> &[T] {
        &self.content
    }

    pub fn leader_rank(&self) -> usize {
        self.leader_rank
    }

    pub fn len(&self) -> usize {
        self.content.len()
    }

    pub fn is_empty(&self) -> bool {
        self.content.is_empty()
    }

    pub fn inv(&self) -> usize {
        self.leader_rank - 1
    }

    pub fn is_hook(&self) -> bool {
        self.leader_rank >= 2
    }

    fn with_inv(&self, inv: usize) -> Self {
        QuasiHook {
            content: self.content.clone(),
            leader_rank: inv + 1,
        }
    }
}

/// The hook with the same content and `m - inv(h)` inversions.
pub fn d_map<T: Ord + Clone>(h: &QuasiHook<T>) -> Result<QuasiHook<T>> {
    if !h.is_hook() {
        return Err(Error::NotAHook);
    }
    Ok(h.with_inv(h.len() - h.inv()))
}

/// The quasi-hook with the same content and `m - inv(h) - 1` inversions.
pub fn d_prime_map<T: Ord + Clone>(h: &QuasiHook<T>) -> QuasiHook<T> {
    h.with_inv(h.len() - h.inv() - 1)
}

/// Involution on permutations exchanging `lec` with `n - 1 - lec` while
/// keeping `inv - lec`. Applies `d'` to the first factor of the hook
/// factorization (the prefix if nonempty, else the first hook) and `d` to
/// every later hook.
pub fn lemma2_involution(w: &Perm) -> Result<Perm> {
    if w.is_empty() {
        return Err(Error::InvalidParameter(
            "the involution needs a nonempty permutation".into(),
        ));
    }
    let (prefix, hooks) = hook_factorize_slice(w.letters());
    let mut factors = Vec::with_capacity(hooks.len() + 1);
    if !prefix.is_empty() {
        factors.push(prefix);
    }
    factors.extend(hooks);
    let mut out = Vec::with_capacity(w.len());
    for (i, f) in factors.iter().enumerate() {
        let qh = QuasiHook::from_word(f)?;
        let image = if i == 0 { d_prime_map(&qh) } else { d_map(&qh)? };
        out.extend(image.to_word());
    }
    Perm::new(out)
}

/// Result of splitting a sequence of quasi-hooks back into the
/// `(p1, hooks, p2)` shape.
#[derive(Debug, Clone)]
pub(crate) struct Segmented<T> {
    pub p1: Vec<T>,
    pub hooks: Vec<QuasiHook<T>>,
    pub p2: Vec<T>,
}

/// A leading increasing word becomes `p1`, a trailing increasing word
/// becomes `p2`; a leading or trailing hook means the corresponding end is
/// empty.
pub(crate) fn renormalize<T: Ord + Clone>(mut words: Vec<QuasiHook<T>>) -> Segmented<T> {
    let mut p1 = Vec::new();
    if words.first().is_some_and(|w| !w.is_hook()) {
        p1 = words.remove(0).to_word();
    }
    let p2 = words
        .pop_if(|w| !w.is_hook())
        .map(|w| w.to_word())
        .unwrap_or_default();
    debug_assert!(words.iter().all(QuasiHook::is_hook));
    Segmented { p1, hooks: words, p2 }
}

/// The lec-complementing map on the compact form (empty end words removed)
/// of a two-pix sequence over an alphabet of `total` letters.
///
/// A single word is replaced by the quasi-hook on the same content with
/// `total - 2 - inv` inversions; otherwise `d'` is applied to both end words
/// and `d` to every middle hook.
pub(crate) fn complement_compact<T: Ord + Clone>(
    words: &[QuasiHook<T>],
    total: usize,
) -> Result<Vec<QuasiHook<T>>> {
    let lec: usize = words.iter().map(QuasiHook::inv).sum();
    match words {
        [] => Err(Error::InvalidParameter("empty two-pix sequence".into())),
        [only] => {
            if lec + 2 > total {
                return Err(Error::LecOutOfRange {
                    lec,
                    max: total as i64 - 2,
                });
            }
            Ok(vec![only.with_inv(total - 2 - lec)])
        }
        [first, middle @ .., last] => {
            let mut out = Vec::with_capacity(words.len());
            out.push(d_prime_map(first));
            for h in middle {
                out.push(d_map(h)?);
            }
            out.push(d_prime_map(last));
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::{is_hook, symmetric_group, Letter};
    use crate::qfunctions::hook_weight_block;

    fn qh(w: &[Letter]) -> QuasiHook<Letter> {
        QuasiHook::from_word(w).unwrap()
    }

    #[test]
    fn quasi_hook_shapes() {
        let h = qh(&[6, 3, 8, 9]);
        assert_eq!(h.content(), &[3, 6, 8, 9]);
        assert_eq!(h.leader_rank(), 2);
        assert_eq!(h.inv(), 1);
        assert!(h.is_hook());
        assert_eq!(h.to_word(), vec![6, 3, 8, 9]);
        assert!(!qh(&[1, 4, 5]).is_hook());
        assert_eq!(QuasiHook::from_word(&[3, 1, 4, 2]), Err(Error::NotAQuasiHook));
        assert_eq!(
            QuasiHook::<Letter>::from_word(&[]),
            Err(Error::NotAQuasiHook)
        );
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_map(&qh(&[6, 3, 8, 9])).unwrap().to_word(), vec![9, 3, 6, 8]);
        assert_eq!(d_map(&qh(&[2, 1])).unwrap().to_word(), vec![2, 1]);
        assert_eq!(d_map(&qh(&[1, 2])), Err(Error::NotAHook));
        assert_eq!(d_prime_map(&qh(&[2, 7])).to_word(), vec![7, 2]);
        assert_eq!(d_prime_map(&qh(&[5, 1, 4])).to_word(), vec![1, 4, 5]);
        assert_eq!(d_prime_map(&qh(&[4])).to_word(), vec![4]);
    }

    #[test]
    fn d_and_d_prime_are_content_preserving_involutions() {
        for m in 1..=8usize {
            let content: Vec<Letter> = (1..=m as Letter).map(|x| 2 * x + 1).collect();
            for j in 1..=m {
                let h = QuasiHook::new(content.clone(), j).unwrap();
                let dp = d_prime_map(&h);
                assert_eq!(dp.content(), h.content());
                assert_eq!(dp.inv(), m - h.inv() - 1);
                assert_eq!(d_prime_map(&dp), h);
                if h.is_hook() {
                    let d = d_map(&h).unwrap();
                    assert!(d.is_hook());
                    assert_eq!(d.content(), h.content());
                    assert_eq!(d.inv(), m - h.inv());
                    assert_eq!(d_map(&d).unwrap(), h);
                }
            }
        }
    }

    #[test]
    fn hooks_on_an_m_set_match_hook_weight_block() {
        for m in 2..=7usize {
            let letters: Vec<Letter> = (1..=m as Letter).collect();
            let hooks: Vec<usize> = crate::permstats::permutations_of(&letters)
                .filter(|w| is_hook(w))
                .map(|w| crate::permstats::inversions(&w))
                .collect();
            assert_eq!(hooks.len(), m - 1);
            let mut by_inv = vec![0i64; m];
            for k in hooks {
                by_inv[k] += 1;
            }
            let block = hook_weight_block(m).unwrap();
            assert_eq!(block, crate::polyring::TQPoly::from_t_coeffs(by_inv));
        }
    }

    #[test]
    fn lemma2_examples() {
        let n = 5;
        let image = lemma2_involution(&Perm::identity(n)).unwrap();
        assert_eq!(image.letters(), &[5, 1, 2, 3, 4]);
        assert_eq!(image.lec(), n - 1);
        let w = Perm::new(vec![2, 1]).unwrap();
        assert_eq!(lemma2_involution(&w).unwrap().letters(), &[1, 2]);
        let w = Perm::new(vec![2, 1, 3]).unwrap();
        assert_eq!(lemma2_involution(&w).unwrap(), w);
        assert!(lemma2_involution(&Perm::identity(0)).is_err());
    }

    #[test]
    fn lemma2_properties_exhaustive() {
        for n in 1..=7 {
            for w in symmetric_group(n) {
                let s = lemma2_involution(&w).unwrap();
                assert_eq!(lemma2_involution(&s).unwrap(), w);
                assert_eq!(s.lec() + w.lec(), n - 1, "{w}");
                assert_eq!(s.inv() - s.lec(), w.inv() - w.lec(), "{w}");
            }
        }
    }
}
