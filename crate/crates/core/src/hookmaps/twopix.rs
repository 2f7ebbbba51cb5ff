use std::collections::BTreeSet;
use std::fmt;

use super::{complement_compact, renormalize, QuasiHook};
use crate::error::{Error, Result};
use crate::notation::render_word;
use crate::permstats::{
    accumulate, hook_factorize_slice, inversions, is_hook, is_increasing, permutations_of, Letter,
    OrderedSetPartition, Perm,
};
use crate::polyring::QPoly;

/// A two-pix-permutation `(p1, tau_1, ..., tau_k, p2)` of `[n]`, stored as
/// the pair `(sigma, p2)` with `sigma = p1 tau_1 ... tau_k` nonempty. The
/// segmentation of `sigma` is its hook factorization; `k = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoPix {
    sigma: Vec<Letter>,
    p2: Vec<Letter>,
}

impl TwoPix {
    pub fn new(sigma: Perm, p2: Vec<Letter>) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::InvalidWord(
                "the part before p2 must be nonempty".into(),
            ));
        }
        if !is_increasing(&p2) {
            return Err(Error::InvalidWord("p2 must be increasing".into()));
        }
        let n = sigma.len() + p2.len();
        let support: BTreeSet<Letter> = sigma.letters().iter().chain(&p2).copied().collect();
        if support.len() != n || support.iter().any(|&x| x == 0 || x as usize > n) {
            return Err(Error::InvalidWord(format!(
                "components do not form a permutation of [{n}]"
            )));
        }
        Ok(TwoPix {
            sigma: sigma.letters().to_vec(),
            p2,
        })
    }

    /// Validates an explicit `(p1, hooks, p2)` segmentation.
    pub fn from_components(p1: &[Letter], hooks: &[Vec<Letter>], p2: &[Letter]) -> Result<Self> {
        if !is_increasing(p1) {
            return Err(Error::InvalidWord("p1 must be increasing".into()));
        }
        if let Some(h) = hooks.iter().find(|h| !is_hook(h)) {
            return Err(Error::InvalidWord(format!(
                "{} is not a hook",
                render_word(h, false)
            )));
        }
        let mut sigma = p1.to_vec();
        for h in hooks {
            sigma.extend_from_slice(h);
        }
        TwoPix::new(Perm::new(sigma)?, p2.to_vec())
    }

    pub fn n(&self) -> usize {
        self.sigma.len() + self.p2.len()
    }

    pub fn sigma(&self) -> &[Letter] {
        &self.sigma
    }

    pub fn p2(&self) -> &[Letter] {
        &self.p2
    }

    /// `(p1, [tau_1, ..., tau_k])`.
    pub fn segmentation(&self) -> (Vec<Letter>, Vec<Vec<Letter>>) {
        hook_factorize_slice(&self.sigma)
    }

    /// All components including possibly empty `p1` and `p2`.
    pub fn components(&self) -> Vec<Vec<Letter>> {
        let (p1, hooks) = self.segmentation();
        let mut out = vec![p1];
        out.extend(hooks);
        out.push(self.p2.clone());
        out
    }

    pub fn concat(&self) -> Vec<Letter> {
        let mut w = self.sigma.clone();
        w.extend_from_slice(&self.p2);
        w
    }

    pub fn lec(&self) -> usize {
        self.segmentation().1.iter().map(|h| inversions(h)).sum()
    }

    pub fn inv(&self) -> usize {
        inversions(&self.concat())
    }

    pub fn inv_minus_lec(&self) -> usize {
        self.inv() - self.lec()
    }

    /// `(cont(p1), cont(tau_1), ..., cont(p2))`.
    pub fn contents(&self) -> OrderedSetPartition {
        OrderedSetPartition::from_vecs(&self.components())
            .expect("components of a permutation are disjoint")
    }

    /// Nonempty components as quasi-hooks.
    fn compact(&self) -> Vec<QuasiHook<Letter>> {
        self.components()
            .iter()
            .filter(|w| !w.is_empty())
            .map(|w| QuasiHook::from_word(w).expect("components are quasi-hooks"))
            .collect()
    }
}

impl fmt::Display for TwoPix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n() <= 9;
        let parts: Vec<String> = self
            .components()
            .iter()
            .map(|w| render_word(w, compact))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Every two-pix-permutation of `[n]`, grouped by the support of `sigma`
/// (largest bitmask first), each group in lexicographic order of `sigma`.
pub fn enumerate_two_pix(n: usize) -> impl Iterator<Item = TwoPix> {
    assert!(n < 32, "n too large for subset enumeration");
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    (1..=full).rev().flat_map(move |mask| {
        let (chosen, rest): (Vec<Letter>, Vec<Letter>) =
            (1..=n as Letter).partition(|&x| mask >> (x - 1) & 1 == 1);
        permutations_of(&chosen).map(move |sigma| TwoPix {
            sigma,
            p2: rest.clone(),
        })
    })
}

/// `sum q^{(inv - lec) v}` over two-pix-permutations `v` of `[n]` with
/// `lec v = s`.
pub fn two_pix_gf(n: usize, s: usize) -> QPoly {
    let by_lec = accumulate(enumerate_two_pix(n).map(|v| (v.lec(), v.inv_minus_lec())));
    by_lec.coeff(s).clone()
}

/// The bijection `{lec = s} -> {lec = n - 2 - s}` on two-pix-permutations,
/// preserving `inv - lec`. Defined for `lec <= n - 2`; it is its own inverse.
pub fn lemma4_map(v: &TwoPix) -> Result<TwoPix> {
    let image = complement_compact(&v.compact(), v.n())?;
    let seg = renormalize(image);
    let hooks: Vec<Vec<Letter>> = seg.hooks.iter().map(QuasiHook::to_word).collect();
    TwoPix::from_components(&seg.p1, &hooks, &seg.p2)
}
