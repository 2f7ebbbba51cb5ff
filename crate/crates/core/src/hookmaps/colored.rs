//! r-colored words: pix-r-colored-words `W_{n,r}`, two-pix-r-colored-words
//! and the colored lec-complementing bijection.
//!
//! Statistics convention. `lec_r` is the sum of the inversions of the hooks.
//! For `inv_r` we use `lec_r + r * inv(A_0, ..., A_k)`, where the second term
//! counts inversions between the uncolored blocks. Counting inversions of the
//! concatenated colored word literally instead gives `r^2` inversions per
//! inverted pair of blocks (every color of the larger letter beats every color
//! of the smaller one), and the colored generating function then fails to
//! match `A_n^{(r)}(t,q)` already at `n = 2, r = 2`. Counting only
//! same-color pairs across blocks (inversions inside a hook still counted in
//! full) reproduces the factor `r` and agrees with the convention used here.
//! Whether a different colored order was intended is left open.
//! [`PixColoredWord::literal_inv`] keeps the literal count available.

use std::collections::BTreeSet;
use std::fmt;

use super::{complement_compact, renormalize, QuasiHook};
use crate::error::{Error, Result};
use crate::notation::render_colored_word;
use crate::permstats::{accumulate, inversions, Letter, OrderedSetPartition};
use crate::polyring::{QPoly, TQPoly};

/// Letter `value^color`, ordered value-major then by color:
/// `1^1 < 1^2 < ... < 1^r < 2^1 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredLetter {
    pub value: Letter,
    pub color: u32,
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

/// `A^r`, sorted.
pub fn colored_version<'a>(
    block: impl IntoIterator<Item = &'a Letter>,
    r: usize,
) -> Vec<ColoredLetter> {
    let mut out: Vec<ColoredLetter> = block
        .into_iter()
        .flat_map(|&value| {
            (1..=r as u32).map(move |color| ColoredLetter { value, color })
        })
        .collect();
    out.sort();
    out
}

/// Uncolored block of a color-complete content, or an error if the content
/// is not `A^r` for some `A`.
fn block_of(content: &[ColoredLetter], r: usize) -> Result<BTreeSet<Letter>> {
    let block: BTreeSet<Letter> = content.iter().map(|c| c.value).collect();
    if colored_version(&block, r) != content {
        return Err(Error::InvalidWord(format!(
            "content {} is not color-complete for r = {r}",
            render_colored_word(content)
        )));
    }
    Ok(block)
}

fn check_partition(n: usize, blocks: &[&BTreeSet<Letter>]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for b in blocks {
        for &x in *b {
            if x == 0 || x as usize > n || !seen.insert(x) {
                return Err(Error::InvalidWord(format!(
                    "blocks do not form an ordered partition of [{n}]"
                )));
            }
        }
    }
    if seen.len() != n {
        return Err(Error::InvalidWord(format!(
            "blocks do not cover [{n}]"
        )));
    }
    Ok(())
}

fn validate_hooks(hooks: &[QuasiHook<ColoredLetter>], r: usize) -> Result<Vec<BTreeSet<Letter>>> {
    hooks
        .iter()
        .map(|h| {
            if !h.is_hook() {
                return Err(Error::NotAHook);
            }
            block_of(h.content(), r)
        })
        .collect()
}

/// An element of `W_{n,r}`: an increasing colored word on `A_0^r` followed
/// by colored hooks on `A_1^r, ..., A_k^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PixColoredWord {
    n: usize,
    r: usize,
    prefix: BTreeSet<Letter>,
    hooks: Vec<QuasiHook<ColoredLetter>>,
}

impl PixColoredWord {
    pub fn new(
        n: usize,
        r: usize,
        prefix: BTreeSet<Letter>,
        hooks: Vec<QuasiHook<ColoredLetter>>,
    ) -> Result<Self> {
        let blocks = validate_hooks(&hooks, r)?;
        let all: Vec<&BTreeSet<Letter>> = std::iter::once(&prefix).chain(&blocks).collect();
        check_partition(n, &all)?;
        Ok(PixColoredWord {
            n,
            r,
            prefix,
            hooks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn hooks(&self) -> &[QuasiHook<ColoredLetter>] {
        &self.hooks
    }

    /// `(A_0, A_1, ..., A_k)`.
    pub fn blocks(&self) -> OrderedSetPartition {
        let mut blocks = vec![self.prefix.clone()];
        blocks.extend(self.hooks.iter().map(|h| h.content().iter().map(|c| c.value).collect()));
        OrderedSetPartition::new(blocks).expect("validated at construction")
    }

    pub fn words(&self) -> Vec<Vec<ColoredLetter>> {
        let mut out = vec![colored_version(&self.prefix, self.r)];
        out.extend(self.hooks.iter().map(QuasiHook::to_word));
        out
    }

    pub fn lec_r(&self) -> usize {
        self.hooks.iter().map(QuasiHook::inv).sum()
    }

    pub fn inv_r(&self) -> usize {
        self.lec_r() + self.r * self.blocks().inv()
    }

    /// Inversions of the concatenated colored word, without the block
    /// convention described in the module docs.
    pub fn literal_inv(&self) -> usize {
        inversions(&self.words().concat())
    }
}

impl fmt::Display for PixColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words().iter().map(|w| render_colored_word(w)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// `(A_0, hooks)` pairs over an arbitrary ground set: every `A_0` (possibly
/// empty), every ordered partition of the rest into nonempty blocks, every
/// hook on each block's colored version.
fn pix_colored_over(
    ground: &[Letter],
    r: usize,
) -> Vec<(BTreeSet<Letter>, Vec<QuasiHook<ColoredLetter>>)> {
    let mut out = Vec::new();
    for (a0, rest) in subsets(ground) {
        let mut acc = Vec::new();
        hooks_over(&rest, r, &mut acc, &mut |hooks| {
            out.push((a0.iter().copied().collect(), hooks.to_vec()));
        });
    }
    out
}

fn hooks_over(
    rest: &[Letter],
    r: usize,
    acc: &mut Vec<QuasiHook<ColoredLetter>>,
    emit: &mut dyn FnMut(&[QuasiHook<ColoredLetter>]),
) {
    if rest.is_empty() {
        emit(acc);
        return;
    }
    for (block, remaining) in subsets(rest) {
        if block.is_empty() {
            continue;
        }
        let content = colored_version(&block, r);
        for leader_rank in 2..=content.len() {
            acc.push(QuasiHook::new(content.clone(), leader_rank).expect("valid rank"));
            hooks_over(&remaining, r, acc, emit);
            acc.pop();
        }
    }
}

/// `(chosen, rest)` for every subset, in increasing bitmask order.
fn subsets(ground: &[Letter]) -> Vec<(Vec<Letter>, Vec<Letter>)> {
    assert!(ground.len() < 32);
    (0u32..(1 << ground.len()))
        .map(|mask| {
            ground
                .iter()
                .enumerate()
                .partition::<Vec<_>, _>(|(i, _)| mask >> i & 1 == 1)
        })
        .map(|(chosen, rest)| {
            (
                chosen.into_iter().map(|(_, &x)| x).collect(),
                rest.into_iter().map(|(_, &x)| x).collect(),
            )
        })
        .collect()
}

/// All of `W_{n,r}` in a fixed deterministic order.
pub fn enumerate_colored(n: usize, r: usize) -> Vec<PixColoredWord> {
    let ground: Vec<Letter> = (1..=n as Letter).collect();
    pix_colored_over(&ground, r)
        .into_iter()
        .map(|(prefix, hooks)| PixColoredWord {
            n,
            r,
            prefix,
            hooks,
        })
        .collect()
}

/// `sum q^{inv_r - lec_r} t^{lec_r}` over `W_{n,r}`.
pub fn colored_distribution(n: usize, r: usize) -> TQPoly {
    if n == 0 {
        return TQPoly::zero();
    }
    accumulate(
        enumerate_colored(n, r)
            .iter()
            .map(|w| (w.lec_r(), w.inv_r() - w.lec_r())),
    )
}

/// A two-pix-r-colored-word `(p1, tau_1, ..., tau_k, p2)` with block
/// sequence `(A_0, ..., A_k, B_0)`; the part before `p2` is nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoPixColored {
    n: usize,
    r: usize,
    prefix: BTreeSet<Letter>,
    hooks: Vec<QuasiHook<ColoredLetter>>,
    suffix: BTreeSet<Letter>,
}

impl TwoPixColored {
    pub fn new(
        n: usize,
        r: usize,
        prefix: BTreeSet<Letter>,
        hooks: Vec<QuasiHook<ColoredLetter>>,
        suffix: BTreeSet<Letter>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be positive".into()));
        }
        if prefix.is_empty() && hooks.is_empty() {
            return Err(Error::InvalidWord(
                "the part before p2 must be nonempty".into(),
            ));
        }
        let blocks = validate_hooks(&hooks, r)?;
        let all: Vec<&BTreeSet<Letter>> = std::iter::once(&prefix)
            .chain(&blocks)
            .chain(std::iter::once(&suffix))
            .collect();
        check_partition(n, &all)?;
        Ok(TwoPixColored {
            n,
            r,
            prefix,
            hooks,
            suffix,
        })
    }

    /// Parses colored words: `p1` and `p2` must be increasing and every middle
    /// word a colored hook; `n` is the largest letter value.
    pub fn from_words(
        r: usize,
        p1: &[ColoredLetter],
        hooks: &[Vec<ColoredLetter>],
        p2: &[ColoredLetter],
    ) -> Result<Self> {
        let end_block = |w: &[ColoredLetter]| -> Result<BTreeSet<Letter>> {
            if !crate::permstats::is_increasing(w) {
                return Err(Error::InvalidWord("p1 and p2 must be increasing".into()));
            }
            block_of(w, r)
        };
        let prefix = end_block(p1)?;
        let suffix = end_block(p2)?;
        let hooks = hooks
            .iter()
            .map(|h| {
                let qh = QuasiHook::from_word(h).map_err(|_| Error::NotAHook)?;
                if qh.is_hook() {
                    Ok(qh)
                } else {
                    Err(Error::NotAHook)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let n = p1
            .iter()
            .chain(hooks.iter().flat_map(|h| h.content()))
            .chain(p2)
            .map(|c| c.value as usize)
            .max()
            .unwrap_or(0);
        Self::new(n, r, prefix, hooks, suffix)
    }

    /// The `r = 1` image of an uncolored two-pix-permutation.
    pub fn from_two_pix(v: &super::TwoPix) -> Self {
        let (p1, hooks) = v.segmentation();
        let color = |w: &[Letter]| -> Vec<ColoredLetter> {
            w.iter().map(|&value| ColoredLetter { value, color: 1 }).collect()
        };
        TwoPixColored {
            n: v.n(),
            r: 1,
            prefix: p1.into_iter().collect(),
            hooks: hooks
                .iter()
                .map(|h| QuasiHook::from_word(&color(h)).expect("hooks are quasi-hooks"))
                .collect(),
            suffix: v.p2().iter().copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn hooks(&self) -> &[QuasiHook<ColoredLetter>] {
        &self.hooks
    }

    /// `(A_0, A_1, ..., A_k, B_0)`.
    pub fn blocks(&self) -> OrderedSetPartition {
        let mut blocks = vec![self.prefix.clone()];
        blocks.extend(self.hooks.iter().map(|h| h.content().iter().map(|c| c.value).collect()));
        blocks.push(self.suffix.clone());
        OrderedSetPartition::new(blocks).expect("validated at construction")
    }

    /// `[p1, tau_1, ..., tau_k, p2]` as colored words.
    pub fn words(&self) -> Vec<Vec<ColoredLetter>> {
        let mut out = vec![colored_version(&self.prefix, self.r)];
        out.extend(self.hooks.iter().map(QuasiHook::to_word));
        out.push(colored_version(&self.suffix, self.r));
        out
    }

    pub fn lec_r(&self) -> usize {
        self.hooks.iter().map(QuasiHook::inv).sum()
    }

    pub fn inv_minus_lec(&self) -> usize {
        self.r * self.blocks().inv()
    }

    pub fn inv_r(&self) -> usize {
        self.lec_r() + self.inv_minus_lec()
    }

    fn compact(&self) -> Vec<QuasiHook<ColoredLetter>> {
        let mut out = Vec::new();
        if !self.prefix.is_empty() {
            out.push(QuasiHook::increasing(colored_version(&self.prefix, self.r)).unwrap());
        }
        out.extend(self.hooks.iter().cloned());
        if !self.suffix.is_empty() {
            out.push(QuasiHook::increasing(colored_version(&self.suffix, self.r)).unwrap());
        }
        out
    }
}

impl fmt::Display for TwoPixColored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words().iter().map(|w| render_colored_word(w)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Every two-pix-r-colored-word of `[n]`: each `B_0` leaving a nonempty
/// complement, then each pix-r-colored-word on that complement.
pub fn enumerate_two_pix_colored(n: usize, r: usize) -> Vec<TwoPixColored> {
    let ground: Vec<Letter> = (1..=n as Letter).collect();
    let mut out = Vec::new();
    for (rest, suffix) in subsets(&ground) {
        if rest.is_empty() {
            continue;
        }
        let suffix: BTreeSet<Letter> = suffix.into_iter().collect();
        for (prefix, hooks) in pix_colored_over(&rest, r) {
            out.push(TwoPixColored {
                n,
                r,
                prefix,
                hooks,
                suffix: suffix.clone(),
            });
        }
    }
    out
}

/// `sum q^{inv_r - lec_r}` over two-pix-r-colored-words with `lec_r = s`.
pub fn two_pix_colored_gf(n: usize, r: usize, s: usize) -> QPoly {
    accumulate(
        enumerate_two_pix_colored(n, r)
            .iter()
            .map(|v| (v.lec_r(), v.inv_minus_lec())),
    )
    .coeff(s)
    .clone()
}

/// Colored analogue of the two-pix bijection: same compact-form rule with
/// `d`, `d'` acting on colored quasi-hooks. Sends `lec_r = s` to
/// `rn - 2 - s`, keeps `inv_r - lec_r`, and is its own inverse on
/// `lec_r <= rn - 2`.
pub fn th5_map(v: &TwoPixColored) -> Result<TwoPixColored> {
    let image = complement_compact(&v.compact(), v.r * v.n)?;
    let seg = renormalize(image);
    let r = v.r;
    let prefix = block_of(&seg.p1, r)?;
    let suffix = block_of(&seg.p2, r)?;
    TwoPixColored::new(v.n, r, prefix, seg.hooks, suffix)
}
