//! Binary words and the word sets that encode region codes and 2-states.
//!
//! A word is read left to right; position `i` (0-based here) is the `i+1`-th
//! letter. Sets are kept as sorted, duplicate-free lists of equal-length words.

use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;

use crate::error::{Error, Result};

/// A finite word over `{0, 1}`.
///
/// Words compare lexicographically, a proper prefix first.
#[derive(Clone, Default)]
pub struct Word(BitVec<u64, Msb0>);

impl Word {
    /// 64-bit blocks, first letter in the high bit, short last block padded with zeros.
    ///
    /// Reads storage directly; every constructor keeps the first letter at
    /// the top of the first element. Storage past the last letter is masked.
    fn blocks(&self) -> impl Iterator<Item = u64> + '_ {
        let len = self.len();
        let full = len / 64;
        let rest = len % 64;
        let raw = self.0.as_raw_slice();
        raw[..full].iter().copied().chain(
            (rest > 0).then(|| raw[full] & !(u64::MAX >> rest)),
        )
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.blocks().eq(other.blocks())
    }
}

impl Eq for Word {}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.blocks().cmp(other.blocks()).then(self.len().cmp(&other.len()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.len().hash(state);
        for b in self.blocks() {
            b.hash(state);
        }
    }
}

impl Word {
    /// The empty word `ε`.
    pub fn empty() -> Self {
        Word(BitVec::new())
    }

    pub fn zeros(n: usize) -> Self {
        Word(bitvec![u64, Msb0; 0; n])
    }

    pub fn ones(n: usize) -> Self {
        Word(bitvec![u64, Msb0; 1; n])
    }

    /// `bit^n`.
    pub fn run(bit: bool, n: usize) -> Self {
        Word(BitVec::repeat(bit, n))
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Word(bits.into_iter().collect())
    }

    /// The `len` low bits of `mask`, most significant first.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        Word((0..len).rev().map(|i| (mask >> i) & 1 == 1).collect())
    }

    /// Inverse of [`Word::from_mask`]; `None` for words longer than 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.len() > 64 {
            return None;
        }
        Some(self.0.iter().fold(0u64, |acc, b| (acc << 1) | u64::from(*b)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().by_vals()
    }

    pub fn count_zeros(&self) -> usize {
        self.0.count_zeros()
    }

    pub fn count_ones(&self) -> usize {
        self.0.count_ones()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_bitslice(&other.0);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    /// `self^k`, with `w^0 = ε`.
    pub fn pow(&self, k: usize) -> Word {
        let mut out = BitVec::with_capacity(self.len() * k);
        for _ in 0..k {
            out.extend_from_bitslice(&self.0);
        }
        Word(out)
    }

    /// The subword `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        let mut bits = self.0[start..end].to_bitvec();
        bits.force_align();
        Word(bits)
    }

    /// Every bit inverted.
    pub fn complement(&self) -> Word {
        Word(!self.0.clone())
    }

    /// First position at or after `start` holding `bit`.
    pub fn find(&self, bit: bool, start: usize) -> Option<usize> {
        let len = self.len();
        let raw = self.0.as_raw_slice();
        let mut k = start / 64;
        let mut mask = u64::MAX.checked_shr((start % 64) as u32).unwrap_or(0);
        while k * 64 < len {
            // hits in the storage past the last letter are discarded below
            let block = if bit { raw[k] } else { !raw[k] };
            let hit = block & mask;
            if hit != 0 {
                let at = k * 64 + hit.leading_zeros() as usize;
                return (at < len).then_some(at);
            }
            mask = u64::MAX;
            k += 1;
        }
        None
    }

    /// Maximal blocks of equal letters, as `(letter, length)`.
    pub fn runs(&self) -> Vec<(bool, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let letter = self.bit(i);
            let end = self.find(!letter, i).unwrap_or(self.len());
            out.push((letter, end - i));
            i = end;
        }
        out
    }

    /// Number of adjacent positions holding different letters.
    pub fn transitions(&self) -> usize {
        self.runs().len().saturating_sub(1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `0`/`1` strings; `""` and `"ε"` are the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_bits)
    }
}

/// Shorthand for parsing a literal in tests and tables. Panics on bad input.
pub fn w(s: &str) -> Word {
    s.parse().expect("binary literal")
}

/// A sorted, duplicate-free list of words sharing one length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSet {
    len: usize,
    members: Vec<Word>,
}

impl WordSet {
    pub fn empty(len: usize) -> Self {
        WordSet { len, members: Vec::new() }
    }

    /// Sorts and deduplicates; rejects members of the wrong length.
    pub fn new<I: IntoIterator<Item = Word>>(len: usize, words: I) -> Result<Self> {
        let mut members: Vec<Word> = words.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| m.len() != len) {
            return Err(Error::Argument(format!(
                "word {bad} has length {}, expected {len}",
                bad.len()
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(WordSet { len, members })
    }

    pub(crate) fn from_words(len: usize, words: impl IntoIterator<Item = Word>) -> Self {
        Self::new(len, words).expect("generated words share one length")
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.members.binary_search(word).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.members.iter()
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Word> {
        self.members
    }

    /// `prefix · self`.
    pub fn prefixed(&self, prefix: &Word) -> WordSet {
        WordSet::from_words(
            prefix.len() + self.len,
            self.members.iter().map(|m| prefix.concat(m)),
        )
    }

    /// `self · suffix`.
    pub fn suffixed(&self, suffix: &Word) -> WordSet {
        WordSet::from_words(
            self.len + suffix.len(),
            self.members.iter().map(|m| m.concat(suffix)),
        )
    }

    pub fn union(&self, other: &WordSet) -> Result<WordSet> {
        if self.len != other.len && !self.is_empty() && !other.is_empty() {
            return Err(Error::Argument(format!(
                "cannot unite word sets of lengths {} and {}",
                self.len, other.len
            )));
        }
        let len = if self.is_empty() { other.len } else { self.len };
        WordSet::new(len, self.members.iter().chain(other.members.iter()).cloned())
    }

    pub fn is_disjoint(&self, other: &WordSet) -> bool {
        self.members.iter().all(|m| !other.contains(m))
    }

    /// Members of exactly one of the two sets, sorted.
    pub fn symmetric_difference(&self, other: &WordSet) -> Vec<Word> {
        let mut out: Vec<Word> = self
            .members
            .iter()
            .filter(|m| !other.contains(m))
            .chain(other.members.iter().filter(|m| !self.contains(m)))
            .cloned()
            .collect();
        out.sort_unstable();
        out
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Construction route for the region-code sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionMethod {
    /// Union of the four parametrized blocks plus `0^n`, `1^n`.
    Closed,
    /// Grow one circle at a time: extend every old code by its first letter,
    /// then add the new blocks `0^k 1^{n-k}` and `1^k 0^{n-k}`.
    Recursive,
    /// Keep the bitonic words among all `2^n` words.
    Filter,
}

/// The four non-constant blocks of a region-code set, named by first and last letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    B00,
    B01,
    B10,
    B11,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::B00, Block::B01, Block::B10, Block::B11];
}

/// Linear 0-1 word with at most two letter changes.
pub fn is_bitonic(word: &Word) -> bool {
    word.transitions() <= 2
}

/// Words of one block in parameter order (`k` ascending, `p` outermost).
pub(crate) fn block_iter(n: usize, block: Block) -> Box<dyn Iterator<Item = Word>> {
    let (first, second) = match block {
        Block::B00 | Block::B01 => (false, true),
        Block::B11 | Block::B10 => (true, false),
    };
    match block {
        Block::B00 | Block::B11 => Box::new(
            (1..n).map(move |k| Word::run(first, k).concat(&Word::run(second, n - k))),
        ),
        Block::B01 | Block::B10 => Box::new((1..n.saturating_sub(1)).flat_map(move |p| {
            (1..n - p).map(move |k| {
                let mut word = Word::run(first, k);
                word.extend(&Word::run(second, n - p - k));
                word.extend(&Word::run(first, p));
                word
            })
        })),
    }
}

pub(crate) fn block_words(n: usize, block: Block) -> Vec<Word> {
    block_iter(n, block).collect()
}

/// Every region code of length `n >= 1`, unsorted, without materializing the set.
pub fn region_codes_iter(n: usize) -> impl Iterator<Item = Word> {
    [Word::zeros(n), Word::ones(n)]
        .into_iter()
        .chain(Block::ALL.into_iter().flat_map(move |b| block_iter(n, b)))
}

/// `{1^n} ∪ {1^p 0 1^k 0 1^{n-p-k-2}}`, unsorted.
fn foil_iter(n: usize) -> impl Iterator<Item = Word> {
    std::iter::once(Word::ones(n)).chain((0..n.saturating_sub(1)).flat_map(move |p| {
        (0..n - p - 1).map(move |k| {
            let mut word = Word::ones(p);
            word.push(false);
            word.extend(&Word::ones(k));
            word.push(false);
            word.extend(&Word::ones(n - p - k - 2));
            word
        })
    }))
}

/// Every member of `𝔗_n`, unsorted, without materializing the set.
pub fn tau2_iter(n: usize) -> Box<dyn Iterator<Item = Word>> {
    if n == 0 {
        return Box::new([w("01"), w("10")].into_iter());
    }
    let with = |prefix: &'static str| move |t: Word| w(prefix).concat(&t);
    Box::new(
        foil_iter(n)
            .map(with("01"))
            .chain(foil_iter(n).map(with("10")))
            .chain((0..n).map(move |k| omega(n, k)).map(with("00")))
            .chain((0..n).map(move |k| omega(n, k)).map(with("11"))),
    )
}

/// The block `𝒫_n^{xy}` of region codes.
///
/// `00`: `0^k 1^{n-k}`; `11`: `1^k 0^{n-k}` for `1 ≤ k ≤ n-1`;
/// `01`: `0^k 1^{n-p-k} 0^p`; `10`: `1^k 0^{n-p-k} 1^p` for `1 ≤ p ≤ n-2`, `1 ≤ k ≤ n-p-1`.
pub fn gen_p_block(n: usize, block: Block) -> WordSet {
    WordSet::from_words(n, block_words(n, block))
}

/// Region codes of the rosette of `n` circles, i.e. the bitonic words of length `n`.
///
/// `n = 0` gives `{ε}`, the bare plane.
pub fn gen_p(n: usize, method: RegionMethod) -> Result<WordSet> {
    if n == 0 {
        return Ok(WordSet::from_words(0, [Word::empty()]));
    }
    Ok(match method {
        RegionMethod::Closed => {
            let mut words = vec![Word::zeros(n), Word::ones(n)];
            for block in Block::ALL {
                words.extend(block_words(n, block));
            }
            WordSet::from_words(n, words)
        }
        RegionMethod::Recursive => {
            let mut level = WordSet::from_words(1, [Word::zeros(1), Word::ones(1)]);
            for m in 1..n {
                level = grow_rosette_codes(&level, m);
            }
            level
        }
        RegionMethod::Filter => {
            if n > 30 {
                return Err(Error::Argument(format!(
                    "bitonic filter enumerates 2^{n} words; limit is n <= 30"
                )));
            }
            WordSet::from_words(
                n,
                (0..1u64 << n)
                    .map(|mask| Word::from_mask(mask, n))
                    .filter(is_bitonic),
            )
        }
    })
}

/// One step of the circle-insertion rules: codes for `m` circles to codes for `m + 1`.
pub fn grow_rosette_codes(codes: &WordSet, m: usize) -> WordSet {
    let mut next: Vec<Word> = codes
        .iter()
        .map(|code| {
            let mut c = code.clone();
            c.push(code.bit(0));
            c
        })
        .collect();
    next.extend(block_words(m + 1, Block::B00));
    next.extend(block_words(m + 1, Block::B11));
    WordSet::from_words(m + 1, next)
}

/// `𝒯_n`: words of length `n` with exactly one `0`, i.e. `1^k 0 1^{n-k-1}`.
pub fn gen_t2(n: usize) -> WordSet {
    WordSet::from_words(n, (0..n).map(|k| omega(n, k)))
}

/// `ω_{ℓ,r} = 1^r 0 1^{ℓ-r-1}`.
pub(crate) fn omega(len: usize, r: usize) -> Word {
    let mut word = Word::ones(r);
    word.push(false);
    word.extend(&Word::ones(len - r - 1));
    word
}

/// Construction route for `ℱ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoilMethod {
    /// `{1^p 0 1^k 0 1^{n-p-k-2}} ∪ {1^n}`.
    Closed,
    /// `ℱ_n = 0𝒯_{n-1} ∪ 1ℱ_{n-1}` from `ℱ_1 = {1}`.
    Recursive,
}

/// `ℱ_n`: 2-state words of the `n`-foil. `ℱ_0 = {ε}`.
pub fn gen_f2(n: usize, method: FoilMethod) -> WordSet {
    match (n, method) {
        (0, _) => WordSet::from_words(0, [Word::empty()]),
        (1, _) => WordSet::from_words(1, [Word::ones(1)]),
        (_, FoilMethod::Closed) => WordSet::from_words(n, foil_iter(n)),
        (_, FoilMethod::Recursive) => {
            let mut foil = gen_f2(1, FoilMethod::Recursive);
            for m in 2..=n {
                let a = gen_t2(m - 1).prefixed(&Word::zeros(1));
                let b = foil.prefixed(&Word::ones(1));
                foil = a.union(&b).expect("equal lengths");
            }
            foil
        }
    }
}

fn psi_prefix(a: bool, b: bool) -> [bool; 3] {
    match (a, b) {
        (false, true) => [false, true, true],
        (true, false) => [true, false, true],
        (false, false) => [false, true, false],
        (true, true) => [true, false, false],
    }
}

/// Rewrites the two-letter prefix: `01→011`, `10→101`, `00→010`, `11→100`.
pub fn psi(word: &Word) -> Result<Word> {
    if word.len() < 2 {
        return Err(Error::Argument(format!(
            "psi needs a word of length at least 2, got {word:?}"
        )));
    }
    let mut out = Word::from_bits(psi_prefix(word.bit(0), word.bit(1)));
    out.extend(&word.slice(2, word.len()));
    Ok(out)
}

/// `psi` applied `p` times; `p = 0` is the identity.
pub fn psi_pow(word: &Word, p: usize) -> Result<Word> {
    if word.len() < 2 {
        return Err(Error::Argument(format!(
            "psi needs a word of length at least 2, got {word:?}"
        )));
    }
    let mut out = word.clone();
    for _ in 0..p {
        out = psi(&out)?;
    }
    Ok(out)
}

/// Construction route for `𝔗_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistKnotMethod {
    /// `01ℱ_n ∪ 10ℱ_n ∪ 00𝒯_n ∪ 11𝒯_n`.
    Definition,
    /// `ψ^n({01,10}) ∪ ⋃_p ψ^p(00)𝒯_{n-p} ∪ ⋃_p ψ^p(11)𝒯_{n-p}`.
    PsiRecursion,
}

/// `𝔗_n`: 2-state words of the `n`-twist knot (length `n + 2`).
pub fn gen_tau2(n: usize, method: TwistKnotMethod) -> WordSet {
    if n == 0 {
        return WordSet::from_words(2, [w("01"), w("10")]);
    }
    match method {
        TwistKnotMethod::Definition => {
            let foil = gen_f2(n, FoilMethod::Closed);
            let loop2 = gen_t2(n);
            let parts = [
                foil.prefixed(&w("01")),
                foil.prefixed(&w("10")),
                loop2.prefixed(&w("00")),
                loop2.prefixed(&w("11")),
            ];
            WordSet::from_words(n + 2, parts.into_iter().flat_map(WordSet::into_members))
        }
        TwistKnotMethod::PsiRecursion => {
            let mut words = Vec::new();
            for seed in [w("01"), w("10")] {
                words.push(psi_pow(&seed, n).expect("length 2 seed"));
            }
            for p in 0..n {
                let t = gen_t2(n - p);
                for seed in [w("00"), w("11")] {
                    let prefix = psi_pow(&seed, p).expect("length 2 seed");
                    words.extend(t.iter().map(|tail| prefix.concat(tail)));
                }
            }
            WordSet::from_words(n + 2, words)
        }
    }
}

/// Membership in `𝒯_n` without materializing it.
pub fn in_t2(word: &Word) -> bool {
    word.count_zeros() == 1
}

/// Membership in `ℱ_n` without materializing it.
pub fn in_f2(word: &Word) -> bool {
    match word.len() {
        0 => true,
        1 => word.bit(0),
        _ => matches!(word.count_zeros(), 0 | 2),
    }
}

/// Membership in `𝔗_n`, `n = |word| - 2`, without materializing it.
pub fn in_tau2(word: &Word) -> bool {
    if word.len() < 2 {
        return false;
    }
    let rest = word.slice(2, word.len());
    if rest.is_empty() {
        return word.bit(0) != word.bit(1);
    }
    if word.bit(0) == word.bit(1) {
        in_t2(&rest)
    } else {
        in_f2(&rest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&str]) -> WordSet {
        let len = words.first().map_or(0, |s| s.len());
        WordSet::new(len, words.iter().map(|s| w(s))).unwrap()
    }

    #[test]
    fn word_basics() {
        let a = w("011");
        assert_eq!(a.pow(0), Word::empty());
        assert_eq!(a.pow(2).to_string(), "011011");
        assert_eq!(Word::empty().concat(&a), a);
        assert_eq!(a.runs(), vec![(false, 1), (true, 2)]);
        assert_eq!(w("0110100").transitions(), 4);
        assert_eq!(Word::from_mask(0b0110, 4), w("0110"));
        assert_eq!(w("0110").to_mask(), Some(6));
        assert!("01a".parse::<Word>().is_err());
        assert_eq!("ε".parse::<Word>().unwrap(), Word::empty());
    }

    #[test]
    fn find_and_runs_across_blocks() {
        let mut word = Word::ones(70).complement();
        word.extend(&Word::ones(60));
        assert_eq!(word.find(true, 0), Some(70));
        assert_eq!(word.find(false, 5), Some(5));
        assert_eq!(word.find(false, 70), None);
        assert_eq!(word.find(true, 130), None);
        assert_eq!(word.runs(), vec![(false, 70), (true, 60)]);
        assert_eq!(Word::ones(64).find(false, 0), None);
        assert_eq!(Word::empty().runs(), vec![]);
        let tail = word.slice(65, 130);
        assert_eq!(tail.runs(), vec![(false, 5), (true, 60)]);
        assert_eq!(tail, Word::zeros(5).concat(&Word::ones(60)));
    }

    #[test]
    fn order_is_lexicographic() {
        let mut strings = vec![String::new(), "0".into(), "1".into(), "01".into(), "10".into()];
        for len in [63, 64, 65, 130] {
            for k in [1, 31, 62, 63, 64, 100] {
                if k < len {
                    let mut s = "1".repeat(len);
                    s.replace_range(k..=k, "0");
                    strings.push(s.clone());
                    strings.push(s[..k].to_string());
                    strings.push("0".repeat(k) + &"1".repeat(len - k));
                }
            }
        }
        let mut by_string = strings.clone();
        by_string.sort();
        by_string.dedup();
        let mut by_word: Vec<Word> = strings.iter().map(|s| w(s)).collect();
        by_word.sort();
        by_word.dedup();
        let back: Vec<String> = by_word.iter().map(Word::to_string).collect();
        assert_eq!(back, by_string);
        assert_ne!(w("0"), w("00"));
    }

    #[test]
    fn region_codes_small() {
        assert_eq!(gen_p(1, RegionMethod::Closed).unwrap(), set(&["0", "1"]));
        let all3: Vec<String> = (0..8).map(|m| format!("{m:03b}")).collect();
        let all3_ref: Vec<&str> = all3.iter().map(String::as_str).collect();
        assert_eq!(gen_p(3, RegionMethod::Closed).unwrap(), set(&all3_ref));
        assert_eq!(gen_p(6, RegionMethod::Closed).unwrap().len(), 32);
        assert_eq!(gen_p(0, RegionMethod::Filter).unwrap().members(), &[Word::empty()]);
    }

    #[test]
    fn region_methods_agree() {
        for n in 1..=12 {
            let closed = gen_p(n, RegionMethod::Closed).unwrap();
            assert_eq!(closed, gen_p(n, RegionMethod::Recursive).unwrap(), "n={n}");
            assert_eq!(closed, gen_p(n, RegionMethod::Filter).unwrap(), "n={n}");
            assert_eq!(closed.len(), n * n - n + 2);
        }
    }

    #[test]
    fn blocks() {
        assert_eq!(gen_p_block(3, Block::B00), set(&["011", "001"]));
        assert_eq!(gen_p_block(3, Block::B01), set(&["010"]));
        assert_eq!(gen_p_block(3, Block::B10), set(&["101"]));
        assert_eq!(
            gen_p_block(5, Block::B11),
            set(&["10000", "11000", "11100", "11110"])
        );
        assert!(gen_p_block(2, Block::B01).is_empty());
    }

    #[test]
    fn blocks_partition_region_codes() {
        for n in 2..=10 {
            let mut parts: Vec<WordSet> = Block::ALL.iter().map(|&b| gen_p_block(n, b)).collect();
            parts.push(set(&[&"0".repeat(n), &"1".repeat(n)]));
            let total: usize = parts.iter().map(WordSet::len).sum();
            assert_eq!(total, n * n - n + 2);
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    assert!(parts[i].is_disjoint(&parts[j]));
                }
            }
        }
    }

    #[test]
    fn twist_loop_words() {
        assert!(gen_t2(0).is_empty());
        assert_eq!(gen_t2(1), set(&["0"]));
        assert_eq!(gen_t2(2), set(&["01", "10"]));
        assert!(gen_t2(7).iter().all(|m| m.count_zeros() == 1));
        assert_eq!(gen_t2(7).len(), 7);
    }

    #[test]
    fn foil_words() {
        assert_eq!(gen_f2(0, FoilMethod::Closed).members(), &[Word::empty()]);
        assert_eq!(gen_f2(1, FoilMethod::Recursive), set(&["1"]));
        assert_eq!(gen_f2(2, FoilMethod::Closed), set(&["00", "11"]));
        for n in 2..=14 {
            let closed = gen_f2(n, FoilMethod::Closed);
            assert_eq!(closed, gen_f2(n, FoilMethod::Recursive));
            assert_eq!(closed.len(), n * (n - 1) / 2 + 1);
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w("000")).unwrap(), w("0100"));
        assert_eq!(psi(&w("110")).unwrap(), w("1000"));
        assert_eq!(psi_pow(&w("01"), 3).unwrap(), w("01111"));
        assert!(psi(&w("1")).is_err());
        let image: Vec<Word> = gen_tau2(1, TwistKnotMethod::Definition)
            .iter()
            .map(|m| psi(m).unwrap())
            .collect();
        assert_eq!(
            WordSet::new(4, image).unwrap(),
            set(&["0100", "0111", "1011", "1000"])
        );
    }

    #[test]
    fn psi_power_closed_forms() {
        for p in 1..=10 {
            let ones = Word::ones(p);
            let ones_m1 = Word::ones(p - 1);
            assert_eq!(psi_pow(&w("01"), p).unwrap(), w("01").concat(&ones));
            assert_eq!(psi_pow(&w("10"), p).unwrap(), w("10").concat(&ones));
            assert_eq!(
                psi_pow(&w("00"), p).unwrap(),
                w("01").concat(&ones_m1).concat(&w("0"))
            );
            assert_eq!(
                psi_pow(&w("11"), p).unwrap(),
                w("10").concat(&ones_m1).concat(&w("0"))
            );
        }
    }

    #[test]
    fn twist_knot_words() {
        assert_eq!(gen_tau2(0, TwistKnotMethod::PsiRecursion), set(&["01", "10"]));
        assert_eq!(
            gen_tau2(1, TwistKnotMethod::PsiRecursion),
            set(&["000", "011", "101", "110"])
        );
        assert_eq!(
            gen_tau2(2, TwistKnotMethod::Definition),
            set(&["0100", "0111", "1011", "1000", "0001", "0010", "1101", "1110"])
        );
        for n in 0..=30 {
            let def = gen_tau2(n, TwistKnotMethod::Definition);
            assert_eq!(def, gen_tau2(n, TwistKnotMethod::PsiRecursion), "n={n}");
            assert_eq!(def.len(), n * n + n + 2);
            assert!(def.iter().all(in_tau2));
        }
    }

    #[test]
    fn tau2_grows_by_psi() {
        for n in 0..=15 {
            let next = gen_tau2(n + 1, TwistKnotMethod::Definition);
            let shifted = WordSet::new(
                n + 3,
                gen_tau2(n, TwistKnotMethod::Definition).iter().map(|m| psi(m).unwrap()),
            )
            .unwrap();
            let t = gen_t2(n + 1);
            let fresh = t.prefixed(&w("00")).union(&t.prefixed(&w("11"))).unwrap();
            assert_eq!(shifted.len(), n * n + n + 2, "psi injective");
            assert!(shifted.is_disjoint(&fresh));
            assert_eq!(shifted.union(&fresh).unwrap(), next);
        }
    }

    #[test]
    fn membership_predicates() {
        for n in 0..=8 {
            let tau = gen_tau2(n, TwistKnotMethod::Definition);
            for mask in 0..1u64 << (n + 2) {
                let word = Word::from_mask(mask, n + 2);
                assert_eq!(in_tau2(&word), tau.contains(&word), "{word}");
            }
        }
    }

    #[test]
    fn lazy_enumerators_match_sets() {
        for n in 1..=12 {
            let lazy = WordSet::new(n, region_codes_iter(n)).unwrap();
            assert_eq!(lazy, gen_p(n, RegionMethod::Closed).unwrap());
            assert_eq!(region_codes_iter(n).count(), n * n - n + 2);
        }
        for n in 0..=12 {
            let lazy = WordSet::new(n + 2, tau2_iter(n)).unwrap();
            assert_eq!(lazy, gen_tau2(n, TwistKnotMethod::Definition));
            assert_eq!(tau2_iter(n).count(), n * n + n + 2);
        }
    }

    #[test]
    fn set_operations() {
        let a = set(&["00", "01"]);
        let b = set(&["01", "11"]);
        assert_eq!(a.symmetric_difference(&b), vec![w("00"), w("11")]);
        assert!(WordSet::new(2, [w("0")]).is_err());
        assert_eq!(a.union(&WordSet::empty(5)).unwrap(), a);
    }
}
