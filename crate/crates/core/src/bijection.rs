//! The bijection `υφ : 𝒫_{n+1} → 𝔗_n` between rosette region codes and the
//! 2-state words of the `n`-twist knot.
//!
//! A region code is split by its run shape. Codes `0^k 1^m` and `1^k 0^m` go to
//! `00𝒯_n` and `11𝒯_n` through the block maps `φ` and `φ̄`. Codes `π_1 0^p` and
//! `π_1 1^p` trade their trailing run for a prefix `01 1^{p-1} 0` or
//! `10 1^{p-1} 0` and land in `01ℱ_n` and `10ℱ_n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::twist_knot;
use crate::shadow::DEFAULT_BRUTEFORCE_CAP;
use crate::words::{in_tau2, region_codes_iter, tau2_iter, w, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// `π_{ℓ,r} = 0^r 1^{ℓ-r}`, `1 ≤ r ≤ ℓ-1`.
    Pi,
    /// `π̄_{ℓ,r} = 1^r 0^{ℓ-r}`, `1 ≤ r ≤ ℓ-1`.
    PiBar,
    /// `ω_{ℓ,r} = 1^r 0 1^{ℓ-r-1}`, `0 ≤ r ≤ ℓ-1`.
    Omega,
}

impl BlockKind {
    fn shape(self) -> &'static str {
        match self {
            BlockKind::Pi => "00-block 0^r 1^s with r, s >= 1",
            BlockKind::PiBar => "11-block 1^r 0^s with r, s >= 1",
            BlockKind::Omega => "twist-loop word 1^r 0 1^s with exactly one 0",
        }
    }
}

/// A parametrized block word, stored as `(ℓ, r, kind)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockWord {
    pub len: usize,
    pub r: usize,
    pub kind: BlockKind,
}

impl BlockWord {
    pub fn new(kind: BlockKind, len: usize, r: usize) -> Result<Self> {
        let ok = match kind {
            BlockKind::Pi | BlockKind::PiBar => r >= 1 && r < len,
            BlockKind::Omega => r < len,
        };
        if !ok {
            return Err(Error::Argument(format!(
                "no {kind:?} word with length {len} and parameter {r}"
            )));
        }
        Ok(BlockWord { len, r, kind })
    }

    pub fn expand(&self) -> Word {
        match self.kind {
            BlockKind::Pi => Word::zeros(self.r).concat(&Word::ones(self.len - self.r)),
            BlockKind::PiBar => Word::ones(self.r).concat(&Word::zeros(self.len - self.r)),
            BlockKind::Omega => {
                let mut out = Word::ones(self.r);
                out.push(false);
                out.extend(&Word::ones(self.len - self.r - 1));
                out
            }
        }
    }

    /// Reads `word` as a block word of the given kind.
    pub fn parse(word: &Word, kind: BlockKind) -> Result<Self> {
        let runs = word.runs();
        let parsed = match (kind, runs.as_slice()) {
            (BlockKind::Pi, [(false, r), (true, _)]) => Some(*r),
            (BlockKind::PiBar, [(true, r), (false, _)]) => Some(*r),
            (BlockKind::Omega, _) if word.count_zeros() == 1 => {
                Some(word.find(false, 0).expect("one zero"))
            }
            _ => None,
        };
        match parsed {
            Some(r) => Ok(BlockWord { len: word.len(), r, kind }),
            None => Err(domain(word, format!("not a {}", kind.shape()))),
        }
    }
}

fn domain(word: &Word, reason: String) -> Error {
    Error::Domain { word: format!("{word:?}"), reason }
}

/// `φ(π_{ℓ+1,r}) = ω_{ℓ,r-1}`.
pub fn phi(word: &Word) -> Result<Word> {
    let b = BlockWord::parse(word, BlockKind::Pi)?;
    Ok(BlockWord { len: b.len - 1, r: b.r - 1, kind: BlockKind::Omega }.expand())
}

/// `φ̄(π̄_{ℓ+1,r}) = ω_{ℓ,r-1}`.
pub fn phi_bar(word: &Word) -> Result<Word> {
    let b = BlockWord::parse(word, BlockKind::PiBar)?;
    Ok(BlockWord { len: b.len - 1, r: b.r - 1, kind: BlockKind::Omega }.expand())
}

/// `φ^{-1}(ω_{ℓ,r}) = π_{ℓ+1,r+1}`.
pub fn phi_inv(word: &Word) -> Result<Word> {
    let b = BlockWord::parse(word, BlockKind::Omega)?;
    Ok(BlockWord { len: b.len + 1, r: b.r + 1, kind: BlockKind::Pi }.expand())
}

/// `φ̄^{-1}(ω_{ℓ,r}) = π̄_{ℓ+1,r+1}`.
pub fn phi_bar_inv(word: &Word) -> Result<Word> {
    let b = BlockWord::parse(word, BlockKind::Omega)?;
    Ok(BlockWord { len: b.len + 1, r: b.r + 1, kind: BlockKind::PiBar }.expand())
}

/// Run shape of a region code. The six shapes partition `𝒫_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Zeros,
    Ones,
    Block00,
    Block11,
    /// `π_1 0^p` with `π_1` a 00-block.
    Block01 { p: usize },
    /// `π_1 1^p` with `π_1` an 11-block.
    Block10 { p: usize },
}

pub fn shape(word: &Word) -> Result<Shape> {
    match word.runs().as_slice() {
        [] => Err(domain(word, "the empty word is not a region code".into())),
        [(false, _)] => Ok(Shape::Zeros),
        [(true, _)] => Ok(Shape::Ones),
        [(false, _), (true, _)] => Ok(Shape::Block00),
        [(true, _), (false, _)] => Ok(Shape::Block11),
        [(false, _), (true, _), (false, p)] => Ok(Shape::Block01 { p: *p }),
        [(true, _), (false, _), (true, p)] => Ok(Shape::Block10 { p: *p }),
        _ => Err(domain(
            word,
            "not bitonic: more than two letter changes, so no 00, 11, 01 or 10 block shape".into(),
        )),
    }
}

/// `υφ`, on region codes of length `n + 1`.
pub fn varphi(word: &Word) -> Result<Word> {
    let n = word.len().saturating_sub(1);
    let split = |p: usize| word.slice(0, word.len() - p);
    let marked = |head: &str, p: usize, tail: Word| {
        let mut out = w(head);
        out.extend(&Word::ones(p - 1));
        out.push(false);
        out.extend(&tail);
        out
    };
    Ok(match shape(word)? {
        Shape::Zeros => w("01").concat(&Word::ones(n)),
        Shape::Ones => w("10").concat(&Word::ones(n)),
        Shape::Block00 => w("00").concat(&phi(word)?),
        Shape::Block11 => w("11").concat(&phi_bar(word)?),
        Shape::Block01 { p } => marked("01", p, phi(&split(p))?),
        Shape::Block10 { p } => marked("10", p, phi_bar(&split(p))?),
    })
}

/// `υφ^{-1}`, on `𝔗_n` for `n = |word| - 2`.
pub fn varphi_inv(word: &Word) -> Result<Word> {
    if !in_tau2(word) {
        return Err(domain(
            word,
            "not a twist-knot 2-state word: expected 00 or 11 followed by exactly one 0, \
             or 01 or 10 followed by no 0 or exactly two 0s"
                .into(),
        ));
    }
    let n = word.len() - 2;
    let rest = word.slice(2, word.len());
    let bar = word.bit(0);
    if word.bit(0) == word.bit(1) {
        return if bar { phi_bar_inv(&rest) } else { phi_inv(&rest) };
    }
    if rest.count_zeros() == 0 {
        return Ok(Word::run(bar, n + 1));
    }
    let p = rest.find(false, 0).expect("two zeros") + 1;
    let tail = rest.slice(p, rest.len());
    let head = if bar { phi_bar_inv(&tail)? } else { phi_inv(&tail)? };
    Ok(head.concat(&Word::run(bar, p)))
}

/// `𝒫̂^{01}_m` in table order: `(𝒫̂^{01}_{m-1} , 𝒫^{00}_{m-1})·0` from `{0}`.
fn hat_column(m: usize, bar: bool) -> Vec<Word> {
    let mut col = vec![Word::run(bar, 1)];
    for len in 2..=m {
        col.extend(block_column(len - 1, bar));
        for word in &mut col {
            word.push(bar);
        }
    }
    col
}

/// `𝒫^{00}_m` (or `𝒫^{11}_m`) in table order, `k = 1..m-1`.
fn block_column(m: usize, bar: bool) -> Vec<Word> {
    (1..m).map(|k| Word::run(bar, k).concat(&Word::run(!bar, m - k))).collect()
}

/// One row of the pairing table. Columns: `𝒫̂^{01}_{n+1}`, `𝒫^{00}_{n+1}`,
/// `01ℱ_n`, `00𝒯_n`, `𝒫̂^{10}_{n+1}`, `𝒫^{11}_{n+1}`, `10ℱ_n`, `11𝒯_n`.
pub type PairingRow = [Option<Word>; 8];

pub const PAIRING_HEADERS: [&str; 8] = ["P^01", "P^00", "01F", "00T", "P^10", "P^11", "10F", "11T"];

/// The pairing of `𝒫_{n+1}` with `𝔗_n`, laid out by block with each image
/// beside its preimage.
pub fn pairing_table(n: usize) -> Result<Vec<PairingRow>> {
    let m = n + 1;
    let cols = [
        hat_column(m, false),
        block_column(m, false),
        hat_column(m, true),
        block_column(m, true),
    ];
    let rows = cols.iter().map(Vec::len).max().unwrap_or(0);
    let mut table = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row: PairingRow = Default::default();
        for (c, col) in cols.iter().enumerate() {
            if let Some(word) = col.get(i) {
                let slot = 4 * (c / 2) + c % 2;
                row[slot + 2] = Some(varphi(word)?);
                row[slot] = Some(word.clone());
            }
        }
        table.push(row);
    }
    Ok(table)
}

/// Fixed-width text rendering of [`pairing_table`].
pub fn render_pairing_table(rows: &[PairingRow]) -> String {
    let mut widths = PAIRING_HEADERS.map(str::len);
    for row in rows {
        for (width, cell) in widths.iter_mut().zip(row) {
            *width = (*width).max(cell.as_ref().map_or(0, Word::len));
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(widths).map(|(c, wd)| format!("{c:<wd$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(PAIRING_HEADERS.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out += &line(
            row.iter()
                .map(|c| c.as_ref().map(Word::to_string).unwrap_or_default())
                .collect(),
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub word: Word,
    pub issue: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub domain_size: usize,
    pub is_bijection: bool,
    /// Whether the image was also compared with a brute-force census.
    pub census_checked: bool,
    pub counterexamples: Vec<Counterexample>,
}

const MAX_COUNTEREXAMPLES: usize = 32;
const MATERIALIZE_UP_TO: usize = 300;
const CENSUS_UP_TO: usize = 12;

struct Findings(Vec<Counterexample>, usize);

impl Findings {
    fn add(&mut self, word: &Word, issue: impl Into<String>) {
        self.1 += 1;
        if self.0.len() < MAX_COUNTEREXAMPLES {
            self.0.push(Counterexample { word: word.clone(), issue: issue.into() });
        }
    }
}

/// Exhaustive check that `υφ` is a bijection `𝒫_{n+1} → 𝔗_n`.
///
/// Both directions are streamed, so memory stays linear in `n` apart from
/// the direct set comparison done for small `n`.
pub fn verify_bijection(n: usize) -> BijectionReport {
    let mut found = Findings(Vec::new(), 0);
    let materialize = n <= MATERIALIZE_UP_TO;
    let mut image = BTreeSet::new();
    let mut domain_size = 0;

    for code in region_codes_iter(n + 1) {
        domain_size += 1;
        let mapped = match varphi(&code) {
            Ok(v) => v,
            Err(e) => {
                found.add(&code, format!("varphi failed: {e}"));
                continue;
            }
        };
        if !in_tau2(&mapped) {
            found.add(&code, format!("image {mapped} lies outside the twist-knot words"));
        }
        match varphi_inv(&mapped) {
            Ok(back) if back == code => {}
            Ok(back) => found.add(&code, format!("round trip returned {back}")),
            Err(e) => found.add(&code, format!("inverse failed on {mapped}: {e}")),
        }
        if materialize && !image.insert(mapped.clone()) {
            found.add(&code, format!("image {mapped} is hit twice"));
        }
    }

    let mut target_size = 0;
    for word in tau2_iter(n) {
        target_size += 1;
        match varphi_inv(&word).and_then(|pre| varphi(&pre)) {
            Ok(again) if again == word => {}
            Ok(again) => found.add(&word, format!("inverse round trip returned {again}")),
            Err(e) => found.add(&word, format!("inverse round trip failed: {e}")),
        }
        if materialize && !image.contains(&word) {
            found.add(&word, "twist-knot word is not in the image");
        }
    }
    if domain_size != target_size {
        found.add(
            &Word::empty(),
            format!("{domain_size} region codes against {target_size} twist-knot words"),
        );
    }

    let census_checked = n <= CENSUS_UP_TO && n + 2 <= DEFAULT_BRUTEFORCE_CAP;
    if census_checked {
        match twist_knot(n).states_with(2) {
            Ok(states) => {
                let census: BTreeSet<Word> = states.into_iter().collect();
                let mapped: BTreeSet<Word> =
                    region_codes_iter(n + 1).filter_map(|c| varphi(&c).ok()).collect();
                for word in census.symmetric_difference(&mapped) {
                    found.add(word, "image disagrees with the brute-force 2-state census");
                }
            }
            Err(e) => found.add(&Word::empty(), format!("census failed: {e}")),
        }
    }

    BijectionReport {
        n,
        domain_size,
        is_bijection: found.1 == 0,
        census_checked,
        counterexamples: found.0,
    }
}
