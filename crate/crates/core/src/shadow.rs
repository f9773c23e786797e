//! Knot shadows as combinatorial planar maps.
//!
//! A diagram with `n` crossings has `4n` darts. Dart `4c + s` is the half-edge
//! leaving crossing `c` through slot `s`; slots are numbered counterclockwise.
//! `alpha` pairs the two darts of every arc. The rotation successor of a dart
//! is the next slot counterclockwise at the same crossing.
//!
//! The corner of dart `d` is the wedge between `rot⁻¹(d)` and `d`. Faces are
//! the orbits of `rot ∘ alpha`, and the corner of every dart in an orbit lies
//! in that face.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::words::Word;

/// Default limit on the crossing count for exhaustive state enumeration.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 22;

/// A split word: bit `i` is the smoothing at crossing `i` (`0` = A, `1` = B).
pub type StateWord = Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn crossing(self) -> usize {
        self.0 / 4
    }

    pub fn slot(self) -> usize {
        self.0 % 4
    }

    /// Next dart counterclockwise around the same crossing.
    pub fn rot(self) -> Dart {
        Dart(self.0 - self.slot() + (self.slot() + 1) % 4)
    }

    pub fn rot_inv(self) -> Dart {
        Dart(self.0 - self.slot() + (self.slot() + 3) % 4)
    }
}

/// One of the two perfect matchings of a crossing's slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// Slots `(0,1)` and `(2,3)` joined.
    P01_23,
    /// Slots `(1,2)` and `(3,0)` joined.
    P12_30,
}

impl Pairing {
    pub fn other(self) -> Pairing {
        match self {
            Pairing::P01_23 => Pairing::P12_30,
            Pairing::P12_30 => Pairing::P01_23,
        }
    }

    fn slot_pairs(self) -> [(usize, usize); 2] {
        match self {
            Pairing::P01_23 => [(0, 1), (2, 3)],
            Pairing::P12_30 => [(1, 2), (3, 0)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceColor {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub darts: [Dart; 4],
    /// Matching that joins the two A-corners and keeps the B-corners apart.
    pub a_pairing: Pairing,
}

/// An immutable knot shadow with its faces and checkerboard labels derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowDiagram {
    crossings: Vec<Crossing>,
    alpha: Vec<Dart>,
    outer_dart: Option<Dart>,
    /// Closed loops with no crossing; only used by crossingless diagrams.
    free_loops: usize,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    colors: Vec<FaceColor>,
}

impl ShadowDiagram {
    /// Builds a diagram from its arc involution; `alpha[d]` is the far end of
    /// the arc leaving dart `d`. `outer_dart`'s corner must lie on the
    /// unbounded region.
    pub fn new(alpha: Vec<usize>, outer_dart: usize) -> Result<Self> {
        if alpha.is_empty() || !alpha.len().is_multiple_of(4) {
            return Err(Error::Structure(format!(
                "dart count {} is not a positive multiple of 4",
                alpha.len()
            )));
        }
        let n_darts = alpha.len();
        for (d, &e) in alpha.iter().enumerate() {
            if e >= n_darts {
                return Err(Error::Structure(format!("dart {d} maps to missing dart {e}")));
            }
            if e == d {
                return Err(Error::Structure(format!("arc involution fixes dart {d}")));
            }
            if alpha[e] != d {
                return Err(Error::Structure(format!(
                    "arc involution is not an involution at dart {d}"
                )));
            }
        }
        if outer_dart >= n_darts {
            return Err(Error::Structure(format!("outer dart {outer_dart} does not exist")));
        }
        let alpha: Vec<Dart> = alpha.into_iter().map(Dart).collect();
        let (faces, face_of) = trace_faces(&alpha);
        let n = n_darts / 4;
        if faces.len() != n + 2 {
            return Err(Error::Structure(format!(
                "{} faces traced, a connected planar shadow with {n} crossings has {}",
                faces.len(),
                n + 2
            )));
        }
        let outer = Dart(outer_dart);
        let colors = checkerboard_colors(&faces, &face_of, face_of[outer.0])?;

        let mut crossings = Vec::with_capacity(n);
        for c in 0..n {
            let darts = [Dart(4 * c), Dart(4 * c + 1), Dart(4 * c + 2), Dart(4 * c + 3)];
            let corner = |s: usize| colors[face_of[darts[s].0]];
            // corner of slot s sits between slots s-1 and s
            let a_pairing = if corner(1) == FaceColor::B {
                Pairing::P01_23
            } else {
                Pairing::P12_30
            };
            crossings.push(Crossing { darts, a_pairing });
        }
        Ok(ShadowDiagram {
            crossings,
            alpha,
            outer_dart: Some(outer),
            free_loops: 0,
            faces,
            face_of,
            colors,
        })
    }

    /// A diagram without crossings made of `loops` disjoint simple closed curves.
    pub fn crossingless(loops: usize) -> Self {
        ShadowDiagram {
            crossings: Vec::new(),
            alpha: Vec::new(),
            outer_dart: None,
            free_loops: loops,
            faces: Vec::new(),
            face_of: Vec::new(),
            colors: Vec::new(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d.0]
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer_dart
    }

    /// Dart cycles of the faces, in discovery order starting from dart 0.
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    /// Index into [`ShadowDiagram::faces`] of the face holding `d`'s corner.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.0]
    }

    pub fn face_colors(&self) -> &[FaceColor] {
        &self.colors
    }

    pub fn corner_color(&self, d: Dart) -> FaceColor {
        self.colors[self.face_of[d.0]]
    }

    /// Number of closed curves after smoothing every crossing per `word`.
    pub fn resolve(&self, word: &StateWord) -> Result<usize> {
        let n = self.crossing_count();
        if word.len() != n {
            return Err(Error::WordLength { expected: n, got: word.len() });
        }
        Ok(self.resolve_bits(|i| word.bit(i)))
    }

    /// Like [`ShadowDiagram::resolve`] for a mask whose most significant of
    /// `n` bits is crossing 0.
    pub fn resolve_mask(&self, mask: u64) -> usize {
        let n = self.crossing_count();
        self.resolve_bits(|i| (mask >> (n - 1 - i)) & 1 == 1)
    }

    fn resolve_bits(&self, bit: impl Fn(usize) -> bool) -> usize {
        if self.crossings.is_empty() {
            return self.free_loops;
        }
        let mut dsu = DisjointSet::new(self.alpha.len());
        for (d, e) in self.alpha.iter().enumerate() {
            dsu.union(d, e.0);
        }
        for (i, crossing) in self.crossings.iter().enumerate() {
            let pairing = if bit(i) { crossing.a_pairing.other() } else { crossing.a_pairing };
            for (s, t) in pairing.slot_pairs() {
                dsu.union(crossing.darts[s].0, crossing.darts[t].0);
            }
        }
        dsu.set_count()
    }

    /// Every state word grouped by component count, lexicographic within a group.
    pub fn state_census(&self) -> Result<BTreeMap<usize, Vec<StateWord>>> {
        self.state_census_capped(DEFAULT_BRUTEFORCE_CAP)
    }

    pub fn state_census_capped(&self, cap: usize) -> Result<BTreeMap<usize, Vec<StateWord>>> {
        let n = self.crossing_count();
        let counts = self.component_counts(cap)?;
        let mut census: BTreeMap<usize, Vec<StateWord>> = BTreeMap::new();
        for (mask, k) in counts.into_iter().enumerate() {
            census.entry(k).or_default().push(Word::from_mask(mask as u64, n));
        }
        Ok(census)
    }

    /// `counts[mask]` = component count of the state with split mask `mask`.
    pub fn component_counts(&self, cap: usize) -> Result<Vec<usize>> {
        let n = self.crossing_count();
        if n > cap || n >= 64 {
            return Err(Error::CapExceeded { crossings: n, cap });
        }
        Ok((0..1u64 << n)
            .into_par_iter()
            .map(|mask| self.resolve_mask(mask))
            .collect())
    }

    /// State words with exactly `k` components.
    pub fn states_with(&self, k: usize) -> Result<Vec<StateWord>> {
        Ok(self.state_census()?.remove(&k).unwrap_or_default())
    }
}

fn trace_faces(alpha: &[Dart]) -> (Vec<Vec<Dart>>, Vec<usize>) {
    let mut face_of = vec![usize::MAX; alpha.len()];
    let mut faces = Vec::new();
    for start in 0..alpha.len() {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut cycle = Vec::new();
        let mut d = Dart(start);
        while face_of[d.0] == usize::MAX {
            face_of[d.0] = id;
            cycle.push(d);
            d = alpha[d.0].rot();
        }
        faces.push(cycle);
    }
    (faces, face_of)
}

/// Two-colors the faces so that faces sharing an arc differ, outer face A.
fn checkerboard_colors(
    faces: &[Vec<Dart>],
    face_of: &[usize],
    outer: usize,
) -> Result<Vec<FaceColor>> {
    // the corners on either side of half-edge d are those of d and rot(d)
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    for d in 0..face_of.len() {
        let (f, g) = (face_of[d], face_of[Dart(d).rot().0]);
        if f == g {
            return Err(Error::NotCheckerboard(format!(
                "face {f} lies on both sides of dart {d}"
            )));
        }
        adjacent[f].push(g);
        adjacent[g].push(f);
    }
    let mut colors: Vec<Option<FaceColor>> = vec![None; faces.len()];
    colors[outer] = Some(FaceColor::A);
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        let flipped = match colors[f] {
            Some(FaceColor::A) => FaceColor::B,
            _ => FaceColor::A,
        };
        for &g in &adjacent[f] {
            match colors[g] {
                None => {
                    colors[g] = Some(flipped);
                    queue.push_back(g);
                }
                Some(c) if c != flipped => {
                    return Err(Error::NotCheckerboard(format!(
                        "faces {f} and {g} are adjacent and share a color"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    colors
        .into_iter()
        .enumerate()
        .map(|(f, c)| c.ok_or_else(|| Error::Structure(format!("face {f} unreachable"))))
        .collect()
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl DisjointSet {
    fn new(len: usize) -> Self {
        DisjointSet { parent: (0..len).collect(), rank: vec![0; len], sets: len }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        self.sets -= 1;
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }

    fn set_count(&self) -> usize {
        self.sets
    }
}
