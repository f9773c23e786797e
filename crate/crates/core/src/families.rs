//! Canonical shadows of the twist loop, foil and twist knot families.
//!
//! Every family is built around a horizontal twist region of two strands.
//! Twist crossing `i` has slots `NE = 0`, `NW = 1`, `SW = 2`, `SE = 3`, and is
//! joined to crossing `i + 1` by a top arc `NE → NW` and a bottom arc `SE → SW`.
//! The four loose ends of the twist region are then closed differently per family.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::shadow::ShadowDiagram;

/// The diagram families the crate knows how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    TwistLoop,
    Foil,
    TwistKnot,
    FigureEight,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::TwistLoop => "twist-loop",
            Family::Foil => "foil",
            Family::TwistKnot => "twist-knot",
            Family::FigureEight => "figure-eight",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "twist-loop" => Ok(Family::TwistLoop),
            "foil" => Ok(Family::Foil),
            "twist-knot" => Ok(Family::TwistKnot),
            "figure-eight" => Ok(Family::FigureEight),
            _ => Err(Error::Argument(format!(
                "unknown family {s:?} (expected twist-loop, foil, twist-knot or figure-eight)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    /// Ignored for [`Family::FigureEight`].
    pub half_twists: usize,
}

impl FamilySpec {
    pub fn new(family: Family, half_twists: usize) -> Self {
        FamilySpec { family, half_twists }
    }

    pub fn crossing_count(&self) -> usize {
        match self.family {
            Family::TwistLoop | Family::Foil => self.half_twists,
            Family::TwistKnot => self.half_twists + 2,
            Family::FigureEight => 4,
        }
    }
}

const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

struct Builder {
    alpha: Vec<usize>,
}

impl Builder {
    fn new(crossings: usize) -> Self {
        Builder { alpha: vec![usize::MAX; 4 * crossings] }
    }

    fn arc(&mut self, (c1, s1): (usize, usize), (c2, s2): (usize, usize)) {
        let (a, b) = (4 * c1 + s1, 4 * c2 + s2);
        self.alpha[a] = b;
        self.alpha[b] = a;
    }

    /// Twist crossings `first..first + n`, left to right.
    fn twist_region(&mut self, first: usize, n: usize) {
        for i in first..first + n - 1 {
            self.arc((i, NE), (i + 1, NW));
            self.arc((i, SE), (i + 1, SW));
        }
    }

    fn finish(self, outer: (usize, usize)) -> ShadowDiagram {
        ShadowDiagram::new(self.alpha, 4 * outer.0 + outer.1)
            .expect("family constructions are planar shadows")
    }
}

/// `T_n`: the twist region closed by a cap at each end. Crossings left to right.
pub fn twist_loop(n: usize) -> ShadowDiagram {
    if n == 0 {
        return ShadowDiagram::crossingless(1);
    }
    let mut b = Builder::new(n);
    b.twist_region(0, n);
    b.arc((0, NW), (0, SW));
    b.arc((n - 1, NE), (n - 1, SE));
    // the region above the strip is unbounded
    b.finish((0, NW))
}

/// `F_n`: the twist region closed like a braid, both closing arcs passing
/// above the strip with the bottom-end arc outermost. Crossings left to
/// right, which is one cyclic order around the foil.
pub fn foil(n: usize) -> ShadowDiagram {
    if n == 0 {
        return ShadowDiagram::crossingless(2);
    }
    let mut b = Builder::new(n);
    b.twist_region(0, n);
    b.arc((n - 1, NE), (0, NW));
    b.arc((n - 1, SE), (0, SW));
    // the region below the strip, outside the outer closing arc, is unbounded
    b.finish((0, SE))
}

/// `τ_n`: the end loops of `T_n` hooked through each other by a two-crossing
/// clasp. Crossing 0 is the clasp crossing on the unbounded region, crossing 1
/// the inner clasp crossing, then the twist crossings left to right.
pub fn twist_knot(n: usize) -> ShadowDiagram {
    const OUTER: usize = 0;
    const INNER: usize = 1;
    let mut b = Builder::new(n + 2);
    // the lens between the clasp crossings
    b.arc((INNER, NE), (OUTER, SE));
    b.arc((INNER, NW), (OUTER, SW));
    if n == 0 {
        b.arc((INNER, SW), (INNER, SE));
        b.arc((OUTER, NW), (OUTER, NE));
    } else {
        let (first, last) = (2, n + 1);
        b.twist_region(first, n);
        b.arc((INNER, SW), (first, NW));
        b.arc((INNER, SE), (last, NE));
        b.arc((OUTER, NW), (first, SW));
        b.arc((OUTER, NE), (last, SE));
    }
    b.finish((OUTER, NW))
}

/// The figure-eight shadow: the 2-twist knot with its arcs written out.
pub fn figure_eight() -> ShadowDiagram {
    // crossings: 0 outer clasp, 1 inner clasp, 2 and 3 the twist region
    let alpha = vec![
        15, 10, 5, 4, // outer clasp: NE, NW, SW, SE
        3, 2, 9, 12, // inner clasp
        13, 6, 1, 14, // left twist crossing
        7, 8, 11, 0, // right twist crossing
    ];
    ShadowDiagram::new(alpha, 1).expect("figure-eight shadow is planar")
}

pub fn build(spec: FamilySpec) -> ShadowDiagram {
    match spec.family {
        Family::TwistLoop => twist_loop(spec.half_twists),
        Family::Foil => foil(spec.half_twists),
        Family::TwistKnot => twist_knot(spec.half_twists),
        Family::FigureEight => figure_eight(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shadow::{Dart, FaceColor};
    use crate::words::{w, Word};

    fn sizes(d: &ShadowDiagram) -> Vec<(usize, usize)> {
        d.state_census().unwrap().into_iter().map(|(k, v)| (k, v.len())).collect()
    }

    fn words(list: &[Word]) -> Vec<String> {
        list.iter().map(Word::to_string).collect()
    }

    #[test]
    fn face_counts() {
        assert_eq!(twist_loop(1).faces().len(), 3);
        assert_eq!(figure_eight().faces().len(), 6);
        assert_eq!(twist_knot(2).faces().len(), 6);
        for n in 1..=10 {
            assert_eq!(twist_loop(n).faces().len(), n + 2);
            assert_eq!(foil(n).faces().len(), n + 2);
            assert_eq!(twist_knot(n).faces().len(), n + 4);
        }
    }

    #[test]
    fn calibration() {
        let t1 = twist_loop(1);
        assert_eq!(t1.resolve(&w("0")).unwrap(), 2);
        assert_eq!(t1.resolve(&w("1")).unwrap(), 1);
        assert_eq!(words(&twist_knot(0).states_with(2).unwrap()), ["01", "10"]);
    }

    #[test]
    fn degenerate_members() {
        assert_eq!(sizes(&twist_loop(0)), [(1, 1)]);
        assert_eq!(sizes(&foil(0)), [(2, 1)]);
        assert_eq!(sizes(&twist_knot(0)), [(1, 1), (2, 2), (3, 1)]);
    }

    #[test]
    fn figure_eight_labels() {
        let d = figure_eight();
        let colors = d.face_colors();
        let a = colors.iter().filter(|&&c| c == FaceColor::A).count();
        assert_eq!((a, colors.len() - a), (3, 3));
        assert_eq!(d.corner_color(Dart(1)), FaceColor::A);
        assert_eq!(sizes(&d), [(1, 5), (2, 8), (3, 3)]);
    }

    #[test]
    fn figure_eight_is_two_twist_knot() {
        assert_eq!(figure_eight(), twist_knot(2));
    }

    #[test]
    fn figure_eight_complements_stay_in_range() {
        let d = figure_eight();
        for mask in 0..16u64 {
            let k = d.resolve_mask(mask);
            let k_bar = d.resolve_mask(!mask & 0xf);
            assert!((1..=3).contains(&k) && (1..=3).contains(&k_bar));
        }
    }

    #[test]
    fn corners_alternate_at_every_crossing() {
        for d in [twist_loop(5), foil(5), twist_knot(5), figure_eight()] {
            for c in d.crossings() {
                let col: Vec<FaceColor> = c.darts.iter().map(|&x| d.corner_color(x)).collect();
                assert!(col[0] != col[1] && col[1] != col[2] && col[2] != col[3]);
            }
        }
    }

    #[test]
    fn small_censuses() {
        assert_eq!(sizes(&twist_loop(2)), [(1, 1), (2, 2), (3, 1)]);
        assert_eq!(
            words(&twist_knot(1).states_with(2).unwrap()),
            ["000", "011", "101", "110"]
        );
        assert_eq!(twist_knot(1).state_census().unwrap()[&3].len(), 1);
        assert_eq!(foil(1).resolve(&w("1")).unwrap(), 2);
    }

    #[test]
    fn family_names_round_trip() {
        for f in [Family::TwistLoop, Family::Foil, Family::TwistKnot, Family::FigureEight] {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("pretzel".parse::<Family>().is_err());
        assert_eq!(FamilySpec::new(Family::TwistKnot, 3).crossing_count(), 5);
    }
}
