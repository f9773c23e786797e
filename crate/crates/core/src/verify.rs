//! The cross-check suite behind `shadowstates verify`.
//!
//! Each check compares independent constructions of the same object and keeps
//! the first disagreement it meets.

use num_bigint::BigUint;

use crate::bijection::verify_bijection;
use crate::families::{build, figure_eight, foil, twist_knot, twist_loop, Family, FamilySpec};
use crate::genpoly::{family_poly, poly_bruteforce_capped, PolyMethod, Polynomial};
use crate::rosette::{insertion_rule_mismatches, Rosette, COINCIDENCE_TOL};
use crate::shadow::ShadowDiagram;
use crate::words::{
    gen_f2, gen_p, gen_t2, gen_tau2, FoilMethod, RegionMethod, TwistKnotMethod, WordSet,
};

type Poly = Polynomial<BigUint>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample, empty on success.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }

    pub fn line(&self) -> String {
        if self.passed {
            format!("PASS {}", self.name)
        } else {
            format!("FAIL {}: {}", self.name, self.detail)
        }
    }
}

/// Options for [`run_suite`].
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub geometry: bool,
    /// Crossing cap for brute-force enumeration.
    pub cap: usize,
}

/// Radii used by the geometry checks.
pub const RADII: [f64; 3] = [1.1, 1.5, 3.0];
/// Largest crossing count for the exhaustive single-bit-flip check.
pub const FLIP_MAX_CROSSINGS: usize = 8;
/// Largest `n` for which word sets are compared with the census.
pub const CENSUS_MAX_N: usize = 12;
const FILTER_MAX_N: usize = 20;

fn first_err<T>(items: impl IntoIterator<Item = Option<T>>) -> Option<T> {
    items.into_iter().flatten().next()
}

fn poly_failure(family: Family, n: usize, cap: usize) -> Option<String> {
    let diagram = build(FamilySpec::new(family, n));
    let brute: Poly = match poly_bruteforce_capped(&diagram, cap) {
        Ok(p) => p,
        Err(e) => return Some(format!("{family} n={n}: {e}")),
    };
    let methods: &[PolyMethod] = match family {
        Family::TwistKnot | Family::FigureEight => &[PolyMethod::Closed, PolyMethod::ViaParts],
        _ => &[PolyMethod::Closed, PolyMethod::Recurrence],
    };
    for &m in methods {
        match family_poly::<BigUint>(family, n, m) {
            Ok(p) if p == brute => {}
            Ok(p) => {
                return Some(format!("{family} n={n}: census {brute} but {} gives {p}", m.name()))
            }
            Err(e) => return Some(format!("{family} n={n}: {e}")),
        }
    }
    None
}

/// Census polynomial equals the closed form and the recurrence.
pub fn check_polynomials(max_n: usize, cap: usize) -> Vec<Check> {
    let mut out: Vec<Check> = [Family::TwistLoop, Family::Foil, Family::TwistKnot]
        .into_iter()
        .map(|family| {
            let failure = first_err((0..=max_n).map(|n| poly_failure(family, n, cap)));
            Check::new(format!("polynomials {family} n<={max_n}"), failure)
        })
        .collect();
    out.push(Check::new(
        "polynomials figure-eight",
        poly_failure(Family::FigureEight, 2, cap),
    ));
    out
}

/// Pairs of shadows related by a 0S² move share their polynomial.
pub fn check_move_equalities(cap: usize) -> Check {
    let pairs: [(&str, ShadowDiagram, ShadowDiagram); 3] = [
        ("T_1 = F_1", twist_loop(1), foil(1)),
        ("T_2 = tau_0", twist_loop(2), twist_knot(0)),
        ("F_3 = tau_1", foil(3), twist_knot(1)),
    ];
    let failure = first_err(pairs.iter().map(|(name, a, b)| {
        let pa: crate::Result<Poly> = poly_bruteforce_capped(a, cap);
        let pb: crate::Result<Poly> = poly_bruteforce_capped(b, cap);
        match (pa, pb) {
            (Ok(pa), Ok(pb)) if pa == pb => None,
            (Ok(pa), Ok(pb)) => Some(format!("{name}: {pa} against {pb}")),
            (Err(e), _) | (_, Err(e)) => Some(format!("{name}: {e}")),
        }
    }));
    Check::new("0S2 move equalities", failure)
}

fn census_words(diagram: &ShadowDiagram, cap: usize) -> crate::Result<WordSet> {
    let census = diagram.state_census_capped(cap)?;
    let words = census.get(&2).cloned().unwrap_or_default();
    WordSet::new(diagram.crossing_count(), words)
}

fn set_failure(label: &str, generated: &WordSet, census: crate::Result<WordSet>) -> Option<String> {
    match census {
        Ok(c) if &c == generated => None,
        Ok(c) => Some(format!(
            "{label}: sets differ at {:?}",
            generated.symmetric_difference(&c).first()
        )),
        Err(e) => Some(format!("{label}: {e}")),
    }
}

/// Generated 2-state words equal the census, and the two 𝔗 constructions agree.
pub fn check_word_sets(max_n: usize, cap: usize) -> Vec<Check> {
    let top = max_n.min(CENSUS_MAX_N);
    let loops = first_err((0..=top).map(|n| {
        set_failure(&format!("T2 n={n}"), &gen_t2(n), census_words(&twist_loop(n), cap))
    }));
    let foils = first_err((0..=top).map(|n| {
        let closed = gen_f2(n, FoilMethod::Closed);
        if closed != gen_f2(n, FoilMethod::Recursive) {
            return Some(format!("F2 n={n}: closed and recursive forms differ"));
        }
        set_failure(&format!("F2 n={n}"), &closed, census_words(&foil(n), cap))
    }));
    let knots = first_err((0..=top).map(|n| {
        set_failure(
            &format!("Tau2 n={n}"),
            &gen_tau2(n, TwistKnotMethod::Definition),
            census_words(&twist_knot(n), cap),
        )
    }));
    let eight = set_failure(
        "figure-eight",
        &gen_tau2(2, TwistKnotMethod::Definition),
        census_words(&figure_eight(), cap),
    );
    let psi = first_err((0..=max_n).map(|n| {
        let def = gen_tau2(n, TwistKnotMethod::Definition);
        if def != gen_tau2(n, TwistKnotMethod::PsiRecursion) {
            Some(format!("n={n}: definition and psi recursion differ"))
        } else if def.len() != n * n + n + 2 {
            Some(format!("n={n}: {} words, expected {}", def.len(), n * n + n + 2))
        } else {
            None
        }
    }));
    vec![
        Check::new(format!("twist-loop 2-states n<={top}"), loops),
        Check::new(format!("foil 2-states n<={top}"), foils),
        Check::new(format!("twist-knot 2-states n<={top}"), knots.or(eight)),
        Check::new(format!("twist-knot words by psi n<={max_n}"), psi),
    ]
}

/// The three region-code constructions agree and have `n² - n + 2` words.
pub fn check_region_codes(max_n: usize) -> Check {
    let top = max_n + 1;
    let failure = first_err((1..=top).map(|n| {
        let closed = gen_p(n, RegionMethod::Closed).expect("closed form is total");
        let recursive = gen_p(n, RegionMethod::Recursive).expect("recursion is total");
        if closed != recursive {
            return Some(format!("n={n}: closed and recursive forms differ"));
        }
        if n <= FILTER_MAX_N && gen_p(n, RegionMethod::Filter).expect("n <= 20") != closed {
            return Some(format!("n={n}: bitonic filter differs"));
        }
        (closed.len() != n * n - n + 2).then(|| format!("n={n}: {} codes", closed.len()))
    }));
    Check::new(format!("region codes n<={top}"), failure)
}

/// The six-case map is a bijection onto the twist-knot 2-states.
pub fn check_bijection(max_n: usize) -> Check {
    let failure = first_err((0..=max_n).map(|n| {
        let report = verify_bijection(n);
        (!report.is_bijection).then(|| match report.counterexamples.first() {
            Some(c) => format!("n={n}: {:?}: {}", c.word, c.issue),
            None => format!("n={n}: failed"),
        })
    }));
    Check::new(format!("bijection n<={max_n}"), failure)
}

/// Flipping one letter of a state word changes the component count by one.
pub fn check_single_flips(max_crossings: usize, cap: usize) -> Check {
    let mut diagrams = Vec::new();
    for n in 0..=max_crossings {
        diagrams.push((format!("T_{n}"), twist_loop(n)));
        diagrams.push((format!("F_{n}"), foil(n)));
        if n + 2 <= max_crossings {
            diagrams.push((format!("tau_{n}"), twist_knot(n)));
        }
    }
    let failure = first_err(diagrams.iter().map(|(name, d)| flip_failure(name, d, cap)));
    Check::new(format!("single-bit flips up to {max_crossings} crossings"), failure)
}

fn flip_failure(name: &str, d: &ShadowDiagram, cap: usize) -> Option<String> {
    let counts = match d.component_counts(cap) {
        Ok(c) => c,
        Err(e) => return Some(format!("{name}: {e}")),
    };
    let c = d.crossing_count();
    for (mask, &k) in counts.iter().enumerate() {
        for bit in 0..c {
            let other = counts[mask ^ (1 << bit)];
            if k.abs_diff(other) != 1 {
                return Some(format!("{name}: state {mask:0c$b} bit {bit}: {k} -> {other}"));
            }
        }
    }
    None
}

fn rosette_failure(n: usize, radius: f64) -> Option<String> {
    let tag = format!("n={n} r={radius}");
    let r = match Rosette::<f64>::regular(n, radius) {
        Ok(r) => r,
        Err(e) => return Some(format!("{tag}: {e}")),
    };
    let codes = match r.region_codes() {
        Ok(c) => c,
        Err(e) => return Some(format!("{tag}: {e}")),
    };
    let expected = n * n - n + 2;
    if codes.len() != expected || r.euler_region_count() != expected {
        return Some(format!(
            "{tag}: {} sampled regions, Euler count {}, expected {expected}",
            codes.len(),
            r.euler_region_count()
        ));
    }
    if Some(&codes) != gen_p(n, RegionMethod::Closed).ok().as_ref() {
        return Some(format!("{tag}: sampled codes are not the bitonic words"));
    }
    if n >= 3 {
        for i in 1..=n {
            match r.lune_codes(i) {
                Ok(l) if l.len() == n - 1 => {}
                Ok(l) => return Some(format!("{tag}: lune {i} has {} regions", l.len())),
                Err(e) => return Some(format!("{tag}: {e}")),
            }
        }
    }
    if r.general_position_margin() <= COINCIDENCE_TOL {
        return Some(format!("{tag}: a vertex lies on a third circle"));
    }
    if let Some(t) = r.int3_violations().first() {
        return Some(format!("{tag}: triple {t:?} breaks the one-vertex-inside rule"));
    }
    if let Some(t) = r.circle_inside_violations().first() {
        return Some(format!("{tag}: triple {t:?} breaks the chord-side rule"));
    }
    None
}

/// Sampled rosette regions against the counting formulas and the code sets.
pub fn check_geometry(max_n: usize) -> Vec<Check> {
    let top = max_n.max(1);
    let mut out: Vec<Check> = RADII
        .iter()
        .map(|&radius| {
            let failure = first_err((1..=top).map(|n| rosette_failure(n, radius)));
            Check::new(format!("rosette r={radius} n<={top}"), failure)
        })
        .collect();
    let rules = first_err((1..top).map(|n| match insertion_rule_mismatches(n, 1.5) {
        Ok(bad) => bad.first().map(|w| format!("n={n}: {w:?}")),
        Err(e) => Some(format!("n={n}: {e}")),
    }));
    out.push(Check::new(format!("circle insertion rules n<={top}"), rules));
    out
}

pub fn run_suite(config: SuiteConfig) -> Vec<Check> {
    let SuiteConfig { max_n, geometry, cap } = config;
    let mut checks = check_polynomials(max_n, cap);
    checks.push(check_move_equalities(cap));
    checks.extend(check_word_sets(max_n, cap));
    checks.push(check_region_codes(max_n));
    checks.push(check_bijection(max_n));
    checks.push(check_single_flips(max_n.min(FLIP_MAX_CROSSINGS), cap));
    if geometry {
        checks.extend(check_geometry(max_n));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shadow::DEFAULT_BRUTEFORCE_CAP;

    #[test]
    fn base_cases_pass() {
        let checks =
            run_suite(SuiteConfig { max_n: 0, geometry: true, cap: DEFAULT_BRUTEFORCE_CAP });
        for c in &checks {
            assert!(c.passed, "{}", c.line());
        }
    }

    #[test]
    fn small_suite_passes() {
        let checks =
            run_suite(SuiteConfig { max_n: 6, geometry: true, cap: DEFAULT_BRUTEFORCE_CAP });
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn cap_is_reported() {
        let checks = check_polynomials(3, 2);
        assert!(!checks[0].passed);
        assert!(checks[0].detail.contains("cap"));
    }
}
