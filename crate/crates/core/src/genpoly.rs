//! Generating polynomials `D(x) = Σ_S x^{|S|}` and their closed forms.
//!
//! [`Polynomial`] is dense and generic over its coefficient semiring; the
//! crate root fixes [`GenPolynomial`](crate::GenPolynomial) to arbitrary
//! precision naturals.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{CheckedSub, FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::shadow::{ShadowDiagram, DEFAULT_BRUTEFORCE_CAP};

/// Coefficient types usable in a [`Polynomial`].
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + PartialEq + Zero + One + CheckedSub + FromPrimitive
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + fmt::Display + PartialEq + Zero + One + CheckedSub + FromPrimitive
{
}

/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| lift(c)).collect())
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = C::one();
        Polynomial { coeffs }
    }

    /// `(1 + x)^n` by Pascal's rule.
    pub fn one_plus_x_pow(n: usize) -> Self {
        let mut row = vec![C::one()];
        for _ in 0..n {
            let mut next = vec![C::zero(); row.len() + 1];
            for (k, c) in row.into_iter().enumerate() {
                next[k] = next[k].clone() + c.clone();
                next[k + 1] = next[k + 1].clone() + c;
            }
            row = next;
        }
        Polynomial { coeffs: row }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients `0..len`, zero padded.
    pub fn padded(&self, len: usize) -> Vec<C> {
        (0..len).map(|k| self.coeff(k)).collect()
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, factor: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    /// `self - other`, or `None` if some coefficient would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| self.coeff(k).checked_sub(&other.coeff(k)))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }
}

impl<C: Coefficient> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{k}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

fn lift<C: Coefficient>(v: u64) -> C {
    C::from_u64(v).expect("coefficient type holds small integers")
}

fn poly<C: Coefficient>(coeffs: &[u64]) -> Polynomial<C> {
    Polynomial::from_u64s(coeffs)
}

/// Brute-force generating polynomial: coefficient `k` counts the `k`-states.
pub fn poly_bruteforce<C: Coefficient>(diagram: &ShadowDiagram) -> Result<Polynomial<C>> {
    poly_bruteforce_capped(diagram, DEFAULT_BRUTEFORCE_CAP)
}

pub fn poly_bruteforce_capped<C: Coefficient>(
    diagram: &ShadowDiagram,
    cap: usize,
) -> Result<Polynomial<C>> {
    let counts = diagram.component_counts(cap)?;
    let mut hist: Vec<u64> = Vec::new();
    for k in counts {
        if hist.len() <= k {
            hist.resize(k + 1, 0);
        }
        hist[k] += 1;
    }
    Ok(poly(&hist))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyMethod {
    /// Closed form in `x`.
    Closed,
    /// Split the first crossing and recurse on the smaller family member.
    Recurrence,
    /// `τ_n = T_n + (x + 2) F_n`, from splitting the two clasp crossings.
    ViaParts,
}

impl PolyMethod {
    pub fn name(self) -> &'static str {
        match self {
            PolyMethod::Closed => "closed",
            PolyMethod::Recurrence => "recurrence",
            PolyMethod::ViaParts => "via-parts",
        }
    }
}

fn unsupported(family: &str, method: PolyMethod) -> Error {
    Error::Argument(format!("method {} is not defined for the {family}", method.name()))
}

/// `T_n(x) = x (x + 1)^n`, or `T_n = (x + 1) T_{n-1}` from `T_0 = x`.
pub fn twist_loop_poly<C: Coefficient>(n: usize, method: PolyMethod) -> Result<Polynomial<C>> {
    match method {
        PolyMethod::Closed => Ok(Polynomial::one_plus_x_pow(n).shift(1)),
        PolyMethod::Recurrence => {
            let x_plus_one = poly::<C>(&[1, 1]);
            Ok((0..n).fold(poly(&[0, 1]), |t, _| &x_plus_one * &t))
        }
        PolyMethod::ViaParts => Err(unsupported("twist loop", method)),
    }
}

/// `F_n(x) = (x + 1)^n + x^2 - 1`, or `F_n = T_{n-1} + F_{n-1}` from `F_0 = x^2`.
pub fn foil_poly<C: Coefficient>(n: usize, method: PolyMethod) -> Result<Polynomial<C>> {
    match method {
        PolyMethod::Closed => Ok((Polynomial::one_plus_x_pow(n) + poly(&[0, 0, 1]))
            .checked_sub(&poly(&[1]))
            .expect("(x+1)^n has constant term 1")),
        PolyMethod::Recurrence => {
            let mut foil = poly(&[0, 0, 1]);
            for m in 1..=n {
                foil = &twist_loop_poly::<C>(m - 1, PolyMethod::Recurrence)? + &foil;
            }
            Ok(foil)
        }
        PolyMethod::ViaParts => Err(unsupported("foil", method)),
    }
}

/// `τ_n(x) = 2 (1 + x)^{n+1} + x^3 + 2x^2 - x - 2`, or `T_n + (x + 2) F_n`.
pub fn twist_knot_poly<C: Coefficient>(n: usize, method: PolyMethod) -> Result<Polynomial<C>> {
    match method {
        PolyMethod::Closed => {
            let two = lift::<C>(2);
            Ok((Polynomial::one_plus_x_pow(n + 1).scale(&two) + poly(&[0, 0, 2, 1]))
                .checked_sub(&poly(&[2, 1]))
                .expect("2(1+x)^{n+1} has coefficients of x^0, x^1 at least 2"))
        }
        PolyMethod::ViaParts => {
            let t = twist_loop_poly::<C>(n, PolyMethod::Closed)?;
            let f = foil_poly::<C>(n, PolyMethod::Closed)?;
            Ok(&t + &(&poly::<C>(&[2, 1]) * &f))
        }
        PolyMethod::Recurrence => Err(unsupported("twist knot", method)),
    }
}

/// Closed form or recurrence for a family member; the figure-eight knot is `τ_2`.
pub fn family_poly<C: Coefficient>(
    family: Family,
    n: usize,
    method: PolyMethod,
) -> Result<Polynomial<C>> {
    match family {
        Family::TwistLoop => twist_loop_poly(n, method),
        Family::Foil => foil_poly(n, method),
        Family::TwistKnot => twist_knot_poly(n, method),
        Family::FigureEight => twist_knot_poly(2, method),
    }
}

/// Coefficient rows `0..=n_max` produced by the coefficient recurrences.
///
/// `t_{n,k} = t_{n-1,k} + t_{n-1,k-1}` from `t_{0,1} = 1`;
/// `f_{n,k} = f_{n-1,k} + t_{n-1,k}` seeded with rows 0 and 1 of the closed form;
/// `τ_{n,k} = f_{n,k-1} + 2 f_{n,k} + t_{n,k}`.
/// Columns run over `0..=width` where `width` is the largest degree in the table.
pub fn coefficient_table<C: Coefficient>(family: Family, n_max: usize) -> Result<Vec<Vec<C>>> {
    let width = n_max + 3;
    let at = |row: &[C], k: isize| -> C {
        if k < 0 {
            C::zero()
        } else {
            row.get(k as usize).cloned().unwrap_or_else(C::zero)
        }
    };

    let mut t_rows: Vec<Vec<C>> = Vec::with_capacity(n_max + 1);
    let mut t0 = vec![C::zero(); width];
    t0[1] = C::one();
    t_rows.push(t0);
    for n in 1..=n_max {
        let prev = &t_rows[n - 1];
        let row = (0..width as isize)
            .map(|k| if k == 0 { C::zero() } else { at(prev, k) + at(prev, k - 1) })
            .collect();
        t_rows.push(row);
    }

    let mut f_rows: Vec<Vec<C>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max.min(1) {
        f_rows.push(foil_poly::<C>(n, PolyMethod::Closed)?.padded(width));
    }
    for n in 2..=n_max {
        let row = (0..width as isize)
            .map(|k| {
                if k == 0 {
                    C::zero()
                } else {
                    at(&f_rows[n - 1], k) + at(&t_rows[n - 1], k)
                }
            })
            .collect();
        f_rows.push(row);
    }

    let rows = match family {
        Family::TwistLoop => t_rows,
        Family::Foil => f_rows,
        Family::TwistKnot | Family::FigureEight => {
            let two = lift::<C>(2);
            let range = if family == Family::FigureEight { 2..=2 } else { 0..=n_max };
            if family == Family::FigureEight && n_max < 2 {
                return Err(Error::Argument(
                    "the figure-eight knot is the 2-twist knot; n_max must be at least 2".into(),
                ));
            }
            range
                .map(|n| {
                    (0..width as isize)
                        .map(|k| {
                            if k == 0 {
                                C::zero()
                            } else {
                                at(&f_rows[n], k - 1)
                                    + two.clone() * at(&f_rows[n], k)
                                    + at(&t_rows[n], k)
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    Ok(trim_columns(rows))
}

fn trim_columns<C: Coefficient>(mut rows: Vec<Vec<C>>) -> Vec<Vec<C>> {
    let used = rows
        .iter()
        .map(|r| r.iter().rposition(|c| !c.is_zero()).map_or(1, |p| p + 1))
        .max()
        .unwrap_or(0);
    for r in &mut rows {
        r.truncate(used);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{foil, twist_knot, twist_loop};
    use num_bigint::BigUint;

    type P = Polynomial<BigUint>;

    fn coeffs(p: &P) -> Vec<u64> {
        p.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn arithmetic() {
        let a = P::from_u64s(&[1, 1]);
        assert_eq!(coeffs(&(&a * &a)), [1, 2, 1]);
        assert_eq!(coeffs(&P::one_plus_x_pow(4)), [1, 4, 6, 4, 1]);
        assert_eq!(P::from_u64s(&[0, 0, 0]).degree(), None);
        assert_eq!(P::from_u64s(&[3, 0, 2]).eval(&BigUint::from(2u32)), BigUint::from(11u32));
        assert!(P::from_u64s(&[1]).checked_sub(&P::from_u64s(&[2])).is_none());
        assert_eq!(P::from_u64s(&[0, 5, 8, 3]).to_string(), "3x^3 + 8x^2 + 5x");
        assert_eq!(P::monomial(1).to_string(), "x");
    }

    #[test]
    fn generic_over_coefficients() {
        let small: Polynomial<u64> = twist_knot_poly(5, PolyMethod::Closed).unwrap();
        let big: P = twist_knot_poly(5, PolyMethod::Closed).unwrap();
        assert_eq!(small.coeffs(), coeffs(&big).as_slice());
        let wide: Polynomial<u128> = foil_poly(40, PolyMethod::Recurrence).unwrap();
        assert_eq!(wide.coeff(2), 40 * 39 / 2 + 1);
    }

    #[test]
    fn named_examples() {
        assert_eq!(coeffs(&twist_loop_poly(6, PolyMethod::Closed).unwrap()), [0, 1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(coeffs(&twist_loop_poly(0, PolyMethod::Recurrence).unwrap()), [0, 1]);
        assert_eq!(coeffs(&foil_poly(5, PolyMethod::Recurrence).unwrap()), [0, 5, 11, 10, 5, 1]);
        assert_eq!(coeffs(&foil_poly(0, PolyMethod::Closed).unwrap()), [0, 0, 1]);
        assert_eq!(coeffs(&twist_knot_poly(2, PolyMethod::ViaParts).unwrap()), [0, 5, 8, 3]);
        assert_eq!(coeffs(&twist_knot_poly(0, PolyMethod::Closed).unwrap()), [0, 1, 2, 1]);
        assert_eq!(
            coeffs(&twist_knot_poly(5, PolyMethod::Closed).unwrap()),
            [0, 11, 32, 41, 30, 12, 2]
        );
        assert!(twist_knot_poly::<u64>(1, PolyMethod::Recurrence).is_err());
    }

    #[test]
    fn bruteforce_matches_small_members() {
        let fig8: P = poly_bruteforce(&crate::families::figure_eight()).unwrap();
        assert_eq!(coeffs(&fig8), [0, 5, 8, 3]);
        let trefoil: P = poly_bruteforce(&twist_knot(1)).unwrap();
        assert_eq!(coeffs(&trefoil), [0, 3, 4, 1]);
        let unknot: P = poly_bruteforce(&twist_loop(0)).unwrap();
        assert_eq!(coeffs(&unknot), [0, 1]);
        let f0: P = poly_bruteforce(&foil(0)).unwrap();
        assert_eq!(coeffs(&f0), [0, 0, 1]);
        let t10: P = poly_bruteforce(&twist_loop(10)).unwrap();
        assert_eq!(t10, twist_loop_poly(10, PolyMethod::Closed).unwrap());
    }

    #[test]
    fn tables_follow_recurrences() {
        let t: Vec<Vec<u64>> = coefficient_table(Family::TwistLoop, 6).unwrap();
        assert_eq!(t[6], [0, 1, 6, 15, 20, 15, 6, 1]);
        let tau: Vec<Vec<u64>> = coefficient_table(Family::TwistKnot, 4).unwrap();
        assert_eq!(tau[4], [0, 9, 22, 21, 10, 2]);
        let f: Vec<Vec<u64>> = coefficient_table(Family::Foil, 8).unwrap();
        assert_eq!(f[8], [0, 8, 29, 56, 70, 56, 28, 8, 1]);
        assert_eq!(f[0], [0, 0, 1, 0, 0, 0, 0, 0, 0]);
        let fig8: Vec<Vec<u64>> = coefficient_table(Family::FigureEight, 2).unwrap();
        assert_eq!(fig8, vec![vec![0, 5, 8, 3]]);
    }

    #[test]
    fn tables_match_closed_forms() {
        for family in [Family::TwistLoop, Family::Foil, Family::TwistKnot] {
            let table: Vec<Vec<BigUint>> = coefficient_table(family, 25).unwrap();
            for (n, row) in table.iter().enumerate() {
                let p: P = family_poly(family, n, PolyMethod::Closed).unwrap();
                assert_eq!(P::new(row.clone()), p, "{family} n={n}");
            }
        }
    }
}
