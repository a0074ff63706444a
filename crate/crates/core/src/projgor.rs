//! Degenerations of the diagonal in `P^n x P^n` in closed form, and the
//! Hilbert-polynomial obstruction to the total degeneration being Gorenstein.
//!
//! `P^n` is `G/P_I` for `G` of type `A_n` with `I = {alpha_2, ..., alpha_n}`;
//! a coset representative `w` in `W^I` is determined by the value `w(1)`
//! of the corresponding permutation of `{1, ..., n+1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::degen::fiber_components;
use crate::error::{Error, Result};
use crate::rootsys::{Family, SimpleSubset};
use crate::weyl::{ElementId, WeylGroup};

/// Largest `n` accepted by the polynomial routines; keeps every coefficient
/// of `h(m + p)`, `|p| <= 2n`, inside `i128`.
pub const MAX_POLY_N: usize = 16;

pub type Rational = Ratio<i128>;

/// A decomposition `k^{n+1} = V_0 + ... + V_r` into coordinate blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Composition {
    pub n: usize,
    pub blocks: Vec<usize>,
}

impl Composition {
    pub fn r(&self) -> usize {
        self.blocks.len() - 1
    }

    /// `dim V_0 + ... + dim V_{i-1}`.
    fn before(&self, i: usize) -> usize {
        self.blocks[..i].iter().sum()
    }

    fn after(&self, i: usize) -> usize {
        self.blocks[i + 1..].iter().sum()
    }
}

/// Blocks of the composition attached to `J`: the simple roots outside `J`
/// are the cut positions `j_1 < ... < j_r`, giving blocks
/// `j_1, j_2 - j_1, ..., n + 1 - j_r`.
pub fn composition_from_j(n: usize, j: SimpleSubset) -> Result<Composition> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    if let Some(bad) = j.iter().find(|&i| i >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad + 1,
            rank: n,
        });
    }
    let cuts: Vec<usize> = j.complement(n).to_one_based();
    let mut blocks = Vec::with_capacity(cuts.len() + 1);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n + 1)) {
        blocks.push(c - prev);
        prev = c;
    }
    Ok(Composition { n, blocks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PnComponent {
    pub i: usize,
    pub block: usize,
    /// `w(1)` for the element `w` of `^J W^I` indexing this component.
    pub w_index: usize,
    /// `dim P(V_{<i} + l)`.
    pub x_dim: usize,
    /// `dim P(V_{>i} + l)`.
    pub y_dim: usize,
    /// `dim P(V_i)`, the space of lines `l`.
    pub line_dim: usize,
    pub total_dim: usize,
    pub smooth: bool,
    pub blowup_end: bool,
}

pub fn pn_components(c: &Composition) -> Vec<PnComponent> {
    let r = c.r();
    (0..=r)
        .map(|i| {
            let block = c.blocks[i];
            let blowup_end = i == 0 || i == r;
            let (x_dim, y_dim, line_dim) = (c.before(i), c.after(i), block - 1);
            PnComponent {
                i,
                block,
                w_index: c.before(i) + 1,
                x_dim,
                y_dim,
                line_dim,
                total_dim: x_dim + y_dim + line_dim,
                smooth: block == 1 || blowup_end,
                blowup_end,
            }
        })
        .collect()
}

/// Dimension of `Z_i cap Z_{i+1} = P(V_{<=i}) x P(V_{>i})`.
pub fn pairwise_intersection_dim(c: &Composition, i: usize) -> Result<usize> {
    if i >= c.r() {
        return Err(Error::OutOfRange(format!(
            "component pair {i} out of range 0..{}",
            c.r()
        )));
    }
    Ok((c.before(i + 1) - 1) + (c.after(i) - 1))
}

/// `w(1)` for an element of the Weyl group of `A_n`, read as a permutation
/// of `{1, ..., n+1}` with `s_i` the transposition `(i, i+1)`.
pub fn line_index(g: &WeylGroup, w: ElementId) -> Result<usize> {
    let comps = &g.root_system().dynkin().components;
    if comps.len() != 1 || comps[0].family != Family::A {
        return Err(Error::OutOfRange(format!(
            "line index needs a group of type A_n, got {}",
            g.root_system().dynkin()
        )));
    }
    Ok(g.reduced_word(w).iter().rev().fold(1, |x, &i| {
        let (a, b) = (i + 1, i + 2);
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    }))
}

/// `I = {alpha_2, ..., alpha_n}`, so that `G/P_I = P^n`.
pub fn line_stabilizer(n: usize) -> SimpleSubset {
    SimpleSubset::from_mask(SimpleSubset::full(n).mask() & !1)
}

/// The `w(1)` values of the components computed by [`fiber_components`] on
/// `A_n`, `I = {alpha_2, ..., alpha_n}`, sorted.
pub fn degen_line_indices(g: &WeylGroup, j: SimpleSubset) -> Result<Vec<usize>> {
    let mut out = fiber_components(g, line_stabilizer(g.rank()), j)?
        .into_iter()
        .map(|c| line_index(g, c.w))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Exact univariate polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> RationalPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn constant(c: Rational) -> RationalPolynomial {
        RationalPolynomial::new(vec![c])
    }

    /// `a m + b`.
    pub fn linear(a: Rational, b: Rational) -> RationalPolynomial {
        RationalPolynomial::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().copied().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, &c| acc * x + c)
    }

    pub fn scale(&self, s: Rational) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// `self(a m + b)`, by Horner's rule.
    pub fn compose_linear(&self, a: Rational, b: Rational) -> RationalPolynomial {
        let inner = RationalPolynomial::linear(a, b);
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPolynomial::new(vec![]), |acc, &c| {
                &(&acc * &inner) + &RationalPolynomial::constant(c)
            })
    }

    /// Coefficients as `[numerator, denominator]` pairs.
    pub fn to_pairs(&self) -> Vec<[i128; 2]> {
        self.coeffs
            .iter()
            .map(|c| [*c.numer(), *c.denom()])
            .collect()
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &RationalPolynomial, k: usize| {
            p.coeffs.get(k).copied().unwrap_or_else(Rational::zero)
        };
        RationalPolynomial::new((0..len).map(|k| get(self, k) + get(rhs, k)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::new(vec![]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, &x) in self.coeffs.iter().enumerate() {
            for (b, &y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        self.scale(-Rational::one())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "m".into(),
                _ => format!("m^{k}"),
            };
            if mag.is_one() && k > 0 {
                f.write_str(&mono)?;
            } else if mag.is_integer() || k == 0 {
                write!(f, "{mag}{mono}")?;
            } else {
                write!(f, "({mag}){mono}")?;
            }
        }
        Ok(())
    }
}

fn check_poly_n(n: usize) -> Result<()> {
    if (1..=MAX_POLY_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "n = {n} outside 1..={MAX_POLY_N}"
        )))
    }
}

/// `chi(P^n, O(2m)) = (2m+1)(2m+2)...(2m+n) / n!`.
pub fn diag_hilbert_poly(n: usize) -> Result<RationalPolynomial> {
    check_poly_n(n)?;
    let two = Rational::from_integer(2);
    let fact: i128 = (1..=n as i128).product();
    let prod = (1..=n as i128).fold(RationalPolynomial::constant(Rational::one()), |acc, i| {
        &acc * &RationalPolynomial::linear(two, Rational::from_integer(i))
    });
    Ok(prod.scale(Rational::new(1, fact)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `h(-m) = h(m + p)`.
    Paper,
    /// `h(-m) = (-1)^n h(m + p)`, with the Serre-duality sign.
    Signed,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "paper" => Ok(Variant::Paper),
            "signed" => Ok(Variant::Signed),
            _ => Err(Error::OutOfRange(format!(
                "unknown variant {s:?}, expected paper or signed"
            ))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Paper => "paper",
            Variant::Signed => "signed",
        })
    }
}

fn duality_sign(n: usize, variant: Variant) -> i128 {
    match variant {
        Variant::Paper => 1,
        Variant::Signed if n % 2 == 1 => -1,
        Variant::Signed => 1,
    }
}

/// Scans `p` in `[-2n, 2n]` by increasing `|p|` (negative first) for an
/// exact polynomial identity `h(-m) = sign * h(m + p)`.
pub fn gorenstein_obstruction(n: usize, variant: Variant) -> Result<Option<i64>> {
    let h = diag_hilbert_poly(n)?;
    let one = Rational::one();
    let lhs = h.compose_linear(-one, Rational::zero());
    let sign = Rational::from_integer(duality_sign(n, variant));
    let bound = 2 * n as i64;
    let candidates = (0..=bound).flat_map(|a| if a == 0 { vec![0] } else { vec![-a, a] });
    for p in candidates {
        let rhs = h
            .compose_linear(one, Rational::from_integer(p as i128))
            .scale(sign);
        if rhs == lhs {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// The same question answered by comparing root multisets and leading
/// coefficients. Roots are kept doubled so they stay integral: `h(-m)`
/// vanishes at `2m = 1..n`, and `h(m + p)` at `2m = -2p - i`.
pub fn gorenstein_by_roots(n: usize, variant: Variant) -> Result<Option<i64>> {
    check_poly_n(n)?;
    let n_i = n as i64;
    // Leading coefficients: (-2)^n / n! against sign * 2^n / n!.
    let lhs_sign = if n.is_multiple_of(2) { 1 } else { -1 };
    if lhs_sign != duality_sign(n, variant) {
        return Ok(None);
    }
    let lhs_roots: Vec<i64> = (1..=n_i).collect();
    // Matching the smallest roots: 1 = -2p - n.
    if (n_i + 1) % 2 != 0 {
        return Ok(None);
    }
    let p = -(n_i + 1) / 2;
    let mut rhs_roots: Vec<i64> = (1..=n_i).map(|i| -2 * p - i).collect();
    rhs_roots.sort_unstable();
    Ok((rhs_roots == lhs_roots).then_some(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            composition_from_j(2, SimpleSubset::from_mask(1))
                .unwrap()
                .blocks,
            vec![2, 1]
        );
        assert_eq!(
            composition_from_j(4, SimpleSubset::full(4)).unwrap().blocks,
            vec![5]
        );
        assert_eq!(
            composition_from_j(3, SimpleSubset::empty()).unwrap().blocks,
            vec![1, 1, 1, 1]
        );
        assert!(composition_from_j(2, SimpleSubset::from_mask(0b100)).is_err());
    }

    #[test]
    fn component_examples() {
        let c = Composition {
            n: 2,
            blocks: vec![2, 1],
        };
        let comps = pn_components(&c);
        assert_eq!(comps.len(), 2);
        assert!(comps
            .iter()
            .all(|z| z.smooth && z.blowup_end && z.total_dim == 2));
        assert_eq!(
            comps.iter().map(|z| z.w_index).collect::<Vec<_>>(),
            vec![1, 3]
        );

        let c = Composition {
            n: 3,
            blocks: vec![1, 1, 1, 1],
        };
        let comps = pn_components(&c);
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|z| z.smooth));
        // Z_i = P(V_{<=i}) x P(V_{>=i})
        for z in &comps {
            assert_eq!((z.x_dim, z.y_dim), (z.i, 3 - z.i));
        }

        let c = Composition {
            n: 4,
            blocks: vec![1, 2, 2],
        };
        let smooth: Vec<bool> = pn_components(&c).iter().map(|z| z.smooth).collect();
        assert_eq!(smooth, vec![true, false, true]);
    }

    #[test]
    fn intersection_examples() {
        let c = Composition {
            n: 2,
            blocks: vec![2, 1],
        };
        assert_eq!(pairwise_intersection_dim(&c, 0).unwrap(), 1);
        assert!(pairwise_intersection_dim(&c, 1).is_err());
        let c = Composition {
            n: 1,
            blocks: vec![1, 1],
        };
        assert_eq!(pairwise_intersection_dim(&c, 0).unwrap(), 0);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(diag_hilbert_poly(1).unwrap().coeffs(), &[r(1, 1), r(2, 1)]);
        assert_eq!(
            diag_hilbert_poly(2).unwrap().coeffs(),
            &[r(1, 1), r(3, 1), r(2, 1)]
        );
        for n in 1..=MAX_POLY_N {
            let h = diag_hilbert_poly(n).unwrap();
            assert_eq!(h.eval(Rational::zero()), Rational::one());
            assert_eq!(h.degree(), Some(n));
        }
        assert!(diag_hilbert_poly(0).is_err());
        assert_eq!(diag_hilbert_poly(2).unwrap().to_string(), "2m^2 + 3m + 1");
        assert_eq!(
            diag_hilbert_poly(3).unwrap().to_string(),
            "(4/3)m^3 + 4m^2 + (11/3)m + 1"
        );
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(gorenstein_obstruction(2, Variant::Paper).unwrap(), None);
        assert_eq!(
            gorenstein_obstruction(3, Variant::Signed).unwrap(),
            Some(-2)
        );
        assert_eq!(gorenstein_obstruction(4, Variant::Signed).unwrap(), None);
    }

    #[test]
    fn line_index_needs_type_a() {
        let g = WeylGroup::generate(RootSystem::from_type_str("B2").unwrap());
        assert!(line_index(&g, g.identity()).is_err());
        let g = WeylGroup::generate(RootSystem::from_type_str("A2").unwrap());
        assert_eq!(line_index(&g, g.from_word(&[1, 0])).unwrap(), 3);
        assert_eq!(line_index(&g, g.from_word(&[0])).unwrap(), 2);
    }

    #[test]
    fn projective_plane_matches_degen() {
        let g = WeylGroup::generate(RootSystem::from_type_str("A2").unwrap());
        assert_eq!(
            degen_line_indices(&g, SimpleSubset::from_mask(1)).unwrap(),
            vec![1, 3]
        );
    }
}
