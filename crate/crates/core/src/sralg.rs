//! Stanley-Reisner algebras and their dual coalgebras in three gradings.
//!
//! The algebra has a basis of monomials whose support is a face of `K`. In the
//! exterior grading generators anticommute and square to zero, and signs follow
//! the Koszul rule: a product's sign is the parity of the permutation sorting the
//! concatenated vertex sequence into ascending order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::{SimplicialComplex, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GradingMode {
    /// Coefficients `Z/2`, generators in degree 1.
    Real,
    /// Coefficients `Z`, generators in degree 2.
    Complex,
    /// Coefficients `Z`, anticommuting generators in degree 1.
    Exterior,
}

impl GradingMode {
    pub const ALL: [GradingMode; 3] = [GradingMode::Real, GradingMode::Complex, GradingMode::Exterior];

    pub fn generator_degree(self) -> usize {
        match self {
            GradingMode::Complex => 2,
            GradingMode::Real | GradingMode::Exterior => 1,
        }
    }

    fn squarefree(self) -> bool {
        self == GradingMode::Exterior
    }

    /// Normalises a sign for the coefficient ring (`-1 = 1` mod 2).
    fn coefficient(self, sign: i8) -> i8 {
        if self == GradingMode::Real {
            1
        } else {
            sign
        }
    }
}

/// A monomial, stored as its ascending vertex sequence with repetitions:
/// `v1^2 v3` is `[1, 1, 3]`. The derived order is lexicographic on that sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut vs: Vec<usize> = vertices.into_iter().collect();
        vs.sort_unstable();
        Monomial(vs)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn support(&self) -> VertexSet {
        self.0.iter().fold(VertexSet::EMPTY, |s, &v| s.with(v))
    }

    /// Number of generator factors counted with multiplicity.
    pub fn total_exponent(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, mode: GradingMode) -> usize {
        mode.generator_degree() * self.0.len()
    }

    pub fn exponent(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Whether this is a basis element of the Stanley-Reisner algebra of `k`.
    pub fn is_basis_element(&self, k: &SimplicialComplex, mode: GradingMode) -> bool {
        (!mode.squarefree() || self.is_squarefree()) && k.contains(self.support())
    }

    /// Exponent vector as `(vertex, exponent)` pairs.
    fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &v in &self.0 {
            match out.last_mut() {
                Some((w, e)) if *w == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|(v, e)| if e == 1 { format!("v{v}") } else { format!("v{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Dual basis element of the Stanley-Reisner coalgebra, indexed like a monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CoalgebraBasisElement(pub Monomial);

impl CoalgebraBasisElement {
    pub fn monomial(&self) -> &Monomial {
        &self.0
    }
}

impl fmt::Display for CoalgebraBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 .0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0 .0.iter().map(|v| v.to_string()).collect();
        write!(f, "g[{}]", parts.join(","))
    }
}

/// Basis monomials of degree `d`, in lexicographic order.
pub fn monomial_basis(k: &SimplicialComplex, mode: GradingMode, d: usize) -> Vec<Monomial> {
    let g = mode.generator_degree();
    if !d.is_multiple_of(g) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d / g);
    extend_monomials(k, mode, d / g, 1, VertexSet::EMPTY, &mut current, &mut out);
    out
}

fn extend_monomials(
    k: &SimplicialComplex,
    mode: GradingMode,
    remaining: usize,
    first: usize,
    support: VertexSet,
    current: &mut Vec<usize>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial(current.clone()));
        return;
    }
    for v in first..=k.vertex_count() {
        let next_support = support.with(v);
        // Supports only grow, so a non-face prefix cannot be completed.
        if !k.contains(next_support) {
            continue;
        }
        current.push(v);
        let next_first = if mode.squarefree() { v + 1 } else { v };
        extend_monomials(k, mode, remaining - 1, next_first, next_support, current, out);
        current.pop();
    }
}

/// Dual basis of the coalgebra in degree `d`.
pub fn coalgebra_basis(k: &SimplicialComplex, mode: GradingMode, d: usize) -> Vec<CoalgebraBasisElement> {
    monomial_basis(k, mode, d).into_iter().map(CoalgebraBasisElement).collect()
}

/// Product in the Stanley-Reisner algebra; `None` is zero.
pub fn multiply(
    a: &Monomial,
    b: &Monomial,
    k: &SimplicialComplex,
    mode: GradingMode,
) -> Option<(i8, Monomial)> {
    let (sa, sb) = (a.support(), b.support());
    if !k.contains(sa.union(sb)) {
        return None;
    }
    if mode.squarefree() && (!sa.intersection(sb).is_empty() || !a.is_squarefree() || !b.is_squarefree()) {
        return None;
    }
    let inversions: usize = a.0.iter().map(|&x| b.0.iter().filter(|&&y| y < x).count()).sum();
    let sign = if mode.squarefree() && inversions % 2 == 1 { -1 } else { 1 };
    let mut merged = a.0.clone();
    merged.extend_from_slice(&b.0);
    merged.sort_unstable();
    Some((mode.coefficient(sign), Monomial(merged)))
}

/// Coproduct: the signed sum over all ordered splittings `z = z1 ⊎ z2`.
pub fn coproduct(
    z: &CoalgebraBasisElement,
    mode: GradingMode,
) -> Vec<(i8, CoalgebraBasisElement, CoalgebraBasisElement)> {
    let exps = z.0.exponents();
    let mut out = Vec::new();
    let mut choice = vec![0usize; exps.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (&(v, e), &c) in exps.iter().zip(&choice) {
            left.extend(std::iter::repeat_n(v, c));
            right.extend(std::iter::repeat_n(v, e - c));
        }
        let sign = if mode.squarefree() { shuffle_sign(&z.0 .0, &left) } else { 1 };
        out.push((
            mode.coefficient(sign),
            CoalgebraBasisElement(Monomial(left)),
            CoalgebraBasisElement(Monomial(right)),
        ));
        // odometer over 0..=e for each vertex
        let mut idx = 0;
        while idx < choice.len() && choice[idx] == exps[idx].1 {
            choice[idx] = 0;
            idx += 1;
        }
        if idx == choice.len() {
            break;
        }
        choice[idx] += 1;
    }
    out.sort_by(|x, y| (&x.1, &x.2).cmp(&(&y.1, &y.2)));
    out
}

/// Sign of the shuffle moving `front` (a subsequence of `whole`) to the front.
fn shuffle_sign(whole: &[usize], front: &[usize]) -> i8 {
    let displacement: usize = front
        .iter()
        .enumerate()
        .map(|(k, v)| whole.iter().position(|w| w == v).expect("subsequence") - k)
        .sum();
    if displacement.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `numerator(t) / (1 - t^g)^power` with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSeries {
    pub numerator: Vec<BigInt>,
    pub generator_degree: usize,
    pub denominator_power: usize,
}

impl HilbertSeries {
    /// Denominator `(1 - t^g)^power` as a polynomial.
    pub fn denominator(&self) -> Vec<BigInt> {
        let g = self.generator_degree;
        let mut poly = vec![BigInt::one()];
        for _ in 0..self.denominator_power {
            let mut next = vec![BigInt::zero(); poly.len() + g];
            for (i, c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + g] -= c;
            }
            poly = next;
        }
        poly
    }

    /// Power series coefficients of `t^0..=t^up_to`, by long division.
    pub fn expand(&self, up_to: usize) -> Vec<BigInt> {
        let den = self.denominator();
        let mut series: Vec<BigInt> = Vec::with_capacity(up_to + 1);
        for n in 0..=up_to {
            let mut c = self.numerator.get(n).cloned().unwrap_or_default();
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                c -= d * &series[n - i];
            }
            series.push(c);
        }
        series
    }

    pub fn coefficient(&self, d: usize) -> BigInt {
        self.expand(d).pop().unwrap_or_default()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_polynomial(&self.numerator);
        match self.denominator_power {
            0 => write!(f, "{num}"),
            n => {
                let base = match self.generator_degree {
                    1 => "1 - t".to_string(),
                    g => format!("1 - t^{g}"),
                };
                let den = if n == 1 { format!("({base})") } else { format!("({base})^{n}") };
                write!(f, "({num}) / {den}")
            }
        }
    }
}

pub fn format_polynomial(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &BigInt::zero();
        let magnitude = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let power = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        if i == 0 || !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(&power);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Hilbert series over the common denominator `(1 - t^g)^(dim K + 1)`:
/// each face `σ` contributes `t^{g|σ|} / (1 - t^g)^{|σ|}` (or `t^{|σ|}` when exterior).
pub fn hilbert_series(k: &SimplicialComplex, mode: GradingMode) -> HilbertSeries {
    let g = mode.generator_degree();
    let f: Vec<usize> = std::iter::once(1).chain(k.f_vector()).collect();
    if mode.squarefree() {
        return HilbertSeries {
            numerator: f.iter().map(|&x| BigInt::from(x)).collect(),
            generator_degree: g,
            denominator_power: 0,
        };
    }
    let n = f.len() - 1;
    let mut numerator = vec![BigInt::zero(); g * n + 1];
    for (size, &count) in f.iter().enumerate() {
        // t^{g·size} (1 - t^g)^{n - size}
        let rest = n - size;
        let mut binom = BigInt::one();
        for j in 0..=rest {
            let term = &binom * count;
            let idx = g * (size + j);
            if j % 2 == 0 {
                numerator[idx] += term;
            } else {
                numerator[idx] -= term;
            }
            binom = binom * (rest - j) / (j + 1);
        }
    }
    while numerator.len() > 1 && numerator.last().is_some_and(Zero::is_zero) {
        numerator.pop();
    }
    HilbertSeries { numerator, generator_degree: g, denominator_power: n }
}
