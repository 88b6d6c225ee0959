//! Character polynomials and the closed trace formulas.
//!
//! A [`CharacterPoly`] is an element of the group ring `Z[x]/(x^n - 1)`; the
//! variable stands for a fixed primitive `n`-th root of unity `xi`, so a
//! polynomial records which powers of `xi` occur in a Brauer character and with
//! which multiplicity. All polynomials here use the action `[xi](pi') = xi pi'`
//! on the uniformizer of the extension.
//!
//! The alternating trace of `xi` on `H^0 - H^1` of the special fiber after base
//! change is the sum of one contribution per component ([`vertex_trace`]) and one
//! per intersection point ([`edge_trace`]).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dual_graph::DualGraph;
use crate::error::{Error, Result};
use crate::hj::{mod_inverse, resolve, ResolutionChain, SingularityParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPoly {
    modulus: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

impl CharacterPoly {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(modulus: u64, c: impl Into<BigInt>) -> Self {
        Self::monomial(modulus, 0, c)
    }

    /// `c * x^e`, with `e` reduced modulo the modulus (negative exponents allowed).
    pub fn monomial(modulus: u64, exponent: i128, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(modulus);
        p.add_term(exponent, c.into());
        p
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coefficient(&self, exponent: u64) -> BigInt {
        self.coeffs
            .get(&(exponent % self.modulus))
            .cloned()
            .unwrap_or_default()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value of the formal sum at `x = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub(crate) fn add_term(&mut self, exponent: i128, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = exponent.rem_euclid(self.modulus as i128) as u64;
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e as i128, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.modulus);
        for (e, v) in &self.coeffs {
            out.add_term(*e as i128, v * c);
        }
        out
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: i128) -> Self {
        let mut out = Self::zero(self.modulus);
        for (k, v) in &self.coeffs {
            out.add_term(*k as i128 + e, v.clone());
        }
        out
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (e, true) => write!(f, "x^{e}")?,
                (e, false) => write!(f, "{abs}*x^{e}")?,
            }
        }
        Ok(())
    }
}

/// An intersection point with a chosen direction `source -> target`.
///
/// The singularity over it is `(m(source), m(target), n)`: the chain end
/// `C_1` (multiplicity `mu_1`) meets the target component, and `C_L`
/// (multiplicity `mu_L`) meets the source component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeOrientation {
    pub edge: usize,
    pub source: usize,
    pub target: usize,
}

impl EdgeOrientation {
    pub fn of(graph: &DualGraph, edge: usize) -> Self {
        let e = graph.edges()[edge];
        Self {
            edge,
            source: e.source,
            target: e.target,
        }
    }

    pub fn params(&self, graph: &DualGraph, n: u64) -> Result<SingularityParams> {
        SingularityParams::new(graph.multiplicity(self.source), graph.multiplicity(self.target), n)
    }
}

fn check_degree(graph: &DualGraph, n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::BadInput(format!("degree {n} must be at least 2")));
    }
    let l = graph.multiplicity_lcm();
    if l.gcd(&n) != 1 {
        return Err(Error::NotCoprime { a: l, n });
    }
    Ok(())
}

fn regular_chain(params: &SingularityParams) -> Result<ResolutionChain> {
    let chain = resolve(params)?;
    if !chain.is_shape_regular() {
        return Err(Error::ShapeNotRegular {
            m1: params.m1,
            m2: params.m2,
            n: params.n,
        });
    }
    Ok(chain)
}

/// Self-intersection of the strict transform of component `v` after base change of degree `n`.
pub fn self_intersection_upstairs(graph: &DualGraph, v: usize, n: u64) -> Result<i64> {
    check_degree(graph, n)?;
    let mut adjacent: u128 = 0;
    for e in graph.incident_edges(v) {
        let o = EdgeOrientation::of(graph, e);
        let chain = resolve(&o.params(graph, n)?)?;
        if o.target == v {
            adjacent += chain.mu(1) as u128;
        }
        if o.source == v {
            adjacent += chain.mu(chain.len()) as u128;
        }
    }
    let m = graph.multiplicity(v) as u128;
    if !adjacent.is_multiple_of(m) {
        return Err(Error::NotInteger {
            what: format!("upstairs self-intersection of `{}`", graph.vertex(v).id),
            numerator: -(adjacent as i128),
            denominator: m as i128,
        });
    }
    Ok(-((adjacent / m) as i64))
}

/// Contribution of component `v`:
/// `sum_{k=0}^{m-1} x^{k alpha_m} ((m - k) C^2 + 1 - p_a(C))`.
pub fn vertex_trace(graph: &DualGraph, v: usize, n: u64) -> Result<CharacterPoly> {
    check_degree(graph, n)?;
    for e in graph.incident_edges(v) {
        regular_chain(&EdgeOrientation::of(graph, e).params(graph, n)?)?;
    }
    let self_int = self_intersection_upstairs(graph, v, n)? as i128;
    let m = graph.multiplicity(v);
    let pa = graph.vertex(v).genus as i128;
    let alpha = mod_inverse(m, n)? as i128;
    let mut out = CharacterPoly::zero(n);
    for k in 0..m as i128 {
        let c = (m as i128 - k) * self_int + 1 - pa;
        out.add_term(k * alpha, BigInt::from(c));
    }
    Ok(out)
}

/// `sum_{r=0}^{top-1} (next - ceil(r * next / top)) x^{r * alpha}`.
fn staircase(out: &mut CharacterPoly, top: u64, next: u64, alpha: u64) {
    for r in 0..top as u128 {
        let c = next as u128 - (r * next as u128).div_ceil(top as u128);
        out.add_term(r as i128 * alpha as i128, BigInt::from(c));
    }
}

/// Closed formula for the contribution of a singularity `(m1, m2, n)` whose
/// resolution chain is shape-regular.
pub fn edge_trace(params: &SingularityParams) -> Result<CharacterPoly> {
    let chain = regular_chain(params)?;
    Ok(edge_trace_of_chain(&chain))
}

pub(crate) fn edge_trace_of_chain(chain: &ResolutionChain) -> CharacterPoly {
    let p = chain.params;
    let n = p.n;
    let len = chain.len();
    let m = p.gcd();
    // coprimality with n was checked when the chain was built
    let inv = |a: u64| mod_inverse(a, n).expect("coprime to n");
    let mut out = CharacterPoly::zero(n);
    staircase(&mut out, chain.mu(0), chain.mu(1), inv(p.m2));
    staircase(&mut out, chain.mu(len + 1), chain.mu(len), inv(p.m1));
    let alpha_m = inv(m) as i128;
    for r in 0..m as i128 {
        out.add_term(r * alpha_m, -BigInt::one());
    }
    out
}

/// Per-component and per-intersection contributions and their sum.
#[derive(Debug, Clone)]
pub struct TraceBreakdown {
    pub degree: u64,
    pub vertices: Vec<(usize, CharacterPoly)>,
    pub edges: Vec<(EdgeOrientation, CharacterPoly)>,
    pub total: CharacterPoly,
}

pub fn trace_breakdown(graph: &DualGraph, n: u64) -> Result<TraceBreakdown> {
    check_degree(graph, n)?;
    let mut total = CharacterPoly::zero(n);
    let mut vertices = Vec::with_capacity(graph.vertices().len());
    for v in 0..graph.vertices().len() {
        let t = vertex_trace(graph, v, n)?;
        total = total.add(&t)?;
        vertices.push((v, t));
    }
    let mut edges = Vec::with_capacity(graph.edges().len());
    for e in 0..graph.edges().len() {
        let o = EdgeOrientation::of(graph, e);
        let t = edge_trace(&o.params(graph, n)?)?;
        total = total.add(&t)?;
        edges.push((o, t));
    }
    Ok(TraceBreakdown {
        degree: n,
        vertices,
        edges,
        total,
    })
}

/// Alternating trace on `H^0 - H^1` as a character polynomial.
pub fn total_trace(graph: &DualGraph, n: u64) -> Result<CharacterPoly> {
    Ok(trace_breakdown(graph, n)?.total)
}

/// Exponents of the irreducible characters on `H^1`, with multiplicity, sorted.
///
/// `H^0` carries the trivial character, so the `H^1` character is `1 - total_trace`.
pub fn h1_character(graph: &DualGraph, n: u64) -> Result<Vec<u64>> {
    let genus = graph.genus()?;
    let ch = CharacterPoly::constant(n, 1).sub(&total_trace(graph, n)?)?;
    let mut out = Vec::new();
    for (e, c) in ch.terms() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient {
                exponent: e,
                coeff: c.to_string(),
            });
        }
        let k = c.to_u64().ok_or(Error::Overflow("character multiplicity"))?;
        out.extend(std::iter::repeat_n(e, k as usize));
    }
    if out.len() as u64 != genus {
        return Err(Error::WrongDegree {
            expected: genus,
            found: ch.coefficient_sum().to_string(),
        });
    }
    Ok(out)
}
