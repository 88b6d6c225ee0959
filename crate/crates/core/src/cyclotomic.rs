//! Exact arithmetic in `Q(zeta_n)` and the fixed-point evaluation of edge traces.
//!
//! Elements of `Q(zeta_n)` are stored in the power basis `1, x, ..., x^{phi(n)-1}`
//! of `Q[x]/(Phi_n)`. The second half of the module recomputes the contribution
//! of a singularity directly from its resolution chain, one exceptional curve and
//! one step of the filtration at a time, as a sum of holomorphic Lefschetz
//! fixed-point terms `lambda / (1 - lambda_dg)`. That route never touches the
//! closed formula in [`crate::character`] and is used to cross-check it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::character::{edge_trace_of_chain, CharacterPoly};
use crate::error::{Error, Result};
use crate::hj::{resolve, ResolutionChain, SingularityParams};

/// Dense integer polynomial, lowest degree first.
pub type IntPoly = Vec<BigInt>;

fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, from `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return (**p).clone();
    }
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    phi_cache().lock().unwrap().insert(n, Arc::new(num.clone()));
    num
}

fn exact_div_monic(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dd = den.len() - 1;
    let mut rem = num.clone();
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - dd] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k - dd + i] -= &c * d;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    q
}

/// The field `Q(zeta_n)` presented as `Q[x]/(Phi_n)`.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u64,
    phi: IntPoly,
    phi_small: Option<Vec<i128>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl CyclotomicField {
    pub fn new(n: u64) -> Arc<Self> {
        let phi = cyclotomic_polynomial(n);
        let phi_small = phi.iter().map(|c| c.to_i128()).collect();
        Arc::new(Self { n, phi, phi_small })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// `phi(n)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus_polynomial(&self) -> &IntPoly {
        &self.phi
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.clone(),
            coords: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.root_power(0)
    }

    pub fn from_integer(self: &Arc<Self>, c: impl Into<BigInt>) -> CyclotomicNumber {
        let mut z = self.zero();
        if let Some(first) = z.coords.first_mut() {
            *first = BigRational::from_integer(c.into());
        }
        z
    }

    /// `zeta^e`, exponent taken modulo `n`.
    pub fn root_power(self: &Arc<Self>, e: i128) -> CyclotomicNumber {
        let mut lift = vec![0i128; self.n as usize];
        lift[e.rem_euclid(self.n as i128) as usize] = 1;
        self.from_lift(&lift, 1)
    }

    /// The element `(sum_i lift[i] x^i) / scale`, for an integer polynomial of any length.
    pub fn from_lift(self: &Arc<Self>, lift: &[i128], scale: i128) -> CyclotomicNumber {
        let deg = self.degree();
        let reduced: Vec<BigInt> = match self.reduce_small(lift) {
            Some(v) => v.into_iter().map(BigInt::from).collect(),
            None => {
                let big: IntPoly = lift.iter().map(|&c| BigInt::from(c)).collect();
                self.reduce_big(big)
            }
        };
        let scale = BigInt::from(scale);
        let coords = (0..deg)
            .map(|i| {
                let c = reduced.get(i).cloned().unwrap_or_default();
                BigRational::new(c, scale.clone())
            })
            .collect();
        CyclotomicNumber {
            field: self.clone(),
            coords,
        }
    }

    fn reduce_small(&self, lift: &[i128]) -> Option<Vec<i128>> {
        let phi = self.phi_small.as_ref()?;
        let deg = phi.len() - 1;
        let mut p = lift.to_vec();
        for k in (deg..p.len()).rev() {
            let c = p[k];
            if c == 0 {
                continue;
            }
            for (i, f) in phi.iter().enumerate().take(deg) {
                p[k - deg + i] = p[k - deg + i].checked_sub(c.checked_mul(*f)?)?;
            }
            p[k] = 0;
        }
        p.truncate(deg);
        Some(p)
    }

    fn reduce_big(&self, mut p: IntPoly) -> IntPoly {
        let deg = self.degree();
        for k in (deg..p.len()).rev() {
            let c = std::mem::take(&mut p[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..deg {
                p[k - deg + i] -= &c * &self.phi[i];
            }
        }
        p.truncate(deg);
        p
    }

    fn reduce_rational(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        for k in (deg..p.len()).rev() {
            let c = std::mem::replace(&mut p[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..deg {
                p[k - deg + i] -= &c * BigRational::from_integer(self.phi[i].clone());
            }
        }
        p.resize(deg, BigRational::zero());
        p
    }

    /// Value of a character polynomial at `zeta^j`.
    pub fn evaluate(self: &Arc<Self>, poly: &CharacterPoly, j: u64) -> Result<CyclotomicNumber> {
        if poly.modulus() != self.n {
            return Err(Error::ModulusMismatch(poly.modulus(), self.n));
        }
        let n = self.n as u128;
        let mut lift = vec![0i128; self.n as usize];
        let mut big: Option<IntPoly> = None;
        for (e, c) in poly.terms() {
            let k = (e as u128 * j as u128 % n) as usize;
            match (c.to_i128(), big.as_mut()) {
                (Some(c), None) => lift[k] += c,
                (_, Some(b)) => b[k] += c,
                (None, None) => {
                    let mut b: IntPoly = lift.iter().map(|&x| BigInt::from(x)).collect();
                    b[k] += c;
                    big = Some(b);
                }
            }
        }
        Ok(match big {
            None => self.from_lift(&lift, 1),
            Some(b) => {
                let coords = self
                    .reduce_big(b)
                    .into_iter()
                    .map(BigRational::from_integer)
                    .chain(std::iter::repeat(BigRational::zero()))
                    .take(self.degree())
                    .collect();
                CyclotomicNumber {
                    field: self.clone(),
                    coords,
                }
            }
        })
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone, PartialEq)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coords: Vec<BigRational>,
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber(n={}, {self})", self.field.n)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CyclotomicNumber {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.n != other.field.n {
            return Err(Error::ModulusMismatch(self.field.n, other.field.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.coords.len();
        if d == 0 {
            return Ok(self.clone());
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Self {
            field: self.field.clone(),
            coords: self.field.reduce_rational(prod),
        })
    }

    /// Multiplicative inverse through the extended Euclidean algorithm on
    /// the representative and `Phi_n` over `Q[x]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r0: Vec<BigRational> = self
            .field
            .phi
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut r1 = self.coords.clone();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let s2 = poly_sub(&s0, &qs);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Phi_n is irreducible, so the gcd is a non-zero constant.
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let scaled = s0.into_iter().map(|c| c / &g).collect();
        Ok(Self {
            field: self.field.clone(),
            coords: self.field.reduce_rational(scaled),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![BigRational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = &rem[k] * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            rem[k - db + i] -= &c * bi;
        }
        q[k - db] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    (q, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// One fixed-point term of the chain: a numerator eigenvalue `chi^num` over
/// `1 - chi^den`, with `chi = zeta^{j alpha_1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct FixedPoint {
    num: i128,
    den: i128,
}

/// The two fixed points of the automorphism on `C_l`, for step `k` of the filtration.
///
/// On interior curves the numerators are the eigenvalues on the fibers of the
/// step's line bundle at `C_{l-1} . C_l` and `C_l . C_{l+1}`. On `C_1` the first
/// numerator is `chi^{n (...)} = 1`; on `C_L` the neighbouring curve `C_{L+1}`
/// is not part of the remaining divisor, and the second numerator is `1`. A
/// chain of length one gets both simplifications.
fn fixed_points(chain: &ResolutionChain, l: usize, k: u64) -> [FixedPoint; 2] {
    let len = chain.len();
    let r = |i: isize| chain.r(i) as i128;
    let mu_l = chain.mu(l) as i128;
    let k = k as i128;
    let li = l as isize;
    let first = if l == 1 { 0 } else { r(li - 2) * (mu_l - k) };
    let second = if l == len {
        0
    } else {
        -r(li) * (mu_l - k) + r(li - 1) * chain.mu(l + 1) as i128
    };
    [
        FixedPoint {
            num: first,
            den: -r(li - 1),
        },
        FixedPoint {
            num: second,
            den: r(li - 1),
        },
    ]
}

fn check_primitive(n: u64, j: u64) -> Result<()> {
    if j.gcd(&n) != 1 {
        return Err(Error::NotPrimitive { j, n });
    }
    Ok(())
}

/// Alternating trace on the `k`-th step over the exceptional curve `C_l`, at `xi = zeta^j`.
///
/// Evaluated with field operations only: each fixed-point term is a root of
/// unity times the inverse of `1 - zeta^e`.
pub fn chain_term(chain: &ResolutionChain, l: usize, k: u64, j: u64) -> Result<CyclotomicNumber> {
    let n = chain.params.n;
    check_primitive(n, j)?;
    if l == 0 || l > chain.len() {
        return Err(Error::IndexOutOfRange {
            index: l,
            min: 1,
            max: chain.len(),
        });
    }
    if k == 0 || k > chain.mu(l) {
        return Err(Error::IndexOutOfRange {
            index: k as usize,
            min: 1,
            max: chain.mu(l) as usize,
        });
    }
    let field = CyclotomicField::new(n);
    let chi = (j as i128 * chain.alpha1 as i128).rem_euclid(n as i128);
    let mut total = field.zero();
    for fp in fixed_points(chain, l, k) {
        let denom = field.one().sub(&field.root_power(chi * fp.den))?;
        let term = field.root_power(chi * fp.num).div(&denom)?;
        total = total.add(&term)?;
    }
    Ok(total)
}

/// Sum of [`chain_term`] over all curves of the chain and all steps, at `xi = zeta^j`.
///
/// Terms are accumulated in `Z[x]/(x^n - 1)` scaled by `n`, using
/// `n / (1 - w) = -(n/d) sum_{i<d} i w^i` for a primitive `d`-th root `w != 1`,
/// and reduced modulo `Phi_n` once at the end.
pub fn chain_edge_trace(params: &SingularityParams, j: u64) -> Result<CyclotomicNumber> {
    let chain = resolve(params)?;
    chain_sum(&chain, j)
}

fn chain_sum(chain: &ResolutionChain, j: u64) -> Result<CyclotomicNumber> {
    let n = chain.params.n;
    check_primitive(n, j)?;
    let ni = n as i128;
    let chi = (j as i128 * chain.alpha1 as i128).rem_euclid(ni);
    // numerator exponents grouped by denominator exponent
    let mut groups: HashMap<i128, Vec<i128>> = HashMap::new();
    for l in 1..=chain.len() {
        for k in 1..=chain.mu(l) {
            for fp in fixed_points(chain, l, k) {
                let e = (chi * fp.den).rem_euclid(ni);
                debug_assert_ne!(e, 0, "primitive chi has no fixed denominator");
                groups.entry(e).or_default().push((chi * fp.num).rem_euclid(ni));
            }
        }
    }
    let mut lift = vec![0i128; n as usize];
    for (e, nums) in groups {
        let g = e.gcd(&ni);
        let d = ni / g;
        let mut counts = vec![0i128; n as usize];
        for a in nums {
            counts[a as usize] += 1;
        }
        for (a, c) in counts.into_iter().enumerate().filter(|(_, c)| *c != 0) {
            for i in 1..d {
                let idx = (a as i128 + e * i).rem_euclid(ni) as usize;
                lift[idx] -= c * g * i;
            }
        }
    }
    Ok(CyclotomicField::new(n).from_lift(&lift, ni))
}

/// Outcome of comparing the closed formula with the chain summation at every primitive root.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub params: SingularityParams,
    /// `(j, agrees)` for each `j` coprime to `n`.
    pub per_root: Vec<(u64, bool)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.per_root.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = u64> + '_ {
        self.per_root.iter().filter(|(_, ok)| !ok).map(|(j, _)| *j)
    }
}

pub fn verify_edge_trace_report(params: &SingularityParams) -> Result<VerifyReport> {
    let chain = resolve(params)?;
    if !chain.is_shape_regular() {
        return Err(Error::ShapeNotRegular {
            m1: params.m1,
            m2: params.m2,
            n: params.n,
        });
    }
    let closed = edge_trace_of_chain(&chain);
    let n = params.n;
    let field = CyclotomicField::new(n);
    let per_root = (1..n)
        .into_par_iter()
        .filter(|j| j.gcd(&n) == 1)
        .map(|j| {
            let ok = match (chain_sum(&chain, j), field.evaluate(&closed, j)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            };
            (j, ok)
        })
        .collect();
    Ok(VerifyReport {
        params: chain.params,
        per_root,
    })
}

/// Whether the closed edge trace equals the chain summation in `Q[x]/(Phi_n)`
/// at every primitive `n`-th root of unity.
pub fn verify_edge_trace(params: &SingularityParams) -> bool {
    verify_edge_trace_report(params).is_ok_and(|r| r.passed())
}

/// Absolute norm-free size check used by tests: the largest denominator among coordinates.
pub fn max_denominator(x: &CyclotomicNumber) -> BigInt {
    x.coords
        .iter()
        .map(|c| c.denom().abs())
        .max()
        .unwrap_or_else(BigInt::one)
}
