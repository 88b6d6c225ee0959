//! Minimal resolution of a tame cyclic quotient singularity `(m1, m2, n)`.
//!
//! The singularity sits over an intersection point of two fiber components of
//! multiplicities `m1` and `m2` after a tame base change of degree `n`. Its
//! minimal resolution is a chain of rational curves `C_1, ..., C_L` with
//! self-intersections `-b_l` given by the Jung-Hirzebruch expansion of `n/r`,
//! where `0 < r < n` solves `m1 + r*m2 = 0 (mod n)`. The chain multiplicities
//! satisfy `mu_{l+1} = b_l mu_l - mu_{l-1}` with `mu_0 = m2`, `mu_{L+1} = m1`.
//!
//! All sequences are stored as machine integers. Every quantity is bounded by
//! `n` or by `max(m1, m2)`, and every product is formed in 128-bit arithmetic.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Inverse of `a` modulo `n`, as the representative in `(0, n)`.
pub fn mod_inverse(a: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::BadInput(format!("modulus {n} must be at least 2")));
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    if e.gcd != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    Ok(e.x.rem_euclid(n as i128) as u64)
}

/// Parameters `(m1, m2, n)` of a singularity; `m1` and `m2` are the branch multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingularityParams {
    pub m1: u64,
    pub m2: u64,
    pub n: u64,
}

impl SingularityParams {
    pub fn new(m1: u64, m2: u64, n: u64) -> Result<Self> {
        if m1 == 0 || m2 == 0 {
            return Err(Error::BadInput("branch multiplicities must be positive".into()));
        }
        if n < 2 {
            return Err(Error::BadInput(format!("degree {n} must be at least 2")));
        }
        for m in [m1, m2] {
            if m.gcd(&n) != 1 {
                return Err(Error::NotCoprime { a: m, n });
            }
        }
        Ok(Self { m1, m2, n })
    }

    pub fn swapped(self) -> Self {
        Self {
            m1: self.m2,
            m2: self.m1,
            n: self.n,
        }
    }

    pub fn gcd(&self) -> u64 {
        self.m1.gcd(&self.m2)
    }

    pub fn lcm(&self) -> u64 {
        self.m1.lcm(&self.m2)
    }
}

/// The unique `0 < r < n` with `m1 + r*m2 = 0 (mod n)`.
pub fn branch_rotation(params: &SingularityParams) -> Result<u64> {
    let n = params.n as u128;
    let inv = mod_inverse(params.m2 % params.n, params.n)? as u128;
    let r = ((n - params.m1 as u128 % n) % n * inv % n) as u64;
    if r == 0 {
        // m1 = 0 mod n is excluded by coprimality, so this cannot happen for valid params.
        return Err(Error::NotCoprime { a: params.m1, n: params.n });
    }
    Ok(r)
}

/// Jung-Hirzebruch (negative regular) continued fraction of `n/r`:
/// `n/r = b_1 - 1/(b_2 - 1/(... - 1/b_L))`, all `b_l >= 2`.
pub fn jung_hirzebruch(n: u64, r: u64) -> Result<Vec<u64>> {
    if r == 0 || r >= n || n.gcd(&r) != 1 {
        return Err(Error::BadInput(format!(
            "expansion of {n}/{r} needs 0 < r < n and gcd(n, r) = 1"
        )));
    }
    let mut out = Vec::new();
    let (mut a, mut b) = (n, r);
    while b != 0 {
        let q = a.div_ceil(b);
        out.push(q);
        let next = q * b - a;
        a = b;
        b = next;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionChain {
    pub params: SingularityParams,
    /// `r_{-1} = n, r_0 = r, ..., r_L = 0`.
    pub r_seq: Vec<u64>,
    /// `b_1, ..., b_L`.
    pub b_seq: Vec<u64>,
    /// `mu_0 = m2, mu_1, ..., mu_L, mu_{L+1} = m1`.
    pub mu_seq: Vec<u64>,
    /// Inverse of `m1` modulo `n`.
    pub alpha1: u64,
}

impl ResolutionChain {
    /// Number of exceptional curves.
    pub fn len(&self) -> usize {
        self.b_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b_seq.is_empty()
    }

    pub fn rotation(&self) -> u64 {
        self.r_seq[1]
    }

    /// `r_l` for `-1 <= l <= L`.
    pub fn r(&self, l: isize) -> u64 {
        self.r_seq[(l + 1) as usize]
    }

    /// `b_l` for `1 <= l <= L`.
    pub fn b(&self, l: usize) -> u64 {
        self.b_seq[l - 1]
    }

    /// `mu_l` for `0 <= l <= L + 1`.
    pub fn mu(&self, l: usize) -> u64 {
        self.mu_seq[l]
    }

    /// Whether the multiplicities decrease strictly, stay on a plateau equal to
    /// `gcd(m1, m2)`, then increase strictly. A valley without plateau is accepted
    /// when its single minimum is at least the gcd.
    pub fn is_shape_regular(&self) -> bool {
        let mu = &self.mu_seq;
        let m = self.params.gcd();
        let mut i = 0;
        while i + 1 < mu.len() && mu[i + 1] < mu[i] {
            i += 1;
        }
        let mut j = i;
        while j + 1 < mu.len() && mu[j + 1] == mu[j] {
            j += 1;
        }
        let mut k = j;
        while k + 1 < mu.len() && mu[k + 1] > mu[k] {
            k += 1;
        }
        if k != mu.len() - 1 {
            return false;
        }
        if j > i {
            mu[i] == m
        } else {
            mu[i] >= m
        }
    }

    /// Whether the smallest multiplicity in the chain equals `gcd(m1, m2)`.
    pub fn reaches_gcd(&self) -> bool {
        self.mu_seq.iter().min() == Some(&self.params.gcd())
    }

    /// Eigen-exponents `(z, w)` of the chart coordinates `z_{l-1}, w_{l-1}` on chart `l`
    /// (`1 <= l <= L + 1`), for the action `[xi](pi') = xi pi'`.
    pub fn action_exponents(&self, l: usize) -> Result<(u64, u64)> {
        let max = self.len() + 1;
        if l == 0 || l > max {
            return Err(Error::IndexOutOfRange { index: l, min: 1, max });
        }
        let n = self.params.n as u128;
        let a = self.alpha1 as u128;
        let z = a * self.r(l as isize - 2) as u128 % n;
        let w = (n - a * self.r(l as isize - 1) as u128 % n) % n;
        Ok((z as u64, w as u64))
    }
}

pub fn resolve(params: &SingularityParams) -> Result<ResolutionChain> {
    let params = SingularityParams::new(params.m1, params.m2, params.n)?;
    let n = params.n;
    let r = branch_rotation(&params)?;
    let b_seq = jung_hirzebruch(n, r)?;

    let mut r_seq = vec![n, r];
    for l in 0..b_seq.len() {
        // r_{l+1} = b_{l+1} r_l - r_{l-1}
        let next = b_seq[l] as i128 * r_seq[l + 1] as i128 - r_seq[l] as i128;
        r_seq.push(u64::try_from(next).map_err(|_| Error::Overflow("r-sequence"))?);
    }
    debug_assert_eq!(r_seq.last(), Some(&0));

    let top = params.m1 as u128 + r as u128 * params.m2 as u128;
    if !top.is_multiple_of(n as u128) {
        return Err(Error::NotInteger {
            what: "mu_1".into(),
            numerator: top as i128,
            denominator: n as i128,
        });
    }
    let mut mu_seq = vec![params.m2, (top / n as u128) as u64];
    for l in 1..=b_seq.len() {
        let next = b_seq[l - 1] as i128 * mu_seq[l] as i128 - mu_seq[l - 1] as i128;
        if next < 1 {
            return Err(Error::BadInput(format!(
                "non-positive chain multiplicity {next} for {params:?}"
            )));
        }
        mu_seq.push(u64::try_from(next).map_err(|_| Error::Overflow("mu-sequence"))?);
    }
    if mu_seq.last() != Some(&params.m1) {
        return Err(Error::BadInput(format!(
            "chain of {params:?} ends in {:?}, expected m1 = {}",
            mu_seq.last(),
            params.m1
        )));
    }

    Ok(ResolutionChain {
        params,
        r_seq,
        b_seq,
        mu_seq,
        alpha1: mod_inverse(params.m1, n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_inverse(a: u64, n: u64) -> Option<u64> {
        (1..n).find(|x| a * x % n == 1)
    }

    fn chain(m1: u64, m2: u64, n: u64) -> ResolutionChain {
        resolve(&SingularityParams::new(m1, m2, n).unwrap()).unwrap()
    }

    #[test]
    fn inverses_match_exhaustive_scan() {
        assert_eq!(brute_inverse(3, 7), Some(5));
        assert_eq!(brute_inverse(4, 13), Some(10));
        assert_eq!(mod_inverse(1, 9).unwrap(), 1);
        assert_eq!(mod_inverse(3, 7).unwrap(), 5);
        assert_eq!(mod_inverse(4, 13).unwrap(), 10);
        for n in 2..60 {
            for a in 0..2 * n {
                assert_eq!(mod_inverse(a, n).ok(), brute_inverse(a % n, n));
            }
        }
        assert_eq!(mod_inverse(6, 9), Err(Error::NotCoprime { a: 6, n: 9 }));
    }

    #[test]
    fn rotation_examples() {
        let rot = |m1, m2, n| branch_rotation(&SingularityParams::new(m1, m2, n).unwrap()).unwrap();
        assert_eq!(rot(1, 3, 7), 2);
        assert_eq!((1..5).find(|r| (3 + r * 4) % 5 == 0), Some(3));
        assert_eq!(rot(3, 4, 5), 3);
        for n in 2..20 {
            assert_eq!(rot(1, 1, n), n - 1);
        }
    }

    #[test]
    fn rotation_rejects_non_coprime() {
        assert!(matches!(
            SingularityParams::new(2, 3, 4),
            Err(Error::NotCoprime { a: 2, n: 4 })
        ));
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(jung_hirzebruch(7, 2).unwrap(), vec![4, 2]);
        assert_eq!(jung_hirzebruch(5, 3).unwrap(), vec![2, 3]);
        assert_eq!(jung_hirzebruch(9, 8).unwrap(), vec![2; 8]);
        assert!(jung_hirzebruch(6, 4).is_err());
        assert!(jung_hirzebruch(6, 6).is_err());
    }

    #[test]
    fn resolution_goldens() {
        let c = chain(1, 3, 7);
        assert_eq!(c.rotation(), 2);
        assert_eq!(c.b_seq, vec![4, 2]);
        assert_eq!(c.r_seq, vec![7, 2, 1, 0]);
        assert_eq!(c.mu_seq, vec![3, 1, 1, 1]);
        assert_eq!(c.len(), 2);

        assert_eq!(chain(3, 4, 5).mu_seq, vec![4, 3, 2, 3]);
        assert_eq!(chain(3, 4, 17).mu_seq, vec![4, 3, 2, 1, 2, 3]);
        assert_eq!(chain(3, 4, 29).mu_seq, vec![4, 3, 2, 1, 1, 2, 3]);
    }

    #[test]
    fn shape_regularity() {
        assert!(chain(3, 4, 29).is_shape_regular());
        assert!(chain(3, 4, 5).is_shape_regular());
        assert!(!chain(3, 4, 5).reaches_gcd());
        assert!(chain(1, 1, 2).is_shape_regular());

        let mut fake = chain(3, 4, 29);
        fake.mu_seq = vec![4, 2, 2, 3];
        assert!(!fake.is_shape_regular());
        fake.mu_seq = vec![4, 2, 3, 2, 3];
        assert!(!fake.is_shape_regular());
    }

    #[test]
    fn action_exponent_examples() {
        let c = chain(1, 3, 7);
        // [xi](z_1) = xi^2 z_1 and [xi](w_1) = xi^{-1} w_1 = xi^6 w_1
        assert_eq!(c.action_exponents(2).unwrap(), (2, 6));
        assert_eq!(c.action_exponents(1).unwrap(), (0, 5));
        assert_eq!(chain(1, 2, 3).action_exponents(1).unwrap(), (0, 2));
        assert!(matches!(
            c.action_exponents(0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(c.action_exponents(4).is_err());
        // last chart: w exponent vanishes since r_L = 0
        assert_eq!(c.action_exponents(3).unwrap().1, 0);
    }
}
