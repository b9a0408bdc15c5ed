//! Kac's presentation `Ch^*(G_0) = F_p[x_1..x_r] / (x_i^{p^{k_i}})` for the
//! orthogonal groups at p = 2, the admissibility restrictions on J-tuples,
//! and Poincare polynomials of the upper motive.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest number of generators `admissible_tuples` will enumerate over.
pub const MAX_ENUMERATION_RANK: usize = 8;

/// Split orthogonal groups covered by the Kac table at p = 2.
///
/// The parameter is the one used in the table: `So(n)` is `SO_n`,
/// `Spin(n)` is `Spin_n`, `SpinHalf(n)` is a half-spin group `Spin^+_{2n}`
/// and `Pgo(n)` is `PGO_{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupLabel {
    So(u32),
    Spin(u32),
    SpinHalf(u32),
    Pgo(u32),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupLabel::So(n) => write!(f, "SO_{n}"),
            GroupLabel::Spin(n) => write!(f, "Spin_{n}"),
            GroupLabel::SpinHalf(n) => write!(f, "SpinHalf_{}", 2 * n),
            GroupLabel::Pgo(n) => write!(f, "PGO_{}", 2 * n),
        }
    }
}

impl GroupLabel {
    /// Parses the family part of a label (`SO`, `Spin`, `SpinHalf`, `PGO`)
    /// together with its table parameter.
    pub fn parse(kind: &str, n: u32) -> Result<Self> {
        let label = match kind.to_ascii_lowercase().as_str() {
            "so" => GroupLabel::So(n),
            "spin" => GroupLabel::Spin(n),
            "spinhalf" | "spin-half" | "halfspin" | "hs" => GroupLabel::SpinHalf(n),
            "pgo" => GroupLabel::Pgo(n),
            _ => return Err(Error::InvalidGroupLabel(kind.to_string())),
        };
        label.validate()?;
        Ok(label)
    }

    pub fn validate(self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidGroupLabel(format!("{self}: {why}")));
        match self {
            GroupLabel::So(n) if n < 2 => bad("needs n >= 2"),
            GroupLabel::Spin(n) if n < 3 => bad("needs n >= 3"),
            GroupLabel::SpinHalf(n) if n < 2 || n % 2 != 0 => bad("needs n even and >= 2"),
            GroupLabel::Pgo(n) if n < 2 => bad("needs n >= 2"),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacSignature {
    pub p: u64,
    pub group: GroupLabel,
    pub r: usize,
    pub d: Vec<u32>,
    pub k: Vec<u32>,
    /// Leading generators exempt from the admissibility restrictions
    /// (the degree-one generator of `PGO_{2n}`).
    #[serde(default)]
    pub free_leading: usize,
}

/// Largest `k` with `den * 2^k <= num`, i.e. `floor(log2(num / den))`.
fn floor_log2_ratio(num: u32, den: u32) -> u32 {
    let mut k = 0;
    while (den as u64) << (k + 1) <= num as u64 {
        k += 1;
    }
    k
}

fn two_adic_valuation(mut n: u32) -> u32 {
    let mut v = 0;
    while n % 2 == 0 && n > 0 {
        n /= 2;
        v += 1;
    }
    v
}

/// The (r, d, k) row of the Kac table at p = 2.
pub fn kac_signature(group: GroupLabel) -> Result<KacSignature> {
    group.validate()?;
    let (d, k, free_leading): (Vec<u32>, Vec<u32>, usize) = match group {
        GroupLabel::So(n) => {
            let r = (n + 1) / 4;
            let d: Vec<u32> = (1..=r).map(|i| 2 * i - 1).collect();
            let k = d.iter().map(|&di| floor_log2_ratio(n - 1, di)).collect();
            (d, k, 0)
        }
        GroupLabel::Spin(n) => {
            let r = (n - 3) / 4;
            let d: Vec<u32> = (1..=r).map(|i| 2 * i + 1).collect();
            let k = d.iter().map(|&di| floor_log2_ratio(n - 1, di)).collect();
            (d, k, 0)
        }
        GroupLabel::SpinHalf(n) => {
            let r = n / 2;
            let d: Vec<u32> = (1..=r).map(|i| if i == 1 { 1 } else { 2 * i - 1 }).collect();
            let k = d
                .iter()
                .enumerate()
                .map(|(idx, &di)| {
                    if idx == 0 {
                        two_adic_valuation(n)
                    } else {
                        floor_log2_ratio(2 * n - 1, di)
                    }
                })
                .collect();
            (d, k, 0)
        }
        GroupLabel::Pgo(n) => {
            let r = (n + 2) / 2;
            let d: Vec<u32> = (1..=r).map(|i| if i == 1 { 1 } else { 2 * i - 3 }).collect();
            let k = d
                .iter()
                .enumerate()
                .map(|(idx, &di)| {
                    if idx == 0 {
                        two_adic_valuation(n)
                    } else {
                        floor_log2_ratio(2 * n - 1, di)
                    }
                })
                .collect();
            (d, k, 1)
        }
    };
    Ok(KacSignature { p: 2, group, r: d.len(), d, k, free_leading })
}

/// Signature indexing the J-invariant of a degree `2n` algebra with
/// orthogonal involution. For odd `n` the table row of `PGO_{2n}` starts
/// with a generator bounded by `k_1 = 0`; it is dropped so that `j_1` is the
/// parameter of the single degree-one generator.
pub fn involution_signature(n: u32) -> Result<KacSignature> {
    let mut sig = kac_signature(GroupLabel::Pgo(n))?;
    if n % 2 == 1 {
        debug_assert_eq!(sig.k[0], 0);
        sig.d.remove(0);
        sig.k.remove(0);
        sig.r -= 1;
        sig.free_leading = 0;
    }
    Ok(sig)
}

/// `C(a, b)` is odd. For `b <= a` this holds iff `b` and `a - b` share no bit.
pub fn binom_odd(a: u64, b: u64) -> bool {
    b <= a && (b & (a - b)) == 0
}

/// Lucas: `C(a, b)` is nonzero mod p iff every base-p digit of `b` is at
/// most the corresponding digit of `a`.
pub fn binom_nonzero_mod_p(mut a: u64, mut b: u64, p: u64) -> bool {
    if b > a {
        return false;
    }
    while b > 0 {
        if b % p > a % p {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// A J-invariant candidate `(j_1, ..., j_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JTuple(pub Vec<u32>);

impl JTuple {
    pub fn zero(r: usize) -> Self {
        JTuple(vec![0; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&j| j == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &JTuple) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl<const N: usize> From<[u32; N]> for JTuple {
    fn from(v: [u32; N]) -> Self {
        JTuple(v.to_vec())
    }
}

impl fmt::Display for JTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for JTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(JTuple(vec![]));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad J-tuple entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(JTuple)
    }
}

/// One instance of the restriction "`d_i + l = p^s d_m` and `p` does not
/// divide `C(d_i, l)` imply `j_m <= j_i + s`". Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pub i: usize,
    pub l: u32,
    pub s: u32,
    pub m: usize,
}

impl Restriction {
    pub fn holds(&self, j: &JTuple) -> bool {
        j.0[self.m - 1] <= j.0[self.i - 1] + self.s
    }
}

fn power_exponent(mut x: u64, p: u64) -> Option<u32> {
    let mut s = 0;
    while x % p == 0 && x > 1 {
        x /= p;
        s += 1;
    }
    (x == 1).then_some(s)
}

/// Every instance over all `i, m`, all `0 <= l <= d_i` and all `s >= 0`.
/// Trivial instances (`l = 0`, `i = m`) are included; they never bind.
pub fn restriction_instances(sig: &KacSignature) -> Vec<Restriction> {
    let mut out = Vec::new();
    for i in sig.free_leading..sig.r {
        let di = sig.d[i] as u64;
        for l in 0..=di {
            if !binom_nonzero_mod_p(di, l, sig.p) {
                continue;
            }
            let total = di + l;
            for m in sig.free_leading..sig.r {
                let dm = sig.d[m] as u64;
                if total % dm != 0 {
                    continue;
                }
                if let Some(s) = power_exponent(total / dm, sig.p) {
                    out.push(Restriction { i: i + 1, l: l as u32, s, m: m + 1 });
                }
            }
        }
    }
    out
}

pub fn check_bounds(sig: &KacSignature, j: &JTuple) -> Result<()> {
    if j.len() != sig.r || j.0.iter().zip(&sig.k).any(|(a, b)| a > b) {
        return Err(Error::OutOfBounds { tuple: j.0.clone(), caps: sig.k.clone() });
    }
    Ok(())
}

pub fn is_admissible(sig: &KacSignature, j: &JTuple) -> bool {
    check_bounds(sig, j).is_ok() && restriction_instances(sig).iter().all(|c| c.holds(j))
}

/// All admissible tuples, the first entry varying fastest.
pub fn admissible_tuples(sig: &KacSignature) -> Result<Vec<JTuple>> {
    if sig.r > MAX_ENUMERATION_RANK {
        return Err(Error::GuardExceeded { r: sig.r, max: MAX_ENUMERATION_RANK });
    }
    let constraints = restriction_instances(sig);
    let mut out = Vec::new();
    let mut cur = vec![0u32; sig.r];
    loop {
        let j = JTuple(cur.clone());
        if constraints.iter().all(|c| c.holds(&j)) {
            out.push(j);
        }
        // odometer, least significant digit first
        let mut pos = 0;
        loop {
            if pos == sig.r {
                return Ok(out);
            }
            if cur[pos] < sig.k[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
    }
}

/// Coefficients (constant term first) of
/// `prod_i (1 - t^{d_i p^{j_i}}) / (1 - t^{d_i})`.
pub fn poincare_polynomial(sig: &KacSignature, j: &JTuple) -> Result<Vec<u64>> {
    check_bounds(sig, j)?;
    let mut poly = vec![1u64];
    for (&d, &ji) in sig.d.iter().zip(&j.0) {
        let terms = sig.p.pow(ji) as usize;
        let d = d as usize;
        let mut next = vec![0u64; poly.len() + d * (terms - 1)];
        for (e, &c) in poly.iter().enumerate() {
            for t in 0..terms {
                next[e + t * d] += c;
            }
        }
        poly = next;
    }
    Ok(poly)
}
