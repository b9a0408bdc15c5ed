//! Tits algebras of a twisted form of type D, modelled by the 2-adic
//! valuations of their indices, and the resulting bounds on the degree-one
//! entries of the J-invariant.

use crate::chow::{GroupLabel, JTuple, KacSignature};
use crate::cocenter::{cocenter, CocenterElement, CocenterGroup};
use crate::error::{Error, Result};
use crate::liealg::{Family, RootSystem, WeylElement};
use crate::steinberg::SteinbergEntry;
use serde::{Deserialize, Serialize};

/// Element of the cocenter of `D_n`, named by the fundamental weight whose
/// class it is. For even `n` this is the Klein four group, for odd `n` it
/// is `Z/4` with `Plus = 1`, `One = 2`, `Minus = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DClass {
    Zero,
    /// class of `omega_1`, Tits algebra `A`
    One,
    /// class of `omega_{n-1}`, Tits algebra `C_+`
    Plus,
    /// class of `omega_n`, Tits algebra `C_-`
    Minus,
}

impl DClass {
    pub const ALL: [DClass; 4] = [DClass::Zero, DClass::One, DClass::Plus, DClass::Minus];

    fn z4(self) -> u32 {
        match self {
            DClass::Zero => 0,
            DClass::Plus => 1,
            DClass::One => 2,
            DClass::Minus => 3,
        }
    }

    fn from_z4(v: u32) -> Self {
        match v % 4 {
            0 => DClass::Zero,
            1 => DClass::Plus,
            2 => DClass::One,
            _ => DClass::Minus,
        }
    }

    /// Group law in the cocenter of `D_rank`.
    pub fn add(self, other: DClass, rank: usize) -> DClass {
        if rank % 2 == 1 {
            return DClass::from_z4(self.z4() + other.z4());
        }
        match (self, other) {
            (DClass::Zero, x) | (x, DClass::Zero) => x,
            (a, b) if a == b => DClass::Zero,
            (DClass::One, DClass::Plus) | (DClass::Plus, DClass::One) => DClass::Minus,
            (DClass::One, DClass::Minus) | (DClass::Minus, DClass::One) => DClass::Plus,
            _ => DClass::One,
        }
    }

    pub fn scale(self, k: u32, rank: usize) -> DClass {
        (0..k).fold(DClass::Zero, |acc, _| acc.add(self, rank))
    }
}

/// Valuations `ii_A`, `ii_+`, `ii_-` of the indices of `A`, `C_+`, `C_-`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexProfile {
    pub rank: usize,
    pub ii_a: u32,
    pub ii_plus: u32,
    pub ii_minus: u32,
}

impl IndexProfile {
    /// Validated profile. `rank` is `n` for a degree `2n` algebra, `n >= 2`.
    pub fn new(rank: usize, ii_a: u32, ii_plus: u32, ii_minus: u32) -> Result<Self> {
        let p = Self::unchecked(rank, ii_a, ii_plus, ii_minus)?;
        p.validate()?;
        Ok(p)
    }

    /// Skips the Brauer-group consistency checks; only the rank is checked.
    pub fn unchecked(rank: usize, ii_a: u32, ii_plus: u32, ii_minus: u32) -> Result<Self> {
        if rank < 2 {
            return Err(Error::UnsupportedRootSystem {
                family: 'D',
                rank,
                reason: "index profiles need n >= 2",
            });
        }
        Ok(IndexProfile { rank, ii_a, ii_plus, ii_minus })
    }

    pub fn split(rank: usize) -> Result<Self> {
        Self::new(rank, 0, 0, 0)
    }

    pub fn validate(&self) -> Result<()> {
        let (a, p, m) = (self.ii_a, self.ii_plus, self.ii_minus);
        let fail = |why: String| Err(Error::InconsistentProfile(why));
        if self.rank % 2 == 0 {
            // [A] + [C+] + [C-] = 0
            if a > p + m || p > a + m || m > a + p {
                return fail(format!("triangle inequality fails for ({a},{p},{m})"));
            }
        } else {
            // [A] = 2[C+] = -2[C-]
            if p != m {
                return fail(format!("n odd needs ii_plus = ii_minus, got {p} and {m}"));
            }
            if a > p {
                return fail(format!("n odd needs ii_a <= ii_plus, got {a} > {p}"));
            }
            if p <= 1 && a != 0 {
                return fail(format!("ii_plus = {p} forces A split, got ii_a = {a}"));
            }
        }
        Ok(())
    }

    /// Degree caps that a genuine algebra would satisfy but that nothing
    /// downstream relies on.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        let deg = 2 * self.rank as u64;
        if 1u64.checked_shl(self.ii_a).map_or(true, |x| x > deg) {
            out.push(format!("2^ii_a exceeds deg A = {deg}"));
        }
        let half = self.rank as u32 - 1;
        for (name, v) in [("ii_plus", self.ii_plus), ("ii_minus", self.ii_minus)] {
            if v > half {
                out.push(format!("2^{name} exceeds 2^{half}"));
            }
        }
        out
    }

    pub fn is_split(&self) -> bool {
        self.ii_a == 0 && self.ii_plus == 0 && self.ii_minus == 0
    }

    pub fn valuation(&self, c: DClass) -> u32 {
        match c {
            DClass::Zero => 0,
            DClass::One => self.ii_a,
            DClass::Plus => self.ii_plus,
            DClass::Minus => self.ii_minus,
        }
    }

    /// Root system `D_n`; not available for `n = 2`.
    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::new(Family::D, self.rank)
    }
}

/// Names the classes of a `D_n` cocenter computed by Smith normal form.
pub fn dclass_of(cg: &CocenterGroup, cls: &CocenterElement) -> Result<DClass> {
    let rs = cg.system();
    let n = rs.rank();
    if rs.family() != Family::D || cls.0.len() != cg.invariant_factors().len() {
        return Err(Error::DimensionMismatch { expected: cg.invariant_factors().len(), got: cls.0.len() });
    }
    if cls.is_zero() {
        return Ok(DClass::Zero);
    }
    let gens = cg.generators();
    [(DClass::One, 1), (DClass::Plus, n - 1), (DClass::Minus, n)]
        .into_iter()
        .find(|(_, k)| &gens[k - 1] == cls)
        .map(|(c, _)| c)
        .ok_or_else(|| Error::InvalidArgument(format!("{cls} is not a class of D_{n}")))
}

/// `ii_J`: least valuation of a class `sum a_l omega_{i_l}` with some `a_l`
/// odd, the `omega_{i_l}` running over weights of the degree-one generators.
pub fn common_index(profile: &IndexProfile) -> u32 {
    let n = profile.rank;
    let (gens, order): (Vec<DClass>, u32) = if n % 2 == 0 {
        (vec![DClass::One, DClass::Minus], 2)
    } else {
        (vec![DClass::Plus], 4)
    };
    let mut best = u32::MAX;
    let combos = order.pow(gens.len() as u32);
    for code in 0..combos {
        let coeffs: Vec<u32> = (0..gens.len()).map(|i| (code / order.pow(i as u32)) % order).collect();
        if coeffs.iter().all(|a| a % 2 == 0) {
            continue;
        }
        let c = gens
            .iter()
            .zip(&coeffs)
            .fold(DClass::Zero, |acc, (g, &a)| acc.add(g.scale(a, n), n));
        best = best.min(profile.valuation(c));
    }
    best
}

/// `ii_w`, the valuation of the Tits algebra attached to `rho_w`.
pub fn rho_index_valuation(profile: &IndexProfile, entry: &SteinbergEntry) -> Result<u32> {
    let rs = profile.root_system()?;
    let cg = cocenter(&rs);
    rho_index_valuation_in(profile, &cg, entry)
}

/// As [`rho_index_valuation`] with a precomputed cocenter.
pub fn rho_index_valuation_in(
    profile: &IndexProfile,
    cg: &CocenterGroup,
    entry: &SteinbergEntry,
) -> Result<u32> {
    if entry.rho.rank() != profile.rank || cg.system().rank() != profile.rank {
        return Err(Error::DimensionMismatch { expected: profile.rank, got: entry.rho.rank() });
    }
    Ok(profile.valuation(dclass_of(cg, &entry.cls)?))
}

/// For each `w`, the power `2^{ii_w}` of `c_1(L(rho_w))` known to be rational.
pub fn rational_cycle_exponents(
    profile: &IndexProfile,
    table: &[SteinbergEntry],
) -> Result<Vec<(WeylElement, u64)>> {
    let cg = cocenter(&profile.root_system()?);
    table
        .iter()
        .map(|e| {
            let ii = rho_index_valuation_in(profile, &cg, e)?;
            Ok((e.w.clone(), 1u64 << ii))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn contains(&self, x: u32) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsResult {
    /// 1-based positions in the J-tuple of the degree-one parameters.
    pub positions: Vec<usize>,
    pub intervals: Vec<Interval>,
    pub caps: Vec<u32>,
}

impl BoundsResult {
    pub fn contains(&self, j: &JTuple) -> bool {
        self.positions
            .iter()
            .zip(&self.intervals)
            .all(|(&pos, iv)| j.entries().get(pos - 1).is_some_and(|&x| iv.contains(x)))
    }
}

/// Intervals for `j_1` (and `j_2` when `n` is even) of an involution on a
/// degree `2n` algebra, `sig` being the matching involution signature.
pub fn degree_one_bounds(profile: &IndexProfile, sig: &KacSignature) -> Result<BoundsResult> {
    profile.validate()?;
    degree_one_bounds_unchecked(profile, sig)
}

/// As [`degree_one_bounds`] without the profile consistency checks.
pub fn degree_one_bounds_unchecked(profile: &IndexProfile, sig: &KacSignature) -> Result<BoundsResult> {
    let n = profile.rank;
    if sig.group != GroupLabel::Pgo(n as u32) || sig.p != 2 {
        return Err(Error::InconsistentProfile(format!(
            "signature of {} does not belong to a degree {} involution",
            sig.group,
            2 * n
        )));
    }
    let positions: Vec<usize> = (0..sig.r).filter(|&i| sig.d[i] == 1).map(|i| i + 1).collect();
    let caps: Vec<u32> = positions.iter().map(|&p| sig.k[p - 1]).collect();
    let lower = |ii: u32, k: u32| -> u32 {
        if ii > 1 && k > 1 {
            2
        } else if ii > 0 {
            1
        } else {
            0
        }
    };
    let ii_j = common_index(profile);
    let mut intervals = Vec::with_capacity(positions.len());
    if n % 2 == 1 {
        let k = caps[0];
        intervals.push(Interval { lo: lower(ii_j, k), hi: profile.ii_plus.min(k) });
    } else {
        let (k1, k2) = (caps[0], caps[1]);
        let min_c = profile.ii_plus.min(profile.ii_minus);
        let mut lo1 = lower(ii_j, k1);
        if min_c == 0 {
            // one component of the Clifford algebra splits
            lo1 = lo1.max(lower(profile.ii_a, k1));
        }
        intervals.push(Interval { lo: lo1, hi: profile.ii_a.min(k1) });
        intervals.push(Interval { lo: lower(ii_j, k2), hi: min_c.min(k2) });
    }
    debug_assert!(intervals.iter().zip(&caps).all(|(iv, &k)| iv.lo <= iv.hi && iv.hi <= k));
    Ok(BoundsResult { positions, intervals, caps })
}
