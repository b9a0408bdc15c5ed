//! Exact values of the J-invariant in the cases where it is determined by
//! index data: quadratic forms of dimension 4, 6, 8 (and two documented
//! forms of dimension 10), involutions of degree 4 and 6, and trialitarian
//! triples of degree 8.

use crate::chow::{involution_signature, is_admissible, GroupLabel, JTuple, KacSignature};
use crate::error::{Error, Result};
use crate::titsbounds::IndexProfile;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsotropyStatus {
    Hyperbolic,
    IsotropicNonhyperbolic,
    Anisotropic,
}

impl IsotropyStatus {
    pub fn is_isotropic(self) -> bool {
        self != IsotropyStatus::Anisotropic
    }
}

impl fmt::Display for IsotropyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsotropyStatus::Hyperbolic => "hyperbolic",
            IsotropyStatus::IsotropicNonhyperbolic => "isotropic_nonhyperbolic",
            IsotropyStatus::Anisotropic => "anisotropic",
        })
    }
}

impl FromStr for IsotropyStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "hyperbolic" | "hyp" => Ok(IsotropyStatus::Hyperbolic),
            "isotropic_nonhyperbolic" | "isotropic" | "iso" => Ok(IsotropyStatus::IsotropicNonhyperbolic),
            "anisotropic" | "aniso" => Ok(IsotropyStatus::Anisotropic),
            other => Err(Error::InvalidArgument(format!("unknown isotropy status {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFormProfile {
    pub dim: u32,
    pub ii_s: u32,
    pub status: IsotropyStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting_pattern: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub j: JTuple,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vishik_j: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ii_s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ii: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting_pattern: Option<Vec<u32>>,
    pub description: String,
}

impl ClassificationRow {
    fn bare(j: JTuple, description: &str) -> Self {
        ClassificationRow {
            j,
            vishik_j: None,
            ii_s: None,
            ii: None,
            splitting_pattern: None,
            description: description.to_string(),
        }
    }
}

struct Dim8Row {
    j: [u32; 2],
    vishik: &'static [u32],
    ii_s: u32,
    ii: u32,
    pattern: &'static [u32],
    description: &'static str,
}

const DIM8_TABLE: [Dim8Row; 7] = [
    Dim8Row { j: [0, 0], vishik: &[], ii_s: 0, ii: 0, pattern: &[4], description: "hyperbolic" },
    Dim8Row { j: [1, 0], vishik: &[1], ii_s: 1, ii: 1, pattern: &[2, 4], description: "Pf_2 ⊥ 2H" },
    Dim8Row { j: [2, 0], vishik: &[1, 2], ii_s: 2, ii: 2, pattern: &[1, 2, 4], description: "Al_6 ⊥ H" },
    Dim8Row { j: [0, 1], vishik: &[3], ii_s: 0, ii: 1, pattern: &[0, 4], description: "Pf_3" },
    Dim8Row {
        j: [1, 1],
        vishik: &[1, 3],
        ii_s: 1,
        ii: 1,
        pattern: &[0, 2, 4],
        description: "q = <1,-a> ⊗ q'",
    },
    Dim8Row {
        j: [2, 1],
        vishik: &[1, 2, 3],
        ii_s: 2,
        ii: 2,
        pattern: &[0, 1, 2, 4],
        description: "Pf_2 ⊥ Pf_2 or s_{l/k}(Pf_2)",
    },
    Dim8Row { j: [2, 1], vishik: &[1, 2, 3], ii_s: 3, ii: 3, pattern: &[0, 1, 2, 4], description: "generic" },
];

impl Dim8Row {
    fn to_row(&self) -> ClassificationRow {
        ClassificationRow {
            j: JTuple(self.j.to_vec()),
            vishik_j: Some(self.vishik.to_vec()),
            ii_s: Some(self.ii_s),
            ii: Some(self.ii),
            splitting_pattern: Some(self.pattern.to_vec()),
            description: self.description.to_string(),
        }
    }
}

/// The seven data rows for 8-dimensional forms with trivial discriminant.
pub fn dim8_table() -> Vec<ClassificationRow> {
    DIM8_TABLE.iter().map(Dim8Row::to_row).collect()
}

/// Splitting pattern of an 8-dimensional form with the given J-invariant.
pub fn dim8_pattern_for(j: &JTuple) -> Result<Vec<u32>> {
    DIM8_TABLE
        .iter()
        .find(|r| r.j[..] == j.0[..])
        .map(|r| r.pattern.to_vec())
        .ok_or_else(|| Error::InvalidArgument(format!("{j} is not a J-invariant of an 8-dimensional form")))
}

/// J-invariant of an 8-dimensional form with the given splitting pattern.
pub fn dim8_j_for(pattern: &[u32]) -> Result<JTuple> {
    DIM8_TABLE
        .iter()
        .find(|r| r.pattern == pattern)
        .map(|r| JTuple(r.j.to_vec()))
        .ok_or_else(|| Error::InvalidArgument(format!("{pattern:?} is not a splitting pattern in dimension 8")))
}

fn inconsistent<T>(msg: String) -> Result<T> {
    Err(Error::InconsistentProfile(msg))
}

pub fn classify_qform(q: &QFormProfile) -> Result<ClassificationRow> {
    if q.dim < 4 || q.dim % 2 != 0 {
        return Err(Error::InvalidArgument(format!("dimension {} must be even and >= 4", q.dim)));
    }
    let n = q.dim / 2;
    if q.ii_s > n - 1 {
        return inconsistent(format!("ii_S = {} exceeds n - 1 = {}", q.ii_s, n - 1));
    }
    if q.status == IsotropyStatus::Hyperbolic && q.ii_s != 0 {
        return inconsistent(format!("hyperbolic form needs ii_S = 0, got {}", q.ii_s));
    }
    let row = match q.dim {
        4 => {
            let expected = if q.ii_s == 0 { IsotropyStatus::Hyperbolic } else { IsotropyStatus::Anisotropic };
            if q.status != expected {
                return inconsistent(format!("dimension 4 with ii_S = {} is {expected}", q.ii_s));
            }
            let desc = if q.ii_s == 0 { "hyperbolic" } else { "n_Q, Q division" };
            ClassificationRow { ii_s: Some(q.ii_s), ..ClassificationRow::bare(JTuple(vec![q.ii_s]), desc) }
        }
        6 => {
            let (expected, desc) = match q.ii_s {
                0 => (IsotropyStatus::Hyperbolic, "hyperbolic"),
                1 => (IsotropyStatus::IsotropicNonhyperbolic, "n_Q ⊥ H"),
                _ => (IsotropyStatus::Anisotropic, "Al_6"),
            };
            if q.status != expected {
                return inconsistent(format!("dimension 6 with ii_S = {} is {expected}", q.ii_s));
            }
            ClassificationRow { ii_s: Some(q.ii_s), ..ClassificationRow::bare(JTuple(vec![q.ii_s]), desc) }
        }
        8 => {
            if q.ii_s == 0 && q.status == IsotropyStatus::IsotropicNonhyperbolic {
                return inconsistent("isotropic form with ii_S = 0 in dimension 8 is hyperbolic".into());
            }
            if q.ii_s == 3 && q.status.is_isotropic() {
                return inconsistent("ii_S = 3 in dimension 8 forces anisotropy".into());
            }
            let j = [q.ii_s.min(2), u32::from(q.status == IsotropyStatus::Anisotropic)];
            let row = DIM8_TABLE
                .iter()
                .find(|r| r.j == j && (r.j != [2, 1] || r.ii_s == q.ii_s))
                .expect("every consistent profile has a row");
            row.to_row()
        }
        10 => classify_dim10(q)?,
        d => return Err(Error::Undocumented(format!("no classification for dimension {d}"))),
    };
    if let (Some(given), Some(known)) = (&q.splitting_pattern, &row.splitting_pattern) {
        if given != known {
            return inconsistent(format!("splitting pattern {given:?} does not match {known:?} for J = {}", row.j));
        }
    }
    Ok(row)
}

fn classify_dim10(q: &QFormProfile) -> Result<ClassificationRow> {
    let pattern = q
        .splitting_pattern
        .as_deref()
        .ok_or_else(|| Error::Undocumented("dimension 10 needs a splitting pattern".into()))?;
    let (status, desc) = match pattern {
        [0, 2, 3, 5] => (IsotropyStatus::Anisotropic, "anisotropic Pfister neighbor"),
        [2, 3, 5] => (IsotropyStatus::IsotropicNonhyperbolic, "Al_6 ⊥ 2H"),
        _ => return Err(Error::Undocumented(format!("dimension 10 with splitting pattern {pattern:?}"))),
    };
    if q.ii_s != 2 {
        return inconsistent(format!("splitting pattern {pattern:?} has ii_S = 2, got {}", q.ii_s));
    }
    if q.status != status {
        return inconsistent(format!("splitting pattern {pattern:?} is {status}"));
    }
    Ok(ClassificationRow {
        ii_s: Some(2),
        splitting_pattern: Some(pattern.to_vec()),
        ..ClassificationRow::bare(JTuple(vec![2, 0]), desc)
    })
}

/// Member of a trialitarian triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Member {
    A,
    B,
    C,
}

impl Member {
    pub const ALL: [Member; 3] = [Member::A, Member::B, Member::C];
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Member {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Member::A),
            "B" => Ok(Member::B),
            "C" => Ok(Member::C),
            other => Err(Error::InvalidArgument(format!("member must be A, B or C, got {other:?}"))),
        }
    }
}

/// Algebra of degree `2n` with orthogonal involution of trivial
/// discriminant. In degree 8, `ii_plus` and `ii_minus` are the indices of
/// the other two members `B` and `C` of the triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionProfile {
    pub degree: u32,
    pub ii_a: u32,
    pub ii_plus: u32,
    pub ii_minus: u32,
    #[serde(default)]
    pub status: Option<IsotropyStatus>,
    #[serde(default = "default_member")]
    pub designated: Member,
}

fn default_member() -> Member {
    Member::A
}

impl InvolutionProfile {
    pub fn new(degree: u32, ii_a: u32, ii_plus: u32, ii_minus: u32, status: Option<IsotropyStatus>) -> Self {
        InvolutionProfile { degree, ii_a, ii_plus, ii_minus, status, designated: Member::A }
    }

    pub fn index_profile(&self) -> Result<IndexProfile> {
        if self.degree % 2 != 0 {
            return Err(Error::InvalidArgument(format!("degree {} must be even", self.degree)));
        }
        IndexProfile::new((self.degree / 2) as usize, self.ii_a, self.ii_plus, self.ii_minus)
    }
}

/// J-invariant of an involution of degree 4 or 6.
pub fn classify_involution(p: &InvolutionProfile) -> Result<ClassificationRow> {
    p.index_profile()?;
    match p.degree {
        4 => {
            if p.ii_a > 2 || p.ii_plus > 1 || p.ii_minus > 1 {
                return inconsistent("degree 4 needs ii_a <= 2 and quaternion Clifford components".into());
            }
            let half_spin = p.ii_plus.min(p.ii_minus) == 0;
            match p.status {
                Some(IsotropyStatus::IsotropicNonhyperbolic) => {
                    return inconsistent("an isotropic involution of degree 4 is hyperbolic".into())
                }
                Some(IsotropyStatus::Hyperbolic) if !half_spin => {
                    return inconsistent("hyperbolic in degree 4 needs a split Clifford component".into())
                }
                Some(IsotropyStatus::Anisotropic) if half_spin => {
                    return inconsistent("a split Clifford component makes the involution hyperbolic".into())
                }
                _ => {}
            }
            let j = JTuple(vec![u32::from(p.ii_a > 0), u32::from(!half_spin)]);
            let desc = match (p.ii_a > 0, half_spin) {
                (false, true) => "split hyperbolic",
                (false, false) => "adjoint to an anisotropic 2-fold Pfister form",
                (true, true) => "M_2(Q), hyperbolic",
                (true, false) => "(Q_1, bar) ⊗ (Q_2, bar), anisotropic",
            };
            Ok(ClassificationRow::bare(j, desc))
        }
        6 => {
            let ii_s = p.ii_plus;
            if ii_s > 2 {
                return inconsistent(format!("ii_S = {ii_s} exceeds 2 in degree 6"));
            }
            if p.ii_a > 0 && p.status.is_some_and(IsotropyStatus::is_isotropic) {
                return inconsistent("a non-split algebra of degree 6 carries only anisotropic involutions".into());
            }
            let (expected, desc) = match ii_s {
                0 => (IsotropyStatus::Hyperbolic, "split hyperbolic"),
                1 => (IsotropyStatus::IsotropicNonhyperbolic, "split isotropic, non hyperbolic"),
                _ => (IsotropyStatus::Anisotropic, "anisotropic"),
            };
            if let Some(s) = p.status {
                if s != expected {
                    return inconsistent(format!("degree 6 with ii_S = {ii_s} is {expected}"));
                }
            }
            Ok(ClassificationRow { ii_s: Some(ii_s), ..ClassificationRow::bare(JTuple(vec![ii_s]), desc) })
        }
        d => Err(Error::Undocumented(format!("use classify_triple for degree 8; degree {d} is not classified"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleMember {
    pub member: Member,
    pub ii: u32,
    pub j: JTuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleClassification {
    pub designated: Member,
    pub status: IsotropyStatus,
    pub members: Vec<TripleMember>,
}

impl TripleClassification {
    pub fn get(&self, m: Member) -> &JTuple {
        &self.members.iter().find(|x| x.member == m).expect("all members present").j
    }
}

/// J-invariants of a trialitarian triple ordered by indices:
/// `ii_a <= ii_plus <= ii_minus` are the indices of `A`, `B`, `C`, and the
/// status is that of the involution on `A`.
pub fn classify_triple(p: &InvolutionProfile) -> Result<TripleClassification> {
    if p.degree != 8 {
        return Err(Error::InvalidArgument(format!("triples have degree 8, got {}", p.degree)));
    }
    let (a, b, c) = (p.ii_a, p.ii_plus, p.ii_minus);
    if !(a <= b && b <= c) {
        return inconsistent(format!("indices ({a},{b},{c}) are not ordered"));
    }
    if c > 3 {
        return inconsistent(format!("index valuation {c} exceeds 3 in degree 8"));
    }
    p.index_profile()?;
    let status = p
        .status
        .ok_or_else(|| Error::InvalidArgument("a degree 8 triple needs an isotropy status".into()))?;
    if status == IsotropyStatus::Hyperbolic && b != 0 {
        return inconsistent("hyperbolic needs a split Clifford component".into());
    }
    if status.is_isotropic() {
        if c >= 2 && a > 0 {
            return inconsistent(format!("isotropic with ii_C = {c} >= 2 forces A split, got ii_A = {a}"));
        }
        if c == 3 {
            return inconsistent("ii = 3 forces anisotropy".into());
        }
    }
    let j = a.min(2);
    let jp = b.min(2);
    let j3 = u32::from(!status.is_isotropic());
    let ja = JTuple(vec![j, jp, j3]);
    let jbc = JTuple(vec![jp, j, j3]);
    assert!(
        !excluded_values().contains(&ja) && !excluded_values().contains(&jbc),
        "consistent profile produced an excluded value"
    );
    Ok(TripleClassification {
        designated: p.designated,
        status,
        members: vec![
            TripleMember { member: Member::A, ii: a, j: ja },
            TripleMember { member: Member::B, ii: b, j: jbc.clone() },
            TripleMember { member: Member::C, ii: c, j: jbc },
        ],
    })
}

/// Sorts three unordered indices. Returns the sorted triple and, for each
/// input position, the member it became.
pub fn order_by_indices(ii: [u32; 3]) -> ([u32; 3], [Member; 3]) {
    let mut idx = [0usize, 1, 2];
    idx.sort_by_key(|&i| (ii[i], i));
    let sorted = [ii[idx[0]], ii[idx[1]], ii[idx[2]]];
    let mut roles = [Member::A; 3];
    for (rank, &orig) in idx.iter().enumerate() {
        roles[orig] = Member::ALL[rank];
    }
    (sorted, roles)
}

/// J-invariant of `(End(V), ad_phi)` from that of `phi`, for `dim V = 2n`.
pub fn split_involution_j(n: u32, j_phi: &JTuple) -> JTuple {
    if n % 2 == 1 {
        j_phi.clone()
    } else {
        let mut v = vec![0];
        v.extend_from_slice(j_phi.entries());
        JTuple(v)
    }
}

/// Admissible values for degree 8 that never occur.
pub fn excluded_values() -> Vec<JTuple> {
    vec![JTuple(vec![1, 2, 0]), JTuple(vec![2, 1, 0]), JTuple(vec![2, 2, 0])]
}

/// Whether `j` is the J-invariant of some degree 8 algebra with involution.
pub fn occurs(j: &JTuple) -> bool {
    let sig = involution_signature(4).expect("valid");
    is_admissible(&sig, j) && !excluded_values().contains(j)
}

/// The zero pattern forced on an involution in `I^s`: entries `2..=2^{s-2}`
/// vanish.
pub fn is_pattern_is(j: &JTuple, sig: &KacSignature, s: u32) -> Result<bool> {
    if !matches!(sig.group, GroupLabel::Pgo(_)) {
        return Err(Error::InvalidArgument(format!("{} is not a PGO signature", sig.group)));
    }
    let last = if (3..32).contains(&s) { 1usize << (s - 2) } else { usize::MAX };
    if last > sig.r {
        return Err(Error::InvalidArgument(format!("s = {s} needs s > 2 and 2^(s-2) <= r = {}", sig.r)));
    }
    if j.len() != sig.r {
        return Err(Error::DimensionMismatch { expected: sig.r, got: j.len() });
    }
    Ok(j.entries()[1..last].iter().all(|&x| x == 0))
}

/// Witt-equivalent objects: deleting zeros from both tuples gives the same
/// sequence.
pub fn witt_consistency(j1: &JTuple, j2: &JTuple) -> bool {
    let strip = |j: &JTuple| j.entries().iter().copied().filter(|&x| x != 0).collect::<Vec<_>>();
    strip(j1) == strip(j2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::admissible_tuples;
    use IsotropyStatus::*;

    fn qf(dim: u32, ii_s: u32, status: IsotropyStatus) -> QFormProfile {
        QFormProfile { dim, ii_s, status, splitting_pattern: None }
    }

    #[test]
    fn qform_small() {
        assert_eq!(classify_qform(&qf(4, 1, Anisotropic)).unwrap().j, JTuple::from([1]));
        assert!(classify_qform(&qf(4, 1, Hyperbolic)).is_err());
        assert_eq!(classify_qform(&qf(6, 1, IsotropicNonhyperbolic)).unwrap().j, JTuple::from([1]));
        assert!(classify_qform(&qf(6, 1, Anisotropic)).is_err());
        assert!(classify_qform(&qf(6, 3, Anisotropic)).is_err());
        assert!(matches!(classify_qform(&qf(12, 2, Anisotropic)), Err(Error::Undocumented(_))));
    }

    #[test]
    fn qform_dim8() {
        let r = classify_qform(&qf(8, 0, Anisotropic)).unwrap();
        assert_eq!((r.j.clone(), r.description.as_str()), (JTuple::from([0, 1]), "Pf_3"));
        assert_eq!(r.splitting_pattern, Some(vec![0, 4]));
        assert_eq!(classify_qform(&qf(8, 0, Hyperbolic)).unwrap().j, JTuple::from([0, 0]));
        assert_eq!(classify_qform(&qf(8, 3, Anisotropic)).unwrap().description, "generic");
        assert!(classify_qform(&qf(8, 0, IsotropicNonhyperbolic)).is_err());
        assert!(classify_qform(&qf(8, 3, IsotropicNonhyperbolic)).is_err());
        let mut bad = qf(8, 1, Anisotropic);
        bad.splitting_pattern = Some(vec![0, 4]);
        assert!(classify_qform(&bad).is_err());
    }

    #[test]
    fn dim8_lookup_bijective() {
        for row in dim8_table() {
            let pat = row.splitting_pattern.clone().unwrap();
            assert_eq!(dim8_j_for(&pat).unwrap(), row.j);
            assert_eq!(dim8_pattern_for(&row.j).unwrap(), pat);
        }
    }

    #[test]
    fn qform_dim10() {
        let mut q = qf(10, 2, Anisotropic);
        q.splitting_pattern = Some(vec![0, 2, 3, 5]);
        assert_eq!(classify_qform(&q).unwrap().j, JTuple::from([2, 0]));
        q.splitting_pattern = Some(vec![2, 3, 5]);
        q.status = IsotropicNonhyperbolic;
        assert_eq!(classify_qform(&q).unwrap().j, JTuple::from([2, 0]));
        q.splitting_pattern = Some(vec![1, 3, 5]);
        assert!(matches!(classify_qform(&q), Err(Error::Undocumented(_))));
    }

    #[test]
    fn involutions_small() {
        let r = classify_involution(&InvolutionProfile::new(4, 1, 0, 1, None)).unwrap();
        assert_eq!(r.j, JTuple::from([1, 0]));
        let r = classify_involution(&InvolutionProfile::new(4, 0, 1, 1, Some(Anisotropic))).unwrap();
        assert_eq!(r.j, JTuple::from([0, 1]));
        assert!(classify_involution(&InvolutionProfile::new(4, 0, 1, 1, Some(Hyperbolic))).is_err());
        let r = classify_involution(&InvolutionProfile::new(6, 0, 1, 1, None)).unwrap();
        assert_eq!(r.j, JTuple::from([1]));
        assert!(classify_involution(&InvolutionProfile::new(6, 1, 2, 2, Some(IsotropicNonhyperbolic))).is_err());
        assert!(classify_involution(&InvolutionProfile::new(6, 1, 1, 1, None)).is_err());
        assert!(classify_involution(&InvolutionProfile::new(6, 0, 3, 3, None)).is_err());
        assert!(classify_involution(&InvolutionProfile::new(4, 0, 2, 2, None)).is_err());
    }

    #[test]
    fn triples() {
        let t = classify_triple(&InvolutionProfile::new(8, 1, 2, 2, Some(Anisotropic))).unwrap();
        assert_eq!(t.get(Member::A), &JTuple::from([1, 2, 1]));
        assert_eq!(t.get(Member::B), &JTuple::from([2, 1, 1]));
        assert_eq!(t.get(Member::C), &JTuple::from([2, 1, 1]));
        let t = classify_triple(&InvolutionProfile::new(8, 1, 1, 2, Some(Anisotropic))).unwrap();
        assert!(t.members.iter().all(|m| m.j == JTuple::from([1, 1, 1])));
        let t = classify_triple(&InvolutionProfile::new(8, 1, 1, 1, Some(IsotropicNonhyperbolic))).unwrap();
        assert!(t.members.iter().all(|m| m.j == JTuple::from([1, 1, 0])));
        assert!(classify_triple(&InvolutionProfile::new(8, 1, 2, 2, Some(IsotropicNonhyperbolic))).is_err());
        assert!(classify_triple(&InvolutionProfile::new(8, 2, 1, 2, Some(Anisotropic))).is_err());
        assert!(classify_triple(&InvolutionProfile::new(8, 1, 1, 3, Some(Anisotropic))).is_err());
    }

    #[test]
    fn ordering_helper() {
        let (sorted, roles) = order_by_indices([2, 1, 2]);
        assert_eq!(sorted, [1, 2, 2]);
        assert_eq!(roles, [Member::B, Member::A, Member::C]);
    }

    #[test]
    fn excluded_and_occurring() {
        let sig = involution_signature(4).unwrap();
        let all = admissible_tuples(&sig).unwrap();
        let occurring: Vec<_> = all.iter().filter(|j| occurs(j)).collect();
        assert_eq!(occurring.len(), all.len() - 3);
        assert!(!occurs(&JTuple::from([1, 2, 0])));
        assert!(occurs(&JTuple::from([2, 2, 1])));
    }

    #[test]
    fn split_case() {
        assert_eq!(split_involution_j(4, &JTuple::from([2, 1])), JTuple::from([0, 2, 1]));
        assert_eq!(split_involution_j(3, &JTuple::from([2])), JTuple::from([2]));
    }

    #[test]
    fn pattern_is() {
        let sig16 = involution_signature(8).unwrap();
        assert_eq!(sig16.r, 5);
        assert!(is_pattern_is(&JTuple::from([1, 0, 0, 0, 1]), &sig16, 4).unwrap());
        assert!(!is_pattern_is(&JTuple::from([1, 0, 1, 0, 1]), &sig16, 4).unwrap());
        let sig8 = involution_signature(4).unwrap();
        assert!(is_pattern_is(&JTuple::from([2, 0, 1]), &sig8, 3).unwrap());
        assert!(!is_pattern_is(&JTuple::from([1, 1, 1]), &sig8, 3).unwrap());
        assert!(is_pattern_is(&JTuple::from([1, 1, 1]), &sig8, 2).is_err());
        assert!(is_pattern_is(&JTuple::from([1, 1, 1]), &sig8, 5).is_err());
    }

    #[test]
    fn witt() {
        assert!(witt_consistency(&JTuple::from([1]), &JTuple::from([1, 0])));
        assert!(witt_consistency(&JTuple::from([0, 0, 0]), &JTuple::from([0])));
        assert!(!witt_consistency(&JTuple::from([2, 1]), &JTuple::from([1, 2])));
    }
}
