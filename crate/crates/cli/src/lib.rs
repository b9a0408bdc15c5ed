//! Argument definitions, JSON output types and command dispatch for `jinv`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use jinv_core::charmap::{charmap_image, degree_one_generator_count};
use jinv_core::chow::{admissible_tuples, kac_signature, poincare_polynomial, GroupLabel, JTuple, KacSignature};
use jinv_core::classify::{
    classify_involution, classify_qform, classify_triple, excluded_values, order_by_indices, ClassificationRow,
    InvolutionProfile, IsotropyStatus, Member, QFormProfile, TripleClassification, TripleMember,
};
use jinv_core::cocenter::{cocenter, CocenterElement, LatticeChoice};
use jinv_core::liealg::{Family, RootSystem, WeightVec, DEFAULT_WEYL_CAP};
use jinv_core::steinberg::steinberg_table;
use jinv_core::titsbounds::{common_index, degree_one_bounds, degree_one_bounds_unchecked, IndexProfile, Interval};
use jinv_core::{involution_signature, Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Debug, Parser)]
#[command(name = "jinv", version, about = "J-invariant tables for orthogonal groups at p = 2")]
pub struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kac signature (r; d; k) of a split group
    Kac(GroupArgs),
    /// All admissible J-tuples of a group
    Admissible {
        #[command(flatten)]
        group: GroupArgs,
        /// Prime used in the restrictions (experimental; the table is for p = 2)
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// Steinberg weights rho_w for every Weyl group element
    Steinberg {
        #[command(flatten)]
        system: SystemArgs,
        /// Abort if the Weyl group is larger than this
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        cap: usize,
    },
    /// Image of the characteristic map in degree one, mod p
    Charmap {
        #[command(flatten)]
        system: SystemArgs,
        /// adjoint, simply_connected, special_orthogonal, half_spin_plus, half_spin_minus
        #[arg(long, default_value = "adjoint")]
        lattice: LatticeChoice,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// Invariant factors of Lambda_w / Lambda_r and classes of the omega_i
    Cocenter(SystemArgs),
    /// Degree-one bounds for an index profile of type D_n
    Bounds {
        #[arg(long)]
        rank: usize,
        /// ii_A,ii_plus,ii_minus
        #[arg(long, value_parser = parse_triple)]
        ii: [u32; 3],
        /// Skip the Brauer-group consistency checks
        #[arg(long)]
        unchecked: bool,
    },
    /// Poincare polynomial of the upper motive for a J-tuple
    Poincare {
        #[command(flatten)]
        group: GroupArgs,
        /// J-tuple, e.g. 2,1,1
        #[arg(long)]
        j: JTuple,
    },
    /// J-invariant of a quadratic form with trivial discriminant
    ClassifyQf {
        #[arg(long)]
        dim: u32,
        #[arg(long = "ii-s")]
        ii_s: u32,
        #[command(flatten)]
        status: StatusArgs,
        /// Splitting pattern, e.g. 0,2,3,5
        #[arg(long)]
        pattern: Option<JTuple>,
    },
    /// J-invariant of an involution of degree 4 or 6
    ClassifyInv {
        #[arg(long)]
        degree: u32,
        /// ii_A,ii_plus,ii_minus
        #[arg(long, value_parser = parse_triple)]
        ii: [u32; 3],
        #[command(flatten)]
        status: OptionalStatusArgs,
    },
    /// J-invariants of a trialitarian triple of degree 8
    Triple {
        /// Indices of A,B,C in increasing order; unsorted input is relabelled
        #[arg(long, value_parser = parse_triple)]
        ii: [u32; 3],
        #[command(flatten)]
        status: StatusArgs,
        /// Member whose row is marked
        #[arg(long, default_value = "A")]
        designate: Member,
    },
    /// Admissible tuples with Poincare polynomials; PGO_8 rows are marked occurs/excluded
    Atlas(GroupArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    #[value(name = "SO", alias = "so")]
    So,
    #[value(name = "Spin", alias = "spin")]
    Spin,
    #[value(name = "SpinHalf", alias = "spinhalf")]
    SpinHalf,
    #[value(name = "PGO", alias = "pgo")]
    Pgo,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// SO (SO_n), Spin (Spin_n), SpinHalf (Spin^+_2n), PGO (PGO_2n)
    #[arg(long, ignore_case = true)]
    pub group: GroupKind,
    #[arg(long)]
    pub n: u32,
}

impl GroupArgs {
    pub fn label(&self) -> Result<GroupLabel> {
        let label = match self.group {
            GroupKind::So => GroupLabel::So(self.n),
            GroupKind::Spin => GroupLabel::Spin(self.n),
            GroupKind::SpinHalf => GroupLabel::SpinHalf(self.n),
            GroupKind::Pgo => GroupLabel::Pgo(self.n),
        };
        label.validate()?;
        Ok(label)
    }
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// A, B or D
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct StatusArgs {
    #[arg(long)]
    pub hyperbolic: bool,
    /// Isotropic and not hyperbolic
    #[arg(long)]
    pub isotropic: bool,
    #[arg(long)]
    pub anisotropic: bool,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalStatusArgs {
    #[arg(long)]
    pub hyperbolic: bool,
    /// Isotropic and not hyperbolic
    #[arg(long)]
    pub isotropic: bool,
    #[arg(long)]
    pub anisotropic: bool,
}

fn status_of(hyperbolic: bool, isotropic: bool, anisotropic: bool) -> Option<IsotropyStatus> {
    match (hyperbolic, isotropic, anisotropic) {
        (true, _, _) => Some(IsotropyStatus::Hyperbolic),
        (_, true, _) => Some(IsotropyStatus::IsotropicNonhyperbolic),
        (_, _, true) => Some(IsotropyStatus::Anisotropic),
        _ => None,
    }
}

impl StatusArgs {
    pub fn status(&self) -> IsotropyStatus {
        status_of(self.hyperbolic, self.isotropic, self.anisotropic).expect("clap enforces one flag")
    }
}

impl OptionalStatusArgs {
    pub fn status(&self) -> Option<IsotropyStatus> {
        status_of(self.hyperbolic, self.isotropic, self.anisotropic)
    }
}

fn parse_triple(s: &str) -> std::result::Result<[u32; 3], String> {
    let j: JTuple = s.parse().map_err(|e: Error| e.to_string())?;
    <[u32; 3]>::try_from(j.0).map_err(|v| format!("expected three comma-separated values, got {}", v.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacOut {
    pub r: usize,
    pub d: Vec<u32>,
    pub k: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleOut {
    pub group: String,
    pub p: u64,
    pub d: Vec<u32>,
    pub k: Vec<u32>,
    pub tuples: Vec<JTuple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergRow {
    pub word: Vec<usize>,
    pub descents: Vec<usize>,
    pub rho: WeightVec,
    pub class: CocenterElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergOut {
    pub system: String,
    pub invariant_factors: Vec<i64>,
    pub entries: Vec<SteinbergRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharmapOut {
    pub system: String,
    pub lattice: LatticeChoice,
    pub p: u64,
    pub dim: usize,
    pub basis: Vec<Vec<u64>>,
    pub degree_one_generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocenterOut {
    pub system: String,
    pub invariant_factors: Vec<i64>,
    pub order: u64,
    /// classes of omega_1, ..., omega_n
    pub fundamental_classes: Vec<CocenterElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsOut {
    pub profile: IndexProfile,
    pub common_index: u32,
    pub positions: Vec<usize>,
    pub intervals: Vec<Interval>,
    pub caps: Vec<u32>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareOut {
    pub group: String,
    pub j: JTuple,
    pub coefficients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub j: JTuple,
    pub poincare: Vec<u64>,
    /// "occurs" or "excluded" for PGO_8, "admissible" otherwise
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasOut {
    pub group: String,
    pub d: Vec<u32>,
    pub k: Vec<u32>,
    pub entries: Vec<AtlasEntry>,
}

/// Runs a parsed command and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String> {
    let json = cli.json;
    match &cli.command {
        Command::Kac(g) => {
            let sig = kac_signature(g.label()?)?;
            let out = KacOut { r: sig.r, d: sig.d.clone(), k: sig.k.clone() };
            emit(json, &out, || kac_text(&sig))
        }
        Command::Admissible { group, p } => {
            let mut sig = kac_signature(group.label()?)?;
            if !jinv_core::charmap::is_prime(*p) {
                return Err(Error::NotPrime(*p));
            }
            sig.p = *p;
            let tuples = admissible_tuples(&sig)?;
            let out = AdmissibleOut { group: sig.group.to_string(), p: *p, d: sig.d.clone(), k: sig.k.clone(), tuples };
            emit(json, &out, || {
                let mut s = format!("{}: {} admissible tuples\n", out.group, out.tuples.len());
                for j in &out.tuples {
                    writeln!(s, "  {j}").unwrap();
                }
                s
            })
        }
        Command::Steinberg { system, cap } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let cg = cocenter(&rs);
            let table = steinberg_table(&rs, *cap)?;
            let out = SteinbergOut {
                system: rs.to_string(),
                invariant_factors: cg.invariant_factors().to_vec(),
                entries: table
                    .into_iter()
                    .map(|e| SteinbergRow { word: e.word, descents: e.descent_set, rho: e.rho, class: e.cls })
                    .collect(),
            };
            emit(json, &out, || steinberg_text(&out))
        }
        Command::Charmap { system, lattice, p } => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let img = charmap_image(&rs, *lattice, *p)?;
            let out = CharmapOut {
                system: rs.to_string(),
                lattice: *lattice,
                p: *p,
                dim: img.dim(),
                basis: img.basis.clone(),
                degree_one_generators: degree_one_generator_count(&rs, *lattice, *p)?,
            };
            emit(json, &out, || {
                let mut s = format!("{} {}: image of dimension {} mod {}\n", out.system, out.lattice, out.dim, out.p);
                for v in &out.basis {
                    writeln!(s, "  {}", h_combination(v)).unwrap();
                }
                writeln!(s, "degree-one generators: {}", out.degree_one_generators).unwrap();
                s
            })
        }
        Command::Cocenter(system) => {
            let rs = RootSystem::new(system.family, system.rank)?;
            let cg = cocenter(&rs);
            let out = CocenterOut {
                system: rs.to_string(),
                invariant_factors: cg.invariant_factors().to_vec(),
                order: cg.order(),
                fundamental_classes: cg.generators().to_vec(),
            };
            emit(json, &out, || {
                let factors: Vec<String> = out.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
                let group = if factors.is_empty() { "trivial".to_string() } else { factors.join(" x ") };
                let mut s = format!("{}: cocenter {group}, order {}\n", out.system, out.order);
                for (i, c) in out.fundamental_classes.iter().enumerate() {
                    writeln!(s, "  omega_{} -> {c}", i + 1).unwrap();
                }
                s
            })
        }
        Command::Bounds { rank, ii, unchecked } => {
            let sig = involution_signature(*rank as u32)?;
            let (profile, b) = if *unchecked {
                let profile = IndexProfile::unchecked(*rank, ii[0], ii[1], ii[2])?;
                let b = degree_one_bounds_unchecked(&profile, &sig)?;
                (profile, b)
            } else {
                let profile = IndexProfile::new(*rank, ii[0], ii[1], ii[2])?;
                let b = degree_one_bounds(&profile, &sig)?;
                (profile, b)
            };
            let out = BoundsOut {
                common_index: common_index(&profile),
                warnings: profile.warnings(),
                profile,
                positions: b.positions,
                intervals: b.intervals,
                caps: b.caps,
            };
            emit(json, &out, || {
                let p = &out.profile;
                let mut s = format!(
                    "D_{} (degree {}), ii = ({},{},{}), common index {}\n",
                    p.rank,
                    2 * p.rank,
                    p.ii_a,
                    p.ii_plus,
                    p.ii_minus,
                    out.common_index
                );
                for ((pos, iv), k) in out.positions.iter().zip(&out.intervals).zip(&out.caps) {
                    writeln!(s, "  {} <= j_{pos} <= {}   (k = {k})", iv.lo, iv.hi).unwrap();
                }
                s
            })
        }
        Command::Poincare { group, j } => {
            let sig = kac_signature(group.label()?)?;
            let coefficients = poincare_polynomial(&sig, j)?;
            let out = PoincareOut { group: sig.group.to_string(), j: j.clone(), coefficients };
            emit(json, &out, || format!("{} {}: {}\n", out.group, out.j, polynomial_text(&out.coefficients)))
        }
        Command::ClassifyQf { dim, ii_s, status, pattern } => {
            let q = QFormProfile {
                dim: *dim,
                ii_s: *ii_s,
                status: status.status(),
                splitting_pattern: pattern.as_ref().map(|p| p.0.clone()),
            };
            let row = classify_qform(&q)?;
            emit(json, &row, || row_text(&row))
        }
        Command::ClassifyInv { degree, ii, status } => {
            let p = InvolutionProfile::new(*degree, ii[0], ii[1], ii[2], status.status());
            let row = classify_involution(&p)?;
            emit(json, &row, || row_text(&row))
        }
        Command::Triple { ii, status, designate } => {
            let (sorted, roles) = order_by_indices(*ii);
            let mut p = InvolutionProfile::new(8, sorted[0], sorted[1], sorted[2], Some(status.status()));
            p.designated = *designate;
            let t = classify_triple(&p)?;
            if sorted != *ii {
                let names: Vec<String> = roles.iter().map(Member::to_string).collect();
                eprintln!("note: indices reordered; input positions are members {}", names.join(","));
            }
            emit(json, &t, || triple_text(&t))
        }
        Command::Atlas(g) => {
            let label = g.label()?;
            let sig = kac_signature(label)?;
            let is_pgo8 = label == GroupLabel::Pgo(4);
            let excluded = excluded_values();
            let entries = admissible_tuples(&sig)?
                .into_iter()
                .map(|j| {
                    let status = match (is_pgo8, excluded.contains(&j)) {
                        (false, _) => "admissible",
                        (true, true) => "excluded",
                        (true, false) => "occurs",
                    };
                    Ok(AtlasEntry { poincare: poincare_polynomial(&sig, &j)?, j, status: status.to_string() })
                })
                .collect::<Result<Vec<_>>>()?;
            let out = AtlasOut { group: sig.group.to_string(), d: sig.d.clone(), k: sig.k.clone(), entries };
            emit(json, &out, || {
                let mut s = format!("{}: d = {}, k = {}\n", out.group, JTuple(out.d.clone()), JTuple(out.k.clone()));
                for e in &out.entries {
                    writeln!(s, "  {:<12} {:<10} {}", e.j.to_string(), e.status, polynomial_text(&e.poincare)).unwrap();
                }
                s
            })
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<String> {
    if json {
        let mut s = serde_json::to_string(value).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(text())
    }
}

fn kac_text(sig: &KacSignature) -> String {
    format!("{}: r = {}, d = {}, k = {}\n", sig.group, sig.r, JTuple(sig.d.clone()), JTuple(sig.k.clone()))
}

fn coords(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn steinberg_text(out: &SteinbergOut) -> String {
    let rows: Vec<[String; 4]> = out
        .entries
        .iter()
        .map(|e| {
            let word = if e.word.is_empty() {
                "e".to_string()
            } else {
                e.word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
            };
            let descents: Vec<String> = e.descents.iter().map(usize::to_string).collect();
            [word, format!("{{{}}}", descents.join(",")), coords(&e.rho.0), e.class.to_string()]
        })
        .collect();
    let header = ["word", "descents", "rho", "class"];
    let widths: Vec<usize> = (0..4)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0).max(header[c].len()))
        .collect();
    let mut s = format!("{}: {} elements\n", out.system, out.entries.len());
    let line = |cells: [&str; 4]| {
        let mut l = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c + 1 < cells.len() {
                write!(l, "{cell:<w$}  ", w = widths[c]).unwrap();
            } else {
                l.push_str(cell);
            }
        }
        l
    };
    writeln!(s, "{}", line(header)).unwrap();
    for r in &rows {
        writeln!(s, "{}", line([&r[0], &r[1], &r[2], &r[3]])).unwrap();
    }
    s
}

fn h_combination(v: &[u64]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| if c == 1 { format!("h{}", i + 1) } else { format!("{c}h{}", i + 1) })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn polynomial_text(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| match (e, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}t"),
            (e, 1) => format!("t^{e}"),
            (e, c) => format!("{c}t^{e}"),
        })
        .collect();
    terms.join(" + ")
}

fn row_text(row: &ClassificationRow) -> String {
    let mut s = format!("J = {}   {}\n", row.j, row.description);
    if let Some(v) = &row.vishik_j {
        let parts: Vec<String> = v.iter().map(u32::to_string).collect();
        writeln!(s, "  J_v = {{{}}}", parts.join(",")).unwrap();
    }
    if let Some(p) = &row.splitting_pattern {
        writeln!(s, "  splitting pattern {}", JTuple(p.clone())).unwrap();
    }
    s
}

fn triple_text(t: &TripleClassification) -> String {
    let mut s = String::new();
    for TripleMember { member, ii, j } in &t.members {
        let mark = if *member == t.designated { " *" } else { "" };
        writeln!(s, "{member}  ii = {ii}  J = {j}{mark}").unwrap();
    }
    s
}
