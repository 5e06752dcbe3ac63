//! JSON file formats. Field names are fixed; unknown fields are rejected.

use std::collections::BTreeMap;

use normcov_core::bounds::{Bound, BoundsReport};
use normcov_core::covering::{
    ClassDescriptor, CoveringCertificate, IndependenceReport, KappaWitness, Member, Method,
    WitnessName,
};
use normcov_core::matgroup::{CharShape, GroupKind};
use normcov_core::verify::VerifyReport;
use serde::{Deserialize, Serialize};

use crate::Error;

pub const GAMMA_EXPONENT: &str = "alpha+q-1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupName {
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "GL")]
    Gl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntermediateDto {
    pub intermediate_index: u64,
}

/// `"SL"`, `"GL"` or `{"intermediate_index": m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDto {
    Named(GroupName),
    Intermediate(IntermediateDto),
}

impl From<GroupKind> for GroupDto {
    fn from(k: GroupKind) -> Self {
        match k {
            GroupKind::Sl => GroupDto::Named(GroupName::Sl),
            GroupKind::Gl => GroupDto::Named(GroupName::Gl),
            GroupKind::Intermediate(m) => GroupDto::Intermediate(IntermediateDto {
                intermediate_index: m,
            }),
        }
    }
}

impl From<GroupDto> for GroupKind {
    fn from(g: GroupDto) -> Self {
        match g {
            GroupDto::Named(GroupName::Sl) => GroupKind::Sl,
            GroupDto::Named(GroupName::Gl) => GroupKind::Gl,
            GroupDto::Intermediate(i) => GroupKind::Intermediate(i.intermediate_index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MethodDto {
    #[serde(rename = "C_p")]
    Cp,
    #[serde(rename = "C_p1p2")]
    Cp1p2,
    D,
    #[serde(rename = "custom")]
    Custom,
}

impl From<Method> for MethodDto {
    fn from(m: Method) -> Self {
        match m {
            Method::Cp => MethodDto::Cp,
            Method::Cp1p2 => MethodDto::Cp1p2,
            Method::D => MethodDto::D,
            Method::Custom => MethodDto::Custom,
        }
    }
}

impl From<MethodDto> for Method {
    fn from(m: MethodDto) -> Self {
        match m {
            MethodDto::Cp => Method::Cp,
            MethodDto::Cp1p2 => Method::Cp1p2,
            MethodDto::D => Method::D,
            MethodDto::Custom => Method::Custom,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ClassDto {
    Efs { degree: u32 },
    Sss { dim: u32 },
}

impl From<ClassDescriptor> for ClassDto {
    fn from(c: ClassDescriptor) -> Self {
        match c {
            ClassDescriptor::Efs(d) => ClassDto::Efs { degree: d },
            ClassDescriptor::Sss(k) => ClassDto::Sss { dim: k },
        }
    }
}

impl From<ClassDto> for ClassDescriptor {
    fn from(c: ClassDto) -> Self {
        match c {
            ClassDto::Efs { degree } => ClassDescriptor::Efs(degree),
            ClassDto::Sss { dim } => ClassDescriptor::Sss(dim),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDto {
    pub n: u64,
    pub group: GroupDto,
    pub method: MethodDto,
    pub classes: Vec<ClassDto>,
    pub claimed_size: usize,
}

impl From<&CoveringCertificate> for CertificateDto {
    fn from(c: &CoveringCertificate) -> Self {
        Self {
            n: c.n(),
            group: c.kind().into(),
            method: c.method().into(),
            classes: c.classes().iter().map(|&x| x.into()).collect(),
            claimed_size: c.claimed_size(),
        }
    }
}

impl CertificateDto {
    /// Rebuilds the certificate, re-checking its invariants.
    pub fn to_certificate(&self) -> Result<CoveringCertificate, Error> {
        Ok(CoveringCertificate::new(
            self.n,
            self.group.into(),
            self.method.into(),
            self.classes.iter().map(|&c| c.into()).collect(),
            self.claimed_size,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MemberDto {
    Sigma { k: u64 },
    T { j: u64 },
    Y { p: u64 },
    GLambda { parts: [u64; 3] },
    Gamma { exponent_symbol: String },
}

impl From<Member> for MemberDto {
    fn from(m: Member) -> Self {
        match m {
            Member::Gamma => MemberDto::Gamma {
                exponent_symbol: GAMMA_EXPONENT.to_string(),
            },
            Member::Sigma(k) => MemberDto::Sigma { k },
            Member::T(j) => MemberDto::T { j },
            Member::Y(p) => MemberDto::Y { p },
            Member::GLambda(a, b, c) => MemberDto::GLambda { parts: [a, b, c] },
        }
    }
}

impl TryFrom<&MemberDto> for Member {
    type Error = Error;

    fn try_from(m: &MemberDto) -> Result<Self, Error> {
        Ok(match m {
            MemberDto::Sigma { k } => Member::Sigma(*k),
            MemberDto::T { j } => Member::T(*j),
            MemberDto::Y { p } => Member::Y(*p),
            MemberDto::GLambda { parts: [a, b, c] } => Member::GLambda(*a, *b, *c),
            MemberDto::Gamma { exponent_symbol } if exponent_symbol == GAMMA_EXPONENT => Member::Gamma,
            MemberDto::Gamma { exponent_symbol } => {
                return Err(Error::Format(format!(
                    "unsupported exponent symbol {exponent_symbol:?}, expected {GAMMA_EXPONENT:?}"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessNameDto {
    Phi,
    PhiPlus,
    Psi,
    Omega,
}

impl From<WitnessName> for WitnessNameDto {
    fn from(w: WitnessName) -> Self {
        match w {
            WitnessName::Phi => WitnessNameDto::Phi,
            WitnessName::PhiPlus => WitnessNameDto::PhiPlus,
            WitnessName::Psi => WitnessNameDto::Psi,
            WitnessName::Omega => WitnessNameDto::Omega,
        }
    }
}

impl From<WitnessNameDto> for WitnessName {
    fn from(w: WitnessNameDto) -> Self {
        match w {
            WitnessNameDto::Phi => WitnessName::Phi,
            WitnessNameDto::PhiPlus => WitnessName::PhiPlus,
            WitnessNameDto::Psi => WitnessName::Psi,
            WitnessNameDto::Omega => WitnessName::Omega,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructuralCheckDto {
    pub passed: bool,
    pub pairs_checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending: Option<OffendingDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OffendingDto {
    pub x: MemberDto,
    pub y: MemberDto,
    pub reason: String,
}

impl From<&IndependenceReport> for StructuralCheckDto {
    fn from(r: &IndependenceReport) -> Self {
        Self {
            passed: r.passed(),
            pairs_checked: r.pairs_checked,
            offending: r.offending.map(|(x, y, c)| OffendingDto {
                x: x.into(),
                y: y.into(),
                reason: c.to_string(),
            }),
        }
    }
}

/// A member realised over `GF(q)`: rows of field elements in integer encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDto {
    pub q: u64,
    pub rows: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDto {
    pub n: u64,
    pub group: GroupDto,
    pub name: WitnessNameDto,
    pub members: Vec<MemberDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structural_check: Option<StructuralCheckDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<MatrixDto>>,
}

impl From<&KappaWitness> for WitnessDto {
    fn from(w: &KappaWitness) -> Self {
        Self {
            n: w.n(),
            group: w.kind().into(),
            name: w.name().into(),
            members: w.members().iter().map(|&m| m.into()).collect(),
            structural_check: None,
            matrices: None,
        }
    }
}

impl WitnessDto {
    pub fn to_witness(&self) -> Result<KappaWitness, Error> {
        let members = self
            .members
            .iter()
            .map(Member::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(KappaWitness::new(self.n, self.group.into(), self.name.into(), members)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundDto {
    pub value: u64,
    pub provenance: String,
}

impl From<&Bound> for BoundDto {
    fn from(b: &Bound) -> Self {
        Self {
            value: b.value,
            provenance: b.provenance.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDto {
    pub n: u64,
    pub exact: Option<u64>,
    pub provenance: Option<String>,
    pub kappa_lower: Vec<BoundDto>,
    pub gamma_lower: Vec<BoundDto>,
    pub gamma_upper: Vec<BoundDto>,
    pub interval: [u64; 2],
}

impl From<&BoundsReport> for ReportDto {
    fn from(r: &BoundsReport) -> Self {
        let list = |v: &[Bound]| v.iter().map(BoundDto::from).collect();
        Self {
            n: r.n,
            exact: r.exact.map(|b| b.value),
            provenance: r.exact.map(|b| b.provenance.to_string()),
            kappa_lower: list(&r.kappa_lower),
            gamma_lower: list(&r.gamma_lower),
            gamma_upper: list(&r.gamma_upper),
            interval: [r.lo(), r.hi()],
        }
    }
}

/// A shape as a sorted list of `[degree, multiplicity]` pairs.
pub fn shape_pairs(s: &CharShape) -> Vec<[u32; 2]> {
    s.entries().iter().map(|&(d, m)| [d, m]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementCheckDto {
    pub elements: u64,
    pub uncovered_elements: u64,
    pub agrees_with_shapes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeDto {
    pub class: String,
    /// A shape left uncovered without this class, if any.
    pub witness: Option<Vec<[u32; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyReportDto {
    pub n: u64,
    pub q: u64,
    pub total_shapes: usize,
    pub covered: usize,
    pub uncovered: Vec<Vec<[u32; 2]>>,
    pub hits: BTreeMap<String, usize>,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<ElementCheckDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimality: Option<Vec<ProbeDto>>,
}

impl VerifyReportDto {
    pub fn new(r: &VerifyReport, elapsed_ms: f64) -> Self {
        Self {
            n: r.n,
            q: r.q,
            total_shapes: r.total_shapes,
            covered: r.covered,
            uncovered: r.uncovered.iter().map(shape_pairs).collect(),
            hits: r.hits.iter().map(|(c, k)| (c.to_string(), *k)).collect(),
            elapsed_ms,
            elements: None,
            minimality: None,
        }
    }
}
