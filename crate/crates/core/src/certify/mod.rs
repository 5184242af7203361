//! Quotient invariants and the certificate-producing rationality engine.
//!
//! The input is a pair `(G, H)` described up to isogeny by type-level data.
//! [`certify`] applies an ordered table of rationality criteria and returns
//! either `Rational` together with a certificate tree whose every node can
//! be re-validated from the input, or `Unknown` with a tag naming the
//! frontier case the pair falls into.

mod rules;
mod trace;
mod validate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bds::MaxRankSubgroup;
use crate::rootsys::SemisimpleType;
use crate::Error;

pub use rules::{certify, RuleId};
pub use trace::tha_proof_trace;
pub use validate::{validate_certificate, ValidationReport};

/// Base-field characteristic: zero or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// Accepts 0 or a prime.
    pub fn new(p: u64) -> Result<Characteristic, Error> {
        if p == 0 {
            return Ok(Characteristic::Zero);
        }
        let mut d = 2;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::spec(format!("characteristic {p} is not 0 or a prime")));
            }
            d += 1;
        }
        if p < 2 {
            return Err(Error::spec("characteristic 1 is not 0 or a prime"));
        }
        Ok(Characteristic::Prime(p))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Characteristic::Zero)
    }

    pub fn is_not_two(self) -> bool {
        !matches!(self, Characteristic::Prime(2))
    }

    pub fn as_int(self) -> i64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => p as i64,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int())
    }
}

/// The ambient group `G`, up to isogeny: semisimple type, the dimension of
/// its solvable radical, and the base-field characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub semisimple_type: SemisimpleType,
    pub radical_dim: u32,
    pub characteristic: Characteristic,
}

impl GroupSpec {
    pub fn semisimple(t: SemisimpleType, characteristic: Characteristic) -> GroupSpec {
        GroupSpec {
            semisimple_type: t,
            radical_dim: 0,
            characteristic,
        }
    }

    /// Dimension of the maximal semisimple quotient.
    pub fn semisimple_dim(&self) -> i64 {
        self.semisimple_type.dim() as i64
    }
}

/// Three-valued assertion for geometric facts the type data cannot decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    #[default]
    Unknown,
}

impl TriState {
    pub fn parse(s: &str) -> Option<TriState> {
        match s {
            "yes" => Some(TriState::Yes),
            "no" => Some(TriState::No),
            "unknown" => Some(TriState::Unknown),
            _ => None,
        }
    }
}

/// A subgroup described by abstract invariants: Levi type, central torus,
/// unipotent radical dimension, and tri-state geometric flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSubgroup {
    pub levi_type: SemisimpleType,
    pub levi_central_torus: u32,
    pub unipotent_radical_dim: u32,
    pub connected: bool,
    pub in_proper_parabolic: TriState,
    pub action_kernel_zero_dim: TriState,
    /// For semisimple A1 subgroups of G2: does H come from the subregular
    /// unipotent class? (Input assertion; enables the special-subgroup
    /// route through the maximal A2.)
    pub subregular: bool,
}

impl GeneralSubgroup {
    pub fn reductive(levi_type: SemisimpleType, levi_central_torus: u32) -> GeneralSubgroup {
        GeneralSubgroup {
            levi_type,
            levi_central_torus,
            unipotent_radical_dim: 0,
            connected: true,
            in_proper_parabolic: TriState::Unknown,
            action_kernel_zero_dim: TriState::Unknown,
            subregular: false,
        }
    }
}

/// The subgroup `H`, in one of three input shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// H lies in a Borel subgroup; only its dimension (of the image in the
    /// semisimple quotient) is needed. Covers all connected solvable H.
    BorelContained { dim: u32 },
    /// A maximal-rank subgroup with its Borel-de Siebenthal witness chain.
    MaxRank(MaxRankSubgroup),
    /// Anything else, described by abstract invariants.
    General(GeneralSubgroup),
}

impl SubgroupSpec {
    /// Connectedness as the rules consume it: Borel-contained and
    /// maximal-rank subgroups are treated as connected, general subgroups
    /// carry an explicit flag.
    pub fn connected(&self) -> bool {
        match self {
            SubgroupSpec::BorelContained { .. } | SubgroupSpec::MaxRank(_) => true,
            SubgroupSpec::General(g) => g.connected,
        }
    }

    pub fn in_proper_parabolic(&self) -> TriState {
        match self {
            SubgroupSpec::BorelContained { .. } => TriState::Yes,
            SubgroupSpec::MaxRank(m) => {
                if m.chain.first().map(|mv| mv.kind) == Some(crate::bds::MoveKind::LeviRemove) {
                    TriState::Yes
                } else {
                    TriState::Unknown
                }
            }
            SubgroupSpec::General(g) => g.in_proper_parabolic,
        }
    }
}

/// The dimension bookkeeping of a pair `(G, H)`, all exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientInvariants {
    #[serde(rename = "tG")]
    pub t_g: i64,
    #[serde(rename = "tH")]
    pub t_h: i64,
    #[serde(rename = "uG")]
    pub u_g: i64,
    #[serde(rename = "uH")]
    pub u_h: i64,
    /// u(H), the dimension of the unipotent radical of H.
    #[serde(rename = "uH_rad")]
    pub u_h_rad: i64,
    /// dim(G/H) = (tG - tH) + 2 (uG - uH) + u(H).
    #[serde(rename = "dim")]
    pub dim_quotient: i64,
    /// uG - uH: the dimension of the double-coset space by the opposite
    /// Borel on the left and the unipotent part of a Borel of H.
    #[serde(rename = "dim_BGU")]
    pub dim_bgu: i64,
    /// (tG - tH) + (uG - uH): the dimension of the double-coset space by
    /// the opposite unipotent radical and a Borel of H.
    #[serde(rename = "dim_UGB")]
    pub dim_ugb: i64,
}

/// Computes the invariants of the pair, normalized to the semisimple stage
/// (the radical of G is handled by the reduction rule, not here).
pub fn compute_invariants(g: &GroupSpec, h: &SubgroupSpec) -> Result<QuotientInvariants, Error> {
    let t_g = g.semisimple_type.rank() as i64;
    let u_g = g.semisimple_type.num_positive_roots() as i64;

    let (t_h, u_h, u_h_rad) = match h {
        SubgroupSpec::BorelContained { dim } => {
            let d = *dim as i64;
            // the split of dim H into torus and unipotent parts is not part
            // of the input; any consistent split gives the same dim(G/H)
            let t_h = d.min(t_g);
            let u = d - t_h;
            (t_h, u, u)
        }
        SubgroupSpec::MaxRank(m) => {
            let rank = m.rank() as i64;
            if rank != t_g {
                return Err(Error::spec(format!(
                    "maximal rank violated: rank(H) = {rank} != rank(G) = {t_g}"
                )));
            }
            (t_g, m.semisimple_part.num_positive_roots() as i64, 0)
        }
        SubgroupSpec::General(gen) => {
            let t_h = gen.levi_type.rank() as i64 + gen.levi_central_torus as i64;
            let u_h = gen.levi_type.num_positive_roots() as i64 + gen.unipotent_radical_dim as i64;
            (t_h, u_h, gen.unipotent_radical_dim as i64)
        }
    };

    if t_h > t_g {
        return Err(Error::spec(format!(
            "tH <= tG violated: tH = {t_h}, tG = {t_g}"
        )));
    }
    if u_h > u_g {
        return Err(Error::spec(format!(
            "uH <= uG violated: uH = {u_h}, uG = {u_g} (dim H exceeds dim G)"
        )));
    }

    let dim_quotient = (t_g - t_h) + 2 * (u_g - u_h) + u_h_rad;
    Ok(QuotientInvariants {
        t_g,
        t_h,
        u_g,
        u_h,
        u_h_rad,
        dim_quotient,
        dim_bgu: u_g - u_h,
        dim_ugb: (t_g - t_h) + (u_g - u_h),
    })
}

/// Outcome status of a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Rational,
    Unknown,
}

/// One fact checked by a rule, stored with its value at certification time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Premise {
    pub name: String,
    pub value: PremiseValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PremiseValue {
    Bool(bool),
    Int(i64),
    Text(String),
}

impl Premise {
    pub fn int(name: impl Into<String>, v: i64) -> Premise {
        Premise {
            name: name.into(),
            value: PremiseValue::Int(v),
        }
    }
    pub fn flag(name: impl Into<String>, v: bool) -> Premise {
        Premise {
            name: name.into(),
            value: PremiseValue::Bool(v),
        }
    }
    pub fn text(name: impl Into<String>, v: impl Into<String>) -> Premise {
        Premise {
            name: name.into(),
            value: PremiseValue::Text(v.into()),
        }
    }
}

/// One node of a certificate: the rule applied, its literature reference,
/// the premises checked, and child nodes for reduction rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateNode {
    pub rule: String,
    pub paper_ref: String,
    pub premises: Vec<Premise>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CertificateNode>,
}

/// Result of a certification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    #[serde(rename = "v")]
    pub schema_version: u32,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub invariants: QuotientInvariants,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateNode>,
}

/// Frontier tags for the open cases.
pub const FRONTIER_G2_REGULAR_A1: &str = "G2-REGULAR-A1";
pub const FRONTIER_A3_REGULAR_A1: &str = "A3-REGULAR-A1";
pub const FRONTIER_BEYOND_CRITERIA: &str = "BEYOND-CRITERIA";

/// Rule ordering for a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RuleOrder {
    /// Reductions first, then terminal rules by ascending specificity.
    #[default]
    Canonical,
    /// The terminal rules in reverse; statuses must not change.
    ReversedTerminals,
}

/// Options for a certification run.
#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    /// Replace maximal-rank-criterion leaves by their full induction trace.
    pub expand_trace: bool,
    pub rule_order: RuleOrder,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bds::{find_by_type, resolve_chain, MoveKind};
    use crate::rootsys::parse_type;

    fn group(s: &str, chr: u64) -> GroupSpec {
        GroupSpec::semisimple(parse_type(s).unwrap(), Characteristic::new(chr).unwrap())
    }

    fn maxrank(ambient: &str, part: &str, depth: u32) -> SubgroupSpec {
        SubgroupSpec::MaxRank(
            find_by_type(&parse_type(ambient).unwrap(), &parse_type(part).unwrap(), depth)
                .unwrap(),
        )
    }

    fn regular_a1() -> SubgroupSpec {
        SubgroupSpec::General(GeneralSubgroup {
            levi_type: parse_type("A1").unwrap(),
            levi_central_torus: 0,
            unipotent_radical_dim: 0,
            connected: true,
            in_proper_parabolic: TriState::No,
            action_kernel_zero_dim: TriState::Yes,
            subregular: false,
        })
    }

    #[test]
    fn invariants_g2_mod_a2() {
        let inv = compute_invariants(&group("G2", 0), &maxrank("G2", "A2", 1)).unwrap();
        assert_eq!((inv.t_g, inv.t_h), (2, 2));
        assert_eq!((inv.u_g, inv.u_h), (6, 3));
        assert_eq!(inv.u_h_rad, 0);
        assert_eq!(inv.dim_quotient, 6);
    }

    #[test]
    fn invariants_a3_mod_general_a1() {
        let h = SubgroupSpec::General(GeneralSubgroup::reductive(parse_type("A1").unwrap(), 0));
        let inv = compute_invariants(&group("A3", 0), &h).unwrap();
        assert_eq!(inv.dim_quotient, (3 - 1) + 2 * (6 - 1));
        assert_eq!(inv.dim_quotient, 12);
    }

    #[test]
    fn invariants_identity_subgroup() {
        let h = SubgroupSpec::MaxRank(crate::bds::MaxRankSubgroup::full(
            &parse_type("C3").unwrap(),
        ));
        let inv = compute_invariants(&group("C3", 0), &h).unwrap();
        assert_eq!(inv.dim_quotient, 0);
    }

    #[test]
    fn invariants_reject_oversized_subgroups() {
        let h = SubgroupSpec::General(GeneralSubgroup::reductive(parse_type("A2").unwrap(), 0));
        let err = compute_invariants(&group("A1", 0), &h).unwrap_err();
        assert!(err.to_string().contains("tH <= tG"), "{err}");
        let err = compute_invariants(&group("A2", 0), &SubgroupSpec::BorelContained { dim: 20 })
            .unwrap_err();
        assert!(err.to_string().contains("uH <= uG"), "{err}");
    }

    #[test]
    fn certify_c3_maximal_rank_rational() {
        let g = group("C3", 0);
        let h = maxrank("C3", "A1+C2", 1);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Rational);
        assert!(validate_certificate(&g, &h, &v).valid);
        // with the terminal rules reversed the status is unchanged
        let v2 = certify(
            &g,
            &h,
            &CertifyOptions {
                rule_order: RuleOrder::ReversedTerminals,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(v2.status, Status::Rational);
        assert!(validate_certificate(&g, &h, &v2).valid);
    }

    #[test]
    fn certify_positive_characteristic_uses_maxrank_rule() {
        let g = group("C3", 5);
        let h = maxrank("C3", "A1+C2", 1);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Rational);
        assert_eq!(v.certificate.as_ref().unwrap().rule, "R-THA");
        assert!(validate_certificate(&g, &h, &v).valid);
        // characteristic 2 disables the type-C clause
        let g2 = group("C3", 2);
        let v2 = certify(&g2, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v2.status, Status::Unknown);
        assert_eq!(v2.frontier.as_deref(), Some(FRONTIER_BEYOND_CRITERIA));
    }

    #[test]
    fn certify_borel_contained() {
        let g = GroupSpec {
            radical_dim: 7,
            ..group("E8", 7)
        };
        let h = SubgroupSpec::BorelContained { dim: 17 };
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Rational);
        // radical reduction wraps the Borel-containment leaf
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.rule, "R-RAD");
        assert_eq!(cert.children[0].rule, "R-TH0");
        assert!(validate_certificate(&g, &h, &v).valid);
    }

    #[test]
    fn certify_b3_three_a1_rational() {
        let g = group("B3", 0);
        let h = maxrank("B3", "3A1", 1);
        let inv = compute_invariants(&g, &h).unwrap();
        assert_eq!(inv.dim_quotient, 21 - 9);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Rational);
        assert!(validate_certificate(&g, &h, &v).valid);
    }

    #[test]
    fn certify_g2_regular_a1_frontier() {
        let g = group("G2", 0);
        let h = regular_a1();
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert_eq!(v.frontier.as_deref(), Some(FRONTIER_G2_REGULAR_A1));
        assert_eq!(v.invariants.dim_quotient, 11);
    }

    #[test]
    fn certify_a3_regular_a1_frontier_with_note() {
        let g = group("A3", 0);
        let h = regular_a1();
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert_eq!(v.frontier.as_deref(), Some(FRONTIER_A3_REGULAR_A1));
        assert!(v.note.is_some());
        assert_eq!(v.invariants.dim_quotient, 12);
    }

    #[test]
    fn certify_g2_subregular_a1_rational() {
        let g = group("G2", 0);
        let mut h = regular_a1();
        if let SubgroupSpec::General(gen) = &mut h {
            gen.subregular = true;
        }
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(v.status, Status::Rational);
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.rule, "R-DIM14");
        assert!(validate_certificate(&g, &h, &v).valid);
    }

    #[test]
    fn certify_rejects_borel_tits_contradiction() {
        let g = group("A3", 0);
        let h = SubgroupSpec::General(GeneralSubgroup {
            unipotent_radical_dim: 2,
            in_proper_parabolic: TriState::No,
            ..GeneralSubgroup::reductive(parse_type("A1").unwrap(), 0)
        });
        let err = certify(&g, &h, &CertifyOptions::default()).unwrap_err();
        assert!(err.to_string().contains("contradictory"), "{err}");
    }

    #[test]
    fn certify_rejects_chain_type_mismatch() {
        let g = group("C3", 0);
        let mut sub = match maxrank("C3", "A1+C2", 1) {
            SubgroupSpec::MaxRank(m) => m,
            _ => unreachable!(),
        };
        sub.semisimple_part = parse_type("A2").unwrap();
        sub.central_torus = 1;
        let err = certify(&g, &SubgroupSpec::MaxRank(sub), &CertifyOptions::default()).unwrap_err();
        assert!(err.to_string().contains("chain replay"), "{err}");
    }

    #[test]
    fn validate_detects_tampering() {
        let g = group("G2", 0);
        let h = maxrank("G2", "A2", 1);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert!(validate_certificate(&g, &h, &v).valid);

        let mut tampered = v.clone();
        if let Some(node) = &mut tampered.certificate {
            for p in &mut node.premises {
                if let PremiseValue::Int(x) = &mut p.value {
                    *x *= 10;
                }
            }
        }
        let report = validate_certificate(&g, &h, &tampered);
        assert!(!report.valid);
        assert!(report.failure.unwrap().contains("certificate"));

        let mut wrong_invariants = v.clone();
        wrong_invariants.invariants.dim_quotient = 60;
        assert!(!validate_certificate(&g, &h, &wrong_invariants).valid);
    }

    #[test]
    fn validate_rejects_maxrank_rule_on_e6() {
        let g = group("E6+A1", 0);
        let h = SubgroupSpec::MaxRank(crate::bds::MaxRankSubgroup::full(
            &parse_type("E6+A1").unwrap(),
        ));
        // hand-built node claiming the maximal-rank criterion
        let v = Verdict {
            schema_version: 1,
            status: Status::Rational,
            frontier: None,
            note: None,
            invariants: compute_invariants(&g, &h).unwrap(),
            certificate: Some(CertificateNode {
                rule: "R-THA".to_string(),
                paper_ref: RuleId::from_name("R-THA").unwrap().reference().to_string(),
                premises: vec![Premise::int("characteristic", 0)],
                annotations: Vec::new(),
                children: Vec::new(),
            }),
        };
        let report = validate_certificate(&g, &h, &v);
        assert!(!report.valid);
        assert!(report.failure.unwrap().contains("does not apply"));
    }

    #[test]
    fn trace_one_step_type_c_chain() {
        let g = group("C2", 0);
        let m = match maxrank("C2", "2A1", 1) {
            SubgroupSpec::MaxRank(m) => m,
            _ => unreachable!(),
        };
        let node = tha_proof_trace(&g, &m).unwrap();
        assert_eq!(node.rule, "R-SPECIAL");
        assert_eq!(node.children.len(), 1);
        assert_eq!(node.children[0].rule, "R-THA");
        assert!(node.children[0].children.is_empty());
        // the trace is itself a valid certificate
        let v = certify(
            &g,
            &SubgroupSpec::MaxRank(m.clone()),
            &CertifyOptions {
                expand_trace: false,
                ..Default::default()
            },
        )
        .unwrap();
        let expanded = Verdict {
            certificate: Some(node),
            ..v
        };
        assert!(validate_certificate(&g, &SubgroupSpec::MaxRank(m), &expanded).valid);
    }

    #[test]
    fn trace_levi_chain_over_a2() {
        let g = group("A2", 0);
        let m = resolve_chain(&parse_type("A2").unwrap(), &[(MoveKind::LeviRemove, 1)]).unwrap();
        let node = tha_proof_trace(&g, &m).unwrap();
        assert_eq!(node.rule, "R-PARAB");
        let rad = &node.children[0];
        assert_eq!(rad.rule, "R-RAD");
        assert_eq!(rad.children[0].rule, "R-THA");
    }

    #[test]
    fn trace_g2_semisimple_move_rank_bound_leaf() {
        let g = group("G2", 0);
        let m = match maxrank("G2", "A2", 1) {
            SubgroupSpec::MaxRank(m) => m,
            _ => unreachable!(),
        };
        let node = tha_proof_trace(&g, &m).unwrap();
        assert_eq!(node.rule, "R-B23C3G2");
        assert!(node.children.is_empty());
    }

    #[test]
    fn trace_g2_mixed_chain_uses_special_route() {
        let g = group("G2", 0);
        let m = resolve_chain(
            &parse_type("G2").unwrap(),
            &[(MoveKind::SemisimpleRemove, 2), (MoveKind::LeviRemove, 1)],
        )
        .unwrap();
        assert_eq!(m.semisimple_part, parse_type("A1").unwrap());
        assert_eq!(m.central_torus, 1);
        let node = tha_proof_trace(&g, &m).unwrap();
        assert_eq!(node.rule, "R-SPECIAL");
        assert_eq!(node.children[0].rule, "R-PARAB");
        let h = SubgroupSpec::MaxRank(m);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        let expanded = Verdict {
            certificate: Some(node),
            ..v
        };
        assert!(validate_certificate(&g, &h, &expanded).valid);
    }

    #[test]
    fn trace_b3_mixed_chain_uses_borel_tits_step() {
        let g = group("B3", 0);
        let m = resolve_chain(
            &parse_type("B3").unwrap(),
            &[(MoveKind::SemisimpleRemove, 2), (MoveKind::LeviRemove, 1)],
        )
        .unwrap();
        assert_eq!(m.semisimple_part, parse_type("2A1").unwrap());
        assert_eq!(m.central_torus, 1);
        let node = tha_proof_trace(&g, &m).unwrap();
        assert_eq!(node.rule, "R-PARAB");
        assert!(node
            .premises
            .iter()
            .any(|p| p.name == "containment"));
        let h = SubgroupSpec::MaxRank(m);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        let expanded = Verdict {
            certificate: Some(node),
            ..v
        };
        assert!(validate_certificate(&g, &h, &expanded).valid);
    }

    #[test]
    fn trace_rejects_uncovered_types() {
        let g = group("E6", 0);
        let m = crate::bds::MaxRankSubgroup::full(&parse_type("E6").unwrap());
        let err = tha_proof_trace(&g, &m).unwrap_err();
        assert!(err.to_string().contains("E6"), "{err}");
    }

    #[test]
    fn expand_trace_option_replaces_maxrank_leaves() {
        let g = group("C3", 5);
        let h = maxrank("C3", "A1+C2", 1);
        let v = certify(
            &g,
            &h,
            &CertifyOptions {
                expand_trace: true,
                ..Default::default()
            },
        )
        .unwrap();
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.rule, "R-SPECIAL");
        assert!(validate_certificate(&g, &h, &v).valid);
    }

    #[test]
    fn expand_trace_surfaces_the_induction_in_characteristic_zero() {
        let g = group("G2", 0);
        let h = maxrank("G2", "A2", 1);
        let v = certify(
            &g,
            &h,
            &CertifyOptions {
                expand_trace: true,
                ..Default::default()
            },
        )
        .unwrap();
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.rule, "R-B23C3G2");
        assert!(validate_certificate(&g, &h, &v).valid);
        // without the flag a gap criterion closes the pair first
        let plain = certify(&g, &h, &CertifyOptions::default()).unwrap();
        assert_eq!(plain.certificate.as_ref().unwrap().rule, "R-UGH3");
    }

    #[test]
    fn strengthening_flags_never_loses_rationality() {
        // dim G = 14, semisimple A1 in A2+2A1: rational; all flag
        // strengthenings keep it so
        let g = group("A2+2A1", 0);
        for parab in [TriState::Unknown, TriState::Yes, TriState::No] {
            for kernel in [TriState::Unknown, TriState::Yes, TriState::No] {
                let h = SubgroupSpec::General(GeneralSubgroup {
                    in_proper_parabolic: parab,
                    action_kernel_zero_dim: kernel,
                    ..GeneralSubgroup::reductive(parse_type("A1").unwrap(), 0)
                });
                let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
                assert_eq!(v.status, Status::Rational, "{parab:?} {kernel:?}");
            }
        }
    }

    #[test]
    fn verdict_json_round_trip() {
        let g = group("G2", 0);
        let h = maxrank("G2", "A2", 1);
        let v = certify(&g, &h, &CertifyOptions::default()).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"v\":1"));
        assert!(json.contains("\"tG\":2"));
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(validate_certificate(&g, &h, &back).valid);
    }
}
