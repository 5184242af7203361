//! Independent re-validation of certificates: every node's premises are
//! recomputed from the input pair restricted along the reduction path and
//! compared against the stored values.

use super::rules::{evaluate_rule, RuleEval, RuleId};
use super::trace::parab_borel_tits_eval;
use super::{compute_invariants, CertificateNode, GroupSpec, Status, SubgroupSpec, Verdict};

/// Outcome of a validation pass. `failure` points at the first node that
/// did not re-validate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub failure: Option<String>,
}

impl ValidationReport {
    fn ok() -> ValidationReport {
        ValidationReport {
            valid: true,
            failure: None,
        }
    }

    fn fail(msg: String) -> ValidationReport {
        ValidationReport {
            valid: false,
            failure: Some(msg),
        }
    }
}

fn check_node(
    node: &CertificateNode,
    g: &GroupSpec,
    h: &SubgroupSpec,
    path: &str,
) -> Result<(), String> {
    let rule = RuleId::from_name(&node.rule)
        .ok_or_else(|| format!("{path}: unknown rule {:?}", node.rule))?;
    if node.paper_ref != rule.reference() {
        return Err(format!("{path}: reference text does not match rule {}", node.rule));
    }

    // the Borel-Tits variant of the parabolic step is recognizable by its
    // containment premise
    let borel_tits =
        rule == RuleId::Parab && node.premises.iter().any(|p| p.name == "containment");
    let eval = if borel_tits {
        parab_borel_tits_eval(g, h)
    } else {
        evaluate_rule(rule, g, h)
    }
    .map_err(|e| format!("{path}: {e}"))?;

    let Some(eval) = eval else {
        return Err(format!("{path}: rule {} does not apply to this pair", node.rule));
    };
    let (premises, children) = match eval {
        RuleEval::Terminal { premises, .. } => (premises, Vec::new()),
        RuleEval::Split {
            premises, children, ..
        } => (premises, children),
    };

    if node.premises != premises {
        let stored: Vec<&str> = node.premises.iter().map(|p| p.name.as_str()).collect();
        return Err(format!(
            "{path}: premises do not re-validate (stored {stored:?})"
        ));
    }
    if node.children.len() != children.len() {
        return Err(format!(
            "{path}: expected {} children, certificate has {}",
            children.len(),
            node.children.len()
        ));
    }
    for (i, ((cg, ch), child)) in children.iter().zip(node.children.iter()).enumerate() {
        check_node(child, cg, ch, &format!("{path}.children[{i}]"))?;
    }
    Ok(())
}

/// Re-checks every node of a `Rational` verdict against the pair it claims
/// to certify. Returns false (with the path of the first failing node) on
/// any mismatch.
pub fn validate_certificate(g: &GroupSpec, h: &SubgroupSpec, v: &Verdict) -> ValidationReport {
    if v.status != Status::Rational {
        return ValidationReport::fail("verdict status is not rational".to_string());
    }
    match compute_invariants(g, h) {
        Ok(inv) => {
            if inv != v.invariants {
                return ValidationReport::fail(
                    "invariants block does not match the recomputed invariants".to_string(),
                );
            }
        }
        Err(e) => return ValidationReport::fail(format!("invariants: {e}")),
    }
    let Some(node) = &v.certificate else {
        return ValidationReport::fail("rational verdict carries no certificate".to_string());
    };
    match check_node(node, g, h, "certificate") {
        Ok(()) => ValidationReport::ok(),
        Err(msg) => ValidationReport::fail(msg),
    }
}
