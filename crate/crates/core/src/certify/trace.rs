//! Expansion of the maximal-rank criterion into its induction on the
//! common rank: parabolic steps for Levi moves, special-subgroup steps for
//! semisimple moves, and rank-bound leaves for the semisimple subgroups of
//! B3 and G2.

use crate::bds::{levi_reachable, MaxRankSubgroup, MoveKind};
use crate::rootsys::Family;
use crate::Error;

use super::rules::{evaluate_rule, RuleEval, RuleId};
use super::{CertificateNode, GroupSpec, Premise, SubgroupSpec};

fn node_from_eval(rule: RuleId, eval: RuleEval, children: Vec<CertificateNode>) -> CertificateNode {
    let (premises, mut annotations) = match eval {
        RuleEval::Terminal {
            premises,
            annotations,
        } => (premises, annotations),
        RuleEval::Split {
            premises,
            annotations,
            ..
        } => (premises, annotations),
    };
    if children.is_empty() && rule == RuleId::ThA {
        annotations.push("H = G at this step".to_string());
    }
    CertificateNode {
        rule: rule.as_str().to_string(),
        paper_ref: rule.reference().to_string(),
        premises,
        annotations,
        children,
    }
}

fn leaf(rule: RuleId, g: &GroupSpec, h: &SubgroupSpec) -> Result<CertificateNode, Error> {
    match evaluate_rule(rule, g, h)? {
        Some(eval @ RuleEval::Terminal { .. }) => Ok(node_from_eval(rule, eval, Vec::new())),
        _ => Err(Error::spec(format!(
            "trace expansion failed: {} does not apply here",
            rule.as_str()
        ))),
    }
}

/// The Borel-Tits dichotomy step used when a semisimple move is followed by
/// Levi moves: H is reductive with a positive-dimensional central torus, so
/// it lies in the Levi of a proper parabolic, and the Levi (realizable by
/// Levi moves alone) can be taken to be H itself.
pub(super) fn parab_borel_tits_eval(
    g: &GroupSpec,
    h: &SubgroupSpec,
) -> Result<Option<RuleEval>, Error> {
    let m = match h {
        SubgroupSpec::MaxRank(m) if g.radical_dim == 0 => m,
        _ => return Ok(None),
    };
    if g.semisimple_type.components().len() != 1 || m.central_torus == 0 {
        return Ok(None);
    }
    let ambient = g.semisimple_type.components()[0];
    if !levi_reachable(ambient, &m.semisimple_part, m.central_torus) {
        return Ok(None);
    }
    let child_g = GroupSpec {
        semisimple_type: m.semisimple_part.clone(),
        radical_dim: m.central_torus,
        characteristic: g.characteristic,
    };
    let child_h = SubgroupSpec::MaxRank(MaxRankSubgroup::new(
        m.semisimple_part.clone(),
        0,
        Vec::new(),
    ));
    Ok(Some(RuleEval::Split {
        premises: vec![
            Premise::text("containment", "borel-tits-dichotomy"),
            Premise::int("central_torus", m.central_torus as i64),
            Premise::text("levi_type", m.semisimple_part.to_string()),
            Premise::flag("levi_realizable", true),
        ],
        annotations: vec![
            "H is reductive with a positive-dimensional central torus, hence contained in the \
             Levi L of a proper parabolic P; here H = L and P/H is the unipotent cell of P"
                .to_string(),
        ],
        children: vec![(child_g, child_h)],
    }))
}

type SplitParts = (Vec<Premise>, Vec<String>, Vec<(GroupSpec, SubgroupSpec)>);

fn split_node(rule: RuleId, eval: RuleEval) -> Result<SplitParts, Error> {
    match eval {
        RuleEval::Split {
            premises,
            annotations,
            children,
        } => Ok((premises, annotations, children)),
        RuleEval::Terminal { .. } => Err(Error::spec(format!(
            "trace expansion: {} unexpectedly terminal",
            rule.as_str()
        ))),
    }
}

fn trace_rec(g: &GroupSpec, m: &MaxRankSubgroup) -> Result<CertificateNode, Error> {
    let h = SubgroupSpec::MaxRank(m.clone());

    if g.radical_dim > 0 {
        let eval = evaluate_rule(RuleId::Rad, g, &h)?
            .ok_or_else(|| Error::spec("trace expansion: radical reduction failed"))?;
        let (premises, annotations, children) = split_node(RuleId::Rad, eval)?;
        let (cg, _) = &children[0];
        let child = trace_rec(cg, m)?;
        return Ok(CertificateNode {
            rule: RuleId::Rad.as_str().to_string(),
            paper_ref: RuleId::Rad.reference().to_string(),
            premises,
            annotations,
            children: vec![child],
        });
    }

    // H = G bottoms the induction
    if m.chain.is_empty() {
        if g.semisimple_type.is_trivial() {
            return leaf(RuleId::Th0, g, &h);
        }
        return leaf(RuleId::ThA, g, &h);
    }

    if g.semisimple_type.components().len() >= 2 {
        let eval = evaluate_rule(RuleId::Factor, g, &h)?
            .ok_or_else(|| Error::spec("trace expansion: factor split failed"))?;
        let (premises, annotations, children) = split_node(RuleId::Factor, eval)?;
        let mut child_nodes = Vec::new();
        for (cg, ch) in &children {
            let cm = match ch {
                SubgroupSpec::MaxRank(cm) => cm,
                _ => unreachable!("factor children are maximal-rank"),
            };
            child_nodes.push(trace_rec(cg, cm)?);
        }
        return Ok(CertificateNode {
            rule: RuleId::Factor.as_str().to_string(),
            paper_ref: RuleId::Factor.reference().to_string(),
            premises,
            annotations,
            children: child_nodes,
        });
    }

    let ambient = g.semisimple_type.components()[0];
    let first = &m.chain[0];

    match first.kind {
        MoveKind::LeviRemove => {
            let eval = evaluate_rule(RuleId::Parab, g, &h)?
                .ok_or_else(|| Error::spec("trace expansion: parabolic split failed"))?;
            let (premises, annotations, children) = split_node(RuleId::Parab, eval)?;
            let (cg, ch) = &children[0];
            let cm = match ch {
                SubgroupSpec::MaxRank(cm) => cm.clone(),
                _ => unreachable!(),
            };
            let child = trace_rec(cg, &cm)?;
            Ok(CertificateNode {
                rule: RuleId::Parab.as_str().to_string(),
                paper_ref: RuleId::Parab.reference().to_string(),
                premises,
                annotations,
                children: vec![child],
            })
        }
        MoveKind::SemisimpleRemove => {
            // a fully semisimple H in B3 or G2 is closed by the rank bound
            let b3_or_g2 = matches!(
                (ambient.family(), ambient.rank()),
                (Family::B, 3) | (Family::G, 2)
            );
            if b3_or_g2 && m.central_torus == 0 {
                return leaf(RuleId::B23C3G2, g, &h);
            }
            if let Some(eval) = evaluate_rule(RuleId::Special, g, &h)? {
                let (premises, annotations, children) = split_node(RuleId::Special, eval)?;
                let (cg, ch) = &children[0];
                let cm = match ch {
                    SubgroupSpec::MaxRank(cm) => cm.clone(),
                    _ => unreachable!(),
                };
                let child = trace_rec(cg, &cm)?;
                return Ok(CertificateNode {
                    rule: RuleId::Special.as_str().to_string(),
                    paper_ref: RuleId::Special.reference().to_string(),
                    premises,
                    annotations,
                    children: vec![child],
                });
            }
            if let Some(eval) = parab_borel_tits_eval(g, &h)? {
                let (premises, annotations, children) = split_node(RuleId::Parab, eval)?;
                let (cg, ch) = &children[0];
                let cm = match ch {
                    SubgroupSpec::MaxRank(cm) => cm.clone(),
                    _ => unreachable!(),
                };
                let child = trace_rec(cg, &cm)?;
                return Ok(CertificateNode {
                    rule: RuleId::Parab.as_str().to_string(),
                    paper_ref: RuleId::Parab.reference().to_string(),
                    premises,
                    annotations,
                    children: vec![child],
                });
            }
            Err(Error::spec(format!(
                "trace expansion: no sound step for a semisimple move on {ambient} followed by \
                 Levi moves"
            )))
        }
    }
}

/// Expands the maximal-rank criterion for `(g, h)` into the induction on
/// the common rank, one node per chain step, bottoming out at H = G, torus,
/// or rank-bound leaves.
///
/// Requires every factor of `g` to satisfy the criterion's type conditions
/// at the given characteristic; the offending factor is named otherwise.
pub fn tha_proof_trace(g: &GroupSpec, h: &MaxRankSubgroup) -> Result<CertificateNode, Error> {
    for c in g.semisimple_type.components() {
        if super::rules::tha_clause_of(*c, g.characteristic).is_none() {
            return Err(Error::spec(format!(
                "factor {c} is not covered by the maximal-rank criterion at characteristic {}",
                g.characteristic
            )));
        }
    }
    if h.rank() != g.semisimple_type.rank() {
        return Err(Error::spec(format!(
            "maximal rank violated: rank(H) = {} != rank(G) = {}",
            h.rank(),
            g.semisimple_type.rank()
        )));
    }
    crate::bds::replay_chain(&g.semisimple_type, &h.chain)?;
    trace_rec(g, h)
}
