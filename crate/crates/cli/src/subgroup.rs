//! Parser for subgroup spec strings:
//!
//! ```text
//! subgroup := "borel:dim=" INT
//!           | "maxrank:" typespec [";chain=" move ("," move)*]
//!           | "general:" kv ("," kv)*
//! move     := ("ss" | "levi") ":" NODE
//! kv       := "levi="typespec | "torus="INT | "unip="INT | "connected="YN
//!           | "parabolic="YNU | "kernel0="YNU | "subregular="YN
//! ```
//!
//! A `maxrank:` spec without a chain is resolved by searching the move
//! closure; the search fails loudly when the type is reachable by chains of
//! different shapes.

use homvar::{
    bds::{find_by_type, resolve_chain, MoveKind},
    parse_type, GeneralSubgroup, SemisimpleType, SubgroupSpec, TriState,
};

fn err(offset: usize, token: &str, message: &str) -> String {
    format!("parse error at byte {offset} near {token:?}: {message}")
}

fn parse_int(s: &str, offset: usize, what: &str) -> Result<u32, String> {
    s.trim()
        .parse()
        .map_err(|_| err(offset, s, &format!("expected an integer {what}")))
}

fn parse_yn(s: &str, offset: usize) -> Result<bool, String> {
    match s {
        "yes" => Ok(true),
        "no" => Ok(false),
        _ => Err(err(offset, s, "expected \"yes\" or \"no\"")),
    }
}

fn parse_ynu(s: &str, offset: usize) -> Result<TriState, String> {
    TriState::parse(s).ok_or_else(|| err(offset, s, "expected \"yes\", \"no\" or \"unknown\""))
}

pub fn parse_subgroup(
    text: &str,
    ambient: &SemisimpleType,
    depth: u32,
) -> Result<SubgroupSpec, String> {
    if let Some(rest) = text.strip_prefix("borel:") {
        let offset = "borel:".len();
        let Some(value) = rest.strip_prefix("dim=") else {
            return Err(err(offset, rest, "expected \"dim=\" after \"borel:\""));
        };
        let dim = parse_int(value, offset + "dim=".len(), "dimension")?;
        return Ok(SubgroupSpec::BorelContained { dim });
    }

    if let Some(rest) = text.strip_prefix("maxrank:") {
        let base = "maxrank:".len();
        let (type_str, chain_str) = match rest.split_once(';') {
            Some((t, c)) => (t, Some(c)),
            None => (rest, None),
        };
        let part = parse_type(type_str).map_err(|e| e.to_string())?;
        let sub = match chain_str {
            None => find_by_type(ambient, &part, depth).map_err(|e| e.to_string())?,
            Some(chain_str) => {
                let chain_base = base + type_str.len() + 1;
                let Some(moves_str) = chain_str.strip_prefix("chain=") else {
                    return Err(err(chain_base, chain_str, "expected \"chain=\" after ';'"));
                };
                let mut moves = Vec::new();
                let mut cursor = chain_base + "chain=".len();
                for mv in moves_str.split(',') {
                    let (kind_str, node_str) = mv.split_once(':').ok_or_else(|| {
                        err(cursor, mv, "expected a move of the form \"ss:NODE\" or \"levi:NODE\"")
                    })?;
                    let kind = match kind_str {
                        "ss" => MoveKind::SemisimpleRemove,
                        "levi" => MoveKind::LeviRemove,
                        _ => return Err(err(cursor, kind_str, "expected \"ss\" or \"levi\"")),
                    };
                    let node =
                        parse_int(node_str, cursor + kind_str.len() + 1, "node index")? as usize;
                    moves.push((kind, node));
                    cursor += mv.len() + 1;
                }
                let sub = resolve_chain(ambient, &moves).map_err(|e| e.to_string())?;
                if sub.semisimple_part != part {
                    return Err(format!(
                        "chain reaches {} but the spec names {}",
                        sub.semisimple_part, part
                    ));
                }
                sub
            }
        };
        return Ok(SubgroupSpec::MaxRank(sub));
    }

    if let Some(rest) = text.strip_prefix("general:") {
        if rest.is_empty() {
            return Err(err("general:".len(), "", "expected at least one key=value"));
        }
        let mut gen = GeneralSubgroup::reductive(SemisimpleType::trivial(), 0);
        let mut cursor = "general:".len();
        for kv in rest.split(',') {
            let (key, value) = kv
                .split_once('=')
                .ok_or_else(|| err(cursor, kv, "expected key=value"))?;
            let voff = cursor + key.len() + 1;
            match key {
                "levi" => gen.levi_type = parse_type(value).map_err(|e| e.to_string())?,
                "torus" => gen.levi_central_torus = parse_int(value, voff, "torus dimension")?,
                "unip" => {
                    gen.unipotent_radical_dim =
                        parse_int(value, voff, "unipotent radical dimension")?
                }
                "connected" => gen.connected = parse_yn(value, voff)?,
                "parabolic" => gen.in_proper_parabolic = parse_ynu(value, voff)?,
                "kernel0" => gen.action_kernel_zero_dim = parse_ynu(value, voff)?,
                "subregular" => gen.subregular = parse_yn(value, voff)?,
                _ => {
                    return Err(err(
                        cursor,
                        key,
                        "expected one of levi, torus, unip, connected, parabolic, kernel0, \
                         subregular",
                    ))
                }
            }
            cursor += kv.len() + 1;
        }
        return Ok(SubgroupSpec::General(gen));
    }

    Err(err(
        0,
        text.split(':').next().unwrap_or(text),
        "expected a spec starting with \"borel:\", \"maxrank:\" or \"general:\"",
    ))
}
