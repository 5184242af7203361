//! Extended Dynkin diagrams and the Borel-de Siebenthal moves: removing a
//! prime-mark node from the extended diagram (semisimple subgroups) or a
//! node from the ordinary diagram (Levi subgroups of maximal parabolics),
//! plus the breadth-first enumeration of the subgroups these moves reach.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_rational::Ratio;

use crate::rootsys::{generate_roots, Family, SemisimpleType, SimpleType};
use crate::Error;

type Rat = Ratio<i64>;

/// Extended Dynkin diagram: node 0 is the affine node (the negative of the
/// highest root), nodes `1..=rank` are the simple roots.
#[derive(Debug, Clone)]
pub struct ExtendedDiagram {
    pub base: SimpleType,
    /// `(rank+1) x (rank+1)` pairing matrix; entry `(i, j)` pairs node j
    /// against the coroot of node i.
    pub cartan_ext: Vec<Vec<i64>>,
    /// Extended marks; the affine node always carries mark 1.
    pub marks_ext: Vec<i64>,
    /// Squared lengths per node, long roots normalized to 2.
    pub root_lengths_ext: Vec<Rat>,
}

impl ExtendedDiagram {
    pub fn num_nodes(&self) -> usize {
        self.marks_ext.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan_ext[i][j] != 0
    }

    /// Bond multiplicity between two adjacent nodes.
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        self.cartan_ext[i][j] * self.cartan_ext[j][i]
    }
}

/// Builds the extended diagram of `t`. The affine node's pairings are
/// computed from the generated highest root, not hard-coded.
pub fn extended_diagram(t: SimpleType) -> ExtendedDiagram {
    let rs = generate_roots(t);
    let n = t.rank();
    let a0 = rs.highest_root.coords();
    let len_a0 = rs.form(a0, a0);
    debug_assert_eq!(len_a0, Rat::from_integer(2));

    let mut ext = vec![vec![0i64; n + 1]; n + 1];
    ext[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            ext[i + 1][j + 1] = rs.cartan[i][j];
        }
    }
    for j in 0..n {
        let mut e = vec![0i64; n];
        e[j] = 1;
        let pair = rs.form(&e, a0);
        // <alpha_j, (-alpha_0)^vee> against the affine coroot
        let a0j = -Rat::from_integer(2) * pair / len_a0;
        // <-alpha_0, alpha_j^vee>
        let aj0 = -Rat::from_integer(2) * pair / rs.root_lengths[j];
        assert!(a0j.is_integer() && aj0.is_integer());
        ext[0][j + 1] = a0j.to_integer();
        ext[j + 1][0] = aj0.to_integer();
    }

    let mut marks_ext = vec![1i64];
    marks_ext.extend_from_slice(&rs.marks);
    let mut root_lengths_ext = vec![len_a0];
    root_lengths_ext.extend_from_slice(&rs.root_lengths);

    ExtendedDiagram {
        base: t,
        cartan_ext: ext,
        marks_ext,
        root_lengths_ext,
    }
}

/// The two Borel-de Siebenthal move kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Remove a prime-mark node from the extended diagram; rank preserved,
    /// result semisimple.
    SemisimpleRemove,
    /// Remove a node from the ordinary diagram; the Levi of the maximal
    /// parabolic at that node, one dimension of central torus appears.
    LeviRemove,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::SemisimpleRemove => "ss",
            MoveKind::LeviRemove => "levi",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One diagram move applied to a single almost-simple component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BdsMove {
    pub kind: MoveKind,
    /// The component the move applies to.
    pub component: SimpleType,
    /// Node index in the component's diagram (1-based, ordinary nodes).
    pub node: usize,
    /// Type of that component after the move.
    pub result: SemisimpleType,
    /// Central torus dimension gained: 0 for semisimple, 1 for Levi moves.
    pub torus_delta: u32,
    /// Comark at the removed node, recorded for semisimple moves only.
    pub comark_at_node: Option<i64>,
}

impl fmt::Display for BdsMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}@{}", self.kind, self.node, self.component)
    }
}

/// A connected maximal-rank subgroup reached by a chain of moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRankSubgroup {
    pub semisimple_part: SemisimpleType,
    pub central_torus: u32,
    /// Witness chain of moves from the ambient group.
    pub chain: Vec<BdsMove>,
    /// True iff every semisimple move in the chain has comark 1, so the
    /// simply-connected cover of the subgroup splits off unchanged.
    pub simply_connected_cover_splits: bool,
}

impl MaxRankSubgroup {
    /// The full group `H = G` seen as its own maximal-rank subgroup.
    pub fn full(t: &SemisimpleType) -> MaxRankSubgroup {
        MaxRankSubgroup {
            semisimple_part: t.clone(),
            central_torus: 0,
            chain: Vec::new(),
            simply_connected_cover_splits: true,
        }
    }

    pub fn new(part: SemisimpleType, torus: u32, chain: Vec<BdsMove>) -> MaxRankSubgroup {
        let scc = chain
            .iter()
            .all(|m| m.comark_at_node.is_none_or(|c| c == 1));
        MaxRankSubgroup {
            semisimple_part: part,
            central_torus: torus,
            chain,
            simply_connected_cover_splits: scc,
        }
    }

    /// Total rank (semisimple rank plus central torus).
    pub fn rank(&self) -> usize {
        self.semisimple_part.rank() + self.central_torus as usize
    }

    /// Dimension of the reductive subgroup.
    pub fn dim(&self) -> usize {
        self.semisimple_part.dim() + self.central_torus as usize
    }
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Connected components of the induced subdiagram on `nodes`.
fn components_of(ext: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: HashMap<usize, bool> = nodes.iter().map(|&n| (n, false)).collect();
    let mut out = Vec::new();
    for &start in nodes {
        if seen[&start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        *seen.get_mut(&start).unwrap() = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in nodes {
                if !seen[&w] && ext[v][w] != 0 {
                    *seen.get_mut(&w).unwrap() = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Candidate canonical types of a given rank for diagram recognition.
/// The classical coincidences are represented once: rank-2 double bond is
/// C2, a 3-node path is A3, two isolated nodes are two A1 components.
fn recognition_candidates(rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<SimpleType>, f, r| {
        if let Ok(t) = SimpleType::new(f, r) {
            if t.family() == f && t.rank() == r {
                out.push(t);
            }
        }
    };
    push(&mut out, Family::A, rank);
    if rank == 2 {
        push(&mut out, Family::C, 2);
        push(&mut out, Family::G, 2);
    }
    if rank >= 3 {
        push(&mut out, Family::B, rank);
        push(&mut out, Family::C, rank);
    }
    if rank >= 4 {
        push(&mut out, Family::D, rank);
    }
    if (6..=8).contains(&rank) {
        push(&mut out, Family::E, rank);
    }
    if rank == 4 {
        push(&mut out, Family::F, 4);
    }
    out
}

/// Does some simultaneous row/column permutation carry `cand` to `sub`?
fn permutation_equal(cand: &[Vec<i64>], sub: &[Vec<i64>]) -> bool {
    let n = cand.len();
    debug_assert_eq!(n, sub.len());
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        n: usize,
        cand: &[Vec<i64>],
        sub: &[Vec<i64>],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let ok = (0..k).all(|j| {
                cand[k][j] == sub[v][perm[j]] && cand[j][k] == sub[perm[j]][v]
            });
            if ok {
                perm[k] = v;
                used[v] = true;
                if extend(k + 1, n, cand, sub, perm, used) {
                    return true;
                }
                used[v] = false;
                perm[k] = usize::MAX;
            }
        }
        false
    }

    extend(0, n, cand, sub, &mut perm, &mut used)
}

/// Recognizes the type of the whole (possibly disconnected) subdiagram on
/// `nodes`, against the catalog of canonical Cartan matrices up to
/// simultaneous permutation.
fn recognize(ext: &[Vec<i64>], nodes: &[usize]) -> Result<SemisimpleType, Error> {
    let mut components = Vec::new();
    for comp in components_of(ext, nodes) {
        let k = comp.len();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| ext[i][j]).collect())
            .collect();
        let found = recognition_candidates(k)
            .into_iter()
            .find(|t| permutation_equal(&crate::rootsys::cartan_matrix(*t), &sub));
        match found {
            Some(t) => components.push(t),
            None => {
                return Err(Error::spec(format!(
                    "subdiagram on nodes {comp:?} is not a finite-type diagram"
                )))
            }
        }
    }
    Ok(SemisimpleType::from_components(components))
}

/// Semisimple Borel-de Siebenthal moves of `t`: one per ordinary node whose
/// extended mark is prime. The result keeps the affine node, so the rank is
/// preserved and the subgroup is semisimple.
pub fn semisimple_moves(t: SimpleType) -> Vec<BdsMove> {
    let ext = extended_diagram(t);
    let rs = generate_roots(t);
    let n = t.rank();
    let mut out = Vec::new();
    for node in 1..=n {
        if !is_prime(ext.marks_ext[node]) {
            continue;
        }
        let keep: Vec<usize> = (0..=n).filter(|&i| i != node).collect();
        let result = recognize(&ext.cartan_ext, &keep)
            .expect("node removal from an extended diagram stays finite type");
        out.push(BdsMove {
            kind: MoveKind::SemisimpleRemove,
            component: t,
            node,
            result,
            torus_delta: 0,
            comark_at_node: Some(rs.comarks[node - 1]),
        });
    }
    out
}

/// Levi moves of `t`: one per ordinary node. Removing node i from the
/// ordinary diagram gives the semisimple part of the Levi of the maximal
/// parabolic at i, with one dimension of central torus.
pub fn levi_moves(t: SimpleType) -> Vec<BdsMove> {
    let ext = extended_diagram(t);
    let n = t.rank();
    let mut out = Vec::new();
    for node in 1..=n {
        let keep: Vec<usize> = (1..=n).filter(|&i| i != node).collect();
        let result = recognize(&ext.cartan_ext, &keep)
            .expect("node removal from a diagram stays finite type");
        out.push(BdsMove {
            kind: MoveKind::LeviRemove,
            component: t,
            node,
            result,
            torus_delta: 1,
            comark_at_node: None,
        });
    }
    out
}

fn moves_of(t: SimpleType, cache: &mut HashMap<SimpleType, Vec<BdsMove>>) -> Vec<BdsMove> {
    cache
        .entry(t)
        .or_insert_with(|| {
            let mut all = semisimple_moves(t);
            all.extend(levi_moves(t));
            all
        })
        .clone()
}

/// Breadth-first closure of the two move kinds applied componentwise, up to
/// `depth` steps. Subgroups are deduplicated by (semisimple part, torus);
/// each keeps one witness chain (a shortest one). The ambient group itself
/// is not listed. Output is sorted by (semisimple part, torus).
pub fn enumerate_maximal_rank(t: &SemisimpleType, depth: u32) -> Vec<MaxRankSubgroup> {
    let mut cache = HashMap::new();
    let mut visited: HashMap<(SemisimpleType, u32), MaxRankSubgroup> = HashMap::new();
    let mut frontier: Vec<(SemisimpleType, u32, Vec<BdsMove>)> = vec![(t.clone(), 0, Vec::new())];

    for _ in 0..depth {
        let mut next = Vec::new();
        for (part, torus, chain) in frontier {
            for c in part.distinct_components() {
                for mv in moves_of(c, &mut cache) {
                    let new_part = part.replace_component(c, &mv.result);
                    let new_torus = torus + mv.torus_delta;
                    let key = (new_part.clone(), new_torus);
                    if key == (t.clone(), 0) || visited.contains_key(&key) {
                        continue;
                    }
                    let mut new_chain = chain.clone();
                    new_chain.push(mv);
                    visited.insert(
                        key,
                        MaxRankSubgroup::new(new_part.clone(), new_torus, new_chain.clone()),
                    );
                    next.push((new_part, new_torus, new_chain));
                }
            }
        }
        frontier = next;
    }

    let mut out: Vec<MaxRankSubgroup> = visited.into_values().collect();
    out.sort_by(|a, b| {
        (&a.semisimple_part, a.central_torus).cmp(&(&b.semisimple_part, b.central_torus))
    });
    out
}

/// The per-ambient-factor view of a chain: which factor of the ambient
/// group a sub-chain descends into, and what it reaches there.
#[derive(Debug, Clone)]
pub struct FactorLine {
    pub ambient: SimpleType,
    pub part: SemisimpleType,
    pub torus: u32,
    pub chain: Vec<BdsMove>,
}

/// Replays a chain from the ambient type, validating every move against the
/// recomputed move tables and apportioning moves to ambient factors (first
/// matching factor when several contain an equal component).
pub fn replay_chain(ambient: &SemisimpleType, chain: &[BdsMove]) -> Result<Vec<FactorLine>, Error> {
    let mut lines: Vec<FactorLine> = ambient
        .components()
        .iter()
        .map(|&c| FactorLine {
            ambient: c,
            part: SemisimpleType::single(c),
            torus: 0,
            chain: Vec::new(),
        })
        .collect();
    let mut cache = HashMap::new();
    for (idx, mv) in chain.iter().enumerate() {
        let line = lines
            .iter_mut()
            .find(|l| l.part.contains(mv.component))
            .ok_or_else(|| {
                Error::spec(format!(
                    "chain step {idx}: no factor currently contains a component {}",
                    mv.component
                ))
            })?;
        let recomputed = moves_of(mv.component, &mut cache);
        let valid = recomputed
            .iter()
            .find(|m| m.kind == mv.kind && m.node == mv.node)
            .ok_or_else(|| {
                Error::spec(format!(
                    "chain step {idx}: {} admits no {} move at node {}",
                    mv.component,
                    mv.kind,
                    mv.node
                ))
            })?;
        if valid.result != mv.result
            || valid.torus_delta != mv.torus_delta
            || valid.comark_at_node != mv.comark_at_node
        {
            return Err(Error::spec(format!(
                "chain step {idx}: move data does not match the diagram ({} vs {})",
                mv.result, valid.result
            )));
        }
        line.part = line.part.replace_component(mv.component, &mv.result);
        line.torus += mv.torus_delta;
        line.chain.push(mv.clone());
    }
    Ok(lines)
}

/// Applies a raw `(kind, node)` move list to the ambient type, resolving
/// which component each move acts on. A step is ambiguous only if distinct
/// choices lead to distinct subgroups; the first matching component in
/// canonical order is used otherwise.
pub fn resolve_chain(
    ambient: &SemisimpleType,
    moves: &[(MoveKind, usize)],
) -> Result<MaxRankSubgroup, Error> {
    let mut cache = HashMap::new();
    let mut part = ambient.clone();
    let mut torus = 0u32;
    let mut chain = Vec::new();
    for (idx, &(kind, node)) in moves.iter().enumerate() {
        let mut applications: Vec<(SemisimpleType, BdsMove)> = Vec::new();
        for c in part.distinct_components() {
            if let Some(mv) = moves_of(c, &mut cache)
                .into_iter()
                .find(|m| m.kind == kind && m.node == node)
            {
                applications.push((part.replace_component(c, &mv.result), mv));
            }
        }
        let mut outcomes: Vec<&SemisimpleType> =
            applications.iter().map(|(p, _)| p).collect();
        outcomes.sort();
        outcomes.dedup();
        match outcomes.len() {
            0 => {
                return Err(Error::spec(format!(
                    "chain step {idx}: no component of {part} admits {kind}:{node}"
                )))
            }
            1 => {}
            _ => {
                let names: Vec<String> = applications
                    .iter()
                    .map(|(p, mv)| format!("{} (via {})", p, mv.component))
                    .collect();
                return Err(Error::spec(format!(
                    "chain step {idx}: {kind}:{node} is ambiguous on {part}: {}",
                    names.join(", ")
                )));
            }
        }
        let (new_part, mv) = applications.into_iter().next().unwrap();
        part = new_part;
        torus += mv.torus_delta;
        chain.push(mv);
    }
    Ok(MaxRankSubgroup::new(part, torus, chain))
}

/// Searches the enumeration for a subgroup with the given semisimple part.
/// Errors if nothing matches within `depth`, or if the type is reachable by
/// chains of genuinely different shapes (different move-kind sequences),
/// which would carry different certificates.
pub fn find_by_type(
    ambient: &SemisimpleType,
    part: &SemisimpleType,
    depth: u32,
) -> Result<MaxRankSubgroup, Error> {
    // BFS over states, tracking every distinct move-kind sequence that
    // reaches each state, with one witness chain per sequence.
    type KindSeq = Vec<MoveKind>;
    type Witnesses = HashMap<KindSeq, Vec<BdsMove>>;
    let mut cache = HashMap::new();
    let mut reached: HashMap<(SemisimpleType, u32), Witnesses> = HashMap::new();
    let mut frontier: Vec<(SemisimpleType, u32, Vec<BdsMove>)> = vec![(ambient.clone(), 0, vec![])];

    for _ in 0..depth {
        let mut next = Vec::new();
        for (state, torus, chain) in frontier {
            for c in state.distinct_components() {
                for mv in moves_of(c, &mut cache) {
                    let new_part = state.replace_component(c, &mv.result);
                    let new_torus = torus + mv.torus_delta;
                    let mut new_chain = chain.clone();
                    new_chain.push(mv);
                    let seq: KindSeq = new_chain.iter().map(|m| m.kind).collect();
                    let entry = reached.entry((new_part.clone(), new_torus)).or_default();
                    // expanding one witness per (state, kind sequence) is
                    // complete: later moves depend only on the state
                    if let std::collections::hash_map::Entry::Vacant(slot) = entry.entry(seq) {
                        slot.insert(new_chain.clone());
                        next.push((new_part, new_torus, new_chain));
                    }
                }
            }
        }
        frontier = next;
    }

    let matches: Vec<(&(SemisimpleType, u32), &Witnesses)> = reached
        .iter()
        .filter(|((p, _), _)| p == part)
        .collect();
    match matches.len() {
        0 => Err(Error::spec(format!(
            "no maximal-rank subgroup of type {part} found in {ambient} within depth {depth}"
        ))),
        1 => {
            let (_, chains) = matches[0];
            if chains.len() > 1 {
                let mut shapes: Vec<String> = chains
                    .keys()
                    .map(|seq| {
                        seq.iter()
                            .map(|k| k.as_str())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                shapes.sort();
                return Err(Error::spec(format!(
                    "subgroup {part} of {ambient} is reachable by chains of different shapes \
                     ({}); pass an explicit ;chain=...",
                    shapes.join(" / ")
                )));
            }
            let mut witnesses: Vec<&Vec<BdsMove>> = chains.values().collect();
            witnesses.sort_by_key(|c| {
                c.iter()
                    .map(|m| (m.component, m.node, m.kind as u8))
                    .collect::<Vec<_>>()
            });
            let chain = witnesses[0].clone();
            let line_torus: u32 = chain.iter().map(|m| m.torus_delta).sum();
            Ok(MaxRankSubgroup::new(part.clone(), line_torus, chain))
        }
        _ => unreachable!("torus is determined by the semisimple part"),
    }
}

/// Is (part, torus) reachable from `ambient` using Levi moves only?
/// Used to certify that a reductive subgroup is itself a parabolic Levi.
pub(crate) fn levi_reachable(ambient: SimpleType, part: &SemisimpleType, torus: u32) -> bool {
    let mut cache = HashMap::new();
    let start = SemisimpleType::single(ambient);
    let mut seen: Vec<(SemisimpleType, u32)> = vec![(start.clone(), 0)];
    let mut frontier = vec![(start, 0u32)];
    while let Some((state, t)) = frontier.pop() {
        if state == *part && t == torus {
            return true;
        }
        if t >= torus {
            continue;
        }
        for c in state.distinct_components() {
            for mv in moves_of(c, &mut cache)
                .into_iter()
                .filter(|m| m.kind == MoveKind::LeviRemove)
            {
                let next = (state.replace_component(c, &mv.result), t + 1);
                if !seen.contains(&next) {
                    seen.push(next.clone());
                    frontier.push(next);
                }
            }
        }
    }
    false
}
