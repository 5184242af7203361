//! Finite root systems in simple-root coordinates: Cartan matrices,
//! positive-root generation by root strings, highest roots, marks and
//! comarks, and group dimension bookkeeping.
//!
//! # Node numbering
//!
//! Nodes are numbered `1..=rank`. The conventions, fixed once for the whole
//! crate (and documented in the README), are:
//!
//! | family | diagram (node order)                         | lengths                |
//! |--------|----------------------------------------------|------------------------|
//! | A_n    | 1 - 2 - ... - n                              | all long               |
//! | B_n    | 1 - ... - (n-1) => n                         | node n short           |
//! | C_n    | 1 - ... - (n-1) <= n                         | node n long, rest short|
//! | D_n    | 1 - ... - (n-2) < (n-1, n)  (fork)           | all long               |
//! | E_n    | 1 - 3 - 4 - ... - n, with 2 attached to 4    | all long               |
//! | F_4    | 1 - 2 => 3 - 4                               | 1,2 long; 3,4 short    |
//! | G_2    | 1 => 2 (triple bond)                         | 1 long, 2 short        |
//!
//! Squared lengths are normalized so long roots have squared length 2.
//! The Cartan matrix entry `(i, j)` is the pairing of the j-th simple root
//! against the i-th simple coroot.

use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;

use crate::Error;

pub(crate) type Rat = Ratio<i64>;

/// The seven families of finite irreducible root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An almost-simple type: a family letter and a rank, kept in canonical form.
///
/// Canonical means the label is the lexicographically preferred one among
/// the classical coincidences: B1/C1 are stored as A1, B2 as C2, D2 as
/// A1+A1 (two components), and D3 as A3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    /// Builds a simple type, normalizing one-component aliases
    /// (B1, C1 -> A1; B2 -> C2; D3 -> A3).
    ///
    /// D2 denotes the two-component A1+A1 and is rejected here; use
    /// [`SimpleType::normalize`] or [`parse_type`] for it.
    pub fn new(family: Family, rank: usize) -> Result<SimpleType, Error> {
        let parts = SimpleType::normalize(family, rank)?;
        if parts.len() == 1 {
            Ok(parts[0])
        } else {
            Err(Error::spec(format!(
                "{}{} is not almost-simple (denotes {})",
                family,
                rank,
                SemisimpleType::from_components(parts)
            )))
        }
    }

    /// Normalizes a (family, rank) label to its canonical component list.
    pub fn normalize(family: Family, rank: usize) -> Result<Vec<SimpleType>, Error> {
        let canonical = |family, rank| vec![SimpleType { family, rank }];
        match (family, rank) {
            (_, 0) => Err(Error::spec(format!("rank 0 is out of range for {family}"))),
            (Family::A, n) => Ok(canonical(Family::A, n)),
            (Family::B, 1) | (Family::C, 1) => Ok(canonical(Family::A, 1)),
            (Family::B, 2) | (Family::C, 2) => Ok(canonical(Family::C, 2)),
            (Family::B, n) => Ok(canonical(Family::B, n)),
            (Family::C, n) => Ok(canonical(Family::C, n)),
            (Family::D, 1) => Err(Error::spec("rank 1 is out of range for D".to_string())),
            (Family::D, 2) => Ok(vec![
                SimpleType {
                    family: Family::A,
                    rank: 1,
                },
                SimpleType {
                    family: Family::A,
                    rank: 1,
                },
            ]),
            (Family::D, 3) => Ok(canonical(Family::A, 3)),
            (Family::D, n) => Ok(canonical(Family::D, n)),
            (Family::E, n @ 6..=8) => Ok(canonical(Family::E, n)),
            (Family::E, n) => Err(Error::spec(format!("rank {n} is out of range for E"))),
            (Family::F, 4) => Ok(canonical(Family::F, 4)),
            (Family::F, n) => Err(Error::spec(format!("rank {n} is out of range for F"))),
            (Family::G, 2) => Ok(canonical(Family::G, 2)),
            (Family::G, n) => Err(Error::spec(format!("rank {n} is out of range for G"))),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, by the closed per-family formula.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
            Family::F => 24,
            Family::E => match n {
                6 => 36,
                7 => 63,
                8 => 120,
                _ => unreachable!("non-canonical E rank"),
            },
        }
    }

    /// `dim G = rank + 2 |Phi^+|` for the almost-simple group of this type.
    pub fn dim(&self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    /// Ordering key placing larger components first, as in "A2+2A1".
    pub(crate) fn display_key(&self) -> (std::cmp::Reverse<usize>, u8) {
        (std::cmp::Reverse(self.rank), self.family.letter() as u8)
    }

    /// All canonical simple types of the given rank.
    pub fn all_of_rank(rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            if let Ok(parts) = SimpleType::normalize(family, rank) {
                if parts.len() == 1 && parts[0].family == family && parts[0].rank == rank {
                    out.push(parts[0]);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A semisimple type: a multiset of simple components. The empty multiset
/// denotes the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SemisimpleType {
    components: Vec<SimpleType>,
}

impl SemisimpleType {
    pub fn trivial() -> SemisimpleType {
        SemisimpleType::default()
    }

    /// Builds a semisimple type from components; order is irrelevant.
    pub fn from_components(mut components: Vec<SimpleType>) -> SemisimpleType {
        components.sort_by_key(|c| c.display_key());
        SemisimpleType { components }
    }

    pub fn single(t: SimpleType) -> SemisimpleType {
        SemisimpleType {
            components: vec![t],
        }
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.components.iter().map(|c| c.num_positive_roots()).sum()
    }

    /// `dim = rank + 2 |Phi^+|` of the semisimple group.
    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.num_positive_roots()
    }

    /// Distinct component values (each listed once).
    pub fn distinct_components(&self) -> Vec<SimpleType> {
        let mut out = self.components.clone();
        out.dedup();
        out
    }

    /// Removes one occurrence of `c` and inserts the components of `with`.
    pub fn replace_component(&self, c: SimpleType, with: &SemisimpleType) -> SemisimpleType {
        let mut components = self.components.clone();
        let pos = components
            .iter()
            .position(|x| *x == c)
            .expect("component not present");
        components.remove(pos);
        components.extend_from_slice(with.components());
        SemisimpleType::from_components(components)
    }

    pub fn contains(&self, c: SimpleType) -> bool {
        self.components.contains(&c)
    }

    /// All semisimple types of total rank `1..=max_rank` (the trivial type
    /// is not included).
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SemisimpleType> {
        fn rec(
            remaining: usize,
            max_part: usize,
            acc: &mut Vec<SimpleType>,
            out: &mut Vec<SemisimpleType>,
        ) {
            if !acc.is_empty() {
                out.push(SemisimpleType::from_components(acc.clone()));
            }
            for part in (1..=remaining.min(max_part)).rev() {
                for t in SimpleType::all_of_rank(part) {
                    // avoid multiset duplicates: components non-increasing in rank,
                    // and within equal rank non-decreasing in the type order
                    if let Some(last) = acc.last() {
                        if last.rank() == part && t < *last {
                            continue;
                        }
                    }
                    acc.push(t);
                    rec(remaining - part, part, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut acc = Vec::new();
        rec(max_rank, max_rank, &mut acc, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for SemisimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let mut count = 1;
            while i + count < self.components.len() && self.components[i + count] == c {
                count += 1;
            }
            if !first {
                write!(f, "+")?;
            }
            if count > 1 {
                write!(f, "{count}{c}")?;
            } else {
                write!(f, "{c}")?;
            }
            first = false;
            i += count;
        }
        Ok(())
    }
}

/// Parses the type grammar `spec := comp ("+" comp)*`,
/// `comp := [0-9]* [A-G] [0-9]+`, whitespace ignored. A leading integer is
/// a repetition count, so "A2+2A1" parses to the multiset {A2, A1, A1}.
pub fn parse_type(text: &str) -> Result<SemisimpleType, Error> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut components = Vec::new();

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        let comp_start = pos;
        // optional repetition count
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let count: usize = if pos > digits_start {
            let s = &text[digits_start..pos];
            s.parse()
                .map_err(|_| Error::parse(digits_start, s, "repetition count out of range"))?
        } else {
            1
        };
        if count == 0 {
            return Err(Error::parse(
                digits_start,
                &text[digits_start..pos],
                "repetition count must be at least 1",
            ));
        }
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            return Err(Error::parse(pos, "", "expected a family letter A-G"));
        }
        let letter = bytes[pos] as char;
        let family = Family::from_letter(letter).ok_or_else(|| {
            Error::parse(pos, letter.to_string(), "expected a family letter A-G")
        })?;
        pos += 1;
        skip_ws(&mut pos);
        let rank_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == rank_start {
            return Err(Error::parse(
                rank_start,
                &text[comp_start..pos.min(text.len())],
                "expected a rank after the family letter",
            ));
        }
        let rank: usize = text[rank_start..pos]
            .parse()
            .map_err(|_| Error::parse(rank_start, &text[rank_start..pos], "rank out of range"))?;
        let parts = SimpleType::normalize(family, rank).map_err(|e| {
            let message = match e {
                Error::Spec(m) => m,
                other => other.to_string(),
            };
            Error::parse(comp_start, &text[comp_start..pos], message)
        })?;
        for _ in 0..count {
            components.extend_from_slice(&parts);
        }
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] != b'+' {
            return Err(Error::parse(
                pos,
                (bytes[pos] as char).to_string(),
                "expected '+' between components",
            ));
        }
        pos += 1;
    }

    Ok(SemisimpleType::from_components(components))
}

/// A positive root written in the simple-root basis; all coefficients are
/// non-negative and at least one is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub(crate) fn new(coords: Vec<i64>) -> RootVector {
        debug_assert!(coords.iter().all(|&c| c >= 0) && coords.iter().any(|&c| c > 0));
        RootVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Coefficientwise domination.
    pub fn dominates(&self, other: &RootVector) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| a >= b)
    }
}

/// Diagram shape: edges between 0-based nodes plus squared lengths
/// (long roots normalized to squared length 2).
fn diagram_shape(t: SimpleType) -> (Vec<(usize, usize)>, Vec<Rat>) {
    let n = t.rank();
    let long = Rat::from_integer(2);
    let short_half = Rat::new(1, 1); // squared length 1 (B, C, F short roots)
    let short_third = Rat::new(2, 3); // G2 short root
    let path = |n: usize| (0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family() {
        Family::A => (path(n), vec![long; n]),
        Family::B => {
            let mut len = vec![long; n];
            len[n - 1] = short_half;
            (path(n), len)
        }
        Family::C => {
            let mut len = vec![short_half; n];
            len[n - 1] = long;
            (path(n), len)
        }
        Family::D => {
            let mut edges = (0..n - 2).map(|i| (i, i + 1)).collect::<Vec<_>>();
            edges.pop(); // chain 1..n-2, then fork
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
            (edges, vec![long; n])
        }
        Family::E => {
            // chain 1-3-4-...-n with 2 attached to 4 (0-based: 0-2-3-..., 1-3)
            let mut edges = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                edges.push((i, i + 1));
            }
            (edges, vec![long; n])
        }
        Family::F => (
            path(4),
            vec![long, long, short_half, short_half],
        ),
        Family::G => (vec![(0, 1)], vec![long, short_third]),
    }
}

/// The Cartan matrix of `t` in the crate's node numbering. Entry `(i, j)`
/// is the pairing of simple root j against simple coroot i; diagonal 2,
/// off-diagonal in {0, -1, -2, -3}.
pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let (edges, len2) = diagram_shape(t);
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &edges {
        // <alpha_j, alpha_i^vee> = -max(|a_i|^2, |a_j|^2) / |a_i|^2
        let m = len2[i].max(len2[j]);
        let aij = -m / len2[i];
        let aji = -m / len2[j];
        assert!(aij.is_integer() && aji.is_integer());
        a[i][j] = aij.to_integer();
        a[j][i] = aji.to_integer();
    }
    a
}

/// A generated root system with its derived data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<RootVector>,
    pub highest_root: RootVector,
    /// Coefficients of the highest root on each simple root.
    pub marks: Vec<i64>,
    /// Dual coefficients: comark_i = mark_i * |alpha_i|^2 / |alpha_0|^2.
    pub comarks: Vec<i64>,
    /// Squared lengths of the simple roots, long roots normalized to 2.
    pub root_lengths: Vec<Rat>,
}

impl RootSystem {
    /// Symmetrized pairing (beta, gamma) of two vectors in simple-root
    /// coordinates.
    pub fn form(&self, b: &[i64], c: &[i64]) -> Rat {
        let mut acc = Rat::from_integer(0);
        for (i, &bi) in b.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &cj) in c.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                // (alpha_i, alpha_j) = |alpha_i|^2 / 2 * cartan[i][j]
                let gij = self.root_lengths[i] / 2 * Rat::from_integer(self.cartan[i][j]);
                acc += Rat::from_integer(bi * cj) * gij;
            }
        }
        acc
    }
}

/// Generates the positive roots of `t` by saturating root strings level by
/// level: for a root `beta` of height h and simple root `alpha_i`,
/// `beta + alpha_i` is a root iff `p - <beta, alpha_i^vee> > 0` where `p`
/// is the largest `k` with `beta - k alpha_i` a root.
pub fn generate_roots(t: SimpleType) -> RootSystem {
    let n = t.rank();
    let cartan = cartan_matrix(t);
    let (_, root_lengths) = diagram_shape(t);

    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut all: Vec<RootVector> = Vec::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        known.insert(v.clone());
        all.push(RootVector::new(v.clone()));
        level.push(v);
    }

    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                // largest k with beta - k alpha_i still a root
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        all.push(RootVector::new(up.clone()));
                        next.push(up);
                    }
                }
            }
        }
        level = next;
    }

    // the highest root is the unique coefficientwise-maximal element
    let highest = all
        .iter()
        .find(|cand| all.iter().all(|r| cand.dominates(r)))
        .expect("connected diagram has a highest root")
        .clone();
    let marks = highest.coords().to_vec();

    let rs = RootSystem {
        simple_type: t,
        cartan,
        positive_roots: all,
        highest_root: highest,
        marks,
        comarks: Vec::new(),
        root_lengths,
    };
    let highest_len = rs.form(rs.highest_root.coords(), rs.highest_root.coords());
    assert_eq!(highest_len, Rat::from_integer(2), "highest root is long");
    let comarks = rs
        .marks
        .iter()
        .zip(rs.root_lengths.iter())
        .map(|(&m, &l)| {
            let c = Rat::from_integer(m) * l / highest_len;
            assert!(c.is_integer(), "comark of a simple root is an integer");
            c.to_integer()
        })
        .collect();
    RootSystem { comarks, ..rs }
}

/// Rank, positive-root count and dimension of a (possibly reductive) group
/// with the given semisimple type and central torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupInvariants {
    /// Rank of the semisimple part (t minus the central torus).
    pub rank: usize,
    /// Dimension of the central torus, for reductive non-semisimple groups.
    pub central_torus: usize,
    /// Number of positive roots (u).
    pub num_pos_roots: usize,
    /// `dim = rank + central_torus + 2 * num_pos_roots`.
    pub dim: usize,
}

impl GroupInvariants {
    /// Total rank t = semisimple rank + central torus.
    pub fn total_rank(&self) -> usize {
        self.rank + self.central_torus
    }
}

/// Dimension bookkeeping for the reductive group with semisimple part `t`
/// and a central torus of the given dimension.
pub fn group_invariants(t: &SemisimpleType, central_torus: usize) -> GroupInvariants {
    let rank = t.rank();
    let num_pos_roots = t.num_positive_roots();
    GroupInvariants {
        rank,
        central_torus,
        num_pos_roots,
        dim: rank + central_torus + 2 * num_pos_roots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(family: Family, rank: usize) -> SimpleType {
        SimpleType::new(family, rank).unwrap()
    }

    #[test]
    fn parse_single_component() {
        assert_eq!(parse_type("G2").unwrap(), SemisimpleType::single(st(Family::G, 2)));
    }

    #[test]
    fn parse_with_multiplier() {
        let t = parse_type("A2+2A1").unwrap();
        assert_eq!(
            t.components(),
            &[st(Family::A, 2), st(Family::A, 1), st(Family::A, 1)]
        );
        assert_eq!(t.to_string(), "A2+2A1");
    }

    #[test]
    fn parse_normalizes_low_rank_aliases() {
        // oracle: the Cartan matrix of C1 is the 1x1 matrix (2), identical to A1
        assert_eq!(parse_type("C1").unwrap(), parse_type("A1").unwrap());
        assert_eq!(parse_type("B1").unwrap(), parse_type("A1").unwrap());
        assert_eq!(parse_type("B2").unwrap(), parse_type("C2").unwrap());
        assert_eq!(parse_type("D2").unwrap(), parse_type("2A1").unwrap());
        assert_eq!(parse_type("D3").unwrap(), parse_type("A3").unwrap());
    }

    #[test]
    fn parse_ignores_whitespace() {
        assert_eq!(parse_type(" A2 + 2 A1 ").unwrap(), parse_type("A2+2A1").unwrap());
    }

    #[test]
    fn parse_errors_name_the_offending_token() {
        let err = parse_type("A2+X3").unwrap_err();
        match err {
            Error::Parse { offset, token, .. } => {
                assert_eq!(offset, 3);
                assert_eq!(token, "X");
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_type("E9").unwrap_err();
        match err {
            Error::Parse { token, message, .. } => {
                assert_eq!(token, "E9");
                assert!(message.contains("out of range"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_type("0A1").is_err());
        assert!(parse_type("A0").is_err());
        assert!(parse_type("").is_err());
    }

    #[test]
    fn cartan_rank_one() {
        assert_eq!(cartan_matrix(st(Family::A, 1)), vec![vec![2]]);
    }

    #[test]
    fn cartan_a2_closure_oracle() {
        assert_eq!(cartan_matrix(st(Family::A, 2)), vec![vec![2, -1], vec![-1, 2]]);
        // oracle: closure generation yields exactly 3 positive roots
        assert_eq!(generate_roots(st(Family::A, 2)).positive_roots.len(), 3);
    }

    #[test]
    fn cartan_g2_node_one_long() {
        assert_eq!(cartan_matrix(st(Family::G, 2)), vec![vec![2, -1], vec![-3, 2]]);
        // oracle: the generated system has 6 positive roots and a triple bond
        let rs = generate_roots(st(Family::G, 2));
        assert_eq!(rs.positive_roots.len(), 6);
        assert_eq!(rs.cartan[0][1] * rs.cartan[1][0], 3);
    }

    #[test]
    fn roots_a2() {
        let rs = generate_roots(st(Family::A, 2));
        let coords: HashSet<Vec<i64>> = rs
            .positive_roots
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let expected: HashSet<Vec<i64>> =
            [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(coords, expected);
        assert_eq!(rs.highest_root.coords(), &[1, 1]);
        assert_eq!(rs.marks, vec![1, 1]);
    }

    #[test]
    fn roots_g2() {
        let rs = generate_roots(st(Family::G, 2));
        assert_eq!(rs.positive_roots.len(), 6);
        // oracle: coefficientwise-maximal element of the generated set
        for r in &rs.positive_roots {
            assert!(rs.highest_root.dominates(r));
        }
        // node 1 is long, node 2 short: the long root carries mark 2
        assert_eq!(rs.marks, vec![2, 3]);
        assert_eq!(rs.comarks, vec![2, 1]);
        assert_eq!(rs.root_lengths, vec![Rat::from_integer(2), Rat::new(2, 3)]);
    }

    #[test]
    fn roots_c3() {
        let rs = generate_roots(st(Family::C, 3));
        assert_eq!(rs.positive_roots.len(), 9);
        assert_eq!(rs.marks, vec![2, 2, 1]);
        assert_eq!(rs.comarks, vec![1, 1, 1]);
    }

    #[test]
    fn roots_b3() {
        let rs = generate_roots(st(Family::B, 3));
        assert_eq!(rs.positive_roots.len(), 9);
        assert_eq!(rs.marks, vec![1, 2, 2]);
        assert_eq!(rs.comarks, vec![1, 2, 1]);
    }

    #[test]
    fn highest_root_unique_maximum() {
        for t in [st(Family::D, 4), st(Family::F, 4), st(Family::E, 6)] {
            let rs = generate_roots(t);
            let dominators = rs
                .positive_roots
                .iter()
                .filter(|cand| rs.positive_roots.iter().all(|r| cand.dominates(r)))
                .count();
            assert_eq!(dominators, 1, "{t}");
        }
    }

    #[test]
    fn group_invariants_table() {
        let gi = group_invariants(&parse_type("G2").unwrap(), 0);
        assert_eq!((gi.rank, gi.num_pos_roots, gi.dim), (2, 6, 14));
        let gi = group_invariants(&parse_type("B3").unwrap(), 0);
        assert_eq!((gi.rank, gi.num_pos_roots, gi.dim), (3, 9, 21));
        let gi = group_invariants(&parse_type("A3").unwrap(), 0);
        assert_eq!((gi.rank, gi.num_pos_roots, gi.dim), (3, 6, 15));
        // reductive bookkeeping: central torus adds to the rank
        let gi = group_invariants(&parse_type("A1").unwrap(), 2);
        assert_eq!(gi.total_rank(), 3);
        assert_eq!(gi.dim, 5);
    }

    #[test]
    fn semisimple_type_catalog_small() {
        let all = SemisimpleType::all_up_to_rank(2);
        let expected: Vec<SemisimpleType> = ["A1", "2A1", "A2", "C2", "G2"]
            .iter()
            .map(|s| parse_type(s).unwrap())
            .collect();
        assert_eq!(all.len(), expected.len());
        for e in &expected {
            assert!(all.contains(e), "missing {e}");
        }
    }

    #[test]
    fn display_groups_repeated_components() {
        assert_eq!(parse_type("A1+A2+A1").unwrap().to_string(), "A2+2A1");
        assert_eq!(SemisimpleType::trivial().to_string(), "1");
    }
}
