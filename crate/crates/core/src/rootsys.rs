//! Finite crystallographic root systems built from Dynkin types.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan matrix is stored with
//! `cartan[i][j] = <alpha_i, alpha_j^vee>`, so that the simple reflection `s_i`
//! acts on a root with simple-root coordinates `beta` by
//!
//! ```text
//! s_i(beta) = beta - (sum_j beta_j * cartan[j][i]) * alpha_i
//! ```
//!
//! In `B_n` the last simple root is short, in `C_n` it is long, in `F_4` the
//! roots `alpha_3, alpha_4` are short and in `G_2` the root `alpha_1` is short.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest Weyl group order accepted by [`RootSystem::new`].
pub const WEYL_ORDER_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
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
    fn from_char(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

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

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// One irreducible factor of a Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Component> {
        if !family.admits(rank) {
            return Err(Error::InadmissibleRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(Component { family, rank })
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact: u128 = (1..=n).product();
        match self.family {
            Family::A => fact * (n + 1),
            Family::B | Family::C => (1u128 << n) * fact,
            Family::D => (1u128 << (n - 1)) * fact,
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Bourbaki Cartan matrix of this component, `a[i][j] = <alpha_i, alpha_j^vee>`.
    fn cartan(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F => {
                for i in 1..n {
                    bond(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    bond(i - 1, i);
                }
                bond(n - 3, n - 1);
            }
            Family::E => {
                bond(0, 2);
                bond(1, 3);
                for i in 3..n {
                    bond(i - 1, i);
                }
            }
            Family::G => bond(0, 1),
        }
        match self.family {
            Family::B => a[n - 2][n - 1] = -2,
            Family::C => a[n - 1][n - 2] = -2,
            Family::F => a[1][2] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A (possibly reducible) Dynkin type such as `B2xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DynkinType {
    pub components: Vec<Component>,
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(Component::weyl_order).product()
    }

    /// Block-diagonal Cartan matrix, components in order.
    pub fn cartan(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut a = vec![vec![0; n]; n];
        let mut off = 0;
        for c in &self.components {
            let block = c.cartan();
            for (i, row) in block.iter().enumerate() {
                a[off + i][off..off + c.rank].copy_from_slice(row);
            }
            off += c.rank;
        }
        a
    }

    /// Recovers the type of the sub-diagram of `cartan` on the nodes of `subset`.
    ///
    /// Components are listed in order of their smallest node. A two-node
    /// double bond is reported as `B2`.
    pub fn of_subdiagram(cartan: &[Vec<i32>], subset: SimpleSubset) -> DynkinType {
        let nodes: Vec<usize> = subset.iter().collect();
        let mut seen = SimpleSubset::empty();
        let mut components = Vec::new();
        for &start in &nodes {
            if seen.contains(start) {
                continue;
            }
            let comp = connected_component(cartan, subset, start);
            seen = seen.union(comp);
            components.push(classify_connected(cartan, &comp.iter().collect::<Vec<_>>()));
        }
        DynkinType { components }
    }
}

fn connected_component(cartan: &[Vec<i32>], within: SimpleSubset, start: usize) -> SimpleSubset {
    let mut comp = SimpleSubset::empty().with(start);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for j in within.iter() {
            if !comp.contains(j) && cartan[i][j] != 0 {
                comp = comp.with(j);
                stack.push(j);
            }
        }
    }
    comp
}

fn classify_connected(cartan: &[Vec<i32>], nodes: &[usize]) -> Component {
    let k = nodes.len();
    let neighbours = |i: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&j| j != i && cartan[i][j] != 0)
            .collect()
    };
    let comp = |family, rank| Component { family, rank };
    if k == 1 {
        return comp(Family::A, 1);
    }
    let mut double = None;
    for &i in nodes {
        for &j in nodes {
            match cartan[i][j] * cartan[j][i] {
                3 => return comp(Family::G, 2),
                2 if cartan[i][j] == -2 => double = Some((i, j)),
                _ => {}
            }
        }
    }
    if let Some(branch) = nodes.iter().copied().find(|&i| neighbours(i).len() == 3) {
        // Arm lengths from the branch node.
        let mut arms: Vec<usize> = neighbours(branch)
            .into_iter()
            .map(|first| {
                let (mut prev, mut cur, mut len) = (branch, first, 1);
                loop {
                    let next: Vec<usize> =
                        neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                    match next.first() {
                        Some(&n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match arms[..] {
            [1, 1, _] => comp(Family::D, k),
            _ => comp(Family::E, k),
        };
    }
    match double {
        None => comp(Family::A, k),
        Some(_) if k == 2 => comp(Family::B, 2),
        // `long` carries the -2 entry in its row.
        Some((long, short)) => {
            let is_end = |x: usize| neighbours(x).len() == 1;
            if is_end(short) {
                comp(Family::B, k)
            } else if is_end(long) {
                comp(Family::C, k)
            } else {
                comp(Family::F, k)
            }
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(text: &str) -> Result<DynkinType> {
        let syntax = |reason: &str| Error::Syntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(syntax("empty type"));
        }
        let mut components = Vec::new();
        for part in text.split('x') {
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| syntax("empty component"))?;
            let digits = chars.as_str();
            if !letter.is_ascii_uppercase() {
                return Err(syntax("component must start with a family letter"));
            }
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax("component rank must be a decimal number"));
            }
            let rank: usize = digits.parse().map_err(|_| syntax("rank too large"))?;
            let family = match Family::from_char(letter) {
                Some(f) => f,
                None if matches!(letter, 'H' | 'I') => {
                    return Err(Error::NonCrystallographic(letter))
                }
                None => return Err(syntax("unknown family letter")),
            };
            components.push(Component::new(family, rank)?);
        }
        Ok(DynkinType { components })
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn parse_dynkin(text: &str) -> Result<DynkinType> {
    text.parse()
}

/// A set of simple roots, stored as a bitmask over 0-based indices.
///
/// External formats (CLI, JSON, `Display`) use 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleSubset(u32);

impl SimpleSubset {
    pub const fn empty() -> SimpleSubset {
        SimpleSubset(0)
    }

    pub fn full(rank: usize) -> SimpleSubset {
        SimpleSubset(((1u64 << rank) - 1) as u32)
    }

    pub fn from_mask(mask: u32) -> SimpleSubset {
        SimpleSubset(mask)
    }

    /// Builds a subset from 1-based indices, rejecting anything outside `1..=rank`.
    pub fn from_one_based(indices: &[usize], rank: usize) -> Result<SimpleSubset> {
        let mut s = SimpleSubset::empty();
        for &index in indices {
            if index == 0 || index > rank {
                return Err(Error::IndexOutOfRange { index, rank });
            }
            s = s.with(index - 1);
        }
        Ok(s)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> SimpleSubset {
        SimpleSubset(self.0 | 1 << i)
    }

    #[must_use]
    pub fn union(self, other: SimpleSubset) -> SimpleSubset {
        SimpleSubset(self.0 | other.0)
    }

    #[must_use]
    pub fn complement(self, rank: usize) -> SimpleSubset {
        SimpleSubset(!self.0 & SimpleSubset::full(rank).0)
    }

    pub fn is_subset(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 0-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `{1..rank}`, ordered by size and then lexicographically
    /// by their sorted index lists.
    pub fn all(rank: usize) -> Vec<SimpleSubset> {
        let mut v: Vec<SimpleSubset> = (0..1u32 << rank).map(SimpleSubset).collect();
        v.sort_by_key(|s| (s.len(), s.to_one_based()));
        v
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for SimpleSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn support(&self) -> SimpleSubset {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(SimpleSubset::empty(), |s, (i, _)| s.with(i))
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// Index of a root in [`RootSystem::roots`].
pub type RootIndex = usize;

/// An immutable root system.
///
/// Roots are indexed with the positive roots first (by height, then
/// lexicographically decreasing coordinates, so that `alpha_i` has index
/// `i`), followed by their negatives in the same order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    lookup: HashMap<Root, RootIndex>,
    /// `reflections[i][k]` is the index of `s_i(roots[k])`.
    reflections: Vec<Vec<u16>>,
}

impl RootSystem {
    /// Builds the root system, refusing types whose Weyl group order exceeds
    /// [`WEYL_ORDER_CAP`].
    pub fn new(dynkin: DynkinType) -> Result<RootSystem> {
        let order = dynkin.weyl_order();
        if order > WEYL_ORDER_CAP {
            return Err(Error::RankCap {
                ty: dynkin.to_string(),
                order,
                cap: WEYL_ORDER_CAP,
            });
        }
        let cartan = dynkin.cartan();
        let rank = dynkin.rank();

        let mut found: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
        let mut seen: std::collections::HashSet<Root> = found.iter().cloned().collect();
        let mut queue: VecDeque<Root> = found.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let img = reflect_coords(&cartan, i, &r);
                if seen.insert(img.clone()) {
                    found.push(img.clone());
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<Root> = found.into_iter().filter(Root::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let negative: Vec<Root> = positive.iter().map(|r| -r).collect();
        let roots: Vec<Root> = positive.into_iter().chain(negative).collect();
        debug_assert_eq!(roots.len(), seen.len());

        let lookup: HashMap<Root, RootIndex> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, r)| (r, k))
            .collect();
        let reflections = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| lookup[&reflect_coords(&cartan, i, r)] as u16)
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            dynkin,
            cartan,
            roots,
            lookup,
            reflections,
        })
    }

    pub fn from_type_str(text: &str) -> Result<RootSystem> {
        RootSystem::new(text.parse()?)
    }

    pub fn dynkin(&self) -> &DynkinType {
        &self.dynkin
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: RootIndex) -> &Root {
        &self.roots[k]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn is_positive(&self, k: RootIndex) -> bool {
        k < self.num_positive()
    }

    pub fn negate(&self, k: RootIndex) -> RootIndex {
        let p = self.num_positive();
        if k < p {
            k + p
        } else {
            k - p
        }
    }

    /// Index of the simple root `alpha_i` (0-based `i`).
    pub fn simple(&self, i: usize) -> RootIndex {
        i
    }

    pub fn index_of(&self, r: &Root) -> Option<RootIndex> {
        self.lookup.get(r).copied()
    }

    pub fn reflect_index(&self, i: usize, k: RootIndex) -> RootIndex {
        self.reflections[i][k] as RootIndex
    }

    /// `s_i(r)` for a 0-based simple index `i`.
    pub fn reflect(&self, i: usize, r: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                rank: self.rank(),
            });
        }
        let k = self
            .index_of(r)
            .ok_or_else(|| Error::NotARoot(r.0.clone()))?;
        Ok(self.roots[self.reflect_index(i, k)].clone())
    }

    /// Indices of the roots of the subsystem spanned by `subset`.
    pub fn sub_system(&self, subset: SimpleSubset) -> Vec<RootIndex> {
        (0..self.num_roots())
            .filter(|&k| self.in_sub_system(k, subset))
            .collect()
    }

    pub fn in_sub_system(&self, k: RootIndex, subset: SimpleSubset) -> bool {
        self.roots[k].support().is_subset(subset)
    }

    /// Number of positive roots of the subsystem spanned by `subset`.
    pub fn num_positive_in(&self, subset: SimpleSubset) -> usize {
        (0..self.num_positive())
            .filter(|&k| self.in_sub_system(k, subset))
            .count()
    }

    /// `<lambda_J, r>`: the sum of the coordinates of `r` outside `j`.
    pub fn lambda_pairing(&self, j: SimpleSubset, r: &Root) -> i32 {
        r.0.iter()
            .enumerate()
            .filter(|(i, _)| !j.contains(*i))
            .map(|(_, c)| c)
            .sum()
    }

    /// Connected components of the Dynkin diagram, as subsets.
    pub fn diagram_components(&self) -> Vec<SimpleSubset> {
        let full = SimpleSubset::full(self.rank());
        let mut seen = SimpleSubset::empty();
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if !seen.contains(i) {
                let c = connected_component(&self.cartan, full, i);
                seen = seen.union(c);
                out.push(c);
            }
        }
        out
    }

    /// True when no connected component of the diagram lies inside `i`, i.e.
    /// the group acts faithfully on `G/P_I`.
    pub fn is_faithful(&self, i: SimpleSubset) -> bool {
        self.diagram_components().iter().all(|c| !c.is_subset(i))
    }

    pub fn check_subset(&self, s: SimpleSubset) -> Result<()> {
        match s.iter().find(|&i| i >= self.rank()) {
            Some(i) => Err(Error::IndexOutOfRange {
                index: i + 1,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }
}

fn reflect_coords(cartan: &[Vec<i32>], i: usize, r: &Root) -> Root {
    let pairing: i32 = r.0.iter().enumerate().map(|(j, b)| b * cartan[j][i]).sum();
    let mut out = r.clone();
    out.0[i] -= pairing;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    fn idx(s: &[usize], rank: usize) -> SimpleSubset {
        SimpleSubset::from_one_based(s, rank).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a2 = parse_dynkin("A2").unwrap();
        assert_eq!(
            a2.components,
            vec![Component {
                family: Family::A,
                rank: 2
            }]
        );
        let b2a1 = parse_dynkin("B2xA1").unwrap();
        assert_eq!(b2a1.rank(), 3);
        assert_eq!(b2a1.to_string(), "B2xA1");
        assert_eq!(parse_dynkin("H3"), Err(Error::NonCrystallographic('H')));
        assert!(matches!(
            parse_dynkin("D3"),
            Err(Error::InadmissibleRank { .. })
        ));
        assert!(matches!(
            parse_dynkin("C2"),
            Err(Error::InadmissibleRank { .. })
        ));
        assert!(matches!(
            parse_dynkin("E9"),
            Err(Error::InadmissibleRank { .. })
        ));
        for bad in ["", "a2", "A", "A2x", "xA2", "A2xB", "A-1", "A2 "] {
            assert!(
                matches!(parse_dynkin(bad), Err(Error::Syntax { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn rank_cap() {
        assert!(matches!(
            RootSystem::from_type_str("E7"),
            Err(Error::RankCap { .. })
        ));
        assert!(matches!(
            RootSystem::from_type_str("E8"),
            Err(Error::RankCap { .. })
        ));
        assert!(RootSystem::from_type_str("E6").is_ok());
        assert!(matches!(
            RootSystem::from_type_str("A9"),
            Err(Error::RankCap { .. })
        ));
    }

    #[test]
    fn small_systems() {
        let a2 = rs("A2");
        assert_eq!(a2.num_roots(), 6);
        let pos: Vec<_> = a2.roots()[..3].iter().map(|r| r.0.clone()).collect();
        assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);

        let b2 = rs("B2");
        assert_eq!(b2.num_roots(), 8);
        let pos: Vec<_> = b2.roots()[..4].iter().map(|r| r.0.clone()).collect();
        assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);

        assert_eq!(rs("G2").num_roots(), 12);
        assert_eq!(rs("G2").roots()[5], Root(vec![3, 2]));
        assert_eq!(rs("F4").num_roots(), 48);
        assert_eq!(rs("E6").num_roots(), 72);
        assert_eq!(rs("D4").num_roots(), 24);
    }

    #[test]
    fn reflect_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.reflect(0, &Root(vec![1, 0])).unwrap(), Root(vec![-1, 0]));
        assert_eq!(a2.reflect(0, &Root(vec![0, 1])).unwrap(), Root(vec![1, 1]));
        let b2 = rs("B2");
        assert_eq!(b2.reflect(1, &Root(vec![1, 0])).unwrap(), Root(vec![1, 2]));
        assert_eq!(
            a2.reflect(0, &Root(vec![2, 0])),
            Err(Error::NotARoot(vec![2, 0]))
        );
    }

    #[test]
    fn sub_system_examples() {
        let a2 = rs("A2");
        assert!(a2.sub_system(SimpleSubset::empty()).is_empty());
        let s = a2.sub_system(idx(&[1], 2));
        assert_eq!(s.len(), 2);
        assert!(s
            .iter()
            .all(|&k| a2.root(k).0 == [1, 0] || a2.root(k).0 == [-1, 0]));

        // Embedded A2 in A3: support filter against closure of {alpha_1, alpha_2}.
        let a3 = rs("A3");
        let sub = a3.sub_system(idx(&[1, 2], 3));
        assert_eq!(sub.len(), 6);
        let mut closure: Vec<Root> = vec![Root(vec![1, 0, 0]), Root(vec![0, 1, 0])];
        let mut k = 0;
        while k < closure.len() {
            for i in 0..2 {
                let r = a3.reflect(i, &closure[k]).unwrap();
                if !closure.contains(&r) {
                    closure.push(r);
                }
            }
            k += 1;
        }
        let mut from_filter: Vec<Root> = sub.iter().map(|&k| a3.root(k).clone()).collect();
        from_filter.sort();
        closure.sort();
        assert_eq!(from_filter, closure);
    }

    #[test]
    fn lambda_examples() {
        let a2 = rs("A2");
        for r in a2.roots() {
            assert_eq!(a2.lambda_pairing(SimpleSubset::full(2), r), 0);
        }
        let top = Root(vec![1, 1]);
        assert_eq!(a2.lambda_pairing(SimpleSubset::empty(), &top), 2);
        assert_eq!(a2.lambda_pairing(idx(&[1], 2), &top), 1);
    }

    #[test]
    fn faithful_examples() {
        assert!(rs("A2").is_faithful(idx(&[1], 2)));
        assert!(!rs("A1xA1").is_faithful(idx(&[1], 2)));
        assert!(rs("A3").is_faithful(idx(&[1, 3], 3)));
        assert!(!rs("A2").is_faithful(SimpleSubset::full(2)));
        assert!(rs("A2").is_faithful(SimpleSubset::empty()));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn cartan_shape() {
        for t in ["A4", "B3", "C3", "D5", "E6", "F4", "G2", "B2xA1"] {
            let r = rs(t);
            let a = r.cartan();
            for i in 0..a.len() {
                assert_eq!(a[i][i], 2);
                for j in 0..a.len() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn subdiagram_types() {
        let name = |t: &str, s: &[usize]| {
            let r = rs(t);
            DynkinType::of_subdiagram(r.cartan(), idx(s, r.rank())).to_string()
        };
        assert_eq!(name("A3", &[1, 3]), "A1xA1");
        assert_eq!(name("A3", &[]), "");
        assert_eq!(name("B3", &[2, 3]), "B2");
        assert_eq!(name("B4", &[2, 3, 4]), "B3");
        assert_eq!(name("C4", &[2, 3, 4]), "C3");
        assert_eq!(name("F4", &[1, 2, 3]), "B3");
        assert_eq!(name("F4", &[2, 3, 4]), "C3");
        assert_eq!(name("F4", &[1, 2, 3, 4]), "F4");
        assert_eq!(name("D5", &[2, 3, 4, 5]), "D4");
        assert_eq!(name("D5", &[1, 2, 3, 4]), "A4");
        assert_eq!(name("E6", &[1, 2, 3, 4, 5, 6]), "E6");
        assert_eq!(name("E6", &[2, 3, 4, 5]), "D4");
        assert_eq!(name("E6", &[1, 3, 4, 5, 6]), "A5");
        assert_eq!(name("G2", &[1, 2]), "G2");
        assert_eq!(name("B2xA1", &[1, 2, 3]), "B2xA1");
        for t in ["A5", "B4", "C4", "D4", "D5", "E6", "F4", "G2"] {
            let r = rs(t);
            assert_eq!(
                DynkinType::of_subdiagram(r.cartan(), SimpleSubset::full(r.rank())).to_string(),
                t
            );
        }
    }

    #[test]
    fn subset_ordering() {
        let all: Vec<Vec<usize>> = SimpleSubset::all(2)
            .iter()
            .map(|s| s.to_one_based())
            .collect();
        assert_eq!(all, vec![vec![], vec![1], vec![2], vec![1, 2]]);
        assert_eq!(idx(&[1, 3], 3).to_string(), "{1,3}");
        assert!(matches!(
            SimpleSubset::from_one_based(&[4], 3),
            Err(Error::IndexOutOfRange { index: 4, rank: 3 })
        ));
    }
}
