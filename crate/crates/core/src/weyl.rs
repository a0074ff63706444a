//! Weyl groups as permutation groups on the roots.
//!
//! Products follow function composition: `multiply(u, w)` is the element
//! acting as `u(w(beta))`, and a word `[a_1, ..., a_k]` denotes
//! `s_{a_1} * ... * s_{a_k}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::rootsys::{RootIndex, RootSystem, SimpleSubset};

/// Groups up to this order get a precomputed Bruhat matrix.
pub const BRUHAT_MATRIX_LIMIT: usize = 10_000;

/// Dense identifier of an element inside one [`WeylGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite Weyl group with all elements enumerated.
///
/// Elements are ordered by length and, within a length, by their
/// lexicographically least reduced word.
pub struct WeylGroup {
    rs: RootSystem,
    /// Flat `len x num_roots` table: `perms[w * n + k]` is the index of `w(root k)`.
    perms: Vec<u16>,
    lengths: Vec<u32>,
    /// Bitmask of `i` with `w^{-1}(alpha_i) < 0`.
    left_desc: Vec<u32>,
    /// Bitmask of `i` with `w(alpha_i) < 0`.
    right_desc: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
    longest: ElementId,
    bruhat: OnceLock<Option<Vec<FixedBitSet>>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.rs.dynkin().to_string())
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    pub fn generate(rs: RootSystem) -> WeylGroup {
        let n = rs.num_roots();
        let npos = rs.num_positive();
        let rank = rs.rank();

        let mut perms: Vec<u16> = (0..n as u16).collect();
        let mut lengths = vec![0u32];
        let mut left_desc = vec![0u32];
        let mut level: Vec<usize> = vec![0];
        let mut len = 0u32;
        let mut scratch = vec![0u16; n];
        // Each element w != e is produced once, as s_i * u with i the least
        // left descent of w; scanning (i, u) in order keeps each level sorted
        // by lexicographically least reduced word.
        while !level.is_empty() {
            let mut next = Vec::new();
            for i in 0..rank {
                let bit = 1u32 << i;
                for &u in &level {
                    if left_desc[u] & bit != 0 {
                        continue;
                    }
                    let pu = &perms[u * n..(u + 1) * n];
                    for (dst, &src) in scratch.iter_mut().zip(pu) {
                        *dst = rs.reflect_index(i, src as usize) as u16;
                    }
                    let desc = descents_of_inverse(&scratch, npos, rank);
                    if desc.trailing_zeros() as usize != i {
                        continue;
                    }
                    next.push(lengths.len());
                    perms.extend_from_slice(&scratch);
                    lengths.push(len + 1);
                    left_desc.push(desc);
                }
            }
            level = next;
            len += 1;
        }

        let order = lengths.len();
        let right_desc: Vec<u32> = (0..order)
            .map(|w| {
                (0..rank)
                    .filter(|&i| perms[w * n + rs.simple(i)] as usize >= npos)
                    .fold(0, |m, i| m | 1 << i)
            })
            .collect();

        let key = |p: &[u16]| -> Vec<u16> { (0..rank).map(|i| p[rs.simple(i)]).collect() };
        let ids: HashMap<Vec<u16>, u32> = (0..order)
            .map(|w| (key(&perms[w * n..(w + 1) * n]), w as u32))
            .collect();
        let mut left = vec![0u32; order * rank];
        let mut right = vec![0u32; order * rank];
        let mut inverse = vec![0u32; order];
        let mut inv = vec![0u16; n];
        for w in 0..order {
            let p = &perms[w * n..(w + 1) * n];
            for i in 0..rank {
                let lk: Vec<u16> = (0..rank)
                    .map(|j| rs.reflect_index(i, p[rs.simple(j)] as usize) as u16)
                    .collect();
                left[w * rank + i] = ids[&lk];
                let rk: Vec<u16> = (0..rank)
                    .map(|j| p[rs.reflect_index(i, rs.simple(j))])
                    .collect();
                right[w * rank + i] = ids[&rk];
            }
            for (k, &img) in p.iter().enumerate() {
                inv[img as usize] = k as u16;
            }
            inverse[w] = ids[&key(&inv)];
        }

        let max = *lengths.last().unwrap_or(&0);
        let top: Vec<usize> = (0..order).filter(|&w| lengths[w] == max).collect();
        assert_eq!(top.len(), 1, "longest element must be unique");

        WeylGroup {
            rs,
            perms,
            lengths,
            left_desc,
            right_desc,
            left,
            right,
            inverse,
            longest: ElementId(top[0] as u32),
            bruhat: OnceLock::new(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.lengths[w.index()] as usize
    }

    /// Image of a root under `w`.
    pub fn act(&self, w: ElementId, k: RootIndex) -> RootIndex {
        self.perms[w.index() * self.rs.num_roots() + k] as RootIndex
    }

    pub fn perm(&self, w: ElementId) -> &[u16] {
        let n = self.rs.num_roots();
        &self.perms[w.index() * n..(w.index() + 1) * n]
    }

    /// `s_i * w`.
    pub fn left_mul(&self, i: usize, w: ElementId) -> ElementId {
        ElementId(self.left[w.index() * self.rank() + i])
    }

    /// `w * s_i`.
    pub fn right_mul(&self, w: ElementId, i: usize) -> ElementId {
        ElementId(self.right[w.index() * self.rank() + i])
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        ElementId(self.inverse[w.index()])
    }

    pub fn multiply(&self, u: ElementId, w: ElementId) -> ElementId {
        self.reduced_word(w)
            .into_iter()
            .fold(u, |acc, i| self.right_mul(acc, i))
    }

    /// Product of a word of 0-based simple indices.
    pub fn from_word(&self, word: &[usize]) -> ElementId {
        word.iter()
            .fold(self.identity(), |acc, &i| self.right_mul(acc, i))
    }

    pub fn simple_reflection(&self, i: usize) -> ElementId {
        self.right_mul(self.identity(), i)
    }

    /// `i` such that `w^{-1}(alpha_i)` is negative.
    pub fn left_descents(&self, w: ElementId) -> SimpleSubset {
        SimpleSubset::from_mask(self.left_desc[w.index()])
    }

    /// `i` such that `w(alpha_i)` is negative.
    pub fn right_descents(&self, w: ElementId) -> SimpleSubset {
        SimpleSubset::from_mask(self.right_desc[w.index()])
    }

    /// Lexicographically least reduced word (0-based letters), built by
    /// always stripping the smallest left descent.
    pub fn reduced_word(&self, w: ElementId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != self.identity() {
            let i = self.left_desc[cur.index()].trailing_zeros() as usize;
            word.push(i);
            cur = self.left_mul(i, cur);
        }
        word
    }

    /// Reduced word with 1-based letters, the external representation.
    pub fn word_one_based(&self, w: ElementId) -> Vec<usize> {
        self.reduced_word(w).into_iter().map(|i| i + 1).collect()
    }

    /// The longest element of the parabolic subgroup `W_I`.
    pub fn longest_in(&self, subset: SimpleSubset) -> ElementId {
        let mut w = self.identity();
        while let Some(i) = subset.iter().find(|&i| !self.right_descents(w).contains(i)) {
            w = self.right_mul(w, i);
        }
        w
    }

    /// Elements of the parabolic subgroup `W_I`, in id order.
    pub fn parabolic_elements(&self, subset: SimpleSubset) -> Vec<ElementId> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        let mut stack = vec![self.identity()];
        seen.insert(0);
        while let Some(w) = stack.pop() {
            for i in subset.iter() {
                let v = self.right_mul(w, i);
                if !seen.put(v.index()) {
                    stack.push(v);
                }
            }
        }
        seen.ones().map(|k| ElementId(k as u32)).collect()
    }

    /// Bruhat order via the subword property on the canonical reduced word of `w`.
    pub fn bruhat_leq_subword(&self, u: ElementId, w: ElementId) -> bool {
        if self.length(u) > self.length(w) {
            return false;
        }
        let mut cur = u;
        for i in self.reduced_word(w) {
            if self.left_descents(cur).contains(i) {
                cur = self.left_mul(i, cur);
            }
        }
        cur == self.identity()
    }

    /// Rows `below[w] = {u : u <= w}`, when the group is small enough.
    pub fn bruhat_matrix(&self) -> Option<&[FixedBitSet]> {
        self.bruhat
            .get_or_init(|| (self.order() <= BRUHAT_MATRIX_LIMIT).then(|| self.build_bruhat()))
            .as_deref()
    }

    // {u <= s w'} = {x, s x : x <= w'} whenever s w' > w'.
    fn build_bruhat(&self) -> Vec<FixedBitSet> {
        let order = self.order();
        let mut rows: Vec<FixedBitSet> = Vec::with_capacity(order);
        let mut id_row = FixedBitSet::with_capacity(order);
        id_row.insert(0);
        rows.push(id_row);
        for w in 1..order {
            let w = ElementId(w as u32);
            let i = self.left_desc[w.index()].trailing_zeros() as usize;
            let shorter = self.left_mul(i, w);
            let mut row = rows[shorter.index()].clone();
            for x in rows[shorter.index()].ones() {
                row.insert(self.left_mul(i, ElementId(x as u32)).index());
            }
            rows.push(row);
        }
        rows
    }

    pub fn bruhat_leq(&self, u: ElementId, w: ElementId) -> bool {
        match self.bruhat_matrix() {
            Some(rows) => rows[w.index()].contains(u.index()),
            None => self.bruhat_leq_subword(u, w),
        }
    }

    /// True iff the W-orbit of `alpha_a` lies in the subsystem of `subset`.
    pub fn w_orbit_in_subsystem(&self, a: usize, subset: SimpleSubset) -> bool {
        let alpha = self.rs.simple(a);
        self.elements()
            .all(|w| self.rs.in_sub_system(self.act(w, alpha), subset))
    }
}

fn descents_of_inverse(perm: &[u16], npos: usize, rank: usize) -> u32 {
    // w^{-1}(alpha_i) < 0 iff alpha_i = w(beta) for a negative beta.
    perm[npos..]
        .iter()
        .filter(|&&img| (img as usize) < rank)
        .fold(0, |m, &img| m | 1 << img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::generate(RootSystem::from_type_str(t).unwrap())
    }

    #[test]
    fn orders() {
        for (t, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("A1xA1", 4),
            ("B2xA1", 16),
        ] {
            let g = group(t);
            assert_eq!(g.order(), n, "{t}");
            assert_eq!(g.length(g.longest()), g.root_system().num_positive(), "{t}");
        }
    }

    #[test]
    fn ids_follow_length_then_word() {
        let g = group("B3");
        let words: Vec<(usize, Vec<usize>)> = g
            .elements()
            .map(|w| (g.length(w), g.reduced_word(w)))
            .collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(
            words.iter().collect::<std::collections::HashSet<_>>().len(),
            g.order()
        );
    }

    #[test]
    fn group_operations() {
        let g = group("A2");
        let s1 = g.simple_reflection(0);
        let s2 = g.simple_reflection(1);
        let e = g.identity();
        for w in g.elements() {
            assert_eq!(g.multiply(e, w), w);
            assert_eq!(g.multiply(w, g.inverse(w)), e);
        }
        // s1(alpha_2) = alpha_1 + alpha_2
        let rs = g.root_system();
        let a12 = rs.index_of(&crate::rootsys::Root(vec![1, 1])).unwrap();
        assert_eq!(g.act(s1, rs.simple(1)), a12);
        let s1s2 = g.multiply(s1, s2);
        assert_eq!(g.inverse(s1s2), g.multiply(s2, s1));
        assert_eq!(g.word_one_based(s1s2), vec![1, 2]);
    }

    #[test]
    fn longest_in_examples() {
        let g = group("A2");
        assert_eq!(g.longest_in(SimpleSubset::empty()), g.identity());
        let w0 = g.longest_in(SimpleSubset::full(2));
        assert_eq!(w0, g.longest());
        assert_eq!(g.word_one_based(w0), vec![1, 2, 1]);
        assert_eq!(g.length(w0), 3);
        assert_eq!(
            g.longest_in(SimpleSubset::from_mask(1)),
            g.simple_reflection(0)
        );
    }

    #[test]
    fn longest_in_matches_exhaustive_search() {
        for t in ["A3", "B3", "G2", "A2xA1"] {
            let g = group(t);
            for s in SimpleSubset::all(g.rank()) {
                let elems = g.parabolic_elements(s);
                let max = elems.iter().map(|&w| g.length(w)).max().unwrap();
                let tops: Vec<_> = elems.iter().filter(|&&w| g.length(w) == max).collect();
                assert_eq!(tops, vec![&g.longest_in(s)], "{t} {s}");
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        let g = group("A2");
        assert!(g.reduced_word(g.identity()).is_empty());
        assert_eq!(g.word_one_based(g.simple_reflection(0)), vec![1]);
        for w in g.elements() {
            assert_eq!(g.from_word(&g.reduced_word(w)), w);
            assert_eq!(g.reduced_word(w).len(), g.length(w));
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A2");
        let s1 = g.simple_reflection(0);
        let s2 = g.simple_reflection(1);
        let s1s2 = g.multiply(s1, s2);
        for w in g.elements() {
            assert!(g.bruhat_leq(g.identity(), w));
        }
        assert!(g.bruhat_leq(s1, s1s2));
        assert!(g.bruhat_leq_subword(s1, s1s2));
        assert!(!g.bruhat_leq(s1, s2));
        assert!(!g.bruhat_leq_subword(s1, s2));
    }

    #[test]
    fn orbit_in_subsystem_examples() {
        let g = group("A2");
        assert!(g.w_orbit_in_subsystem(0, SimpleSubset::full(2)));
        assert!(!g.w_orbit_in_subsystem(0, SimpleSubset::from_mask(1)));
        let g = group("A1xA1");
        assert!(g.w_orbit_in_subsystem(0, SimpleSubset::from_mask(1)));
    }

    #[test]
    fn length_is_inversion_count() {
        let g = group("C3");
        let rs = g.root_system();
        for w in g.elements() {
            let inv = (0..rs.num_positive())
                .filter(|&k| !rs.is_positive(g.act(w, k)))
                .count();
            assert_eq!(inv, g.length(w));
            assert_eq!(g.length(g.inverse(w)), g.length(w));
            for k in 0..rs.num_roots() {
                assert_eq!(g.act(w, rs.negate(k)), rs.negate(g.act(w, k)));
            }
        }
    }
}
