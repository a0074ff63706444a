//! Brute-force routes, deliberately independent of the production paths in
//! `weyl` and `cosets`. They drive `sweep` and the test suites.

use fixedbitset::FixedBitSet;

use crate::rootsys::SimpleSubset;
use crate::weyl::{ElementId, WeylGroup};

/// Partition of `W` into double cosets `W_J w W_I`, each sorted by id; the
/// list is ordered by smallest member.
pub fn double_cosets(g: &WeylGroup, j: SimpleSubset, i: SimpleSubset) -> Vec<Vec<ElementId>> {
    let wj = g.parabolic_elements(j);
    let wi = g.parabolic_elements(i);
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut out = Vec::new();
    for w in g.elements() {
        if seen.contains(w.index()) {
            continue;
        }
        let mut coset: Vec<ElementId> = wj
            .iter()
            .flat_map(|&a| wi.iter().map(move |&b| g.multiply(g.multiply(a, w), b)))
            .collect();
        coset.sort_unstable();
        coset.dedup();
        coset.iter().for_each(|x| seen.insert(x.index()));
        out.push(coset);
    }
    out
}

/// Length-minimal element of every double coset, sorted by id.
pub fn double_min_reps_brute(g: &WeylGroup, j: SimpleSubset, i: SimpleSubset) -> Vec<ElementId> {
    let mut reps: Vec<ElementId> = double_cosets(g, j, i)
        .iter()
        .map(|c| {
            *c.iter()
                .min_by_key(|&&x| g.length(x))
                .expect("cosets are nonempty")
        })
        .collect();
    reps.sort_unstable();
    reps
}

/// Length-minimal element of each left coset `w W_I`, sorted by id.
pub fn min_reps_brute(g: &WeylGroup, i: SimpleSubset) -> Vec<ElementId> {
    double_min_reps_brute(g, SimpleSubset::empty(), i)
}

/// All reflections `x s_i x^{-1}`, sorted and deduplicated.
pub fn reflections(g: &WeylGroup) -> Vec<ElementId> {
    let mut t: Vec<ElementId> = g
        .elements()
        .flat_map(|x| {
            (0..g.rank())
                .map(move |i| g.multiply(g.multiply(x, g.simple_reflection(i)), g.inverse(x)))
        })
        .collect();
    t.sort_unstable();
    t.dedup();
    t
}

/// Bruhat order as the reflexive-transitive closure of the covers
/// `u -> t u` with `l(t u) = l(u) + 1`. Row `w` holds `{u : u <= w}`.
pub fn bruhat_by_covers(g: &WeylGroup) -> Vec<FixedBitSet> {
    let refl = reflections(g);
    let mut preds: Vec<Vec<ElementId>> = vec![Vec::new(); g.order()];
    for u in g.elements() {
        for &t in &refl {
            let v = g.multiply(t, u);
            if g.length(v) == g.length(u) + 1 {
                preds[v.index()].push(u);
            }
        }
    }
    let mut order: Vec<ElementId> = g.elements().collect();
    order.sort_by_key(|&w| g.length(w));
    let mut rows = vec![FixedBitSet::with_capacity(g.order()); g.order()];
    for v in order {
        let mut row = FixedBitSet::with_capacity(g.order());
        row.insert(v.index());
        for &u in &preds[v.index()] {
            row.union_with(&rows[u.index()]);
        }
        rows[v.index()] = row;
    }
    rows
}

/// Faithfulness read off from W-orbits: no simple root has its whole orbit
/// inside `Phi_I`.
pub fn faithful_by_orbits(g: &WeylGroup, i: SimpleSubset) -> bool {
    (0..g.rank()).all(|a| !g.w_orbit_in_subsystem(a, i))
}
