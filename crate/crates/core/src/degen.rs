//! Irreducible components of the degenerations of the diagonal in
//! `G/P x G/P`, one family per boundary orbit `O_J`.
//!
//! For `w` in `^J W^I` the component is `Z_w = diag(L_J) . (w_J X^-_{w_J w} x X_w)`.
//! The opposite Schubert variety is indexed by the minimal representative of
//! `w_J w W_I`, since `w_J w` itself need not lie in `W^I`.

use fixedbitset::FixedBitSet;

use crate::cosets::{double_min_reps, QuotientData};
use crate::error::{Error, Result};
use crate::rootsys::{RootIndex, SimpleSubset};
use crate::weyl::{ElementId, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberComponent {
    /// Element of `^J W^I`; `X_w` is the second factor.
    pub w: ElementId,
    /// Minimal representative of `w_J w W_I`; `X^-_left` is the first factor.
    pub left: ElementId,
    /// `dim L_J / (L_J cap wPw^{-1})`.
    pub levi_quotient_dim: usize,
    /// `dim C^-_left`.
    pub xminus_dim: usize,
    /// `dim C_w`.
    pub x_dim: usize,
    pub total_dim: usize,
}

impl FiberComponent {
    pub fn schubert_pair(&self) -> (ElementId, ElementId) {
        (self.left, self.w)
    }
}

fn require_faithful(g: &WeylGroup, i: SimpleSubset) -> Result<()> {
    let rs = g.root_system();
    rs.check_subset(i)?;
    if rs.is_faithful(i) {
        Ok(())
    } else {
        Err(Error::NotFaithful(i))
    }
}

/// Components of the fiber over `x_J`, for `G/P_I`.
pub fn fiber_components(
    g: &WeylGroup,
    i: SimpleSubset,
    j: SimpleSubset,
) -> Result<Vec<FiberComponent>> {
    require_faithful(g, i)?;
    g.root_system().check_subset(j)?;
    let q = QuotientData::new(g, i);
    components_with(&q, j)
}

pub(crate) fn components_with(
    q: &QuotientData<'_>,
    j: SimpleSubset,
) -> Result<Vec<FiberComponent>> {
    let g = q.group();
    let rs = g.root_system();
    let i = q.subset();
    let w_j = g.longest_in(j);
    let levi = rs.sub_system(j);
    double_min_reps(g, j, i)
        .into_iter()
        .map(|w| {
            let left = q.canonicalize(g.multiply(w_j, w));
            let winv = g.inverse(w);
            let levi_quotient_dim = levi
                .iter()
                .filter(|&&k| {
                    let img = g.act(winv, k);
                    !rs.is_positive(img) && !rs.in_sub_system(img, i)
                })
                .count();
            let (_, xminus_dim) = q.cell_dims(left)?;
            let (x_dim, _) = q.cell_dims(w)?;
            Ok(FiberComponent {
                w,
                left,
                levi_quotient_dim,
                xminus_dim,
                x_dim,
                total_dim: levi_quotient_dim + xminus_dim + x_dim,
            })
        })
        .collect()
}

pub fn component_count(g: &WeylGroup, i: SimpleSubset, j: SimpleSubset) -> Result<usize> {
    require_faithful(g, i)?;
    g.root_system().check_subset(j)?;
    Ok(double_min_reps(g, j, i).len())
}

/// Schubert pairs `(w, w)` for `w` in `W^I`: the fiber over the closed orbit
/// is the union of `X^-_w x X_w`.
pub fn closed_fiber(g: &WeylGroup, i: SimpleSubset) -> Result<Vec<(ElementId, ElementId)>> {
    require_faithful(g, i)?;
    let q = QuotientData::new(g, i);
    Ok(q.reps().iter().map(|&w| (w, w)).collect())
}

/// `T x T`-fixed points `(e_u, e_v)` of `Z_0 cap (X_w x X^-_w)`:
/// pairs `(u, v)` in `W^I x W^I` with `u <= w <= v` for which some `x` in
/// `W^I` has `x <= u` and `v <= x`.
pub fn fixed_point_profile(
    g: &WeylGroup,
    i: SimpleSubset,
    w: ElementId,
) -> Result<Vec<(ElementId, ElementId)>> {
    require_faithful(g, i)?;
    let q = QuotientData::new(g, i);
    if !q.is_rep(w) {
        return Err(Error::NotMinimalRep);
    }
    Ok(fixed_points_with(&q, w))
}

pub(crate) fn fixed_points_with(q: &QuotientData<'_>, w: ElementId) -> Vec<(ElementId, ElementId)> {
    let g = q.group();
    let reps = q.reps();
    let mut out = Vec::new();
    if let Some(rows) = g.bruhat_matrix() {
        let mut rep_mask = FixedBitSet::with_capacity(g.order());
        reps.iter().for_each(|r| rep_mask.insert(r.index()));
        for &u in reps
            .iter()
            .filter(|&&u| rows[w.index()].contains(u.index()))
        {
            // {x in W^I : x <= u}
            let mut below_u = rows[u.index()].clone();
            below_u.intersect_with(&rep_mask);
            for &v in reps
                .iter()
                .filter(|&&v| rows[v.index()].contains(w.index()))
            {
                if below_u.ones().any(|x| rows[x].contains(v.index())) {
                    out.push((u, v));
                }
            }
        }
    } else {
        for &u in reps.iter().filter(|&&u| g.bruhat_leq(u, w)) {
            for &v in reps.iter().filter(|&&v| g.bruhat_leq(w, v)) {
                if reps
                    .iter()
                    .any(|&x| g.bruhat_leq(x, u) && g.bruhat_leq(v, x))
                {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

/// `Phi_w = Phi^- cap w(Phi - Phi_I)`, checked against `Phi^- - w(Phi_I)`.
///
/// `w` is first replaced by its minimal representative modulo `W_I`.
pub fn weight_set(g: &WeylGroup, i: SimpleSubset, w: ElementId) -> Result<Vec<RootIndex>> {
    g.root_system().check_subset(i)?;
    let q = QuotientData::new(g, i);
    weight_set_with(&q, w)
}

pub(crate) fn weight_set_with(q: &QuotientData<'_>, w: ElementId) -> Result<Vec<RootIndex>> {
    let g = q.group();
    let rs = g.root_system();
    let i = q.subset();
    let w = q.canonicalize(w);
    let winv = g.inverse(w);
    let negatives = rs.num_positive()..rs.num_roots();

    let first: Vec<RootIndex> = negatives
        .clone()
        .filter(|&k| !rs.in_sub_system(g.act(winv, k), i))
        .collect();

    let mut image_of_sub = FixedBitSet::with_capacity(rs.num_roots());
    for k in rs.sub_system(i) {
        image_of_sub.insert(g.act(w, k));
    }
    let second: Vec<RootIndex> = negatives.filter(|&k| !image_of_sub.contains(k)).collect();

    if first != second {
        return Err(Error::CheckFailed(format!(
            "weight sets differ for {w}: {first:?} vs {second:?}"
        )));
    }
    Ok(first)
}

/// Components for the full flag variety (`I` empty).
pub fn full_flag_fiber(g: &WeylGroup, j: SimpleSubset) -> Result<Vec<FiberComponent>> {
    fiber_components(g, SimpleSubset::empty(), j)
}
