//! Minimal coset representatives `W^I`, double cosets `^J W^I`, and Schubert
//! cell dimensions on `G/P_I`.

use crate::error::{Error, Result};
use crate::rootsys::SimpleSubset;
use crate::weyl::{ElementId, WeylGroup};

/// The quotient `W / W_I` with its minimal representatives.
#[derive(Debug)]
pub struct QuotientData<'g> {
    g: &'g WeylGroup,
    subset: SimpleSubset,
    reps: Vec<ElementId>,
    /// `canon[w]` is the minimal representative of `w W_I`.
    canon: Vec<ElementId>,
    dim_x: usize,
}

impl<'g> QuotientData<'g> {
    /// `W^I = {w : w(alpha_i) > 0 for all i in I}`.
    pub fn new(g: &'g WeylGroup, subset: SimpleSubset) -> QuotientData<'g> {
        let reps: Vec<ElementId> = g.elements().filter(|&w| is_min_rep(g, w, subset)).collect();
        let canon = g
            .elements()
            .map(|w| {
                let mut cur = w;
                while let Some(i) = subset.iter().find(|&i| g.right_descents(cur).contains(i)) {
                    cur = g.right_mul(cur, i);
                }
                cur
            })
            .collect();
        let rs = g.root_system();
        QuotientData {
            g,
            subset,
            reps,
            canon,
            dim_x: rs.num_positive() - rs.num_positive_in(subset),
        }
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.g
    }

    pub fn subset(&self) -> SimpleSubset {
        self.subset
    }

    /// Sorted ids of `W^I`.
    pub fn reps(&self) -> &[ElementId] {
        &self.reps
    }

    /// `dim G/P_I = |Phi^+| - |Phi_I^+|`.
    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn is_rep(&self, w: ElementId) -> bool {
        self.canon[w.index()] == w
    }

    pub fn canonicalize(&self, w: ElementId) -> ElementId {
        self.canon[w.index()]
    }

    fn require_rep(&self, w: ElementId) -> Result<()> {
        if self.is_rep(w) {
            Ok(())
        } else {
            Err(Error::NotMinimalRep)
        }
    }

    /// `w -> w_0 w w_I`, an involution of `W^I`.
    pub fn involution_image(&self, w: ElementId) -> Result<ElementId> {
        self.require_rep(w)?;
        let g = self.g;
        let image = g.multiply(g.multiply(g.longest(), w), g.longest_in(self.subset));
        if !self.is_rep(image) {
            return Err(Error::CheckFailed(format!("w0 w wI = {image} left W^I")));
        }
        Ok(image)
    }

    /// `(dim C_w, dim C^-_w)` by counting tangent weights.
    pub fn cell_dims(&self, w: ElementId) -> Result<(usize, usize)> {
        self.require_rep(w)?;
        let g = self.g;
        let rs = g.root_system();
        let winv = g.inverse(w);
        let outside_p = |k: usize| {
            let img = g.act(winv, k);
            !rs.is_positive(img) && !rs.in_sub_system(img, self.subset)
        };
        let npos = rs.num_positive();
        let plus = (0..npos).filter(|&k| outside_p(k)).count();
        let minus = (npos..rs.num_roots()).filter(|&k| outside_p(k)).count();
        if plus != g.length(w) || plus + minus != self.dim_x {
            return Err(Error::CheckFailed(format!(
                "cell dimensions ({plus}, {minus}) disagree with length {} and dim X {}",
                g.length(w),
                self.dim_x
            )));
        }
        Ok((plus, minus))
    }
}

fn is_min_rep(g: &WeylGroup, w: ElementId, subset: SimpleSubset) -> bool {
    let rs = g.root_system();
    subset
        .iter()
        .all(|i| rs.is_positive(g.act(w, rs.simple(i))))
}

pub fn min_reps(g: &WeylGroup, subset: SimpleSubset) -> QuotientData<'_> {
    QuotientData::new(g, subset)
}

/// `^J W^I = {w : w(I) > 0 and w^{-1}(J) > 0}`, sorted by id.
pub fn double_min_reps(g: &WeylGroup, j: SimpleSubset, i: SimpleSubset) -> Vec<ElementId> {
    let rs = g.root_system();
    g.elements()
        .filter(|&w| {
            let winv = g.inverse(w);
            is_min_rep(g, w, i) && j.iter().all(|a| rs.is_positive(g.act(winv, rs.simple(a))))
        })
        .collect()
}

/// The unique element of maximal length in `W_I w W_J`.
///
/// # Panics
///
/// If the double coset has more than one element of maximal length.
pub fn double_max_rep(g: &WeylGroup, j: SimpleSubset, i: SimpleSubset, w: ElementId) -> ElementId {
    let wi = g.parabolic_elements(i);
    let wj = g.parabolic_elements(j);
    let mut coset: Vec<ElementId> = wi
        .iter()
        .flat_map(|&a| wj.iter().map(move |&b| g.multiply(g.multiply(a, w), b)))
        .collect();
    coset.sort_unstable();
    coset.dedup();
    let max = coset.iter().map(|&x| g.length(x)).max().unwrap_or(0);
    let tops: Vec<ElementId> = coset.into_iter().filter(|&x| g.length(x) == max).collect();
    assert_eq!(
        tops.len(),
        1,
        "double coset has {} longest elements",
        tops.len()
    );
    tops[0]
}
