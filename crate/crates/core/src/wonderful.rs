//! The `G x G`-orbits of the wonderful compactification, one per subset `J`
//! of simple roots.
//!
//! Dimensions are those of the adjoint group: `dim G = |Phi| + rank`, and
//! the connected center `C_J` of the Levi `L_J` has dimension `rank - |J|`.

use serde::Serialize;

use crate::rootsys::{DynkinType, RootIndex, RootSystem, SimpleSubset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDescriptor {
    #[serde(rename = "J")]
    pub j: SimpleSubset,
    /// Roots `alpha` with `<lambda_J, alpha> >= 0`, the roots of `P_J`.
    #[serde(skip)]
    pub parabolic_roots: Vec<RootIndex>,
    /// Roots with `<lambda_J, alpha> = 0`, the roots of `L_J`.
    #[serde(skip)]
    pub levi_roots: Vec<RootIndex>,
    pub levi: String,
    pub unipotent_count: usize,
    pub stab_dim: usize,
    pub orbit_dim: usize,
}

pub fn dim_g(rs: &RootSystem) -> usize {
    rs.num_roots() + rs.rank()
}

pub fn orbit(rs: &RootSystem, j: SimpleSubset) -> OrbitDescriptor {
    let pairing = |k: RootIndex| rs.lambda_pairing(j, rs.root(k));
    let parabolic_roots: Vec<RootIndex> =
        (0..rs.num_roots()).filter(|&k| pairing(k) >= 0).collect();
    let levi_roots: Vec<RootIndex> = (0..rs.num_roots()).filter(|&k| pairing(k) == 0).collect();
    let rank = rs.rank();
    let unipotent_count = rs.num_positive() - levi_roots.len() / 2;
    let dim_levi = levi_roots.len() + rank;
    let dim_center = rank - j.len();
    // R_u(P_J^-) x R_u(P_J), then diag(L_J)(C_J x C_J) which meets diag in diag(C_J).
    let stab_dim = 2 * unipotent_count + dim_levi + dim_center;
    OrbitDescriptor {
        j,
        levi: DynkinType::of_subdiagram(rs.cartan(), j).to_string(),
        parabolic_roots,
        levi_roots,
        unipotent_count,
        stab_dim,
        orbit_dim: 2 * dim_g(rs) - stab_dim,
    }
}

/// All `2^rank` orbits, ordered by `|J|` and then lexicographically.
pub fn orbit_lattice(rs: &RootSystem) -> Vec<OrbitDescriptor> {
    SimpleSubset::all(rs.rank())
        .into_iter()
        .map(|j| orbit(rs, j))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs("A2");
        assert_eq!(orbit(&a2, SimpleSubset::full(2)).orbit_dim, dim_g(&a2));
        assert_eq!(orbit(&rs("A1"), SimpleSubset::empty()).orbit_dim, 2);
        let o = orbit(&a2, SimpleSubset::from_mask(1));
        assert_eq!(o.orbit_dim, 7);
        assert_eq!(o.stab_dim + o.orbit_dim, 2 * dim_g(&a2));
        assert_eq!(o.levi, "A1");
        assert_eq!(o.levi_roots, a2.sub_system(SimpleSubset::from_mask(1)));
    }

    #[test]
    fn lattice_examples() {
        let dims =
            |t: &str| -> Vec<usize> { orbit_lattice(&rs(t)).iter().map(|o| o.orbit_dim).collect() };
        assert_eq!(dims("A1"), vec![2, 3]);
        assert_eq!(dims("A2"), vec![6, 7, 7, 8]);
        assert_eq!(orbit_lattice(&rs("B3")).len(), 8);
    }

    #[test]
    fn parabolic_and_levi_roots() {
        for t in ["A3", "B3", "G2", "D4"] {
            let r = rs(t);
            for o in orbit_lattice(&r) {
                assert!((0..r.num_positive()).all(|k| o.parabolic_roots.contains(&k)));
                let opposite: Vec<RootIndex> = o
                    .parabolic_roots
                    .iter()
                    .copied()
                    .filter(|&k| o.parabolic_roots.contains(&r.negate(k)))
                    .collect();
                assert_eq!(opposite, o.levi_roots);
                for k in 0..r.num_positive() {
                    let p = r.lambda_pairing(o.j, r.root(k));
                    if r.in_sub_system(k, o.j) {
                        assert_eq!(p, 0);
                    } else {
                        assert!(p > 0);
                    }
                }
            }
        }
    }
}
