//! Exhaustive invariant sweep over every faithful `I` and every `J` of a type.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cosets::{double_min_reps, QuotientData};
use crate::degen::{components_with, fixed_points_with, weight_set_with, FiberComponent};
use crate::oracle;
use crate::rootsys::SimpleSubset;
use crate::weyl::WeylGroup;

/// Counterexamples kept per check.
const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub counterexamples: Vec<Value>,
}

impl CheckSummary {
    fn new(name: &'static str) -> CheckSummary {
        CheckSummary {
            name,
            cases: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, payload: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(payload());
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub order: usize,
    pub faithful_subsets: usize,
    pub orbit_subsets: usize,
    pub failures: usize,
    pub checks: Vec<CheckSummary>,
}

impl SweepReport {
    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NAMES: [&str; 11] = [
    "faithful_criterion",
    "equidimensional",
    "double_coset_count",
    "reducibility",
    "monotone_refinement",
    "closed_fiber",
    "fixed_point_unique",
    "weight_set_identity",
    "weight_set_coverage",
    "trivial_stabilizer_intersection",
    "component_error",
];

pub fn sweep(g: &WeylGroup) -> SweepReport {
    let rs = g.root_system();
    let rank = rs.rank();
    let full = SimpleSubset::full(rank);
    let subsets = SimpleSubset::all(rank);
    let words = |w| g.word_one_based(w);
    let mut checks: Vec<CheckSummary> = CHECK_NAMES.iter().map(|n| CheckSummary::new(n)).collect();
    let idx = |name: &str| CHECK_NAMES.iter().position(|&n| n == name).unwrap();

    let mut faithful = Vec::new();
    for &i in &subsets {
        let by_diagram = rs.is_faithful(i);
        let by_orbits = oracle::faithful_by_orbits(g, i);
        checks[idx("faithful_criterion")].record(
            by_diagram == by_orbits,
            || json!({"I": i, "diagram": by_diagram, "orbits": by_orbits}),
        );
        if by_diagram {
            faithful.push(i);
        }
    }

    for &i in &faithful {
        let q = QuotientData::new(g, i);
        let dim_x = q.dim_x();
        let mut counts = std::collections::HashMap::new();

        for &j in &subsets {
            let comps: Vec<FiberComponent> = match components_with(&q, j) {
                Ok(c) => c,
                Err(e) => {
                    checks[idx("component_error")]
                        .record(false, || json!({"I": i, "J": j, "error": e.to_string()}));
                    continue;
                }
            };
            checks[idx("component_error")].record(true, || Value::Null);
            for c in &comps {
                checks[idx("equidimensional")].record(c.total_dim == dim_x, || {
                    json!({"I": i, "J": j, "w": words(c.w), "total": c.total_dim, "dim_x": dim_x})
                });
            }
            let brute = oracle::double_min_reps_brute(g, j, i);
            let ws: Vec<_> = comps.iter().map(|c| c.w).collect();
            checks[idx("double_coset_count")].record(
                ws == brute,
                || json!({"I": i, "J": j, "components": ws.len(), "double_cosets": brute.len()}),
            );
            checks[idx("reducibility")].record(
                (comps.len() == 1) == (j == full),
                || json!({"I": i, "J": j, "components": comps.len()}),
            );
            if j.is_empty() {
                let pairs: Vec<_> = comps.iter().map(FiberComponent::schubert_pair).collect();
                let expected: Vec<_> = q.reps().iter().map(|&w| (w, w)).collect();
                checks[idx("closed_fiber")].record(pairs == expected, || {
                    json!({"I": i, "pairs": pairs.iter().map(|&(a, b)| (words(a), words(b))).collect::<Vec<_>>()})
                });
            }
            counts.insert(j, comps.len());
        }

        for &j in &subsets {
            for k in j.complement(rank).iter() {
                let bigger = j.with(k);
                let (Some(&a), Some(&b)) = (counts.get(&j), counts.get(&bigger)) else {
                    continue;
                };
                checks[idx("monotone_refinement")].record(
                    a >= b,
                    || json!({"I": i, "J": j, "J_plus": bigger, "counts": [a, b]}),
                );
            }
        }

        let mut covered = SimpleSubset::empty();
        let mut common: Option<Vec<bool>> = None;
        let winv_positive = |w| {
            let winv = g.inverse(w);
            (0..rs.num_positive())
                .map(|k| {
                    let img = g.act(winv, k);
                    rs.is_positive(img) || rs.in_sub_system(img, i)
                })
                .collect::<Vec<bool>>()
        };
        for &w in q.reps() {
            let fixed = fixed_points_with(&q, w);
            checks[idx("fixed_point_unique")].record(fixed == vec![(w, w)], || {
                json!({"I": i, "w": words(w), "fixed": fixed.iter().map(|&(a, b)| (words(a), words(b))).collect::<Vec<_>>()})
            });

            match weight_set_with(&q, w) {
                Ok(set) => {
                    checks[idx("weight_set_identity")].record(
                        set.len() == dim_x,
                        || json!({"I": i, "w": words(w), "size": set.len(), "dim_x": dim_x}),
                    );
                    for k in set {
                        let pos = rs.negate(k);
                        if pos < rank {
                            covered = covered.with(pos);
                        }
                    }
                }
                Err(e) => checks[idx("weight_set_identity")].record(
                    false,
                    || json!({"I": i, "w": words(w), "error": e.to_string()}),
                ),
            }

            let mask = winv_positive(w);
            common = Some(match common {
                None => mask,
                Some(prev) => prev.iter().zip(&mask).map(|(a, b)| *a && *b).collect(),
            });
        }
        checks[idx("weight_set_coverage")]
            .record(covered == full, || json!({"I": i, "covered": covered}));
        let stuck: Vec<usize> = common
            .unwrap_or_default()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| k)
            .collect();
        checks[idx("trivial_stabilizer_intersection")].record(stuck.is_empty(), || {
            json!({"I": i, "roots": stuck.iter().map(|&k| rs.root(k).clone()).collect::<Vec<_>>()})
        });

        debug_assert_eq!(
            double_min_reps(g, SimpleSubset::empty(), i),
            q.reps().to_vec()
        );
    }

    let failures = checks.iter().map(|c| c.failures).sum();
    SweepReport {
        ty: rs.dynkin().to_string(),
        order: g.order(),
        faithful_subsets: faithful.len(),
        orbit_subsets: subsets.len(),
        failures,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    #[test]
    fn a2_and_g2_are_clean() {
        for t in ["A2", "G2"] {
            let g = WeylGroup::generate(RootSystem::from_type_str(t).unwrap());
            let report = sweep(&g);
            assert_eq!(report.failures, 0, "{report:?}");
        }
        let g = WeylGroup::generate(RootSystem::from_type_str("A2").unwrap());
        let report = sweep(&g);
        assert_eq!((report.faithful_subsets, report.orbit_subsets), (3, 4));
        assert_eq!(report.check("double_coset_count").unwrap().cases, 12);
    }
}
