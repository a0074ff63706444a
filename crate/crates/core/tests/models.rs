//! Cross-checks against the concrete models of types A and B: roots as
//! vectors `e_i - e_j` / `+-e_i +- e_j`, `+-e_i`, Weyl groups as (signed)
//! permutations.

use std::collections::BTreeSet;

use wonderdiag::{Root, RootSystem, WeylGroup};

/// Simple-root coordinates of `e_i - e_j` (0-based, `i < j`) in `A_n`.
fn a_root(n: usize, i: usize, j: usize) -> Root {
    let mut v = vec![0; n];
    for c in &mut v[i..j] {
        *c = 1;
    }
    Root(v)
}

fn a_positive_model(n: usize) -> BTreeSet<Root> {
    (0..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| a_root(n, i, j)))
        .collect()
}

/// Permutation of `{0..n}` for a word, `s_i = (i, i+1)`, composed right to left.
fn permutation(n: usize, word: &[usize]) -> Vec<usize> {
    (0..=n)
        .map(|x| {
            word.iter().rev().fold(x, |x, &i| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
        })
        .collect()
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| p[a] > p[b])
        .count()
}

/// Tableau criterion for Bruhat order on the symmetric group.
fn perm_bruhat_leq(u: &[usize], w: &[usize]) -> bool {
    let m = u.len();
    (0..m).all(|i| {
        (0..m).all(|k| {
            let cu = u[..=i].iter().filter(|&&x| x >= k).count();
            let cw = w[..=i].iter().filter(|&&x| x >= k).count();
            cu <= cw
        })
    })
}

#[test]
fn type_a_positive_roots_match_model() {
    for n in 1..=6 {
        let rs = RootSystem::from_type_str(&format!("A{n}")).unwrap();
        let generated: BTreeSet<Root> = rs.roots()[..rs.num_positive()].iter().cloned().collect();
        assert_eq!(generated, a_positive_model(n), "A{n}");
        assert_eq!(rs.num_positive(), n * (n + 1) / 2);
    }
}

#[test]
fn type_a_group_matches_symmetric_group() {
    for n in 1..=5 {
        let rs = RootSystem::from_type_str(&format!("A{n}")).unwrap();
        let g = WeylGroup::generate(rs);
        let fact: usize = (1..=n + 1).product();
        assert_eq!(g.order(), fact);
        let perms: Vec<Vec<usize>> = g
            .elements()
            .map(|w| permutation(n, &g.reduced_word(w)))
            .collect();
        assert_eq!(perms.iter().collect::<BTreeSet<_>>().len(), fact);
        let rs = g.root_system();
        for w in g.elements() {
            let p = &perms[w.index()];
            assert_eq!(g.length(w), inversions(p));
            // w(e_i - e_j) = e_{p(i)} - e_{p(j)}
            for i in 0..=n {
                for j in i + 1..=n {
                    let k = rs.index_of(&a_root(n, i, j)).unwrap();
                    let (a, b) = (p[i], p[j]);
                    let expected = if a < b {
                        a_root(n, a, b)
                    } else {
                        -&a_root(n, b, a)
                    };
                    assert_eq!(rs.root(g.act(w, k)), &expected);
                }
            }
        }
        if n <= 4 {
            for u in g.elements() {
                for w in g.elements() {
                    assert_eq!(
                        g.bruhat_leq(u, w),
                        perm_bruhat_leq(&perms[u.index()], &perms[w.index()]),
                        "A{n}"
                    );
                }
            }
        }
    }
}

/// Type B_n in the orthonormal basis: alpha_i = e_i - e_{i+1}, alpha_n = e_n.
fn b_to_simple(v: &[i32]) -> Vec<i32> {
    // e_k = alpha_k + ... + alpha_n, so the coefficient of alpha_i is the
    // partial sum v_1 + ... + v_i.
    v.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

#[test]
fn type_b_roots_match_model() {
    for n in 2..=5 {
        let mut model = BTreeSet::new();
        for i in 0..n {
            for sign in [1, -1] {
                let mut v = vec![0; n];
                v[i] = sign;
                model.insert(Root(b_to_simple(&v)));
            }
            for j in i + 1..n {
                for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![0; n];
                    v[i] = a;
                    v[j] = b;
                    model.insert(Root(b_to_simple(&v)));
                }
            }
        }
        let rs = RootSystem::from_type_str(&format!("B{n}")).unwrap();
        let generated: BTreeSet<Root> = rs.roots().iter().cloned().collect();
        assert_eq!(generated, model, "B{n}");
        let g = WeylGroup::generate(rs);
        let expected: usize = (1usize << n) * (1..=n).product::<usize>();
        assert_eq!(g.order(), expected);
    }
}

#[test]
fn classical_orders() {
    for (t, order) in [
        ("C3", 48),
        ("C4", 384),
        ("D4", 192),
        ("D5", 1920),
        ("F4", 1152),
        ("G2", 12),
        ("E6", 51840),
    ] {
        let rs = RootSystem::from_type_str(t).unwrap();
        assert_eq!(rs.dynkin().weyl_order(), order as u128);
        let g = WeylGroup::generate(rs);
        assert_eq!(g.order(), order, "{t}");
    }
}
