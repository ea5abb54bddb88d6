use proptest::prelude::*;

use super::*;
use crate::matroid::connectivity::{connectivity, k_separations, Connectivity};
use crate::matroid::iso::{is_isomorphic, is_isomorphic_circuits};
use crate::matroid::minor::{apply_minor, has_minor};

fn m(labels: &[&str], rows: &[&[u8]]) -> BinaryMatroid {
    let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
    let matrix = Gf2Matrix::from_rows(&rows).unwrap();
    let labels = labels.iter().map(|s| s.to_string()).collect();
    BinaryMatroid::new(labels, matrix).unwrap()
}

fn u23() -> BinaryMatroid {
    m(&["a", "b", "c"], &[&[1, 0, 1], &[0, 1, 1]])
}

/// Cycle matroid of K4 on vertices 1..4, written down directly.
fn k4() -> BinaryMatroid {
    m(
        &["e12", "e13", "e14", "e23", "e24", "e34"],
        &[
            &[1, 1, 1, 0, 0, 0],
            &[1, 0, 0, 1, 1, 0],
            &[0, 1, 0, 1, 0, 1],
        ],
    )
}

/// All seven nonzero vectors of GF(2)^3.
fn fano() -> BinaryMatroid {
    m(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[
            &[1, 0, 0, 1, 1, 0, 1],
            &[0, 1, 0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 1],
        ],
    )
}

fn labels_of(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

// Brute-force cocircuits: minimal sets whose removal drops the rank.
fn brute_cocircuits(m: &BinaryMatroid) -> Vec<u64> {
    let n = m.len();
    let full = (1u64 << n) - 1;
    let r = m.rank();
    let mut drops: Vec<u64> = (1..=full)
        .filter(|&c| m.rank_mask(full & !c) < r)
        .collect();
    drops.sort_by(|&a, &b| mask_cmp(a, b));
    minimal_sets(drops)
}

fn subsets_agree(
    a: &BinaryMatroid,
    b: &BinaryMatroid,
    map: &[(String, String)],
) -> bool {
    let n = a.len();
    let to_b: Vec<usize> = (0..n)
        .map(|i| {
            let (_, t) = map.iter().find(|(s, _)| s == &a.elements()[i]).unwrap();
            b.position(t).unwrap()
        })
        .collect();
    (0..1u64 << n).all(|mask| {
        let image: u64 = BitIter(mask).map(|i| 1u64 << to_b[i]).sum();
        a.rank_mask(mask) == b.rank_mask(image)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_iso(a: &BinaryMatroid, b: &BinaryMatroid) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    permutations(n).into_iter().any(|p| {
        (0..1u64 << n).all(|mask| {
            let image: u64 = BitIter(mask).map(|i| 1u64 << p[i]).sum();
            a.rank_mask(mask) == b.rank_mask(image)
        })
    })
}

fn brute_minor(a: &BinaryMatroid, b: &BinaryMatroid) -> bool {
    if a.len() == b.len() {
        return brute_iso(a, b);
    }
    if a.len() < b.len() {
        return false;
    }
    a.elements().iter().any(|e| {
        let one = std::slice::from_ref(e);
        brute_minor(&a.delete(one).unwrap(), b)
            || brute_minor(&a.contract(one).unwrap(), b)
    })
}

fn small_matroid() -> impl Strategy<Value = BinaryMatroid> {
    (2usize..=3, 4usize..=6).prop_flat_map(|(r, n)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), r)
            .prop_map(move |bits| {
                let rows: Vec<Vec<u8>> = bits
                    .iter()
                    .map(|row| row.iter().map(|&b| b as u8).collect())
                    .collect();
                let labels = (0..n).map(|i| format!("x{i}")).collect();
                BinaryMatroid::new(labels, Gf2Matrix::from_rows(&rows).unwrap())
                    .unwrap()
            })
    })
}

#[test]
fn combinations_are_lexicographic() {
    let got: Vec<u64> = combinations(4, 2).collect();
    assert_eq!(got, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
    assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![0]);
    assert_eq!(combinations(2, 3).count(), 0);
}

#[test]
fn mask_order_is_size_then_index_sequence() {
    let mut v = vec![0b1001u64, 0b0110, 0b0001, 0b0111];
    v.sort_by(|&a, &b| mask_cmp(a, b));
    assert_eq!(v, vec![0b0001, 0b1001, 0b0110, 0b0111]);
}

#[test]
fn u23_circuits() {
    assert_eq!(u23().circuits(20).unwrap(), vec![labels_of(&["a", "b", "c"])]);
}

#[test]
fn k4_circuit_and_cocircuit_counts() {
    let k4 = k4();
    let circuits = k4.circuits(20).unwrap();
    assert_eq!(circuits.len(), 7);
    let sizes: Vec<usize> = circuits.iter().map(|c| c.len()).collect();
    assert_eq!(sizes, vec![3, 3, 3, 3, 4, 4, 4]);
    // The triangle on vertices {1,2,3} comes first in the fixed order.
    assert_eq!(circuits[0], labels_of(&["e12", "e13", "e23"]));
    let cocircuits = k4.cocircuits(20).unwrap();
    assert_eq!(cocircuits.len(), 7);
    let sizes: Vec<usize> = cocircuits.iter().map(|c| c.len()).collect();
    assert_eq!(sizes, vec![3, 3, 3, 3, 4, 4, 4]);
}

#[test]
fn fano_has_fourteen_circuits() {
    let f = fano();
    let sizes: Vec<usize> =
        f.circuits(20).unwrap().iter().map(|c| c.len()).collect();
    assert_eq!(sizes, [vec![3; 7], vec![4; 7]].concat());
}

#[test]
fn cocircuits_match_rank_drop_definition() {
    for m in [u23(), k4(), fano()] {
        assert_eq!(m.cocircuit_masks(20).unwrap(), brute_cocircuits(&m));
    }
}

#[test]
fn dual_is_an_involution() {
    for m in [u23(), k4(), fano()] {
        let dd = m.dual().dual();
        assert_eq!(dd, m);
        assert_eq!(m.rank() + m.dual().rank(), m.len());
    }
}

#[test]
fn deletion_and_contraction_swap_under_duality() {
    let k4 = k4();
    for x in [vec!["e12".to_string()], labels_of(&["e13", "e24"])] {
        assert_eq!(k4.delete(&x).unwrap().dual(), k4.dual().contract(&x).unwrap());
        assert_eq!(k4.contract(&x).unwrap().dual(), k4.dual().delete(&x).unwrap());
    }
}

#[test]
fn contraction_rank_identity() {
    let f = fano();
    for x in [
        labels_of(&["a"]),
        labels_of(&["a", "b"]),
        labels_of(&["a", "d"]),
        labels_of(&["a", "b", "c", "g"]),
    ] {
        let drop = f.rank_subset(&x).unwrap();
        assert_eq!(f.contract(&x).unwrap().rank(), f.rank() - drop);
    }
}

#[test]
fn loops_and_coloops() {
    let m = m(
        &["z", "a", "b", "k"],
        &[&[0, 1, 0, 0], &[0, 0, 1, 1]],
    );
    assert_eq!(m.loop_elements(), vec!["z".to_string()]);
    assert!(m.is_coloop("a").unwrap());
    assert!(!m.is_coloop("b").unwrap());
    // A loop is its own circuit and contracts like a deletion.
    assert_eq!(m.circuits(20).unwrap()[0], labels_of(&["z"]));
    let z = labels_of(&["z"]);
    assert_eq!(m.contract(&z).unwrap(), m.delete(&z).unwrap());
}

#[test]
fn direct_sum_concatenates_circuits() {
    let a = u23();
    let b = m(&["p", "q"], &[&[1, 1]]);
    let sum = a.direct_sum(&b).unwrap();
    assert_eq!(sum.rank(), a.rank() + b.rank());
    assert_eq!(
        sum.circuits(20).unwrap(),
        vec![labels_of(&["p", "q"]), labels_of(&["a", "b", "c"])]
    );
    let dup = a.direct_sum(&u23());
    assert!(matches!(dup, Err(Error::DuplicateLabel(_))));
}

#[test]
fn two_sum_of_triangles_is_a_four_circuit() {
    let a = u23();
    let b = m(&["p", "q", "r"], &[&[1, 0, 1], &[0, 1, 1]]);
    let sum = a.two_sum(&b, "c", "r", 20).unwrap();
    assert_eq!(sum.elements(), labels_of(&["a", "b", "p", "q"]).as_slice());
    assert_eq!(sum.rank(), a.rank() + b.rank() - 1);
    assert_eq!(
        sum.circuits(20).unwrap(),
        vec![labels_of(&["a", "b", "p", "q"])]
    );
}

#[test]
fn two_sum_with_triangle_subdivides() {
    // Gluing a triangle onto an edge of K4 subdivides that edge.
    let k4 = k4();
    let t = m(&["p", "q", "r"], &[&[1, 0, 1], &[0, 1, 1]]);
    let sum = k4.two_sum(&t, "e34", "r", 20).unwrap();
    assert_eq!(sum.len(), 7);
    assert_eq!(sum.rank(), 4);
    let mut sizes: Vec<usize> =
        sum.circuits(20).unwrap().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![3, 3, 4, 4, 4, 5, 5]);
}

#[test]
fn two_sum_rejects_bad_basepoints() {
    let a = m(&["z", "a", "b"], &[&[0, 1, 0], &[0, 1, 1]]);
    let b = m(&["p", "q", "r"], &[&[1, 0, 1], &[0, 1, 1]]);
    // `z` is a loop, `a` is a coloop.
    assert!(matches!(
        a.two_sum(&b, "z", "r", 20),
        Err(Error::BadBasepoint(_))
    ));
    assert!(matches!(
        a.two_sum(&b, "a", "r", 20),
        Err(Error::BadBasepoint(_))
    ));
    assert!(matches!(
        a.two_sum(&u23(), "b", "c", 20),
        Err(Error::DuplicateLabel(_))
    ));
}

#[test]
fn axiom_checks_catch_violations() {
    assert!(verify_axioms(&[vec![]]).is_err());
    assert!(verify_axioms(&[
        labels_of(&["a"]),
        labels_of(&["a", "b"])
    ])
    .is_err());
    assert!(verify_axioms(&[
        labels_of(&["a", "b"]),
        labels_of(&["b", "c"])
    ])
    .is_err());
    assert!(verify_axioms(&[
        labels_of(&["a", "b"]),
        labels_of(&["b", "c"]),
        labels_of(&["a", "c"])
    ])
    .is_ok());
    assert!(verify_axioms(&k4().circuits(20).unwrap()).is_ok());
}

#[test]
fn circuit_matroid_matches_binary_ops() {
    let k4 = k4();
    let cm = CircuitMatroid::new(
        k4.elements().to_vec(),
        &k4.circuits(20).unwrap(),
    )
    .unwrap();
    assert_eq!(cm.rank(), k4.rank());
    cm.verify_axioms().unwrap();
    for x in [labels_of(&["e12"]), labels_of(&["e13", "e24"])] {
        assert_eq!(
            cm.delete(&x).unwrap().circuits(),
            k4.delete(&x).unwrap().circuits(20).unwrap()
        );
        assert_eq!(
            cm.contract(&x).unwrap().circuits(),
            k4.contract(&x).unwrap().circuits(20).unwrap()
        );
    }
}

#[test]
fn binary_reconstruction_round_trips() {
    for m in [u23(), k4(), fano()] {
        let circuits = m.circuit_masks(20).unwrap();
        let rebuilt =
            binary_from_circuits(m.elements().to_vec(), &circuits).unwrap();
        assert_eq!(rebuilt, m);
    }
}

#[test]
fn connectivity_of_small_cases() {
    assert_eq!(connectivity(&u23(), 20).unwrap(), Connectivity::Infinite);
    assert_eq!(connectivity(&k4(), 20).unwrap(), Connectivity::Finite(3));
    assert_eq!(connectivity(&fano(), 20).unwrap(), Connectivity::Finite(3));
    let split = u23().direct_sum(&m(&["p", "q"], &[&[1, 1]])).unwrap();
    assert_eq!(connectivity(&split, 20).unwrap(), Connectivity::Finite(1));
    let t = m(&["p", "q", "r"], &[&[1, 0, 1], &[0, 1, 1]]);
    let c4 = u23().two_sum(&t, "c", "r", 20).unwrap();
    assert_eq!(connectivity(&c4, 20).unwrap(), Connectivity::Finite(2));
    assert!(Connectivity::Infinite.at_least(17));
    assert!(Connectivity::Finite(3).at_least(3));
    assert!(!Connectivity::Finite(2).at_least(3));
}

#[test]
fn k4_has_exactly_four_3_separations() {
    let seps = k_separations(&k4(), 3, 20).unwrap();
    assert_eq!(seps.len(), 4);
    for s in &seps {
        assert_eq!(s.order, 3);
        assert_eq!(s.x.len().min(s.y.len()), 3);
        // One side of each is a triangle.
        let tri = [&s.x, &s.y]
            .into_iter()
            .any(|side| k4().rank_subset(side).unwrap() == 2);
        assert!(tri);
    }
    assert!(k_separations(&k4(), 2, 20).unwrap().is_empty());
}

#[test]
fn iso_finds_identity_on_equal_matroids() {
    let k4 = k4();
    let map = is_isomorphic(&k4, &k4, 20).unwrap().unwrap();
    for (a, b) in map {
        assert_eq!(a, b);
    }
}

#[test]
fn iso_respects_relabelling() {
    let a = k4();
    // Same matrix, columns renamed and permuted.
    let b = m(
        &["u", "v", "w", "x", "y", "z"],
        &[
            &[0, 0, 0, 1, 1, 1],
            &[1, 1, 0, 1, 0, 0],
            &[1, 0, 1, 0, 1, 0],
        ],
    );
    let map = is_isomorphic(&a, &b, 20).unwrap().unwrap();
    assert!(subsets_agree(&a, &b, &map));
    assert!(is_isomorphic(&a, &u23(), 20).unwrap().is_none());
    // Fano and its dual have different ranks.
    assert!(is_isomorphic(&fano(), &fano().dual(), 20).unwrap().is_none());
}

#[test]
fn circuit_iso_mirrors_binary_iso() {
    let a = k4();
    let ca = CircuitMatroid::new(a.elements().to_vec(), &a.circuits(20).unwrap())
        .unwrap();
    assert!(is_isomorphic_circuits(&ca, &ca).is_some());
    let cb = CircuitMatroid::new(
        u23().elements().to_vec(),
        &u23().circuits(20).unwrap(),
    )
    .unwrap();
    assert!(is_isomorphic_circuits(&ca, &cb).is_none());
}

#[test]
fn fano_minus_a_point_is_k4() {
    let f = fano();
    let w = has_minor(&f, &k4(), 20).unwrap().unwrap();
    assert_eq!(w.contracted, Vec::<String>::new());
    assert_eq!(w.deleted, labels_of(&["a"]));
    let replayed = apply_minor(&f, &w).unwrap();
    assert!(is_isomorphic(&replayed, &k4(), 20).unwrap().is_some());
}

#[test]
fn minor_witness_is_first_in_search_order() {
    // The lexicographically first U_{2,3} minor of Fano deletes down to the
    // line {d, e, f}.
    let w = has_minor(&fano(), &u23(), 20).unwrap().unwrap();
    assert!(w.contracted.is_empty());
    assert_eq!(w.deleted, labels_of(&["a", "b", "c", "g"]));
    assert!(has_minor(&u23(), &k4(), 20).unwrap().is_none());
}

#[test]
fn k4_is_self_minor_with_empty_witness() {
    let w = has_minor(&k4(), &k4(), 20).unwrap().unwrap();
    assert!(w.contracted.is_empty() && w.deleted.is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prop_circuits_satisfy_axioms(m in small_matroid()) {
        let circuits = m.circuits(20).unwrap();
        prop_assert!(verify_axioms(&circuits).is_ok());
        // No circuit exceeds rank + 1.
        prop_assert!(circuits.iter().all(|c| c.len() <= m.rank() + 1));
    }

    #[test]
    fn prop_dual_involution_and_cocircuit_oracle(m in small_matroid()) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.cocircuit_masks(20).unwrap(), brute_cocircuits(&m));
    }

    #[test]
    fn prop_minor_duality_identities(m in small_matroid(), pick in any::<u64>()) {
        let x: Vec<String> = m
            .elements()
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .take(2)
            .collect();
        prop_assert_eq!(
            m.delete(&x).unwrap().dual(),
            m.dual().contract(&x).unwrap()
        );
        let drop = m.rank_subset(&x).unwrap();
        prop_assert_eq!(m.contract(&x).unwrap().rank(), m.rank() - drop);
    }

    #[test]
    fn prop_circuit_matroid_ops_agree(m in small_matroid(), pick in any::<u64>()) {
        let cm = CircuitMatroid::new(
            m.elements().to_vec(),
            &m.circuits(20).unwrap(),
        ).unwrap();
        let x: Vec<String> = m
            .elements()
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .take(2)
            .collect();
        prop_assert_eq!(
            cm.contract(&x).unwrap().circuits(),
            m.contract(&x).unwrap().circuits(20).unwrap()
        );
        prop_assert_eq!(
            cm.delete(&x).unwrap().circuits(),
            m.delete(&x).unwrap().circuits(20).unwrap()
        );
    }

    #[test]
    fn prop_reconstruction_round_trips(m in small_matroid()) {
        let rebuilt = binary_from_circuits(
            m.elements().to_vec(),
            &m.circuit_masks(20).unwrap(),
        ).unwrap();
        prop_assert_eq!(rebuilt, m);
    }

    #[test]
    fn prop_iso_matches_brute_force(a in small_matroid(), b in small_matroid()) {
        let fast = is_isomorphic(&a, &b, 20).unwrap();
        prop_assert_eq!(fast.is_some(), brute_iso(&a, &b));
        if let Some(map) = fast {
            prop_assert!(subsets_agree(&a, &b, &map));
        }
    }

    #[test]
    fn prop_minor_matches_brute_force(a in small_matroid(), pick in any::<u64>()) {
        // Derive a genuine minor, then check both directions.
        let mut b = a.clone();
        let mut removed = 0;
        for (i, l) in a.elements().iter().enumerate() {
            if removed == 2 {
                break;
            }
            if b.len() <= 3 {
                break;
            }
            let one = std::slice::from_ref(l);
            if pick >> (2 * i) & 1 == 1 {
                b = if pick >> (2 * i + 1) & 1 == 1 {
                    b.contract(one).unwrap()
                } else {
                    b.delete(one).unwrap()
                };
                removed += 1;
            }
        }
        let w = has_minor(&a, &b, 20).unwrap();
        prop_assert!(w.is_some());
        let replayed = apply_minor(&a, &w.unwrap()).unwrap();
        prop_assert!(is_isomorphic(&replayed, &b, 20).unwrap().is_some());
        prop_assert_eq!(
            has_minor(&a, &b, 20).unwrap().is_some(),
            brute_minor(&a, &b)
        );
    }

    #[test]
    fn prop_connectivity_partition_certificates(m in small_matroid()) {
        // Any reported finite connectivity is witnessed by a separation,
        // and no separation of smaller order exists.
        match connectivity(&m, 20).unwrap() {
            Connectivity::Finite(k) => {
                prop_assert!(!k_separations(&m, k, 20).unwrap().is_empty());
                if k > 1 {
                    prop_assert!(k_separations(&m, k - 1, 20).unwrap().is_empty());
                }
            }
            Connectivity::Infinite => {
                for k in 1..=m.len() {
                    prop_assert!(k_separations(&m, k, 20).unwrap().is_empty());
                }
            }
        }
    }
}
