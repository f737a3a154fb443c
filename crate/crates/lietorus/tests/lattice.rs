use lietorus::lattice::{root_system, semilattice_contains, window_enum, DegreeWindow, LatticeVector, Semilattice};
use proptest::prelude::*;

fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector(v.to_vec())
}

fn dot(a: &LatticeVector, b: &LatticeVector) -> i64 {
    a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum()
}

/// Root counts from the classical formulas.
fn expected_count(kind: &str, l: usize) -> usize {
    match kind {
        "A" => l * (l + 1),
        "B" | "C" => 2 * l * l,
        "D" => 2 * l * (l - 1),
        "BC" => 2 * l * l + 2 * l,
        _ => unreachable!(),
    }
}

#[test]
fn classical_root_systems_are_reflection_closed() {
    for (kind, ranks) in [("A", 1..=4), ("B", 2..=4), ("C", 2..=4), ("D", 3..=4), ("BC", 1..=3)] {
        for l in ranks {
            let rs = root_system(kind, l).unwrap();
            assert_eq!(rs.roots.len(), expected_count(kind, l), "{kind}{l}");
            for a in &rs.roots {
                assert!(rs.contains(&-a));
                assert_eq!(rs.cartan_integer(a, a).unwrap(), 2);
                for b in &rs.roots {
                    let c = rs.cartan_integer(b, a).unwrap();
                    assert_eq!(c * dot(a, a), 2 * dot(b, a), "{kind}{l}: <{b}, {a}>");
                    let s = b - &a.scaled(c);
                    assert!(rs.contains(&s), "{kind}{l}: s_{a}({b}) = {s}");
                }
            }
        }
    }
}

#[test]
fn c2_roots_and_cartan_integers() {
    let c2 = root_system("C", 2).unwrap();
    let mut want = vec![lv(&[2, 0]), lv(&[-2, 0]), lv(&[0, 2]), lv(&[0, -2]), lv(&[1, 1]), lv(&[1, -1]), lv(&[-1, 1]), lv(&[-1, -1])];
    want.sort();
    assert_eq!(c2.roots, want);
    assert_eq!(c2.cartan_integer(&lv(&[1, -1]), &lv(&[2, 0])).unwrap(), 1);
    let a2 = root_system("A", 2).unwrap();
    assert_eq!(a2.cartan_integer(&lv(&[1, -1, 0]), &lv(&[0, 1, -1])).unwrap(), -1);
}

#[test]
fn bc_indivisible_roots() {
    let bc = root_system("BC", 2).unwrap();
    let halves = |a: &LatticeVector| a.0.iter().all(|x| x % 2 == 0) && bc.contains(&LatticeVector(a.0.iter().map(|x| x / 2).collect()));
    let want: Vec<LatticeVector> = bc.roots.iter().filter(|a| !halves(a)).cloned().collect();
    let mut got: Vec<LatticeVector> = bc.indivisible().into_iter().filter(|a| !a.is_zero()).collect();
    got.sort();
    assert_eq!(got, want);
    assert!(!bc.is_indivisible(&lv(&[2, 0])));
    assert!(bc.is_indivisible(&lv(&[1, 1])));
}

#[test]
fn semilattice_examples() {
    let s = Semilattice::new(2, vec![lv(&[1, 0])]).unwrap();
    assert!(semilattice_contains(&s, &lv(&[0, 0])).unwrap());
    assert!(semilattice_contains(&s, &lv(&[3, 2])).unwrap());
    assert!(!semilattice_contains(&s, &lv(&[0, 1])).unwrap());
}

#[test]
fn window_enumeration() {
    assert_eq!(window_enum(&DegreeWindow::new(0), 2), vec![lv(&[0, 0])]);
    assert_eq!(window_enum(&DegreeWindow::new(1), 1), vec![lv(&[-1]), lv(&[0]), lv(&[1])]);
    let w = window_enum(&DegreeWindow::new(2), 3);
    assert_eq!(w.len(), 125);
    assert!(w.windows(2).all(|p| p[0] < p[1]));
}

proptest! {
    #[test]
    fn semilattice_membership_is_2_periodic(a in prop::collection::vec(-6i64..=6, 2), s in prop::collection::vec(-3i64..=3, 2)) {
        let sl = Semilattice::new(2, vec![lv(&[1, 0]), lv(&[1, 1])]).unwrap();
        let shifted = LatticeVector(a.iter().zip(&s).map(|(x, y)| x + 2 * y).collect());
        prop_assert_eq!(sl.contains(&lv(&a)).unwrap(), sl.contains(&shifted).unwrap());
    }

    #[test]
    fn window_contains_exactly_its_box(v in prop::collection::vec(-4i64..=4, 2), r in 0i64..=3) {
        let w = DegreeWindow::new(r);
        prop_assert_eq!(w.contains(&lv(&v)), v.iter().all(|x| x.abs() <= r));
        prop_assert_eq!(window_enum(&w, 2).contains(&lv(&v)), w.contains(&lv(&v)));
    }
}
