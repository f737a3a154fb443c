use lietorus::graded::{Elem, GradedAlgebra, Key};
use lietorus::laws::{check_quantum_oracle, check_torus};
use lietorus::lattice::{DegreeWindow, LatticeVector, Semilattice};
use lietorus::lie::check::CheckOptions;
use lietorus::tori::{rewrite, AntiKind, TorusAlgebra};
use lietorus::{Error, Scalar};
use proptest::prelude::*;

fn z(k: i64, n: i64) -> Scalar {
    Scalar::root_of_unity(k, n).unwrap()
}

fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector(v.to_vec())
}

fn q2(q: Scalar) -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::one(), q.clone()], vec![q.inv().unwrap(), Scalar::one()]]
}

fn minus_one() -> Vec<Vec<Scalar>> {
    q2(Scalar::from_int(-1))
}

fn seven_tori() -> Vec<(TorusAlgebra, i64)> {
    vec![
        (TorusAlgebra::laurent(2), 2),
        (TorusAlgebra::quantum2(z(1, 4)).unwrap(), 2),
        (TorusAlgebra::octonion(3).unwrap(), 2),
        (TorusAlgebra::jordan_plus(&minus_one()).unwrap(), 2),
        (TorusAlgebra::hermitian(&minus_one()).unwrap(), 2),
        (TorusAlgebra::clifford(2, Semilattice::new(2, vec![lv(&[1, 0])]).unwrap()).unwrap(), 2),
        (TorusAlgebra::albert(3).unwrap(), 1),
    ]
}

#[test]
fn torus_laws_hold_for_the_six_non_albert_families() {
    for (a, r) in seven_tori().into_iter().take(6) {
        let rep = check_torus(&a, &DegreeWindow::new(r), 1, &CheckOptions::default());
        assert!(rep.all_pass(), "{}: {}", a.name(), rep.to_text());
        assert!(rep.passed("pre_chevalley_law"));
        assert!(rep.passed("invertibility"));
    }
}

#[test]
fn albert_laws_hold_except_the_degree_reversal_law() {
    let (a, r) = seven_tori().pop().unwrap();
    let rep = check_torus(&a, &DegreeWindow::new(r), 1, &CheckOptions::with(200, 42));
    for name in ["grading", "invertibility", "commutativity", "jordan_identity"] {
        assert!(rep.passed(name), "{name}: {}", rep.to_text());
    }
    assert!(!rep.passed("pre_chevalley_law"));
}

#[test]
fn albert_structure_constants_are_not_reversal_symmetric() {
    // x^(1,1,1) = (0, u1 u2, 0) and x^(1,0,0) = (u1, 0, 0) give -1/2, while the
    // negated pair picks up the commutation factor of u2^-1 u1^-1
    let a = TorusAlgebra::albert(3).unwrap();
    let (x, y) = (lv(&[1, 1, 1]), lv(&[1, 0, 0]));
    let half = Scalar::from_int(-1).div_ref(&Scalar::from_int(2)).unwrap();
    assert_eq!(a.k(&x, &y), half);
    assert_eq!(a.k(&-&x, &-&y), half.mul_ref(&z(2, 3)));
}

#[test]
fn albert_jordan_identity_on_samples_within_radius_two() {
    let a = TorusAlgebra::albert(3).unwrap();
    let rep = check_torus(&a, &DegreeWindow::new(2), 0, &CheckOptions::with(200, 42));
    assert!(rep.passed("jordan_identity"), "{}", rep.to_text());
}

#[test]
fn quantum_closed_form_matches_rewriting_oracle() {
    for q in [z(1, 4), z(1, 3)] {
        let rep = check_quantum_oracle(&q2(q), &DegreeWindow::new(3)).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
        assert_eq!(rep.atoms_checked, 49);
    }
}

#[test]
fn quantum_oracle_three_generators() {
    let w = z(1, 6);
    let q = vec![
        vec![Scalar::one(), w.clone(), w.pow(2).unwrap()],
        vec![w.inv().unwrap(), Scalar::one(), Scalar::from_int(-1)],
        vec![w.pow(-2).unwrap(), Scalar::from_int(-1), Scalar::one()],
    ];
    assert!(check_quantum_oracle(&q, &DegreeWindow::new(1)).unwrap().all_pass());
}

#[test]
fn multiplication_examples() {
    let q = TorusAlgebra::quantum2(z(1, 4)).unwrap();
    assert_eq!(q.mul(&q.mono(&[1, 0]), &q.mono(&[0, 1])), q.mono(&[1, 1]));
    assert_eq!(q.mul(&q.mono(&[0, 1]), &q.mono(&[1, 0])), q.mono(&[1, 1]).scale(&z(-1, 4)));
    assert_eq!(rewrite::quantum_product_coefficient(&q2(z(1, 4)), &[0, 1], &[1, 0]), z(-1, 4));

    let j = TorusAlgebra::jordan_plus(&minus_one()).unwrap();
    assert!(j.mul(&j.mono(&[1, 0]), &j.mono(&[0, 1])).is_zero());

    let o = TorusAlgebra::octonion(3).unwrap();
    assert_eq!(o.mul(&o.mono(&[1, 1, 0]), &o.mono(&[0, 0, 1])), o.mono(&[1, 1, 1]));

    let c = TorusAlgebra::clifford(2, Semilattice::new(2, vec![lv(&[1, 0])]).unwrap()).unwrap();
    assert_eq!(c.mul(&c.mono(&[1, 0]), &c.mono(&[1, 0])), c.mono(&[2, 0]));

    let al = TorusAlgebra::albert(3).unwrap();
    assert_eq!(al.mul(&al.mono(&[0, 0, 1]), &al.mono(&[0, 0, 1])), al.mono(&[0, 0, 2]));
}

#[test]
fn homogeneous_inverses() {
    let l = TorusAlgebra::laurent(2);
    assert_eq!(l.homog_inverse(&l.mono(&[2, -1])).unwrap(), l.mono(&[-2, 1]));

    // x^(1,1) x^(-1,-1) = zeta_4^s with s from the normal ordering; the
    // inverse carries the reciprocal coefficient
    let q = TorusAlgebra::quantum2(z(1, 4)).unwrap();
    let x = q.mono(&[1, 1]);
    let k = rewrite::quantum_product_coefficient(&q2(z(1, 4)), &[1, 1], &[-1, -1]);
    let y = q.homog_inverse(&x).unwrap();
    assert_eq!(y, q.mono(&[-1, -1]).scale(&k.inv().unwrap()));

    let c = TorusAlgebra::clifford(2, Semilattice::new(2, vec![lv(&[1, 0])]).unwrap()).unwrap();
    let t = c.mono(&[1, 0]);
    let inv = c.homog_inverse(&t).unwrap();
    assert_eq!(c.mul(&t, &inv), c.unit());
    assert!(matches!(l.homog_inverse(&Elem::zero()), Err(Error::ZeroElement)));
    assert!(matches!(l.homog_inverse(&l.mono(&[1, 0]).add(&l.mono(&[0, 1]))), Err(Error::NotHomogeneous)));
}

#[test]
fn build_rejects_bad_parameters() {
    let bad = vec![vec![Scalar::one(), z(1, 4)], vec![z(1, 4), Scalar::one()]];
    assert!(matches!(TorusAlgebra::quantum(&bad), Err(Error::InvalidQuantumMatrix(_))));
    let e = vec![vec![Scalar::one(), z(1, 3)], vec![z(2, 3), Scalar::one()]];
    assert!(matches!(TorusAlgebra::hermitian(&e), Err(Error::InvalidQuantumMatrix(_))));
    assert!(matches!(Semilattice::new(2, vec![lv(&[2, 0])]), Err(Error::BadSemilattice(_))));
}

#[test]
fn center_and_commutator_support() {
    let q = TorusAlgebra::quantum2(z(1, 3)).unwrap();
    assert!(q.center_support(&lv(&[3, 0])));
    assert!(!q.center_support(&lv(&[1, 0])));
    assert!(q.commutator_component(&lv(&[1, 0])));
    assert!(!q.commutator_component(&lv(&[0, 0])));
    assert!(!TorusAlgebra::laurent(2).commutator_component(&lv(&[4, 1])));
}

#[test]
fn hermitian_support_is_the_reversal_fixed_part() {
    let h = TorusAlgebra::hermitian(&minus_one()).unwrap();
    let q = TorusAlgebra::quantum(&minus_one()).unwrap();
    let bar = q.anti_involution(AntiKind::HermitianBar).unwrap();
    for d in DegreeWindow::new(2).enumerate(2) {
        let fixed = bar.apply(&q.mono(&d.0)) == q.mono(&d.0);
        assert_eq!(h.in_support(&d), fixed, "{d}");
    }
}

#[test]
fn anti_involution_examples() {
    let q = TorusAlgebra::quantum(&minus_one()).unwrap();
    let s = q.anti_involution(AntiKind::SigmaE(vec![1, -1])).unwrap();
    assert_eq!(s.apply(&q.mono(&[0, 1])), q.mono(&[0, 1]).neg());
    let o = TorusAlgebra::octonion(3).unwrap();
    let so = o.anti_involution(AntiKind::OctonionStandard).unwrap();
    assert_eq!(so.apply(&o.unit()), o.unit());
    assert_eq!(so.apply(&o.mono(&[1, 0, 0])), o.mono(&[1, 0, 0]).neg());
}

#[test]
fn octonion_anti_involution_sweep() {
    let o = TorusAlgebra::octonion(4).unwrap();
    let rep = check_torus(&o, &DegreeWindow::new(1), 1, &CheckOptions::with(50, 7));
    assert!(rep.passed("anti_involution"), "{}", rep.to_text());
    assert!(rep.passed("alternativity"));
}

#[test]
fn degree_keys_are_single_slot() {
    let q = TorusAlgebra::quantum2(z(1, 3)).unwrap();
    assert_eq!(q.slots(&lv(&[5, -2])), vec![0]);
    let c = TorusAlgebra::clifford(2, Semilattice::new(2, vec![lv(&[1, 0])]).unwrap()).unwrap();
    assert!(c.slots(&lv(&[0, 1])).is_empty());
    assert_eq!(Key::new(lv(&[1]), 0).deg, lv(&[1]));
}

fn small_deg() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 2)
}

proptest! {
    #[test]
    fn quantum_constants_agree_with_oracle(a in small_deg(), b in small_deg(), k in 1i64..12) {
        let q = q2(z(1, k));
        let t = TorusAlgebra::quantum(&q).unwrap();
        prop_assert_eq!(t.k(&lv(&a), &lv(&b)), rewrite::quantum_product_coefficient(&q, &a, &b));
    }

    #[test]
    fn quantum_pre_chevalley_law(a in small_deg(), b in small_deg(), k in 1i64..12) {
        let t = TorusAlgebra::quantum2(z(1, k)).unwrap();
        prop_assert_eq!(t.k(&lv(&a), &lv(&b)), t.k(&-&lv(&a), &-&lv(&b)));
    }

    #[test]
    fn quantum_associativity(a in small_deg(), b in small_deg(), c in small_deg(), k in 1i64..8) {
        let t = TorusAlgebra::quantum2(z(1, k)).unwrap();
        let (x, y, w) = (t.mono(&a), t.mono(&b), t.mono(&c));
        prop_assert_eq!(t.mul(&t.mul(&x, &y), &w), t.mul(&x, &t.mul(&y, &w)));
    }

    #[test]
    fn octonion_alternativity(a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 3)) {
        let o = TorusAlgebra::octonion(3).unwrap();
        let (x, y) = (o.mono(&a), o.mono(&b));
        let xx = o.mul(&x, &x);
        prop_assert_eq!(o.mul(&xx, &y), o.mul(&x, &o.mul(&x, &y)));
        prop_assert_eq!(o.mul(&y, &xx), o.mul(&o.mul(&y, &x), &x));
    }

    #[test]
    fn jordan_plus_identity(a in small_deg(), b in small_deg(), c in small_deg()) {
        let j = TorusAlgebra::jordan_plus(&q2(z(1, 6))).unwrap();
        let u = j.mono(&a).add(&j.mono(&c));
        let v = j.mono(&b);
        let uu = j.mul(&u, &u);
        prop_assert_eq!(j.mul(&j.mul(&uu, &v), &u), j.mul(&uu, &j.mul(&v, &u)));
    }
}
