use std::sync::Arc;

use lietorus::involution::{chevalley, sl_coherence, verify_involution};
use lietorus::jordan::HermitianMatrix;
use lietorus::lattice::{DegreeWindow, LatticeVector};
use lietorus::lie::multiloop::MultiLoop;
use lietorus::lie::psl3::Psl3Torus;
use lietorus::lie::sl::SlTorus;
use lietorus::lie::tensor::TensorTorus;
use lietorus::lie::tits::TitsB;
use lietorus::lie::tkk::Tkk;
use lietorus::lie::{Construction, Involution, MatrixLie};
use lietorus::tori::{AntiKind, TorusAlgebra};
use lietorus::{Error, Scalar};

fn assert_chevalley(c: &Construction, r: i64) {
    let tau = chevalley(c).unwrap();
    let l = c.lie();
    let rep = verify_involution(l.as_ref(), &tau, &DegreeWindow::new(r));
    assert!(rep.all_pass(), "{}\n{}", l.name(), rep.to_text());
}

fn minus_one() -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::one(), Scalar::from_int(-1)], vec![Scalar::from_int(-1), Scalar::one()]]
}

fn tensor_sl2() -> Arc<TensorTorus> {
    Arc::new(TensorTorus::new(Arc::new(MatrixLie::builtin("A", 1).unwrap()), 1))
}

#[test]
fn sl_over_cube_root_has_no_anti_involution() {
    let a = TorusAlgebra::quantum2(Scalar::root_of_unity(1, 3).unwrap()).unwrap();
    let c = Construction::Sl(Arc::new(SlTorus::new(4, a).unwrap()), None);
    assert!(matches!(chevalley(&c), Err(Error::MissingAntiInvolution(_))));
}

#[test]
fn sl_over_minus_one_quantum_torus() {
    let a = TorusAlgebra::quantum(&minus_one()).unwrap();
    assert_chevalley(&Construction::Sl(Arc::new(SlTorus::new(4, a).unwrap()), None), 2);
}

#[test]
fn sl_theta_and_entrywise_tau_commute() {
    let a = TorusAlgebra::quantum(&minus_one()).unwrap();
    let l = Arc::new(SlTorus::new(4, a).unwrap());
    let rep = sl_coherence(l.clone(), Some(&AntiKind::SigmaE(vec![1, -1])), &DegreeWindow::new(2)).unwrap();
    assert!(rep.all_pass(), "{}", rep.to_text());
}

#[test]
fn tensor_theta_inversion() {
    assert_chevalley(&Construction::Tensor(tensor_sl2()), 3);
}

#[test]
fn identity_is_not_a_chevalley_involution() {
    let l = tensor_sl2();
    let rep = verify_involution(l.as_ref(), &Involution::identity(), &DegreeWindow::new(3));
    assert!(rep.passed("order_two") && rep.passed("automorphism"));
    assert!(!rep.passed("degree_reversal") && !rep.passed("cartan_negation"));
}

#[test]
fn psl3_octonion() {
    let p = Psl3Torus::new(TorusAlgebra::octonion(3).unwrap()).unwrap();
    assert_chevalley(&Construction::Psl3(Arc::new(p), None), 1);
}

#[test]
fn tkk_jordan_plus() {
    let j = TorusAlgebra::jordan_plus(&minus_one()).unwrap();
    assert_chevalley(&Construction::Tkk(Arc::new(Tkk::new(Arc::new(j)).unwrap())), 2);
}

#[test]
fn tkk_hermitian_matrices() {
    let a = TorusAlgebra::quantum(&minus_one()).unwrap();
    let s = a.anti_involution(AntiKind::SigmaE(vec![1, 1])).unwrap();
    let h = HermitianMatrix::new(2, a, s).unwrap();
    let idem = vec![h.idempotent(0), h.idempotent(1)];
    let t = Tkk::with_idempotents(Arc::new(h), idem).unwrap();
    assert_chevalley(&Construction::Tkk(Arc::new(t)), 2);
}

#[test]
fn tits_b3() {
    let t = TitsB::new(3, 1, vec![LatticeVector(vec![0]), LatticeVector(vec![1])]).unwrap();
    assert_chevalley(&Construction::TitsB(Arc::new(t)), 1);
}

#[test]
fn tits_b3_with_nonzero_dww() {
    let taus = vec![LatticeVector(vec![0, 0]), LatticeVector(vec![1, 0]), LatticeVector(vec![0, 1])];
    let t = TitsB::new(3, 2, taus).unwrap();
    assert_chevalley(&Construction::TitsB(Arc::new(t)), 1);
}

#[test]
fn multiloop_sl2() {
    let (ml, tau) = MultiLoop::sl2_example().unwrap();
    assert_chevalley(&Construction::MultiLoop(Arc::new(ml), Some(tau), None), 3);
}

#[test]
fn tkk_map_without_bar_on_instrl_is_rejected() {
    use lietorus::graded::{pre_chevalley, Elem};
    use lietorus::lie::tkk::Part;
    let j = TorusAlgebra::jordan_plus(&minus_one()).unwrap();
    let l = Arc::new(Tkk::new(Arc::new(j)).unwrap());
    let m = l.clone();
    let tau = Involution::new("no bar", move |a| {
        let j = m.j.as_ref();
        match m.part(&a.root) {
            Part::J | Part::Bar => m.from_j(&pre_chevalley(j, &Elem::basis(m.j_key(a))), m.part(&a.root) == Part::J),
            Part::Instrl => {
                let t = m.instrl_table(a).conjugate(j, -&a.deg, |x| pre_chevalley(j, x));
                m.instrl_express(&-&a.root, &t)
            }
        }
    });
    let rep = verify_involution(l.as_ref(), &tau, &DegreeWindow::new(1));
    assert!(!rep.passed("automorphism") || !rep.passed("cartan_negation"), "{}", rep.to_text());
}
