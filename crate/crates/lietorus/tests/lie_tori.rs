use std::sync::Arc;

use lietorus::lattice::{DegreeWindow, LatticeVector};
use lietorus::lie::sl::SlTorus;
use lietorus::lie::tensor::TensorTorus;
use lietorus::lie::{check_lie_torus, CheckOptions, LieTorus, MatrixLie};
use lietorus::tori::TorusAlgebra;
use lietorus::Scalar;

fn assert_lie_torus(l: &dyn LieTorus, r: i64) {
    let rep = check_lie_torus(l, &DegreeWindow::new(r), &CheckOptions::default());
    assert!(rep.all_pass(), "{}\n{}", l.name(), rep.to_text());
}

#[test]
fn sl4_quantum_cube_root() {
    let a = TorusAlgebra::quantum2(Scalar::root_of_unity(1, 3).unwrap()).unwrap();
    assert_lie_torus(&SlTorus::new(4, a).unwrap(), 2);
}

#[test]
fn tensor_sl2() {
    let g = Arc::new(MatrixLie::builtin("A", 1).unwrap());
    assert_lie_torus(&TensorTorus::new(g, 1), 3);
}

#[test]
fn psl3_octonion() {
    let p = lietorus::lie::psl3::Psl3Torus::new(TorusAlgebra::octonion(3).unwrap()).unwrap();
    assert_lie_torus(&p, 1);
}

fn minus_one_matrix() -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::one(), Scalar::from_int(-1)], vec![Scalar::from_int(-1), Scalar::one()]]
}

#[test]
fn tkk_jordan_plus() {
    let j = TorusAlgebra::jordan_plus(&minus_one_matrix()).unwrap();
    assert_lie_torus(&lietorus::lie::tkk::Tkk::new(Arc::new(j)).unwrap(), 2);
}

#[test]
fn tkk_c_hermitian_matrices() {
    use lietorus::jordan::HermitianMatrix;
    use lietorus::tori::AntiKind;
    let a = TorusAlgebra::quantum(&minus_one_matrix()).unwrap();
    let s = a.anti_involution(AntiKind::SigmaE(vec![1, 1])).unwrap();
    let h = HermitianMatrix::new(2, a, s).unwrap();
    let idem = vec![h.idempotent(0), h.idempotent(1)];
    let t = lietorus::lie::tkk::Tkk::with_idempotents(Arc::new(h), idem).unwrap();
    assert_lie_torus(&t, 2);
}

#[test]
fn tits_b3() {
    let taus = vec![LatticeVector(vec![0]), LatticeVector(vec![1])];
    let t = lietorus::lie::tits::TitsB::new(3, 1, taus).unwrap();
    assert_lie_torus(&t, 1);
}

#[test]
fn tits_b3_with_nonzero_dww() {
    let taus = vec![LatticeVector(vec![0, 0]), LatticeVector(vec![1, 0]), LatticeVector(vec![0, 1])];
    let t = lietorus::lie::tits::TitsB::new(3, 2, taus).unwrap();
    assert!(t.dim(&LatticeVector(vec![0, 0, 0]), &LatticeVector(vec![1, 1])) > 0);
    assert_lie_torus(&t, 1);
}

#[test]
fn multiloop_sl2_chevalley_sigma() {
    let (ml, _) = lietorus::lie::multiloop::MultiLoop::sl2_example().unwrap();
    assert_lie_torus(&ml, 2);
}

#[test]
fn multiloop_projections_are_orthogonal_idempotents() {
    use lietorus::lattice::residue_box;
    use lietorus::linalg::ScalarMatrix;
    let (ml, _) = lietorus::lie::multiloop::MultiLoop::sl2_example().unwrap();
    let res = residue_box(&ml.periods);
    let ps: Vec<ScalarMatrix> = res.iter().map(|r| ml.projection(r).unwrap()).collect();
    let mut sum = ScalarMatrix::zeros(3, 3);
    for (i, p) in ps.iter().enumerate() {
        assert_eq!(p.mul(p), *p);
        for (j, q) in ps.iter().enumerate() {
            if i != j {
                assert!(p.mul(q).is_zero());
            }
        }
        sum = sum.add(p);
    }
    assert_eq!(sum, ScalarMatrix::identity(3));
}

fn cyclic_sl3() -> lietorus::lie::multiloop::MultiLoop {
    use lietorus::lie::multiloop::{adjoint_action, MultiLoop};
    use lietorus::linalg::ScalarMatrix;
    let g = Arc::new(MatrixLie::builtin("A", 2).unwrap());
    let p = ScalarMatrix::from_ints(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
    let sigma = adjoint_action(&g, &p, &p.transpose()).unwrap();
    let h = p.add(&p.transpose());
    let flat: Vec<Scalar> = (0..3).flat_map(|i| h.row(i).to_vec()).collect();
    let mats = g.matrices.clone().unwrap();
    let cols: Vec<Vec<Scalar>> = mats.iter().map(|m| (0..3).flat_map(|i| m.row(i).to_vec()).collect()).collect();
    let hp = ScalarMatrix::from_columns(&cols, 9).solve(&flat).unwrap();
    MultiLoop::new(g, vec![sigma], vec![3], vec![hp]).unwrap()
}

#[test]
fn multiloop_sl3_order_three_needs_psi() {
    use lietorus::linalg::ScalarMatrix;
    let ml = cyclic_sl3();
    assert_eq!(ml.root_system().roots.len(), 2);
    let g = &ml.g;
    let theta = g.theta().unwrap().clone();
    let id = ScalarMatrix::identity(g.dim());
    assert!(!ml.reverses_residues(&id).unwrap());
    let err = ml.check_chevalley_data(&theta, &id).unwrap_err();
    assert!(matches!(err, lietorus::Error::HypothesisViolated(_)), "{err}");
}
