use lietorus::graded::{Elem, GradedAlgebra};
use lietorus::lattice::DegreeWindow;
use lietorus::operators::{op_altinner, op_bracket, op_equal, op_eval, op_jinner, op_l, op_r, OperatorElement};
use lietorus::tori::TorusAlgebra;
use lietorus::{Error, Scalar};
use proptest::prelude::*;


fn zeta6_plus() -> TorusAlgebra {
    let w = Scalar::root_of_unity(1, 6).unwrap();
    TorusAlgebra::jordan_plus(&[vec![Scalar::one(), w.clone()], vec![w.inv().unwrap(), Scalar::one()]]).unwrap()
}

/// `ε(α, β)` of the Cayley torus, written out independently of the library.
fn eps(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    a[2] * b[0] + a[1] * b[0] + a[2] * b[1] + a[0] * b[1] * b[2] + a[1] * b[0] * b[2] + a[2] * b[0] * b[1]
}

fn sign(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    if eps(a, b).rem_euclid(2) == 0 { 1 } else { -1 }
}

fn add(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[test]
fn left_unit_is_identity() {
    let j = zeta6_plus();
    let x = j.mono(&[2, -1]);
    assert_eq!(op_eval(&j, &op_l(&j.unit()), &x), x);
}

#[test]
fn inner_derivations_kill_the_unit() {
    let j = zeta6_plus();
    let d = op_jinner(&j.mono(&[1, 1]), &j.mono(&[-1, -1]));
    assert!(op_eval(&j, &d, &j.unit()).is_zero());
}

#[test]
fn octonion_inner_derivation_matches_sign_rule() {
    let o = TorusAlgebra::octonion(3).unwrap();
    let (a, b, x) = ([1, 0, 0], [0, 1, 0], [0, 0, 1]);
    // D_{a,b}(x) = a(bx) - b(ax) + (xb)a - (xa)b + a(xb) - (ax)b
    let lr = |p: &[i64; 3], q: &[i64; 3], r: &[i64; 3]| sign(q, r) * sign(p, &add(q, r));
    let rl = |p: &[i64; 3], q: &[i64; 3], r: &[i64; 3]| sign(p, q) * sign(&add(p, q), r);
    let c = lr(&a, &b, &x) - lr(&b, &a, &x) + rl(&x, &b, &a) - rl(&x, &a, &b) + lr(&a, &x, &b) - rl(&a, &x, &b);
    let got = op_eval(&o, &op_altinner(&o.mono(&a), &o.mono(&b)), &o.mono(&x));
    assert_eq!(got, o.mono(&[1, 1, 1]).scale(&Scalar::from_int(c)));
    assert_ne!(c, 0);
}

#[test]
fn bracket_of_left_multiplications_is_an_inner_derivation() {
    let j = zeta6_plus();
    let (x, y) = (j.mono(&[1, 0]), j.mono(&[0, 1]));
    let got = op_bracket(&j, &op_l(&x), &op_l(&y)).unwrap();
    assert_eq!(got, op_jinner(&x, &y));
}

#[test]
fn inner_derivation_bracket_with_left_multiplication() {
    let j = zeta6_plus();
    let d = op_jinner(&j.mono(&[1, 0]), &j.mono(&[0, 1]));
    let c = j.mono(&[1, 1]);
    let got = op_bracket(&j, &d, &op_l(&c)).unwrap();
    assert_eq!(got, op_l(&op_eval(&j, &d, &c)));
}

#[test]
fn alternative_inner_derivation_brackets() {
    let o = TorusAlgebra::octonion(3).unwrap();
    let (a, b, c, d) = (o.mono(&[1, 0, 0]), o.mono(&[0, 1, 0]), o.mono(&[0, 0, 1]), o.mono(&[1, 1, 0]));
    let dab = op_altinner(&a, &b);
    let got = op_bracket(&o, &dab, &op_altinner(&c, &d)).unwrap();
    let want = op_altinner(&op_eval(&o, &dab, &c), &d).add(&op_altinner(&c, &op_eval(&o, &dab, &d)));
    assert_eq!(got, want);
}

#[test]
fn equality_examples() {
    let j = zeta6_plus();
    let w = DegreeWindow::new(2);
    let (a, b) = (j.mono(&[1, 0]), j.mono(&[-1, 2]));
    let e = op_l(&a).add(&op_jinner(&a, &b));
    assert!(op_equal(&j, &e, &e, &w));
    assert!(op_equal(&j, &op_jinner(&a, &b).add(&op_jinner(&b, &a)), &OperatorElement::zero(), &w));
    assert!(op_equal(&j, &op_jinner(&j.unit(), &a), &OperatorElement::zero(), &w));
    assert!(!op_equal(&j, &op_l(&a), &OperatorElement::zero(), &w));
}

#[test]
fn jordan_algebras_reject_right_multiplications() {
    let j = zeta6_plus();
    let x = j.mono(&[1, 0]);
    assert!(matches!(op_bracket(&j, &op_r(&x), &op_l(&x)), Err(Error::IncompatibleVariety(_))));
}

fn deg2() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 2)
}

fn deg3() -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-1i64..=1)
}

fn check_bracket<A: GradedAlgebra + ?Sized>(alg: &A, e: &OperatorElement, f: &OperatorElement, x: &Elem) -> Result<(), TestCaseError> {
    let br = op_bracket(alg, e, f).unwrap();
    let lhs = op_eval(alg, &br, x);
    let rhs = op_eval(alg, e, &op_eval(alg, f, x)).sub(&op_eval(alg, f, &op_eval(alg, e, x)));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jordan_inner_derivations_are_derivations(a in deg2(), b in deg2(), x in deg2(), y in deg2()) {
        let j = zeta6_plus();
        let d = op_jinner(&j.mono(&a), &j.mono(&b));
        let (u, v) = (j.mono(&x), j.mono(&y));
        let lhs = op_eval(&j, &d, &j.mul(&u, &v));
        let rhs = j.mul(&op_eval(&j, &d, &u), &v).add(&j.mul(&u, &op_eval(&j, &d, &v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn octonion_inner_derivations_are_derivations(a in deg3(), b in deg3(), x in deg3(), y in deg3()) {
        let o = TorusAlgebra::octonion(3).unwrap();
        let d = op_altinner(&o.mono(&a), &o.mono(&b));
        let (u, v) = (o.mono(&x), o.mono(&y));
        let lhs = op_eval(&o, &d, &o.mul(&u, &v));
        let rhs = o.mul(&op_eval(&o, &d, &u), &v).add(&o.mul(&u, &op_eval(&o, &d, &v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_bracket_agrees_with_evaluation(a in deg2(), b in deg2(), c in deg2(), d in deg2(), x in deg2(), kind in 0usize..3) {
        let j = zeta6_plus();
        let (ma, mb, mc, md) = (j.mono(&a), j.mono(&b), j.mono(&c), j.mono(&d));
        let (e, f) = match kind {
            0 => (op_l(&ma), op_l(&mb)),
            1 => (op_jinner(&ma, &mb), op_l(&mc)),
            _ => (op_jinner(&ma, &mb), op_jinner(&mc, &md)),
        };
        check_bracket(&j, &e, &f, &j.mono(&x))?;
    }

    #[test]
    fn alternative_bracket_agrees_with_evaluation(a in deg3(), b in deg3(), c in deg3(), d in deg3(), x in deg3(), kind in 0usize..3) {
        let o = TorusAlgebra::octonion(3).unwrap();
        let (ma, mb, mc, md) = (o.mono(&a), o.mono(&b), o.mono(&c), o.mono(&d));
        let dab = op_altinner(&ma, &mb);
        let f = match kind {
            0 => op_l(&mc),
            1 => op_r(&mc),
            _ => op_altinner(&mc, &md),
        };
        check_bracket(&o, &dab, &f, &o.mono(&x))?;
    }

    #[test]
    fn associative_bracket_agrees_with_evaluation(a in deg2(), b in deg2(), x in deg2(), kind in 0usize..3) {
        let w = Scalar::root_of_unity(1, 4).unwrap();
        let q = TorusAlgebra::quantum2(w).unwrap();
        let (ma, mb) = (q.mono(&a), q.mono(&b));
        let (e, f) = match kind {
            0 => (op_l(&ma), op_l(&mb)),
            1 => (op_r(&ma), op_r(&mb)),
            _ => (op_l(&ma), op_r(&mb)),
        };
        check_bracket(&q, &e, &f, &q.mono(&x))?;
    }

    #[test]
    fn bracket_is_skew(a in deg2(), b in deg2(), c in deg2(), d in deg2()) {
        let j = zeta6_plus();
        let e = op_jinner(&j.mono(&a), &j.mono(&b));
        let f = op_l(&j.mono(&c)).add(&op_jinner(&j.mono(&c), &j.mono(&d)));
        let ef = op_bracket(&j, &e, &f).unwrap();
        let fe = op_bracket(&j, &f, &e).unwrap();
        prop_assert!(op_equal(&j, &ef, &fe.neg(), &DegreeWindow::new(2)));
    }
}
