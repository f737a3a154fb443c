use lietorus::eala::validate_cocycle;
use lietorus::export::export_structure_constants;
use lietorus::graded::GradedAlgebra;
use lietorus::lattice::DegreeWindow;
use lietorus::lie::{check_lie_torus, CheckOptions};
use lietorus::spec::{any_from_json, eala_from_json, lie_from_json, torus_from_json, AnySpec, InvolutionChoice};
use lietorus::tori::Family;
use lietorus::{Error, Scalar};
use serde_json::{json, Value};

fn sl2_table(h_f_sign: i64) -> Value {
    json!({"construction": "tensor", "n": 1,
           "g": {"table": {"kind": "A", "rank": 1, "validate": false,
                 "basis": [{"name": "e", "root": [1, -1]}, {"name": "h", "root": [0, 0]}, {"name": "f", "root": [-1, 1]}],
                 "brackets": [{"x": "e", "y": "f", "value": [{"k": "h", "c": 1}]},
                              {"x": "h", "y": "e", "value": [{"k": "e", "c": 2}]},
                              {"x": "h", "y": "f", "value": [{"k": "f", "c": -2 * h_f_sign}]}]}}})
}

#[test]
fn quantum_parameter_forms_agree() {
    let forms = [
        json!({"family": "quantum", "rank": 2, "q": {"zeta": [1, 4]}}),
        json!({"family": "quantum", "rank": 2, "conductor": 4, "q": "z^1"}),
        json!({"family": "quantum", "rank": 2, "q": [[1, {"conductor": 4, "value": "1*z^1"}], [{"zeta": [-1, 4]}, 1]]}),
    ];
    for f in &forms {
        let a = torus_from_json(f).unwrap();
        assert_eq!(a.family(), Family::Quantum);
        assert_eq!(a.q(0, 1), Scalar::root_of_unity(1, 4).unwrap(), "{f}");
        assert_eq!(a.q(1, 0), Scalar::root_of_unity(3, 4).unwrap(), "{f}");
    }
}

#[test]
fn torus_spec_errors() {
    let bad_q = json!({"family": "quantum", "rank": 2, "q": [[1, 2], [2, 1]]});
    assert!(matches!(torus_from_json(&bad_q), Err(Error::NonRootOfUnityParameter(_))));
    let not_inverse = json!({"family": "quantum", "rank": 2, "q": [[1, {"zeta": [1, 4]}], [{"zeta": [1, 4]}, 1]]});
    assert!(matches!(torus_from_json(&not_inverse), Err(Error::InvalidQuantumMatrix(_))));
    assert!(matches!(torus_from_json(&json!({"family": "octonion", "rank": 2})), Err(Error::RankTooSmall(_))));
    assert!(matches!(torus_from_json(&json!({"family": "sedenion", "rank": 4})), Err(Error::Spec(_))));
    assert!(matches!(torus_from_json(&json!({"rank": 4})), Err(Error::Spec(_))));
    let clifford = json!({"family": "clifford", "rank": 2, "semilattice": {"m": 2, "reps": [[1, 0]]}});
    assert_eq!(torus_from_json(&clifford).unwrap().rank(), 2);
}

#[test]
fn lie_spec_windows_and_involution_choice() {
    let v = json!({"construction": "tensor", "g": {"builtin": ["A", 1]}, "n": 1, "window": {"radius": 3}, "involution": "identity"});
    let s = lie_from_json(&v).unwrap();
    assert_eq!(s.window, Some(3));
    assert_eq!(s.involution, InvolutionChoice::Identity);
    let any = any_from_json(&v).unwrap();
    assert_eq!(any.degree_window(None).radius, 3);
    assert_eq!(any.degree_window(Some(1)).radius, 1);
    let bare = any_from_json(&json!({"construction": "tensor", "g": {"builtin": ["A", 1]}, "n": 1})).unwrap();
    assert_eq!(bare.degree_window(None).radius, 2);
    assert!(matches!(any_from_json(&json!({"family": "laurent", "rank": 2})).unwrap(), AnySpec::Torus(..)));
}

#[test]
fn table_with_validation_rejects_a_sign_corruption() {
    let mut v = sl2_table(-1);
    v["g"]["table"]["validate"] = json!(true);
    assert!(matches!(lie_from_json(&v), Err(Error::InvalidTable(_))));
}

#[test]
fn sign_corrupted_table_fails_jacobi_and_the_correct_one_passes() {
    let w = DegreeWindow::new(1);
    let good = lie_from_json(&sl2_table(1)).unwrap().construction.lie();
    assert!(check_lie_torus(good.as_ref(), &w, &CheckOptions::default()).all_pass());
    let bad = lie_from_json(&sl2_table(-1)).unwrap().construction.lie();
    let rep = check_lie_torus(bad.as_ref(), &w, &CheckOptions::default());
    assert!(!rep.passed("jacobi"));
    let witness = &rep.get("jacobi").unwrap().witness["example"];
    assert!(witness["lhs"].is_string() && witness["rhs"] == "0", "{witness}");
}

#[test]
fn d_and_kappa_specs() {
    let lie = json!({"construction": "tensor", "g": {"builtin": ["A", 1]}, "n": 2});
    let skew = eala_from_json(&json!({"lie": lie, "D": {"kind": "skew_example", "gamma": [1, 0], "Uminus": "zero"}})).unwrap();
    assert!(skew.d.permissible);
    assert_eq!(skew.d.space(&lietorus::lattice::LatticeVector(vec![1, 0])).dim(), 1);
    assert_eq!(skew.d.space(&lietorus::lattice::LatticeVector(vec![-1, 0])).dim(), 0);

    let triple = json!({"lie": lie, "D": {"kind": "triple", "U": [[1, 0], [0, 1]], "GammaPrime": [[1, 0]]}});
    let t = eala_from_json(&triple).unwrap();
    assert_eq!(t.d.space(&lietorus::lattice::LatticeVector(vec![2, 0])).dim(), 1);
    assert_eq!(t.d.space(&lietorus::lattice::LatticeVector(vec![0, 1])).dim(), 0);

    let kappa = json!({"lie": lie, "D": {"kind": "full_scder"},
                       "kappa": {"generators": [{"mu": [1, 0], "index": 0}],
                                 "entries": [{"pair": [0, 0], "value": [{"mu": [2, 0], "lambda": [0, 1], "c": "1/2"}]}]}});
    let e = eala_from_json(&kappa).unwrap();
    let rep = validate_cocycle(&e.d, &e.kappa, &DegreeWindow::new(1), &CheckOptions::default());
    assert!(!rep.passed("alternating"));

    let out_of_range = json!({"lie": lie, "D": {"kind": "full_scder"},
                              "kappa": {"generators": [{"mu": [1, 0], "index": 0}], "entries": [{"pair": [0, 1], "value": []}]}});
    assert!(matches!(eala_from_json(&out_of_range), Err(Error::InvalidCocycle(_))));
    let bad_row = json!({"lie": lie, "D": {"kind": "degree_only", "U": [[1, 0, 0]]}});
    assert!(matches!(eala_from_json(&bad_row), Err(Error::Spec(_))));
}

#[test]
fn export_rows_match_the_bracket() {
    let l = lie_from_json(&json!({"construction": "tensor", "g": {"builtin": ["A", 1]}, "n": 1})).unwrap().construction.lie();
    let v = export_structure_constants(l.as_ref(), &DegreeWindow::new(1));
    let atoms = v["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 9);
    // [e⊗t, f⊗t⁻¹] = h⊗1 in the legend's numbering
    let find = |payload: &str| atoms.iter().position(|a| a["payload"] == payload).unwrap();
    let (e1, f_1, h0) = (find("e⊗x^(1)"), find("f⊗x^(-1)"), find("h⊗x^(0)"));
    let (i, j, sign) = if e1 < f_1 { (e1, f_1, "1") } else { (f_1, e1, "-1") };
    let row = v["brackets"].as_array().unwrap().iter().find(|r| r["i"] == i && r["j"] == j).unwrap();
    assert_eq!(row["terms"], json!([{"k": h0, "c": {"conductor": 1, "value": sign}}]));
    assert_eq!(v, export_structure_constants(l.as_ref(), &DegreeWindow::new(1)));
}
