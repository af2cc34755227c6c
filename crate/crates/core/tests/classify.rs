mod common;

use common::{random_invertible, random_nonzero, random_vector, rng};
use postlie::catalog::{make_dim3, make_type, witnesses, DerivedType};
use postlie::classify::{classify_action, fingerprint_equal, j_invariant, restricted_ad};
use postlie::linalg::{int, rat, unit_vector};
use postlie::{classify3, is_lie_isomorphism, Class3Tag, LieAlgebra, Matrix, Rational, Subspace};

fn representative(tag: Class3Tag) -> LieAlgebra {
    let l = (tag == Class3Tag::R3Lambda).then(|| int(2));
    make_dim3(tag, l.as_ref()).unwrap()
}

#[test]
fn dim3_classes_survive_basis_changes() {
    let mut r = rng(5);
    for tag in Class3Tag::ALL {
        let g = representative(tag);
        let c = classify3(&g).unwrap();
        assert_eq!(c.tag, tag);
        for _ in 0..100 {
            let h = g.transport(&random_invertible(&mut r, 3)).unwrap();
            assert_eq!(classify3(&h).unwrap(), c, "{tag}");
        }
    }
}

#[test]
fn j_symmetry() {
    let mut r = rng(6);
    for _ in 0..20 {
        let l = random_nonzero(&mut r);
        let oracle = (&l + int(1)) * (&l + int(1)) / &l;
        assert_eq!(j_invariant(&l).unwrap(), oracle);
        assert_eq!(j_invariant(&l).unwrap(), j_invariant(&l.recip()).unwrap());
    }
    let a = classify3(&make_dim3(Class3Tag::R3Lambda, Some(&int(2))).unwrap()).unwrap();
    let b = classify3(&make_dim3(Class3Tag::R3Lambda, Some(&rat(1, 2))).unwrap()).unwrap();
    assert_eq!(a.j_invariant, Some(rat(9, 2)));
    assert_eq!(a, b);
    assert_eq!(a.to_string(), "r3_lambda, j = 9/2");
}

#[test]
fn action_choice_does_not_matter() {
    let mut r = rng(9);
    let algebras = [
        representative(Class3Tag::R3),
        make_dim3(Class3Tag::R3Lambda, Some(&rat(-3, 2))).unwrap(),
        make_dim3(Class3Tag::R3Lambda, Some(&int(1))).unwrap(),
    ];
    for g in algebras {
        let full = Subspace::full(3);
        let derived = g.bracket_span(&full, &full).unwrap();
        let x = unit_vector(3, 0);
        let base = classify_action(&restricted_ad(&g, &x, &derived).unwrap()).unwrap();
        for _ in 0..20 {
            let c = random_nonzero(&mut r);
            let y = derived.basis_matrix().apply(&random_vector(&mut r, 2));
            let x2: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| &c * a + b).collect();
            let a = restricted_ad(&g, &x2, &derived).unwrap();
            assert_eq!(classify_action(&a).unwrap(), base);
        }
    }
}

#[test]
fn isomorphism_examples() {
    let g = representative(Class3Tag::Sl2);
    assert!(is_lie_isomorphism(&Matrix::identity(3), &g, &g).unwrap());
    assert!(is_lie_isomorphism(&Matrix::scalar(3, &int(-1)), &g, &g.opposite()).unwrap());
    assert!(is_lie_isomorphism(&Matrix::identity(2), &g, &g).is_err());
    for w in witnesses() {
        let iso = w.iso.as_ref().unwrap();
        let d = postlie::post_lie::derived_bracket(&w.operator).unwrap();
        assert!(is_lie_isomorphism(iso, &d, &w.target).unwrap(), "{}", w.name);
        assert!(fingerprint_equal(&d, &w.target));
    }
}

#[test]
fn fingerprint_comparisons() {
    let n = make_type(&DerivedType::Sl2Sl2).unwrap();
    assert!(fingerprint_equal(&n, &n));
    assert!(!fingerprint_equal(&n, &make_type(&DerivedType::R2Cubed).unwrap()));
    let a = make_type(&DerivedType::R3R3 { lambda: int(2), mu: int(3) }).unwrap();
    let b = make_type(&DerivedType::R3R3 { lambda: int(3), mu: int(2) }).unwrap();
    assert!(fingerprint_equal(&a, &b));
}

#[test]
fn rejects_bad_inputs() {
    assert!(classify3(&LieAlgebra::abelian(4)).is_err());
}
