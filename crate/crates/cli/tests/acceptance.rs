//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use postlie::catalog::{
    automorphisms, catalog_operators, chevalley, make_sl2, make_sl2sl2, make_dim3, make_type, r2c_phi,
    split_candidates, witnesses, AlgebraKind, CatalogOperator, DerivedType,
};
use postlie::lie::{is_homomorphism, padded_dims};
use postlie::post_lie::{bracket_tower, derived_bracket, inner_pa_from_rb, triple_decomposition};
use postlie::rota_baxter::{
    double_construction, enumerate_split_operators, is_automorphism, is_rb_operator, rb_identity_failure,
};
use postlie::{classify3, int, is_lie_isomorphism, rat, Class3Tag, DoubleVariant, Error, Matrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ops() -> Vec<CatalogOperator> {
    catalog_operators()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = random_rational(rng);
        if q != int(0) {
            return q;
        }
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| random_rational(rng)).collect()).collect();
        let m = Matrix::from_rows(rows);
        if m.is_invertible() {
            return m;
        }
    }
}

fn rb_identity_suite() -> Check {
    let all = ops();
    let mut on_n = 0;
    for op in &all {
        let r = &op.operator;
        let fail = rb_identity_failure(r.algebra(), r.matrix(), r.weight()).map_err(|e| e.to_string())?;
        ensure!(fail.is_none(), "{} fails on basis pair {:?}", op.name, fail);
        if op.kind == AlgebraKind::Sl2Sl2 {
            on_n += 1;
        }
    }
    ensure!(on_n >= 12, "only {on_n} operators on sl2+sl2");
    for name in [
        "type1-zero",
        "type1-negative-identity",
        "r2c-phi",
        "type1-double-nilpotent",
        "type1-double-negative",
        "type4-split",
        "type3-split",
        "type5-triangular",
        "type6-triangular",
        "type7-triangular",
        "type8a-triangular",
        "type8b-jordan",
    ] {
        ensure!(all.iter().any(|o| o.name == name), "missing {name}");
    }
    Ok(())
}

fn r2c_dichotomy() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let one = int(1);
    for _ in 0..10 {
        let (a, g) = (random_rational(&mut rng), random_rational(&mut rng));
        let r = r2c_phi(&a, &int(0), &g);
        ensure!(
            is_rb_operator(r.algebra(), r.matrix(), &one).unwrap(),
            "beta = 0 sample ({a}, {g}) rejected"
        );
        let b = random_nonzero(&mut rng);
        let r = r2c_phi(&a, &b, &g);
        ensure!(
            !is_rb_operator(r.algebra(), r.matrix(), &one).unwrap(),
            "beta = {b} sample accepted"
        );
    }
    Ok(())
}

fn closure_laws() -> Check {
    for op in ops() {
        let r = &op.operator;
        let phi = r.phi_involution();
        ensure!(phi.is_rb(), "{}: phi image not RB", op.name);
        ensure!(phi.phi_involution() == *r, "{}: phi twice differs", op.name);
        let psis = automorphisms(op.kind);
        ensure!(psis.len() >= 3, "{}: fewer than 3 automorphisms", op.name);
        for psi in &psis {
            ensure!(is_automorphism(r.algebra(), psi), "{}: bad automorphism", op.name);
            let c = r.conjugate(psi).map_err(|e| e.to_string())?;
            ensure!(c.is_rb(), "{}: conjugate not RB", op.name);
        }
    }
    Ok(())
}

fn split_criterion() -> Check {
    for op in ops() {
        let r = &op.operator;
        let m = r.matrix();
        let identity = (m * &m.add_scalar(r.weight())).is_zero();
        ensure!(r.is_split().unwrap() == identity, "{}: is_split disagrees", op.name);
    }
    let n = make_sl2sl2();
    let split = enumerate_split_operators(&n, &split_candidates()).map_err(|e| e.to_string())?;
    ensure!(!split.is_empty(), "no split operators enumerated");
    for r in &split {
        ensure!(r.is_split().unwrap(), "enumerated operator not split");
    }
    let t5 = ops().into_iter().find(|o| o.name == "type5-triangular").unwrap();
    ensure!(!t5.operator.is_split().unwrap(), "type5 witness is split");
    Ok(())
}

fn pa_axioms() -> Check {
    for op in ops() {
        let pa = inner_pa_from_rb(&op.operator).map_err(|e| e.to_string())?;
        ensure!(pa.check_axioms().is_none(), "{}: {:?}", op.name, pa.check_axioms());
        ensure!(pa.left_multiplications_are_derivations(), "{}: derivations", op.name);
    }
    Ok(())
}

fn rb_on_derived() -> Check {
    for op in ops() {
        let r = &op.operator;
        let g = derived_bracket(r).map_err(|e| e.to_string())?;
        ensure!(is_rb_operator(&g, r.matrix(), r.weight()).unwrap(), "{}", op.name);
    }
    Ok(())
}

fn tower() -> Check {
    let one = int(1);
    for op in ops() {
        let r = &op.operator;
        let t = bracket_tower(r, 6).map_err(|e| format!("{}: {e}", op.name))?;
        let plus = r.matrix().add_scalar(&one);
        for i in 0..6 {
            let (to, from) = (&t.levels[i], &t.levels[i + 1]);
            ensure!(from.check_jacobi(), "{}: level {} not Lie", op.name, i + 1);
            ensure!(is_homomorphism(r.matrix(), from, to).unwrap(), "{}: R at level {i}", op.name);
            ensure!(is_homomorphism(&plus, from, to).unwrap(), "{}: R + id at level {i}", op.name);
        }
        ensure!(t.kernel_ideal_failure().is_none(), "{}: {:?}", op.name, t.kernel_ideal_failure());
    }
    Ok(())
}

fn derived_dims() -> Check {
    for op in ops() {
        let r = &op.operator;
        let g = derived_bracket(r).map_err(|e| e.to_string())?;
        let gd = padded_dims(&g.fingerprint().derived_dims, 7);
        let nd = padded_dims(&r.algebra().fingerprint().derived_dims, 7);
        ensure!(gd.iter().zip(&nd).all(|(a, b)| a <= b), "{}: {gd:?} vs {nd:?}", op.name);
    }
    Ok(())
}

fn triple() -> Check {
    for op in ops() {
        let r = &op.operator;
        let t = triple_decomposition(r).map_err(|e| e.to_string())?;
        let c = t.check(r.algebra()).map_err(|e| e.to_string())?;
        ensure!(c.all(), "{}: {c:?}", op.name);
        if op.name == "type5-triangular" {
            ensure!(t.dims() == (3, 2, 1), "type5 dims {:?}", t.dims());
        }
    }
    Ok(())
}

fn kernel_dichotomy() -> Check {
    let one = int(1);
    for op in ops() {
        let r = &op.operator;
        let g = derived_bracket(r).map_err(|e| e.to_string())?;
        let k0 = r.matrix().kernel().dim();
        let k1 = r.matrix().add_scalar(&one).kernel().dim();
        if g.fingerprint() != r.algebra().fingerprint() {
            ensure!(k0 > 0 && k1 > 0, "{}: kernels {k0}, {k1}", op.name);
        }
        if op.kind == AlgebraKind::Sl2Sl2 {
            ensure!(k0 > 0 || k1 > 0, "{}: both kernels trivial", op.name);
        }
    }
    Ok(())
}

fn type_occurrence() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_postlie"))
        .args(["verify-thm41", "--all"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(out.status.code() == Some(0), "exit {:?}: {text}", out.status.code());
    ensure!(text.contains("8 types, all pass"), "{text}");
    let ws = witnesses();
    for w in &ws {
        let g = derived_bracket(&w.operator).map_err(|e| e.to_string())?;
        let model = make_type(&w.target_type).map_err(|e| e.to_string())?;
        ensure!(g.fingerprint() == model.fingerprint(), "{}: fingerprint", w.name);
    }
    for name in ["type5-triangular", "type7-triangular"] {
        let w = ws.iter().find(|w| w.name == name).ok_or(name)?;
        let g = derived_bracket(&w.operator).map_err(|e| e.to_string())?;
        let model = make_type(&w.target_type).map_err(|e| e.to_string())?;
        let iso = w.iso.as_ref().ok_or(format!("{name}: no isomorphism"))?;
        ensure!(is_lie_isomorphism(iso, &g, &model).unwrap(), "{name}: isomorphism fails");
    }
    Ok(())
}

fn exclusions() -> Check {
    let m1 = int(-1);
    let cases = [
        (DerivedType::R3R3 { lambda: m1.clone(), mu: m1.clone() }, 3, "(lambda, mu) != (-1, -1)"),
        (DerivedType::Sl2R3 { lambda: m1.clone() }, 2, "lambda != -1"),
        (DerivedType::Five { alpha: int(0), beta: int(2) }, 5, "alpha != 0"),
        (DerivedType::Five { alpha: m1.clone(), beta: int(2) }, 5, "alpha != -1"),
        (DerivedType::Seven { lambda: int(0), alpha1: int(1), alpha2: int(1) }, 7, "lambda != 0"),
        (DerivedType::Seven { lambda: int(2), alpha1: int(0), alpha2: int(1) }, 7, "alpha1 != 0"),
        (DerivedType::Seven { lambda: int(2), alpha1: int(1), alpha2: int(0) }, 7, "alpha2 != 0"),
        (
            DerivedType::Seven { lambda: m1.clone(), alpha1: int(2), alpha2: int(-3) },
            7,
            "(lambda, alpha1, alpha2) != (-1, alpha1, -alpha1 - 1)",
        ),
    ];
    for (t, ty, constraint) in cases {
        match make_type(&t) {
            Err(Error::Constraint { ty: got, constraint: c }) if got == ty && c == constraint => {}
            other => return Err(format!("{t}: got {other:?}")),
        }
    }
    Ok(())
}

fn classify_robust() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for tag in Class3Tag::ALL {
        let l = (tag == Class3Tag::R3Lambda).then(|| int(2));
        let g = make_dim3(tag, l.as_ref()).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let h = g.transport(&random_invertible(&mut rng, 3)).map_err(|e| e.to_string())?;
            let c = classify3(&h).map_err(|e| e.to_string())?;
            ensure!(c.tag == tag, "{tag} classified as {c}");
        }
    }
    for l in [int(2), rat(1, 2)] {
        let c = classify3(&make_dim3(Class3Tag::R3Lambda, Some(&l)).unwrap()).unwrap();
        ensure!(c.j_invariant == Some(rat(9, 2)), "lambda = {l}: {c}");
    }
    Ok(())
}

fn double_constructions() -> Check {
    let s = make_sl2();
    for psi in [Matrix::identity(3), chevalley()] {
        for variant in [DoubleVariant::Nilpotent, DoubleVariant::Negative] {
            let r = double_construction(&s, &psi, variant).map_err(|e| e.to_string())?;
            let g = derived_bracket(&r).map_err(|e| e.to_string())?;
            let f = g.fingerprint();
            ensure!(f.killing_rank == 6 && g.is_semisimple(), "{variant:?}: killing rank {}", f.killing_rank);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("rb-identity-suite", rb_identity_suite),
        ("r2c-phi-dichotomy", r2c_dichotomy),
        ("closure-laws", closure_laws),
        ("split-criterion", split_criterion),
        ("post-lie-axioms", pa_axioms),
        ("rb-on-derived-bracket", rb_on_derived),
        ("bracket-tower", tower),
        ("derived-dimensions", derived_dims),
        ("triple-decomposition", triple),
        ("kernel-dichotomy", kernel_dichotomy),
        ("type-occurrence", type_occurrence),
        ("type-exclusions", exclusions),
        ("classify3-robustness", classify_robust),
        ("double-constructions", double_constructions),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", n + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {msg}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
