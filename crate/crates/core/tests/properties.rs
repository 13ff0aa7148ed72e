//! Property tests for the arithmetic, the linear algebra, the identity
//! language and a few structural invariants of the builtin algebras.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use hopf_core::catalog::builtin;
use hopf_core::dsl::{
    parse, parse_files, standard_corpus, Action, CheckedIdentity, Const, Decl, EvalContext, Expr, Func,
    IdentityProgram, Sort, Value,
};
use hopf_core::linalg::{dot, Matrix, Vector};
use hopf_core::{Field, FieldSpec, PairedSystem, Rational, Scalar};

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn scalar_in(field: Field) -> impl Strategy<Value = Scalar> {
    let deg = field.degree();
    prop::collection::vec((-6i64..=6, 1i64..=4), deg)
        .prop_map(move |cs| field.from_poly(cs.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]).prop_map(|n| {
        if n == 1 {
            Field::new(FieldSpec::Rational)
        } else {
            Field::cyclotomic(n)
        }
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows).prop_map(move |m| {
        let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
        Matrix::from_int_rows(&Field::rational(), &rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in field_strategy().prop_flat_map(|f| (scalar_in(f.clone()), scalar_in(f.clone()), scalar_in(f)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn display_parses_back(a in field_strategy().prop_flat_map(scalar_in)) {
        let f = a.field().clone();
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn generator_is_a_primitive_root(n in prop::sample::select(vec![2u32, 3, 4, 5, 6, 8, 12])) {
        let f = Field::cyclotomic(n);
        let z = f.generator();
        prop_assert!(z.pow(n as i64).unwrap().is_one());
        for k in 1..n {
            prop_assert!(!z.pow(k as i64).unwrap().is_one());
        }
    }

    #[test]
    fn inverse_matrix(m in int_matrix(4, 4)) {
        match m.invert() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
                prop_assert_eq!(m.rank(), 4);
            }
            Err(_) => prop_assert!(m.rank() < 4),
        }
    }

    #[test]
    fn rank_nullity(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), m.cols());
        for v in &null {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kron_composes(a in int_matrix(2, 2), b in int_matrix(2, 3), c in int_matrix(2, 2), d in int_matrix(3, 2)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let var = (prop::sample::select(vec!["a", "b", "y"]), prop::option::of(1u32..4))
        .prop_map(|(n, leg)| Expr::Var { name: n.to_string(), leg });
    let leaf = prop_oneof![
        var,
        prop::sample::select(Const::ALL.to_vec()).prop_map(Expr::Const),
        (0i64..20, 1i64..5).prop_map(|(n, d)| Expr::Lit(rational(n, d))),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (prop::sample::select(Func::ALL.to_vec()), inner.clone()).prop_map(move |(f, x)| Expr::Apply(f, b(x))),
            (prop::sample::select(Action::ALL.to_vec()), inner.clone(), inner.clone())
                .prop_map(move |(act, x, y)| Expr::Act(act, b(x), b(y))),
            (inner.clone(), inner).prop_map(move |(x, y)| Expr::Pair(b(x), b(y))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(name in "[a-z][a-z0-9._-]{0,8}", lhs in expr_strategy(), rhs in expr_strategy()) {
        let prog = IdentityProgram {
            name,
            decls: vec![
                Decl { name: "a".into(), sort: Sort::A },
                Decl { name: "b".into(), sort: Sort::A },
                Decl { name: "y".into(), sort: Sort::Ahat },
            ],
            lhs,
            rhs,
        };
        let text = prog.to_string();
        let back = hopf_core::dsl::parser::parse_identity(&text, 1);
        prop_assert_eq!(back, Ok(prog), "{}", text);
    }
}

/// Paired systems are costly; build each once per test binary.
fn system(name: &'static str) -> &'static PairedSystem {
    static CELLS: OnceLock<BTreeMap<&'static str, PairedSystem>> = OnceLock::new();
    CELLS
        .get_or_init(|| {
            ["sweedler", "taft-3", "fun-S3"]
                .into_iter()
                .map(|n| (n, PairedSystem::new(&builtin(n).unwrap()).unwrap()))
                .collect()
        })
        .get(name)
        .expect("prepared system")
}

/// Corpus entries in which every variable occurs once per summand, so both
/// sides are multilinear in the variables.
const MULTILINEAR: [&str; 8] = [
    "kms.phi",
    "twist.sigma",
    "pairing.sigma",
    "pairing.sigmapinv",
    "radford",
    "radford.intermediate",
    "selfdual.transported",
    "action.lact.adjoint",
];

fn corpus_entry(id: &str) -> CheckedIdentity {
    static CORPUS: OnceLock<Vec<CheckedIdentity>> = OnceLock::new();
    CORPUS
        .get_or_init(|| parse_files(&standard_corpus()).unwrap())
        .iter()
        .find(|c| c.program.name == id)
        .cloned()
        .unwrap_or_else(|| panic!("{id} not in the bundled corpus"))
}

fn flat(v: &Value) -> Vector {
    match v {
        Value::A(x) | Value::Ahat(x) => x.clone(),
        Value::Scalar(s) => vec![s.clone()],
    }
}

fn random_vector(field: &Field, coeffs: &[(i64, i64)], offset: usize, n: usize) -> Vector {
    (0..n)
        .map(|i| {
            let (p, q) = coeffs[(offset + i) % coeffs.len()];
            field.frac(p, q)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Identities checked on basis elements hold for arbitrary vectors, and
    /// each side is linear in its first variable.
    #[test]
    fn identities_are_multilinear(
        alg in prop::sample::select(vec!["sweedler", "taft-3", "fun-S3"]),
        which in 0..MULTILINEAR.len(),
        coeffs in prop::collection::vec((-4i64..=4, 1i64..=3), 7),
        alpha in -3i64..=3,
    ) {
        let sys = system(alg);
        let ctx = EvalContext::new(sys);
        let id = corpus_entry(MULTILINEAR[which]);
        let f = sys.primal.field();
        let n = sys.dim();
        let mut bindings = BTreeMap::new();
        for (k, d) in id.program.decls.iter().enumerate() {
            bindings.insert(d.name.clone(), random_vector(f, &coeffs, 3 * k, n));
        }
        let (l, r) = ctx.eval_both(&id, &bindings);
        prop_assert_eq!(&l, &r, "{} on {}", id.program.name, alg);

        let first = id.program.decls[0].name.clone();
        let u = bindings[&first].clone();
        let v = random_vector(f, &coeffs, 1, n);
        let a = f.from_int(alpha);
        let combo: Vector = u.iter().zip(&v).map(|(x, y)| &(&a * x) + y).collect();
        let side = |b: &BTreeMap<String, Vector>| flat(&ctx.eval_both(&id, b).0);
        let mut bu = bindings.clone();
        bu.insert(first.clone(), u);
        let mut bv = bindings.clone();
        bv.insert(first.clone(), v);
        let mut bc = bindings;
        bc.insert(first, combo);
        let expect: Vector = side(&bu).iter().zip(side(&bv)).map(|(x, y)| &(&a * x) + &y).collect();
        prop_assert_eq!(side(&bc), expect);
    }

    #[test]
    fn antipode_is_an_anti_homomorphism(
        alg in prop::sample::select(vec!["sweedler", "taft-3", "fun-S3"]),
        coeffs in prop::collection::vec((-4i64..=4, 1i64..=3), 5),
    ) {
        let h = &system(alg).primal;
        let f = h.field();
        let n = h.dim();
        let (x, y) = (random_vector(f, &coeffs, 0, n), random_vector(f, &coeffs, 2, n));
        let s = h.antipode();
        prop_assert_eq!(s.apply(&h.product(&x, &y)), h.product(&s.apply(&y), &s.apply(&x)));
        // Δ(S x) = (S⊗S)Δ^op(x)
        let d = h.coproduct(&x);
        let mut flipped = d.clone();
        for j in 0..n {
            for k in 0..n {
                flipped[k * n + j] = d[j * n + k].clone();
            }
        }
        prop_assert_eq!(h.coproduct(&s.apply(&x)), h.apply_tensor(s, s, &flipped));
    }

    #[test]
    fn weak_kms_off_basis(
        alg in prop::sample::select(vec!["sweedler", "taft-3", "fun-S3"]),
        coeffs in prop::collection::vec((-4i64..=4, 1i64..=3), 5),
    ) {
        let sys = system(alg);
        let h = &sys.primal;
        let md = &sys.primal_modular;
        let n = h.dim();
        let (x, y) = (random_vector(h.field(), &coeffs, 0, n), random_vector(h.field(), &coeffs, 1, n));
        prop_assert_eq!(dot(&md.phi, &h.product(&x, &y)), dot(&md.phi, &h.product(&y, &md.sigma.apply(&x))));
        prop_assert_eq!(dot(&md.psi, &h.product(&x, &y)), dot(&md.psi, &h.product(&y, &md.sigma_prime.apply(&x))));
    }
}

#[test]
fn sort_errors_name_the_subterm() {
    let err = parse("bad: forall a in A, y in Ahat . lact(y, a) = y").unwrap_err();
    assert!(err.to_string().contains("lact(y, a)"), "{err}");
}
