//! Evaluation of checked identities by contraction with the structure
//! constants of a paired system.
//!
//! A variable with legs `a(1) … a(k)` is expanded through the `(k−1)`-fold
//! coproduct of its value, and the side is summed over the resulting terms.
//! Quantification runs over basis elements; for identities linear in each
//! variable this covers all elements.

use std::collections::BTreeMap;

use super::ast::{Action, Const, Expr, Func, Sort};
use super::sort::CheckedIdentity;
use crate::duality::PairedSystem;
use crate::hopf::{fmt_vector, HopfAlgebra};
use crate::linalg::{dot, Matrix, Vector};
use crate::modular::ModularData;
use crate::scalar::Scalar;
use crate::verification::IdentityResult;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    A(Vector),
    Ahat(Vector),
    Scalar(Scalar),
}

impl Value {
    fn sort(&self) -> Sort {
        match self {
            Value::A(_) => Sort::A,
            Value::Ahat(_) => Sort::Ahat,
            Value::Scalar(_) => Sort::Scalar,
        }
    }

    fn scaled(&self, c: &Scalar) -> Value {
        let sv = |v: &Vector| v.iter().map(|x| c * x).collect();
        match self {
            Value::A(v) => Value::A(sv(v)),
            Value::Ahat(v) => Value::Ahat(sv(v)),
            Value::Scalar(s) => Value::Scalar(c * s),
        }
    }

    fn add_scaled(&mut self, c: &Scalar, other: &Value) {
        match (self, other) {
            (Value::A(v), Value::A(w)) | (Value::Ahat(v), Value::Ahat(w)) => {
                for (x, y) in v.iter_mut().zip(w) {
                    x.add_mul(c, y);
                }
            }
            (Value::Scalar(s), Value::Scalar(t)) => s.add_mul(c, t),
            _ => unreachable!("sort-checked"),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::A(v) | Value::Ahat(v) => fmt_vector(v),
            Value::Scalar(s) => s.to_string(),
        }
    }
}

/// The maps and constants of one side (`A` or `Â`).
struct SideData<'a> {
    alg: &'a HopfAlgebra,
    md: &'a ModularData,
    s: Matrix,
    s_inv: Matrix,
    s2: Matrix,
    s_inv2: Matrix,
}

impl<'a> SideData<'a> {
    fn new(alg: &'a HopfAlgebra, md: &'a ModularData) -> SideData<'a> {
        let power = |k| alg.antipode_power(k).expect("validated Hopf algebra has a bijective antipode");
        SideData { alg, md, s: power(1), s_inv: power(-1), s2: power(2), s_inv2: power(-2) }
    }

    fn endo(&self, f: Func) -> &Matrix {
        match f {
            Func::S => &self.s,
            Func::Sinv => &self.s_inv,
            Func::S2 => &self.s2,
            Func::Sinv2 => &self.s_inv2,
            Func::Sigma => &self.md.sigma,
            Func::SigmaInv => &self.md.sigma_inv,
            Func::SigmaP => &self.md.sigma_prime,
            Func::SigmaPInv => &self.md.sigma_prime_inv,
            Func::Eps | Func::Phi | Func::Psi => unreachable!("functional"),
        }
    }

    fn functional(&self, f: Func) -> &Vector {
        match f {
            Func::Eps => self.alg.counit(),
            Func::Phi => &self.md.phi,
            Func::Psi => &self.md.psi,
            _ => unreachable!("endomorphism"),
        }
    }
}

/// Precomputed data for evaluating many identities on one system.
pub struct EvalContext<'a> {
    sys: &'a PairedSystem,
    primal: SideData<'a>,
    dual: SideData<'a>,
}

type Env = BTreeMap<(String, Option<u32>), Vector>;

impl<'a> EvalContext<'a> {
    pub fn new(sys: &'a PairedSystem) -> EvalContext<'a> {
        EvalContext {
            sys,
            primal: SideData::new(&sys.primal, &sys.primal_modular),
            dual: SideData::new(&sys.dual, &sys.dual_modular),
        }
    }

    pub fn system(&self) -> &PairedSystem {
        self.sys
    }

    fn side(&self, sort: Sort) -> &SideData<'a> {
        match sort {
            Sort::A => &self.primal,
            Sort::Ahat => &self.dual,
            Sort::Scalar => unreachable!("scalars have no side"),
        }
    }

    fn wrap(sort: Sort, v: Vector) -> Value {
        match sort {
            Sort::A => Value::A(v),
            _ => Value::Ahat(v),
        }
    }

    fn vector(v: Value) -> Vector {
        match v {
            Value::A(v) | Value::Ahat(v) => v,
            Value::Scalar(_) => unreachable!("sort-checked"),
        }
    }

    fn eval(&self, e: &Expr, env: &Env, sorts: &BTreeMap<String, Sort>) -> Value {
        let field = self.sys.primal.field();
        match e {
            Expr::Var { name, leg } => {
                let v = env.get(&(name.clone(), *leg)).expect("bound variable").clone();
                Self::wrap(sorts[name], v)
            }
            Expr::Const(c) => {
                let (p, d) = (&self.sys.primal_modular, &self.sys.dual_modular);
                match c {
                    Const::One => Value::A(self.sys.primal.unit().clone()),
                    Const::OneHat => Value::Ahat(self.sys.dual.unit().clone()),
                    Const::Delta => Value::A(p.delta.clone()),
                    Const::DeltaInv => Value::A(p.delta_inv.clone()),
                    Const::Dhat => Value::Ahat(d.delta.clone()),
                    Const::DhatInv => Value::Ahat(d.delta_inv.clone()),
                    Const::Tau => Value::Scalar(p.tau.clone()),
                }
            }
            Expr::Lit(q) => Value::Scalar(field.from_rational(q.clone())),
            Expr::Neg(x) => self.eval(x, env, sorts).scaled(&field.from_int(-1)),
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                let mut acc = self.eval(l, env, sorts);
                let sign = field.from_int(if matches!(e, Expr::Add(..)) { 1 } else { -1 });
                acc.add_scaled(&sign, &self.eval(r, env, sorts));
                acc
            }
            Expr::Mul(l, r) => match (self.eval(l, env, sorts), self.eval(r, env, sorts)) {
                (Value::Scalar(c), v) | (v, Value::Scalar(c)) => v.scaled(&c),
                (Value::A(x), Value::A(y)) => Value::A(self.sys.primal.product(&x, &y)),
                (Value::Ahat(x), Value::Ahat(y)) => Value::Ahat(self.sys.dual.product(&x, &y)),
                _ => unreachable!("sort-checked"),
            },
            Expr::Apply(f, x) => {
                let v = self.eval(x, env, sorts);
                let sort = v.sort();
                let side = self.side(sort);
                let v = Self::vector(v);
                if f.is_functional() {
                    Value::Scalar(dot(side.functional(*f), &v))
                } else {
                    Self::wrap(sort, side.endo(*f).apply(&v))
                }
            }
            Expr::Act(act, x, y) => {
                let x = Self::vector(self.eval(x, env, sorts));
                let y = Self::vector(self.eval(y, env, sorts));
                match act {
                    Action::Lact => Value::Ahat(self.sys.primal_left_action(&x, &y)),
                    Action::Ract => Value::Ahat(self.sys.primal_right_action(&x, &y)),
                    Action::LactHat => Value::A(self.sys.dual_left_action(&x, &y)),
                    Action::RactHat => Value::A(self.sys.dual_right_action(&x, &y)),
                }
            }
            Expr::Pair(x, y) => {
                let x = Self::vector(self.eval(x, env, sorts));
                let y = Self::vector(self.eval(y, env, sorts));
                Value::Scalar(self.sys.pair(&x, &y))
            }
        }
    }

    /// `Σ v(1) ⊗ … ⊗ v(k)` as coefficient / basis-index lists.
    fn iterated_coproduct(alg: &HopfAlgebra, v: &[Scalar], k: u32) -> Vec<(Scalar, Vec<usize>)> {
        let mut terms: BTreeMap<Vec<usize>, Scalar> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i], c.clone()))
            .collect();
        for _ in 1..k {
            let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in &terms {
                let (last, prefix) = idx.split_last().expect("non-empty");
                for (j, l, d) in alg.coproduct_terms(*last) {
                    let mut key = prefix.to_vec();
                    key.extend([*j, *l]);
                    next.entry(key).or_insert_with(|| alg.field().zero()).add_mul(c, d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        terms.into_iter().map(|(k, c)| (c, k)).collect()
    }

    /// One side of an identity under arbitrary (not necessarily basis)
    /// values of its variables.
    pub fn eval_side(
        &self,
        expr: &Expr,
        legs: &BTreeMap<String, u32>,
        sorts: &BTreeMap<String, Sort>,
        bindings: &BTreeMap<String, Vector>,
    ) -> Value {
        let mut base = Env::new();
        for (name, v) in bindings {
            if !legs.contains_key(name) {
                base.insert((name.clone(), None), v.clone());
            }
        }
        let mut expansions = Vec::new();
        for (name, k) in legs {
            let alg = self.side(sorts[name]).alg;
            let mut terms = Self::iterated_coproduct(alg, &bindings[name], *k);
            if terms.is_empty() {
                // bound to zero: one zero-weighted term keeps the result's sort
                terms.push((alg.field().zero(), vec![0; *k as usize]));
            }
            expansions.push((name, terms));
        }
        if expansions.is_empty() {
            return self.eval(expr, &base, sorts);
        }
        let mut total: Option<Value> = None;
        let mut cursor = vec![0usize; expansions.len()];
        'outer: loop {
            let mut env = base.clone();
            let mut coeff = self.sys.primal.field().one();
            for (slot, (name, terms)) in expansions.iter().enumerate() {
                let (c, idx) = &terms[cursor[slot]];
                coeff = &coeff * c;
                let alg = self.side(sorts[*name]).alg;
                for (leg, i) in idx.iter().enumerate() {
                    env.insert(((*name).clone(), Some(leg as u32 + 1)), alg.basis_element(*i));
                }
            }
            let v = self.eval(expr, &env, sorts);
            match &mut total {
                None => total = Some(v.scaled(&coeff)),
                Some(t) => t.add_scaled(&coeff, &v),
            }
            for slot in (0..cursor.len()).rev() {
                cursor[slot] += 1;
                if cursor[slot] < expansions[slot].1.len() {
                    continue 'outer;
                }
                cursor[slot] = 0;
            }
            break;
        }
        total.expect("at least one term")
    }

    /// Both sides at one assignment.
    pub fn eval_both(&self, id: &CheckedIdentity, bindings: &BTreeMap<String, Vector>) -> (Value, Value) {
        let sorts = sorts_of(id);
        let p = &id.program;
        (
            self.eval_side(&p.lhs, &id.lhs_legs, &sorts, bindings),
            self.eval_side(&p.rhs, &id.rhs_legs, &sorts, bindings),
        )
    }

    /// Checks the identity on every assignment of basis elements.
    pub fn evaluate(&self, id: &CheckedIdentity) -> IdentityOutcome {
        let p = &id.program;
        let dims: Vec<usize> = p.decls.iter().map(|d| self.side(d.sort).alg.dim()).collect();
        let mut cursor = vec![0usize; dims.len()];
        let mut counterexample = None;
        'outer: loop {
            let bindings: BTreeMap<String, Vector> = p
                .decls
                .iter()
                .zip(&cursor)
                .map(|(d, &i)| (d.name.clone(), self.side(d.sort).alg.basis_element(i)))
                .collect();
            let (lhs, rhs) = self.eval_both(id, &bindings);
            if lhs != rhs {
                let assignment: Vec<(String, usize)> =
                    p.decls.iter().zip(&cursor).map(|(d, &i)| (d.name.clone(), i)).collect();
                counterexample = Some(Counterexample { assignment, lhs: lhs.render(), rhs: rhs.render() });
                break;
            }
            for slot in (0..cursor.len()).rev() {
                cursor[slot] += 1;
                if cursor[slot] < dims[slot] {
                    continue 'outer;
                }
                cursor[slot] = 0;
            }
            break;
        }
        IdentityOutcome {
            id: p.name.clone(),
            quantifier: quantifier(id),
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

fn sorts_of(id: &CheckedIdentity) -> BTreeMap<String, Sort> {
    id.program.decls.iter().map(|d| (d.name.clone(), d.sort)).collect()
}

fn quantifier(id: &CheckedIdentity) -> String {
    if id.program.decls.is_empty() {
        return "constants".into();
    }
    id.program
        .decls
        .iter()
        .map(|d| format!("{} in {}", d.name, d.sort))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Variable name and basis index.
    pub assignment: Vec<(String, usize)>,
    pub lhs: String,
    pub rhs: String,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, i) in &self.assignment {
            write!(f, "{name}={i} ")?;
        }
        write!(f, "lhs={} rhs={}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub id: String,
    pub quantifier: String,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl From<IdentityOutcome> for IdentityResult {
    fn from(o: IdentityOutcome) -> IdentityResult {
        IdentityResult {
            id: o.id,
            quantifier: o.quantifier,
            pass: o.pass,
            counterexample: o.counterexample.map(|c| c.to_string()),
        }
    }
}
