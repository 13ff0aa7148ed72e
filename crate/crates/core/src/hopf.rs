//! Finite-dimensional bialgebras and Hopf algebras given by structure constants.
//!
//! Conventions, fixed throughout the crate:
//!
//! * `mul[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`.
//! * `comul` is an `n × n²` matrix; row `i` holds `Δ(e_i)` in the basis
//!   `e_j ⊗ e_k`, flattened to column `j·n + k`.
//! * Linear maps such as the antipode are matrices acting on columns, so
//!   `S(e_c) = Σ_r S[r][c] e_r`.
//!
//! Since every algebra here is unital, the multiplier algebra of `A` is `A`
//! itself and the regularity conditions reduce to invertibility tests on
//! `A ⊗ A`.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::linalg::{basis_vector, zero_vector, LinalgError, Matrix, Tensor3, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("bialgebra has no antipode")]
    NoAntipode,
    #[error("corrupted bialgebra data: {0}")]
    Corrupted(String),
    #[error("not a (regular) multiplier Hopf algebra: {0} is singular")]
    NotRegular(&'static str),
    #[error("axiom validation failed: {0}")]
    Invalid(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Outcome of one axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect()
    }

    /// One line per axiom: `axiom.<name> <algebra> PASS|FAIL [counterexample]`.
    pub fn render(&self, algebra: &str) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("axiom.{} {} {}", c.name, algebra, status(c.pass)));
            if let Some(ce) = &c.counterexample {
                out.push(' ');
                out.push_str(ce);
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Algebra and coalgebra structure without an antipode.
#[derive(Clone)]
pub struct Bialgebra {
    name: String,
    field: Field,
    basis: Vec<String>,
    mul: Tensor3,
    unit: Vector,
    comul: Matrix,
    counit: Vector,
    mul_nz: Vec<Vec<(usize, Scalar)>>,
    comul_nz: Vec<Vec<(usize, usize, Scalar)>>,
}

impl fmt::Debug for Bialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bialgebra({}, dim {}, {})", self.name, self.dim(), self.field.spec())
    }
}

impl Bialgebra {
    pub fn new(
        name: impl Into<String>,
        field: &Field,
        basis: Vec<String>,
        mul: Tensor3,
        unit: Vector,
        comul: Matrix,
        counit: Vector,
    ) -> Result<Bialgebra, HopfError> {
        let n = basis.len();
        if n == 0 {
            return Err(HopfError::Shape("dimension must be positive".into()));
        }
        if mul.dim() != n {
            return Err(HopfError::Shape(format!("product tensor has dim {}, expected {n}", mul.dim())));
        }
        if unit.len() != n || counit.len() != n {
            return Err(HopfError::Shape("unit/counit length differs from dimension".into()));
        }
        if comul.rows() != n || comul.cols() != n * n {
            return Err(HopfError::Shape(format!(
                "coproduct is {}x{}, expected {n}x{}",
                comul.rows(),
                comul.cols(),
                n * n
            )));
        }
        let same_field = unit.iter().chain(&counit).all(|s| s.field() == field)
            && comul.field() == field
            && mul.nonzeros().all(|(.., v)| v.field() == field);
        if !same_field {
            return Err(HopfError::Shape("scalars from different fields".into()));
        }
        let mut mul_nz = vec![Vec::new(); n * n];
        for (i, j, k, v) in mul.nonzeros() {
            mul_nz[i * n + j].push((k, v.clone()));
        }
        let comul_nz = (0..n)
            .map(|i| {
                (0..n * n)
                    .filter_map(|jk| {
                        let v = comul.get(i, jk);
                        (!v.is_zero()).then(|| (jk / n, jk % n, v.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Bialgebra {
            name: name.into(),
            field: field.clone(),
            basis,
            mul,
            unit,
            comul,
            counit,
            mul_nz,
            comul_nz,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mul_tensor(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn comul_matrix(&self) -> &Matrix {
        &self.comul
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        basis_vector(&self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(&self.field, self.dim())
    }

    /// Nonzero `(k, c)` with `e_i e_j = Σ c e_k`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mul_nz[i * self.dim() + j]
    }

    /// Nonzero `(j, k, c)` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul_nz[i]
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product_terms(i, j) {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    pub fn coproduct(&self, x: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(&self.field, n * n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in self.coproduct_terms(i) {
                out[j * n + k].add_mul(a, c);
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        crate::linalg::dot(&self.counit, x)
    }

    /// `x ⊗ y` as a vector on the tensor basis.
    pub fn tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = Vec::with_capacity(x.len() * y.len());
        for a in x {
            for b in y {
                out.push(a * b);
            }
        }
        out
    }

    /// Product in the algebra `A ⊗ A`.
    pub fn tensor_product(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(&self.field, n * n);
        let nz = |w: &[Scalar]| -> Vec<(usize, usize, Scalar)> {
            w.iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(idx, s)| (idx / n, idx % n, s.clone()))
                .collect()
        };
        let (un, vn) = (nz(u), nz(v));
        for (a1, a2, s) in &un {
            for (b1, b2, t) in &vn {
                let st = s * t;
                for (k1, c1) in self.product_terms(*a1, *b1) {
                    let st1 = &st * c1;
                    for (k2, c2) in self.product_terms(*a2, *b2) {
                        out[k1 * n + k2].add_mul(&st1, c2);
                    }
                }
            }
        }
        out
    }

    /// `(f ⊗ g)(t)` for `t ∈ A ⊗ A`.
    pub fn apply_tensor(&self, f: &Matrix, g: &Matrix, t: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(&self.field, n * n);
        for (idx, s) in t.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let (j, k) = (idx / n, idx % n);
            for r in 0..n {
                let fr = f.get(r, j);
                if fr.is_zero() {
                    continue;
                }
                let sf = s * fr;
                for q in 0..n {
                    let gq = g.get(q, k);
                    if !gq.is_zero() {
                        out[r * n + q].add_mul(&sf, gq);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.product(x, &self.basis_element(j))).collect();
        Matrix::from_columns(&self.field, n, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.product(&self.basis_element(j), x)).collect();
        Matrix::from_columns(&self.field, n, &cols)
    }

    /// The bialgebra axioms, in a fixed order.
    pub fn validate_bialgebra(&self) -> Vec<AxiomCheck> {
        let n = self.dim();
        let e = |i: usize| self.basis_element(i);
        let mut checks = Vec::new();

        checks.push(first_failure("associativity", triples(n), |(i, j, k)| {
            let lhs = self.product(&self.product(&e(i), &e(j)), &e(k));
            let rhs = self.product(&e(i), &self.product(&e(j), &e(k)));
            mismatch(format!("i={i} j={j} k={k}"), &lhs, &rhs)
        }));
        checks.push(first_failure("unit.left", 0..n, |i| {
            mismatch(format!("i={i}"), &self.product(&self.unit, &e(i)), &e(i))
        }));
        checks.push(first_failure("unit.right", 0..n, |i| {
            mismatch(format!("i={i}"), &self.product(&e(i), &self.unit), &e(i))
        }));
        checks.push(first_failure("coassociativity", 0..n, |i| {
            let lhs = self.coproduct_left_twice(i);
            let rhs = self.coproduct_right_twice(i);
            mismatch(format!("i={i}"), &lhs, &rhs)
        }));
        checks.push(first_failure("counit.left", 0..n, |i| {
            let mut lhs = self.zero();
            for (j, k, c) in self.coproduct_terms(i) {
                lhs[*k].add_mul(c, &self.counit[*j]);
            }
            mismatch(format!("i={i}"), &lhs, &e(i))
        }));
        checks.push(first_failure("counit.right", 0..n, |i| {
            let mut lhs = self.zero();
            for (j, k, c) in self.coproduct_terms(i) {
                lhs[*j].add_mul(c, &self.counit[*k]);
            }
            mismatch(format!("i={i}"), &lhs, &e(i))
        }));
        checks.push(first_failure("comultiplicative", pairs(n), |(i, j)| {
            let lhs = self.coproduct(&self.product(&e(i), &e(j)));
            let rhs = self.tensor_product(&self.coproduct(&e(i)), &self.coproduct(&e(j)));
            mismatch(format!("i={i} j={j}"), &lhs, &rhs)
        }));
        checks.push(first_failure("comultiplicative.unit", 0..1, |_| {
            let lhs = self.coproduct(&self.unit);
            let rhs = self.tensor(&self.unit, &self.unit);
            mismatch(String::new(), &lhs, &rhs)
        }));
        checks.push(first_failure("counit.multiplicative", pairs(n), |(i, j)| {
            let lhs = self.counit_of(&self.product(&e(i), &e(j)));
            let rhs = &self.counit[i] * &self.counit[j];
            mismatch(format!("i={i} j={j}"), &[lhs], &[rhs])
        }));
        checks.push(first_failure("counit.unital", 0..1, |_| {
            let lhs = self.counit_of(&self.unit);
            mismatch(String::new(), &[lhs], &[self.field.one()])
        }));
        checks
    }

    fn coproduct_left_twice(&self, i: usize) -> Vector {
        // (Δ ⊗ ι)Δ(e_i)
        let n = self.dim();
        let mut out = zero_vector(&self.field, n * n * n);
        for (j, k, c) in self.coproduct_terms(i) {
            for (p, q, d) in self.coproduct_terms(*j) {
                out[(p * n + q) * n + k].add_mul(c, d);
            }
        }
        out
    }

    fn coproduct_right_twice(&self, i: usize) -> Vector {
        // (ι ⊗ Δ)Δ(e_i)
        let n = self.dim();
        let mut out = zero_vector(&self.field, n * n * n);
        for (j, k, c) in self.coproduct_terms(i) {
            for (p, q, d) in self.coproduct_terms(*k) {
                out[(j * n + p) * n + q].add_mul(c, d);
            }
        }
        out
    }

    /// Convolution `m ∘ (f ⊗ g) ∘ Δ` of two endomorphisms.
    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|i| {
                let mut out = self.zero();
                for (j, k, c) in self.coproduct_terms(i) {
                    let fj = f.column(*j);
                    let gk = g.column(*k);
                    for (t, v) in self.product(&fj, &gk).iter().enumerate() {
                        out[t].add_mul(c, v);
                    }
                }
                out
            })
            .collect();
        Matrix::from_columns(&self.field, n, &cols)
    }

    /// `x ↦ ε(x) 1`, the unit of the convolution algebra.
    pub fn unit_counit(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, &self.unit[r] * &self.counit[c]);
            }
        }
        m
    }

    /// Solves `S * id = η ε` for the antipode and confirms `id * S = η ε`.
    pub fn compute_antipode(&self) -> Result<Matrix, HopfError> {
        let failed: Vec<_> = self
            .validate_bialgebra()
            .into_iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        if !failed.is_empty() {
            return Err(HopfError::Invalid(failed.join(", ")));
        }
        let n = self.dim();
        // unknown S[r][j] lives at column r*n + j; equation (i, p) at row i*n + p
        let mut sys = Matrix::zeros(&self.field, n * n, n * n);
        let mut rhs = zero_vector(&self.field, n * n);
        for i in 0..n {
            for (j, k, c) in self.coproduct_terms(i) {
                for r in 0..n {
                    for (p, m) in self.product_terms(r, *k) {
                        sys.get_mut(i * n + p, r * n + j).add_mul(c, m);
                    }
                }
            }
            for p in 0..n {
                rhs[i * n + p] = &self.counit[i] * &self.unit[p];
            }
        }
        let sol = sys.solve(&rhs).map_err(|e| match e {
            LinalgError::Inconsistent => HopfError::NoAntipode,
            LinalgError::NonUnique(d) => HopfError::Corrupted(format!(
                "antipode equations have a {d}-dimensional solution space"
            )),
            other => HopfError::Linalg(other),
        })?;
        let mut s = Matrix::zeros(&self.field, n, n);
        for r in 0..n {
            for j in 0..n {
                s.set(r, j, sol[r * n + j].clone());
            }
        }
        if self.convolve(&Matrix::identity(&self.field, n), &s) != self.unit_counit() {
            return Err(HopfError::NoAntipode);
        }
        Ok(s)
    }

    /// `T₁(a ⊗ b) = Δ(a)(1 ⊗ b)` and `T₂(a ⊗ b) = (a ⊗ 1)Δ(b)` as `n² × n²` matrices.
    pub fn galois_matrices(&self) -> (Matrix, Matrix) {
        let n = self.dim();
        let mut t1 = Matrix::zeros(&self.field, n * n, n * n);
        let mut t2 = Matrix::zeros(&self.field, n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                let col = a * n + b;
                for (j, k, c) in self.coproduct_terms(a) {
                    for (q, d) in self.product_terms(*k, b) {
                        t1.get_mut(j * n + q, col).add_mul(c, d);
                    }
                }
                for (j, k, c) in self.coproduct_terms(b) {
                    for (p, d) in self.product_terms(a, *j) {
                        t2.get_mut(p * n + k, col).add_mul(c, d);
                    }
                }
            }
        }
        (t1, t2)
    }

    /// Galois maps with their inverses; fails if either is singular.
    pub fn galois_maps(&self) -> Result<GaloisMaps, HopfError> {
        let (t1, t2) = self.galois_matrices();
        let t1_inv = t1.invert().map_err(|_| HopfError::NotRegular("T1"))?;
        let t2_inv = t2.invert().map_err(|_| HopfError::NotRegular("T2"))?;
        Ok(GaloisMaps { t1, t2, t1_inv, t2_inv })
    }
}

#[derive(Debug, Clone)]
pub struct GaloisMaps {
    pub t1: Matrix,
    pub t2: Matrix,
    pub t1_inv: Matrix,
    pub t2_inv: Matrix,
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(n).flat_map(move |(i, j)| (0..n).map(move |k| (i, j, k)))
}

fn mismatch(at: String, lhs: &[Scalar], rhs: &[Scalar]) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        let mut s = String::new();
        if !at.is_empty() {
            s.push_str(&at);
            s.push(' ');
        }
        s.push_str(&format!("lhs={} rhs={}", fmt_vector(lhs), fmt_vector(rhs)));
        Some(s)
    }
}

fn first_failure<I, F>(name: &'static str, range: I, mut check: F) -> AxiomCheck
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<String>,
{
    let counterexample = range.into_iter().find_map(&mut check);
    AxiomCheck {
        name,
        pass: counterexample.is_none(),
        counterexample,
    }
}

/// A bialgebra together with its antipode.
#[derive(Clone)]
pub struct HopfAlgebra {
    bialgebra: Bialgebra,
    antipode: Matrix,
    antipode_inv: Option<Matrix>,
    validity: OnceLock<bool>,
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {}, {})", self.name(), self.dim(), self.field().spec())
    }
}

impl std::ops::Deref for HopfAlgebra {
    type Target = Bialgebra;
    fn deref(&self) -> &Bialgebra {
        &self.bialgebra
    }
}

impl HopfAlgebra {
    pub fn new(bialgebra: Bialgebra, antipode: Matrix) -> Result<HopfAlgebra, HopfError> {
        let n = bialgebra.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::Shape(format!(
                "antipode is {}x{}, expected {n}x{n}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        if antipode.field() != bialgebra.field() {
            return Err(HopfError::Shape("antipode over a different field".into()));
        }
        let antipode_inv = antipode.invert().ok();
        Ok(HopfAlgebra {
            bialgebra,
            antipode,
            antipode_inv,
            validity: OnceLock::new(),
        })
    }

    /// Builds a Hopf algebra from bialgebra data by solving for the antipode.
    pub fn with_computed_antipode(bialgebra: Bialgebra) -> Result<HopfAlgebra, HopfError> {
        let s = bialgebra.compute_antipode()?;
        HopfAlgebra::new(bialgebra, s)
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.bialgebra
    }

    pub fn with_name(self, name: impl Into<String>) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: self.bialgebra.with_name(name),
            ..self
        }
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// `S⁻¹`; only available once the antipode is known to be bijective.
    pub fn antipode_inv(&self) -> Result<&Matrix, HopfError> {
        self.antipode_inv.as_ref().ok_or(HopfError::Invalid("antipode.bijective".into()))
    }

    /// `S^k` for any integer `k`.
    pub fn antipode_power(&self, k: i64) -> Result<Matrix, HopfError> {
        let base = if k < 0 { self.antipode_inv()?.clone() } else { self.antipode.clone() };
        let mut acc = Matrix::identity(self.field(), self.dim());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut checks = self.bialgebra.validate_bialgebra();
        let id = Matrix::identity(self.field(), n);
        let eta_eps = self.unit_counit();
        let col_mismatch = |m: &Matrix| {
            (0..n).find_map(|i| mismatch(format!("i={i}"), &m.column(i), &eta_eps.column(i)))
        };
        let left = col_mismatch(&self.convolve(&self.antipode, &id));
        checks.push(AxiomCheck {
            name: "antipode.left",
            pass: left.is_none(),
            counterexample: left,
        });
        let right = col_mismatch(&self.convolve(&id, &self.antipode));
        checks.push(AxiomCheck {
            name: "antipode.right",
            pass: right.is_none(),
            counterexample: right,
        });
        checks.push(AxiomCheck {
            name: "antipode.bijective",
            pass: self.antipode_inv.is_some(),
            counterexample: None,
        });
        let report = ValidationReport { checks };
        let _ = self.validity.set(report.passed());
        report
    }

    /// Runs validation once and fails with the list of broken axioms.
    pub fn require_valid(&self) -> Result<(), HopfError> {
        let ok = match self.validity.get() {
            Some(ok) => *ok,
            None => self.validate().passed(),
        };
        if ok {
            Ok(())
        } else {
            Err(HopfError::Invalid(self.validate().failures().join(", ")))
        }
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vector {
        self.antipode.apply(x)
    }

    /// Cocommutative iff `Δ = flip ∘ Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        let c = self.comul_matrix();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| c.get(i, j * n + k) == c.get(i, k * n + j))))
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.mul_tensor();
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| m.get(i, j, k) == m.get(j, i, k))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_group_algebra, build_sweedler, GroupPresentation};

    #[test]
    fn zero_antipode_fails_only_antipode_axioms() {
        let h = build_group_algebra(&GroupPresentation::cyclic(2)).unwrap();
        let broken = HopfAlgebra::new(
            h.bialgebra().clone(),
            Matrix::zeros(h.field(), 2, 2),
        )
        .unwrap();
        let report = broken.validate();
        assert!(!report.passed());
        for c in &report.checks {
            assert_eq!(c.pass, !c.name.starts_with("antipode"), "{}", c.name);
        }
        assert!(broken.require_valid().is_err());
    }

    #[test]
    fn convolution_identities() {
        let h = build_sweedler();
        let n = h.dim();
        let f = h.antipode().mul(h.antipode());
        assert_eq!(h.convolve(&h.unit_counit(), &f), f);
        assert_eq!(h.convolve(&f, &h.unit_counit()), f);
        assert_eq!(h.convolve(h.antipode(), &Matrix::identity(h.field(), n)), h.unit_counit());
    }

    #[test]
    fn group_like_squaring() {
        let h = build_group_algebra(&GroupPresentation::cyclic(2)).unwrap();
        let id = Matrix::identity(h.field(), 2);
        // e_g ↦ e_{g²}: both elements square to the identity e_0
        let expected = Matrix::from_int_rows(h.field(), &[&[1, 1], &[0, 0]]);
        assert_eq!(h.convolve(&id, &id), expected);
    }

    #[test]
    fn galois_maps_on_monoid_algebra_are_singular() {
        // multiplicative monoid {1, 0}: e0 = 1, e1 = 0
        let f = Field::rational();
        let mut mul = Tensor3::zeros(&f, 2);
        mul.set(0, 0, 0, f.one());
        mul.set(0, 1, 1, f.one());
        mul.set(1, 0, 1, f.one());
        mul.set(1, 1, 1, f.one());
        let mut comul = Matrix::zeros(&f, 2, 4);
        comul.set(0, 0, f.one());
        comul.set(1, 3, f.one());
        let b = Bialgebra::new(
            "monoid",
            &f,
            vec!["1".into(), "0".into()],
            mul,
            vec![f.one(), f.zero()],
            comul,
            vec![f.one(), f.one()],
        )
        .unwrap();
        assert!(b.validate_bialgebra().iter().all(|c| c.pass));
        assert_eq!(b.galois_maps().unwrap_err(), HopfError::NotRegular("T1"));
        assert_eq!(b.compute_antipode().unwrap_err(), HopfError::NoAntipode);
    }

    #[test]
    fn shape_errors() {
        let f = Field::rational();
        let err = Bialgebra::new(
            "bad",
            &f,
            vec!["1".into()],
            Tensor3::zeros(&f, 2),
            vec![f.one()],
            Matrix::zeros(&f, 1, 1),
            vec![f.one()],
        );
        assert!(matches!(err, Err(HopfError::Shape(_))));
    }
}
