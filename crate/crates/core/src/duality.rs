//! The dual Hopf algebra, the canonical pairing, the four actions and the
//! dual integrals.
//!
//! The dual is built on the dual basis `f_j` with `⟨e_i, f_j⟩ = δ_ij`, so the
//! pairing matrix is the identity and everything else lives in structure
//! constants. The product of the dual pairs its first factor with the first
//! coproduct leg: `⟨a, yy'⟩ = Σ ⟨a₍₁₎, y⟩⟨a₍₂₎, y'⟩`.

use thiserror::Error;

use crate::hopf::{fmt_vector, Bialgebra, HopfAlgebra, HopfError};
use crate::linalg::{dot, Matrix, Tensor3, Vector};
use crate::modular::{
    compose_functional, gram_matrix, is_left_integral, is_right_integral, left_integral_space,
    right_integral_space, ModularData, ModularError,
};
use crate::scalar::Scalar;
use crate::verification::{check_all, IdentityResult, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DualityError {
    #[error("dual fails validation ({0}); pairing conventions are inconsistent")]
    InvalidDual(String),
    #[error("dual integral cross-check failed: {0}")]
    IntegralMismatch(String),
    #[error(transparent)]
    Modular(#[from] ModularError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// Dual Hopf algebra on the dual basis.
///
/// Product constants are the coproduct constants of `h` transposed, the
/// coproduct comes from the product of `h`, the counit is `y ↦ ⟨1, y⟩`, the
/// unit is `ε` and the antipode is `Sᵀ`.
pub fn build_dual(h: &HopfAlgebra) -> Result<HopfAlgebra, DualityError> {
    let n = h.dim();
    let f = h.field();
    let mut mul = Tensor3::zeros(f, n);
    for i in 0..n {
        for (a, b, c) in h.coproduct_terms(i) {
            mul.set(*a, *b, i, c.clone());
        }
    }
    let mut comul = Matrix::zeros(f, n, n * n);
    for (i, j, k, c) in h.mul_tensor().nonzeros() {
        comul.set(k, i * n + j, c.clone());
    }
    let basis = h.basis().iter().map(|b| format!("{b}*")).collect();
    let b = Bialgebra::new(
        format!("dual-{}", h.name()),
        f,
        basis,
        mul,
        h.counit().clone(),
        comul,
        h.unit().clone(),
    )?;
    let dual = HopfAlgebra::new(b, h.antipode().transpose())?;
    let report = dual.validate();
    if !report.passed() {
        return Err(DualityError::InvalidDual(report.failures().join(", ")));
    }
    Ok(dual)
}

/// Dual integrals from both routes.
#[derive(Debug, Clone, PartialEq)]
pub struct DualIntegrals {
    /// `ψ̂(ω) = ε(a)` for `ω = φ(· a)`.
    pub psi_hat: Vector,
    /// `φ̂(ω) = ε(a)` for `ω = ψ(a ·)`.
    pub phi_hat: Vector,
    /// Right integral on the dual from the generic nullspace solve.
    pub psi_hat_generic: Vector,
    /// `ψ̂ = ratio · ψ̂_generic`.
    pub ratio: Scalar,
    /// Column `j` is the `a_j` with `f_j = φ(· a_j)`.
    pub phi_representatives: Matrix,
}

#[derive(Debug, Clone)]
pub struct PairedSystem {
    pub primal: HopfAlgebra,
    pub dual: HopfAlgebra,
    /// `P[i][j] = ⟨e_i, f_j⟩`.
    pub pairing: Matrix,
    pub primal_modular: ModularData,
    pub dual_modular: ModularData,
    pub dual_integrals: DualIntegrals,
}

impl PairedSystem {
    pub fn new(h: &HopfAlgebra) -> Result<PairedSystem, DualityError> {
        h.require_valid()?;
        let dual = build_dual(h)?;
        let primal_modular = ModularData::compute(h)?;
        let dual_integrals = dual_integrals(h, &dual, &primal_modular)?;
        let dual_modular = ModularData::with_left_integral(&dual, dual_integrals.phi_hat.clone())?;
        if dual_modular.psi != dual_integrals.psi_hat {
            return Err(DualityError::IntegralMismatch(format!(
                "φ̂∘S = {} but ψ̂ = {}",
                fmt_vector(&dual_modular.psi),
                fmt_vector(&dual_integrals.psi_hat)
            )));
        }
        Ok(PairedSystem {
            pairing: Matrix::identity(h.field(), h.dim()),
            primal: h.clone(),
            dual,
            primal_modular,
            dual_modular,
            dual_integrals,
        })
    }

    /// The system with the dual as primal, built through the full pipeline.
    pub fn swapped(&self) -> Result<PairedSystem, DualityError> {
        PairedSystem::new(&self.dual)
    }

    pub fn dim(&self) -> usize {
        self.primal.dim()
    }

    /// `⟨a, y⟩`.
    pub fn pair(&self, a: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = self.primal.field().zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc.add_mul(&(ai * yj), self.pairing.get(i, j));
                }
            }
        }
        acc
    }

    /// `⟨e_k, y⟩` for every basis element.
    fn pair_with_basis(&self, y: &[Scalar]) -> Vector {
        self.pairing.apply(y)
    }

    /// `a ⇀ y`, defined by `⟨a', a⇀y⟩ = ⟨a'a, y⟩`.
    pub fn primal_left_action(&self, a: &[Scalar], y: &[Scalar]) -> Vector {
        let vals = self.pair_with_basis(y);
        let n = self.dim();
        let mut coords = self.primal.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, out) in coords.iter_mut().enumerate().take(n) {
                for (l, c) in self.primal.product_terms(k, i) {
                    out.add_mul(&(ai * c), &vals[*l]);
                }
            }
        }
        self.from_basis_values(coords)
    }

    /// `y ↼ a`, defined by `⟨a', y↼a⟩ = ⟨aa', y⟩`.
    pub fn primal_right_action(&self, y: &[Scalar], a: &[Scalar]) -> Vector {
        let vals = self.pair_with_basis(y);
        let n = self.dim();
        let mut coords = self.primal.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, out) in coords.iter_mut().enumerate().take(n) {
                for (l, c) in self.primal.product_terms(i, k) {
                    out.add_mul(&(ai * c), &vals[*l]);
                }
            }
        }
        self.from_basis_values(coords)
    }

    /// The element of the dual whose pairings with the basis of `A` are `v`.
    fn from_basis_values(&self, v: Vector) -> Vector {
        if self.pairing.is_identity() {
            v
        } else {
            self.pairing.solve(&v).expect("nondegenerate pairing")
        }
    }

    /// `y ⇀ a = Σ a₍₁₎⟨a₍₂₎, y⟩`.
    pub fn dual_left_action(&self, y: &[Scalar], a: &[Scalar]) -> Vector {
        let vals = self.pair_with_basis(y);
        let mut out = self.primal.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, k, c) in self.primal.coproduct_terms(i) {
                out[*j].add_mul(&(ai * c), &vals[*k]);
            }
        }
        out
    }

    /// `a ↼ y = Σ ⟨a₍₁₎, y⟩a₍₂₎`.
    pub fn dual_right_action(&self, a: &[Scalar], y: &[Scalar]) -> Vector {
        let vals = self.pair_with_basis(y);
        let mut out = self.primal.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, k, c) in self.primal.coproduct_terms(i) {
                out[*k].add_mul(&(ai * c), &vals[*j]);
            }
        }
        out
    }

    /// Checks `ψ̂(ω'ω) = ω'(S⁻¹(a))` for `ω = φ(· a)` on all dual basis pairs,
    /// and that the canonical map `A → Â̂` is an isomorphism of Hopf algebras.
    pub fn biduality_check(&self) -> Result<VerificationReport, DualityError> {
        let n = self.dim();
        let alg = self.primal.name().to_string();
        let s_inv = self.primal.antipode_inv()?;
        let reps = &self.dual_integrals.phi_representatives;
        let psi_hat = &self.dual_integrals.psi_hat;
        let mut results = vec![check_all(
            "biduality.formula",
            "w', w in Ahat",
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))),
            |(i, j)| {
                let prod = self.dual.product(&self.dual.basis_element(i), &self.dual.basis_element(j));
                let lhs = dot(psi_hat, &prod);
                let rhs = s_inv.apply(&reps.column(j))[i].clone();
                (lhs != rhs).then(|| format!("w'={} w={} lhs={lhs} rhs={rhs}", i, j))
            },
        )];
        let bidual = build_dual(&self.dual)?;
        let iso = [
            ("mul", self.primal.mul_tensor() == bidual.mul_tensor()),
            ("comul", self.primal.comul_matrix() == bidual.comul_matrix()),
            ("unit", self.primal.unit() == bidual.unit()),
            ("counit", self.primal.counit() == bidual.counit()),
            ("antipode", self.primal.antipode() == bidual.antipode()),
        ];
        let bad: Vec<&str> = iso.iter().filter(|(_, ok)| !ok).map(|(w, _)| *w).collect();
        results.push(IdentityResult {
            id: "biduality.iso".into(),
            quantifier: "structure constants".into(),
            pass: bad.is_empty(),
            counterexample: (!bad.is_empty()).then(|| format!("differs in {}", bad.join(","))),
        });
        Ok(VerificationReport { algebra: alg, results })
    }
}

/// Computes `ψ̂` from its defining formula, cross-checks it against the
/// generic right-integral solve on the dual, and derives `φ̂`.
pub fn dual_integrals(
    h: &HopfAlgebra,
    dual: &HopfAlgebra,
    md: &ModularData,
) -> Result<DualIntegrals, DualityError> {
    let mismatch = |m: String| DualityError::IntegralMismatch(m);
    // f_j = φ(· a_j) means B a_j = e_j with B the Gram matrix of φ
    let reps = gram_matrix(h, &md.phi)
        .invert()
        .map_err(|_| ModularError::NotFaithful("phi"))?;
    let psi_hat = compose_functional(h.counit(), &reps);

    let right_space = right_integral_space(dual);
    if right_space.len() != 1 {
        return Err(mismatch(format!(
            "dual right integrals form a {}-dimensional space",
            right_space.len()
        )));
    }
    let generic = crate::modular::normalize_first_nonzero(&right_space[0]);
    let lead = generic.iter().position(|c| !c.is_zero()).expect("nonzero integral");
    let ratio = psi_hat[lead].clone();
    let scaled: Vector = generic.iter().map(|c| &ratio * c).collect();
    if scaled != psi_hat || ratio.is_zero() {
        return Err(mismatch(format!(
            "formula gives {}, nullspace gives {}",
            fmt_vector(&psi_hat),
            fmt_vector(&generic)
        )));
    }
    if !is_right_integral(dual, &psi_hat) {
        return Err(mismatch("ψ̂ is not right invariant".into()));
    }

    // f_j = ψ(a_j ·) means Bψᵀ a_j = e_j
    let reps_psi = gram_matrix(h, &md.psi)
        .transpose()
        .invert()
        .map_err(|_| ModularError::NotFaithful("psi"))?;
    let phi_hat = compose_functional(h.counit(), &reps_psi);
    if left_integral_space(dual).len() != 1 || !is_left_integral(dual, &phi_hat) {
        return Err(mismatch("φ̂ is not the left integral of the dual".into()));
    }
    Ok(DualIntegrals {
        psi_hat,
        phi_hat,
        psi_hat_generic: generic,
        ratio,
        phi_representatives: reps,
    })
}
