//! Integrals, the modular element, the modular automorphisms and the scaling
//! constant of a finite-dimensional Hopf algebra, all by exact linear solves.
//!
//! For a left integral `φ`:
//!
//! * `δ` is the group-like element with `φ(S(a)) = φ(aδ)`;
//! * `σ` satisfies `φ(ab) = φ(bσ(a))`, and `σ'` the same for `ψ = φ∘S`;
//! * `τ` is the scalar with `φ∘S² = τφ`.
//!
//! With the Gram matrix `B[i][j] = φ(e_i e_j)` the weak KMS relation reads
//! `Bᵀ = Bσ`, so `σ = B⁻¹Bᵀ`.

use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfError};
use crate::linalg::{dot, LinalgError, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModularError {
    #[error("no nonzero {0} integral")]
    NoIntegral(&'static str),
    #[error("{side} integrals form a {dim}-dimensional space")]
    IntegralNotUnique { side: &'static str, dim: usize },
    #[error("{0} is not faithful")]
    NotFaithful(&'static str),
    #[error("modular element is not group-like: {0}")]
    NotGroupLike(String),
    #[error("{0} is not an algebra automorphism")]
    NotAutomorphism(&'static str),
    #[error("phi∘S² is not proportional to phi")]
    NotProportional,
    #[error("functional is not a left integral")]
    NotLeftIntegral,
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// The integral apparatus attached to a Hopf algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularData {
    /// Left integral, as its values on the basis.
    pub phi: Vector,
    /// Right integral `φ∘S`.
    pub psi: Vector,
    pub delta: Vector,
    pub delta_inv: Vector,
    pub sigma: Matrix,
    pub sigma_inv: Matrix,
    pub sigma_prime: Matrix,
    pub sigma_prime_inv: Matrix,
    pub tau: Scalar,
}

/// Rows `(i, p)`: coordinate `p` of `(ι⊗φ)Δ(e_i) − φ(e_i)1`, linear in `φ`.
pub fn left_invariance_system(h: &HopfAlgebra) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(h.field(), n * n, n);
    for i in 0..n {
        for (j, k, c) in h.coproduct_terms(i) {
            m.get_mut(i * n + j, *k).add_mul(c, &h.field().one());
        }
        for p in 0..n {
            let cur = m.get_mut(i * n + p, i);
            *cur = &*cur - &h.unit()[p];
        }
    }
    m
}

/// Rows `(i, p)`: coordinate `p` of `(ψ⊗ι)Δ(e_i) − ψ(e_i)1`.
pub fn right_invariance_system(h: &HopfAlgebra) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(h.field(), n * n, n);
    for i in 0..n {
        for (j, k, c) in h.coproduct_terms(i) {
            m.get_mut(i * n + k, *j).add_mul(c, &h.field().one());
        }
        for p in 0..n {
            let cur = m.get_mut(i * n + p, i);
            *cur = &*cur - &h.unit()[p];
        }
    }
    m
}

pub fn left_integral_space(h: &HopfAlgebra) -> Vec<Vector> {
    left_invariance_system(h).nullspace()
}

pub fn right_integral_space(h: &HopfAlgebra) -> Vec<Vector> {
    right_invariance_system(h).nullspace()
}

fn unique_integral(space: Vec<Vector>, side: &'static str) -> Result<Vector, ModularError> {
    match space.len() {
        0 => Err(ModularError::NoIntegral(side)),
        1 => Ok(normalize_first_nonzero(&space[0])),
        dim => Err(ModularError::IntegralNotUnique { side, dim }),
    }
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn normalize_first_nonzero(v: &[Scalar]) -> Vector {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|c| &inv * c).collect()
        }
        None => v.to_vec(),
    }
}

/// The left integral, normalized so its first nonzero coordinate is 1.
pub fn left_integral(h: &HopfAlgebra) -> Result<Vector, ModularError> {
    h.require_valid()?;
    unique_integral(left_integral_space(h), "left")
}

pub fn right_integral(h: &HopfAlgebra) -> Result<Vector, ModularError> {
    h.require_valid()?;
    unique_integral(right_integral_space(h), "right")
}

pub fn is_left_integral(h: &HopfAlgebra, f: &[Scalar]) -> bool {
    f.iter().any(|c| !c.is_zero()) && left_invariance_system(h).apply(f).iter().all(Scalar::is_zero)
}

pub fn is_right_integral(h: &HopfAlgebra, f: &[Scalar]) -> bool {
    f.iter().any(|c| !c.is_zero()) && right_invariance_system(h).apply(f).iter().all(Scalar::is_zero)
}

/// `B[i][j] = f(e_i e_j)`.
pub fn gram_matrix(h: &HopfAlgebra, f: &[Scalar]) -> Matrix {
    let n = h.dim();
    let mut b = Matrix::zeros(h.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = h.field().zero();
            for (k, c) in h.product_terms(i, j) {
                acc.add_mul(c, &f[*k]);
            }
            b.set(i, j, acc);
        }
    }
    b
}

/// `f ∘ M` as a row of values on the basis.
pub fn compose_functional(f: &[Scalar], m: &Matrix) -> Vector {
    m.apply_left(f)
}

pub fn evaluate(f: &[Scalar], x: &[Scalar]) -> Scalar {
    dot(f, x)
}

/// Solves `φ(S(a)) = φ(aδ)` for `δ`, checks it is group-like, and returns
/// `(δ, δ⁻¹)`. The inverse is solved from `δx = 1` and cross-checked
/// against `S(δ)`.
pub fn modular_element(h: &HopfAlgebra, phi: &[Scalar]) -> Result<(Vector, Vector), ModularError> {
    let b = gram_matrix(h, phi);
    let rhs = compose_functional(phi, h.antipode());
    let delta = b.solve(&rhs).map_err(|e| match e {
        LinalgError::NonUnique(_) | LinalgError::Inconsistent => ModularError::NotFaithful("phi"),
        other => ModularError::Hopf(other.into()),
    })?;
    if h.coproduct(&delta) != h.tensor(&delta, &delta) {
        return Err(ModularError::NotGroupLike("Δ(δ) ≠ δ⊗δ".into()));
    }
    if !h.counit_of(&delta).is_one() {
        return Err(ModularError::NotGroupLike("ε(δ) ≠ 1".into()));
    }
    let delta_inv = h
        .left_mult_matrix(&delta)
        .solve(h.unit())
        .map_err(|_| ModularError::NotGroupLike("δ is not invertible".into()))?;
    if h.apply_antipode(&delta) != delta_inv {
        return Err(ModularError::NotGroupLike("S(δ) ≠ δ⁻¹".into()));
    }
    Ok((delta, delta_inv))
}

/// The automorphism `σ_f` with `f(ab) = f(b σ_f(a))`.
pub fn modular_automorphism(
    h: &HopfAlgebra,
    f: &[Scalar],
    label: &'static str,
) -> Result<Matrix, ModularError> {
    let b = gram_matrix(h, f);
    let b_inv = b.invert().map_err(|_| ModularError::NotFaithful(label))?;
    let sigma = b_inv.mul(&b.transpose());
    if !is_algebra_automorphism(h, &sigma) {
        return Err(ModularError::NotAutomorphism(label));
    }
    Ok(sigma)
}

pub fn is_algebra_automorphism(h: &HopfAlgebra, m: &Matrix) -> bool {
    let n = h.dim();
    if m.apply(h.unit()) != *h.unit() || m.invert().is_err() {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = m.apply(&h.product(&h.basis_element(i), &h.basis_element(j)));
            let rhs = h.product(&m.column(i), &m.column(j));
            lhs == rhs
        })
    })
}

/// The scalar `τ` with `φ∘S² = τφ`.
pub fn scaling_constant(h: &HopfAlgebra, phi: &[Scalar]) -> Result<Scalar, ModularError> {
    let s2 = h.antipode().mul(h.antipode());
    let phi_s2 = compose_functional(phi, &s2);
    let lead = phi.iter().position(|c| !c.is_zero()).ok_or(ModularError::NotProportional)?;
    let tau = phi_s2[lead].try_div(&phi[lead]).expect("nonzero");
    if phi.iter().zip(&phi_s2).all(|(p, q)| &(&tau * p) == q) {
        Ok(tau)
    } else {
        Err(ModularError::NotProportional)
    }
}

/// The group-like `g` with `(φ⊗ι)Δ(h) = φ(h)g` for all `h`, found without
/// reference to `S`.
pub fn coinvariance_grouplike(h: &HopfAlgebra, phi: &[Scalar]) -> Result<Vector, ModularError> {
    let n = h.dim();
    let apply = |i: usize| {
        let mut out = h.zero();
        for (j, k, c) in h.coproduct_terms(i) {
            out[*k].add_mul(c, &phi[*j]);
        }
        out
    };
    let lead = phi.iter().position(|c| !c.is_zero()).ok_or(ModularError::NotLeftIntegral)?;
    let inv = phi[lead].inv().expect("nonzero");
    let g: Vector = apply(lead).iter().map(|c| c * &inv).collect();
    for i in 0..n {
        let expected: Vector = g.iter().map(|c| c * &phi[i]).collect();
        if apply(i) != expected {
            return Err(ModularError::NotGroupLike(format!("(φ⊗ι)Δ(e_{i}) is not a multiple of g")));
        }
    }
    if h.coproduct(&g) != h.tensor(&g, &g) {
        return Err(ModularError::NotGroupLike("Δ(g) ≠ g⊗g".into()));
    }
    Ok(g)
}

/// The left cointegral `Λ ∈ A` (`aΛ = ε(a)Λ`), normalized, and the character
/// `α` with `Λa = α(a)Λ`.
pub fn cointegral_character(h: &HopfAlgebra) -> Result<(Vector, Vector), ModularError> {
    let n = h.dim();
    let mut system = Matrix::zeros(h.field(), n * n, n);
    for i in 0..n {
        let l = h.left_mult_matrix(&h.basis_element(i));
        for r in 0..n {
            for c in 0..n {
                let mut v = l.get(r, c).clone();
                if r == c {
                    v = &v - &h.counit()[i];
                }
                system.set(i * n + r, c, v);
            }
        }
    }
    let lambda = unique_integral(system.nullspace(), "cointegral")?;
    let lead = lambda.iter().position(|c| !c.is_zero()).expect("nonzero");
    let mut alpha = Vec::with_capacity(n);
    for i in 0..n {
        let prod = h.product(&lambda, &h.basis_element(i));
        let a = prod[lead].clone();
        if prod.iter().zip(&lambda).any(|(p, l)| p != &(&a * l)) {
            return Err(ModularError::NotGroupLike(format!("Λe_{i} is not a multiple of Λ")));
        }
        alpha.push(a);
    }
    Ok((lambda, alpha))
}

impl ModularData {
    /// Full computation from the normalized left integral.
    pub fn compute(h: &HopfAlgebra) -> Result<ModularData, ModularError> {
        let phi = left_integral(h)?;
        ModularData::with_left_integral(h, phi)
    }

    /// Same, starting from a caller-normalized left integral.
    pub fn with_left_integral(h: &HopfAlgebra, phi: Vector) -> Result<ModularData, ModularError> {
        h.require_valid()?;
        if !is_left_integral(h, &phi) {
            return Err(ModularError::NotLeftIntegral);
        }
        let psi = compose_functional(&phi, h.antipode());
        let (delta, delta_inv) = modular_element(h, &phi)?;
        let sigma = modular_automorphism(h, &phi, "phi")?;
        let sigma_prime = modular_automorphism(h, &psi, "psi")?;
        let tau = scaling_constant(h, &phi)?;
        Ok(ModularData {
            sigma_inv: sigma.invert().map_err(|e| ModularError::Hopf(e.into()))?,
            sigma_prime_inv: sigma_prime.invert().map_err(|e| ModularError::Hopf(e.into()))?,
            phi,
            psi,
            delta,
            delta_inv,
            sigma,
            sigma_prime,
            tau,
        })
    }

    /// `δ = 1`, i.e. left and right integrals agree.
    pub fn is_unimodular(&self, h: &HopfAlgebra) -> bool {
        self.delta == *h.unit()
    }
}
