//! Deterministic plain-text reports, one fact per line, each line carrying
//! the algebra name. Shared by the CLI and the acceptance tests.

use crate::dsl::{run_corpus, CheckedIdentity, EvalContext};
use crate::duality::PairedSystem;
use crate::hopf::{fmt_vector, status, HopfAlgebra};
use crate::linalg::Matrix;
use crate::modular::ModularData;
use crate::verification::{full_verification, VerificationReport};

/// Report text and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn new() -> Report {
        Report { text: String::new(), passed: true }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn verification(&mut self, r: &VerificationReport) {
        self.text.push_str(&r.render());
        self.passed &= r.passed();
    }

    fn failure(&mut self, what: &str, alg: &str, err: impl std::fmt::Display) {
        self.line(format!("{what} {alg} FAIL {err}"));
        self.passed = false;
    }
}

/// Axioms plus invertibility of the Galois maps `T₁`, `T₂`.
pub fn axioms(h: &HopfAlgebra) -> Report {
    let name = h.name();
    let mut r = Report::new();
    let v = h.validate();
    r.text.push_str(&v.render(name));
    r.passed &= v.passed();
    let (t1, t2) = h.galois_matrices();
    for (label, t) in [("T1", t1), ("T2", t2)] {
        let ok = t.invert().is_ok();
        r.line(format!("regularity.{label} {name} {}", status(ok)));
        r.passed &= ok;
    }
    r
}

fn order_line(r: &mut Report, what: &str, alg: &str, m: &Matrix, limit: usize) {
    match m.multiplicative_order(limit) {
        Some(k) => r.line(format!("order.{what} {alg} {k}")),
        None => r.line(format!("order.{what} {alg} >{limit}")),
    }
}

fn modular_lines(r: &mut Report, alg: &str, h: &HopfAlgebra, md: &ModularData, prefix: &str) {
    r.line(format!("{prefix}phi {alg} {}", fmt_vector(&md.phi)));
    r.line(format!("{prefix}psi {alg} {}", fmt_vector(&md.psi)));
    r.line(format!("{prefix}delta {alg} {}", fmt_vector(&md.delta)));
    r.line(format!("{prefix}delta-inv {alg} {}", fmt_vector(&md.delta_inv)));
    for (label, m) in [("sigma", &md.sigma), ("sigmap", &md.sigma_prime)] {
        for (i, b) in h.basis().iter().enumerate() {
            r.line(format!("{prefix}{label}({b}) {alg} {}", fmt_vector(&m.column(i))));
        }
    }
    r.line(format!("{prefix}tau {alg} {}", md.tau));
    r.line(format!("{prefix}unimodular {alg} {}", if md.is_unimodular(h) { "yes" } else { "no" }));
}

/// Integrals, modular element, modular automorphisms (column by column),
/// scaling constant and the orders of `S`, `S²`, `σ`, `σ′`.
pub fn modular(h: &HopfAlgebra) -> Report {
    let alg = h.name();
    let mut r = Report::new();
    let md = match ModularData::compute(h) {
        Ok(md) => md,
        Err(e) => {
            r.failure("modular", alg, e);
            return r;
        }
    };
    r.line(format!("field {alg} {}", h.field().spec()));
    r.line(format!("dim {alg} {}", h.dim()));
    modular_lines(&mut r, alg, h, &md, "");
    let n = h.dim();
    let limit = 4 * n * n;
    order_line(&mut r, "S", alg, h.antipode(), limit);
    order_line(&mut r, "S2", alg, &h.antipode().mul(h.antipode()), limit);
    order_line(&mut r, "sigma", alg, &md.sigma, limit);
    order_line(&mut r, "sigmap", alg, &md.sigma_prime, limit);
    r
}

/// Pairing formulas, both forms of the S⁴ formula, and biduality.
pub fn radford(sys: &PairedSystem) -> Report {
    let alg = sys.primal.name().to_string();
    let mut r = Report::new();
    match full_verification(sys) {
        Ok(v) => r.verification(&v),
        Err(e) => r.failure("verification", &alg, e),
    }
    r
}

/// Evaluates a checked corpus; lines are the identity ids as written.
pub fn corpus(sys: &PairedSystem, ids: &[CheckedIdentity]) -> Report {
    let mut r = Report::new();
    r.verification(&run_corpus(&EvalContext::new(sys), ids));
    r
}

/// Everything: axioms, modular data on both sides, the hard-coded
/// verification and the given corpus (ids prefixed `dsl.`), then a summary.
/// Stops after the axioms if they fail.
pub fn full(h: &HopfAlgebra, ids: &[CheckedIdentity]) -> Report {
    let alg = h.name().to_string();
    let mut r = axioms(h);
    let mut checks = 0;
    if r.passed {
        let m = modular(h);
        r.text.push_str(&m.text);
        r.passed &= m.passed;
        if r.passed {
            match PairedSystem::new(h) {
                Ok(sys) => {
                    // dual-side lines carry the primal name too, so one grep finds both
                    modular_lines(&mut r, &alg, &sys.dual, &sys.dual_modular, "dual.");
                    let v = radford(&sys);
                    r.text.push_str(&v.text);
                    r.passed &= v.passed;
                    let mut dsl = run_corpus(&EvalContext::new(&sys), ids);
                    for res in &mut dsl.results {
                        res.id = format!("dsl.{}", res.id);
                    }
                    r.verification(&dsl);
                }
                Err(e) => r.failure("dual", &alg, e),
            }
        }
    }
    let mut failed = 0;
    for l in r.text.lines() {
        match l.split(' ').nth(2) {
            Some("PASS") => checks += 1,
            Some("FAIL") => {
                checks += 1;
                failed += 1;
            }
            _ => {}
        }
    }
    r.line(format!("summary {alg} {} checks={checks} failed={failed}", status(r.passed)));
    r
}
