use std::fmt;

use num_rational::BigRational;

/// The three sorts a term can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    A,
    Ahat,
    Scalar,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::A => "A",
            Sort::Ahat => "Ahat",
            Sort::Scalar => "scalar",
        })
    }
}

/// Unary maps. On a term of sort `Ahat` each resolves to its dual-side
/// counterpart (`sigma` to σ̂, `phi` to φ̂, `eps` to the dual counit, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    S,
    Sinv,
    S2,
    Sinv2,
    Sigma,
    SigmaInv,
    SigmaP,
    SigmaPInv,
    Eps,
    Phi,
    Psi,
}

impl Func {
    pub const ALL: [Func; 11] = [
        Func::S,
        Func::Sinv,
        Func::S2,
        Func::Sinv2,
        Func::Sigma,
        Func::SigmaInv,
        Func::SigmaP,
        Func::SigmaPInv,
        Func::Eps,
        Func::Phi,
        Func::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::S => "S",
            Func::Sinv => "Sinv",
            Func::S2 => "S2",
            Func::Sinv2 => "Sinv2",
            Func::Sigma => "sigma",
            Func::SigmaInv => "sigmainv",
            Func::SigmaP => "sigmap",
            Func::SigmaPInv => "sigmapinv",
            Func::Eps => "eps",
            Func::Phi => "phi",
            Func::Psi => "psi",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Functionals land in the scalars; the rest are endomorphisms.
    pub fn is_functional(self) -> bool {
        matches!(self, Func::Eps | Func::Phi | Func::Psi)
    }
}

/// The four actions, with argument sorts in call order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// `lact(a, y) = a ⇀ y`, in `Ahat`.
    Lact,
    /// `ract(y, a) = y ↼ a`, in `Ahat`.
    Ract,
    /// `lacthat(y, a) = y ⇀ a = Σ a₍₁₎⟨a₍₂₎, y⟩`, in `A`.
    LactHat,
    /// `racthat(a, y) = a ↼ y = Σ ⟨a₍₁₎, y⟩a₍₂₎`, in `A`.
    RactHat,
}

impl Action {
    pub const ALL: [Action; 4] = [Action::Lact, Action::Ract, Action::LactHat, Action::RactHat];

    pub fn name(self) -> &'static str {
        match self {
            Action::Lact => "lact",
            Action::Ract => "ract",
            Action::LactHat => "lacthat",
            Action::RactHat => "racthat",
        }
    }

    pub fn from_name(s: &str) -> Option<Action> {
        Action::ALL.into_iter().find(|a| a.name() == s)
    }

    /// `(first argument, second argument, result)`.
    pub fn signature(self) -> (Sort, Sort, Sort) {
        match self {
            Action::Lact => (Sort::A, Sort::Ahat, Sort::Ahat),
            Action::Ract => (Sort::Ahat, Sort::A, Sort::Ahat),
            Action::LactHat => (Sort::Ahat, Sort::A, Sort::A),
            Action::RactHat => (Sort::A, Sort::Ahat, Sort::A),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Const {
    One,
    OneHat,
    Delta,
    DeltaInv,
    Dhat,
    DhatInv,
    Tau,
}

impl Const {
    pub const ALL: [Const; 7] = [
        Const::One,
        Const::OneHat,
        Const::Delta,
        Const::DeltaInv,
        Const::Dhat,
        Const::DhatInv,
        Const::Tau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Const::One => "one",
            Const::OneHat => "onehat",
            Const::Delta => "delta",
            Const::DeltaInv => "deltainv",
            Const::Dhat => "dhat",
            Const::DhatInv => "dhatinv",
            Const::Tau => "tau",
        }
    }

    pub fn from_name(s: &str) -> Option<Const> {
        Const::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn sort(self) -> Sort {
        match self {
            Const::One | Const::Delta | Const::DeltaInv => Sort::A,
            Const::OneHat | Const::Dhat | Const::DhatInv => Sort::Ahat,
            Const::Tau => Sort::Scalar,
        }
    }
}

/// Words that cannot be used as variable names.
pub fn is_reserved(s: &str) -> bool {
    matches!(s, "forall" | "in" | "A" | "Ahat")
        || Func::from_name(s).is_some()
        || Action::from_name(s).is_some()
        || Const::from_name(s).is_some()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// A declared variable, optionally a Sweedler leg `a(k)`.
    Var { name: String, leg: Option<u32> },
    Const(Const),
    /// Non-negative rational literal; negation is `Neg`.
    Lit(BigRational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Apply(Func, Box<Expr>),
    Act(Action, Box<Expr>, Box<Expr>),
    /// `<a, y>` with `a` in `A` and `y` in `Ahat`.
    Pair(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decl {
    pub name: String,
    pub sort: Sort,
}

/// A parsed identity `name: forall decls . lhs = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityProgram {
    pub name: String,
    pub decls: Vec<Decl>,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Neg(_) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.fmt_at(0, f)?;
            return write!(f, ")");
        }
        match self {
            Expr::Var { name, leg: None } => write!(f, "{name}"),
            Expr::Var { name, leg: Some(k) } => write!(f, "{name}({k})"),
            Expr::Const(c) => write!(f, "{}", c.name()),
            Expr::Lit(q) => write!(f, "{q}"),
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.fmt_at(2, f)
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                l.fmt_at(0, f)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { "+" } else { "-" })?;
                r.fmt_at(1, f)
            }
            Expr::Mul(l, r) => {
                l.fmt_at(1, f)?;
                write!(f, " * ")?;
                r.fmt_at(2, f)
            }
            Expr::Apply(func, x) => {
                write!(f, "{}(", func.name())?;
                x.fmt_at(0, f)?;
                write!(f, ")")
            }
            Expr::Act(act, x, y) => {
                write!(f, "{}(", act.name())?;
                x.fmt_at(0, f)?;
                write!(f, ", ")?;
                y.fmt_at(0, f)?;
                write!(f, ")")
            }
            Expr::Pair(x, y) => {
                write!(f, "<")?;
                x.fmt_at(0, f)?;
                write!(f, ", ")?;
                y.fmt_at(0, f)?;
                write!(f, ">")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(0, f)
    }
}

impl fmt::Display for IdentityProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: forall", self.name)?;
        for (i, d) in self.decls.iter().enumerate() {
            write!(f, "{} {} in {}", if i == 0 { "" } else { "," }, d.name, d.sort)?;
        }
        write!(f, " . {} = {}", self.lhs, self.rhs)
    }
}
