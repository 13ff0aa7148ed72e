//! Sort checking and Sweedler-leg analysis.
//!
//! Each side of an identity is checked separately. A variable is either used
//! plainly (any number of times, meaning the same element) or through legs
//! `a(1) … a(k)`, each exactly once per summand, which stands for the
//! `(k−1)`-fold coproduct. Summands of a sum must use the same legs.

use std::collections::{BTreeMap, BTreeSet};

use super::ast::{Action, Expr, IdentityProgram, Sort};
use super::DslError;

/// An identity that passed the checks, with the leg count of every legged
/// variable on each side.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckedIdentity {
    pub program: IdentityProgram,
    pub sort: Sort,
    pub lhs_legs: BTreeMap<String, u32>,
    pub rhs_legs: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, PartialEq)]
enum Use {
    Plain,
    Legs(BTreeSet<u32>),
}

struct Checker<'a> {
    prog: &'a IdentityProgram,
}

impl Checker<'_> {
    fn sort_error<T>(&self, subterm: &Expr, msg: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Sort {
            identity: self.prog.name.clone(),
            subterm: subterm.to_string(),
            msg: msg.into(),
        })
    }

    fn leg_error<T>(&self, msg: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Legs { identity: self.prog.name.clone(), msg: msg.into() })
    }

    fn declared(&self, name: &str) -> Sort {
        self.prog
            .decls
            .iter()
            .find(|d| d.name == name)
            .map(|d| d.sort)
            .expect("parser only admits declared variables")
    }

    fn sort_of(&self, e: &Expr) -> Result<Sort, DslError> {
        match e {
            Expr::Var { name, .. } => Ok(self.declared(name)),
            Expr::Const(c) => Ok(c.sort()),
            Expr::Lit(_) => Ok(Sort::Scalar),
            Expr::Neg(x) => self.sort_of(x),
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                let (sl, sr) = (self.sort_of(l)?, self.sort_of(r)?);
                if sl != sr {
                    return self.sort_error(e, format!("cannot add {sl} and {sr}"));
                }
                Ok(sl)
            }
            Expr::Mul(l, r) => match (self.sort_of(l)?, self.sort_of(r)?) {
                (Sort::Scalar, s) | (s, Sort::Scalar) => Ok(s),
                (sl, sr) if sl == sr => Ok(sl),
                (sl, sr) => self.sort_error(e, format!("cannot multiply {sl} by {sr}")),
            },
            Expr::Apply(f, x) => match self.sort_of(x)? {
                Sort::Scalar => self.sort_error(e, format!("{} needs an argument in A or Ahat", f.name())),
                _ if f.is_functional() => Ok(Sort::Scalar),
                s => Ok(s),
            },
            Expr::Act(act, x, y) => {
                let (want_x, want_y, out) = act.signature();
                let (sx, sy) = (self.sort_of(x)?, self.sort_of(y)?);
                if sx != want_x || sy != want_y {
                    let usage = match act {
                        Action::Lact | Action::RactHat => "(A, Ahat)",
                        Action::Ract | Action::LactHat => "(Ahat, A)",
                    };
                    return self.sort_error(
                        e,
                        format!("{} takes {usage}, found ({sx}, {sy})", act.name()),
                    );
                }
                Ok(out)
            }
            Expr::Pair(x, y) => {
                let (sx, sy) = (self.sort_of(x)?, self.sort_of(y)?);
                if sx != Sort::A || sy != Sort::Ahat {
                    return self.sort_error(
                        e,
                        format!("pairing needs an A term and an Ahat term, found ({sx}, {sy})"),
                    );
                }
                Ok(Sort::Scalar)
            }
        }
    }

    fn merge_product(
        &self,
        mut acc: BTreeMap<String, Use>,
        other: BTreeMap<String, Use>,
    ) -> Result<BTreeMap<String, Use>, DslError> {
        for (name, u) in other {
            let merged = match (acc.remove(&name), u) {
                (None, u) => u,
                (Some(Use::Plain), Use::Plain) => Use::Plain,
                (Some(Use::Legs(mut a)), Use::Legs(b)) => {
                    if let Some(k) = a.intersection(&b).next() {
                        return self.leg_error(format!("leg {name}({k}) used twice in one product"));
                    }
                    a.extend(b);
                    Use::Legs(a)
                }
                _ => return self.leg_error(format!("`{name}` is used both with and without legs")),
            };
            acc.insert(name, merged);
        }
        Ok(acc)
    }

    fn legs(&self, e: &Expr) -> Result<BTreeMap<String, Use>, DslError> {
        let single = |name: &String, u: Use| BTreeMap::from([(name.clone(), u)]);
        match e {
            Expr::Var { name, leg: None } => Ok(single(name, Use::Plain)),
            Expr::Var { name, leg: Some(k) } => Ok(single(name, Use::Legs(BTreeSet::from([*k])))),
            Expr::Const(_) | Expr::Lit(_) => Ok(BTreeMap::new()),
            Expr::Neg(x) | Expr::Apply(_, x) => self.legs(x),
            Expr::Mul(l, r) | Expr::Act(_, l, r) | Expr::Pair(l, r) => {
                let left = self.legs(l)?;
                self.merge_product(left, self.legs(r)?)
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                let (left, right) = (self.legs(l)?, self.legs(r)?);
                let legged = |m: &BTreeMap<String, Use>| -> BTreeMap<String, BTreeSet<u32>> {
                    m.iter()
                        .filter_map(|(n, u)| match u {
                            Use::Legs(s) => Some((n.clone(), s.clone())),
                            Use::Plain => None,
                        })
                        .collect()
                };
                if legged(&left) != legged(&right) {
                    return self.leg_error(format!("summands of `{e}` use different Sweedler legs"));
                }
                let mut out = left;
                for (name, u) in right {
                    match (out.get(&name), &u) {
                        (Some(Use::Legs(_)), Use::Plain) | (Some(Use::Plain), Use::Legs(_)) => {
                            return self.leg_error(format!("`{name}` is used both with and without legs"))
                        }
                        _ => {
                            out.insert(name, u);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    fn side_legs(&self, e: &Expr) -> Result<(BTreeSet<String>, BTreeMap<String, u32>), DslError> {
        let uses = self.legs(e)?;
        let mut legs = BTreeMap::new();
        for (name, u) in &uses {
            if let Use::Legs(set) = u {
                let k = set.len() as u32;
                if set.iter().copied().ne(1..=k) {
                    let got: Vec<String> = set.iter().map(u32::to_string).collect();
                    return self.leg_error(format!(
                        "legs of `{name}` must be 1..{k} without gaps, found {{{}}}",
                        got.join(",")
                    ));
                }
                legs.insert(name.clone(), k);
            }
        }
        Ok((uses.into_keys().collect(), legs))
    }
}

pub fn check(prog: &IdentityProgram) -> Result<CheckedIdentity, DslError> {
    let c = Checker { prog };
    let sl = c.sort_of(&prog.lhs)?;
    let sr = c.sort_of(&prog.rhs)?;
    if sl != sr {
        return Err(DslError::Sort {
            identity: prog.name.clone(),
            subterm: format!("{} = {}", prog.lhs, prog.rhs),
            msg: format!("left side is {sl}, right side is {sr}"),
        });
    }
    let (free_l, lhs_legs) = c.side_legs(&prog.lhs)?;
    let (free_r, rhs_legs) = c.side_legs(&prog.rhs)?;
    if free_l != free_r {
        let show = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(",");
        return Err(DslError::Sort {
            identity: prog.name.clone(),
            subterm: format!("{} = {}", prog.lhs, prog.rhs),
            msg: format!("sides have different free variables {{{}}} vs {{{}}}", show(&free_l), show(&free_r)),
        });
    }
    if let Some(d) = prog.decls.iter().find(|d| !free_l.contains(&d.name)) {
        return Err(DslError::Sort {
            identity: prog.name.clone(),
            subterm: d.name.clone(),
            msg: "declared but never used".into(),
        });
    }
    Ok(CheckedIdentity { program: prog.clone(), sort: sl, lhs_legs, rhs_legs })
}
