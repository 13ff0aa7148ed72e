//! Builders for the standard example families: group algebras, function
//! algebras on finite groups, Sweedler's four-dimensional algebra and the
//! Taft algebras.

use thiserror::Error;

use crate::hopf::{Bialgebra, HopfAlgebra, HopfError};
use crate::linalg::{zero_vector, Matrix, Tensor3, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("Taft algebras need n >= 2, got {0}")]
    TaftOrder(u32),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    label: String,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupPresentation {
    /// Validates associativity, the identity and inverses.
    pub fn new(
        label: impl Into<String>,
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<GroupPresentation, CatalogError> {
        let n = table.len();
        let bad = |m: String| Err(CatalogError::InvalidGroup(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if names.len() != n {
            return bad(format!("{} names for order {n}", names.len()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return bad("table is not square or has out-of-range entries".into());
        }
        if identity >= n {
            return bad("identity index out of range".into());
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return bad(format!("{identity} is not an identity (fails at {a})"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(GroupPresentation {
            label: label.into(),
            names,
            table,
            identity,
            inverses,
        })
    }

    /// ℤ/n with elements `e, g, g^2, ...`.
    pub fn cyclic(n: usize) -> GroupPresentation {
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                k => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupPresentation::new(format!("Z{n}"), names, table, 0).expect("cyclic group")
    }

    /// The symmetric group on three letters; permutations in lexicographic
    /// order, composed as functions `(p q)(i) = p(q(i))`.
    pub fn symmetric3() -> GroupPresentation {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let names = vec!["()", "(12)", "(01)", "(012)", "(021)", "(02)"]
            .into_iter()
            .map(String::from)
            .collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        GroupPresentation::new("S3", names, table, 0).expect("S3")
    }

    /// Reads a table from JSON:
    ///
    /// ```text
    /// {"label": "Z3", "elements": ["e", "a", "b"],
    ///  "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}
    /// ```
    ///
    /// `table[a][b]` is the index of `ab`; the identity is found from the table.
    pub fn from_json(text: &str) -> Result<GroupPresentation, CatalogError> {
        #[derive(serde::Deserialize)]
        #[serde(deny_unknown_fields)]
        struct TableFile {
            label: String,
            elements: Vec<String>,
            table: Vec<Vec<usize>>,
        }
        let f: TableFile =
            serde_json::from_str(text).map_err(|e| CatalogError::InvalidGroup(e.to_string()))?;
        let n = f.table.len();
        let identity = (0..n)
            .find(|&e| {
                f.table.get(e).is_some_and(|row| row.iter().copied().eq(0..n))
                    && f.table.iter().enumerate().all(|(a, row)| row.get(e) == Some(&a))
            })
            .ok_or_else(|| CatalogError::InvalidGroup("no identity element".into()))?;
        GroupPresentation::new(f.label, f.elements, f.table, identity)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

fn delta_comul(field: &Field, n: usize, entries: impl Iterator<Item = (usize, usize, usize)>) -> Matrix {
    let mut comul = Matrix::zeros(field, n, n * n);
    for (i, j, k) in entries {
        comul.set(i, j * n + k, field.one());
    }
    comul
}

/// The group algebra kG: `e_g e_h = e_{gh}`, `Δ(e_g) = e_g ⊗ e_g`, `S(e_g) = e_{g⁻¹}`.
pub fn build_group_algebra(g: &GroupPresentation) -> Result<HopfAlgebra, CatalogError> {
    let f = Field::rational();
    let n = g.order();
    let mut mul = Tensor3::zeros(&f, n);
    for a in 0..n {
        for b in 0..n {
            mul.set(a, b, g.op(a, b), f.one());
        }
    }
    let mut unit = zero_vector(&f, n);
    unit[g.identity()] = f.one();
    let comul = delta_comul(&f, n, (0..n).map(|a| (a, a, a)));
    let counit = vec![f.one(); n];
    let mut s = Matrix::zeros(&f, n, n);
    for a in 0..n {
        s.set(g.inverse(a), a, f.one());
    }
    let b = Bialgebra::new(
        format!("group-{}", g.label()),
        &f,
        g.names().to_vec(),
        mul,
        unit,
        comul,
        counit,
    )?;
    Ok(HopfAlgebra::new(b, s)?)
}

/// Functions on G with pointwise product and `Δ(f)(p, q) = f(pq)`, in the
/// basis of point indicators `d[p]`.
pub fn build_function_algebra(g: &GroupPresentation) -> Result<HopfAlgebra, CatalogError> {
    let f = Field::rational();
    let n = g.order();
    let mut mul = Tensor3::zeros(&f, n);
    for p in 0..n {
        mul.set(p, p, p, f.one());
    }
    let unit = vec![f.one(); n];
    let comul = delta_comul(
        &f,
        n,
        (0..n).flat_map(|q| (0..n).map(move |r| (q, r))).map(|(q, r)| (g.op(q, r), q, r)),
    );
    let mut counit = zero_vector(&f, n);
    counit[g.identity()] = f.one();
    let mut s = Matrix::zeros(&f, n, n);
    for p in 0..n {
        s.set(g.inverse(p), p, f.one());
    }
    let names = g.names().iter().map(|p| format!("d[{p}]")).collect();
    let b = Bialgebra::new(format!("fun-{}", g.label()), &f, names, mul, unit, comul, counit)?;
    Ok(HopfAlgebra::new(b, s)?)
}

/// Sweedler's algebra H₄ over ℚ with basis `1, g, x, gx`.
pub fn build_sweedler() -> HopfAlgebra {
    let f = Field::rational();
    let minus_one = f.from_int(-1);
    taft_like(&f, 2, &minus_one, "sweedler").expect("Sweedler algebra")
}

/// The Taft algebra Tₙ(ζ) over ℚ(ζₙ): `gⁿ = 1`, `xⁿ = 0`, `xg = ζgx`,
/// `Δ(g) = g ⊗ g`, `Δ(x) = x ⊗ 1 + g ⊗ x`.
///
/// The basis is `g^i x^j` at index `j·n + i`.
pub fn build_taft(n: u32) -> Result<HopfAlgebra, CatalogError> {
    if n < 2 {
        return Err(CatalogError::TaftOrder(n));
    }
    let f = Field::cyclotomic(n);
    let zeta = f.root_of_unity(n).expect("root of unity in its own cyclotomic field");
    taft_like(&f, n as usize, &zeta, &format!("taft-{n}"))
}

fn taft_like(f: &Field, n: usize, zeta: &Scalar, name: &str) -> Result<HopfAlgebra, CatalogError> {
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let names = (0..dim)
        .map(|k| {
            let (i, j) = (k % n, k / n);
            let gp = match i {
                0 => String::new(),
                1 => "g".into(),
                i => format!("g^{i}"),
            };
            let xp = match j {
                0 => String::new(),
                1 => "x".into(),
                j => format!("x^{j}"),
            };
            if i == 0 && j == 0 {
                "1".into()
            } else {
                gp + &xp
            }
        })
        .collect::<Vec<String>>();

    let zeta_pow: Vec<Scalar> = (0..n * n)
        .scan(f.one(), |acc, _| {
            let cur = acc.clone();
            *acc = &*acc * zeta;
            Some(cur)
        })
        .collect();
    let mut mul = Tensor3::zeros(f, dim);
    for (i, j, k, l) in (0..n).flat_map(|i| {
        (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l))))
    }) {
        if j + l < n {
            // x^j g^k = ζ^{jk} g^k x^j
            mul.set(idx(i, j), idx(k, l), idx((i + k) % n, j + l), zeta_pow[(j * k) % n].clone());
        }
    }
    let mut unit = zero_vector(f, dim);
    unit[0] = f.one();
    let counit: Vector = (0..dim).map(|k| if k < n { f.one() } else { f.zero() }).collect();

    // algebra-only scaffold to multiply in A and A ⊗ A
    let scaffold = Bialgebra::new(
        name,
        f,
        names.clone(),
        mul.clone(),
        unit.clone(),
        Matrix::zeros(f, dim, dim * dim),
        counit.clone(),
    )?;
    let e = |k: usize| scaffold.basis_element(k);
    let (g, x) = (e(idx(1 % n, 0)), e(idx(0, 1)));
    let one = e(0);
    let dg = scaffold.tensor(&g, &g);
    let dx = crate::linalg::add_vectors(&scaffold.tensor(&x, &one), &scaffold.tensor(&g, &x));

    let mut comul = Matrix::zeros(f, dim, dim * dim);
    let g_inv = e(idx(n - 1, 0));
    let s_x = scaffold.product(&g_inv, &x).iter().map(|c| -c).collect::<Vector>();
    let mut antipode_cols = vec![Vec::new(); dim];
    for i in 0..n {
        for j in 0..n {
            let mut d = scaffold.tensor(&one, &one);
            let mut s = one.clone();
            for _ in 0..i {
                d = scaffold.tensor_product(&d, &dg);
            }
            for _ in 0..j {
                d = scaffold.tensor_product(&d, &dx);
                s = scaffold.product(&s_x, &s);
            }
            // S(g^i x^j) = S(x)^j S(g)^i
            for _ in 0..i {
                s = scaffold.product(&s, &g_inv);
            }
            for (c, v) in d.into_iter().enumerate() {
                comul.set(idx(i, j), c, v);
            }
            antipode_cols[idx(i, j)] = s;
        }
    }
    let s = Matrix::from_columns(f, dim, &antipode_cols);
    let b = Bialgebra::new(name, f, names, mul, unit, comul, counit)?;
    Ok(HopfAlgebra::new(b, s)?)
}

/// Every algebra used by the acceptance suite, in a fixed order.
pub fn builtins() -> Vec<HopfAlgebra> {
    let groups = [
        GroupPresentation::cyclic(2),
        GroupPresentation::cyclic(6),
        GroupPresentation::symmetric3(),
    ];
    let mut out = Vec::new();
    for g in &groups {
        out.push(build_group_algebra(g).expect("group algebra"));
    }
    for g in &groups {
        out.push(build_function_algebra(g).expect("function algebra"));
    }
    out.push(build_sweedler());
    for n in 2..=4 {
        out.push(build_taft(n).expect("taft"));
    }
    out
}

/// Looks up a builtin by its report name (`group-Z2`, `sweedler`, `taft-3`, ...).
pub fn builtin(name: &str) -> Option<HopfAlgebra> {
    if let Some(rest) = name.strip_prefix("taft-") {
        return rest.parse().ok().and_then(|n| build_taft(n).ok());
    }
    if name == "sweedler" {
        return Some(build_sweedler());
    }
    let group = |label: &str| -> Option<GroupPresentation> {
        if label == "S3" {
            Some(GroupPresentation::symmetric3())
        } else {
            label.strip_prefix('Z')?.parse().ok().filter(|&n| n >= 1).map(GroupPresentation::cyclic)
        }
    };
    if let Some(label) = name.strip_prefix("group-") {
        return build_group_algebra(&group(label)?).ok();
    }
    if let Some(label) = name.strip_prefix("fun-") {
        return build_function_algebra(&group(label)?).ok();
    }
    None
}
