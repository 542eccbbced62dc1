//! Built-in configurations (π̄0)–(π̄5): bicharacter, bilinear form,
//! fundamental weights, `ᾱ_0`, `Π̄_0` and `c_π̄`.

use std::fmt;

use serde::Serialize;

use crate::lattice::{Bicharacter, Weight};
use crate::scalars::MonomialScalar;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SuperType {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl SuperType {
    pub const ALL: [SuperType; 7] =
        [SuperType::I, SuperType::II, SuperType::III, SuperType::IV, SuperType::V, SuperType::VI, SuperType::VII];

    pub fn roman(self) -> &'static str {
        match self {
            SuperType::I => "i",
            SuperType::II => "ii",
            SuperType::III => "iii",
            SuperType::IV => "iv",
            SuperType::V => "v",
            SuperType::VI => "vi",
            SuperType::VII => "vii",
        }
    }

    pub fn from_roman(s: &str) -> Option<Self> {
        SuperType::ALL.into_iter().find(|t| t.roman() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Pibar0,
    /// Cartan type: Dynkin letter `A`..`G` and rank.
    Pibar1 { kind: char, rank: usize },
    /// Super type (i)–(vii). `m`, `n` are ignored by (v)–(vii), `a` only
    /// matters for (vii); (iii) reads its rank from `n`.
    Pibar2 { kind: SuperType, m: usize, n: usize, a: i64 },
    /// `second = false` for (π̄3)(i), `true` for (π̄3)(ii).
    Pibar3 { second: bool },
    Pibar4,
    Pibar5,
}

impl Family {
    pub fn tag(&self) -> String {
        match self {
            Family::Pibar0 => "pibar0".into(),
            Family::Pibar1 { .. } => "pibar1".into(),
            Family::Pibar2 { kind, .. } => format!("pibar2.{}", kind.roman()),
            Family::Pibar3 { second } => format!("pibar3.{}", if *second { "ii" } else { "i" }),
            Family::Pibar4 => "pibar4".into(),
            Family::Pibar5 => "pibar5".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pibar1 { kind, rank } => write!(f, "pibar1 {kind}{rank}"),
            Family::Pibar2 { kind: SuperType::I | SuperType::II | SuperType::IV, m, n, .. } => {
                write!(f, "{} m={m} n={n}", self.tag())
            }
            Family::Pibar2 { kind: SuperType::III, n, .. } => write!(f, "{} n={n}", self.tag()),
            Family::Pibar2 { kind: SuperType::VII, a, .. } => write!(f, "{} a={a}", self.tag()),
            _ => write!(f, "{}", self.tag()),
        }
    }
}

/// Scalar parameters of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogParams {
    /// The value substituted for the generic parameter `q`.
    pub q: MonomialScalar,
    /// `x` of (π̄0) and (π̄3); defaults depend on the family.
    pub x: Option<MonomialScalar>,
    /// `y` of (π̄3).
    pub y: Option<MonomialScalar>,
}

impl Default for CatalogParams {
    fn default() -> Self {
        CatalogParams { q: MonomialScalar::q_pow(1), x: None, y: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogConfig {
    pub family: Family,
    pub bichar: Bicharacter,
    /// `(·|·)` on the full lattice.
    pub form: Vec<Vec<i64>>,
    /// `k̄ = det[(ᾱ_i|ᾱ_j)]`.
    pub kbar: i64,
    pub fundamental: Vec<Weight>,
    pub alpha0: Weight,
    pub pi0: Vec<Weight>,
    pub c_pibar: u32,
    pub q: MonomialScalar,
    pub x: Option<MonomialScalar>,
    pub y: Option<MonomialScalar>,
}

impl CatalogConfig {
    pub fn ell(&self) -> usize {
        self.bichar.ell
    }

    /// The simple root `ᾱ_i` (0-based) as a full-length weight.
    pub fn simple(&self, i: usize) -> Weight {
        Weight::basis(self.bichar.dim(), i)
    }

    pub fn form_eval(&self, a: &Weight, b: &Weight) -> i64 {
        let mut s = 0;
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                s += x * self.form[i][j] * y;
            }
        }
        s
    }
}

fn band(ell: usize) -> Vec<Vec<i64>> {
    vec![vec![0; ell]; ell]
}

fn link(x: &mut [Vec<i64>], i: usize, j: usize, v: i64) {
    x[i][j] = v;
    x[j][i] = v;
}

/// Symmetrized Cartan data with short roots of square length 2.
fn cartan_form(kind: char, r: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::InvalidInput(format!("no Cartan type {kind}{r}"));
    let mut x = band(r);
    match kind {
        'A' if r >= 1 => {
            for i in 0..r {
                x[i][i] = 2;
                if i + 1 < r {
                    link(&mut x, i, i + 1, -1);
                }
            }
        }
        'B' if r >= 2 => {
            for i in 0..r {
                x[i][i] = if i + 1 < r { 4 } else { 2 };
                if i + 1 < r {
                    link(&mut x, i, i + 1, -2);
                }
            }
        }
        'C' if r >= 2 => {
            for i in 0..r {
                x[i][i] = if i + 1 < r { 2 } else { 4 };
                if i + 2 < r {
                    link(&mut x, i, i + 1, -1);
                }
            }
            link(&mut x, r - 2, r - 1, -2);
        }
        'D' if r >= 4 => {
            for i in 0..r {
                x[i][i] = 2;
            }
            for i in 0..r - 2 {
                link(&mut x, i, i + 1, -1);
            }
            link(&mut x, r - 3, r - 1, -1);
        }
        'E' if (6..=8).contains(&r) => {
            for i in 0..r {
                x[i][i] = 2;
            }
            link(&mut x, 0, 2, -1);
            link(&mut x, 1, 3, -1);
            for i in 2..r - 1 {
                link(&mut x, i, i + 1, -1);
            }
        }
        'F' if r == 4 => {
            x[0][0] = 4;
            x[1][1] = 4;
            x[2][2] = 2;
            x[3][3] = 2;
            link(&mut x, 0, 1, -2);
            link(&mut x, 1, 2, -2);
            link(&mut x, 2, 3, -1);
        }
        'G' if r == 2 => {
            x[0][0] = 2;
            x[1][1] = 6;
            link(&mut x, 0, 1, -3);
        }
        _ => return Err(bad()),
    }
    Ok(x)
}

/// The `sl(m+1|n+1)`-type matrix of (π̄2)(i), of size `m+n+1`.
fn sl_form(m: usize, n: usize) -> Vec<Vec<i64>> {
    let ell = m + n + 1;
    let mut x = band(ell);
    for i in 0..m {
        x[i][i] = 2;
        link(&mut x, i, i + 1, -1);
    }
    for j in m + 1..ell {
        x[j][j] = -2;
        link(&mut x, j - 1, j, 1);
    }
    x
}

fn super_form(kind: SuperType, m: usize, n: usize, a: i64) -> Result<Vec<Vec<i64>>> {
    let inv = |msg: &str| Err(Error::InvalidInput(msg.to_string()));
    Ok(match kind {
        SuperType::I => {
            if n < 1 || m < n {
                return inv("pibar2.i needs m >= n >= 1");
            }
            sl_form(m, n)
        }
        SuperType::II => {
            if m < 1 || n < 1 {
                return inv("pibar2.ii needs m, n >= 1");
            }
            let ell = m + n;
            let mut x = band(ell);
            for i in 0..n - 1 {
                x[i][i] = -2;
                link(&mut x, i, i + 1, 1);
            }
            for j in n..ell - 1 {
                x[j][j] = 2;
            }
            for j in n..ell {
                link(&mut x, j - 1, j, -1);
            }
            x[ell - 1][ell - 1] = 1;
            x
        }
        SuperType::III => {
            if n < 3 {
                return inv("pibar2.iii needs n >= 3");
            }
            let mut x = band(n);
            for i in 1..n - 1 {
                x[i][i] = 2;
                link(&mut x, i - 1, i, -1);
            }
            x[n - 1][n - 1] = 4;
            link(&mut x, n - 2, n - 1, -2);
            x
        }
        SuperType::IV => {
            if m < 2 || n < 1 {
                return inv("pibar2.iv needs m >= 2 and n >= 1");
            }
            let ell = m + n;
            let mut x = band(ell);
            for i in 0..n - 1 {
                x[i][i] = -2;
                link(&mut x, i, i + 1, 1);
            }
            for j in n..ell - 1 {
                x[j][j] = 2;
                link(&mut x, j - 1, j, -1);
            }
            x[ell - 1][ell - 1] = 2;
            link(&mut x, ell - 2, ell - 1, 0);
            link(&mut x, ell - 3, ell - 1, -1);
            x
        }
        SuperType::V => {
            let mut x = band(4);
            x[1][1] = 2;
            x[2][2] = 4;
            x[3][3] = 4;
            link(&mut x, 0, 1, -1);
            link(&mut x, 1, 2, -2);
            link(&mut x, 2, 3, -2);
            x
        }
        SuperType::VI => {
            let mut x = band(3);
            x[1][1] = 2;
            x[2][2] = 6;
            link(&mut x, 0, 1, -1);
            link(&mut x, 1, 2, -3);
            x
        }
        SuperType::VII => {
            if a == 0 || a == -1 {
                return inv("pibar2.vii needs a not in {0, -1}");
            }
            let mut x = band(3);
            x[0][0] = -2;
            x[2][2] = -2 * a;
            link(&mut x, 0, 1, 1);
            link(&mut x, 1, 2, a);
            x
        }
    })
}

/// Determinant of a small integer matrix by fraction-free elimination.
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Adjugate, so that `m · adj(m) = det(m) · I`.
pub fn int_adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = s * int_det(&minor);
        }
    }
    adj
}

/// Builds the π-block of a bicharacter from `q_ii` and the products
/// `q_ij q_ji`, storing the product above the diagonal and 1 below.
fn bichar_from(diag: &[MonomialScalar], prod: impl Fn(usize, usize) -> MonomialScalar, dim: usize) -> Vec<Vec<MonomialScalar>> {
    let ell = diag.len();
    let mut mat = vec![vec![MonomialScalar::ONE; dim]; dim];
    for i in 0..ell {
        mat[i][i] = diag[i];
        for j in i + 1..ell {
            mat[i][j] = prod(i, j);
        }
    }
    mat
}

fn pi_weight(dim: usize, coeffs: &[i64]) -> Weight {
    Weight::extend(coeffs, dim)
}

fn simples_except(dim: usize, ell: usize, skip: &[usize]) -> Vec<Weight> {
    (0..ell).filter(|i| !skip.contains(i)).map(|i| Weight::basis(dim, i)).collect()
}

fn adjugate_fundamentals(x: &[Vec<i64>]) -> Vec<Weight> {
    let adj = int_adjugate(x);
    let n = x.len();
    (0..n).map(|i| Weight((0..n).map(|k| adj[k][i]).collect())).collect()
}

pub fn build_catalog(family: Family, params: CatalogParams) -> Result<CatalogConfig> {
    let q = params.q;
    if q.q_exp() == 0 {
        return Err(Error::InvalidInput(format!("q = {q} is a root of unity")));
    }
    let minus = MonomialScalar::MINUS_ONE;
    let mut x_param = None;
    let mut y_param = None;
    let (bichar, form, fundamental, alpha0, pi0, c_pibar);
    match family {
        Family::Pibar0 => {
            let x = params.x.unwrap_or(q);
            if x.q_exp() == 0 {
                return Err(Error::InvalidInput("pibar0 needs x of infinite order".into()));
            }
            x_param = Some(x);
            let one = MonomialScalar::ONE;
            bichar = Bicharacter::new(vec![vec![one, one], vec![x, one]], 1, 1)?;
            form = vec![vec![0, 1], vec![1, 0]];
            fundamental = vec![Weight(vec![0, 1])];
            alpha0 = Weight::zero(2);
            pi0 = vec![];
            c_pibar = 0;
        }
        Family::Pibar1 { kind, rank } => {
            let x = cartan_form(kind, rank)?;
            let diag: Vec<_> = (0..rank).map(|i| q.pow(x[i][i])).collect();
            bichar = Bicharacter::new(bichar_from(&diag, |i, j| q.pow(2 * x[i][j]), rank), rank, 0)?;
            fundamental = adjugate_fundamentals(&x);
            form = x;
            alpha0 = Weight::zero(rank);
            pi0 = simples_except(rank, rank, &[]);
            c_pibar = 0;
        }
        Family::Pibar2 { kind, m, n, a } => {
            let x = super_form(kind, m, n, a)?;
            let ell = x.len();
            let diag: Vec<_> = (0..ell).map(|i| if x[i][i] == 0 { minus } else { q.pow(x[i][i]) }).collect();
            let singular = int_det(&x) == 0;
            let dim = if singular { ell + 1 } else { ell };
            let mut mat = bichar_from(&diag, |i, j| q.pow(2 * x[i][j]), dim);
            let mut f = band(dim);
            for i in 0..ell {
                f[i][..ell].copy_from_slice(&x[i]);
            }
            if singular {
                // sl(m|m): adjoin ε_1
                let e = ell;
                mat[e][e] = q;
                mat[0][e] = q.pow(2);
                f[e][e] = 1;
                f[e][0] = 1;
                f[0][e] = 1;
                let eps = |i: usize| -> Weight {
                    let mut w = Weight::basis(dim, e);
                    for t in 0..i {
                        w.0[t] -= 1;
                    }
                    w
                };
                let mut fw = Vec::with_capacity(ell);
                let mut acc = Weight::zero(dim);
                for i in 0..=m {
                    acc = acc.add(&eps(i));
                    fw.push(acc.clone());
                }
                for i in m + 1..ell {
                    acc = acc.sub(&eps(i));
                    fw.push(acc.clone());
                }
                fundamental = fw;
            } else {
                fundamental = adjugate_fundamentals(&x);
            }
            bichar = Bicharacter::new(mat, ell, dim - ell)?;
            form = f;
            let ones = |from: usize, to: usize| -> Vec<i64> { (0..ell).map(|i| ((from..=to).contains(&i)) as i64).collect() };
            match kind {
                SuperType::I => {
                    alpha0 = Weight::zero(dim);
                    pi0 = simples_except(dim, ell, &[m]);
                    c_pibar = 0;
                }
                SuperType::II => {
                    alpha0 = pi_weight(dim, &ones(n - 1, ell - 1));
                    let mut p = vec![alpha0.clone()];
                    p.extend(simples_except(dim, ell, &[n - 1]));
                    pi0 = p;
                    c_pibar = 2 * m as u32;
                }
                SuperType::III => {
                    alpha0 = Weight::zero(dim);
                    pi0 = simples_except(dim, ell, &[0]);
                    c_pibar = 0;
                }
                SuperType::IV => {
                    let mut v = ones(n - 1, ell - 3);
                    for c in v.iter_mut() {
                        *c *= 2;
                    }
                    v[ell - 2] = 1;
                    v[ell - 1] = 1;
                    alpha0 = pi_weight(dim, &v);
                    let mut p = vec![alpha0.clone()];
                    p.extend(simples_except(dim, ell, &[n - 1]));
                    pi0 = p;
                    c_pibar = m as u32;
                }
                SuperType::V => {
                    alpha0 = pi_weight(dim, &[2, 3, 2, 1]);
                    pi0 = vec![alpha0.clone(), Weight::basis(4, 1), Weight::basis(4, 2), Weight::basis(4, 3)];
                    c_pibar = 4;
                }
                SuperType::VI => {
                    alpha0 = pi_weight(dim, &[1, 2, 1]);
                    pi0 = vec![alpha0.clone(), Weight::basis(3, 1), Weight::basis(3, 2)];
                    c_pibar = 6;
                }
                SuperType::VII => {
                    alpha0 = pi_weight(dim, &[1, 2, 1]);
                    pi0 = vec![alpha0.clone(), Weight::basis(3, 0), Weight::basis(3, 2)];
                    c_pibar = 2;
                }
            }
        }
        Family::Pibar3 { second } => {
            let x = params.x.unwrap_or(q.pow(2));
            let y = params.y.unwrap_or(if second { minus.mul(q.pow(-2)) } else { q.pow(-4) });
            let xy = x.mul(y);
            if x.q_exp() == 0 || y.q_exp() == 0 || xy.is_one() {
                return Err(Error::InvalidInput("pibar3 needs x, y of infinite order with xy != 1".into()));
            }
            if second == (xy.q_exp() != 0) {
                return Err(Error::InvalidInput(format!(
                    "pibar3.{} needs xy {} root of unity",
                    if second { "ii" } else { "i" },
                    if second { "a" } else { "not a" }
                )));
            }
            x_param = Some(x);
            y_param = Some(y);
            let dim = if second { 4 } else { 3 };
            let diag = [x, minus, y];
            let mut mat = bichar_from(&diag, |i, j| match (i, j) {
                (0, 1) => x.inv(),
                (1, 2) => y.inv(),
                _ => MonomialScalar::ONE,
            }, dim);
            let mut f = band(dim);
            let base = [[2, -1, 0], [-1, 0, 2], [0, 2, -4]];
            for i in 0..3 {
                for j in 0..3 {
                    f[i][j] = base[i][j];
                }
            }
            if second {
                mat[3][1] = x;
                f[3][1] = 1;
                f[1][3] = 1;
                fundamental = vec![Weight::basis(4, 0), Weight::basis(4, 3), Weight::basis(4, 2)];
                alpha0 = Weight::zero(4);
                pi0 = vec![Weight::basis(4, 0), Weight::basis(4, 2)];
                c_pibar = 0;
            } else {
                fundamental = vec![Weight::basis(3, 0), Weight(vec![1, 2, 1]), Weight::basis(3, 2)];
                alpha0 = Weight(vec![1, 2, 1]);
                pi0 = vec![alpha0.clone(), Weight::basis(3, 0), Weight::basis(3, 2)];
                c_pibar = 2;
            }
            bichar = Bicharacter::new(mat, 3, dim - 3)?;
            form = f;
        }
        Family::Pibar4 => {
            let x = sl_form(2, 1);
            let g = [0i64, 0, 1, 1];
            let sign = |e: i64| if e % 2 == 0 { MonomialScalar::ONE } else { minus };
            let diag: Vec<_> = (0..4).map(|i| sign(g[i]).mul(q.pow(x[i][i]))).collect();
            bichar = Bicharacter::new(bichar_from(&diag, |i, j| sign(g[i] * g[j]).mul(q.pow(2 * x[i][j])), 4), 4, 0)?;
            fundamental = adjugate_fundamentals(&x);
            form = x;
            alpha0 = Weight(vec![1, 2, 3, 1]);
            pi0 = vec![alpha0.clone(), Weight::basis(4, 0), Weight::basis(4, 1), Weight::basis(4, 3)];
            c_pibar = 3;
        }
        Family::Pibar5 => {
            let x = sl_form(1, 0);
            let zeta = MonomialScalar::root_of_unity(1, 3);
            let g = [0i64, 1];
            let diag: Vec<_> = (0..2).map(|i| zeta.pow(g[i]).mul(q.pow(x[i][i]))).collect();
            bichar = Bicharacter::new(bichar_from(&diag, |i, j| zeta.pow(2 * g[i] * g[j]).mul(q.pow(2 * x[i][j])), 2), 2, 0)?;
            fundamental = adjugate_fundamentals(&x);
            form = x;
            alpha0 = Weight(vec![1, 2]);
            pi0 = vec![alpha0.clone(), Weight::basis(2, 0)];
            c_pibar = 2;
        }
    }
    let ell = bichar.ell;
    let kbar = int_det(&form.iter().take(ell).map(|r| r[..ell].to_vec()).collect::<Vec<_>>());
    let fundamental = fundamental.into_iter().map(|w| Weight::extend(&w.0, bichar.dim())).collect();
    Ok(CatalogConfig { family, bichar, form, kbar, fundamental, alpha0, pi0, c_pibar, q, x: x_param, y: y_param })
}

/// Parses a family tag and its integer parameters.
pub fn family_from_tag(tag: &str, kind: Option<char>, rank: Option<usize>, m: Option<usize>, n: Option<usize>, a: Option<i64>) -> Result<Family> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Error::InvalidInput(format!("{tag} needs parameter {name}")));
    match tag {
        "pibar0" => Ok(Family::Pibar0),
        "pibar1" => Ok(Family::Pibar1 {
            kind: kind.ok_or_else(|| Error::InvalidInput("pibar1 needs a type letter".into()))?.to_ascii_uppercase(),
            rank: need(rank, "rank")?,
        }),
        "pibar3.i" => Ok(Family::Pibar3 { second: false }),
        "pibar3.ii" => Ok(Family::Pibar3 { second: true }),
        "pibar4" => Ok(Family::Pibar4),
        "pibar5" => Ok(Family::Pibar5),
        t => {
            let kind = t
                .strip_prefix("pibar2.")
                .and_then(SuperType::from_roman)
                .ok_or_else(|| Error::InvalidInput(format!("unknown family {t:?}")))?;
            let (m, n) = match kind {
                SuperType::I | SuperType::II | SuperType::IV => (need(m, "m")?, need(n, "n")?),
                SuperType::III => (0, need(n.or(rank), "n")?),
                _ => (0, 0),
            };
            let a = if kind == SuperType::VII { a.ok_or_else(|| Error::InvalidInput("pibar2.vii needs parameter a".into()))? } else { 0 };
            Ok(Family::Pibar2 { kind, m, n, a })
        }
    }
}

/// A representative list of catalog entries up to the given rank, used by
/// tests and the `catalog` subcommand.
pub fn standard_entries(max_rank: usize) -> Vec<Family> {
    let mut out = vec![Family::Pibar0];
    for (kind, ranks) in [('A', 1..=4), ('B', 2..=4), ('C', 3..=4), ('D', 4..=4), ('F', 4..=4), ('G', 2..=2)] {
        for rank in ranks {
            out.push(Family::Pibar1 { kind, rank });
        }
    }
    let s = |kind, m, n, a| Family::Pibar2 { kind, m, n, a };
    out.extend([
        s(SuperType::I, 1, 1, 0),
        s(SuperType::I, 2, 1, 0),
        s(SuperType::II, 1, 1, 0),
        s(SuperType::II, 2, 1, 0),
        s(SuperType::II, 1, 2, 0),
        s(SuperType::II, 2, 2, 0),
        s(SuperType::III, 0, 3, 0),
        s(SuperType::III, 0, 4, 0),
        s(SuperType::IV, 2, 1, 0),
        s(SuperType::IV, 3, 1, 0),
        s(SuperType::IV, 2, 2, 0),
        s(SuperType::V, 0, 0, 0),
        s(SuperType::VI, 0, 0, 0),
        s(SuperType::VII, 0, 0, 1),
        s(SuperType::VII, 0, 0, 2),
        s(SuperType::VII, 0, 0, -3),
        Family::Pibar3 { second: false },
        Family::Pibar3 { second: true },
        Family::Pibar4,
        Family::Pibar5,
    ]);
    out.retain(|f| family_rank(f) <= max_rank);
    out
}

pub fn family_rank(f: &Family) -> usize {
    match *f {
        Family::Pibar0 => 1,
        Family::Pibar1 { rank, .. } => rank,
        Family::Pibar2 { kind, m, n, .. } => match kind {
            SuperType::I => m + n + 1,
            SuperType::II | SuperType::IV => m + n,
            SuperType::III => n,
            SuperType::V => 4,
            SuperType::VI | SuperType::VII => 3,
        },
        Family::Pibar3 { .. } => 3,
        Family::Pibar4 => 4,
        Family::Pibar5 => 2,
    }
}
