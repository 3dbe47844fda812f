//! Conway–Coxeter friezes, their q-deformations and polygon triangulations.
//!
//! Entries are indexed as `C[i][j]` with width `w = j - i`: the top row of
//! ones is `w = -1`, the quiddity row is `w = 0`, and for a quiddity of
//! length `m = n + 1` the last nontrivial row is `w = n - 2`. Row `n - 1`
//! vanishes and is checked but not stored.

mod triangulation;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::cfrac::Rational;
use crate::error::{Error, Result};
use crate::exactalg::format::poly_to_json;
use crate::exactalg::{rf_reduce, IntPoly};
use crate::qcore::q_int_poly;
use crate::qrat::{hj_matrix_terms, q_hj_terms, QRational};

pub use triangulation::{
    catalan, enumerate_triangulations, frieze_quiddities, quiddity_from_triangulation,
    rotation_canonical, Triangulation, MAX_NGON,
};

/// The cyclic sequence `(c_0, ..., c_n)` on the second row of a frieze.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quiddity {
    cycle: Vec<u64>,
}

impl Quiddity {
    pub fn new(cycle: Vec<u64>) -> Result<Self> {
        if cycle.len() < 3 {
            return Err(Error::NotAFrieze(format!(
                "quiddity {cycle:?} has fewer than 3 entries"
            )));
        }
        if cycle.contains(&0) {
            return Err(Error::NotAFrieze(format!(
                "quiddity {cycle:?} has a zero entry"
            )));
        }
        Ok(Quiddity { cycle })
    }

    pub fn cycle(&self) -> &[u64] {
        &self.cycle
    }

    /// Period `m = n + 1`.
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `c_k` with cyclic indexing.
    pub fn at(&self, k: i64) -> u64 {
        self.cycle[k.rem_euclid(self.len() as i64) as usize]
    }

    /// `c_i, ..., c_j` read cyclically.
    pub fn window(&self, i: i64, j: i64) -> Vec<u64> {
        (i..=j).map(|k| self.at(k)).collect()
    }

    /// Index of the last nontrivial row.
    pub fn last_width(&self) -> i64 {
        self.len() as i64 - 3
    }

    /// Exponent in the q-unimodular rule, `sum_{k=i}^{j-1} (c_k - 1)`.
    pub fn ql_exponent(&self, i: i64, j: i64) -> usize {
        (i..j).map(|k| self.at(k) as usize - 1).sum()
    }
}

impl fmt::Display for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Quiddity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycle = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad quiddity entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Quiddity::new(cycle)
    }
}

/// One fundamental domain of a frieze: `rows[w + 1][i] = C[i][i + w]`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Rows<T> {
    quiddity: Quiddity,
    rows: Vec<Vec<T>>,
}

impl<T> Rows<T> {
    fn get(&self, i: i64, j: i64) -> Result<&T> {
        let w = j - i;
        if w < -1 || w > self.quiddity.last_width() {
            return Err(Error::IndexOutOfRange(format!(
                "width {w} outside -1..={}",
                self.quiddity.last_width()
            )));
        }
        let m = self.quiddity.len() as i64;
        Ok(&self.rows[(w + 1) as usize][i.rem_euclid(m) as usize])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalFrieze {
    inner: Rows<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFrieze {
    inner: Rows<IntPoly>,
}

/// Row-by-row integer frieze from the unimodular rule `ad - bc = 1`.
pub fn classical_frieze(quiddity: &Quiddity) -> Result<ClassicalFrieze> {
    let m = quiddity.len();
    let last = quiddity.last_width();
    let not = |why: String| Error::NotAFrieze(format!("{quiddity}: {why}"));
    let mut rows: Vec<Vec<BigInt>> = vec![
        vec![BigInt::one(); m],
        quiddity.cycle.iter().map(|&c| c.into()).collect(),
    ];
    for w in 1..=last + 1 {
        let mut row = Vec::with_capacity(m);
        for i in 0..m {
            let left = &rows[w as usize][i];
            let right = &rows[w as usize][(i + 1) % m];
            let below = &rows[w as usize - 1][(i + 1) % m];
            let (quo, rem) = (left * right - BigInt::one()).div_rem(below);
            if !rem.is_zero() {
                return Err(not(format!("inexact division at C[{i}][{}]", i as i64 + w)));
            }
            row.push(quo);
        }
        if w <= last && row.iter().any(|c| !c.is_positive()) {
            return Err(not(format!("non-positive entry in row {w}")));
        }
        rows.push(row);
    }
    let closing = rows.pop().expect("at least one computed row");
    if closing.iter().any(|c| !c.is_zero()) {
        return Err(not("the frieze does not close".into()));
    }
    if rows.last().unwrap().iter().any(|c| !c.is_one()) {
        return Err(not("the last row is not a row of 1's".into()));
    }
    Ok(ClassicalFrieze {
        inner: Rows {
            quiddity: quiddity.clone(),
            rows,
        },
    })
}

impl ClassicalFrieze {
    pub fn quiddity(&self) -> &Quiddity {
        &self.inner.quiddity
    }

    pub fn entry(&self, i: i64, j: i64) -> Result<&BigInt> {
        self.inner.get(i, j)
    }

    /// Rows from width `-1` to the last row of 1's.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.inner.rows
    }

    /// Checks `(n + 1)`-periodicity on an unrolled strip of three periods,
    /// computed by continuants without cyclic indexing, together with the
    /// glide symmetry `C[i][j] = C[j + 2][i + n - 1]`.
    pub fn verify_periodicity(&self) -> Result<()> {
        let q = self.quiddity();
        let m = q.len();
        let strip: Vec<BigInt> = (0..3 * m).map(|k| BigInt::from(q.cycle[k % m])).collect();
        let last = q.last_width() as usize;
        // cont[i][w + 1] is the continuant of strip[i..=i + w].
        let cont: Vec<Vec<BigInt>> = (0..2 * m)
            .map(|i| {
                let mut v = vec![BigInt::one(), strip[i].clone()];
                for w in 1..=last {
                    let next = &strip[i + w] * &v[w] - &v[w - 1];
                    v.push(next);
                }
                v
            })
            .collect();
        let bad = |what: &str, i: usize, k: usize| {
            Err(Error::InternalMismatch(format!(
                "{what} fails at C[{i}][{}]",
                i as i64 + k as i64 - 1
            )))
        };
        for i in 0..m {
            for k in 0..=last + 1 {
                if cont[i][k] != cont[i + m][k] {
                    return bad("translation", i, k);
                }
                if cont[i][k] != *self.entry(i as i64, i as i64 + k as i64 - 1)? {
                    return bad("local rule", i, k);
                }
                // Glide: width k - 1 reflects to width last - k + 1, starting at `j + 2`.
                if cont[i][k] != cont[i + k + 1][last + 1 - k] {
                    return bad("glide symmetry", i, k);
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|c| Value::String(c.to_string())).collect()))
            .collect();
        json!({ "quiddity": self.quiddity().cycle, "q": false, "rows": rows })
    }

    pub fn to_ascii(&self) -> String {
        staggered(&self.inner, |c| c.to_string())
    }
}

/// q-frieze computed by the q-unimodular rule and, independently, by
/// q-continuants read off `R^c S` matrix products; the two must agree.
pub fn q_frieze(quiddity: &Quiddity) -> Result<QFrieze> {
    classical_frieze(quiddity)?;
    let by_rule = q_frieze_by_rule(quiddity)?;
    let by_matrix = q_frieze_by_matrix(quiddity)?;
    for (w, (a, b)) in by_rule.iter().zip(&by_matrix).enumerate() {
        if a != b {
            return Err(Error::InternalMismatch(format!(
                "q-frieze row {} differs between routes",
                w as i64 - 1
            )));
        }
    }
    Ok(QFrieze {
        inner: Rows {
            quiddity: quiddity.clone(),
            rows: by_rule,
        },
    })
}

fn q_frieze_by_rule(quiddity: &Quiddity) -> Result<Vec<Vec<IntPoly>>> {
    let m = quiddity.len();
    let last = quiddity.last_width();
    let mut rows: Vec<Vec<IntPoly>> = vec![
        vec![IntPoly::one(); m],
        quiddity
            .cycle
            .iter()
            .map(|&c| q_int_poly(c as usize))
            .collect(),
    ];
    for w in 1..=last + 1 {
        let mut row = Vec::with_capacity(m);
        for i in 0..m {
            let left = &rows[w as usize][i];
            let right = &rows[w as usize][(i + 1) % m];
            let below = &rows[w as usize - 1][(i + 1) % m];
            let e = quiddity.ql_exponent(i as i64, i as i64 + w);
            let top = &(left * right) - &IntPoly::q_pow(e);
            let c = top.div_exact(below).map_err(|_| {
                Error::InternalMismatch(format!("inexact q-division at C[{i}][{}]", i as i64 + w))
            })?;
            row.push(c);
        }
        rows.push(row);
    }
    let closing = rows.pop().unwrap();
    if closing.iter().any(|c| !c.is_zero()) {
        return Err(Error::InternalMismatch("q-frieze does not close".into()));
    }
    Ok(rows)
}

fn q_frieze_by_matrix(quiddity: &Quiddity) -> Result<Vec<Vec<IntPoly>>> {
    let m = quiddity.len();
    let last = quiddity.last_width();
    let mut rows = vec![Vec::with_capacity(m); (last + 2) as usize];
    for i in 0..m as i64 {
        for w in -1..=last {
            let mat = hj_matrix_terms(&quiddity.window(i, i + w));
            let c = mat.a.to_int_poly().ok_or_else(|| {
                Error::InternalMismatch(format!("continuant C[{i}][{}] has negative powers", i + w))
            })?;
            rows[(w + 1) as usize].push(c);
        }
    }
    Ok(rows)
}

impl QFrieze {
    pub fn quiddity(&self) -> &Quiddity {
        &self.inner.quiddity
    }

    pub fn entry(&self, i: i64, j: i64) -> Result<&IntPoly> {
        self.inner.get(i, j)
    }

    /// Rows from width `-1` to the last row of monomials.
    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.inner.rows
    }

    /// Entrywise specialization `q = 1`.
    pub fn at_one(&self) -> Vec<Vec<BigInt>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(IntPoly::eval_at_one).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(poly_to_json).collect()))
            .collect();
        json!({ "quiddity": self.quiddity().cycle, "q": true, "rows": rows })
    }

    pub fn to_ascii(&self) -> String {
        staggered(&self.inner, |p| p.to_string())
    }
}

/// `C[i][j] / C[i+1][j]`, the q-rational of `[[c_i, ..., c_j]]`.
pub fn frieze_quotient(f: &QFrieze, i: i64, j: i64) -> Result<QRational> {
    if j < i {
        return Err(Error::IndexOutOfRange(format!(
            "quotient needs j >= i, got ({i}, {j})"
        )));
    }
    let num = f.entry(i, j)?;
    let den = f.entry(i + 1, j)?;
    let x = Rational::new(num.eval_at_one(), den.eval_at_one())?;
    Ok(QRational::from_parts(x, rf_reduce(num, den)?))
}

/// The same quotient computed directly from the Hirzebruch–Jung fraction.
pub fn frieze_window_hj(q: &Quiddity, i: i64, j: i64) -> Result<QRational> {
    q_hj_terms(&q.window(i, j))
}

/// Staggered layout: entry `C[i][j]` sits at horizontal position `i + j`.
fn staggered<T>(rows: &Rows<T>, show: impl Fn(&T) -> String) -> String {
    let cells: Vec<Vec<String>> = rows
        .rows
        .iter()
        .map(|r| r.iter().map(&show).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1) + 2;
    let half = width.div_ceil(2);
    let mut out = String::new();
    for (w, row) in cells.iter().enumerate() {
        let mut line = " ".repeat(w * half);
        for c in row {
            line.push_str(&format!("{c:^width$}", width = 2 * half));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

impl fmt::Display for ClassicalFrieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

impl fmt::Display for QFrieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// `k` when `p = q^k`.
pub fn monomial_exponent(p: &IntPoly) -> Option<usize> {
    match p.as_monomial() {
        Some((c, k)) if c.is_one() => Some(k),
        _ => None,
    }
}
