use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{classical_frieze, Quiddity};
use crate::error::{Error, Result};

/// Largest polygon accepted by [`enumerate_triangulations`].
pub const MAX_NGON: usize = 12;

/// A triangulation of a convex polygon with vertices `0..ngon` in
/// counterclockwise order, stored as sorted diagonals `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    ngon: usize,
    diagonals: Vec<(usize, usize)>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Triangulation {
    pub fn new(ngon: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidTriangulation(why));
        if ngon < 3 {
            return bad(format!("a polygon needs at least 3 vertices, got {ngon}"));
        }
        let mut ds: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        if ds.len() != ngon - 3 {
            return bad(format!(
                "a {ngon}-gon needs {} distinct diagonals, got {}",
                ngon - 3,
                ds.len()
            ));
        }
        for &(a, b) in &ds {
            if b >= ngon {
                return bad(format!("vertex {b} outside 0..{ngon}"));
            }
            if b - a == 1 || (a == 0 && b == ngon - 1) {
                return bad(format!("{a}-{b} is a side, not a diagonal"));
            }
        }
        for (k, &d) in ds.iter().enumerate() {
            if let Some(&e) = ds[k + 1..].iter().find(|&&e| crosses(d, e)) {
                return bad(format!(
                    "diagonals {}-{} and {}-{} cross",
                    d.0, d.1, e.0, e.1
                ));
            }
        }
        Ok(Triangulation {
            ngon,
            diagonals: ds,
        })
    }

    pub fn ngon(&self) -> usize {
        self.ngon
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self
            .diagonals
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        write!(f, "{}:{}", self.ngon, ds.join(","))
    }
}

/// `ngon:a-b,c-d,...`
impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected ngon:a-b,c-d,..., got {s:?}"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let ngon = n.trim().parse().map_err(|_| bad())?;
        let diagonals = rest
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let (a, b) = t.split_once('-').ok_or_else(bad)?;
                Ok((
                    a.trim().parse().map_err(|_| bad())?,
                    b.trim().parse().map_err(|_| bad())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Triangulation::new(ngon, diagonals)
    }
}

/// Triangles at each vertex: one more than the number of diagonals there.
pub fn quiddity_from_triangulation(t: &Triangulation) -> Result<Quiddity> {
    let mut c = vec![1u64; t.ngon];
    for &(a, b) in &t.diagonals {
        c[a] += 1;
        c[b] += 1;
    }
    Quiddity::new(c)
}

/// All triangulations in a canonical order.
pub fn enumerate_triangulations(ngon: usize) -> Result<Vec<Triangulation>> {
    if !(3..=MAX_NGON).contains(&ngon) {
        return Err(Error::SizeLimit(format!(
            "ngon must lie in 3..={MAX_NGON}, got {ngon}"
        )));
    }
    // Triangulate the sub-polygon i..=j across its side (i, j).
    fn sub(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
        if j - i < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in i + 1..j {
            let left = sub(i, k);
            let right = sub(k, j);
            for l in &left {
                for r in &right {
                    let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                    if k - i > 1 {
                        d.push((i, k));
                    }
                    if j - k > 1 {
                        d.push((k, j));
                    }
                    d.extend_from_slice(l);
                    d.extend_from_slice(r);
                    out.push(d);
                }
            }
        }
        out
    }
    let mut all = sub(0, ngon - 1)
        .into_iter()
        .map(|d| Triangulation::new(ngon, d))
        .collect::<Result<Vec<_>>>()?;
    all.sort();
    Ok(all)
}

pub fn catalan(n: usize) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k as u64 + 1) / (k as u64 + 2))
}

/// Lexicographically smallest rotation.
pub fn rotation_canonical(c: &[u64]) -> Vec<u64> {
    (0..c.len())
        .map(|r| c[r..].iter().chain(&c[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Every quiddity of the given length whose frieze closes, found by a
/// depth-first search independent of triangulations.
///
/// Linear windows are pruned by continuant positivity; each survivor is
/// confirmed by [`classical_frieze`].
pub fn frieze_quiddities(len: usize) -> Result<BTreeSet<Vec<u64>>> {
    if !(3..=MAX_NGON).contains(&len) {
        return Err(Error::SizeLimit(format!(
            "length must lie in 3..={MAX_NGON}, got {len}"
        )));
    }
    let last = len - 3;
    let max_entry = (len - 2) as i64;
    let mut found = BTreeSet::new();
    let mut seq = Vec::with_capacity(len);
    // conts[i] holds the two latest continuants of seq[i..].
    let mut conts: Vec<(i64, i64)> = Vec::with_capacity(len);
    dfs(&mut seq, &mut conts, len, last, max_entry, &mut found);
    let mut out = BTreeSet::new();
    for c in found {
        if classical_frieze(&Quiddity::new(c.clone())?).is_ok() {
            out.insert(c);
        }
    }
    Ok(out)
}

fn dfs(
    seq: &mut Vec<u64>,
    conts: &mut Vec<(i64, i64)>,
    len: usize,
    last: usize,
    max_entry: i64,
    found: &mut BTreeSet<Vec<u64>>,
) {
    if seq.len() == len {
        found.insert(seq.clone());
        return;
    }
    let k = seq.len();
    'entry: for c in 1..=max_entry {
        let saved = conts.clone();
        conts.push((1, 0));
        for (i, pair) in conts.iter_mut().enumerate() {
            let (prev, prev2) = *pair;
            let next = c * prev - prev2;
            let w = k - i;
            let ok = if w < last {
                next > 0
            } else if w == last {
                next == 1
            } else if w == last + 1 {
                next == 0
            } else {
                true
            };
            if !ok {
                *conts = saved;
                continue 'entry;
            }
            *pair = (next, prev);
        }
        seq.push(c as u64);
        dfs(seq, conts, len, last, max_entry, found);
        seq.pop();
        *conts = saved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiddities_of_small_polygons() {
        let sq = Triangulation::new(4, vec![(0, 2)]).unwrap();
        assert_eq!(
            quiddity_from_triangulation(&sq).unwrap().cycle(),
            [2, 1, 2, 1]
        );
        let fan = Triangulation::new(5, vec![(0, 2), (0, 3)]).unwrap();
        assert_eq!(
            quiddity_from_triangulation(&fan).unwrap().cycle(),
            [3, 1, 2, 2, 1]
        );
        let hept: Triangulation = "7:1-4,1-5,1-6,2-4".parse().unwrap();
        assert_eq!(
            quiddity_from_triangulation(&hept).unwrap().cycle(),
            [1, 4, 2, 1, 3, 2, 2]
        );
    }

    #[test]
    fn invalid_triangulations() {
        assert!(Triangulation::new(4, vec![]).is_err());
        assert!(Triangulation::new(4, vec![(0, 1)]).is_err());
        assert!(Triangulation::new(6, vec![(0, 3), (1, 4), (0, 2)]).is_err());
        assert!(Triangulation::new(5, vec![(0, 4), (1, 3)]).is_err());
        assert!("8:0-2,0-3,0-5,3-5,5-7".parse::<Triangulation>().is_ok());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (3..=9)
            .map(|n| enumerate_triangulations(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(
            (0..8).map(catalan).collect::<Vec<_>>(),
            [1, 1, 2, 5, 14, 42, 132, 429]
        );
        assert!(enumerate_triangulations(3).unwrap()[0]
            .diagonals()
            .is_empty());
        assert!(matches!(
            enumerate_triangulations(13),
            Err(Error::SizeLimit(_))
        ));
        assert!(matches!(
            enumerate_triangulations(2),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn bijection_small() {
        for n in 3..=8 {
            let from_tri: BTreeSet<Vec<u64>> = enumerate_triangulations(n)
                .unwrap()
                .iter()
                .map(|t| quiddity_from_triangulation(t).unwrap().cycle().to_vec())
                .collect();
            assert_eq!(from_tri.len() as u64, catalan(n - 2));
            assert_eq!(from_tri, frieze_quiddities(n).unwrap(), "ngon {n}");
        }
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(rotation_canonical(&[2, 1, 2, 1]), [1, 2, 1, 2]);
        assert_eq!(rotation_canonical(&[3, 1, 2, 2, 1]), [1, 2, 2, 1, 3]);
    }
}
