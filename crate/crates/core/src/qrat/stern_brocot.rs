use std::collections::VecDeque;

use super::QRational;
use crate::cfrac::Rational;
use crate::error::Result;
use crate::exactalg::{rf_reduce, IntPoly};

/// A vertex of the weighted Stern–Brocot tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SternBrocotNode {
    /// `L`/`R` moves from the root `1/1`; empty for the root.
    pub path: String,
    pub depth: usize,
    pub label: QRational,
    /// Exponent `k` of the incoming edge weight `q^k`; `None` for the root.
    pub edge_weight: Option<u32>,
}

/// An unreduced label `(R, S)` together with the underlying fraction `(r, s)`.
#[derive(Clone)]
struct Anc {
    r: num_bigint::BigInt,
    s: num_bigint::BigInt,
    num: IntPoly,
    den: IntPoly,
}

/// `(q^k R_left + R_right) / (q^k S_left + S_right)`.
fn mediant(left: &Anc, right: &Anc, k: u32) -> Anc {
    Anc {
        r: &left.r + &right.r,
        s: &left.s + &right.s,
        num: &left.num.shift(k as usize) + &right.num,
        den: &left.den.shift(k as usize) + &right.den,
    }
}

/// Breadth-first enumeration down to `depth` (the root alone is depth 0).
///
/// A left child lies between its parent and the parent's larger ancestor,
/// a right child between the parent and its smaller ancestor. A left
/// out-edge carries `q` times the weight of the edge entering the node, a
/// right out-edge carries weight `1`, and both edges leaving the root carry
/// weight `1`. A child's label is the mediant of its Farey neighbours with
/// the larger one scaled by `q` times the child's incoming weight.
pub fn stern_brocot_enumerate(depth: usize) -> Result<Vec<SternBrocotNode>> {
    let one = || IntPoly::one();
    let inf = Anc {
        r: 1.into(),
        s: 0.into(),
        num: one(),
        den: IntPoly::zero(),
    };
    let zero = Anc {
        r: 0.into(),
        s: 1.into(),
        num: IntPoly::zero(),
        den: one(),
    };
    let root = mediant(&inf, &zero, 0);

    struct Item {
        path: String,
        depth: usize,
        node: Anc,
        larger: Anc,
        smaller: Anc,
        weight: Option<u32>,
    }

    let mut out = Vec::new();
    let mut queue = VecDeque::from([Item {
        path: String::new(),
        depth: 0,
        node: root,
        larger: inf,
        smaller: zero,
        weight: None,
    }]);
    while let Some(it) = queue.pop_front() {
        let x = Rational::new(it.node.r.clone(), it.node.s.clone())?;
        let label = QRational::from_parts(x, rf_reduce(&it.node.num, &it.node.den)?);
        out.push(SternBrocotNode {
            path: it.path.clone(),
            depth: it.depth,
            label,
            edge_weight: it.weight,
        });
        if it.depth == depth {
            continue;
        }
        let left_w = it.weight.map_or(0, |w| w + 1);
        let left = mediant(&it.larger, &it.node, left_w + 1);
        let right = mediant(&it.node, &it.smaller, 1);
        queue.push_back(Item {
            path: format!("{}L", it.path),
            depth: it.depth + 1,
            node: left,
            larger: it.larger.clone(),
            smaller: it.node.clone(),
            weight: Some(left_w),
        });
        queue.push_back(Item {
            path: format!("{}R", it.path),
            depth: it.depth + 1,
            node: right,
            larger: it.node,
            smaller: it.smaller,
            weight: Some(0),
        });
    }
    Ok(out)
}
