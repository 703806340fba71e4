use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolve::{TargetFamily, Variant};

/// Throttling numbers 0 and 1 depend only on the number of targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowThrottle {
    Zero,
    One,
    Higher,
}

impl LowThrottle {
    pub fn from_target_count(count: usize) -> Self {
        match count {
            0 | 1 => LowThrottle::Zero,
            2 => LowThrottle::One,
            _ => LowThrottle::Higher,
        }
    }
}

pub fn low_throttle_class(g: &Graph, variant: Variant) -> Result<LowThrottle> {
    let tf = TargetFamily::standard(g, variant)?;
    Ok(LowThrottle::from_target_count(tf.len()))
}

fn neighbor_sets(g: &Graph) -> Vec<VertexSet> {
    g.vertices().map(|v| VertexSet::from_iter(g.order(), g.neighbors(v).iter().copied())).collect()
}

/// `x` and `y` form a good pair relative to `z`: `N(x) - {y,z} = N(y) - {x,z}`.
fn good_pair(nb: &[VertexSet], x: usize, y: usize, z: usize) -> bool {
    let mut a = nb[x].clone();
    let mut b = nb[y].clone();
    for v in [x, y, z] {
        a.remove(v);
        b.remove(v);
    }
    a == b
}

/// True iff every triple of distinct vertices contains a good pair, which
/// is exactly when the standard throttling number is `n - 1`.
pub fn is_extremal_thdim(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Domain(format!("the triple condition needs order >= 3, got {n}")));
    }
    let nb = neighbor_sets(g);
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if !(good_pair(&nb, x, y, z) || good_pair(&nb, x, z, y) || good_pair(&nb, y, z, x)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtremalLabel {
    #[serde(rename = "star_plus_isolated")]
    StarPlusIsolated,
    #[serde(rename = "complement_of_star_plus_isolated")]
    ComplementOfStarPlusIsolated,
    #[serde(rename = "G_p_plus_G_q")]
    GpPlusGq,
    #[serde(rename = "complement_of_G_p_plus_G_q")]
    ComplementOfGpPlusGq,
    #[serde(rename = "P4")]
    P4,
    #[serde(rename = "not_extremal")]
    NotExtremal,
}

impl fmt::Display for ExtremalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalLabel::StarPlusIsolated => "star_plus_isolated",
            ExtremalLabel::ComplementOfStarPlusIsolated => "complement_of_star_plus_isolated",
            ExtremalLabel::GpPlusGq => "G_p_plus_G_q",
            ExtremalLabel::ComplementOfGpPlusGq => "complement_of_G_p_plus_G_q",
            ExtremalLabel::P4 => "P4",
            ExtremalLabel::NotExtremal => "not_extremal",
        })
    }
}

/// Structural class of a graph with standard throttling number `n - 1`.
///
/// Parameters: for `G_p + G_q`, `p` is the size of the part containing
/// vertex 0 (an edgeless graph is `(n, 0)`). For a star plus isolated
/// vertices, `(star order, isolated count)`. Complement labels carry the
/// parameters of the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalClass {
    pub label: ExtremalLabel,
    pub params: Option<(usize, usize)>,
}

pub fn classify_extremal(g: &Graph) -> Result<ExtremalClass> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Domain(format!("classification needs order >= 3, got {n}")));
    }
    let co = g.complement();
    let class = |label, params| Ok(ExtremalClass { label, params: Some(params) });
    if let Some(p) = match_gp_gq(g) {
        return class(ExtremalLabel::GpPlusGq, p);
    }
    if let Some(p) = match_gp_gq(&co) {
        return class(ExtremalLabel::ComplementOfGpPlusGq, p);
    }
    if let Some(p) = match_star_plus_isolated(g) {
        return class(ExtremalLabel::StarPlusIsolated, p);
    }
    if let Some(p) = match_star_plus_isolated(&co) {
        return class(ExtremalLabel::ComplementOfStarPlusIsolated, p);
    }
    if is_p4(g) {
        return Ok(ExtremalClass { label: ExtremalLabel::P4, params: None });
    }
    Ok(ExtremalClass { label: ExtremalLabel::NotExtremal, params: None })
}

fn is_clique(g: &Graph, comp: &[usize]) -> bool {
    comp.iter().all(|&v| g.degree(v) == comp.len() - 1)
}

/// Disjoint union of two parts, each complete or edgeless.
fn match_gp_gq(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let comps = g.components();
    let (cliques, isolated): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = comps.iter().partition(|c| c.len() > 1);
    if !cliques.iter().all(|c| is_clique(g, c)) {
        return None;
    }
    let iso = isolated.len();
    match cliques.as_slice() {
        [] => Some((n, 0)),
        [c] => Some(if c[0] < isolated.first().map_or(usize::MAX, |i| i[0]) { (c.len(), iso) } else { (iso, c.len()) }),
        [a, b] if iso == 0 => Some((a.len(), b.len())),
        _ => None,
    }
}

fn match_star_plus_isolated(g: &Graph) -> Option<(usize, usize)> {
    let comps = g.components();
    let mut nontrivial = comps.iter().filter(|c| c.len() > 1);
    let star = nontrivial.next()?;
    if nontrivial.next().is_some() {
        return None;
    }
    let k = star.len();
    let centers = star.iter().filter(|&&v| g.degree(v) == k - 1).count();
    let leaves = star.iter().filter(|&&v| g.degree(v) == 1).count();
    let is_star = k == 2 || (centers == 1 && leaves == k - 1);
    is_star.then_some((k, g.order() - k))
}

fn is_p4(g: &Graph) -> bool {
    if g.order() != 4 || g.size() != 3 || !g.is_connected() {
        return false;
    }
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees == [1, 1, 2, 2]
}
