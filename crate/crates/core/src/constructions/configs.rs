use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{generate, FactorKind, FamilySpec, Graph, GridFactor, Vertex};
use crate::resolve::{is_resolving, TargetFamily, Variant};

/// A landmark placement with a sensor radius on a concrete graph.
#[derive(Clone, Debug, Serialize)]
pub struct Configuration {
    pub family: String,
    pub params: Value,
    #[serde(skip)]
    pub graph: Graph,
    pub landmarks: Vec<Vertex>,
    pub radius: u32,
    pub variant: Variant,
    pub claimed_bound: usize,
    pub verified: bool,
}

impl Configuration {
    /// Builds the configuration and, with `verify`, checks that it is
    /// distance-`radius` resolving for `variant`.
    pub fn new(
        family: impl Into<String>,
        params: Value,
        graph: Graph,
        mut landmarks: Vec<Vertex>,
        radius: u32,
        variant: Variant,
        verify: bool,
    ) -> Result<Self> {
        landmarks.sort_unstable();
        landmarks.dedup();
        if let Some(&v) = landmarks.iter().find(|&&v| v >= graph.order()) {
            return Err(Error::Construction(format!("landmark {v} outside the graph")));
        }
        let family = family.into();
        let verified = if verify {
            let tf = TargetFamily::standard(&graph, variant)?;
            if !is_resolving(&graph, &tf, &landmarks, radius) {
                return Err(Error::Construction(format!(
                    "{family} configuration is not distance-{radius} resolving for {variant}"
                )));
            }
            true
        } else {
            false
        };
        Ok(Configuration {
            family,
            params,
            claimed_bound: radius as usize + landmarks.len(),
            graph,
            landmarks,
            radius,
            variant,
            verified,
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("configuration serializes")
    }
}

fn icbrt_ceil(n: usize) -> usize {
    let mut g = (n as f64).cbrt().round() as usize;
    while g * g * g < n {
        g += 1;
    }
    while g > 1 && (g - 1).pow(3) >= n {
        g -= 1;
    }
    g.max(1)
}

fn isqrt_ceil(n: usize) -> usize {
    let s = n.isqrt();
    if s * s == n {
        s
    } else {
        s + 1
    }
}

/// Caterpillar with spine `L = ceil(n / (g + 1))` and a leg of `g` vertices
/// at every spine vertex, `g = ceil(n^(1/3))`. Landmarks sit on the spine at
/// multiples of `g` and on the last spine vertex; the radius is the
/// smallest in `1..=2g` that resolves.
///
/// Numbering: spine `0..L`, then leg of spine vertex `s` is
/// `L + s*g .. L + (s+1)*g`, outward from the spine.
pub fn min_throttle_tree(n_target: usize) -> Result<Configuration> {
    if n_target < 8 {
        return Err(Error::Construction(format!("need at least 8 vertices, got {n_target}")));
    }
    let g = icbrt_ceil(n_target);
    let leg = g;
    let spine = n_target.div_ceil(leg + 1);
    let order = spine * (leg + 1);
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|s| (s - 1, s)).collect();
    for s in 0..spine {
        let base = spine + s * leg;
        edges.push((s, base));
        edges.extend((1..leg).map(|j| (base + j - 1, base + j)));
    }
    let graph = Graph::new(order, &edges)?;
    let mut landmarks: Vec<Vertex> = (0..spine).step_by(g).collect();
    if landmarks.last() != Some(&(spine - 1)) {
        landmarks.push(spine - 1);
    }
    let tf = TargetFamily::standard(&graph, Variant::Dim)?;
    let resolves = |r: u32| is_resolving(&graph, &tf, &landmarks, r);
    let (mut lo, mut hi) = (1u32, (g + leg) as u32);
    if !resolves(hi) {
        return Err(Error::Construction(format!("caterpillar for n={n_target} not resolved at radius {hi}")));
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if resolves(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let params = json!({ "n_target": n_target, "spine": spine, "leg": leg, "gap": g });
    Configuration::new("caterpillar", params, graph, landmarks, lo, Variant::Dim, true)
}

fn factor_positions(f: &GridFactor, r: u32) -> Vec<usize> {
    let step = r.max(1) as usize;
    let mut pos: Vec<usize> = (0..f.len).step_by(step).collect();
    if f.len > 0 && pos.last() != Some(&(f.len - 1)) {
        pos.push(f.len - 1);
    }
    pos
}

/// Product of per-factor landmark sets (both endpoints plus every `r`-th
/// vertex) on a product of paths and cycles.
pub fn grid_resolving_set(spec: &FamilySpec, r: u32) -> Result<Configuration> {
    let FamilySpec::Grid(factors) = spec else {
        return Err(Error::Construction(format!("{spec} is not a grid")));
    };
    if r < 1 {
        return Err(Error::Construction("grid construction needs r >= 1".into()));
    }
    let graph = generate(spec)?;
    let per: Vec<Vec<usize>> = factors.iter().map(|f| factor_positions(f, r)).collect();
    let mut landmarks = vec![0usize];
    for (f, pos) in factors.iter().zip(&per) {
        landmarks = landmarks.iter().flat_map(|&base| pos.iter().map(move |&p| base * f.len + p)).collect();
    }
    let budget: f64 = factors.iter().map(|f| 2.0 + f.len as f64 / r as f64).product();
    let params = json!({
        "factors": factors.iter().map(|f| format!("{}{}", match f.kind { FactorKind::Path => "P", FactorKind::Cycle => "C" }, f.len)).collect::<Vec<_>>(),
        "size_budget": budget,
    });
    Configuration::new(spec.to_string(), params, graph, landmarks, r, Variant::Dim, true)
}

/// Circulant `Circ(n, S)` with `ceil(sqrt(n)/l)` groups of `l = max S`
/// consecutive landmarks, group `i` starting at `floor(i*n/groups)`, and
/// radius `ceil(sqrt(n)) + l`.
pub fn circulant_config(n: usize, connections: &[usize]) -> Result<Configuration> {
    let l = *connections.iter().max().ok_or_else(|| Error::Construction("empty connection set".into()))?;
    if !connections.contains(&1) || connections.contains(&0) {
        return Err(Error::Construction("connection set must contain 1 and only positive steps".into()));
    }
    let groups = ((n as f64).sqrt() / l as f64).ceil() as usize;
    if groups < 3 || n / groups < l {
        return Err(Error::Construction(format!(
            "Circ({n}, S) with max step {l} leaves {groups} sectors; need at least 3 holding a full group each"
        )));
    }
    let spec = FamilySpec::Circulant { n, connections: connections.to_vec() };
    let graph = generate(&spec)?;
    let landmarks: Vec<Vertex> = (0..groups).flat_map(|i| (0..l).map(move |j| (i * n / groups + j) % n)).collect();
    let radius = (isqrt_ceil(n) + l) as u32;
    let params = json!({ "n": n, "connections": connections, "groups": groups, "group_size": l });
    Configuration::new(spec.to_string(), params, graph, landmarks, radius, Variant::Dim, true)
}

/// Gaps `short, long, short, long, ...` (`k` of each) with
/// `short = ceil(n/3k)` and `long = ceil(2n/3k)`, long gaps shortened one
/// vertex at a time from the last until the gaps sum to `n`.
fn alternating_gaps(n: usize) -> (usize, Vec<usize>) {
    let k = ((n as f64 / 6.0).sqrt().ceil() as usize).max(1);
    let short = n.div_ceil(3 * k);
    let long = (2 * n).div_ceil(3 * k);
    let mut gaps: Vec<usize> = (0..2 * k).map(|i| if i % 2 == 0 { short } else { long }).collect();
    let mut excess = gaps.iter().sum::<usize>() - n;
    let longs: Vec<usize> = (0..2 * k).filter(|i| i % 2 == 1).rev().collect();
    let mut idx = 0;
    while excess > 0 {
        let i = longs[idx % longs.len()];
        if gaps[i] > 1 {
            gaps[i] -= 1;
            excess -= 1;
        }
        idx += 1;
    }
    (k, gaps)
}

fn even_gaps(n: usize, count: usize) -> Vec<usize> {
    (0..count).map(|i| n / count + usize::from(i < n % count)).collect()
}

fn positions(gaps: &[usize]) -> Vec<Vertex> {
    gaps.iter()
        .scan(0usize, |at, &g| {
            let p = *at;
            *at += g;
            Some(p)
        })
        .collect()
}

/// Landmark layouts on `C_n`. Edge (and standard) variant: `2k` landmarks,
/// `k = ceil(sqrt(n/6))`, alternating short and long gaps, radius equal to
/// the short gap. Mixed variant: `ceil(sqrt(n))` landmarks on near-equal
/// gaps (the first `n mod count` gaps one longer), radius `ceil(sqrt(n))`.
pub fn cycle_variant_config(n: usize, variant: Variant) -> Result<Configuration> {
    if n < 5 {
        return Err(Error::Construction(format!("cycle construction needs n >= 5, got {n}")));
    }
    let graph = generate(&FamilySpec::Cycle(n))?;
    let (landmarks, radius, params) = match variant {
        Variant::Edim | Variant::Dim => {
            let (k, gaps) = alternating_gaps(n);
            (positions(&gaps), gaps[0] as u32, json!({ "n": n, "k": k, "gaps": gaps }))
        }
        Variant::Mdim => {
            let count = isqrt_ceil(n);
            let gaps = even_gaps(n, count);
            (positions(&gaps), count as u32, json!({ "n": n, "gaps": gaps }))
        }
        Variant::Custom => return Err(Error::Construction("no cycle layout for custom targets".into())),
    };
    Configuration::new(format!("cycle:{n}"), params, graph, landmarks, radius, variant, true)
}

/// Spider layout: the body plus landmarks every `ceil(sqrt(n))` vertices
/// along each leg and at each leg's end, radius `ceil(sqrt(n))`.
pub fn spider_config(legs: &[usize]) -> Result<Configuration> {
    let spec = FamilySpec::Spider { legs: legs.to_vec(), strict: true };
    let graph = generate(&spec)?;
    let n = graph.order();
    let step = isqrt_ceil(n);
    let mut landmarks = vec![0];
    let mut start = 1;
    for &len in legs {
        // leg vertex at depth d is start + d - 1
        landmarks.extend((step..=len).step_by(step).map(|d| start + d - 1));
        landmarks.push(start + len - 1);
        start += len;
    }
    let params = json!({ "legs": legs, "step": step });
    Configuration::new(spec.to_string(), params, graph, landmarks, step as u32, Variant::Dim, true)
}
