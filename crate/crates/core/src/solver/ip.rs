use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::{all_pairs_distances, Graph};
use crate::resolve::{compile_from, SubsetDistances, TargetFamily};

/// One covering row: `sum_k coeffs[k] * x_k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IpRow {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<u32>,
}

/// Integer program for `xdim_r`: minimize the number of landmarks subject to
/// one covering row per target pair, with binary variables `x_0..x_{n-1}`.
/// Coefficient `k` of row `(i, j)` is the difference of the truncated
/// distances from the two targets to vertex `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IpModel {
    pub order: usize,
    pub radius: u32,
    pub variant: String,
    pub graph_hash: String,
    pub rows: Vec<IpRow>,
}

/// Builds the model. With `reduced`, only rows that survive dominance
/// reduction of the distinguisher sets are kept.
pub fn build_ip(g: &Graph, tf: &TargetFamily, r: u32, reduced: bool) -> IpModel {
    let n = g.order();
    let dm = all_pairs_distances(g);
    let sd = SubsetDistances::new(&dm, tf);
    let cap = r + 1;
    let row = |i: usize, j: usize| {
        let (a, b) = (sd.row(i), sd.row(j));
        let coeffs = (0..n).map(|v| a[v].min(cap).abs_diff(b[v].min(cap))).collect();
        IpRow { i, j, coeffs }
    };
    let rows = if reduced {
        compile_from(&sd, n, r).reduced().map(|c| row(c.i, c.j)).collect()
    } else {
        let t = tf.len();
        (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).map(|(i, j)| row(i, j)).collect()
    };
    IpModel { order: n, radius: r, variant: tf.variant().to_string(), graph_hash: g.content_hash(), rows }
}

/// The model in CPLEX LP text format.
pub fn export_ip(g: &Graph, tf: &TargetFamily, r: u32, reduced: bool) -> String {
    build_ip(g, tf, r, reduced).to_lp()
}

impl IpModel {
    pub fn to_lp(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "\\ truncated metric dimension covering model");
        let _ = writeln!(out, "\\ graph {} order {}", self.graph_hash, self.order);
        let _ = writeln!(out, "\\ variant {} radius {}", self.variant, self.radius);
        let _ = writeln!(out, "\\ rows {}", self.rows.len());
        out.push_str("Minimize\n obj:");
        write_terms(&mut out, (0..self.order).map(|k| (k, 1)));
        out.push_str("\nSubject To\n");
        for row in &self.rows {
            let _ = write!(out, " c_{}_{}:", row.i, row.j);
            let terms: Vec<(usize, u32)> =
                row.coeffs.iter().enumerate().filter(|&(_, &c)| c > 0).map(|(k, &c)| (k, c)).collect();
            if terms.is_empty() {
                // nothing separates the pair, so the row reads 0 >= 1
                write_terms(&mut out, std::iter::once((0, 0)));
            } else {
                write_terms(&mut out, terms.into_iter());
            }
            out.push_str(" >= 1\n");
        }
        out.push_str("Binary\n");
        for k in 0..self.order {
            let _ = writeln!(out, " x_{k}");
        }
        out.push_str("End\n");
        out
    }
}

fn write_terms(out: &mut String, terms: impl Iterator<Item = (usize, u32)>) {
    for (pos, (k, c)) in terms.enumerate() {
        let sep = if pos == 0 { " " } else { " + " };
        if c == 1 {
            let _ = write!(out, "{sep}x_{k}");
        } else {
            let _ = write!(out, "{sep}{c} x_{k}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_family};
    use crate::resolve::Variant;

    fn g(s: &str) -> Graph {
        generate(&parse_family(s).unwrap()).unwrap()
    }

    #[test]
    fn structure_counts() {
        let p3 = g("path:3");
        let tf = TargetFamily::standard(&p3, Variant::Dim).unwrap();
        let m = build_ip(&p3, &tf, 1, false);
        assert_eq!(m.rows.len(), 3);
        let lp = m.to_lp();
        assert_eq!(lp.lines().filter(|l| l.starts_with(" x_")).count(), 3);
        assert!(lp.contains(" obj: x_0 + x_1 + x_2\n"));

        let k3 = g("complete:3");
        let tf = TargetFamily::standard(&k3, Variant::Edim).unwrap();
        assert_eq!(build_ip(&k3, &tf, 0, false).rows.len(), 3);
    }

    #[test]
    fn equidistant_vertex_has_zero_coefficient() {
        let k3 = g("complete:3");
        let tf = TargetFamily::standard(&k3, Variant::Dim).unwrap();
        let m = build_ip(&k3, &tf, 1, false);
        assert_eq!(m.rows[0].coeffs, vec![1, 1, 0]);
        assert!(m.to_lp().contains(" c_0_1: x_0 + x_1 >= 1\n"));
    }

    #[test]
    fn larger_coefficients_and_reduction() {
        let p4 = g("path:4");
        let tf = TargetFamily::standard(&p4, Variant::Dim).unwrap();
        let m = build_ip(&p4, &tf, 3, false);
        let row03 = m.rows.iter().find(|r| (r.i, r.j) == (0, 3)).unwrap();
        assert_eq!(row03.coeffs, vec![3, 1, 1, 3]);
        assert!(build_ip(&p4, &tf, 3, true).rows.len() < m.rows.len());
    }
}
