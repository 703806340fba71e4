use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::resolve::Variant;

/// Default relative slack attached to asymptotic envelopes.
pub const DEFAULT_SLACK: f64 = 0.10;

/// A closed-form throttling value, or an asymptotic envelope
/// `leading_constant * scale^exponent` when only the growth rate is known.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormulaValue {
    Exact {
        value: usize,
    },
    /// Minimum of `k + dim_k` over a closed-form table of `dim_k`.
    ExactBySweep {
        value: usize,
        r_star: u32,
        k_star: usize,
    },
    /// `leading_constant` is `None` for bare Θ-statements.
    Asymptotic {
        scale: f64,
        exponent: f64,
        leading_constant: Option<f64>,
        slack: f64,
    },
}

impl FormulaValue {
    pub fn value(&self) -> Option<usize> {
        match *self {
            FormulaValue::Exact { value } | FormulaValue::ExactBySweep { value, .. } => Some(value),
            FormulaValue::Asymptotic { .. } => None,
        }
    }

    /// Central estimate of an envelope with a known constant.
    pub fn estimate(&self) -> Option<f64> {
        match *self {
            FormulaValue::Asymptotic { scale, exponent, leading_constant: Some(c), .. } => {
                Some(c * scale.powf(exponent))
            }
            _ => None,
        }
    }
}

fn long_branch(n: usize, k: usize) -> usize {
    let m = 3 * k + 2;
    let residue = n % m;
    let upper_start = (3 * k + 5).div_ceil(2);
    if residue <= k + 2 || residue >= upper_start {
        (2 * n + 3 * k - 1) / m
    } else {
        (2 * n + 4 * k - 1) / m
    }
}

/// `dim_k(P_n)`, the minimum distance-`k` resolving set of the path.
pub fn dim_k_path(n: usize, k: u32) -> Result<usize> {
    if n < 2 || k < 1 {
        return Err(Error::Domain(format!("dim_k(P_n) needs n >= 2 and k >= 1, got n={n}, k={k}")));
    }
    let k = k as usize;
    Ok(if n <= k + 2 {
        1
    } else if n <= 3 * k + 3 {
        2
    } else {
        long_branch(n, k)
    })
}

/// `dim_k(C_n)`, the minimum distance-`k` resolving set of the cycle.
pub fn dim_k_cycle(n: usize, k: u32) -> Result<usize> {
    if n < 3 || k < 1 {
        return Err(Error::Domain(format!("dim_k(C_n) needs n >= 3 and k >= 1, got n={n}, k={k}")));
    }
    let k = k as usize;
    Ok(if n <= 3 * k + 3 { 2 } else { long_branch(n, k) })
}

/// `(th, r*, k*)` for the path (`cycle = false`) or cycle of order `n`,
/// taking `dim_0 = n - 1` and the closed form for `k >= 1`. Ties go to the
/// smallest radius.
pub fn path_cycle_sweep(n: usize, cycle: bool) -> Result<(usize, u32, usize)> {
    let min_order = if cycle { 3 } else { 1 };
    if n < min_order {
        return Err(Error::Domain(format!("order {n} too small")));
    }
    if n == 1 {
        return Ok((0, 0, 0));
    }
    let mut best = (n - 1, 0u32, n - 1);
    for k in 1..=n as u32 {
        if k as usize >= best.0 {
            break;
        }
        let d = if cycle { dim_k_cycle(n, k)? } else { dim_k_path(n, k)? };
        if k as usize + d < best.0 {
            best = (k as usize + d, k, d);
        }
    }
    Ok(best)
}

/// Closed-form or asymptotic throttling number for a generated family.
pub fn th_formula(spec: &FamilySpec, variant: Variant) -> Result<FormulaValue> {
    use FamilySpec as F;
    use Variant as V;
    let exact = |value: usize| Ok(FormulaValue::Exact { value });
    let sqrt_envelope = |n: usize, c: Option<f64>| {
        Ok(FormulaValue::Asymptotic { scale: n as f64, exponent: 0.5, leading_constant: c, slack: DEFAULT_SLACK })
    };
    let uncovered = || Err(Error::Uncovered(format!("no formula for {spec} with variant {variant}")));
    match (spec, variant) {
        (_, V::Custom) => uncovered(),
        (&F::Complete(n), V::Dim) => exact(n.saturating_sub(1)),
        (&F::Complete(n), V::Edim) => exact(if n <= 2 { 0 } else { n - 1 }),
        (&F::Complete(n), V::Mdim) => exact(if n <= 1 { 0 } else { n }),
        (&F::Empty(n), V::Dim | V::Mdim) => exact(n.saturating_sub(1)),
        (&F::Empty(_), V::Edim) => exact(0),
        (&F::CompleteBipartite { s, t }, v) => bipartite(s, t, v).map(|value| FormulaValue::Exact { value }),
        (&F::Star(n), v) if n >= 2 => bipartite(1, n - 1, v).map(|value| FormulaValue::Exact { value }),
        (&F::Path(n), V::Dim) => {
            let (value, r_star, k_star) = path_cycle_sweep(n, false)?;
            if n >= 3 {
                let (cycle_value, _, _) = path_cycle_sweep(n, true)?;
                if cycle_value != value {
                    return Err(Error::Domain(format!("path and cycle sweeps disagree at n={n}")));
                }
            }
            Ok(FormulaValue::ExactBySweep { value, r_star, k_star })
        }
        (&F::Cycle(n), V::Dim) => {
            let (value, r_star, k_star) = path_cycle_sweep(n, true)?;
            let (path_value, _, _) = path_cycle_sweep(n, false)?;
            if path_value != value {
                return Err(Error::Domain(format!("path and cycle sweeps disagree at n={n}")));
            }
            Ok(FormulaValue::ExactBySweep { value, r_star, k_star })
        }
        (&F::Path(n) | &F::Cycle(n), V::Edim) => sqrt_envelope(n, Some(2.0 * (2.0f64 / 3.0).sqrt())),
        (&F::Path(n) | &F::Cycle(n), V::Mdim) => sqrt_envelope(n, Some(2.0)),
        (F::Spider { legs, .. }, V::Dim) => sqrt_envelope(1 + legs.iter().sum::<usize>(), None),
        (&F::Circulant { n, .. }, V::Dim) => sqrt_envelope(n, None),
        (F::Grid(factors), V::Dim) => {
            let mut lens: Vec<usize> = factors.iter().map(|f| f.len).collect();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            let mut prod = 1.0f64;
            let mut scale = 0.0f64;
            for (i, &len) in lens.iter().enumerate() {
                prod *= len as f64;
                scale = scale.max(prod.powf(1.0 / (i as f64 + 2.0)));
            }
            Ok(FormulaValue::Asymptotic { scale, exponent: 1.0, leading_constant: None, slack: DEFAULT_SLACK })
        }
        _ => uncovered(),
    }
}

fn bipartite(s: usize, t: usize, variant: Variant) -> Result<usize> {
    if s == 0 || t == 0 {
        return Err(Error::Domain("complete bipartite sides must be non-empty".into()));
    }
    Ok(match variant {
        Variant::Dim => s + t - 1,
        Variant::Edim => s + t - 2,
        Variant::Mdim if s.min(t) <= 2 => s + t,
        Variant::Mdim => s + t - 1,
        Variant::Custom => unreachable!("filtered by caller"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_family;

    fn f(s: &str, v: Variant) -> FormulaValue {
        th_formula(&parse_family(s).unwrap(), v).unwrap()
    }

    #[test]
    fn path_examples() {
        assert_eq!(dim_k_path(5, 1).unwrap(), 2);
        assert_eq!(dim_k_path(4, 2).unwrap(), 1);
        assert_eq!(dim_k_path(20, 2).unwrap(), 5);
        assert!(dim_k_path(1, 1).is_err());
        assert!(dim_k_path(5, 0).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(dim_k_cycle(10, 3).unwrap(), 2);
        assert_eq!(dim_k_cycle(10, 1).unwrap(), 4);
        assert_eq!(dim_k_cycle(13, 1).unwrap(), 5);
    }

    #[test]
    fn middle_residue_branch() {
        // k = 3: modulus 11, middle residues 6..=6, upper 7..=10
        assert_eq!(dim_k_path(17, 3).unwrap(), (34 + 11) / 11);
        assert_eq!(dim_k_path(18, 3).unwrap(), (36 + 8) / 11);
    }

    #[test]
    fn table_values() {
        assert_eq!(f("kbipartite:3,3", Variant::Mdim).value(), Some(5));
        assert_eq!(f("kbipartite:1,2", Variant::Mdim).value(), Some(3));
        assert_eq!(f("path:2", Variant::Dim).value(), Some(1));
        assert_eq!(f("complete:1", Variant::Dim).value(), Some(0));
        assert_eq!(f("complete:2", Variant::Edim).value(), Some(0));
        assert_eq!(f("complete:5", Variant::Mdim).value(), Some(5));
        assert_eq!(f("star:5", Variant::Edim).value(), Some(3));
        assert_eq!(f("path:10", Variant::Dim).value(), Some(5));
    }

    #[test]
    fn envelopes() {
        let e = f("cycle:600", Variant::Mdim);
        assert!((e.estimate().unwrap() - 2.0 * 600f64.sqrt()).abs() < 1e-9);
        assert!(f("circulant:30:1,2", Variant::Dim).estimate().is_none());
        assert!(th_formula(&parse_family("hypercube:3").unwrap(), Variant::Dim).is_err());
        assert!(th_formula(&parse_family("cycle:5").unwrap(), Variant::Custom).is_err());
    }

    #[test]
    fn sweep_ties_keep_small_radius() {
        // P_3: r = 0 with two landmarks ties r = 1 with one
        assert_eq!(path_cycle_sweep(3, false).unwrap(), (2, 0, 2));
        assert_eq!(path_cycle_sweep(3, true).unwrap().0, 2);
    }
}
