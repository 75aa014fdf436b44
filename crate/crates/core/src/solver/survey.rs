use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::system::{build_system, Mode};
use crate::error::{Error, Result};
use crate::exact::RowSpace;
use crate::expansion::ZetaMonomial;
use crate::partitions::{count_partitions, Parity, PartitionFilter};

/// The equation-versus-unknown count used in the classical argument.
///
/// For odd `N = 2M+1` it compares `M − 2` equations with
/// `|T(N)| = Σ_{t≥1} |PO₃^{2t+1}(N)|`; for even `N = 2M`, `M − 1`
/// equations with `|T(N)| = Σ_{t≥1} |PO₃^{2t}(N)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingCheck {
    pub m: u32,
    pub equations: i64,
    pub unknowns: u128,
    /// `max(equations, 0) < unknowns`
    pub deficient: bool,
}

impl CountingCheck {
    pub fn for_weight(n: u32) -> Self {
        let m = n / 2;
        let (equations, first_t) = if n % 2 == 1 { (m as i64 - 2, 3) } else { (m as i64 - 1, 2) };
        let unknowns = (first_t..=n)
            .step_by(2)
            .map(|t| count_partitions(n, &PartitionFilter::new(3).with_parity(Parity::Odd).with_parts(t)))
            .sum();
        CountingCheck { m, equations, unknowns, deficient: (equations.max(0) as u128) < unknowns }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub weight: u32,
    pub equations: usize,
    pub unknowns: usize,
    pub rank: usize,
    pub expressible: Vec<ZetaMonomial>,
    pub inexpressible: Vec<ZetaMonomial>,
    pub counting: CountingCheck,
    /// `N > 20`, the threshold above which inexpressible monomials are
    /// claimed to exist.
    pub threshold_claim: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub mode: Mode,
    pub records: Vec<WeightRecord>,
    /// Weights where the rank verdict, the counting verdict and the
    /// `N > 20` claim do not all agree, one line each.
    pub divergences: Vec<String>,
}

fn record(n: u32, mode: Mode) -> Result<WeightRecord> {
    let system = build_system(n, mode)?;
    let space = RowSpace::new(&system.matrix());
    let (mut expressible, mut inexpressible) = (Vec::new(), Vec::new());
    for c in &system.columns {
        let e = system.unit_vector(c).expect("own column");
        if space.contains(&e) {
            expressible.push(c.clone());
        } else {
            inexpressible.push(c.clone());
        }
    }
    Ok(WeightRecord {
        weight: n,
        equations: system.rows.len(),
        unknowns: system.columns.len(),
        rank: space.rank(),
        expressible,
        inexpressible,
        counting: CountingCheck::for_weight(n),
        threshold_claim: n > 20,
    })
}

fn divergence(r: &WeightRecord) -> Option<String> {
    let rank = !r.inexpressible.is_empty();
    let count = r.counting.deficient;
    let claim = r.threshold_claim;
    (rank != count || rank != claim).then(|| {
        format!(
            "N={}: rank says {}, counting ({} equations vs {} unknowns) says {}, N>20 claim says {}",
            r.weight,
            verdict(rank),
            r.counting.equations,
            r.counting.unknowns,
            verdict(count),
            verdict(claim),
        )
    })
}

fn verdict(inexpressible: bool) -> &'static str {
    if inexpressible {
        "inexpressible monomials exist"
    } else {
        "all expressible"
    }
}

/// Exact rank and expressibility for every weight in `n_min..=n_max`.
pub fn survey(n_min: u32, n_max: u32, mode: Mode) -> Result<SurveyReport> {
    if n_min < 3 || n_min > n_max {
        return Err(Error::invalid(format!("survey range must satisfy 3 ≤ from ≤ to, got {n_min}..{n_max}")));
    }
    let mut records: Vec<WeightRecord> =
        (n_min..=n_max).into_par_iter().map(|n| record(n, mode)).collect::<Result<_>>()?;
    records.sort_by_key(|r| r.weight);
    let divergences = records.iter().filter_map(divergence).collect();
    Ok(SurveyReport { mode, records, divergences })
}
