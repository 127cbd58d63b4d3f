//! `hvbox bench`: decomposition diagnostics over seeded random fronts.

use std::io::Write;
use std::time::Instant;

use clap::Args;

use super::CliError;
use crate::decompose::{count_bound, decompose, depth_bound, DecomposeConfig};
use crate::hvimprove::nondominated_volume;
use crate::oracle::{
    generate_front, hv_inclusion_exclusion, FrontShape, RandomFrontSpec, ORACLE_LIMIT,
};

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Front sizes.
    #[arg(long, value_delimiter = ',', default_value = "50")]
    pub n: Vec<usize>,
    /// Objective counts.
    #[arg(long, value_delimiter = ',', default_value = "4")]
    pub m: Vec<usize>,
    /// Alpha values, each in [0,1).
    #[arg(long, value_delimiter = ',', default_value = "0.001")]
    pub alpha: Vec<f64>,
    /// Number of seeds per cell, numbered from 0.
    #[arg(long, default_value_t = 3)]
    pub seeds: u64,
    #[arg(long, default_value = "sphere_like")]
    pub shape: FrontShape,
    /// Also compute the volume missed relative to the exact decomposition
    /// with the brute-force oracle (N ≤ 20).
    #[arg(long)]
    pub verify: bool,
}

const HEADER: &str = "n\tm\talpha\tseed\tshape\taccepted\tk_bound\titerations\tsplits\tmax_depth\tdepth_bound\tpruned_dominated\tpruned_resolution\tpruned_volume\twall_us\tmissed_volume";

pub(super) fn cmd_bench(
    args: &BenchArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    if let Some(a) = args.alpha.iter().find(|a| !(0.0..1.0).contains(*a)) {
        return Err(CliError::Usage(format!("alpha must be in [0,1), got {a}")));
    }
    if args.n.contains(&0) || args.m.contains(&0) {
        return Err(CliError::Usage(
            "--n and --m values must be positive".into(),
        ));
    }
    if args.verify {
        if let Some(n) = args.n.iter().find(|&&n| n > ORACLE_LIMIT) {
            return Err(CliError::Usage(format!(
                "oracle limit: --verify supports N up to {ORACLE_LIMIT}, got {n}"
            )));
        }
    }

    writeln!(out, "{HEADER}")?;
    let mut violations = Vec::new();
    let mut rows = 0usize;
    for &n in &args.n {
        for &m in &args.m {
            // one objective only admits a single-point front
            let n = if m == 1 { 1 } else { n };
            for &alpha in &args.alpha {
                for seed in 0..args.seeds {
                    let front = generate_front(&RandomFrontSpec::new(n, m, seed, args.shape))?;
                    let config = DecomposeConfig::new(alpha);
                    let start = Instant::now();
                    let d = decompose(&front, &config)?;
                    let wall_us = start.elapsed().as_micros();
                    let diag = d.diagnostics();

                    let k_bound = if alpha > 0.0 {
                        Some(count_bound(alpha)?)
                    } else {
                        None
                    };
                    let depth_max = depth_bound(n, m);
                    if alpha > 0.0 && diag.accepted as f64 > 2.0 / alpha {
                        violations.push(format!(
                            "n={n} m={m} alpha={alpha} seed={seed}: K={} > 2/alpha",
                            diag.accepted
                        ));
                    }
                    if diag.accepted > diag.iterations {
                        violations.push(format!(
                            "n={n} m={m} alpha={alpha} seed={seed}: K exceeds iterations"
                        ));
                    }
                    if diag.max_depth > depth_max {
                        violations.push(format!(
                            "n={n} m={m} alpha={alpha} seed={seed}: depth {} > {depth_max}",
                            diag.max_depth
                        ));
                    }

                    let missed = if args.verify {
                        let hv = hv_inclusion_exclusion(front.points(), d.upper_corner())?;
                        let exact = d.h_all() - hv;
                        (exact - nondominated_volume(&d)).to_string()
                    } else {
                        "-".to_string()
                    };
                    writeln!(
                        out,
                        "{n}\t{m}\t{alpha}\t{seed}\t{}\t{}\t{}\t{}\t{}\t{}\t{depth_max}\t{}\t{}\t{}\t{wall_us}\t{missed}",
                        args.shape.name(),
                        diag.accepted,
                        k_bound.map_or("-".to_string(), |k| k.to_string()),
                        diag.iterations,
                        diag.splits,
                        diag.max_depth,
                        diag.pruned_dominated,
                        diag.pruned_resolution,
                        diag.pruned_volume,
                    )?;
                    rows += 1;
                }
            }
        }
    }
    writeln!(err, "{rows} rows, {} violations", violations.len())?;
    if violations.is_empty() {
        Ok(())
    } else {
        for v in &violations {
            writeln!(err, "{v}")?;
        }
        Err(CliError::Invariant(format!(
            "{} bench rows broke a bound",
            violations.len()
        )))
    }
}
