//! Grid-size statistics over uniformly random triangulations.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::bijection::random_triangulation;
use crate::drawing::{ccw_internal_edges, compact, fast_coordinates};
use crate::error::{Error, Result};
use crate::rng::split_seed;
use crate::transversal::orient;
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub sizes: Vec<usize>,
    pub samples_per_size: usize,
    pub seed: u64,
    /// Also measure the compacted drawing.
    pub compact: bool,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return Err(Error::InvalidStructure("sizes must be positive".into()));
        }
        if self.samples_per_size == 0 {
            return Err(Error::InvalidStructure("at least one sample per size".into()));
        }
        Ok(())
    }
}

/// Measurements on one random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sample {
    pub n: usize,
    pub width: i64,
    pub height: i64,
    pub compact_width: i64,
    pub compact_height: i64,
    pub red_edges: usize,
    pub ccw_internal_red: usize,
    pub ccw_internal_blue: usize,
}

fn check(ok: bool, what: &str, n: usize, seed: u64) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidStructure(format!("identity {what} fails at n={n}, seed={seed}")))
    }
}

/// Draws one instance and checks the per-sample identities.
pub fn run_sample(n: usize, seed: u64, with_compact: bool) -> Result<Sample> {
    let c = random_triangulation(n, seed)?;
    let t = &c.triangulation;
    let ts = orient(t, &c.partition)?;
    let d = fast_coordinates(t, &ts);
    let nv = t.map().vertex_count() as i64;
    let red_edges = c.partition.count(Color::Red);
    let (cr, cb) = (ccw_internal_edges(t, &c.partition, Color::Red), ccw_internal_edges(t, &c.partition, Color::Blue));
    check(d.coords.iter().map(|p| p.0).max() == Some(d.width), "W = f_r", n, seed)?;
    check(d.coords.iter().map(|p| p.1).max() == Some(d.height), "H = f_b", n, seed)?;
    check(d.width + d.height == nv - 1, "W + H = |V| - 1", n, seed)?;
    check(d.width == red_edges as i64 - n as i64 + 1, "W = e_r - n + 1", n, seed)?;
    let (compact_width, compact_height) = if with_compact {
        let k = compact(&d);
        check(k.width == d.width - cr as i64, "W_c = W - ccw-internal red", n, seed)?;
        check(k.height == d.height - cb as i64, "H_c = H - ccw-internal blue", n, seed)?;
        (k.width, k.height)
    } else {
        (d.width - cr as i64, d.height - cb as i64)
    };
    Ok(Sample {
        n,
        width: d.width,
        height: d.height,
        compact_width,
        compact_height,
        red_edges,
        ccw_internal_red: cr,
        ccw_internal_blue: cb,
    })
}

/// Mean and sample standard deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub sd: f64,
}

impl Moments {
    fn of(xs: impl Iterator<Item = f64> + Clone) -> Self {
        let k = xs.clone().count() as f64;
        let mean = xs.clone().sum::<f64>() / k;
        let var = if k > 1.0 { xs.map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1.0) } else { 0.0 };
        Moments { mean, sd: var.sqrt() }
    }

    /// Standard error of the mean.
    pub fn se(&self, k: usize) -> f64 {
        self.sd / (k as f64).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizeRow {
    pub n: usize,
    pub samples: usize,
    pub width: Moments,
    pub height: Moments,
    pub compact_width: Moments,
    pub compact_height: Moments,
    pub red_edges: Moments,
}

impl SizeRow {
    pub fn ratios(&self) -> [f64; 4] {
        let n = self.n as f64;
        [self.width.mean / n, self.height.mean / n, self.compact_width.mean / n, self.compact_height.mean / n]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub seed: u64,
    pub rows: Vec<SizeRow>,
}

/// Runs all samples (in parallel) with seeds split from the master seed; the
/// result does not depend on the scheduling.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for (i, &n) in cfg.sizes.iter().enumerate() {
        let base = split_seed(cfg.seed, i as u64);
        let samples = (0..cfg.samples_per_size)
            .into_par_iter()
            .map(|k| run_sample(n, split_seed(base, k as u64), cfg.compact))
            .collect::<Result<Vec<Sample>>>()?;
        let col = |f: fn(&Sample) -> f64| Moments::of(samples.iter().map(f));
        rows.push(SizeRow {
            n,
            samples: samples.len(),
            width: col(|s| s.width as f64),
            height: col(|s| s.height as f64),
            compact_width: col(|s| s.compact_width as f64),
            compact_height: col(|s| s.compact_height as f64),
            red_edges: col(|s| s.red_edges as f64),
        });
    }
    Ok(ExperimentReport { seed: cfg.seed, rows })
}

impl ExperimentReport {
    /// Tab-separated rows under a `#` header.
    pub fn to_tsv(&self) -> String {
        let mut s = format!("# seed {}\n", self.seed);
        s.push_str("# n\tsamples\tW\tH\tWc\tHc\tsd_W\tsd_H\tsd_Wc\tsd_Hc\tW/n\tH/n\tWc/n\tHc/n\tse_W/n\tse_H/n\tse_Wc/n\tse_Hc/n\ter/n\n");
        for r in &self.rows {
            let [a, b, c, d] = r.ratios();
            let se = |m: &Moments| m.se(r.samples) / r.n as f64;
            let _ = writeln!(
                s,
                "{}\t{}\t{:.3}\t{:.3}\t{:.3}\t{:.3}\t{:.3}\t{:.3}\t{:.3}\t{:.3}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\t{:.4}",
                r.n,
                r.samples,
                r.width.mean,
                r.height.mean,
                r.compact_width.mean,
                r.compact_height.mean,
                r.width.sd,
                r.height.sd,
                r.compact_width.sd,
                r.compact_height.sd,
                a,
                b,
                c,
                d,
                se(&r.width),
                se(&r.height),
                se(&r.compact_width),
                se(&r.compact_height),
                r.red_edges.mean / r.n as f64
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let cfg = ExperimentConfig { sizes: vec![1, 20], samples_per_size: 5, seed: 3, compact: true };
        let a = run_experiment(&cfg).unwrap();
        assert_eq!(a, run_experiment(&cfg).unwrap());
        assert_eq!(a.rows[0].width.mean, 2.0);
        assert_eq!(a.rows[0].compact_width.mean, 2.0);
    }

    #[test]
    fn bad_config() {
        let cfg = ExperimentConfig { sizes: vec![0], samples_per_size: 5, seed: 3, compact: true };
        assert!(run_experiment(&cfg).is_err());
    }
}
