//! Parameter grids for sweeps: `key=lo:hi:n` ranges expanded to exact
//! rational lattices, iterated in fixed parameter order so the CSV row order
//! is the lexicographic order of the parameter tuples.

use crate::document::parse_rational;
use crate::CliError;
use ricci3::exact::{q, Q};
use ricci3::families::{Family, FamilySpec};

const PARAM_ORDER: [&str; 5] = ["alpha", "beta", "gamma", "delta", "eta"];

#[derive(Clone, Debug)]
pub struct Grid {
    pub family: Family,
    /// (param name, values) in PARAM_ORDER for the params the grid mentions.
    pub axes: Vec<(String, Vec<Q>)>,
}

impl Grid {
    /// Parse `"alpha=1:1:1,beta=-1:1:3"`.
    pub fn parse(family: Family, text: &str) -> Result<Grid, CliError> {
        let mut axes: Vec<(String, Vec<Q>)> = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, range) = part
                .split_once('=')
                .ok_or_else(|| CliError::input(format!("grid entry `{part}` is not KEY=lo:hi:n")))?;
            let key = key.trim();
            if !PARAM_ORDER.contains(&key) {
                return Err(CliError::input(format!("unknown grid parameter `{key}`")));
            }
            if !family.used_params().contains(&key) {
                return Err(CliError::input(format!(
                    "parameter `{key}` is not used by family {family}"
                )));
            }
            if axes.iter().any(|(k, _)| k == key) {
                return Err(CliError::input(format!("parameter `{key}` given twice")));
            }
            let fields: Vec<&str> = range.split(':').collect();
            let [lo, hi, n] = fields.as_slice() else {
                return Err(CliError::input(format!(
                    "range `{range}` is not lo:hi:n"
                )));
            };
            let lo = parse_rational(lo).map_err(CliError::input)?;
            let hi = parse_rational(hi).map_err(CliError::input)?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| CliError::input(format!("bad step count `{n}`")))?;
            if n == 0 {
                return Err(CliError::input("step count must be at least 1"));
            }
            let values = if n == 1 {
                vec![lo]
            } else {
                let step = (&hi - &lo) / q((n - 1) as i64);
                (0..n).map(|i| &lo + q(i as i64) * &step).collect()
            };
            axes.push((key.to_string(), values));
        }
        if axes.is_empty() {
            return Err(CliError::input("empty grid"));
        }
        axes.sort_by_key(|(k, _)| PARAM_ORDER.iter().position(|p| p == k).unwrap());
        Ok(Grid { family, axes })
    }

    /// All grid points in lexicographic parameter order. Points violating the
    /// family's side conditions are skipped (a sweep may cross them).
    pub fn points(&self) -> Vec<FamilySpec> {
        let mut specs = Vec::new();
        let mut index = vec![0usize; self.axes.len()];
        loop {
            let mut spec = FamilySpec::g3(q(0), q(0), q(0));
            spec.family = self.family;
            for (axis, &i) in self.axes.iter().zip(&index) {
                let value = axis.1[i].clone();
                match axis.0.as_str() {
                    "alpha" => spec.alpha = value,
                    "beta" => spec.beta = value,
                    "gamma" => spec.gamma = value,
                    "delta" => spec.delta = value,
                    "eta" => spec.eta = value,
                    _ => unreachable!(),
                }
            }
            specs.push(spec);
            // odometer increment, last axis fastest
            let mut k = self.axes.len();
            loop {
                if k == 0 {
                    return specs;
                }
                k -= 1;
                index[k] += 1;
                if index[k] < self.axes[k].1.len() {
                    break;
                }
                index[k] = 0;
            }
        }
    }
}
