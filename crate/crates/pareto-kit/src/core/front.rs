use super::problem::{ObjectiveVector, Solution};
use std::fmt::Write as _;

/// An ordered set of solutions, usually mutually non-dominated.
#[derive(Debug, Clone, Default)]
pub struct Front {
    entries: Vec<Solution>,
}

impl Front {
    pub fn new(entries: Vec<Solution>) -> Self {
        Front { entries }
    }

    pub fn entries(&self) -> &[Solution] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn objective_vectors(&self) -> Vec<ObjectiveVector> {
        self.entries.iter().map(|s| s.f.clone()).collect()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Solution> {
        self.entries.iter()
    }

    /// All pairs are mutually incomparable or equal.
    pub fn is_mutually_nondominated(&self) -> bool {
        let vs = self.objective_vectors();
        super::pareto_indices(&vs).len() == vs.len()
    }

    /// Serialize as CSV: `id,x_1..x_n,f_1..f_M,feasible`, one row per entry
    /// in front order, floats printed with 13 significant digits.
    pub fn to_csv(&self) -> String {
        let n = self.entries.first().map_or(0, |s| s.x.len());
        let m = self.entries.first().map_or(0, |s| s.f.len());
        let mut out = String::from("id");
        for i in 1..=n {
            let _ = write!(out, ",x_{i}");
        }
        for i in 1..=m {
            let _ = write!(out, ",f_{i}");
        }
        out.push_str(",feasible\n");
        for (id, s) in self.entries.iter().enumerate() {
            let _ = write!(out, "{id}");
            for v in s.x.as_slice() {
                let _ = write!(out, ",{}", format_float(*v));
            }
            for v in s.f.as_slice() {
                let _ = write!(out, ",{}", format_float(*v));
            }
            let _ = writeln!(out, ",{}", s.feasible);
        }
        out
    }

    /// Parse the CSV format written by [`Front::to_csv`].
    pub fn from_csv(text: &str) -> Result<Front, String> {
        let mut lines = text.lines();
        let header = lines.next().ok_or("empty CSV")?;
        let cols: Vec<&str> = header.split(',').collect();
        if cols.first() != Some(&"id") || cols.last() != Some(&"feasible") {
            return Err(format!("unexpected front CSV header: {header}"));
        }
        let n = cols.iter().filter(|c| c.starts_with("x_")).count();
        let m = cols.iter().filter(|c| c.starts_with("f_")).count();
        if m == 0 {
            return Err("front CSV has no f_ columns".to_string());
        }
        let mut entries = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 2 + n + m {
                return Err(format!(
                    "row {}: expected {} fields, found {}",
                    lineno + 2,
                    2 + n + m,
                    fields.len()
                ));
            }
            let parse = |s: &str| -> Result<f64, String> {
                s.parse::<f64>()
                    .map_err(|_| format!("row {}: bad number {s:?}", lineno + 2))
            };
            let x: Vec<f64> = fields[1..1 + n]
                .iter()
                .map(|s| parse(s))
                .collect::<Result<_, _>>()?;
            let f: Vec<f64> = fields[1 + n..1 + n + m]
                .iter()
                .map(|s| parse(s))
                .collect::<Result<_, _>>()?;
            let feasible = fields[1 + n + m]
                .parse::<bool>()
                .map_err(|_| format!("row {}: bad feasible flag", lineno + 2))?;
            entries.push(Solution {
                x: super::problem::DecisionVector::new(x),
                f: ObjectiveVector::new(f),
                feasible,
            });
        }
        Ok(Front::new(entries))
    }
}

impl<'a> IntoIterator for &'a Front {
    type Item = &'a Solution;
    type IntoIter = std::slice::Iter<'a, Solution>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Fixed-width scientific form keeps 13 significant digits and renders
/// byte-identically across runs.
pub fn format_float(v: f64) -> String {
    format!("{v:.12e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::DecisionVector;

    fn sol(x: &[f64], f: &[f64]) -> Solution {
        Solution {
            x: DecisionVector::new(x.to_vec()),
            f: ObjectiveVector::new(f.to_vec()),
            feasible: true,
        }
    }

    #[test]
    fn csv_round_trip() {
        let front = Front::new(vec![sol(&[0.5], &[0.0, 13.5]), sol(&[3.0], &[5.0, 1.0])]);
        let csv = front.to_csv();
        assert!(csv.starts_with("id,x_1,f_1,f_2,feasible\n"));
        let back = Front::from_csv(&csv).unwrap();
        assert_eq!(back.entries(), front.entries());
    }

    #[test]
    fn csv_has_12_plus_significant_digits() {
        let front = Front::new(vec![sol(&[1.0 / 3.0], &[2.0 / 3.0, 1.0])]);
        let csv = front.to_csv();
        assert!(csv.contains("3.333333333333e-1"), "csv was: {csv}");
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(Front::from_csv("nope\n1,2\n").is_err());
        assert!(Front::from_csv("id,x_1,f_1,f_2,feasible\n0,1.0,oops,2.0,true\n").is_err());
    }
}
