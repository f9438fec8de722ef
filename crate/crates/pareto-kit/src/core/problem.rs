use super::CoreError;

/// Scalar function of a decision vector.
pub type Evaluator = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A point in decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionVector(pub Vec<f64>);

impl DecisionVector {
    pub fn new(values: Vec<f64>) -> Self {
        DecisionVector(values)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for DecisionVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// A point in objective space; the unit of dominance comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector(pub Vec<f64>);

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Self {
        ObjectiveVector(values)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for ObjectiveVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl From<Vec<f64>> for ObjectiveVector {
    fn from(values: Vec<f64>) -> Self {
        ObjectiveVector(values)
    }
}

/// Per-variable box bounds, `lower[i] <= x_i <= upper[i]`.
#[derive(Debug, Clone)]
pub struct BoxBounds {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl BoxBounds {
    /// Panics if the two sides disagree in length or any `lower[i] > upper[i]`.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(
            lower.len(),
            upper.len(),
            "bound sides must have equal length"
        );
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            assert!(lo <= hi, "lower[{i}] = {lo} exceeds upper[{i}] = {hi}");
        }
        BoxBounds { lower, upper }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *v >= *lo && *v <= *hi)
    }

    pub fn range(&self, i: usize) -> f64 {
        self.upper[i] - self.lower[i]
    }
}

/// Inequality constraints `g_j(x) >= 0` and equality constraints
/// `|h_k(x)| <= eq_tolerance`.
pub struct ConstraintSet {
    pub inequalities: Vec<Evaluator>,
    pub equalities: Vec<Evaluator>,
    pub eq_tolerance: f64,
}

impl ConstraintSet {
    pub fn empty() -> Self {
        ConstraintSet {
            inequalities: Vec::new(),
            equalities: Vec::new(),
            eq_tolerance: 1e-8,
        }
    }

    pub fn new(
        inequalities: Vec<Evaluator>,
        equalities: Vec<Evaluator>,
        eq_tolerance: f64,
    ) -> Self {
        assert!(eq_tolerance > 0.0, "eq_tolerance must be positive");
        ConstraintSet {
            inequalities,
            equalities,
            eq_tolerance,
        }
    }

    pub fn satisfied(&self, x: &[f64]) -> bool {
        self.inequalities.iter().all(|g| g(x) >= 0.0)
            && self
                .equalities
                .iter()
                .all(|h| h(x).abs() <= self.eq_tolerance)
    }
}

impl Default for ConstraintSet {
    fn default() -> Self {
        ConstraintSet::empty()
    }
}

/// A multi-objective minimization problem: M scalar objectives over a box,
/// with optional inequality/equality constraints.
pub struct Problem {
    pub objectives: Vec<Evaluator>,
    pub bounds: BoxBounds,
    pub constraints: ConstraintSet,
}

impl Problem {
    /// Panics unless there are at least two objectives.
    pub fn new(objectives: Vec<Evaluator>, bounds: BoxBounds, constraints: ConstraintSet) -> Self {
        assert!(
            objectives.len() >= 2,
            "a multi-objective problem needs M >= 2"
        );
        Problem {
            objectives,
            bounds,
            constraints,
        }
    }

    /// Number of decision variables.
    pub fn num_vars(&self) -> usize {
        self.bounds.dim()
    }

    /// Number of objectives.
    pub fn num_objectives(&self) -> usize {
        self.objectives.len()
    }

    /// Bounds plus all constraints hold at `x`.
    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.bounds.contains(x) && self.constraints.satisfied(x)
    }
}

/// A decision vector paired with its objective vector and feasibility flag.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub x: DecisionVector,
    pub f: ObjectiveVector,
    pub feasible: bool,
}

/// Evaluate every objective of `problem` at `x` once and check feasibility.
///
/// Feasible means: inside the box bounds, every `g_j(x) >= 0`, and every
/// `|h_k(x)| <= eq_tolerance`. A NaN or infinite objective value is reported
/// as [`CoreError::NonFiniteObjective`] since it signals a malformed
/// evaluator, not an infeasible point.
pub fn evaluate(problem: &Problem, x: &DecisionVector) -> Result<Solution, CoreError> {
    assert_eq!(
        x.len(),
        problem.num_vars(),
        "decision vector length {} does not match problem dimension {}",
        x.len(),
        problem.num_vars()
    );
    let mut values = Vec::with_capacity(problem.num_objectives());
    for (i, obj) in problem.objectives.iter().enumerate() {
        let v = obj(x.as_slice());
        if !v.is_finite() {
            return Err(CoreError::NonFiniteObjective {
                objective: i,
                value: v,
            });
        }
        values.push(v);
    }
    Ok(Solution {
        feasible: problem.is_feasible(x.as_slice()),
        x: x.clone(),
        f: ObjectiveVector::new(values),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::example2;

    #[test]
    fn evaluate_example2_hand_values() {
        let p = example2();
        let s = evaluate(&p, &DecisionVector::new(vec![3.0])).unwrap();
        assert_eq!(s.f.as_slice(), &[5.0, 1.0]);
        assert!(s.feasible);

        let s = evaluate(&p, &DecisionVector::new(vec![0.0])).unwrap();
        assert_eq!(s.f.as_slice(), &[-1.0, 19.0]);
        assert!(s.feasible);
    }

    #[test]
    fn evaluate_out_of_bounds_is_infeasible() {
        let p = example2();
        let s = evaluate(&p, &DecisionVector::new(vec![7.0])).unwrap();
        assert!(!s.feasible);
    }

    #[test]
    fn evaluate_rejects_non_finite_objective() {
        let p = Problem::new(
            vec![Box::new(|x: &[f64]| x[0].ln()), Box::new(|x: &[f64]| x[0])],
            BoxBounds::new(vec![-1.0], vec![1.0]),
            ConstraintSet::empty(),
        );
        let err = evaluate(&p, &DecisionVector::new(vec![-0.5])).unwrap_err();
        assert!(matches!(
            err,
            CoreError::NonFiniteObjective { objective: 0, .. }
        ));
    }

    #[test]
    fn equality_constraint_uses_tolerance() {
        let p = Problem::new(
            vec![Box::new(|x: &[f64]| x[0]), Box::new(|x: &[f64]| -x[0])],
            BoxBounds::new(vec![0.0], vec![1.0]),
            ConstraintSet::new(vec![], vec![Box::new(|x: &[f64]| x[0] - 0.5)], 1e-8),
        );
        assert!(
            evaluate(&p, &DecisionVector::new(vec![0.5]))
                .unwrap()
                .feasible
        );
        assert!(
            !evaluate(&p, &DecisionVector::new(vec![0.5 + 1e-6]))
                .unwrap()
                .feasible
        );
        assert!(
            evaluate(&p, &DecisionVector::new(vec![0.5 + 1e-9]))
                .unwrap()
                .feasible
        );
    }
}
