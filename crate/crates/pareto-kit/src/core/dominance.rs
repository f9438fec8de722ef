use super::front::Front;
use super::problem::{ObjectiveVector, Solution};
use super::CoreError;

/// Outcome of comparing two objective vectors under minimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceRelation {
    Dominates,
    DominatedBy,
    Incomparable,
    Equal,
}

/// Compare two objective vectors: `a` dominates `b` when `a <= b`
/// componentwise with at least one strict inequality. Equal vectors are
/// mutually non-dominating.
pub fn compare_dominance(
    a: &ObjectiveVector,
    b: &ObjectiveVector,
) -> Result<DominanceRelation, CoreError> {
    if a.len() != b.len() {
        return Err(CoreError::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a_better = false;
    let mut b_better = false;
    for (&va, &vb) in a.as_slice().iter().zip(b.as_slice()) {
        if va < vb {
            a_better = true;
        } else if vb < va {
            b_better = true;
        }
    }
    Ok(match (a_better, b_better) {
        (true, false) => DominanceRelation::Dominates,
        (false, true) => DominanceRelation::DominatedBy,
        (true, true) => DominanceRelation::Incomparable,
        (false, false) => DominanceRelation::Equal,
    })
}

/// `a` strictly dominates `b`. Lengths must already agree.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut strict = false;
    for (&va, &vb) in a.iter().zip(b) {
        if va > vb {
            return false;
        }
        if va < vb {
            strict = true;
        }
    }
    strict
}

/// Indices of the non-dominated members of `vectors`, in input order.
/// Equal vectors never dominate each other, so duplicates all survive.
pub fn pareto_indices(vectors: &[ObjectiveVector]) -> Vec<usize> {
    (0..vectors.len())
        .filter(|&i| {
            !vectors
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && dominates(other.as_slice(), vectors[i].as_slice()))
        })
        .collect()
}

/// The non-dominated subset of `solutions`, preserving input order.
pub fn pareto_filter(solutions: &[Solution]) -> Result<Front, CoreError> {
    if solutions.is_empty() {
        return Err(CoreError::EmptyInput);
    }
    let vectors: Vec<ObjectiveVector> = solutions.iter().map(|s| s.f.clone()).collect();
    let keep = pareto_indices(&vectors);
    Ok(Front::new(
        keep.into_iter().map(|i| solutions[i].clone()).collect(),
    ))
}

/// [`pareto_filter`] over bare objective vectors.
pub fn pareto_filter_vectors(
    vectors: &[ObjectiveVector],
) -> Result<Vec<ObjectiveVector>, CoreError> {
    if vectors.is_empty() {
        return Err(CoreError::EmptyInput);
    }
    Ok(pareto_indices(vectors)
        .into_iter()
        .map(|i| vectors[i].clone())
        .collect())
}

/// Iterative non-dominated sorting: front 0 is the Pareto subset of the
/// input, front i the Pareto subset of what remains after removing fronts
/// 0..i. Every solution lands in exactly one front and no front is empty.
pub fn nondominated_sort_iterative(solutions: &[Solution]) -> Result<Vec<Front>, CoreError> {
    if solutions.is_empty() {
        return Err(CoreError::EmptyInput);
    }
    let vectors: Vec<ObjectiveVector> = solutions.iter().map(|s| s.f.clone()).collect();
    let fronts = nondominated_sort_indices(&vectors);
    Ok(fronts
        .into_iter()
        .map(|idx| Front::new(idx.into_iter().map(|i| solutions[i].clone()).collect()))
        .collect())
}

/// Index form of [`nondominated_sort_iterative`].
pub fn nondominated_sort_indices(vectors: &[ObjectiveVector]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..vectors.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let keep: Vec<usize> = remaining
            .iter()
            .filter(|&&i| {
                !remaining
                    .iter()
                    .any(|&j| j != i && dominates(vectors[j].as_slice(), vectors[i].as_slice()))
            })
            .copied()
            .collect();
        remaining.retain(|i| !keep.contains(i));
        fronts.push(keep);
    }
    fronts
}

/// Partition by dominator count: group k holds the solutions dominated by
/// exactly k others. Empty groups between occupied ones are preserved, so
/// the result always has `max_count + 1` groups.
pub fn dominator_count_partition(solutions: &[Solution]) -> Result<Vec<Vec<Solution>>, CoreError> {
    if solutions.is_empty() {
        return Err(CoreError::EmptyInput);
    }
    let vectors: Vec<ObjectiveVector> = solutions.iter().map(|s| s.f.clone()).collect();
    Ok(dominator_count_groups(&vectors)
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| solutions[i].clone()).collect())
        .collect())
}

/// Index form of [`dominator_count_partition`].
pub fn dominator_count_groups(vectors: &[ObjectiveVector]) -> Vec<Vec<usize>> {
    let counts: Vec<usize> = (0..vectors.len())
        .map(|i| {
            vectors
                .iter()
                .enumerate()
                .filter(|(j, other)| *j != i && dominates(other.as_slice(), vectors[i].as_slice()))
                .count()
        })
        .collect();
    let max_count = counts.iter().copied().max().unwrap_or(0);
    let mut groups = vec![Vec::new(); max_count + 1];
    for (i, &c) in counts.iter().enumerate() {
        groups[c].push(i);
    }
    groups
}

/// Componentwise minimum (utopia) and maximum (nadir) over a set of
/// objective vectors.
pub fn utopia_and_nadir(
    vectors: &[ObjectiveVector],
) -> Result<(ObjectiveVector, ObjectiveVector), CoreError> {
    let first = vectors.first().ok_or(CoreError::EmptyInput)?;
    let mut lo = first.as_slice().to_vec();
    let mut hi = lo.clone();
    for v in &vectors[1..] {
        if v.len() != lo.len() {
            return Err(CoreError::DimensionMismatch {
                left: lo.len(),
                right: v.len(),
            });
        }
        for (k, &val) in v.as_slice().iter().enumerate() {
            lo[k] = lo[k].min(val);
            hi[k] = hi[k].max(val);
        }
    }
    Ok((ObjectiveVector::new(lo), ObjectiveVector::new(hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(values: &[f64]) -> ObjectiveVector {
        ObjectiveVector::new(values.to_vec())
    }

    #[test]
    fn dominance_basic_cases() {
        assert_eq!(
            compare_dominance(&ov(&[1.0, 1.0]), &ov(&[2.0, 2.0])).unwrap(),
            DominanceRelation::Dominates
        );
        assert_eq!(
            compare_dominance(&ov(&[1.0, 2.0]), &ov(&[2.0, 1.0])).unwrap(),
            DominanceRelation::Incomparable
        );
        assert_eq!(
            compare_dominance(&ov(&[1.0, 1.0]), &ov(&[1.0, 1.0])).unwrap(),
            DominanceRelation::Equal
        );
        assert_eq!(
            compare_dominance(&ov(&[2.0, 2.0]), &ov(&[1.0, 1.0])).unwrap(),
            DominanceRelation::DominatedBy
        );
    }

    #[test]
    fn dominance_dimension_mismatch() {
        let err = compare_dominance(&ov(&[1.0]), &ov(&[1.0, 2.0])).unwrap_err();
        assert_eq!(err, CoreError::DimensionMismatch { left: 1, right: 2 });
    }

    #[test]
    fn pareto_indices_drops_dominated() {
        let vs = vec![ov(&[1.0, 1.0]), ov(&[2.0, 2.0]), ov(&[0.0, 3.0])];
        assert_eq!(pareto_indices(&vs), vec![0, 2]);
    }

    #[test]
    fn pareto_indices_singleton() {
        assert_eq!(pareto_indices(&[ov(&[0.0, 0.0])]), vec![0]);
    }

    #[test]
    fn pareto_indices_keeps_equal_duplicates() {
        let vs = vec![ov(&[1.0, 1.0]), ov(&[1.0, 1.0]), ov(&[2.0, 0.5])];
        assert_eq!(pareto_indices(&vs), vec![0, 1, 2]);
    }

    /// Five points whose dominance structure matches the worked sorting
    /// examples: A, B non-dominated; C dominated by A; D dominated by B;
    /// E dominated by A, B, and C.
    pub(crate) fn five_point_set() -> Vec<ObjectiveVector> {
        vec![
            ov(&[0.0, 0.6]),  // A
            ov(&[0.3, 0.0]),  // B
            ov(&[0.05, 0.7]), // C
            ov(&[1.0, 0.05]), // D
            ov(&[0.35, 1.0]), // E
        ]
    }

    #[test]
    fn figure_four_configuration() {
        // A and B non-dominated, C and D dominated by both.
        let vs = vec![
            ov(&[1.0, 4.0]),
            ov(&[4.0, 1.0]),
            ov(&[5.0, 5.0]),
            ov(&[6.0, 6.0]),
        ];
        assert_eq!(pareto_indices(&vs), vec![0, 1]);
    }

    #[test]
    fn iterative_sort_five_point_set() {
        let fronts = nondominated_sort_indices(&five_point_set());
        assert_eq!(fronts, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn iterative_sort_all_incomparable_is_single_front() {
        let vs = vec![ov(&[0.0, 2.0]), ov(&[1.0, 1.0]), ov(&[2.0, 0.0])];
        assert_eq!(nondominated_sort_indices(&vs), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn iterative_sort_chain_gives_singletons() {
        let vs = vec![ov(&[1.0, 1.0]), ov(&[2.0, 2.0]), ov(&[3.0, 3.0])];
        assert_eq!(
            nondominated_sort_indices(&vs),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn dominator_counts_five_point_set() {
        let groups = dominator_count_groups(&five_point_set());
        assert_eq!(
            groups,
            vec![vec![0, 1], vec![2, 3], vec![], vec![4]],
            "group 2 must be preserved empty"
        );
    }

    #[test]
    fn dominator_counts_singleton_and_chain() {
        assert_eq!(dominator_count_groups(&[ov(&[1.0, 2.0])]), vec![vec![0]]);
        let chain = vec![ov(&[1.0, 1.0]), ov(&[2.0, 2.0]), ov(&[3.0, 3.0])];
        assert_eq!(
            dominator_count_groups(&chain),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn solution_level_wrappers() {
        use crate::core::{DecisionVector, Solution};
        let sol = |f: &[f64]| Solution {
            x: DecisionVector::new(vec![0.0]),
            f: ov(f),
            feasible: true,
        };
        let solutions: Vec<Solution> = five_point_set().iter().map(|v| sol(v.as_slice())).collect();

        let front = pareto_filter(&solutions).unwrap();
        assert_eq!(front.len(), 2);

        let fronts = nondominated_sort_iterative(&solutions).unwrap();
        assert_eq!(fronts.iter().map(Front::len).collect::<Vec<_>>(), vec![2, 2, 1]);

        let groups = dominator_count_partition(&solutions).unwrap();
        assert_eq!(
            groups.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![2, 2, 0, 1]
        );

        assert_eq!(pareto_filter(&[]).unwrap_err(), CoreError::EmptyInput);
        assert_eq!(
            nondominated_sort_iterative(&[]).unwrap_err(),
            CoreError::EmptyInput
        );
        assert_eq!(
            dominator_count_partition(&[]).unwrap_err(),
            CoreError::EmptyInput
        );
        assert_eq!(pareto_filter_vectors(&[]).unwrap_err(), CoreError::EmptyInput);
        let kept = pareto_filter_vectors(&five_point_set()).unwrap();
        assert_eq!(kept.len(), 2);
    }

    #[test]
    fn utopia_nadir_cases() {
        let (u, n) = utopia_and_nadir(&[ov(&[0.0, 1.0]), ov(&[1.0, 0.0])]).unwrap();
        assert_eq!(u.as_slice(), &[0.0, 0.0]);
        assert_eq!(n.as_slice(), &[1.0, 1.0]);

        let (u, n) = utopia_and_nadir(&[ov(&[2.0, 3.0])]).unwrap();
        assert_eq!(u.as_slice(), &[2.0, 3.0]);
        assert_eq!(n.as_slice(), &[2.0, 3.0]);

        assert_eq!(utopia_and_nadir(&[]).unwrap_err(), CoreError::EmptyInput);
    }
}
