use super::ratings::RatingsMatrix;

/// Dense symmetric item-item cosine similarity with unit diagonal.
pub struct ItemSimilarity {
    n: usize,
    values: Vec<f64>,
}

impl ItemSimilarity {
    pub fn num_items(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }
}

/// Cosine similarity between items over their co-rating vectors: for each
/// item pair, the dot product and norms run over the users who rated both
/// items in TRAIN. Items with no co-raters score 0.
pub fn item_similarity(matrix: &RatingsMatrix) -> ItemSimilarity {
    let n = matrix.num_items();
    let mut dot = vec![0.0_f64; n * n];
    let mut sq_left = vec![0.0_f64; n * n];
    let mut sq_right = vec![0.0_f64; n * n];

    for user in 0..matrix.num_users() {
        let rated: Vec<(usize, f64)> = matrix.train_ratings(user).collect();
        for (a, &(i, ri)) in rated.iter().enumerate() {
            for &(j, rj) in rated.iter().skip(a + 1) {
                let slot = i * n + j;
                dot[slot] += ri * rj;
                sq_left[slot] += ri * ri;
                sq_right[slot] += rj * rj;
            }
        }
    }

    let mut values = vec![0.0_f64; n * n];
    for i in 0..n {
        values[i * n + i] = 1.0;
        for j in i + 1..n {
            let slot = i * n + j;
            let denom = (sq_left[slot] * sq_right[slot]).sqrt();
            let s = if denom > 0.0 { dot[slot] / denom } else { 0.0 };
            values[i * n + j] = s;
            values[j * n + i] = s;
        }
    }
    ItemSimilarity { n, values }
}

/// Top-K candidates for one user.
#[derive(Debug, Clone)]
pub struct CfCandidates {
    /// Item indices, best first.
    pub items: Vec<usize>,
    /// Predicted scores aligned with `items`.
    pub scores: Vec<f64>,
    /// The user had no TRAIN ratings; the ranking fell back to popularity.
    pub cold_user: bool,
}

/// Item-based CF candidate generation: unrated items are scored by the
/// similarity-weighted average of the user's TRAIN ratings and the top K
/// are returned (ties by item index). Users without TRAIN ratings get the
/// popularity ranking instead, flagged as cold.
pub fn cf_topk(
    matrix: &RatingsMatrix,
    sim: &ItemSimilarity,
    user: usize,
    k: usize,
) -> CfCandidates {
    assert!(user < matrix.num_users(), "user index out of range");
    assert!(k >= 1, "k must be at least 1");
    let rated: Vec<(usize, f64)> = matrix.train_ratings(user).collect();
    if rated.is_empty() {
        let pop = matrix.item_popularity();
        let mut order: Vec<usize> = (0..matrix.num_items()).collect();
        order.sort_by(|&a, &b| pop[b].cmp(&pop[a]).then(a.cmp(&b)));
        order.truncate(k);
        let scores = order.iter().map(|&i| pop[i] as f64).collect();
        return CfCandidates {
            items: order,
            scores,
            cold_user: true,
        };
    }

    let rated_mask: Vec<bool> = {
        let mut mask = vec![false; matrix.num_items()];
        for &(i, _) in &rated {
            mask[i] = true;
        }
        mask
    };
    let mut scored: Vec<(usize, f64)> = (0..matrix.num_items())
        .filter(|&i| !rated_mask[i])
        .map(|i| {
            let mut num = 0.0;
            let mut den = 0.0;
            for &(j, r) in &rated {
                let s = sim.get(i, j);
                if s != 0.0 {
                    num += s * r;
                    den += s.abs();
                }
            }
            (i, if den > 0.0 { num / den } else { 0.0 })
        })
        .collect();
    scored.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("scores are finite")
            .then(a.0.cmp(&b.0))
    });
    scored.truncate(k);
    CfCandidates {
        items: scored.iter().map(|(i, _)| *i).collect(),
        scores: scored.iter().map(|(_, s)| *s).collect(),
        cold_user: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recsys::ratings::parse_ratings;

    fn train_matrix(text: &str) -> RatingsMatrix {
        parse_ratings(text, 3.0).unwrap().all_train()
    }

    #[test]
    fn cosine_over_co_raters_by_hand() {
        // Two users rated both items: co-rating vectors (5, 5) and (4, 5).
        // A third user rated only item a, which must not enter the norms.
        let m = train_matrix(
            "user_id,item_id,rating\n\
             u1,a,5\nu1,b,4\n\
             u2,a,5\nu2,b,5\n\
             u3,a,1\n",
        );
        let sim = item_similarity(&m);
        let expected = 45.0 / (50.0_f64 * 41.0).sqrt();
        assert!(
            (sim.get(0, 1) - expected).abs() < 1e-12,
            "s = {}",
            sim.get(0, 1)
        );
        assert_eq!(sim.get(0, 0), 1.0);
        assert_eq!(sim.get(0, 1), sim.get(1, 0));
    }

    #[test]
    fn identical_vectors_have_unit_similarity() {
        let m = train_matrix(
            "user_id,item_id,rating\n\
             u1,a,4\nu1,b,4\n\
             u2,a,2\nu2,b,2\n",
        );
        let sim = item_similarity(&m);
        assert!((sim.get(0, 1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disjoint_raters_score_zero() {
        let m = train_matrix("user_id,item_id,rating\nu1,a,5\nu2,b,5\n");
        let sim = item_similarity(&m);
        assert_eq!(sim.get(0, 1), 0.0);
    }

    #[test]
    fn cf_excludes_rated_and_truncates() {
        // u1 rated everything: no candidates remain.
        let m = train_matrix(
            "user_id,item_id,rating\n\
             u1,a,5\nu1,b,4\nu1,c,3\n\
             u2,a,5\nu2,b,4\n",
        );
        let sim = item_similarity(&m);
        let c = cf_topk(&m, &sim, 0, 10);
        assert!(c.items.is_empty());

        // u2 left c unrated; K beyond the catalog returns all unrated.
        let c = cf_topk(&m, &sim, 1, 10);
        assert_eq!(c.items, vec![2]);
        // And K = 1 truncates.
        let c = cf_topk(&m, &sim, 1, 1);
        assert_eq!(c.items.len(), 1);
    }

    #[test]
    fn hand_computed_weighted_average_ordering() {
        // Target user rated x = 5 and y = 1. Three candidates:
        //   a co-rated with x only, b with y only, c with both.
        let m = train_matrix(
            "user_id,item_id,rating\n\
             t,x,5\nt,y,1\n\
             u2,x,4\nu2,a,4\n\
             u3,y,4\nu3,b,4\n\
             u4,x,3\nu4,c,3\nu4,y,3\n",
        );
        let sim = item_similarity(&m);
        let (x, y, a, b, c) = (0, 1, 2, 3, 4);
        // Co-rating cosines with a single co-rater are exactly 1.
        for (p, q) in [(a, x), (b, y), (c, x), (c, y)] {
            assert!((sim.get(p, q) - 1.0).abs() < 1e-12);
        }
        // Hand oracle: score = sum s*r / sum |s| over {x: 5, y: 1}.
        //   a -> 5, b -> 1, c -> (5 + 1) / 2 = 3; order a, c, b.
        let out = cf_topk(&m, &sim, 0, 10);
        assert_eq!(out.items, vec![a, c, b]);
        assert!((out.scores[0] - 5.0).abs() < 1e-12);
        assert!((out.scores[1] - 3.0).abs() < 1e-12);
        assert!((out.scores[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cold_user_gets_popularity_ranking() {
        use crate::recsys::{RatingsMatrix, Split};
        let ids = |prefix: &str, n: usize| -> Vec<String> {
            (0..n).map(|i| format!("{prefix}{i}")).collect()
        };
        // u2's only rating sits in HELDOUT, so it has no TRAIN signal.
        let m = RatingsMatrix::from_parts(
            ids("u", 3),
            ids("i", 3),
            vec![
                (0, 0, 4.0, Split::Train),
                (0, 1, 4.0, Split::Train),
                (1, 0, 4.0, Split::Train),
                (2, 0, 5.0, Split::Heldout),
            ],
            3.0,
        )
        .unwrap();
        let sim = item_similarity(&m);
        let out = cf_topk(&m, &sim, 2, 3);
        assert!(out.cold_user);
        // Popularity order: i0 (2 train ratings), i1 (1), i2 (0).
        assert_eq!(out.items, vec![0, 1, 2]);
    }
}
