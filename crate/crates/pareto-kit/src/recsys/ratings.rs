use super::RecsysError;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};
use std::collections::HashMap;
use std::path::Path;

/// Which side of the evaluation split a rating landed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Train,
    Heldout,
}

/// Fixed seed for the held-out split so a dataset always splits the same
/// way regardless of run seeds.
const SPLIT_SEED: u64 = 0x7061_7265_746f_6b69; // "paretoki"

/// Sparse user-by-item rating matrix with a deterministic per-user 20%
/// held-out split. Items rated at or above the like threshold count as
/// "likes" for precision.
#[derive(Debug)]
pub struct RatingsMatrix {
    user_ids: Vec<String>,
    item_ids: Vec<String>,
    /// Per user: `(item, value, split)` sorted by item index.
    by_user: Vec<Vec<(usize, f64, Split)>>,
    like_threshold: f64,
    rating_min: f64,
    rating_max: f64,
}

impl RatingsMatrix {
    /// Assemble a matrix from explicit parts. Ratings are `(user, item,
    /// value, split)` tuples with indices into the id lists; duplicate
    /// user-item pairs are rejected.
    pub fn from_parts(
        user_ids: Vec<String>,
        item_ids: Vec<String>,
        ratings: Vec<(usize, usize, f64, Split)>,
        like_threshold: f64,
    ) -> Result<Self, RecsysError> {
        let mut by_user: Vec<Vec<(usize, f64, Split)>> = vec![Vec::new(); user_ids.len()];
        for (row, (user, item, value, split)) in ratings.into_iter().enumerate() {
            if user >= user_ids.len() || item >= item_ids.len() {
                return Err(RecsysError::ParseError {
                    row,
                    message: format!("rating ({user}, {item}) outside the id lists"),
                });
            }
            if by_user[user].iter().any(|(i, _, _)| *i == item) {
                return Err(RecsysError::ParseError {
                    row,
                    message: format!("duplicate rating for user {user} item {item}"),
                });
            }
            by_user[user].push((item, value, split));
        }
        Ok(RatingsMatrix::build(
            user_ids,
            item_ids,
            by_user,
            like_threshold,
        ))
    }

    fn build(
        user_ids: Vec<String>,
        item_ids: Vec<String>,
        mut by_user: Vec<Vec<(usize, f64, Split)>>,
        like_threshold: f64,
    ) -> Self {
        let mut rating_min = f64::INFINITY;
        let mut rating_max = f64::NEG_INFINITY;
        for ratings in &mut by_user {
            ratings.sort_by_key(|(item, _, _)| *item);
            for (_, v, _) in ratings.iter() {
                rating_min = rating_min.min(*v);
                rating_max = rating_max.max(*v);
            }
        }
        RatingsMatrix {
            user_ids,
            item_ids,
            by_user,
            like_threshold,
            rating_min,
            rating_max,
        }
    }

    pub fn num_users(&self) -> usize {
        self.user_ids.len()
    }

    pub fn num_items(&self) -> usize {
        self.item_ids.len()
    }

    pub fn num_ratings(&self) -> usize {
        self.by_user.iter().map(Vec::len).sum()
    }

    pub fn like_threshold(&self) -> f64 {
        self.like_threshold
    }

    pub fn with_like_threshold(mut self, like_threshold: f64) -> Self {
        self.like_threshold = like_threshold;
        self
    }

    pub fn rating_bounds(&self) -> (f64, f64) {
        (self.rating_min, self.rating_max)
    }

    pub fn user_id(&self, user: usize) -> &str {
        &self.user_ids[user]
    }

    pub fn item_id(&self, item: usize) -> &str {
        &self.item_ids[item]
    }

    pub fn user_index(&self, id: &str) -> Option<usize> {
        self.user_ids.iter().position(|u| u == id)
    }

    /// All ratings of one user, sorted by item index.
    pub fn user_ratings(&self, user: usize) -> &[(usize, f64, Split)] {
        &self.by_user[user]
    }

    pub fn train_ratings(&self, user: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.by_user[user]
            .iter()
            .filter(|(_, _, s)| *s == Split::Train)
            .map(|(i, v, _)| (*i, *v))
    }

    /// Held-out items the user rated at or above the like threshold.
    pub fn heldout_likes(&self, user: usize) -> Vec<usize> {
        self.by_user[user]
            .iter()
            .filter(|(_, v, s)| *s == Split::Heldout && *v >= self.like_threshold)
            .map(|(i, _, _)| *i)
            .collect()
    }

    /// Reset every rating to TRAIN; lets tests hand-compute similarities
    /// without the held-out split in the way.
    #[cfg(test)]
    pub(crate) fn all_train(mut self) -> Self {
        for ratings in &mut self.by_user {
            for r in ratings.iter_mut() {
                r.2 = Split::Train;
            }
        }
        self
    }

    /// Per-item count of TRAIN ratings.
    pub fn item_popularity(&self) -> Vec<usize> {
        let mut pop = vec![0usize; self.num_items()];
        for ratings in &self.by_user {
            for (item, _, split) in ratings {
                if *split == Split::Train {
                    pop[*item] += 1;
                }
            }
        }
        pop
    }
}

/// Deterministic user-stratified split: each user with at least two ratings
/// holds out 20% of them (at least one), chosen by a fixed-seed shuffle.
fn assign_split(by_user: &mut [Vec<(usize, f64, Split)>]) {
    for (user, ratings) in by_user.iter_mut().enumerate() {
        if ratings.len() < 2 {
            continue;
        }
        let held = (ratings.len() / 5).max(1);
        let mut rng =
            ChaCha12Rng::seed_from_u64(SPLIT_SEED ^ (user as u64).wrapping_mul(0x9E37_79B9));
        let mut order: Vec<usize> = (0..ratings.len()).collect();
        order.shuffle(&mut rng);
        for &slot in order.iter().take(held) {
            ratings[slot].2 = Split::Heldout;
        }
    }
}

/// Parse a `user_id,item_id,rating` CSV. User and item indices follow first
/// appearance order; the held-out split is applied before returning.
pub fn load_ratings(path: &Path, like_threshold: f64) -> Result<RatingsMatrix, RecsysError> {
    let text = std::fs::read_to_string(path).map_err(|e| RecsysError::ParseError {
        row: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_ratings(&text, like_threshold)
}

pub(crate) fn parse_ratings(text: &str, like_threshold: f64) -> Result<RatingsMatrix, RecsysError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(RecsysError::EmptyDataset)?;
    if header.trim() != "user_id,item_id,rating" {
        return Err(RecsysError::ParseError {
            row: 1,
            message: format!("expected header user_id,item_id,rating, found {header:?}"),
        });
    }

    let mut user_ids: Vec<String> = Vec::new();
    let mut item_ids: Vec<String> = Vec::new();
    let mut user_lookup: HashMap<String, usize> = HashMap::new();
    let mut item_lookup: HashMap<String, usize> = HashMap::new();
    let mut by_user: Vec<Vec<(usize, f64, Split)>> = Vec::new();

    for (lineno, line) in lines {
        let row = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(RecsysError::ParseError {
                row,
                message: format!("expected 3 fields, found {}", fields.len()),
            });
        }
        let value: f64 = fields[2]
            .trim()
            .parse()
            .map_err(|_| RecsysError::ParseError {
                row,
                message: format!("rating {:?} is not a number", fields[2]),
            })?;
        if !value.is_finite() {
            return Err(RecsysError::ParseError {
                row,
                message: "rating must be finite".to_string(),
            });
        }
        let user = *user_lookup.entry(fields[0].to_string()).or_insert_with(|| {
            user_ids.push(fields[0].to_string());
            by_user.push(Vec::new());
            user_ids.len() - 1
        });
        let item = *item_lookup.entry(fields[1].to_string()).or_insert_with(|| {
            item_ids.push(fields[1].to_string());
            item_ids.len() - 1
        });
        if by_user[user].iter().any(|(i, _, _)| *i == item) {
            return Err(RecsysError::ParseError {
                row,
                message: format!("duplicate rating for user {} item {}", fields[0], fields[1]),
            });
        }
        by_user[user].push((item, value, Split::Train));
    }
    if by_user.is_empty() {
        return Err(RecsysError::EmptyDataset);
    }
    assign_split(&mut by_user);
    Ok(RatingsMatrix::build(
        user_ids,
        item_ids,
        by_user,
        like_threshold,
    ))
}

/// Seeded synthetic dataset: 5 user clusters times 5 item genres, ratings
/// are the cluster-genre affinity plus Gaussian noise on a 1..5 scale, and
/// each user rates about 5% of the catalog with a popularity skew.
pub fn synth_dataset(users: usize, items: usize, seed: u64) -> RatingsMatrix {
    assert!(
        users >= 2 && items >= 2,
        "need at least 2 users and 2 items"
    );
    const CLUSTERS: usize = 5;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, 0.5).expect("fixed sigma");

    let user_cluster: Vec<usize> = (0..users).map(|_| rng.gen_range(0..CLUSTERS)).collect();
    let item_genre: Vec<usize> = (0..items).map(|_| rng.gen_range(0..CLUSTERS)).collect();

    // Strong affinity on the diagonal, mild spill-over to the next genre.
    let affinity = |cluster: usize, genre: usize| -> f64 {
        if cluster == genre {
            4.5
        } else if (cluster + 1) % CLUSTERS == genre {
            3.2
        } else {
            1.8
        }
    };

    // Popularity skew: earlier item indices are sampled more often.
    let weights: Vec<f64> = (0..items).map(|i| 1.0 / (1.0 + i as f64)).collect();
    let weight_total: f64 = weights.iter().sum();

    let per_user = ((items as f64) * 0.05).round().max(1.0) as usize;
    let mut by_user: Vec<Vec<(usize, f64, Split)>> = Vec::with_capacity(users);
    for &cluster in &user_cluster {
        let mut rated: Vec<bool> = vec![false; items];
        let mut ratings = Vec::with_capacity(per_user);
        let genre_items: Vec<usize> = (0..items).filter(|&i| item_genre[i] == cluster).collect();
        while ratings.len() < per_user {
            let item = if !genre_items.is_empty() && rng.gen_bool(0.6) {
                genre_items[rng.gen_range(0..genre_items.len())]
            } else {
                weighted_draw(&weights, weight_total, &mut rng)
            };
            if rated[item] {
                continue;
            }
            rated[item] = true;
            let value =
                (affinity(cluster, item_genre[item]) + noise.sample(&mut rng)).clamp(1.0, 5.0);
            ratings.push((item, value, Split::Train));
        }
        by_user.push(ratings);
    }
    assign_split(&mut by_user);
    RatingsMatrix::build(
        (0..users).map(|u| format!("u{u}")).collect(),
        (0..items).map(|i| format!("i{i}")).collect(),
        by_user,
        3.0,
    )
}

fn weighted_draw(weights: &[f64], total: f64, rng: &mut ChaCha12Rng) -> usize {
    let spin: f64 = rng.gen_range(0.0..total);
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if spin < acc {
            return i;
        }
    }
    weights.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_small_file() {
        let m = parse_ratings(
            "user_id,item_id,rating\nu1,i1,4.0\nu1,i2,2.0\nu2,i1,5.0\n",
            3.0,
        )
        .unwrap();
        assert_eq!(m.num_users(), 2);
        assert_eq!(m.num_items(), 2);
        assert_eq!(m.num_ratings(), 3);
        assert_eq!(m.user_id(0), "u1");
        assert_eq!(m.item_id(1), "i2");
        assert_eq!(m.rating_bounds(), (2.0, 5.0));
    }

    #[test]
    fn header_only_is_empty_dataset() {
        let err = parse_ratings("user_id,item_id,rating\n", 3.0).unwrap_err();
        assert!(matches!(err, RecsysError::EmptyDataset));
    }

    #[test]
    fn bad_number_reports_row() {
        let err = parse_ratings("user_id,item_id,rating\nu1,i1,notanumber\n", 3.0).unwrap_err();
        match err {
            RecsysError::ParseError { row, .. } => assert_eq!(row, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn duplicate_pair_rejected() {
        let err = parse_ratings("user_id,item_id,rating\nu1,i1,4\nu1,i1,5\n", 3.0).unwrap_err();
        match err {
            RecsysError::ParseError { row, .. } => assert_eq!(row, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn split_is_deterministic_and_stratified() {
        let text: String = std::iter::once("user_id,item_id,rating".to_string())
            .chain((0..10).flat_map(|u| (0..10).map(move |i| format!("u{u},i{i},4.0"))))
            .collect::<Vec<_>>()
            .join("\n");
        let a = parse_ratings(&text, 3.0).unwrap();
        let b = parse_ratings(&text, 3.0).unwrap();
        for u in 0..10 {
            assert_eq!(a.user_ratings(u), b.user_ratings(u));
            let held = a
                .user_ratings(u)
                .iter()
                .filter(|(_, _, s)| *s == Split::Heldout)
                .count();
            assert_eq!(held, 2, "10 ratings hold out exactly 20%");
        }
    }

    #[test]
    fn synth_is_deterministic() {
        let a = synth_dataset(50, 120, 42);
        let b = synth_dataset(50, 120, 42);
        assert_eq!(a.num_ratings(), b.num_ratings());
        for u in 0..a.num_users() {
            assert_eq!(a.user_ratings(u), b.user_ratings(u));
        }
        let c = synth_dataset(50, 120, 43);
        let same = (0..a.num_users()).all(|u| a.user_ratings(u) == c.user_ratings(u));
        assert!(!same, "different seeds should differ");
    }

    #[test]
    fn synth_density_and_coverage() {
        let m = synth_dataset(200, 500, 7);
        let density = m.num_ratings() as f64 / (200.0 * 500.0);
        assert!((density - 0.05).abs() <= 0.01, "density {density}");
        for u in 0..m.num_users() {
            assert!(!m.user_ratings(u).is_empty(), "user {u} has no ratings");
        }
        let (lo, hi) = m.rating_bounds();
        assert!(lo >= 1.0 && hi <= 5.0);
    }
}
