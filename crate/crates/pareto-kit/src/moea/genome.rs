use super::MoeaError;
use crate::core::{BoxBounds, DecisionVector};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};

/// How candidate solutions are encoded as chromosomes.
#[derive(Debug, Clone)]
pub enum EncodingSpec {
    /// Fixed-length bit string with a fixed number of set bits; decodes to
    /// the set of selected positions.
    Binary { length: usize, num_selected: usize },
    /// Ordered list of `list_length` distinct indices drawn from
    /// `0..pool_size`.
    Permutation {
        pool_size: usize,
        list_length: usize,
    },
    /// One real gene per decision variable, kept inside the bounds.
    Real { bounds: BoxBounds },
}

impl EncodingSpec {
    pub fn validate(&self) -> Result<(), MoeaError> {
        match self {
            EncodingSpec::Binary {
                length,
                num_selected,
            } => {
                if *num_selected == 0 || num_selected > length {
                    return Err(MoeaError::InvalidConfig(format!(
                        "binary encoding selects {num_selected} of {length} bits"
                    )));
                }
            }
            EncodingSpec::Permutation {
                pool_size,
                list_length,
            } => {
                if *list_length == 0 || list_length > pool_size {
                    return Err(MoeaError::InvalidConfig(format!(
                        "permutation encoding lists {list_length} of {pool_size} items"
                    )));
                }
            }
            EncodingSpec::Real { bounds } => {
                if bounds.dim() == 0 {
                    return Err(MoeaError::InvalidConfig(
                        "real encoding needs at least one variable".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A chromosome under one of the three encodings.
#[derive(Debug, Clone, PartialEq)]
pub enum Genome {
    Binary(Vec<bool>),
    Permutation(Vec<usize>),
    Real(Vec<f64>),
}

/// What a genome decodes to.
#[derive(Debug, Clone, PartialEq)]
pub enum Decoded {
    /// Selected positions (binary) or ordered item indices (permutation).
    Items(Vec<usize>),
    Decision(DecisionVector),
}

impl Decoded {
    pub fn items(&self) -> &[usize] {
        match self {
            Decoded::Items(items) => items,
            Decoded::Decision(_) => panic!("decoded a real genome, expected items"),
        }
    }
}

/// Map a genome back to the domain: binary to its set of selected indices,
/// permutation to its ordered item list, real to a decision vector.
pub fn decode(genome: &Genome, spec: &EncodingSpec) -> Result<Decoded, MoeaError> {
    validate_genome(genome, spec)?;
    Ok(match genome {
        Genome::Binary(bits) => Decoded::Items(
            bits.iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(|(i, _)| i)
                .collect(),
        ),
        Genome::Permutation(items) => Decoded::Items(items.clone()),
        Genome::Real(values) => Decoded::Decision(DecisionVector::new(values.clone())),
    })
}

/// Check the encoding invariants: popcount, distinctness and range,
/// bounds.
pub fn validate_genome(genome: &Genome, spec: &EncodingSpec) -> Result<(), MoeaError> {
    match (genome, spec) {
        (
            Genome::Binary(bits),
            EncodingSpec::Binary {
                length,
                num_selected,
            },
        ) => {
            if bits.len() != *length {
                return Err(MoeaError::InvalidGenome(format!(
                    "binary genome length {} != {length}",
                    bits.len()
                )));
            }
            let count = bits.iter().filter(|b| **b).count();
            if count != *num_selected {
                return Err(MoeaError::InvalidGenome(format!(
                    "popcount {count} != required {num_selected}"
                )));
            }
        }
        (
            Genome::Permutation(items),
            EncodingSpec::Permutation {
                pool_size,
                list_length,
            },
        ) => {
            if items.len() != *list_length {
                return Err(MoeaError::InvalidGenome(format!(
                    "permutation genome length {} != {list_length}",
                    items.len()
                )));
            }
            let mut seen = vec![false; *pool_size];
            for &i in items {
                if i >= *pool_size {
                    return Err(MoeaError::InvalidGenome(format!(
                        "item index {i} outside pool of {pool_size}"
                    )));
                }
                if seen[i] {
                    return Err(MoeaError::InvalidGenome(format!("duplicate item {i}")));
                }
                seen[i] = true;
            }
        }
        (Genome::Real(values), EncodingSpec::Real { bounds }) => {
            if values.len() != bounds.dim() {
                return Err(MoeaError::InvalidGenome(format!(
                    "real genome length {} != {}",
                    values.len(),
                    bounds.dim()
                )));
            }
            if !bounds.contains(values) {
                return Err(MoeaError::InvalidGenome(
                    "real genes escape the bounds".to_string(),
                ));
            }
        }
        _ => {
            return Err(MoeaError::InvalidGenome(
                "genome kind does not match encoding".to_string(),
            ))
        }
    }
    Ok(())
}

/// Flat numeric view of a genome; this is what lands in the `x_*` columns
/// of front CSVs.
pub fn genome_as_decision(genome: &Genome) -> DecisionVector {
    DecisionVector::new(match genome {
        Genome::Binary(bits) => bits.iter().map(|b| if *b { 1.0 } else { 0.0 }).collect(),
        Genome::Permutation(items) => items.iter().map(|i| *i as f64).collect(),
        Genome::Real(values) => values.clone(),
    })
}

/// Draw a uniform random genome for the encoding.
pub fn random_genome(spec: &EncodingSpec, rng: &mut ChaCha12Rng) -> Genome {
    match spec {
        EncodingSpec::Binary {
            length,
            num_selected,
        } => {
            let mut idx: Vec<usize> = (0..*length).collect();
            idx.shuffle(rng);
            let mut bits = vec![false; *length];
            for &i in idx.iter().take(*num_selected) {
                bits[i] = true;
            }
            Genome::Binary(bits)
        }
        EncodingSpec::Permutation {
            pool_size,
            list_length,
        } => {
            let mut idx: Vec<usize> = (0..*pool_size).collect();
            idx.shuffle(rng);
            idx.truncate(*list_length);
            Genome::Permutation(idx)
        }
        EncodingSpec::Real { bounds } => Genome::Real(
            (0..bounds.dim())
                .map(|d| rng.gen_range(bounds.lower[d]..=bounds.upper[d]))
                .collect(),
        ),
    }
}

/// Invariant-preserving mutation: set/unset bit swaps for binary genomes,
/// position swaps or item replacements for permutations, and clipped
/// Gaussian noise (sigma = 5% of each variable's range) for real genomes.
///
/// Discrete encodings apply a geometric number of edits (usually one), so
/// the mutation neighborhood covers the whole genome space; local searchers
/// like PAES would otherwise stall two edits away from a stuck parent.
pub fn mutate(genome: &mut Genome, spec: &EncodingSpec, rng: &mut ChaCha12Rng) {
    let mut edits = 1;
    while edits < 4 && rng.gen_bool(0.3) {
        edits += 1;
    }
    match (genome, spec) {
        (Genome::Binary(bits), EncodingSpec::Binary { .. }) => {
            for _ in 0..edits {
                let set: Vec<usize> = (0..bits.len()).filter(|&i| bits[i]).collect();
                let unset: Vec<usize> = (0..bits.len()).filter(|&i| !bits[i]).collect();
                if set.is_empty() || unset.is_empty() {
                    return;
                }
                let on = set[rng.gen_range(0..set.len())];
                let off = unset[rng.gen_range(0..unset.len())];
                bits[on] = false;
                bits[off] = true;
            }
        }
        (Genome::Permutation(items), EncodingSpec::Permutation { pool_size, .. }) => {
            for _ in 0..edits {
                let unused: Vec<usize> = (0..*pool_size).filter(|i| !items.contains(i)).collect();
                // Replace an item with an unused one when the pool allows it,
                // otherwise reorder; an order-only swap could never change
                // which items are selected.
                if !unused.is_empty() && rng.gen_bool(0.5) {
                    let pos = rng.gen_range(0..items.len());
                    items[pos] = unused[rng.gen_range(0..unused.len())];
                } else if items.len() >= 2 {
                    let a = rng.gen_range(0..items.len());
                    let b = rng.gen_range(0..items.len());
                    items.swap(a, b);
                }
            }
        }
        (Genome::Real(values), EncodingSpec::Real { bounds }) => {
            for (d, v) in values.iter_mut().enumerate() {
                let sigma = 0.05 * bounds.range(d);
                if sigma > 0.0 {
                    let noise = Normal::new(0.0, sigma)
                        .expect("sigma is positive")
                        .sample(rng);
                    *v = (*v + noise).clamp(bounds.lower[d], bounds.upper[d]);
                }
            }
        }
        _ => unreachable!("genome kind does not match encoding"),
    }
}

/// Invariant-preserving crossover producing two children.
///
/// Binary: children keep the bits both parents share and fill the rest from
/// the parents' symmetric difference. Permutation: order crossover in both
/// directions. Real: per-gene convex blends, which stay inside the bounds.
pub fn crossover(
    p1: &Genome,
    p2: &Genome,
    spec: &EncodingSpec,
    rng: &mut ChaCha12Rng,
) -> (Genome, Genome) {
    match (p1, p2, spec) {
        (Genome::Binary(a), Genome::Binary(b), EncodingSpec::Binary { num_selected, .. }) => {
            let child = |rng: &mut ChaCha12Rng| {
                let mut bits = vec![false; a.len()];
                let mut count = 0;
                for i in 0..a.len() {
                    if a[i] && b[i] {
                        bits[i] = true;
                        count += 1;
                    }
                }
                let mut pool: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
                pool.shuffle(rng);
                for &i in pool.iter().take(num_selected.saturating_sub(count)) {
                    bits[i] = true;
                }
                Genome::Binary(bits)
            };
            (child(rng), child(rng))
        }
        (Genome::Permutation(a), Genome::Permutation(b), EncodingSpec::Permutation { .. }) => {
            (order_crossover(a, b, rng), order_crossover(b, a, rng))
        }
        (Genome::Real(a), Genome::Real(b), EncodingSpec::Real { .. }) => {
            let mut c1 = Vec::with_capacity(a.len());
            let mut c2 = Vec::with_capacity(a.len());
            for (va, vb) in a.iter().zip(b) {
                let alpha: f64 = rng.gen();
                c1.push(alpha * va + (1.0 - alpha) * vb);
                c2.push(alpha * vb + (1.0 - alpha) * va);
            }
            (Genome::Real(c1), Genome::Real(c2))
        }
        _ => unreachable!("genome kinds do not match encoding"),
    }
}

/// Order crossover: copy a slice of the first parent, then fill the rest in
/// the second parent's order, skipping items already present. Items the
/// second parent lacks are kept from the first parent's remainder.
fn order_crossover(a: &[usize], b: &[usize], rng: &mut ChaCha12Rng) -> Genome {
    let n = a.len();
    if n < 2 {
        return Genome::Permutation(a.to_vec());
    }
    let cut1 = rng.gen_range(0..n);
    let cut2 = rng.gen_range(cut1..n);
    let kept: Vec<usize> = a[cut1..=cut2.min(n - 1)].to_vec();
    let mut rest: Vec<usize> = b.iter().copied().filter(|i| !kept.contains(i)).collect();
    for i in a {
        if !kept.contains(i) && !rest.contains(i) {
            rest.push(*i);
        }
    }
    rest.truncate(n - kept.len());
    let mut child = Vec::with_capacity(n);
    let mut rest_iter = rest.into_iter();
    for pos in 0..n {
        if pos >= cut1 && pos <= cut2 {
            child.push(kept[pos - cut1]);
        } else {
            child.push(rest_iter.next().expect("fill list covers the gaps"));
        }
    }
    Genome::Permutation(child)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng(seed: u64) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(seed)
    }

    #[test]
    fn decode_binary_reads_selected_positions() {
        let spec = EncodingSpec::Binary {
            length: 5,
            num_selected: 2,
        };
        let g = Genome::Binary(vec![false, true, true, false, false]);
        assert_eq!(decode(&g, &spec).unwrap(), Decoded::Items(vec![1, 2]));
    }

    #[test]
    fn decode_permutation_is_the_ordered_list() {
        let spec = EncodingSpec::Permutation {
            pool_size: 10,
            list_length: 3,
        };
        let g = Genome::Permutation(vec![7, 2, 9]);
        assert_eq!(decode(&g, &spec).unwrap(), Decoded::Items(vec![7, 2, 9]));
    }

    #[test]
    fn decode_real_passes_values_through() {
        let spec = EncodingSpec::Real {
            bounds: BoxBounds::new(vec![-2.0, -2.0], vec![2.0, 2.0]),
        };
        let g = Genome::Real(vec![0.5, -1.2]);
        assert_eq!(
            decode(&g, &spec).unwrap(),
            Decoded::Decision(DecisionVector::new(vec![0.5, -1.2]))
        );
    }

    #[test]
    fn decode_rejects_invariant_violations() {
        let spec = EncodingSpec::Binary {
            length: 5,
            num_selected: 2,
        };
        let g = Genome::Binary(vec![true, true, true, false, false]);
        assert!(matches!(
            decode(&g, &spec),
            Err(MoeaError::InvalidGenome(_))
        ));

        let spec = EncodingSpec::Permutation {
            pool_size: 10,
            list_length: 3,
        };
        assert!(decode(&Genome::Permutation(vec![7, 7, 9]), &spec).is_err());
        assert!(decode(&Genome::Permutation(vec![7, 12, 9]), &spec).is_err());

        let spec = EncodingSpec::Real {
            bounds: BoxBounds::new(vec![0.0], vec![1.0]),
        };
        assert!(decode(&Genome::Real(vec![1.5]), &spec).is_err());
    }

    #[test]
    fn variation_preserves_invariants() {
        let mut r = rng(42);
        let specs = [
            EncodingSpec::Binary {
                length: 12,
                num_selected: 4,
            },
            EncodingSpec::Permutation {
                pool_size: 9,
                list_length: 4,
            },
            EncodingSpec::Real {
                bounds: BoxBounds::new(vec![-1.0, 0.0, 3.0], vec![1.0, 0.5, 4.0]),
            },
        ];
        for spec in &specs {
            for _ in 0..10_000 {
                let mut g = random_genome(spec, &mut r);
                validate_genome(&g, spec).unwrap();
                mutate(&mut g, spec, &mut r);
                validate_genome(&g, spec).unwrap();
                let other = random_genome(spec, &mut r);
                let (c1, c2) = crossover(&g, &other, spec, &mut r);
                validate_genome(&c1, spec).unwrap();
                validate_genome(&c2, spec).unwrap();
            }
        }
    }

    #[test]
    fn permutation_mutation_can_change_the_item_set() {
        let spec = EncodingSpec::Permutation {
            pool_size: 10,
            list_length: 3,
        };
        let mut r = rng(0);
        let start = Genome::Permutation(vec![0, 1, 2]);
        let mut changed_content = false;
        for _ in 0..100 {
            let mut g = start.clone();
            mutate(&mut g, &spec, &mut r);
            if let Genome::Permutation(items) = &g {
                if items.iter().any(|i| *i > 2) {
                    changed_content = true;
                    break;
                }
            }
        }
        assert!(changed_content, "mutation never explored new items");
    }
}
