use super::fitness::niche_counts;
use super::genome::Genome;
use crate::core::{dominates, Front, ObjectiveVector, Solution};

/// A genome together with its evaluated solution.
#[derive(Debug, Clone)]
pub struct ArchiveEntry {
    pub genome: Genome,
    pub solution: Solution,
}

/// Bounded set of mutually non-dominated solutions. When the archive
/// overflows, the most crowded member (largest niche count, ties to the
/// lowest index) is evicted.
#[derive(Debug, Clone)]
pub struct ParetoArchive {
    capacity: usize,
    sigma_share: f64,
    entries: Vec<ArchiveEntry>,
}

impl ParetoArchive {
    pub fn new(capacity: usize, sigma_share: f64) -> Self {
        assert!(capacity >= 1, "archive capacity must be at least 1");
        assert!(sigma_share > 0.0, "sigma_share must be positive");
        ParetoArchive {
            capacity,
            sigma_share,
            entries: Vec::new(),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn members(&self) -> &[ArchiveEntry] {
        &self.entries
    }

    pub fn front(&self) -> Front {
        Front::new(self.entries.iter().map(|e| e.solution.clone()).collect())
    }

    pub fn objective_vectors(&self) -> Vec<ObjectiveVector> {
        self.entries.iter().map(|e| e.solution.f.clone()).collect()
    }

    /// Whether any member dominates the candidate vector.
    pub fn dominated_here(&self, f: &ObjectiveVector) -> bool {
        self.entries
            .iter()
            .any(|e| dominates(e.solution.f.as_slice(), f.as_slice()))
    }

    /// Offer a candidate. Rejected when an exact duplicate decision vector
    /// is already archived or a member dominates it; otherwise members it
    /// dominates are removed, the candidate enters, and crowding eviction
    /// restores the capacity bound. Returns whether the candidate remains
    /// archived afterwards.
    pub fn insert(&mut self, entry: ArchiveEntry) -> bool {
        if self
            .entries
            .iter()
            .any(|e| e.solution.x == entry.solution.x)
        {
            return false;
        }
        if self.dominated_here(&entry.solution.f) {
            return false;
        }
        self.entries
            .retain(|e| !dominates(entry.solution.f.as_slice(), e.solution.f.as_slice()));
        self.entries.push(entry);
        let mut inserted_alive = true;
        while self.entries.len() > self.capacity {
            let evicted = self.evict_most_crowded();
            if evicted == self.entries.len() {
                // the new entry sat at the end before eviction
                inserted_alive = false;
            }
        }
        inserted_alive
    }

    /// Remove the most crowded member; returns its former index.
    fn evict_most_crowded(&mut self) -> usize {
        let counts = niche_counts(&self.objective_vectors(), self.sigma_share);
        let mut worst = 0;
        for (i, c) in counts.iter().enumerate().skip(1) {
            if *c > counts[worst] {
                worst = i;
            }
        }
        self.entries.remove(worst);
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::DecisionVector;

    fn entry(x: &[f64], f: &[f64]) -> ArchiveEntry {
        ArchiveEntry {
            genome: Genome::Real(x.to_vec()),
            solution: Solution {
                x: DecisionVector::new(x.to_vec()),
                f: ObjectiveVector::new(f.to_vec()),
                feasible: true,
            },
        }
    }

    #[test]
    fn insert_keeps_nondominated_set() {
        let mut a = ParetoArchive::new(10, 0.5);
        assert!(a.insert(entry(&[0.0], &[0.0, 2.0])));
        assert!(a.insert(entry(&[1.0], &[2.0, 0.0])));
        // Dominated candidate bounces.
        assert!(!a.insert(entry(&[2.0], &[3.0, 3.0])));
        assert_eq!(a.len(), 2);
        // A dominator sweeps both members out.
        assert!(a.insert(entry(&[3.0], &[-1.0, -1.0])));
        assert_eq!(a.len(), 1);
        assert!(a.front().is_mutually_nondominated());
    }

    #[test]
    fn equal_objectives_with_distinct_points_both_stay() {
        let mut a = ParetoArchive::new(10, 0.5);
        assert!(a.insert(entry(&[0.0], &[1.0, 1.0])));
        assert!(a.insert(entry(&[9.0], &[1.0, 1.0])));
        assert_eq!(a.len(), 2);
        // Exact duplicate decision vector is refused.
        assert!(!a.insert(entry(&[0.0], &[1.0, 1.0])));
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn capacity_eviction_removes_the_most_crowded() {
        let mut a = ParetoArchive::new(3, 0.5);
        assert!(a.insert(entry(&[0.0], &[0.0, 1.0])));
        assert!(a.insert(entry(&[1.0], &[1.0, 0.0])));
        assert!(a.insert(entry(&[2.0], &[0.5, 0.5])));
        // A fourth point right next to (0.5, 0.5) crowds that region; one
        // of the pair must go and the archive stays at capacity.
        a.insert(entry(&[3.0], &[0.48, 0.52]));
        assert_eq!(a.len(), 3);
        assert!(a.front().is_mutually_nondominated());
    }
}
