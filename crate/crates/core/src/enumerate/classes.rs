//! The mod-2^e characteristic polynomial class sets `P_{n,e}`, grown by
//! random sampling of Seidel matrices until the theoretical cardinality
//! bound `2^(binom(e-2,2)+1)` is reached.

use crate::seidel::SeidelMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassSetError {
    #[error("cache io: {0}")]
    Io(String),
    #[error("cache file malformed: {0}")]
    Malformed(String),
}

/// Set of characteristic-polynomial coefficient vectors mod 2^e for Seidel
/// matrices of odd order n. Vectors are in descending degree order with the
/// leading 1 first, length n+1.
#[derive(Clone, Debug)]
pub struct ClassSet {
    pub n: usize,
    pub e: u32,
    pub classes: BTreeSet<Vec<u8>>,
    pub sample_count: u64,
    pub saturated: bool,
}

impl ClassSet {
    /// `2^(binom(e-2,2)+1)` (binomial taken as 0 below 2).
    pub fn bound(e: u32) -> usize {
        let k = e.saturating_sub(2) as usize;
        let b = if k < 2 { 0 } else { k * (k - 1) / 2 };
        1usize << (b + 1)
    }

    pub fn contains(&self, coeffs_desc: &[u8]) -> bool {
        self.classes.contains(coeffs_desc)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Cache file body: header `n e count saturated`, then one class per
    /// line, n+1 integers in [0, 2^e).
    pub fn to_cache_string(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.n,
            self.e,
            self.classes.len(),
            if self.saturated { 1 } else { 0 }
        );
        for cls in &self.classes {
            let line: Vec<String> = cls.iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_cache_string(text: &str) -> Result<ClassSet, ClassSetError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| ClassSetError::Malformed("empty cache".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(ClassSetError::Malformed("bad header".into()));
        }
        let n: usize = parts[0]
            .parse()
            .map_err(|_| ClassSetError::Malformed("bad n".into()))?;
        let e: u32 = parts[1]
            .parse()
            .map_err(|_| ClassSetError::Malformed("bad e".into()))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| ClassSetError::Malformed("bad count".into()))?;
        let saturated = parts[3] == "1";
        let mut classes = BTreeSet::new();
        for line in lines {
            let cls: Result<Vec<u8>, _> = line
                .split_whitespace()
                .map(|t| t.parse::<u8>())
                .collect();
            let cls = cls.map_err(|_| ClassSetError::Malformed("bad class entry".into()))?;
            if cls.len() != n + 1 {
                return Err(ClassSetError::Malformed(format!(
                    "class of length {}, expected {}",
                    cls.len(),
                    n + 1
                )));
            }
            classes.insert(cls);
        }
        if classes.len() != count {
            return Err(ClassSetError::Malformed("count mismatch".into()));
        }
        Ok(ClassSet {
            n,
            e,
            classes,
            sample_count: 0,
            saturated,
        })
    }

    pub fn write_cache(&self, path: &Path) -> Result<(), ClassSetError> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| ClassSetError::Io(e.to_string()))?;
        }
        std::fs::write(path, self.to_cache_string()).map_err(|e| ClassSetError::Io(e.to_string()))
    }

    pub fn read_cache(path: &Path) -> Result<ClassSet, ClassSetError> {
        let text = std::fs::read_to_string(path).map_err(|e| ClassSetError::Io(e.to_string()))?;
        ClassSet::from_cache_string(&text)
    }
}

/// Grow `P_{n,e}` by sampling random Seidel matrices; stops at saturation
/// (the theoretical bound) or budget exhaustion. Deterministic for a fixed
/// seed.
pub fn sample_class_set(n: usize, e: u32, seed: u64, budget: u64) -> ClassSet {
    assert!(n % 2 == 1, "class sets are defined for odd order");
    assert!(e <= 7, "exponent above 7 is computationally infeasible");
    let bound = ClassSet::bound(e);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = BTreeSet::new();
    let mut samples = 0u64;
    while samples < budget && classes.len() < bound {
        let s = SeidelMatrix::random(n, &mut rng);
        classes.insert(s.char_poly_mod2e(e));
        samples += 1;
        assert!(classes.len() <= bound, "class-count bound violated");
    }
    let saturated = classes.len() == bound;
    ClassSet {
        n,
        e,
        classes,
        sample_count: samples,
        saturated,
    }
}

/// Extend an existing set with more samples (used for stability checks).
/// The count can never exceed the bound; a violation panics.
pub fn extend_class_set(set: &mut ClassSet, seed: u64, extra: u64) {
    let bound = ClassSet::bound(set.e);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        let s = SeidelMatrix::random(set.n, &mut rng);
        set.classes.insert(s.char_poly_mod2e(set.e));
        set.sample_count += 1;
        assert!(set.classes.len() <= bound, "class-count bound violated");
    }
    set.saturated = set.classes.len() == bound;
}

/// Cache directory resolution: `EQUILINES_CACHE` overrides, else `./cache`.
pub fn default_cache_dir() -> PathBuf {
    match std::env::var_os("EQUILINES_CACHE") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from("cache"),
    }
}

pub fn cache_file(dir: &Path, n: usize, e: u32) -> PathBuf {
    dir.join(format!("classes_n{n}_e{e}.txt"))
}

/// Load a saturated set from the cache or sample it (and persist on
/// saturation).
pub fn load_or_sample(
    dir: &Path,
    n: usize,
    e: u32,
    seed: u64,
    budget: u64,
) -> Result<ClassSet, ClassSetError> {
    let path = cache_file(dir, n, e);
    if path.exists() {
        let set = ClassSet::read_cache(&path)?;
        if set.n == n && set.e == e && set.saturated {
            return Ok(set);
        }
    }
    let set = sample_class_set(n, e, seed, budget);
    if set.saturated {
        set.write_cache(&path)?;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(ClassSet::bound(1), 2);
        assert_eq!(ClassSet::bound( 3), 2);
        assert_eq!(ClassSet::bound(4), 4);
        assert_eq!(ClassSet::bound(5), 16);
        assert_eq!(ClassSet::bound(6), 128);
        assert_eq!(ClassSet::bound(7), 2048);
    }

    #[test]
    fn small_exponent_saturates_fast() {
        let set = sample_class_set(9, 3, 0, 500);
        assert!(set.saturated);
        assert_eq!(set.len(), 2);
        // monotone growth under extension, capped at the bound
        let mut set2 = set.clone();
        extend_class_set(&mut set2, 1, 200);
        assert_eq!(set2.len(), 2);
    }

    #[test]
    fn cache_round_trip() {
        let set = sample_class_set(7, 4, 0, 2000);
        let text = set.to_cache_string();
        let back = ClassSet::from_cache_string(&text).unwrap();
        assert_eq!(back.n, set.n);
        assert_eq!(back.e, set.e);
        assert_eq!(back.classes, set.classes);
        assert_eq!(back.saturated, set.saturated);
    }

    #[test]
    fn exponent5_on_small_odd_order() {
        // e=5 bound is 16; order 11 should reach it quickly
        let set = sample_class_set(11, 5, 0, 20_000);
        assert!(set.saturated, "got {} classes", set.len());
        assert_eq!(set.len(), 16);
    }
}
