//! Seeded random arrangements and the corpus runner.

use comat::minors::{contract, delete};
use comat::realize::region_point;
use comat::{covectors, Arrangement, Com, LinearOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::suite::verify_com;

const COEFF: i64 = 5;

fn random_normal(rng: &mut ChaCha8Rng, d: usize) -> Vec<i64> {
    loop {
        let a: Vec<i64> = (0..d).map(|_| rng.gen_range(-COEFF..=COEFF)).collect();
        if a.iter().any(|&x| x != 0) {
            return a;
        }
    }
}

/// `n` hyperplanes and `k` strict inequalities in dimension `d`, integer
/// entries in `[-5, 5]`; redrawn from the same stream until the region is nonempty.
pub fn generate_random_arrangement(seed: u64, d: usize, n: usize, k: usize) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_arrangement(&mut rng, d, n, k)
}

fn draw_arrangement(rng: &mut ChaCha8Rng, d: usize, n: usize, k: usize) -> Arrangement {
    loop {
        let mut rows = |count: usize| -> Vec<(Vec<i64>, i64)> {
            (0..count)
                .map(|_| (random_normal(rng, d), rng.gen_range(-COEFF..=COEFF)))
                .collect()
        };
        let h = rows(n);
        let r = rows(k);
        let h: Vec<(&[i64], i64)> = h.iter().map(|(a, b)| (a.as_slice(), *b)).collect();
        let r: Vec<(&[i64], i64)> = r.iter().map(|(a, b)| (a.as_slice(), *b)).collect();
        let arr = Arrangement::from_integers(d, &h, &r).expect("nonzero normals of the right length");
        if region_point(&arr).is_some() {
            return arr;
        }
    }
}

/// Shape of the instances; unset fields are drawn per seed from
/// `d in {2, 3}`, `n in 1..=6`, `k in 0..=4`.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct CorpusShape {
    pub dim: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceSummary {
    /// `"base"`, `"delete i"` or `"contract i"`.
    pub instance: String,
    pub n: usize,
    pub covectors: usize,
    pub topes: usize,
    pub nbc_counts: Vec<usize>,
    pub contains_zero: bool,
    pub holds: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedReport {
    pub seed: u64,
    pub dim: usize,
    pub n: usize,
    pub k: usize,
    pub arrangement: Arrangement,
    pub instances: Vec<InstanceSummary>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub count: usize,
    pub instances: usize,
    pub failed_seeds: Vec<u64>,
    pub seeds: Vec<SeedReport>,
    pub holds: bool,
}

/// The arrangement for one seed, with its dimension, size and inequality count.
pub fn corpus_instance(seed: u64, shape: CorpusShape) -> (usize, usize, usize, Arrangement) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = shape.dim.unwrap_or_else(|| rng.gen_range(2..=3));
    let n = shape.n.unwrap_or_else(|| rng.gen_range(1..=6));
    let k = shape.k.unwrap_or_else(|| rng.gen_range(0..=4));
    let arr = draw_arrangement(&mut rng, d, n, k);
    (d, n, k, arr)
}

fn summarize(instance: String, l: &Com) -> InstanceSummary {
    let order = LinearOrder::natural(l.n());
    match verify_com(l, &order) {
        Ok(r) => InstanceSummary {
            instance,
            n: l.n(),
            covectors: l.len(),
            topes: r.nbc_topes.as_ref().map_or(0, |t| t.topes),
            nbc_counts: r.presentation.as_ref().map(|p| p.counts.clone()).unwrap_or_default(),
            contains_zero: l.contains_zero(),
            holds: r.holds,
            failures: r.failures,
        },
        Err(e) => InstanceSummary {
            instance,
            n: l.n(),
            covectors: l.len(),
            topes: 0,
            nbc_counts: Vec::new(),
            contains_zero: l.contains_zero(),
            holds: false,
            failures: vec![e.to_string()],
        },
    }
}

/// Verifies the realized COM of one seed and all of its single-element minors.
pub fn run_seed(seed: u64, shape: CorpusShape) -> SeedReport {
    let (dim, n, k, arrangement) = corpus_instance(seed, shape);
    let l = covectors(&arrangement);
    let mut instances = vec![summarize("base".into(), &l)];
    for i in 0..l.n() {
        instances.push(summarize(format!("delete {i}"), &delete(&l, i).expect("index in range")));
        instances.push(summarize(format!("contract {i}"), &contract(&l, i).expect("index in range")));
    }
    let holds = instances.iter().all(|s| s.holds);
    SeedReport {
        seed,
        dim,
        n,
        k,
        arrangement,
        instances,
        holds,
    }
}

/// Seeds `seed .. seed + count`, run in parallel, reported in seed order.
pub fn run_corpus(seed: u64, count: usize, shape: CorpusShape) -> CorpusReport {
    let seeds: Vec<SeedReport> = (0..count as u64)
        .into_par_iter()
        .map(|s| run_seed(seed + s, shape))
        .collect();
    let failed_seeds = seeds.iter().filter(|r| !r.holds).map(|r| r.seed).collect::<Vec<_>>();
    CorpusReport {
        seed,
        count,
        instances: seeds.iter().map(|r| r.instances.len()).sum(),
        holds: failed_seeds.is_empty(),
        failed_seeds,
        seeds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(generate_random_arrangement(7, 2, 5, 3), generate_random_arrangement(7, 2, 5, 3));
        assert_ne!(generate_random_arrangement(7, 2, 5, 3), generate_random_arrangement(8, 2, 5, 3));
    }

    #[test]
    fn regions_are_nonempty() {
        for seed in 0..100 {
            let a = generate_random_arrangement(seed, 2, 5, 4);
            assert!(region_point(&a).is_some());
            assert!(!covectors(&a).is_empty());
        }
    }

    #[test]
    fn no_inequalities_gives_whole_space() {
        let a = generate_random_arrangement(3, 3, 4, 0);
        assert!(a.region().strict.is_empty());
    }
}
