//! Seeded sampling of small integer points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, BigRational, ProjectivePoint};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Draws coordinates uniformly from `[-9, 9]`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-9..=9)
    }

    pub fn nonzero(&mut self) -> i64 {
        loop {
            let k = self.int();
            if k != 0 {
                return k;
            }
        }
    }

    pub fn scalar(&mut self) -> BigRational {
        rat(self.int())
    }

    pub fn point(&mut self, len: usize) -> ProjectivePoint<BigRational> {
        loop {
            let coords: Vec<_> = (0..len).map(|_| self.scalar()).collect();
            if let Ok(p) = ProjectivePoint::new(coords) {
                return p;
            }
        }
    }

    pub fn p1(&mut self) -> ProjectivePoint<BigRational> {
        self.point(2)
    }

    pub fn p1_points(&mut self, n: usize) -> Vec<ProjectivePoint<BigRational>> {
        (0..n).map(|_| self.p1()).collect()
    }

    /// `n` pairwise distinct points of `P^1`.
    pub fn distinct_p1_points(&mut self, n: usize) -> Vec<ProjectivePoint<BigRational>> {
        let mut out: Vec<ProjectivePoint<BigRational>> = Vec::with_capacity(n);
        while out.len() < n {
            let p = self.p1();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}
