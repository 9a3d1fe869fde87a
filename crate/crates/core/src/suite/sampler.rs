//! Seeded rational sampling.

use crate::error::Result;
use crate::kernel::{format_rational, frac, Matrix, Rational};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Attempts made by [`Sampler::retry`] before giving up.
pub const MAX_ATTEMPTS: usize = 64;

/// Draws small rationals p/q with p ∈ [−12, 12] \ {0} and q ∈ [1, 8] from a ChaCha8 stream.
///
/// Every accepted value is appended to a log so reports can show the sampled parameters.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    log: Vec<String>,
}

impl Sampler {
    /// A sampler seeded with `seed`.
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            log: Vec::new(),
        }
    }

    /// Drains the log of accepted values, space-separated.
    pub fn take_log(&mut self) -> String {
        std::mem::take(&mut self.log).join(" ")
    }

    fn raw(&mut self) -> Rational {
        let mut p = 0;
        while p == 0 {
            p = self.rng.gen_range(-12i64..=12);
        }
        let q = self.rng.gen_range(1i64..=8);
        frac(p, q)
    }

    /// A nonzero rational.
    pub fn rational(&mut self) -> Rational {
        self.rational_avoiding(&[])
    }

    /// A nonzero rational outside `avoid`.
    pub fn rational_avoiding(&mut self, avoid: &[Rational]) -> Rational {
        loop {
            let x = self.raw();
            if !avoid.contains(&x) {
                self.log.push(format_rational(&x));
                return x;
            }
        }
    }

    /// A rational that is zero with probability 1/4 and otherwise as in [`Sampler::rational`].
    pub fn sparse_rational(&mut self) -> Rational {
        if self.rng.gen_range(0..4) == 0 {
            self.log.push("0".into());
            Rational::zero()
        } else {
            self.rational()
        }
    }

    /// A uniform index in 0..len.
    pub fn index(&mut self, len: usize) -> usize {
        let i = self.rng.gen_range(0..len);
        self.log.push(format!("#{i}"));
        i
    }

    /// A fair coin.
    pub fn coin(&mut self) -> bool {
        let b = self.rng.gen_bool(0.5);
        self.log.push(if b { "+" } else { "-" }.into());
        b
    }

    /// n nonzero rationals.
    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    /// n pairwise distinct nonzero rationals.
    pub fn distinct(&mut self, n: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        while out.len() < n {
            let x = self.rational_avoiding(&out);
            out.push(x);
        }
        out
    }

    /// An n×n matrix of sampled entries, each zero with probability 1/4.
    pub fn matrix(&mut self, n: usize) -> Matrix {
        let m = self.raw_matrix(n);
        self.log_matrix(&m);
        m
    }

    /// An invertible n×n matrix.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.raw_matrix(n);
            if !m.det().is_zero() {
                self.log_matrix(&m);
                return m;
            }
        }
    }

    fn raw_matrix(&mut self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| {
            if self.rng.gen_range(0..4) == 0 {
                Rational::zero()
            } else {
                self.raw()
            }
        })
    }

    fn log_matrix(&mut self, m: &Matrix) {
        let rows: Vec<String> = (0..m.rows())
            .map(|i| {
                let row: Vec<String> = (0..m.cols()).map(|j| format_rational(&m[(i, j)])).collect();
                row.join(" ")
            })
            .collect();
        self.log.push(format!("[{}]", rows.join("; ")));
    }

    /// Re-draws until `f` succeeds, returning the last error after [`MAX_ATTEMPTS`] tries.
    pub fn retry<T>(&mut self, mut f: impl FnMut(&mut Self) -> Result<T>) -> Result<T> {
        let mut last = None;
        for _ in 0..MAX_ATTEMPTS {
            let mark = self.log.len();
            match f(self) {
                Ok(v) => return Ok(v),
                Err(e) => {
                    self.log.truncate(mark);
                    last = Some(e);
                }
            }
        }
        Err(last.expect("at least one attempt"))
    }
}
