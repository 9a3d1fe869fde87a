//! The polynomial system equivalent to the Yang–Baxter equation for rime coefficients.
//!
//! Equations come in two lists: those involving two distinct indices and those involving
//! three. Each entry is evaluated on every ordered index tuple, both on the data and on its
//! image under the involution (the data of R̂₂₁).

use super::RimeData;
use crate::kernel::Rational;
use num::{Signed, Zero};
use std::collections::BTreeMap;

/// Map from equation name to the largest absolute residual over all index tuples.
pub type AppendixResiduals = BTreeMap<String, Rational>;

struct View<'a>(&'a RimeData);

impl View<'_> {
    fn a(&self, i: usize, j: usize) -> &Rational {
        &self.0.alpha[(i, j)]
    }
    fn ai(&self, i: usize) -> &Rational {
        &self.0.alpha[(i, i)]
    }
    fn b(&self, i: usize, j: usize) -> &Rational {
        &self.0.beta[(i, j)]
    }
    fn g(&self, i: usize, j: usize) -> &Rational {
        &self.0.gamma[(i, j)]
    }
    fn gp(&self, i: usize, j: usize) -> &Rational {
        &self.0.gamma_p[(i, j)]
    }
}

type Two = fn(&View, usize, usize) -> Vec<Rational>;
type Three = fn(&View, usize, usize, usize) -> Vec<Rational>;

fn two_index() -> Vec<(&'static str, Two)> {
    vec![
        ("two_index_1", |v, i, j| {
            vec![v.a(i, j) * v.g(i, j) * (v.g(j, i) + v.gp(i, j))]
        }),
        ("two_index_2", |v, i, j| {
            vec![
                v.a(i, j) * (v.b(i, j) * v.b(j, i) + v.g(i, j) * v.gp(i, j)),
                v.a(i, j) * (v.b(i, j) * v.b(j, i) - v.g(i, j) * v.g(j, i)),
            ]
        }),
        ("two_index_3", |v, i, j| {
            vec![
                v.a(i, j) * v.g(i, j) * (v.a(i, j) + v.b(j, i) - v.ai(j)),
                v.a(i, j) * v.g(i, j) * (v.a(j, i) + v.b(i, j) - v.ai(j)),
            ]
        }),
        ("two_index_4", |v, i, j| {
            let ai = v.ai(i);
            vec![
                v.b(i, j) * (ai * ai - v.a(i, j) * v.a(j, i) - ai * v.b(i, j))
                    + (ai - v.b(i, j)) * v.g(i, j) * v.gp(i, j),
            ]
        }),
        ("two_index_5", |v, i, j| {
            vec![
                (v.ai(i) - v.ai(j)) * v.g(i, j) * v.g(i, j)
                    + v.a(i, j) * v.g(i, j) * (v.g(i, j) + v.gp(j, i)),
            ]
        }),
        ("two_index_6", |v, i, j| {
            vec![
                v.a(i, j) * v.b(i, j) * v.gp(j, i)
                    + (v.ai(i) * v.b(i, j) + v.gp(i, j) * v.g(i, j)) * v.g(i, j),
            ]
        }),
        ("two_index_7", |v, i, j| {
            let s = v.a(i, j) - v.a(j, i) - v.b(i, j) + v.b(j, i);
            vec![
                &s * v.g(i, j) * v.gp(j, i),
                &s * v.b(i, j) * v.b(j, i),
            ]
        }),
        ("two_index_8", |v, i, j| {
            vec![
                v.a(i, j) * v.gp(j, i) * (v.ai(j) - v.a(i, j))
                    + v.b(j, i) * v.g(i, j) * (v.ai(i) - v.b(j, i))
                    + v.g(i, j) * (v.b(i, j) * v.b(j, i) + v.g(j, i) * v.gp(j, i)),
            ]
        }),
        ("two_index_9", |v, i, j| {
            let ai = v.ai(i);
            let bb = v.b(i, j) * v.b(j, i);
            let lhs = (ai * ai - ai * (v.a(j, i) + v.b(j, i)) + &bb - v.g(i, j) * v.g(j, i))
                * v.g(i, j);
            let rhs = (ai * ai - ai * (v.a(i, j) + v.b(i, j)) + &bb - v.gp(i, j) * v.gp(j, i))
                * v.gp(j, i);
            vec![lhs - rhs]
        }),
    ]
}

fn three_index() -> Vec<(&'static str, Three)> {
    vec![
        ("three_index_1", |v, i, j, k| {
            vec![(v.a(i, j) - v.a(k, i) - v.b(i, j) + v.b(k, i)) * v.g(i, j) * v.gp(k, i)]
        }),
        ("three_index_2", |v, i, j, k| {
            vec![
                v.a(i, j)
                    * (v.b(i, j) * v.b(j, k) + v.b(i, k) * v.b(j, i) - v.b(i, k) * v.b(j, k)),
            ]
        }),
        ("three_index_3", |v, i, j, k| {
            vec![
                v.a(i, j) * (v.g(i, j) * v.g(j, k) + v.g(i, k) * (v.b(j, k) - v.b(j, i))),
                v.a(i, j) * (v.g(i, j) * v.gp(k, j) + v.g(i, k) * (v.b(k, j) - v.b(i, j))),
            ]
        }),
        ("three_index_4", |v, i, j, k| {
            vec![
                (v.a(i, j) * v.a(j, i) - v.a(j, k) * v.a(k, j)) * v.b(i, k)
                    + v.b(i, j) * v.b(j, k) * (v.b(i, j) - v.b(j, k)),
            ]
        }),
        ("three_index_5", |v, i, j, k| {
            vec![
                (v.ai(i) + v.b(i, k) - v.b(j, i)) * v.b(j, i) * v.g(i, k)
                    + v.g(i, k) * v.g(j, i) * v.gp(j, i)
                    + v.a(i, k) * (v.g(j, k) * v.gp(j, i) + v.b(j, k) * v.gp(k, i)),
            ]
        }),
        ("three_index_6", |v, i, j, k| {
            vec![
                (v.ai(i) + v.a(i, j) - v.a(k, j) - v.b(k, j)) * v.g(i, j) * v.g(i, k)
                    - v.g(i, k) * v.g(i, k) * v.g(k, j)
                    + v.g(i, j) * (v.a(i, k) * v.gp(k, i) - v.g(i, j) * v.gp(k, j)),
            ]
        }),
        ("three_index_7", |v, i, j, k| {
            vec![
                (v.ai(i) - v.b(k, j)) * v.b(i, j) * v.g(i, k)
                    + (v.b(i, k) * v.b(k, j) + v.g(i, j) * v.gp(i, j)) * v.g(i, k)
                    + v.a(i, k) * v.b(i, j) * v.gp(k, i)
                    - (v.b(i, j) - v.b(i, k)) * v.g(i, j) * v.gp(k, j),
            ]
        }),
        ("three_index_8", |v, i, j, k| {
            let inner = v.g(i, j) * v.g(j, k) + v.g(i, k) * (v.a(j, k) - v.a(j, i));
            vec![
                v.a(i, j) * &inner,
                v.a(j, i) * &inner,
                v.a(i, j) * (v.g(i, j) * v.gp(k, j) + v.g(i, k) * (v.a(k, j) - v.a(i, j))),
            ]
        }),
    ]
}

fn max_abs(acc: &mut Rational, values: Vec<Rational>) {
    for x in values {
        let a = x.abs();
        if a > *acc {
            *acc = a;
        }
    }
}

/// Evaluates every equation of both lists and their involution images.
pub fn appendix_a_residuals(data: &RimeData) -> AppendixResiduals {
    let n = data.dim();
    let mut out = BTreeMap::new();
    let images = [("", data.clone()), (".iota", data.involution())];
    for (suffix, d) in &images {
        let v = View(d);
        for (name, f) in two_index() {
            let mut m = Rational::zero();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        max_abs(&mut m, f(&v, i, j));
                    }
                }
            }
            out.insert(format!("{name}{suffix}"), m);
        }
        for (name, f) in three_index() {
            let mut m = Rational::zero();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if i != j && j != k && i != k {
                            max_abs(&mut m, f(&v, i, j, k));
                        }
                    }
                }
            }
            out.insert(format!("{name}{suffix}"), m);
        }
    }
    out
}
