// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! 4-wise independent vertex sampling from random cubic polynomials over
//! GF(2^k).
//!
//! Vertex `v` is labelled by the field element whose bit pattern is `v`. For
//! coefficients `(c0, c1, c2, c3)` drawn uniformly, the values
//! `h(x) = c0 + c1 x + c2 x² + c3 x³` at any four distinct points are
//! uniform and independent, so the indicators `h(v) < t` are 4-wise
//! independent with marginal `t / 2^k`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest supported extension degree.
pub const MAX_FIELD_DEGREE: u32 = 20;

// Irreducible polynomials over GF(2) of degree k (index k), including the
// leading term.
const MODULI: [u32; MAX_FIELD_DEGREE as usize + 1] = [
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x4443,
    0x8003, 0x1100b, 0x20009, 0x40081, 0x80027, 0x100009,
];

/// GF(2^k) with elements as the low `k` bits of a `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryField {
    k: u32,
    modulus: u32,
}

impl BinaryField {
    pub fn new(k: u32) -> Result<Self> {
        if !(1..=MAX_FIELD_DEGREE).contains(&k) {
            return Err(Error::InvalidParameter(format!(
                "field degree k = {} outside 1..={}",
                k, MAX_FIELD_DEGREE
            )));
        }
        Ok(BinaryField {
            k,
            modulus: MODULI[k as usize],
        })
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn mul(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1u32 << self.k;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }
}

/// One member of the 4-wise independent family, with its acceptance
/// threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourWiseSampler {
    field: BinaryField,
    coefficients: [u32; 4],
    threshold: u64,
}

impl FourWiseSampler {
    /// Quantizes `p` to `⌊p·2^k⌋ / 2^k`.
    pub fn new(k: u32, coefficients: [u32; 4], p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "probability {} outside [0, 1]",
                p
            )));
        }
        let field = BinaryField::new(k)?;
        let mask = (field.order() - 1) as u32;
        Ok(FourWiseSampler {
            field,
            coefficients: coefficients.map(|c| c & mask),
            threshold: (p * field.order() as f64).floor() as u64,
        })
    }

    /// Smallest field that labels `n` vertices, with random coefficients.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let k = (n.max(2) as u64).next_power_of_two().trailing_zeros();
        let mut coefficients = [0u32; 4];
        for c in &mut coefficients {
            *c = rng.random();
        }
        FourWiseSampler::new(k, coefficients, p)
    }

    pub fn field(&self) -> BinaryField {
        self.field
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// Realized inclusion probability `t / 2^k`.
    pub fn probability(&self) -> f64 {
        self.threshold as f64 / self.field.order() as f64
    }

    pub fn evaluate(&self, x: u32) -> u32 {
        let [c0, c1, c2, c3] = self.coefficients;
        let f = &self.field;
        f.mul(f.mul(f.mul(c3, x) ^ c2, x) ^ c1, x) ^ c0
    }

    pub fn includes(&self, v: usize) -> bool {
        u64::from(self.evaluate(v as u32)) < self.threshold
    }
}

/// Vertices `v` with `h(v) < t`.
pub fn fourwise_sample(g: &Graph, sampler: &FourWiseSampler) -> Result<VertexSet> {
    if (g.n() as u64) > sampler.field.order() {
        return Err(Error::FieldTooSmall {
            order: sampler.field.order(),
            n: g.n(),
        });
    }
    Ok((0..g.n()).filter(|&v| sampler.includes(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Carry-less polynomial remainder over GF(2).
    fn poly_rem(mut a: u64, b: u64) -> u64 {
        let db = 63 - b.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= db {
            a ^= b << (63 - a.leading_zeros() - db);
        }
        a
    }

    #[test]
    fn moduli_are_irreducible() {
        for k in 1..=MAX_FIELD_DEGREE {
            let m = u64::from(MODULI[k as usize]);
            assert_eq!(63 - m.leading_zeros(), k);
            // no factor of degree 1..=k/2
            for f in 2u64..(1 << (k / 2 + 1)) {
                assert_ne!(poly_rem(m, f), 0, "k = {k}: divisible by {f:#x}");
            }
        }
    }

    #[test]
    fn field_axioms_gf16() {
        let f = BinaryField::new(4).unwrap();
        for a in 0..16 {
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.mul(a, 0), 0);
            if a != 0 {
                assert_eq!((1..16).filter(|&b| f.mul(a, b) == 1).count(), 1);
            }
            for b in 0..16 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..16 {
                    assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                }
            }
        }
    }

    #[test]
    fn extreme_probabilities() {
        let g = Graph::edgeless(16);
        let all = FourWiseSampler::new(4, [3, 5, 7, 9], 1.0).unwrap();
        assert_eq!(all.threshold(), 16);
        assert_eq!(fourwise_sample(&g, &all).unwrap().len(), 16);
        let none = FourWiseSampler::new(4, [3, 5, 7, 9], 0.0).unwrap();
        assert!(fourwise_sample(&g, &none).unwrap().is_empty());
    }

    #[test]
    fn field_must_cover_vertices() {
        let g = Graph::edgeless(17);
        let s = FourWiseSampler::new(4, [0; 4], 0.5).unwrap();
        assert!(matches!(
            fourwise_sample(&g, &s),
            Err(Error::FieldTooSmall { order: 16, n: 17 })
        ));
    }

    #[test]
    fn exact_four_wise_independence_gf8() {
        // Enumerate all 8^4 coefficient tuples: every 4 distinct points see
        // each value tuple exactly once.
        let f = BinaryField::new(3).unwrap();
        let points = [0u32, 1, 5, 6];
        let mut counts = vec![0u32; 8 * 8 * 8 * 8];
        for c in 0..4096u32 {
            let s = FourWiseSampler {
                field: f,
                coefficients: [c & 7, (c >> 3) & 7, (c >> 6) & 7, (c >> 9) & 7],
                threshold: 0,
            };
            let idx = points
                .iter()
                .fold(0usize, |acc, &x| acc * 8 + s.evaluate(x) as usize);
            counts[idx] += 1;
        }
        assert!(counts.iter().all(|&c| c == 1));
    }
}
