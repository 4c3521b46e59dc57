//! Floating-point 2x2 matrices and representations, used only by the
//! independent numerical checks (circle oracle, flow twist, word heuristic).

use std::ops::Mul;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FMat2(pub [[f64; 2]; 2]);

impl FMat2 {
    pub const IDENTITY: FMat2 = FMat2([[1.0, 0.0], [0.0, 1.0]]);

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> FMat2 {
        FMat2([[a, b], [c, d]])
    }

    pub fn det(&self) -> f64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn inverse(&self) -> FMat2 {
        let [[a, b], [c, d]] = self.0;
        let det = self.det();
        FMat2([[d / det, -b / det], [-c / det, a / det]])
    }

    /// Inverse of a det-1 matrix. Unlike [`FMat2::inverse`] it never divides by a
    /// determinant that cancels to nearly zero on large entries.
    pub fn adjugate(&self) -> FMat2 {
        let [[a, b], [c, d]] = self.0;
        FMat2([[d, -b], [-c, a]])
    }

    pub fn scale(&self, s: f64) -> FMat2 {
        let [[a, b], [c, d]] = self.0;
        FMat2([[a * s, b * s], [c * s, d * s]])
    }

    pub fn neg(&self) -> FMat2 {
        self.scale(-1.0)
    }

    pub fn add(&self, o: &FMat2) -> FMat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        FMat2([[a + e, b + f], [c + g, d + h]])
    }

    /// Rescales by `1/sqrt(det)` so the determinant becomes 1 (det must be positive).
    pub fn normalized(&self) -> FMat2 {
        self.scale(1.0 / self.det().sqrt())
    }

    /// Entrywise max-norm distance.
    pub fn dist(&self, o: &FMat2) -> f64 {
        let mut m = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.0[i][j] - o.0[i][j]).abs());
            }
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.dist(&FMat2([[0.0; 2]; 2]))
    }

    /// `a b a^-1 b^-1` for det-1 matrices.
    pub fn commutator(a: &FMat2, b: &FMat2) -> FMat2 {
        *a * *b * a.adjugate() * b.adjugate()
    }
}

impl Mul for FMat2 {
    type Output = FMat2;
    fn mul(self, o: FMat2) -> FMat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        FMat2([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])
    }
}

/// A genus-g tuple of float matrix pairs. No relator check at construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FloatRep {
    pub pairs: Vec<(FMat2, FMat2)>,
}

impl FloatRep {
    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    pub fn relator(&self) -> FMat2 {
        self.pairs
            .iter()
            .fold(FMat2::IDENTITY, |acc, (a, b)| acc * FMat2::commutator(a, b))
    }

    /// Distance of the relator from the nearer of `+I` and `-I`, relative to the
    /// size of the words involved.
    pub fn relator_residual(&self) -> f64 {
        let r = self.relator();
        let raw = r.dist(&FMat2::IDENTITY).min(r.dist(&FMat2::IDENTITY.neg()));
        let scale: f64 = self
            .pairs
            .iter()
            .map(|(a, b)| (a.max_abs().max(1.0) * b.max_abs().max(1.0)).powi(2))
            .product();
        raw / scale
    }

    pub fn max_entry_distance(&self, other: &FloatRep) -> f64 {
        self.pairs
            .iter()
            .zip(&other.pairs)
            .map(|((a, b), (c, d))| a.dist(c).max(b.dist(d)))
            .fold(0.0, f64::max)
    }
}
