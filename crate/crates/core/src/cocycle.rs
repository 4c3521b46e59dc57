//! The Euler cocycle `l_p(g1, g2) = psi(p, g1 p, g1 g2 p)` on groups acting on
//! P^1(K), its coboundary identities, and evaluation on explicit 2-chains.
//!
//! Coboundary convention (trivial coefficients): for a 1-cochain `u`,
//! `du(g1, g2) = u(g2) - u(g1 g2) + u(g1)`; for a 2-cochain `c`,
//! `dc(g1, g2, g3) = c(g2, g3) - c(g1 g2, g3) + c(g1, g2 g3) - c(g1, g2)`.
//! The matching boundary of a bar 2-chain is `d[g|h] = [h] - [gh] + [g]`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::field::{FieldKind, Sign};
use crate::matrix::Mat2;
use crate::projline::{moebius_apply, psi, Orientation, ProjPoint};

/// The point `p` at which the cocycle is based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasePoint(ProjPoint);

impl BasePoint {
    pub fn new(p: ProjPoint) -> Self {
        BasePoint(p)
    }

    /// `[0:1]`, the default base point.
    pub fn zero(kind: &FieldKind) -> Self {
        BasePoint(ProjPoint::finite(crate::FieldElement::zero(kind)))
    }

    pub fn point(&self) -> &ProjPoint {
        &self.0
    }

    pub fn embed_into(&self, kind: &FieldKind) -> Result<BasePoint> {
        self.0.embed_into(kind).map(BasePoint)
    }
}

/// `psi(p, g1 p, g1 g2 p)`.
pub fn ell(g1: &Mat2, g2: &Mat2, p: &BasePoint) -> Result<Orientation> {
    let g12 = g1.checked_mul(g2)?;
    let p0 = p.point();
    let p1 = moebius_apply(g1, p0)?;
    let p2 = moebius_apply(&g12, p0)?;
    Ok(psi(p0, &p1, &p2))
}

/// `l(g2,g3) - l(g1 g2, g3) + l(g1, g2 g3) - l(g1, g2)`; zero for every input.
pub fn cocycle_defect(g1: &Mat2, g2: &Mat2, g3: &Mat2, p: &BasePoint) -> Result<i64> {
    let g12 = g1.checked_mul(g2)?;
    let g23 = g2.checked_mul(g3)?;
    Ok(ell(g2, g3, p)?.value() - ell(&g12, g3, p)?.value() + ell(g1, &g23, p)?.value()
        - ell(g1, g2, p)?.value())
}

/// The 1-cochain `u(g) = psi(p, g p, g q) - psi(p, q, g q)` whose coboundary is
/// `l_p - l_q`. It comes from the prism decomposition of the triangle
/// `(p, g1 p, g1 g2 p)` against `(q, g1 q, g1 g2 q)`.
pub fn coboundary_primitive(g: &Mat2, p: &BasePoint, q: &BasePoint) -> Result<i64> {
    let (p, q) = (p.point(), q.point());
    let gp = moebius_apply(g, p)?;
    let gq = moebius_apply(g, q)?;
    Ok(psi(p, &gp, &gq).value() - psi(p, q, &gq).value())
}

/// `l_p(g1,g2) - l_q(g1,g2) - du(g1,g2)` for the primitive above; always zero.
pub fn coboundary_difference(g1: &Mat2, g2: &Mat2, p: &BasePoint, q: &BasePoint) -> Result<i64> {
    let g12 = g1.checked_mul(g2)?;
    let du = coboundary_primitive(g2, p, q)? - coboundary_primitive(&g12, p, q)?
        + coboundary_primitive(g1, p, q)?;
    Ok(ell(g1, g2, p)?.value() - ell(g1, g2, q)?.value() - du)
}

/// An integral bar 2-chain `sum c [g|h]`.
#[derive(Clone, Debug, Default)]
pub struct Chain2 {
    pub terms: Vec<(i64, Mat2, Mat2)>,
}

impl Chain2 {
    pub fn push(&mut self, coeff: i64, g: Mat2, h: Mat2) {
        self.terms.push((coeff, g, h));
    }

    /// `sum c * l_p(g, h)`.
    pub fn evaluate(&self, p: &BasePoint) -> Result<i64> {
        self.terms
            .iter()
            .map(|(c, g, h)| Ok(c * ell(g, h, p)?.value()))
            .sum()
    }

    /// The boundary as a formal sum of PSL2 elements (matrices identified up to sign),
    /// with zero coefficients dropped.
    pub fn boundary(&self) -> Result<Vec<(Mat2, i64)>> {
        let mut acc: BTreeMap<String, (Mat2, i64)> = BTreeMap::new();
        let mut add = |m: Mat2, c: i64| {
            let m = projective_normal_form(&m);
            acc.entry(m.to_string()).or_insert((m, 0)).1 += c;
        };
        for (c, g, h) in &self.terms {
            add(h.clone(), *c);
            add(g.checked_mul(h)?, -c);
            add(g.clone(), *c);
        }
        Ok(acc.into_values().filter(|(_, c)| *c != 0).collect())
    }
}

/// Picks the representative of `{m, -m}` whose first nonzero entry is positive.
pub fn projective_normal_form(m: &Mat2) -> Mat2 {
    let lead = m.entries().into_iter().find(|e| !e.is_zero()).map(|e| e.sign());
    if lead == Some(Sign::Negative) {
        m.negated()
    } else {
        m.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FieldElement;

    fn kq() -> FieldKind {
        FieldKind::Rational
    }

    fn m(rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2::from_ints(&kq(), rows)
    }

    #[test]
    fn ell_examples() {
        let id = Mat2::identity(&kq());
        let g = m([[1, -1], [1, 0]]);
        let p = BasePoint::zero(&kq());
        assert_eq!(ell(&id, &g, &p).unwrap(), Orientation::Degenerate);
        assert_eq!(ell(&g, &id, &p).unwrap(), Orientation::Degenerate);
        assert_eq!(ell(&g, &g, &p).unwrap(), Orientation::Negative);
    }

    #[test]
    fn defect_with_identity_and_shared_fixed_point() {
        let id = Mat2::identity(&kq());
        let g = m([[2, 1], [1, 1]]);
        let h = m([[1, 3], [0, 1]]);
        let p = BasePoint::zero(&kq());
        assert_eq!(cocycle_defect(&id, &g, &h, &p).unwrap(), 0);
        assert_eq!(cocycle_defect(&g, &id, &h, &p).unwrap(), 0);
        assert_eq!(cocycle_defect(&g, &h, &id, &p).unwrap(), 0);
        // upper-triangular matrices all fix infinity
        let inf = BasePoint::new(ProjPoint::infinity(&kq()));
        let u1 = m([[1, 5], [0, 1]]);
        let u2 = m([[-1, 2], [0, -1]]);
        for (a, b) in [(&u1, &u2), (&u2, &u1)] {
            assert_eq!(ell(a, b, &inf).unwrap(), Orientation::Degenerate);
            assert_eq!(cocycle_defect(a, b, &u1, &inf).unwrap(), 0);
        }
    }

    #[test]
    fn coboundary_same_point_and_fixed_point() {
        let g = m([[2, 1], [1, 1]]);
        let h = m([[0, -1], [1, 0]]);
        let p = BasePoint::zero(&kq());
        assert_eq!(coboundary_primitive(&g, &p, &p).unwrap(), 0);
        assert_eq!(coboundary_difference(&g, &h, &p, &p).unwrap(), 0);
        // p fixed by g1
        let t = m([[1, 0], [4, 1]]);
        let q = BasePoint::new(ProjPoint::finite(FieldElement::from_ratio(3, 2, &kq())));
        assert_eq!(coboundary_difference(&t, &h, &p, &q).unwrap(), 0);
    }

    #[test]
    fn boundary_of_bar_chain() {
        let g = m([[2, 1], [1, 1]]);
        let mut c = Chain2::default();
        c.push(1, g.clone(), g.adjugate());
        // d[g|g^-1] = [g^-1] - [1] + [g]
        let b = c.boundary().unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.iter().any(|(x, k)| x.is_identity() && *k == -1));
    }
}
