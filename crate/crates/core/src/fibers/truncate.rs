use nalgebra::DMatrix;
use num_complex::Complex64;

use super::banded::{FiberOperator, FiberScalar, SpinFiberOperator};
use super::label::FiberLabel;
use super::FiberError;

/// A dense finite section of a fiber operator on the index window `[lo, hi]`.
///
/// Spinor operators use the block layout `index = component · n + (m − lo)`.
#[derive(Clone, Debug)]
pub struct TruncatedMatrix {
    pub fiber: FiberLabel,
    pub window: (i64, i64),
    pub components: usize,
    pub entries: DMatrix<Complex64>,
}

impl TruncatedMatrix {
    pub fn len(&self) -> usize {
        (self.window.1 - self.window.0 + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, component: usize, m: i64) -> usize {
        component * self.len() + (m - self.window.0) as usize
    }

    /// The lattice indices at distance at least `margin` from the window edges.
    pub fn interior(&self, margin: i64) -> impl Iterator<Item = i64> {
        (self.window.0 + margin)..=(self.window.1 - margin)
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        self.entries.diagonal().iter().copied().collect()
    }

    pub fn max_offdiagonal(&self) -> f64 {
        let n = self.entries.nrows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self.entries[(i, j)].norm());
                }
            }
        }
        worst
    }

    pub fn hermitian_defect(&self) -> f64 {
        (&self.entries - self.entries.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let h = (&self.entries + self.entries.adjoint()).scale(0.5);
        let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

fn fill<C: FiberScalar>(
    m: &mut DMatrix<Complex64>,
    op: &FiberOperator<C>,
    (lo, hi): (i64, i64),
    (row_block, col_block): (usize, usize),
) {
    let n = (hi - lo + 1) as usize;
    for d in op.offsets() {
        for src in lo..=hi {
            let dst = src + d;
            if dst < lo || dst > hi {
                continue;
            }
            let v = op.entry(d, src).to_complex();
            m[(row_block * n + (dst - lo) as usize, col_block * n + (src - lo) as usize)] += v;
        }
    }
}

pub fn truncate<C: FiberScalar>(op: &SpinFiberOperator<C>, lo: i64, hi: i64) -> Result<TruncatedMatrix, FiberError> {
    let fiber = op.fiber();
    let window = fiber.clip(lo, hi)?;
    let n = (window.1 - window.0 + 1) as usize;
    let mut entries = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..2 {
        for j in 0..2 {
            fill(&mut entries, op.block(i, j), window, (i, j));
        }
    }
    Ok(TruncatedMatrix { fiber, window, components: 2, entries })
}

pub fn truncate_scalar<C: FiberScalar>(op: &FiberOperator<C>, lo: i64, hi: i64) -> Result<TruncatedMatrix, FiberError> {
    let fiber = op.fiber();
    let window = fiber.clip(lo, hi)?;
    let n = (window.1 - window.0 + 1) as usize;
    let mut entries = DMatrix::zeros(n, n);
    fill(&mut entries, op, window, (0, 0));
    Ok(TruncatedMatrix { fiber, window, components: 1, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibers::label::Parity;
    use crate::fibers::ladder::{ladder_action, LadderGenerator};

    #[test]
    fn diagonal_truncation_is_exact() {
        let f = FiberLabel::principal(1.0, Parity::Half).unwrap();
        let h = ladder_action(LadderGenerator::Weight, f);
        let t = truncate_scalar(&h, -3, 3).unwrap();
        assert_eq!(t.max_offdiagonal(), 0.0);
        let d: Vec<f64> = t.diagonal().iter().map(|z| z.re).collect();
        assert_eq!(d, vec![-2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5]);
        assert_eq!(t.hermitian_eigenvalues(), d);
    }

    #[test]
    fn window_is_clipped_to_support() {
        let f = FiberLabel::negative(-3);
        let h = ladder_action(LadderGenerator::Raise, f);
        let t = truncate_scalar(&h, -10, 10).unwrap();
        assert_eq!(t.window, (-10, -2));
        assert!(truncate_scalar(&h, 0, 10).is_err());
    }

    #[test]
    fn product_interior_matches_dense_product() {
        let f = FiberLabel::positive(-5);
        let r = ladder_action(LadderGenerator::Raise, f);
        let l = ladder_action(LadderGenerator::Lower, f);
        let exact = truncate_scalar(&(&r * &l), 0, 30).unwrap();
        let dense = truncate_scalar(&r, 0, 30).unwrap().entries * truncate_scalar(&l, 0, 30).unwrap().entries;
        for m in exact.interior(1) {
            let i = exact.index(0, m);
            assert!((exact.entries[(i, i)] - dense[(i, i)]).norm() < 1e-12);
        }
    }
}
