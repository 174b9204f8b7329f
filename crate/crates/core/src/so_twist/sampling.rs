use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// One orthogonal matrix with determinant `det` (`±1`): Gaussian matrix,
/// QR, column signs fixed by `diag(R) > 0`, then column 0 negated if the
/// determinant has the wrong sign.
pub fn sample_orthogonal<R: Rng + ?Sized>(n: usize, det: i8, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if (q.determinant() < 0.0) != (det < 0) {
        q.column_mut(0).neg_mut();
    }
    q
}

/// `count` samples from a ChaCha8 stream seeded with `seed`; the first
/// `count` are special orthogonal, the next `control` have determinant `-1`.
pub fn sample_points(
    n: usize,
    count: usize,
    control: usize,
    seed: u64,
) -> (Vec<DMatrix<f64>>, Vec<DMatrix<f64>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let special = (0..count)
        .map(|_| sample_orthogonal(n, 1, &mut rng))
        .collect();
    let flipped = (0..control)
        .map(|_| sample_orthogonal(n, -1, &mut rng))
        .collect();
    (special, flipped)
}

pub fn sample_special_orthogonal(n: usize, count: usize, seed: u64) -> Vec<DMatrix<f64>> {
    sample_points(n, count, 0, seed).0
}
