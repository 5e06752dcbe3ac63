use std::time::{Duration, Instant};

use normcov_core::covering::CoveringCertificate;
use normcov_core::verify::{enumerate_shapes, evaluate_shapes, Limits, VerifyReport};
use rayon::prelude::*;

use crate::Error;

const CHUNK: usize = 64;

/// [`normcov_core::verify::check_cover`] with the shapes split across
/// threads. The merged report does not depend on scheduling.
pub fn check_cover_parallel(
    cert: &CoveringCertificate,
    q: u64,
    limits: &Limits,
) -> Result<(VerifyReport, Duration), Error> {
    let start = Instant::now();
    let shapes = enumerate_shapes(cert.n(), q, limits)?;
    let report = shapes
        .par_chunks(CHUNK)
        .map(|chunk| evaluate_shapes(cert, q, chunk))
        .reduce(|| VerifyReport::empty(cert, q), VerifyReport::merge);
    Ok((report, start.elapsed()))
}
