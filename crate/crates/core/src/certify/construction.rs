//! Certifying the real point count of a patchworked curve `f_t(x², y²)` for
//! decreasing `t`.

use super::{certify_squares, CertifyOptions, RealPointCertificate};
use crate::error::{Error, Result};
use crate::patchwork::realize::{realize, t_schedule};
use crate::patchwork::Construction;
use crate::rational;

/// Tries `t = 4^{-1}, …, 4^{-steps}` and returns the first certificate whose
/// count equals the ledger prediction. Counts that differ and inconclusive
/// attempts are listed in the error.
pub fn certify_construction(c: &Construction, steps: u32, opts: &CertifyOptions) -> Result<RealPointCertificate> {
    let mut report = Vec::new();
    for i in 1..=steps {
        let t = t_schedule(i);
        let outcome = realize(c, &t).and_then(|r| certify_squares(&r.poly, false, opts));
        match outcome {
            Ok(mut cert) if cert.count as i64 == c.predicted => {
                cert.t_used = Some(t);
                return Ok(cert);
            }
            Ok(cert) => report.push(format!("t = {}: certified {} points", rational::to_string(&t), cert.count)),
            Err(e) => report.push(format!("t = {}: {e}", rational::to_string(&t))),
        }
    }
    Err(Error::ScheduleExhausted(format!("expected {}; {}", c.predicted, report.join("; "))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patchwork::exact_construction;

    #[test]
    fn degree_six_has_ten_solitary_points() {
        let c = exact_construction(3).unwrap();
        let cert = certify_construction(&c, 3, &CertifyOptions::default()).unwrap();
        assert_eq!(cert.count, 10);
        assert!(cert.t_used.is_some());
    }
}
