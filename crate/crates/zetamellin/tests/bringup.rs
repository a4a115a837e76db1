//! Temporary bring-up sweep over every suite. Prints summaries + failures.

use std::time::Instant;
use zetamellin::harness::{self, GridSpec};

#[test]
fn bringup_all_suites() {
    let grid = GridSpec::default();
    for &suite in harness::SUITES {
        let tol = harness::default_tol(suite).unwrap();
        let t0 = Instant::now();
        let rep = harness::run_suite(suite, &grid, tol).unwrap();
        let dt = t0.elapsed().as_secs_f64();
        println!(
            "suite {suite:22} cases {:4} passes {:4} max_rel {:.3e} max_abs {:.3e}  [{dt:.1}s]",
            rep.cases,
            rep.passes,
            rep.max_rel_resid,
            rep.max_abs_resid()
        );
        for r in rep.records.iter().filter(|r| !r.pass) {
            println!(
                "  FAIL #{:03} s={:.3}{:+.3}i a={:.3}{:+.3}i b={:.3}{:+.3}i c={} d={} k={} abs={:.3e} rel={:.3e} tol={:.1e} :: {}",
                r.index, r.s.re, r.s.im, r.a.re, r.a.im, r.b.re, r.b.im, r.c, r.d, r.k,
                r.abs_resid, r.rel_resid, r.tol, r.notes
            );
        }
    }
}
