//! Verification drivers and machine-readable certificates.
//!
//! A certificate records, for one n, everything the tool checked: group
//! order, Schlafli type, the sggi and intersection verdicts, the lattice
//! axioms (when the lattice was built), self-duality and the presentation
//! check. Lattice-level checks are skipped above a size threshold and
//! reported as null, which is distinct from false: skipped is not failed.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family;
use crate::fp::{self, Strategy};
use crate::lattice::build_lattice;
use crate::sggi::{check_sggi, intersection_condition_full, intersection_condition_rank3};

/// Default cap for coset enumerations, overridable per call and by the
/// `POLYCERT_MAX_COSETS` environment variable in the CLI.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// Lattices are built only for n up to this bound unless forced off;
/// flag counts grow as 2^n * n and stay near 10^4 at the bound.
pub const LATTICE_AUTO_SKIP_ABOVE: usize = 10;

/// How [`verify`] decides whether to build the face lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LatticeMode {
    /// Build the lattice when n is at most [`LATTICE_AUTO_SKIP_ABOVE`].
    #[default]
    Auto,
    Skip,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub lattice: LatticeMode,
    pub max_cosets: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            lattice: LatticeMode::Auto,
            max_cosets: DEFAULT_MAX_COSETS,
        }
    }
}

/// The verification certificate for one n. Field order is the wire
/// format; a certificate is only produced after every non-null check
/// actually ran.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub group_order: u64,
    pub schlafli_type: Vec<usize>,
    pub flag_count: Option<u64>,
    pub sggi_ok: bool,
    pub intersection_ok: bool,
    pub diamond_ok: Option<bool>,
    pub connectivity_ok: Option<bool>,
    pub self_dual: bool,
    pub presentation_verified: bool,
    pub elapsed_ms: u64,
    pub tool_version: String,
}

impl Certificate {
    /// True exactly when every check that ran passed and the recorded
    /// type and counts are the expected ones. Skipped (null) checks do
    /// not fail the certificate.
    pub fn all_pass(&self) -> bool {
        self.sggi_ok
            && self.intersection_ok
            && self.diamond_ok.unwrap_or(true)
            && self.connectivity_ok.unwrap_or(true)
            && self.self_dual
            && self.presentation_verified
            && self.schlafli_type == vec![self.n, self.n]
            && self.group_order == family::expected_order(self.n)
            && self.flag_count.is_none_or(|f| f == self.group_order)
    }
}

/// Builds the n-th member of the family and runs the full verification
/// pipeline, producing a certificate.
pub fn verify(n: usize, opts: &VerifyOptions) -> Result<Certificate> {
    let start = Instant::now();
    let sys = family::system(n)?;
    let group_order = sys.group().order() as u64;

    let sggi = check_sggi(&sys);
    let intersection_ok =
        intersection_condition_rank3(&sys)? && intersection_condition_full(&sys)?;

    let build = match opts.lattice {
        LatticeMode::Auto => n <= LATTICE_AUTO_SKIP_ABOVE,
        LatticeMode::Skip => false,
    };
    let (flag_count, diamond_ok, connectivity_ok) = if build {
        let lat = build_lattice(&sys)?;
        let report = lat.report();
        (
            Some(report.flag_count),
            Some(report.diamond_ok),
            Some(report.connectivity_ok),
        )
    } else {
        (None, None, None)
    };

    let presentation = fp::verify_presentation_on(&sys, n, opts.max_cosets)?;
    let self_dual = fp::check_self_dual(&sys, &fp::nn_presentation(n)?);

    Ok(Certificate {
        n,
        group_order,
        schlafli_type: sggi.schlafli.0.clone(),
        flag_count,
        sggi_ok: sggi.ok(),
        intersection_ok,
        diamond_ok,
        connectivity_ok,
        self_dual,
        presentation_verified: presentation.ok(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

/// One sweep job's result: the certificate, or the error that stopped
/// this n without stopping the others.
#[derive(Debug)]
pub struct SweepEntry {
    pub n: usize,
    pub outcome: Result<Certificate>,
}

/// Runs [`verify`] for every n in the range, optionally across threads.
/// Entries come back in order of n; a hard failure at one n is recorded
/// in its entry and does not abort the rest of the sweep.
pub fn sweep(
    n_min: usize,
    n_max: usize,
    parallel: usize,
    opts: &VerifyOptions,
) -> Result<Vec<SweepEntry>> {
    if n_min < 3 || n_min > n_max {
        return Err(Error::InvalidRange(format!(
            "need 3 <= n_min <= n_max, got {n_min}..={n_max}"
        )));
    }
    let ns: Vec<usize> = (n_min..=n_max).collect();
    let workers = parallel.clamp(1, ns.len());
    if workers == 1 {
        return Ok(ns
            .iter()
            .map(|&n| SweepEntry {
                n,
                outcome: verify(n, opts),
            })
            .collect());
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<Certificate>>>> =
        Mutex::new((0..ns.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= ns.len() {
                    break;
                }
                let out = verify(ns[i], opts);
                results.lock().expect("sweep worker poisoned")[i] = Some(out);
            });
        }
    });
    let collected = results.into_inner().expect("sweep workers finished");
    Ok(ns
        .into_iter()
        .zip(collected)
        .map(|(n, slot)| SweepEntry {
            n,
            outcome: slot.expect("every sweep job ran"),
        })
        .collect())
}

/// What `export` can write.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportKind {
    /// DOT digraph of the face lattice's Hasse diagram.
    Hasse,
    /// DOT graph of flag adjacency.
    FlagGraph,
    /// The family presentation in the text format.
    Presentation,
}

/// Writes a deterministic export for the n-th member. Graph kinds build
/// the lattice and are refused above the lattice threshold.
pub fn export(n: usize, kind: ExportKind, out: &mut dyn Write) -> Result<()> {
    match kind {
        ExportKind::Presentation => {
            fp::nn_presentation(n)?.write_text(out)?;
        }
        ExportKind::Hasse | ExportKind::FlagGraph => {
            if n > LATTICE_AUTO_SKIP_ABOVE {
                return Err(Error::ExportInfeasible(format!(
                    "graph exports are limited to n <= {LATTICE_AUTO_SKIP_ABOVE}, got {n}"
                )));
            }
            let lat = build_lattice(&family::system(n)?)?;
            match kind {
                ExportKind::Hasse => lat.hasse_dot(out)?,
                ExportKind::FlagGraph => lat.flag_graph_dot(out)?,
                ExportKind::Presentation => unreachable!(),
            }
        }
    }
    Ok(())
}

/// Runs the rank sweep and returns the records; thin wrapper so the CLI
/// and library callers share validation.
pub fn conjecture(
    d_min: usize,
    d_max: usize,
    n_min: usize,
    n_max: usize,
    max_cosets: usize,
) -> Result<Vec<fp::SweepRecord>> {
    if d_min < 3 || d_min > d_max || n_min < 3 || n_min > n_max {
        return Err(Error::InvalidRange(format!(
            "need 3 <= d_min <= d_max and 3 <= n_min <= n_max, got d {d_min}..={d_max}, n {n_min}..={n_max}"
        )));
    }
    fp::conjecture_sweep(d_min..=d_max, n_min..=n_max, max_cosets)
}

/// Enumerates one family presentation with both strategies and checks
/// they agree; used by the acceptance suite and available to callers.
pub fn strategies_agree(n: usize, max_cosets: usize) -> Result<bool> {
    let p = fp::nn_presentation(n)?;
    let hlt = fp::todd_coxeter(&p, &[], max_cosets, Strategy::Hlt)?;
    let felsch = fp::todd_coxeter(&p, &[], max_cosets, Strategy::Felsch)?;
    Ok(hlt.index == felsch.index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_n3_produces_a_clean_certificate() {
        let cert = verify(3, &VerifyOptions::default()).unwrap();
        assert_eq!(cert.group_order, 24);
        assert_eq!(cert.schlafli_type, vec![3, 3]);
        assert_eq!(cert.flag_count, Some(24));
        assert!(cert.all_pass());
    }

    #[test]
    fn skipping_the_lattice_nulls_its_checks() {
        let opts = VerifyOptions {
            lattice: LatticeMode::Skip,
            ..Default::default()
        };
        let cert = verify(4, &opts).unwrap();
        assert_eq!(cert.flag_count, None);
        assert_eq!(cert.diamond_ok, None);
        assert_eq!(cert.connectivity_ok, None);
        assert!(cert.all_pass());
    }

    #[test]
    fn verify_rejects_small_n() {
        assert!(verify(2, &VerifyOptions::default()).is_err());
    }

    #[test]
    fn sweep_is_ordered_and_parallel_matches_serial() {
        let opts = VerifyOptions {
            lattice: LatticeMode::Skip,
            max_cosets: 1 << 16,
        };
        let serial = sweep(3, 6, 1, &opts).unwrap();
        let parallel = sweep(3, 6, 4, &opts).unwrap();
        assert_eq!(serial.len(), 4);
        for (a, b) in serial.iter().zip(&parallel) {
            assert_eq!(a.n, b.n);
            let (ca, cb) = (a.outcome.as_ref().unwrap(), b.outcome.as_ref().unwrap());
            assert_eq!(ca.group_order, cb.group_order);
            assert_eq!(ca.all_pass(), cb.all_pass());
        }
    }

    #[test]
    fn sweep_keeps_going_past_per_member_errors() {
        let opts = VerifyOptions {
            lattice: LatticeMode::Skip,
            max_cosets: 10,
        };
        let entries = sweep(3, 5, 1, &opts).unwrap();
        assert_eq!(entries.len(), 3);
        for entry in &entries {
            assert!(matches!(entry.outcome, Err(Error::Overflow(10))), "n={}", entry.n);
        }
    }

    #[test]
    fn sweep_validates_ranges() {
        assert!(sweep(2, 5, 1, &VerifyOptions::default()).is_err());
        assert!(sweep(5, 4, 1, &VerifyOptions::default()).is_err());
    }

    #[test]
    fn presentation_export_has_expected_relator_lines() {
        let mut buf = Vec::new();
        export(5, ExportKind::Presentation, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("gens 3"));
        // 10 relator lines: 3 involutions plus 7 explicit relators.
        assert_eq!(text.lines().count(), 11);
    }

    #[test]
    fn graph_export_rejects_oversized_n() {
        let mut buf = Vec::new();
        let r = export(11, ExportKind::Hasse, &mut buf);
        assert!(matches!(r, Err(Error::ExportInfeasible(_))));
    }

    #[test]
    fn certificate_json_roundtrip() {
        let cert = verify(3, &VerifyOptions::default()).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(cert, back);
    }
}
