//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use normcov_core::bounds::{self, BoundsReport};
use normcov_core::covering::{
    build_c_p, build_c_p1p2, build_d, build_omega, build_phi, build_phi_plus, build_psi,
    structural_independence_check, CoveringCertificate, KappaWitness,
};
use normcov_core::gf::{Field, FieldSpec};
use normcov_core::matgroup::{GroupKind, GroupSpec};
use normcov_core::numtheory::{enumerate_p, f_three_part, factorize, g_coprime_three_part};
use normcov_core::verify::{check_cover_minimality_probe, exhaustive_element_check, Limits};

use crate::dto::{
    shape_pairs, CertificateDto, ElementCheckDto, MatrixDto, ProbeDto, ReportDto,
    StructuralCheckDto, VerifyReportDto, WitnessDto,
};
use crate::parallel::check_cover_parallel;
use crate::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_UNCOVERED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "normcov", version, about = "Normal coverings and independent class sets of linear groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bounds and exact values of gamma and kappa for dimension n.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Emit a covering certificate.
    Cover {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        method: CoverMethod,
        /// Prime for the single-prime covering (default: smallest divisor of n).
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value = "GL")]
        group: GroupArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against every characteristic shape of GL_n(q).
    Verify {
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        q: u64,
        /// Also run the element-level check (small groups only).
        #[arg(long)]
        elements: bool,
        #[arg(long)]
        probe_minimality: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_q: Option<u64>,
        #[arg(long)]
        max_group_order: Option<u128>,
    },
    /// Emit an independent set of classes.
    Witness {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        set: WitnessSet,
        /// Field order for explicit matrices.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, requires = "q")]
        emit_matrices: bool,
        #[arg(long, default_value = "GL")]
        group: GroupArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-part partition counts f(n), g(n) and the coprime triples.
    Partitions {
        #[arg(long)]
        n: u64,
    },
    /// Best interval for each n in a range.
    Table {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverMethod {
    Single,
    TwoPrimes,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessSet {
    Phi,
    PhiPlus,
    Psi,
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Md,
}

/// `SL`, `GL`, or `index:M` for the subgroup of index `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupArg(pub GroupKind);

impl FromStr for GroupArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "SL" => Ok(GroupArg(GroupKind::Sl)),
            "GL" => Ok(GroupArg(GroupKind::Gl)),
            other => other
                .strip_prefix("INDEX:")
                .and_then(|m| m.parse().ok())
                .map(|m| GroupArg(GroupKind::Intermediate(m)))
                .ok_or_else(|| format!("expected SL, GL or index:M, got {s:?}")),
        }
    }
}

/// What a subcommand produced: text for stdout and the exit code.
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn dispatch(cmd: Command) -> Result<Output, Error> {
    match cmd {
        Command::Bounds { n, json } => cmd_bounds(n, json),
        Command::Cover { n, method, p, group, out } => cmd_cover(n, method, p, group.0, out.as_deref()),
        Command::Verify {
            certificate,
            q,
            elements,
            probe_minimality,
            json,
            max_n,
            max_q,
            max_group_order,
        } => {
            let d = Limits::default();
            let limits = Limits {
                max_n: max_n.unwrap_or(d.max_n),
                max_q: max_q.unwrap_or(d.max_q),
                max_group_order: max_group_order.unwrap_or(d.max_group_order),
            };
            cmd_verify(&certificate, q, elements, probe_minimality, json, &limits)
        }
        Command::Witness { n, set, q, emit_matrices, group, out } => {
            cmd_witness(n, set, q, emit_matrices, group.0, out.as_deref())
        }
        Command::Partitions { n } => cmd_partitions(n),
        Command::Table { from, to, format } => cmd_table(from, to, format),
    }
}

fn require_n(n: u64) -> Result<(), Error> {
    if n < 2 {
        return Err(Error::Usage(format!(
            "n must be at least 2 (n = {n}): for n = 1 the groups are abelian and gamma is undefined"
        )));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn field(q: u64) -> Result<Field, Error> {
    Ok(Field::new(FieldSpec::from_order(q)?)?)
}

pub fn cmd_bounds(n: u64, json: bool) -> Result<Output, Error> {
    require_n(n)?;
    let r = bounds::report(n)?;
    if json {
        return Ok(Output::ok(to_json(&ReportDto::from(&r))?));
    }
    Ok(Output::ok(render_report(&r)))
}

fn render_report(r: &BoundsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}", r.n);
    match r.exact {
        Some(e) => {
            let _ = writeln!(s, "exact: gamma = kappa = {} [{}]", e.value, e.provenance);
        }
        None => {
            let _ = writeln!(s, "exact: unknown");
        }
    }
    let _ = writeln!(
        s,
        "interval: [{}, {}]  ({}, {})",
        r.lo(),
        r.hi(),
        r.interval.0.provenance,
        r.interval.1.provenance
    );
    for (label, list) in [
        ("kappa lower", &r.kappa_lower),
        ("gamma lower", &r.gamma_lower),
        ("gamma upper", &r.gamma_upper),
    ] {
        for b in list {
            let _ = writeln!(s, "  {label:<12} {:>6}  {}", b.value, b.provenance);
        }
    }
    s
}

pub fn build_certificate(n: u64, method: CoverMethod, p: Option<u64>) -> Result<CoveringCertificate, Error> {
    require_n(n)?;
    let primes: Vec<u64> = factorize(n)?.primes().collect();
    Ok(match method {
        CoverMethod::Single => build_c_p(n, p.unwrap_or(primes[0]))?,
        CoverMethod::TwoPrimes => {
            if primes.len() < 2 {
                return Err(Error::Usage(format!("two-primes needs nu(n) >= 2 (n = {n})")));
            }
            build_c_p1p2(n, primes[0], primes[1])?
        }
        CoverMethod::D => build_d(n)?,
    })
}

pub fn cmd_cover(
    n: u64,
    method: CoverMethod,
    p: Option<u64>,
    kind: GroupKind,
    out: Option<&Path>,
) -> Result<Output, Error> {
    if p.is_some() && method != CoverMethod::Single {
        return Err(Error::Usage("--p applies to the single method only".into()));
    }
    let cert = build_certificate(n, method, p)?.with_kind(kind);
    let json = to_json(&CertificateDto::from(&cert))?;
    match out {
        Some(path) => {
            write_file(path, &json)?;
            Ok(Output::ok(format!("{} classes written to {}\n", cert.len(), path.display())))
        }
        None => Ok(Output::ok(json)),
    }
}

pub fn cmd_verify(
    path: &Path,
    q: u64,
    elements: bool,
    probe: bool,
    json: bool,
    limits: &Limits,
) -> Result<Output, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let dto: CertificateDto = serde_json::from_str(&text)?;
    let cert = dto.to_certificate()?;
    let field = field(q)?;
    let (report, elapsed) = check_cover_parallel(&cert, q, limits)?;
    let mut out = VerifyReportDto::new(&report, elapsed.as_secs_f64() * 1e3);
    if elements {
        let er = exhaustive_element_check(&cert, &field, limits)?;
        out.elements = Some(ElementCheckDto {
            elements: er.elements,
            uncovered_elements: er.uncovered_elements,
            // every shape occurs, so both levels see the same shape set
            agrees_with_shapes: er.report == report,
        });
    }
    if probe {
        let probe = check_cover_minimality_probe(&cert, q, limits)?;
        out.minimality = Some(
            probe
                .iter()
                .map(|(c, w)| ProbeDto {
                    class: c.to_string(),
                    witness: w.as_ref().map(shape_pairs),
                })
                .collect(),
        );
    }
    let code = if report.verified() { EXIT_OK } else { EXIT_UNCOVERED };
    let stdout = if json { to_json(&out)? } else { render_verify(&out) };
    Ok(Output { stdout, code })
}

fn render_verify(r: &VerifyReportDto) -> String {
    let mut s = String::new();
    let verdict = if r.uncovered.is_empty() { "covered" } else { "NOT covered" };
    let _ = writeln!(
        s,
        "n = {}, q = {}: {verdict} ({}/{} shapes, {:.1} ms)",
        r.n, r.q, r.covered, r.total_shapes, r.elapsed_ms
    );
    for u in &r.uncovered {
        let _ = writeln!(s, "  uncovered shape {u:?}");
    }
    for (c, k) in &r.hits {
        let _ = writeln!(s, "  {c:<8} {k}");
    }
    if let Some(e) = &r.elements {
        let _ = writeln!(
            s,
            "elements: {} checked, {} uncovered, agrees with shapes: {}",
            e.elements, e.uncovered_elements, e.agrees_with_shapes
        );
    }
    if let Some(p) = &r.minimality {
        for row in p {
            match &row.witness {
                Some(w) => {
                    let _ = writeln!(s, "  without {}: {w:?} uncovered", row.class);
                }
                None => {
                    let _ = writeln!(s, "  without {}: still covered", row.class);
                }
            }
        }
    }
    s
}

pub fn build_witness(n: u64, set: WitnessSet) -> Result<KappaWitness, Error> {
    require_n(n)?;
    Ok(match set {
        WitnessSet::Phi => build_phi(n)?,
        WitnessSet::PhiPlus => build_phi_plus(n)?,
        WitnessSet::Psi => build_psi(n)?,
        WitnessSet::Omega => build_omega(n)?,
    })
}

pub fn cmd_witness(
    n: u64,
    set: WitnessSet,
    q: Option<u64>,
    emit_matrices: bool,
    kind: GroupKind,
    out: Option<&Path>,
) -> Result<Output, Error> {
    let w = build_witness(n, set)?.with_kind(kind);
    let mut dto = WitnessDto::from(&w);
    dto.structural_check = Some(StructuralCheckDto::from(&structural_independence_check(&w)));
    if let Some(q) = q {
        // realising the members also checks the group and its parameters
        let g = GroupSpec::new(n as usize, &field(q)?, kind)?;
        let mats = w
            .members()
            .iter()
            .map(|m| m.matrix(&g))
            .collect::<Result<Vec<_>, _>>()?;
        if emit_matrices {
            dto.matrices = Some(
                mats.iter()
                    .map(|m| MatrixDto {
                        q,
                        rows: (0..m.n()).map(|i| m.row(i).to_vec()).collect(),
                    })
                    .collect(),
            );
        }
    }
    let json = to_json(&dto)?;
    match out {
        Some(path) => {
            write_file(path, &json)?;
            Ok(Output::ok(format!("{} members written to {}\n", w.len(), path.display())))
        }
        None => Ok(Output::ok(json)),
    }
}

pub fn cmd_partitions(n: u64) -> Result<Output, Error> {
    if !(3..=100_000).contains(&n) {
        return Err(Error::Usage(format!("n must lie in 3..=100000 (n = {n})")));
    }
    let triples = enumerate_p(n);
    let mut s = format!("n = {n}\nf = {}\ng = {}\n", f_three_part(n), g_coprime_three_part(n));
    for (a, b, c) in triples {
        let _ = writeln!(s, "({a},{b},{c})");
    }
    Ok(Output::ok(s))
}

pub fn cmd_table(from: u64, to: u64, format: TableFormat) -> Result<Output, Error> {
    if from < 2 || from > to {
        return Err(Error::Usage(format!("need 2 <= from <= to (from = {from}, to = {to})")));
    }
    if to - from > 1_000_000 {
        return Err(Error::Usage("range is limited to 10^6 rows".into()));
    }
    let mut s = String::new();
    match format {
        TableFormat::Csv => s.push_str("n,exact,lo,hi,provenance_lo,provenance_hi\n"),
        TableFormat::Md => {
            s.push_str("| n | exact | lo | hi | provenance_lo | provenance_hi |\n");
            s.push_str("|---|---|---|---|---|---|\n");
        }
    }
    for n in from..=to {
        let r = bounds::report(n)?;
        let row = [
            n.to_string(),
            r.exact.is_some().to_string(),
            r.lo().to_string(),
            r.hi().to_string(),
            r.interval.0.provenance.to_string(),
            r.interval.1.provenance.to_string(),
        ];
        match format {
            TableFormat::Csv => {
                s.push_str(&row.join(","));
                s.push('\n');
            }
            TableFormat::Md => {
                let _ = writeln!(s, "| {} |", row.join(" | "));
            }
        }
    }
    Ok(Output::ok(s))
}
