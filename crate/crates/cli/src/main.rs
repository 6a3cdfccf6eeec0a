//! specpara: Neumann eigenvalues, certified spectral bounds and proof
//! certificates for parallelograms.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 I/O failure, 4 undetermined certification.

use clap::{Parser, Subcommand, ValueEnum};
use specpara::bounds_regions::{coverage_scan, main_inequality, target_scan, RegionId};
use specpara::certificates::{
    certify_a1, certify_a2, certify_a3, certify_a4, certify_all, combined_status, s_f64,
    CertificateReport, OverallStatus,
};
use specpara::galerkin::{neumann_spectrum, GalerkinSpec};
use specpara::geometry::{ParallelogramParams, PolarPoint};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_UNDETERMINED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "specpara",
    about = "Certified spectral bounds for the Neumann Laplacian on parallelograms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Galerkin eigenvalues of the parallelogram spanned by (1,0) and (c,d)
    Eig {
        // negative values must reach domain validation, which names the
        // violated invariant
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        /// How many eigenvalues to print
        #[arg(long, default_value_t = 6)]
        k: usize,
        /// Cosine cutoff per direction
        #[arg(long, default_value_t = 16)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Compare the certified upper bounds against the sharp threshold
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Scan the polar parameter grid: coverage, margins and the target functional
    Scan {
        #[arg(long, default_value_t = 100)]
        nr: usize,
        #[arg(long, default_value_t = 100)]
        ntheta: usize,
        /// Cosine cutoff per direction for the Galerkin column
        #[arg(long, default_value_t = 8)]
        trunc: usize,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Run machine certificates for the proof's auxiliary inequalities
    Certify {
        #[arg(value_enum)]
        which: Which,
    },
    /// Emit figure data: the region map or the graph of S
    Plot {
        #[arg(value_enum)]
        kind: PlotKind,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    A1,
    A2,
    A3,
    A4,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotKind {
    Regions,
    #[value(name = "s-graph")]
    SGraph,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SPECPARA_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("invalid SPECPARA_THREADS value: {threads}");
                return ExitCode::from(EXIT_INVALID);
            }
        }
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Eig {
            c,
            d,
            k,
            trunc,
            format,
        } => cmd_eig(c, d, k, trunc, format),
        Command::Bound { c, d, format } => cmd_bound(c, d, format),
        Command::Scan {
            nr,
            ntheta,
            trunc,
            out,
        } => cmd_scan(nr, ntheta, trunc, &out),
        Command::Certify { which } => cmd_certify(which),
        Command::Plot { kind, out } => cmd_plot(kind, &out),
    }
}

/// 12 significant digits, plain notation for moderate exponents.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

fn cmd_eig(c: f64, d: f64, k: usize, trunc: usize, format: Format) -> ExitCode {
    let q = match ParallelogramParams::new(c, d) {
        Ok(q) => q,
        Err(e) => return invalid(e),
    };
    let spec = match GalerkinSpec::square(trunc) {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    let spectrum = match neumann_spectrum(&q, &spec, k.max(3)) {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    let mu3 = spectrum.values[2];
    let target = q.scale_invariant_target(mu3.max(0.0)).expect("mu3 >= 0");
    match format {
        Format::Json => {
            let payload = serde_json::json!({
                "params": { "c": q.c(), "d": q.d() },
                "trunc": [spec.max_mx(), spec.max_my()],
                "values": &spectrum.values[..k.min(spectrum.values.len())],
                "mu3": mu3,
                "perimeter": q.perimeter(),
                "target": target,
                "target_ratio": target / (36.0 * PI * PI),
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
        }
        Format::Table => {
            println!("parallelogram c = {}, d = {}", sig12(q.c()), sig12(q.d()));
            println!("cosine cutoff ({}, {})", spec.max_mx(), spec.max_my());
            for (i, v) in spectrum.values.iter().take(k).enumerate() {
                println!("mu_{:<2} {}", i + 1, sig12(*v));
            }
            println!("mu_3 * perimeter^2         {}", sig12(target));
            println!(
                "target / (36 pi^2)         {}",
                sig12(target / (36.0 * PI * PI))
            );
        }
    }
    ExitCode::SUCCESS
}

fn cmd_bound(c: f64, d: f64, format: Format) -> ExitCode {
    let q = match ParallelogramParams::new(c, d) {
        Ok(q) => q,
        Err(e) => return invalid(e),
    };
    let report = main_inequality(&q.to_polar());
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("json"));
        }
        Format::Table => {
            println!(
                "point (r, theta)           ({}, {})",
                sig12(report.point.r()),
                sig12(report.point.theta())
            );
            println!("rayleigh-ritz bound        {}", sig12(report.rr_bound));
            println!("kroger bound               {}", sig12(report.kroger));
            println!("threshold 9pi^2/(1+r)^2    {}", sig12(report.rhs));
            println!("margin                     {}", sig12(report.margin));
            println!("regions                    {}", report.regions);
            if report.equality {
                println!("status                     EQUALITY (optimal rectangle)");
            } else if report.margin < 0.0 {
                println!("status                     strict inequality");
            } else {
                println!("status                     VIOLATION");
            }
        }
    }
    if report.margin < 0.0 || report.equality {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}

fn cmd_scan(nr: usize, ntheta: usize, trunc: usize, out: &Path) -> ExitCode {
    let spec = match GalerkinSpec::square(trunc) {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    if nr < 2 || ntheta < 2 {
        eprintln!("invalid parameter: scan grid must be at least 2 x 2");
        return ExitCode::from(EXIT_INVALID);
    }
    let coverage = coverage_scan(nr, ntheta).expect("grid validated");
    let scan = target_scan(nr, ntheta, &spec).expect("grid validated");

    let mut csv = String::from("r,theta,c,d,mu3,rr_bound,kroger,rhs,margin,target_ratio,regions\n");
    for row in &scan.rows {
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.r,
            row.theta,
            row.c,
            row.d,
            row.mu3,
            row.rr_bound,
            row.kroger,
            row.rhs,
            row.margin,
            row.target_ratio,
            row.regions
        )
        .expect("string write");
    }
    if let Err(e) = std::fs::write(out, csv) {
        eprintln!("cannot write {}: {e}", out.display());
        return ExitCode::from(EXIT_IO);
    }

    let raw = &scan.rows[scan.argmax];
    let certified = &scan.rows[scan.argmax_certified];
    println!("grid                       {nr} x {ntheta}, cutoff ({trunc}, {trunc})");
    println!("rows written               {}", scan.rows.len());
    println!("uncovered points           {}", coverage.uncovered.len());
    println!(
        "region histogram           R1={} R2={} R3={} R4={}",
        coverage.region_counts[0],
        coverage.region_counts[1],
        coverage.region_counts[2],
        coverage.region_counts[3]
    );
    println!("arc hand-off violations    {}", coverage.arc_violations);
    println!(
        "max certified ratio        {} at (c, d) = ({}, {})",
        sig12(scan.max_certified_ratio),
        sig12(certified.c),
        sig12(certified.d)
    );
    println!(
        "max raw galerkin ratio     {} at (c, d) = ({}, {})",
        sig12(scan.max_ratio),
        sig12(raw.c),
        sig12(raw.d)
    );

    let covered = coverage.uncovered.is_empty() && coverage.arc_violations == 0;
    if covered && scan.max_certified_ratio <= 1.0 + 1e-9 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}

fn cmd_certify(which: Which) -> ExitCode {
    let reports: Vec<CertificateReport> = match which {
        Which::A1 => vec![certify_a1()],
        Which::A2 => vec![certify_a2()],
        Which::A3 => vec![certify_a3()],
        Which::A4 => vec![certify_a4()],
        Which::All => certify_all(),
    };
    if reports.len() == 1 {
        println!("{}", reports[0].to_json());
    } else {
        println!("{}", serde_json::to_string_pretty(&reports).expect("json"));
    }
    match combined_status(&reports) {
        OverallStatus::Pass => ExitCode::SUCCESS,
        OverallStatus::Fail => ExitCode::from(EXIT_VERIFICATION),
        OverallStatus::Undetermined => ExitCode::from(EXIT_UNDETERMINED),
    }
}

fn cmd_plot(kind: PlotKind, out: &Path) -> ExitCode {
    let payload = match kind {
        PlotKind::Regions => regions_svg(),
        PlotKind::SGraph => s_graph_csv(),
    };
    if let Err(e) = std::fs::write(out, payload) {
        eprintln!("cannot write {}: {e}", out.display());
        return ExitCode::from(EXIT_IO);
    }
    ExitCode::SUCCESS
}

const REGION_COLORS: [&str; 4] = ["#4c72b0", "#dd8452", "#55a868", "#c44e52"];
const RASTER: usize = 600;

/// Quarter-disk raster in (c, d) coordinates, colored by lowest-index
/// region membership, run-length encoded into SVG rects.
fn regions_svg() -> String {
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{RASTER}\" height=\"{RASTER}\" \
         viewBox=\"0 0 {RASTER} {RASTER}\">\n<rect width=\"{RASTER}\" height=\"{RASTER}\" fill=\"#ffffff\"/>\n"
    ));
    for py in 0..RASTER {
        let d = 1.0 - (py as f64 + 0.5) / RASTER as f64;
        let mut run_start = 0usize;
        let mut run_color: Option<&str> = None;
        for px in 0..=RASTER {
            let color = if px < RASTER {
                let c = (px as f64 + 0.5) / RASTER as f64;
                pixel_color(c, d)
            } else {
                None
            };
            if color != run_color {
                if let Some(fill) = run_color {
                    svg.push_str(&format!(
                        "<rect x=\"{run_start}\" y=\"{py}\" width=\"{}\" height=\"1\" fill=\"{fill}\"/>\n",
                        px - run_start
                    ));
                }
                run_start = px;
                run_color = color;
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn pixel_color(c: f64, d: f64) -> Option<&'static str> {
    if d <= 0.0 || c * c + d * d > 1.0 {
        return None;
    }
    let p = PolarPoint::new(f64::hypot(c, d), f64::atan2(d, c)).ok()?;
    let lowest = specpara::bounds_regions::classify(&p).lowest()?;
    Some(match lowest {
        RegionId::R1 => REGION_COLORS[0],
        RegionId::R2 => REGION_COLORS[1],
        RegionId::R3 => REGION_COLORS[2],
        RegionId::R4 => REGION_COLORS[3],
    })
}

const S_SAMPLES: usize = 512;

/// `(r, S(r))` over [1/2, 3/4] at 512 samples.
fn s_graph_csv() -> String {
    let mut csv = String::from("r,s\n");
    for i in 0..S_SAMPLES {
        let r = 0.5 + 0.25 * i as f64 / (S_SAMPLES - 1) as f64;
        writeln!(csv, "{},{}", r, s_f64(r)).expect("string write");
    }
    csv
}

fn invalid(e: specpara::Error) -> ExitCode {
    eprintln!("{e}");
    ExitCode::from(EXIT_INVALID)
}
