//! `linkcert`: certify hyperbolicity, genus bounds, and absence of
//! exceptional surgeries straight from link diagrams.
//!
//! Input files hold one diagram per line: PD codes (`X(a,b,c,d)` terms with
//! an optional `label:` prefix), `gauss:` codes, or `dt:` codes, with `%`
//! comments. Output is deterministic JSON (or a text rendering of the same
//! data). Exit codes: 0 all certified/analyzed, 1 some verdict inconclusive
//! or some oracle check failed, 2 input error.

mod svg;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkcert_core::augment::augment;
use linkcert_core::certify::{
    certify_hyperbolic, certify_no_exceptional, certify_partial_filling, genus_lower_bound,
    Certificate,
};
use linkcert_core::diagram::{is_prime, is_twist_reduced, parse_diagram, LinkDiagram, Primality, TwistReduced};
use linkcert_core::error::SlopeError;
use linkcert_core::normalsurf as ns;
use linkcert_core::polyhedra::{decompose, verify_angled, PolyId};
use linkcert_core::{oracle, slopes};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "linkcert", version, about = "Diagrammatic certificates for knots and links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CommonArgs {
    /// Input files (one diagram per line); `-` reads standard input.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for batch processing (0 = all cores). Output order is
    /// always the input order.
    #[arg(long, default_value = "0")]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremId {
    /// Hyperbolicity of the link itself.
    HypLink,
    /// Genus lower bound.
    GenusBound,
    /// No exceptional fillings (links).
    Main,
    /// No exceptional fillings (knot corollary).
    MainKnotCor,
    /// Partial fillings (requires --fill).
    PartialSurg,
    /// Every applicable certificate.
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Twist regions, primality, twist-reducedness, and per-component stats.
    Analyze(CommonArgs),
    /// Emit theorem certificates.
    Certify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "all")]
        theorem: TheoremId,
        /// Components to fill for the partial-surgery certificate, e.g. "0,2".
        #[arg(long)]
        fill: Option<String>,
    },
    /// Render cusp tilings as SVG (one file per cusp torus).
    Cusps {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Brute-force verification: predicate oracles, decomposition
    /// invariants, normal-curve enumeration, Gauss-Bonnet.
    Oracle {
        #[command(flatten)]
        common: CommonArgs,
        /// Cap on normal-curve length during enumeration.
        #[arg(long, default_value = "24")]
        limit: usize,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LINKCERT_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct Line {
    number: usize,
    source: String,
    parsed: Result<LinkDiagram, String>,
}

fn read_inputs(paths: &[String]) -> Result<Vec<Line>, String> {
    let mut lines = Vec::new();
    for path in paths {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
        };
        for (no, raw) in text.lines().enumerate() {
            let stripped = match raw.find('%') {
                Some(i) => &raw[..i],
                None => raw,
            };
            if stripped.trim().is_empty() {
                continue;
            }
            let parsed = parse_diagram(raw).map_err(|e| e.to_string());
            lines.push(Line { number: no + 1, source: format!("{path}:{}", no + 1), parsed });
        }
    }
    Ok(lines)
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(f)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze(common) => {
            let lines = read_inputs(&common.inputs)?;
            let reports: Vec<Value> =
                with_pool(common.jobs, || lines.par_iter().map(analyze_line).collect());
            let any_error = lines.iter().any(|l| l.parsed.is_err());
            emit(&common, "analyze", reports)?;
            Ok(if any_error { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Certify { common, theorem, fill } => {
            let lines = read_inputs(&common.inputs)?;
            let fill = parse_fill(fill.as_deref())?;
            if theorem == TheoremId::PartialSurg && fill.is_none() {
                return Err("--theorem partial-surg requires --fill".into());
            }
            let reports: Vec<Value> = with_pool(common.jobs, || {
                lines
                    .par_iter()
                    .map(|l| certify_line(l, theorem, fill.as_deref()))
                    .collect()
            });
            let any_parse_error = lines.iter().any(|l| l.parsed.is_err());
            let any_inconclusive = reports.iter().any(|r| {
                r["certificates"]
                    .as_array()
                    .map(|cs| cs.iter().any(|c| c["verdict"] != "CERTIFIED"))
                    .unwrap_or(false)
            });
            emit(&common, "certify", reports)?;
            Ok(if any_parse_error {
                ExitCode::from(2)
            } else if any_inconclusive {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Cusps { common } => {
            let lines = read_inputs(&common.inputs)?;
            let out_dir = common.out.clone().unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&out_dir).map_err(|e| format!("{}: {e}", out_dir.display()))?;
            let mut reports = Vec::new();
            let mut failed = false;
            for line in &lines {
                reports.push(cusps_line(line, &out_dir, &mut failed)?);
            }
            // --out names the SVG directory; the manifest goes to stdout
            let manifest = CommonArgs { out: None, ..common };
            emit(&manifest, "cusps", reports)?;
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Oracle { common, limit } => {
            let lines = read_inputs(&common.inputs)?;
            let reports: Vec<Value> = with_pool(common.jobs, || {
                lines.par_iter().map(|l| oracle_line(l, limit)).collect()
            });
            let any_parse_error = lines.iter().any(|l| l.parsed.is_err());
            let any_fail = reports.iter().any(|r| {
                r["checks"]
                    .as_array()
                    .map(|cs| cs.iter().any(|c| c["pass"] == false))
                    .unwrap_or(false)
            });
            emit(&common, "oracle", reports)?;
            Ok(if any_parse_error {
                ExitCode::from(2)
            } else if any_fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn parse_fill(fill: Option<&str>) -> Result<Option<Vec<usize>>, String> {
    match fill {
        None => Ok(None),
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad --fill entry '{t}'")))
            .collect::<Result<Vec<_>, _>>()
            .map(Some),
    }
}

fn emit(common: &CommonArgs, command: &str, reports: Vec<Value>) -> Result<(), String> {
    let doc = json!({
        "tool": "linkcert",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "reports": reports,
    });
    let body = match common.format {
        Format::Json => serde_json::to_string_pretty(&doc).expect("serialize") + "\n",
        Format::Text => render_text(&doc),
    };
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn analyze_line(line: &Line) -> Value {
    let d = match &line.parsed {
        Err(e) => return json!({"input": line.source, "error": e}),
        Ok(d) => d,
    };
    let regions = d.twist_regions();
    let stats = d.component_stats(&regions);
    let prime = match is_prime(d) {
        Ok(Primality::Prime) => json!({"verdict": true}),
        Ok(Primality::NotPrime(w)) => json!({"verdict": false, "witness": format!("{w:?}")}),
        Err(e) => json!({"verdict": Value::Null, "error": e.to_string()}),
    };
    let reduced = match is_twist_reduced(d) {
        Ok(TwistReduced::Reduced) => json!({"verdict": true}),
        Ok(TwistReduced::NotReduced(w)) => json!({
            "verdict": false,
            "witness": {
                "crossings": w.crossings,
                "cut_edges": w.cut_edges,
            },
        }),
        Err(e) => json!({"verdict": Value::Null, "error": e.to_string()}),
    };
    json!({
        "input": line.source,
        "label": d.label(),
        "crossings": d.crossing_count(),
        "edges": d.edge_count(),
        "faces": d.faces().len(),
        "components": d.component_count(),
        "connected": d.is_connected(),
        "twist_regions": regions.iter().map(|r| json!({
            "crossings": r.crossings,
            "count": r.count(),
            "handedness": r.handedness,
            "cyclic": r.cyclic,
        })).collect::<Vec<_>>(),
        "component_stats": stats.iter().map(|s| json!({
            "component": s.component,
            "multiplicity": s.multiplicity,
        })).collect::<Vec<_>>(),
        "prime": prime,
        "twist_reduced": reduced,
    })
}

fn certify_line(line: &Line, theorem: TheoremId, fill: Option<&[usize]>) -> Value {
    let d = match &line.parsed {
        Err(e) => return json!({"input": line.source, "error": e}),
        Ok(d) => d,
    };
    let mut certs: Vec<Certificate> = Vec::new();
    let mut errors: Vec<String> = Vec::new();
    let push_partial = |certs: &mut Vec<Certificate>, errors: &mut Vec<String>| {
        if let Some(f) = fill {
            match certify_partial_filling(d, f) {
                Ok(c) => certs.push(c),
                Err(SlopeError::BadFillingSubset) => errors.push(
                    "filled subset must be a proper nonempty subset of the components".into(),
                ),
                Err(e) => errors.push(e.to_string()),
            }
        }
    };
    match theorem {
        TheoremId::HypLink => certs.push(certify_hyperbolic(d)),
        TheoremId::GenusBound => certs.push(genus_lower_bound(d)),
        TheoremId::Main | TheoremId::MainKnotCor => certs.push(certify_no_exceptional(d)),
        TheoremId::PartialSurg => push_partial(&mut certs, &mut errors),
        TheoremId::All => {
            certs.push(certify_hyperbolic(d));
            certs.push(genus_lower_bound(d));
            certs.push(certify_no_exceptional(d));
            push_partial(&mut certs, &mut errors);
        }
    }
    json!({
        "input": line.source,
        "label": d.label(),
        "certificates": certs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        "errors": errors,
    })
}

fn cusps_line(line: &Line, out_dir: &std::path::Path, failed: &mut bool) -> Result<Value, String> {
    let d = match &line.parsed {
        Err(e) => {
            *failed = true;
            return Ok(json!({"input": line.source, "error": e}));
        }
        Ok(d) => d,
    };
    let aug = match augment(d) {
        Ok(a) => a,
        Err(e) => {
            *failed = true;
            return Ok(json!({"input": line.source, "error": e.to_string()}));
        }
    };
    let dec = decompose(&aug).map_err(|e| e.to_string())?;
    let cusps = dec.cusp_tori().map_err(|e| e.to_string())?;
    let stem: String = d
        .label()
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect::<String>();
    let stem = if stem.is_empty() { format!("line{}", line.number) } else { stem };
    let mut files = Vec::new();
    for (i, cusp) in cusps.iter().enumerate() {
        let svg = svg::cusp_svg(&dec, cusp);
        let name = format!("{stem}_cusp{i}.svg");
        let path = out_dir.join(&name);
        std::fs::write(&path, svg).map_err(|e| format!("{}: {e}", path.display()))?;
        files.push(json!({
            "file": name,
            "kind": format!("{:?}", cusp.kind),
            "tiles": cusp.tiles.len(),
            "meridian": format!("({}, {})", cusp.meridian.w, cusp.meridian.s),
        }));
    }
    Ok(json!({"input": line.source, "label": d.label(), "cusps": files}))
}

fn oracle_line(line: &Line, limit: usize) -> Value {
    let d = match &line.parsed {
        Err(e) => return json!({"input": line.source, "error": e}),
        Ok(d) => d,
    };
    let mut checks: Vec<Value> = Vec::new();
    let mut check = |name: &str, pass: bool, detail: String| {
        checks.push(json!({"check": name, "pass": pass, "detail": detail}));
    };

    if d.is_connected() {
        let fast = is_prime(d).map(|p| p.is_prime());
        let slow = oracle::prime_violations(d);
        match fast {
            Ok(fast) => check(
                "prime-oracle-agreement",
                fast == slow.is_empty(),
                format!("predicate={} oracle_violations={}", fast, slow.len()),
            ),
            Err(e) => check("prime-oracle-agreement", false, e.to_string()),
        }
        if matches!(is_prime(d), Ok(Primality::Prime)) {
            let fast = is_twist_reduced(d).map(|t| t.is_reduced());
            let slow = oracle::twist_reduced_violations(d);
            match fast {
                Ok(fast) => check(
                    "twist-reduced-oracle-agreement",
                    fast == slow.is_empty(),
                    format!("predicate={} oracle_violations={}", fast, slow.len()),
                ),
                Err(e) => check("twist-reduced-oracle-agreement", false, e.to_string()),
            }
        }
    }

    if let Ok(aug) = augment(d) {
        match decompose(&aug) {
            Err(e) => check("decomposition", false, e.to_string()),
            Ok(dec) => {
                check(
                    "structural-invariants",
                    dec.validate_structure().is_ok() && dec.verify_isomorphic(),
                    format!(
                        "V={} E={} F={} shaded={}",
                        dec.complex.vertices.len(),
                        dec.complex.edges.len(),
                        dec.complex.faces.len(),
                        dec.complex.shaded_face_count()
                    ),
                );
                let angled = verify_angled(&dec, limit);
                check(
                    "angled-structure",
                    angled.passed(),
                    format!(
                        "{} edge classes, {} curves checked{}",
                        angled.edge_classes_checked,
                        angled.curves.len(),
                        if angled.truncated { " (truncated)" } else { "" }
                    ),
                );
                match dec.cusp_tori() {
                    Err(e) => check("cusp-tori", false, e.to_string()),
                    Ok(cusps) => {
                        let expected = d.component_count() + dec.link.region_count();
                        check(
                            "cusp-count",
                            cusps.len() == expected,
                            format!("{} tori, expected {}", cusps.len(), expected),
                        );
                        let mut gb_ok = true;
                        let mut gb_n = 0;
                        for cusp in &cusps {
                            let torus = ns::vertex_link_torus(&dec, cusp);
                            match ns::gauss_bonnet(&dec, &torus) {
                                Ok(r) if r.holds && r.euler == 0 => gb_n += 1,
                                other => {
                                    gb_ok = false;
                                    log::warn!("vertex-link torus fails: {other:?}");
                                }
                            }
                        }
                        for class in dec.edge_classes() {
                            let annulus = ns::bigon_annulus(&dec, &class);
                            match ns::gauss_bonnet(&dec, &annulus) {
                                Ok(r) if r.holds && r.euler == 0 => gb_n += 1,
                                other => {
                                    gb_ok = false;
                                    log::warn!("bigon annulus fails: {other:?}");
                                }
                            }
                        }
                        check("gauss-bonnet", gb_ok, format!("{gb_n} surfaces checked"));
                    }
                }
                // enumeration-backed area facts
                let result = ns::enumerate_normal_curves(&dec.complex, limit);
                let mut pos_area_ok = true;
                let mut rel_len_ok = true;
                for curve in &result.curves {
                    let disk = ns::AdmissibleDisk::normal(PolyId::P1, curve.clone());
                    let area = ns::comb_area(&disk);
                    let class = ns::classify_disk(&disk, &dec.complex);
                    let zero_class = matches!(
                        class,
                        ns::DiskClass::VertexLink | ns::DiskClass::BoundaryBigon
                    );
                    if (area == linkcert_core::Angle::ZERO) != zero_class {
                        pos_area_ok = false;
                    }
                    let triangle = matches!(
                        class,
                        ns::DiskClass::IdealTriangleS
                            | ns::DiskClass::IdealTriangleW
                            | ns::DiskClass::IdealTriangleN
                    );
                    if !zero_class && !triangle && disk.boundary_segment_count() > 0 {
                        if let Ok(l) = ns::relative_length(&disk) {
                            if l < linkcert_core::Angle::PI_2 {
                                rel_len_ok = false;
                            }
                        }
                    }
                }
                check(
                    "pos-area",
                    pos_area_ok,
                    format!(
                        "{} curves checked{}",
                        result.curves.len(),
                        if result.truncated { " (truncated)" } else { "" }
                    ),
                );
                check(
                    "relative-length",
                    rel_len_ok,
                    format!("{} curves checked", result.curves.len()),
                );
                // slope formula spot checks
                if let Ok(cusps) = dec.cusp_tori() {
                    let mut formulas_ok = true;
                    for (i, torus) in cusps.iter().enumerate() {
                        let slope = if torus.is_crossing_circle() {
                            slopes::SlopeSpec::Recovery
                        } else {
                            slopes::SlopeSpec::AnyNontrivial
                        };
                        match slopes::surgery_coords(&dec, &cusps, i, slope) {
                            Ok(coords) => {
                                if torus.is_crossing_circle() {
                                    let want = torus.n as i64;
                                    let got = match coords.s_coeff {
                                        slopes::SCoeffValue::Exact(s) => s.abs(),
                                        _ => -1,
                                    };
                                    if coords.w_coeff != 1 || got != want {
                                        formulas_ok = false;
                                    }
                                } else if coords.w_coeff != torus.n as i64 {
                                    formulas_ok = false;
                                }
                            }
                            Err(SlopeError::TrivialSlope) => {}
                            Err(_) => formulas_ok = false,
                        }
                    }
                    check("surgery-coordinates", formulas_ok, format!("{} cusps", cusps.len()));
                }
            }
        }
    }

    json!({"input": line.source, "label": d.label(), "checks": checks})
}

fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "linkcert {} ({})\n",
        doc["version"].as_str().unwrap_or(""),
        doc["command"].as_str().unwrap_or("")
    ));
    for report in doc["reports"].as_array().into_iter().flatten() {
        out.push_str(&format!("== {}", report["input"].as_str().unwrap_or("?")));
        if let Some(label) = report["label"].as_str() {
            if !label.is_empty() {
                out.push_str(&format!(" [{label}]"));
            }
        }
        out.push('\n');
        if let Some(err) = report["error"].as_str() {
            out.push_str(&format!("  error: {err}\n"));
            continue;
        }
        if let Some(regions) = report["twist_regions"].as_array() {
            let counts: Vec<String> = regions
                .iter()
                .map(|r| r["count"].as_u64().unwrap_or(0).to_string())
                .collect();
            out.push_str(&format!(
                "  crossings={} components={} twist regions: [{}]\n",
                report["crossings"], report["components"],
                counts.join(", ")
            ));
            out.push_str(&format!(
                "  prime: {}  twist-reduced: {}\n",
                report["prime"]["verdict"], report["twist_reduced"]["verdict"]
            ));
        }
        for cert in report["certificates"].as_array().into_iter().flatten() {
            out.push_str(&format!(
                "  {}: {}\n",
                cert["theorem"].as_str().unwrap_or("?"),
                cert["verdict"].as_str().unwrap_or("?")
            ));
            for item in cert["checklist"].as_array().into_iter().flatten() {
                out.push_str(&format!(
                    "    [{}] {} (required {}, observed {})\n",
                    if item["pass"].as_bool().unwrap_or(false) { "ok" } else { "  " },
                    item["item"].as_str().unwrap_or("?"),
                    item["required"].as_str().unwrap_or("?"),
                    item["observed"].as_str().unwrap_or("?"),
                ));
            }
            for b in cert["bounds"].as_array().into_iter().flatten() {
                out.push_str(&format!(
                    "    bound {} {}: {}{}\n",
                    b["cusp"].as_str().unwrap_or("?"),
                    b["kind"].as_str().unwrap_or("?"),
                    b["value"].as_str().unwrap_or("?"),
                    if b["strict"].as_bool().unwrap_or(false) { " (strict)" } else { "" },
                ));
            }
            if let Some(c) = cert["conclusion"].as_str() {
                out.push_str(&format!("    conclusion: {c}\n"));
            }
            if let Some(g) = cert["genus_bound"].as_i64() {
                out.push_str(&format!("    genus bound: {g}\n"));
            }
        }
        for checkv in report["checks"].as_array().into_iter().flatten() {
            out.push_str(&format!(
                "  {}: {} ({})\n",
                checkv["check"].as_str().unwrap_or("?"),
                if checkv["pass"].as_bool().unwrap_or(false) { "pass" } else { "FAIL" },
                checkv["detail"].as_str().unwrap_or(""),
            ));
        }
        for cusp in report["cusps"].as_array().into_iter().flatten() {
            out.push_str(&format!(
                "  wrote {} ({}, {} tiles, meridian {})\n",
                cusp["file"].as_str().unwrap_or("?"),
                cusp["kind"].as_str().unwrap_or("?"),
                cusp["tiles"],
                cusp["meridian"].as_str().unwrap_or("?"),
            ));
        }
    }
    out
}
