//! Command-line front end: renders the AR quiver, answers Hom/Ext
//! queries, reports on exact structures, enumerates and mutates MAR
//! modules, and runs the full verification sweep.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mar_core::exact::ExactStructure;
use mar_core::mar::{enumerate_mar, mar_poset, mutate, polygon_flip_graph, verify_bijection};
use mar_core::oracle::section5;
use mar_core::{verify, ArGrid, Interval, ModuleSum, TypeAQuiver};

#[derive(Parser)]
#[command(name = "mar-tools", version, about = "Type A Auslander-Reiten calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Render the embedded AR quiver Gamma(Q)
    ArQuiver {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        orientation: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// dim Hom(M, N) for two interval modules
    Hom {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        orientation: String,
        /// source interval, e.g. "1,3"
        #[arg(long)]
        from: String,
        /// target interval, e.g. "2,2"
        #[arg(long)]
        to: String,
    },
    /// The nonsplit class in Ext^1(quot, sub), if any
    Ext {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        orientation: String,
        #[arg(long)]
        quot: String,
        #[arg(long)]
        sub: String,
    },
    /// 0-Auslander report for a relative exact structure F_X
    ExactStructure {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        orientation: String,
        /// generators as "lo,hi;lo,hi;..."; omitted = diamond structure
        #[arg(long)]
        generators: Option<String>,
    },
    /// Enumerate maximal almost rigid modules
    Mar {
        #[arg(short)]
        n: usize,
        /// orientation word, or "all"
        #[arg(short, long)]
        orientation: String,
        /// emit the Hasse diagram as DOT
        #[arg(long)]
        hasse: bool,
        /// check the polygon flip-graph bijection
        #[arg(long)]
        verify_bijection: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exchange one summand of a MAR module
    Mutate {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        orientation: String,
        /// the MAR module as "lo,hi;lo,hi;..."
        #[arg(long)]
        summands: String,
        /// the summand to exchange
        #[arg(long)]
        at: String,
    },
    /// The Cambrian lattice of MAR modules
    Poset {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        orientation: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// also emit the flip-graph isomorphism certificate
        #[arg(long)]
        certificate: bool,
    },
    /// Run the acceptance sweep
    Verify {
        /// cap for every n-range of the sweep
        #[arg(long, default_value = "6")]
        max_n: usize,
        /// only replay the two counterexample scripts
        #[arg(long)]
        section5: bool,
    },
}

fn parse_interval(s: &str, n: usize) -> Result<Interval, String> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Vec<&str> = t.split([',', '-']).map(str::trim).collect();
    let err = || format!("expected an interval \"lo,hi\" inside [1,{n}], got \"{s}\"");
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: usize = parts[0].parse().map_err(|_| err())?;
    let hi: usize = parts[1].parse().map_err(|_| err())?;
    Interval::new(lo, hi, n).map_err(|e| format!("{e:?}"))
}

fn parse_module(s: &str, n: usize) -> Result<ModuleSum, String> {
    let mut parts = Vec::new();
    for piece in s.split(';') {
        parts.push(parse_interval(piece, n)?);
    }
    Ok(ModuleSum::new(parts))
}

fn quiver(n: usize, orientation: &str) -> Result<TypeAQuiver, String> {
    TypeAQuiver::new(n, orientation).map_err(|e| format!("invalid quiver: {e:?}"))
}

fn quiver_json(q: &TypeAQuiver) -> Value {
    json!({ "n": q.n(), "orientation": q.orientation_word() })
}

fn interval_json(iv: Interval) -> Value {
    json!([iv.lo, iv.hi])
}

fn module_json(m: &ModuleSum) -> Value {
    Value::Array(m.summands().iter().map(|&s| interval_json(s)).collect())
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none()
}

fn dot_node(iv: Interval, x: i64, y: usize) -> String {
    format!("  \"{},{}\" [label=\"[{},{}]\", pos=\"{},{}!\"];", iv.lo, iv.hi, iv.lo, iv.hi, x, y)
}

fn cmd_ar_quiver(n: usize, orientation: &str, format: Format) -> Result<(), String> {
    let q = quiver(n, orientation)?;
    let grid = ArGrid::build(&q);
    match format {
        Format::Dot => {
            println!("digraph ar_quiver {{");
            println!("  node [shape=box];");
            for (iv, pt) in grid.positions() {
                println!("{}", dot_node(iv, pt.x, pt.y));
            }
            for (a, b) in grid.arrows() {
                println!("  \"{},{}\" -> \"{},{}\";", a.lo, a.hi, b.lo, b.hi);
            }
            println!("}}");
        }
        Format::Json => {
            let modules: Vec<Value> = grid
                .positions()
                .map(|(iv, pt)| json!({ "module": interval_json(iv), "x": pt.x, "y": pt.y }))
                .collect();
            let arrows: Vec<Value> = grid
                .arrows()
                .into_iter()
                .map(|(a, b)| json!([interval_json(a), interval_json(b)]))
                .collect();
            let tau: Vec<Value> = q
                .indecomposables()
                .into_iter()
                .filter_map(|m| grid.tau(m).map(|t| json!([interval_json(m), interval_json(t)])))
                .collect();
            let rows: Vec<Value> = (1..=n)
                .map(|i| {
                    Value::Array(grid.orbit_row(i).into_iter().map(interval_json).collect())
                })
                .collect();
            emit(&json!({
                "schema": 1,
                "quiver": quiver_json(&q),
                "modules": modules,
                "arrows": arrows,
                "tau": tau,
                "orbit_rows": rows,
            }));
        }
        Format::Text => {
            for (iv, pt) in grid.positions() {
                println!("[{},{}] at ({}, {})", iv.lo, iv.hi, pt.x, pt.y);
            }
        }
    }
    Ok(())
}

fn cmd_hom(n: usize, orientation: &str, from: &str, to: &str) -> Result<(), String> {
    let q = quiver(n, orientation)?;
    let grid = ArGrid::build(&q);
    let m = parse_interval(from, n)?;
    let t = parse_interval(to, n)?;
    emit(&json!({
        "schema": 1,
        "quiver": quiver_json(&q),
        "from": interval_json(m),
        "to": interval_json(t),
        "hom_dim": grid.hom_dim(m, t),
    }));
    Ok(())
}

fn cmd_ext(n: usize, orientation: &str, quot: &str, sub: &str) -> Result<(), String> {
    let q = quiver(n, orientation)?;
    let grid = ArGrid::build(&q);
    let qu = parse_interval(quot, n)?;
    let su = parse_interval(sub, n)?;
    let class = grid.ext_class(qu, su);
    let body = match &class {
        Some(ses) => json!({
            "ext_dim": 1,
            "middle": module_json(&ses.middle),
            "kind": format!("{:?}", ses.kind),
        }),
        None => json!({ "ext_dim": 0 }),
    };
    emit(&json!({
        "schema": 1,
        "quiver": quiver_json(&q),
        "quot": interval_json(qu),
        "sub": interval_json(su),
        "class": body,
    }));
    Ok(())
}

fn cmd_exact_structure(n: usize, orientation: &str, generators: Option<&str>) -> Result<(), String> {
    let q = quiver(n, orientation)?;
    let ex = match generators {
        Some(g) => {
            let gens = parse_module(g, n)?;
            ExactStructure::f_x(&q, gens.summands().iter().copied())
        }
        None => ExactStructure::e_diamond(&q),
    };
    let report = ex.zero_auslander_report();
    let to_list = |v: &[Interval]| Value::Array(v.iter().map(|&i| interval_json(i)).collect());
    emit(&json!({
        "schema": 1,
        "quiver": quiver_json(&q),
        "generators": to_list(&ex.generators().iter().copied().collect::<Vec<_>>()),
        "is_diamond": ex.is_diamond(),
        "relative_projectives": to_list(&report.relative_projectives),
        "relative_injectives": to_list(&report.relative_injectives),
        "relative_proj_injectives": to_list(&report.relative_proj_injectives),
        "global_dim": report.global_dim,
        "dominant_dim_ok": report.dominant_dim_ok,
        "is_0_auslander": report.is_0_auslander,
    }));
    Ok(())
}

fn cmd_mar(
    n: usize,
    orientation: &str,
    hasse: bool,
    verify_bij: bool,
    format: Format,
) -> Result<(), String> {
    let quivers = if orientation == "all" {
        TypeAQuiver::all_orientations(n).map_err(|e| format!("{e:?}"))?
    } else {
        vec![quiver(n, orientation)?]
    };
    let mut reports = Vec::new();
    let mut all_ok = true;
    for q in &quivers {
        let mars = enumerate_mar(q).map_err(|e| format!("{e:?}"))?;
        let sizes_ok = mars.iter().all(|t| t.len() == 2 * n - 1);
        all_ok &= sizes_ok;
        let bijection = if verify_bij {
            let ok = verify_bijection(q).map_err(|e| format!("{e:?}"))?.is_some();
            all_ok &= ok;
            Some(ok)
        } else {
            None
        };
        if hasse && format == Format::Dot {
            let poset = mar_poset(q).map_err(|e| format!("{e:?}"))?;
            println!("digraph hasse {{");
            for (i, t) in poset.elements.iter().enumerate() {
                println!("  t{i} [label=\"{}\"];", render_module(t));
            }
            for e in &poset.hasse {
                println!("  t{} -> t{};", e.from, e.to);
            }
            println!("}}");
            continue;
        }
        let mut report = json!({
            "quiver": quiver_json(q),
            "count": mars.len(),
            "summands_per_module": 2 * n - 1,
            "summand_sizes_ok": sizes_ok,
            "modules": Value::Array(mars.iter().map(module_json).collect()),
        });
        if let Some(ok) = bijection {
            report["flip_graph_bijection"] = Value::Bool(ok);
        }
        reports.push(report);
    }
    if format != Format::Dot {
        emit(&json!({ "schema": 1, "orientations": reports }));
    }
    if all_ok {
        Ok(())
    } else {
        Err("MAR verification failed".into())
    }
}

fn render_module(t: &ModuleSum) -> String {
    t.summands()
        .iter()
        .map(|s| format!("[{},{}]", s.lo, s.hi))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_mutate(n: usize, orientation: &str, summands: &str, at: &str) -> Result<(), String> {
    let q = quiver(n, orientation)?;
    let t = parse_module(summands, n)?;
    let x = parse_interval(at, n)?;
    let (y, ses, dir) = mutate(&q, &t, x).map_err(|e| format!("mutation failed: {e:?}"))?;
    emit(&json!({
        "schema": 1,
        "quiver": quiver_json(&q),
        "removed": interval_json(x),
        "added": interval_json(y),
        "direction": format!("{dir:?}"),
        "exchange_sequence": {
            "sub": interval_json(ses.sub),
            "middle": module_json(&ses.middle),
            "quot": interval_json(ses.quot),
        },
    }));
    Ok(())
}

fn cmd_poset(n: usize, orientation: &str, format: Format, certificate: bool) -> Result<(), String> {
    let q = quiver(n, orientation)?;
    let poset = mar_poset(&q).map_err(|e| format!("{e:?}"))?;
    match format {
        Format::Dot => {
            println!("digraph hasse {{");
            for (i, t) in poset.elements.iter().enumerate() {
                println!("  t{i} [label=\"{}\"];", render_module(t));
            }
            for e in &poset.hasse {
                println!("  t{} -> t{};", e.from, e.to);
            }
            println!("}}");
        }
        _ => {
            let edges: Vec<Value> = poset
                .hasse
                .iter()
                .map(|e| {
                    json!({
                        "from": e.from,
                        "to": e.to,
                        "removed": interval_json(e.removed),
                        "added": interval_json(e.added),
                    })
                })
                .collect();
            let mut out = json!({
                "schema": 1,
                "quiver": quiver_json(&q),
                "elements": Value::Array(poset.elements.iter().map(module_json).collect()),
                "hasse": edges,
                "minimum": poset.minimum(),
                "maximum": poset.maximum(),
                "is_lattice": poset.is_lattice(),
            });
            if certificate {
                let matching = verify_bijection(&q).map_err(|e| format!("{e:?}"))?;
                let (tris, _) = polygon_flip_graph(n + 1).map_err(|e| format!("{e:?}"))?;
                out["flip_certificate"] = match matching {
                    Some(map) => {
                        let pairs: Vec<Value> = map
                            .iter()
                            .enumerate()
                            .map(|(mar_idx, &tri_idx)| {
                                let diagonals: Vec<Value> = tris[tri_idx]
                                    .diagonals
                                    .iter()
                                    .map(|&(a, b)| json!([a, b]))
                                    .collect();
                                json!({ "mar": mar_idx, "triangulation": diagonals })
                            })
                            .collect();
                        Value::Array(pairs)
                    }
                    None => Value::Null,
                };
            }
            emit(&out);
        }
    }
    Ok(())
}

fn cmd_verify(max_n: usize, section5_only: bool) -> Result<(), String> {
    let color = color_enabled();
    let paint = |pass: bool, text: &str| {
        if !color {
            text.to_string()
        } else if pass {
            format!("\x1b[32m{text}\x1b[0m")
        } else {
            format!("\x1b[31m{text}\x1b[0m")
        }
    };
    if section5_only {
        let mut ok = true;
        for report in [section5::verify_d4(), section5::verify_gentle()] {
            eprintln!("{}", report.title);
            for c in &report.checks {
                ok &= c.pass;
                eprintln!(
                    "  {} {}: {}",
                    paint(c.pass, if c.pass { "PASS" } else { "FAIL" }),
                    c.label,
                    c.detail
                );
            }
        }
        return if ok { Ok(()) } else { Err("counterexample replay failed".into()) };
    }
    if max_n < 3 {
        eprintln!("notice: sweeps need n >= 3; MAR and oracle checks skipped");
    }
    let results = verify::run_all(max_n);
    let mut ok = true;
    for c in &results {
        ok &= c.pass;
        eprintln!(
            "{} {:2}. {}: {}",
            paint(c.pass, if c.pass { "PASS" } else { "FAIL" }),
            c.id,
            c.label,
            c.detail
        );
    }
    let checks: Vec<Value> = results
        .iter()
        .map(|c| json!({ "id": c.id, "label": c.label, "pass": c.pass, "detail": c.detail }))
        .collect();
    emit(&json!({ "schema": 1, "max_n": max_n, "all_pass": ok, "checks": checks }));
    if ok {
        Ok(())
    } else {
        Err("verification sweep failed".into())
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::ArQuiver { n, orientation, format } => cmd_ar_quiver(n, &orientation, format),
        Command::Hom { n, orientation, from, to } => cmd_hom(n, &orientation, &from, &to),
        Command::Ext { n, orientation, quot, sub } => cmd_ext(n, &orientation, &quot, &sub),
        Command::ExactStructure { n, orientation, generators } => {
            cmd_exact_structure(n, &orientation, generators.as_deref())
        }
        Command::Mar { n, orientation, hasse, verify_bijection, format } => {
            cmd_mar(n, &orientation, hasse, verify_bijection, format)
        }
        Command::Mutate { n, orientation, summands, at } => {
            cmd_mutate(n, &orientation, &summands, &at)
        }
        Command::Poset { n, orientation, format, certificate } => {
            cmd_poset(n, &orientation, format, certificate)
        }
        Command::Verify { max_n, section5 } => cmd_verify(max_n, section5),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let failure_exit = matches!(cli.command, Command::Verify { .. } | Command::Mar { .. });
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            // verification failures exit 1; bad inputs exit 2
            if failure_exit && !msg.starts_with("invalid") && !msg.starts_with("expected") {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
