//! Command-line front end: quiver specs in, dimension tables, bases,
//! canonical products and verification reports out.
//!
//! Exit codes: 0 success, 1 failed verification, 2 configuration or parse
//! error, 3 non-composable elements.

use clap::{Args, Parser, Subcommand};
use plumbing_hom::dynkin::{from_config, from_short_name, QuiverConfig, Series};
use plumbing_hom::ginzburg;
use plumbing_hom::parser::parse_element;
use plumbing_hom::quotient::{QuotientAlgebra, Side};
use plumbing_hom::{Error, GradedElement, Result};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "plumbing-hom", version, about = "Graded endomorphism algebras of ADE plumbing cocores")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Quiver: short name (A5, D4, E6) or a JSON file {"series","rank","arrows"?}
    #[arg(long)]
    quiver: String,
    /// Output format
    #[arg(long, default_value = "md", value_parser = ["json", "csv", "md"])]
    format: String,
    /// Enable best-effort quotient operations on D/E quivers
    #[arg(long)]
    experimental_de: bool,
}

#[derive(Args, Clone)]
struct WindowArgs {
    /// Degree window `a..b` (default −(3n+9)..n+11)
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graded quivers Ω_Q and Ω̄_Q with degrees and relations
    Build {
        #[command(flatten)]
        common: Common,
    },
    /// Graded dimension tables
    Dims {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        /// wrapped, quotient, or both when omitted
        #[arg(long, value_parser = ["wrapped", "quotient"])]
        side: Option<String>,
        /// Recompute every dimension with an independent oracle
        #[arg(long)]
        seed_check: bool,
    },
    /// Basis elements per degree
    Basis {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "wrapped", value_parser = ["wrapped", "quotient"])]
        side: String,
    },
    /// Canonical form of a product expression
    Mul {
        #[command(flatten)]
        common: Common,
        /// Expression, e.g. "v_inv(1) * v(1)" or "x(1) x(1)"
        expr: String,
    },
    /// The pairing β′(a, b) of two elements (type A)
    Pairing {
        #[command(flatten)]
        common: Common,
        /// Element of degree 2−p from j to i
        a: String,
        /// Element of degree p from i to j
        b: String,
    },
    /// Run invariant suites; exit 1 on any failure
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value = "all", value_parser = ["duality", "ginzburg", "gap", "closed-form", "vanishing", "all"])]
        suite: String,
    },
}

fn load_quiver(spec: &str) -> Result<plumbing_hom::DynkinQuiver> {
    if spec.ends_with(".json") || spec.contains('/') {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Error::Config(format!("cannot read {spec}: {e}")))?;
        let cfg: QuiverConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("invalid quiver file {spec}: {e}")))?;
        from_config(&cfg)
    } else {
        from_short_name(spec)
    }
}

fn window_cap() -> i64 {
    std::env::var("PLUMBING_HOM_MAX_WINDOW")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200)
}

fn parse_window(arg: &Option<String>, n: usize) -> Result<(i64, i64)> {
    let (a, b) = match arg {
        None => (-(3 * n as i64 + 9), n as i64 + 11),
        Some(text) => {
            let (a, b) = text
                .split_once("..")
                .ok_or_else(|| Error::Config(format!("window must be a..b, got {text:?}")))?;
            let a: i64 = a
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad window bound {a:?}")))?;
            let b: i64 = b
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("bad window bound {b:?}")))?;
            (a, b)
        }
    };
    if a > b {
        return Err(Error::Config(format!("empty window {a}..{b}")));
    }
    if b - a + 1 > window_cap() {
        return Err(Error::Config(format!(
            "window {a}..{b} exceeds the cap of {} degrees (set PLUMBING_HOM_MAX_WINDOW to raise it)",
            window_cap()
        )));
    }
    Ok((a, b))
}

fn side_of(name: &str) -> Side {
    match name {
        "wrapped" => Side::Wrapped,
        _ => Side::Quotient,
    }
}

fn require_de_flag(alg: &QuotientAlgebra, common: &Common) -> Result<()> {
    if alg.quiver.series == Series::A || common.experimental_de {
        Ok(())
    } else {
        Err(Error::Config(
            "quotient operations on D/E quivers are experimental; pass --experimental-de".into(),
        ))
    }
}

fn dims_table(
    alg: &QuotientAlgebra,
    from: usize,
    to: usize,
    side: Side,
    window: (i64, i64),
) -> Vec<(i64, usize)> {
    (window.0..=window.1)
        .map(|p| (p, alg.dim(from, to, p, side)))
        .collect()
}

fn dims_json(from: usize, to: usize, side: Side, window: (i64, i64), dims: &[(i64, usize)]) -> Value {
    let mut map = Map::new();
    for (p, d) in dims {
        map.insert(p.to_string(), json!(d));
    }
    json!({
        "from": from,
        "to": to,
        "side": if side == Side::Wrapped { "wrapped" } else { "quotient" },
        "window": [window.0, window.1],
        "dims": Value::Object(map),
    })
}

fn cmd_build(common: &Common) -> Result<()> {
    let q = load_quiver(&common.quiver)?;
    let alg = QuotientAlgebra::new(q)?;
    match common.format.as_str() {
        "json" => {
            let arrows: Vec<Value> = alg
                .omega_bar
                .arrows
                .iter()
                .map(|a| json!({"name": a.name, "source": a.source, "target": a.target, "degree": a.degree}))
                .collect();
            let out = json!({
                "series": alg.quiver.series.to_string(),
                "rank": alg.quiver.rank,
                "coxeter_number": alg.h,
                "shift_exponents": alg.shifts,
                "arrows": arrows,
                "relations": alg.jbar.labels,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        "csv" => {
            println!("name,source,target,degree");
            for a in &alg.omega_bar.arrows {
                println!("{},{},{},{}", a.name, a.source, a.target, a.degree);
            }
        }
        _ => {
            println!(
                "# {}{} (h = {}, N = {:?})",
                alg.quiver.series, alg.quiver.rank, alg.h, alg.shifts
            );
            println!();
            println!("| arrow | source | target | degree |");
            println!("|-------|--------|--------|--------|");
            for a in &alg.omega_bar.arrows {
                println!("| {} | {} | {} | {} |", a.name, a.source, a.target, a.degree);
            }
            println!();
            println!("relations ({}):", alg.jbar.len());
            for (gen, label) in alg.jbar.generators.iter().zip(&alg.jbar.labels) {
                println!("  {label}: {}", gen.display(&alg.omega_bar));
            }
        }
    }
    Ok(())
}

/// Independent recomputation of one dimension; `None` when no desk-scale
/// oracle applies.
fn oracle_dim(alg: &QuotientAlgebra, from: usize, to: usize, p: i64, side: Side) -> Option<usize> {
    match side {
        Side::Quotient => Some(alg.quotient_dim_direct(from, to, p)),
        Side::Wrapped => {
            if p > 0 {
                return Some(0);
            }
            if alg.is_standard_type_a() {
                return alg.presentation_dim(from, to, p, Side::Wrapped).ok();
            }
            if alg.quiver.rank <= 4 && p >= -8 {
                return plumbing_hom::homalg::dense_hom_dim(
                    alg.omega(),
                    &alg.hom.relations,
                    from,
                    to,
                    p,
                )
                .ok();
            }
            None
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dims(
    common: &Common,
    window: &WindowArgs,
    from: Option<usize>,
    to: Option<usize>,
    side: &Option<String>,
    seed_check: bool,
) -> Result<()> {
    let q = load_quiver(&common.quiver)?;
    let n = q.rank;
    let win = parse_window(&window.window, n)?;
    let alg = QuotientAlgebra::new(q)?;
    let pairs: Vec<(usize, usize)> = match (from, to) {
        (Some(i), Some(j)) => vec![(i, j)],
        (Some(i), None) => (1..=n).map(|j| (i, j)).collect(),
        (None, Some(j)) => (1..=n).map(|i| (i, j)).collect(),
        (None, None) => (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect(),
    };
    for &(i, j) in &pairs {
        if i < 1 || i > n || j < 1 || j > n {
            return Err(Error::Config(format!("vertex out of range: ({i},{j})")));
        }
    }
    let sides: Vec<Side> = match side {
        Some(s) => vec![side_of(s)],
        None => vec![Side::Wrapped, Side::Quotient],
    };
    let mut tables = Vec::new();
    for &(i, j) in &pairs {
        for &s in &sides {
            let dims = dims_table(&alg, i, j, s, win);
            if seed_check {
                for &(p, d) in &dims {
                    if let Some(expect) = oracle_dim(&alg, i, j, p, s) {
                        if expect != d {
                            eprintln!(
                                "seed-check mismatch: ({i},{j}) degree {p} side {s:?}: {d} vs oracle {expect}"
                            );
                            std::process::exit(1);
                        }
                    }
                }
            }
            tables.push((i, j, s, dims));
        }
    }
    match common.format.as_str() {
        "json" => {
            let values: Vec<Value> = tables
                .iter()
                .map(|(i, j, s, dims)| dims_json(*i, *j, *s, win, dims))
                .collect();
            let out = if values.len() == 1 {
                values.into_iter().next().unwrap()
            } else {
                Value::Array(values)
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        "csv" => {
            println!("from,to,side,degree,dim");
            for (i, j, s, dims) in &tables {
                let side_name = if *s == Side::Wrapped { "wrapped" } else { "quotient" };
                for (p, d) in dims {
                    println!("{i},{j},{side_name},{p},{d}");
                }
            }
        }
        _ => {
            for (i, j, s, dims) in &tables {
                let side_name = if *s == Side::Wrapped { "wrapped" } else { "quotient" };
                println!("## hom({i}, {j}) — {side_name}");
                println!();
                println!("| degree | dim |");
                println!("|--------|-----|");
                for (p, d) in dims {
                    println!("| {p} | {d} |");
                }
                println!();
            }
        }
    }
    Ok(())
}

fn cmd_basis(
    common: &Common,
    window: &WindowArgs,
    from: usize,
    to: usize,
    side: &str,
) -> Result<()> {
    let q = load_quiver(&common.quiver)?;
    let n = q.rank;
    let win = parse_window(&window.window, n)?;
    let alg = QuotientAlgebra::new(q)?;
    let s = side_of(side);
    if s == Side::Quotient {
        require_de_flag(&alg, common)?;
    }
    let mut per_degree: Vec<(i64, Vec<String>)> = Vec::new();
    for p in win.0..=win.1 {
        let names: Vec<String> = match s {
            Side::Wrapped => alg
                .hom
                .hom_basis(from, to, p)
                .into_iter()
                .map(|path| path.display(alg.omega()))
                .collect(),
            Side::Quotient => alg
                .quotient_basis(from, to, p)
                .iter()
                .map(|e| alg.display(e))
                .collect(),
        };
        if !names.is_empty() {
            per_degree.push((p, names));
        }
    }
    match common.format.as_str() {
        "json" => {
            let mut map = Map::new();
            for (p, names) in &per_degree {
                map.insert(p.to_string(), json!(names));
            }
            let out = json!({
                "from": from,
                "to": to,
                "side": side,
                "window": [win.0, win.1],
                "basis": Value::Object(map),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        "csv" => {
            println!("degree,element");
            for (p, names) in &per_degree {
                for name in names {
                    println!("{p},\"{name}\"");
                }
            }
        }
        _ => {
            for (p, names) in &per_degree {
                println!("degree {p}:");
                for name in names {
                    println!("  {name}");
                }
            }
        }
    }
    Ok(())
}

fn cmd_mul(common: &Common, expr: &str) -> Result<()> {
    let q = load_quiver(&common.quiver)?;
    let alg = QuotientAlgebra::new(q)?;
    require_de_flag(&alg, common)?;
    let path = parse_element(&alg, expr)?;
    let result = alg.canonical_form(&GradedElement::from_path(path.clone()))?;
    let display = alg.display(&result);
    if common.format == "json" {
        let out = json!({
            "source": path.source,
            "target": path.target,
            "degree": path.degree,
            "zero": alg.is_zero(&result),
            "canonical": display,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{display}");
    }
    Ok(())
}

fn cmd_pairing(common: &Common, a: &str, b: &str) -> Result<()> {
    let q = load_quiver(&common.quiver)?;
    let alg = QuotientAlgebra::new(q)?;
    let pa = alg.canonical_form(&GradedElement::from_path(parse_element(&alg, a)?))?;
    let pb = alg.canonical_form(&GradedElement::from_path(parse_element(&alg, b)?))?;
    let value = alg.pairing(&pa, &pb)?;
    if common.format == "json" {
        println!("{}", json!({ "pairing": value.to_string() }));
    } else {
        println!("{value}");
    }
    Ok(())
}

struct Report {
    lines: Vec<(String, bool)>,
}

impl Report {
    fn check(&mut self, name: &str, ok: bool) {
        self.lines.push((name.to_string(), ok));
    }
}

fn cmd_verify(common: &Common, window: &WindowArgs, suite: &str) -> Result<bool> {
    let q = load_quiver(&common.quiver)?;
    let n = q.rank;
    let win = parse_window(&window.window, n)?;
    let alg = QuotientAlgebra::new(q)?;
    let type_a = alg.is_standard_type_a();
    let mut report = Report { lines: Vec::new() };
    let run = |s: &str| suite == "all" || suite == s;

    if run("duality") {
        if type_a {
            let mut symmetric = true;
            let mut refined = true;
            for p in win.0..=win.1 {
                let total: usize = (1..=n)
                    .flat_map(|i| (1..=n).map(move |j| (i, j)))
                    .map(|(i, j)| alg.quotient_dim(i, j, p))
                    .sum();
                let dual: usize = (1..=n)
                    .flat_map(|i| (1..=n).map(move |j| (i, j)))
                    .map(|(i, j)| alg.quotient_dim(i, j, 2 - p))
                    .sum();
                if total != dual {
                    symmetric = false;
                }
                for i in 1..=n {
                    for j in 1..=n {
                        if alg.quotient_dim(i, j, p) != alg.quotient_dim(j, i, 2 - p) {
                            refined = false;
                        }
                    }
                }
            }
            report.check("duality: symmetrized dims match across p ↔ 2−p", symmetric);
            report.check("duality: idempotent-refined dims match", refined);
        } else {
            // Outside type A the wrapped algebra carries y-torsion and the
            // p ↔ 2−p duality of the localized dims genuinely fails; the
            // invariant that remains exact is (h+2)-periodicity.
            let period = alg.h as i64 + 2;
            let mut periodic = true;
            for p in win.0..=(win.1 - period).min(0) {
                for i in 1..=n {
                    for j in 1..=n {
                        if alg.quotient_dim(i, j, p) != alg.quotient_dim(i, j, p + period) {
                            periodic = false;
                        }
                    }
                }
            }
            report.check("duality: quotient dims are (h+2)-periodic", periodic);
        }
        if type_a {
            // independent localization computation on a band around 0
            let band = (-(alg.h as i64 + 2)).max(win.0)..=(alg.h as i64 + 2).min(win.1);
            let mut direct = true;
            for p in band {
                for i in 1..=n {
                    for j in 1..=n {
                        if alg.quotient_dim_direct(i, j, p) != alg.quotient_dim(i, j, p) {
                            direct = false;
                        }
                    }
                }
            }
            report.check("duality: direct localization agrees with the formula", direct);
        }
    }
    if run("ginzburg") {
        let floor = if n <= 4 { -10 } else { -6 };
        let lo = win.0.max(floor);
        let mut ok = true;
        for i in 1..=n {
            for j in 1..=n {
                let dims = ginzburg::cohomology_dims(&alg.quiver, i, j, lo)?;
                for (k, p) in (lo..=0).enumerate() {
                    if dims[k] != alg.hom.hom_dim(i, j, p) {
                        ok = false;
                    }
                }
            }
        }
        report.check("ginzburg: dg cohomology equals path-algebra dims", ok);
    }
    if run("gap") {
        let ok = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .all(|(i, j)| alg.quotient_dim(i, j, 1) == 0);
        report.check("gap: quotient dims vanish in degree 1", ok);
    }
    if run("closed-form") {
        if type_a {
            let mut ok = true;
            for i in 1..=n {
                for j in 1..=n {
                    for p in win.0..=win.1 {
                        if p <= 0
                            && alg.presentation_dim(i, j, p, Side::Wrapped)?
                                != alg.hom.hom_dim(i, j, p)
                        {
                            ok = false;
                        }
                        if alg.presentation_dim(i, j, p, Side::Quotient)?
                            != alg.quotient_dim(i, j, p)
                        {
                            ok = false;
                        }
                    }
                }
            }
            report.check("closed-form: monomial counts equal computed dims", ok);
        } else {
            println!("SKIP closed-form (type A only)");
        }
    }
    if run("vanishing") {
        if type_a {
            let mut ok = true;
            let max_len = 8;
            // enumerate all u-paths by depth-first extension
            let mut stack: Vec<plumbing_hom::Path> =
                (1..=n).map(plumbing_hom::Path::idempotent).collect();
            while let Some(path) = stack.pop() {
                if !path.is_empty()
                    && alg.u_path_vanishes(&path)?
                        != alg.hom.is_zero(&GradedElement::from_path(path.clone()))
                {
                    ok = false;
                }
                if path.len() < max_len {
                    for (id, a) in alg.omega().arrows.iter().enumerate() {
                        if a.source == path.target
                            && matches!(
                                a.kind,
                                plumbing_hom::quiver::ArrowKind::U
                                    | plumbing_hom::quiver::ArrowKind::UStar
                            )
                        {
                            stack.push(path.extend(alg.omega(), id));
                        }
                    }
                }
            }
            report.check(
                "vanishing: combinatorial criterion equals ideal membership",
                ok,
            );
        } else {
            println!("SKIP vanishing (type A only)");
        }
    }

    let mut all_ok = true;
    for (name, ok) in &report.lines {
        println!("{} {}", if *ok { "PASS" } else { "FAIL" }, name);
        if !ok {
            all_ok = false;
        }
    }
    Ok(all_ok)
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Build { common } => cmd_build(common).map(|_| true),
        Command::Dims {
            common,
            window,
            from,
            to,
            side,
            seed_check,
        } => cmd_dims(common, window, *from, *to, side, *seed_check).map(|_| true),
        Command::Basis {
            common,
            window,
            from,
            to,
            side,
        } => cmd_basis(common, window, *from, *to, side).map(|_| true),
        Command::Mul { common, expr } => cmd_mul(common, expr).map(|_| true),
        Command::Pairing { common, a, b } => cmd_pairing(common, a, b).map(|_| true),
        Command::Verify {
            common,
            window,
            suite,
        } => cmd_verify(common, window, suite),
    }
}

fn main() {
    match run() {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(err) => {
            eprintln!("{}", serde_json::json!({ "error": err.to_string() }));
            let code = match err {
                Error::NotComposable(_) => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}
