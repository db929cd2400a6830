//! Command-line front end: evaluates correlations, inequalities, sweeps,
//! extremum searches, direction optimization, closed-form verification,
//! and the five reference figure datasets.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid flags or
//! inputs, 3 requested closed form unavailable.

use std::fs;
use std::path::PathBuf;
use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use relcorr::{
    bell_mermin, chsh, figure_config, figure_dataset, find_local_extrema, optimize_directions,
    optimize_joint, sweep_x, verify_equivalence, Backend, Correlator, Direction, Error, Inequality,
    MomentumConfig, MomentumFamily, OptimizeProblem, Quantity, Spin, SpinOperator,
};

mod output;
use output::{csv_line, format_float, json_document};

#[derive(Parser)]
#[command(
    name = "relcorr",
    version,
    about = "Relativistic pair spin correlations and Bell-type inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one correlation value
    Correlate(CorrelateArgs),
    /// Evaluate a quantity on a uniform x grid
    Sweep(SweepArgs),
    /// Locate local extrema of a quantity in x
    Extrema(ExtremaArgs),
    /// Evaluate the CHSH inequality at one kinematic point
    Chsh(ChshArgs),
    /// Evaluate the Bell-Mermin inequality at one kinematic point
    Mermin(MerminArgs),
    /// Maximize an inequality over directions and optionally x
    Optimize(OptimizeArgs),
    /// Cross-check every closed form against the trace backend
    Verify(VerifyArgs),
    /// Emit the dataset of one of the five reference figures
    Figure(FigureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SpinArg {
    Half,
    One,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorArg {
    Nw,
    Cz,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveArg {
    Nw,
    Cz,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Closed,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum MomentaArg {
    Eq13,
    Cm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InequalityArg {
    Chsh,
    Mermin,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    Correlation,
    Chsh,
    Mermin,
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected \"x,y,z\", got {s:?}"));
    }
    let mut c = [0.0; 3];
    for (slot, part) in c.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad component {part:?}: {e}"))?;
    }
    Direction::normalized(c[0], c[1], c[2]).map_err(|e| e.to_string())
}

/// Flags shared by every physics-evaluating command.
#[derive(Args, Clone)]
struct PhysicsFlags {
    /// Spin of each particle
    #[arg(long, value_enum)]
    spin: SpinArg,
    /// Momentum family
    #[arg(long, value_enum, default_value = "eq13")]
    momenta: MomentaArg,
    /// Center-of-mass pair axis as "x,y,z" (cm momenta only)
    #[arg(long = "n", value_parser = parse_direction, allow_hyphen_values = true, default_value = "0,0,1")]
    n: Direction,
    /// Particle mass
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
}

impl PhysicsFlags {
    fn spin(&self) -> Spin {
        match self.spin {
            SpinArg::Half => Spin::Half,
            SpinArg::One => Spin::One,
        }
    }

    fn family(&self) -> MomentumFamily {
        match self.momenta {
            MomentaArg::Eq13 => MomentumFamily::Boosted,
            MomentaArg::Cm => MomentumFamily::CenterOfMass { axis: self.n },
        }
    }

    fn correlator(&self, operator: SpinOperator, backend: BackendArg, x: f64) -> Correlator {
        let config = MomentumConfig {
            family: self.family(),
            x,
            mass: self.mass,
        };
        let backend = match backend {
            BackendArg::Closed => Backend::ClosedForm,
            BackendArg::Oracle => Backend::Oracle,
        };
        Correlator::new(self.spin(), operator, backend, config)
    }

    fn manifest_params(&self, params: &mut Map<String, Value>) {
        params.insert("spin".into(), json!(spin_label(self.spin())));
        params.insert(
            "momenta".into(),
            json!(match self.momenta {
                MomentaArg::Eq13 => "eq13",
                MomentaArg::Cm => "cm",
            }),
        );
        if matches!(self.momenta, MomentaArg::Cm) {
            params.insert("n".into(), json!(self.n.components()));
        }
        params.insert("mass".into(), json!(self.mass));
    }
}

fn spin_label(spin: Spin) -> &'static str {
    match spin {
        Spin::Half => "half",
        Spin::One => "one",
    }
}

fn operator_of(arg: OperatorArg) -> SpinOperator {
    match arg {
        OperatorArg::Nw => SpinOperator::NewtonWigner,
        OperatorArg::Cz => SpinOperator::Czachor,
    }
}

fn backend_label(backend: BackendArg) -> &'static str {
    match backend {
        BackendArg::Closed => "closed",
        BackendArg::Oracle => "oracle",
    }
}

#[derive(Args)]
struct CorrelateArgs {
    #[command(flatten)]
    physics: PhysicsFlags,
    /// Spin operator family
    #[arg(long, value_enum)]
    operator: OperatorArg,
    /// Evaluation backend
    #[arg(long, value_enum, default_value = "closed")]
    backend: BackendArg,
    /// Kinematic parameter
    #[arg(long)]
    x: f64,
    /// First measurement axis as "x,y,z"
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    a: Direction,
    /// Second measurement axis as "x,y,z"
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    b: Direction,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    physics: PhysicsFlags,
    /// Which operator curve(s) to emit
    #[arg(long, value_enum, default_value = "both")]
    operator: CurveArg,
    #[arg(long, value_enum, default_value = "closed")]
    backend: BackendArg,
    /// Quantity to sweep
    #[arg(long, value_enum, default_value = "correlation")]
    quantity: QuantityArg,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    a: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    b: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    c: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    d: Option<Direction>,
    #[arg(long, default_value_t = 0.0)]
    x_min: f64,
    #[arg(long, default_value_t = 10.0)]
    x_max: f64,
    /// Number of grid points, endpoints included
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Args)]
struct ExtremaArgs {
    #[command(flatten)]
    physics: PhysicsFlags,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    #[arg(long, value_enum, default_value = "closed")]
    backend: BackendArg,
    #[arg(long, value_enum, default_value = "correlation")]
    quantity: QuantityArg,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    a: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    b: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    c: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    d: Option<Direction>,
    #[arg(long, default_value_t = 0.0)]
    x_min: f64,
    #[arg(long, default_value_t = 10.0)]
    x_max: f64,
    /// Grid points of the bracketing scan
    #[arg(long, default_value_t = 512)]
    coarse_steps: usize,
    /// Bracket width the refinement narrows to
    #[arg(long, default_value_t = 1e-8)]
    x_tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Args)]
struct ChshArgs {
    #[command(flatten)]
    physics: PhysicsFlags,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    #[arg(long, value_enum, default_value = "closed")]
    backend: BackendArg,
    #[arg(long)]
    x: f64,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    a: Direction,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    b: Direction,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    c: Direction,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    d: Direction,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args)]
struct MerminArgs {
    #[command(flatten)]
    physics: PhysicsFlags,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    #[arg(long, value_enum, default_value = "closed")]
    backend: BackendArg,
    #[arg(long)]
    x: f64,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    a: Direction,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    b: Direction,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    c: Direction,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Inequality to maximize
    #[arg(long, value_enum)]
    inequality: InequalityArg,
    #[command(flatten)]
    physics: PhysicsFlags,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    /// Fixed kinematic point; optimizes directions only
    #[arg(long, conflicts_with_all = ["x_min", "x_max"])]
    x: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    x_min: f64,
    #[arg(long, default_value_t = 10.0)]
    x_max: f64,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Initial directions (all of them or none)
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    a: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    b: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    c: Option<Direction>,
    #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
    d: Option<Direction>,
    /// Keep the supplied directions fixed; search only x
    #[arg(long)]
    fix_directions: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random configurations to draw
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0.0)]
    x_min: f64,
    #[arg(long, default_value_t = 10.0)]
    x_max: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit a structured report instead of the summary line
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure number, 1 through 5
    number: u8,
    #[arg(long, default_value_t = 10.0)]
    x_max: f64,
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::ClosedFormUnavailable(_) => 3,
                _ => 2,
            }
        }
    };
    exit(code);
}

fn run(cli: Cli) -> relcorr::Result<i32> {
    match cli.command {
        Command::Correlate(args) => cmd_correlate(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Extrema(args) => cmd_extrema(&args),
        Command::Chsh(args) => cmd_chsh(&args),
        Command::Mermin(args) => cmd_mermin(&args),
        Command::Optimize(args) => cmd_optimize(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Figure(args) => cmd_figure(&args),
    }
}

fn write_out(out: &Option<PathBuf>, content: &str) -> relcorr::Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn build_quantity(
    kind: QuantityArg,
    a: Option<Direction>,
    b: Option<Direction>,
    c: Option<Direction>,
    d: Option<Direction>,
) -> relcorr::Result<Quantity> {
    fn need(dir: Option<Direction>, name: &str) -> relcorr::Result<Direction> {
        dir.ok_or_else(|| Error::InvalidArgument(format!("--{name} is required for this quantity")))
    }
    fn forbid(dir: Option<Direction>, name: &str) -> relcorr::Result<()> {
        if dir.is_some() {
            return Err(Error::InvalidArgument(format!(
                "--{name} does not apply to this quantity"
            )));
        }
        Ok(())
    }
    match kind {
        QuantityArg::Correlation => {
            forbid(c, "c")?;
            forbid(d, "d")?;
            Ok(Quantity::Correlation {
                a: need(a, "a")?,
                b: need(b, "b")?,
            })
        }
        QuantityArg::Chsh => Ok(Quantity::Chsh {
            a: need(a, "a")?,
            b: need(b, "b")?,
            c: need(c, "c")?,
            d: need(d, "d")?,
        }),
        QuantityArg::Mermin => {
            forbid(d, "d")?;
            Ok(Quantity::BellMermin {
                a: need(a, "a")?,
                b: need(b, "b")?,
                c: need(c, "c")?,
            })
        }
    }
}

fn quantity_params(params: &mut Map<String, Value>, quantity: &Quantity) {
    params.insert("quantity".into(), json!(quantity.label()));
    let names = ["a", "b", "c", "d"];
    for (name, dir) in names.iter().zip(quantity.directions()) {
        params.insert((*name).into(), json!(dir.components()));
    }
}

fn cmd_correlate(args: &CorrelateArgs) -> relcorr::Result<i32> {
    let correlator = args
        .physics
        .correlator(operator_of(args.operator), args.backend, args.x);
    let value = correlator.correlation(&args.a, &args.b)?;
    println!("{value:.12}");
    Ok(0)
}

fn cmd_sweep(args: &SweepArgs) -> relcorr::Result<i32> {
    let quantity = build_quantity(args.quantity, args.a, args.b, args.c, args.d)?;
    let curve = |operator: SpinOperator| -> relcorr::Result<Vec<f64>> {
        let sweep = sweep_x(
            quantity.label(),
            |x| quantity.evaluate(&args.physics.correlator(operator, args.backend, x)),
            args.x_min,
            args.x_max,
            args.steps,
        )?;
        Ok(sweep.points.iter().map(|p| p.value).collect())
    };
    let nw = match args.operator {
        CurveArg::Nw | CurveArg::Both => Some(curve(SpinOperator::NewtonWigner)?),
        CurveArg::Cz => None,
    };
    let cz = match args.operator {
        CurveArg::Cz | CurveArg::Both => Some(curve(SpinOperator::Czachor)?),
        CurveArg::Nw => None,
    };

    let xs = sweep_x("x", Ok, args.x_min, args.x_max, args.steps)?;
    let content = match args.format {
        FormatArg::Csv => {
            let mut text = String::from("x,value_nw,value_cz\n");
            for (i, point) in xs.points.iter().enumerate() {
                let pick = |curve: &Option<Vec<f64>>| {
                    curve.as_ref().map_or(String::new(), |v| format_float(v[i]))
                };
                text.push_str(&csv_line(&[format_float(point.x), pick(&nw), pick(&cz)]));
            }
            text
        }
        FormatArg::Json => {
            let rows: Vec<Value> = xs
                .points
                .iter()
                .enumerate()
                .map(|(i, point)| {
                    json!({
                        "x": point.x,
                        "value_nw": nw.as_ref().map(|v| v[i]),
                        "value_cz": cz.as_ref().map(|v| v[i]),
                    })
                })
                .collect();
            json_document(
                sweep_manifest("sweep", args, &quantity),
                "results",
                json!(rows),
            )
        }
    };
    write_out(&args.out, &content)?;
    Ok(0)
}

fn sweep_manifest(command: &str, args: &SweepArgs, quantity: &Quantity) -> Value {
    let mut params = Map::new();
    args.physics.manifest_params(&mut params);
    quantity_params(&mut params, quantity);
    params.insert(
        "operator".into(),
        json!(match args.operator {
            CurveArg::Nw => "nw",
            CurveArg::Cz => "cz",
            CurveArg::Both => "both",
        }),
    );
    params.insert("backend".into(), json!(backend_label(args.backend)));
    params.insert("x_min".into(), json!(args.x_min));
    params.insert("x_max".into(), json!(args.x_max));
    params.insert("steps".into(), json!(args.steps));
    output::manifest(command, params)
}

fn cmd_extrema(args: &ExtremaArgs) -> relcorr::Result<i32> {
    let quantity = build_quantity(args.quantity, args.a, args.b, args.c, args.d)?;
    let operator = operator_of(args.operator);
    let extrema = find_local_extrema(
        |x| quantity.evaluate(&args.physics.correlator(operator, args.backend, x)),
        args.x_min,
        args.x_max,
        args.coarse_steps,
        args.x_tol,
    )?;

    let content = match args.format {
        FormatArg::Csv => {
            let mut text = String::from("x_star,value,kind\n");
            for e in &extrema {
                text.push_str(&format!(
                    "{:.6},{:.9},{}\n",
                    e.x_star,
                    e.value,
                    e.kind.label()
                ));
            }
            text
        }
        FormatArg::Json => {
            let mut params = Map::new();
            args.physics.manifest_params(&mut params);
            quantity_params(&mut params, &quantity);
            params.insert("operator".into(), json!(operator.label()));
            params.insert("backend".into(), json!(backend_label(args.backend)));
            params.insert("x_min".into(), json!(args.x_min));
            params.insert("x_max".into(), json!(args.x_max));
            params.insert("coarse_steps".into(), json!(args.coarse_steps));
            params.insert("x_tol".into(), json!(args.x_tol));
            json_document(
                output::manifest("extrema", params),
                "results",
                json!(extrema),
            )
        }
    };
    write_out(&args.out, &content)?;
    Ok(0)
}

struct InequalityRun<'a> {
    command: &'a str,
    physics: &'a PhysicsFlags,
    operator: OperatorArg,
    backend: BackendArg,
    x: f64,
    dirs: &'a [(&'a str, Direction)],
}

fn inequality_content(
    run: &InequalityRun,
    result: &relcorr::InequalityResult,
    format: FormatArg,
) -> String {
    match format {
        FormatArg::Csv => {
            let mut text = String::from("value,bound,violated\n");
            text.push_str(&csv_line(&[
                format_float(result.value),
                format_float(result.bound),
                result.violated.to_string(),
            ]));
            text
        }
        FormatArg::Json => {
            let mut params = Map::new();
            run.physics.manifest_params(&mut params);
            params.insert("operator".into(), json!(operator_of(run.operator).label()));
            params.insert("backend".into(), json!(backend_label(run.backend)));
            params.insert("x".into(), json!(run.x));
            for (name, dir) in run.dirs {
                params.insert((*name).into(), json!(dir.components()));
            }
            json_document(
                output::manifest(run.command, params),
                "result",
                serde_json::to_value(result).expect("serializable result"),
            )
        }
    }
}

fn cmd_chsh(args: &ChshArgs) -> relcorr::Result<i32> {
    let correlator = args
        .physics
        .correlator(operator_of(args.operator), args.backend, args.x);
    let result = chsh(&correlator, &args.a, &args.b, &args.c, &args.d)?;
    let run = InequalityRun {
        command: "chsh",
        physics: &args.physics,
        operator: args.operator,
        backend: args.backend,
        x: args.x,
        dirs: &[("a", args.a), ("b", args.b), ("c", args.c), ("d", args.d)],
    };
    let content = inequality_content(&run, &result, args.format);
    write_out(&args.out, &content)?;
    Ok(0)
}

fn cmd_mermin(args: &MerminArgs) -> relcorr::Result<i32> {
    let correlator = args
        .physics
        .correlator(operator_of(args.operator), args.backend, args.x);
    let result = bell_mermin(&correlator, &args.a, &args.b, &args.c)?;
    let run = InequalityRun {
        command: "mermin",
        physics: &args.physics,
        operator: args.operator,
        backend: args.backend,
        x: args.x,
        dirs: &[("a", args.a), ("b", args.b), ("c", args.c)],
    };
    let content = inequality_content(&run, &result, args.format);
    write_out(&args.out, &content)?;
    Ok(0)
}

fn cmd_optimize(args: &OptimizeArgs) -> relcorr::Result<i32> {
    let inequality = match args.inequality {
        InequalityArg::Chsh => Inequality::Chsh,
        InequalityArg::Mermin => Inequality::BellMermin,
    };
    let problem = OptimizeProblem {
        inequality,
        spin: args.physics.spin(),
        operator: operator_of(args.operator),
        family: args.physics.family(),
        mass: args.physics.mass,
    };

    let supplied = [args.a, args.b, args.c, args.d];
    let given: Vec<Direction> = supplied.iter().flatten().copied().collect();
    let initial = if given.is_empty() {
        None
    } else if given.len() == inequality.direction_count()
        && supplied[..inequality.direction_count()]
            .iter()
            .all(Option::is_some)
    {
        Some(given)
    } else {
        return Err(Error::InvalidArgument(format!(
            "{} takes directions --a..--{}; pass all of them or none",
            inequality.label(),
            ["a", "b", "c", "d"][inequality.direction_count() - 1],
        )));
    };

    let (x_star, directions, value) = match args.x {
        Some(x) => {
            if args.fix_directions {
                return Err(Error::InvalidArgument(
                    "--fix-directions needs an x range to search".into(),
                ));
            }
            let best =
                optimize_directions(&problem, x, args.restarts, args.seed, initial.as_deref())?;
            (x, best.directions, best.value)
        }
        None => {
            let best = optimize_joint(
                &problem,
                (args.x_min, args.x_max),
                args.restarts,
                args.seed,
                initial.as_deref(),
                args.fix_directions,
            )?;
            (best.x_star, best.directions, best.value)
        }
    };

    let content = match args.format {
        FormatArg::Csv => {
            let mut text = String::from("x_star,value\n");
            text.push_str(&csv_line(&[format_float(x_star), format_float(value)]));
            text
        }
        FormatArg::Json => {
            let mut params = Map::new();
            args.physics.manifest_params(&mut params);
            params.insert("inequality".into(), json!(inequality.label()));
            params.insert("operator".into(), json!(operator_of(args.operator).label()));
            match args.x {
                Some(x) => {
                    params.insert("x".into(), json!(x));
                }
                None => {
                    params.insert("x_min".into(), json!(args.x_min));
                    params.insert("x_max".into(), json!(args.x_max));
                }
            }
            params.insert("restarts".into(), json!(args.restarts));
            params.insert("seed".into(), json!(args.seed));
            params.insert("fix_directions".into(), json!(args.fix_directions));
            if let Some(dirs) = &initial {
                let names = ["a", "b", "c", "d"];
                for (name, dir) in names.iter().zip(dirs) {
                    params.insert((*name).into(), json!(dir.components()));
                }
            }
            let dirs: Vec<[f64; 3]> = directions.iter().map(Direction::components).collect();
            json_document(
                output::manifest("optimize", params),
                "result",
                json!({
                    "x_star": x_star,
                    "value": value,
                    "bound": inequality.bound(),
                    "violated": inequality.is_violated(value),
                    "directions": dirs,
                }),
            )
        }
    };
    write_out(&args.out, &content)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> relcorr::Result<i32> {
    let report = verify_equivalence(args.samples, (args.x_min, args.x_max), args.seed)?;
    let content = match args.format {
        None => format!(
            "checked 5 closed forms on {} random configurations: max discrepancy {:.3e} (tolerance {:.0e}): {}\n",
            report.samples,
            report.max_discrepancy,
            report.tolerance,
            if report.passed { "PASS" } else { "FAIL" },
        ),
        Some(FormatArg::Csv) => {
            let mut text = String::from("samples,max_discrepancy,tolerance,passed\n");
            text.push_str(&csv_line(&[
                report.samples.to_string(),
                format!("{:e}", report.max_discrepancy),
                format!("{:e}", report.tolerance),
                report.passed.to_string(),
            ]));
            text
        }
        Some(FormatArg::Json) => {
            let mut params = Map::new();
            params.insert("samples".into(), json!(args.samples));
            params.insert("x_min".into(), json!(args.x_min));
            params.insert("x_max".into(), json!(args.x_max));
            params.insert("seed".into(), json!(args.seed));
            json_document(
                output::manifest("verify", params),
                "report",
                serde_json::to_value(&report).expect("serializable report"),
            )
        }
    };
    write_out(&args.out, &content)?;
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_figure(args: &FigureArgs) -> relcorr::Result<i32> {
    let rows = figure_dataset(args.number, args.x_max, args.steps)?;
    let content = match args.format {
        FormatArg::Csv => {
            let mut text = String::from("x,value_nw,value_cz\n");
            for row in &rows {
                text.push_str(&csv_line(&[
                    format_float(row.x),
                    format_float(row.value_nw),
                    format_float(row.value_cz),
                ]));
            }
            text
        }
        FormatArg::Json => {
            let config = figure_config(args.number)?;
            let mut params = Map::new();
            params.insert("figure".into(), json!(args.number));
            params.insert("spin".into(), json!(spin_label(config.spin)));
            params.insert("quantity".into(), json!(config.quantity.label()));
            if let MomentumFamily::CenterOfMass { axis } = config.family {
                params.insert("momenta".into(), json!("cm"));
                params.insert("n".into(), json!(axis.components()));
            } else {
                params.insert("momenta".into(), json!("eq13"));
            }
            let names = ["a", "b", "c", "d"];
            for (name, dir) in names.iter().zip(config.quantity.directions()) {
                params.insert((*name).into(), json!(dir.components()));
            }
            params.insert("x_max".into(), json!(args.x_max));
            params.insert("steps".into(), json!(args.steps));
            json_document(output::manifest("figure", params), "results", json!(rows))
        }
    };
    write_out(&args.out, &content)?;
    Ok(0)
}
