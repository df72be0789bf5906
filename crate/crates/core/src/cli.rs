//! The `distinguish` command line. Output is line-oriented `key=value`
//! text; status 0 means every check passed, 1 a violated check (with a
//! `violation=` line) or an exhausted search limit, 2 a usage or input
//! error.

use std::fmt::Write as _;
use std::fs;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::distinguish::{
    distinguishing_number, union_complete_distinguishing, DistinguishError, SearchLimits,
};
use crate::experiments::{
    circle_window_check, cylinder_injectivity_experiment, Alignment, DEFAULT_CYLINDER_BUDGET,
};
use crate::graph::{
    automorphism_group, colored_automorphism, group_order, orbits, parse_coloring, parse_graph,
    FiniteGraph, DEFAULT_GROUP_CAP,
};
use crate::shift::{check_condition_c, parse_sample, parse_sequence, trajectory, ColoringFn};
use crate::smooth::{min_color_transversal, parse_system, smooth_coloring, SubsetAssignment};

pub const FORMATS: &str = "\
graph file:
  p <vertex_count>
  e <u> <v>            one line per undirected edge, 0 <= u, v < vertex_count
coloring file:
  v <vertex> <color>   unlisted vertices take color 0
sequence spec (one line):
  seq n=<N> left=(a,b,..) middle=[c,d,..] start=<i> right=(e,f,..)
  gamma m=<m> n=<N> shift=<s>
sample file:
  one sequence spec per line
system file:
  points <N>
  inv (a b)(c d) ...   one line per involution; `inv ()` is the identity
`#` starts a comment in every file.
";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Violation(String),
    Limit(String),
}

type Step = Result<String, (String, Failure)>;

#[derive(Parser, Debug)]
#[command(
    name = "distinguish",
    version,
    about = "Distinguishing colorings of finite graphs and shift-space experiments",
    arg_required_else_help = true
)]
struct Cli {
    /// Print the input file grammars
    #[arg(long)]
    formats: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distinguishing number of a graph, with a witness coloring
    Distnum {
        graph: String,
        #[arg(long, default_value_t = crate::distinguish::DEFAULT_COLORING_BUDGET)]
        budget: u64,
    },
    /// Automorphism group order and orbits
    Aut {
        graph: String,
        /// Also list every automorphism
        #[arg(long)]
        list: bool,
    },
    /// Check that a coloring is distinguishing
    Verify { graph: String, coloring: String },
    /// Color trajectory of a sequence over a window
    ShiftColor {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value = "-32,32", value_parser = parse_range, allow_hyphen_values = true)]
        window: (i64, i64),
        #[arg(long, value_enum, default_value_t = ColoringArg::Fphi)]
        coloring: ColoringArg,
    },
    /// Trajectory injectivity and reflection avoidance on a sample
    CheckC {
        #[arg(long)]
        sample: String,
        #[arg(long, default_value_t = 32)]
        window: i64,
        #[arg(long, value_enum, default_value_t = ColoringArg::Fphi)]
        coloring: ColoringArg,
    },
    /// Smooth-case coloring of a component system
    Smooth {
        #[arg(long)]
        system: String,
    },
    /// Minimum-color transversal of a colored component system
    Transversal {
        #[arg(long)]
        system: String,
        #[arg(long)]
        coloring: String,
    },
    /// Window check of the rotation coloring on the circle
    Circle {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        bases: Vec<f64>,
        #[arg(long)]
        window: i64,
        #[arg(long)]
        seed: u64,
    },
    /// Exhaustive cylinder experiment for the spin coloring
    Cylinder {
        #[arg(long)]
        n: u32,
        #[arg(long = "L")]
        length: usize,
        #[arg(long, default_value_t = DEFAULT_CYLINDER_BUDGET)]
        budget: u64,
    },
    /// Distinguishing number of m disjoint copies of K_q
    UnionComplete {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ColoringArg {
    Fphi,
    Letter,
    Constant,
}

impl From<ColoringArg> for ColoringFn {
    fn from(arg: ColoringArg) -> Self {
        match arg {
            ColoringArg::Fphi => ColoringFn::FPhi,
            ColoringArg::Letter => ColoringFn::Letter,
            ColoringArg::Constant => ColoringFn::Constant(0),
        }
    }
}

fn parse_range(raw: &str) -> Result<(i64, i64), String> {
    let (a, b) = raw
        .split_once(',')
        .ok_or_else(|| format!("expected `a,b`, found `{raw}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad bound `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad bound `{b}`"))?;
    if a > b {
        return Err(format!("empty window {a},{b}"));
    }
    Ok((a, b))
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    if cli.formats {
        return Outcome {
            status: 0,
            stdout: FORMATS.to_string(),
            stderr: String::new(),
        };
    }
    let Some(command) = cli.command else {
        return Outcome {
            status: 2,
            stdout: String::new(),
            stderr: "error: a subcommand is required\n".into(),
        };
    };
    match dispatch(command) {
        Ok(stdout) => Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err((stdout, Failure::Violation(line))) => Outcome {
            status: 1,
            stdout: format!("{stdout}violation={line}\n"),
            stderr: String::new(),
        },
        Err((stdout, Failure::Limit(message))) => Outcome {
            status: 1,
            stdout,
            stderr: format!("error: {message}\n"),
        },
        Err((stdout, Failure::Usage(message))) => Outcome {
            status: 2,
            stdout,
            stderr: format!("error: {message}\n"),
        },
    }
}

fn usage(e: impl std::fmt::Display) -> (String, Failure) {
    (String::new(), Failure::Usage(e.to_string()))
}

fn limit(e: impl std::fmt::Display) -> (String, Failure) {
    (String::new(), Failure::Limit(e.to_string()))
}

fn read(path: &str) -> Result<String, (String, Failure)> {
    fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
}

fn load_graph(path: &str) -> Result<FiniteGraph, (String, Failure)> {
    parse_graph(&read(path)?).map_err(|e| usage(format!("{path}: {e}")))
}

fn dispatch(command: Command) -> Step {
    match command {
        Command::Distnum { graph, budget } => distnum(&graph, budget),
        Command::Aut { graph, list } => aut(&graph, list),
        Command::Verify { graph, coloring } => verify(&graph, &coloring),
        Command::ShiftColor {
            seq,
            window,
            coloring,
        } => shift_color(&seq, window, coloring.into()),
        Command::CheckC {
            sample,
            window,
            coloring,
        } => check_c(&sample, window, coloring.into()),
        Command::Smooth { system } => smooth(&system),
        Command::Transversal { system, coloring } => transversal(&system, &coloring),
        Command::Circle {
            bases,
            window,
            seed,
        } => circle(&bases, window, seed),
        Command::Cylinder { n, length, budget } => cylinder(n, length, budget),
        Command::UnionComplete { m, q } => {
            let d = union_complete_distinguishing(m, q).map_err(|e| match e {
                DistinguishError::Overflow { .. } => limit(e),
                _ => usage(e),
            })?;
            Ok(format!("D={d}\n"))
        }
    }
}

fn distnum(path: &str, budget: u64) -> Step {
    let graph = load_graph(path)?;
    let limits = SearchLimits {
        coloring_budget: budget,
        ..SearchLimits::default()
    };
    let result = distinguishing_number(&graph, limits).map_err(|e| match e {
        DistinguishError::Graph(crate::graph::GraphError::EmptyGraph) => usage(e),
        _ => limit(e),
    })?;
    Ok(format!("D={}\n{}", result.number, result.witness.to_text()))
}

fn aut(path: &str, list: bool) -> Step {
    let graph = load_graph(path)?;
    let order = group_order(&graph, DEFAULT_GROUP_CAP).map_err(limit)?;
    let mut out = format!("order={order}\n");
    let group = automorphism_group(&graph, DEFAULT_GROUP_CAP).map_err(limit)?;
    for orbit in orbits(&graph, &group).map_err(limit)? {
        let _ = writeln!(out, "orbit={}", join(&orbit));
    }
    if list {
        for perm in &group {
            let _ = writeln!(out, "automorphism={perm}");
        }
    }
    Ok(out)
}

fn verify(graph_path: &str, coloring_path: &str) -> Step {
    let graph = load_graph(graph_path)?;
    let coloring = parse_coloring(&read(coloring_path)?, graph.vertex_count())
        .map_err(|e| usage(format!("{coloring_path}: {e}")))?;
    let witness = colored_automorphism(&graph, &coloring).map_err(usage)?;
    let colors = format!("colors={}\n", coloring.distinct_colors());
    match witness {
        None => Ok(format!("{colors}distinguishing=true\n")),
        Some(perm) => Err((
            format!("{colors}distinguishing=false\n"),
            Failure::Violation(format!("preserved_by {perm}")),
        )),
    }
}

fn shift_color(spec: &str, (lo, hi): (i64, i64), coloring: ColoringFn) -> Step {
    let alpha = parse_sequence(spec).map_err(usage)?;
    let window = trajectory(coloring, &alpha, lo, hi).map_err(usage)?;
    let mut out = String::new();
    for (i, c) in window.indices() {
        let _ = writeln!(out, "i={i} color={c} {}", coloring.render(c));
    }
    Ok(out)
}

fn check_c(path: &str, window: i64, coloring: ColoringFn) -> Step {
    let sample = parse_sample(&read(path)?).map_err(|e| usage(format!("{path}: {e}")))?;
    let report = check_condition_c(coloring, &sample, window).map_err(usage)?;
    let mode = match report.mode {
        crate::shift::CheckMode::Exact => "exact".to_string(),
        crate::shift::CheckMode::Windowed { radius } => format!("windowed radius={radius}"),
    };
    let out = format!(
        "coloring={}\nmode={mode}\npairs_checked={}\ninjectivity_violations={}\nreflection_violations={}\nundecided_pairs={}\nverdict={}\n",
        coloring.name(),
        report.pairs_checked,
        report.count(crate::shift::ViolationKind::Injectivity),
        report.count(crate::shift::ViolationKind::Reflection),
        report.undecided.len(),
        report.verdict(),
    );
    if let Some(v) = report.violations.first() {
        return Err((
            out,
            Failure::Violation(format!("{} {} {} offset={}", v.kind, v.first, v.second, v.offset)),
        ));
    }
    if let Some((kind, i, j)) = report.undecided.first() {
        return Err((out, Failure::Violation(format!("undecided {kind} {i} {j}"))));
    }
    Ok(out)
}

fn smooth(path: &str) -> Step {
    let system = parse_system(&read(path)?).map_err(|e| usage(format!("{path}: {e}")))?;
    let transversal = system.least_transversal();
    let closed = system.close_for(&transversal).map_err(usage)?;
    let assignment = SubsetAssignment::identity(&closed);
    let coloring = smooth_coloring(&closed, &transversal, &assignment).map_err(usage)?;
    let graph = closed.path_union_graph(&transversal).map_err(usage)?;
    let mut out = format!(
        "points={}\nclasses={}\nadded_generators={}\nmodulus={}\ntransversal={}\n{}",
        system.point_count(),
        system.classes().len(),
        closed.involutions().len() - system.involutions().len(),
        assignment.modulus(),
        join(transversal.points()),
        coloring.to_text(),
    );
    let recovered = min_color_transversal(&closed, &coloring).map_err(usage)?;
    if recovered.points != *transversal.points() || !recovered.is_exact() {
        return Err((
            out,
            Failure::Violation(format!("transversal_not_recovered {}", join(&recovered.points))),
        ));
    }
    if let Some(perm) = colored_automorphism(&graph, &coloring).map_err(usage)? {
        out.push_str("distinguishing=false\n");
        return Err((out, Failure::Violation(format!("preserved_by {perm}"))));
    }
    out.push_str("distinguishing=true\n");
    Ok(out)
}

fn transversal(system_path: &str, coloring_path: &str) -> Step {
    let system =
        parse_system(&read(system_path)?).map_err(|e| usage(format!("{system_path}: {e}")))?;
    let coloring = parse_coloring(&read(coloring_path)?, system.point_count())
        .map_err(|e| usage(format!("{coloring_path}: {e}")))?;
    let report = min_color_transversal(&system, &coloring).map_err(usage)?;
    let out = format!(
        "transversal={}\ntied_classes={}\n",
        join(&report.points),
        join(&report.tied_classes)
    );
    match report.tied_classes.first() {
        None => Ok(out),
        Some(c) => Err((out, Failure::Violation(format!("tie class={c}")))),
    }
}

fn describe(alignment: Alignment) -> String {
    match alignment {
        Alignment::Translate { first, second } => format!("translate {first} {second}"),
        Alignment::Reflect { first, second } => format!("reflect {first} {second}"),
        Alignment::SelfReflect { base, center } => format!("self_reflect {base} center={center}"),
    }
}

fn circle(bases: &[f64], window: i64, seed: u64) -> Step {
    let report = circle_window_check(bases, window, seed).map_err(usage)?;
    let mut out = format!(
        "checks={}\nseparated={}\nundecided={}\n",
        report.checks.len(),
        report.checks.len() - report.undecided(),
        report.undecided()
    );
    for check in &report.checks {
        let index = check
            .separating_index
            .map_or_else(|| "none".to_string(), |k| k.to_string());
        let _ = writeln!(out, "check={} separating_index={index}", describe(check.alignment));
    }
    match report.checks.iter().find(|c| c.separating_index.is_none()) {
        None => {
            out.push_str("verdict=pass\n");
            Ok(out)
        }
        Some(c) => {
            out.push_str("verdict=undecided\n");
            Err((out, Failure::Violation(format!("undecided {}", describe(c.alignment)))))
        }
    }
}

fn cylinder(n: u32, length: usize, budget: u64) -> Step {
    let report = cylinder_injectivity_experiment(n, length, budget).map_err(|e| match e {
        crate::experiments::ExperimentError::BudgetExceeded { .. } => limit(e),
        _ => usage(e),
    })?;
    let palette: Vec<u32> = report.palette.iter().copied().collect();
    let mut out = format!(
        "n={n}\nL={length}\npoints={}\npairs_checked={}\ncollisions={}\nreflection_collisions={}\npalette={}\npalette_size={}\ndistinct_words={}\nentropy_estimate={:.6}\n",
        report.points,
        report.condition.pairs_checked,
        report.collisions(),
        report.reflection_collisions(),
        join(&palette),
        palette.len(),
        report.distinct_words(),
        report.entropy_estimate(),
    );
    if report.passes() {
        out.push_str("verdict=pass\n");
        Ok(out)
    } else {
        out.push_str("verdict=fail\n");
        let reason = match report.condition.violations.first() {
            Some(v) => format!("{} {} {}", v.kind, v.first, v.second),
            None => "bounds".to_string(),
        };
        Err((out, Failure::Violation(reason)))
    }
}

fn join<'a, T: std::fmt::Display + 'a>(items: impl IntoIterator<Item = &'a T>) -> String {
    items
        .into_iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
