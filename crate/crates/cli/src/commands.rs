use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use limpack::bounds::{bound_sheet_for, bound_sheet_with_average};
use limpack::cubic::construct_two_limited;
use limpack::exact::{max_k_limited_with, min_tuple_dominating_with, SolverOptions};
use limpack::generators::{gen_cycle, gen_named, gen_projective, gen_random_regular, NamedFamily};
use limpack::greedy::greedy_k_limited;
use limpack::io::{format_vertex_set, parse_graph, parse_vertex_set, serialize_graph, ParsedGraph};
use limpack::random::{auto_lll_parameters, lll_resample, sample_and_repair};
use limpack::verify::{verify_k_limited, verify_tuple_dominating, verify_typed_two_limited};
use limpack::Error;

use crate::args::{BoundsArgs, ConstructArgs, Family, GenArgs, Method, SolveArgs, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub type Outcome = Result<u8, Failure>;

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: anyhow!(msg.into()),
    }
}

fn input(error: anyhow::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        error,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible(_) | Error::Internal(_) => EXIT_NEGATIVE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

fn lib_error(path: &Path, e: Error) -> Failure {
    let code = Failure::from(e.clone()).code;
    Failure {
        code,
        error: anyhow::Error::new(e).context(path.display().to_string()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(input)
}

fn read_graph(path: &Path) -> Result<ParsedGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| lib_error(path, e))
}

fn read_simple(path: &Path) -> Result<limpack::Graph, Failure> {
    read_graph(path)?
        .into_simple()
        .map_err(|e| lib_error(path, e))
}

fn positive(name: &str, value: usize) -> Result<usize, Failure> {
    if value == 0 {
        Err(usage(format!("--{name} must be at least 1")))
    } else {
        Ok(value)
    }
}

fn required<T>(value: Option<T>, flag: &str, context: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("{context} requires --{flag}")))
}

pub fn gen(args: &GenArgs) -> Outcome {
    let copies = positive("copies", args.copies)?;
    let what = format!("--family {:?}", args.family).to_lowercase();
    let g = match args.family {
        Family::Cycle => gen_cycle(required(args.n, "n", &what)?)?,
        Family::H6 => gen_named(NamedFamily::H6),
        Family::Petersen => gen_named(NamedFamily::Petersen),
        Family::K4 => gen_named(NamedFamily::K4),
        Family::Projective => {
            let q = required(args.q, "q", &what)?;
            let k = positive("k", required(args.k, "k", &what)?)?;
            gen_projective(q, k)?
        }
        Family::RandomRegular => {
            let n = required(args.n, "n", "--family random-regular")?;
            let r = required(args.r, "r", "--family random-regular")?;
            gen_random_regular(n, r, args.seed)?
        }
    };
    let g = g.repeat(copies);
    fs::write(&args.out, serialize_graph(&g))
        .with_context(|| format!("cannot write {}", args.out.display()))
        .map_err(input)?;
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    Ok(EXIT_OK)
}

pub fn solve(args: &SolveArgs) -> Outcome {
    let opts = SolverOptions {
        max_vertices: args.limit,
    };
    let k = args.k.map(|k| positive("k", k)).transpose()?;
    let l = args.l.map(|l| positive("l", l)).transpose()?;
    let g = read_simple(&args.file)?;
    let result = if args.dominating {
        min_tuple_dominating_with(&g, l.unwrap_or(1), &opts)
    } else {
        max_k_limited_with(&g, k.unwrap_or(1), &opts)
    };
    print!("{}", result.map_err(|e| lib_error(&args.file, e))?);
    Ok(EXIT_OK)
}

pub fn construct(args: &ConstructArgs) -> Outcome {
    let k = positive("k", args.k)?;
    if args.trace.is_some() && args.method != Method::Cubic2 {
        return Err(usage("--trace applies only to --method cubic2"));
    }
    if args.p.is_some() && !matches!(args.method, Method::SampleRepair | Method::Lll) {
        return Err(usage("--p applies only to --method sample-repair or lll"));
    }
    if let Some(p) = args.p {
        if !(0.0..=1.0).contains(&p) {
            return Err(usage(format!("--p {p} is not in [0, 1]")));
        }
    }
    if args.max_rounds == 0 {
        return Err(usage("--max-rounds must be at least 1"));
    }
    if args.method == Method::Cubic2 && k != 2 {
        return Err(usage("--method cubic2 builds 2-limited sets; use --k 2"));
    }
    let file = &args.file;
    let mut out = String::new();
    let mut code = EXIT_OK;
    match args.method {
        Method::Cubic2 => {
            let tm = read_graph(file)?.into_typed();
            let (x, trace) = construct_two_limited(&tm).map_err(|e| lib_error(file, e))?;
            if let Some(path) = &args.trace {
                fs::write(path, trace.to_string())
                    .with_context(|| format!("cannot write {}", path.display()))
                    .map_err(input)?;
            }
            writeln!(out, "size: {}", x.len()).unwrap();
            writeln!(out, "steps: {}", trace.steps.len()).unwrap();
            writeln!(out, "witness: {}", format_vertex_set(&x)).unwrap();
        }
        Method::Greedy => {
            let g = read_simple(file)?;
            let x = greedy_k_limited(&g, k)?;
            writeln!(out, "size: {}", x.len()).unwrap();
            writeln!(out, "witness: {}", format_vertex_set(&x)).unwrap();
        }
        Method::SampleRepair => {
            let g = read_simple(file)?;
            out = sample_and_repair(&g, k, args.p, args.seed)?.to_string();
        }
        Method::Lll => {
            let g = read_simple(file)?;
            let mut params = auto_lll_parameters(&g, k)?;
            if let Some(p) = args.p {
                params.p = p;
            }
            let report = lll_resample(&g, k, Some(&params), args.seed, args.max_rounds)?;
            if !report.converged {
                eprintln!(
                    "resampling did not converge within {} rounds; reporting the repaired last sample",
                    args.max_rounds
                );
                code = EXIT_NEGATIVE;
            }
            out = report.to_string();
        }
    }
    print!("{out}");
    Ok(code)
}

/// A vertex list, or the `witness:` line of a report.
fn parse_certificate(text: &str) -> Result<Vec<usize>, Error> {
    match text.lines().find_map(|l| l.trim().strip_prefix("witness:")) {
        Some(rest) => parse_vertex_set(rest),
        None => parse_vertex_set(text),
    }
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let k = args.k.map(|k| positive("k", k)).transpose()?;
    let l = args.l.map(|l| positive("l", l)).transpose()?;
    let parsed = read_graph(&args.graph)?;
    let set = parse_certificate(&read(&args.packing)?).map_err(|e| lib_error(&args.packing, e))?;
    let report = if args.dominating {
        let g = parsed
            .into_simple()
            .map_err(|e| lib_error(&args.graph, e))?;
        verify_tuple_dominating(&g, &set, l.unwrap_or(1))
    } else {
        let k = k.unwrap_or(1);
        match parsed {
            ParsedGraph::Typed(tm) if tm.c_edge_count() > 0 => {
                if k != 2 {
                    return Err(usage(
                        "graphs with c-edges are checked as 2-limited sets; use --k 2",
                    ));
                }
                verify_typed_two_limited(&tm, &set)
            }
            other => {
                let g = other.into_simple().map_err(|e| lib_error(&args.graph, e))?;
                verify_k_limited(&g, &set, k)
            }
        }
    }
    .map_err(|e| lib_error(&args.packing, e))?;
    print!("{report}");
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn bounds(args: &BoundsArgs) -> Outcome {
    let k = positive("k", args.k)?;
    let numbers = [args.n, args.maxdeg, args.mindeg];
    let sheet = match &args.file {
        Some(path) => {
            if numbers.iter().any(Option::is_some) || args.avgdeg.is_some() {
                return Err(usage("give either FILE or --n --maxdeg --mindeg, not both"));
            }
            let g = read_graph(path)?.into_typed().underlying_graph();
            bound_sheet_for(&g, k)?
        }
        None => {
            let [Some(n), Some(maxdeg), Some(mindeg)] = numbers else {
                return Err(usage(
                    "without FILE, --n, --maxdeg and --mindeg are all required",
                ));
            };
            let average = args.avgdeg.or((maxdeg == mindeg).then_some(maxdeg as f64));
            bound_sheet_with_average(n, maxdeg, mindeg, k, average)?
        }
    };
    print!("{sheet}");
    Ok(EXIT_OK)
}
