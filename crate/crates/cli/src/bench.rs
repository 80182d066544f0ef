//! The `paper` benchmark suite: the example and extremal families, each
//! solved exactly where feasible and attacked with every constructor.

use std::fmt::Write as _;
use std::time::Instant;

use limpack::bounds::{bound_sheet_for, BoundSheet};
use limpack::cubic::construct_two_limited;
use limpack::exact::{max_k_limited, DEFAULT_MAX_VERTICES};
use limpack::generators::{gen_cycle, gen_named, gen_projective, gen_random_regular, NamedFamily};
use limpack::greedy::greedy_k_limited;
use limpack::random::{lll_resample, sample_and_repair, DEFAULT_MAX_ROUNDS};
use limpack::verify::verify_k_limited;
use limpack::{Graph, Result, TypedMultigraph};

use crate::commands::{Outcome, EXIT_NEGATIVE, EXIT_OK};

const SEED: u64 = 0;
const TOLERANCE: f64 = 1e-9;

struct Instance {
    family: String,
    graph: Graph,
    k: usize,
}

fn instances() -> Result<Vec<Instance>> {
    let named = |f: NamedFamily| gen_named(f);
    let mut out = Vec::new();
    let mut push = |family: String, graph: Graph, k: usize| out.push(Instance { family, graph, k });
    push("cycle-5".into(), gen_cycle(5)?, 1);
    for k in [1, 2] {
        push("cycle-6".into(), gen_cycle(6)?, k);
    }
    for m in 1..=3 {
        push(format!("h6x{m}"), named(NamedFamily::H6).repeat(m), 2);
    }
    for k in 1..=3 {
        push("petersen".into(), named(NamedFamily::Petersen), k);
    }
    push("k4".into(), named(NamedFamily::K4), 2);
    for (q, k) in [(2, 1), (3, 1), (2, 2)] {
        push(format!("projective-q{q}-k{k}"), gen_projective(q, k)?, k);
    }
    push("random-cubic-20".into(), gen_random_regular(20, 3, 1)?, 2);
    push(
        "random-10-regular-200".into(),
        gen_random_regular(200, 10, 1)?,
        5,
    );
    Ok(out)
}

fn best_lower(sheet: &BoundSheet) -> f64 {
    sheet.lower_bounds().map(|b| b.value).fold(0.0, f64::max)
}

pub fn run(no_timing: bool) -> Outcome {
    let mut out = String::new();
    let mut header = "family\tn\tk\tmethod\tsize\texact\tlower\tupper\tcheck".to_string();
    if !no_timing {
        header.push_str("\tms");
    }
    writeln!(out, "{header}").unwrap();
    let mut failures = 0;
    for inst in instances()? {
        let g = &inst.graph;
        let (n, k) = (g.vertex_count(), inst.k);
        let sheet = bound_sheet_for(g, k)?;
        let (lower, upper) = (best_lower(&sheet), sheet.upper_bound());

        let mut rows: Vec<(&str, usize, f64)> = Vec::new();
        let mut timed = |name, f: &mut dyn FnMut() -> Result<Vec<usize>>| -> Result<()> {
            let start = Instant::now();
            let x = f()?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            if !verify_k_limited(g, &x, k)?.valid {
                return Err(limpack::Error::Internal(format!(
                    "{name} returned an invalid set"
                )));
            }
            rows.push((name, x.len(), ms));
            Ok(())
        };
        if n <= DEFAULT_MAX_VERTICES {
            timed("exact", &mut || Ok(max_k_limited(g, k)?.witness))?;
        }
        timed("greedy", &mut || greedy_k_limited(g, k))?;
        timed("sample-repair", &mut || {
            Ok(sample_and_repair(g, k, None, SEED)?
                .packing
                .vertices()
                .to_vec())
        })?;
        timed("lll", &mut || {
            Ok(lll_resample(g, k, None, SEED, DEFAULT_MAX_ROUNDS)?
                .packing
                .vertices()
                .to_vec())
        })?;
        if k == 2 && g.max_degree() <= 3 {
            timed("cubic2", &mut || {
                Ok(construct_two_limited(&TypedMultigraph::from_graph(g))?.0)
            })?;
        }

        let exact = rows.iter().find(|r| r.0 == "exact").map(|r| r.1);
        for &(method, size, ms) in &rows {
            let mut ok = size as f64 <= upper + TOLERANCE;
            if let Some(e) = exact {
                ok &= size <= e && e as f64 + TOLERANCE >= lower;
            }
            if method == "cubic2" {
                ok &= 3 * size >= n;
            }
            if !ok {
                failures += 1;
            }
            let exact_col = exact.map_or("-".to_string(), |e| e.to_string());
            write!(
                out,
                "{}\t{n}\t{k}\t{method}\t{size}\t{exact_col}\t{lower:.4}\t{upper:.4}\t{}",
                inst.family,
                if ok { "ok" } else { "FAIL" }
            )
            .unwrap();
            if !no_timing {
                write!(out, "\t{ms:.3}").unwrap();
            }
            writeln!(out).unwrap();
        }
    }
    print!("{out}");
    Ok(if failures == 0 {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}
