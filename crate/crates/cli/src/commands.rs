//! Subcommand bodies. Each returns the process exit status.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use iquandle::analysis::{
    aut_upper_bound, automorphism_count, maximal_geodesics, predicted_maximal_geodesic_sizes,
};
use iquandle::montesinos::{
    audit_displacements, build_model, commuting_identity_words, presentation,
    rewritten_presentation,
};
use iquandle::winker::isomorphic;
use iquandle::words::apply_word;
use iquandle::{enumerate, BudgetExceeded, FiniteQuandle, MontesinosParams, Presentation};

use crate::dot::to_dot;
use crate::presentation_file::parse_presentation;
use crate::record::{presentation_hash, BudgetStatus, MatchFlags, ParamsRecord, ResultRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// A failure that ends the command with the given exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn budget(e: BudgetExceeded) -> Self {
        Failure {
            code: EXIT_BUDGET,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Turns a command result into an exit status, reporting failures on stderr.
pub fn finish(r: CmdResult) -> i32 {
    match r {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn io_fail(e: io::Error) -> Failure {
    Failure::input(format!("output error: {e}"))
}

fn params(p: i64, q: i64, e: i64) -> Result<MontesinosParams, Failure> {
    MontesinosParams::new(p, q, e).map_err(|e| Failure::input(e.to_string()))
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn sizes_u64(q: &FiniteQuandle) -> Vec<u64> {
    q.component_sizes().into_iter().map(|s| s as u64).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// `sizes` (largest first) as `count×size` groups, e.g. `1×70, 5×28`.
pub fn size_histogram(sizes: &[usize]) -> String {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &s in sizes {
        match groups.last_mut() {
            Some((size, count)) if *size == s => *count += 1,
            _ => groups.push((s, 1)),
        }
    }
    groups
        .iter()
        .map(|(s, c)| format!("{c}×{s}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn cmd_enum(
    input: &Path,
    max_vertices: usize,
    dot: Option<&Path>,
    json: Option<&Path>,
    out: &mut impl Write,
) -> CmdResult {
    let pres = load_presentation(input)?;
    let mut record = ResultRecord {
        params: None,
        presentation_hash: presentation_hash(&pres),
        budget: BudgetStatus::Ok,
        order: None,
        component_sizes: None,
        predicted_order: None,
        predicted_component_sizes: None,
        matches: MatchFlags::default(),
        elapsed_us: None,
    };
    let q = match enumerate(&pres, max_vertices) {
        Ok(q) => q,
        Err(e) => {
            if let Some(path) = json {
                record.budget = BudgetStatus::Exceeded;
                write_file(path, &(record.to_line() + "\n"))?;
            }
            return Err(Failure::budget(e));
        }
    };
    let sizes = sizes_u64(&q);
    writeln!(out, "order {}", q.order()).map_err(io_fail)?;
    writeln!(out, "components {}", join(&sizes)).map_err(io_fail)?;
    if let Some(path) = dot {
        write_file(path, &to_dot(&q))?;
    }
    if let Some(path) = json {
        record.order = Some(q.order() as u64);
        record.component_sizes = Some(sizes);
        write_file(path, &(record.to_line() + "\n"))?;
    }
    Ok(EXIT_OK)
}

/// What `montesinos` and `sweep` compute for one instance.
pub struct Instance {
    pub record: ResultRecord,
    pub quandle: Option<FiniteQuandle>,
    /// Human-readable check results, one per line.
    pub report: Vec<String>,
}

fn check_line(name: &str, ok: bool) -> String {
    format!("{name:<24}{}", if ok { "ok" } else { "MISMATCH" })
}

/// Enumerates the quandle of `params`, compares it against every closed-form
/// prediction, and with `check` also against the lattice model, the rewritten
/// presentation, the commuting identity, the displacement table and the
/// maximal geodesics. `aut` counts automorphisms against their bound, which
/// dominates the cost on larger instances.
pub fn run_instance(
    params: &MontesinosParams,
    max_vertices: usize,
    check: bool,
    aut: bool,
    timing: bool,
) -> Result<Instance, Failure> {
    let start = Instant::now();
    let pres = presentation(params);
    let mut record = ResultRecord {
        params: Some(ParamsRecord {
            p: params.p(),
            q: params.q(),
            e: params.e(),
            w: params.w(),
        }),
        presentation_hash: presentation_hash(&pres),
        budget: BudgetStatus::Ok,
        order: None,
        component_sizes: None,
        predicted_order: Some(params.predicted_order()),
        predicted_component_sizes: Some(params.predicted_component_sizes()),
        matches: MatchFlags::default(),
        elapsed_us: None,
    };
    let mut report = Vec::new();
    let q = match enumerate(&pres, max_vertices) {
        Ok(q) => q,
        Err(_) => {
            record.budget = BudgetStatus::Exceeded;
            if timing {
                record.elapsed_us = Some(start.elapsed().as_micros() as u64);
            }
            return Ok(Instance {
                record,
                quandle: None,
                report,
            });
        }
    };
    let sizes = sizes_u64(&q);
    let m = &mut record.matches;
    m.order = Some(q.order() as u64 == params.predicted_order());
    m.components = Some(sizes == params.predicted_component_sizes());
    record.order = Some(q.order() as u64);
    record.component_sizes = Some(sizes);

    if check {
        let model = build_model(params).map_err(|e| Failure::input(e.to_string()))?;
        let ok = isomorphic(&model.quandle, &q).is_some();
        m.model_isomorphism = Some(ok);
        report.push(check_line("lattice model", ok));

        let ok = match enumerate(&rewritten_presentation(params), max_vertices) {
            Ok(r) => isomorphic(&r, &q).is_some(),
            Err(_) => false,
        };
        m.rewritten_isomorphism = Some(ok);
        report.push(check_line("rewritten presentation", ok));

        let (lhs, rhs) = commuting_identity_words(params.e());
        let ok = (0..q.order()).all(|x| {
            apply_word(&q, x, &lhs).expect("generators 1..3")
                == apply_word(&q, x, &rhs).expect("generators 1..3")
        });
        m.commuting_identity = Some(ok);
        report.push(check_line("commuting identity", ok));

        let audit = audit_displacements(params);
        let ok = audit.iter().all(|l| l.ok());
        m.displacements = Some(ok);
        report.push(check_line("displacements", ok));
        report.extend(audit.iter().map(|l| format!("  {l}")));

        let got: Vec<usize> = maximal_geodesics(&q).iter().map(|g| g.len()).collect();
        let want = predicted_maximal_geodesic_sizes(params);
        let ok = got == want;
        m.geodesics = Some(ok);
        report.push(check_line("maximal geodesics", ok));
    }
    if aut {
        let count = automorphism_count(&q);
        let bound = aut_upper_bound(params);
        let ok = count <= bound;
        let m = &mut record.matches;
        m.aut_bound = Some(ok);
        report.push(check_line("automorphism bound", ok));
        report.push(format!(
            "  count {count} ≤ bound {bound} attained={}",
            count == bound
        ));
    }
    if timing {
        record.elapsed_us = Some(start.elapsed().as_micros() as u64);
    }
    Ok(Instance {
        record,
        quandle: Some(q),
        report,
    })
}

pub struct MontesinosArgs {
    pub p: i64,
    pub q: i64,
    pub e: i64,
    pub max_vertices: usize,
    pub check: bool,
    pub aut: bool,
    pub dot: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

pub fn cmd_montesinos(a: &MontesinosArgs, out: &mut impl Write) -> CmdResult {
    let params = params(a.p, a.q, a.e)?;
    let inst = run_instance(&params, a.max_vertices, a.check, a.aut, false)?;
    let r = &inst.record;
    if let Some(path) = &a.json {
        write_file(path, &(r.to_line() + "\n"))?;
    }
    let Some(q) = &inst.quandle else {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: format!("budget exceeded: more than {} vertices", a.max_vertices),
        });
    };
    writeln!(out, "{params}  w = {}", params.w()).map_err(io_fail)?;
    writeln!(
        out,
        "order {} (predicted {})",
        q.order(),
        params.predicted_order()
    )
    .map_err(io_fail)?;
    writeln!(
        out,
        "components {} (predicted {})",
        join(r.component_sizes.as_deref().unwrap_or_default()),
        join(&params.predicted_component_sizes())
    )
    .map_err(io_fail)?;
    for line in &inst.report {
        writeln!(out, "{line}").map_err(io_fail)?;
    }
    if let Some(path) = &a.dot {
        write_file(path, &to_dot(q))?;
    }
    if r.matches.any_mismatch() {
        writeln!(out, "MISMATCH").map_err(io_fail)?;
        Ok(EXIT_MISMATCH)
    } else {
        Ok(EXIT_OK)
    }
}

pub struct SweepArgs {
    pub q_max: i64,
    pub e_min: i64,
    pub e_max: i64,
    pub max_vertices: usize,
    pub check: bool,
    pub aut: bool,
    pub timing: bool,
    pub jobs: usize,
    pub json: Option<PathBuf>,
}

/// Runs every valid instance and emits one record per line in `(q, p, e)`
/// order, whatever the execution order. Records go to the `--json` file if
/// given, otherwise to `out`; a summary goes to stderr.
pub fn cmd_sweep(a: &SweepArgs, out: &mut impl Write) -> CmdResult {
    if a.e_min > a.e_max {
        return Err(Failure::input("--e-min exceeds --e-max"));
    }
    if a.jobs == 0 {
        return Err(Failure::input("--jobs must be at least 1"));
    }
    let all = MontesinosParams::sweep(a.q_max, a.e_min, a.e_max);
    let run = |p: &MontesinosParams| {
        run_instance(p, a.max_vertices, a.check, a.aut, a.timing).map(|i| i.record)
    };
    let results: Vec<Result<ResultRecord, Failure>> = if a.jobs == 1 {
        all.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.jobs)
            .build()
            .map_err(|e| Failure::input(format!("cannot start thread pool: {e}")))?;
        pool.install(|| all.par_iter().map(run).collect())
    };
    let records: Vec<ResultRecord> = results.into_iter().collect::<Result<_, _>>()?;

    let mut text = String::new();
    for r in &records {
        text.push_str(&r.to_line());
        text.push('\n');
    }
    match &a.json {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(io_fail)?,
    }

    let mismatches = records.iter().filter(|r| r.matches.any_mismatch()).count();
    let exceeded = records
        .iter()
        .filter(|r| r.budget == BudgetStatus::Exceeded)
        .count();
    eprintln!(
        "{} instances, {mismatches} mismatched, {exceeded} over budget",
        records.len()
    );
    Ok(if mismatches > 0 {
        EXIT_MISMATCH
    } else if exceeded > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

/// Either Montesinos parameters or a presentation file.
pub enum Source {
    Params(i64, i64, i64),
    File(PathBuf),
}

fn load_source(
    src: &Source,
    max_vertices: usize,
) -> Result<(FiniteQuandle, Option<MontesinosParams>), Failure> {
    match src {
        Source::Params(p, q, e) => {
            let params = params(*p, *q, *e)?;
            let q = enumerate(&presentation(&params), max_vertices).map_err(Failure::budget)?;
            Ok((q, Some(params)))
        }
        Source::File(path) => {
            let pres = load_presentation(path)?;
            let q = enumerate(&pres, max_vertices).map_err(Failure::budget)?;
            Ok((q, None))
        }
    }
}

pub fn cmd_geodesics(src: &Source, max_vertices: usize, out: &mut impl Write) -> CmdResult {
    let (q, params) = load_source(src, max_vertices)?;
    let sizes: Vec<usize> = maximal_geodesics(&q).iter().map(|g| g.len()).collect();
    writeln!(out, "{} maximal: {}", sizes.len(), size_histogram(&sizes)).map_err(io_fail)?;
    let Some(params) = params else {
        return Ok(EXIT_OK);
    };
    let want = predicted_maximal_geodesic_sizes(&params);
    let ok = sizes == want;
    writeln!(
        out,
        "predicted {} maximal: {}  {}",
        want.len(),
        size_histogram(&want),
        if ok { "ok" } else { "MISMATCH" }
    )
    .map_err(io_fail)?;
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

/// Prints the automorphism count and, for Montesinos parameters, the upper
/// bound and whether it is attained. A count above the bound is a mismatch.
pub fn cmd_aut(src: &Source, max_vertices: usize, out: &mut impl Write) -> CmdResult {
    let (q, params) = load_source(src, max_vertices)?;
    let count = automorphism_count(&q);
    let Some(params) = params else {
        writeln!(out, "count {count}").map_err(io_fail)?;
        return Ok(EXIT_OK);
    };
    let bound = aut_upper_bound(&params);
    writeln!(
        out,
        "count {count} ≤ bound {bound} attained={}",
        count == bound
    )
    .map_err(io_fail)?;
    Ok(if count <= bound {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
