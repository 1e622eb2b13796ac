//! Terminal front end for the classification engine: single-geometry
//! reports, the golden-table harness, cross-implementation sweeps, and the
//! filtration rigidity test.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pargap_core::{
    build_root_system, build_structure_constants, canonical_types, combine_cochains,
    filtration_rigidity_check, h2_report, jacobi_sweep, module_basis, oracle_dims,
    oracle_sweep, preset_names, preset_spectra, realize_phi0, regular_modules, run_query,
    verify_tables, Error, H2Outcome, LieType, Parabolic, QueryOutcome, Result, Spectra,
    TableRow, SCHEMA_VERSION,
};

#[derive(Parser, Debug)]
#[command(
    name = "pargap",
    version,
    about = "Submaximal symmetry gaps of parabolic geometries",
    long_about = "Computes harmonic curvature branches, Tanaka prolongations and \
                  submaximal symmetry dimensions for flag geometries G/P, and \
                  replays the published classification tables against the engine."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Submaximal symmetry report for one geometry G/P
    Submax(QueryArgs),
    /// List every harmonic curvature module of one geometry, regular or not
    H2(QueryArgs),
    /// Replay the published branch tables row by row against the engine
    VerifyTables {
        /// Largest rank at which parametrised table rows are instantiated
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Check deformation closure on every regular branch up to a rank bound
    JacobiSweep {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
    },
    /// Compare recipe dimensions against the structure-constant oracle
    OracleCompare {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Also sample random module elements (100 per module, rank <= 3)
        /// and check the lowest weight vector maximises dim a
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Filtration rigidity test on grading eigenvalue spectra
    RigidityCheck {
        /// Preset name (proj2d, conf3d, petrov-n, petrov-iii, g2-31) or an
        /// inline JSON object {"level": [eigenvalues, ...], ...}
        #[arg(long)]
        spectra: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// Report node indices and words in the numbering of the request
    Input,
    /// Report in the engine's canonical numbering (B2 as C2, D3 as A3)
    Canonical,
}

#[derive(Args, Debug)]
pub struct QueryArgs {
    /// Simple Lie type as one token, e.g. A3, B4, G2
    #[arg(long = "type", value_name = "TYPE")]
    pub lie_type: String,
    /// Crossed Dynkin nodes, comma separated, Bourbaki numbering (e.g. 1,2,5)
    #[arg(long, value_name = "i,j,...")]
    pub parabolic: String,
    /// Restrict the report to the branch with this word, e.g. 2,1
    #[arg(long, value_name = "j,k")]
    pub branch: Option<String>,
    /// Emit the machine-readable JSON report instead of text
    #[arg(long)]
    pub json: bool,
    /// Node-numbering convention used in the report
    #[arg(long, value_enum, default_value_t = Notation::Input)]
    pub notation: Notation,
}

/// Maps engine errors onto the documented process exit codes.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Verification(_) => 2,
        Error::InternalConsistency(_) => 3,
        _ => 1,
    }
}

pub fn dispatch(cli: &Cli, out: &mut impl std::io::Write) -> Result<()> {
    match &cli.command {
        Command::Submax(q) => cmd_submax(q, out),
        Command::H2(q) => cmd_h2(q, out),
        Command::VerifyTables { max_rank } => cmd_verify_tables(*max_rank, out),
        Command::JacobiSweep { max_rank } => cmd_jacobi_sweep(*max_rank, out),
        Command::OracleCompare { max_rank, seed } => {
            cmd_oracle_compare(*max_rank, *seed, out)
        }
        Command::RigidityCheck { spectra, json } => cmd_rigidity(spectra, *json, out),
    }
}

fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("bad node index {tok:?}")))
        })
        .collect()
}

fn parse_word(s: &str) -> Result<[usize; 2]> {
    let parts = parse_index_list(s)?;
    match parts.as_slice() {
        [j, k] if j != k => Ok([*j, *k]),
        _ => Err(Error::Usage(format!(
            "branch must be two distinct indices j,k, got {s:?}"
        ))),
    }
}

fn emit(out: &mut impl std::io::Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::InternalConsistency(format!("write failed: {e}")))
}

fn query_outcome(q: &QueryArgs) -> Result<QueryOutcome> {
    let t = LieType::parse(&q.lie_type)?;
    let crossed = parse_index_list(&q.parabolic)?;
    let mut outcome = run_query(t, &crossed, q.notation == Notation::Canonical)?;
    if let Some(branch) = &q.branch {
        let word = parse_word(branch)?;
        let available: Vec<String> =
            outcome.branches.iter().map(|b| b.word_display.clone()).collect();
        outcome.branches.retain(|b| b.word == word);
        if outcome.branches.is_empty() {
            return Err(Error::Usage(format!(
                "no regular branch ({},{}); regular branches: {}",
                word[0],
                word[1],
                if available.is_empty() { "none".into() } else { available.join(" ") },
            )));
        }
    }
    Ok(outcome)
}

fn set_display(ix: &[usize]) -> String {
    if ix.is_empty() {
        "{}".into()
    } else {
        let inner: Vec<String> = ix.iter().map(ToString::to_string).collect();
        format!("{{{}}}", inner.join(","))
    }
}

fn indented(diagram: &str, pad: &str) -> String {
    diagram
        .lines()
        .map(|l| format!("{pad}{l}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_branch(b: &TableRow) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "branch {}  [homogeneity {}{}]",
        b.word_display,
        b.homogeneity,
        if b.exceptional { ", exceptional" } else { "" },
    );
    let _ = writeln!(s, "{}", indented(&b.dynkin, "    "));
    let _ = writeln!(
        s,
        "    J_w = {}   I_w = {}{}",
        set_display(&b.j_w),
        set_display(&b.i_w),
        if b.pr { "   prolongation-rigid" } else { "" },
    );
    let _ = writeln!(
        s,
        "    dim g_- = {}, dim a0 = {}, a+ = {:?}, dim a(w) = {}",
        b.dim_g_minus, b.dim_a0, b.a_plus, b.dim_a,
    );
    if !b.reduced.is_empty() {
        let factors: Vec<String> = b
            .reduced
            .iter()
            .map(|f| format!("{}/P{}", f.lie_type, set_display(&f.crossed)))
            .collect();
        let _ = writeln!(s, "    reduced geometry: {}", factors.join(" x "));
    }
    let _ = writeln!(
        s,
        "    twistor space: P{}{}",
        set_display(&b.twistor),
        if b.twistor_is_input { " (this geometry)" } else { "" },
    );
    let _ = writeln!(s, "    S_w = {}", b.s_w);
    s
}

fn render_query_text(o: &QueryOutcome) -> String {
    let mut s = String::new();
    let head = format!("{}/P{}", o.query.lie_type, set_display(&o.query.crossed));
    let _ = writeln!(
        s,
        "{head}: dim g = {}, dim g/p = {}, grading depth {}",
        o.dim_g, o.dim_flag, o.depth,
    );
    if o.query.relabelled {
        let _ = writeln!(
            s,
            "(canonical model: {}/P{})",
            o.query.canonical_type,
            set_display(&o.query.canonical_crossed),
        );
    }
    let _ = writeln!(s, "{}", indented(&o.dynkin, "  "));
    let _ = writeln!(s);
    if o.rigid {
        let _ = writeln!(
            s,
            "Yamaguchi-rigid: H2_+(g_-, g) = 0, every regular normal geometry \
             of this type is locally flat; no submaximal gap."
        );
        return s;
    }
    for b in &o.branches {
        let _ = writeln!(s, "{}", render_branch(b));
    }
    for note in &o.exceptions {
        let _ = writeln!(s, "note: {note}");
    }
    if let Some(sub) = o.s {
        let _ = writeln!(s, "submaximal symmetry dimension S({head}) = {sub}");
    }
    s
}

fn render_h2_text(o: &H2Outcome) -> String {
    let mut s = String::new();
    let head = format!("{}/P{}", o.query.lie_type, set_display(&o.query.crossed));
    let _ = writeln!(s, "{head}: {} harmonic curvature modules", o.modules.len());
    for m in &o.modules {
        let _ = writeln!(
            s,
            "\nword {}: mu = {:?}, homogeneity {} ({})",
            m.word_display,
            m.mu,
            m.homogeneity,
            if m.regular { "regular" } else { "irregular" },
        );
        let _ = writeln!(
            s,
            "  J_w = {}   I_w = {}",
            set_display(&m.j_w),
            set_display(&m.i_w),
        );
        let _ = writeln!(s, "{}", indented(&m.dynkin, "  "));
    }
    s
}

fn cmd_submax(q: &QueryArgs, out: &mut impl std::io::Write) -> Result<()> {
    let outcome = query_outcome(q)?;
    if q.json {
        emit(out, &to_json(&outcome)?)
    } else {
        emit(out, &render_query_text(&outcome))
    }
}

fn cmd_h2(q: &QueryArgs, out: &mut impl std::io::Write) -> Result<()> {
    let t = LieType::parse(&q.lie_type)?;
    let crossed = parse_index_list(&q.parabolic)?;
    let mut outcome = h2_report(t, &crossed, q.notation == Notation::Canonical)?;
    if let Some(branch) = &q.branch {
        let word = parse_word(branch)?;
        outcome.modules.retain(|m| m.word == word);
        if outcome.modules.is_empty() {
            return Err(Error::Usage(format!(
                "no module with word ({},{})",
                word[0], word[1]
            )));
        }
    }
    if q.json {
        emit(out, &to_json(&outcome)?)
    } else {
        emit(out, &render_h2_text(&outcome))
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::InternalConsistency(format!("serialization failed: {e}")))
}

fn cmd_verify_tables(max_rank: usize, out: &mut impl std::io::Write) -> Result<()> {
    let checks = verify_tables(max_rank)?;
    let mut total_rows = 0;
    let mut total_geoms = 0;
    for c in &checks {
        total_rows += c.rows;
        total_geoms += c.geometries;
        emit(
            out,
            &format!(
                "table {:<12} {:>4} rows across {:>3} geometries: all columns match\n",
                c.table, c.rows, c.geometries,
            ),
        )?;
    }
    emit(
        out,
        &format!(
            "verified {total_rows} rows / {total_geoms} geometries up to rank {max_rank}: PASS\n"
        ),
    )
}

fn cmd_jacobi_sweep(max_rank: usize, out: &mut impl std::io::Write) -> Result<()> {
    let sweep = jacobi_sweep(max_rank)?;
    emit(
        out,
        &format!(
            "deformation closure holds on {} regular branches across {} geometries \
             ({} simple types, rank <= {max_rank})\n",
            sweep.branches - sweep.exceptions.len(),
            sweep.geometries,
            sweep.types,
        ),
    )?;
    emit(
        out,
        &format!(
            "obstructed branches ({}) match the proven list:\n",
            sweep.exceptions.len()
        ),
    )?;
    for (t, crossed, (j, k)) in &sweep.exceptions {
        emit(out, &format!("  {t}/P{} ({j}{k})\n", set_display(crossed)))?;
    }
    Ok(())
}

fn cmd_oracle_compare(
    max_rank: usize,
    seed: Option<u64>,
    out: &mut impl std::io::Write,
) -> Result<()> {
    let sweep = oracle_sweep(max_rank)?;
    emit(
        out,
        &format!(
            "recipe and oracle dimensions agree level-by-level on {} regular modules \
             across {} geometries (rank <= {max_rank})\n",
            sweep.modules, sweep.geometries,
        ),
    )?;
    emit(
        out,
        &format!(
            "skipped {} Yamaguchi-rigid geometries: no regular modules\n",
            sweep.rigid_skipped,
        ),
    )?;
    if let Some(seed) = seed {
        let cap = max_rank.min(3);
        let stats = maximality_check(cap, seed, 100)?;
        emit(
            out,
            &format!(
                "maximality (seed {seed}, rank <= {cap}): {} sampled elements across \
                 {} modules all satisfy dim a(phi) <= dim a(phi0)\n",
                stats.samples, stats.modules,
            ),
        )?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MaximalityStats {
    pub modules: usize,
    pub samples: usize,
}

/// Samples random elements phi of each curvature module (integer
/// coordinates in [-3, 3] against the raising-operator basis) and checks
/// the annihilator-plus-prolongation dimension never beats the lowest
/// weight vector's.
pub fn maximality_check(
    max_rank: usize,
    seed: u64,
    samples_per_module: usize,
) -> Result<MaximalityStats> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = MaximalityStats::default();
    for t in canonical_types(max_rank) {
        let rs = build_root_system(t)?;
        let sc = build_structure_constants(t)?;
        let l = t.rank;
        for mask in 1u32..(1 << l) {
            let crossed: Vec<usize> =
                (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let p = Parabolic::new(crossed, l)?;
            for m in regular_modules(&rs, &p)? {
                let phi0 = realize_phi0(&sc, &p, &m)?;
                let bound = oracle_dims(&sc, &p, &phi0)?.total();
                let basis = module_basis(&sc, &p, &phi0)?;
                stats.modules += 1;
                let mut done = 0;
                while done < samples_per_module {
                    let coeffs: Vec<i64> =
                        (0..basis.len()).map(|_| rng.gen_range(-3..=3)).collect();
                    if coeffs.iter().all(|&c| c == 0) {
                        continue;
                    }
                    let phi = combine_cochains(&basis, &coeffs);
                    let dims = oracle_dims(&sc, &p, &phi)?.total();
                    if dims > bound {
                        return Err(Error::Verification(format!(
                            "{t}/{p} ({},{}): sampled element has dim a = {dims} \
                             above the lowest-weight bound {bound}",
                            m.element.j, m.element.k,
                        )));
                    }
                    done += 1;
                    stats.samples += 1;
                }
            }
        }
    }
    Ok(stats)
}

fn parse_spectra(input: &str) -> Result<(Spectra, Option<String>)> {
    if let Some((spectra, desc)) = preset_spectra(input) {
        return Ok((spectra, Some(desc.to_string())));
    }
    if input.trim_start().starts_with('{') {
        let raw: std::collections::BTreeMap<String, Vec<i64>> =
            serde_json::from_str(input).map_err(|e| {
                Error::Usage(format!("cannot parse spectra JSON: {e}"))
            })?;
        let mut spectra = Spectra::new();
        for (level, evs) in raw {
            let level: i64 = level.trim().parse().map_err(|_| {
                Error::Usage(format!("bad grading level {level:?}"))
            })?;
            spectra.insert(level, evs.into_iter().map(pargap_core::linalg::q).collect());
        }
        return Ok((spectra, None));
    }
    Err(Error::Usage(format!(
        "unknown spectra {input:?}; presets: {}",
        preset_names().join(", ")
    )))
}

fn cmd_rigidity(spectra: &str, json: bool, out: &mut impl std::io::Write) -> Result<()> {
    let (spec, desc) = parse_spectra(spectra)?;
    let report = filtration_rigidity_check(&spec)?;
    if json {
        let doc = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "spectra": spectra,
            "description": desc,
            "rigid": report.rigid,
            "obstructions": report.obstructions,
        });
        return emit(out, &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()));
    }
    if let Some(desc) = desc {
        emit(out, &format!("spectra {spectra}: {desc}\n"))?;
    }
    if report.rigid {
        emit(out, "verdict: rigid (all eigenvalue-sum levels disjoint)\n")
    } else {
        emit(out, "verdict: inconclusive; the spectral test does not decide:\n")?;
        for ob in &report.obstructions {
            emit(out, &format!("  {ob}\n"))?;
        }
        Ok(())
    }
}
