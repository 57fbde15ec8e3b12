//! Command-line surface: build example structures, validate structure
//! files, check matched pairs, construct smash subspaces, compute
//! integral spaces, dualize, and run seeded corruption trials.
//!
//! Exit codes: 0 all requested checks passed, 1 a check failed,
//! 2 malformed input.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

use weakhopf::error::Error;
use weakhopf::integrals::{
    check_cond_int, integral_space, integral_space_of_bialgebra, maschke_semisimple,
    smash_integral, smash_semisimple_criterion, Side,
};
use weakhopf::json::{
    field_to_json, pair_from_json, recipe, scalar_to_json, structure_from_json, structure_to_json,
    LoadedPair, LoadedStructure,
};
use weakhopf::matched::{
    build_dual_matched_pair, check_abelian, check_compatible, check_dual_matched_pair,
    check_remark_vart, check_weak_matched_pair,
};
use weakhopf::report::CheckReport;
use weakhopf::scalar::FieldSpec;
use weakhopf::smash::{
    ambient_counit_defect, build_ambient, build_antipode, check_ambient, check_antipode_conditions,
    check_induced_structure, extract_subspace,
};
use weakhopf::validate::{check_weak_bialgebra, hopf_criterion, identity_suite, verify_antipode};
use weakhopf::zoo::build_dual;
use weakhopf::{Mat, WeakBialgebra, WeakHopfAlgebra};

#[derive(Parser)]
#[command(
    name = "weakhopf",
    version,
    about = "Exact weak Hopf algebra computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a machine-readable JSON report on stdout
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct FieldArg {
    /// Base field: Q or Fp:<prime>
    #[arg(long, default_value = "Q")]
    field: String,
}

impl FieldArg {
    fn parse(&self) -> Result<FieldSpec, Error> {
        if self.field == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = self.field.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::BadParams(format!("invalid prime `{p}`")))?;
            return FieldSpec::prime_field(p);
        }
        Err(Error::BadParams(format!(
            "unknown field `{}` (expected Q or Fp:<p>)",
            self.field
        )))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a named example structure and validate it
    Example {
        /// One of: groupoid, hg, union, kaplansky, dual
        name: String,
        /// Group for `hg`, e.g. C2 or C2xC3
        #[arg(long)]
        group: Option<String>,
        /// Comma-separated component groups for `groupoid`
        #[arg(long)]
        groups: Option<String>,
        /// |-separated recipes for `union`
        #[arg(long)]
        parts: Option<String>,
        /// Base recipe for `kaplansky`
        #[arg(long)]
        base: Option<String>,
        /// Recipe for `dual`
        #[arg(long)]
        of: Option<String>,
        #[command(flatten)]
        field: FieldArg,
        /// Write the structure JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a structure file
    Check { file: PathBuf },
    /// Validate a matched-pair file
    Matched { file: PathBuf },
    /// Build the smash subspace of a pair file
    Smash {
        file: PathBuf,
        /// Also verify the antipode conditions and build the antipode
        #[arg(long)]
        antipode: bool,
        /// Also report integral spaces and semisimplicity
        #[arg(long)]
        integrals: bool,
        /// Write the subspace structure JSON here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integral spaces and semisimplicity of a structure file
    Integrals { file: PathBuf },
    /// Dualize a structure file or recipe
    Dual {
        input: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded corruption trials over the example zoo
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownExample(_)
        | Error::BadParams(_)
        | Error::NotPrime(_)
        | Error::NoSuchRoot { .. }
        | Error::FieldMismatch
        | Error::ShapeMismatch(_)
        | Error::NotSubgroup(_)
        | Error::BadCharacteristic(_)
        | Error::NotHopf
        | Error::DimensionMismatch(_) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> i32 {
    let json_mode = cli.json;
    match dispatch(cli) {
        Ok(report) => {
            let ok = report.pass;
            report.emit(json_mode);
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if json_mode {
                let v = json!({ "error": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            } else {
                eprintln!("error: {e}");
            }
            exit_code_for(&e)
        }
    }
}

/// Collected command output: named check groups plus free-form facts.
struct Report {
    command: String,
    pass: bool,
    groups: Vec<(String, CheckReport)>,
    facts: Vec<(String, Value)>,
    emitted: Option<(Option<PathBuf>, Value)>,
}

impl Report {
    fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            pass: true,
            groups: Vec::new(),
            facts: Vec::new(),
            emitted: None,
        }
    }

    fn add(&mut self, name: impl Into<String>, report: CheckReport) {
        self.pass &= report.all_pass();
        self.groups.push((name.into(), report));
    }

    fn fact(&mut self, key: impl Into<String>, value: Value) {
        self.facts.push((key.into(), value));
    }

    fn require(&mut self, key: impl Into<String>, ok: bool) {
        self.pass &= ok;
        self.facts.push((key.into(), json!(ok)));
    }

    fn emit(self, json_mode: bool) {
        if let Some((path, value)) = &self.emitted {
            let text = serde_json::to_string_pretty(value).expect("json");
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", p.display());
                    }
                }
                None if !json_mode => println!("{text}"),
                None => {}
            }
        }
        if json_mode {
            let checks: Vec<Value> = self
                .groups
                .iter()
                .flat_map(|(group, report)| {
                    report.items.iter().map(move |item| {
                        json!({
                            "group": group,
                            "id": item.id,
                            "pass": item.pass,
                            "witness": item.witness,
                            "residual": item.residual.as_ref().map(|r| {
                                r.iter().map(scalar_to_json).collect::<Vec<_>>()
                            }),
                        })
                    })
                })
                .collect();
            let facts: serde_json::Map<String, Value> = self.facts.iter().cloned().collect();
            let v = json!({
                "command": self.command,
                "pass": self.pass,
                "checks": checks,
                "facts": facts,
                "emitted": self.emitted.as_ref().map(|(_, v)| v.clone()),
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        } else {
            println!("command: {}", self.command);
            for (key, value) in &self.facts {
                println!("  {key}: {value}");
            }
            for (group, report) in &self.groups {
                let n_fail = report.failures().count();
                let total = report.items.len();
                println!("{group}: {}/{} checks pass", total - n_fail, total);
                for item in report.failures() {
                    let w = item
                        .witness
                        .as_ref()
                        .map(|w| format!("{w:?}"))
                        .unwrap_or_default();
                    println!("  FAIL {} at {w}", item.id);
                }
            }
            println!("overall: {}", if self.pass { "pass" } else { "FAIL" });
        }
    }
}

fn load_structure_file(path: &Path) -> Result<LoadedStructure, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    structure_from_json(&value)
}

fn load_pair_file(path: &Path) -> Result<LoadedPair, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    pair_from_json(&value, base)
}

/// Full validator battery for one weak Hopf algebra.
fn validate_hopf(report: &mut Report, wh: &WeakHopfAlgebra) -> Result<(), Error> {
    report.add("weak_bialgebra", check_weak_bialgebra(&wh.wb)?);
    report.add("antipode", verify_antipode(&wh.wb, &wh.antipode)?);
    report.add(
        "identity_suite",
        identity_suite(&wh.wb, Some(&wh.antipode))?,
    );
    let crit = hopf_criterion(wh)?;
    report.require("hopf_criterion_coherent", crit.coherent());
    report.fact("is_hopf", json!(crit.is_hopf()));
    Ok(())
}

fn validate_bialgebra(report: &mut Report, wb: &WeakBialgebra) -> Result<(), Error> {
    report.add("weak_bialgebra", check_weak_bialgebra(wb)?);
    report.add("identity_suite", identity_suite(wb, None)?);
    Ok(())
}

fn dispatch(cli: Cli) -> Result<Report, Error> {
    match cli.command {
        Command::Example {
            name,
            group,
            groups,
            parts,
            base,
            of,
            field,
            out,
        } => {
            let field = field.parse()?;
            let spec = match name.as_str() {
                "hg" => format!(
                    "hg:{}",
                    group.ok_or_else(|| Error::BadParams("hg needs --group".into()))?
                ),
                "groupoid" => format!(
                    "groupoid:{}",
                    groups.ok_or_else(|| Error::BadParams("groupoid needs --groups".into()))?
                ),
                "union" => format!(
                    "union:{}",
                    parts.ok_or_else(|| Error::BadParams("union needs --parts".into()))?
                ),
                "kaplansky" => format!(
                    "kaplansky:{}",
                    base.ok_or_else(|| Error::BadParams("kaplansky needs --base".into()))?
                ),
                "dual" => format!(
                    "dual:{}",
                    of.ok_or_else(|| Error::BadParams("dual needs --of".into()))?
                ),
                other => return Err(Error::UnknownExample(other.to_string())),
            };
            let wh = recipe(&spec, field)?;
            let mut report = Report::new(format!("example {spec}"));
            report.fact("dim", json!(wh.dim()));
            report.fact("field", field_to_json(field));
            validate_hopf(&mut report, &wh)?;
            report.emitted = Some((out, structure_to_json(&wh.wb, Some(&wh.antipode))));
            Ok(report)
        }

        Command::Check { file } => {
            let loaded = load_structure_file(&file)?;
            let mut report = Report::new(format!("check {}", file.display()));
            report.fact("dim", json!(loaded.wb.dim()));
            match &loaded.antipode {
                Some(s) => {
                    let wh = WeakHopfAlgebra::new(loaded.wb.clone(), s.clone())?;
                    validate_hopf(&mut report, &wh)?;
                }
                None => validate_bialgebra(&mut report, &loaded.wb)?,
            }
            Ok(report)
        }

        Command::Matched { file } => {
            let pair = load_pair_file(&file)?;
            let mut report = Report::new(format!("matched {}", file.display()));
            report.add("weak_matched_pair", check_weak_matched_pair(&pair.mp)?);
            let (coco, comm) = check_abelian(&pair.mp)?;
            report.fact("h_cocommutative", json!(coco));
            report.fact("a_commutative", json!(comm));
            if coco && comm {
                report.add("compatible", check_compatible(&pair.mp)?);
                report.add("target_counital_remark", check_remark_vart(&pair.mp)?);
            }
            let dual = build_dual_matched_pair(&pair.mp)?;
            report.add("dual_pair_mirrored", check_dual_matched_pair(&dual)?);
            Ok(report)
        }

        Command::Smash {
            file,
            antipode,
            integrals,
            out,
        } => {
            let pair = load_pair_file(&file)?;
            let mut report = Report::new(format!("smash {}", file.display()));
            let ambient = build_ambient(&pair.mp)?;
            report.fact("ambient_dim", json!([pair.mp.a().dim(), pair.mp.h().dim()]));
            report.add("ambient", check_ambient(&ambient)?);
            report.fact(
                "ambient_counit_defect_at",
                json!(ambient_counit_defect(&ambient)?),
            );
            let sd = extract_subspace(&ambient)?;
            report.fact("rank", json!(sd.rank()));
            report.add("subspace", check_induced_structure(&sd)?);

            let mut sub_antipode: Option<Mat> = None;
            if antipode || integrals {
                let sh = pair
                    .h_antipode
                    .clone()
                    .ok_or_else(|| Error::BadParams("H carries no antipode".into()))?;
                let sa = pair
                    .a_antipode
                    .clone()
                    .ok_or_else(|| Error::BadParams("A carries no antipode".into()))?;
                report.add(
                    "antipode_conditions",
                    check_antipode_conditions(&ambient, &sh, &sa)?,
                );
                let hopf = build_antipode(&sd, &sh, &sa)?;
                report.add(
                    "subspace_antipode",
                    verify_antipode(&hopf.wb, &hopf.antipode)?,
                );
                let crit = hopf_criterion(&hopf)?;
                report.require("hopf_criterion_coherent", crit.coherent());
                report.fact("smash_is_hopf", json!(crit.is_hopf()));
                sub_antipode = Some(hopf.antipode.clone());

                if integrals {
                    let h_ints = integral_space_of_bialgebra(pair.mp.h(), Side::Left)?;
                    let a_ints = integral_space_of_bialgebra(pair.mp.a(), Side::Left)?;
                    let sub_ints = integral_space_of_bialgebra(&sd.sub, Side::Left)?;
                    report.fact("h_integral_dim", json!(h_ints.dim()));
                    report.fact("a_integral_dim", json!(a_ints.dim()));
                    report.fact("smash_integral_dim", json!(sub_ints.dim()));
                    let ss = smash_semisimple_criterion(&sd, &hopf, &sa)?;
                    report.fact("smash_semisimple", json!(ss.maschke));
                    report.require("semisimplicity_criterion_agrees", ss.agrees);

                    // the integral condition for every pair of basis
                    // integrals, with membership of the projected tensor
                    let mut all_ok = true;
                    for i in 0..a_ints.dim() {
                        for j in 0..h_ints.dim() {
                            let alpha = a_ints.basis.column(i);
                            let t = h_ints.basis.column(j);
                            let cond = check_cond_int(&sd, &alpha, &t)?;
                            if cond.all_pass() {
                                all_ok &= smash_integral(&sd, &alpha, &t).is_ok();
                            } else {
                                all_ok = false;
                            }
                        }
                    }
                    report.require("integral_condition_on_basis_pairs", all_ok);
                }
            }

            report.emitted = Some((out, structure_to_json(&sd.sub, sub_antipode.as_ref())));
            Ok(report)
        }

        Command::Integrals { file } => {
            let loaded = load_structure_file(&file)?;
            let mut report = Report::new(format!("integrals {}", file.display()));
            let antipode = match loaded.antipode.clone() {
                Some(s) => s,
                None => weakhopf::validate::solve_antipode(&loaded.wb)?,
            };
            let wh = WeakHopfAlgebra::new(loaded.wb, antipode)?;
            for (side, name) in [(Side::Left, "left"), (Side::Right, "right")] {
                let ints = integral_space(&wh, side)?;
                report.fact(format!("{name}_integral_dim"), json!(ints.dim()));
                let basis: Vec<Value> = (0..ints.dim())
                    .map(|c| {
                        Value::Array(ints.basis.column(c).iter().map(scalar_to_json).collect())
                    })
                    .collect();
                report.fact(format!("{name}_integral_basis"), Value::Array(basis));
            }
            let witness = maschke_semisimple(&wh)?;
            report.fact("semisimple", json!(witness.is_some()));
            if let Some(alpha) = witness {
                report.fact(
                    "maschke_witness",
                    Value::Array(alpha.iter().map(scalar_to_json).collect()),
                );
            }
            Ok(report)
        }

        Command::Dual { input, field, out } => {
            let path = Path::new(&input);
            let (wb, antipode) = if path.exists() {
                let loaded = load_structure_file(path)?;
                (loaded.wb, loaded.antipode)
            } else {
                let wh = recipe(&input, field.parse()?)?;
                (wh.wb, Some(wh.antipode))
            };
            let dual = build_dual(&wb)?;
            let dual_antipode = antipode.map(|s| s.transpose());
            let mut report = Report::new(format!("dual {input}"));
            report.fact("dim", json!(dual.dim()));
            match &dual_antipode {
                Some(s) => {
                    let wh = WeakHopfAlgebra::new(dual.clone(), s.clone())?;
                    validate_hopf(&mut report, &wh)?;
                }
                None => validate_bialgebra(&mut report, &dual)?,
            }
            report.emitted = Some((out, structure_to_json(&dual, dual_antipode.as_ref())));
            Ok(report)
        }

        Command::Fuzz { seed, trials } => {
            let result = weakhopf::fuzz::run_corruption_trials(seed, trials)?;
            let mut report = Report::new(format!("fuzz seed={seed} trials={trials}"));
            report.fact("trials", json!(result.outcomes.len()));
            report.require("zero_false_passes", result.false_passes == 0);
            report.fact(
                "detected",
                json!(result.outcomes.iter().filter(|o| o.detected()).count()),
            );
            report.fact("lambda_trials", json!(result.lambda_trials));
            report.fact("lambda_rejected", json!(result.lambda_rejected));
            report.require("lambda_iff_consistent", result.lambda_inconsistencies == 0);
            Ok(report)
        }
    }
}
