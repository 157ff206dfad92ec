//! `bimeasure`: command-line surface over the exact computer algebra
//! library. Commands read JSON definition files or catalog names, run the
//! corresponding checks, and emit a deterministic report.
//!
//! Exit codes: 0 all checks passed, 1 a check failed (a counterexample is
//! in the report), 2 input or schema error, 3 enumeration budget exceeded.
//! Timing goes to stderr only, so reports are byte-comparable.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use bimeasure::algebra::{
    dual_bialgebra, dual_hopf, Bialgebra, BilinearPairing, Coalgebra, HopfAlgebra,
};
use bimeasure::catalog;
use bimeasure::duality;
use bimeasure::enumerate;
use bimeasure::hopf_modules;
use bimeasure::matched_pair::{self, MatchedPair};
use bimeasure::measuring;
use bimeasure::schema::{self, DefinitionFile};
use bimeasure::structure_ops;
use bimeasure::{Algebra, FieldSpec, Matrix};

#[derive(Parser)]
#[command(name = "bimeasure", version, about = "exact checks for measurings, bimeasurings, bismash products and Hopf modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Ground field for catalog carriers: Q or Fp:<prime>
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Enumeration budget (number of candidate tables)
    #[arg(long, global = true, default_value_t = 1 << 20)]
    budget: u64,
    /// Seed for sampled-property commands; exhaustive commands ignore it
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also write the report to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format
    #[arg(long, global = true, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate the axioms of any definition file
    Validate { file: PathBuf },
    /// Dual bialgebra or Hopf algebra of a carrier
    Dual { carrier: String },
    /// Quotient by the Hopf ideal generated by commutators
    Abelianize { carrier: String },
    /// Largest cocommutative subcoalgebra respecting the structure
    CocomPart { carrier: String },
    /// Check a measuring pairing file (members c, b, a, psi)
    CheckMeasuring { file: PathBuf },
    /// Check a bimeasuring pairing file (members n, t, a, psi)
    CheckBimeasuring { file: PathBuf },
    /// List all bimeasurings N (x) T -> A
    EnumerateBimeasurings {
        #[arg(long)]
        n: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value = "k")]
        a: String,
    },
    /// Build and validate the bismash product of a matched pair
    Bismash {
        #[arg(long)]
        pair: String,
    },
    /// Check a skew bimeasuring pairing file against a matched pair
    CheckSkew {
        file: PathBuf,
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        a: Option<String>,
    },
    /// Enumerate skew bimeasurings and verify their group laws
    SkewGroup {
        #[arg(long)]
        pair: String,
        #[arg(long, default_value = "k")]
        a: String,
    },
    /// Validate a Hopf module file
    HopfModuleCheck { file: PathBuf },
    /// Coinvariants and the fundamental isomorphism of a Hopf module
    FundamentalIso {
        file: Option<PathBuf>,
        /// use the regular Hopf module of a catalog carrier instead
        #[arg(long)]
        regular: Option<String>,
    },
    /// Normalized invertible functionals on H and their transported actions
    RegAutAction {
        #[arg(long)]
        h: String,
        #[arg(long, default_value = "k")]
        a: String,
    },
    /// Bijection between bialgebra maps T -> N° and N -> T°
    AdjunctionCheck {
        #[arg(long)]
        t: String,
        #[arg(long)]
        n: String,
    },
    /// Comparison map (T (x) S)° vs T° (x) S°
    TensorAlpha {
        #[arg(long)]
        t: String,
        #[arg(long)]
        s: String,
    },
    /// Universal property of the finite dual against test coalgebras
    UniversalityCheck {
        #[arg(long)]
        b: String,
    },
    /// Print a catalog carrier as a definition file
    Catalog { name: String },
}

enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    fn from_core(e: impl std::fmt::Display) -> CliError {
        let msg = e.to_string();
        if msg.contains("budget exceeded") {
            CliError::Budget(msg)
        } else {
            CliError::Input(msg)
        }
    }
}

#[derive(Serialize)]
struct InputDigest {
    name: String,
    sha256: String,
}

#[derive(Serialize)]
struct Verdict {
    check: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<String>,
}

#[derive(Serialize)]
struct Listing {
    label: String,
    value: serde_json::Value,
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Vec<InputDigest>,
    verdicts: Vec<Verdict>,
    listings: Vec<Listing>,
    /// full definition document, printed verbatim in text mode so that
    /// `catalog <name>` output can be piped back into other commands
    #[serde(skip)]
    document: Option<String>,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            verdicts: Vec::new(),
            listings: Vec::new(),
            document: None,
        }
    }

    fn input(&mut self, name: &str, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.inputs.push(InputDigest {
            name: name.to_string(),
            sha256: format!("{:x}", hasher.finalize()),
        });
    }

    fn pass(&mut self, check: &str) {
        self.verdicts.push(Verdict {
            check: check.to_string(),
            passed: true,
            counterexample: None,
        });
    }

    fn fail(&mut self, check: &str, witness: String) {
        self.verdicts.push(Verdict {
            check: check.to_string(),
            passed: false,
            counterexample: Some(witness),
        });
    }

    fn verdict(&mut self, check: &str, res: bimeasure::algebra::Check) {
        match res {
            Ok(()) => self.pass(check),
            Err(ce) => self.fail(check, ce.to_string()),
        }
    }

    fn flag(&mut self, check: &str, ok: bool) {
        if ok {
            self.pass(check);
        } else {
            self.fail(check, "property does not hold".into());
        }
    }

    fn listing(&mut self, label: &str, value: serde_json::Value) {
        self.listings.push(Listing {
            label: label.to_string(),
            value,
        });
    }

    fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    fn render_text(&self) -> String {
        if let Some(doc) = &self.document {
            return doc.clone();
        }
        let mut out = format!("command: {}\n", self.command);
        for i in &self.inputs {
            out.push_str(&format!("input {} sha256={}\n", i.name, i.sha256));
        }
        for v in &self.verdicts {
            if v.passed {
                out.push_str(&format!("check {}: pass\n", v.check));
            } else {
                out.push_str(&format!(
                    "check {}: FAIL ({})\n",
                    v.check,
                    v.counterexample.as_deref().unwrap_or("")
                ));
            }
        }
        for l in &self.listings {
            out.push_str(&format!("{}: {}\n", l.label, l.value));
        }
        out
    }

    fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = dispatch(&cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(report) => {
            let rendered = match cli.format.as_str() {
                "json" => report.render_json(),
                "text" => report.render_text(),
                other => {
                    eprintln!("input error: unknown format `{other}`");
                    return ExitCode::from(2);
                }
            };
            print!("{rendered}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("input error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let field = schema::parse_field_flag(&cli.field).map_err(CliError::from_core)?;
    match &cli.cmd {
        Cmd::Validate { file } => cmd_validate(file),
        Cmd::Dual { carrier } => cmd_dual(carrier, field),
        Cmd::Abelianize { carrier } => cmd_abelianize(carrier, field),
        Cmd::CocomPart { carrier } => cmd_cocom_part(carrier, field),
        Cmd::CheckMeasuring { file } => cmd_check_measuring(file),
        Cmd::CheckBimeasuring { file } => cmd_check_bimeasuring(file),
        Cmd::EnumerateBimeasurings { n, t, a } => {
            cmd_enumerate_bimeasurings(n, t, a, field, cli.budget)
        }
        Cmd::Bismash { pair } => cmd_bismash(pair, field),
        Cmd::CheckSkew { file, pair, a } => cmd_check_skew(file, pair.as_deref(), a.as_deref(), field),
        Cmd::SkewGroup { pair, a } => cmd_skew_group(pair, a, field, cli.budget),
        Cmd::HopfModuleCheck { file } => cmd_hopf_module_check(file),
        Cmd::FundamentalIso { file, regular } => {
            cmd_fundamental_iso(file.as_deref(), regular.as_deref(), field)
        }
        Cmd::RegAutAction { h, a } => cmd_reg_aut_action(h, a, field, cli.budget),
        Cmd::AdjunctionCheck { t, n } => cmd_adjunction_check(t, n, field, cli.budget),
        Cmd::TensorAlpha { t, s } => cmd_tensor_alpha(t, s, field),
        Cmd::UniversalityCheck { b } => cmd_universality_check(b, field, cli.budget),
        Cmd::Catalog { name } => cmd_catalog(name, field),
    }
}

// ---------------------------------------------------------------- loading

fn read_def(path: &std::path::Path) -> Result<(DefinitionFile, Vec<u8>), CliError> {
    let bytes = if path == std::path::Path::new("-") {
        use std::io::Read;
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?
    };
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Input(format!("{} is not UTF-8", path.display())))?;
    let def = DefinitionFile::from_json(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((def, bytes))
}

/// Catalog Hopf algebras addressable by name.
fn catalog_hopf(name: &str, field: FieldSpec) -> Option<Result<HopfAlgebra, CliError>> {
    let build = |g: catalog::GroupTable| {
        catalog::group_algebra(&g, field).map_err(CliError::from_core)
    };
    match name {
        "k" => Some(Ok(catalog::ground_field_hopf(field))),
        "kS3" => Some(build(catalog::symmetric_group_s3())),
        "kA5" => Some(build(catalog::alternating_group_a5())),
        "H4" => Some(catalog::sweedler_h4(field).map_err(CliError::from_core)),
        "truncated-poly" => match field {
            FieldSpec::Prime(p) => Some(catalog::truncated_poly_hopf(p).map_err(CliError::from_core)),
            FieldSpec::Rationals => Some(Err(CliError::Input(
                "truncated-poly needs a prime field".into(),
            ))),
        },
        _ => name
            .strip_prefix("kC")
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(|n| build(catalog::cyclic_group(n))),
    }
}

/// Catalog algebras that are not underlying a catalog Hopf algebra.
fn catalog_algebra(name: &str, field: FieldSpec) -> Option<Result<Algebra, CliError>> {
    match name {
        "dual-numbers" => Some(Ok(catalog::dual_numbers(field))),
        "split" => Some(Ok(catalog::split_idempotents(field))),
        "m2" => Some(catalog::matrix_algebra(2, field).map_err(CliError::from_core)),
        _ => catalog_hopf(name, field).map(|r| r.map(|h| h.algebra().clone())),
    }
}

fn load_hopf(spec: &str, field: FieldSpec) -> Result<(HopfAlgebra, Vec<u8>), CliError> {
    if let Some(res) = catalog_hopf(spec, field) {
        return res.map(|h| (h, spec.as_bytes().to_vec()));
    }
    let (def, bytes) = read_def(std::path::Path::new(spec))?;
    let h = schema::decode_hopf(&def).map_err(CliError::from_core)?;
    Ok((h, bytes))
}

fn load_bialgebra(spec: &str, field: FieldSpec) -> Result<(Bialgebra, Vec<u8>), CliError> {
    if let Some(res) = catalog_hopf(spec, field) {
        return res.map(|h| (h.bialgebra.clone(), spec.as_bytes().to_vec()));
    }
    let (def, bytes) = read_def(std::path::Path::new(spec))?;
    let b = schema::decode_bialgebra(&def).map_err(CliError::from_core)?;
    Ok((b, bytes))
}

fn load_algebra(spec: &str, field: FieldSpec) -> Result<(Algebra, Vec<u8>), CliError> {
    if let Some(res) = catalog_algebra(spec, field) {
        return res.map(|a| (a, spec.as_bytes().to_vec()));
    }
    let (def, bytes) = read_def(std::path::Path::new(spec))?;
    let a = if def.kind == "algebra" {
        schema::decode_algebra(&def).map_err(CliError::from_core)?
    } else {
        schema::decode_bialgebra(&def)
            .map_err(CliError::from_core)?
            .algebra
    };
    Ok((a, bytes))
}

fn load_pair(spec: &str, field: FieldSpec) -> Result<(MatchedPair, Vec<u8>), CliError> {
    if spec == "s3" {
        let mp = matched_pair::s3_matched_pair(field).map_err(CliError::from_core)?;
        return Ok((mp, spec.as_bytes().to_vec()));
    }
    let (def, bytes) = read_def(std::path::Path::new(spec))?;
    let mp = schema::decode_matched_pair(&def).map_err(CliError::from_core)?;
    Ok((mp, bytes))
}

fn decode_embedded<T>(
    member: &Option<Box<DefinitionFile>>,
    name: &str,
    decode: impl Fn(&DefinitionFile) -> Result<T, schema::SchemaError>,
) -> Result<T, CliError> {
    let def = member
        .as_ref()
        .ok_or_else(|| CliError::Input(format!("pairing file is missing member `{name}`")))?;
    decode(def).map_err(CliError::from_core)
}

fn psi_listing(psi: &BilinearPairing) -> serde_json::Value {
    serde_json::to_value(schema::encode_psi(psi).psi.unwrap()).unwrap()
}

fn emit_def(report: &mut Report, label: &str, def: &DefinitionFile) {
    report.listing(label, serde_json::to_value(def).unwrap());
}

// --------------------------------------------------------------- commands

fn cmd_validate(file: &std::path::Path) -> Result<Report, CliError> {
    let (def, bytes) = read_def(file)?;
    let mut report = Report::new("validate");
    report.input(&file.display().to_string(), &bytes);
    match def.kind.as_str() {
        "algebra" => {
            let a = schema::decode_algebra(&def).map_err(CliError::from_core)?;
            report.verdict("algebra axioms", a.validate());
        }
        "coalgebra" => {
            let c = schema::decode_coalgebra(&def).map_err(CliError::from_core)?;
            report.verdict("coalgebra axioms", c.validate());
        }
        "bialgebra" => {
            let b = schema::decode_bialgebra(&def).map_err(CliError::from_core)?;
            report.verdict("bialgebra axioms", b.validate());
        }
        "hopf" => {
            let h = schema::decode_hopf(&def).map_err(CliError::from_core)?;
            report.verdict("hopf axioms", h.validate());
        }
        "matched_pair" => {
            let mp = schema::decode_matched_pair(&def).map_err(CliError::from_core)?;
            match matched_pair::validate_matched_pair(&mp) {
                Ok(()) => report.pass("matched pair axioms"),
                Err(e) => report.fail("matched pair axioms", e.to_string()),
            }
        }
        "hopf_module" => {
            let hm = schema::decode_hopf_module(&def).map_err(CliError::from_core)?;
            report.verdict("hopf module axioms", hopf_modules::validate_hopf_module(&hm));
        }
        "pairing" => {
            return Err(CliError::Input(
                "pairing files are checked by check-measuring, check-bimeasuring or check-skew"
                    .into(),
            ));
        }
        other => return Err(CliError::Input(format!("unknown kind `{other}`"))),
    }
    Ok(report)
}

fn cmd_dual(carrier: &str, field: FieldSpec) -> Result<Report, CliError> {
    let mut report = Report::new("dual");
    // Hopf carriers dualize to Hopf algebras, plain bialgebras to bialgebras
    if let Ok((h, bytes)) = load_hopf(carrier, field) {
        report.input(carrier, &bytes);
        let dual = dual_hopf(&h).map_err(CliError::from_core)?;
        report.verdict("dual hopf axioms", dual.validate());
        emit_def(&mut report, "dual", &schema::encode_hopf(&dual, None));
        return Ok(report);
    }
    let (b, bytes) = load_bialgebra(carrier, field)?;
    report.input(carrier, &bytes);
    let dual = dual_bialgebra(&b).map_err(CliError::from_core)?;
    report.verdict("dual bialgebra axioms", dual.validate());
    emit_def(&mut report, "dual", &schema::encode_bialgebra(&dual, None));
    Ok(report)
}

fn cmd_abelianize(carrier: &str, field: FieldSpec) -> Result<Report, CliError> {
    let (h, bytes) = load_hopf(carrier, field)?;
    let mut report = Report::new("abelianize");
    report.input(carrier, &bytes);
    let qp = structure_ops::abelianization_hopf(&h).map_err(CliError::from_core)?;
    report.flag("quotient is commutative", qp.quotient.algebra.is_commutative());
    report.verdict("quotient bialgebra axioms", qp.quotient.validate());
    report.listing("ideal dimension", qp.ideal.dim().into());
    report.listing("quotient dimension", qp.quotient.dim().into());
    match qp.quotient_hopf() {
        Some(qh) => {
            report.verdict("quotient hopf axioms", qh.validate());
            emit_def(&mut report, "quotient", &schema::encode_hopf(&qh, None));
        }
        None => emit_def(
            &mut report,
            "quotient",
            &schema::encode_bialgebra(&qp.quotient, None),
        ),
    }
    Ok(report)
}

fn cmd_cocom_part(carrier: &str, field: FieldSpec) -> Result<Report, CliError> {
    let (h, bytes) = load_hopf(carrier, field)?;
    let mut report = Report::new("cocom-part");
    report.input(carrier, &bytes);
    let sub = structure_ops::cocommutative_part_hopf(&h).map_err(CliError::from_core)?;
    report.flag("part is cocommutative", sub.sub.is_cocommutative());
    report.verdict("part coalgebra axioms", sub.sub.validate());
    report.listing("part dimension", sub.dim().into());
    match (&sub.sub_bialgebra, &sub.sub_antipode) {
        (Some(b), Some(s)) => {
            let sh = HopfAlgebra::new(b.clone(), s.clone());
            report.verdict("part hopf axioms", sh.validate());
            emit_def(&mut report, "part", &schema::encode_hopf(&sh, None));
        }
        (Some(b), None) => emit_def(&mut report, "part", &schema::encode_bialgebra(b, None)),
        _ => emit_def(&mut report, "part", &schema::encode_coalgebra(&sub.sub, None)),
    }
    Ok(report)
}

fn cmd_check_measuring(file: &std::path::Path) -> Result<Report, CliError> {
    let (def, bytes) = read_def(file)?;
    let mut report = Report::new("check-measuring");
    report.input(&file.display().to_string(), &bytes);
    let c: Coalgebra = decode_embedded(&def.c, "c", schema::decode_coalgebra)?;
    let b: Algebra = decode_embedded(&def.b, "b", schema::decode_algebra)?;
    let a: Algebra = decode_embedded(&def.a, "a", schema::decode_algebra)?;
    let psi = schema::decode_psi(&def, c.dim, b.dim, a.dim).map_err(CliError::from_core)?;
    let witness = measuring::check_measuring(&psi, &c, &b, &a).map_err(CliError::from_core)?;
    report.verdict("measuring equations", witness.verdict);
    Ok(report)
}

fn cmd_check_bimeasuring(file: &std::path::Path) -> Result<Report, CliError> {
    let (def, bytes) = read_def(file)?;
    let mut report = Report::new("check-bimeasuring");
    report.input(&file.display().to_string(), &bytes);
    let n: Bialgebra = decode_embedded(&def.n, "n", schema::decode_bialgebra)?;
    let t: Bialgebra = decode_embedded(&def.t, "t", schema::decode_bialgebra)?;
    let a: Algebra = decode_embedded(&def.a, "a", schema::decode_algebra)?;
    let psi = schema::decode_psi(&def, n.dim(), t.dim(), a.dim).map_err(CliError::from_core)?;
    let witness = measuring::check_bimeasuring(&psi, &n, &t, &a).map_err(CliError::from_core)?;
    report.verdict("bimeasuring equations", witness.verdict);
    Ok(report)
}

fn cmd_enumerate_bimeasurings(
    n: &str,
    t: &str,
    a: &str,
    field: FieldSpec,
    budget: u64,
) -> Result<Report, CliError> {
    let (nb, nbytes) = load_bialgebra(n, field)?;
    let (tb, tbytes) = load_bialgebra(t, field)?;
    let (aa, abytes) = load_algebra(a, field)?;
    let mut report = Report::new("enumerate-bimeasurings");
    report.input(n, &nbytes);
    report.input(t, &tbytes);
    report.input(a, &abytes);
    let found =
        measuring::enumerate_bimeasurings(&nb, &tb, &aa, budget).map_err(CliError::from_core)?;
    report.listing("count", found.len().into());
    for (i, psi) in found.iter().enumerate() {
        report.listing(&format!("bimeasuring {i}"), psi_listing(psi));
    }
    Ok(report)
}

fn cmd_bismash(pair: &str, field: FieldSpec) -> Result<Report, CliError> {
    let (mp, bytes) = load_pair(pair, field)?;
    let mut report = Report::new("bismash");
    report.input(pair, &bytes);
    match matched_pair::validate_matched_pair(&mp) {
        Ok(()) => report.pass("matched pair axioms"),
        Err(e) => {
            report.fail("matched pair axioms", e.to_string());
            return Ok(report);
        }
    }
    let bs = matched_pair::bismash(&mp).map_err(CliError::from_core)?;
    report.verdict("bismash hopf axioms", bs.hopf.validate());
    report.listing("dimension", bs.hopf.dim().into());
    emit_def(&mut report, "bismash", &schema::encode_hopf(&bs.hopf, None));
    Ok(report)
}

fn cmd_check_skew(
    file: &std::path::Path,
    pair_flag: Option<&str>,
    a_flag: Option<&str>,
    field: FieldSpec,
) -> Result<Report, CliError> {
    let (def, bytes) = read_def(file)?;
    let mut report = Report::new("check-skew");
    report.input(&file.display().to_string(), &bytes);
    let mp = if let Some(p) = &def.pair {
        schema::decode_matched_pair(p).map_err(CliError::from_core)?
    } else {
        let name = pair_flag.ok_or_else(|| {
            CliError::Input("no `pair` member in the file and no --pair flag".into())
        })?;
        load_pair(name, field)?.0
    };
    let a = if let Some(adef) = &def.a {
        schema::decode_algebra(adef).map_err(CliError::from_core)?
    } else {
        load_algebra(a_flag.unwrap_or("k"), mp.field())?.0
    };
    let psi =
        schema::decode_psi(&def, mp.n.dim(), mp.t.dim(), a.dim).map_err(CliError::from_core)?;
    let witness =
        matched_pair::check_skew_bimeasuring(&mp, &psi, &a).map_err(CliError::from_core)?;
    report.verdict("skew bimeasuring equations", witness.verdict);
    Ok(report)
}

fn cmd_skew_group(pair: &str, a: &str, field: FieldSpec, budget: u64) -> Result<Report, CliError> {
    let (mp, pbytes) = load_pair(pair, field)?;
    let (aa, abytes) = load_algebra(a, mp.field())?;
    let mut report = Report::new("skew-group");
    report.input(pair, &pbytes);
    report.input(a, &abytes);
    let found = matched_pair::enumerate_skew_bimeasurings(&mp, &aa, budget)
        .map_err(CliError::from_core)?;
    report.listing("order", found.len().into());
    let index_of = |psi: &BilinearPairing| found.iter().position(|q| q == psi);
    let unit = matched_pair::skew_unit(&mp, &aa);
    report.flag("unit is listed", index_of(&unit).is_some());
    let mut closed = true;
    let mut invertible = true;
    let mut table: Vec<Vec<usize>> = Vec::new();
    for x in &found {
        let mut row = Vec::new();
        for y in &found {
            let prod = matched_pair::skew_convolve(&mp, x, y, &aa);
            match index_of(&prod) {
                Some(i) => row.push(i),
                None => {
                    closed = false;
                    row.push(usize::MAX);
                }
            }
        }
        table.push(row);
        if matched_pair::skew_inverse(&mp, x, &aa).and_then(|i| index_of(&i)).is_none() {
            invertible = false;
        }
    }
    report.flag("closed under convolution", closed);
    report.flag("inverses are listed", invertible);
    if closed {
        report.listing("multiplication table", serde_json::to_value(&table).unwrap());
    }
    for (i, psi) in found.iter().enumerate() {
        report.listing(&format!("element {i}"), psi_listing(psi));
    }
    Ok(report)
}

fn cmd_hopf_module_check(file: &std::path::Path) -> Result<Report, CliError> {
    let (def, bytes) = read_def(file)?;
    let mut report = Report::new("hopf-module-check");
    report.input(&file.display().to_string(), &bytes);
    let hm = schema::decode_hopf_module(&def).map_err(CliError::from_core)?;
    report.verdict("hopf module axioms", hopf_modules::validate_hopf_module(&hm));
    Ok(report)
}

fn cmd_fundamental_iso(
    file: Option<&std::path::Path>,
    regular: Option<&str>,
    field: FieldSpec,
) -> Result<Report, CliError> {
    let mut report = Report::new("fundamental-iso");
    let hm = match (file, regular) {
        (Some(path), None) => {
            let (def, bytes) = read_def(path)?;
            report.input(&path.display().to_string(), &bytes);
            schema::decode_hopf_module(&def).map_err(CliError::from_core)?
        }
        (None, Some(name)) => {
            let (h, bytes) = load_hopf(name, field)?;
            report.input(name, &bytes);
            hopf_modules::regular_module(&h)
        }
        _ => {
            return Err(CliError::Input(
                "give exactly one of a module file or --regular <carrier>".into(),
            ))
        }
    };
    match hopf_modules::validate_hopf_module(&hm) {
        Ok(()) => report.pass("hopf module axioms"),
        Err(ce) => {
            report.fail("hopf module axioms", ce.to_string());
            return Ok(report);
        }
    }
    let iso = hopf_modules::fundamental_iso(&hm).map_err(CliError::from_core)?;
    let d = hm.h.dim() * iso.data.dim();
    report.flag("theta is bijective", {
        let id = Matrix::identity(hm.field(), d);
        hm.dim == d
            && iso.theta.mul(&iso.theta_inv) == id
            && iso.theta_inv.mul(&iso.theta) == id
    });
    report.listing("coinvariant dimension", iso.data.dim().into());
    Ok(report)
}

fn cmd_reg_aut_action(h: &str, a: &str, field: FieldSpec, budget: u64) -> Result<Report, CliError> {
    let (hh, hbytes) = load_hopf(h, field)?;
    let (aa, abytes) = load_algebra(a, field)?;
    let mut report = Report::new("reg-aut-action");
    report.input(h, &hbytes);
    report.input(a, &abytes);
    let psis = hopf_modules::enumerate_reg_plus(&hh, &aa, budget).map_err(CliError::from_core)?;
    report.listing("group order", psis.len().into());
    let mut automorphisms = true;
    let mut round_trips = true;
    let mut modules_validate = true;
    let mut tables_match = true;
    let phis: Vec<Matrix> = psis
        .iter()
        .map(|psi| hopf_modules::alpha(&hh, &aa, psi))
        .collect::<Result<_, _>>()
        .map_err(CliError::from_core)?;
    for (psi, phi) in psis.iter().zip(&phis) {
        if hopf_modules::check_automorphism(&hh, &aa, phi).is_err() {
            automorphisms = false;
        }
        let mubar = hopf_modules::beta(&hh, &aa, phi).map_err(CliError::from_core)?;
        if &hopf_modules::beta_inv(&hh, &aa, &mubar) != phi
            || &hopf_modules::alpha_inv(&hh, &aa, phi) != psi
        {
            round_trips = false;
        }
        let tm = hopf_modules::twisted_module(&hh, &aa, &mubar);
        if hopf_modules::validate_hopf_module(&tm).is_err() {
            modules_validate = false;
        }
    }
    // convolution on functionals must transport to composition of phis
    for (psi1, phi1) in psis.iter().zip(&phis) {
        for (psi2, phi2) in psis.iter().zip(&phis) {
            let conv = hopf_modules::reg_convolve(&hh, &aa, psi1, psi2);
            let composed = phi1.mul(phi2);
            if hopf_modules::alpha(&hh, &aa, &conv)
                .map(|p| p != composed)
                .unwrap_or(true)
            {
                tables_match = false;
            }
        }
    }
    report.flag("images are comodule automorphisms", automorphisms);
    report.flag("alpha and beta round-trip", round_trips);
    report.flag("twisted modules validate", modules_validate);
    report.flag("convolution transports to composition", tables_match);
    Ok(report)
}

fn cmd_adjunction_check(t: &str, n: &str, field: FieldSpec, budget: u64) -> Result<Report, CliError> {
    let (tb, tbytes) = load_bialgebra(t, field)?;
    let (nb, nbytes) = load_bialgebra(n, field)?;
    let mut report = Report::new("adjunction-check");
    report.input(t, &tbytes);
    report.input(n, &nbytes);
    let dual_n = dual_bialgebra(&nb).map_err(CliError::from_core)?;
    let dual_t = dual_bialgebra(&tb).map_err(CliError::from_core)?;
    let to_dual_n =
        enumerate::enumerate_bialgebra_maps(&tb, &dual_n, budget).map_err(CliError::from_core)?;
    let to_dual_t =
        enumerate::enumerate_bialgebra_maps(&nb, &dual_t, budget).map_err(CliError::from_core)?;
    report.listing("maps T -> N dual", to_dual_n.len().into());
    report.listing("maps N -> T dual", to_dual_t.len().into());
    report.flag("cardinalities agree", to_dual_n.len() == to_dual_t.len());
    let mut transposes = true;
    for f in &to_dual_n {
        match duality::adjunction_transpose(f, &tb, &nb) {
            Ok(g) => {
                if !to_dual_t.contains(&g)
                    || !duality::transpose_defining_identity(f, &g)
                    || duality::adjunction_transpose(&g, &nb, &tb).ok().as_ref() != Some(f)
                {
                    transposes = false;
                }
            }
            Err(_) => transposes = false,
        }
    }
    report.flag("transposes are mutually inverse", transposes);
    Ok(report)
}

fn cmd_tensor_alpha(t: &str, s: &str, field: FieldSpec) -> Result<Report, CliError> {
    let (tb, tbytes) = load_bialgebra(t, field)?;
    let (sb, sbytes) = load_bialgebra(s, field)?;
    let mut report = Report::new("tensor-alpha");
    report.input(t, &tbytes);
    report.input(s, &sbytes);
    let cmp = duality::tensor_comparison_alpha(&tb, &sb).map_err(CliError::from_core)?;
    report.flag("alpha is bijective", cmp.alpha.inverse().is_some());
    let id = Matrix::identity(field, cmp.alpha.cols);
    report.flag(
        "retraction composes to the identity",
        cmp.retraction.mul(&cmp.alpha) == id || cmp.alpha.mul(&cmp.retraction) == id,
    );
    Ok(report)
}

fn cmd_universality_check(b: &str, field: FieldSpec, budget: u64) -> Result<Report, CliError> {
    let (bb, bbytes) = load_bialgebra(b, field)?;
    let mut report = Report::new("universality-check");
    report.input(b, &bbytes);
    let cand = duality::finite_dual_universal(&bb);
    let tests: Vec<Coalgebra> = ["k", "kC2", "kC3"]
        .iter()
        .map(|name| load_bialgebra(name, field).map(|(x, _)| x.coalgebra))
        .collect::<Result<_, _>>()?;
    let outcomes = duality::universality_check(&cand, &bb.algebra, &tests, budget)
        .map_err(CliError::from_core)?;
    for o in &outcomes {
        report.listing(
            &format!("test coalgebra {} measurings", o.test_index),
            o.measurings.into(),
        );
        report.flag(
            &format!("test coalgebra {} factors uniquely", o.test_index),
            o.failures.is_empty(),
        );
    }
    Ok(report)
}

fn cmd_catalog(name: &str, field: FieldSpec) -> Result<Report, CliError> {
    let mut report = Report::new("catalog");
    report.input(name, name.as_bytes());
    if let Some(res) = catalog_hopf(name, field) {
        let def = schema::encode_hopf(&res?, None);
        emit_def(&mut report, "carrier", &def);
        report.document = Some(format!("{}\n", def.to_json()));
        return Ok(report);
    }
    if let Some(res) = catalog_algebra(name, field) {
        let def = schema::encode_algebra(&res?, None);
        emit_def(&mut report, "carrier", &def);
        report.document = Some(format!("{}\n", def.to_json()));
        return Ok(report);
    }
    Err(CliError::Input(format!("unknown catalog name `{name}`")))
}
