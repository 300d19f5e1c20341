//! The `weylbraid` command line.
//!
//! `weylbraid <command> <TYPE><RANK> [--twisted] [--char 0|2] [--component G|D]
//! [--class SPEC] [--gamma FILE] [--format json|csv|pretty] [--jobs N] [--seed N]`
//!
//! Exit codes: 0 ok, 1 a verification failed, 2 usage, 3 internal assertion.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::eigen::{dim_fixed_space, l_good};
use crate::error::{Error, Result};
use crate::goodbraid::{good_rep_for_class, verify_good_power};
use crate::orbits::{codim, enumerate_orbits, lusztig_psi, Characteristic, Component, Setting};
use crate::rootsys::{members, CartanType, ClassParam, CoxeterDatum};
use crate::springer::{delta_c, gamma_to_indecomposable, structured_gamma, valuation_profile, GammaFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Class table: length, dim T, ellipticity, l_good.
    Classes,
    /// Check codim(O) = l_good(Ψ(O)) + dim T for every orbit.
    VerifyCodim,
    /// Good-position braid representative of one class.
    Goodbraid,
    /// δ_C for a class, dim Gr_γ for a γ file, or a per-class table.
    Springer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharArg {
    #[value(name = "0")]
    Zero,
    #[value(name = "2")]
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComponentArg {
    #[value(name = "G")]
    G,
    #[value(name = "D")]
    D,
}

#[derive(Debug, Parser)]
#[command(name = "weylbraid", version, about = "Good braid representatives and unipotent codimension checks")]
pub struct Cli {
    pub command: Command,
    /// Cartan type such as A3, C4, 2A5, 2D4, E6.
    #[arg(value_name = "TYPE")]
    pub label: String,
    /// Use the twisted form (same as a leading "2" in TYPE).
    #[arg(long)]
    pub twisted: bool,
    /// Characteristic: 0 (meaning "not 2") or 2.
    #[arg(long = "char", value_enum, default_value = "0")]
    pub characteristic: CharArg,
    /// Component of G ⊔ D; defaults to D for twisted types in char 2.
    #[arg(long, value_enum)]
    pub component: Option<ComponentArg>,
    /// Class: "3,1", "2,1|1", "-|2,2:I", "#k", "w:1,2", coxeter, identity, pos2.
    #[arg(long)]
    pub class: Option<String>,
    /// γ-datum JSON file (springer only).
    #[arg(long)]
    pub gamma: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Worker threads; 0 picks automatically.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub ctype: CartanType,
    pub char: Characteristic,
    pub component: Component,
    pub class: Option<String>,
    pub gamma: Option<PathBuf>,
    pub format: Format,
    pub jobs: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig> {
        let mut ctype = CartanType::parse(&cli.label)?;
        ctype.twisted |= cli.twisted;
        let char = match cli.characteristic {
            CharArg::Zero => Characteristic::NotTwo,
            CharArg::Two => Characteristic::Two,
        };
        let component = match cli.component {
            Some(ComponentArg::G) => Component::G,
            Some(ComponentArg::D) => Component::D,
            None if ctype.twisted && char == Characteristic::Two => Component::D,
            None => Component::G,
        };
        if cli.gamma.is_some() && cli.command != Command::Springer {
            return Err(Error::Parse("--gamma is only meaningful for springer".into()));
        }
        if cli.class.is_some() && cli.gamma.is_some() {
            return Err(Error::Parse("--class and --gamma are exclusive".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            ctype,
            char,
            component,
            class: cli.class.clone(),
            gamma: cli.gamma.clone(),
            format: cli.format,
            jobs: cli.jobs,
            seed: cli.seed,
        })
    }

    fn datum(&self) -> Result<Arc<CoxeterDatum>> {
        CoxeterDatum::build(self.ctype.family, self.ctype.rank, self.ctype.twisted)
    }

    fn type_label(&self) -> String {
        let t = if self.ctype.twisted { "2" } else { "" };
        format!("{}{}", t, self.ctype.family.letter())
    }
}

/// A command result in all three renderings.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub summary: Option<String>,
    pub ok: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json") + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("csv");
                for r in &self.rows {
                    w.write_record(r).expect("csv");
                }
                String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
            }
            Format::Pretty => {
                let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (w, c) in width.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&width)
                        .map(|(c, &w)| format!("{}{}", c, " ".repeat(w - c.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut s = line(self.header.clone());
                for r in &self.rows {
                    s += &line(r.iter().map(|c| c.as_str()).collect());
                }
                if let Some(sum) = &self.summary {
                    s += sum;
                    s += "\n";
                }
                s
            }
        }
    }
}

/// Exit code for a library error: internal assertions are 3, everything else is misuse.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 3,
        _ => 2,
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::Internal(e.to_string()))
}

fn word1(datum: &CoxeterDatum, w: &crate::rootsys::WeylElement) -> Vec<usize> {
    datum.reduced_word(w).into_iter().map(|g| g + 1).collect()
}

fn fmt_list<T: ToString>(v: &[T]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn require_class(cfg: &RunConfig, datum: &CoxeterDatum) -> Result<ClassParam> {
    let spec = cfg.class.as_deref().ok_or_else(|| Error::Parse("--class is required".into()))?;
    datum.parse_class(spec)
}

#[derive(Serialize)]
struct ClassRow {
    index: usize,
    class: String,
    param: ClassParam,
    length: usize,
    dim_t: usize,
    elliptic: bool,
    l_good: u64,
}

pub fn cmd_classes(cfg: &RunConfig) -> Result<Output> {
    let datum = cfg.datum()?;
    let classes = datum.enumerate_classes()?;
    let rows: Vec<ClassRow> = pool(cfg.jobs)?.install(|| {
        classes
            .par_iter()
            .enumerate()
            .map(|(index, cp)| {
                let rep = datum.class_representative(cp)?;
                let dim_t = dim_fixed_space(&datum, &rep);
                Ok(ClassRow {
                    index,
                    class: cp.to_string(),
                    param: cp.clone(),
                    length: datum.length(&rep.w),
                    dim_t,
                    elliptic: dim_t == 0,
                    l_good: l_good(&datum, cp)?,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(Output {
        header: vec!["#", "class", "length", "dim_t", "elliptic", "l_good"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.index.to_string(),
                    r.class.clone(),
                    r.length.to_string(),
                    r.dim_t.to_string(),
                    r.elliptic.to_string(),
                    r.l_good.to_string(),
                ]
            })
            .collect(),
        summary: Some(format!("{}: {} classes", datum.label(), rows.len())),
        json: json!({ "type": cfg.type_label(), "rank": cfg.ctype.rank, "classes": rows }),
        ok: true,
    })
}

/// One orbit of the codimension sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyRecord {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub char: Characteristic,
    pub component: Component,
    pub orbit: String,
    pub nu: Vec<usize>,
    pub eps: Option<crate::orbits::Eps>,
    pub codim: u64,
    pub dim_orbit: i64,
    pub psi: String,
    pub l_good: u64,
    pub dim_fixed: usize,
    pub ok: bool,
    /// `codim − (l_good + dim_fixed)` when nonzero.
    pub discrepancy: Option<i64>,
}

pub fn verify_codim(cfg: &RunConfig) -> Result<Vec<VerifyRecord>> {
    let setting = Setting::new(cfg.ctype, cfg.char, cfg.component)?;
    let datum = setting.weyl_datum()?;
    let orbits = enumerate_orbits(&setting);
    let dim_g = setting.dim_group() as i64;
    pool(cfg.jobs)?.install(|| {
        orbits
            .par_iter()
            .map(|op| {
                let psi = lusztig_psi(&setting, op)?;
                let c = codim(&setting, op)?;
                let lg = l_good(&datum, &psi)?;
                let df = dim_fixed_space(&datum, &datum.class_representative(&psi)?);
                let diff = c as i64 - (lg as i64 + df as i64);
                Ok(VerifyRecord {
                    family: cfg.type_label(),
                    rank: cfg.ctype.rank,
                    char: cfg.char,
                    component: cfg.component,
                    orbit: op.to_string(),
                    nu: op.nu().parts().to_vec(),
                    eps: op.eps().cloned(),
                    codim: c,
                    dim_orbit: dim_g - c as i64,
                    psi: psi.to_string(),
                    l_good: lg,
                    dim_fixed: df,
                    ok: diff == 0,
                    discrepancy: (diff != 0).then_some(diff),
                })
            })
            .collect()
    })
}

pub fn cmd_verify_codim(cfg: &RunConfig) -> Result<Output> {
    let recs = verify_codim(cfg)?;
    let passed = recs.iter().filter(|r| r.ok).count();
    let ok = passed == recs.len();
    let summary = format!("{} of {} orbits satisfy codim = l_good + dim T", passed, recs.len());
    Ok(Output {
        header: vec!["orbit", "codim", "psi", "l_good", "dim_t", "ok", "discrepancy"],
        rows: recs
            .iter()
            .map(|r| {
                vec![
                    r.orbit.clone(),
                    r.codim.to_string(),
                    r.psi.clone(),
                    r.l_good.to_string(),
                    r.dim_fixed.to_string(),
                    r.ok.to_string(),
                    r.discrepancy.map(|d| d.to_string()).unwrap_or_default(),
                ]
            })
            .collect(),
        json: json!({ "records": recs, "summary": { "orbits": recs.len(), "passed": passed, "ok": ok } }),
        summary: Some(summary),
        ok,
    })
}

pub fn cmd_goodbraid(cfg: &RunConfig) -> Result<Output> {
    let datum = cfg.datum()?;
    let cp = require_class(cfg, &datum)?;
    let rep = good_rep_for_class(&datum, &cp, 1)?;
    let check = verify_good_power(&rep);
    let lg = l_good(&datum, &cp)?;
    let element = word1(&datum, &rep.element.w);
    let braid = rep.braid.word();
    let factors: Vec<Value> = rep
        .power_factors
        .iter()
        .map(|&(j, e)| json!({ "parabolic": members(j, datum.rank()).iter().map(|g| g + 1).collect::<Vec<_>>(), "exponent": e }))
        .collect();
    let factor_str: Vec<String> = rep
        .power_factors
        .iter()
        .map(|&(j, e)| format!("w0{}^{}", fmt_list(&members(j, datum.rank()).iter().map(|g| g + 1).collect::<Vec<_>>()), e))
        .collect();
    let ok = check.ok && check.half_ok != Some(false) && rep.braid.length() as u64 == lg;
    Ok(Output {
        header: vec!["class", "element", "twist", "braid", "length", "l_good", "d", "power", "identity", "half_identity"],
        rows: vec![vec![
            cp.to_string(),
            fmt_list(&element),
            rep.element.k.to_string(),
            fmt_list(&braid),
            rep.braid.length().to_string(),
            lg.to_string(),
            rep.d.to_string(),
            factor_str.join(" "),
            check.ok.to_string(),
            check.half_ok.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
        ]],
        json: json!({
            "type": cfg.type_label(),
            "rank": cfg.ctype.rank,
            "class": cp.to_string(),
            "element": element,
            "twist": rep.element.k,
            "braid": rep.braid.to_json(),
            "braid_word": braid,
            "length": rep.braid.length(),
            "l_good": lg,
            "d": rep.d,
            "power_factors": factors,
            "identity": check.ok,
            "half_identity": check.half_ok,
        }),
        summary: None,
        ok,
    })
}

fn springer_class(cfg: &RunConfig, datum: &Arc<CoxeterDatum>, cp: &ClassParam) -> Result<Output> {
    let delta = delta_c(datum, cp)?;
    let profile: Vec<String> = valuation_profile(datum, cp)?.iter().map(|q| q.to_string()).collect();
    let lg = l_good(datum, cp)?;
    let df = dim_fixed_space(datum, &datum.class_representative(cp)?);
    Ok(Output {
        header: vec!["class", "delta", "l_good", "dim_t", "profile"],
        rows: vec![vec![cp.to_string(), delta.to_string(), lg.to_string(), df.to_string(), fmt_list(&profile)]],
        json: json!({
            "type": cfg.type_label(), "rank": cfg.ctype.rank, "class": cp.to_string(),
            "delta": delta, "l_good": lg, "dim_fixed": df, "profile": profile,
        }),
        summary: None,
        ok: true,
    })
}

fn springer_gamma(cfg: &RunConfig, path: &PathBuf) -> Result<Output> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    let file: GammaFile = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    let g = file.to_gamma()?;
    if g.datum.cartan_type() != Some(cfg.ctype) {
        return Err(Error::Parse(format!("γ file is of type {}{}, not {}", file.family, file.rank, cfg.ctype)));
    }
    let gb = gamma_to_indecomposable(&g)?;
    let jumps = g.root_jumps()?;
    let mut profile: Vec<num_rational::Rational64> =
        jumps.iter().flat_map(|&n| [num_rational::Rational64::new(n as i64, g.d as i64); 2]).collect();
    profile.sort();
    let profile: Vec<String> = profile.iter().map(|q| q.to_string()).collect();
    let angles: Vec<String> = gb.angles.iter().map(|q| q.to_string()).collect();
    let element = word1(&g.datum, &gb.rep.element.w);
    let braid = gb.rep.braid.word();
    Ok(Output {
        header: vec!["class", "d", "val_delta", "dim", "angles", "element", "braid_length", "profile"],
        rows: vec![vec![
            file.class.clone(),
            g.d.to_string(),
            gb.val_delta.to_string(),
            gb.dim.to_string(),
            fmt_list(&angles),
            fmt_list(&element),
            gb.rep.braid.length().to_string(),
            fmt_list(&profile),
        ]],
        json: json!({
            "type": cfg.type_label(), "rank": cfg.ctype.rank, "class": file.class,
            "d": g.d, "val_delta": gb.val_delta.to_string(), "dim": gb.dim.to_string(),
            "angles": angles, "element": element, "braid_word": braid,
            "braid_length": gb.rep.braid.length(), "profile": profile,
        }),
        summary: None,
        ok: true,
    })
}

#[derive(Serialize)]
struct SpringerRow {
    class: String,
    delta: u64,
    l_good: u64,
    dim_fixed: usize,
    sample_val_delta: String,
    sample_dim: String,
    sample_ok: bool,
}

/// Per-class δ_C plus one seeded random γ per class through the braid construction.
fn springer_table(cfg: &RunConfig, datum: &Arc<CoxeterDatum>) -> Result<Output> {
    let classes = datum.enumerate_classes()?;
    let rows: Vec<SpringerRow> = pool(cfg.jobs)?.install(|| {
        classes
            .par_iter()
            .enumerate()
            .map(|(i, cp)| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(i as u64));
                let g = structured_gamma(datum, cp, &mut rng)?;
                let gb = gamma_to_indecomposable(&g);
                let (vd, dim, ok) = match &gb {
                    Ok(gb) => (gb.val_delta.to_string(), gb.dim.to_string(), true),
                    Err(Error::Internal(e)) => (String::new(), e.clone(), false),
                    Err(e) => return Err(e.clone()),
                };
                Ok(SpringerRow {
                    class: cp.to_string(),
                    delta: delta_c(datum, cp)?,
                    l_good: l_good(datum, cp)?,
                    dim_fixed: dim_fixed_space(datum, &datum.class_representative(cp)?),
                    sample_val_delta: vd,
                    sample_dim: dim,
                    sample_ok: ok,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let ok = rows.iter().all(|r| r.sample_ok);
    Ok(Output {
        header: vec!["class", "delta", "l_good", "dim_t", "sample_val_delta", "sample_dim", "sample_ok"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.class.clone(),
                    r.delta.to_string(),
                    r.l_good.to_string(),
                    r.dim_fixed.to_string(),
                    r.sample_val_delta.clone(),
                    r.sample_dim.clone(),
                    r.sample_ok.to_string(),
                ]
            })
            .collect(),
        summary: Some(format!("{}: {} classes, seed {}", datum.label(), rows.len(), cfg.seed)),
        json: json!({ "type": cfg.type_label(), "rank": cfg.ctype.rank, "seed": cfg.seed, "classes": rows }),
        ok,
    })
}

pub fn cmd_springer(cfg: &RunConfig) -> Result<Output> {
    let datum = cfg.datum()?;
    if let Some(path) = &cfg.gamma {
        return springer_gamma(cfg, path);
    }
    if cfg.class.is_some() {
        let cp = require_class(cfg, &datum)?;
        return springer_class(cfg, &datum, &cp);
    }
    springer_table(cfg, &datum)
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    match cfg.command {
        Command::Classes => cmd_classes(cfg),
        Command::VerifyCodim => cmd_verify_codim(cfg),
        Command::Goodbraid => cmd_goodbraid(cfg),
        Command::Springer => cmd_springer(cfg),
    }
}

/// Parse, run and print; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::from_cli(&cli).and_then(|cfg| run(&cfg).map(|o| (cfg, o)));
    match result {
        Ok((cfg, out)) => {
            print!("{}", out.render(cfg.format));
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        let mut v = vec!["weylbraid"];
        v.extend_from_slice(args);
        RunConfig::from_cli(&Cli::try_parse_from(v).unwrap()).unwrap()
    }

    #[test]
    fn class_tables() {
        let a2 = cmd_classes(&cfg(&["classes", "A2"])).unwrap();
        let rows: Vec<(String, String, String)> =
            a2.rows.iter().map(|r| (r[1].clone(), r[3].clone(), r[5].clone())).collect();
        let want = [("3", "0", "2"), ("2,1", "1", "3"), ("1,1,1", "2", "6")];
        for w in want {
            assert!(rows.contains(&(w.0.into(), w.1.into(), w.2.into())), "{:?}", w);
        }
        assert_eq!(a2.rows.len(), 3);
        let c2 = cmd_classes(&cfg(&["classes", "C2"])).unwrap();
        assert_eq!(c2.rows.len(), 5);
        assert!(c2.rows.iter().any(|r| r[1] == "-|2" && r[5] == "5"));
        assert_eq!(cmd_classes(&cfg(&["classes", "G2"])).unwrap().rows.len(), 6);
    }

    #[test]
    fn defaults() {
        let c = cfg(&["verify-codim", "A3", "--twisted", "--char", "2"]);
        assert!(c.ctype.twisted);
        assert_eq!(c.component, Component::D);
        assert_eq!(cfg(&["verify-codim", "2A3"]).component, Component::G);
    }

    #[test]
    fn verify_sweeps() {
        for args in [&["verify-codim", "A3"][..], &["verify-codim", "2A3", "--char", "2", "--component", "D"], &["verify-codim", "C3", "--char", "2"]] {
            let out = cmd_verify_codim(&cfg(args)).unwrap();
            assert!(out.ok, "{:?}", args);
        }
        let a3 = cmd_verify_codim(&cfg(&["verify-codim", "A3"])).unwrap();
        assert_eq!(a3.rows.len(), 5);
    }

    #[test]
    fn goodbraid_examples() {
        let o = cmd_goodbraid(&cfg(&["goodbraid", "A2", "--class", "2,1"])).unwrap();
        assert_eq!(o.json["braid_word"], json!([1, 2, 1]));
        assert_eq!(o.json["d"], json!(2));
        assert!(o.ok);
        let o = cmd_goodbraid(&cfg(&["goodbraid", "C2", "--class", "pos2"])).unwrap();
        assert_eq!(o.json["braid_word"], json!([2, 1, 2, 1, 2]));
        assert_eq!(o.json["identity"], json!(true));
        let o = cmd_goodbraid(&cfg(&["goodbraid", "A2", "--class", "3"])).unwrap();
        assert_eq!(o.json["d"], json!(3));
        assert_eq!(o.json["length"], json!(2));
    }

    #[test]
    fn springer_examples() {
        let o = cmd_springer(&cfg(&["springer", "A1", "--class", "1,1"])).unwrap();
        assert_eq!(o.json["delta"], json!(1));
        let o = cmd_springer(&cfg(&["springer", "A2", "--class", "3"])).unwrap();
        assert_eq!(o.json["delta"], json!(0));
        assert!(cmd_springer(&cfg(&["springer", "2A2", "--class", "3"])).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["weylbraid", "classes"]), 2);
        assert_eq!(main_with_args(["weylbraid", "classes", "Q3"]), 2);
        assert_eq!(main_with_args(["weylbraid", "verify-codim", "G2"]), 2);
        assert_eq!(main_with_args(["weylbraid", "goodbraid", "A2", "--class", "5"]), 2);
        assert_eq!(exit_code(&Error::Internal("x".into())), 3);
    }

    #[test]
    fn renderings_are_deterministic() {
        let c = cfg(&["classes", "B3", "--jobs", "3"]);
        let a = cmd_classes(&c).unwrap();
        let b = cmd_classes(&cfg(&["classes", "B3", "--jobs", "1"])).unwrap();
        for f in [Format::Json, Format::Csv, Format::Pretty] {
            assert_eq!(a.render(f), b.render(f));
        }
        assert!(a.render(Format::Csv).starts_with("#,class,length,dim_t,elliptic,l_good\n"));
    }
}
