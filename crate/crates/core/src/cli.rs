//! Command-line front end.
//!
//! Exit codes: 0 answered, 1 usage error, 2 outside the proved statements,
//! 3 unknown (table gap or an undetermined quantity).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abelian::{AbGroup, Prime};
use crate::bundles::{classify_bundles, projection_induced_map_kind, reduce_class};
use crate::error::{out_of_scope, Error, Result};
use crate::gauge::{self, tags, Localization, PlocalVariant};
use crate::manifold::{self, normalize, ManifoldSpec};
use crate::oracle::{self, ChainComplex};
use crate::selftest;
use crate::tables::{self, LieGroupId, SpaceKey, TableEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sphere-gauge",
    version,
    about = "Gauge groups over S^3-bundles over S^4"
)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify principal G-bundles over M_{l,m}.
    Classify(ClassifyArgs),
    /// The base manifolds M_{l,m}.
    #[command(subcommand)]
    Manifold(ManifoldCommand),
    /// Gauge group decompositions and homotopy groups.
    #[command(subcommand)]
    Gauge(GaugeCommand),
    /// Raw homotopy table queries.
    #[command(subcommand)]
    Tables(TablesCommand),
    /// Independent cellular homology.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
struct LmArgs {
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long)]
    group: LieGroupId,
    #[command(flatten)]
    lm: LmArgs,
    /// Also reduce this bundle class.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
}

#[derive(Debug, Subcommand)]
enum ManifoldCommand {
    /// Decide homotopy equivalence of M_a and M_b.
    Equiv {
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        a: (i64, i64),
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        b: (i64, i64),
    },
    /// Integral homology in degrees 0..7.
    Homology(LmArgs),
    /// Homotopy type of the suspension, p-local with --p.
    Suspend {
        #[command(flatten)]
        lm: LmArgs,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Normal form, 4-skeleton and bottom-cell cofibre.
    Info(LmArgs),
}

#[derive(Debug, Args)]
struct GaugeArgs {
    #[arg(long)]
    group: LieGroupId,
    #[command(flatten)]
    lm: LmArgs,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    k: i64,
    /// Localize at this prime (needed for m >= 2).
    #[arg(long)]
    p: Option<u64>,
    /// The pointed gauge group.
    #[arg(long)]
    pointed: bool,
    /// Loop the pointed gauge group once.
    #[arg(long)]
    looped: bool,
}

#[derive(Debug, Subcommand)]
enum GaugeCommand {
    /// Decompose the gauge group into a product.
    Decompose(GaugeArgs),
    /// Homotopy group pi_n of the gauge group.
    Pi {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// pi_i(G; Z_{p^r}).
    Coeff {
        #[arg(long)]
        group: LieGroupId,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
    },
    /// Compare G^k(S^7) and G^{k'}(S^7).
    EquivS7 {
        #[arg(long)]
        group: LieGroupId,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
        /// integral, rational, or a prime such as p=3.
        #[arg(long, default_value = "integral")]
        locality: Localization,
    },
    /// Compare SU(5)-gauge groups over M_{l,0}.
    EquivSu5 {
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
    },
}

#[derive(Debug, Subcommand)]
enum TablesCommand {
    /// Look up pi_i of a sphere or Lie group.
    Lookup {
        /// e.g. S^3, Sp2, SU(4).
        #[arg(long)]
        space: SpaceKey,
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Homology by Smith normal form.
    Homology {
        #[arg(
            long,
            allow_hyphen_values = true,
            requires = "m",
            conflicts_with = "complex"
        )]
        l: Option<i64>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "complex")]
        m: Option<i64>,
        /// Chain complex in the text matrix format.
        #[arg(long)]
        complex: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected l,m but got '{s}'"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("'{t}': {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Outcome of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
    pub json_mode: bool,
}

impl QueryResult {
    /// What the binary prints: JSON in `--json` mode, text otherwise.
    pub fn output(&self) -> String {
        if self.json_mode {
            serde_json::to_string_pretty(&self.json).expect("JSON values serialize")
        } else {
            self.text.clone()
        }
    }
}

#[derive(Debug, Default)]
struct Answer {
    text: String,
    result: Value,
    caveats: Vec<String>,
    theorem: Option<&'static str>,
    citation: Option<String>,
    provenance: Vec<TableEntry>,
    exit_code: i32,
}

impl Answer {
    fn new(text: impl Into<String>, result: impl Serialize) -> Self {
        Answer {
            text: text.into(),
            result: serde_json::to_value(result).expect("results serialize"),
            ..Default::default()
        }
    }

    fn theorem(mut self, tag: &'static str) -> Self {
        self.theorem = Some(tag);
        self.citation = Some(gauge::citation(tag).to_string());
        self
    }

    fn cite(mut self, citation: impl Into<String>) -> Self {
        self.citation = Some(citation.into());
        self
    }

    fn caveats(mut self, caveats: Vec<String>) -> Self {
        self.caveats = caveats;
        self
    }

    fn provenance(mut self, provenance: Vec<TableEntry>) -> Self {
        self.provenance = provenance;
        self
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify(_) => "classify",
        Command::Manifold(ManifoldCommand::Equiv { .. }) => "manifold equiv",
        Command::Manifold(ManifoldCommand::Homology(_)) => "manifold homology",
        Command::Manifold(ManifoldCommand::Suspend { .. }) => "manifold suspend",
        Command::Manifold(ManifoldCommand::Info(_)) => "manifold info",
        Command::Gauge(GaugeCommand::Decompose(_)) => "gauge decompose",
        Command::Gauge(GaugeCommand::Pi { .. }) => "gauge pi",
        Command::Gauge(GaugeCommand::Coeff { .. }) => "gauge coeff",
        Command::Gauge(GaugeCommand::EquivS7 { .. }) => "gauge equiv-s7",
        Command::Gauge(GaugeCommand::EquivSu5 { .. }) => "gauge equiv-su5",
        Command::Tables(_) => "tables lookup",
        Command::Oracle(_) => "oracle homology",
        Command::Selftest => "selftest",
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::OutOfScope(_) => EXIT_OUT_OF_SCOPE,
        Error::Unknown(_) | Error::Overflow(_) | Error::TableData { .. } => EXIT_UNKNOWN,
        Error::InvalidInput(_) | Error::Parse(_) | Error::MixedLocality(..) => EXIT_USAGE,
    }
}

fn status_for(code: i32) -> &'static str {
    match code {
        EXIT_OK => "answered",
        EXIT_OUT_OF_SCOPE => "out-of-scope",
        EXIT_UNKNOWN => "unknown",
        _ => "usage-error",
    }
}

fn envelope(command: &str, code: i32, answer: Option<&Answer>, error: Option<String>) -> Value {
    let a = answer;
    json!({
        "command": command,
        "status": status_for(code),
        "text": a.map(|a| a.text.clone()),
        "result": a.map_or(Value::Null, |a| a.result.clone()),
        "caveats": a.map_or(Vec::new(), |a| a.caveats.clone()),
        "theorem": a.and_then(|a| a.theorem),
        "citation": a.and_then(|a| a.citation.clone()),
        "provenance": a.map_or(Vec::new(), |a| a.provenance.clone()),
        "error": error,
    })
}

/// Run one command; `argv` excludes the program name.
pub fn run<I, T>(argv: I) -> QueryResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut args: Vec<std::ffi::OsString> = vec!["sphere-gauge".into()];
    args.extend(argv.into_iter().map(Into::into));
    let json_requested = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return QueryResult {
                json: envelope("", code, None, Some(text.clone())),
                text,
                exit_code: code,
                json_mode: json_requested && code != EXIT_OK,
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok(answer) => {
            let mut text = answer.text.clone();
            for c in &answer.caveats {
                text.push_str(&format!("\ncaveat: {c}"));
            }
            QueryResult {
                json: envelope(
                    name,
                    answer.exit_code,
                    Some(&answer),
                    (answer.exit_code != EXIT_OK).then(|| answer.text.clone()),
                ),
                text,
                exit_code: answer.exit_code,
                json_mode: cli.json,
            }
        }
        Err(e) => {
            let code = exit_code_for(&e);
            QueryResult {
                text: e.to_string(),
                json: envelope(name, code, None, Some(e.to_string())),
                exit_code: code,
                json_mode: cli.json,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<Answer> {
    match command {
        Command::Classify(args) => classify(args),
        Command::Manifold(c) => manifold_command(c),
        Command::Gauge(c) => gauge_command(c),
        Command::Tables(TablesCommand::Lookup { space, degree }) => {
            let entry = tables::active()?.lookup(space, degree)?;
            Ok(
                Answer::new(format!("{}  [{}]", entry.group, entry.source), &entry)
                    .cite(entry.source.clone())
                    .provenance(vec![entry]),
            )
        }
        Command::Oracle(OracleCommand::Homology { l, m, complex }) => {
            oracle_homology(l, m, complex)
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            let mut a = Answer::new(selftest::render(&checks), &checks);
            if checks.iter().any(|c| !c.passed) {
                a.exit_code = EXIT_USAGE;
            }
            Ok(a)
        }
    }
}

fn spec_of(lm: &LmArgs) -> Result<ManifoldSpec> {
    normalize(lm.l, lm.m)
}

fn prime_arg(p: u64) -> Result<Prime> {
    Prime::new(p)
}

fn classify(args: ClassifyArgs) -> Result<Answer> {
    let spec = spec_of(&args.lm)?;
    let c = classify_bundles(args.group, &spec)?;
    let size = c
        .size
        .map_or("countably many".to_string(), |n| n.to_string());
    let mut text = format!("{}  ({size} classes)", c.set);
    let mut result =
        json!({ "set": c.set.to_string(), "size": c.size, "manifold": spec.to_string() });
    if let Some(k) = args.k {
        let b = reduce_class(args.group, &spec, k)?;
        text.push_str(&format!("\nclass {k} reduces to {}", b.k));
        result["class"] = json!(b.k);
    }
    let citation = if spec.m() == 1 {
        "M_{l,1} ≃ S^7, so bundles are classified by π₆(G)".to_string()
    } else {
        "[M_{l,m}, BG] ≅ ℤ_m (ℤ_0 = ℤ) through the 4-skeleton when π₆(G) = 0".to_string()
    };
    Ok(Answer::new(text, result).cite(citation))
}

fn render_homology(h: &[AbGroup]) -> String {
    h.iter()
        .enumerate()
        .map(|(i, g)| format!("H_{i} = {g}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn manifold_command(c: ManifoldCommand) -> Result<Answer> {
    match c {
        ManifoldCommand::Equiv { a, b } => {
            let (sa, sb) = (normalize(a.0, a.1)?, normalize(b.0, b.1)?);
            let v = manifold::is_homotopy_equivalent(&sa, &sb);
            let word = if v.equivalent {
                "equivalent"
            } else {
                "not equivalent"
            };
            let citation = if sa.m() == 0 && sb.m() == 0 {
                "James-Whitehead: M_{l,0} ≃ M_{l',0} iff l ≡ ±l' mod 12"
            } else {
                "Crowley-Escher: for m > 0, M_{l,m} ≃ M_{l',m} iff l' ≡ αl mod (m,12) with α² ≡ 1"
            };
            Ok(Answer::new(
                format!("{word} ({})", v.reason),
                json!({
                    "a": sa.to_string(),
                    "b": sb.to_string(),
                    "equivalent": v.equivalent,
                    "reason": v.reason,
                }),
            )
            .cite(citation))
        }
        ManifoldCommand::Homology(lm) => {
            let spec = spec_of(&lm)?;
            let h = manifold::homology(&spec);
            Ok(Answer::new(
                render_homology(&h),
                json!({ "manifold": spec.to_string(), "homology": h }),
            )
            .cite("cells in degrees 0, 3, 4, 7 with the 4-cell attached by a degree-m map"))
        }
        ManifoldCommand::Suspend { lm, p } => {
            let spec = spec_of(&lm)?;
            let expr = match p {
                Some(p) => manifold::suspension_plocal(&spec, prime_arg(p)?)?,
                None => manifold::suspension(&spec)?,
            };
            Ok(Answer::new(
                expr.to_string(),
                json!({ "manifold": spec.to_string(), "expr": expr.to_string(), "tree": expr }),
            )
            .cite("ΣM_{l,0} ≃ ΣY_l ∨ S^5; ΣM_{l,m} ≃_(p) P^5(p^r) ∨ S^8 for m ≥ 2, p ≥ 5"))
        }
        ManifoldCommand::Info(lm) => {
            let spec = spec_of(&lm)?;
            let skeleton = manifold::skeleton4(&spec);
            let cofibre = manifold::cofibre_of_bottom_cell(&spec)
                .map(|e| e.to_string())
                .ok();
            let induced = projection_induced_map_kind(spec.m());
            let mut lines = vec![
                format!("normal form: {spec}"),
                format!("twist class: {}", spec.twist_class()),
                format!("4-skeleton: {skeleton}"),
            ];
            if let Some(c) = &cofibre {
                lines.push(format!("bottom-cell cofibre: {c}"));
            }
            lines.push(format!(
                "[S^4, BG] -> [M, BG]: {}",
                serde_json::to_value(induced).unwrap().as_str().unwrap()
            ));
            Ok(Answer::new(
                lines.join("\n"),
                json!({
                    "manifold": spec.to_string(),
                    "l": spec.l(),
                    "m": spec.m(),
                    "original": spec.original(),
                    "twist_class": spec.twist_class(),
                    "skeleton4": skeleton.to_string(),
                    "cofibre": cofibre,
                    "induced_map": induced,
                }),
            ))
        }
    }
}

fn plocal_variant(args: &GaugeArgs) -> PlocalVariant {
    match (args.pointed, args.looped) {
        (false, _) => PlocalVariant::Unpointed,
        (true, false) => PlocalVariant::Pointed,
        (true, true) => PlocalVariant::PointedLooped,
    }
}

fn decompose(args: GaugeArgs) -> Result<Answer> {
    let spec = spec_of(&args.lm)?;
    let g = args.group;
    let result = match (spec.m(), args.p) {
        (0, None) if args.looped => {
            return Err(out_of_scope(
                "looping is only modelled for p-local decompositions",
            ))
        }
        (0, None) if args.pointed => gauge::decompose_pointed_m0(g, spec.l(), args.k)?,
        (0, None) => gauge::decompose_unpointed_m0(g, spec.l(), args.k)?,
        (0, Some(_)) => {
            return Err(out_of_scope(
                "p-local decompositions are stated for m ≥ 2; drop --p for m = 0",
            ))
        }
        (1, _) => return decompose_over_s7(g, args.k, args.pointed),
        (m, Some(p)) => {
            gauge::decompose_plocal(g, spec.l(), m, args.k, prime_arg(p)?, plocal_variant(&args))?
        }
        (m, None) => {
            return Err(out_of_scope(format!(
                "for m = {m} only p-local decompositions (p ≥ 5) are known; pass --p"
            )))
        }
    };
    let text = result.expr.to_string();
    let value = json!({
        "manifold": spec.to_string(),
        "expr": text,
        "tree": result.expr,
        "pointed": result.pointed,
        "looped": result.looped,
    });
    Ok(Answer::new(text, value)
        .theorem(result.theorem)
        .caveats(result.caveats))
}

fn decompose_over_s7(g: LieGroupId, k: i64, pointed: bool) -> Result<Answer> {
    if pointed {
        return Err(out_of_scope(
            "pointed gauge groups over M_{l,1} ≃ S^7 are not decomposed",
        ));
    }
    let _ = k;
    if !g.pi6_vanishes() {
        return Err(out_of_scope(format!(
            "over S^7 only the trivial bundle with π₆({g}) = 0 has a known decomposition"
        )));
    }
    let expr = gauge::s7_decompose_trivial(g)?;
    let text = expr.to_string();
    Ok(Answer::new(
        text.clone(),
        json!({ "manifold": "S^7", "expr": text, "tree": expr, "pointed": false, "looped": 0 }),
    )
    .theorem(tags::S7))
}

fn pi_answer(res: gauge::PiResult, n: u32) -> Answer {
    let text = res.render();
    let mut caveats = Vec::new();
    if res.extension_assumed_split {
        caveats.push(
            "extension-assumed-split: both ends of the coefficient sequence are nonzero"
                .to_string(),
        );
    }
    if !res.is_complete() {
        caveats.push("Map*(Y_l,G) is left symbolic for l ≢ 0 mod 12".to_string());
    }
    let value = json!({
        "n": n,
        "group": res.group,
        "symbolic": res.symbolic,
        "complete": res.is_complete(),
        "extension_assumed_split": res.extension_assumed_split,
        "text": text,
    });
    Answer::new(text, value)
        .theorem(res.theorem)
        .caveats(caveats)
        .provenance(res.provenance)
}

fn gauge_pi(args: GaugeArgs, n: u32) -> Result<Answer> {
    let spec = spec_of(&args.lm)?;
    let g = args.group;
    match (spec.m(), args.p, args.pointed) {
        (0, None, true) => Ok(pi_answer(
            gauge::pi_pointed_gauge_m0(g, spec.l(), args.k, n)?,
            n,
        )),
        (0, None, false) => {
            if n != 0 {
                return Err(out_of_scope(
                    "for the unpointed gauge group only π₀ is tabulated; use --pointed",
                ));
            }
            let group = gauge::pi0_unpointed_gauge_m0(g, spec.l())?;
            let text = group.to_unicode();
            Ok(Answer::new(text.clone(), json!({ "n": 0, "group": group, "symbolic": [], "complete": true, "extension_assumed_split": false, "text": text }))
                .theorem(tags::PI0_TORSION_FREE))
        }
        (0, Some(_), _) | (1, _, _) => Err(out_of_scope(format!(
            "homotopy groups are computed for m = 0, and p-locally for m ≥ 2; got m = {}",
            spec.m()
        ))),
        (m, Some(p), true) => {
            let res = gauge::pi_pointed_gauge_plocal(g, m, args.k, n, prime_arg(p)?, args.looped)?;
            Ok(pi_answer(res, n))
        }
        (m, Some(p), false) => {
            if n != 0 {
                return Err(out_of_scope(
                    "for the unpointed gauge group only π₀ is computed; use --pointed",
                ));
            }
            Ok(pi_answer(
                gauge::pi0_unpointed_gauge_plocal(g, m, args.k, prime_arg(p)?)?,
                0,
            ))
        }
        (m, None, _) => Err(out_of_scope(format!(
            "for m = {m} only p-local homotopy groups are known; pass --p"
        ))),
    }
}

fn gauge_command(c: GaugeCommand) -> Result<Answer> {
    match c {
        GaugeCommand::Decompose(args) => decompose(args),
        GaugeCommand::Pi { gauge, n } => gauge_pi(gauge, n),
        GaugeCommand::Coeff {
            group,
            degree,
            p,
            r,
        } => {
            let c = gauge::pi_with_coefficients(group, degree, prime_arg(p)?, r)?;
            let caveats = if c.extension_assumed_split {
                vec![
                    "extension-assumed-split: both ends of the coefficient sequence are nonzero"
                        .to_string(),
                ]
            } else {
                Vec::new()
            };
            Ok(Answer::new(
                c.group.to_string(),
                json!({
                    "group": c.group,
                    "extension_assumed_split": c.extension_assumed_split,
                }),
            )
            .theorem(tags::COEFFICIENTS)
            .caveats(caveats)
            .provenance(c.provenance))
        }
        GaugeCommand::EquivS7 {
            group,
            k,
            k2,
            locality,
        } => {
            let v = gauge::s7_gauge_equivalent(group, k, k2, locality);
            let word = match v.decision {
                gauge::S7Decision::Equivalent => "equivalent",
                gauge::S7Decision::NotEquivalent => "not equivalent",
                gauge::S7Decision::OutOfScope => {
                    return Err(Error::OutOfScope(v.reason));
                }
            };
            let mut text = format!("{word} ({})", v.reason);
            if let Some(d) = &v.decomposition {
                text.push_str(&format!("\n{d}"));
            }
            Ok(Answer::new(
                text,
                json!({
                    "decision": v.decision,
                    "reason": v.reason,
                    "locality": locality,
                    "expr": v.decomposition.as_ref().map(ToString::to_string),
                }),
            )
            .theorem(tags::S7))
        }
        GaugeCommand::EquivSu5 { l, k, k2 } => {
            let (decision, reason) = gauge::su5_gauge_equivalent_m0(k, k2);
            let word = match decision {
                gauge::Su5Decision::EquivalentLocally => "equivalent rationally and at every prime",
                gauge::Su5Decision::Undecided => "undecided",
            };
            let mut a = Answer::new(
                format!("{word} ({reason})"),
                json!({
                    "manifold": normalize(l, 0)?.to_string(),
                    "decision": decision,
                    "reason": reason,
                }),
            )
            .theorem(tags::SU5);
            if decision == gauge::Su5Decision::Undecided {
                a.exit_code = EXIT_UNKNOWN;
            }
            Ok(a)
        }
    }
}

fn oracle_homology(l: Option<i64>, m: Option<i64>, complex: Option<PathBuf>) -> Result<Answer> {
    match (m, complex) {
        (Some(m), None) => {
            let spec = normalize(l.unwrap_or(0), m)?;
            let h = oracle::homology_of(&oracle::complex_for_manifold(spec.m()))?;
            let agrees = h[..] == manifold::homology(&spec)[..];
            let text = format!(
                "{}\nclosed form agrees: {}",
                render_homology(&h),
                if agrees { "yes" } else { "no" }
            );
            Ok(Answer::new(text, json!({ "manifold": spec.to_string(), "homology": h, "agrees_with_closed_form": agrees }))
                .cite("cellular homology by Smith normal form"))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            let c = ChainComplex::parse(&text)?;
            let h = oracle::homology_of(&c)?;
            Ok(Answer::new(
                render_homology(&h),
                json!({ "cells": c.cells(), "homology": h }),
            )
            .cite("cellular homology by Smith normal form"))
        }
        _ => Err(Error::InvalidInput(
            "pass --m (and --l) or --complex".into(),
        )),
    }
}
