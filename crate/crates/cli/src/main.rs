//! `skewtab`: counts, table reproduction and asymptotic reports.
//!
//! Every command prints `key: value` lines, or a single JSON object with
//! `--json`. Big integers are decimal strings and rationals are `"p/q"`
//! strings, so nothing is lost to 53-bit floats.
//!
//! Exit codes: 0 ok, 1 methods disagree, 2 bad input, 3 invalid skew
//! shape, 4 internal integrality violation.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use skewtab::asymptotics::{
    mw_t_estimate, mw_t_shift_estimate, p_expansion_row, par_eps, par_eps_mass, vk_ratio, LimitSpec,
};
use skewtab::characters::f_count;
use skewtab::containment::{closed_form_for, containment, p_prob, ContainmentMethod};
use skewtab::partitions::partitions_of;
use skewtab::scalar::rat_to_f64;
use skewtab::sequences::t;
use skewtab::skew_count::{f_skew_det, SkewMethod, BRUTE_FORCE_CAP};
use skewtab::{Error, Partition, Rat, SkewShape};

#[derive(Parser, Debug)]
#[command(name = "skewtab", version, about = "Standard Young tableaux of skew shape and containment counts")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of SYT of shape outer/inner.
    Skew {
        #[arg(long, value_parser = parse_partition)]
        outer: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: Partition,
        #[arg(long, value_enum, default_value_t = SkewChoice::All)]
        method: SkewChoice,
    },
    /// Number of SYT with n cells containing a fixed tableau of shape alpha.
    Contain {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_enum, default_value_t = ContainChoice::All)]
        method: ContainChoice,
    },
    /// Containment counts next to the closed forms for small alpha.
    Table {
        #[arg(long = "max-k", default_value_t = 5)]
        max_k: usize,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
    },
    /// Asymptotic estimates against exact values.
    Asym {
        #[arg(value_enum)]
        kind: AsymKind,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        order: Option<u8>,
        /// Shift `j` for `shift`, scale of the sample shape for `vk`.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_parser = parse_partition)]
        alpha: Option<Partition>,
        #[arg(long, value_parser = parse_rat_list)]
        a: Option<RatList>,
        #[arg(long, value_parser = parse_rat_list)]
        b: Option<RatList>,
        #[arg(long, value_parser = parse_rat)]
        eps: Option<Rat>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SkewChoice {
    Brute,
    Det,
    Char,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ContainChoice {
    Direct,
    Thm1,
    Eq8,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AsymKind {
    Tn,
    Shift,
    Prob,
    Vk,
    Mass,
}

#[derive(Clone, Debug)]
struct RatList(Vec<Rat>);

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|e| format!("{s:?} is not a rational: {e}"))
}

fn parse_rat_list(s: &str) -> Result<RatList, String> {
    if s.trim().is_empty() {
        return Ok(RatList(Vec::new()));
    }
    s.split(',').map(parse_rat).collect::<Result<_, _>>().map(RatList)
}

/// A failed command: message plus exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::InvalidSkewShape { .. } => 3,
            e if e.is_integrality_violation() => 4,
            _ => 2,
        };
        Failure { code, message: err.to_string() }
    }
}

/// Output fields in insertion order, plus the overall agreement verdict.
struct Record {
    fields: Vec<(String, Value)>,
    agree: bool,
}

impl Record {
    fn new(command: &str) -> Self {
        Record { fields: vec![("command".into(), json!(command))], agree: true }
    }

    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.into(), value.into()));
    }

    fn to_json(&self) -> Value {
        Value::Object(self.fields.iter().cloned().collect::<Map<_, _>>())
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Array(items) => {
                    out.push_str(&format!("{key}:\n"));
                    for item in items {
                        out.push_str(&format!("  {}\n", inline(item)));
                    }
                }
                other => out.push_str(&format!("{key}: {}\n", inline(other))),
            }
        }
        out
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn int(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn rat(v: &Rat) -> Value {
    Value::String(format!("{}/{}", v.numer(), v.denom()))
}

fn rat_list(v: &[Rat]) -> Value {
    Value::String(v.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect::<Vec<_>>().join(","))
}

/// Non-finite reals become `null`.
fn real(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

fn required<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::input(format!("asym {kind} needs --{flag}")))
}

fn cmd_skew(outer: Partition, inner: Partition, choice: SkewChoice) -> Result<Record, Failure> {
    let shape = SkewShape::new(outer, inner)?;
    let mut rec = Record::new("skew");
    rec.put("outer", shape.outer().to_string());
    rec.put("inner", shape.inner().to_string());
    rec.put("cells", shape.size());
    let methods: Vec<SkewMethod> = match choice {
        SkewChoice::Brute => vec![SkewMethod::Brute],
        SkewChoice::Det => vec![SkewMethod::Determinant],
        SkewChoice::Char => vec![SkewMethod::Character],
        // brute force only runs where it is feasible
        SkewChoice::All => SkewMethod::ALL
            .into_iter()
            .filter(|m| *m != SkewMethod::Brute || shape.size() <= BRUTE_FORCE_CAP)
            .collect(),
    };
    let mut values = Map::new();
    let mut results = Vec::new();
    for m in &methods {
        let v = m.count(&shape)?;
        values.insert(m.name().to_string(), int(&v));
        results.push(v);
    }
    rec.put("method", if choice == SkewChoice::All { "all".to_string() } else { methods[0].name().to_string() });
    rec.put("value", int(&results[0]));
    if choice == SkewChoice::All {
        rec.agree = results.windows(2).all(|w| w[0] == w[1]);
        rec.put("values", Value::Object(values));
        rec.put("agree", rec.agree);
    }
    Ok(rec)
}

fn cmd_contain(n: usize, alpha: Partition, choice: ContainChoice) -> Result<Record, Failure> {
    let methods: Vec<ContainmentMethod> = match choice {
        ContainChoice::Direct => vec![ContainmentMethod::Direct],
        ContainChoice::Thm1 => vec![ContainmentMethod::Thm1],
        ContainChoice::Eq8 => vec![ContainmentMethod::Eq8],
        ContainChoice::All => ContainmentMethod::GENERAL.to_vec(),
    };
    let mut rec = Record::new("contain");
    rec.put("n", n);
    rec.put("alpha", alpha.to_string());
    let mut values = Map::new();
    let mut results = Vec::new();
    for m in &methods {
        let r = containment(n, &alpha, *m)?;
        values.insert(m.name().to_string(), int(&r.value));
        results.push(r.value);
    }
    rec.put("method", if choice == ContainChoice::All { "all".to_string() } else { methods[0].name().to_string() });
    rec.put("value", int(&results[0]));
    if choice == ContainChoice::All {
        rec.agree = results.windows(2).all(|w| w[0] == w[1]);
        rec.put("values", Value::Object(values));
        rec.put("agree", rec.agree);
    }
    rec.put("probability", rat(&p_prob(n, &alpha)?));
    Ok(rec)
}

fn cmd_table(max_k: usize, n_max: usize) -> Result<Record, Failure> {
    let mut rec = Record::new("table");
    rec.put("max_k", max_k);
    rec.put("n_max", n_max);
    let mut rows = Vec::new();
    let mut all_match = true;
    for k in 1..=max_k {
        for alpha in partitions_of(k) {
            let form = closed_form_for(&alpha);
            for n in 0..=n_max {
                let value = containment(n, &alpha, ContainmentMethod::Thm1)?.value;
                let mut row = Map::new();
                row.insert("alpha".into(), json!(alpha.to_string()));
                row.insert("n".into(), json!(n));
                row.insert("thm1".into(), int(&value));
                match form {
                    // the closed forms hold from n = |alpha| on
                    Some(f) if n >= k => {
                        let closed = f.evaluate(n);
                        let ok = closed == Rat::from_integer(value.clone());
                        all_match &= ok;
                        row.insert("formula".into(), json!(f.describe()));
                        row.insert("closed_form".into(), rat(&closed));
                        row.insert("match".into(), json!(ok));
                    }
                    _ => {
                        row.insert("formula".into(), Value::Null);
                        row.insert("closed_form".into(), Value::Null);
                        row.insert("match".into(), Value::Null);
                    }
                }
                rows.push(Value::Object(row));
            }
        }
    }
    rec.agree = all_match;
    rec.put("rows", Value::Array(rows));
    rec.put("agree", all_match);
    Ok(rec)
}

#[allow(clippy::too_many_arguments)]
fn cmd_asym(
    kind: AsymKind,
    n: Option<u64>,
    order: Option<u8>,
    m: Option<u64>,
    alpha: Option<Partition>,
    a: Option<RatList>,
    b: Option<RatList>,
    eps: Option<Rat>,
) -> Result<Record, Failure> {
    let mut rec = Record::new("asym");
    match kind {
        AsymKind::Tn => {
            let n = required(n, "n", "tn")?;
            let order = order.unwrap_or(2);
            let est = mw_t_estimate::<f64>(n, order)?;
            let exact = t(n as i64);
            rec.put("kind", "tn");
            rec.put("n", n);
            rec.put("order", order);
            rec.put("estimate", real(est.value()));
            rec.put("ln_estimate", real(est.ln_scale + est.factor.ln()));
            rec.put("exact", int(&exact));
            rec.put("rel_err", real(est.relative_error(&exact)));
        }
        AsymKind::Shift => {
            let n = required(n, "n", "shift")?;
            let j = required(m, "m", "shift")?;
            let est = mw_t_shift_estimate::<f64>(n, j)?;
            let exact = t(n as i64 - j as i64);
            rec.put("kind", "shift");
            rec.put("n", n);
            rec.put("m", j);
            rec.put("estimate", real(est.value()));
            rec.put("ln_estimate", real(est.ln_scale + est.factor.ln()));
            rec.put("exact", int(&exact));
            rec.put("rel_err", real(est.relative_error(&exact)));
        }
        AsymKind::Prob => {
            let n = required(n, "n", "prob")?;
            let alpha = required(alpha, "alpha", "prob")?;
            let row = p_expansion_row(n, &alpha)?;
            let exact = rat_to_f64(&row.exact);
            rec.put("kind", "prob");
            rec.put("n", n);
            rec.put("alpha", alpha.to_string());
            rec.put("estimate", real(row.estimate));
            rec.put("exact", rat(&row.exact));
            rec.put("exact_real", real(exact));
            rec.put("residual", real(row.residual));
            rec.put("scaled_residual", real(row.scaled_residual));
            rec.put("rel_err", real(row.estimate / exact - 1.0));
        }
        AsymKind::Vk => {
            let alpha = required(alpha, "alpha", "vk")?;
            let a = a.map(|l| l.0).unwrap_or_default();
            let b = b.map(|l| l.0).unwrap_or_default();
            let scale = required(m, "m", "vk")?;
            if scale == 0 {
                return Err(Failure::input("asym vk needs --m >= 1"));
            }
            let spec = LimitSpec::new(a, b)?;
            let limit = vk_ratio(&alpha, &spec)?;
            let lambda = spec.sample_shape(scale as usize);
            let shape = SkewShape::new(lambda.clone(), alpha.clone())?;
            let exact = Rat::new(f_skew_det(&shape)?, f_count(&lambda));
            let limit_real = rat_to_f64(&limit);
            let exact_real = rat_to_f64(&exact);
            rec.put("kind", "vk");
            rec.put("alpha", alpha.to_string());
            rec.put("a", rat_list(spec.a()));
            rec.put("b", rat_list(spec.b()));
            rec.put("m", scale);
            rec.put("lambda", lambda.to_string());
            rec.put("estimate", rat(&limit));
            rec.put("estimate_real", real(limit_real));
            rec.put("exact", rat(&exact));
            rec.put("exact_real", real(exact_real));
            rec.put("rel_err", real(limit_real / exact_real - 1.0));
        }
        AsymKind::Mass => {
            let n = required(n, "n", "mass")?;
            let eps = required(eps, "eps", "mass")?;
            let mass = par_eps_mass(n as usize, &eps)?;
            let count = par_eps(n as usize, &eps)?.len();
            rec.put("kind", "mass");
            rec.put("n", n);
            rec.put("eps", rat(&eps));
            rec.put("partitions", count);
            rec.put("mass", rat(&mass));
            rec.put("mass_real", real(rat_to_f64(&mass)));
        }
    }
    Ok(rec)
}

fn run(cli: Cli) -> Result<Record, Failure> {
    match cli.command {
        Command::Skew { outer, inner, method } => cmd_skew(outer, inner, method),
        Command::Contain { n, alpha, method } => cmd_contain(n, alpha, method),
        Command::Table { max_k, n_max } => cmd_table(max_k, n_max),
        Command::Asym { kind, n, order, m, alpha, a, b, eps } => cmd_asym(kind, n, order, m, alpha, a, b, eps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli) {
        Ok(rec) => {
            if json_mode {
                println!("{}", rec.to_json());
            } else {
                print!("{}", rec.to_text());
            }
            ExitCode::from(if rec.agree { 0 } else { 1 })
        }
        Err(fail) => {
            eprintln!("error: {}", fail.message);
            if json_mode {
                println!("{}", json!({ "error": fail.message, "exit_code": fail.code }));
            }
            ExitCode::from(fail.code)
        }
    }
}
