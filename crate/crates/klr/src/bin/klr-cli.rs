use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use klr::cuspidal::Catalog;
use klr::goodlyndon::GoodWord;
use klr::homog::{hook_dimension, ComponentCache, DEFAULT_COMPONENT_GUARD};
use klr::json::{character_to_json, laurent_to_value, module_from_str, module_to_json, to_pretty_compact};
use klr::klr::verify_relations;
use klr::shuffle::good_words_oracle;
use klr::words::lex_cmp;
use klr::{CartanDatum, CartanType, KlrError, RootVector, Word, WordSum};

const SCHEMA: &str = "klr.cli.v1";

#[derive(Parser)]
#[command(name = "klr-cli", version, about = "Exact computations with KLR algebras of finite type")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Datum {
    /// Cartan type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: usize,
    /// Letter order, smallest first, e.g. 2,1,3.
    #[arg(long)]
    order: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Positive roots with their good Lyndon words and kappa.
    Roots {
        #[command(flatten)]
        d: Datum,
    },
    /// Good words of a weight.
    Goodwords {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        weight: String,
    },
    /// Quantum shuffle product of words separated by '|'.
    Shuffle {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        words: String,
    },
    /// Weight-graph component of a word (simply-laced types).
    Component {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        word: String,
        /// Also report the hook-formula dimension.
        #[arg(long)]
        hook: bool,
        /// List all members.
        #[arg(long)]
        members: bool,
        #[arg(long, default_value_t = DEFAULT_COMPONENT_GUARD)]
        guard: usize,
    },
    /// Hook-formula dimension of a strongly homogeneous component.
    Hook {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_COMPONENT_GUARD)]
        guard: usize,
    },
    /// Cuspidal module of a positive root: character and validation.
    Cuspidal {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        root: String,
        /// Print the module in the exchange format instead.
        #[arg(long)]
        module: bool,
    },
    /// Standard module character of a good word.
    Standard {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        word: String,
    },
    /// Check the defining relations on a module file ('-' for stdin).
    VerifyModule {
        file: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare good words against the brute-force span computation.
    Oracle {
        #[command(flatten)]
        d: Datum,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 8)]
        height_guard: u32,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    /// A finished report whose verdict is negative: printed normally, exit 1.
    Rejected(String, &'static str),
}

impl From<KlrError> for Failure {
    fn from(e: KlrError) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn usage<T>(r: klr::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn datum(d: &Datum) -> Result<CartanDatum, Failure> {
    let ty: CartanType = usage(d.ty.parse())?;
    let order = match &d.order {
        None => None,
        Some(s) => Some(usage(Word::parse(s))?.0),
    };
    usage(CartanDatum::with_order(ty, d.rank, order))
}

fn word(datum: &CartanDatum, s: &str) -> Result<Word, Failure> {
    let w = usage(Word::parse(s))?;
    usage(w.check(datum))?;
    Ok(w)
}

fn root_arg(datum: &CartanDatum, s: &str) -> Result<RootVector, Failure> {
    usage(RootVector::parse(s, datum.rank()))
}

fn pretty<T: Serialize>(v: &T) -> String {
    to_pretty_compact(&serde_json::to_value(v).expect("serialisable output"))
}

fn envelope(command: &str, datum: Option<&CartanDatum>, body: Value) -> String {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let Some(d) = datum {
        v["datum"] = json!({ "type": d.cartan_type().letter().to_string(), "rank": d.rank(), "order": d.order() });
    }
    if let (Value::Object(out), Value::Object(body)) = (&mut v, body) {
        out.extend(body);
    }
    pretty(&v)
}

fn good_word_json(datum: &CartanDatum, gw: &GoodWord, cat: &Catalog) -> Value {
    let factors: Vec<Value> =
        gw.factors.iter().map(|f| json!({ "word": f.word, "mult": f.mult, "root": f.root })).collect();
    json!({
        "word": gw.word,
        "factorization": factors,
        "kappa": gw.kappa(datum, cat).ok().map(|k| laurent_to_value(&k)),
        "s": gw.s,
    })
}

fn roots(d: &Datum) -> Out {
    let datum = datum(d)?;
    let cat = Catalog::new(&datum)?;
    if d.format == Format::Text {
        let mut s = String::new();
        for e in cat.entries() {
            let k = cat.kappa(&e.root).map_or_else(|_| "unsupported".to_string(), |k| k.to_string());
            s += &format!("{:<20} {:<28} {}\n", e.root.to_string(), e.word.to_string(), k);
        }
        return Ok(s);
    }
    let rows: Vec<Value> = cat
        .entries()
        .iter()
        .map(|e| {
            json!({
                "root": e.root,
                "word": e.word,
                "kappa": cat.kappa(&e.root).ok().map(|k| laurent_to_value(&k)),
                "construction": e.construction.to_string(),
            })
        })
        .collect();
    Ok(envelope("roots", Some(&datum), json!({ "roots": rows })))
}

fn goodwords(d: &Datum, weight: &str) -> Out {
    let datum = datum(d)?;
    let alpha = root_arg(&datum, weight)?;
    let cat = Catalog::new(&datum)?;
    let gws = cat.table().good_words(&alpha);
    if d.format == Format::Text {
        let mut s = String::new();
        for gw in &gws {
            let fs: Vec<String> = gw.factors.iter().map(|f| format!("{}^{}", f.word, f.mult)).collect();
            let k = gw.kappa(&datum, &cat).map_or_else(|_| "unsupported".to_string(), |k| k.to_string());
            s += &format!("{:<28} {:<40} s={:<4} kappa={}\n", gw.word.to_string(), fs.join(" "), gw.s, k);
        }
        return Ok(s);
    }
    let list: Vec<Value> = gws.iter().map(|gw| good_word_json(&datum, gw, &cat)).collect();
    Ok(envelope("goodwords", Some(&datum), json!({ "weight": alpha, "good_words": list })))
}

fn character_out(command: &str, datum: &CartanDatum, ch: &WordSum, format: Format, extra: Value) -> String {
    match format {
        Format::Text => format!("{}\n", ch.display(datum)),
        Format::Json => {
            let mut body = json!({ "character": character_to_json(datum, ch) });
            if let (Value::Object(b), Value::Object(x)) = (&mut body, extra) {
                b.extend(x);
            }
            envelope(command, Some(datum), body)
        }
    }
}

fn shuffle(d: &Datum, words: &str) -> Out {
    let datum = datum(d)?;
    let mut acc = WordSum::word(Word::empty());
    for part in words.split('|') {
        acc = acc.shuffle(&WordSum::word(word(&datum, part)?), &datum);
    }
    Ok(character_out("shuffle", &datum, &acc, d.format, json!({})))
}

fn component_cmd(d: &Datum, w: &str, hook: bool, members: bool, guard: usize) -> Out {
    let datum = datum(d)?;
    let w = word(&datum, w)?;
    let c = ComponentCache::from_env().get(&datum, &w, guard)?;
    let hook_dim = if hook { Some(hook_dimension(&c)?) } else { None };
    if d.format == Format::Text {
        let mut s = format!(
            "representative {}\nweight {}\nsize {}\nhomogeneous {}\nstrongly homogeneous {}\n",
            c.representative,
            c.weight,
            c.size(),
            c.homogeneous,
            c.strongly_homogeneous
        );
        if let Some(h) = &hook_dim {
            s += &format!("hook dimension {h}\n");
        }
        if members {
            for m in &c.members {
                s += &format!("{m}\n");
            }
        }
        return Ok(s);
    }
    let mut body = json!({
        "representative": c.representative,
        "weight": c.weight,
        "size": c.size(),
        "homogeneous": c.homogeneous,
        "strongly_homogeneous": c.strongly_homogeneous,
        "w_c": c.w_c,
        "phi": c.phi,
    });
    if let Some(h) = hook_dim {
        body["hook_dimension"] = json!(h.to_string());
    }
    if members {
        body["members"] = json!(c.members);
    }
    Ok(envelope("component", Some(&datum), body))
}

fn hook_cmd(d: &Datum, w: &str, guard: usize) -> Out {
    let datum = datum(d)?;
    let w = word(&datum, w)?;
    let c = ComponentCache::from_env().get(&datum, &w, guard)?;
    let h = hook_dimension(&c)?;
    match d.format {
        Format::Text => Ok(format!("{h}\n")),
        Format::Json => Ok(envelope(
            "hook",
            Some(&datum),
            json!({ "representative": c.representative, "hook_dimension": h.to_string(), "size": c.size() }),
        )),
    }
}

fn cuspidal(d: &Datum, root: &str, module: bool) -> Out {
    let datum = datum(d)?;
    let beta = root_arg(&datum, root)?;
    let cat = Catalog::new(&datum)?;
    let m = cat.module(&beta)?;
    if module {
        return Ok(pretty(&module_to_json(&m)));
    }
    let report = cat.validate(&beta);
    let ch = m.q_character();
    if d.format == Format::Text {
        return Ok(format!("{}\n{report}\n", ch.display(&datum)));
    }
    let out = character_out("cuspidal", &datum, &ch, d.format, json!({ "validation": report }));
    if !report.passed() {
        return Err(Failure::Rejected(out, "validation failed"));
    }
    Ok(out)
}

fn standard(d: &Datum, w: &str) -> Out {
    let datum = datum(d)?;
    let w = word(&datum, w)?;
    let cat = Catalog::new(&datum)?;
    let gw = cat.table().good_word(&w)?;
    let ch = cat.standard_character(&gw)?;
    let top = ch.coeff(&gw.word);
    let summary = json!({
        "good_word": good_word_json(&datum, &gw, &cat),
        "validation": { "leading_term": true, "bar_invariant_leading_coefficient": top.bar() == top },
    });
    Ok(character_out("standard", &datum, &ch, d.format, summary))
}

fn verify_module(file: &str, format: Format) -> Out {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?
    };
    let m = module_from_str(&text)?;
    let rep = verify_relations(&m);
    let out = match format {
        Format::Text => format!("dim {}\n{rep}", m.dim()),
        Format::Json => envelope(
            "verify-module",
            Some(&m.datum),
            json!({ "dim": m.dim(), "passed": rep.passed(), "first_failure": rep.first_failure(), "report": rep }),
        ),
    };
    if rep.passed() {
        Ok(out)
    } else {
        Err(Failure::Rejected(out, "relations fail"))
    }
}

fn oracle(d: &Datum, weight: &str, guard: u32) -> Out {
    let datum = datum(d)?;
    let alpha = root_arg(&datum, weight)?;
    let table = klr::goodlyndon::LyndonTable::new(&datum);
    let mut fast: Vec<Word> = table.good_words(&alpha).into_iter().map(|g| g.word).collect();
    fast.sort_by(|a, b| lex_cmp(&datum, &a.0, &b.0));
    let slow = good_words_oracle(&datum, &alpha, guard)?;
    let agree = fast == slow;
    let out = match d.format {
        Format::Text => {
            let mut s = format!("agree {agree}\n");
            for w in &slow {
                s += &format!("{w}\n");
            }
            s
        }
        Format::Json => envelope(
            "oracle",
            Some(&datum),
            json!({ "weight": alpha, "agree": agree, "good_words": fast, "oracle": slow }),
        ),
    };
    if agree {
        Ok(out)
    } else {
        Err(Failure::Rejected(out, "good words disagree with the oracle"))
    }
}

fn run(cli: Cli) -> Out {
    match &cli.cmd {
        Cmd::Roots { d } => roots(d),
        Cmd::Goodwords { d, weight } => goodwords(d, weight),
        Cmd::Shuffle { d, words } => shuffle(d, words),
        Cmd::Component { d, word, hook, members, guard } => component_cmd(d, word, *hook, *members, *guard),
        Cmd::Hook { d, word, guard } => hook_cmd(d, word, *guard),
        Cmd::Cuspidal { d, root, module } => cuspidal(d, root, *module),
        Cmd::Standard { d, word } => standard(d, word),
        Cmd::VerifyModule { file, format } => verify_module(file, *format),
        Cmd::Oracle { d, weight, height_guard } => oracle(d, weight, *height_guard),
    }
}

fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = out.write_all(s.as_bytes());
    if !s.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(Failure::Rejected(s, why)) => {
            emit(&s);
            eprintln!("error: {why}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
