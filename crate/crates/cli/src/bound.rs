use circmyc::formulas::{
    binomial, double_counting_holds, ekr_bound, final_inequality_check, frankl_bound, genkneser_chi_upper,
    genkneser_free_bound, hilton_milner_free_bound, kneser_chi, mycielski_threshold, schrijver_count, KVariant,
};
use circmyc::{Error, Result};
use serde::Deserialize;
use serde_json::{json, Value};

pub const NAMES: &[(&str, &str)] = &[
    ("binomial", "n k"),
    ("kneser-chi", "m n"),
    ("ekr", "m n"),
    ("hilton-milner", "m n"),
    ("frankl", "m n s"),
    ("genkneser-free", "m n s"),
    ("genkneser-chi-upper", "m s t"),
    ("schrijver-count", "m n"),
    ("mycielski-threshold", "n t"),
    ("final-inequality", "m n t"),
    ("double-counting", "m n"),
];

/// One evaluation: a human line and a JSON value.
pub struct Evaluation {
    pub text: String,
    pub json: Value,
}

fn arity(name: &str) -> Option<usize> {
    NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| p.split_whitespace().count())
}

fn as_u32(x: i64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Precondition(format!("t = {x} out of range")))
}

pub fn evaluate(name: &str, p: &[i64], variant: KVariant) -> Result<Evaluation> {
    let want = arity(name).ok_or_else(|| {
        let known: Vec<&str> = NAMES.iter().map(|(n, _)| *n).collect();
        Error::Precondition(format!("unknown bound {name:?}; known: {}", known.join(", ")))
    })?;
    if p.len() != want {
        return Err(Error::Precondition(format!(
            "{name} takes {want} parameters, got {}",
            p.len()
        )));
    }
    // Exact integers travel as decimal strings in JSON.
    let big = |s: String| Evaluation {
        json: json!(s),
        text: s,
    };
    Ok(match name {
        "binomial" => big(binomial(p[0], p[1]).to_string()),
        "kneser-chi" => {
            let v = kneser_chi(p[0], p[1])?;
            Evaluation {
                text: v.to_string(),
                json: json!(v),
            }
        }
        "ekr" => big(ekr_bound(p[0], p[1])?.to_string()),
        "hilton-milner" => big(hilton_milner_free_bound(p[0], p[1])?.to_string()),
        "frankl" => big(frankl_bound(p[0], p[1], p[2])?.to_string()),
        "genkneser-free" => big(genkneser_free_bound(p[0], p[1], p[2])?.to_string()),
        "genkneser-chi-upper" => big(genkneser_chi_upper(p[0], p[1], p[2])?.to_string()),
        "schrijver-count" => big(schrijver_count(p[0], p[1])?.to_string()),
        "mycielski-threshold" => big(mycielski_threshold(p[0], as_u32(p[1])?)?.to_string()),
        "final-inequality" => {
            let r = final_inequality_check(p[0], p[1], as_u32(p[2])?, variant)?;
            Evaluation {
                text: r.holds.to_string(),
                json: serde_json::to_value(r).expect("serializable"),
            }
        }
        "double-counting" => {
            let v = double_counting_holds(p[0], p[1]);
            Evaluation {
                text: v.to_string(),
                json: json!(v),
            }
        }
        _ => unreachable!("arity lookup covers every name"),
    })
}

/// A batch request entry.
#[derive(Deserialize)]
pub struct Request {
    pub name: String,
    pub params: Vec<i64>,
    #[serde(default)]
    pub variant: Option<String>,
}

pub fn parse_variant(s: &str) -> Result<KVariant> {
    match s {
        "statement" => Ok(KVariant::Statement),
        "proof" => Ok(KVariant::Proof),
        _ => Err(Error::Precondition(format!(
            "unknown k variant {s:?} (statement or proof)"
        ))),
    }
}

/// Evaluates every request; failures are reported inline as `error`.
pub fn batch(requests: &[Request]) -> Value {
    let out: Vec<Value> = requests
        .iter()
        .map(|r| {
            let variant = r
                .variant
                .as_deref()
                .map(parse_variant)
                .unwrap_or(Ok(KVariant::Statement));
            let result = variant.and_then(|v| evaluate(&r.name, &r.params, v));
            match result {
                Ok(e) => json!({ "name": r.name, "params": r.params, "value": e.json }),
                Err(e) => json!({ "name": r.name, "params": r.params, "error": e.to_string() }),
            }
        })
        .collect();
    Value::Array(out)
}
