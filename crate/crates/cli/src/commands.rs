use crate::config::{Config, Format};
use cat_core::{
    categories_isomorphic, category_to_dot, functors_isomorphic, structures_equal, validate,
    StructureValue,
};
use kolmogorov::{ksearch, ksearch_parallel, EncodingSpec, KQuery};
use sammy_lang::{encode, enumerate, parse, run, ParseError, RunError};
use std::fmt;
use std::path::Path;
use stdlib_constructions::{build_number_category, lollipop, NumberKind};

#[derive(Debug)]
pub enum CmdError {
    Io(String),
    Parse(String),
    Runtime(String),
    Resource(String),
    NotFound(String),
}

impl CmdError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CmdError::Io(_) => 1,
            CmdError::Parse(_) => 2,
            CmdError::Runtime(_) => 3,
            CmdError::Resource(_) => 4,
            CmdError::NotFound(_) => 5,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Io(m)
            | CmdError::Parse(m)
            | CmdError::Runtime(m)
            | CmdError::Resource(m)
            | CmdError::NotFound(m) => write!(f, "{m}"),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CmdError> {
    std::fs::read_to_string(path)
        .map_err(|e| CmdError::Io(format!("cannot read {}: {e}", path.display())))
}

fn load_structure(path: &Path) -> Result<StructureValue, CmdError> {
    let text = read_file(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CmdError::Parse(format!("cannot parse {}: {e}", path.display())))
}

fn run_error(e: RunError) -> CmdError {
    match &e {
        RunError::StepLimit => CmdError::Resource(e.to_string()),
        RunError::Engine(inner) if inner.is_resource_limit() => CmdError::Resource(e.to_string()),
        _ => CmdError::Runtime(e.to_string()),
    }
}

fn parse_error(e: ParseError) -> CmdError {
    CmdError::Parse(e.to_string())
}

fn print_structure(value: &StructureValue, config: &Config) -> Result<(), CmdError> {
    match config.format {
        Format::Json => {
            let js = serde_json::to_string_pretty(value)
                .map_err(|e| CmdError::Runtime(e.to_string()))?;
            println!("{js}");
        }
        Format::Dot => match value {
            StructureValue::Category { value } => {
                print!("{}", category_to_dot(value, "category"));
            }
            other => {
                return Err(CmdError::Runtime(format!(
                    "dot export works on categories, got a {}",
                    other.kind_name()
                )))
            }
        },
        Format::Text => match value {
            StructureValue::Category { value } => println!(
                "category: {} objects, {} morphisms",
                value.object_count(),
                value.morphism_count()
            ),
            StructureValue::Functor { value } => println!(
                "functor: {} -> {} objects",
                value.source.object_count(),
                value.target.object_count()
            ),
            StructureValue::NatTrans { value } => println!(
                "natural transformation with {} components",
                value.components.len()
            ),
            StructureValue::OpaqueCat => println!("the symbolic category Cat"),
        },
    }
    Ok(())
}

pub fn cmd_run(program: &Path, inputs: &[std::path::PathBuf], config: &Config) -> Result<(), CmdError> {
    let source = read_file(program)?;
    let parsed = parse(&source).map_err(parse_error)?;
    let mut values = Vec::new();
    for p in inputs {
        values.push(load_structure(p)?);
    }
    let out = run(&parsed, &values, &config.run_limits()).map_err(run_error)?;
    for v in &out.returned {
        print_structure(v, config)?;
    }
    Ok(())
}

pub fn cmd_check(path: &Path, config: &Config) -> Result<(), CmdError> {
    let value = load_structure(path)?;
    let report = validate(&value);
    match config.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| CmdError::Runtime(e.to_string()))?
        ),
        _ => println!("{report}"),
    }
    if report.ok {
        Ok(())
    } else {
        Err(CmdError::Runtime("validation failed".into()))
    }
}

pub fn cmd_iso(a: &Path, b: &Path, config: &Config) -> Result<(), CmdError> {
    let va = load_structure(a)?;
    let vb = load_structure(b)?;
    let witness: Option<String> = match (&va, &vb) {
        (StructureValue::Category { value: x }, StructureValue::Category { value: y }) => {
            categories_isomorphic(x, y, &config.limits)
                .map_err(|e| CmdError::Resource(e.to_string()))?
                .map(|w| {
                    serde_json::to_string_pretty(&w.forward).expect("witness serializes")
                })
        }
        (StructureValue::Functor { value: x }, StructureValue::Functor { value: y }) => {
            functors_isomorphic(x, y, &config.limits)
                .map_err(|e| CmdError::Resource(e.to_string()))?
                .map(|w| {
                    serde_json::to_string_pretty(&w.target_iso).expect("witness serializes")
                })
        }
        _ => {
            if structures_equal(&va, &vb) {
                Some("\"identical\"".into())
            } else {
                None
            }
        }
    };
    match witness {
        Some(w) => {
            println!("isomorphic: true");
            println!("{w}");
            Ok(())
        }
        None => {
            println!("isomorphic: false");
            Err(CmdError::NotFound("structures are not isomorphic".into()))
        }
    }
}

pub fn cmd_export(path: &Path, _config: &Config) -> Result<(), CmdError> {
    let value = load_structure(path)?;
    match &value {
        StructureValue::Category { value } => {
            print!("{}", category_to_dot(value, "category"));
            Ok(())
        }
        other => Err(CmdError::Runtime(format!(
            "dot export works on categories, got a {}",
            other.kind_name()
        ))),
    }
}

pub fn cmd_build(name: &str, params: &[usize], config: &Config) -> Result<(), CmdError> {
    let limits = &config.limits;
    let value = match name {
        "omega" | "omega_d" | "omega_i" | "omega_bar" => {
            let kind = match name {
                "omega" => NumberKind::Chain,
                "omega_d" => NumberKind::Discrete,
                "omega_i" => NumberKind::GroupoidChain,
                _ => NumberKind::ChainWithTop,
            };
            let bound = *params.first().ok_or_else(|| {
                CmdError::Parse(format!("build {name} needs a bound parameter"))
            })?;
            let built = build_number_category(kind, bound, limits)
                .map_err(|e| CmdError::Resource(e.to_string()))?;
            StructureValue::Category {
                value: built.category,
            }
        }
        // the groupoid chain through its coequalizer presentation, collapsing
        // the nonnegative half of the truncated integer groupoid, then
        // saturating up to the configured bound
        "omega_i_route" => {
            let bound = *params.first().ok_or_else(|| {
                CmdError::Parse("build omega_i_route needs a bound parameter".into())
            })?;
            let chain = build_number_category(NumberKind::Chain, bound, limits)
                .map_err(|e| CmdError::Resource(e.to_string()))?;
            let zeta = std::sync::Arc::new(cat_core::indiscrete_cat(2 * bound + 1));
            let object_map: std::collections::BTreeMap<u32, u32> = chain
                .category
                .objects
                .iter()
                .map(|&o| (o, o + bound as u32))
                .collect();
            let morphism_map: std::collections::BTreeMap<u32, u32> = chain
                .category
                .morphisms
                .iter()
                .map(|m| (m.id, zeta.hom(object_map[&m.src], object_map[&m.tgt])[0]))
                .collect();
            let inc = cat_core::FunctorValue::new(
                chain.category.clone(),
                zeta.clone(),
                object_map,
                morphism_map,
            );
            let const0 = {
                let object_map: std::collections::BTreeMap<u32, u32> = chain
                    .category
                    .objects
                    .iter()
                    .map(|&o| (o, bound as u32))
                    .collect();
                let morphism_map: std::collections::BTreeMap<u32, u32> = chain
                    .category
                    .morphisms
                    .iter()
                    .map(|m| (m.id, zeta.identity_of(bound as u32).unwrap()))
                    .collect();
                cat_core::FunctorValue::new(
                    chain.category.clone(),
                    zeta,
                    object_map,
                    morphism_map,
                )
            };
            let ce = cat_engine::coequalizer_presented(&inc, &const0)
                .map_err(|e| CmdError::Runtime(e.to_string()))?;
            let sat = cat_engine::saturate(&ce.presentation, config.saturation_bound, limits)
                .map_err(|e| CmdError::Resource(e.to_string()))?;
            StructureValue::category(sat.category)
        }
        "three_dot" => StructureValue::category(stdlib_constructions::three_dot()),
        "three_hat" => StructureValue::category(stdlib_constructions::three_hat()),
        "two_tilde" => StructureValue::category(cat_core::iso_pair_cat()),
        "lollipop" => {
            let (m, n) = match params {
                [m, n, ..] => (*m, *n),
                _ => return Err(CmdError::Parse("build lollipop needs m and n".into())),
            };
            if m >= n {
                return Err(CmdError::Parse("lollipop needs m < n".into()));
            }
            StructureValue::category(
                lollipop(m, n, limits).map_err(|e| CmdError::Resource(e.to_string()))?,
            )
        }
        other => {
            return Err(CmdError::Parse(format!("unknown builder '{other}'")));
        }
    };
    print_structure(&value, config)
}

pub fn cmd_ksearch(
    target: &Path,
    budget: u32,
    givens: &[std::path::PathBuf],
    config: &Config,
) -> Result<(), CmdError> {
    let target = load_structure(target)?;
    let mut given_values = Vec::new();
    for p in givens {
        given_values.push(load_structure(p)?);
    }
    let query = KQuery {
        target,
        givens: given_values,
        budget,
        run_limits: config.run_limits(),
    };
    let result = if config.parallel {
        let threads = std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1);
        ksearch_parallel(&query, &EncodingSpec::standard(), threads)
    } else {
        ksearch(&query)
    };
    let found = result.min_length().is_some();
    let body = serde_json::json!({
        "status": match result.min_length() { Some(_) => "found", None => "notFoundWithinBudget" },
        "minLength": result.min_length(),
        "witnessSource": result.witness.as_ref().map(|w| w.print()),
        "programsTried": result.programs_tried,
        "runsTimedOut": result.runs_timed_out,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&body).map_err(|e| CmdError::Runtime(e.to_string()))?
    );
    if found {
        Ok(())
    } else {
        Err(CmdError::NotFound("no witness within budget".into()))
    }
}

pub fn cmd_enumerate(
    max_tokens: usize,
    limit: Option<usize>,
    _config: &Config,
) -> Result<(), CmdError> {
    let cap = limit.unwrap_or(usize::MAX);
    for (i, p) in enumerate(max_tokens).enumerate() {
        if i >= cap {
            break;
        }
        println!("# code {}", encode(&p));
        print!("{}", p.print());
        println!();
    }
    Ok(())
}
