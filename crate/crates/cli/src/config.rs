use cat_core::Limits;
use sammy_lang::RunLimits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub max_steps: u64,
    pub limits: Limits,
    pub saturation_bound: usize,
    pub format: Format,
    pub parallel: bool,
}

fn env_parse<T: std::str::FromStr>(name: &str) -> Result<Option<T>, String> {
    match std::env::var(name) {
        Ok(v) => v
            .parse::<T>()
            .map(Some)
            .map_err(|_| format!("invalid value for {name}: {v}")),
        Err(_) => Ok(None),
    }
}

impl Config {
    /// Flag beats environment beats default; environment names are the flag
    /// names upper-cased.
    pub fn resolve(
        max_steps: Option<u64>,
        max_objects: Option<usize>,
        max_morphisms: Option<usize>,
        saturation_bound: Option<usize>,
        format: Option<&str>,
        parallel: bool,
    ) -> Result<Config, String> {
        let max_steps = match max_steps {
            Some(v) => v,
            None => env_parse("MAX_STEPS")?.unwrap_or(100_000),
        };
        let max_objects = match max_objects {
            Some(v) => v,
            None => env_parse("MAX_OBJECTS")?.unwrap_or(64),
        };
        let max_morphisms = match max_morphisms {
            Some(v) => v,
            None => env_parse("MAX_MORPHISMS")?.unwrap_or(512),
        };
        let saturation_bound = match saturation_bound {
            Some(v) => v,
            None => env_parse("SATURATION_BOUND")?.unwrap_or(32),
        };
        let format_name = match format {
            Some(f) => f.to_string(),
            None => env_parse::<String>("FORMAT")?.unwrap_or_else(|| "json".into()),
        };
        let format = match format_name.as_str() {
            "json" => Format::Json,
            "dot" => Format::Dot,
            "text" => Format::Text,
            other => return Err(format!("unknown format '{other}'")),
        };
        let parallel = parallel || env_parse::<bool>("PARALLEL")?.unwrap_or(false);
        if max_steps == 0 || max_objects == 0 || max_morphisms == 0 {
            return Err("limits must be positive".into());
        }
        Ok(Config {
            max_steps,
            limits: Limits::new(max_objects, max_morphisms),
            saturation_bound,
            format,
            parallel,
        })
    }

    pub fn run_limits(&self) -> RunLimits {
        RunLimits {
            max_steps: self.max_steps,
            caps: self.limits,
        }
    }
}
