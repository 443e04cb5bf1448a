//! Parameter resolution: built-in defaults, then a `key = value` config file,
//! then command-line flags.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use saft::SaftParams;

/// A problem with the user's configuration; reported with exit status 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

pub fn config_error(msg: impl Into<String>) -> anyhow::Error {
    ConfigError(msg.into()).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Figure1,
    Figure2,
}

impl Preset {
    pub fn params(self) -> SaftParams {
        match self {
            Preset::Figure1 => SaftParams::unchecked(1.0, 1.0, -1.0, 0.0, 2.0, -1.0),
            Preset::Figure2 => SaftParams::unchecked(3.0, 2.0, 1.0, 1.0, 1.0, -2.0),
        }
    }
}

impl FromStr for Preset {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> anyhow::Result<Self> {
        <Preset as ValueEnum>::from_str(s, true).map_err(|_| config_error(format!("unknown preset '{s}'")))
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct MatrixArgs {
    /// Parameter preset; individual entries below override it.
    #[arg(long, global = true, value_enum)]
    pub preset: Option<Preset>,
    /// File of `key = value` lines supplying defaults for any flag.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<std::path::PathBuf>,
    /// Matrix entry A (AD − BC must equal 1).
    #[arg(long = "A", global = true, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Matrix entry B (must be positive).
    #[arg(long = "B", global = true, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Matrix entry C.
    #[arg(long = "C", global = true, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Matrix entry D.
    #[arg(long = "D", global = true, allow_hyphen_values = true)]
    pub d: Option<f64>,
    /// Time offset p.
    #[arg(long = "p", global = true, allow_hyphen_values = true)]
    pub p: Option<f64>,
    /// Frequency offset q.
    #[arg(long = "q", global = true, allow_hyphen_values = true)]
    pub q: Option<f64>,
}

/// Values read from a config file. Keys are matched with `-` and `_`
/// treated alike.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

fn normalize(key: &str) -> String {
    key.trim().trim_start_matches("--").replace('-', "_")
}

impl ConfigFile {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| config_error(format!("config line {}: expected key = value", lineno + 1)))?;
            values.insert(normalize(key), value.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get<T>(&self, key: &str) -> anyhow::Result<Option<T>>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        match self.values.get(&normalize(key)) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|e| config_error(format!("config key '{key}': cannot parse '{raw}': {e}"))),
        }
    }
}

/// Resolved settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: SaftParams,
    file: ConfigFile,
}

impl RunConfig {
    /// Layers defaults (preset figure1), the config file, and the flags, then
    /// validates the matrix.
    pub fn resolve(args: &MatrixArgs) -> anyhow::Result<Self> {
        let file = match &args.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let mut m = Preset::Figure1.params();
        if let Some(preset) = file.get::<Preset>("preset")? {
            m = preset.params();
        }
        let apply = |m: &mut SaftParams, source: [Option<f64>; 6]| {
            let slots = [&mut m.a, &mut m.b, &mut m.c, &mut m.d, &mut m.p, &mut m.q];
            for (slot, v) in slots.into_iter().zip(source) {
                if let Some(v) = v {
                    *slot = v;
                }
            }
        };
        let from_file = [
            file.get("A")?,
            file.get("B")?,
            file.get("C")?,
            file.get("D")?,
            file.get("p")?,
            file.get("q")?,
        ];
        apply(&mut m, from_file);
        if let Some(preset) = args.preset {
            m = preset.params();
        }
        apply(&mut m, [args.a, args.b, args.c, args.d, args.p, args.q]);
        m.validate().map_err(|e| config_error(e.to_string()))?;
        Ok(Self { params: m, file })
    }

    /// `flag`, else the config file's `key`, else `default`.
    pub fn pick<T>(&self, flag: Option<T>, key: &str, default: T) -> anyhow::Result<T>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        Ok(match flag {
            Some(v) => v,
            None => self.file.get(key)?.unwrap_or(default),
        })
    }

    /// Like [`Self::pick`] for settings without a default.
    pub fn pick_opt<T>(&self, flag: Option<T>, key: &str) -> anyhow::Result<Option<T>>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        Ok(match flag {
            Some(v) => Some(v),
            None => self.file.get(key)?,
        })
    }
}
