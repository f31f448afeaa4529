//! Configuration: compiled-in defaults, then an optional key=value file,
//! then environment, then command-line flags, each layer overriding the
//! previous one.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct OeisConfig {
    pub enabled: bool,
    pub endpoint: String,
    pub cache_dir: PathBuf,
    pub offline: bool,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub enum_budget: u64,
    pub matrix_budget: u64,
    pub format: Format,
    pub jobs: Option<usize>,
    pub oeis: OeisConfig,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enum_budget: qcatalan_core::pathlab::DEFAULT_ENUM_BUDGET,
            matrix_budget: qcatalan_core::qcomplex::DEFAULT_MATRIX_BUDGET,
            format: Format::Table,
            jobs: None,
            oeis: OeisConfig {
                enabled: true,
                endpoint: "https://oeis.org/search".to_string(),
                cache_dir: PathBuf::from(".qcatalan-cache"),
                offline: false,
            },
        }
    }
}

impl Config {
    /// Loads the file if given (or pointed to by QCATALAN_CONFIG, or a
    /// ./qcatalan.conf that happens to exist), then applies environment
    /// overrides.
    pub fn load(explicit: Option<&Path>) -> Result<Self> {
        let mut config = Config::default();
        let path = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os("QCATALAN_CONFIG").map(PathBuf::from))
            .or_else(|| {
                let fallback = PathBuf::from("qcatalan.conf");
                fallback.exists().then_some(fallback)
            });
        if let Some(path) = path {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            config.apply_file(&text, &path)?;
        }
        if let Some(dir) = std::env::var_os("QCATALAN_CACHE_DIR") {
            config.oeis.cache_dir = PathBuf::from(dir);
        }
        config.validate()?;
        Ok(config)
    }

    fn apply_file(&mut self, text: &str, path: &Path) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!(
                    "{}:{}: expected key = value, got {raw:?}",
                    path.display(),
                    lineno + 1
                );
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "enum_budget" => self.enum_budget = parse(key, value)?,
                "matrix_budget" => self.matrix_budget = parse(key, value)?,
                "jobs" => self.jobs = Some(parse(key, value)?),
                "format" => {
                    self.format = match value {
                        "table" => Format::Table,
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        other => bail!("unknown format {other:?} in {}", path.display()),
                    }
                }
                "oeis_enabled" => self.oeis.enabled = parse(key, value)?,
                "oeis_endpoint" => self.oeis.endpoint = value.to_string(),
                "oeis_cache" => self.oeis.cache_dir = PathBuf::from(value),
                "oeis_offline" => self.oeis.offline = parse(key, value)?,
                other => bail!("unknown config key {other:?} in {}", path.display()),
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        if self.enum_budget == 0 || self.matrix_budget == 0 {
            bail!("budgets must be positive");
        }
        if self.jobs == Some(0) {
            bail!("jobs must be positive");
        }
        Ok(())
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| anyhow::anyhow!("config key {key}: {e}"))
}
