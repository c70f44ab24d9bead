use std::path::Path;
use std::sync::Arc;

use bseq_core::{BsWord, CartanSpec, RootSystem, SimpleWord};

use crate::args::Cli;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Resolved global flags. The word always indexes simple roots of `rs`.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub rs: Arc<RootSystem>,
    pub word: SimpleWord,
    pub output: OutputFormat,
    pub gallery_cap: usize,
    pub seed: u64,
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

impl CliConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let spec = match (&cli.type_label, &cli.cartan) {
            (Some(label), None) => CartanSpec::builtin(label)?,
            (None, Some(path)) => CartanSpec::from_json(&read_file(path)?)?,
            (None, None) => return Err(CliError::Usage("one of --type or --cartan is required".into())),
            (Some(_), Some(_)) => return Err(CliError::Usage("--type and --cartan are exclusive".into())),
        };
        let rs = Arc::new(RootSystem::new(spec)?);
        let word = match &cli.word {
            Some(text) => text.parse::<SimpleWord>()?,
            None => rs.longest_word(),
        };
        rs.check_word(&word)?;
        Ok(Self {
            rs,
            word,
            output: if cli.json { OutputFormat::Json } else { OutputFormat::Text },
            gallery_cap: cli.cap,
            seed: cli.seed,
        })
    }

    pub fn bs_word(&self) -> Result<BsWord, CliError> {
        Ok(BsWord::with_cap(self.rs.clone(), &self.word, self.gallery_cap)?)
    }

    pub fn json(&self) -> bool {
        self.output == OutputFormat::Json
    }
}
