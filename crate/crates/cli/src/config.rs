use anyhow::{bail, Result};
use tensorcirc::{RecognitionConfig, SuiteBounds, HARD_ORDER_GUARD};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct CliConfig {
    pub max_recognition_order: usize,
    pub suite_bounds: SuiteBounds,
    pub seed: u64,
    pub output_format: OutputFormat,
    pub quiet: bool,
}

impl CliConfig {
    pub fn new(
        max_order: Option<usize>,
        seed: Option<u64>,
        output_format: OutputFormat,
        quiet: bool,
    ) -> Result<Self> {
        let defaults = SuiteBounds::default();
        let max_recognition_order = max_order.unwrap_or(defaults.recognition.max_order);
        if max_recognition_order > HARD_ORDER_GUARD {
            bail!("--max-order {max_recognition_order} exceeds the hard guard {HARD_ORDER_GUARD}");
        }
        let suite_bounds = match max_order {
            Some(k) => SuiteBounds::with_max_order(k),
            None => defaults,
        };
        let seed = seed.unwrap_or(suite_bounds.seed);
        Ok(Self {
            max_recognition_order,
            suite_bounds,
            seed,
            output_format,
            quiet,
        })
    }

    pub fn recognition(&self) -> RecognitionConfig {
        RecognitionConfig::new(self.max_recognition_order).expect("checked against the guard")
    }
}
