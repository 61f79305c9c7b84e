//! Settings merged from command-line flags and the optional JSON file named
//! by `RESEMBLANCE_CONFIG`. Flags win over the file.

use std::path::Path;

use clap::{Args, ValueEnum};
use resemblance::{Budget, Ordinal, Rho};
use serde::Deserialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Default)]
pub struct GlobalArgs {
    /// The parameter rho, an additively indecomposable ordinal.
    #[arg(long, global = true)]
    pub rho: Option<String>,
    /// Number of epsilon atoms e0..e(k-1) accepted in notations.
    #[arg(long, global = true)]
    pub epsilon_depth: Option<u32>,
    /// Use facts that are only known from the assumed continuation result.
    #[arg(long, global = true)]
    pub assume_sequel: bool,
    /// Maximum CNF terms per notation in searches.
    #[arg(long, global = true)]
    pub budget_terms: Option<usize>,
    /// Maximum coefficient per term in searches.
    #[arg(long, global = true)]
    pub budget_coeff: Option<u64>,
    /// Maximum number of search nodes.
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for sampled suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

/// Keys accepted in the config file.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    rho: Option<String>,
    epsilon_depth: Option<u32>,
    assume_sequel: Option<bool>,
    budget_terms: Option<usize>,
    budget_coeff: Option<u64>,
    budget_nodes: Option<u64>,
    format: Option<Format>,
    seed: Option<u64>,
}

#[derive(Debug)]
pub struct Config {
    pub rho: Rho,
    pub epsilon_depth: u32,
    pub sequel: bool,
    pub budget: Budget,
    pub format: Format,
    pub seed: u64,
}

impl Config {
    pub fn resolve(args: &GlobalArgs, file: Option<&Path>) -> Result<Config, String> {
        let file = match file {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
                serde_json::from_str::<FileConfig>(&text)
                    .map_err(|e| format!("bad config {}: {e}", path.display()))?
            }
            None => FileConfig::default(),
        };
        let rho_text = args.rho.clone().or(file.rho).unwrap_or_else(|| "1".into());
        let rho_value =
            Ordinal::parse(&rho_text).map_err(|e| format!("bad --rho {rho_text:?}: {e}"))?;
        let rho = Rho::new(rho_value).map_err(|e| format!("bad --rho: {e}"))?;
        let defaults = Budget::default();
        let budget = Budget {
            terms: args
                .budget_terms
                .or(file.budget_terms)
                .unwrap_or(defaults.terms),
            coeff: args
                .budget_coeff
                .or(file.budget_coeff)
                .unwrap_or(defaults.coeff),
            node_limit: args
                .budget_nodes
                .or(file.budget_nodes)
                .unwrap_or(defaults.node_limit),
            ..defaults
        };
        if budget.terms == 0 || budget.coeff == 0 || budget.node_limit == 0 {
            return Err("budgets must be positive".into());
        }
        Ok(Config {
            rho,
            epsilon_depth: args.epsilon_depth.or(file.epsilon_depth).unwrap_or(1),
            sequel: args.assume_sequel || file.assume_sequel.unwrap_or(false),
            budget,
            format: args.format.or(file.format).unwrap_or_default(),
            seed: args.seed.or(file.seed).unwrap_or(0),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("resemblance-config-{}", std::process::id()));
        std::fs::write(&dir, r#"{"rho": "w", "seed": 5, "budget_terms": 3}"#).unwrap();
        let args = GlobalArgs {
            seed: Some(9),
            ..GlobalArgs::default()
        };
        let cfg = Config::resolve(&args, Some(&dir)).unwrap();
        std::fs::remove_file(&dir).unwrap();
        assert_eq!(cfg.rho.to_string(), "w");
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.budget.terms, 3);
        assert_eq!(cfg.budget.coeff, 8);
    }

    #[test]
    fn rejects_decomposable_rho() {
        let args = GlobalArgs {
            rho: Some("w+1".into()),
            ..GlobalArgs::default()
        };
        assert!(Config::resolve(&args, None).is_err());
    }
}
