//! Defaults read from a TOML or JSON file:
//!
//! ```toml
//! type = "D4"
//! orientation = "1>2,3>2,4>2"
//! height = "0,-1,0,0"
//! seed = 7
//! ```
//!
//! Every key is optional. Command-line flags take precedence.

use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(rename = "type")]
    pub type_label: Option<String>,
    pub orientation: Option<String>,
    pub height: Option<String>,
    pub seed: Option<u64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text, path.extension().and_then(|e| e.to_str()) == Some("json"))
            .map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str, json: bool) -> Result<Self, String> {
        if json {
            serde_json::from_str(text).map_err(|e| e.to_string())
        } else {
            toml::from_str(text).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_formats() {
        let t = Config::parse("type = \"A3\"\norientation = \"1>2,3>2\"\nseed = 3\n", false).unwrap();
        assert_eq!(t.type_label.as_deref(), Some("A3"));
        assert_eq!(t.seed, Some(3));
        let j = Config::parse(r#"{"type": "A3", "orientation": "1>2,3>2", "seed": 3}"#, true).unwrap();
        assert_eq!(t, j);
        assert!(Config::parse("colour = 1", false).is_err());
    }
}
