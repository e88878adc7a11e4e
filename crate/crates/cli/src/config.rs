//! Settings resolved from flags, `QGW_*` environment variables, a
//! `key = value` config file and built-in defaults, in that order.

use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use qgw_core::qgroup::Spin;
use qgw_core::scalars::parse_rational;
use qgw_core::{Error, Result};

pub const KEYS: [&str; 7] = ["degree", "hopf_degree", "haar_degree", "spin", "q", "format", "qaut_max_n"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    /// Overrides every verb-specific degree when set.
    pub degree: Option<usize>,
    pub hopf_degree: usize,
    pub haar_degree: usize,
    pub spin: Spin,
    pub q: Option<BigRational>,
    pub format: Format,
    pub qaut_max_n: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            degree: None,
            hopf_degree: 4,
            haar_degree: 6,
            spin: Spin::from_twice(3),
            q: None,
            format: Format::Json,
            qaut_max_n: 3,
        }
    }
}

impl Settings {
    pub fn degree_or(&self, fallback: usize) -> usize {
        self.degree.unwrap_or(fallback)
    }

    fn set(&mut self, key: &str, value: &str, source: &str) -> Result<()> {
        let bad = |what: &str| Error::Domain(format!("{source}: `{key}` must be {what}, got `{value}`"));
        let count = || value.trim().parse::<usize>().map_err(|_| bad("a non-negative integer"));
        match key {
            "degree" => self.degree = Some(count()?),
            "hopf_degree" => self.hopf_degree = count()?,
            "haar_degree" => self.haar_degree = count()?,
            "qaut_max_n" => self.qaut_max_n = count()?,
            "spin" => self.spin = value.parse().map_err(|_| bad("a half-integer spin"))?,
            "q" => self.q = Some(parse_rational(value).map_err(|_| bad("a rational number"))?),
            "format" => {
                self.format = match value.trim() {
                    "json" => Format::Json,
                    "text" => Format::Text,
                    _ => return Err(bad("`json` or `text`")),
                }
            }
            _ => return Err(Error::Domain(format!("{source}: unknown setting `{key}`"))),
        }
        Ok(())
    }

    /// Layers the sources; later layers win.
    pub fn resolve(
        file: Option<&Path>,
        env: &BTreeMap<String, String>,
        flags: &BTreeMap<&'static str, String>,
    ) -> Result<Self> {
        let mut s = Settings::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read config file {}: {e}", path.display())))?;
            for (key, value) in parse_config(&text)? {
                s.set(&key, &value, &format!("config file {}", path.display()))?;
            }
        }
        for key in KEYS {
            if let Some(v) = env.get(&format!("QGW_{}", key.to_ascii_uppercase())) {
                s.set(key, v, "environment")?;
            }
        }
        for (key, v) in flags {
            s.set(key, v, "command line")?;
        }
        Ok(s)
    }
}

/// `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Syntax { pos: n + 1, msg: format!("config line {} is not `key = value`", n + 1) })?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn precedence() {
        let dir = std::env::temp_dir().join(format!("qgw-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("qgw.conf");
        std::fs::write(&path, "# test\nhopf_degree = 2\nspin = 1\nformat = text\n").unwrap();
        let s = Settings::resolve(Some(&path), &BTreeMap::new(), &BTreeMap::new()).unwrap();
        assert_eq!((s.hopf_degree, s.spin, s.format), (2, Spin::ONE, Format::Text));
        let e = env(&[("QGW_SPIN", "1/2"), ("QGW_HOPF_DEGREE", "3")]);
        let s = Settings::resolve(Some(&path), &e, &BTreeMap::new()).unwrap();
        assert_eq!((s.hopf_degree, s.spin), (3, Spin::HALF));
        let flags = BTreeMap::from([("spin", "2".to_string())]);
        let s = Settings::resolve(Some(&path), &e, &flags).unwrap();
        assert_eq!((s.hopf_degree, s.spin, s.haar_degree), (3, Spin::integral(2), 6));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Settings::resolve(None, &env(&[("QGW_FORMAT", "xml")]), &BTreeMap::new()).is_err());
        assert!(parse_config("spin 3").is_err());
        assert!(Settings::default().clone().set("colour", "red", "test").is_err());
    }
}
