//! Scenario configuration and its flat key-value file format.

use crate::error::{Error, Result};

/// Normalized scenario parameters.
///
/// The two SNR-like quantities are `gamma1` (average SNR of the local
/// broadcast phase) and `gamma2` (asymptotic SNR at the destination as the
/// relay count grows); together with N, K, the PSK order and the quantile
/// level epsilon they determine everything the simulator and the analytic
/// expressions compute.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemConfig {
    /// Number of collaborating (relay) nodes, N.
    pub n_collab: u32,
    /// Number of simultaneously transmitting sources, K.
    pub k_sources: u32,
    /// Information-sharing SNR in dB.
    pub gamma1_db: f64,
    /// Asymptotic destination SNR in dB.
    pub gamma2_db: f64,
    /// PSK constellation order M (power of two, >= 2).
    pub psk_order: u32,
    /// Quantile level for the surrogate-SINR bound.
    pub epsilon: f64,
    /// Root seed for all random streams.
    pub rng_seed: u64,
}

impl Default for SystemConfig {
    fn default() -> Self {
        Self {
            n_collab: 8,
            k_sources: 4,
            gamma1_db: 20.0,
            gamma2_db: 20.0,
            psk_order: 2,
            epsilon: 0.01,
            rng_seed: 1,
        }
    }
}

/// Fixed key order of the config file format.
pub const CONFIG_KEYS: [&str; 7] = [
    "n_collab",
    "k_sources",
    "gamma1_db",
    "gamma2_db",
    "psk_order",
    "epsilon",
    "rng_seed",
];

impl SystemConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_collab < 1 {
            return Err(Error::InvalidConfig("n_collab must be >= 1".into()));
        }
        if self.k_sources < 1 {
            return Err(Error::InvalidConfig("k_sources must be >= 1".into()));
        }
        if self.psk_order < 2 || !self.psk_order.is_power_of_two() {
            return Err(Error::InvalidConfig(
                "psk_order must be a power of two >= 2".into(),
            ));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidConfig("epsilon must lie in (0, 1)".into()));
        }
        if !self.gamma1_db.is_finite() || !self.gamma2_db.is_finite() {
            return Err(Error::InvalidConfig("gamma values must be finite".into()));
        }
        Ok(())
    }

    pub fn gamma1_linear(&self) -> f64 {
        db_to_linear(self.gamma1_db)
    }

    pub fn gamma2_linear(&self) -> f64 {
        db_to_linear(self.gamma2_db)
    }

    /// Serialize as `key = value` lines in the fixed key order.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        for key in CONFIG_KEYS {
            out.push_str(key);
            out.push_str(" = ");
            out.push_str(&self.value_for(key));
            out.push('\n');
        }
        out
    }

    fn value_for(&self, key: &str) -> String {
        match key {
            "n_collab" => self.n_collab.to_string(),
            "k_sources" => self.k_sources.to_string(),
            "gamma1_db" => self.gamma1_db.to_string(),
            "gamma2_db" => self.gamma2_db.to_string(),
            "psk_order" => self.psk_order.to_string(),
            "epsilon" => self.epsilon.to_string(),
            "rng_seed" => self.rng_seed.to_string(),
            _ => unreachable!("unknown config key {key}"),
        }
    }

    /// Parse the `key = value` format. All seven keys are required,
    /// duplicates and unknown keys are rejected.
    pub fn from_key_values(text: &str) -> Result<Self> {
        let pairs = parse_key_values(text)?;
        let mut config = Self::default();
        let mut seen = [false; CONFIG_KEYS.len()];
        for (key, value) in &pairs {
            let slot = CONFIG_KEYS
                .iter()
                .position(|k| k == key)
                .ok_or_else(|| Error::ConfigParse(format!("unknown key '{key}'")))?;
            if seen[slot] {
                return Err(Error::ConfigParse(format!("duplicate key '{key}'")));
            }
            seen[slot] = true;
            config.set_from_str(key, value)?;
        }
        for (slot, key) in CONFIG_KEYS.iter().enumerate() {
            if !seen[slot] {
                return Err(Error::ConfigParse(format!("missing key '{key}'")));
            }
        }
        config.validate()?;
        Ok(config)
    }

    fn set_from_str(&mut self, key: &str, value: &str) -> Result<()> {
        fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::ConfigParse(format!("invalid value '{value}' for '{key}'")))
        }
        match key {
            "n_collab" => self.n_collab = parse(key, value)?,
            "k_sources" => self.k_sources = parse(key, value)?,
            "gamma1_db" => self.gamma1_db = parse(key, value)?,
            "gamma2_db" => self.gamma2_db = parse(key, value)?,
            "psk_order" => self.psk_order = parse(key, value)?,
            "epsilon" => self.epsilon = parse(key, value)?,
            "rng_seed" => self.rng_seed = parse(key, value)?,
            _ => unreachable!(),
        }
        Ok(())
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Split a flat config text into (key, value) pairs.
///
/// Lines are `key = value`; blank lines and `#` comments are skipped.
/// Shared by the scenario format above and the experiment-spec format in
/// the command-line crate.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::ConfigParse(format!("line {}: expected 'key = value'", lineno + 1))
        })?;
        pairs.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}
