//! JSON certificates: `{kind, version, input, payload}`. Every polynomial
//! inside is stored as canonical text.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateKind {
    DecompositionTree,
    IndecomposableReport,
    Finiteness,
    Representation,
    MonodromyReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub version: String,
    pub input: Vec<String>,
    pub payload: Value,
}

impl Certificate {
    pub fn new<T: Serialize>(kind: CertificateKind, input: Vec<String>, payload: &T) -> Result<Self> {
        let payload = serde_json::to_value(payload)
            .map_err(|e| Error::internal(format!("certificate payload: {e}")))?;
        Ok(Self {
            kind,
            version: VERSION.to_string(),
            input,
            payload,
        })
    }

    pub fn payload_as<T: DeserializeOwned>(&self) -> Result<T> {
        serde_json::from_value(self.payload.clone())
            .map_err(|e| Error::invalid(format!("certificate payload: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate values always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("certificate: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Sample {
        chain: Vec<Polynomial>,
        note: Option<String>,
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let sample = Sample {
            chain: vec![Polynomial::from_ints(&[0, 0, 1]), Polynomial::from_ints(&[0, 1, 1])],
            note: None,
        };
        let cert = Certificate::new(
            CertificateKind::DecompositionTree,
            vec!["x^4 + 2*x^3 + x^2".into()],
            &sample,
        )
        .unwrap();
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.payload_as::<Sample>().unwrap(), sample);
        assert!(text.contains("\"DECOMPOSITION_TREE\""));
        assert!(text.contains("\"x^2 + x\""));
    }
}
