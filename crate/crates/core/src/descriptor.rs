//! JSON descriptions of code families, e.g.
//! `{"family":"qc1gen","q":"2","m":3,"generators":["x^2+x","x^2+1"]}`,
//! `{"family":"dc","q":"5","m":8,"a":"..."}` and
//! `{"family":"fc","q":"3","m":4,"a1":"...","a2":"..."}`.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::fc::FourCirculantSpec;
use crate::gf::Field;
use crate::qc::{DcSpec, QcOneGenSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum CodeDescriptor {
    #[serde(rename = "qc1gen")]
    Qc1Gen {
        q: String,
        m: usize,
        generators: Vec<String>,
    },
    #[serde(rename = "dc")]
    Dc { q: String, m: usize, a: String },
    #[serde(rename = "fc")]
    Fc {
        q: String,
        m: usize,
        a1: String,
        a2: String,
    },
}

/// A parsed code description from any of the supported families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSpec {
    Qc(QcOneGenSpec),
    Dc(DcSpec),
    Fc(FourCirculantSpec),
}

impl CodeDescriptor {
    pub fn from_json(s: &str) -> Result<CodeDescriptor> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn parse(&self) -> Result<CodeSpec> {
        match self {
            CodeDescriptor::Qc1Gen { q, m, generators } => {
                let f = Field::parse(q)?;
                let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
                Ok(CodeSpec::Qc(QcOneGenSpec::parse(&f, *m, &gens)?))
            }
            CodeDescriptor::Dc { q, m, a } => {
                let f = Field::parse(q)?;
                Ok(CodeSpec::Dc(DcSpec::parse(&f, *m, a)?))
            }
            CodeDescriptor::Fc { q, m, a1, a2 } => {
                let f = Field::parse(q)?;
                Ok(CodeSpec::Fc(FourCirculantSpec::parse(&f, *m, a1, a2)?))
            }
        }
    }
}

impl CodeSpec {
    pub fn descriptor(&self) -> CodeDescriptor {
        match self {
            CodeSpec::Qc(s) => CodeDescriptor::Qc1Gen {
                q: s.field().to_string(),
                m: s.m(),
                generators: s.generators().iter().map(|g| g.to_string()).collect(),
            },
            CodeSpec::Dc(s) => CodeDescriptor::Dc {
                q: s.field().to_string(),
                m: s.m(),
                a: s.a().to_string(),
            },
            CodeSpec::Fc(s) => CodeDescriptor::Fc {
                q: s.field().to_string(),
                m: s.m(),
                a1: s.a1().to_string(),
                a2: s.a2().to_string(),
            },
        }
    }

    pub fn m(&self) -> usize {
        match self {
            CodeSpec::Qc(s) => s.m(),
            CodeSpec::Dc(s) => s.m(),
            CodeSpec::Fc(s) => s.m(),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            CodeSpec::Qc(s) => s.field(),
            CodeSpec::Dc(s) => s.field(),
            CodeSpec::Fc(s) => s.field(),
        }
    }

    pub fn build_code(&self) -> LinearCode {
        match self {
            CodeSpec::Qc(s) => s.build_code(),
            CodeSpec::Dc(s) => s.build_code(),
            CodeSpec::Fc(s) => s.build_code(),
        }
    }

    /// Hull dimension from the closed-form gcd criterion of the family.
    pub fn hull_dim_formula(&self) -> usize {
        match self {
            CodeSpec::Qc(s) => s.hull_dim_formula(),
            CodeSpec::Dc(s) => s.hull_dim(),
            CodeSpec::Fc(s) => s.hull_dim_formula(),
        }
    }
}
