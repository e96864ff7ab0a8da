//! Self-describing field documents: a versioned JSON schema carrying the
//! exact canonical terms of each component plus construction provenance.
//! Serialization preserves the canonical term order, so generate/parse
//! round trips are byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Disc, QuadExt};
use crate::symfun::{LinearForm, RawTerm, SymFun, TrigKind, VecField};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct QuadJson {
    pub a: String,
    pub b: String,
    pub d: u32,
}

#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct TrigJson {
    pub kind: String,
    pub form: Vec<QuadJson>,
}

#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct TermJson {
    pub coeff: QuadJson,
    pub exponents: Vec<u32>,
    pub trig: Option<TrigJson>,
}

#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct Provenance {
    pub constructor: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct FieldDocument {
    pub version: u32,
    pub d: u32,
    pub dim: usize,
    pub provenance: Provenance,
    pub components: Vec<Vec<TermJson>>,
}

fn quad_to_json(q: &QuadExt) -> QuadJson {
    QuadJson {
        a: format_rational(q.rational_part()),
        b: format_rational(q.radical_part()),
        d: q.disc().radicand(),
    }
}

fn quad_from_json(j: &QuadJson) -> Result<QuadExt> {
    let d = Disc::from_radicand(j.d).ok_or_else(|| Error::BadDocument(format!("unsupported discriminant {}", j.d)))?;
    let a = parse_rational(&j.a).map_err(Error::BadDocument)?;
    let b = parse_rational(&j.b).map_err(Error::BadDocument)?;
    Ok(QuadExt::new(a, b, d))
}

impl FieldDocument {
    pub fn from_field(field: &VecField, constructor: &str, params: &[(&str, String)]) -> Self {
        let components = field
            .components()
            .iter()
            .map(|f| {
                f.terms()
                    .map(|(key, c)| TermJson {
                        coeff: quad_to_json(c),
                        exponents: key.exponents.clone(),
                        trig: key.trig.as_ref().map(|(kind, form)| TrigJson {
                            kind: kind.as_str().to_owned(),
                            form: form.coeffs().iter().map(quad_to_json).collect(),
                        }),
                    })
                    .collect()
            })
            .collect();
        FieldDocument {
            version: DOCUMENT_VERSION,
            d: field.disc().radicand(),
            dim: field.dim(),
            provenance: Provenance {
                constructor: constructor.to_owned(),
                params: params.iter().map(|(k, v)| ((*k).to_owned(), v.clone())).collect(),
            },
            components,
        }
    }

    pub fn to_field(&self) -> Result<VecField> {
        if self.version != DOCUMENT_VERSION {
            return Err(Error::BadDocument(format!("unsupported version {}", self.version)));
        }
        let disc = Disc::from_radicand(self.d)
            .ok_or_else(|| Error::BadDocument(format!("unsupported discriminant {}", self.d)))?;
        if !(2..=3).contains(&self.dim) {
            return Err(Error::BadDocument(format!("unsupported dimension {}", self.dim)));
        }
        if self.components.len() != self.dim {
            return Err(Error::BadDocument(format!(
                "{} components for dimension {}",
                self.components.len(),
                self.dim
            )));
        }
        let mut comps = Vec::with_capacity(self.dim);
        for terms in &self.components {
            let mut raw = Vec::with_capacity(terms.len());
            for t in terms {
                if t.exponents.len() != self.dim {
                    return Err(Error::BadDocument("exponent vector length mismatch".into()));
                }
                let coeff = quad_from_json(&t.coeff)?;
                let trig = match &t.trig {
                    None => Vec::new(),
                    Some(tr) => {
                        let kind = match tr.kind.as_str() {
                            "sin" => TrigKind::Sin,
                            "cos" => TrigKind::Cos,
                            other => return Err(Error::BadDocument(format!("unknown trig kind `{other}`"))),
                        };
                        if tr.form.len() != self.dim {
                            return Err(Error::BadDocument("form length mismatch".into()));
                        }
                        let coeffs = tr.form.iter().map(quad_from_json).collect::<Result<Vec<_>>>()?;
                        vec![(kind, LinearForm::from_quads(coeffs)?)]
                    }
                };
                raw.push(RawTerm::new(coeff, t.exponents.clone(), trig));
            }
            comps.push(SymFun::from_raw(self.dim, disc, raw)?);
        }
        VecField::new(comps)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadDocument(e.to_string()))
    }

    /// Human-readable rendering in canonical term order.
    pub fn pretty(&self) -> Result<String> {
        let field = self.to_field()?;
        let params = self
            .provenance
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        Ok(format!(
            "# {}({}) over Q(sqrt({})), dimension {}\n{}",
            self.provenance.constructor, params, self.d, self.dim, field
        ))
    }
}
