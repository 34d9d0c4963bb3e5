//! JSON forms of the core types. Coefficients are decimal strings.

use std::collections::BTreeMap;

use csfkit_core::{Basis, BigInt, Partition, SymF, VPoly, VertexMonomial};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::Error;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VPolyTerm {
    /// Vertex (1-based) to exponent; zero exponents omitted.
    pub exps: BTreeMap<usize, u16>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VPolyJson {
    pub n: usize,
    pub terms: Vec<VPolyTerm>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SymFTerm {
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SymFJson {
    pub basis: String,
    pub degree: u32,
    pub terms: Vec<SymFTerm>,
}

impl From<&VPoly> for VPolyJson {
    fn from(p: &VPoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| VPolyTerm { exps: m.support().collect(), coeff: c.to_string() })
            .collect();
        VPolyJson { n: p.nvars(), terms }
    }
}

impl TryFrom<&VPolyJson> for VPoly {
    type Error = Error;

    fn try_from(j: &VPolyJson) -> Result<Self, Error> {
        let mut p = VPoly::zero(j.n);
        for t in &j.terms {
            let mut exps = vec![0u16; j.n];
            for (&v, &e) in &t.exps {
                if v == 0 || v > j.n {
                    return Err(Error::Core(csfkit_core::Error::VertexOutOfRange(v)));
                }
                exps[v - 1] = e;
            }
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Format(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(VertexMonomial::from_exponents(exps), c);
        }
        Ok(p)
    }
}

impl From<&SymF> for SymFJson {
    fn from(f: &SymF) -> Self {
        let terms = f
            .terms()
            .map(|(l, c)| SymFTerm { partition: l.parts().to_vec(), coeff: c.to_string() })
            .collect();
        SymFJson { basis: f.basis().name().into(), degree: f.degree(), terms }
    }
}

impl TryFrom<&SymFJson> for SymF {
    type Error = Error;

    fn try_from(j: &SymFJson) -> Result<Self, Error> {
        let basis = Basis::parse(&j.basis).ok_or_else(|| Error::Format(format!("unknown basis {:?}", j.basis)))?;
        let mut terms = Vec::new();
        for t in &j.terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Format(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((Partition::new(t.partition.clone())?, c));
        }
        Ok(SymF::from_terms(basis, j.degree, terms)?)
    }
}

pub fn vpoly(p: &VPoly) -> Value {
    serde_json::to_value(VPolyJson::from(p)).expect("plain data")
}

pub fn symf(f: &SymF) -> Value {
    serde_json::to_value(SymFJson::from(f)).expect("plain data")
}

pub fn partition(l: &Partition) -> Value {
    json!(l.parts())
}

/// `{"(2,1)": "1", "(3)": "3"}`.
pub fn coeff_map<'a>(terms: impl IntoIterator<Item = (&'a Partition, &'a BigInt)>) -> Value {
    let mut m = Map::new();
    for (l, c) in terms {
        m.insert(l.to_string(), Value::String(c.to_string()));
    }
    Value::Object(m)
}

/// `[{"partition": [3,1], "coeff": "2"}, ...]` in partition order.
pub fn coeff_list<'a>(terms: impl IntoIterator<Item = (&'a Partition, &'a BigInt)>) -> Value {
    Value::Array(
        terms
            .into_iter()
            .map(|(l, c)| json!({"partition": l.parts(), "coeff": c.to_string()}))
            .collect(),
    )
}
