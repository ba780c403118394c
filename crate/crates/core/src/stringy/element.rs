use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::StringyError;
use crate::cyclotomic::CyclotomicNumber;
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::scalar::Scalar;
use crate::sector::{BasisWord, KClass};

/// An element of one sector `g`, given by its decomposition components
/// `h ↦ E_h`.
#[derive(Debug, Clone)]
pub struct SectorElement<T> {
    sector: GroupElement,
    components: BTreeMap<GroupElement, KClass<T>>,
}

impl<T: Scalar> PartialEq for SectorElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.sector == other.sector && self.components == other.components
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    sector: String,
    components: BTreeMap<String, Vec<(Value, String)>>,
}

impl<T: Scalar> SectorElement<T> {
    pub fn zero(sector: GroupElement) -> Self {
        SectorElement {
            sector,
            components: BTreeMap::new(),
        }
    }

    /// The element that is the single word `word` in component `h`.
    pub fn basis(sector: GroupElement, h: GroupElement, word: BasisWord) -> Self {
        let mut x = Self::zero(sector);
        x.set_component(h, KClass::word(word));
        x
    }

    pub fn sector(&self) -> &GroupElement {
        &self.sector
    }

    pub fn components(&self) -> &BTreeMap<GroupElement, KClass<T>> {
        &self.components
    }

    pub fn component(&self, h: &GroupElement) -> Option<&KClass<T>> {
        self.components.get(h)
    }

    /// Replaces component `h`; zero classes are dropped.
    pub fn set_component(&mut self, h: GroupElement, class: KClass<T>) {
        if class.is_zero() {
            self.components.remove(&h);
        } else {
            self.components.insert(h, class);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Sum of two elements of the same sector.
    pub fn add(&self, other: &Self) -> Result<Self, StringyError> {
        if self.sector != other.sector {
            return Err(StringyError::Json(format!(
                "cannot add elements of sectors {} and {}",
                self.sector, other.sector
            )));
        }
        let mut r = self.clone();
        for (h, c) in &other.components {
            let sum = match r.components.get(h) {
                Some(a) => a.add(c),
                None => c.clone(),
            };
            r.set_component(h.clone(), sum);
        }
        Ok(r)
    }

    pub fn scale(&self, c: &CyclotomicNumber<T>) -> Self {
        let mut r = Self::zero(self.sector.clone());
        for (h, k) in &self.components {
            r.set_component(h.clone(), k.scale(c));
        }
        r
    }

    /// `{"sector": "1,0,0", "components": {"0,0,0": [["2", "e1⊗1⊗1"]]}}`.
    pub fn to_json(&self) -> Value {
        let components = self
            .components
            .iter()
            .map(|(h, k)| {
                let terms = k.terms().map(|(w, c)| (Value::String(c.to_string()), w.to_string())).collect();
                (h.to_string(), terms)
            })
            .collect();
        serde_json::to_value(Wire {
            sector: self.sector.to_string(),
            components,
        })
        .expect("plain data")
    }

    /// Reads the JSON form. `factors` is the number of factors of the space
    /// (0 for a point); coefficients may be JSON integers or strings such as
    /// `"3/2"` or `"1 - z"` (with `z = ζ_{|h|}`).
    pub fn from_json(value: &Value, group: &FiniteAbelianGroup, factors: usize) -> Result<Self, StringyError> {
        let wire: Wire = serde_json::from_value(value.clone()).map_err(|e| StringyError::Json(e.to_string()))?;
        let sector = GroupElement::parse(&wire.sector, group)?;
        let mut x = Self::zero(sector);
        for (h_text, terms) in wire.components {
            let h = GroupElement::parse(&h_text, group)?;
            let mut class = x.components.get(&h).cloned().unwrap_or_default();
            for (coeff, word_text) in terms {
                let word = BasisWord::parse(&word_text, factors)
                    .ok_or_else(|| StringyError::Json(format!("bad basis word {word_text:?}")))?;
                let c = match &coeff {
                    Value::Number(n) => {
                        let v = n.as_i64().ok_or_else(|| StringyError::Json(format!("coefficient {n} is not an integer")))?;
                        CyclotomicNumber::from_int(1, v)
                    }
                    Value::String(s) => CyclotomicNumber::parse(s, h.order().max(1))
                        .map_err(|e| StringyError::Json(e.to_string()))?,
                    other => return Err(StringyError::Json(format!("bad coefficient {other}"))),
                };
                class.add_term(word, c);
            }
            x.set_component(h, class);
        }
        Ok(x)
    }
}

impl<T: Scalar> fmt::Display for SectorElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.sector)?;
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.components.iter().map(|(h, k)| format!("{h}: {k}")).collect();
        write!(f, "{}", parts.join("; "))
    }
}
