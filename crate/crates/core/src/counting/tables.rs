//! Concrete tables of `C_s(X_k)` and `A_{n,e}` values and their JSON forms.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use serde_json::{Map, Value};
use std::collections::BTreeMap;

/// Values `C_s(X_k)` as Laurent polynomials in `t, z_1, …, z_g`.
///
/// Entries with `k > 1` that are not stored explicitly are obtained from
/// `C_s(X_1)` by Frobenius substitution.
#[derive(Clone, Debug, PartialEq)]
pub struct CTable {
    g: usize,
    entries: BTreeMap<(u32, u32), LaurentPoly>,
}

impl CTable {
    pub fn new(g: usize) -> Self {
        CTable {
            g,
            entries: BTreeMap::new(),
        }
    }

    /// Table holding only `C_1(X_1) = ∏ (1 − z_i)(1 − t z_i⁻¹)`.
    pub fn with_pic0(g: usize) -> Self {
        let mut t = Self::new(g);
        t.entries.insert((1, 1), LaurentPoly::pic0(g));
        t
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn insert(&mut self, s: u32, k: u32, v: LaurentPoly) -> Result<()> {
        if v.g() != self.g {
            return Err(Error::Dimension(format!(
                "entry C[{s},{k}] has g={}, table has g={}",
                v.g(),
                self.g
            )));
        }
        if s == 0 || k == 0 {
            return Err(Error::Argument("table indices start at 1".into()));
        }
        self.entries.insert((s, k), v);
        Ok(())
    }

    pub fn get(&self, s: u32, k: u32) -> Result<LaurentPoly> {
        if let Some(v) = self.entries.get(&(s, k)) {
            return Ok(v.clone());
        }
        match self.entries.get(&(s, 1)) {
            Some(v) if k >= 1 => v.frobenius_substitute(k as i64),
            _ => Err(Error::Lookup { s, k }),
        }
    }

    pub fn contains(&self, s: u32) -> bool {
        self.entries.contains_key(&(s, 1))
    }

    /// Largest `s` with `C_s(X_1)` present.
    pub fn max_rank(&self) -> u32 {
        self.entries.keys().map(|&(s, _)| s).max().unwrap_or(0)
    }

    /// Stored entries that disagree with Frobenius substitution of `C_s(X_1)`.
    pub fn frobenius_violations(&self) -> Vec<(u32, u32)> {
        self.entries
            .iter()
            .filter(|(&(s, k), v)| {
                k > 1
                    && self
                        .entries
                        .get(&(s, 1))
                        .is_some_and(|b| b.frobenius_substitute(k as i64).ok().as_ref() != Some(*v))
            })
            .map(|(&key, _)| key)
            .collect()
    }

    /// `{"entries": {"s,k": <LaurentPoly>, …}}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (&(s, k), v) in &self.entries {
            m.insert(format!("{s},{k}"), v.to_json());
        }
        serde_json::json!({ "g": self.g, "entries": Value::Object(m) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let entries = v
            .get("entries")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("C table needs an \"entries\" object".into()))?;
        let mut parsed = BTreeMap::new();
        for (key, val) in entries {
            let (s, k) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad C table key {key:?}")))?;
            parsed.insert((s, k), LaurentPoly::from_json(val)?);
        }
        let g = match v.get("g").and_then(Value::as_u64) {
            Some(g) => g as usize,
            None => parsed
                .values()
                .next()
                .map(LaurentPoly::g)
                .ok_or_else(|| Error::Parse("cannot infer g from an empty table".into()))?,
        };
        let mut t = CTable::new(g);
        for ((s, k), p) in parsed {
            t.insert(s, k, p)?;
        }
        Ok(t)
    }
}

/// Values `A_{n,e}` for `(n, e) = 1`, keyed by `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ATable {
    g: usize,
    entries: BTreeMap<u32, LaurentPoly>,
}

impl ATable {
    pub fn new(g: usize) -> Self {
        ATable {
            g,
            entries: BTreeMap::new(),
        }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn insert(&mut self, n: u32, v: LaurentPoly) -> Result<()> {
        if v.g() != self.g {
            return Err(Error::Dimension(format!(
                "entry A[{n}] has g={}, table has g={}",
                v.g(),
                self.g
            )));
        }
        self.entries.insert(n, v);
        Ok(())
    }

    pub fn get(&self, n: u32) -> Result<&LaurentPoly> {
        self.entries
            .get(&n)
            .ok_or_else(|| Error::Argument(format!("A table has no entry for n={n}")))
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.entries.iter().map(|(&n, p)| (n, p))
    }

    /// Rejects entries that are not Weil-invariant or break positivity.
    pub fn validate(&self) -> Result<()> {
        for (n, p) in &self.entries {
            if !p.is_weil_invariant() {
                return Err(Error::Invariance);
            }
            if !p.satisfies_positivity() {
                return Err(Error::Violation(format!(
                    "A[{n}] has a monomial t^m z^n with m + Σ min(n_i, 0) < 0"
                )));
            }
        }
        Ok(())
    }

    /// `{"entries": {"2": <LaurentPoly>, …}}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (n, v) in &self.entries {
            m.insert(n.to_string(), v.to_json());
        }
        serde_json::json!({ "entries": Value::Object(m) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let entries = v
            .get("entries")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("A table needs an \"entries\" object".into()))?;
        let mut parsed = BTreeMap::new();
        for (key, val) in entries {
            let n: u32 = key
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad A table key {key:?}")))?;
            parsed.insert(n, LaurentPoly::from_json(val)?);
        }
        let g = parsed
            .values()
            .next()
            .map(LaurentPoly::g)
            .ok_or_else(|| Error::Parse("A table is empty".into()))?;
        let mut t = ATable::new(g);
        for (n, p) in parsed {
            t.insert(n, p)?;
        }
        t.validate()?;
        Ok(t)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_fallback_and_json() {
        let mut t = CTable::with_pic0(2);
        assert_eq!(
            t.get(1, 3).unwrap(),
            LaurentPoly::pic0(2).frobenius_substitute(3).unwrap()
        );
        assert_eq!(t.get(2, 1), Err(Error::Lookup { s: 2, k: 1 }));
        t.insert(1, 2, LaurentPoly::one(2)).unwrap();
        assert_eq!(t.frobenius_violations(), vec![(1, 2)]);
        let back = CTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn a_table_validation() {
        let mut a = ATable::new(1);
        a.insert(2, LaurentPoly::pic0(1)).unwrap();
        let back = ATable::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
        let mut bad = ATable::new(1);
        bad.insert(2, LaurentPoly::z(1, 0)).unwrap();
        assert!(ATable::from_json(&bad.to_json()).is_err());
    }
}
