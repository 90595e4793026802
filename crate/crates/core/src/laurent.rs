//! Finitely supported formal Laurent series stored by mode index.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

/// How mode indices map to powers of `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `sum_n a_n z^{-n-1}`, the indexing of weight-one fields.
    Weight1,
    /// `sum_n a_n z^{-n-2}`, the indexing of weight-two fields.
    Weight2,
}

impl Convention {
    /// `k` such that mode `n` multiplies `z^{-n-k}`.
    pub fn shift(self) -> i64 {
        match self {
            Convention::Weight1 => 1,
            Convention::Weight2 => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentData {
    pub convention: Convention,
    #[serde(with = "string_keys")]
    pub coeffs: BTreeMap<i64, Rational>,
}

/// Mode indices as JSON object keys. Plain integer keys do not survive the
/// buffering done for internally tagged enums.
mod string_keys {
    use std::collections::BTreeMap;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::exact::Rational;

    pub fn serialize<S: Serializer>(m: &BTreeMap<i64, Rational>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<i64, Rational>, D::Error> {
        BTreeMap::<String, Rational>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| k.trim().parse().map(|k| (k, v)).map_err(|_| D::Error::custom(format!("mode index {k:?} is not an integer"))))
            .collect()
    }
}

impl LaurentData {
    pub fn new(convention: Convention, coeffs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentData { convention, coeffs }
    }

    pub fn zero(convention: Convention) -> Self {
        Self::new(convention, [])
    }

    /// Builds the series from coefficients of powers of `z`.
    pub fn from_powers(convention: Convention, powers: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let s = convention.shift();
        Self::new(convention, powers.into_iter().map(|(k, c)| (-k - s, c)))
    }

    pub fn coeff(&self, n: i64) -> Rational {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Coefficient of `z^k`.
    pub fn power_coeff(&self, k: i64) -> Rational {
        self.coeff(-k - self.convention.shift())
    }

    pub fn max_mode(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_mode(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Same series, reindexed for another convention.
    pub fn to_convention(&self, convention: Convention) -> LaurentData {
        let delta = convention.shift() - self.convention.shift();
        LaurentData::new(convention, self.coeffs.iter().map(|(n, c)| (n - delta, c.clone())))
    }

    pub fn plus(&self, other: &LaurentData) -> LaurentData {
        let other = other.to_convention(self.convention);
        let mut coeffs = self.coeffs.clone();
        for (n, c) in other.coeffs {
            *coeffs.entry(n).or_default() += c;
        }
        LaurentData::new(self.convention, coeffs)
    }

    pub fn scaled(&self, k: &Rational) -> LaurentData {
        LaurentData::new(self.convention, self.coeffs.iter().map(|(n, c)| (*n, c * k)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_and_mode_agree() {
        let c = LaurentData::from_powers(Convention::Weight2, [(-2, Rational::from_int(5)), (-1, Rational::one())]);
        assert_eq!(c.coeff(0), Rational::from_int(5));
        assert_eq!(c.coeff(-1), Rational::one());
        let w1 = c.to_convention(Convention::Weight1);
        assert_eq!(w1.coeff(1), Rational::from_int(5));
        assert_eq!(w1.power_coeff(-2), Rational::from_int(5));
    }

    #[test]
    fn json_shape() {
        let s = r#"{"convention":"weight2","coeffs":{"0":"12","-1":"3/2"}}"#;
        let c: LaurentData = serde_json::from_str(s).unwrap();
        assert_eq!(c.coeff(-1), Rational::frac(3, 2));
        let back: LaurentData = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
