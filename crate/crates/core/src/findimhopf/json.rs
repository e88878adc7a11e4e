use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::Field;

use super::{Algebra, FinHopf, Tens, Vector};

/// Dense JSON form of a [`FinHopf`]. Entries are scalar strings.
///
/// `mult[i][j][k]`: coefficient of `e_k` in `e_i e_j`;
/// `comult[k][i][j]`: coefficient of `e_i ⊗ e_j` in `Δ(e_k)`;
/// `antipode[i][j]`: coefficient of `e_j` in `S(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinHopfDoc {
    pub name: String,
    /// `"rational"` or `"q"`.
    pub scalar: String,
    pub dim: usize,
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub comult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

fn dense<F: Field>(v: &Vector<F>, n: usize) -> Vec<String> {
    (0..n).map(|i| v.get(&i).map_or_else(|| "0".to_string(), |c| c.to_string())).collect()
}

fn sparse<F: Field>(row: &[String], n: usize) -> Result<Vector<F>> {
    if row.len() != n {
        return Err(Error::Shape(format!("expected {n} entries, got {}", row.len())));
    }
    let mut v = Vector::new();
    for (i, s) in row.iter().enumerate() {
        let c = F::parse_str(s)?;
        if !c.is_zero() {
            v.insert(i, c);
        }
    }
    Ok(v)
}

impl FinHopfDoc {
    pub fn from_hopf<F: Field>(h: &FinHopf<F>) -> Self {
        let n = h.dim();
        FinHopfDoc {
            name: h.name.clone(),
            scalar: F::KIND.into(),
            dim: n,
            mult: h.algebra.mult.iter().map(|row| row.iter().map(|v| dense(v, n)).collect()).collect(),
            unit: dense(h.unit(), n),
            comult: h
                .comult
                .iter()
                .map(|t| (0..n).map(|i| (0..n).map(|j| t.coeff(&[i, j]).to_string()).collect()).collect())
                .collect(),
            counit: h.counit.iter().map(|c| c.to_string()).collect(),
            antipode: h.antipode.iter().map(|v| dense(v, n)).collect(),
        }
    }

    pub fn to_hopf<F: Field>(&self) -> Result<FinHopf<F>> {
        if self.scalar != F::KIND {
            return Err(Error::Domain(format!("document has scalar kind `{}`, expected `{}`", self.scalar, F::KIND)));
        }
        let n = self.dim;
        let shape = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Shape(format!("{what} has the wrong shape"))) };
        shape(n > 0, "dim")?;
        shape(self.mult.len() == n && self.mult.iter().all(|r| r.len() == n), "mult")?;
        shape(self.comult.len() == n && self.comult.iter().all(|r| r.len() == n), "comult")?;
        shape(self.counit.len() == n && self.antipode.len() == n, "counit/antipode")?;
        let mult = self
            .mult
            .iter()
            .map(|row| row.iter().map(|v| sparse(v, n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut comult = Vec::with_capacity(n);
        for table in &self.comult {
            let mut t = Tens::zero(2);
            for (i, row) in table.iter().enumerate() {
                for (j, c) in sparse::<F>(row, n)? {
                    t.add_term(vec![i, j], c);
                }
            }
            comult.push(t);
        }
        let counit = self.counit.iter().map(|s| F::parse_str(s)).collect::<Result<Vec<_>>>()?;
        let antipode = self.antipode.iter().map(|v| sparse(v, n)).collect::<Result<Vec<_>>>()?;
        let h = FinHopf {
            name: self.name.clone(),
            algebra: Algebra { dim: n, mult, unit: sparse(&self.unit, n)? },
            comult,
            counit,
            antipode,
        };
        h.check_shape()?;
        Ok(h)
    }
}

impl<F: Field> FinHopf<F> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&FinHopfDoc::from_hopf(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FinHopfDoc =
            serde_json::from_str(text).map_err(|e| Error::Syntax { pos: e.column(), msg: e.to_string() })?;
        doc.to_hopf()
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::super::zoo;
    use super::*;
    use crate::scalars::ScalarQ;

    #[test]
    fn roundtrip() {
        for h in zoo::zoo() {
            let back = FinHopf::<BigRational>::from_json(&h.to_json()).unwrap();
            assert_eq!(back, h);
        }
    }

    #[test]
    fn wrong_kind() {
        let text = zoo::sweedler().to_json();
        assert!(matches!(FinHopf::<ScalarQ>::from_json(&text), Err(Error::Domain(_))));
        assert!(FinHopf::<BigRational>::from_json("{").is_err());
    }
}
