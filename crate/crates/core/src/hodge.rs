//! Hodge-number matrices and their text/JSON renderings.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::polyring::BiPoly;

/// Square matrix of Hodge numbers, `rows[p][q] = h^{p,q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeMatrix {
    rows: Vec<Vec<BigInt>>,
}

#[derive(Serialize)]
struct DiamondJson<'a> {
    genus: u32,
    rows_are_p: bool,
    matrix: &'a [Vec<serde_json::Number>],
}

pub(crate) fn big_to_json(n: &BigInt) -> serde_json::Number {
    // arbitrary_precision keeps the full integer text
    n.to_string()
        .parse()
        .expect("an integer always parses as a JSON number")
}

impl HodgeMatrix {
    /// Square matrix large enough to hold every term of `poly`.
    pub fn from_bipoly(poly: &BiPoly) -> Self {
        let (mp, mq) = poly.max_exponents();
        let n = if poly.is_zero() {
            0
        } else {
            mp.max(mq) as usize + 1
        };
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (&(p, q), c) in poly.terms() {
            rows[p as usize][q as usize] = c.clone();
        }
        Self { rows }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, p: usize, q: usize) -> BigInt {
        self.rows
            .get(p)
            .and_then(|r| r.get(q))
            .cloned()
            .unwrap_or_default()
    }

    /// `h^{p,q} = h^{q,p}`
    pub fn is_hodge_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|p| (0..n).all(|q| self.rows[p][q] == self.rows[q][p]))
    }

    /// `h^{p,q} = h^{D-p,D-q}` for every entry, zero outside `[0, D]`.
    pub fn is_poincare_dual(&self, dim: usize) -> bool {
        let n = self.size();
        if n > dim + 1 {
            return false;
        }
        (0..=dim).all(|p| (0..=dim).all(|q| self.get(p, q) == self.get(dim - p, dim - q)))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, genus: u32) -> String {
        let matrix: Vec<Vec<serde_json::Number>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(big_to_json).collect())
            .collect();
        serde_json::to_string(&DiamondJson {
            genus,
            rows_are_p: true,
            matrix: &matrix,
        })
        .expect("diamond serialization cannot fail")
    }

    /// Parse the text form back; used to check that both renderings agree.
    pub fn parse_text(text: &str) -> Option<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|x| x.parse::<BigInt>().ok())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self { rows })
    }
}
