//! Countable discrete component groups.
//!
//! Every component group stores its identity as the value `0`. Finite tables
//! supplied with another identity are relabeled on construction so that this
//! holds, which lets [`Element`](super::Element) drop zero entries without
//! consulting the group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A component value. Integers use the value itself; finite groups use
/// `0..order`.
pub type Value = i64;

/// A discrete countable group used as one coordinate of a direct sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComponentGroup {
    /// The additive integers.
    Integers,
    /// `Z/order`, written additively.
    Cyclic { order: u32 },
    /// A finite group given by its Cayley table.
    Table { table: TableGroup },
}

impl ComponentGroup {
    pub fn cyclic(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::Config("cyclic group order must be positive".into()));
        }
        Ok(ComponentGroup::Cyclic { order })
    }

    pub fn table(table: Vec<Vec<u32>>) -> Result<Self> {
        Ok(ComponentGroup::Table {
            table: TableGroup::new(table)?,
        })
    }

    /// Number of elements, `None` for the integers.
    pub fn order(&self) -> Option<u64> {
        match self {
            ComponentGroup::Integers => None,
            ComponentGroup::Cyclic { order } => Some(u64::from(*order)),
            ComponentGroup::Table { table } => Some(table.order() as u64),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn contains(&self, v: Value) -> bool {
        match self.order() {
            None => true,
            Some(order) => v >= 0 && (v as u64) < order,
        }
    }

    fn check(&self, v: Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::MalformedElement(format!("value {v} is not in {self}")))
        }
    }

    pub fn op(&self, a: Value, b: Value) -> Result<Value> {
        self.check(a)?;
        self.check(b)?;
        match self {
            ComponentGroup::Integers => a
                .checked_add(b)
                .ok_or_else(|| Error::MalformedElement(format!("{a} + {b} overflows"))),
            ComponentGroup::Cyclic { order } => {
                let m = i64::from(*order);
                Ok((a + b) % m)
            }
            ComponentGroup::Table { table } => Ok(table.op(a as u32, b as u32) as Value),
        }
    }

    pub fn inv(&self, a: Value) -> Result<Value> {
        self.check(a)?;
        match self {
            ComponentGroup::Integers => a
                .checked_neg()
                .ok_or_else(|| Error::MalformedElement(format!("-({a}) overflows"))),
            ComponentGroup::Cyclic { order } => {
                let m = i64::from(*order);
                Ok((m - a) % m)
            }
            ComponentGroup::Table { table } => Ok(table.inv(a as u32) as Value),
        }
    }

    /// Position of `v` in the component enumerator. The identity has rank 0;
    /// the integers are listed `0, 1, -1, 2, -2, ...`.
    pub fn rank_of(&self, v: Value) -> Option<u64> {
        if !self.contains(v) {
            return None;
        }
        match self {
            ComponentGroup::Integers => Some(if v > 0 {
                2 * v.unsigned_abs() - 1
            } else {
                2 * v.unsigned_abs()
            }),
            _ => Some(v as u64),
        }
    }

    /// Inverse of [`rank_of`](Self::rank_of).
    pub fn value_at(&self, rank: u64) -> Option<Value> {
        match self {
            ComponentGroup::Integers => {
                let half = i64::try_from(rank.div_ceil(2)).ok()?;
                Some(if rank % 2 == 1 { half } else { -half })
            }
            _ => {
                if rank < self.order()? {
                    Some(rank as Value)
                } else {
                    None
                }
            }
        }
    }

    /// Largest rank the enumerator reaches, `None` when unbounded.
    pub fn max_rank(&self) -> Option<u64> {
        self.order().map(|n| n - 1)
    }

    /// The compact piece `C(n)` of the filtration: `-n..=n` for the integers,
    /// everything for finite groups.
    pub fn filtration_contains(&self, v: Value, n: u64) -> bool {
        match self {
            ComponentGroup::Integers => v.unsigned_abs() <= n,
            _ => self.contains(v),
        }
    }

    /// Values of `C(n)` in enumerator order.
    pub fn filtration(&self, n: u64) -> Vec<Value> {
        let top = match self.max_rank() {
            None => 2 * n,
            Some(r) => r,
        };
        (0..=top).filter_map(|r| self.value_at(r)).collect()
    }

    /// Size of `C(n)`.
    pub fn filtration_len(&self, n: u64) -> u64 {
        match self.order() {
            None => 2 * n + 1,
            Some(m) => m,
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Integers => write!(f, "Z"),
            ComponentGroup::Cyclic { order } => write!(f, "Z/{order}"),
            ComponentGroup::Table { table } => write!(f, "table group of order {}", table.order()),
        }
    }
}

/// Finite group given by a Cayley table over `0..n`, normalized so that `0`
/// is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct TableGroup {
    table: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

impl TableGroup {
    /// Validates the group axioms exhaustively and relabels the identity to 0.
    pub fn new(table: Vec<Vec<u32>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Config("empty operation table".into()));
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(Error::Config("operation table is not square".into()));
        }
        if table.iter().flatten().any(|&v| v as usize >= n) {
            return Err(Error::Config("operation table entry out of range".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] as usize == a && table[a][e] as usize == a))
            .ok_or_else(|| Error::Config("operation table has no identity".into()))?;

        // swap labels 0 and e
        let relabel = |v: usize| -> usize {
            if v == e {
                0
            } else if v == 0 {
                e
            } else {
                v
            }
        };
        let mut fixed = vec![vec![0u32; n]; n];
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                fixed[relabel(a)][relabel(b)] = relabel(c as usize) as u32;
            }
        }

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = fixed[a][b] as usize;
                    let bc = fixed[b][c] as usize;
                    if fixed[ab][c] != fixed[a][bc] {
                        return Err(Error::Config(format!(
                            "operation table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for (a, row) in fixed.iter().enumerate() {
            let inv = (0..n)
                .find(|&b| row[b] == 0 && fixed[b][a] == 0)
                .ok_or_else(|| Error::Config(format!("element {a} has no inverse")))?;
            inverse.push(inv as u32);
        }
        Ok(TableGroup {
            table: fixed,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize][b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// The symmetric group on three letters, a small non-abelian test case.
    pub fn s3() -> Self {
        // permutations of {0,1,2} listed as images
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() as u32;
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        TableGroup::new(table).expect("S3 table is a group")
    }
}

impl TryFrom<Vec<Vec<u32>>> for TableGroup {
    type Error = Error;

    fn try_from(table: Vec<Vec<u32>>) -> Result<Self> {
        TableGroup::new(table)
    }
}

impl From<TableGroup> for Vec<Vec<u32>> {
    fn from(t: TableGroup) -> Self {
        t.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_enumerator_alternates_signs() {
        let z = ComponentGroup::Integers;
        let first: Vec<_> = (0..5).map(|r| z.value_at(r).unwrap()).collect();
        assert_eq!(first, vec![0, 1, -1, 2, -2]);
        for r in 0..200 {
            assert_eq!(z.rank_of(z.value_at(r).unwrap()), Some(r));
        }
    }

    #[test]
    fn filtration_is_nested_and_exhausts() {
        let z = ComponentGroup::Integers;
        for n in 0..10 {
            let small = z.filtration(n);
            let big = z.filtration(n + 1);
            assert!(small.iter().all(|v| big.contains(v)));
            assert_eq!(small.len() as u64, z.filtration_len(n));
            assert!(small.iter().all(|&v| z.filtration_contains(v, n)));
        }
        assert_eq!(z.filtration(1), vec![0, 1, -1]);
        let c = ComponentGroup::cyclic(6).unwrap();
        assert_eq!(c.filtration(0), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn table_identity_is_relabeled_to_zero() {
        // Z/3 with identity labeled 2
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = TableGroup::new(table).unwrap();
        for a in 0..3 {
            assert_eq!(g.op(0, a), a);
            assert_eq!(g.op(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(TableGroup::new(vec![]).is_err());
        assert!(TableGroup::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(TableGroup::new(vec![vec![0, 1]]).is_err());
        assert!(ComponentGroup::cyclic(0).is_err());
    }

    #[test]
    fn s3_is_not_abelian() {
        let g = TableGroup::s3();
        let non_commuting = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .any(|(a, b)| g.op(a, b) != g.op(b, a));
        assert!(non_commuting);
    }

    #[test]
    fn out_of_domain_values_are_malformed() {
        let c = ComponentGroup::cyclic(2).unwrap();
        assert!(matches!(c.op(2, 0), Err(Error::MalformedElement(_))));
        assert!(c.inv(-1).is_err());
    }
}
