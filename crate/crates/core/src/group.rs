//! Finite groups given extensionally by a Cayley table.
//!
//! Elements are addressed by their position in the declared enumeration;
//! position 0 is always the identity. The same enumeration fixes the block
//! order of the variables `x[g,j]`, so it is part of the ranking.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    names: Vec<String>,
    /// `table[a][b]` is the index of `names[a] * names[b]`.
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec{:?}", self.names)
    }
}

impl GroupSpec {
    /// Builds a group from element names and a Cayley table, checking the
    /// group axioms. The first name must be the identity.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let order = names.len();
        if order == 0 {
            return Err(Error::InvalidGroup("no elements".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidGroup(format!("bad element name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidGroup(format!("duplicate element `{name}`")));
            }
        }
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(Error::InvalidGroup(format!("table must be {order}x{order}")));
        }
        if table.iter().flatten().any(|&c| c >= order) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        for a in 0..order {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::InvalidGroup(format!(
                    "`{}` is not the identity (row/column {} not trivial)",
                    names[0], names[a]
                )));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order).find(|&b| table[a][b] == 0 && table[b][a] == 0);
            match inv {
                Some(b) => inverse.push(b),
                None => {
                    return Err(Error::InvalidGroup(format!("`{}` has no inverse", names[a])))
                }
            }
        }
        Ok(GroupSpec {
            names,
            table,
            inverse,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// ℤ/k with elements `e, g, g^2, …, g^(k-1)`.
    pub fn cyclic(k: usize) -> Self {
        assert!(k >= 1, "cyclic group needs at least one element");
        let names = (0..k)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..k)
            .map(|a| (0..k).map(|b| (a + b) % k).collect())
            .collect();
        let inverse = (0..k).map(|a| (k - a) % k).collect();
        GroupSpec {
            names,
            table,
            inverse,
        }
    }

    /// The symmetric group on `k` points. Elements are listed in
    /// lexicographic order of their one-line notation (identity first) and
    /// named `e` or `p` followed by the one-line images, e.g. `p213`.
    /// Multiplication is composition: `(a*b)(i) = a(b(i))`.
    pub fn symmetric(k: usize) -> Self {
        assert!((1..=6).contains(&k), "symmetric group supported for 1..=6 points");
        let perms = permutations(k);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let names = perms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == 0 {
                    "e".to_string()
                } else {
                    let digits: String = p.iter().map(|&d| char::from(b'1' + d as u8)).collect();
                    format!("p{digits}")
                }
            })
            .collect();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let comp: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                        index_of(&comp)
                    })
                    .collect()
            })
            .collect();
        let inverse = (0..perms.len())
            .map(|a| (0..perms.len()).find(|&b| table[a][b] == 0).unwrap())
            .collect();
        GroupSpec {
            names,
            table,
            inverse,
        }
    }

    /// The Klein four-group `{e, a, b, c}`.
    pub fn klein() -> Self {
        let names = ["e", "a", "b", "c"].map(String::from).to_vec();
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        GroupSpec {
            names,
            table,
            inverse: vec![0, 1, 2, 3],
        }
    }

    /// Resolves `cyclic:k`, `sym:k`, `klein` and `trivial`. Returns `None`
    /// when `spec` names no built-in.
    pub fn builtin(spec: &str) -> Option<Result<Self>> {
        let spec = spec.trim();
        let sized = |rest: &str, max: usize, make: fn(usize) -> GroupSpec| {
            match rest.parse::<usize>() {
                Ok(k) if (1..=max).contains(&k) => Ok(make(k)),
                _ => Err(Error::InvalidGroup(format!(
                    "group size must be an integer in 1..={max}, got `{rest}`"
                ))),
            }
        };
        if let Some(rest) = spec.strip_prefix("cyclic:") {
            Some(sized(rest, 4096, GroupSpec::cyclic))
        } else if let Some(rest) = spec.strip_prefix("sym:") {
            Some(sized(rest, 6, GroupSpec::symmetric))
        } else if spec == "klein" {
            Some(Ok(GroupSpec::klein()))
        } else if spec == "trivial" {
            Some(Ok(GroupSpec::trivial()))
        } else {
            None
        }
    }

    /// Parses the plain-text group format:
    ///
    /// ```text
    /// # comment
    /// elements: e g
    /// e g
    /// g e
    /// ```
    ///
    /// Row `i` lists the products `elements[i] * elements[j]`.
    pub fn parse(source: &str) -> Result<Self> {
        let mut lines = source
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "empty group file".into(),
        })?;
        let names: Vec<String> = header
            .strip_prefix("elements:")
            .ok_or_else(|| Error::Parse {
                line: header_line,
                column: 1,
                message: "expected `elements:` header".into(),
            })?
            .split_whitespace()
            .map(String::from)
            .collect();
        let mut table = Vec::with_capacity(names.len());
        for (line, row) in lines {
            let entries = row
                .split_whitespace()
                .map(|tok| {
                    names.iter().position(|n| n == tok).ok_or_else(|| Error::Parse {
                        line,
                        column: row.find(tok).unwrap_or(0) + 1,
                        message: format!("unknown group element `{tok}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(entries);
        }
        Self::from_table(names, table)
    }

    /// Renders the group in the format accepted by [`GroupSpec::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("elements: {}\n", self.names.join(" "));
        for row in &self.table {
            let cells: Vec<&str> = row.iter().map(|&c| self.names[c].as_str()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGroupElement(name.to_string()))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '[' | ']' | '#'))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &GroupSpec) {
        let rebuilt = GroupSpec::from_table(g.names.clone(), g.table.clone()).unwrap();
        assert_eq!(&rebuilt, g);
    }

    #[test]
    fn builtins_satisfy_axioms() {
        for k in 1..=7 {
            check_axioms(&GroupSpec::cyclic(k));
        }
        for k in 1..=4 {
            check_axioms(&GroupSpec::symmetric(k));
        }
        check_axioms(&GroupSpec::klein());
    }

    #[test]
    fn symmetric_three_is_nonabelian() {
        let s3 = GroupSpec::symmetric(3);
        assert_eq!(s3.order(), 6);
        let a = s3.index_of("p213").unwrap();
        let b = s3.index_of("p132").unwrap();
        assert_ne!(s3.mul(a, b), s3.mul(b, a));
    }

    #[test]
    fn text_format_round_trips() {
        let g = GroupSpec::symmetric(3);
        assert_eq!(GroupSpec::parse(&g.to_text()).unwrap(), g);
        let z2 = GroupSpec::parse("# z/2\nelements: e g\ne g\ng e\n").unwrap();
        assert_eq!(z2, GroupSpec::cyclic(2));
    }

    #[test]
    fn rejects_broken_tables() {
        let names = vec!["e".to_string(), "g".to_string()];
        assert!(GroupSpec::from_table(names.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GroupSpec::from_table(names.clone(), vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(GroupSpec::from_table(names, vec![vec![0, 1]]).is_err());
        // A Latin square with identity that is not associative (order 5 loop).
        let names: Vec<String> = ["e", "a", "b", "c", "d"].map(String::from).to_vec();
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupSpec::from_table(names, table),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn builtin_specs() {
        assert_eq!(GroupSpec::builtin("cyclic:3").unwrap().unwrap().order(), 3);
        assert_eq!(GroupSpec::builtin("sym:3").unwrap().unwrap().order(), 6);
        assert_eq!(GroupSpec::builtin("klein").unwrap().unwrap().order(), 4);
        assert!(GroupSpec::builtin("cyclic:0").unwrap().is_err());
        assert!(GroupSpec::builtin("file.grp").is_none());
    }
}
