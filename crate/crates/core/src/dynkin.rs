//! Simply-laced Dynkin types and recognition from a set of simple roots.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::HomologyClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinComponent {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinComponent {
    pub fn rank(self) -> usize {
        match self {
            DynkinComponent::A(n) | DynkinComponent::D(n) | DynkinComponent::E(n) => n,
        }
    }

    pub fn positive_root_count(self) -> u64 {
        match self {
            DynkinComponent::A(n) => (n * (n + 1) / 2) as u64,
            DynkinComponent::D(n) => (n * (n - 1)) as u64,
            DynkinComponent::E(6) => 36,
            DynkinComponent::E(7) => 63,
            DynkinComponent::E(8) => 120,
            DynkinComponent::E(n) => unreachable!("E{n} is normalized away"),
        }
    }

    pub fn weyl_order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            DynkinComponent::A(n) => fact(n + 1),
            DynkinComponent::D(n) => (1u128 << (n - 1)) * fact(n),
            DynkinComponent::E(6) => 51_840,
            DynkinComponent::E(7) => 2_903_040,
            DynkinComponent::E(8) => 696_729_600,
            DynkinComponent::E(n) => unreachable!("E{n} is normalized away"),
        }
    }

    /// Rewrite low-rank aliases (`D2 = A1×A1`, `D3 = A3`, `E5 = D5`, …).
    fn normalize(self, out: &mut Vec<DynkinComponent>) {
        use DynkinComponent::*;
        match self {
            A(0) | D(0) | E(0) => {}
            D(1) => out.push(A(1)),
            D(2) => out.extend([A(1), A(1)]),
            D(3) => out.push(A(3)),
            E(n @ 1..=2) => out.push(A(n)),
            E(3) => out.extend([A(1), A(2)]),
            E(4) => out.push(A(4)),
            E(5) => out.push(D(5)),
            other => out.push(other),
        }
    }
}

impl fmt::Display for DynkinComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinComponent::A(n) => write!(f, "A{n}"),
            DynkinComponent::D(n) => write!(f, "D{n}"),
            DynkinComponent::E(n) => write!(f, "E{n}"),
        }
    }
}

/// A multiset of simple components, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DynkinType {
    components: Vec<DynkinComponent>,
}

impl DynkinType {
    pub fn new(components: impl IntoIterator<Item = DynkinComponent>) -> Self {
        let mut out = Vec::new();
        for c in components {
            c.normalize(&mut out);
        }
        out.sort();
        Self { components: out }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn components(&self) -> &[DynkinComponent] {
        &self.components
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn positive_root_count(&self) -> u64 {
        self.components.iter().map(|c| c.positive_root_count()).sum()
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.weyl_order()).product()
    }

    /// The root system of `CP² # k(-CP²)`, `k ≤ 8`.
    pub fn ambient(k: usize) -> Result<Self> {
        use DynkinComponent::*;
        let comps: Vec<DynkinComponent> = match k {
            0 | 1 => vec![],
            2 => vec![A(1)],
            3 => vec![A(1), A(2)],
            4 => vec![A(4)],
            5 => vec![D(5)],
            6..=8 => vec![E(k)],
            _ => {
                return Err(Error::OutOfRange {
                    what: "k",
                    value: k as i64,
                    range: "0..=8",
                })
            }
        };
        Ok(Self::new(comps))
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join("×"))
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "trivial" {
            return Ok(Self::trivial());
        }
        let comps = t
            .split(['×', 'x', '*'])
            .map(|p| {
                let p = p.trim();
                let (fam, n) = p.split_at(1);
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad Dynkin component `{p}`")))?;
                match fam {
                    "A" => Ok(DynkinComponent::A(n)),
                    "D" => Ok(DynkinComponent::D(n)),
                    "E" => Ok(DynkinComponent::E(n)),
                    _ => Err(Error::Parse(format!("bad Dynkin component `{p}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(comps))
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Recognize the Dynkin type spanned by a simple system of `-2` classes.
///
/// Distinct simple roots must pair to 0 or 1 (an edge). Each connected
/// component must be a path (`A_n`) or a tree with one trivalent node whose
/// arms have lengths `(1, 1, m)` (`D_n`), `(1, 2, 2)`, `(1, 2, 3)` or
/// `(1, 2, 4)` (`E_6`, `E_7`, `E_8`).
pub fn dynkin_classify(simple_roots: &[HomologyClass]) -> Result<DynkinType> {
    let n = simple_roots.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        let sq = simple_roots[i].square();
        if sq != -2 {
            return Err(Error::NotSimpleSystem(format!(
                "{} has square {sq}",
                simple_roots[i]
            )));
        }
        for j in (i + 1)..n {
            match simple_roots[i].pairing(&simple_roots[j])? {
                0 => {}
                1 => {
                    adj[i].push(j);
                    adj[j].push(i);
                }
                p => {
                    return Err(Error::NotSimpleSystem(format!(
                        "{} · {} = {p}",
                        simple_roots[i], simple_roots[j]
                    )))
                }
            }
        }
    }

    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut nodes = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < nodes.len() {
            for &v in &adj[nodes[i]] {
                if !seen[v] {
                    seen[v] = true;
                    nodes.push(v);
                }
            }
            i += 1;
        }
        comps.push(classify_component(&nodes, &adj, simple_roots)?);
    }
    Ok(DynkinType::new(comps))
}

fn classify_component(
    nodes: &[usize],
    adj: &[Vec<usize>],
    roots: &[HomologyClass],
) -> Result<DynkinComponent> {
    let size = nodes.len();
    let edges: usize = nodes.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    let describe = || {
        let names: Vec<String> = nodes.iter().map(|&v| roots[v].to_string()).collect();
        format!("component {{{}}}", names.join(", "))
    };
    if edges != size - 1 {
        return Err(Error::UnrecognizedDiagram(format!("{} contains a cycle", describe())));
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => Ok(DynkinComponent::A(size)),
        [b] if adj[*b].len() == 3 => {
            let mut arms: Vec<usize> = adj[*b].iter().map(|&s| arm_length(*b, s, adj)).collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, m] => Ok(DynkinComponent::D(m + 3)),
                [1, 2, 2] => Ok(DynkinComponent::E(6)),
                [1, 2, 3] => Ok(DynkinComponent::E(7)),
                [1, 2, 4] => Ok(DynkinComponent::E(8)),
                _ => Err(Error::UnrecognizedDiagram(format!(
                    "{} has arms {arms:?}",
                    describe()
                ))),
            }
        }
        _ => Err(Error::UnrecognizedDiagram(format!(
            "{} has a vertex of degree > 3 or several branch points",
            describe()
        ))),
    }
}

/// Length of the path hanging off `from` through `start`.
fn arm_length(from: usize, start: usize, adj: &[Vec<usize>]) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&v| v != prev).collect();
        match next.as_slice() {
            [] => return len,
            [n] => {
                prev = cur;
                cur = *n;
                len += 1;
            }
            _ => return len, // another branch point; rejected by the caller's shape check
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BasisTag;
    use DynkinComponent::*;

    fn e(k: usize, i: usize) -> HomologyClass {
        HomologyClass::exceptional(BasisTag::H(k), i)
    }

    fn diff(k: usize, i: usize, j: usize) -> HomologyClass {
        &e(k, i) - &e(k, j)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(dynkin_classify(&[diff(2, 1, 2)]).unwrap(), DynkinType::new([A(1)]));
        assert_eq!(
            dynkin_classify(&[diff(3, 1, 2), diff(3, 2, 3)]).unwrap(),
            DynkinType::new([A(2)])
        );
        let d4 = [
            diff(5, 2, 3),
            diff(5, 3, 4),
            diff(5, 4, 5),
            HomologyClass::h_class(1, &[1, 1, 1, 0, 0]),
        ];
        assert_eq!(dynkin_classify(&d4).unwrap(), DynkinType::new([D(4)]));
        assert!(dynkin_classify(&[]).unwrap().is_trivial());
    }

    #[test]
    fn exceptional_shapes() {
        for k in 6..=8 {
            let mut simple = vec![HomologyClass::h_class(1, &{
                let mut a = vec![0; k];
                a[..3].fill(1);
                a
            })];
            simple.extend((1..k).map(|i| diff(k, i, i + 1)));
            assert_eq!(dynkin_classify(&simple).unwrap(), DynkinType::new([E(k)]));
        }
    }

    #[test]
    fn rejects_non_simple_systems() {
        // E1 - E2 and E1 - E3 pair to 1 but E1 - E2 and E2 - E1 pair to 2
        assert!(matches!(
            dynkin_classify(&[diff(3, 1, 2), diff(3, 2, 1)]),
            Err(Error::NotSimpleSystem(_))
        ));
        assert!(matches!(dynkin_classify(&[e(2, 1)]), Err(Error::NotSimpleSystem(_))));
        // a triangle of roots: E1-E2, E2-E3, and H-E1-E2-E3 is orthogonal... use a cycle in A-type roots
        let cyc = [diff(4, 1, 2), diff(4, 2, 3), diff(4, 3, 4), -&diff(4, 1, 4)];
        // (E1-E2)·(E4-E1) = 1, (E3-E4)·(E4-E1) = 1 closes a 4-cycle
        assert!(matches!(dynkin_classify(&cyc), Err(Error::UnrecognizedDiagram(_))));
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(DynkinType::new([D(2)]), DynkinType::new([A(1), A(1)]));
        assert_eq!(DynkinType::new([D(3)]), DynkinType::new([A(3)]));
        assert_eq!(DynkinType::new([A(2), A(1), A(1)]).to_string(), "A1×A1×A2");
        assert_eq!("A2xA1".parse::<DynkinType>().unwrap(), DynkinType::new([A(1), A(2)]));
        assert_eq!("trivial".parse::<DynkinType>().unwrap(), DynkinType::trivial());
    }

    #[test]
    fn orders_and_counts() {
        let a4 = DynkinType::new([A(4)]);
        assert_eq!((a4.weyl_order(), a4.positive_root_count()), (120, 10));
        let d5 = DynkinType::new([D(5)]);
        assert_eq!((d5.weyl_order(), d5.positive_root_count()), (1920, 20));
        let a1a2 = DynkinType::new([A(1), A(2)]);
        assert_eq!((a1a2.weyl_order(), a1a2.positive_root_count()), (12, 4));
        let counts: Vec<u64> = (1..=8)
            .map(|k| DynkinType::ambient(k).unwrap().positive_root_count())
            .collect();
        assert_eq!(counts, vec![0, 1, 4, 10, 20, 36, 63, 120]);
    }
}
