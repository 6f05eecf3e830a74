//! Blocking certificates: a laminar family split into `f_in` (in-tight sets
//! avoiding the root) and `f_out` (complements of in-tight sets containing
//! the root, hence out-tight).
//!
//! Text format:
//!
//! ```text
//! s=<root> lambda=<λ> k=<k>
//! IN v1 v2 ...
//! OUT v1 v2 ...
//! ```

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::connectivity::arc_connectivity;
use crate::digraph::{ArcSet, Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::io::content_lines;
use crate::tight_sets::{build_blocking_family, uncross, TightFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub root: Vertex,
    pub f_in: Vec<VertexSet>,
    pub f_out: Vec<VertexSet>,
    pub lambda: usize,
    pub k: usize,
}

impl Certificate {
    pub fn sets(&self) -> impl Iterator<Item = &VertexSet> {
        self.f_in.iter().chain(&self.f_out)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("s={} lambda={} k={}\n", self.root, self.lambda, self.k);
        for (tag, sets) in [("IN", &self.f_in), ("OUT", &self.f_out)] {
            for set in sets {
                out.push_str(tag);
                for v in set.iter() {
                    let _ = write!(out, " {v}");
                }
                out.push('\n');
            }
        }
        out
    }

    /// Parses the text format for a digraph on `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Certificate> {
        let err = |line, message: String| Error::Parse { line, message };
        let mut lines = content_lines(text);
        let (header_no, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing certificate header".into()))?;
        let mut root = None;
        let mut lambda = None;
        let mut k = None;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| err(header_no, format!("expected key=value, found {field:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| err(header_no, format!("bad value in {field:?}")))?;
            let slot = match key {
                "s" => &mut root,
                "lambda" => &mut lambda,
                "k" => &mut k,
                _ => return Err(err(header_no, format!("unknown key {key:?}"))),
            };
            *slot = Some(value);
        }
        let (Some(root), Some(lambda), Some(k)) = (root, lambda, k) else {
            return Err(err(header_no, "header needs s, lambda and k".into()));
        };
        if root >= n {
            return Err(err(header_no, format!("root {root} out of range")));
        }
        let mut cert = Certificate {
            root,
            f_in: Vec::new(),
            f_out: Vec::new(),
            lambda,
            k,
        };
        for (line_no, line) in lines {
            let mut fields = line.split_whitespace();
            let target = match fields.next() {
                Some("IN") => &mut cert.f_in,
                Some("OUT") => &mut cert.f_out,
                other => return Err(err(line_no, format!("expected IN or OUT, found {other:?}"))),
            };
            let mut set = VertexSet::empty(n);
            for field in fields {
                let v: usize = field
                    .parse()
                    .map_err(|_| err(line_no, format!("bad vertex {field:?}")))?;
                if v >= n {
                    return Err(err(line_no, format!("vertex {v} out of range")));
                }
                set.insert(v);
            }
            target.push(set);
        }
        Ok(cert)
    }
}

/// Members avoiding `root` go to `f_in`; the others are complemented into
/// `f_out`.
pub fn split_certificate(family: &TightFamily, root: Vertex, k: usize) -> Certificate {
    let mut f_in = Vec::new();
    let mut f_out = Vec::new();
    for z in &family.members {
        if z.contains(root) {
            f_out.push(z.complement());
        } else {
            f_in.push(z.clone());
        }
    }
    f_in.sort();
    f_out.sort();
    Certificate {
        root,
        f_in,
        f_out,
        lambda: family.lambda,
        k,
    }
}

/// Builds, uncrosses, prunes and splits the blocking family of `f`.
///
/// Fails with [`Error::ArcNotBlocked`] if some arc of `f` is reversible.
pub fn blocking_certificate(
    digraph: &Digraph,
    f: &ArcSet,
    k: usize,
    root: Vertex,
) -> Result<Certificate> {
    if root >= digraph.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: digraph.vertex_count(),
        });
    }
    let family = build_blocking_family(digraph, f)?;
    let mut family = uncross(&family, digraph)?;
    family.retain_entered_by(digraph, f);
    Ok(split_certificate(&family, root, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Property {
    /// `f_in ∪ f_out` is nonempty and laminar.
    Laminar,
    /// Every arc of `F` enters an `f_in` set or leaves an `f_out` set.
    Coverage,
    /// `d⁻(X) = λ(D)` for `X ∈ f_in`.
    InTight,
    /// `1 <= k - λ <= d⁺_F(X) - d⁻_F(X) <= d⁺_F(X) - 1` for `X ∈ f_in`.
    InSurplus,
    /// `d⁺(Y) = λ(D)` for `Y ∈ f_out`.
    OutTight,
    /// `1 <= k - λ <= d⁻_F(Y) - d⁺_F(Y) <= d⁻_F(Y) - 1` for `Y ∈ f_out`.
    OutSurplus,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Laminar,
        Property::Coverage,
        Property::InTight,
        Property::InSurplus,
        Property::OutTight,
        Property::OutSurplus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Laminar => "laminar",
            Property::Coverage => "coverage",
            Property::InTight => "in-tight",
            Property::InSurplus => "in-surplus",
            Property::OutTight => "out-tight",
            Property::OutSurplus => "out-surplus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: Property,
    /// `None` when the property holds.
    pub violation: Option<String>,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<PropertyCheck>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }

    pub fn check(&self, property: Property) -> &PropertyCheck {
        self.checks
            .iter()
            .find(|c| c.property == property)
            .expect("every property is checked")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.violation {
                None => writeln!(f, "{:<12} pass", check.property.name())?,
                Some(why) => writeln!(f, "{:<12} FAIL {why}", check.property.name())?,
            }
        }
        write!(f, "{}", if self.is_valid() { "valid" } else { "invalid" })
    }
}

fn first_violation<'a>(
    sets: &'a [VertexSet],
    mut bad: impl FnMut(&VertexSet) -> Option<String> + 'a,
) -> Option<String> {
    sets.iter()
        .find_map(|s| bad(s).map(|why| format!("{:?}: {why}", s)))
}

/// Checks the six certificate properties. Never fails; violations are
/// reported per property.
pub fn verify_certificate(digraph: &Digraph, f: &ArcSet, cert: &Certificate) -> VerificationReport {
    let n = digraph.vertex_count();
    let true_lambda = arc_connectivity(digraph).ok().map(|l| l.value);
    let arcs_of_f: Vec<_> = f.iter().filter_map(|id| digraph.arc(id).ok()).collect();
    let gap = cert.k as i64 - cert.lambda as i64;

    let lambda_mismatch = || match true_lambda {
        Some(l) if l == cert.lambda => None,
        Some(l) => Some(format!(
            "certificate lambda {} but lambda(D) = {l}",
            cert.lambda
        )),
        None => Some("lambda(D) undefined".to_string()),
    };
    let universe_ok = |s: &VertexSet| {
        if s.universe() != n {
            Some(format!(
                "set over {} vertices, digraph has {n}",
                s.universe()
            ))
        } else if !s.is_proper() {
            Some("not a nonempty proper subset".to_string())
        } else {
            None
        }
    };

    let laminar = {
        let sets: Vec<&VertexSet> = cert.sets().collect();
        if sets.is_empty() {
            Some("family is empty".to_string())
        } else if let Some(s) = sets.iter().find(|s| s.universe() != n) {
            Some(format!("{s:?} is over the wrong vertex count"))
        } else {
            sets.iter()
                .enumerate()
                .flat_map(|(i, x)| sets[i + 1..].iter().map(move |y| (x, y)))
                .find(|(x, y)| !x.is_laminar_with(y))
                .map(|(x, y)| format!("{x:?} and {y:?} cross"))
        }
    };

    let coverage = f
        .iter()
        .find(|&id| match digraph.arc(id) {
            Ok(arc) => {
                !cert.f_in.iter().any(|x| x.universe() == n && arc.enters(x))
                    && !cert
                        .f_out
                        .iter()
                        .any(|y| y.universe() == n && arc.leaves(y))
            }
            Err(_) => true,
        })
        .map(|id| format!("arc {id} enters no IN set and leaves no OUT set"));

    let in_tight = lambda_mismatch().or_else(|| {
        first_violation(&cert.f_in, |x| {
            universe_ok(x).or_else(|| {
                let d = digraph.in_degree(x);
                (d != cert.lambda).then(|| format!("in-degree {d} != {}", cert.lambda))
            })
        })
    });
    let out_tight = lambda_mismatch().or_else(|| {
        first_violation(&cert.f_out, |y| {
            universe_ok(y).or_else(|| {
                let d = digraph.out_degree(y);
                (d != cert.lambda).then(|| format!("out-degree {d} != {}", cert.lambda))
            })
        })
    });

    // surplus(entering, leaving) checks 1 <= k-λ <= leaving-entering <= leaving-1.
    let surplus = |toward: i64, away: i64| -> Option<String> {
        if gap < 1 {
            Some(format!("k - lambda = {gap} < 1"))
        } else if away - toward < gap {
            Some(format!(
                "net F surplus {} < k - lambda = {gap}",
                away - toward
            ))
        } else if toward < 1 {
            Some("no F arc on the tight side".to_string())
        } else {
            None
        }
    };
    let count = |set: &VertexSet, entering: bool| {
        arcs_of_f
            .iter()
            .filter(|a| {
                if entering {
                    a.enters(set)
                } else {
                    a.leaves(set)
                }
            })
            .count() as i64
    };
    let in_surplus = first_violation(&cert.f_in, |x| {
        universe_ok(x).or_else(|| surplus(count(x, true), count(x, false)))
    });
    let out_surplus = first_violation(&cert.f_out, |y| {
        universe_ok(y).or_else(|| surplus(count(y, false), count(y, true)))
    });

    let checks = [
        laminar,
        coverage,
        in_tight,
        in_surplus,
        out_tight,
        out_surplus,
    ]
    .into_iter()
    .zip(Property::ALL)
    .map(|(violation, property)| PropertyCheck {
        property,
        violation,
    })
    .collect();
    VerificationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::ArcId;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn split_routes_by_root() {
        let family = TightFamily::new(1, vec![set(5, &[3])]);
        let cert = split_certificate(&family, 0, 2);
        assert_eq!(cert.f_in, vec![set(5, &[3])]);
        assert!(cert.f_out.is_empty());

        let cert = split_certificate(&family, 3, 2);
        assert!(cert.f_in.is_empty());
        assert_eq!(cert.f_out, vec![set(5, &[0, 1, 2, 4])]);
    }

    #[test]
    fn text_round_trip() {
        let cert = Certificate {
            root: 2,
            f_in: vec![set(4, &[0, 1]), set(4, &[1])],
            f_out: vec![set(4, &[3])],
            lambda: 1,
            k: 3,
        };
        let text = cert.to_text();
        assert_eq!(text, "s=2 lambda=1 k=3\nIN 0 1\nIN 1\nOUT 3\n");
        assert_eq!(Certificate::parse(&text, 4).unwrap(), cert);
    }

    #[test]
    fn parse_errors() {
        assert!(Certificate::parse("", 3).is_err());
        assert!(Certificate::parse("s=0 lambda=1\n", 3).is_err());
        assert!(Certificate::parse("s=0 lambda=1 k=2\nIN 5\n", 3).is_err());
        assert!(Certificate::parse("s=0 lambda=1 k=2\nBOTH 1\n", 3).is_err());
        assert!(Certificate::parse("s=9 lambda=1 k=2\n", 3).is_err());
    }

    #[test]
    fn cycle_arc_certificate_checks() {
        // Reversing F = {1->2} in the 4-cycle is blocked; with k = 2 the
        // surplus bound needs d⁺_F - d⁻_F >= 1 on {2}, which holds.
        let d = cycle(4);
        let f: ArcSet = [ArcId(1)].into_iter().collect();
        let cert = blocking_certificate(&d, &f, 2, 0).unwrap();
        assert_eq!(cert.f_in, vec![set(4, &[2])]);
        let report = verify_certificate(&d, &f, &cert);
        // F has no arc leaving {2}, so the in-surplus bound fails.
        assert!(report.check(Property::Laminar).passed());
        assert!(report.check(Property::Coverage).passed());
        assert!(report.check(Property::InTight).passed());
        assert!(!report.check(Property::InSurplus).passed());
        assert!(!report.is_valid());
    }

    #[test]
    fn empty_certificate_fails_laminar_and_coverage() {
        let d = cycle(3);
        let f: ArcSet = [ArcId(0)].into_iter().collect();
        let cert = Certificate {
            root: 0,
            f_in: vec![],
            f_out: vec![],
            lambda: 1,
            k: 2,
        };
        let report = verify_certificate(&d, &f, &cert);
        assert!(!report.check(Property::Laminar).passed());
        assert!(!report.check(Property::Coverage).passed());
        assert!(report.check(Property::InTight).passed());
    }

    #[test]
    fn wrong_lambda_fails_tightness() {
        let d = cycle(3);
        let f: ArcSet = [ArcId(0)].into_iter().collect();
        let cert = Certificate {
            root: 0,
            f_in: vec![set(3, &[1])],
            f_out: vec![],
            lambda: 2,
            k: 3,
        };
        let report = verify_certificate(&d, &f, &cert);
        let why = report.check(Property::InTight).violation.clone().unwrap();
        assert!(why.contains("lambda(D) = 1"), "{why}");
    }
}
