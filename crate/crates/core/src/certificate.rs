//! Self-contained JSON certificates for computed counts.
//!
//! A certificate records a graph, a list assignment or DP-cover, the count
//! it achieves and the chromatic polynomial value for reference. The digest
//! is the SHA-256 of the certificate's JSON with an empty `digest` field.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chromatic::chromatic_polynomial;
use crate::dpcover::{Cover, CoverCounter, CoverJson};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};
use crate::listcolor::{count_list_colorings_fixed, AssignmentJson, ListAssignment};
use crate::oracle::{count_list_colorings_bruteforce, count_transversals_bruteforce};

pub const TOOL_VERSION: &str = concat!("thetacolor ", env!("CARGO_PKG_VERSION"));

/// Recounts at most this many candidate colorings by brute force; larger
/// instances fall back to the backtracking counters.
const BRUTE_FORCE_LIMIT: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    ListAssignment,
    DpCover,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub graph: GraphJson,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<AssignmentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverJson>,
    /// Pinned `(vertex, color or label)` pairs; the count respects them.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixed: Vec<[usize; 2]>,
    pub count: String,
    /// `P(G, m)`.
    pub reference: String,
    pub tool_version: String,
    #[serde(default)]
    pub seed: Option<u64>,
    pub digest: String,
}

fn reference_value(g: &Graph, m: usize) -> Result<BigUint> {
    chromatic_polynomial(g)
        .eval_u64(m as u64)
        .to_biguint()
        .ok_or_else(|| Error::Internal("negative chromatic polynomial value".into()))
}

impl Certificate {
    fn seal(mut self) -> Self {
        self.digest = self.compute_digest();
        self
    }

    pub fn compute_digest(&self) -> String {
        let mut blank = self.clone();
        blank.digest = String::new();
        let bytes = serde_json::to_vec(&blank).expect("certificate serializes");
        hex::encode(Sha256::digest(bytes))
    }

    /// Certificate for `P(G, L)`, counted here.
    pub fn for_assignment(
        g: &Graph,
        assignment: &ListAssignment,
        fixed: &[(usize, usize)],
        seed: Option<u64>,
    ) -> Result<Self> {
        let count = count_list_colorings_fixed(g, assignment, fixed)?;
        Ok(Certificate {
            kind: CertificateKind::ListAssignment,
            graph: g.to_json(),
            m: assignment.m(),
            assignment: Some(assignment.clone().into()),
            cover: None,
            fixed: fixed.iter().map(|&(v, c)| [v, c]).collect(),
            count: count.to_string(),
            reference: reference_value(g, assignment.m())?.to_string(),
            tool_version: TOOL_VERSION.into(),
            seed,
            digest: String::new(),
        }
        .seal())
    }

    /// Certificate for the number of independent transversals of `cover`.
    pub fn for_cover(g: &Graph, cover: &Cover, seed: Option<u64>) -> Result<Self> {
        let count = crate::dpcover::count_cover_colorings(g, cover)?;
        Ok(Certificate {
            kind: CertificateKind::DpCover,
            graph: g.to_json(),
            m: cover.m(),
            assignment: None,
            cover: Some(cover.to_json()),
            fixed: Vec::new(),
            count: count.to_string(),
            reference: reference_value(g, cover.m())?.to_string(),
            tool_version: TOOL_VERSION.into(),
            seed,
            digest: String::new(),
        }
        .seal())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(format!("certificate: {e}")))
    }
}

/// Outcome of re-checking a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateVerdict {
    pub valid: bool,
    pub recount: Option<String>,
    pub reference: Option<String>,
    pub problems: Vec<String>,
}

/// Re-checks a certificate from its own contents: the digest, the count (by
/// brute force when small, otherwise by backtracking) and the reference value.
pub fn verify_certificate(cert: &Certificate) -> CertificateVerdict {
    let mut problems = Vec::new();
    if cert.digest != cert.compute_digest() {
        problems.push("digest mismatch".to_string());
    }
    let (recount, reference) = match recount(cert) {
        Ok((count, reference)) => (Some(count), Some(reference)),
        Err(e) => {
            problems.push(e.to_string());
            (None, None)
        }
    };
    if let Some(c) = &recount {
        if *c != cert.count {
            problems.push(format!("count is {c}, certificate says {}", cert.count));
        }
    }
    if let Some(r) = &reference {
        if *r != cert.reference {
            problems.push(format!("reference is {r}, certificate says {}", cert.reference));
        }
    }
    CertificateVerdict {
        valid: problems.is_empty(),
        recount,
        reference,
        problems,
    }
}

fn recount(cert: &Certificate) -> Result<(String, String)> {
    let g = Graph::try_from(cert.graph.clone())?;
    let fixed: Vec<(usize, usize)> = cert.fixed.iter().map(|p| (p[0], p[1])).collect();
    if let Some(&(v, _)) = fixed.iter().find(|&&(v, _)| v >= g.vertex_count()) {
        return Err(Error::Malformed(format!("pinned vertex {v} out of range")));
    }
    let count = match cert.kind {
        CertificateKind::ListAssignment => {
            let json = cert
                .assignment
                .clone()
                .ok_or_else(|| Error::Malformed("list certificate without an assignment".into()))?;
            let assignment = ListAssignment::try_from(json)?;
            assignment.check_graph(&g)?;
            if assignment.m() != cert.m {
                return Err(Error::Malformed("assignment m differs from certificate m".into()));
            }
            match count_list_colorings_bruteforce(&g, assignment.lists(), &fixed, BRUTE_FORCE_LIMIT) {
                Ok(c) => c,
                Err(Error::BudgetExceeded { .. }) => count_list_colorings_fixed(&g, &assignment, &fixed)?,
                Err(e) => return Err(e),
            }
        }
        CertificateKind::DpCover => {
            let json = cert
                .cover
                .as_ref()
                .ok_or_else(|| Error::Malformed("cover certificate without a cover".into()))?;
            let cover = Cover::from_json(&g, json)?;
            if cover.m() != cert.m {
                return Err(Error::Malformed("cover m differs from certificate m".into()));
            }
            if let Some(&(v, x)) = fixed.iter().find(|&&(_, x)| x >= cover.m()) {
                return Err(Error::Malformed(format!("pinned label {x} of vertex {v} out of range")));
            }
            match count_transversals_bruteforce(&g, &cover, &fixed, BRUTE_FORCE_LIMIT) {
                Ok(c) => c,
                Err(Error::BudgetExceeded { .. }) => {
                    let table: Vec<Vec<Option<usize>>> = g
                        .edges()
                        .iter()
                        .map(|&(a, b)| cover.matching(a, b).expect("validated cover").to_vec())
                        .collect();
                    CoverCounter::new(&g, cover.m()).count(&table, &fixed)
                }
                Err(e) => return Err(e),
            }
        }
    };
    Ok((count.to_string(), reference_value(&g, cert.m)?.to_string()))
}
