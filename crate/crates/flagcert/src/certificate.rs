//! Certificate payloads and the identity verifier.
//!
//! A certificate carries the six positive definite matrices Q₁..Q₆, the
//! six rectangular matrices I₁..I₆, the scalars c₀, c₁, c₂ and the
//! codegree weights u_D, together with fingerprint sections that pin down
//! what every matrix index means: the ordered flag encodings of 𝓕₆^τ and
//! 𝓕₆^{ιᵢ}, and the ordered graph encodings of 𝓕₇. Verification first
//! matches the fingerprints against the locally generated enumerations by
//! canonical form, remaps the matrices, and then checks
//!
//!   N − 3E − Σ u_D·D − Σ cᵢ·𝒫ᵢ − Σ ⟦eᵀIᵀQIe⟧ = slack ≥ 0,
//!
//! with equality exactly on the tournament-realizable graphs.

use std::collections::HashMap;
use std::fmt::Write as _;

use num::{BigInt, BigRational, Signed, Zero};
use thiserror::Error;

use crate::density::GraphBasis;
use crate::expressions::{
    codegree_expressions, iota_quadratic_expression, target_vector, tight_path_expressions,
    CodegreeExpression, ExprError, FlagContext, IOTA_DIMENSIONS, IOTA_FLAG_COUNTS,
};
use crate::flags::{Flag, FlagError, TypeGraph};
use crate::hypergraph::ThreeGraph;
use crate::linalg::{is_positive_definite, LinalgError, RationalMatrix};
use crate::tournaments::realize_as_tournament;
use crate::Rat;

#[derive(Debug, Error)]
pub enum CertError {
    #[error("certificate parse error at line {0}: {1}")]
    Parse(usize, String),
    #[error("missing section [{0}]")]
    MissingSection(String),
    #[error("section [{0}] has wrong dimensions: expected {1}x{2}, got {3}x{4}")]
    Dimension(String, usize, usize, usize, usize),
    #[error("fingerprint mismatch in [{0}]: {1}")]
    Fingerprint(String, String),
    #[error("unknown codegree identifier {0:?}")]
    UnknownU(String),
    #[error("duplicate codegree weight for {0:?} (label-swap twins name one expression)")]
    DuplicateU(String),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The full payload of the certificate identity.
#[derive(Debug, Clone)]
pub struct Certificate {
    /// Q₁..Q₆, square of side kᵢ − dᵢ.
    pub q: Vec<RationalMatrix>,
    /// I₁..I₆ of sizes (kᵢ − dᵢ) × kᵢ.
    pub i_mats: Vec<RationalMatrix>,
    /// c₀, c₁, c₂.
    pub c: [Rat; 3],
    /// Codegree weights keyed by identifier `D<flag index>`.
    pub u: Vec<(String, Rat)>,
    /// Ordered flag encodings, keyed `tau6`, `iota1`..`iota6`.
    pub flag_fingerprints: HashMap<String, Vec<String>>,
    /// Ordered graph encodings of 𝓕₇.
    pub graph_fingerprints: Vec<String>,
}

impl Certificate {
    /// Checks the fixed dimension table: side(Qᵢ) = rows(Iᵢ) = kᵢ − dᵢ,
    /// cols(Iᵢ) = kᵢ.
    pub fn check_dimensions(&self) -> Result<(), CertError> {
        for i in 0..6 {
            let k = IOTA_FLAG_COUNTS[i];
            let d = IOTA_DIMENSIONS[i];
            let q = &self.q[i];
            if q.rows() != k - d || q.cols() != k - d {
                return Err(CertError::Dimension(
                    format!("Q{}", i + 1),
                    k - d,
                    k - d,
                    q.rows(),
                    q.cols(),
                ));
            }
            let m = &self.i_mats[i];
            if m.rows() != k - d || m.cols() != k {
                return Err(CertError::Dimension(
                    format!("I{}", i + 1),
                    k - d,
                    k,
                    m.rows(),
                    m.cols(),
                ));
            }
        }
        Ok(())
    }

    /// An all-zero certificate with the fingerprints of the local
    /// enumerations; dimensionally valid, numerically failing.
    pub fn zero(ctx: &FlagContext) -> Certificate {
        let q = (0..6)
            .map(|i| {
                let side = IOTA_FLAG_COUNTS[i] - IOTA_DIMENSIONS[i];
                RationalMatrix::zero(side, side)
            })
            .collect();
        let i_mats = (0..6)
            .map(|i| {
                RationalMatrix::zero(IOTA_FLAG_COUNTS[i] - IOTA_DIMENSIONS[i], IOTA_FLAG_COUNTS[i])
            })
            .collect();
        let u = codegree_expressions(ctx)
            .iter()
            .map(|e| (e.id.clone(), Rat::zero()))
            .collect();
        Certificate {
            q,
            i_mats,
            c: [Rat::zero(), Rat::zero(), Rat::zero()],
            u,
            flag_fingerprints: local_flag_fingerprints(ctx),
            graph_fingerprints: ctx.f7.graphs.iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// Flag fingerprint lines of the locally generated enumerations.
pub fn local_flag_fingerprints(ctx: &FlagContext) -> HashMap<String, Vec<String>> {
    let mut out = HashMap::new();
    out.insert(
        "tau6".to_string(),
        ctx.tau6.flags.iter().map(|f| f.to_string()).collect(),
    );
    for (i, list) in ctx.iota6.iter().enumerate() {
        out.insert(
            format!("iota{}", i + 1),
            list.flags.iter().map(|f| f.to_string()).collect(),
        );
    }
    out
}

/// The expression side of the identity, built once per context.
pub struct IdentityParts {
    pub target: Vec<Rat>,
    pub codegree: Vec<CodegreeExpression>,
    pub tight: [Vec<Rat>; 3],
    /// expression slot per 𝓕₆^τ flag index (swap twins share a slot)
    pub slot_by_flag: Vec<usize>,
}

impl IdentityParts {
    pub fn build(ctx: &FlagContext) -> Result<IdentityParts, CertError> {
        let target = target_vector(&ctx.f7);
        let codegree = codegree_expressions(ctx);
        let tight = tight_path_expressions(ctx)?;
        let mut slot_by_flag = vec![usize::MAX; ctx.tau6.len()];
        for (slot, e) in codegree.iter().enumerate() {
            slot_by_flag[e.rep] = slot;
            slot_by_flag[e.partner] = slot;
        }
        Ok(IdentityParts { target, codegree, tight, slot_by_flag })
    }
}

/// Index bijections from a certificate's fingerprint order to the local
/// enumeration order.
struct Bijections {
    /// per type key: cert flag index -> local flag index
    flags: HashMap<String, Vec<usize>>,
}

fn match_fingerprints(cert: &Certificate, ctx: &FlagContext) -> Result<Bijections, CertError> {
    let mut flags = HashMap::new();
    let mut lists: Vec<(String, &crate::flags::FlagList, TypeGraph)> =
        vec![("tau6".to_string(), &ctx.tau6, TypeGraph::tau())];
    for i in 1..=6u8 {
        lists.push((format!("iota{i}"), &ctx.iota6[i as usize - 1], TypeGraph::iota(i)));
    }
    for (key, list, sigma) in lists {
        let key = key.as_str();
        let lines = cert
            .flag_fingerprints
            .get(key)
            .ok_or_else(|| CertError::MissingSection(format!("flags:{key}")))?;
        if lines.len() != list.len() {
            return Err(CertError::Fingerprint(
                key.to_string(),
                format!("expected {} flags, got {}", list.len(), lines.len()),
            ));
        }
        let mut map = Vec::with_capacity(lines.len());
        let mut seen = vec![false; list.len()];
        for line in lines {
            let flag = parse_flag_line(line, &sigma)
                .map_err(|e| CertError::Fingerprint(key.to_string(), format!("{line:?}: {e}")))?;
            let idx = list.index_of(&flag).ok_or_else(|| {
                CertError::Fingerprint(key.to_string(), format!("{line:?} is not a known flag"))
            })?;
            if seen[idx] {
                return Err(CertError::Fingerprint(
                    key.to_string(),
                    format!("{line:?} repeats a flag class"),
                ));
            }
            seen[idx] = true;
            map.push(idx);
        }
        flags.insert(key.to_string(), map);
    }
    // graph fingerprints must biject onto the local F7
    if cert.graph_fingerprints.len() != ctx.f7.len() {
        return Err(CertError::Fingerprint(
            "graphs:F7".to_string(),
            format!(
                "expected {} graphs, got {}",
                ctx.f7.len(),
                cert.graph_fingerprints.len()
            ),
        ));
    }
    let mut seen = vec![false; ctx.f7.len()];
    for line in &cert.graph_fingerprints {
        let g: ThreeGraph = line.parse().map_err(|e| {
            CertError::Fingerprint("graphs:F7".to_string(), format!("{line:?}: {e}"))
        })?;
        let idx = ctx.f7.index_of(&g).ok_or_else(|| {
            CertError::Fingerprint("graphs:F7".to_string(), format!("{line:?} not in F7"))
        })?;
        if seen[idx] {
            return Err(CertError::Fingerprint(
                "graphs:F7".to_string(),
                format!("{line:?} repeats a class"),
            ));
        }
        seen[idx] = true;
    }
    Ok(Bijections { flags })
}

/// Computes the slack vector S = target − Σ u·D − Σ c·𝒫 − Σ ⟦IᵀQI⟧.
pub fn assemble_rhs(
    cert: &Certificate,
    ctx: &FlagContext,
    parts: &IdentityParts,
) -> Result<Vec<Rat>, CertError> {
    cert.check_dimensions()?;
    let bij = match_fingerprints(cert, ctx)?;
    assemble_with(cert, ctx, parts, &bij).map(|(slack, _)| slack)
}

fn assemble_with(
    cert: &Certificate,
    ctx: &FlagContext,
    parts: &IdentityParts,
    bij: &Bijections,
) -> Result<(Vec<Rat>, Vec<bool>), CertError> {
    let mut slack = parts.target.clone();

    // codegree: identifiers name the cert's tau6 order; remap to slots
    let tau_map = &bij.flags["tau6"];
    let mut used = vec![false; parts.codegree.len()];
    for (id, value) in &cert.u {
        let cert_idx: usize = id
            .strip_prefix('D')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| CertError::UnknownU(id.clone()))?;
        if cert_idx >= tau_map.len() {
            return Err(CertError::UnknownU(id.clone()));
        }
        let slot = parts.slot_by_flag[tau_map[cert_idx]];
        if used[slot] {
            return Err(CertError::DuplicateU(id.clone()));
        }
        used[slot] = true;
        if !value.is_zero() {
            parts.codegree[slot].subtract_scaled(value, &mut slack);
        }
    }

    // tight paths
    for (i, p) in parts.tight.iter().enumerate() {
        if !cert.c[i].is_zero() {
            for (g, coeff) in p.iter().enumerate() {
                if !coeff.is_zero() {
                    slack[g] -= &cert.c[i] * coeff;
                }
            }
        }
    }

    // quadratic parts: M = IᵀQI with I's columns remapped to local order
    for i in 0..6 {
        let key = format!("iota{}", i + 1);
        let map = &bij.flags[&key];
        let raw = &cert.i_mats[i];
        let mut local_i = RationalMatrix::zero(raw.rows(), raw.cols());
        for r in 0..raw.rows() {
            for c in 0..raw.cols() {
                *local_i.get_mut(r, map[c]) = raw.get(r, c).clone();
            }
        }
        let m = local_i.transpose().mul(&cert.q[i])?.mul(&local_i)?;
        let expr = iota_quadratic_expression(ctx, i as u8 + 1, &m)?;
        for (g, coeff) in expr.iter().enumerate() {
            if !coeff.is_zero() {
                slack[g] -= coeff;
            }
        }
    }
    Ok((slack, used))
}

/// The verdict record of a full verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub psd_ok: bool,
    pub positivity_ok: bool,
    pub slack_ok: bool,
    pub support_ok: bool,
    pub pass: bool,
    pub positive_slacks: usize,
    pub zero_slacks: usize,
    pub negative_slacks: usize,
    /// A witness coordinate with negative slack, if any.
    pub first_negative: Option<usize>,
}

/// Graphs of 𝓕₇ expressible as C(T); the slack must vanish exactly there.
pub fn tournament_realizable(f7: &GraphBasis) -> Vec<bool> {
    use rayon::prelude::*;
    f7.graphs
        .par_iter()
        .map(|g| realize_as_tournament(g).is_some())
        .collect()
}

/// Runs every check of the verification protocol and returns the verdict
/// with the slack vector.
pub fn verify_certificate(
    cert: &Certificate,
    ctx: &FlagContext,
    parts: &IdentityParts,
) -> Result<(Verdict, Vec<Rat>), CertError> {
    cert.check_dimensions()?;
    let psd_ok = cert.q.iter().all(|q| is_positive_definite(q).unwrap_or(false));

    let bij = match_fingerprints(cert, ctx)?;
    let (slack, u_slots_used) = assemble_with(cert, ctx, parts, &bij)?;

    let positivity_ok = cert.c.iter().all(|c| c.is_positive())
        && cert.u.iter().all(|(_, v)| v.is_positive())
        && u_slots_used.iter().all(|&s| s);

    let realizable = tournament_realizable(&ctx.f7);

    let mut positive = 0;
    let mut zero = 0;
    let mut negative = 0;
    let mut first_negative = None;
    let mut support_ok = true;
    for (g, s) in slack.iter().enumerate() {
        if s.is_zero() {
            zero += 1;
            if !realizable[g] {
                support_ok = false;
            }
        } else if s.is_positive() {
            positive += 1;
            if realizable[g] {
                support_ok = false;
            }
        } else {
            negative += 1;
            support_ok = false;
            if first_negative.is_none() {
                first_negative = Some(g);
            }
        }
    }
    let slack_ok = negative == 0;
    let pass = psd_ok && positivity_ok && slack_ok && support_ok;
    Ok((
        Verdict {
            psd_ok,
            positivity_ok,
            slack_ok,
            support_ok,
            pass,
            positive_slacks: positive,
            zero_slacks: zero,
            negative_slacks: negative,
            first_negative,
        },
        slack,
    ))
}

// ---------------------------------------------------------------------
// text format

fn format_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }
}

fn parse_flag_line(line: &str, sigma: &TypeGraph) -> Result<Flag, FlagError> {
    let (graph_part, root_part) = line
        .split_once("|root=")
        .ok_or_else(|| FlagError::UnknownType(format!("missing |root= in {line:?}")))?;
    let graph: ThreeGraph = graph_part.parse()?;
    let root: Vec<u8> = root_part
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as u8))
        .collect::<Option<_>>()
        .ok_or_else(|| FlagError::UnknownType(format!("bad root digits in {line:?}")))?;
    Flag::new(sigma.clone(), graph, root)
}

/// Writes the certificate in the `#flagcert certificate v1` text format:
/// matrix sections with a dims line then row-major rationals, the scalar
/// and weight sections, and the fingerprint sections.
pub fn serialize_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    out.push_str("#flagcert certificate v1\n");
    for (prefix, mats) in [("Q", &cert.q), ("I", &cert.i_mats)] {
        for (i, m) in mats.iter().enumerate() {
            let _ = writeln!(out, "[{prefix}{}]", i + 1);
            let _ = writeln!(out, "dims {} {}", m.rows(), m.cols());
            for r in 0..m.rows() {
                let row: Vec<String> = (0..m.cols()).map(|c| format_rat(m.get(r, c))).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
    }
    out.push_str("[c]\n");
    let _ = writeln!(
        out,
        "{} {} {}",
        format_rat(&cert.c[0]),
        format_rat(&cert.c[1]),
        format_rat(&cert.c[2])
    );
    out.push_str("[u]\n");
    for (id, v) in &cert.u {
        let _ = writeln!(out, "{id} {}", format_rat(v));
    }
    let mut keys: Vec<&String> = cert.flag_fingerprints.keys().collect();
    keys.sort();
    for key in keys {
        let _ = writeln!(out, "[flags:{key}]");
        for line in &cert.flag_fingerprints[key] {
            let _ = writeln!(out, "{line}");
        }
    }
    out.push_str("[graphs:F7]\n");
    for line in &cert.graph_fingerprints {
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Parses the certificate text format; rationals are normalized on load.
pub fn parse_certificate(text: &str) -> Result<Certificate, CertError> {
    let mut sections: HashMap<String, Vec<(usize, String)>> = HashMap::new();
    let mut current: Option<String> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            current = Some(name.to_string());
            sections.entry(name.to_string()).or_default();
            continue;
        }
        let section = current
            .clone()
            .ok_or_else(|| CertError::Parse(lineno + 1, "content before any section".into()))?;
        sections
            .get_mut(&section)
            .unwrap()
            .push((lineno + 1, line.to_string()));
    }

    let parse_matrix = |name: &str| -> Result<RationalMatrix, CertError> {
        let lines = sections
            .get(name)
            .ok_or_else(|| CertError::MissingSection(name.to_string()))?;
        let (dims_line_no, dims_line) = lines
            .first()
            .ok_or_else(|| CertError::MissingSection(name.to_string()))?;
        let dims: Vec<usize> = dims_line
            .strip_prefix("dims ")
            .map(|s| s.split_whitespace().filter_map(|t| t.parse().ok()).collect())
            .unwrap_or_default();
        if dims.len() != 2 {
            return Err(CertError::Parse(
                *dims_line_no,
                format!("expected 'dims <rows> <cols>' in [{name}]"),
            ));
        }
        let (rows, cols) = (dims[0], dims[1]);
        if lines.len() != rows + 1 {
            return Err(CertError::Parse(
                *dims_line_no,
                format!("[{name}] expects {rows} rows, got {}", lines.len() - 1),
            ));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for (no, line) in &lines[1..] {
            let row: Vec<Rat> = line
                .split_whitespace()
                .map(|t| parse_rat(t).ok_or_else(|| CertError::Parse(*no, format!("bad rational {t:?}"))))
                .collect::<Result<_, _>>()?;
            if row.len() != cols {
                return Err(CertError::Parse(
                    *no,
                    format!("[{name}] row has {} entries, expected {cols}", row.len()),
                ));
            }
            entries.extend(row);
        }
        RationalMatrix::new(rows, cols, entries).map_err(CertError::Linalg)
    };

    let mut q = Vec::with_capacity(6);
    let mut i_mats = Vec::with_capacity(6);
    for i in 1..=6 {
        q.push(parse_matrix(&format!("Q{i}"))?);
        i_mats.push(parse_matrix(&format!("I{i}"))?);
    }

    let c_lines = sections
        .get("c")
        .ok_or_else(|| CertError::MissingSection("c".into()))?;
    let (c_no, c_line) = c_lines
        .first()
        .ok_or_else(|| CertError::MissingSection("c".into()))?;
    let c_vals: Vec<Rat> = c_line
        .split_whitespace()
        .map(|t| parse_rat(t).ok_or_else(|| CertError::Parse(*c_no, format!("bad rational {t:?}"))))
        .collect::<Result<_, _>>()?;
    if c_vals.len() != 3 {
        return Err(CertError::Parse(*c_no, "expected three rationals in [c]".into()));
    }
    let c: [Rat; 3] = c_vals.try_into().unwrap();

    let u_lines = sections
        .get("u")
        .ok_or_else(|| CertError::MissingSection("u".into()))?;
    let mut u = Vec::with_capacity(u_lines.len());
    for (no, line) in u_lines {
        let (id, val) = line
            .split_once(' ')
            .ok_or_else(|| CertError::Parse(*no, format!("expected '<id> <rational>' in [u]: {line:?}")))?;
        let v = parse_rat(val.trim())
            .ok_or_else(|| CertError::Parse(*no, format!("bad rational {val:?}")))?;
        u.push((id.to_string(), v));
    }

    let mut flag_fingerprints = HashMap::new();
    let mut keys = vec!["tau6".to_string()];
    for i in 1..=6 {
        keys.push(format!("iota{i}"));
    }
    for key in keys {
        let lines = sections
            .get(&format!("flags:{key}"))
            .ok_or_else(|| CertError::MissingSection(format!("flags:{key}")))?;
        flag_fingerprints.insert(key, lines.iter().map(|(_, l)| l.clone()).collect());
    }
    let graph_fingerprints = sections
        .get("graphs:F7")
        .ok_or_else(|| CertError::MissingSection("graphs:F7".into()))?
        .iter()
        .map(|(_, l)| l.clone())
        .collect();

    let cert = Certificate { q, i_mats, c, u, flag_fingerprints, graph_fingerprints };
    cert.check_dimensions()?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use std::sync::OnceLock;

    #[test]
    fn rational_parsing_normalizes() {
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rat("0/5").unwrap(), rat(0, 1));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
        assert_eq!(format_rat(&rat(2, 3)), "2/3");
        assert_eq!(format_rat(&rat(-7, 1)), "-7");
    }

    fn ctx() -> &'static FlagContext {
        static CTX: OnceLock<FlagContext> = OnceLock::new();
        CTX.get_or_init(|| FlagContext::build().expect("context"))
    }

    #[test]
    fn certificate_round_trip_and_truncation() {
        let ctx = ctx();
        let mut cert = Certificate::zero(ctx);
        // make a few entries nontrivial so the round trip is meaningful
        *cert.q[0].get_mut(0, 1) = rat(4, 6); // stored normalized as 2/3
        *cert.q[0].get_mut(1, 0) = rat(2, 3);
        cert.c = [rat(1, 7), rat(0, 1), rat(5, 3)];
        cert.u[17].1 = rat(9, 2);
        let text = serialize_certificate(&cert);
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back.q[0].get(0, 1), &rat(2, 3));
        assert_eq!(back.c, cert.c);
        assert_eq!(back.u, cert.u);
        assert_eq!(back.graph_fingerprints, cert.graph_fingerprints);
        assert_eq!(back.flag_fingerprints, cert.flag_fingerprints);

        // a truncated file names its missing section
        let cut = text.split("[I4]").next().unwrap();
        match parse_certificate(cut) {
            Err(CertError::MissingSection(name)) => assert_eq!(name, "I4"),
            other => panic!("expected MissingSection(I4), got {other:?}"),
        }

        // wrong dimensions are rejected
        let bad = text.replace("dims 187 187", "dims 187 186");
        assert!(parse_certificate(&bad).is_err());
    }

    #[test]
    fn scaled_u_changes_slack_linearly() {
        let ctx = ctx();
        let parts = IdentityParts::build(ctx).unwrap();
        let zero = Certificate::zero(ctx);
        let mut single = zero.clone();
        single.u[42].1 = rat(1, 3);
        let mut doubled = zero.clone();
        doubled.u[42].1 = rat(2, 3);
        let s0 = assemble_rhs(&zero, ctx, &parts).unwrap();
        let s1 = assemble_rhs(&single, ctx, &parts).unwrap();
        let s2 = assemble_rhs(&doubled, ctx, &parts).unwrap();
        for g in 0..ctx.f7.len() {
            let d1 = &s0[g] - &s1[g];
            let d2 = &s0[g] - &s2[g];
            assert_eq!(d2, rat(2, 1) * d1);
        }
    }
}
