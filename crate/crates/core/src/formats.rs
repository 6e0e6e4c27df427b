//! Line-oriented text formats for complexes, ideals, certificates and
//! identities. Blank lines and everything after `#` are ignored.
//!
//! ```text
//! complex 5          ring 5 over QQ         ring 6
//! 1 2                x1*x3                  kind: gsv
//! 2 3                x1*x4                  part 0: x3*x6
//! ...                ...                    part 1: x1*x4, x2*x5
//! ```
//!
//! Certificate files have an optional `kind:` line (`gsv`, `sv` or `prop1`;
//! by default `sv` when `exp` lines are present and `gsv` otherwise), an
//! optional `generators:` block, and `part i:` blocks numbered from zero.
//! Members follow the colon or sit on the lines below, separated by commas.
//! `exp m k` gives the exponent of `m` in the most recent part. A `prop1`
//! certificate lists `p0`, then `p11, p12`, then `p21, p22`.
//!
//! Identity files hold `name:`, `lhs:`, `rhs:` and optional `clear:` fields;
//! a field continues on following lines until the next field. A new `name:`,
//! or a second `lhs:`, starts the next identity.

use std::fmt;

use crate::certificates::{Certificate, GsvCertificate, Prop1Certificate, SvCertificate};
use crate::combinatorics::{MonomialIdeal, SimplicialComplex};
use crate::oracle::Identity;
use crate::ring::{format_ring_header, parse_monomial, parse_polynomial, parse_ring_header, Ring, SquarefreeMonomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// One-based line number; zero when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl fmt::Display) -> FormatError {
    FormatError {
        line,
        message: message.to_string(),
    }
}

/// Non-empty lines with comments stripped, numbered from one.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn ring_line<'a>(it: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Ring, FormatError> {
    let (n, l) = it.next().ok_or_else(|| err(0, "missing ring header"))?;
    parse_ring_header(l).map_err(|e| err(n, e))
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut it = lines(text);
    let (n, header) = it.next().ok_or_else(|| err(0, "missing `complex N` header"))?;
    let count = header
        .strip_prefix("complex")
        .map(str::trim)
        .and_then(|c| c.parse::<usize>().ok())
        .ok_or_else(|| err(n, "expected `complex N`"))?;
    let mut facets = Vec::new();
    for (n, l) in it {
        let facet = l
            .split_whitespace()
            .map(|v| v.parse::<usize>().map_err(|_| err(n, format!("bad vertex `{v}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        facets.push(facet);
    }
    SimplicialComplex::new(count, facets).map_err(|e| err(0, e))
}

pub fn format_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("complex {}\n", c.num_vertices());
    for f in c.facets() {
        let v: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&v.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, FormatError> {
    let mut it = lines(text);
    let ring = ring_line(&mut it)?;
    let mut gens = Vec::new();
    for (n, l) in it {
        gens.extend(monomial_list(l, &ring, n)?);
    }
    MonomialIdeal::new(&ring, gens).map_err(|e| err(0, e))
}

pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let ring = ideal.ring();
    let mut out = format_ring_header(ring);
    out.push('\n');
    for &g in ideal.generators() {
        out.push_str(&ring.format_monomial(g));
        out.push('\n');
    }
    out
}

/// Either input accepted by the analysis commands.
#[derive(Clone, Debug)]
pub enum AnalysisInput {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

/// Dispatches on the first header: `complex` or `ring`.
pub fn parse_analysis_input(text: &str) -> Result<AnalysisInput, FormatError> {
    match lines(text).next() {
        Some((_, l)) if l.starts_with("complex") => parse_complex(text).map(AnalysisInput::Complex),
        Some(_) => parse_ideal(text).map(AnalysisInput::Ideal),
        None => Err(err(0, "empty input")),
    }
}

fn monomial_list(s: &str, ring: &Ring, line: usize) -> Result<Vec<SquarefreeMonomial>, FormatError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_monomial(t, ring).map_err(|e| err(line, format!("`{t}`: {e}"))))
        .collect()
}

enum Block {
    None,
    Generators,
    Part,
}

pub fn parse_certificate(text: &str) -> Result<Certificate, FormatError> {
    let mut it = lines(text);
    let ring = ring_line(&mut it)?;
    let mut kind: Option<String> = None;
    let mut generators: Option<Vec<SquarefreeMonomial>> = None;
    let mut parts: Vec<Vec<(SquarefreeMonomial, u32)>> = Vec::new();
    let mut saw_exp = false;
    let mut block = Block::None;
    for (n, l) in it {
        if let Some(k) = l.strip_prefix("kind:") {
            kind = Some(k.trim().to_string());
            block = Block::None;
        } else if let Some(rest) = l.strip_prefix("generators:") {
            let g = generators.get_or_insert_with(Vec::new);
            g.extend(monomial_list(rest, &ring, n)?);
            block = Block::Generators;
        } else if let Some(rest) = l.strip_prefix("part") {
            let (idx, members) = rest.split_once(':').ok_or_else(|| err(n, "expected `part i:`"))?;
            let idx: usize = idx.trim().parse().map_err(|_| err(n, "bad part index"))?;
            if idx != parts.len() {
                return Err(err(n, format!("expected part {}, found part {idx}", parts.len())));
            }
            parts.push(monomial_list(members, &ring, n)?.into_iter().map(|m| (m, 1)).collect());
            block = Block::Part;
        } else if let Some(rest) = l.strip_prefix("exp ") {
            let (mono, k) = rest.trim().rsplit_once(char::is_whitespace).ok_or_else(|| err(n, "expected `exp m k`"))?;
            let mono = parse_monomial(mono.trim(), &ring).map_err(|e| err(n, e))?;
            let k: u32 = k.parse().map_err(|_| err(n, format!("bad exponent `{k}`")))?;
            let last = parts.len().checked_sub(1).ok_or_else(|| err(n, "`exp` before any part"))?;
            let part = &mut parts[last];
            let entry = part
                .iter_mut()
                .find(|(m, _)| *m == mono)
                .ok_or_else(|| err(n, format!("{} is not in part {}", ring.format_monomial(mono), last)))?;
            entry.1 = k;
            saw_exp = true;
        } else {
            let list = monomial_list(l, &ring, n)?;
            match block {
                Block::Generators => generators.get_or_insert_with(Vec::new).extend(list),
                Block::Part => parts
                    .last_mut()
                    .expect("inside a part")
                    .extend(list.into_iter().map(|m| (m, 1))),
                Block::None => return Err(err(n, "monomials outside a `generators:` or `part i:` block")),
            }
        }
    }
    let kind = kind.unwrap_or_else(|| if saw_exp { "sv" } else { "gsv" }.to_string());
    let whole = |e: crate::certificates::CertificateError| err(0, e);
    match kind.as_str() {
        "gsv" | "sv" if generators.is_some() && kind == "sv" => Err(err(0, "sv certificates take no generators block")),
        "gsv" => {
            if saw_exp {
                return Err(err(0, "exponents are only allowed in sv certificates"));
            }
            let parts: Vec<Vec<SquarefreeMonomial>> =
                parts.into_iter().map(|p| p.into_iter().map(|(m, _)| m).collect()).collect();
            let cert = match generators {
                Some(g) => GsvCertificate::new(&ring, g, parts),
                None => GsvCertificate::from_parts(&ring, parts),
            };
            cert.map(Certificate::Gsv).map_err(whole)
        }
        "sv" => SvCertificate::new(&ring, parts).map(Certificate::Sv).map_err(whole),
        "prop1" => {
            let flat: Vec<Vec<SquarefreeMonomial>> =
                parts.iter().map(|p| p.iter().map(|(m, _)| *m).collect()).collect();
            match flat.as_slice() {
                [a, b, c] if a.len() == 1 && b.len() == 2 && c.len() == 2 && !saw_exp && generators.is_none() => {
                    Ok(Certificate::Prop1(ring.clone(), Prop1Certificate::new(a[0], b[0], b[1], c[0], c[1])))
                }
                _ => Err(err(0, "a prop1 certificate has parts of sizes 1, 2, 2 and nothing else")),
            }
        }
        other => Err(err(0, format!("unknown certificate kind `{other}`"))),
    }
}

pub fn format_certificate(cert: &Certificate) -> String {
    let ring = cert.ring();
    let list = |ms: &mut dyn Iterator<Item = SquarefreeMonomial>| {
        ms.map(|m| ring.format_monomial(m)).collect::<Vec<_>>().join(", ")
    };
    let mut out = format!("{}\nkind: {}\n", format_ring_header(ring), cert.kind());
    match cert {
        Certificate::Gsv(c) => {
            out.push_str(&format!("generators: {}\n", list(&mut c.generators().iter().copied())));
            for (i, p) in c.parts().iter().enumerate() {
                out.push_str(&format!("part {i}: {}\n", list(&mut p.iter().copied())));
            }
        }
        Certificate::Sv(c) => {
            for (i, p) in c.parts().iter().enumerate() {
                out.push_str(&format!("part {i}: {}\n", list(&mut p.iter().map(|&(m, _)| m))));
                for &(m, e) in p.iter().filter(|(_, e)| *e != 1) {
                    out.push_str(&format!("exp {} {e}\n", ring.format_monomial(m)));
                }
            }
        }
        Certificate::Prop1(_, c) => {
            out.push_str(&format!("part 0: {}\n", list(&mut [c.p0].into_iter())));
            out.push_str(&format!("part 1: {}\n", list(&mut [c.p11, c.p12].into_iter())));
            out.push_str(&format!("part 2: {}\n", list(&mut [c.p21, c.p22].into_iter())));
        }
    }
    out
}

#[derive(Default)]
struct RawIdentity {
    name: Option<String>,
    lhs: Option<(usize, String)>,
    rhs: Option<(usize, String)>,
    clear: Option<(usize, String)>,
}

impl RawIdentity {
    fn is_empty(&self) -> bool {
        self.name.is_none() && self.lhs.is_none() && self.rhs.is_none() && self.clear.is_none()
    }

    fn finish(self, ring: &Ring, index: usize) -> Result<Identity, FormatError> {
        let poly = |f: Option<(usize, String)>, what: &str| -> Result<_, FormatError> {
            let (n, text) = f.ok_or_else(|| err(0, format!("identity {index} has no `{what}:`")))?;
            parse_polynomial(&text, ring).map_err(|e| err(n, e))
        };
        let lhs = poly(self.lhs, "lhs")?;
        let rhs = poly(self.rhs, "rhs")?;
        let clear = match self.clear {
            Some(c) => Some(poly(Some(c), "clear")?),
            None => None,
        };
        let name = self.name.unwrap_or_else(|| format!("identity {index}"));
        Identity::new(&name, lhs, rhs, clear).map_err(|e| err(0, e))
    }
}

pub fn parse_identities(text: &str) -> Result<Vec<Identity>, FormatError> {
    let mut it = lines(text);
    let ring = ring_line(&mut it)?;
    let mut out = Vec::new();
    let mut cur = RawIdentity::default();
    let mut field: Option<&'static str> = None;
    for (n, l) in it {
        let key = ["name:", "lhs:", "rhs:", "clear:"].into_iter().find(|k| l.starts_with(k));
        match key {
            Some(k) => {
                let value = l[k.len()..].trim().to_string();
                let starts_new = k == "name:" || (k == "lhs:" && cur.lhs.is_some());
                if starts_new && !cur.is_empty() {
                    out.push(std::mem::take(&mut cur).finish(&ring, out.len() + 1)?);
                }
                match k {
                    "name:" => cur.name = Some(value),
                    "lhs:" => cur.lhs = Some((n, value)),
                    "rhs:" => cur.rhs = Some((n, value)),
                    _ => cur.clear = Some((n, value)),
                }
                field = Some(k);
            }
            None => {
                let slot = match field {
                    Some("lhs:") => &mut cur.lhs,
                    Some("rhs:") => &mut cur.rhs,
                    Some("clear:") => &mut cur.clear,
                    _ => return Err(err(n, "expected `name:`, `lhs:`, `rhs:` or `clear:`")),
                };
                let (_, text) = slot.as_mut().expect("field was opened");
                text.push(' ');
                text.push_str(l);
            }
        }
    }
    if !cur.is_empty() {
        out.push(cur.finish(&ring, out.len() + 1)?);
    }
    if out.is_empty() {
        return Err(err(0, "no identities"));
    }
    Ok(out)
}

/// All identities must share one ring.
pub fn format_identities(ids: &[Identity]) -> String {
    let Some(first) = ids.first() else {
        return String::new();
    };
    let mut out = format_ring_header(first.ring());
    out.push('\n');
    for id in ids {
        out.push_str(&format!("name: {}\nlhs: {}\nrhs: {}\n", id.name, id.lhs, id.rhs));
        if let Some(c) = &id.clear {
            out.push_str(&format!("clear: {c}\n"));
        }
    }
    out
}
