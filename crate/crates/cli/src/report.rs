//! The structured result of a command, printable as text or as
//! `key<TAB>value` lines that [`Report::parse_machine`] reads back.

use std::fmt::{self, Write as _};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    /// Fixture name or input path.
    pub subject: String,
    /// The ideal under study, as `(g1, g2, ...)`.
    pub ideal: Option<String>,
    pub heights: Option<HeightSummary>,
    pub bounds: Option<BoundsSummary>,
    pub check: Option<CheckSummary>,
    pub oracle: Option<OracleSummary>,
    pub identities: Vec<IdentityOutcome>,
    pub timings: Vec<Timing>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeightSummary {
    pub height: usize,
    pub big_height: usize,
    pub pure: bool,
    pub minimal_primes: Vec<String>,
    /// Connectivity of a one-dimensional complex, when the input is one.
    pub connected: Option<bool>,
    pub generators: usize,
    /// Generators pairwise coprime, so the ideal is generated by a regular
    /// sequence.
    pub complete_intersection: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsSummary {
    pub height: usize,
    pub lower: usize,
    pub upper: Option<usize>,
    pub stci: Option<bool>,
    /// `found`, `exhausted` or `budget-exhausted`, when a search ran.
    pub search: Option<String>,
    pub nodes: Option<u64>,
    /// Parts of the certificate giving the upper bound, each as `m1, m2`.
    pub parts: Vec<String>,
}

impl BoundsSummary {
    pub fn ara(&self) -> Option<usize> {
        self.upper.filter(|&u| u == self.lower)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckSummary {
    pub kind: String,
    pub accepted: bool,
    pub explored_states: usize,
    pub emitted: Vec<String>,
    /// Last line of the failure trace.
    pub failure: Option<String>,
    /// Steps of the failing branch, kept only when asked for.
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub field: String,
    pub confirmed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Timing {
    pub stage: String,
    pub micros: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ReportParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ReportParseError {}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tri(b: Option<bool>) -> &'static str {
    b.map_or("unknown", yes_no)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\t', "\\t").replace('\n', "\\n")
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('t') => out.push('\t'),
            Some('n') => out.push('\n'),
            Some(other) => out.push(other),
            None => out.push('\\'),
        }
    }
    out
}

impl Report {
    pub fn new(command: &str, subject: &str) -> Self {
        Report {
            command: command.to_string(),
            subject: subject.to_string(),
            ..Report::default()
        }
    }

    pub fn time(&mut self, stage: &str, elapsed: std::time::Duration) {
        self.timings.push(Timing {
            stage: stage.to_string(),
            micros: elapsed.as_micros() as u64,
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{}: {}", self.command, self.subject);
        if let Some(i) = &self.ideal {
            let _ = writeln!(w, "ideal {i}");
        }
        if let Some(h) = &self.heights {
            let _ = writeln!(w, "minimal primes: {}", h.minimal_primes.join(" "));
            let purity = if h.pure { "pure" } else { "not pure" };
            let _ = writeln!(w, "height {}, big height {}, {purity}", h.height, h.big_height);
            if let Some(c) = h.connected {
                let _ = writeln!(w, "1-dimensional complex: {}", if c { "connected" } else { "disconnected" });
            }
            if h.complete_intersection {
                let noun = if h.generators == 1 { "generator" } else { "generators" };
                let _ = writeln!(w, "complete intersection: {} {noun}", h.generators);
            }
        }
        if let Some(b) = &self.bounds {
            let upper = b.upper.map_or("?".to_string(), |u| u.to_string());
            let _ = write!(w, "height {}, lower {}, upper {upper}", b.height, b.lower);
            if let Some(a) = b.ara() {
                let _ = write!(w, ", ara = {a}");
            }
            let _ = writeln!(w, ", STCI: {}", tri(b.stci));
            if let Some(s) = &b.search {
                let nodes = b.nodes.map_or(String::new(), |n| format!(" after {n} nodes"));
                let _ = writeln!(w, "search: {s}{nodes}");
            }
            for (i, p) in b.parts.iter().enumerate() {
                let _ = writeln!(w, "part {i}: {p}");
            }
        }
        if let Some(c) = &self.check {
            let verdict = if c.accepted { "accepted" } else { "rejected" };
            if c.kind == "gsv" {
                let _ = writeln!(w, "{} certificate {verdict} ({} procedure states)", c.kind, c.explored_states);
            } else {
                let _ = writeln!(w, "{} certificate {verdict}", c.kind);
            }
            for (i, q) in c.emitted.iter().enumerate() {
                let _ = writeln!(w, "q{i} = {q}");
            }
            for t in &c.trace {
                let _ = writeln!(w, "  {t}");
            }
            if let Some(f) = &c.failure {
                let _ = writeln!(w, "{f}");
            }
        }
        if let Some(o) = &self.oracle {
            let verdict = if o.confirmed { "confirmed" } else { "DISAGREES" };
            let _ = writeln!(w, "oracle over {}: {verdict}", o.field);
            for f in &o.failures {
                let _ = writeln!(w, "  {f}");
            }
        }
        if !self.identities.is_empty() {
            for i in &self.identities {
                let _ = writeln!(w, "{}: {}", i.name, if i.holds { "pass" } else { "FAIL" });
            }
            let passed = self.identities.iter().filter(|i| i.holds).count();
            let _ = writeln!(w, "{passed}/{} pass", self.identities.len());
        }
        for t in &self.timings {
            let _ = writeln!(w, "time {}: {:.3} ms", t.stage, t.micros as f64 / 1000.0);
        }
        out
    }

    pub fn to_machine(&self) -> String {
        let mut lines: Vec<(&str, String)> = vec![("command", self.command.clone()), ("subject", self.subject.clone())];
        if let Some(i) = &self.ideal {
            lines.push(("ideal", i.clone()));
        }
        if let Some(h) = &self.heights {
            lines.push(("height", h.height.to_string()));
            lines.push(("big_height", h.big_height.to_string()));
            lines.push(("pure", yes_no(h.pure).into()));
            lines.extend(h.minimal_primes.iter().map(|p| ("minimal_prime", p.clone())));
            if let Some(c) = h.connected {
                lines.push(("connected", yes_no(c).into()));
            }
            lines.push(("generators", h.generators.to_string()));
            lines.push(("complete_intersection", yes_no(h.complete_intersection).into()));
        }
        if let Some(b) = &self.bounds {
            lines.push(("bounds_height", b.height.to_string()));
            lines.push(("lower_bound", b.lower.to_string()));
            if let Some(u) = b.upper {
                lines.push(("upper_bound", u.to_string()));
            }
            if let Some(a) = b.ara() {
                lines.push(("ara", a.to_string()));
            }
            lines.push(("stci", tri(b.stci).into()));
            if let Some(s) = &b.search {
                lines.push(("search", s.clone()));
            }
            if let Some(n) = b.nodes {
                lines.push(("search_nodes", n.to_string()));
            }
            lines.extend(b.parts.iter().map(|p| ("part", p.clone())));
        }
        if let Some(c) = &self.check {
            lines.push(("certificate_kind", c.kind.clone()));
            lines.push(("accepted", yes_no(c.accepted).into()));
            lines.push(("explored_states", c.explored_states.to_string()));
            lines.extend(c.emitted.iter().map(|q| ("emitted", q.clone())));
            if let Some(f) = &c.failure {
                lines.push(("failure", f.clone()));
            }
            lines.extend(c.trace.iter().map(|t| ("trace", t.clone())));
        }
        if let Some(o) = &self.oracle {
            lines.push(("oracle_field", o.field.clone()));
            lines.push(("oracle_confirmed", yes_no(o.confirmed).into()));
            lines.extend(o.failures.iter().map(|f| ("oracle_failure", f.clone())));
        }
        for i in &self.identities {
            lines.push(("identity", format!("{}\t{}", if i.holds { "pass" } else { "fail" }, escape(&i.name))));
        }
        for t in &self.timings {
            lines.push(("time_us", format!("{}\t{}", escape(&t.stage), t.micros)));
        }
        let mut out = String::new();
        for (k, v) in lines {
            let v = if matches!(k, "identity" | "time_us") { v } else { escape(&v) };
            let _ = writeln!(out, "{k}\t{v}");
        }
        out
    }

    pub fn parse_machine(text: &str) -> Result<Report, ReportParseError> {
        let mut r = Report::default();
        for (idx, line) in text.lines().enumerate() {
            let n = idx + 1;
            let bad = |message: String| ReportParseError { line: n, message };
            if line.trim().is_empty() {
                continue;
            }
            let (key, raw) = line.split_once('\t').ok_or_else(|| bad("expected `key<TAB>value`".into()))?;
            let value = unescape(raw);
            let num = |v: &str| v.parse::<u64>().map_err(|_| bad(format!("`{key}` needs a number, got `{v}`")));
            let flag = |v: &str| match v {
                "yes" => Ok(true),
                "no" => Ok(false),
                _ => Err(bad(format!("`{key}` needs yes or no, got `{v}`"))),
            };
            match key {
                "command" => r.command = value,
                "subject" => r.subject = value,
                "ideal" => r.ideal = Some(value),
                "height" | "big_height" | "pure" | "minimal_prime" | "connected" | "generators" | "complete_intersection" => {
                    let h = r.heights.get_or_insert_with(HeightSummary::default);
                    match key {
                        "height" => h.height = num(&value)? as usize,
                        "big_height" => h.big_height = num(&value)? as usize,
                        "pure" => h.pure = flag(&value)?,
                        "minimal_prime" => h.minimal_primes.push(value),
                        "connected" => h.connected = Some(flag(&value)?),
                        "generators" => h.generators = num(&value)? as usize,
                        _ => h.complete_intersection = flag(&value)?,
                    }
                }
                "bounds_height" | "lower_bound" | "upper_bound" | "ara" | "stci" | "search" | "search_nodes" | "part" => {
                    let b = r.bounds.get_or_insert_with(BoundsSummary::default);
                    match key {
                        "bounds_height" => b.height = num(&value)? as usize,
                        "lower_bound" => b.lower = num(&value)? as usize,
                        "upper_bound" => b.upper = Some(num(&value)? as usize),
                        // Derived from the bounds; checked for consistency below.
                        "ara" => {
                            num(&value)?;
                        }
                        "stci" => b.stci = if value == "unknown" { None } else { Some(flag(&value)?) },
                        "search" => b.search = Some(value),
                        "search_nodes" => b.nodes = Some(num(&value)?),
                        _ => b.parts.push(value),
                    }
                }
                "certificate_kind" | "accepted" | "explored_states" | "emitted" | "failure" | "trace" => {
                    let c = r.check.get_or_insert_with(CheckSummary::default);
                    match key {
                        "certificate_kind" => c.kind = value,
                        "accepted" => c.accepted = flag(&value)?,
                        "explored_states" => c.explored_states = num(&value)? as usize,
                        "emitted" => c.emitted.push(value),
                        "failure" => c.failure = Some(value),
                        _ => c.trace.push(value),
                    }
                }
                "oracle_field" | "oracle_confirmed" | "oracle_failure" => {
                    let o = r.oracle.get_or_insert_with(OracleSummary::default);
                    match key {
                        "oracle_field" => o.field = value,
                        "oracle_confirmed" => o.confirmed = flag(&value)?,
                        _ => o.failures.push(value),
                    }
                }
                "identity" => {
                    let (verdict, name) = raw.split_once('\t').ok_or_else(|| bad("expected `identity<TAB>pass|fail<TAB>name`".into()))?;
                    let holds = match verdict {
                        "pass" => true,
                        "fail" => false,
                        _ => return Err(bad(format!("unknown identity verdict `{verdict}`"))),
                    };
                    r.identities.push(IdentityOutcome { name: unescape(name), holds });
                }
                "time_us" => {
                    let (stage, micros) = raw.split_once('\t').ok_or_else(|| bad("expected `time_us<TAB>stage<TAB>micros`".into()))?;
                    r.timings.push(Timing {
                        stage: unescape(stage),
                        micros: num(micros)?,
                    });
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("analyze", "im(2)");
        r.ideal = Some("(x1*x2, x3*x4)".into());
        r.heights = Some(HeightSummary {
            height: 4,
            big_height: 5,
            pure: false,
            minimal_primes: vec!["(x1, x3)".into(), "(x2, x4)".into()],
            connected: Some(true),
            generators: 2,
            complete_intersection: false,
        });
        r.bounds = Some(BoundsSummary {
            height: 4,
            lower: 5,
            upper: Some(5),
            stci: Some(false),
            search: Some("found".into()),
            nodes: Some(12),
            parts: vec!["x1*x2".into(), "x3*x4, x5*x6".into()],
        });
        r.check = Some(CheckSummary {
            kind: "gsv".into(),
            accepted: false,
            explored_states: 3,
            emitted: vec![],
            failure: Some("stuck: no part".into()),
            trace: vec!["part 0: x1*x2 -> pick x1".into()],
        });
        r.oracle = Some(OracleSummary {
            field: "QQ".into(),
            confirmed: false,
            failures: vec!["x1*x2 not in radical".into()],
        });
        r.identities = vec![IdentityOutcome {
            name: "odd\tname\\with\nbreaks".into(),
            holds: true,
        }];
        r.time("search", std::time::Duration::from_micros(1234));
        r
    }

    #[test]
    fn machine_round_trip() {
        let r = sample();
        assert_eq!(Report::parse_machine(&r.to_machine()).unwrap(), r);
        let empty = Report::new("fixtures", "list");
        assert_eq!(Report::parse_machine(&empty.to_machine()).unwrap(), empty);
    }

    #[test]
    fn machine_errors() {
        assert_eq!(Report::parse_machine("command\tx\nheight\tfour\n").unwrap_err().line, 2);
        assert!(Report::parse_machine("nonsense\t1\n").is_err());
        assert!(Report::parse_machine("no tab here\n").is_err());
    }

    #[test]
    fn text_mentions_bounds() {
        let text = sample().render_text();
        assert!(text.contains("height 4, lower 5, upper 5, ara = 5, STCI: no"), "{text}");
        assert!(text.contains("1/1 pass"));
    }
}
