//! Line-oriented instance files: algebras as sparse structure-constant
//! lines, modules as dense action matrices, morphisms and homs as dense
//! matrices, with named cross-references inside one file.
//!
//! The canonical form (fixed field order, sorted constant lines, single
//! spaces, one blank line between blocks) round-trips bit-exactly
//! through parse and serialize.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use semilocal::algebra::Algebra;
use semilocal::fp::FpMatrix;
use semilocal::module::FdModule;
use semilocal::Morphism;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Algebra {
        p: u64,
        dim: usize,
        /// sorted sparse entries (i, j, k, v), v != 0
        consts: Vec<(usize, usize, usize, u64)>,
        unit: Vec<u64>,
    },
    Module {
        over: String,
        dim: usize,
        /// one row-major action matrix per algebra basis index
        actions: Vec<Vec<u64>>,
    },
    Map {
        from: String,
        to: String,
        rows: Vec<Vec<u64>>,
    },
    Hom {
        from: String,
        to: String,
        rows: Vec<Vec<u64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    /// generator family, when machine-produced
    pub gen: Option<String>,
    pub seed: Option<u64>,
    pub payload: Payload,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InstanceFile {
    pub instances: Vec<Instance>,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_kv(tok: &str, line: usize) -> Result<(&str, &str), ParseError> {
    tok.split_once('=')
        .ok_or_else(|| err(line, format!("expected key=value, got '{tok}'")))
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T, ParseError> {
    s.parse()
        .map_err(|_| err(line, format!("invalid {what}: '{s}'")))
}

pub fn parse(text: &str) -> Result<InstanceFile, ParseError> {
    let mut instances = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some(&(ln, raw)) = lines.peek() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            lines.next();
            continue;
        }
        let lineno = ln + 1;
        let mut toks = line.split_whitespace();
        let kind = toks.next().unwrap();
        let mut fields: BTreeMap<String, String> = BTreeMap::new();
        for tok in toks {
            let (k, v) = parse_kv(tok, lineno)?;
            fields.insert(k.to_string(), v.to_string());
        }
        let name = fields
            .remove("name")
            .ok_or_else(|| err(lineno, "missing name"))?;
        let gen = fields.remove("gen");
        let seed = match fields.remove("seed") {
            Some(s) => Some(parse_num(&s, lineno, "seed")?),
            None => None,
        };
        lines.next();
        let payload = match kind {
            "alg" => parse_algebra_body(&mut lines, fields, lineno)?,
            "mod" => parse_module_body(&mut lines, fields, lineno)?,
            "map" | "hom" => parse_matrix_body(&mut lines, fields, lineno, kind)?,
            other => return Err(err(lineno, format!("unknown block kind '{other}'"))),
        };
        instances.push(Instance {
            name,
            gen,
            seed,
            payload,
        });
    }
    Ok(InstanceFile { instances })
}

type Lines<'a> = std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>;

fn body_lines(lines: &mut Lines, start: usize) -> Result<Vec<(usize, String)>, ParseError> {
    let mut body = Vec::new();
    for (ln, raw) in lines.by_ref() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "end" {
            return Ok(body);
        }
        body.push((ln + 1, line.to_string()));
    }
    Err(err(start, "unterminated block (missing 'end')"))
}

fn parse_algebra_body(
    lines: &mut Lines,
    mut fields: BTreeMap<String, String>,
    start: usize,
) -> Result<Payload, ParseError> {
    let p: u64 = parse_num(
        &fields.remove("p").ok_or_else(|| err(start, "missing p"))?,
        start,
        "modulus",
    )?;
    let dim: usize = parse_num(
        &fields.remove("dim").ok_or_else(|| err(start, "missing dim"))?,
        start,
        "dimension",
    )?;
    if let Some(k) = fields.keys().next() {
        return Err(err(start, format!("unknown field '{k}'")));
    }
    let mut consts = Vec::new();
    let mut unit = None;
    for (ln, line) in body_lines(lines, start)? {
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "c" => {
                let vals: Vec<&str> = toks.collect();
                if vals.len() != 4 {
                    return Err(err(ln, "constant line needs 'c i j k v'"));
                }
                let i: usize = parse_num(vals[0], ln, "index")?;
                let j: usize = parse_num(vals[1], ln, "index")?;
                let k: usize = parse_num(vals[2], ln, "index")?;
                let v: u64 = parse_num(vals[3], ln, "value")?;
                if i >= dim || j >= dim || k >= dim {
                    return Err(err(ln, "constant index out of range"));
                }
                consts.push((i, j, k, v));
            }
            "unit" => {
                let vals: Result<Vec<u64>, _> =
                    toks.map(|t| parse_num(t, ln, "unit entry")).collect();
                let vals = vals?;
                if vals.len() != dim {
                    return Err(err(ln, format!("unit needs {dim} entries")));
                }
                unit = Some(vals);
            }
            other => return Err(err(ln, format!("unexpected '{other}' in algebra block"))),
        }
    }
    let unit = unit.ok_or_else(|| err(start, "algebra block missing unit line"))?;
    Ok(Payload::Algebra {
        p,
        dim,
        consts,
        unit,
    })
}

fn parse_module_body(
    lines: &mut Lines,
    mut fields: BTreeMap<String, String>,
    start: usize,
) -> Result<Payload, ParseError> {
    let over = fields
        .remove("over")
        .ok_or_else(|| err(start, "missing over"))?;
    let dim: usize = parse_num(
        &fields.remove("dim").ok_or_else(|| err(start, "missing dim"))?,
        start,
        "dimension",
    )?;
    if let Some(k) = fields.keys().next() {
        return Err(err(start, format!("unknown field '{k}'")));
    }
    let mut actions: Vec<(usize, Vec<u64>)> = Vec::new();
    for (ln, line) in body_lines(lines, start)? {
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "act" => {
                let idx: usize = parse_num(
                    toks.next().ok_or_else(|| err(ln, "act needs an index"))?,
                    ln,
                    "action index",
                )?;
                let vals: Result<Vec<u64>, _> =
                    toks.map(|t| parse_num(t, ln, "action entry")).collect();
                let vals = vals?;
                if vals.len() != dim * dim {
                    return Err(err(ln, format!("action needs {} entries", dim * dim)));
                }
                actions.push((idx, vals));
            }
            other => return Err(err(ln, format!("unexpected '{other}' in module block"))),
        }
    }
    actions.sort_by_key(|(i, _)| *i);
    for (expect, (got, _)) in actions.iter().enumerate() {
        if *got != expect {
            return Err(err(start, format!("missing action line for index {expect}")));
        }
    }
    Ok(Payload::Module {
        over,
        dim,
        actions: actions.into_iter().map(|(_, v)| v).collect(),
    })
}

fn parse_matrix_body(
    lines: &mut Lines,
    mut fields: BTreeMap<String, String>,
    start: usize,
    kind: &str,
) -> Result<Payload, ParseError> {
    let from = fields
        .remove("from")
        .ok_or_else(|| err(start, "missing from"))?;
    let to = fields.remove("to").ok_or_else(|| err(start, "missing to"))?;
    if let Some(k) = fields.keys().next() {
        return Err(err(start, format!("unknown field '{k}'")));
    }
    let mut rows = Vec::new();
    for (ln, line) in body_lines(lines, start)? {
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "row" => {
                let vals: Result<Vec<u64>, _> =
                    toks.map(|t| parse_num(t, ln, "matrix entry")).collect();
                rows.push(vals?);
            }
            other => return Err(err(ln, format!("unexpected '{other}' in {kind} block"))),
        }
    }
    Ok(if kind == "map" {
        Payload::Map { from, to, rows }
    } else {
        Payload::Hom { from, to, rows }
    })
}

pub fn serialize(file: &InstanceFile) -> String {
    let mut out = String::new();
    for (idx, inst) in file.instances.iter().enumerate() {
        if idx > 0 {
            out.push('\n');
        }
        let meta = {
            let mut m = String::new();
            if let Some(g) = &inst.gen {
                let _ = write!(m, " gen={g}");
            }
            if let Some(s) = &inst.seed {
                let _ = write!(m, " seed={s}");
            }
            m
        };
        match &inst.payload {
            Payload::Algebra {
                p,
                dim,
                consts,
                unit,
            } => {
                let _ = writeln!(out, "alg name={} p={} dim={}{}", inst.name, p, dim, meta);
                let mut sorted = consts.clone();
                sorted.sort_unstable();
                for (i, j, k, v) in sorted {
                    if v != 0 {
                        let _ = writeln!(out, "c {i} {j} {k} {v}");
                    }
                }
                let _ = writeln!(out, "unit {}", join(unit));
            }
            Payload::Module { over, dim, actions } => {
                let _ = writeln!(out, "mod name={} over={} dim={}{}", inst.name, over, dim, meta);
                for (i, act) in actions.iter().enumerate() {
                    let _ = writeln!(out, "act {i} {}", join(act));
                }
            }
            Payload::Map { from, to, rows } => {
                let _ = writeln!(out, "map name={} from={} to={}{}", inst.name, from, to, meta);
                for row in rows {
                    let _ = writeln!(out, "row {}", join(row));
                }
            }
            Payload::Hom { from, to, rows } => {
                let _ = writeln!(out, "hom name={} from={} to={}{}", inst.name, from, to, meta);
                for row in rows {
                    let _ = writeln!(out, "row {}", join(row));
                }
            }
        }
        out.push_str("end\n");
    }
    out
}

fn join(vals: &[u64]) -> String {
    vals.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// The realized objects of a file, in declaration order.
pub struct Realized {
    pub algebras: Vec<(String, Algebra)>,
    pub modules: Vec<(String, FdModule)>,
    pub maps: Vec<(String, Morphism)>,
    pub homs: Vec<(String, semilocal::ModuleHom)>,
}

impl Realized {
    pub fn algebra(&self, name: &str) -> Option<&Algebra> {
        self.algebras
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a)
    }

    pub fn module(&self, name: &str) -> Option<&FdModule> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

/// Validates every instance against its constructor; errors carry the
/// instance name.
pub fn realize(file: &InstanceFile) -> Result<Realized, String> {
    let mut out = Realized {
        algebras: Vec::new(),
        modules: Vec::new(),
        maps: Vec::new(),
        homs: Vec::new(),
    };
    for inst in &file.instances {
        match &inst.payload {
            Payload::Algebra {
                p,
                dim,
                consts,
                unit,
            } => {
                let mut dense = vec![0u64; dim * dim * dim];
                for &(i, j, k, v) in consts {
                    dense[(i * dim + j) * dim + k] = v;
                }
                let a = Algebra::new(*p, *dim, dense, unit.clone())
                    .map_err(|e| format!("{}: {}", inst.name, e))?;
                out.algebras.push((inst.name.clone(), a));
            }
            Payload::Module { over, dim, actions } => {
                let a = out
                    .algebra(over)
                    .ok_or_else(|| format!("{}: unknown algebra '{}'", inst.name, over))?
                    .clone();
                let mats: Vec<FpMatrix> = actions
                    .iter()
                    .map(|flat| FpMatrix::new(a.modulus(), *dim, *dim, flat.clone()))
                    .collect();
                let m = FdModule::new(a, mats).map_err(|e| format!("{}: {}", inst.name, e))?;
                out.modules.push((inst.name.clone(), m));
            }
            Payload::Map { from, to, rows } => {
                let a = out
                    .algebra(from)
                    .ok_or_else(|| format!("{}: unknown algebra '{}'", inst.name, from))?
                    .clone();
                let b = out
                    .algebra(to)
                    .ok_or_else(|| format!("{}: unknown algebra '{}'", inst.name, to))?
                    .clone();
                let mat = rows_to_matrix(a.modulus(), rows, a.dim(), b.dim())
                    .map_err(|e| format!("{}: {}", inst.name, e))?;
                let m = Morphism::new(a, b, mat).map_err(|e| format!("{}: {}", inst.name, e))?;
                out.maps.push((inst.name.clone(), m));
            }
            Payload::Hom { from, to, rows } => {
                let dm = out
                    .module(from)
                    .ok_or_else(|| format!("{}: unknown module '{}'", inst.name, from))?
                    .clone();
                let cm = out
                    .module(to)
                    .ok_or_else(|| format!("{}: unknown module '{}'", inst.name, to))?
                    .clone();
                let mat = rows_to_matrix(dm.modulus(), rows, dm.dim(), cm.dim())
                    .map_err(|e| format!("{}: {}", inst.name, e))?;
                let h = semilocal::ModuleHom::new(dm, cm, mat)
                    .map_err(|e| format!("{}: {}", inst.name, e))?;
                out.homs.push((inst.name.clone(), h));
            }
        }
    }
    Ok(out)
}

fn rows_to_matrix(
    p: u64,
    rows: &[Vec<u64>],
    expect_rows: usize,
    expect_cols: usize,
) -> Result<FpMatrix, String> {
    if rows.len() != expect_rows {
        return Err(format!("expected {} rows, got {}", expect_rows, rows.len()));
    }
    for r in rows {
        if r.len() != expect_cols {
            return Err(format!("expected {} columns, got {}", expect_cols, r.len()));
        }
    }
    let flat: Vec<u64> = rows.iter().flatten().copied().collect();
    Ok(FpMatrix::new(p, expect_rows, expect_cols, flat))
}

/// Serializes a realized algebra back into an instance block.
pub fn algebra_to_instance(name: &str, a: &Algebra, gen: Option<String>, seed: Option<u64>) -> Instance {
    let dim = a.dim();
    let mut consts = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let v = a.c(i, j, k);
                if v != 0 {
                    consts.push((i, j, k, v));
                }
            }
        }
    }
    Instance {
        name: name.to_string(),
        gen,
        seed,
        payload: Payload::Algebra {
            p: a.modulus(),
            dim,
            consts,
            unit: a.unit_coords().to_vec(),
        },
    }
}

pub fn module_to_instance(name: &str, over: &str, m: &FdModule) -> Instance {
    Instance {
        name: name.to_string(),
        gen: None,
        seed: None,
        payload: Payload::Module {
            over: over.to_string(),
            dim: m.dim(),
            actions: (0..m.algebra().dim())
                .map(|i| m.action(i).entries().to_vec())
                .collect(),
        },
    }
}

pub fn map_to_instance(name: &str, from: &str, to: &str, m: &Morphism) -> Instance {
    Instance {
        name: name.to_string(),
        gen: None,
        seed: None,
        payload: Payload::Map {
            from: from.to_string(),
            to: to.to_string(),
            rows: (0..m.matrix().rows())
                .map(|r| m.matrix().row(r).to_vec())
                .collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const UT2: &str = "\
alg name=t2 p=2 dim=3
c 0 0 0 1
c 0 1 1 1
c 1 2 1 1
c 2 2 2 1
unit 1 0 1
end
";

    #[test]
    fn canonical_roundtrip() {
        let parsed = parse(UT2).unwrap();
        assert_eq!(serialize(&parsed), UT2);
    }

    #[test]
    fn hand_authored_triangular_validates() {
        let parsed = parse(UT2).unwrap();
        let realized = realize(&parsed).unwrap();
        let a = realized.algebra("t2").unwrap();
        assert_eq!(a.dim(), 3);
        let rad = a.radical().unwrap();
        assert_eq!(rad.radical.dim(), 1);
    }

    #[test]
    fn malformed_header_is_an_error() {
        let e = parse("alg name=x p=abc dim=1\nunit 1\nend\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse("alg name=x dim=1\nunit 1\nend\n").unwrap_err();
        assert!(e.message.contains("missing p"));
    }

    #[test]
    fn module_block_roundtrip_and_validation() {
        let text = "\
alg name=k p=3 dim=1
c 0 0 0 1
unit 1
end

mod name=m over=k dim=2
act 0 1 0 0 1
end
";
        let parsed = parse(text).unwrap();
        assert_eq!(serialize(&parsed), text);
        let realized = realize(&parsed).unwrap();
        assert_eq!(realized.module("m").unwrap().dim(), 2);
    }

    #[test]
    fn unknown_reference_is_reported() {
        let text = "mod name=m over=nope dim=1\nact 0 1\nend\n";
        let parsed = parse(text).unwrap();
        let e = match realize(&parsed) {
            Err(e) => e,
            Ok(_) => panic!("expected a dangling reference error"),
        };
        assert!(e.contains("unknown algebra"));
    }

    #[test]
    fn invalid_algebra_is_rejected_at_realize() {
        // unit law broken
        let text = "alg name=bad p=2 dim=2\nc 0 0 1 1\nunit 1 0\nend\n";
        let parsed = parse(text).unwrap();
        assert!(realize(&parsed).is_err());
    }
}
