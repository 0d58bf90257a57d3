use serde::Serialize;
use serde_json::Value;

use qschubert::presentation::verify_presentations;
use qschubert::vafa_intriligator::{vi_residue_sum, RESIDUAL_TOLERANCE};
use qschubert::{
    extended_giambelli_direct, extended_giambelli_reduce, giambelli_quantum, gromov_witten, multiply_classical,
    quantum_multiply, CohomClass, ExtendedTuple, Partition, QuantumClass, Shape,
};

use crate::expr::parse_for_shape;
use crate::render::{class_json, partition_literal, render_class, terms_json, ShapeJson, TermJson};
use crate::{CliError, Method, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_RESIDUAL: i32 = 3;

/// Default refusal threshold for `table`.
pub const MAX_TABLE_BASIS: u64 = 64;

/// A finished command: both renderings plus the process exit code.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.json).expect("serializable") + "\n"
        } else {
            self.text.clone()
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn mult(shape: &Shape, mode: Mode, input: &str) -> Result<Output, CliError> {
    let expr = parse_for_shape(shape, input)?;
    let value = expr.eval(shape, mode)?;
    Ok(Output { text: render_class(&value) + "\n", json: to_value(&class_json(shape, &value)), code: EXIT_OK })
}

/// Accepts `s[2,1]`, `[2,1]` or `2,1`, optionally followed by `^m` to repeat
/// the insertion `m` times.
pub fn parse_insertions(shape: &Shape, args: &[String]) -> Result<Vec<Partition>, CliError> {
    let mut out = Vec::new();
    for arg in args.iter().flat_map(|a| a.split_whitespace()) {
        let (body, repeat) = match arg.rsplit_once('^') {
            Some((body, rep)) => {
                let rep: usize = rep.parse().map_err(|_| CliError::Usage(format!("bad repeat count in '{arg}'")))?;
                (body, rep)
            }
            None => (arg, 1),
        };
        let inner = body.strip_prefix('s').unwrap_or(body);
        let inner = inner.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(inner);
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("cannot parse insertion '{arg}'")))?;
        let p = Partition::new(shape, &parts)?;
        out.extend(std::iter::repeat_n(p, repeat));
    }
    Ok(out)
}

#[derive(Serialize)]
struct GwJson {
    shape: ShapeJson,
    insertions: Vec<Vec<u32>>,
    degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pieri: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vi: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    agree: bool,
}

/// Gromov-Witten number by quantum Pieri, the residue sum, or both. With no
/// explicit degree the one forced by the dimension rule is used.
pub fn gw(shape: &Shape, insertions: &[Partition], degree: Option<u32>, method: Method) -> Result<Output, CliError> {
    if insertions.len() < 2 {
        return Err(qschubert::Error::TooFewInsertions(insertions.len()).into());
    }
    let codim: u64 = insertions.iter().map(|p| p.weight() as u64).sum();
    let d = degree.or_else(|| shape.degree_for_codim(codim));
    let note = match d {
        Some(d) if shape.moduli_dimension(d) == codim => None,
        Some(d) => Some(format!(
            "codimensions sum to {codim} but degree {d} needs {}; invariant is 0 by convention",
            shape.moduli_dimension(d)
        )),
        None => Some(format!("no degree d has {} = {codim}; invariant is 0 by convention", dim_rule(shape))),
    };
    let d_eval = d.unwrap_or(0);
    let pieri = matches!(method, Method::Pieri | Method::Both)
        .then(|| gromov_witten(shape, insertions, d_eval))
        .transpose()?
        .map(|v| if d.is_some() { v } else { 0 });
    let mut residual = None;
    let vi = if matches!(method, Method::Vi | Method::Both) {
        let sum = if d.is_some() { Some(vi_residue_sum(shape, insertions, d_eval)) } else { None };
        if let Some(sum) = sum {
            residual = Some(sum.residual());
            if sum.residual() > RESIDUAL_TOLERANCE {
                return Err(CliError::Core(qschubert::Error::Residual {
                    re: sum.raw.re,
                    im: sum.raw.im,
                    tolerance: RESIDUAL_TOLERANCE,
                }));
            }
        }
        Some(sum.map_or(0, |s| s.value))
    } else {
        None
    };
    let agree = match (pieri, vi) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let mut text = match (pieri, vi) {
        (Some(a), Some(b)) => format!("pieri={a} vi={b}"),
        (Some(a), None) | (None, Some(a)) => a.to_string(),
        (None, None) => unreachable!(),
    };
    text.push('\n');
    if let Some(n) = &note {
        text.push_str(&format!("note: {n}\n"));
    }
    if !agree {
        text.push_str("error: methods disagree\n");
    }
    let json = GwJson {
        shape: shape.into(),
        insertions: insertions.iter().map(|p| p.parts().to_vec()).collect(),
        degree: d,
        pieri,
        vi,
        residual,
        note,
        agree,
    };
    Ok(Output { text, json: to_value(&json), code: if agree { EXIT_OK } else { EXIT_VERIFY } })
}

fn dim_rule(shape: &Shape) -> String {
    format!("{}d + {}", shape.n(), shape.dim())
}

#[derive(Serialize)]
struct ViJson {
    shape: ShapeJson,
    insertions: Vec<Vec<u32>>,
    degree: Option<u32>,
    raw: [f64; 2],
    value: i64,
    residual: f64,
}

/// Residue-sum evaluation with the raw complex value exposed.
pub fn vi(shape: &Shape, insertions: &[Partition], degree: Option<u32>) -> Result<Output, CliError> {
    if insertions.len() < 2 {
        return Err(qschubert::Error::TooFewInsertions(insertions.len()).into());
    }
    let codim: u64 = insertions.iter().map(|p| p.weight() as u64).sum();
    let d = degree.or_else(|| shape.degree_for_codim(codim));
    let sum = vi_residue_sum(shape, insertions, d.unwrap_or(0));
    let sum = if d.is_some() { sum } else { qschubert::vafa_intriligator::ResidueSum { value: 0, ..sum } };
    let residual = sum.residual();
    let text = format!(
        "value={} raw={:.12}{:+.12}i residual={:.3e}\n",
        sum.value, sum.raw.re, sum.raw.im, residual
    );
    let json = ViJson {
        shape: shape.into(),
        insertions: insertions.iter().map(|p| p.parts().to_vec()).collect(),
        degree: d,
        raw: [sum.raw.re, sum.raw.im],
        value: sum.value,
        residual,
    };
    let code = if residual > RESIDUAL_TOLERANCE { EXIT_RESIDUAL } else { EXIT_OK };
    Ok(Output { text, json: to_value(&json), code })
}

#[derive(Serialize)]
struct ProductJson {
    left: Vec<u32>,
    right: Vec<u32>,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct TableJson {
    shape: ShapeJson,
    mode: &'static str,
    products: Vec<ProductJson>,
}

fn basis_product(shape: &Shape, mode: Mode, x: &Partition, y: &Partition) -> Result<QuantumClass, CliError> {
    Ok(match mode {
        Mode::Quantum => {
            quantum_multiply(shape, &QuantumClass::schubert(x.clone(), 0), &QuantumClass::schubert(y.clone(), 0))?
        }
        Mode::Classical => QuantumClass::from_classical(
            &multiply_classical(shape, &CohomClass::basis(x.clone()), &CohomClass::basis(y.clone()))?,
            0,
        ),
    })
}

/// All unordered products of basis classes, in basis order.
pub fn table(shape: &Shape, mode: Mode, max_basis: u64) -> Result<Output, CliError> {
    let size = shape.basis_size();
    if size > max_basis {
        return Err(CliError::Usage(format!("{shape} has {size} basis classes, more than the limit of {max_basis}")));
    }
    let basis = shape.enumerate_box();
    let mut text = String::new();
    let mut products = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            let prod = basis_product(shape, mode, x, y)?;
            text.push_str(&format!("{}*{} = {}\n", partition_literal(x), partition_literal(y), render_class(&prod)));
            products.push(ProductJson { left: x.parts().to_vec(), right: y.parts().to_vec(), terms: terms_json(&prod) });
        }
    }
    let json = TableJson { shape: shape.into(), mode: mode.name(), products };
    Ok(Output { text, json: to_value(&json), code: EXIT_OK })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    shape: ShapeJson,
    checks: &'a [CheckRow],
    passed: bool,
}

fn row(name: impl Into<String>, failures: usize, total: usize) -> CheckRow {
    CheckRow { name: name.into(), passed: failures == 0, detail: format!("{}/{} ok", total - failures, total) }
}

/// Runs the ring consistency checks for `shape`.
pub fn verify_checks(shape: &Shape) -> Result<Vec<CheckRow>, CliError> {
    let mut rows: Vec<CheckRow> = verify_presentations(shape)?
        .checks
        .into_iter()
        .map(|c| CheckRow { name: c.name, passed: c.passed, detail: c.detail })
        .collect();
    let basis = shape.enumerate_box();
    let single = |p: &Partition| QuantumClass::schubert(p.clone(), 0);

    let mut bad = 0;
    for lam in &basis {
        if giambelli_quantum(shape, lam)? != single(lam) {
            bad += 1;
        }
    }
    rows.push(row("quantum Giambelli exactness", bad, basis.len()));

    let mut products = Vec::with_capacity(basis.len() * basis.len());
    for x in &basis {
        for y in &basis {
            products.push(quantum_multiply(shape, &single(x), &single(y))?);
        }
    }
    let m = basis.len();
    let mut bad = 0;
    let mut bad_trunc = 0;
    for i in 0..m {
        for j in 0..m {
            if products[i * m + j] != products[j * m + i] {
                bad += 1;
            }
            let classical =
                multiply_classical(shape, &CohomClass::basis(basis[i].clone()), &CohomClass::basis(basis[j].clone()))?;
            if products[i * m + j].degree_part(0) != classical {
                bad_trunc += 1;
            }
        }
    }
    rows.push(row("quantum commutativity", bad, m * m));
    rows.push(row("q=0 recovers classical product", bad_trunc, m * m));

    let mut bad = 0;
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                let left = quantum_multiply(shape, &products[i * m + j], &single(&basis[l]))?;
                let right = quantum_multiply(shape, &single(&basis[i]), &products[j * m + l])?;
                if left != right {
                    bad += 1;
                }
            }
        }
    }
    rows.push(row("quantum associativity", bad, m * m * m));

    let mut bad = 0;
    for x in &basis {
        for y in &basis {
            for d in 1..=3 {
                if gromov_witten(shape, &[x.clone(), y.clone()], d)? != 0 {
                    bad += 1;
                }
            }
        }
    }
    rows.push(row("two-point vanishing (d=1..3)", bad, m * m * 3));

    let tuples = ExtendedTuple::enumerate(shape);
    let mut bad = 0;
    for b in &tuples {
        if extended_giambelli_direct(shape, b)? != extended_giambelli_reduce(shape, b) {
            bad += 1;
        }
    }
    rows.push(row("extended determinant reduction", bad, tuples.len()));
    Ok(rows)
}

pub fn verify(shape: &Shape) -> Result<Output, CliError> {
    let rows = verify_checks(shape)?;
    let passed = rows.iter().all(|r| r.passed);
    let width = rows.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
    let mut text = format!("verify {shape} (n={}, k={})\n", shape.n(), shape.k());
    for r in &rows {
        let pad = width - r.name.chars().count();
        text.push_str(&format!(
            "  {}{}  {}  {}\n",
            r.name,
            " ".repeat(pad),
            if r.passed { "PASS" } else { "FAIL" },
            r.detail
        ));
    }
    text.push_str(if passed { "all checks passed\n" } else { "some checks FAILED\n" });
    let json = VerifyJson { shape: shape.into(), checks: &rows, passed };
    Ok(Output { text, json: to_value(&json), code: if passed { EXIT_OK } else { EXIT_VERIFY } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g24() -> Shape {
        Shape::new(4, 2).unwrap()
    }

    #[test]
    fn mult_examples() {
        let s = g24();
        assert_eq!(mult(&s, Mode::Quantum, "s[1,0]*s[2,1]").unwrap().text, "s[2,2] + q\n");
        assert_eq!(mult(&s, Mode::Classical, "s[1,0]*s[2,1]").unwrap().text, "s[2,2]\n");
        assert_eq!(mult(&s, Mode::Quantum, "s[0,0]*s[1,0]").unwrap().text, "s[1,0]\n");
        assert!(matches!(mult(&s, Mode::Quantum, "s[3,1]"), Err(CliError::Parse { .. })));
    }

    #[test]
    fn gw_examples() {
        let s = g24();
        let ins = parse_insertions(&s, &["s[2,2]^3".to_string()]).unwrap();
        let out = gw(&s, &ins, Some(2), Method::Both).unwrap();
        assert_eq!(out.text, "pieri=1 vi=1\n");
        assert_eq!(out.code, EXIT_OK);

        let ins = parse_insertions(&s, &["1,0 [1,0] s[1,0] s[1]".to_string()]).unwrap();
        assert_eq!(ins.len(), 4);
        assert_eq!(gw(&s, &ins, Some(0), Method::Pieri).unwrap().text, "2\n");
        assert_eq!(gw(&s, &ins, None, Method::Vi).unwrap().text, "2\n");

        let ins = parse_insertions(&s, &["s[1,0]^2".to_string()]).unwrap();
        let out = gw(&s, &ins, Some(1), Method::Pieri).unwrap();
        assert!(out.text.starts_with("0\nnote: "), "{}", out.text);
        let out = gw(&s, &ins, None, Method::Both).unwrap();
        assert!(out.text.starts_with("pieri=0 vi=0\nnote: "), "{}", out.text);

        assert!(gw(&s, &ins[..1], Some(0), Method::Pieri).is_err());
        assert!(parse_insertions(&s, &["s[3]".to_string()]).is_err());
        assert!(parse_insertions(&s, &["s[x]".to_string()]).is_err());
    }

    #[test]
    fn table_examples() {
        let s = g24();
        let out = table(&s, Mode::Quantum, MAX_TABLE_BASIS).unwrap();
        assert_eq!(out.text.lines().count(), 21);
        assert!(out.text.contains("s[2,2]*s[2,2] = q^2\n"));
        let p1 = Shape::new(2, 1).unwrap();
        assert!(table(&p1, Mode::Quantum, MAX_TABLE_BASIS).unwrap().text.contains("s[1]*s[1] = q\n"));
        let big = Shape::new(6, 2).unwrap();
        assert!(matches!(table(&big, Mode::Quantum, 10), Err(CliError::Usage(_))));
    }

    #[test]
    fn verify_small_shapes() {
        for (n, k) in [(4, 2), (2, 1), (5, 3)] {
            let out = verify(&Shape::new(n, k).unwrap()).unwrap();
            assert_eq!(out.code, EXIT_OK, "{}", out.text);
        }
    }

    #[test]
    fn vi_command_reports_residual() {
        let s = g24();
        let ins = parse_insertions(&s, &["s[1,0]^8".to_string()]).unwrap();
        let out = vi(&s, &ins, Some(1)).unwrap();
        assert!(out.text.starts_with("value=8 "), "{}", out.text);
        assert_eq!(out.code, EXIT_OK);
    }
}
