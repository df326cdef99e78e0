//! JSON input formats. Qubit and spin indices are 1-based on disk.
//!
//! ```text
//! phase vector    {"n": 2, "phases": [0, 0, 0, 3.14159]}
//! Z-polynomial    {"n": 2, "constant": 0.78, "terms": [{"qubits": [1, 2], "coeff": 1.57}]}
//! truth table     {"n": 3, "values": [0, 1, 1, 0, 1, 0, 0, 1]}
//! u(2) matrix     {"re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]}
//! coupling graph  {"n": 3, "shifts": [100, 200, 300], "couplings": [{"i": 1, "j": 2, "J": 12.5}]}
//! ```

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::compiler::{TruthTable, U2Matrix};
use crate::diag::{PhaseVector, QubitSet, ZPolynomial};
use crate::error::{Error, Result};
use crate::pulse::CouplingGraph;

fn from_json<'a, D: Deserialize<'a>>(text: &'a str) -> Result<D> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<S: Serialize>(value: &S) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn zero_based(k: usize, n: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::QubitOutOfRange { index: k, n });
    }
    Ok(k - 1)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhaseVectorFile {
    n: usize,
    phases: Vec<f64>,
}

pub fn parse_phase_vector(text: &str) -> Result<PhaseVector<f64>> {
    let f: PhaseVectorFile = from_json(text)?;
    PhaseVector::new(f.n, f.phases)
}

pub fn phase_vector_to_json(pv: &PhaseVector<f64>) -> String {
    to_json(&PhaseVectorFile { n: pv.n_qubits(), phases: pv.phases().to_vec() })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    qubits: Vec<usize>,
    coeff: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZPolynomialFile {
    n: usize,
    #[serde(default)]
    constant: f64,
    terms: Vec<TermFile>,
}

/// Repeated subsets accumulate.
pub fn parse_zpolynomial(text: &str) -> Result<ZPolynomial<f64>> {
    let f: ZPolynomialFile = from_json(text)?;
    let mut zp = ZPolynomial::new(f.n);
    if !f.constant.is_finite() {
        return Err(Error::NonFinite(0));
    }
    zp.set_constant(f.constant);
    for t in f.terms {
        let idx = t.qubits.iter().map(|&k| zero_based(k, f.n)).collect::<Result<Vec<_>>>()?;
        zp.add(QubitSet::from_indices(&idx)?, t.coeff)?;
    }
    Ok(zp)
}

pub fn zpolynomial_to_json(zp: &ZPolynomial<f64>) -> String {
    let terms = zp.terms().map(|(s, c)| TermFile { qubits: s.iter().map(|k| k + 1).collect(), coeff: c }).collect();
    to_json(&ZPolynomialFile { n: zp.n_qubits(), constant: zp.constant(), terms })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TruthTableFile {
    n: usize,
    values: Vec<u8>,
}

pub fn parse_truth_table(text: &str) -> Result<TruthTable> {
    let f: TruthTableFile = from_json(text)?;
    TruthTable::from_bits(f.n, &f.values)
}

pub fn truth_table_to_json(tt: &TruthTable) -> String {
    to_json(&TruthTableFile { n: tt.n_inputs(), values: tt.values().iter().map(|&v| v as u8).collect() })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct U2File {
    re: [[f64; 2]; 2],
    im: [[f64; 2]; 2],
}

/// Unitarity is checked to `tol`.
pub fn parse_u2(text: &str, tol: f64) -> Result<U2Matrix<f64>> {
    let f: U2File = from_json(text)?;
    let e = |i: usize, j: usize| Complex::new(f.re[i][j], f.im[i][j]);
    U2Matrix::with_tolerance([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]], tol)
}

pub fn u2_to_json(u: &U2Matrix<f64>) -> String {
    let m = u.entries();
    let re = [[m[0][0].re, m[0][1].re], [m[1][0].re, m[1][1].re]];
    let im = [[m[0][0].im, m[0][1].im], [m[1][0].im, m[1][1].im]];
    to_json(&U2File { re, im })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CouplingFile {
    i: usize,
    j: usize,
    #[serde(rename = "J")]
    j_hz: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CouplingGraphFile {
    n: usize,
    shifts: Vec<f64>,
    #[serde(default)]
    couplings: Vec<CouplingFile>,
}

/// A pair listed twice is an error.
pub fn parse_coupling_graph(text: &str) -> Result<CouplingGraph<f64>> {
    let f: CouplingGraphFile = from_json(text)?;
    if f.shifts.len() != f.n {
        return Err(Error::WrongLength { expected: f.n, got: f.shifts.len() });
    }
    let mut g = CouplingGraph::new(f.shifts)?;
    for c in f.couplings {
        let (i, j) = (zero_based(c.i, f.n)?, zero_based(c.j, f.n)?);
        if g.is_coupled(i, j) {
            return Err(Error::InvalidGraph(format!("coupling {}-{} listed twice", c.i, c.j)));
        }
        g.set_coupling(i, j, c.j_hz)?;
    }
    Ok(g)
}

pub fn coupling_graph_to_json(g: &CouplingGraph<f64>) -> String {
    let couplings = g.couplings().map(|((i, j), jv)| CouplingFile { i: i + 1, j: j + 1, j_hz: jv }).collect();
    to_json(&CouplingGraphFile { n: g.n_spins(), shifts: g.shifts().to_vec(), couplings })
}
