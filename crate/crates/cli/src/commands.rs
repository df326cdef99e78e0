use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use zzsynth::formats::{parse_coupling_graph, parse_phase_vector, parse_truth_table, parse_u2, parse_zpolynomial};
use zzsynth::targets::{diagonal_matrix, grover_iterate_matrix, oracle_matrix, walsh_hadamard_matrix};
use zzsynth::{
    average_hamiltonian, build_grover_iteration, build_refocus_schedule, build_walsh_hadamard, classify_subspace,
    coherence_orders, compile_conditional_phase, compile_controlled_u, compile_deutsch_jozsa, compile_phases,
    distance_up_to_phase, exponential_of_zpoly, group_spins, ion_pulse_params, parse_operator, sequence_unitary,
    universal_gate_matrix, zpoly_to_sequence, Angle, DenseUnitary, GateSequence, IonPulseParams, PhaseVector, QubitSet,
};

use crate::angle::AngleArg;
use crate::{Algorithm, CliError, SourceArgs};

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads and parses an input file; every failure here is an input error.
fn load<V>(path: &Path, parse: impl FnOnce(&str) -> zzsynth::Result<V>) -> Result<V, CliError> {
    parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_or_print(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn require<V>(value: Option<V>, flag: &str, what: &str) -> Result<V, CliError> {
    value.ok_or_else(|| CliError::Input(format!("{what} needs {flag}")))
}

fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Grover => "grover",
        Algorithm::WalshHadamard => "walsh-hadamard",
        Algorithm::ConditionalPhase => "conditional-phase",
    }
}

fn needs_marked(a: Algorithm) -> bool {
    matches!(a, Algorithm::Grover | Algorithm::ConditionalPhase)
}

pub fn compile(src: &SourceArgs, output: Option<&PathBuf>) -> Result<u8, CliError> {
    let seq: GateSequence<f64> = if let Some(p) = &src.kind.phases {
        compile_phases(&load(p, parse_phase_vector)?)?
    } else if let Some(p) = &src.kind.zpoly {
        zpoly_to_sequence(&load(p, parse_zpolynomial)?)?
    } else if let Some(p) = &src.kind.truth_table {
        compile_deutsch_jozsa(&load(p, parse_truth_table)?)?
    } else if let Some(p) = &src.kind.cu {
        let u = load(p, |t| parse_u2(t, src.unitarity_tol))?;
        compile_controlled_u(&u, require(src.qubits, "--qubits", "--cu")?)?
    } else {
        let a = require(src.kind.algorithm, "a source", "compile")?;
        let name = algorithm_name(a);
        let n = require(src.qubits, "--qubits", name)?;
        match a {
            Algorithm::Grover => build_grover_iteration(n, require(src.marked, "--marked", name)?)?,
            Algorithm::WalshHadamard => build_walsh_hadamard(n)?,
            Algorithm::ConditionalPhase => {
                compile_conditional_phase(n, require(src.marked, "--marked", name)?, src.phase.radians())?
            }
        }
    };
    write_or_print(output, &seq.to_text())?;
    let counts = format!("counts: {}", seq.counts());
    if output.is_some() {
        println!("{counts}");
    } else {
        eprintln!("{counts}");
    }
    Ok(0)
}

fn target(src: &SourceArgs, seq_qubits: usize) -> Result<DenseUnitary<f64>, CliError> {
    let n = src.qubits.unwrap_or(seq_qubits);
    Ok(if let Some(p) = &src.kind.phases {
        diagonal_matrix(&load(p, parse_phase_vector)?)?
    } else if let Some(p) = &src.kind.zpoly {
        exponential_of_zpoly(&load(p, parse_zpolynomial)?)?
    } else if let Some(p) = &src.kind.truth_table {
        oracle_matrix(&load(p, parse_truth_table)?)?
    } else if let Some(p) = &src.kind.cu {
        universal_gate_matrix(&load(p, |t| parse_u2(t, src.unitarity_tol))?, n)?
    } else {
        let a = require(src.kind.algorithm, "a target", "verify")?;
        let name = algorithm_name(a);
        if needs_marked(a) && src.marked.is_none() {
            return Err(CliError::Input(format!("{name} needs --marked")));
        }
        let marked = src.marked.unwrap_or(0);
        match a {
            Algorithm::Grover => grover_iterate_matrix(n, marked)?,
            Algorithm::WalshHadamard => walsh_hadamard_matrix(n)?,
            Algorithm::ConditionalPhase => diagonal_matrix(&PhaseVector::single(n, marked, src.phase.radians())?)?,
        }
    })
}

pub fn verify(seq_path: &Path, src: &SourceArgs, tol: f64) -> Result<u8, CliError> {
    let seq: GateSequence<f64> = load(seq_path, GateSequence::parse_text)?;
    let want = target(src, seq.n_qubits())?;
    let got = sequence_unitary(&seq)?;
    let d = distance_up_to_phase(&got, &want)?;
    println!("qubits: {}", seq.n_qubits());
    println!("gates: {}", seq.counts());
    println!("distance_up_to_phase: {d:.6e}");
    if d < tol {
        println!("PASS (tol {tol:e})");
        Ok(0)
    } else {
        println!("FAIL (tol {tol:e})");
        Ok(1)
    }
}

fn term_label(s: &QubitSet) -> String {
    let ops: Vec<String> = s.iter().map(|k| format!("I{}z", k + 1)).collect();
    match s.len() {
        1 => ops[0].clone(),
        m => format!("{} {}", 1u64 << (m - 1), ops.join(" ")),
    }
}

pub fn schedule(graph: &Path, pair: (usize, usize), tau: f64, output: Option<&PathBuf>) -> Result<u8, CliError> {
    let g = load(graph, parse_coupling_graph)?;
    let n = g.n_spins();
    let (k1, l1) = pair;
    for s in [k1, l1] {
        if s == 0 || s > n {
            return Err(CliError::Semantic(zzsynth::Error::QubitOutOfRange { index: s, n }));
        }
    }
    let (k, l) = (k1 - 1, l1 - 1);
    let sched = build_refocus_schedule(&g, k, l, tau)?;
    let groups = group_spins(&g, k, l)?;
    let h = average_hamiltonian(&sched, &g)?;
    write_or_print(output, &sched.to_text())?;

    let mut rows: Vec<QubitSet> = (0..n).map(|s| QubitSet::from_indices(&[s])).collect::<Result<_, _>>()?;
    for ((a, b), _) in g.couplings() {
        rows.push(QubitSet::from_indices(&[a, b])?);
    }
    for (s, _) in h.terms() {
        if !rows.contains(&s) {
            rows.push(s);
        }
    }
    let mut report = String::new();
    let _ = writeln!(report, "pair: {k1}-{l1} (J = {} Hz)", g.coupling(k, l));
    let _ = writeln!(report, "schedule: SE{}  segments: {}", groups.groups.len() + 1, sched.segments().len());
    let _ = writeln!(report, "total duration: {:.6e} s", sched.total_duration());
    let _ = writeln!(report, "average Hamiltonian (accumulated phase, rad):");
    for s in &rows {
        let _ = writeln!(report, "  {:<12} {:+.6e}", term_label(s), h.coeff(s));
    }
    let surviving: Vec<String> = h.terms().map(|(s, _)| term_label(&s)).collect();
    let _ = writeln!(report, "surviving terms: {} [{}]", surviving.len(), surviving.join(", "));
    let ok = h.num_terms() == 1 && h.coeff_of(&[k.min(l), k.max(l)]) != 0.0;
    let _ = writeln!(report, "{}", if ok { "PASS" } else { "FAIL" });
    if output.is_some() {
        print!("{report}");
    } else {
        eprint!("{report}");
    }
    Ok(if ok { 0 } else { 1 })
}

fn report_ion<A: Angle>(p: &IonPulseParams<A>) -> u8 {
    println!("{p}");
    println!("phi1 - phi2 = {}", p.phase_difference().wrap());
    let ok = p.satisfies_constraints();
    let verdict = if ok { "hold" } else { "violated" };
    println!("phi0 - phi3 = pi + 2(phi1 - phi2) and theta1 - theta2 = pi + 4(phi1 - phi2) mod 2pi: {verdict}");
    u8::from(!ok)
}

pub fn ion(lambda: AngleArg, phi2: AngleArg) -> Result<u8, CliError> {
    Ok(match (lambda, phi2) {
        (AngleArg::Exact(l), AngleArg::Exact(p)) => {
            println!("lambda = {l} (exact)");
            report_ion(&ion_pulse_params(l, p))
        }
        (l, p) => {
            println!("lambda = {}", l.radians());
            report_ion(&ion_pulse_params(l.radians(), p.radians()))
        }
    })
}

pub fn classify(operator: &str, spins: Option<usize>) -> Result<u8, CliError> {
    let op = parse_operator::<f64>(operator, spins).map_err(|e| CliError::Input(e.to_string()))?;
    println!("operator: {op}");
    println!("{}", coherence_orders(&op));
    println!("subspace: {}", classify_subspace(&op));
    Ok(0)
}
