//! Exact lowering of diagonal unitaries, controlled u(2) gates and small
//! quantum algorithms to one-qubit rotations plus the two-qubit diagonal gate
//! `ZZ(k, l, λ) = exp(-iλ · 2 I_kz I_lz)`, with a dense simulator to check
//! every result and planners for realizing `ZZ` on NMR and ion hardware.
//!
//! Everything numeric is generic over [`Real`] (`f32`, `f64`); laser-phase
//! solving is generic over [`Angle`], which also covers the exact
//! [`PiFraction`]. The `*64` aliases fix the scalar to `f64`.
//!
//! ```
//! use zzsynth::{compile_phases, distance_up_to_phase, sequence_unitary, targets, PhaseVector64};
//!
//! let pv = PhaseVector64::new(2, vec![0.0, 0.0, 0.0, std::f64::consts::PI]).unwrap();
//! let seq = compile_phases(&pv).unwrap();
//! let got = sequence_unitary(&seq).unwrap();
//! let want = targets::diagonal_matrix(&pv).unwrap();
//! assert!(distance_up_to_phase(&got, &want).unwrap() < 1e-10);
//! ```

pub mod compiler;
pub mod dense;
pub mod diag;
pub mod error;
pub mod formats;
pub mod gate;
pub mod pauli;
pub mod pulse;
pub mod scalar;
pub mod simulator;
pub mod targets;

pub use compiler::{
    build_grover_iteration, build_walsh_hadamard, compile_conditional_phase, compile_controlled_u,
    compile_deutsch_jozsa, compile_phases, decompose_u2, TruthTable, U2Matrix, U2Params,
};
pub use diag::{
    fwht, phases_to_zpoly, reduce_zstring, zpoly_to_phases, zpoly_to_sequence, PhaseVector, QubitSet, ZPolynomial,
};
pub use error::{Error, Result};
pub use gate::{gate_counts, Gate, GateCounts, GateSequence};
pub use pauli::{
    classify_subspace, coherence_orders, commutator, conjugate_bch, parse_operator, Axis, CoherenceProfile,
    PauliPolynomial, ProductOperator, Subspace,
};
pub use pulse::{
    average_hamiltonian, build_refocus_schedule, group_spins, ion_pulse_params, relay_sequence, relay_zz_gate,
    CouplingGraph, IonPulseParams, PulseSchedule, Segment, SpinGroups,
};
pub use scalar::{Angle, PiFraction, Real};
pub use simulator::{
    apply_gate, distance_up_to_phase, exponential_of_zpoly, sequence_unitary, sequence_unitary_capped, simulate_grover,
    DenseUnitary, StateVector, DENSE_QUBIT_CAP,
};
pub use targets::universal_gate_matrix;

pub type PhaseVector64 = PhaseVector<f64>;
pub type ZPolynomial64 = ZPolynomial<f64>;
pub type Gate64 = Gate<f64>;
pub type GateSequence64 = GateSequence<f64>;
pub type U2Matrix64 = U2Matrix<f64>;
pub type U2Params64 = U2Params<f64>;
pub type ProductOperator64 = ProductOperator<f64>;
pub type PauliPolynomial64 = PauliPolynomial<f64>;
pub type StateVector64 = StateVector<f64>;
pub type DenseUnitary64 = DenseUnitary<f64>;
pub type CouplingGraph64 = CouplingGraph<f64>;
pub type PulseSchedule64 = PulseSchedule<f64>;
pub type IonPulseParams64 = IonPulseParams<f64>;
pub type IonPulseParamsExact = IonPulseParams<PiFraction>;
