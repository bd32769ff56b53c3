"""Simulator and analysis toolkit for reservoir-assisted (dissipative)
Grover search: exact Hamiltonian evolution, Trotterized gate circuit,
ladder-decay analytics, parameter selection, and a fixed-point-search
robustness baseline."""

__version__ = "0.1.0"

from .bj import (BJParams, bj_amplitude, bj_fidelity_two_windows, laguerre_gen,
                 map_to_bj, residual_bound, residual_gamma)
from .fixed_point import (FixedPointPlan, chebyshev_t, delta_for_length,
                          fp_angles, fp_length, fp_mean_deviation,
                          run_fixed_point)
from .hamiltonians import (BJLadderSpec, Propagator, build_dissipative,
                           build_finite_bj, build_standard_grover, diagonalize,
                           evolve, reservoir_energy, source_amplitude_trace,
                           trace_continuous)
from .parameters import (ParamChoice, check_criteria, choose_delta_known,
                         choose_delta_unknown, decay_rate, standard_grover_tmax)
from .search import (FidelityTrace, ReservoirSpec, SearchProblem, basis_index,
                     fourier_solution_state, success_probability, uniform_state)
from .trotter import (NoiseSpec, ancilla_population, apply_u_plus, apply_u_s,
                      mean_deviation_trace, run_gate_circuit, run_trotter)
