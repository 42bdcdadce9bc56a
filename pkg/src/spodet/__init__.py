"""Symplectic/orthogonal Schur-type measures: characters, correlation kernels,
Toeplitz+Hankel identities and Airy edge limits."""

__version__ = "0.1.0"

from .partitions import HalfInt, Partition, enumerate_partitions, frobenius, in_class
from .specialization import Specialization, from_variables, omega_dual, parse_spec, plancherel, zero
from .characters import orthogonal, schur, skew_schur, symplectic
from .measures import MeasureSpec, normalization, p_o, p_sp
from .kernel import KernelSpec, fredholm_det_discrete, kernel_matrix
from .toeplitz_hankel import Symbol, th_det
from .airy import airy_ai, airy_ai_prime
from .continuum import ContinuumKernel, NystromConfig, fredholm_det_continuum
from .edge import edge_convergence_report, edge_gap_discrete
