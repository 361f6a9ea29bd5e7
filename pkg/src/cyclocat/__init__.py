"""Exact computations with bigraded modules over H_n (x) H_m and their stable categories."""

from importlib import resources

from cyclocat.arith import CyclotomicField, CyclotomicScalar, IntPolynomial, cyclotomic_polynomial
from cyclocat.kernels import BACKEND
from cyclocat.modules import CYCLIC, Z2, GradedModule, GradingScheme, ModuleMorphism

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CYCLIC",
    "CyclotomicField",
    "CyclotomicScalar",
    "GradedModule",
    "GradingScheme",
    "IntPolynomial",
    "ModuleMorphism",
    "Z2",
    "cyclotomic_polynomial",
    "data_path",
]


def data_path(name):
    """Path of a shipped data file (counterexample, free and simple modules, factorization fixture)."""
    return str(resources.files("cyclocat") / "data" / name)
