"""Halphen, Chazy and Darboux-Halphen systems with their monodromy evolving deformation Lax pairs."""

from .errors import (BlowUp, ConfigError, ConvergenceFailure, CoincidentPositions, DegenerateInitialData,
                     DimensionMismatch, DomainError, HalphenError, PathThroughSingularity, PoleError,
                     SingularEvaluation, StationaryRatio, TrajectoryTooCoarse)
from .numerics import PathSpec, Trajectory, adjugate, commutator, fd_derivative, integrate_path
from .flows import (AlphaParams, HalphenABC, ach_field, chazy_field, dh9_field, dhv_field,
                    hal1_field, hal2_field)
from .closed_form import Mobius, chazy_theta_solution, hal1_theta_solution, hal2_hypergeom_solution
from .med import MedParams, ResidualReport

__version__ = "0.1.0"

__all__ = [
    "BlowUp", "ConfigError", "ConvergenceFailure", "CoincidentPositions", "DegenerateInitialData",
    "DimensionMismatch", "DomainError", "HalphenError", "PathThroughSingularity", "PoleError",
    "SingularEvaluation", "StationaryRatio", "TrajectoryTooCoarse",
    "PathSpec", "Trajectory", "adjugate", "commutator", "fd_derivative", "integrate_path",
    "AlphaParams", "HalphenABC", "ach_field", "chazy_field", "dh9_field", "dhv_field",
    "hal1_field", "hal2_field",
    "Mobius", "chazy_theta_solution", "hal1_theta_solution", "hal2_hypergeom_solution",
    "MedParams", "ResidualReport",
]
