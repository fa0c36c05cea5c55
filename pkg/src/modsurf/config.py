"""Shared tolerance settings and error types.

Every numerical contract in the package (relative error of the special
functions, functional-equation residuals, quadrature targets, ...) reads
its threshold from the single `Tolerances` record below so that the
library, the CLI and the acceptance suite cannot drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # target relative error of gamma/zeta/hurwitz on their stated domains
    special_rel: float = 1e-10
    # |Lambda(s, delta) - Lambda(1-s, delta)| on the test grids
    functional_eq: float = 1e-6
    # residual of the Kloosterman-sum / rho(c,a) expansion
    kloosterman_identity: float = 1e-9
    # absolute error of adaptive quadrature (density integrals, kernels)
    quadrature_abs: float = 1e-6
    # unit-mass normalisation of smoothing kernels
    kernel_mass: float = 1e-8
    # imaginary part of sums that are real by construction
    real_imag: float = 1e-12
    # damping required of the exponentially weighted spectral sum:
    # exp(-complete_to / T) must fall below this
    spectral_damping: float = 1e-8
    # cross-checks between independent evaluation routes
    cross_check: float = 1e-9


DEFAULT_TOL = Tolerances()


def with_overrides(**kwargs) -> Tolerances:
    """Return a copy of the default tolerances with selected fields replaced."""
    return replace(DEFAULT_TOL, **kwargs)


class PoleError(ArithmeticError):
    """Evaluation requested at a pole of the function."""


class DomainError(ValueError):
    """Input outside the supported domain of an operation."""


class CompletenessError(ValueError):
    """A spectral computation would silently depend on eigenvalues beyond
    the completeness height of the loaded table."""
