"""Exponential growth systems and the production functions they generate.

The central object is a diagonal linear system for labor L, capital K and
output Y,

    dL/dt = b1 * L,   dK/dt = b2 * K,   dY/dt = b3 * Y,

whose closed-form trajectories are L(t) = L0 * exp(b1*t) and so on.  The
production-function types collected here (power laws, Cobb-Douglas, a
generalized CES family and the textbook CES form) are the shapes that arise
as time-independent invariants of that system; `prodfn.invariants` does the
deriving, this module only represents and evaluates.

All types are immutable values and all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

Scalarish = Union[float, np.ndarray]


class ProdfnError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ProdfnError):
    """An argument lies outside the mathematical domain of an operation."""


class Factor(Enum):
    """Which input a single-input production function reads."""

    LABOR = "labor"
    CAPITAL = "capital"


def _check_finite(obj, fields):
    for name in fields:
        v = getattr(obj, name)
        if not math.isfinite(v):
            raise DomainError(f"{type(obj).__name__}.{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class ExponentialModel:
    """Parameters of the exponential growth system for (L, K, Y).

    Growth rates are per year.  Initial levels are stored as natural logs
    (ln_L0, ln_K0, ln_Y0) so that fitted intercepts round-trip without loss;
    finiteness of the logs guarantees strictly positive initial levels.
    Time t is measured in years since `base_year`.
    """

    b1: float
    b2: float
    b3: float
    ln_L0: float
    ln_K0: float
    ln_Y0: float
    base_year: int = 0

    def __post_init__(self):
        _check_finite(self, ("b1", "b2", "b3", "ln_L0", "ln_K0", "ln_Y0"))

    @property
    def L0(self) -> float:
        return math.exp(self.ln_L0)

    @property
    def K0(self) -> float:
        return math.exp(self.ln_K0)

    @property
    def Y0(self) -> float:
        return math.exp(self.ln_Y0)


@dataclass(frozen=True)
class FitDiagnostics:
    """Per-variable statistics of a log-linear least-squares fit."""

    slope: float
    intercept: float
    r_squared: float
    residual_max_abs: float
    n_points: int

    def __post_init__(self):
        if not 0.0 <= self.r_squared <= 1.0:
            raise DomainError(f"r_squared must lie in [0, 1], got {self.r_squared!r}")
        if self.n_points < 2:
            raise DomainError(f"n_points must be >= 2, got {self.n_points!r}")


@dataclass(frozen=True)
class PowerLaw:
    """Single-input power law Y = coeff * X**exponent, X being L or K."""

    coeff: float
    exponent: float
    input: Factor

    def __post_init__(self):
        _check_finite(self, ("coeff", "exponent"))
        if self.coeff <= 0.0:
            raise DomainError(f"PowerLaw.coeff must be positive, got {self.coeff!r}")


@dataclass(frozen=True)
class CobbDouglas:
    """Cobb-Douglas form Y = A * L**alpha * K**beta.

    alpha + beta is not constrained to 1; constant returns to scale is the
    special case alpha + beta == 1.
    """

    A: float
    alpha: float
    beta: float

    def __post_init__(self):
        _check_finite(self, ("A", "alpha", "beta"))
        if self.A <= 0.0:
            raise DomainError(f"CobbDouglas.A must be positive, got {self.A!r}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"CobbDouglas.alpha must lie in (0, 1), got {self.alpha!r}")


@dataclass(frozen=True)
class GeneralizedCES:
    """CES-like form Y = (cK * K**eK + cL * L**eL) ** outer.

    Unlike the textbook CES, the two inner exponents may differ.  `alpha` is
    the share parameter the coefficients were built from; it is carried for
    reporting and plays no role in evaluation (cK and cL already absorb it).
    """

    cK: float
    cL: float
    alpha: float
    eK: float
    eL: float
    outer: float

    def __post_init__(self):
        _check_finite(self, ("cK", "cL", "alpha", "eK", "eL", "outer"))
        if self.cK <= 0.0 or self.cL <= 0.0:
            raise DomainError("GeneralizedCES coefficients cK, cL must be positive")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"GeneralizedCES.alpha must lie in (0, 1), got {self.alpha!r}")


@dataclass(frozen=True)
class CES:
    """Constant-elasticity-of-substitution form.

    Y = A * (alpha * K**p + (1 - alpha) * L**p) ** (v/p)

    v is the degree of homogeneity (returns to scale); the elasticity of
    substitution is sigma = 1 / (1 - p), undefined at p = 1.
    """

    A: float
    alpha: float
    p: float
    v: float

    def __post_init__(self):
        _check_finite(self, ("A", "alpha", "p", "v"))
        if self.A <= 0.0:
            raise DomainError(f"CES.A must be positive, got {self.A!r}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"CES.alpha must lie in (0, 1), got {self.alpha!r}")
        if self.p == 0.0:
            raise DomainError("CES.p must be nonzero")

    @property
    def sigma(self) -> float | None:
        """Elasticity of substitution, or None at p = 1 where it is undefined."""
        if self.p == 1.0:
            return None
        return 1.0 / (1.0 - self.p)


ProductionFunction = Union[PowerLaw, CobbDouglas, GeneralizedCES, CES]


def trajectory(model: ExponentialModel, t: Scalarish) -> tuple[Scalarish, Scalarish, Scalarish]:
    """Closed-form trajectory (L(t), K(t), Y(t)) of the exponential system.

    t is years since model.base_year, scalar or array (applied elementwise).
    Raises DomainError when an exponential overflows, naming the variable and
    the first offending t.
    """
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    if not np.all(np.isfinite(t_arr)):
        raise DomainError("t must be finite")
    out = []
    for name, b, ln0 in (
        ("L", model.b1, model.ln_L0),
        ("K", model.b2, model.ln_K0),
        ("Y", model.b3, model.ln_Y0),
    ):
        with np.errstate(over="ignore"):
            x = np.exp(ln0 + b * t_arr)
        if not np.all(np.isfinite(x)):
            bad = float(np.atleast_1d(t_arr)[~np.isfinite(np.atleast_1d(x))][0])
            raise DomainError(f"{name}(t) overflows at t = {bad}")
        out.append(float(x) if scalar else x)
    return out[0], out[1], out[2]


def evaluate(fn: ProductionFunction, L: Scalarish, K: Scalarish) -> Scalarish:
    """Value of a production function at inputs (L, K), elementwise.

    Both inputs must be strictly positive.  A PowerLaw reads only its
    designated input but the positivity contract applies to both.  The CES
    family is evaluated through logs so that large inner exponents (p or
    1/b of order 100) do not overflow intermediates.
    """
    L_arr = np.asarray(L, dtype=float)
    K_arr = np.asarray(K, dtype=float)
    scalar = L_arr.ndim == 0 and K_arr.ndim == 0
    if not np.all(L_arr > 0.0):
        raise DomainError("L must be strictly positive")
    if not np.all(K_arr > 0.0):
        raise DomainError("K must be strictly positive")

    if isinstance(fn, PowerLaw):
        x = L_arr if fn.input is Factor.LABOR else K_arr
        y = fn.coeff * x**fn.exponent
    elif isinstance(fn, CobbDouglas):
        y = fn.A * L_arr**fn.alpha * K_arr**fn.beta
    elif isinstance(fn, GeneralizedCES):
        log_sum = np.logaddexp(
            math.log(fn.cK) + fn.eK * np.log(K_arr),
            math.log(fn.cL) + fn.eL * np.log(L_arr),
        )
        y = np.exp(fn.outer * log_sum)
    elif isinstance(fn, CES):
        log_sum = np.logaddexp(
            math.log(fn.alpha) + fn.p * np.log(K_arr),
            math.log1p(-fn.alpha) + fn.p * np.log(L_arr),
        )
        y = fn.A * np.exp((fn.v / fn.p) * log_sum)
    else:
        raise TypeError(f"not a production function: {fn!r}")
    return float(y) if scalar else y
