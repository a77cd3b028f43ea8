"""Mark distribution families.

Each family describes the state-dependent distribution of the marks observed
at event times. Families plug into the likelihood through a uniform
interface: log-density, sampling, a natural<->working parameter transform,
and the parameter count. Only the mean of a family may depend on covariates
(log link); dispersion and zero-probability parameters are state constants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit, gammaln, logit

from .errors import ValidationError


@dataclass(frozen=True)
class ZeroAdjustedGamma:
    """Mixed distribution: an atom at zero plus a gamma density on y > 0.

    Parameters
    ----------
    pi0 : float
        Probability of an exact zero, in (0, 1).
    mu : float
        Mean of the positive (gamma) part, > 0.
    sigma : float
        Standard deviation of the positive part, > 0.
    """

    pi0: float
    mu: float
    sigma: float

    def __post_init__(self):
        if not (0.0 < self.pi0 < 1.0):
            raise ValidationError(f"pi0 must lie in (0, 1), got {self.pi0}", field="pi0")
        if not (self.mu > 0.0 and np.isfinite(self.mu)):
            raise ValidationError(f"mu must be positive, got {self.mu}", field="mu")
        if not (self.sigma > 0.0 and np.isfinite(self.sigma)):
            raise ValidationError(f"sigma must be positive, got {self.sigma}", field="sigma")


def moments_to_shape_rate(mu: float, sigma: float) -> tuple[float, float]:
    """Convert a gamma's (mean, sd) to (shape, rate). Bijective on mu, sigma > 0."""
    if np.any(np.asarray(mu) <= 0.0) or np.any(np.asarray(sigma) <= 0.0):
        raise ValidationError("mu and sigma must be positive", field="mu/sigma")
    var = np.square(sigma)
    return mu * mu / var, mu / var


def shape_rate_to_moments(shape: float, rate: float) -> tuple[float, float]:
    """Inverse of :func:`moments_to_shape_rate`."""
    return shape / rate, np.sqrt(shape) / rate


def zag_logdensity(y, p: ZeroAdjustedGamma):
    """Log of the mixed density: log pi0 at y == 0, hurdle-gamma log-density on y > 0.

    Accepts a scalar or array ``y``; negative values raise a domain error.
    """
    y = np.asarray(y, dtype=float)
    if np.any(y < 0.0):
        raise ValidationError("marks must be nonnegative", field="y")
    shape, rate = moments_to_shape_rate(p.mu, p.sigma)
    out = np.full(y.shape, np.log(p.pi0))
    pos = y > 0.0
    if np.any(pos):
        yp = y[pos]
        out[pos] = (
            np.log1p(-p.pi0)
            + shape * np.log(rate)
            - gammaln(shape)
            + (shape - 1.0) * np.log(yp)
            - rate * yp
        )
    return out if out.ndim else float(out)


def zag_sample(p: ZeroAdjustedGamma, rng: np.random.Generator, size=None):
    """Draw from the zero-adjusted gamma: 0 with probability pi0, else a gamma draw."""
    shape, rate = moments_to_shape_rate(p.mu, p.sigma)
    if size is None:
        if rng.random() < p.pi0:
            return 0.0
        return float(rng.gamma(shape, 1.0 / rate))
    zeros = rng.random(size) < p.pi0
    draws = rng.gamma(shape, 1.0 / rate, size=size)
    draws[zeros] = 0.0
    return draws


class ZeroAdjustedGammaFamily:
    """Zero-adjusted gamma mark family with an optional log-linear mean formula.

    Per-state natural parameter row layout (length ``3 + n_covariates``):
    ``[mu_baseline, *mu_coefficients, sigma, pi0]``. The mean at covariates z
    is ``mu_baseline * exp(coef . z)``; sigma and pi0 are covariate-free.
    """

    name = "zero-adjusted-gamma"

    def n_params(self, n_covariates: int) -> int:
        return 3 + n_covariates

    def param_names(self, formula: tuple[str, ...]) -> list[str]:
        return ["mu", *(f"mu:{c}" for c in formula), "sigma", "pi0"]

    def validate(self, row: np.ndarray, formula: tuple[str, ...]) -> None:
        names = self.param_names(formula)
        if row.shape != (len(names),):
            raise ValidationError(
                f"mark parameter row has length {row.size}, expected {len(names)}",
                field="mark_params",
            )
        mu, sigma, pi0 = row[0], row[-2], row[-1]
        if not (np.isfinite(mu) and mu > 0.0):
            raise ValidationError(f"mu must be positive, got {mu}", field="mu")
        if not (np.isfinite(sigma) and sigma > 0.0):
            raise ValidationError(f"sigma must be positive, got {sigma}", field="sigma")
        if not (0.0 < pi0 < 1.0):
            raise ValidationError(f"pi0 must lie in (0, 1), got {pi0}", field="pi0")
        if not np.all(np.isfinite(row)):
            raise ValidationError("mark coefficients must be finite", field="mark_params")

    def to_working(self, row: np.ndarray) -> np.ndarray:
        out = row.copy()
        out[0] = np.log(row[0])
        out[-2] = np.log(row[-2])
        out[-1] = logit(row[-1])
        return out

    def to_natural(self, row: np.ndarray) -> np.ndarray:
        out = row.copy()
        out[0] = np.exp(row[0])
        out[-2] = np.exp(row[-2])
        out[-1] = expit(row[-1])
        return out

    def mean_at(self, row: np.ndarray, z: np.ndarray | None):
        """Gamma mean at covariates z (vectorized over rows of z)."""
        base = row[0]
        coefs = row[1:-2]
        if coefs.size == 0 or z is None:
            return base
        return base * np.exp(np.asarray(z) @ coefs)

    def distribution_at(self, row: np.ndarray, z: np.ndarray | None) -> ZeroAdjustedGamma:
        return ZeroAdjustedGamma(pi0=float(row[-1]), mu=float(self.mean_at(row, z)),
                                 sigma=float(row[-2]))

    def logdensity(self, y, row: np.ndarray, z: np.ndarray | None = None):
        """Vectorized log-density; ``z`` holds one covariate row per element of y."""
        y = np.asarray(y, dtype=float)
        if np.any(y < 0.0):
            raise ValidationError("marks must be nonnegative", field="y")
        mu = np.broadcast_to(np.asarray(self.mean_at(row, z), dtype=float), y.shape)
        sigma, pi0 = row[-2], row[-1]
        shape, rate = moments_to_shape_rate(mu, sigma)
        out = np.full(y.shape, np.log(pi0))
        pos = y > 0.0
        if np.any(pos):
            yp, sh, rt = y[pos], shape[pos], rate[pos]
            out[pos] = (
                np.log1p(-pi0)
                + sh * np.log(rt)
                - gammaln(sh)
                + (sh - 1.0) * np.log(yp)
                - rt * yp
            )
        return out if out.ndim else float(out)

    def sample(self, row: np.ndarray, z: np.ndarray | None, rng: np.random.Generator):
        return zag_sample(self.distribution_at(row, z), rng)

    def init_row(self, positive_marks: np.ndarray, zero_fraction: float,
                 n_covariates: int) -> np.ndarray:
        """Moment-based starting values; covariate coefficients start at zero."""
        if positive_marks.size:
            mu = float(np.mean(positive_marks))
            sigma = float(np.std(positive_marks))
        else:
            mu, sigma = 1.0, 1.0
        mu = max(mu, 1e-8)
        sigma = max(sigma, 0.25 * mu)
        pi0 = float(np.clip(zero_fraction, 0.02, 0.98))
        return np.array([mu, *np.zeros(n_covariates), sigma, pi0])


MARK_FAMILIES = {ZeroAdjustedGammaFamily.name: ZeroAdjustedGammaFamily()}


def get_family(name: str) -> ZeroAdjustedGammaFamily:
    try:
        return MARK_FAMILIES[name]
    except KeyError:
        raise ValidationError(
            f"unknown mark family {name!r}; available: {sorted(MARK_FAMILIES)}",
            field="mark_family",
        ) from None
