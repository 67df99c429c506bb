"""Parameter tuples, eigenvalue identities and the feasibility filter.

A strongly regular graph with parameters (v, k, lambda, mu) and smallest
eigenvalue -m has second eigenvalue sigma tied to the parameters by

    lambda - mu = sigma - m,      k - mu = sigma * m,
    v = 1 + k + k*(k - lambda - 1)/mu.

All checks below are exact integer arithmetic; nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "SrgParams",
    "Spectrum",
    "FeasibilityReport",
    "params_from_sigma_mu",
    "spectrum",
    "feasibility",
    "mu_bound_limit",
    "sigma_bound_limit",
]


@dataclass(frozen=True, slots=True)
class SrgParams:
    """Candidate strongly-regular-graph parameters (v, k, lambda, mu).

    Instances are plain value objects; use :meth:`sanity_violations` to
    check the arithmetic invariants (a tuple violating them cannot belong
    to any strongly regular graph).
    """

    v: int
    k: int
    lam: int
    mu: int

    def sanity_violations(self) -> list[str]:
        bad = []
        if not (self.v >= 1 and self.k >= 1 and self.lam >= 0 and self.mu >= 1):
            bad.append("v,k >= 1, lambda >= 0, mu >= 1 required")
            return bad
        if not self.v - 1 > self.k:
            bad.append("v - 1 > k fails (graph must be non-complete)")
        if not self.k >= self.mu:
            bad.append("k >= mu fails")
        if not self.k > self.lam:
            bad.append("k > lambda fails")
        if self.v * self.k % 2:
            bad.append("v*k odd (handshake)")
        rest = self.k * (self.k - self.lam - 1)
        if rest % self.mu:
            bad.append("mu does not divide k(k-lambda-1)")
        elif self.v != 1 + self.k + rest // self.mu:
            bad.append("v != 1 + k + k(k-lambda-1)/mu")
        return bad

    @property
    def is_sane(self) -> bool:
        return not self.sanity_violations()


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Integral spectrum k > sigma > -m with multiplicities 1, f, g."""

    v: int
    k: int
    sigma: int
    m: int
    f: int
    g: int

    def identity_violations(self) -> list[str]:
        bad = []
        if self.f + self.g + 1 != self.v:
            bad.append("f + g + 1 != v")
        if self.k + self.f * self.sigma - self.g * self.m != 0:
            bad.append("k + f*sigma - g*m != 0")
        if self.f * self.sigma**2 + self.g * self.m**2 + self.k**2 != self.v * self.k:
            bad.append("f*sigma^2 + g*m^2 + k^2 != v*k")
        return bad


@dataclass(frozen=True, slots=True)
class FeasibilityReport:
    """Outcome of every feasibility filter; feasible is their conjunction.

    When the spectrum is not integral the spectrum-dependent flags are
    vacuously True (they cannot be evaluated without integer sigma, f, g);
    ``feasible`` is then False through ``integral_spectrum``.
    """

    integral_spectrum: bool
    krein_ok: bool
    absolute_ok: bool
    mu_bound_ok: bool
    sigma_bound_ok: bool
    sanity_ok: bool

    @property
    def feasible(self) -> bool:
        return (
            self.integral_spectrum
            and self.krein_ok
            and self.absolute_ok
            and self.mu_bound_ok
            and self.sigma_bound_ok
            and self.sanity_ok
        )


def mu_bound_limit(m: int) -> int:
    """Largest mu compatible with smallest eigenvalue -m: m^3(2m-3)."""
    return m**3 * (2 * m - 3)


def sigma_bound_limit(m: int, mu: int) -> int:
    """Largest sigma outside the Latin-square/Steiner families:
    m(m-1)(mu+1)/2 - 1.  (m(m-1) is even, so the division is exact.)"""
    return m * (m - 1) * (mu + 1) // 2 - 1


def params_from_sigma_mu(m: int, sigma: int, mu: int) -> SrgParams | None:
    """Build (v, k, lambda, mu) from (m, sigma, mu) via the SRG identities.

    Returns None when v = 1 + k + k(k-lambda-1)/mu is not an integer
    (the tuple is simply rejected, this is not an error).
    """
    if m < 2 or sigma < 1 or mu < 1:
        raise ValueError("need m >= 2, sigma >= 1, mu >= 1")
    lam = sigma + mu - m
    if lam < 0:
        raise ValueError("sigma + mu - m < 0 gives negative lambda")
    k = sigma * m + mu
    rest = k * (k - lam - 1)
    if rest % mu:
        return None
    return SrgParams(1 + k + rest // mu, k, lam, mu)


def spectrum(params: SrgParams) -> Spectrum | None:
    """Integral spectrum of the parameter tuple, or None.

    sigma and -m are the roots of x^2 - (lambda-mu)x - (k-mu); the
    multiplicities follow from f + g = v - 1 and k + f*sigma - g*m = 0.
    None is returned when the discriminant is not a perfect square
    (conference-type tuples), sigma < 1, m < 2, or f is not an integer
    with f, g >= 1.
    """
    v, k, lam, mu = params.v, params.k, params.lam, params.mu
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc:
        return None
    # lam-mu and s have the same parity whenever disc is a perfect square
    sigma = (lam - mu + s) // 2
    m = -(lam - mu - s) // 2
    if sigma < 1 or m < 2:
        return None
    fnum = (v - 1) * m - k
    fden = sigma + m
    if fnum % fden:
        return None
    f = fnum // fden
    g = v - 1 - f
    if f < 1 or g < 1:
        return None
    return Spectrum(v=v, k=k, sigma=sigma, m=m, f=f, g=g)


def _krein_ok(spec: Spectrum) -> bool:
    k, s, t = spec.k, spec.sigma, -spec.m
    return (s + 1) * (k + s + 2 * s * t) <= (k + s) * (t + 1) ** 2 and (t + 1) * (
        k + t + 2 * s * t
    ) <= (k + t) * (s + 1) ** 2


def _absolute_ok(spec: Spectrum) -> bool:
    return 2 * spec.v <= spec.f * (spec.f + 3) and 2 * spec.v <= spec.g * (spec.g + 3)


def feasibility(params: SrgParams, m: int) -> FeasibilityReport:
    """Evaluate every feasibility filter for a tuple with smallest
    eigenvalue -m.

    Raises ValueError if the tuple has an integral spectrum whose smallest
    eigenvalue differs from -m (caller passed an inconsistent m).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    sane = params.is_sane
    spec = spectrum(params) if sane else None
    if spec is not None and spec.m != m:
        raise ValueError(f"tuple has smallest eigenvalue -{spec.m}, not -{m}")
    mu = params.mu
    if spec is None:
        return FeasibilityReport(
            integral_spectrum=False,
            krein_ok=True,
            absolute_ok=True,
            mu_bound_ok=True,
            sigma_bound_ok=True,
            sanity_ok=sane,
        )
    exempt = mu in (m * (m - 1), m * m)
    return FeasibilityReport(
        integral_spectrum=True,
        krein_ok=_krein_ok(spec),
        absolute_ok=_absolute_ok(spec),
        mu_bound_ok=mu <= mu_bound_limit(m),
        sigma_bound_ok=exempt or spec.sigma <= sigma_bound_limit(m, mu),
        sanity_ok=sane,
    )
