"""Norms, unit-ball log-volumes, and the digamma function.

Shared numeric substrate for every k-nearest-neighbor estimator in this
package. All logarithms are natural; every estimate downstream is in nats.
"""

import enum
import math

__all__ = [
    "Norm",
    "log_unit_ball_volume",
    "cmi_constant",
    "digamma",
]

EULER_GAMMA = 0.5772156649015328606


class Norm(enum.Enum):
    """Distance used for neighbor queries: max-norm (Chebyshev) or euclidean."""

    MAX = "max"
    EUCLIDEAN = "l2"

    @classmethod
    def parse(cls, text):
        t = str(text).strip().lower()
        if t in ("max", "max-norm", "chebyshev", "inf", "linf"):
            return cls.MAX
        if t in ("l2", "euclidean", "2"):
            return cls.EUCLIDEAN
        raise ValueError(f"unknown norm {text!r} (expected 'max' or 'l2')")

    @property
    def code(self):
        """Integer tag used by the counting kernels."""
        return 0 if self is Norm.MAX else 1


def log_unit_ball_volume(d, norm=Norm.MAX):
    """Natural log of the volume of the unit ball in d dimensions.

    Max-norm balls are cubes of side 2 (volume 2^d); euclidean balls have
    volume pi^(d/2) / Gamma(d/2 + 1).
    """
    if d < 1 or d != int(d):
        raise ValueError(f"dimension must be a positive integer, got {d}")
    d = int(d)
    if norm is Norm.MAX:
        return d * math.log(2.0)
    return 0.5 * d * math.log(math.pi) - math.lgamma(0.5 * d + 1.0)


def cmi_constant(d_x, d_y, d_z, norm=Norm.MAX):
    """Additive constant log(c_{dx+dz} c_{dy+dz} / (c_{dx+dy+dz} c_{dz})).

    Identically zero under the max-norm: the 2^d factors cancel.
    """
    for name, d in (("d_x", d_x), ("d_y", d_y), ("d_z", d_z)):
        if d < 1 or d != int(d):
            raise ValueError(f"{name} must be a positive integer, got {d}")
    return (
        log_unit_ball_volume(d_x + d_z, norm)
        + log_unit_ball_volume(d_y + d_z, norm)
        - log_unit_ball_volume(d_x + d_y + d_z, norm)
        - log_unit_ball_volume(d_z, norm)
    )


# Asymptotic coefficients of psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n}),
# through x^-14; below the switch point the recurrence psi(x) = psi(x+1) - 1/x
# shifts the argument up.
_ASYMPTOTIC_SWITCH = 6.0
_BERNOULLI_TERMS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def digamma(x):
    """Digamma psi(x) for x > 0, accurate to about 1e-12 absolute."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < _ASYMPTOTIC_SWITCH:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for coeff in _BERNOULLI_TERMS:
        series += coeff * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series
