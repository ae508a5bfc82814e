"""The reduced quotient Gamma_k = J_k^{c_k} / H_k and its group law."""
from .element import GammaElement, high_odd_degrees, lift, low_degrees, reduce
from .multinomial import MultiIndex, enumerate_S, multinomial_compose
from .ops import gamma_commutator, gamma_compose, gamma_inverse, gamma_power

__all__ = [
    "GammaElement",
    "MultiIndex",
    "enumerate_S",
    "gamma_commutator",
    "gamma_compose",
    "gamma_inverse",
    "gamma_power",
    "high_odd_degrees",
    "lift",
    "low_degrees",
    "multinomial_compose",
    "reduce",
]
