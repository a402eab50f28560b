"""Exact computer algebra for packed words (surjections).

The submodules are ``words`` (combinatorics of single words), ``shuffles``
(shuffle and stuffle sets), ``algebra`` (Z[q] coefficients, linear
combinations, exact rank), ``hopf`` (coproduct, dendriform and
tridendriform products, braces, the projector E), ``suites`` (exhaustive
axiom checks), ``freeness`` (generator sets, eta, psi) and ``cli``.
"""

from .algebra import LinearCombination, QPoly, Q, lc, rank, tensor
from .hopf import (OpFamily, brace, coproduct, dendriform, eulerian_projector,
                   is_primitive, omega, reduced_coproduct_power,
                   shuffle_product, tridendriform)
from .freeness import enumerate_bases, eta, freeness_report, psi
from .shuffles import enumerate_shuffles, enumerate_stuffles, epsilon
from .suites import axiom_suite
from .words import (backslash, concat, dot, parse_word, standardize,
                    surjections, top_decomposition)

__version__ = "0.1.0"
