"""Exact affine Hecke algebra operators and the polynomial families they generate.

Subpackages by theme:

- scalars:        the coefficient field Q(q,t,a) and q-series coefficients
- polyring:       sparse multivariate polynomials over the field
- compositions:   compositions, orders, spectral vectors, node statistics
- operators:      Demazure-Lustig/Cherednik/q-Dunkl operators and relation suites
- macdonald:      non-symmetric Macdonald polynomials and their identities
- asc:            non-symmetric Al-Salam-Carlitz families, kernels, q-binomials
- orthogonality:  numeric Jackson-integral inner products and norms
- cli:            command-line front end (compute / verify / table)
"""

from .scalars import FIELD, RING, Scalar, q, t, a

__all__ = ["FIELD", "RING", "Scalar", "q", "t", "a"]

__version__ = "0.1.0"
