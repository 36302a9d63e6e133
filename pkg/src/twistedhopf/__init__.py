"""Exact computations with Hopf operads in S-modules.

The package builds the associative, commutative, Lie, Poisson and magmatic
operads, the twisted coproduct ``Delta`` of a connected Hopf operad, primitive
suboperads as exact kernels, and free twisted algebras over them.
"""

__version__ = "0.1.0"
