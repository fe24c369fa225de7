"""charpgeom: exact geometry over function fields of odd characteristic.

A workbench for explicit positive-characteristic constructions: function-field
heights and their Northcott failures, inseparable ramified p-coverings with
nondegenerate singularities, formal normal forms at critical points, iterated
blow-up desingularization with smoothness certificates, divisor-class
adjunction on projective bundles over P^2, isotriviality witnesses, Frobenius
factorization, and explicit families violating height inequalities of
Lang/Vojta type.

Everything is exact: finite fields F_{p^m} (p odd), rational function fields
k(t), and integer lattice arithmetic.  Every nontrivial claim a computation
makes is backed by a certificate that re-verifies independently (cofactor
identities, pointwise checks, expansion identities).
"""

from . import algebra, heights, covers, normalform, desing, picard, cli

__version__ = "0.1.0"

__all__ = ["algebra", "heights", "covers", "normalform", "desing", "picard",
           "cli", "__version__"]
