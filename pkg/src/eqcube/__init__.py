"""eqcube: exact calculator for the equivariant cube of the linking
pairing of a rank-one 3-manifold with a framed generating knot.

The package provides exact Laurent/rational arithmetic (with half-integer
exponents in one variable, and the quotient ring with xyz = 1 in three),
normalized Alexander data and its functionals, the beaded trivalent
diagram space with canonical forms, Dedekind sums and lens-space
Casson-Walker values, and the surgery calculus that transports the
invariant along pipelines of topological moves.
"""

from .alexander import AlexanderPair, i_delta, j_delta, normalize_symmetric
from .casson import SurgeryCoefficient, dedekind_sum, lambda_lens
from .diagrams import (DiagramVector, LabeledGraph, MonGraph, build_diagram,
                       canonicalize, dumbbell, enumerate_CS_n, ihx_relation,
                       ihx_relations, normalization_constant, psi, theta)
from .errors import (BadBead, DivisionByZero, EqCubeError, HalfPowerResidue,
                     ManifestError, NoLimit, NonPolynomialV, NonThetaSupport,
                     NotCoprime, NotSymmetrizable, NonUnitAtOne,
                     SymmetryViolation, WindowOverflow, WindowTooLarge, ZeroP)
from .halfint import HLPoly, OneVarFrac
from .pipeline import (ConnectedSumMove, FramingMove, KnotChangeMove,
                       Manifest, PipelineState, SurgeryMove, parse_manifest,
                       run_pipeline)
from .surgery import (FramedKnotChange, SurgeryDatum, check_symmetry,
                      connected_sum_delta, framing_V, knot_change_delta,
                      lambda_e_prime, q_k, reduce_mod_Qk, seifert_V,
                      surgery_delta)
from .trivar import (BiLaurent, TriVarElem, embed, tri_eval_111, tri_invert,
                     tri_symmetrize)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
