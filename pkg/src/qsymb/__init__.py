"""Exact quasisymmetric functions, Young/domino tableaux and identity checks."""
from .combinat import (Letter, WeakComposition, coloured, descent_set, descent_set_signed,
                       empty_two_core, enumerate_group, partitions_of)
from .config import Caps, caps_override, get_caps
from .errors import (AlphabetMismatch, InvalidParams, MalformedInput, NotQuasisymmetric,
                     NotQuasisymmetricB, NotSymmetric, QsymbError, SizeLimit)
from .expand import (NotExpandable, expand_in_domino_basis, expand_in_fundamental_A,
                     expand_in_fundamental_B, expand_in_schur, knuth_class, lr_coeff, lr_expand, rsk)
from .harness import IdentityCase, IdentityReport, REGISTRY, verify, verify_all
from .qpoly import (AlphabetSpec, Laurent, SparsePoly, domino_function, fundamental_A,
                    fundamental_B, fundamental_WC, gamma, parse_poly, schur, schur_p)
from .tableaux import (DominoTableau, PTableau, enum_sbt, enum_sdt, enum_ssbt, enum_ssdt,
                       enum_ssyt, enum_syt, two_quotient_shape)

__version__ = "0.1.0"
