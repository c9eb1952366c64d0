"""varinv: exact invariants of affine varieties over the rationals.

Decide, at desk scale, whether two affine varieties can be told apart as
non-isomorphic (elementary ideals of the Jacobian matrix modulo a reference
ideal, compared across variable renamings) or as inequivalently embedded
(number of quasi-singular points, i.e. zeros of the gradient), and verify
replayable certificates that two presentations are isomorphic.
"""

from .certfile import (
    Certificate,
    CertificateReport,
    CertificateSyntaxError,
    load_certificate,
    parse_certificate,
    verify_certificate,
)
from .groebner import (
    Ideal,
    MonomialOrder,
    default_order,
    eliminate,
    ideal_equal,
    ideal_member,
    ideal_sum,
    leading_coefficient,
    leading_monomial,
    normal_form,
    reduced_groebner,
    s_polynomial,
)
from .invariants import (
    ArityLimitError,
    ElementaryIdealFamily,
    InvariantVerdict,
    JacobianMatrix,
    QuasiSingularReport,
    compare_invariants,
    elementary_ideal,
    jacobian,
    minors,
    quasi_singular,
)
from .polyring import (
    Polynomial,
    RationalPoint,
    RingMismatchError,
    UnknownVariableError,
    VarSet,
    change_ring,
    evaluate,
    gradient,
    integer_primitive,
    partial_derivative,
    rename_variables,
    substitute,
)
from .presentations import (
    Presentation,
    RewriteMismatchError,
    StepError,
    cancel,
    introduce,
    presentations_equal,
    rename,
    rewrite,
)
from .textio import (
    ParseError,
    SourceSpan,
    SystemFile,
    parse_polynomial,
    parse_system,
    read_system,
    render,
    render_system,
    write_system,
)
from .zerodim import (
    NotZeroDimensionalError,
    QuotientBasis,
    ZeroCount,
    count_distinct_zeros,
    minimal_polynomial,
    quotient_basis,
    radical_zero_dim,
    rational_roots,
    squarefree_part,
)

__version__ = "0.1.0"
