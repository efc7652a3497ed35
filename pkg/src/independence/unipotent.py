from typing import Sequence

from bialgebra import Bialgebra, Element
from convolution import degree_upper_bound
from global_variables import CERTIFIED, DEFAULT_HORIZON, HORIZON_ONLY, NotCommutativeFamily, report
from scalars import UNKNOWN, ZERO_DIVISOR

from .relations import _check_grouplikes, _check_lengths
from .reports import (
    ASSUMPTIONS_NOT_MET,
    COUNTEREXAMPLE,
    INDEPENDENCE_CONFIRMED,
    NO_RELATION,
    NOT_APPLICABLE,
    VerifierReport,
)


def regularity_assumptions(B: Bialgebra, gs: Sequence[Element]):
    """Regularity of every difference g_i - g_j (i < j) and of every g_i."""
    found = []
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            status = B.regularity(gs[i] - gs[j])
            found.append({"kind": "difference", "indices": [i, j], **status.to_dict()})
    for i, g in enumerate(gs):
        found.append({"kind": "grouplike", "indices": [i], **B.regularity(g).to_dict()})
    return found


def check_unipotent_independence(
    B: Bialgebra, gs: Sequence[Element], bs: Sequence[Element], horizon: int = DEFAULT_HORIZON
) -> VerifierReport:
    """
    Test one relation sum_i b_i g_i = 0 with id-unipotent b_i against
    linear independence of the grouplikes g_i over id-unipotent elements.

    Independence is only claimed when every g_i and every g_i - g_j is known
    to be regular and every b_i has a certified degree-upper bound; an
    Unknown regularity status makes the instance not applicable.
    """
    if not B.commutative:
        raise NotCommutativeFamily(f"{B} is not commutative")
    _check_lengths(gs, bs)
    _check_grouplikes(B, gs)
    assumptions = regularity_assumptions(B, gs)
    bounds = [degree_upper_bound(b, horizon) for b in bs]

    total = B.zero()
    for g, b in zip(gs, bs):
        total = total + b * g
    relation = total.is_zero()
    certified = all(bound.mode == CERTIFIED and bound.unipotent for bound in bounds)
    statuses = {entry["status"] for entry in assumptions}
    nonzero = [f"{i}: {b}" for i, b in enumerate(bs) if not b.is_zero()]

    if not relation:
        verdict = NO_RELATION
    elif ZERO_DIVISOR in statuses:
        verdict = ASSUMPTIONS_NOT_MET
    elif UNKNOWN in statuses or not certified:
        verdict = NOT_APPLICABLE
    elif not nonzero:
        verdict = INDEPENDENCE_CONFIRMED
    else:
        verdict = COUNTEREXAMPLE
        report(f"relation with nonzero unipotent coefficients in {B}: {nonzero}")

    return VerifierReport(
        relation,
        CERTIFIED if certified else HORIZON_ONLY,
        (not nonzero) if relation else None,
        verdict,
        nonzero if relation else [],
        assumptions,
        details={"sum": str(total), "bounds": [bound.to_dict() for bound in bounds]},
    )
