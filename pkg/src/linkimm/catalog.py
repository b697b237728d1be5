"""Static reference data for the simple (A-D-E) surface singularities.

Each type carries its defining germ, the finite subgroup of SU(2) whose
quotient realizes it (the covering degree of S^3 over the link), and the
published Smale invariant of the immersion S^3 -> S^5 induced by the
invariant-polynomial parametrization of the germ.  The last column is a
catalog constant: counting singularities of holomorphic perturbations is
out of scope here, so the family formulas are stored, not recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plumbing import DynkinLabel
from .smale import SmaleClassR5


@dataclass(frozen=True)
class SingularityRecord:
    """One row of the catalog; ``germ`` is display-only, never parsed."""

    label: DynkinLabel
    germ: str
    group_name: str
    group_order: int
    np_smale: int


def singularity_record(label: DynkinLabel) -> SingularityRecord:
    n = label.parameter
    if label.family == "A":
        return SingularityRecord(
            label=label,
            germ=f"x^2 + y^2 + z^{n}",
            group_name=f"C_{n} (cyclic)",
            group_order=n,
            np_smale=-(n * n - 1),
        )
    if label.family == "D":
        return SingularityRecord(
            label=label,
            germ=f"x^2 + y^2 z + z^{n + 1}",
            group_name=f"Dic_{n} (binary dihedral)",
            group_order=4 * n,
            np_smale=-(4 * n * n + 12 * n - 1),
        )
    germ, name, order, smale = {
        6: ("x^2 + y^3 + z^4", "2T (binary tetrahedral)", 24, -167),
        7: ("x^2 + y^3 + y z^3", "2O (binary octahedral)", 48, -383),
        8: ("x^2 + y^3 + z^5", "2I (binary icosahedral)", 120, -1079),
    }[n]
    return SingularityRecord(label, germ, name, order, smale)


def group_order(label: DynkinLabel) -> int:
    """Order of the SU(2) subgroup: n, 4n, 24, 48, 120 by family."""
    return singularity_record(label).group_order


def np_smale_invariant(label: DynkinLabel) -> SmaleClassR5:
    """Published Smale invariant of the parametrization immersion S^3 -> S^5."""
    return SmaleClassR5(singularity_record(label).np_smale)
