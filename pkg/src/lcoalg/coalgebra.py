"""The axiom catalogue: every coalgebraic structure checked here is a
predicate over multi-linear maps, evaluated exhaustively on basis labels.

Axioms are data, not code: each axiom is a list of equations whose sides
are composition chains of role-bound coproducts.  A single evaluator
expands both sides of every equation on every basis label and compares the
canonical tensors; finite bases make this complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .linalg import (
    BasisSpace,
    FiniteAlgebra,
    MultiLinearMap,
    Tensor,
    Vector,
    kernel_basis,
    solve_linear,
    tensor_sub,
)
from .scalars import ONE, Scalar

# A role is a coproduct slot in an axiom schema: either a plain role name,
# a sum of two roles, or a transposed role.
Role = Union[str, Tuple[str, "Role", "Role"], Tuple[str, "Role"]]
# One side of an equation: the first coproduct applied to the input label,
# then a chain of (role, slot) applications.
Side = Tuple[Role, Tuple[Tuple[Role, int], ...]]
Equation = Tuple[str, Side, Side]


class LStructure:
    """A basis space with named coproducts, optional counits, optional
    multiplication table."""

    def __init__(
        self,
        space: BasisSpace,
        coproducts: Dict[str, MultiLinearMap],
        counits: Optional[Dict[str, Vector]] = None,
        algebra: Optional[FiniteAlgebra] = None,
    ):
        for name, cp in coproducts.items():
            if cp.domain != space:
                raise ValueError(f"coproduct {name!r} lives on a different space")
            if cp.arity != 2:
                raise ValueError(f"coproduct {name!r} must have arity 2")
        self.space = space
        self.coproducts = dict(coproducts)
        self.counits = dict(counits or {})
        for name, eps in self.counits.items():
            for lab in eps:
                if lab not in space:
                    raise ValueError(f"counit {name!r} mentions unknown label {lab!r}")
        if algebra is not None and algebra.space != space:
            raise ValueError("algebra lives on a different space")
        self.algebra = algebra

    def coproduct(self, name: str) -> MultiLinearMap:
        if name not in self.coproducts:
            raise KeyError(f"unknown coproduct {name!r}")
        return self.coproducts[name]

    def with_coproduct(self, name: str, cp: MultiLinearMap) -> "LStructure":
        cps = dict(self.coproducts)
        cps[name] = cp
        return LStructure(self.space, cps, self.counits, self.algebra)


@dataclass
class AxiomReport:
    """Outcome of one axiom check; pass iff the witness list is empty."""

    axiom: str
    witnesses: List[Tuple[str, str, Tensor, Tensor]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if not self.witnesses else "fail"

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def witness_labels(self) -> List[str]:
        seen = []
        for label, eq, _, _ in self.witnesses:
            tag = f"{eq}@{label}"
            if tag not in seen:
                seen.append(tag)
        return seen


def _side(first: Role, *steps: Tuple[Role, int]) -> Side:
    return (first, tuple(steps))


# Equation shorthand: _side(B, (A, i)) encodes (A at slot i) after B, i.e.
# (A x id)B for i=1 and (id x A)B for i=2 on arity-2 outputs.
_COASSOC = lambda r: (
    f"coassoc({r})",
    _side(r, (r, 1)),
    _side(r, (r, 2)),
)
# (rtilde x id) r = (id x r) rtilde
_ENTANGLE = lambda r, rt, tag=None: (
    tag or f"entangle({rt},{r})",
    _side(r, (rt, 1)),
    _side(rt, (r, 2)),
)

AXIOMS: Dict[str, Dict] = {
    "coassoc": {
        "roles": ("Delta",),
        "equations": [_COASSOC("Delta")],
    },
    "entanglement": {
        "roles": ("Delta", "Deltatilde"),
        "equations": [_ENTANGLE("Delta", "Deltatilde")],
    },
    "right_counit": {"roles": ("Delta", "eps"), "counit": "right"},
    "left_counit": {"roles": ("Deltatilde", "epstilde"), "counit": "left"},
    "L_cocommutative": {
        "roles": ("Delta", "Deltatilde"),
        "equations": [
            ("cocommutative", _side("Delta"), _side(("tau", "Deltatilde")))
        ],
    },
    "bidirected": {
        "roles": ("Delta", "Deltatilde"),
        "equations": [
            ("bidirected", _side("Delta"), _side(("tau", "Deltatilde")))
        ],
    },
    "codipterous": {
        "roles": ("Delta", "delta"),
        "equations": [
            _COASSOC("Delta"),
            ("codip", _side("delta", ("Delta", 1)), _side("delta", ("delta", 2))),
        ],
    },
    "anti_codipterous": {
        "roles": ("Delta", "deltahat"),
        "equations": [
            _COASSOC("Delta"),
            (
                "anti_codip",
                _side("deltahat", ("Delta", 2)),
                _side("deltahat", ("deltahat", 1)),
            ),
        ],
    },
    "pre_dendriform": {
        "roles": ("Delta", "delta", "deltahat"),
        "equations": [
            _COASSOC("Delta"),
            ("codip", _side("delta", ("Delta", 1)), _side("delta", ("delta", 2))),
            (
                "anti_codip",
                _side("deltahat", ("Delta", 2)),
                _side("deltahat", ("deltahat", 1)),
            ),
            (
                "bridge_entangle",
                _side("delta", ("deltahat", 2)),
                _side("deltahat", ("delta", 1)),
            ),
        ],
    },
    "dendriform_coalgebra": {
        "roles": ("delta", "deltahat"),
        "equations": [
            (
                "dendriform1",
                _side("deltahat", (("sum", "delta", "deltahat"), 2)),
                _side("deltahat", ("deltahat", 1)),
            ),
            (
                "dendriform2",
                _side("delta", ("deltahat", 2)),
                _side("deltahat", ("delta", 1)),
            ),
            (
                "dendriform3",
                _side("delta", (("sum", "deltahat", "delta"), 1)),
                _side("delta", ("delta", 2)),
            ),
        ],
    },
    "codialgebra": {
        "roles": ("delta", "deltahat"),
        "equations": [
            _COASSOC("delta"),
            _COASSOC("deltahat"),
            (
                "codialg2",
                _side("deltahat", ("deltahat", 2)),
                _side("deltahat", ("delta", 2)),
            ),
            (
                "codialg3",
                _side("delta", ("delta", 1)),
                _side("delta", ("deltahat", 1)),
            ),
            (
                "codialg4",
                _side("deltahat", ("delta", 1)),
                _side("delta", ("deltahat", 2)),
            ),
        ],
    },
    "cotrialgebra": {
        "roles": ("Delta", "delta", "deltahat"),
        "equations": [
            _COASSOC("Delta"),
            _COASSOC("delta"),
            _COASSOC("deltahat"),
            (
                "codialg2",
                _side("deltahat", ("deltahat", 2)),
                _side("deltahat", ("delta", 2)),
            ),
            (
                "codialg3",
                _side("delta", ("delta", 1)),
                _side("delta", ("deltahat", 1)),
            ),
            (
                "codialg4",
                _side("deltahat", ("delta", 1)),
                _side("delta", ("deltahat", 2)),
            ),
            (
                "cotri3",
                _side("deltahat", ("deltahat", 1)),
                _side("deltahat", ("Delta", 2)),
            ),
            (
                "cotri4",
                _side("deltahat", ("Delta", 1)),
                _side("Delta", ("deltahat", 2)),
            ),
            (
                "cotri5",
                _side("Delta", ("deltahat", 1)),
                _side("Delta", ("delta", 2)),
            ),
            (
                "cotri6",
                _side("Delta", ("delta", 1)),
                _side("delta", ("Delta", 2)),
            ),
            (
                "cotri7",
                _side("delta", ("Delta", 1)),
                _side("delta", ("delta", 2)),
            ),
        ],
    },
    "achiral": {
        "roles": ("Delta", "Deltatilde"),
        "equations": [
            _COASSOC("Delta"),
            _COASSOC("Deltatilde"),
            _ENTANGLE("Delta", "Deltatilde", "entangle_tilde_first"),
            _ENTANGLE("Deltatilde", "Delta", "entangle_plain_first"),
        ],
    },
}


def _resolve(role: Role, maps: Dict[str, MultiLinearMap]) -> MultiLinearMap:
    if isinstance(role, str):
        if role not in maps:
            raise KeyError(f"missing binding for role {role!r}")
        return maps[role]
    if role[0] == "sum":
        return _resolve(role[1], maps).add(_resolve(role[2], maps))
    if role[0] == "tau":
        return _resolve(role[1], maps).tau()
    raise ValueError(f"bad role {role!r}")


def _eval_side(side: Side, label: str, maps: Dict[str, MultiLinearMap]) -> Tensor:
    first, steps = side
    tensor = _resolve(first, maps).of_label(label)
    degree = 2
    for role, slot in steps:
        tensor = _resolve(role, maps).at_slot(tensor, slot, degree)
        degree += 1
    return tensor


def _apply_counit(eps: Vector, tensor: Tensor, slot: int) -> Tensor:
    out: Tensor = {}
    for term, coeff in tensor.items():
        weight = eps.get(term[slot - 1])
        if weight is None or weight.is_zero():
            continue
        rest = term[: slot - 1] + term[slot:]
        c = coeff * weight
        s = out.get(rest, None)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(rest, None)
        else:
            out[rest] = s
    return out


def check_axiom(
    s: LStructure, axiom: str, bindings: Dict[str, str]
) -> AxiomReport:
    """Verify one axiom system exactly; every failing basis label is a
    witness with both unequal expansions."""
    if axiom not in AXIOMS:
        raise KeyError(f"unknown axiom {axiom!r}")
    schema = AXIOMS[axiom]
    report = AxiomReport(axiom=axiom)

    if schema.get("counit"):
        kind = schema["counit"]
        cp_role = "Delta" if kind == "right" else "Deltatilde"
        eps_role = "eps" if kind == "right" else "epstilde"
        for role in (cp_role, eps_role):
            if role not in bindings:
                raise KeyError(f"missing binding for role {role!r}")
        cp = s.coproduct(bindings[cp_role])
        eps_name = bindings[eps_role]
        if eps_name not in s.counits:
            raise KeyError(f"unknown counit {eps_name!r}")
        eps = s.counits[eps_name]
        slot = 2 if kind == "right" else 1
        eq = "right_counit" if kind == "right" else "left_counit"
        for label in s.space.labels:
            lhs = _apply_counit(eps, cp.of_label(label), slot)
            rhs: Tensor = {(label,): ONE}
            if lhs != rhs:
                report.witnesses.append((label, eq, lhs, rhs))
        return report

    maps: Dict[str, MultiLinearMap] = {}
    for role in schema["roles"]:
        if role not in bindings:
            raise KeyError(f"missing binding for role {role!r}")
        maps[role] = s.coproduct(bindings[role])
    for eq_label, lhs_side, rhs_side in schema["equations"]:
        for label in s.space.labels:
            lhs = _eval_side(lhs_side, label, maps)
            rhs = _eval_side(rhs_side, label, maps)
            if lhs != rhs:
                report.witnesses.append((label, eq_label, lhs, rhs))
    return report


def dichotomy_sum(s: LStructure, a: str, b: str) -> MultiLinearMap:
    """Termwise sum of two coproducts with a merged canonical table."""
    return s.coproduct(a).add(s.coproduct(b))


def cocommutator_space(s: LStructure, right: str, left: str) -> List[Vector]:
    """Kernel basis of (Delta - tau Deltatilde), flattened to a matrix."""
    diff = s.coproduct(right).sub(s.coproduct(left).tau())
    labels = s.space.labels
    row_index: Dict[Tuple[str, str], int] = {}
    rows: List[List[Scalar]] = []
    for j, lab in enumerate(labels):
        for term, coeff in diff.of_label(lab).items():
            key = (term[0], term[1])
            if key not in row_index:
                row_index[key] = len(rows)
                rows.append([Scalar.zero()] * len(labels))
            rows[row_index[key]][j] = coeff
    vectors = kernel_basis(rows, ncols=len(labels))
    out = []
    for vec in vectors:
        out.append(
            {lab: c for lab, c in zip(labels, vec) if not c.is_zero()}
        )
    return out


def solve_right_counit(s: LStructure, coproduct: str) -> Optional[Vector]:
    """Solve (id x eps)Delta = id for the functional eps, if one exists."""
    return _solve_counit(s, coproduct, slot=2)


def solve_left_counit(s: LStructure, coproduct: str) -> Optional[Vector]:
    """Solve (eps x id)Deltatilde = id for the functional eps, if one exists."""
    return _solve_counit(s, coproduct, slot=1)


def _solve_counit(s: LStructure, coproduct: str, slot: int) -> Optional[Vector]:
    cp = s.coproduct(coproduct)
    labels = s.space.labels
    n = len(labels)
    index = s.space.index
    rows: List[List[Scalar]] = []
    rhs: List[Scalar] = []
    # One equation per (input label, surviving output label) pair.
    for v in labels:
        coeffs: Dict[str, List[Scalar]] = {}
        for term, c in cp.of_label(v).items():
            keep = term[0] if slot == 2 else term[1]
            unknown = term[1] if slot == 2 else term[0]
            row = coeffs.setdefault(keep, [Scalar.zero()] * n)
            row[index[unknown]] = row[index[unknown]] + c
        for keep in set(list(coeffs) + [v]):
            rows.append(coeffs.get(keep, [Scalar.zero()] * n))
            rhs.append(ONE if keep == v else Scalar.zero())
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    return {lab: c for lab, c in zip(labels, solution) if not c.is_zero()}
