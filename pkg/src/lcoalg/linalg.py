"""Named-basis spaces, sparse multi-linear maps into tensor powers, exact
row reduction, and finite algebras given by multiplication tables.

Vectors are dicts label -> Scalar; tensors are dicts (label, ...) -> Scalar.
Zero coefficients are never stored, so dict equality is exact map equality.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import ONE, Scalar

Label = str
Term = Tuple[Label, ...]
Vector = Dict[Label, Scalar]
Tensor = Dict[Term, Scalar]


class BasisSpace:
    """An ordered list of distinct basis-element names."""

    __slots__ = ("labels", "index")

    def __init__(self, labels: Sequence[Label]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("a basis space needs at least one label")
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be distinct")
        self.labels = labels
        self.index = {lab: i for i, lab in enumerate(labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __contains__(self, label: Label) -> bool:
        return label in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, BasisSpace) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"BasisSpace({list(self.labels)})"

    def union(self, other: "BasisSpace") -> "BasisSpace":
        overlap = set(self.labels) & set(other.labels)
        if overlap:
            raise ValueError(f"label sets overlap: {sorted(overlap)}")
        return BasisSpace(self.labels + other.labels)


# -- vector / tensor helpers ----------------------------------------------


def vec_add(a: Vector, b: Vector) -> Vector:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, None)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(a: Vector, c: Scalar) -> Vector:
    if c.is_zero():
        return {}
    return {k: v * c for k, v in a.items()}


def vec_sub(a: Vector, b: Vector) -> Vector:
    return vec_add(a, vec_scale(b, Scalar.from_rational(-1)))


def unit_vector(label: Label) -> Vector:
    return {label: ONE}


def tensor_add(a: Tensor, b: Tensor) -> Tensor:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, None)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def tensor_scale(a: Tensor, c: Scalar) -> Tensor:
    if c.is_zero():
        return {}
    return {k: v * c for k, v in a.items()}


def tensor_sub(a: Tensor, b: Tensor) -> Tensor:
    return tensor_add(a, tensor_scale(b, Scalar.from_rational(-1)))


def tensor_of(terms: Iterable[Tuple[Scalar, Term]]) -> Tensor:
    out: Tensor = {}
    for coeff, term in terms:
        if coeff.is_zero():
            continue
        s = out.get(term, None)
        s = coeff if s is None else s + coeff
        if s.is_zero():
            out.pop(term, None)
        else:
            out[term] = s
    return out


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    out: Tensor = {}
    for ta, ca in a.items():
        for tb, cb in b.items():
            term = ta + tb
            c = ca * cb
            s = out.get(term, None)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(term, None)
            else:
                out[term] = s
    return out


def vector_to_tensor(v: Vector) -> Tensor:
    return {(k,): c for k, c in v.items()}


class MultiLinearMap:
    """A sparse linear map from a basis space into its m-th tensor power.

    The table maps each domain label to a canonical tensor; absent labels
    map to zero.  All labels occurring in output terms must belong to the
    domain space, which doubles as the ambient space for glued structures.
    """

    __slots__ = ("domain", "arity", "table")

    def __init__(self, domain: BasisSpace, arity: int, table: Dict[Label, Tensor]):
        if arity < 1:
            raise ValueError("arity must be positive")
        clean: Dict[Label, Tensor] = {}
        for label, tensor in table.items():
            if label not in domain:
                raise ValueError(f"table key {label!r} is not a domain label")
            entry = {t: c for t, c in tensor.items() if not c.is_zero()}
            for term in entry:
                if len(term) != arity:
                    raise ValueError(
                        f"term {term} of {label!r} has wrong arity (want {arity})"
                    )
                for lab in term:
                    if lab not in domain:
                        raise ValueError(
                            f"label {lab!r} in value of {label!r} is not in the space"
                        )
            if entry:
                clean[label] = entry
        self.domain = domain
        self.arity = arity
        self.table = clean

    # -- evaluation --------------------------------------------------------

    def of_label(self, label: Label) -> Tensor:
        if label not in self.domain:
            raise KeyError(label)
        return dict(self.table.get(label, {}))

    def of_vector(self, v: Vector) -> Tensor:
        out: Tensor = {}
        for label, coeff in v.items():
            out = tensor_add(out, tensor_scale(self.of_label(label), coeff))
        return out

    def at_slot(self, tensor: Tensor, slot: int, degree: int) -> Tensor:
        """Apply this map at the given 1-based slot of a degree-``degree``
        tensor, identity elsewhere."""
        if not 1 <= slot <= degree:
            raise ValueError(f"slot {slot} out of range for degree {degree}")
        out: Tensor = {}
        for term, coeff in tensor.items():
            if len(term) != degree:
                raise ValueError(f"term {term} does not have degree {degree}")
            image = self.table.get(term[slot - 1])
            if not image:
                continue
            head, tail = term[: slot - 1], term[slot:]
            for mid, c in image.items():
                new_term = head + mid + tail
                s = out.get(new_term, None)
                add = coeff * c
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(new_term, None)
                else:
                    out[new_term] = s
        return out

    # -- algebra of maps ---------------------------------------------------

    def add(self, other: "MultiLinearMap") -> "MultiLinearMap":
        self._check_compatible(other)
        table = {}
        for label in set(self.table) | set(other.table):
            table[label] = tensor_add(self.of_label(label), other.of_label(label))
        return MultiLinearMap(self.domain, self.arity, table)

    def sub(self, other: "MultiLinearMap") -> "MultiLinearMap":
        self._check_compatible(other)
        table = {}
        for label in set(self.table) | set(other.table):
            table[label] = tensor_sub(self.of_label(label), other.of_label(label))
        return MultiLinearMap(self.domain, self.arity, table)

    def tau(self) -> "MultiLinearMap":
        """Swap the two output legs (arity-2 maps only)."""
        if self.arity != 2:
            raise ValueError("tau applies to arity-2 maps")
        table = {
            label: {(b, a): c for (a, b), c in tensor.items()}
            for label, tensor in self.table.items()
        }
        return MultiLinearMap(self.domain, 2, table)

    def is_zero(self) -> bool:
        return not self.table

    def _check_compatible(self, other: "MultiLinearMap"):
        if self.domain != other.domain or self.arity != other.arity:
            raise ValueError("maps have different domain or arity")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiLinearMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.arity == other.arity
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.domain, self.arity))

    def __repr__(self):
        return f"MultiLinearMap(arity={self.arity}, labels={sorted(self.table)})"


def map_equal(f: MultiLinearMap, g: MultiLinearMap) -> bool:
    """Exact structural equality of two maps with shared domain and arity."""
    f._check_compatible(g)
    return f.table == g.table


def zero_map(domain: BasisSpace, arity: int = 2) -> MultiLinearMap:
    return MultiLinearMap(domain, arity, {})


def identity_tensor(term: Term) -> Tensor:
    return {term: ONE}


# -- exact linear algebra --------------------------------------------------

Matrix = List[List[Scalar]]


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(matrix: Matrix, ncols: Optional[int] = None) -> List[List[Scalar]]:
    """Basis of the kernel of the matrix (columns = domain coordinates)."""
    if not matrix:
        if ncols is None:
            return []
        basis = []
        for j in range(ncols):
            v = [Scalar.zero()] * ncols
            v[j] = ONE
            basis.append(v)
        return basis
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Scalar.zero()] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve_linear(matrix: Matrix, rhs: List[Scalar]) -> Optional[List[Scalar]]:
    """One exact solution of matrix @ x = rhs, or None if inconsistent."""
    if not matrix:
        return [] if all(b.is_zero() for b in rhs) else None
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [Scalar.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return x


class FiniteAlgebra:
    """An associative unital algebra on a basis space, by table.

    Associativity and the two-sided unit law are checked exhaustively at
    construction: the fixtures are small and a wrong table should fail fast.
    """

    __slots__ = ("space", "product", "unit")

    def __init__(
        self,
        space: BasisSpace,
        product: Dict[Tuple[Label, Label], Vector],
        unit: Vector,
    ):
        self.space = space
        clean: Dict[Tuple[Label, Label], Vector] = {}
        for (a, b), vec in product.items():
            if a not in space or b not in space:
                raise ValueError(f"product key ({a!r}, {b!r}) outside the space")
            entry = {k: c for k, c in vec.items() if not c.is_zero()}
            for k in entry:
                if k not in space:
                    raise ValueError(f"product value label {k!r} outside the space")
            if entry:
                clean[(a, b)] = entry
        self.product = clean
        self.unit = {k: c for k, c in unit.items() if not c.is_zero()}
        self._check_unit()
        self._check_associative()

    def mul_labels(self, a: Label, b: Label) -> Vector:
        return dict(self.product.get((a, b), {}))

    def mul_vectors(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for a, ca in u.items():
            for b, cb in v.items():
                out = vec_add(out, vec_scale(self.mul_labels(a, b), ca * cb))
        return out

    def mul_tensors(self, s: Tensor, t: Tensor) -> Tensor:
        """Componentwise product on tensor powers: (a@b)(c@d) = ac @ bd."""
        out: Tensor = {}
        for ts, cs in s.items():
            for tt, ct in t.items():
                if len(ts) != len(tt):
                    raise ValueError("tensor degrees differ")
                factors = [self.mul_labels(a, b) for a, b in zip(ts, tt)]
                partial: Tensor = {(): cs * ct}
                for vec in factors:
                    nxt: Tensor = {}
                    for term, coeff in partial.items():
                        for lab, c in vec.items():
                            key = term + (lab,)
                            val = nxt.get(key, None)
                            add = coeff * c
                            val = add if val is None else val + add
                            if val.is_zero():
                                nxt.pop(key, None)
                            else:
                                nxt[key] = val
                    partial = nxt
                out = tensor_add(out, partial)
        return out

    def _check_unit(self):
        for lab in self.space.labels:
            v = unit_vector(lab)
            if self.mul_vectors(self.unit, v) != v or self.mul_vectors(v, self.unit) != v:
                raise ValueError(f"unit law fails at {lab!r}")

    def _check_associative(self):
        for a in self.space.labels:
            for b in self.space.labels:
                ab = self.mul_labels(a, b)
                for c in self.space.labels:
                    left = self.mul_vectors(ab, unit_vector(c))
                    right = self.mul_vectors(
                        unit_vector(a), self.mul_labels(b, c)
                    )
                    if left != right:
                        raise ValueError(
                            f"associativity fails at ({a!r}, {b!r}, {c!r})"
                        )
