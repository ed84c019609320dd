"""
Exact linear algebra over the rationals and prime fields.

Matrices are dense and immutable. Row reduction, rank and products are
delegated to sympy's DomainMatrix over QQ or GF(p), so every rank decision
is exact. Pivoting is deterministic (lowest index first) which keeps every
basis chosen downstream reproducible.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from koszul_check.exceptions import DependentColumnsError, FieldMismatchError

MAX_MODULUS = 2 ** 31 - 1

SparseVector = Dict[int, Any]


@lru_cache(maxsize=None)
def _domain_for(kind: str, p: Optional[int]):
    if kind == "rational":
        return QQ
    return GF(p)


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: the rationals or a prime field F_p."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not 2 <= self.p <= MAX_MODULUS or not isprime(self.p):
                raise ValueError(f"invalid prime modulus: {self.p!r}")
        else:
            raise ValueError(f"unknown field kind: {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse a field label such as ``q``, ``QQ``, ``p5``, ``F5`` or ``GF(5)``."""
        label = text.strip()
        if label.lower() in ("q", "qq", "rational", "rationals"):
            return cls.rational()
        lowered = label.lower()
        for prefix in ("gf(", "gf", "p", "f"):
            if lowered.startswith(prefix):
                digits = lowered[len(prefix):].rstrip(")")
                if digits.isdigit():
                    return cls.prime(int(digits))
        raise ValueError(f"unrecognized field: {text!r}")

    @property
    def domain(self):
        return _domain_for(self.kind, self.p)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def label(self) -> str:
        return "q" if self.kind == "rational" else f"p{self.p}"

    def __str__(self) -> str:
        return "QQ" if self.kind == "rational" else f"GF({self.p})"

    def element(self, value: Any):
        """Convert ``value`` (int, Fraction, exact string or Scalar) to a field element."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar over {value.field} used over {self}")
            return value.value
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except ZeroDivisionError:
                raise ValueError(f"zero denominator in coefficient {value!r}")
            except ValueError:
                raise ValueError(f"not an exact coefficient: {value!r}")
        if isinstance(value, Fraction):
            if self.kind == "rational":
                return QQ(value.numerator, value.denominator)
            if value.denominator % self.p == 0:
                raise ValueError(f"denominator {value.denominator} vanishes mod {self.p}")
            return self.domain(value.numerator) / self.domain(value.denominator)
        return self.domain.convert(value)

    def to_fraction(self, x) -> Fraction:
        number = self.domain.to_sympy(x)
        if self.kind == "rational":
            return Fraction(int(number.p), int(number.q))
        return Fraction(int(number) % self.p)

    def key(self, x) -> Union[Fraction, int]:
        """Hashable exact value of an element."""
        value = self.to_fraction(x)
        return value if self.kind == "rational" else int(value)

    def format(self, x) -> str:
        return str(self.to_fraction(x))

    def elements(self) -> Iterator[Any]:
        """All elements of a prime field, in residue order."""
        if not self.is_prime:
            raise ValueError("only prime fields can be enumerated")
        for residue in range(self.p):
            yield self.domain(residue)


@dataclass(frozen=True, eq=False)
class Scalar:
    """A field element tagged with its field."""

    field: FieldSpec
    value: Any

    @classmethod
    def of(cls, field: FieldSpec, value: Any) -> "Scalar":
        return cls(field, field.element(value))

    def _coerce(self, other) -> Any:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} with {other.field}")
            return other.value
        return self.field.element(other)

    def __add__(self, other):
        return Scalar(self.field, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.value - self._coerce(other))

    def __rsub__(self, other):
        return Scalar(self.field, self._coerce(other) - self.value)

    def __mul__(self, other):
        return Scalar(self.field, self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        divisor = self._coerce(other)
        if not divisor:
            raise ZeroDivisionError("division by zero in an exact field")
        return Scalar(self.field, self.value / divisor)

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __pow__(self, exponent: int):
        if exponent < 0 and not self.value:
            raise ZeroDivisionError("zero has no inverse")
        return Scalar(self.field, self.value ** exponent)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.one) / self

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.field.key(self.value) == other.field.key(other.value)
        if isinstance(other, (int, Fraction)):
            return self.field.key(self.value) == self.field.key(self.field.element(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.field.key(self.value)))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self})"


class Matrix:
    """Dense immutable matrix over a FieldSpec."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, entries: Sequence[Sequence[Any]], rows: int, cols: int):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries: Tuple[Tuple[Any, ...], ...] = tuple(tuple(row) for row in entries)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "Matrix":
        converted = [[field.element(value) for value in row] for row in rows]
        width = cols if cols is not None else (len(converted[0]) if converted else 0)
        if any(len(row) != width for row in converted):
            raise ValueError("ragged matrix rows")
        return cls(field, converted, len(converted), width)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Any]], length: int) -> "Matrix":
        """Build from raw column vectors of the given length."""
        if any(len(column) != length for column in columns):
            raise ValueError("column length mismatch")
        rows = [[column[i] for column in columns] for i in range(length)]
        return cls(field, rows, length, len(columns))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        zero, one = field.zero, field.one
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def block_diag(cls, field: FieldSpec, blocks: Sequence["Matrix"]) -> "Matrix":
        rows = sum(block.rows for block in blocks)
        cols = sum(block.cols for block in blocks)
        grid = [[field.zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for block in blocks:
            _check_field(field, block.field)
            for i, row in enumerate(block.entries):
                grid[r0 + i][c0:c0 + block.cols] = row
            r0 += block.rows
            c0 += block.cols
        return cls(field, grid, rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Any, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Tuple[Any, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.columns(), self.cols, self.rows)

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[row[j] for j in indices] for row in self.entries], self.rows, len(indices))

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [self.entries[i] for i in indices], len(indices), self.cols)

    def is_zero(self) -> bool:
        return not any(value for row in self.entries for value in row)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], self.shape, self.field.domain)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return Matrix(self.field, product.to_list(), self.rows, other.cols)

    def apply(self, vector: Sequence[Any]) -> Tuple[Any, ...]:
        """Matrix times a raw column vector."""
        zero = self.field.zero
        result = []
        for row in self.entries:
            total = zero
            for a, b in zip(row, vector):
                if a and b:
                    total += a * b
            result.append(total)
        return tuple(result)

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_field(self.field, other.field)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in row] for row in self.entries], self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Any) -> "Matrix":
        c = self.field.element(c) if not _is_raw(self.field, c) else c
        return Matrix(self.field, [[c * a for a in row] for row in self.entries], self.rows, self.cols)

    def hstack(self, *others: "Matrix") -> "Matrix":
        rows = [list(row) for row in self.entries]
        cols = self.cols
        for other in others:
            _check_field(self.field, other.field)
            if other.rows != self.rows:
                raise ValueError("hstack needs equal row counts")
            for row, extra in zip(rows, other.entries):
                row.extend(extra)
            cols += other.cols
        return Matrix(self.field, rows, self.rows, cols)

    def vstack(self, *others: "Matrix") -> "Matrix":
        rows = list(self.entries)
        for other in others:
            _check_field(self.field, other.field)
            if other.cols != self.cols:
                raise ValueError("vstack needs equal column counts")
            rows.extend(other.entries)
        return Matrix(self.field, rows, len(rows), self.cols)

    def key(self) -> Tuple:
        key = self.field.key
        return (self.rows, self.cols, tuple(tuple(key(a) for a in row) for row in self.entries))

    def to_strings(self) -> List[List[str]]:
        return [[self.field.format(a) for a in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.field, self.key()))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.to_strings()})"


def _is_raw(field: FieldSpec, value: Any) -> bool:
    return not isinstance(value, (int, str, Fraction, Scalar))


def _check_field(a: FieldSpec, b: FieldSpec):
    if a != b:
        raise FieldMismatchError(f"operands over {a} and {b}")


def check_same_field(matrices: Iterable[Matrix]) -> Optional[FieldSpec]:
    """Return the common field of ``matrices``, raising on a mismatch."""
    field = None
    for m in matrices:
        if field is None:
            field = m.field
        else:
            _check_field(field, m.field)
    return field


def rref(m: Matrix) -> Tuple[List[List[Any]], Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return [list(row) for row in m.entries], ()
    reduced, pivots = m.to_domain_matrix().rref()
    return reduced.to_list(), tuple(int(p) for p in pivots)


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(m.to_domain_matrix().rank())


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning the null space, one per free column of the echelon form."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    zero, one = m.field.zero, m.field.one
    columns = []
    for f in free:
        vector = [zero] * m.cols
        vector[f] = one
        for r, p in enumerate(pivots):
            value = reduced[r][f]
            if value:
                vector[p] = -value
        columns.append(vector)
    return Matrix.from_columns(m.field, columns, m.cols)


def solve(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """Some x with m @ x == rhs, or None when the system is inconsistent."""
    _check_field(m.field, rhs.field)
    if m.rows != rhs.rows:
        raise ValueError(f"shape mismatch: {m.shape} vs rhs {rhs.shape}")
    if m.rows == 0:
        return Matrix.zeros(m.field, m.cols, rhs.cols)
    if m.cols == 0:
        return Matrix.zeros(m.field, 0, rhs.cols) if rhs.is_zero() else None
    reduced, pivots = rref(m.hstack(rhs))
    if any(p >= m.cols for p in pivots):
        return None
    solution = [[m.field.zero] * rhs.cols for _ in range(m.cols)]
    for r, p in enumerate(pivots):
        solution[p] = list(reduced[r][m.cols:])
    return Matrix(m.field, solution, m.cols, rhs.cols)


class QuotientMap:
    """The quotient of k^n by a spanned subspace.

    The quotient basis is the set of standard vectors chosen greedily in
    index order (lowest index first); every coordinate vector is rewritten
    in that basis modulo the subspace.
    """

    def __init__(self, field: FieldSpec, spanning: Sequence[Sequence[Any]], dim: int):
        self.field = field
        self.dim = dim
        reduced: List[List[Any]] = []
        pivots: Tuple[int, ...] = ()
        if spanning and dim:
            flipped = Matrix(field, [list(reversed(v)) for v in spanning], len(spanning), dim)
            reduced, pivots = rref(flipped)
        absorbed = {dim - 1 - p for p in pivots}
        self.complement: Tuple[int, ...] = tuple(k for k in range(dim) if k not in absorbed)
        self.position = {coord: i for i, coord in enumerate(self.complement)}
        self._rules: Dict[int, SparseVector] = {}
        for r, p in enumerate(pivots):
            rule: SparseVector = {}
            for col, value in enumerate(reduced[r]):
                if col != p and value:
                    rule[self.position[dim - 1 - col]] = -value
            self._rules[dim - 1 - p] = rule

    @property
    def subspace_dim(self) -> int:
        return self.dim - len(self.complement)

    @property
    def quotient_dim(self) -> int:
        return len(self.complement)

    def image_of(self, coord: int) -> SparseVector:
        """Image of the standard vector e_coord in the quotient basis."""
        if coord in self.position:
            return {self.position[coord]: self.field.one}
        return self._rules[coord]

    def reduce_sparse(self, vector: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for coord, value in vector.items():
            if value:
                axpy(result, self.image_of(coord), value)
        return result

    def reduce(self, vector: Sequence[Any]) -> Tuple[Any, ...]:
        return densify(self.field, self.reduce_sparse(sparsify(vector)), self.quotient_dim)


def complement_basis(sub: Matrix, ambient_dim: int) -> Matrix:
    """Standard vectors extending the columns of ``sub`` to a basis of k^ambient_dim."""
    if sub.cols and sub.rows != ambient_dim:
        raise ValueError(f"columns of length {sub.rows} in ambient dimension {ambient_dim}")
    if rank(sub) != sub.cols:
        raise DependentColumnsError("complement_basis needs independent columns")
    quotient = QuotientMap(sub.field, sub.columns(), ambient_dim)
    zero, one = sub.field.zero, sub.field.one
    columns = [[one if i == k else zero for i in range(ambient_dim)] for k in quotient.complement]
    return Matrix.from_columns(sub.field, columns, ambient_dim)


def independent_subset(field: FieldSpec, vectors: Sequence[Sequence[Any]], dim: int) -> List[int]:
    """Indices of the first maximal independent subfamily, in input order."""
    if not vectors or not dim:
        return []
    _, pivots = rref(Matrix.from_columns(field, vectors, dim))
    return list(pivots)


def row_space(field: FieldSpec, vectors: Sequence[Sequence[Any]], dim: int) -> Tuple[Tuple[Any, ...], ...]:
    """Canonical basis (reduced echelon rows) of the span of ``vectors``."""
    if not vectors or not dim:
        return ()
    reduced, pivots = rref(Matrix(field, vectors, len(vectors), dim))
    return tuple(tuple(reduced[r]) for r in range(len(pivots)))


def axpy(target: SparseVector, source: SparseVector, c: Any):
    """target += c * source, in place, dropping zeros."""
    for k, v in source.items():
        value = target.get(k)
        value = c * v if value is None else value + c * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


def sparsify(vector: Sequence[Any]) -> SparseVector:
    return {i: v for i, v in enumerate(vector) if v}


def densify(field: FieldSpec, vector: SparseVector, dim: int) -> Tuple[Any, ...]:
    dense = [field.zero] * dim
    for i, v in vector.items():
        dense[i] = v
    return tuple(dense)


def projective_points(field: FieldSpec, dim: int) -> Iterator[Tuple[Any, ...]]:
    """Nonzero vectors of F_p^dim up to scalars, leading coordinate normalized to 1.

    Ordered by the position of the leading coordinate, then lexicographically
    in the residues of the remaining coordinates.
    """
    residues = list(field.elements())
    zero, one = field.zero, field.one
    for lead in range(dim):
        for tail in itertools.product(residues, repeat=dim - lead - 1):
            yield (zero,) * lead + (one,) + tail


def nonzero_vectors(field: FieldSpec, dim: int) -> Iterator[Tuple[Any, ...]]:
    """Every nonzero vector of F_p^dim, lexicographically in residues."""
    for vector in itertools.product(list(field.elements()), repeat=dim):
        if any(vector):
            yield vector


def count_projective_points(p: int, dim: int) -> int:
    return (p ** dim - 1) // (p - 1) if dim else 0
