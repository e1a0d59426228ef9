"""Dense exact matrices over the scalar fields, with inverse engines.

Square matrices of a fixed size over one field form a ring with
involution; the involution is the entrywise-conjugate transpose, which
degenerates to the plain transpose over the rationals and prime fields.
Solvers are constructive and field-generic: MP inverses come from a
full-rank factorization and two Gram inversions, Drazin inverses from
the core-nilpotent similarity, so no complex-field shortcut is ever
assumed.  Existence failures are reported as None, not exceptions;
over a prime field "no MP inverse" is ordinary data.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalars import Field, GaussianRationalField, PrimeField, RationalField, is_prime


class ZeroMatrixError(ValueError):
    """Raised where a nonzero matrix is required (rank factorization)."""


class MatrixParseError(ValueError):
    """Malformed matrix text; carries 1-based line and entry position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", entry {column}"
            where += ": "
        super().__init__(where + message)


class ExactMatrix:
    """Immutable dense matrix with entries in one exact field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries: Sequence):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable]) -> "ExactMatrix":
        """Build a matrix from nested rows, canonicalizing each entry."""
        data = [list(r) for r in rows]
        if not data:
            raise ValueError("no rows")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        return cls(field, len(data), width, [field.coerce(e) for r in data for e in r])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, rows, cols, [field.zero()] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def _same_shape(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        f = self.field
        return ExactMatrix(
            f, self.rows, self.cols,
            [f.add(a, b) for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        f = self.field
        return ExactMatrix(
            f, self.rows, self.cols,
            [f.sub(a, b) for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> "ExactMatrix":
        f = self.field
        return ExactMatrix(f, self.rows, self.cols, [f.neg(a) for a in self.entries])

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        out = []
        for i in range(n):
            base = i * k
            for j in range(m):
                acc = f.zero()
                for t in range(k):
                    acc = f.add(acc, f.mul(self.entries[base + t], other.entries[t * m + j]))
                out.append(acc)
        return ExactMatrix(f, n, m, out)

    def scale(self, s) -> "ExactMatrix":
        f = self.field
        s = f.coerce(s)
        return ExactMatrix(f, self.rows, self.cols, [f.mul(s, a) for a in self.entries])

    def star(self) -> "ExactMatrix":
        """Entrywise-conjugate transpose."""
        f = self.field
        out = [f.conj(self.entry(i, j)) for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(f, self.cols, self.rows, out)

    def one_like(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("unit requires a square matrix")
        return ExactMatrix.identity(self.field, self.rows)

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(a) for a in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        f = self.field
        body = "; ".join(" ".join(f.format(e) for e in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({f.label}: {body})"


def _hstack(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    rows = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    return ExactMatrix.from_rows(a.field, rows)


def _submatrix(a: ExactMatrix, rows: range, cols: range) -> ExactMatrix:
    return ExactMatrix.from_rows(a.field, [[a.entry(i, j) for j in cols] for i in rows])


def _columns(a: ExactMatrix, indices: Sequence[int]) -> ExactMatrix:
    return ExactMatrix.from_rows(a.field, [[a.entry(i, j) for j in indices] for i in range(a.rows)])


def rref(matrix: ExactMatrix) -> tuple[ExactMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns:
        (R, rank, pivots) where R has unit pivots with zeroed pivot
        columns and pivots lists the pivot column indices in order.
    """
    f = matrix.field
    m, n = matrix.rows, matrix.cols
    data = matrix.to_rows()
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        pivot_row = next((i for i in range(r, m) if not f.is_zero(data[i][col])), None)
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        scale = f.inv(data[r][col])
        data[r] = [f.mul(scale, e) for e in data[r]]
        for i in range(m):
            if i != r and not f.is_zero(data[i][col]):
                factor = data[i][col]
                data[i] = [f.sub(e, f.mul(factor, piv)) for e, piv in zip(data[i], data[r])]
        pivots.append(col)
        r += 1
    return ExactMatrix.from_rows(f, data), r, tuple(pivots)


def rank(matrix: ExactMatrix) -> int:
    return rref(matrix)[1]


def inverse(matrix: ExactMatrix) -> ExactMatrix | None:
    """Two-sided inverse of a square matrix, or None if singular."""
    if matrix.rows != matrix.cols:
        raise ValueError("inverse requires a square matrix")
    n = matrix.rows
    aug = _hstack(matrix, ExactMatrix.identity(matrix.field, n))
    reduced, r, pivots = rref(aug)
    if r < n or pivots[:n] != tuple(range(n)):
        return None
    return _submatrix(reduced, range(n), range(n, 2 * n))


def null_space_basis(matrix: ExactMatrix) -> ExactMatrix | None:
    """Columns spanning the right null space, or None when it is trivial."""
    f = matrix.field
    n = matrix.cols
    reduced, _, pivots = rref(matrix)
    free = [j for j in range(n) if j not in pivots]
    if not free:
        return None
    cols = []
    for fc in free:
        vec = [f.zero()] * n
        vec[fc] = f.one()
        for i, pc in enumerate(pivots):
            vec[pc] = f.neg(reduced.entry(i, fc))
        cols.append(vec)
    return ExactMatrix.from_rows(f, [[cols[c][i] for c in range(len(free))] for i in range(n)])


@dataclass(frozen=True)
class RankFactorization:
    """A = F G with F of full column rank and G of full row rank."""

    F: ExactMatrix
    G: ExactMatrix
    rank: int


def full_rank_factorization(matrix: ExactMatrix) -> RankFactorization:
    """Split a nonzero matrix as (pivot columns) x (nonzero rref rows).

    Raises:
        ZeroMatrixError: for the zero matrix, which has no such split;
            callers treat its MP inverse as zero directly.
    """
    if matrix.is_zero():
        raise ZeroMatrixError("zero matrix has no full-rank factorization")
    reduced, r, pivots = rref(matrix)
    f_part = _columns(matrix, pivots)
    g_part = _submatrix(reduced, range(r), range(matrix.cols))
    return RankFactorization(f_part, g_part, r)


def mp_inverse(matrix: ExactMatrix) -> ExactMatrix | None:
    """Moore-Penrose inverse over the matrix's field, or None.

    Uses A = FG and B = G* (G G*)^-1 (F* F)^-1 F*; B exists exactly
    when both r x r Gram matrices are invertible.  Over the rationals
    and Gaussian rationals they always are; over a prime field a
    singular Gram means the matrix has no MP inverse at all, which is
    meaningful data for the equivalence batteries.
    """
    if matrix.is_zero():
        return ExactMatrix.zeros(matrix.field, matrix.cols, matrix.rows)
    fact = full_rank_factorization(matrix)
    g_star = fact.G.star()
    f_star = fact.F.star()
    gram_g = inverse(fact.G * g_star)
    if gram_g is None:
        return None
    gram_f = inverse(f_star * fact.F)
    if gram_f is None:
        return None
    return g_star * gram_g * gram_f * f_star


def drazin_inverse(matrix: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Drazin inverse and index via the core-nilpotent similarity.

    The index is the smallest k >= 0 with rank(A^k) = rank(A^(k+1)),
    counting A^0 = I, so invertible matrices have index 0.  With S
    assembled from a column-space basis and a null-space basis of A^k,
    S^-1 A S is block diagonal with an invertible block C and a
    nilpotent block; the result is S diag(C^-1, 0) S^-1.  Valid over
    any field, every square matrix has one.
    """
    if matrix.rows != matrix.cols:
        raise ValueError("Drazin inverse requires a square matrix")
    f = matrix.field
    n = matrix.rows
    power = ExactMatrix.identity(f, n)
    power_rank = n
    k = 0
    while True:
        nxt = power * matrix
        nxt_rank = rank(nxt)
        if nxt_rank == power_rank:
            break
        power, power_rank = nxt, nxt_rank
        k += 1
    if k == 0:
        inv = inverse(matrix)
        assert inv is not None
        return inv, 0
    if power_rank == 0:
        return ExactMatrix.zeros(f, n, n), k
    r = power_rank
    _, _, pivots = rref(power)
    col_basis = _columns(power, pivots)
    null_basis = null_space_basis(power)
    assert null_basis is not None
    s = _hstack(col_basis, null_basis)
    s_inv = inverse(s)
    assert s_inv is not None
    core = s_inv * matrix * s
    c_block = _submatrix(core, range(r), range(r))
    c_inv = inverse(c_block)
    assert c_inv is not None
    z = f.zero()
    block = [
        [c_inv.entry(i, j) if i < r and j < r else z for j in range(n)]
        for i in range(n)
    ]
    return s * ExactMatrix.from_rows(f, block) * s_inv, k


def group_inverse(matrix: ExactMatrix) -> ExactMatrix | None:
    """Drazin inverse when the index is at most 1, else None."""
    witness, k = drazin_inverse(matrix)
    return witness if k <= 1 else None


def same_column_space(a: ExactMatrix, b: ExactMatrix) -> bool:
    """Exact column-space equality decided by ranks of concatenations."""
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(_hstack(a, b))


def isotropic_vector(p: int, n: int) -> tuple[int, ...] | None:
    """A nonzero v over GF(p) with sum(v_i^2) = 0, or None if none exists.

    Existence is what makes the n x n transpose ring fail to be
    *-reducing: place v in one column of an otherwise zero matrix and
    A* A vanishes while A does not.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    if p == 2:
        if n >= 2:
            return (1, 1) + (0,) * (n - 2)
        return None
    if n == 1:
        return None
    squares = {(x * x) % p: x for x in range(p)}
    if n == 2:
        root = squares.get((-1) % p)
        if root is None:
            return None
        return (1, root)
    # n >= 3: x^2 + y^2 = -1 always has a solution mod an odd prime.
    for y in range(p):
        x = squares.get((-1 - y * y) % p)
        if x is not None:
            return (x, y, 1) + (0,) * (n - 3)
    raise AssertionError("unreachable: x^2 + y^2 = -1 is always solvable mod p")


@dataclass(frozen=True)
class MatrixRing:
    """The *-ring of n x n matrices over one exact field."""

    field: Field
    n: int

    def zero(self) -> ExactMatrix:
        return ExactMatrix.zeros(self.field, self.n, self.n)

    def one(self) -> ExactMatrix:
        return ExactMatrix.identity(self.field, self.n)

    def element(self, rows: Iterable[Iterable]) -> ExactMatrix:
        mat = ExactMatrix.from_rows(self.field, rows)
        if mat.rows != self.n or mat.cols != self.n:
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        return mat

    @property
    def ring_id(self) -> str:
        if isinstance(self.field, RationalField):
            return "q"
        if isinstance(self.field, GaussianRationalField):
            return "qi"
        if isinstance(self.field, PrimeField):
            return f"gf:{self.field.p}"
        raise TypeError("unknown field")

    @property
    def is_star_reducing(self) -> bool:
        """Whether A* A = 0 forces A = 0 in this ring.

        True over the rationals and Gaussian rationals, where the trace
        of A* A is a sum of squared magnitudes.  Over GF(p) it reduces
        to whether the standard quadratic form has a nonzero isotropic
        vector.
        """
        if isinstance(self.field, (RationalField, GaussianRationalField)):
            return True
        if isinstance(self.field, PrimeField):
            return isotropic_vector(self.field.p, self.n) is None
        raise TypeError("unknown field")

    def non_star_reducing_witness(self) -> ExactMatrix | None:
        """A nonzero matrix with A* A = 0, when the ring admits one."""
        if not isinstance(self.field, PrimeField):
            return None
        vec = isotropic_vector(self.field.p, self.n)
        if vec is None:
            return None
        z = self.field.zero()
        rows = [[vec[i] if j == 0 else z for j in range(self.n)] for i in range(self.n)]
        return self.element(rows)


class MatrixInverseEngine:
    """Constructive inverse engine for one MatrixRing."""

    def __init__(self, ring: MatrixRing):
        self.ring = ring

    @property
    def ring_id(self) -> str:
        return self.ring.ring_id

    @property
    def star_reducing(self) -> bool:
        return self.ring.is_star_reducing

    def mp(self, x: ExactMatrix) -> ExactMatrix | None:
        return mp_inverse(x)

    def drazin(self, x: ExactMatrix) -> tuple[ExactMatrix, int]:
        return drazin_inverse(x)

    def serialize(self, x: ExactMatrix) -> str:
        return format_matrix(x)


_FIELD_HEADERS = {"Q": RationalField, "QI": GaussianRationalField}


def format_matrix(matrix: ExactMatrix) -> str:
    """Render a matrix in the text exchange format."""
    f = matrix.field
    lines = [f"ring {f.label}", f"rows {matrix.rows}", f"cols {matrix.cols}"]
    for i in range(matrix.rows):
        lines.append(" ".join(f.format(e) for e in matrix.row(i)))
    return "\n".join(lines) + "\n"


def format_matrix_inline(matrix: ExactMatrix) -> str:
    """One-line rendering: rows joined by ';', entries by spaces."""
    f = matrix.field
    return "; ".join(" ".join(f.format(e) for e in matrix.row(i)) for i in range(matrix.rows))


def parse_matrix(text: str) -> ExactMatrix:
    """Parse the text exchange format.

    Expected layout: a ``ring`` header (Q, QI, or GF <p>), then
    ``rows <m>`` and ``cols <n>``, then m lines of n whitespace
    separated entries.  Blank lines are ignored.  Malformed input
    raises MatrixParseError with the offending line and entry.
    """
    numbered = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in numbered if line]
    if len(lines) < 3:
        raise MatrixParseError("expected ring/rows/cols headers")

    no, header = lines[0]
    tokens = header.split()
    if not tokens or tokens[0] != "ring":
        raise MatrixParseError("first line must be a 'ring' header", no)
    if len(tokens) == 2 and tokens[1] in _FIELD_HEADERS:
        field: Field = _FIELD_HEADERS[tokens[1]]()
    elif len(tokens) == 3 and tokens[1] == "GF":
        try:
            p = int(tokens[2])
        except ValueError:
            raise MatrixParseError(f"bad GF modulus {tokens[2]!r}", no) from None
        if not is_prime(p):
            raise MatrixParseError(f"GF modulus {p} is not prime", no)
        field = PrimeField(p)
    else:
        raise MatrixParseError(f"unknown ring header {header!r}", no)

    def read_dim(index: int, name: str) -> int:
        line_no, line = lines[index]
        parts = line.split()
        if len(parts) != 2 or parts[0] != name:
            raise MatrixParseError(f"expected '{name} <count>'", line_no)
        try:
            value = int(parts[1])
        except ValueError:
            raise MatrixParseError(f"bad {name} count {parts[1]!r}", line_no) from None
        if value < 1:
            raise MatrixParseError(f"{name} must be positive", line_no)
        return value

    m = read_dim(1, "rows")
    n = read_dim(2, "cols")
    body = lines[3:]
    if len(body) != m:
        raise MatrixParseError(f"expected {m} entry rows, found {len(body)}")
    entries = []
    for line_no, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixParseError(f"expected {n} entries, found {len(tokens)}", line_no)
        for col, token in enumerate(tokens, start=1):
            try:
                entries.append(field.parse(token))
            except ValueError as exc:
                raise MatrixParseError(str(exc), line_no, col) from None
    return ExactMatrix(field, m, n, entries)
