"""Dense immutable matrices over a FieldSpec."""

from typing import Iterable, List, Sequence, Tuple

from ..errors import DimensionMismatch
from .field import FieldSpec, Scalar

Vector = Tuple[Scalar, ...]


class Mat:
    """A rows x cols matrix stored row-major as a tuple of field elements."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(
        self, field: FieldSpec, rows: int, cols: int, entries: Iterable[Scalar]
    ):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Mat":
        one, zero = field.one, field.zero
        entries = [one if i == j else zero for i in range(n) for j in range(n)]
        return cls(field, n, n, entries)

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence], cols: int = None
    ) -> "Mat":
        rows = [[field.element(v) for v in row] for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(
                    f"ragged row of length {len(r)}, expected {cols}"
                )
        return cls(field, len(rows), cols, [v for r in rows for v in r])

    @classmethod
    def from_columns(
        cls, field: FieldSpec, rows: int, columns: Sequence[Sequence[Scalar]]
    ) -> "Mat":
        cols = len(columns)
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatch(f"column of length {len(c)}, expected {rows}")
        entries = [columns[j][i] for i in range(rows) for j in range(cols)]
        return cls(field, rows, cols, entries)

    @classmethod
    def column(cls, field: FieldSpec, values: Sequence[Scalar]) -> "Mat":
        return cls(field, len(values), 1, values)

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_vector(self) -> Vector:
        """Entries of a column (or row) matrix."""
        if self.cols != 1 and self.rows != 1:
            raise DimensionMismatch(f"{self.rows}x{self.cols} is not a vector")
        return self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        rows = (" ".join(str(v) for v in self.row(i)) for i in range(self.rows))
        body = "; ".join(rows)
        return f"Mat<{self.field}>[{body}]"

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Mat") -> None:
        self.field.check_same(other.field)

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        f = self.field
        entries = [f.add(a, b) for a, b in zip(self.entries, other.entries)]
        return Mat(f, self.rows, self.cols, entries)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        f = self.field
        entries = [f.sub(a, b) for a, b in zip(self.entries, other.entries)]
        return Mat(f, self.rows, self.cols, entries)

    def __neg__(self) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [f.neg(a) for a in self.entries])

    def scale(self, c: Scalar) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [f.mul(c, a) for a in self.entries])

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        n, m, k = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            for j in range(k):
                acc = 0
                for t in range(m):
                    x = arow[t]
                    if x:
                        acc += x * b[t * k + j]
                out.append(f.reduce(acc) if f.is_prime else f.element(acc))
        return Mat(f, n, k, out)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix-vector product with a plain coordinate tuple."""
        if len(v) != self.cols:
            raise DimensionMismatch(
                f"vector of length {len(v)} for {self.shape} matrix"
            )
        f = self.field
        out = []
        for i in range(self.rows):
            row = self.entries[i * self.cols : (i + 1) * self.cols]
            acc = 0
            for x, y in zip(row, v):
                if x and y:
                    acc += x * y
            out.append(f.reduce(acc) if f.is_prime else f.element(acc))
        return tuple(out)

    def transpose(self) -> "Mat":
        entries = [self[i, j] for j in range(self.cols) for i in range(self.rows)]
        return Mat(self.field, self.cols, self.rows, entries)

    def hstack(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack of {self.shape} and {other.shape}")
        return Mat(
            self.field,
            self.rows,
            self.cols + other.cols,
            [v for i in range(self.rows) for v in self.row(i) + other.row(i)],
        )

    def vstack(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.cols != other.cols:
            raise DimensionMismatch(f"vstack of {self.shape} and {other.shape}")
        return Mat(
            self.field, self.rows + other.rows, self.cols, self.entries + other.entries
        )

    def power(self, n: int) -> "Mat":
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        result = Mat.identity(self.field, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result


def vec_add(field: FieldSpec, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: FieldSpec, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: FieldSpec, c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(field.mul(c, a) for a in v)


def vec_axpy(
    field: FieldSpec, c: Scalar, x: Sequence[Scalar], y: Sequence[Scalar]
) -> Vector:
    """c*x + y."""
    return tuple(field.add(field.mul(c, a), b) for a, b in zip(x, y))


def vec_zero(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    return tuple(field.one if k == i else field.zero for k in range(n))


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return all(a == 0 for a in v)
