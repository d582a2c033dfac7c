"""Dense matrices over Z[q, q^-1].

Matrices act on column vectors: a matrix for ``f: X -> Y`` has ``dim Y`` rows
and ``dim X`` columns, so the left-to-right composite ``f ; g`` is ``G @ F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .laurent import ONE, ZERO, LaurentPoly, Scalar


class InternalShapeError(RuntimeError):
    """Matrix shapes disagree where the typing rules say they cannot."""


@dataclass(frozen=True, eq=False)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InternalShapeError(f"entries do not form a {self.rows}x{self.cols} array")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> PolyMatrix:
        data = tuple(tuple(LaurentPoly.coerce(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> PolyMatrix:
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def monomial_map(
        cls, rows: int, cols: int, image: Callable[[int], tuple[int, LaurentPoly]]
    ) -> PolyMatrix:
        """Matrix sending source basis vector ``j`` to ``coef * e_i`` where ``(i, coef) = image(j)``."""
        data = [[ZERO] * cols for _ in range(rows)]
        for j in range(cols):
            i, coef = image(j)
            data[i][j] = coef
        return cls(rows, cols, tuple(tuple(r) for r in data))

    # -- structure --------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def nonzeros(self) -> Iterator[tuple[int, int, LaurentPoly]]:
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x:
                    yield i, j, x

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            (x == ONE) if i == j else not x
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
        )

    def is_monomial(self) -> bool:
        """Square, with exactly one unit entry in every row and column."""
        if self.rows != self.cols:
            return False
        seen_cols = set()
        for row in self.entries:
            hits = [(j, x) for j, x in enumerate(row) if x]
            if len(hits) != 1 or not hits[0][1].is_unit():
                return False
            seen_cols.add(hits[0][0])
        return len(seen_cols) == self.cols

    # -- algebra ----------------------------------------------------------

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise InternalShapeError(f"cannot multiply {self.shape} by {other.shape}")
        sparse_other = [[(k, x) for k, x in enumerate(row) if x] for row in other.entries]
        out = []
        for row in self.entries:
            acc: list[LaurentPoly] = [ZERO] * other.cols
            for j, a in enumerate(row):
                if not a:
                    continue
                for k, b in sparse_other[j]:
                    acc[k] = acc[k] + a * b
            out.append(tuple(acc))
        return PolyMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise InternalShapeError(f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def scale(self, c: Scalar) -> PolyMatrix:
        c = LaurentPoly.coerce(c)
        return self.map(lambda x: x * c)

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, tuple(tuple(fn(x) for x in r) for r in self.entries))

    def kron(self, other: PolyMatrix) -> PolyMatrix:
        """Kronecker product; row ``i*other.rows + k`` pairs row ``i`` of self with row ``k``."""
        rows, cols = self.rows * other.rows, self.cols * other.cols
        data = [[ZERO] * cols for _ in range(rows)]
        for i, j, a in self.nonzeros():
            for k, l, b in other.nonzeros():
                data[i * other.rows + k][j * other.cols + l] = a * b
        return PolyMatrix(rows, cols, tuple(tuple(r) for r in data))

    def direct_sum(self, other: PolyMatrix) -> PolyMatrix:
        rows, cols = self.rows + other.rows, self.cols + other.cols
        data = [[ZERO] * cols for _ in range(rows)]
        for i, j, a in self.nonzeros():
            data[i][j] = a
        for i, j, b in other.nonzeros():
            data[self.rows + i][self.cols + j] = b
        return PolyMatrix(rows, cols, tuple(tuple(r) for r in data))

    def inverse(self) -> PolyMatrix:
        """Exact inverse over Z[q, q^-1].

        Monomial matrices invert by transposing and inverting entries. Anything
        else goes through Gauss-Jordan elimination, which requires a unit pivot
        in every column; a matrix for which no such pivot exists raises.
        """
        if self.rows != self.cols:
            raise InternalShapeError(f"cannot invert a {self.shape} matrix")
        if self.is_monomial():
            n = self.rows
            data = [[ZERO] * n for _ in range(n)]
            for i, j, x in self.nonzeros():
                data[j][i] = x.inverse()
            return PolyMatrix(n, n, tuple(tuple(r) for r in data))
        return self._gauss_jordan_inverse()

    def _gauss_jordan_inverse(self) -> PolyMatrix:
        n = self.rows
        a = [list(r) for r in self.entries]
        inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col].is_unit()), None)
            if pivot is None:
                raise ZeroDivisionError("matrix has no unit pivot; not invertible over Z[q, q^-1]")
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            p = a[col][col].inverse()
            a[col] = [x * p for x in a[col]]
            inv[col] = [x * p for x in inv[col]]
            for r in range(n):
                f = a[r][col]
                if r == col or not f:
                    continue
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return PolyMatrix(n, n, tuple(tuple(r) for r in inv))

    def specialize_one(self) -> PolyMatrix:
        return self.map(LaurentPoly.specialize_one)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def first_mismatch(self, other: PolyMatrix) -> tuple[int, int, LaurentPoly, LaurentPoly] | None:
        """First differing entry in row-major order, or None when equal.

        Shapes must agree.
        """
        if self.shape != other.shape:
            raise InternalShapeError(f"cannot compare {self.shape} with {other.shape}")
        for i, (r, s) in enumerate(zip(self.entries, other.entries)):
            for j, (a, b) in enumerate(zip(r, s)):
                if a != b:
                    return i, j, a, b
        return None

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[] ({self.rows}x{self.cols})"
        cells = [[str(x) for x in r] for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def matrix_equal(m: PolyMatrix, n: PolyMatrix) -> bool:
    """Exact equality: same shape and identical Laurent-polynomial entries."""
    return m.shape == n.shape and m.entries == n.entries
