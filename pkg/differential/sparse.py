"""
Sparse linear maps over GF(2).
Columns are Python-int bitsets of row indices; a missing column is zero.
"""

from collections.abc import Iterable

from core.utils.bits import iter_ones


class SparseMapF2:
    """Column-indexed GF(2) map on a global generator basis."""

    def __init__(self, rows: int, cols: int, columns: dict[int, int] | None = None):
        self.rows = rows
        self.cols = cols
        self.columns: dict[int, int] = {c: v for c, v in (columns or {}).items() if v}

    @classmethod
    def identity(cls, size: int) -> "SparseMapF2":
        return cls(size, size, {i: 1 << i for i in range(size)})

    @classmethod
    def from_entries(
        cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]
    ) -> "SparseMapF2":
        """Build from (col, row) pairs; repeated pairs cancel."""
        columns: dict[int, int] = {}
        for col, row in entries:
            columns[col] = columns.get(col, 0) ^ (1 << row)
        return cls(rows, cols, columns)

    def column(self, col: int) -> int:
        return self.columns.get(col, 0)

    def merge(self, other: "SparseMapF2") -> None:
        """Add `other` into this map in place."""
        for col, vector in other.columns.items():
            value = self.columns.get(col, 0) ^ vector
            if value:
                self.columns[col] = value
            else:
                self.columns.pop(col, None)

    def __add__(self, other: "SparseMapF2") -> "SparseMapF2":
        self._check_shape(other)
        result = SparseMapF2(self.rows, self.cols, dict(self.columns))
        result.merge(other)
        return result

    def apply(self, vector: int) -> int:
        """Image of a bitset vector of column indices."""
        image = 0
        for col in iter_ones(vector):
            image ^= self.columns.get(col, 0)
        return image

    def compose(self, other: "SparseMapF2") -> "SparseMapF2":
        """self after other."""
        if other.rows != self.cols:
            raise ValueError(f"Cannot compose {self.shape} after {other.shape}")
        columns = {col: self.apply(vector) for col, vector in other.columns.items()}
        return SparseMapF2(self.rows, other.cols, columns)

    def __matmul__(self, other: "SparseMapF2") -> "SparseMapF2":
        return self.compose(other)

    def submap(self, keep: list[int]) -> "SparseMapF2":
        """Restriction to the generators `keep`, re-indexed in that order.

        Rows outside `keep` are dropped.
        """
        position = {g: i for i, g in enumerate(keep)}
        columns = {}
        for i, g in enumerate(keep):
            vector = 0
            for row in iter_ones(self.columns.get(g, 0)):
                if row in position:
                    vector |= 1 << position[row]
            if vector:
                columns[i] = vector
        return SparseMapF2(len(keep), len(keep), columns)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(v.bit_count() for v in self.columns.values())

    def is_zero(self) -> bool:
        return not self.columns

    def entries(self) -> list[tuple[int, int]]:
        """(col, row) pairs sorted by column then row."""
        return [
            (col, row) for col in sorted(self.columns) for row in iter_ones(self.columns[col])
        ]

    def dump(self) -> str:
        """One line per nonzero column: 'col: r1 r2 ...' with sorted rows."""
        lines = []
        for col in sorted(self.columns):
            rows = " ".join(str(r) for r in iter_ones(self.columns[col]))
            lines.append(f"{col}: {rows}")
        return "\n".join(lines)

    def _check_shape(self, other: "SparseMapF2") -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMapF2):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    def __repr__(self) -> str:
        return f"SparseMapF2(shape={self.shape}, nnz={self.nnz})"
