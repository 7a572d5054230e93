"""
Bit-packed GF(2) matrices and Gaussian elimination.
Each column is a Python int whose set bits are its nonzero rows.
"""

from collections.abc import Iterable

import numpy as np

from core.utils.bits import iter_ones


class EchelonBasis:
    """Incrementally reduced set of GF(2) vectors keyed by leading bit."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    def reduce(self, vector: int) -> int:
        while vector:
            lead = vector.bit_length() - 1
            pivot = self.pivots.get(lead)
            if pivot is None:
                return vector
            vector ^= pivot
        return 0

    def add(self, vector: int) -> bool:
        """Insert a vector; False if it was already in the span."""
        reduced = self.reduce(vector)
        if not reduced:
            return False
        self.pivots[reduced.bit_length() - 1] = reduced
        return True

    def __len__(self) -> int:
        return len(self.pivots)


def rank_of(vectors: Iterable[int]) -> int:
    basis = EchelonBasis()
    for vector in vectors:
        basis.add(vector)
    return len(basis)


def kernel_basis(columns: list[int]) -> list[int]:
    """Basis of the kernel of the map whose i-th column is columns[i].

    Returns:
        Kernel vectors as bitsets over column positions.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for position, vector in enumerate(columns):
        combo = 1 << position
        while vector:
            lead = vector.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (vector, combo)
                break
            pivot_vector, pivot_combo = pivots[lead]
            vector ^= pivot_vector
            combo ^= pivot_combo
        else:
            kernel.append(combo)
    return kernel


class F2Matrix:
    """Dense-dimension GF(2) matrix with bit-packed columns."""

    def __init__(self, rows: int, cols: int, columns: list[int] | None = None):
        self.rows = rows
        self.cols = cols
        self.columns = list(columns) if columns is not None else [0] * cols
        if len(self.columns) != cols:
            raise ValueError(f"Expected {cols} columns, got {len(self.columns)}")
        limit = 1 << rows
        if any(c < 0 or c >= limit for c in self.columns):
            raise ValueError("Column has bits outside the row range")

    @classmethod
    def identity(cls, size: int) -> "F2Matrix":
        return cls(size, size, [1 << i for i in range(size)])

    @classmethod
    def from_dense(cls, array: np.ndarray) -> "F2Matrix":
        array = np.asarray(array) % 2
        rows, cols = array.shape
        columns = []
        for j in range(cols):
            value = 0
            for i in np.flatnonzero(array[:, j]):
                value |= 1 << int(i)
            columns.append(value)
        return cls(rows, cols, columns)

    def to_dense(self) -> np.ndarray:
        array = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for j, column in enumerate(self.columns):
            for i in iter_ones(column):
                array[i, j] = 1
        return array

    def transpose(self) -> "F2Matrix":
        columns = [0] * self.rows
        for j, column in enumerate(self.columns):
            for i in iter_ones(column):
                columns[i] |= 1 << j
        return F2Matrix(self.cols, self.rows, columns)

    def rank(self) -> int:
        return rank_of(self.columns)

    def kernel(self) -> list[int]:
        return kernel_basis(self.columns)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.rows:
            raise ValueError("Dimension mismatch")
        columns = []
        for column in other.columns:
            value = 0
            for i in iter_ones(column):
                value ^= self.columns[i]
            columns.append(value)
        return F2Matrix(self.rows, other.cols, columns)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.columns) == (other.rows, other.cols, other.columns)

    def __repr__(self) -> str:
        return f"F2Matrix({self.rows}x{self.cols})"


def rank(matrix: F2Matrix) -> int:
    """Rank over GF(2)."""
    return matrix.rank()
