from dataclasses import dataclass

import numpy as np
from sympy import ZZ
from sympy.ntheory import isprime
from sympy.polys.matrices import DomainMatrix

from .exceptions import FieldError

# p * p has to fit in int64 for the vectorised row updates.
INT64_PRIME_LIMIT = 2**31


def is_prime(p):
    return p >= 2 and isprime(p)


def _kept_rows(columns, drop_rows):
    return sorted({r for col in columns for r in col if not drop_rows >> r & 1})


@dataclass(frozen=True)
class Rationals:
    """Q. Ranks come from sympy's DomainMatrix, integer entries lifted to QQ."""

    name = "q"

    def encode(self, column):
        return dict(column)

    def rank(self, columns, drop_rows=0):
        rows = _kept_rows(columns, drop_rows)
        if not rows or not columns:
            return 0
        where = {r: j for j, r in enumerate(rows)}
        entries = {}
        for i, col in enumerate(columns):
            kept = {where[r]: ZZ(c) for r, c in col.items() if r in where and c}
            if kept:
                entries[i] = kept
        if not entries:
            return 0
        matrix = DomainMatrix(entries, (len(columns), len(rows)), ZZ)
        return matrix.to_field().rank()

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """F_p. p = 2 packs each column into one int; odd p eliminates with numpy."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def name(self):
        return f"f{self.p}"

    def encode(self, column):
        if self.p == 2:
            packed = 0
            for r, c in column.items():
                if c % 2:
                    packed |= 1 << r
            return packed
        return {r: c % self.p for r, c in column.items() if c % self.p}

    def rank(self, columns, drop_rows=0):
        if self.p == 2:
            return _xor_rank(columns, drop_rows)
        return _numpy_rank(columns, drop_rows, self.p)

    def __str__(self):
        return f"F_{self.p}"


def _xor_rank(columns, drop_rows):
    keep = ~drop_rows
    basis = {}
    for v in columns:
        v &= keep
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


def _numpy_rank(columns, drop_rows, p):
    rows = _kept_rows(columns, drop_rows)
    if not rows or not columns:
        return 0
    where = {r: i for i, r in enumerate(rows)}
    dtype = np.int64 if p < INT64_PRIME_LIMIT else object
    mat = np.zeros((len(columns), len(rows)), dtype=dtype)
    for i, col in enumerate(columns):
        for r, c in col.items():
            if r in where:
                mat[i, where[r]] = c
    rank = 0
    n_vectors, n_coords = mat.shape
    for coord in range(n_coords):
        nonzero = np.nonzero(mat[rank:, coord])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + nonzero[0]
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        inverse = pow(int(mat[rank, coord]), -1, p)
        mat[rank] = mat[rank] * inverse % p
        others = np.nonzero(mat[:, coord])[0]
        others = others[others != rank]
        if others.size:
            mat[others] = (mat[others] - np.outer(mat[others, coord], mat[rank])) % p
        rank += 1
        if rank == n_vectors:
            break
    return rank


def parse_field(text):
    if not isinstance(text, str):
        return text
    text = text.strip().lower()
    if text in ("q", "rationals", "qq"):
        return Rationals()
    if text.startswith("f") or text.startswith("z"):
        try:
            return PrimeField(int(text[1:]))
        except ValueError:
            pass
    raise FieldError(f"unknown field {text!r}; use q, f2 or fP for a prime P")


Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)
