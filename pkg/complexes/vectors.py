from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exceptions import MalformedVectorError


@dataclass(frozen=True)
class IntVector:
    """Integer face data indexed the way the formulas index it.

    For kind "f" the entries run over indices -1..d (entries[0] is f_{-1} = 1);
    for kind "g" over 0..d+1; for kind "beta" over 0..d. Iteration and len()
    skip f_{-1}, so tuple(f_vector(X)) reads (f_0, ..., f_d).
    """

    kind: str
    entries: tuple

    @property
    def offset(self):
        return -1 if self.kind == "f" else 0

    def __getitem__(self, index):
        pos = index - self.offset
        if pos < 0 or pos >= len(self.entries):
            return 0
        return self.entries[pos]

    def visible(self):
        return self.entries[1:] if self.kind == "f" else self.entries

    def __iter__(self):
        return iter(self.visible())

    def __len__(self):
        return len(self.visible())

    def as_dict(self):
        return list(self.visible())

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.visible()) + ")"


@dataclass(frozen=True)
class RationalVector:
    entries: tuple

    def __getitem__(self, index):
        return self.entries[index] if 0 <= index < len(self.entries) else Fraction(0)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_dict(self):
        return list(self.entries)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.entries) + ")"


def f_vector(X):
    d = X.dim
    return IntVector("f", tuple(len(X.faces(i)) for i in range(-1, d + 1)))


def g_vector(X):
    return g_from_f(f_vector(X), X.dim)


def g_from_f(f, d):
    # g_j = sum_{i=-1}^{j-1} (-1)^{j-i-1} C(d-i+1, j-i-1) f_i
    g = []
    for j in range(d + 2):
        g.append(sum((-1) ** (j - i - 1) * comb(d - i + 1, j - i - 1) * f[i] for i in range(-1, j)))
    return IntVector("g", tuple(g))


def f_from_g(g, d):
    entries = tuple(g.entries if isinstance(g, IntVector) else g)
    if len(entries) != d + 2:
        raise MalformedVectorError(f"a g-vector of a {d}-complex has {d + 2} entries, got {len(entries)}")
    if entries[0] != 1:
        raise MalformedVectorError(f"g_0 must be 1, got {entries[0]}")
    # f_i = sum_{j=0}^{i+1} C(d-j+2, i-j+1) g_j
    f = [sum(comb(d - j + 2, i - j + 1) * entries[j] for j in range(i + 2)) for i in range(-1, d + 1)]
    return IntVector("f", tuple(f))
