"""Sparse integer polynomials in two commuting variables ``w`` and ``r``.

A :class:`Poly2` is an immutable map ``(deg_w, deg_r) -> coeff`` with no zero
coefficients stored.  Coefficients are Python ints, so there is no overflow.

Term order
----------
Terms are ordered by descending total degree, then ascending ``deg_w``
(so ``r``-heavy terms come first among equal total degree), then descending
coefficient.  This is the order used by :func:`render`, by the JSON term list
and, lexicographically over term lists, by :func:`compare`.  It happens to
reproduce the order in which published WRP values are usually printed, e.g.
``2r^4w^4 + 2r^2w^6 + 2r^2w^4 + w^6 + 2r^4 + 4w^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "Monomial2",
    "Poly2",
    "monomial",
    "add",
    "mul",
    "swap_vars",
    "compare",
    "render",
    "parse_poly",
    "term_key",
]


@dataclass(frozen=True, order=True)
class Monomial2:
    deg_w: int
    deg_r: int

    def __post_init__(self):
        if self.deg_w < 0 or self.deg_r < 0:
            raise ValueError(f"negative degree in monomial ({self.deg_w}, {self.deg_r})")

    def __mul__(self, other: Monomial2) -> Monomial2:
        return Monomial2(self.deg_w + other.deg_w, self.deg_r + other.deg_r)

    @property
    def total(self) -> int:
        return self.deg_w + self.deg_r

    def __str__(self):
        return _mono_str(self.deg_w, self.deg_r) or "1"


W = Monomial2(1, 0)
R = Monomial2(0, 1)


def term_key(deg_w: int, deg_r: int, coeff: int) -> tuple[int, int, int]:
    """Sort key of a single term; see the module docstring."""
    return (-(deg_w + deg_r), deg_w, -coeff)


class Poly2:
    """Immutable sparse polynomial in ``Z[w, r]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative degree ({i}, {j})")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient must be int, got {type(c).__name__}")
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[tuple[int, int], int]) -> Poly2:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def from_monomial(cls, m: Monomial2, coeff: int = 1) -> Poly2:
        return monomial(m.deg_w, m.deg_r, coeff)

    @classmethod
    def from_terms(cls, triples: Iterable[Iterable[int]]) -> Poly2:
        """Build from ``[[deg_w, deg_r, coeff], ...]``; repeated monomials are summed."""
        acc: dict[tuple[int, int], int] = {}
        for i, j, c in triples:
            acc[(i, j)] = acc.get((i, j), 0) + c
        return cls(acc)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, deg_w: int, deg_r: int) -> int:
        return self._terms.get((deg_w, deg_r), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return sorted(((i, j, c) for (i, j), c in self._terms.items()), key=lambda t: term_key(*t))

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.sorted_terms()]

    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def evaluate(self, w, r):
        return sum(c * w**i * r**j for (i, j), c in self._terms.items())

    def __add__(self, other):
        if isinstance(other, int):
            other = monomial(0, 0, other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Poly2._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = monomial(0, 0, other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = monomial(0, 0, other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly2:
        if n < 0:
            raise ValueError("negative power")
        result = monomial(0, 0, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = monomial(0, 0, other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __lt__(self, other: Poly2) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: Poly2) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: Poly2) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: Poly2) -> bool:
        return compare(self, other) >= 0

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly2({render(self)!r})"


def monomial(deg_w: int, deg_r: int, coeff: int = 1) -> Poly2:
    if deg_w < 0 or deg_r < 0:
        raise ValueError(f"negative degree ({deg_w}, {deg_r})")
    return Poly2._from_clean({(deg_w, deg_r): coeff} if coeff else {})


def add(a: Poly2, b: Poly2) -> Poly2:
    out = dict(a._terms)
    for k, c in b._terms.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return Poly2._from_clean(out)


def mul(a: Poly2, b: Poly2) -> Poly2:
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in a._terms.items():
        for (i2, j2), c2 in b._terms.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return Poly2._from_clean({k: c for k, c in out.items() if c})


def swap_vars(a: Poly2) -> Poly2:
    """Exchange ``w`` and ``r`` (the effect of mirroring a diagram)."""
    return Poly2._from_clean({(j, i): c for (i, j), c in a._terms.items()})


def compare(a: Poly2, b: Poly2) -> int:
    """Total order on polynomials: -1, 0 or 1.

    The sorted term lists are compared lexicographically by :func:`term_key`;
    a proper prefix sorts first, so the zero polynomial is the minimum.
    """
    ka = [term_key(*t) for t in a.sorted_terms()]
    kb = [term_key(*t) for t in b.sorted_terms()]
    return (ka > kb) - (ka < kb)


def _mono_str(deg_w: int, deg_r: int) -> str:
    out = ""
    for name, d in (("r", deg_r), ("w", deg_w)):
        if d == 1:
            out += name
        elif d > 1:
            out += f"{name}^{d}"
    return out


def render(a: Poly2) -> str:
    if a.is_zero():
        return "0"
    pieces = []
    for i, j, c in a.sorted_terms():
        mono = _mono_str(i, j)
        mag = abs(c)
        body = mono if (mono and mag == 1) else f"{mag}{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*((?:[wr](?:\^\d+)?\s*\*?\s*)*)")
_FACTOR_RE = re.compile(r"([wr])(?:\^(\d+))?")


def parse_poly(text: str) -> Poly2:
    """Parse the rendered form back into a :class:`Poly2`.

    Accepts ``render`` output plus a little slack (``*`` separators, either
    variable order, repeated variables), e.g. ``"2r^4w^4 + 2r^2*w^6 - 3"``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return Poly2()
    acc: dict[tuple[int, int], int] = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos >= len(s):
            break
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {s[pos:]!r}")
        sign, digits, factors = m.group(1), m.group(2), m.group(3)
        if not sign and not first:
            raise ValueError(f"missing operator before position {pos} in {s!r}")
        if not digits and not factors.strip():
            raise ValueError(f"empty term at position {pos} in {s!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        dw = dr = 0
        for var, exp in _FACTOR_RE.findall(factors):
            e = int(exp) if exp else 1
            if var == "w":
                dw += e
            else:
                dr += e
        acc[(dw, dr)] = acc.get((dw, dr), 0) + coeff
        pos = m.end()
        first = False
    return Poly2(acc)
