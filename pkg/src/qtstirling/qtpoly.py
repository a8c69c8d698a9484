"""Sparse bivariate integer polynomials in ``q`` and ``t``.

Every Stirling quantity in this package is a :class:`BiPoly`.  Values are
immutable; arithmetic returns new objects in canonical form (no zero
coefficients stored).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Union

Monomial = tuple[int, int]  # (deg_q, deg_t)
Scalar = Union[int, "BiPoly"]


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for (dq, dt), c in items:
            if dq < 0 or dt < 0:
                raise ValueError(f"negative exponent in monomial {(dq, dt)}")
            c = clean.get((dq, dt), 0) + int(c)
            if c:
                clean[(dq, dt)] = c
            else:
                clean.pop((dq, dt), None)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, dq: int = 0, dt: int = 0, c: int = 1) -> BiPoly:
        return cls({(dq, dt): c})

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> BiPoly:
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: lexicographic by ``(deg_q, deg_t)``."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, dq: int, dt: int = 0) -> int:
        return self._terms.get((dq, dt), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def deg_q(self) -> int:
        return max((dq for dq, _ in self._terms), default=-1)

    def deg_t(self) -> int:
        return max((dt for _, dt in self._terms), default=-1)

    def is_t_free(self) -> bool:
        return all(dt == 0 for _, dt in self._terms)

    def q_coefficients(self) -> list[int]:
        """Dense coefficient list in ``q``; the polynomial must be t-free."""
        if not self.is_t_free():
            raise ValueError("polynomial involves t")
        out = [0] * (self.deg_q() + 1)
        for (dq, _), c in self._terms.items():
            out[dq] = c
        return out

    def __int__(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), 0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: Scalar) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other: Scalar) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> BiPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (aq, at), ac in self._terms.items():
            for (bq, bt), bc in other._terms.items():
                m = (aq + bq, at + bt)
                out[m] = out.get(m, 0) + ac * bc
        return BiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, dq: int = 0, dt: int = 0) -> BiPoly:
        """Multiply by the monomial ``q**dq * t**dt``."""
        return BiPoly._raw({(a + dq, b + dt): c for (a, b), c in self._terms.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -------------------------------------------------------

    def subs_q(self, q0: int) -> BiPoly:
        """Substitute the integer ``q0`` for ``q``; the result is a polynomial in t."""
        out: dict[Monomial, int] = {}
        for (dq, dt), c in self._terms.items():
            out[(0, dt)] = out.get((0, dt), 0) + c * q0**dq
        return BiPoly(out)

    def subs_t(self, t0: int) -> BiPoly:
        out: dict[Monomial, int] = {}
        for (dq, dt), c in self._terms.items():
            out[(dq, 0)] = out.get((dq, 0), 0) + c * t0**dt
        return BiPoly(out)

    def square_q(self) -> BiPoly:
        """The substitution ``q -> q**2``."""
        return BiPoly._raw({(2 * dq, dt): c for (dq, dt), c in self._terms.items()})

    def subst_t_with_one_plus_q(self) -> BiPoly:
        return subst_t_with_one_plus_q(self)

    # -- rendering ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (dq, dt), c in self.items():
            mono = []
            if dq:
                mono.append("q" if dq == 1 else f"q^{dq}")
            if dt:
                mono.append("t" if dt == 1 else f"t^{dt}")
            body = "*".join(mono)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    def to_json_obj(self) -> dict:
        return {"terms": [{"q": dq, "t": dt, "c": str(c)} for (dq, dt), c in self.items()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> BiPoly:
        return cls({(int(t["q"]), int(t["t"])): int(t["c"]) for t in obj["terms"]})

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str) -> BiPoly:
        return cls.from_json_obj(json.loads(s))


ZERO = BiPoly()
ONE = BiPoly.const(1)
q = BiPoly.monomial(1, 0)
t = BiPoly.monomial(0, 1)


def add(a: BiPoly, b: BiPoly) -> BiPoly:
    return a + b


def mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return a * b


def subst_t_with_one_plus_q(p: BiPoly) -> BiPoly:
    """Replace every ``t`` by ``1 + q``."""
    # group by t-degree, then expand (1+q)^dt once per degree
    by_t: dict[int, dict[int, int]] = {}
    for (dq, dt), c in p._terms.items():
        by_t.setdefault(dt, {})[dq] = c
    out: dict[Monomial, int] = {}
    for dt, row in by_t.items():
        binom = _binomial_row(dt)
        for dq, c in row.items():
            for j, b in enumerate(binom):
                m = (dq + j, 0)
                out[m] = out.get(m, 0) + c * b
    return BiPoly(out)


def _binomial_row(n: int) -> list[int]:
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def eval_q(p: BiPoly, q0: int) -> BiPoly:
    """Evaluate at ``q = q0``.  Compares equal to an ``int`` when t-free."""
    return p.subs_q(q0)


def q_int(n: int) -> BiPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return BiPoly({(i, 0): 1 for i in range(n)})


def q_factorial(n: int) -> BiPoly:
    p = ONE
    for i in range(1, n + 1):
        p = p * q_int(i)
    return p


def gauss_binomial(n: int, k: int, square: bool = False) -> BiPoly:
    """Gaussian binomial ``[n choose k]_q`` via the Pascal recurrence.

    ``[n, k] = [n-1, k-1] + q^k [n-1, k]``.  With ``square=True`` the result
    is taken in ``q^2``.  Out-of-range ``k`` gives zero.
    """
    if n < 0 or k < 0 or k > n:
        return ZERO
    row = [ONE]  # row[j] = [i choose j]
    for i in range(1, n + 1):
        new = [ONE]
        for j in range(1, min(i, k) + 1):
            left = row[j - 1]
            right = row[j] if j < len(row) else ZERO
            new.append(left + right.shift(dq=j))
        row = new
    result = row[k]
    return result.square_q() if square else result


def qt_int(k: int) -> BiPoly:
    """The two-variable refinement ``[k]_{q,t}`` of ``[k]_q``.

    Even ``k``: ``(q^{k-2} + q^{k-4} + ... + 1) t``.
    Odd ``k``:  ``q^{k-1} + (q^{k-3} + ... + 1) t``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return ZERO
    terms = {(e, 1): 1 for e in range(0, k - 1, 2)}
    if k % 2:
        terms[(k - 1, 0)] = 1
    return BiPoly(terms)
