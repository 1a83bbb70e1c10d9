"""Weyl factors of indecomposable tilting modules and the inverse matrix.

For a regime, row ``m`` of ``c`` is ``[T(m)]`` in the Weyl basis and row ``m``
of ``d`` is ``[D(m)]`` in the tilting basis.  Both are lower unitriangular.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .grothendieck import WeylVector, twisted_product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Semisimple:
    """q not a root of unity, or q = +-1 in characteristic 0."""

    kind = "semisimple"

    @property
    def barrier(self) -> Optional[int]:
        return None

    def describe(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class CharZeroRoot:
    """Characteristic 0, q a root of unity with q^2 of order ``l``."""

    l: int
    kind = "char0_root"

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 2:
            raise ValueError(f"order l must be an integer >= 2, got {self.l!r}")

    @property
    def barrier(self) -> int:
        return self.l

    def describe(self) -> dict:
        return {"kind": self.kind, "l": self.l}


@dataclass(frozen=True)
class ModularQOne:
    """q = 1 over a field of characteristic ``p``."""

    p: int
    kind = "modular"

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"characteristic p must be prime, got {self.p!r}")

    @property
    def barrier(self) -> int:
        return self.p

    def describe(self) -> dict:
        return {"kind": self.kind, "p": self.p}


@dataclass(frozen=True)
class Mixed:
    """Characteristic ``p``, q a root of unity other than +-1 with q^2 of order ``l``."""

    l: int
    p: int
    kind = "mixed"

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 2:
            raise ValueError(f"order l must be an integer >= 2, got {self.l!r}")
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"characteristic p must be prime, got {self.p!r}")
        # multiplicative orders in characteristic p are prime to p
        if self.l % self.p == 0:
            raise ValueError(f"no element of order l={self.l} exists in characteristic {self.p}")

    @property
    def barrier(self) -> int:
        return self.l

    def describe(self) -> dict:
        return {"kind": self.kind, "l": self.l, "p": self.p}


Regime = Union[Semisimple, CharZeroRoot, ModularQOne, Mixed]


def regime_from_flags(l: Optional[int] = None, p: Optional[int] = None) -> Regime:
    if l is None and p is None:
        return Semisimple()
    if p is None:
        return CharZeroRoot(l)
    if l is None:
        return ModularQOne(p)
    return Mixed(l, p)


def regime_from_json(obj: dict) -> Regime:
    kind = obj["kind"]
    if kind == Semisimple.kind:
        return Semisimple()
    if kind == CharZeroRoot.kind:
        return CharZeroRoot(obj["l"])
    if kind == ModularQOne.kind:
        return ModularQOne(obj["p"])
    if kind == Mixed.kind:
        return Mixed(obj["l"], obj["p"])
    raise ValueError(f"unknown regime kind {kind!r}")


def small_tilting(m: int, barrier: int) -> WeylVector:
    """Two-term Weyl pattern of T(m) valid in the lowest range of weights.

    ``T(m) = D(m)`` for ``m < barrier`` and for ``m = -1 mod barrier``; otherwise
    ``[T(m)] = [D(m)] + [D(m')]`` with ``m' = m - 2*(m mod barrier) - 2``.
    """
    m0 = m % barrier
    if m < barrier or m0 == barrier - 1:
        return WeylVector.delta(m)
    return WeylVector({m: 1, m - 2 * m0 - 2: 1})


def _donkin_split(m: int, f: int) -> tuple[int, int]:
    """Write ``m = hi*f + lo`` with ``f-1 <= lo <= 2f-2``."""
    lo = f - 1 + (m - f + 1) % f
    return (m - lo) // f, lo


class TiltingTable:
    """Memoized rows of the c and d matrices for one regime.

    Safe to share between threads: rows are computed under a lock and are
    immutable once stored.
    """

    def __init__(self, regime: Regime):
        self.regime = regime
        self._c: dict[int, WeylVector] = {}
        self._d: list[WeylVector] = []
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"TiltingTable({self.regime!r}, c_rows={len(self._c)}, d_rows={len(self._d)})"

    def weyl_factors(self, m: int) -> WeylVector:
        """Row m of c, the class of T(m) in the Weyl basis."""
        if m < 0:
            raise ValueError("weight must be nonnegative")
        row = self._c.get(m)
        if row is not None:
            return row
        with self._lock:
            row = self._c.get(m)
            if row is None:
                row = self._compute_c(m)
                self._c[m] = row
        return row

    def _compute_c(self, m: int) -> WeylVector:
        reg = self.regime
        if isinstance(reg, Semisimple):
            return WeylVector.delta(m)
        if isinstance(reg, CharZeroRoot):
            return small_tilting(m, reg.l)
        if isinstance(reg, ModularQOne):
            p = reg.p
            if m <= 2 * p - 2:
                return small_tilting(m, p)
            hi, lo = _donkin_split(m, p)
            return twisted_product(self.weyl_factors(hi), p, small_tilting(lo, p))
        if isinstance(reg, Mixed):
            l = reg.l
            if m <= 2 * l - 2:
                return small_tilting(m, l)
            hi, lo = _donkin_split(m, l)
            frob = get_table(ModularQOne(reg.p)).weyl_factors(hi)
            return twisted_product(frob, l, small_tilting(lo, l))
        raise TypeError(f"unknown regime {reg!r}")

    def d_row(self, m: int) -> WeylVector:
        """Row m of d: ``[D(m)] = sum_i d[m][i] [T(i)]``, keys are tilting weights."""
        if m < 0:
            raise ValueError("weight must be nonnegative")
        if m < len(self._d):
            return self._d[m]
        with self._lock:
            while len(self._d) <= m:
                k = len(self._d)
                row = WeylVector.delta(k)
                for s, coeff in self.weyl_factors(k).items():
                    if s != k:
                        row = row - self._d[s].scale(coeff)
                self._d.append(row)
        return self._d[m]

    def dimension(self, m: int) -> int:
        return self.weyl_factors(m).dimension()

    def to_tilting_basis(self, v: WeylVector) -> WeylVector:
        """Rewrite a Weyl-basis class in the tilting basis (through d)."""
        out: dict[int, int] = {}
        for m, a in v.items():
            for i, coeff in self.d_row(m).items():
                out[i] = out.get(i, 0) + a * coeff
        return WeylVector(out)

    def to_weyl_basis(self, t: WeylVector) -> WeylVector:
        """Rewrite a tilting-basis class in the Weyl basis (through c)."""
        out: dict[int, int] = {}
        for m, b in t.items():
            for s, coeff in self.weyl_factors(m).items():
                out[s] = out.get(s, 0) + b * coeff
        return WeylVector(out)


@lru_cache(maxsize=None)
def get_table(regime: Regime) -> TiltingTable:
    """Shared memoized table for ``regime``."""
    return TiltingTable(regime)


def _table(t: Union[TiltingTable, Regime]) -> TiltingTable:
    return t if isinstance(t, TiltingTable) else get_table(t)


def tilting_weyl_factors(t: Union[TiltingTable, Regime], m: int) -> WeylVector:
    return _table(t).weyl_factors(m)


def d_row(t: Union[TiltingTable, Regime], m: int) -> WeylVector:
    return _table(t).d_row(m)


def tilting_dimension(t: Union[TiltingTable, Regime], m: int) -> int:
    return _table(t).dimension(m)


def char_zero_d_row(l: int, m: int) -> WeylVector:
    """Closed form of row m of d at a characteristic 0 root of unity.

    ``[D(m)] = sum_j [T(m - 2jl)] - sum_j [T(m' - 2jl)]`` when T(m) has two Weyl
    factors, otherwise ``[D(m)] = [T(m)]``.
    """
    m0 = m % l
    if m < l or m0 == l - 1:
        return WeylVector.delta(m)
    mp = m - 2 * m0 - 2
    out: dict[int, int] = {}
    for j in range(m // (2 * l) + 1):
        out[m - 2 * j * l] = out.get(m - 2 * j * l, 0) + 1
        out[mp - 2 * j * l] = out.get(mp - 2 * j * l, 0) - 1
    return WeylVector(out)
