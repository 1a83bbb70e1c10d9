"""Tilting multiplicities in tensor powers of the natural 2-dimensional module.

``b[n][m] = (V^{(x)n} : T(m))`` is computed three ways:

* :func:`tilting_grid_recurrence` -- column rules, one row at a time, using
  only row ``n-1`` (plus Weyl multiplicities for the characteristic 0
  Steinberg columns);
* :func:`tilting_grid_linear` -- Weyl multiplicities pushed through ``d``;
* :func:`tilting_grid_pushforward` -- row ``n-1`` pushed through
  :func:`tilt_tensor_v`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .grothendieck import WeylVector, vpower_to_weyl, weyl_multiplicity
from .tilting_tables import (
    CharZeroRoot,
    Mixed,
    ModularQOne,
    Regime,
    Semisimple,
    get_table,
)


class ContractViolation(RuntimeError):
    """A computed multiplicity or dimension came out negative."""


@dataclass(frozen=True)
class MultiplicityGrid:
    """Rows ``0..max_n`` of a table of nonnegative integers indexed by (n, m)."""

    regime: Regime
    kind: str
    rows: tuple

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> WeylVector:
        return self.rows[n]

    def entry(self, n: int, m: int) -> int:
        return self.rows[n].get(m, 0)

    def columns(self) -> list[int]:
        cols = set()
        for r in self.rows:
            cols.update(r)
        return sorted(cols)

    def __eq__(self, other):
        if not isinstance(other, MultiplicityGrid):
            return NotImplemented
        return self.rows == other.rows


def _valuation(x: int, p: int) -> tuple[int, int]:
    """Return ``(r, b)`` with ``x = b * p**r`` and ``p`` not dividing ``b``."""
    r = 0
    while x % p == 0:
        x //= p
        r += 1
    return r, x


def weyl_grid(max_n: int) -> MultiplicityGrid:
    rows = tuple(vpower_to_weyl(n) for n in range(max_n + 1))
    return MultiplicityGrid(Semisimple(), "weyl", rows)


# Column rules.  Each takes (prev, n, m) where prev is row n-1 as a dict.

def _char0_rule(l: int):
    def rule(prev, n, m):
        if m % l == l - 1:
            return weyl_multiplicity(n, m)
        if m % l == l - 2:
            return prev.get(m - 1, 0)
        return prev.get(m - 1, 0) + prev.get(m + 1, 0)
    return rule


def _char0_l2_rule(prev, n, m):
    # odd columns are Weyl columns; even columns echo the odd column of row n-1
    if m % 2:
        return weyl_multiplicity(n, m)
    return weyl_multiplicity(n - 1, m - 1) if m >= 1 else 0


def _modular_p2_rule(prev, n, m):
    if m % 2 == 0:
        return prev.get(m - 1, 0)
    r, _ = _valuation(m + 1, 2)
    return prev.get(m - 1, 0) + 2 * sum(prev.get(m - 1 + 2 ** s, 0) for s in range(1, r + 1))


def _modular_rule(p: int):
    def rule(prev, n, m):
        if m % p == p - 2:
            return prev.get(m - 1, 0)
        if m % p != p - 1:
            return prev.get(m - 1, 0) + prev.get(m + 1, 0)
        j, b = _valuation(m + 1, p)
        total = prev.get(m - 1, 0)
        total += 2 * sum(prev.get(m - 1 + 2 * p ** s, 0) for s in range(j))
        if b % p != p - 1:
            total += prev.get(m - 1 + 2 * p ** j, 0)
        return total
    return rule


def _mixed_steinberg_value(prev, m: int, l: int, p: int) -> int:
    # m = l*(u+1) - 1 with u+1 = b * p**r, p not dividing b
    r, b = _valuation((m + 1) // l, p)
    total = prev.get(m - 1, 0) + 2 * prev.get(m + 1, 0)
    total += 2 * sum(prev.get(m - 1 + 2 * p ** s * l, 0) for s in range(r))
    if b % p != p - 1:
        total += prev.get(m - 1 + 2 * p ** r * l, 0)
    return total


def _mixed_rule(l: int, p: int):
    def rule(prev, n, m):
        if m % l == l - 1:
            return _mixed_steinberg_value(prev, m, l, p)
        if m % l == l - 2:
            return prev.get(m - 1, 0)
        return prev.get(m - 1, 0) + prev.get(m + 1, 0)
    return rule


def _mixed_l2_rule(p: int):
    def rule(prev, n, m):
        if m % 2 == 0:
            return prev.get(m - 1, 0)
        return _mixed_steinberg_value(prev, m, 2, p)
    return rule


def _column_rule(regime: Regime) -> Callable:
    if isinstance(regime, CharZeroRoot):
        return _char0_l2_rule if regime.l == 2 else _char0_rule(regime.l)
    if isinstance(regime, ModularQOne):
        return _modular_p2_rule if regime.p == 2 else _modular_rule(regime.p)
    if isinstance(regime, Mixed):
        return _mixed_l2_rule(regime.p) if regime.l == 2 else _mixed_rule(regime.l, regime.p)
    raise ValueError(f"no tilting recurrence for {regime!r}; use weyl_grid")


def tilting_grid_recurrence(regime: Regime, max_n: int) -> MultiplicityGrid:
    """Tilting multiplicities by the column recurrences, rows ``0..max_n``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    rule = _column_rule(regime)
    rows = [WeylVector.delta(0)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        rows.append(WeylVector({m: rule(prev, n, m) for m in range(n % 2, n + 1, 2)}))
    return MultiplicityGrid(regime, "tilting", tuple(rows))


def tilting_grid_linear(regime: Regime, max_n: int) -> MultiplicityGrid:
    """Tilting multiplicities as the Weyl row of ``V^{(x)n}`` times ``d``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    table = get_table(regime)
    rows = []
    for n in range(max_n + 1):
        row = table.to_tilting_basis(vpower_to_weyl(n))
        bad = {m: v for m, v in row.items() if v < 0}
        if bad:
            raise ContractViolation(f"negative tilting multiplicities in row {n} for {regime!r}: {bad}")
        rows.append(row)
    return MultiplicityGrid(regime, "tilting", tuple(rows))


def tilting_grid(regime: Regime, max_n: int) -> MultiplicityGrid:
    """Production path: recurrences, or the Weyl grid when semisimple."""
    if isinstance(regime, Semisimple):
        g = weyl_grid(max_n)
        return MultiplicityGrid(regime, "tilting", g.rows)
    return tilting_grid_recurrence(regime, max_n)


def steinberg_column(regime: Regime, n: int, s: int) -> int:
    """``(V^{(x)n} : T(f*(s+1)-1))`` from Weyl multiplicities and the p-modular d.

    ``f`` is ``p`` for q = 1 and ``l`` in the mixed case; ``d`` is always the
    matrix of the q = 1, characteristic p table.
    """
    if isinstance(regime, ModularQOne):
        f = regime.p
    elif isinstance(regime, Mixed):
        f = regime.l
    else:
        raise ValueError(f"Steinberg columns need positive characteristic, got {regime!r}")
    if n < 0 or s < 0:
        raise ValueError("n and s must be nonnegative")
    table = get_table(ModularQOne(regime.p))
    total = 0
    r = s
    while f * (r + 1) - 1 <= n:
        coeff = table.d_row(r).get(s, 0)
        if coeff:
            total += weyl_multiplicity(n, f * (r + 1) - 1) * coeff
        r += 1
    return total


def fusion_grid(barrier: int, max_n: int) -> MultiplicityGrid:
    """Multiplicities in the fusion quotient; columns ``0..barrier-2``."""
    if barrier < 2:
        raise ValueError("barrier must be at least 2")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    top = barrier - 2
    rows = [WeylVector.delta(0)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        rows.append(WeylVector({
            m: prev.get(m - 1, 0) + (prev.get(m + 1, 0) if m + 1 <= top else 0)
            for m in range(n % 2, min(n, top) + 1, 2)
        }))
    return MultiplicityGrid(CharZeroRoot(barrier), "fusion", tuple(rows))


# Decomposition of T(m) (x) V into indecomposable tilting modules.

def _tv(pairs) -> WeylVector:
    return WeylVector(pairs)


def _char0_tensor_v(m: int, l: int) -> WeylVector:
    r = m % l
    if r == l - 1:
        return _tv([(m + 1, 1)])
    if r == 0 and m > 0:
        return _tv([(m + 1, 1), (m - 1, 2)])
    if r == l - 2 and m >= l:
        return _tv([(m + 1, 1), (m - 1, 1), (m + 1 - 2 * l, 1)])
    return _tv([(m + 1, 1), (m - 1, 1)])


def _char0_l2_tensor_v(m: int) -> WeylVector:
    if m % 2:
        return _tv([(m + 1, 1)])
    return _tv([(m + 1, 1), (m - 1, 2), (m - 3, 1)])


def _modular_p2_tensor_v(m: int) -> WeylVector:
    if m % 2:
        return _tv([(m + 1, 1)])
    r, _ = _valuation(m + 2, 2)
    return _tv([(m + 1, 1)] + [(m + 1 - 2 ** s, 2) for s in range(1, r + 1)])


def _modular_tensor_v(m: int, p: int) -> WeylVector:
    res = m % p
    if res == p - 1:
        return _tv([(m + 1, 1)])
    if res == p - 2:
        r, rest = _valuation(m + 2, p)
        m1 = rest - 2
        pairs = [(m + 1, 1)] + [(m + 1 - 2 * p ** s, 1) for s in range(r)]
        if m1 % p == 0:
            pairs.append((m + 1 - 2 * p ** r, 2))
        elif m1 % p != p - 1:
            pairs.append((m + 1 - 2 * p ** r, 1))
        return _tv(pairs)
    if res == 0 and m > 0:
        return _tv([(m + 1, 1), (m - 1, 2)])
    return _tv([(m + 1, 1), (m - 1, 1)])


def _mixed_tensor_v(m: int, l: int, p: int) -> WeylVector:
    res = m % l
    if res == l - 1:
        return _tv([(m + 1, 1)])
    if res == l - 2 and m >= 2 * l - 2:
        # T(m) = T(s-2)^[q] (x) T(2l-2); the twisted part lands on Steinberg weights
        s = (m + 2) // l
        frob = tilt_tensor_v(ModularQOne(p), s - 2)
        pairs = [(l * (y + 1) - 1, k) for y, k in frob.items()]
        pairs.append((m - 1, 2 if l == 2 else 1))
        return _tv(pairs)
    if res == 0 and m > 0:
        return _tv([(m + 1, 1), (m - 1, 2)])
    return _tv([(m + 1, 1), (m - 1, 1)])


def tilt_tensor_v(regime: Regime, m: int) -> WeylVector:
    """``T(m) (x) V`` as a map from tilting weight to multiplicity."""
    if m < 0:
        raise ValueError("weight must be nonnegative")
    if isinstance(regime, Semisimple):
        return _tv([(m + 1, 1), (m - 1, 1)])
    if isinstance(regime, CharZeroRoot):
        return _char0_l2_tensor_v(m) if regime.l == 2 else _char0_tensor_v(m, regime.l)
    if isinstance(regime, ModularQOne):
        return _modular_p2_tensor_v(m) if regime.p == 2 else _modular_tensor_v(m, regime.p)
    if isinstance(regime, Mixed):
        return _mixed_tensor_v(m, regime.l, regime.p)
    raise TypeError(f"unknown regime {regime!r}")


def tilting_grid_pushforward(regime: Regime, max_n: int) -> MultiplicityGrid:
    rows = [WeylVector.delta(0)]
    for _ in range(max_n):
        out: dict[int, int] = {}
        for m, b in rows[-1].items():
            for t, k in tilt_tensor_v(regime, m).items():
                out[t] = out.get(t, 0) + b * k
        rows.append(WeylVector(out))
    return MultiplicityGrid(regime, "tilting", tuple(rows))

