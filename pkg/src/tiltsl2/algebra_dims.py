"""Dimensions of cell and simple modules for endomorphism algebras of tilting modules.

Covers Temperley-Lieb algebras ``End(V^{(x)n})``, their Jones quotients (the
fusion part), ``End(T^{(x)n})`` for a tilting class ``T``, and the case
``T = D(2)`` which carries the BMW specialization.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .grothendieck import WeylVector, cg_product, weyl_multiplicity, weyl_to_vpower
from .tensor_power import ContractViolation, fusion_grid, tilting_grid
from .tilting_tables import (
    CharZeroRoot,
    Mixed,
    ModularQOne,
    Regime,
    Semisimple,
    get_table,
)


class RegimeNotSupported(ValueError):
    """The requested algebra is not covered in this regime."""


class BMWRegimeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class AlgebraDimReport:
    regime: Regime
    n: int
    labels: tuple
    cell_dims: dict
    simple_dims: dict
    semisimple: bool
    notes: tuple = field(default=())

    def simple_list(self) -> list[int]:
        return [self.simple_dims[m] for m in self.labels if m in self.simple_dims]

    def cell_list(self) -> list[int]:
        return [self.cell_dims[m] for m in self.labels]


def _report(regime, n, cells: WeylVector, simples: WeylVector, notes=()) -> AlgebraDimReport:
    bad = {m: v for m, v in simples.items() if v < 0}
    if bad:
        raise ContractViolation(f"negative simple dimensions {bad} (n={n}, {regime!r})")
    labels = tuple(sorted(cells))
    cell_dims = {m: cells[m] for m in labels}
    simple_dims = {m: simples[m] for m in labels if simples.get(m, 0)}
    stray = set(simples) - set(labels)
    if stray:
        raise ContractViolation(f"simple labels {sorted(stray)} have no cell module (n={n})")
    return AlgebraDimReport(
        regime=regime,
        n=n,
        labels=labels,
        cell_dims=cell_dims,
        simple_dims=simple_dims,
        semisimple=cell_dims == simple_dims,
        notes=tuple(notes),
    )


def tl_cell_dim(n: int, m: int) -> int:
    return weyl_multiplicity(n, m)


def tl_simple_dims(regime: Regime, n: int, grid=None) -> AlgebraDimReport:
    """Cell and simple dimensions for the Temperley-Lieb algebra on n strands."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if grid is None or grid.max_n < n:
        grid = tilting_grid(regime, n)
    cells = WeylVector({m: weyl_multiplicity(n, m) for m in range(n % 2, n + 1, 2)})
    return _report(regime, n, cells, grid.row(n))


def deformed_pascal(regime: Regime, max_n: int) -> list[WeylVector]:
    """Simple TL dimensions via deformed Pascal triangles.

    Characteristic 0 roots of unity use the l-deformed triangle; q = 1 and the
    mixed case fill Steinberg columns ``f*(s+1)-1`` from Weyl multiplicities
    and the p-modular ``d``.  Other columns follow the two Pascal-type rules.
    """
    if isinstance(regime, Semisimple):
        return [WeylVector({m: weyl_multiplicity(n, m) for m in range(n + 1)}) for n in range(max_n + 1)]
    f = regime.barrier
    dtab = None if isinstance(regime, CharZeroRoot) else get_table(ModularQOne(regime.p))
    rows = [WeylVector.delta(0)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = {}
        for m in range(n % 2, n + 1, 2):
            if m % f == f - 1:
                if dtab is None:
                    row[m] = weyl_multiplicity(n, m)
                else:
                    s = (m + 1) // f - 1
                    row[m] = sum(
                        weyl_multiplicity(n, f * (r + 1) - 1) * dtab.d_row(r).get(s, 0)
                        for r in range(s, (n + 1) // f)
                    )
            elif m % f == f - 2 and m > 0:
                row[m] = prev.get(m - 1, 0)
            elif f == 2:
                # m = 0 with barrier 2: only the lower neighbour survives
                row[m] = prev.get(m - 1, 0)
            else:
                row[m] = prev.get(m - 1, 0) + prev.get(m + 1, 0)
        rows.append(WeylVector(row))
    return rows


def jones_simple_dims(barrier: int, n: int) -> dict[int, int]:
    """Simple dimensions of the Jones quotient; independent of the characteristic."""
    return dict(fusion_grid(barrier, n).row(n))


# Endomorphism algebras of tensor powers of a tilting module.

def _method1_simples(table, cells: WeylVector) -> WeylVector:
    return table.to_tilting_basis(cells)


def _method2_simples(regime, cells: WeylVector) -> WeylVector:
    b = weyl_to_vpower(cells)
    if not b:
        return WeylVector()
    grid = tilting_grid(regime, max(b))
    out: dict[int, int] = {}
    for r, coeff in b.items():
        for m, c in grid.row(r).items():
            out[m] = out.get(m, 0) + coeff * c
    return WeylVector(out)


def cell_dims_inductive(generator: WeylVector, n: int) -> WeylVector:
    """Weyl factors of ``T^{(x)n}`` by the one-step recursion

    ``C^n(m) = sum_s sum_{j=0}^{min(s,m)} C^{n-1}(s) * a_{|m-s|+2j}``
    where ``a`` is the Weyl expansion of the generator.
    """
    cells = WeylVector.delta(0)
    top_gen = generator.top() if generator else 0
    for k in range(1, n + 1):
        out = {}
        for m in range(0, k * top_gen + 1):
            total = 0
            for s, c in cells.items():
                for j in range(min(s, m) + 1):
                    total += c * generator.get(abs(m - s) + 2 * j, 0)
            if total:
                out[m] = total
        cells = WeylVector(out)
    return cells


def endo_dims(regime: Regime, generator: WeylVector, n: int, method: int = 1) -> AlgebraDimReport:
    """Cell and simple dimensions for ``End(T^{(x)n})`` with ``[T] = generator``.

    The caller vouches that ``generator`` is the class of a tilting module.
    ``method`` selects how simples are obtained: 1 pushes the cell row through
    ``d``, 2 goes through tensor powers of the natural module, 3 builds the
    cell row by the one-step recursion and then uses ``d``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if any(c < 0 for c in generator.values()):
        raise ValueError(f"generator {dict(generator)} has negative Weyl factors")
    table = get_table(regime)
    if method == 3:
        cells = cell_dims_inductive(generator, n)
    else:
        cells = generator ** n
    if method in (1, 3):
        simples = _method1_simples(table, cells)
    elif method == 2:
        simples = _method2_simples(regime, cells)
    else:
        raise ValueError(f"unknown method {method}")
    try:
        return _report(regime, n, cells, simples)
    except ContractViolation as exc:
        raise ContractViolation(f"generator {dict(generator)} is not a tilting class: {exc}") from None


def endo_semisimple(regime: Regime, m: int, n: int) -> bool:
    """Whether ``End(D(m)^{(x)n})`` is semisimple, for ``m`` below the barrier."""
    if isinstance(regime, Semisimple):
        raise RegimeNotSupported("semisimple regime has no barrier")
    barrier = regime.barrier
    if barrier <= 2:
        raise RegimeNotSupported(f"criterion needs a barrier above 2, got {barrier}")
    if not 0 < m < barrier:
        raise RegimeNotSupported(f"criterion needs 0 < m < {barrier}, got m={m}")
    return n * m < barrier


def char_zero_simple_from_cells(l: int, cells: dict) -> dict[int, int]:
    """Simple dimensions from cell dimensions at a characteristic 0 root of unity.

    Steinberg labels keep their cell dimension; every other label ``s`` gets
    ``sum_{j>=0} C(s + 2jl) - sum_{j>0} C(s' + 2jl)`` with ``s'`` its reflection.
    """
    top = max(cells, default=0)
    out = {}
    for s in sorted(cells):
        s0, s1 = s % l, s // l
        if s0 == l - 1:
            val = cells[s]
        else:
            sp = s1 * l - s0 - 2
            val = sum(cells.get(s + 2 * j * l, 0) for j in range(top // (2 * l) + 1))
            val -= sum(cells.get(sp + 2 * j * l, 0) for j in range(1, top // (2 * l) + 2))
        out[s] = val
    return out


def endo_cell_recursive(m: int, n: int) -> dict[int, int]:
    """Cell dimensions for ``End(D(m)^{(x)n})`` by the one-step recursion."""
    cells = {0: 1}
    for _ in range(n):
        cells = {
            s: total
            for s in range(0, (max(cells) + m) + 1)
            if (total := sum(cells.get(abs(s - m) + 2 * j, 0) for j in range(min(s, m) + 1)))
        }
    return cells


# E^n(2) = End(D(2)^{(x)n}) and its BMW reading.

def _check_bmw_regime(regime: Regime) -> list[str]:
    if isinstance(regime, ModularQOne) and regime.p == 2:
        raise RegimeNotSupported("D(2) is not tilting for q = 1 in characteristic 2")
    if isinstance(regime, (CharZeroRoot, Mixed)) and regime.l == 2:
        raise RegimeNotSupported("D(2) is not tilting when q is a 4th root of unity (l = 2)")
    notes = []
    if isinstance(regime, (CharZeroRoot, Mixed)) and regime.l == 6:
        msg = "l = 6: braid group surjectivity is not known, BMW reading of these dimensions is unsupported"
        warnings.warn(msg, BMWRegimeWarning, stacklevel=3)
        notes.append(msg)
    return notes


def bmw_cell_dims(n: int) -> dict[int, int]:
    """``dim C^n(s)`` from the alternating binomial closed form, s even in 0..2n."""
    out = {}
    for s in range(0, 2 * n + 1, 2):
        total = 0
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            total += sign * comb(n, i) * weyl_multiplicity(2 * (n - i), s)
        if total:
            out[s] = total
    return out


def bmw_cell_dims_recursive(n: int) -> dict[int, int]:
    cells = {0: 1}
    for _ in range(n):
        top = max(cells) + 2
        new = {0: cells.get(2, 0)}
        for s in range(2, top + 1, 2):
            new[s] = cells.get(s - 2, 0) + cells.get(s, 0) + cells.get(s + 2, 0)
        cells = {s: v for s, v in new.items() if v}
    return cells


def bmw_dims(regime: Regime, n: int, grid=None) -> AlgebraDimReport:
    """Cell and simple dimensions for ``End(D(2)^{(x)n})``.

    Simples are ``sum_i (-1)^i C(n,i) b[2(n-i)][s]`` with ``b`` the TL tilting
    grid of the regime.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    notes = _check_bmw_regime(regime)
    if grid is None or grid.max_n < 2 * n:
        grid = tilting_grid(regime, 2 * n)
    cells = WeylVector(bmw_cell_dims(n))
    simples = {}
    for s in range(0, 2 * n + 1, 2):
        total = 0
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            total += sign * comb(n, i) * grid.entry(2 * (n - i), s)
        simples[s] = total
    return _report(regime, n, cells, WeylVector(simples), notes)
