"""Grothendieck group arithmetic for sl2-type modules.

Classes of modules are stored in the Weyl basis as sparse ``{weight: coefficient}``
maps with exact Python integers.  Characters (symmetric Laurent polynomials in
one variable ``x``) are used where a Frobenius-type stretch of weights is needed.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from math import comb
from typing import Union

Pairs = Union[Mapping[int, int], Iterable[tuple[int, int]], None]


def _accumulate(coeffs: Pairs, drop_negative: bool) -> dict[int, int]:
    if coeffs is None:
        items: Iterable[tuple[int, int]] = ()
    elif isinstance(coeffs, Mapping):
        items = coeffs.items()
    else:
        items = coeffs
    acc: dict[int, int] = {}
    for key, value in items:
        key = int(key)
        if drop_negative and key < 0:
            continue
        acc[key] = acc.get(key, 0) + int(value)
    return {k: acc[k] for k in sorted(acc) if acc[k] != 0}


class _SparseIntMap(Mapping):
    """Immutable sparse map int -> int with ascending iteration order."""

    __slots__ = ("_coeffs", "_hash")
    _drop_negative = False

    def __init__(self, coeffs: Pairs = None):
        self._coeffs = _accumulate(coeffs, self._drop_negative)
        self._hash = None

    def __getitem__(self, key: int) -> int:
        return self._coeffs[key]

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __contains__(self, key) -> bool:
        return key in self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, _SparseIntMap):
            return type(self) is type(other) and self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self._coeffs == {k: v for k, v in other.items() if v != 0}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._coeffs!r})"

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: int):
        return type(self)({k: factor * v for k, v in self._coeffs.items()})

    def as_dict(self) -> dict[int, int]:
        return dict(self._coeffs)

    def top(self) -> int:
        """Largest key with a nonzero coefficient."""
        if not self._coeffs:
            raise ValueError("zero element has no top weight")
        return next(reversed(self._coeffs))


class WeylVector(_SparseIntMap):
    """Element of the Grothendieck group written in the Weyl basis.

    Keys are highest weights ``m >= 0``; negative weights are dropped on
    construction since the corresponding Weyl modules are zero.  ``u * v`` is
    the tensor product (Clebsch-Gordan rule), ``k * v`` scales by an integer.
    """

    __slots__ = ()
    _drop_negative = True

    @classmethod
    def delta(cls, m: int) -> "WeylVector":
        return cls({m: 1})

    def __mul__(self, other):
        if isinstance(other, WeylVector):
            return cg_product(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "WeylVector":
        if n < 0:
            raise ValueError("negative tensor power")
        result = WeylVector.delta(0)
        for _ in range(n):
            result = cg_product(result, self)
        return result

    def dimension(self) -> int:
        return sum(c * (m + 1) for m, c in self.items())


class LaurentCharacter(_SparseIntMap):
    """Laurent polynomial ``sum c_k x^k`` with integer coefficients."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, LaurentCharacter):
            out: dict[int, int] = {}
            for i, a in self.items():
                for j, b in other.items():
                    out[i + j] = out.get(i + j, 0) + a * b
            return LaurentCharacter(out)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def stretch(self, f: int) -> "LaurentCharacter":
        """Substitute ``x -> x**f`` (weights multiplied by ``f``)."""
        return LaurentCharacter({f * k: v for k, v in self.items()})

    def is_symmetric(self) -> bool:
        return all(self.get(-k, 0) == v for k, v in self.items())


def weyl_multiplicity(n: int, m: int) -> int:
    """Multiplicity of the Weyl module of highest weight ``m`` in ``V^{(x)n}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 0 or m > n or (n - m) % 2:
        return 0
    r = (n - m) // 2
    return comb(n, r) - (comb(n, r - 1) if r >= 1 else 0)


def cg_product(u: WeylVector, v: WeylVector) -> WeylVector:
    """Tensor product in the Weyl basis.

    ``[D(r)][D(m)] = sum [D(s)]`` over ``|m-r| <= s <= m+r`` with ``s = m+r mod 2``.
    Implemented with a difference array so that each pair costs O(1).
    """
    if not u or not v:
        return WeylVector()
    diff: dict[int, int] = {}
    for r, a in u.items():
        for m, b in v.items():
            ab = a * b
            lo, hi = abs(m - r), m + r
            diff[lo] = diff.get(lo, 0) + ab
            diff[hi + 2] = diff.get(hi + 2, 0) - ab
    out: dict[int, int] = {}
    running = [0, 0]
    for s in range(0, max(diff) + 1):
        running[s % 2] += diff.get(s, 0)
        if running[s % 2]:
            out[s] = running[s % 2]
    return WeylVector(out)


def to_character(v: WeylVector) -> LaurentCharacter:
    """Character of ``v``: each ``D(m)`` contributes ``x^m + x^{m-2} + ... + x^{-m}``."""
    if not v:
        return LaurentCharacter()
    # coefficient of x^k, k >= 0, is the sum of v[m] over m >= k with m = k mod 2
    top = v.top()
    suffix = [0, 0]
    out: dict[int, int] = {}
    for k in range(top, -1, -1):
        suffix[k % 2] += v.get(k, 0)
        if suffix[k % 2]:
            out[k] = suffix[k % 2]
            if k:
                out[-k] = suffix[k % 2]
    return LaurentCharacter(out)


def expand_in_weyl(c: LaurentCharacter) -> WeylVector:
    """Inverse of :func:`to_character`.

    Peeling off ``c[top] * chi(top)`` repeatedly leaves ``v[m] = c[m] - c[m+2]``,
    which is what is computed here.
    """
    if not c.is_symmetric():
        raise ValueError(f"character is not symmetric under x -> 1/x: {c!r}")
    if not c:
        return WeylVector()
    return WeylVector({m: c.get(m, 0) - c.get(m + 2, 0) for m in range(c.top() + 1)})


def twisted_product(u: WeylVector, f: int, w: WeylVector) -> WeylVector:
    """Weyl expansion of ``u`` with weights stretched by ``f``, tensored with ``w``."""
    if f < 1:
        raise ValueError("stretch factor must be positive")
    if f == 1:
        return cg_product(u, w)
    return expand_in_weyl(to_character(u).stretch(f) * to_character(w))


def vpower_to_weyl(n: int) -> WeylVector:
    """Weyl factors of the n-th tensor power of the natural module."""
    return WeylVector({m: weyl_multiplicity(n, m) for m in range(n % 2, n + 1, 2)})


def weyl_to_vpower(v: WeylVector) -> dict[int, int]:
    """Coefficients ``b_n`` with ``[v] = sum_n b_n [V^{(x)n}]``.

    Uses ``[D(m)] = sum_j (-1)^{(m-j)/2} C((m+j)/2, j) [V^{(x)j}]``.
    """
    out: dict[int, int] = {}
    for m, a in v.items():
        for j in range(m % 2, m + 1, 2):
            sign = -1 if ((m - j) // 2) % 2 else 1
            out[j] = out.get(j, 0) + sign * a * comb((m + j) // 2, j)
    return {j: out[j] for j in sorted(out) if out[j]}


def vpower_combination_to_weyl(b: Mapping[int, int]) -> WeylVector:
    """Inverse of :func:`weyl_to_vpower`."""
    total = WeylVector()
    for n, coeff in b.items():
        total = total + vpower_to_weyl(n).scale(coeff)
    return total
