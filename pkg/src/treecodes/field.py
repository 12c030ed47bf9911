"""Small finite fields GF(p^m) with dense log/antilog tables.

Elements are canonical integers: the coefficient vector of the residue
polynomial read in base ``p`` with the constant term least significant.
``FieldSpec`` owns the tables and exposes integer-level arithmetic for hot
loops; ``FieldElement`` wraps it with operators for readable code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import FieldError

# Candidate moduli for GF(3^m), coefficients from x^m down to the constant.
# Each is re-checked for primitivity before use.
GF3_CANDIDATES: dict[int, tuple[int, ...]] = {
    1: (1, 0),
    2: (1, 1, 2),
    3: (1, 0, 2, 1),
    4: (1, 0, 0, 1, 2),
    5: (1, 0, 0, 0, 2, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % k for k in range(2, int(p**0.5) + 1))


def _to_digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _from_digits(digits: Sequence[int], p: int) -> int:
    x = 0
    for c in reversed(digits):
        x = x * p + c
    return x


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over F_p, both low-to-high, den monic."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for k in range(dd + 1):
                num[i - dd + k] = (num[i - dd + k] - c * den[k]) % p
    rem = [c % p for c in num[:dd]]
    return rem + [0] * (dd - len(rem))


def is_irreducible(p: int, modulus_high: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    low = [c % p for c in reversed(modulus_high)]
    m = len(low) - 1
    if m < 1 or low[-1] != 1:
        return False
    for deg in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            den = list(tail) + [1]
            if not any(_poly_rem(low, den, p)):
                return False
    return True


def _build_tables(p: int, m: int, modulus_high: Sequence[int]):
    """Powers of the residue of x; None if its order is not p^m - 1."""
    q = p**m
    low = [c % p for c in reversed(modulus_high)]
    if m == 1:
        # x = -c0 in F_p[x]/(x + c0)
        g = (-low[0]) % p
        exp, cur = [], 1
        for _ in range(q - 1):
            exp.append(cur)
            cur = cur * g % p
    else:
        exp, cur = [], [1] + [0] * (m - 1)
        for _ in range(q - 1):
            exp.append(_from_digits(cur, p))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(cur[k] - top * low[k]) % p for k in range(m)]
        cur = _from_digits(cur, p)
    if cur != 1 or len(set(exp)) != q - 1:
        return None
    log = [-1] * q
    for k, e in enumerate(exp):
        log[e] = k
    return exp, log


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^m) defined by a monic modulus (coefficients high to low)."""

    characteristic: int
    degree: int
    modulus: tuple[int, ...]
    order: int = field(init=False)
    exp: tuple[int, ...] = field(init=False, repr=False)
    log: tuple[int, ...] = field(init=False, repr=False)
    _add: tuple | None = field(init=False, repr=False)

    def __post_init__(self):
        p, m = self.characteristic, self.degree
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        mod = tuple(int(c) % p for c in self.modulus)
        if len(mod) != m + 1 or mod[0] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if not is_irreducible(p, mod):
            raise FieldError(f"modulus {mod} is reducible over F_{p}")
        tables = _build_tables(p, m, mod)
        if tables is None:
            raise FieldError(f"x is not primitive modulo {mod}")
        q = p**m
        add = None
        if m > 1:
            digits = [_to_digits(x, p, m) for x in range(q)]
            add = tuple(
                tuple(_from_digits([(a + b) % p for a, b in zip(digits[x], digits[y])], p) for y in range(q))
                for x in range(q)
            )
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "order", q)
        object.__setattr__(self, "exp", tuple(tables[0]))
        object.__setattr__(self, "log", tuple(tables[1]))
        object.__setattr__(self, "_add", add)

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.characteristic, self.degree, self.modulus) == (
            other.characteristic, other.degree, other.modulus)

    def __hash__(self):
        return hash((self.characteristic, self.degree, self.modulus))

    def __str__(self):
        return f"GF({self.characteristic}^{self.degree})/[{','.join(map(str, self.modulus))}]"

    # integer-level arithmetic

    def add(self, a: int, b: int) -> int:
        if self._add is None:
            return (a + b) % self.characteristic
        return self._add[a][b]

    def neg(self, a: int) -> int:
        if self._add is None:
            return -a % self.characteristic
        p, m = self.characteristic, self.degree
        return _from_digits([-c % p for c in _to_digits(a, p, m)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no inverse")
        return self.exp[-self.log[a] % (self.order - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise FieldError("zero has no inverse")
            return 1 if k == 0 else 0
        return self.exp[self.log[a] * k % (self.order - 1)]

    def dlog(self, a: int) -> int:
        if a == 0:
            raise FieldError("discrete log of zero")
        return self.log[a]

    def power_of_generator(self, k: int) -> int:
        return self.exp[k % (self.order - 1)]

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> F_p -> GF(p^m)."""
        return k % self.characteristic

    # element-level API

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, self.exp[1 % (self.order - 1)])

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, x) for x in range(self.order)]

    def poly_eval(self, coeffs: Sequence[int], x: int) -> int:
        """Horner evaluation; coeffs low to high degree, as integers."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.order:
            raise FieldError(f"{self.value} is not an element of {self.spec}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError(f"mixed fields {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.add(self.value, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(o)))

    def __pow__(self, k: int):
        return FieldElement(self.spec, self.spec.pow(self.value, k))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.spec}:{self.value}"


def discrete_log(e: FieldElement) -> int:
    return e.spec.dlog(e.value)


def is_square(e: FieldElement) -> bool:
    """Quadratic residuosity of a nonzero element (odd characteristic)."""
    if e.spec.characteristic == 2:
        raise FieldError("characteristic-2 fields are not supported")
    return discrete_log(e) % 2 == 0


def is_permutation_polynomial(coeffs: Sequence[FieldElement]) -> bool:
    """True iff x -> sum coeffs[k] x^k is injective on the whole field."""
    if not coeffs:
        raise FieldError("empty polynomial")
    spec = coeffs[0].spec
    if any(c.spec != spec for c in coeffs):
        raise FieldError("coefficients from different fields")
    if len(coeffs) > spec.order:
        raise FieldError("degree must be below the field order")
    raw = [c.value for c in coeffs]
    images = {spec.poly_eval(raw, x) for x in range(spec.order)}
    return len(images) == spec.order


def _search_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        for g in range(1, p):
            mod = (1, -g % p)
            if _build_tables(p, 1, mod) is not None:
                return mod
    for tail in itertools.product(range(p), repeat=m):
        mod = (1,) + tail
        if is_irreducible(p, mod) and _build_tables(p, m, mod) is not None:
            return mod
    raise FieldError(f"no primitive modulus of degree {m} over F_{p}")


@lru_cache(maxsize=None)
def gf3(m: int) -> FieldSpec:
    """GF(3^m) from the shipped candidate table, falling back to search."""
    if m < 1:
        raise FieldError("degree must be positive")
    cand = GF3_CANDIDATES.get(m)
    if cand is not None and is_irreducible(3, cand) and _build_tables(3, m, cand) is not None:
        return FieldSpec(3, m, cand)
    return FieldSpec(3, m, _search_primitive_modulus(3, m))


@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    """F_p with x identified to the smallest primitive root."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    return FieldSpec(p, 1, _search_primitive_modulus(p, 1))
