"""Exact arithmetic in GF(p^e) with an explicit modulus polynomial.

Elements are polynomial residues c_0 + c_1 x + ... + c_{e-1} x^{e-1} over
GF(p).  Each element also has an integer index

    index = c_0 + c_1 p + ... + c_{e-1} p^{e-1}

which is its position in :meth:`FieldSpec.enumerate`: zero first, then
lexicographic order of the coefficient list read from the top degree down.
Matrices and files carry indices; :class:`FieldElement` is the user-facing
wrapper.  Addition and multiplication tables are precomputed on first use,
which is cheap for the desk-scale fields this package targets (q <= 256).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .errors import DivisionByZero, FieldMismatch, IndexOutOfRange, NonPrimeCharacteristic, ReducibleModulus


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- polynomials over GF(p), coefficient lists low degree first ------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e in enumeration order (x for e = 1)."""
    if e == 1:
        return (0, 1)
    for low in product(range(p), repeat=e):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] != 0 and _is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {e} over GF({p})")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """Description of GF(p^e); build through :func:`field_build`.

    ``modulus`` lists coefficients from the constant term up to the leading 1.
    """

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    # -- index <-> coefficients ---------------------------------------------

    def coeffs(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            index, c = divmod(index, self.p)
            out.append(c)
        return tuple(out)

    def index_of(self, coeffs: Sequence[int]) -> int:
        red = _poly_mod(list(coeffs), self.modulus, self.p) if len(coeffs) > self.e else [c % self.p for c in coeffs]
        idx = 0
        for c in reversed(red):
            idx = idx * self.p + c
        return idx

    def from_int(self, n: int) -> int:
        """Index of the image of the integer n under Z -> GF(p)."""
        return n % self.p

    # -- tables ---------------------------------------------------------------

    @cached_property
    def add_table(self) -> list[list[int]]:
        p, q = self.p, self.q
        cs = [self.coeffs(i) for i in range(q)]
        return [[self.index_of([(x + y) % p for x, y in zip(cs[a], cs[b])]) for b in range(q)] for a in range(q)]

    @cached_property
    def neg_table(self) -> list[int]:
        return [self.index_of([-c % self.p for c in self.coeffs(a)]) for a in range(self.q)]

    @cached_property
    def sub_table(self) -> list[list[int]]:
        add, neg = self.add_table, self.neg_table
        return [[add[a][neg[b]] for b in range(self.q)] for a in range(self.q)]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        q, p = self.q, self.p
        cs = [self.coeffs(i) for i in range(q)]
        tab = [[0] * q for _ in range(q)]
        for a in range(1, q):
            for b in range(a, q):
                prod = [0] * (2 * self.e - 1)
                for i, x in enumerate(cs[a]):
                    if x:
                        for j, y in enumerate(cs[b]):
                            prod[i + j] += x * y
                r = self.index_of(_poly_mod(prod, self.modulus, p))
                tab[a][b] = tab[b][a] = r
        return tab

    @cached_property
    def inv_table(self) -> list[int]:
        inv = [0] * self.q
        for a in range(1, self.q):
            row = self.mul_table[a]
            inv[a] = row.index(1)
        return inv

    # -- scalar arithmetic on indices ----------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.sub_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base, mul = 1, a, self.mul_table
        while k:
            if k & 1:
                result = mul[result][base]
            base = mul[base][base]
            k >>= 1
        return result

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        add, mul = self.add_table, self.mul_table
        acc = 0
        for a, b in zip(u, v):
            if a and b:
                acc = add[acc][mul[a][b]]
        return acc

    # -- elements ------------------------------------------------------------

    def __call__(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise IndexOutOfRange(f"element index {index} outside [0, {self.q})")
        return FieldElement(self, index)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The residue class of x (equal to 0 in a prime field's x-modulus)."""
        return FieldElement(self, self.index_of([0, 1]))

    def enumerate(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.enumerate())

    def describe(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


def field_build(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validate (p, e, modulus) and return the field.

    >>> field_build(2, 2, [1, 1, 1])
    GF(2^2)
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        modulus = default_modulus(p, e)
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != e + 1 or mod[-1] != 1:
        raise ValueError(f"modulus must be monic of degree {e}, got {list(modulus)}")
    if e > 1 and not _is_irreducible(mod, p):
        raise ReducibleModulus(f"{list(mod)} is reducible over GF({p})")
    return FieldSpec(p, e, mod)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec = field(repr=False)
    index: int

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.index
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.index))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.index, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.index))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.index, k))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.index))

    def __bool__(self) -> bool:
        return self.index != 0

    def __int__(self) -> int:
        return self.index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def __str__(self) -> str:
        if self.field.e == 1:
            return str(self.index)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"{c if (c != 1 or i == 0) else ''}{mono}")
        return "+".join(reversed(terms)) or "0"


# Functional forms of the element operations.

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def power(a: FieldElement, k: int) -> FieldElement:
    return a**k


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    return spec.enumerate()
