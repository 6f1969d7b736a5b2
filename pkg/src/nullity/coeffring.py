"""Finite coefficient rings: prime fields, extension fields, integers mod n.

Ring elements are plain integers in ``[0, size)``.  For ``Z:n`` and ``F:p``
the index is the residue itself.  For ``F:p^m`` the base-p digits of the
index, read little-endian, are polynomial coefficients in the generator
``t``: the index ``a0 + a1*p + ... + a_{m-1}*p**(m-1)`` encodes
``a0 + a1*t + ... + a_{m-1}*t**(m-1)``.  Index 0 is the additive zero and
index 1 the multiplicative identity in every ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

PRIME_FIELD = "prime-field"
EXTENSION_FIELD = "extension-field"
MOD_N = "mod-n"

DEFAULT_MAX_RING_SIZE = 1 << 22
MAX_EXTENSION_DEGREE = 8
# largest extension field for which dense op tables are materialized
_TABLE_LIMIT = 1 << 11


class NotInvertibleError(ValueError):
    """Raised when asked to invert an element with no inverse."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p**m and p prime, or None."""
    if q < 2:
        return None
    p = q
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            p = d
            break
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num mod den over F_p; den must be monic."""
    r = list(num)
    dd = len(den) - 1
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dd + 1):
                r[i - dd + j] = (r[i - dd + j] - c * den[j]) % p
    return _poly_trim([v % p for v in r[:dd]])


def _is_irreducible(low: list[int], p: int, m: int) -> bool:
    """Is x**m + sum(low[i] x**i) irreducible over F_p?

    Trial division by every monic polynomial of degree 1..m//2; a monic
    reducible polynomial always has a monic factor in that range.
    """
    if m == 1:
        return True
    if low[0] == 0:
        return False  # divisible by x
    coeffs = list(low) + [1]
    for d in range(1, m // 2 + 1):
        for c in range(p**d):
            div = [(c // p**i) % p for i in range(d)] + [1]
            if not _poly_rem(coeffs, div, p):
                return False
    return True


def lex_smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Non-leading coefficients (a0..a_{m-1}) of the canonical modulus.

    Candidates x**m + a_{m-1} x**(m-1) + ... + a0 are scanned in ascending
    order of the tuple (a_{m-1}, ..., a0); the first irreducible one wins.
    """
    for c in range(p**m):
        low = [(c // p**i) % p for i in range(m)]
        if _is_irreducible(low, p, m):
            return tuple(low)
    raise AssertionError(f"defect: no irreducible of degree {m} over F_{p} found")


class _ModArrayOps:
    """Vectorized ring ops on arrays of indices, residue arithmetic."""

    def __init__(self, n: int, inv_table: np.ndarray | None):
        self.n = n
        self._inv = inv_table

    def add(self, x, y):
        return (x + y) % self.n

    def sub(self, x, y):
        return (x - y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def inv(self, x):
        if self._inv is None:
            raise NotInvertibleError(f"not invertible: Z:{self.n} has no inverse table")
        return self._inv[x]


class _TableArrayOps:
    """Vectorized ring ops on arrays of indices, dense-table arithmetic."""

    def __init__(self, add, mul, neg, inv):
        self._add = add
        self._mul = mul
        self._neg = neg
        self._invt = inv

    def add(self, x, y):
        return self._add[x, y]

    def sub(self, x, y):
        return self._add[x, self._neg[y]]

    def mul(self, x, y):
        return self._mul[x, y]

    def neg(self, x):
        return self._neg[x]

    def inv(self, x):
        return self._invt[x]


class CoeffRing:
    """A finite coefficient ring with integer-indexed elements.

    Construct through :func:`field`, :func:`integers_mod`, or
    :func:`ring_from_spec`; the kind is one of ``prime-field``,
    ``extension-field``, ``mod-n``.
    """

    def __init__(self, kind: str, *, p: int | None = None, m: int | None = None,
                 modulus_poly: tuple[int, ...] | None = None, n: int | None = None):
        self.kind = kind
        self.p = p
        self.m = m
        self.modulus_poly = modulus_poly
        self.n = n
        if kind == PRIME_FIELD:
            self.size = p
            self.spec = f"F:{p}"
        elif kind == EXTENSION_FIELD:
            self.size = p**m
            self.spec = f"F:{p}^{m}"
        else:
            self.size = n
            self.spec = f"Z:{n}"
        self._tpow: list[tuple[int, ...]] | None = None
        if kind == EXTENSION_FIELD:
            self._tpow = self._reduction_digits()
        self._tables = None
        self._array_ops = None

    def __repr__(self) -> str:
        return f"CoeffRing({self.spec!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffRing):
            return NotImplemented
        return (self.spec, self.modulus_poly) == (other.spec, other.modulus_poly)

    def __hash__(self) -> int:
        return hash((self.spec, self.modulus_poly))

    @property
    def is_field(self) -> bool:
        return self.kind != MOD_N

    @property
    def characteristic(self) -> int:
        """p for fields, the additive order of 1 for Z:n."""
        return self.p if self.is_field else self.n

    def elements(self) -> range:
        return range(self.size)

    # --- extension-field digit plumbing -------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, little-endian, length m."""
        p = self.p
        return tuple((a // p**i) % p for i in range(self.m))

    def encode(self, digits) -> int:
        p = self.p
        return sum(int(d) % p * p**i for i, d in enumerate(digits))

    def _reduction_digits(self) -> list[tuple[int, ...]]:
        """Digits of t**k reduced mod the modulus, for k = 0 .. 2m-2."""
        p, m = self.p, self.m
        low = self.modulus_poly
        pows: list[tuple[int, ...]] = []
        cur = [0] * m
        cur[0] = 1
        for _ in range(2 * m - 1):
            pows.append(tuple(cur))
            top = cur[m - 1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(m):
                    cur[i] = (cur[i] - top * low[i]) % p
        return pows

    # --- scalar arithmetic --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.kind == EXTENSION_FIELD:
            p = self.p
            return self.encode((x + y) % p for x, y in zip(self.decode(a), self.decode(b)))
        return (a + b) % self.size

    def neg(self, a: int) -> int:
        if self.kind == EXTENSION_FIELD:
            p = self.p
            return self.encode((-x) % p for x in self.decode(a))
        return (-a) % self.size

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.kind == EXTENSION_FIELD:
            p, m = self.p, self.m
            da, db = self.decode(a), self.decode(b)
            conv = [0] * (2 * m - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        conv[i + j] += x * y
            out = [0] * m
            for k, c in enumerate(conv):
                if c % p:
                    tp = self._tpow[k]
                    for i in range(m):
                        out[i] += c * tp[i]
            return self.encode(out)
        return (a * b) % self.size

    def pow(self, a: int, e: int) -> int:
        if self.kind != EXTENSION_FIELD:
            return pow(a, e, self.size)
        r, b = 1, a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a % self.size == 0:
            raise NotInvertibleError(f"not invertible: 0 in {self.spec}")
        if self.kind == MOD_N:
            try:
                return pow(a, -1, self.n)
            except ValueError:
                raise NotInvertibleError(f"not invertible: {a} in {self.spec}") from None
        if self.kind == PRIME_FIELD:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.size - 2)

    # --- dense tables and array ops -----------------------------------

    def _build_tables(self):
        q, p, m = self.size, self.p, self.m
        if q > _TABLE_LIMIT:
            raise ValueError(
                f"dense op tables for {self.spec} need {q}x{q} entries; "
                f"limit is {_TABLE_LIMIT}x{_TABLE_LIMIT}")
        digits = ((np.arange(q)[:, None] // p ** np.arange(m)[None, :]) % p).astype(np.int64)
        weights = (p ** np.arange(m)).astype(np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        tpow = np.array(self._tpow, dtype=np.int64)  # (2m-1, m)
        mul = np.empty((q, q), dtype=np.int64)
        step = max(1, (1 << 22) // (q * (2 * m - 1)))
        for lo in range(0, q, step):
            blk = digits[lo:lo + step]
            conv = np.zeros((blk.shape[0], q, 2 * m - 1), dtype=np.int64)
            for i in range(m):
                for j in range(m):
                    conv[:, :, i + j] += blk[:, i, None] * digits[None, :, j]
            out = (conv % p) @ tpow % p
            mul[lo:lo + step] = out @ weights
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        return add, mul, neg, inv

    def tables(self):
        """(add, mul, neg, inv) dense numpy tables; extension fields only."""
        if self.kind != EXTENSION_FIELD:
            raise ValueError(f"{self.spec} uses residue arithmetic, not tables")
        if self._tables is None:
            self._tables = self._build_tables()
        return self._tables

    def array_ops(self):
        """Vectorized add/sub/mul/neg/inv acting on numpy index arrays."""
        if self._array_ops is None:
            if self.kind == EXTENSION_FIELD:
                self._array_ops = _TableArrayOps(*self.tables())
            elif self.kind == PRIME_FIELD:
                p = self.p
                inv = np.array([0] + [pow(a, p - 2, p) for a in range(1, p)],
                               dtype=np.int64)
                self._array_ops = _ModArrayOps(p, inv)
            else:
                self._array_ops = _ModArrayOps(self.n, None)
        return self._array_ops


def field(p: int, m: int = 1, *, modulus: tuple[int, ...] | None = None,
          max_size: int = DEFAULT_MAX_RING_SIZE) -> CoeffRing:
    """F_p for m = 1, else F_{p**m} with the lexicographically smallest
    irreducible modulus (or an explicitly supplied one, verified)."""
    if not is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p}")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if m > MAX_EXTENSION_DEGREE:
        raise ValueError(
            f"extension degree {m} exceeds the supported bound {MAX_EXTENSION_DEGREE}")
    if p**m > max_size:
        raise ValueError(f"ring size {p**m} exceeds max_size={max_size}")
    if m == 1:
        return CoeffRing(PRIME_FIELD, p=p, m=1)
    if modulus is None:
        modulus = lex_smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m:
            raise ValueError(f"modulus needs {m} non-leading coefficients")
        if not _is_irreducible(list(modulus), p, m):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
    return CoeffRing(EXTENSION_FIELD, p=p, m=m, modulus_poly=modulus)


def integers_mod(n: int, *, max_size: int = DEFAULT_MAX_RING_SIZE) -> CoeffRing:
    """The ring Z:n of integers mod n, n >= 2."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if n > max_size:
        raise ValueError(f"ring size {n} exceeds max_size={max_size}")
    return CoeffRing(MOD_N, n=n)


def ring_from_spec(text: str, *, max_size: int = DEFAULT_MAX_RING_SIZE) -> CoeffRing:
    """Parse "F:q", "F:p^m", or "Z:n" into a ring.

    A bare "F:q" is factored; q must be a prime power.
    """
    s = text.strip()
    if ":" not in s:
        raise ValueError(f"bad ring spec {text!r}: expected F:q, F:p^m, or Z:n")
    head, _, tail = s.partition(":")
    head = head.upper()
    if head == "Z":
        if not tail.isdigit():
            raise ValueError(f"bad ring spec {text!r}: Z:n needs an integer n")
        return integers_mod(int(tail), max_size=max_size)
    if head != "F":
        raise ValueError(f"bad ring spec {text!r}: expected F:q, F:p^m, or Z:n")
    if "^" in tail:
        base, _, exp = tail.partition("^")
        if not (base.isdigit() and exp.isdigit()):
            raise ValueError(f"bad ring spec {text!r}: F:p^m needs integers p, m")
        return field(int(base), int(exp), max_size=max_size)
    if not tail.isdigit():
        raise ValueError(f"bad ring spec {text!r}: F:q needs an integer q")
    q = int(tail)
    pm = prime_power_decomposition(q)
    if pm is None:
        raise ValueError(f"bad ring spec {text!r}: {q} is not a prime power")
    return field(*pm, max_size=max_size)


def sum_of_squares_witness(K: CoeffRing) -> tuple[int, int] | None:
    """First (x, y) in index order with x**2 + y**2 = -1, or None.

    Equivalent to the exhaustive scan over x then y; a minimal-square-root
    table collapses the inner loop.
    """
    if not K.is_field:
        raise ValueError(f"witness search needs field coefficients, got {K.spec}")
    minus_one = K.neg(1)
    min_sqrt = {}
    for y in range(K.size - 1, -1, -1):
        min_sqrt[K.mul(y, y)] = y
    for x in range(K.size):
        target = K.sub(minus_one, K.mul(x, x))
        y = min_sqrt.get(target)
        if y is not None:
            return (x, y)
    return None
