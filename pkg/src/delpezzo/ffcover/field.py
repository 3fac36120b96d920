"""Small finite fields ``F_{p^k}`` for ``p`` in {2, 3}.

An element is stored as an ``int`` whose base-``p`` digits are the coefficient
vector of its residue polynomial (lowest degree first), so ``0..q-1`` are the
elements and ``0..p-1`` the prime subfield.  Multiplication and addition go
through exponent/log tables with Zech logarithms.

The moduli are the Conway polynomials, which are primitive; this is checked
when a field is built (the powers of ``x`` run through all ``q - 1`` nonzero
residues, which also proves the modulus irreducible).  Conway moduli are
compatible under inclusion, which :meth:`FiniteField.embed` relies on.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import FieldMismatch, InvalidChar, InvalidInput

MAX_ORDER = 3 ** 9

# Conway polynomials, coefficients from x^0 up to the (monic) leading term.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (3, 9): (1, 1, 2, 2, 0, 0, 0, 0, 0, 1),
}


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        n, d = divmod(n, p)
        out.append(d)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


class FiniteField:
    """``F_{p^k}``; use :func:`GF` to get the cached instance."""

    def __init__(self, p: int, k: int = 1):
        if p not in (2, 3):
            raise InvalidChar(f"only characteristic 2 or 3 is supported, got {p!r}")
        if not isinstance(k, int) or k < 1 or p ** k > MAX_ORDER:
            raise InvalidInput(f"extension degree {k!r} out of range for p={p} (need p^k <= 3^9)")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = CONWAY[(p, k)]
        self._build_tables()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        n = q - 1
        m = self.modulus
        exp = [0] * (2 * n)
        log = [-1] * q
        cur = [1] + [0] * (k - 1)
        for i in range(n):
            v = _undigits(cur, p)
            if log[v] != -1:
                raise InvalidInput(f"modulus for F_{p}^{k} is not primitive")
            exp[i] = v
            log[v] = i
            # multiply by x and reduce by the monic modulus
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m[j]) % p for j, c in enumerate(cur)]
        if _undigits(cur, p) != 1:
            raise InvalidInput(f"modulus for F_{p}^{k} is not primitive")
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log
        # zech[i] = log(1 + x^i), or -1 when 1 + x^i = 0
        zech = [-1] * n
        for i in range(n):
            ds = _digits(exp[i], p, k)
            ds[0] = (ds[0] + 1) % p
            s = _undigits(ds, p)
            zech[i] = log[s] if s else -1
        self._zech = zech
        self._half = n // 2 if p == 3 else 0

    # structure

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __len__(self) -> int:
        return self.q

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    @property
    def generator(self) -> int:
        """The class of ``x``; a primitive element (encoded ``p`` when ``k > 1``)."""
        return self._exp[1 % (self.q - 1)] if self.q > 2 else 1

    def check(self, a: int) -> int:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldMismatch(f"{a!r} is not an element of {self}")
        return a

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def to_vector(self, a: int) -> list[int]:
        return _digits(self.check(a), self.p, self.k)

    def from_vector(self, ds: Sequence[int]) -> int:
        if len(ds) > self.k or any(not 0 <= d < self.p for d in ds):
            raise FieldMismatch(f"{list(ds)} is not a coefficient vector for {self}")
        return _undigits(list(ds), self.p)

    # arithmetic

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        if self.p == 2:
            return a ^ b
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._exp[self._log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError(f"0 has no inverse in {self}")
            return 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        """Inverse of Frobenius (``a^(q/p)``)."""
        return self.pow(a, self.q // self.p)

    def sum(self, values) -> int:
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    # subfields

    def embed(self, a: int, source: "FiniteField") -> int:
        """Image of ``a`` from a subfield; Conway compatibility sends ``g_m`` to ``g^((q-1)/(p^m-1))``."""
        if source.p != self.p or self.k % source.k:
            raise FieldMismatch(f"{source} is not a subfield of {self}")
        if source.k == self.k or a == 0:
            return a
        step = (self.q - 1) // (source.q - 1)
        return self._exp[(source.log(a) * step) % (self.q - 1)]

    def is_in_subfield(self, a: int, m: int) -> bool:
        return self.pow(a, self.p ** m) == a


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> FiniteField:
    return FiniteField(p, k)
