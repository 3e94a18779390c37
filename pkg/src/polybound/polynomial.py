"""Dense polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntPolynomial:
    """Integer polynomial stored as an ascending coefficient tuple.

    ``coeffs[k]`` is the coefficient of X^k.  Trailing zeros are stripped on
    construction; the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def infinity_norm(self) -> int:
        """Maximum absolute coefficient (0 for the zero polynomial)."""
        return max((abs(c) for c in self._coeffs), default=0)

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def to_text(self) -> str:
        """Render in descending powers, e.g. ``X^5 - 5*X^4 + 40*X^2 - 80*X + 48``.

        Zero terms are omitted, unit coefficients drop the ``1*``, and the
        zero polynomial renders as ``"0"``.
        """
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "X" if k == 1 else f"X^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def eval_at_matrix(
    poly: IntPolynomial | Sequence[int], rows: Sequence[Sequence[int]]
) -> list[list[int]]:
    """Evaluate a polynomial at a square integer matrix by Horner's rule.

    Exact big-integer arithmetic; returns the resulting matrix as lists.
    """
    coeffs = poly.coeffs if isinstance(poly, IntPolynomial) else tuple(poly)
    n = len(rows)
    acc = [[0] * n for _ in range(n)]
    for c in reversed(coeffs):
        nxt = _mat_mul(rows, acc)
        for i in range(n):
            nxt[i][i] += c
        acc = nxt
    return acc


def divmod_monic(
    num: IntPolynomial, den: IntPolynomial
) -> tuple[IntPolynomial, IntPolynomial]:
    """Euclidean division by a monic divisor; exact over the integers."""
    if not den.is_monic:
        raise ValueError("divisor must be monic")
    r = list(num.coeffs)
    d = den.coeffs
    dd = len(d) - 1
    q = [0] * max(len(r) - dd, 0)
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k]
        if c:
            q[k - dd] = c
            for t in range(dd + 1):
                r[k - dd + t] -= c * d[t]
    return IntPolynomial(q), IntPolynomial(r)


def _mat_mul(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
