"""Sparse multivariate polynomials with exact rational coefficients.

``MultiPoly`` provides the same arithmetic surface the rest of the package
expects from a coefficient ring: ``+``, ``-``, ``*``, ``**`` and decidable
``==``, all exact.  ``Fraction`` and ``int`` satisfy the same implicit
contract, so generic code (determinants, symmetric-function tables, the
formula engine) runs unchanged over either ring; feeding symbolic
coefficients turns every numeric check into a polynomial-identity check.

Exponent vectors are dense per term: each key is a tuple of nonnegative
integers of the declared arity.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction


class MultiPoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        arity = int(arity)
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for expo, coeff in items:
                expo = tuple(int(e) for e in expo)
                if len(expo) != arity:
                    raise ValueError(
                        f"exponent vector {expo} does not match arity {arity}"
                    )
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                c = clean.get(expo, Fraction(0)) + Fraction(coeff)
                if c:
                    clean[expo] = c
                elif expo in clean:
                    del clean[expo]
        self.arity = arity
        self.terms = clean

    @classmethod
    def constant(cls, arity: int, value) -> "MultiPoly":
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def variable(cls, arity: int, index: int) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        expo = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {expo: Fraction(1)})

    @classmethod
    def variables(cls, arity: int) -> list["MultiPoly"]:
        return [cls.variable(arity, i) for i in range(arity)]

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError(
                    f"arity mismatch: {self.arity} vs {other.arity}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.arity, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            c = terms.get(expo, Fraction(0)) + coeff
            if c:
                terms[expo] = c
            elif expo in terms:
                del terms[expo]
        out = MultiPoly(self.arity)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly(self.arity)
        out.terms = {expo: -coeff for expo, coeff in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(expo, Fraction(0)) + c1 * c2
                if c:
                    terms[expo] = c
                elif expo in terms:
                    del terms[expo]
        out = MultiPoly(self.arity)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = MultiPoly.constant(self.arity, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not self.terms:
                return other == 0
            return self.terms == {(0,) * self.arity: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def eval(self, point) -> Fraction:
        """Substitute a rational value for every variable."""
        point = tuple(Fraction(v) for v in point)
        if len(point) != self.arity:
            raise ValueError(
                f"point of length {len(point)} does not match arity {self.arity}"
            )
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            value = coeff
            for v, e in zip(point, expo):
                value *= v**e
            total += value
        return total

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"MultiPoly({self.arity}, {self})"


def render(p: MultiPoly, names: list[str] | None = None) -> str:
    """Debug text such as ``2*a1^2*b1 - 1/3``; term order is fixed."""
    if names is None:
        names = [f"x{i}" for i in range(p.arity)]
    if len(names) != p.arity:
        raise ValueError("one name per variable is required")
    if not p.terms:
        return "0"
    pieces = []
    for expo in sorted(p.terms, reverse=True):
        coeff = p.terms[expo]
        factors = [
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(expo)
            if e
        ]
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
