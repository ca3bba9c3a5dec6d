"""Exact multivariate Laurent polynomials over the integers"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .base import ArityMismatch, NotDivisible, ZeroToNegativePower

Exponents = Tuple[int, ...]
Rational = Union[int, Fraction]


def grlex_key(e: Exponents) -> Tuple[int, Exponents]:
    return (sum(e), e)


class LaurentPoly:
    """
    Sum of integer multiples of monomials x1^e1 ... xk^ek, exponents in Z.

    Terms are kept as {exponent vector: nonzero coefficient} in graded-lex
    descending order, so equality and hashing are structural. Variables are
    numbered from 1 in the public interface.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, int]] = None):
        self.nvars = nvars
        clean: Dict[Exponents, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ArityMismatch(f"exponent vector {e} has length {len(e)}, expected {nvars}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
                if not clean[e]:
                    del clean[e]
        self.terms: Dict[Exponents, int] = dict(sorted(clean.items(), key=lambda t: grlex_key(t[0]), reverse=True))
        self._hash = None

    # ---------------------------------------------------------
    # CONSTRUCTORS
    # ---------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exponents: Mapping[int, int], coeff: int = 1) -> "LaurentPoly":
        """`exponents` maps 1-based variable index to its power"""
        e = [0] * nvars
        for i, k in exponents.items():
            if not 1 <= i <= nvars:
                raise ArityMismatch(f"x{i} outside x1..x{nvars}")
            e[i - 1] += k
        return cls(nvars, {tuple(e): coeff})

    @classmethod
    def var(cls, nvars: int, i: int) -> "LaurentPoly":
        return cls.monomial(nvars, {i: 1})

    # ---------------------------------------------------------
    # RING OPERATIONS
    # ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                product[e] = product.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, product)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentPoly":
        return exact_div(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants compare equal to ints, so they hash like them
            if not self.terms:
                self._hash = hash(0)
            elif len(self.terms) == 1 and (0,) * self.nvars in self.terms:
                self._hash = hash(self.terms[(0,) * self.nvars])
            else:
                self._hash = hash((self.nvars, tuple(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # ---------------------------------------------------------
    # INSPECTION
    # ---------------------------------------------------------
    def min_exponents(self) -> Exponents:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exponents:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self.terms))

    def leading_term(self) -> Tuple[Exponents, int]:
        return next(iter(self.terms.items()))

    def shift(self, exponents: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial x^exponents"""
        return LaurentPoly(self.nvars, {tuple(a + b for a, b in zip(e, exponents)): c
                                        for e, c in self.terms.items()})

    def denominator(self) -> "LaurentPoly":
        """Smallest monomial d with d * self a polynomial"""
        return LaurentPoly(self.nvars, {tuple(max(0, -m) for m in self.min_exponents()): 1})

    def numerator(self) -> "LaurentPoly":
        return self * self.denominator()

    def variables(self) -> Tuple[int, ...]:
        """1-based indices of variables that occur"""
        return tuple(i + 1 for i in range(self.nvars) if any(e[i] for e in self.terms))

    def specialize(self, assignment: Union[Mapping[int, Rational], Sequence[Rational]]) -> Fraction:
        """
        Exact value under a total assignment of the variables

        Args:
            assignment: mapping from 1-based index, or a sequence x1..xk

        Returns:
            Fraction
        """
        if isinstance(assignment, Mapping):
            missing = [i for i in range(1, self.nvars + 1) if i not in assignment]
            if missing:
                raise ArityMismatch(f"no value for x{missing[0]}")
            values = [Fraction(assignment[i]) for i in range(1, self.nvars + 1)]
        else:
            if len(assignment) != self.nvars:
                raise ArityMismatch(f"{len(assignment)} values for {self.nvars} variables")
            values = [Fraction(v) for v in assignment]

        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for i, k in enumerate(e):
                if k < 0 and values[i] == 0:
                    raise ZeroToNegativePower(f"x{i + 1} = 0 raised to {k}")
                if k:
                    term *= values[i] ** k
            total += term
        return total

    def collapse(self, indices: Iterable[int]) -> "LaurentPoly":
        """Set the given 1-based variables to 1"""
        drop = {i - 1 for i in indices}
        terms: Dict[Exponents, int] = {}
        for e, c in self.terms.items():
            e2 = tuple(0 if i in drop else k for i, k in enumerate(e))
            terms[e2] = terms.get(e2, 0) + c
        return LaurentPoly(self.nvars, terms)

    # ---------------------------------------------------------
    # SERIALIZATION
    # ---------------------------------------------------------
    @staticmethod
    def _monomial_text(e: Exponents) -> str:
        return " ".join(f"x{i + 1}^{k}" for i, k in enumerate(e) if k)

    def to_text(self) -> str:
        """'c * x1^e1 ... xk^ek' terms in graded-lex descending order"""
        if not self.terms:
            return "0"
        parts: List[str] = []
        for e, c in self.terms.items():
            mono = self._monomial_text(e)
            body = f"{abs(c)} * {mono}" if mono else f"{abs(c)}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> List[List]:
        return [[c, list(e)] for e, c in self.terms.items()]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[Sequence]) -> "LaurentPoly":
        return cls(nvars, {tuple(e): c for c, e in data})


# ---------------------------------------------------------
# MODULE-LEVEL OPERATIONS
# ---------------------------------------------------------
def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p - q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """
    r with r * q == p, or NotDivisible

    Both operands are shifted to genuine polynomials with no monomial
    factor in q, divided by graded-lex long division, and shifted back.
    """
    if not isinstance(q, LaurentPoly):
        q = p._coerce(q)
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} vs {q.nvars} variables")
    if q.is_zero():
        raise NotDivisible("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.nvars)

    mp, mq = p.min_exponents(), q.min_exponents()
    P = p.shift([-k for k in mp])
    Q = q.shift([-k for k in mq])
    lead_e, lead_c = Q.leading_term()

    remainder = dict(P.terms)
    quotient: Dict[Exponents, int] = {}
    while remainder:
        e = max(remainder, key=grlex_key)
        c = remainder[e]
        diff = tuple(a - b for a, b in zip(e, lead_e))
        if any(k < 0 for k in diff) or c % lead_c:
            raise NotDivisible(f"{p} is not divisible by {q}")
        factor = c // lead_c
        quotient[diff] = factor
        for qe, qc in Q.terms.items():
            te = tuple(a + b for a, b in zip(qe, diff))
            v = remainder.get(te, 0) - factor * qc
            if v:
                remainder[te] = v
            else:
                remainder.pop(te, None)

    return LaurentPoly(p.nvars, quotient).shift([a - b for a, b in zip(mp, mq)])


def specialize(p: LaurentPoly, assignment) -> Fraction:
    return p.specialize(assignment)
