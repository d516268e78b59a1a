"""Exact sparse polynomials in two families of indexed variables.

Everything in this package computes inside the ring Z[x_1, x_2, ...;
y_1, y_2, ...].  A monomial records its x- and y-exponents as sorted
tuples of (index, exponent) pairs, indices 1-based and exponents
positive, so a monomial is in canonical form by construction.  A
polynomial maps monomials to nonzero integer coefficients.  Both types
are immutable and hashable; equality of polynomials is equality of the
mathematical objects.

The canonical term order, used for printing and serialization, is
graded lexicographic with the x-block before the y-block: higher total
degree first, ties broken by the exponent vector read along
x_1, x_2, ..., y_1, y_2, ... (higher exponent on an earlier variable
wins).
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Union

Variable = tuple[str, int]

ExponentPairs = tuple[tuple[int, int], ...]


def _normalize_exponents(data) -> ExponentPairs:
    """Sort (index, exponent) pairs, drop zeros, reject bad values."""
    if isinstance(data, Mapping):
        data = data.items()
    cleaned = []
    for index, exponent in data:
        if not isinstance(index, int) or not isinstance(exponent, int):
            raise ValueError("variable indices and exponents must be integers")
        if index < 1:
            raise ValueError(f"variable index must be >= 1, got {index}")
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        if exponent:
            cleaned.append((index, exponent))
    cleaned.sort()
    for k in range(1, len(cleaned)):
        if cleaned[k - 1][0] == cleaned[k][0]:
            raise ValueError(f"repeated variable index {cleaned[k][0]}")
    return tuple(cleaned)


def _merge_exponents(a: ExponentPairs, b: ExponentPairs) -> ExponentPairs:
    """Merge two sorted exponent tuples, adding exponents on shared indices."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ia, ea = a[i]
        ib, eb = b[j]
        if ia == ib:
            out.append((ia, ea + eb))
            i += 1
            j += 1
        elif ia < ib:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


class Monomial(NamedTuple):
    """A product of x- and y-variables with positive exponents.

    ``x`` and ``y`` are sorted tuples of (index, exponent) pairs.  The
    empty monomial ``Monomial()`` is the unit.
    """

    x: ExponentPairs = ()
    y: ExponentPairs = ()

    @classmethod
    def make(cls, x=(), y=()) -> Monomial:
        """Build a monomial from mappings or pair iterables, validating."""
        return cls(_normalize_exponents(x), _normalize_exponents(y))

    def degree(self) -> int:
        return sum(e for _, e in self.x) + sum(e for _, e in self.y)

    def x_degree(self) -> int:
        return sum(e for _, e in self.x)

    def y_degree(self) -> int:
        return sum(e for _, e in self.y)

    def variables(self) -> set[Variable]:
        return {("x", i) for i, _ in self.x} | {("y", j) for j, _ in self.y}

    def sort_key(self):
        """Key whose ascending order is the canonical term order."""
        vector = tuple((0, i, -e) for i, e in self.x) + tuple(
            (1, j, -e) for j, e in self.y
        )
        return (-self.degree(), vector)

    def __str__(self) -> str:
        if not self.x and not self.y:
            return "1"
        bits = []
        for family, pairs in (("x", self.x), ("y", self.y)):
            for index, exponent in pairs:
                bits.append(
                    f"{family}{index}" if exponent == 1 else f"{family}{index}^{exponent}"
                )
        return "*".join(bits)


class XYPolynomial:
    """Integer polynomial in the x- and y-variables, in canonical form."""

    __slots__ = ("terms",)

    terms: dict[Monomial, int]

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned: dict[Monomial, int] = {}
        if terms:
            for monomial, coefficient in terms.items():
                if not isinstance(monomial, Monomial):
                    raise TypeError("keys must be Monomial instances")
                if not isinstance(coefficient, int):
                    raise TypeError("coefficients must be integers")
                if coefficient:
                    cleaned[monomial] = coefficient
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> XYPolynomial:
        # trusted constructor: terms already canonical, never shared mutably
        p = object.__new__(cls)
        object.__setattr__(p, "terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("XYPolynomial is immutable")

    # ------------------------------------------------------------------
    # ring structure

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> XYPolynomial:
        return XYPolynomial._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> XYPolynomial:
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        big, small = self.terms, other.terms
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return XYPolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> XYPolynomial:
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> XYPolynomial:
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            if other == 1:
                return self
            return XYPolynomial._raw({m: other * c for m, c in self.terms.items()})
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, int] = {}
        get = out.get
        for ma, ca in a.items():
            ax, ay = ma
            for mb, cb in b.items():
                m = Monomial(_merge_exponents(ax, mb[0]), _merge_exponents(ay, mb[1]))
                v = get(m)
                if v is None:
                    out[m] = ca * cb
                else:
                    v += ca * cb
                    if v:
                        out[m] = v
                    else:
                        del out[m]
        return XYPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> XYPolynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # structure queries

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for m in self.terms:
            out.update(m.variables())
        return out

    def is_x_free(self) -> bool:
        return all(not m.x for m in self.terms)

    def max_x_degree(self) -> int:
        """Largest total x-degree of any term, -1 for the zero polynomial."""
        return max((m.x_degree() for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        """Whether every term has the given total degree."""
        return all(m.degree() == degree for m in self.terms)

    def as_int(self) -> int:
        """The value of a constant polynomial; raises if variables remain."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (monomial, coefficient), = self.terms.items()
            if monomial == Monomial():
                return coefficient
        raise ValueError("polynomial is not constant")

    # ------------------------------------------------------------------
    # the operations the rest of the package is built on

    def substitute(self, assignment: Mapping[Variable, Union[XYPolynomial, int]]) -> XYPolynomial:
        """Simultaneously replace variables by polynomials.

        Variables absent from ``assignment`` are left alone.  The
        substitution is simultaneous: replacement values are never
        re-substituted.
        """
        values: dict[Variable, XYPolynomial] = {}
        for var, value in assignment.items():
            kind, index = var
            if kind not in ("x", "y") or not isinstance(index, int) or index < 1:
                raise ValueError(f"bad variable {var!r}")
            values[var] = constant(value) if isinstance(value, int) else value
        powers: dict[tuple[Variable, int], XYPolynomial] = {}

        def power(var: Variable, exponent: int) -> XYPolynomial:
            cached = powers.get((var, exponent))
            if cached is None:
                cached = values[var] ** exponent
                powers[(var, exponent)] = cached
            return cached

        total: dict[Monomial, int] = {}
        for monomial, coefficient in self.terms.items():
            kept_x = []
            kept_y = []
            replaced: list[tuple[Variable, int]] = []
            for index, exponent in monomial.x:
                if ("x", index) in values:
                    replaced.append((("x", index), exponent))
                else:
                    kept_x.append((index, exponent))
            for index, exponent in monomial.y:
                if ("y", index) in values:
                    replaced.append((("y", index), exponent))
                else:
                    kept_y.append((index, exponent))
            piece = XYPolynomial._raw(
                {Monomial(tuple(kept_x), tuple(kept_y)): coefficient}
            )
            for var, exponent in replaced:
                piece = piece * power(var, exponent)
                if not piece:
                    break
            for m, c in piece.terms.items():
                v = total.get(m)
                if v is None:
                    total[m] = c
                else:
                    v += c
                    if v:
                        total[m] = v
                    else:
                        del total[m]
        return XYPolynomial._raw(total)

    def x_degree_component(self, degree: int) -> XYPolynomial:
        """The sum of terms whose total x-degree equals ``degree``."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return XYPolynomial._raw(
            {m: c for m, c in self.terms.items() if m.x_degree() == degree}
        )

    def coefficient_of_x_monomial(self, x_monomial: Monomial) -> XYPolynomial:
        """The y-polynomial multiplying an exact x-monomial.

        ``x_monomial`` must be free of y-variables.  The result collects
        every term of ``self`` whose x-part equals it, with the x-part
        removed.
        """
        if x_monomial.y:
            raise ValueError("x_monomial must not involve y-variables")
        target = x_monomial.x
        return XYPolynomial._raw(
            {
                Monomial((), m.y): c
                for m, c in self.terms.items()
                if m.x == target
            }
        )

    # ------------------------------------------------------------------
    # serialization and display

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in the canonical order, largest monomial first."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=Monomial.sort_key)]

    def to_records(self) -> list[dict]:
        """JSON-ready term records in the canonical term order."""
        return [
            {
                "coeff": str(c),
                "x": [[i, e] for i, e in m.x],
                "y": [[j, e] for j, e in m.y],
            }
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> XYPolynomial:
        """Inverse of :meth:`to_records`; tolerates non-canonical input."""
        total: dict[Monomial, int] = {}
        for record in records:
            monomial = Monomial(
                _normalize_exponents(tuple((i, e) for i, e in record["x"])),
                _normalize_exponents(tuple((j, e) for j, e in record["y"])),
            )
            coefficient = int(record["coeff"])
            value = total.get(monomial, 0) + coefficient
            if value:
                total[monomial] = value
            else:
                total.pop(monomial, None)
        return cls._raw(total)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for monomial, coefficient in self.sorted_terms():
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            body = str(monomial)
            if body == "1":
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"XYPolynomial({self})"


def constant(value: int) -> XYPolynomial:
    """The constant polynomial ``value``."""
    if not isinstance(value, int):
        raise TypeError("constant must be an integer")
    if value == 0:
        return _ZERO
    return XYPolynomial._raw({Monomial(): value})


def x_var(index: int) -> XYPolynomial:
    """The variable x_index as a polynomial."""
    if not isinstance(index, int) or index < 1:
        raise ValueError("index must be a positive integer")
    return XYPolynomial._raw({Monomial(((index, 1),), ()): 1})


def y_var(index: int) -> XYPolynomial:
    """The variable y_index as a polynomial."""
    if not isinstance(index, int) or index < 1:
        raise ValueError("index must be a positive integer")
    return XYPolynomial._raw({Monomial((), ((index, 1),)): 1})


_ZERO = XYPolynomial._raw({})
_ONE = XYPolynomial._raw({Monomial(): 1})


def zero() -> XYPolynomial:
    return _ZERO


def one() -> XYPolynomial:
    return _ONE
