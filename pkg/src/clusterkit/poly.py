"""Sparse multivariate integer polynomials and fractions over a monomial.

Cluster variables are Laurent polynomials whose denominators are single
monomials, so a fraction is stored as one content-free integer polynomial
plus one integer exponent vector (entries may be negative: the initial
indeterminate u_i is 1 / u_i^-1).  Coefficients are Python ints, i.e.
arbitrary precision; nothing here ever overflows or rounds.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotDivisible, ZeroNumerator


def grlex_key(exps: Sequence[int]) -> tuple:
    """Graded-lexicographic sort key (total degree first, then lex)."""
    return (sum(exps), tuple(exps))


class IntPolynomial:
    """Immutable sparse polynomial in Z[u_1..u_n], stored term -> coefficient."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong arity (expected {nvars})")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in polynomial term {exps}")
            c = clean.get(exps, 0) + coeff
            if c:
                clean[exps] = c
            elif exps in clean:
                del clean[exps]
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "IntPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "IntPolynomial":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "IntPolynomial":
        """The indeterminate u_i (1-based)."""
        exps = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, {exps: 1})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.nvars: 1}

    def sorted_terms(self) -> list:
        """Terms as (exps, coeff), graded-lex descending; canonical order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple:
        return max(self._terms, key=grlex_key)

    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def content(self) -> tuple:
        """Componentwise minimum exponent over all terms (nonzero poly only)."""
        if not self._terms:
            raise ZeroNumerator("content of the zero polynomial is undefined")
        mins = [None] * self.nvars
        for exps in self._terms:
            for i, e in enumerate(exps):
                if mins[i] is None or e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def value_at_unit_except(self, i: int) -> int:
        """Evaluate at e_i = (1,..,1,0,1,..,1) with the 0 in slot i (1-based)."""
        return sum(c for exps, c in self._terms.items() if exps[i - 1] == 0)

    # -- ring operations -----------------------------------------------

    def _check_arity(self, other: "IntPolynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomial arity mismatch")

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check_arity(other)
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        out = IntPolynomial.__new__(IntPolynomial)
        out.nvars = self.nvars
        out._terms = terms
        out._hash = None
        return out

    def __neg__(self) -> "IntPolynomial":
        out = IntPolynomial.__new__(IntPolynomial)
        out.nvars = self.nvars
        out._terms = {e: -c for e, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check_arity(other)
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        out = IntPolynomial.__new__(IntPolynomial)
        out.nvars = self.nvars
        out._terms = terms
        out._hash = None
        return out

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_down(self, shift: Sequence[int]) -> "IntPolynomial":
        """Divide by the monomial u^shift; every term must cover it."""
        terms = {}
        for exps, c in self._terms.items():
            new = tuple(e - s for e, s in zip(exps, shift))
            if any(e < 0 for e in new):
                raise NotDivisible(f"monomial u^{tuple(shift)} does not divide all terms")
            terms[new] = c
        return IntPolynomial(self.nvars, terms)

    # -- equality / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self.sorted_terms())))
        return self._hash

    # -- rendering -------------------------------------------------------

    def display(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = [f"u{i + 1}" for i in range(self.nvars)]
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def to_json_terms(self) -> list:
        return [{"c": str(c), "e": list(exps)} for exps, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, nvars: int, data: Iterable) -> "IntPolynomial":
        return cls(nvars, ((tuple(t["e"]), int(t["c"])) for t in data))

    def __repr__(self) -> str:
        return f"IntPolynomial({self.display()})"


def exact_divide(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Exact quotient f / g in Z[u], by leading-term reduction under grlex.

    Raises NotDivisible (with the offending remainder attached) unless the
    division is exact over the integers.  Upstream, a failure here signals a
    broken Laurent-phenomenon expectation, never a situation to paper over.
    """
    if f.nvars != g.nvars:
        raise ValueError("polynomial arity mismatch")
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    n = f.nvars
    rem = dict(f._terms)
    quo: dict = {}
    g_lead = g.leading_term()
    g_lc = g._terms[g_lead]
    g_items = list(g._terms.items())
    while rem:
        lead = max(rem, key=grlex_key)
        lc = rem[lead]
        if any(le < ge for le, ge in zip(lead, g_lead)) or lc % g_lc != 0:
            raise NotDivisible(
                "polynomial division is not exact", remainder=IntPolynomial(n, rem)
            )
        q_exp = tuple(le - ge for le, ge in zip(lead, g_lead))
        q_c = lc // g_lc
        quo[q_exp] = q_c
        for ge, gc in g_items:
            key = tuple(qe + e for qe, e in zip(q_exp, ge))
            s = rem.get(key, 0) - q_c * gc
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return IntPolynomial(n, quo)


def is_positive_polynomial(f: IntPolynomial) -> bool:
    """True iff f(e_i) > 0 for every almost-unit point e_i (0 in one slot).

    This is the positivity certificate showing a fraction f / monomial is
    already in reduced form.
    """
    return all(f.value_at_unit_except(i) > 0 for i in range(1, f.nvars + 1))


class ReducedFraction:
    """numerator / u^denom with a content-free numerator.

    ``denom`` entries may be negative; the initial indeterminate u_i is
    stored as numerator 1 over denom -e_i.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: IntPolynomial, den: Sequence[int]):
        den = tuple(den)
        if len(den) != num.nvars:
            raise ValueError("denominator arity mismatch")
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def normalized(cls, num: IntPolynomial, den: Sequence[int]) -> "ReducedFraction":
        """Strip the numerator's content monomial into the denominator vector."""
        if num.is_zero():
            raise ZeroNumerator("cluster fractions cannot have zero numerator")
        c = num.content()
        if any(c):
            num = num.shift_down(c)
            den = tuple(d - s for d, s in zip(den, c))
        return cls(num, den)

    @classmethod
    def indeterminate(cls, nvars: int, i: int) -> "ReducedFraction":
        """The initial variable u_i in good reduced form 1 / u_i^-1."""
        den = tuple(-1 if j == i - 1 else 0 for j in range(nvars))
        return cls(IntPolynomial.one(nvars), den)

    @classmethod
    def one(cls, nvars: int) -> "ReducedFraction":
        return cls(IntPolynomial.one(nvars), (0,) * nvars)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def denominator_vector(self) -> tuple:
        return self.den

    def is_indeterminate(self) -> int | None:
        """Return i if this fraction is exactly u_i, else None."""
        if not self.num.is_one():
            return None
        hits = [j for j, d in enumerate(self.den) if d]
        if len(hits) == 1 and self.den[hits[0]] == -1:
            return hits[0] + 1
        return None

    # -- arithmetic ------------------------------------------------------

    def __mul__(self, other: "ReducedFraction") -> "ReducedFraction":
        return ReducedFraction.normalized(
            self.num * other.num, tuple(a + b for a, b in zip(self.den, other.den))
        )

    def __pow__(self, k: int) -> "ReducedFraction":
        if k < 0:
            raise ValueError("negative fraction power")
        if k == 0:
            return ReducedFraction.one(self.nvars)
        return ReducedFraction.normalized(self.num**k, tuple(d * k for d in self.den))

    def __add__(self, other: "ReducedFraction") -> "ReducedFraction":
        common = tuple(max(a, b) for a, b in zip(self.den, other.den))
        left = self.num * IntPolynomial.monomial(
            self.nvars, tuple(c - a for c, a in zip(common, self.den))
        )
        right = other.num * IntPolynomial.monomial(
            self.nvars, tuple(c - b for c, b in zip(common, other.den))
        )
        return ReducedFraction.normalized(left + right, common)

    def div(self, other: "ReducedFraction") -> "ReducedFraction":
        """Exact fraction quotient; raises NotDivisible if numerators do not divide."""
        q = exact_divide(self.num, other.num)
        return ReducedFraction.normalized(
            q, tuple(a - b for a, b in zip(self.den, other.den))
        )

    # -- identity ----------------------------------------------------------

    def key(self) -> tuple:
        """Canonical hashable identity (denominator + sorted numerator terms)."""
        return (self.den, tuple(self.num.sorted_terms()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReducedFraction)
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __lt__(self, other: "ReducedFraction") -> bool:
        return self.key() < other.key()

    # -- rendering -----------------------------------------------------------

    def display(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"u{i + 1}" for i in range(self.nvars)]

        def monomial_str(exps):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            return "*".join(factors)

        up = monomial_str([-d if d < 0 else 0 for d in self.den])
        down = monomial_str([d if d > 0 else 0 for d in self.den])
        num_str = self.num.display(names)
        multi_term = self.num.num_terms() > 1
        if up:
            if self.num.is_one():
                num_str = up
            else:
                num_str = (f"({num_str})" if multi_term else num_str) + "*" + up
                multi_term = False
        if not down:
            return num_str
        if multi_term:
            num_str = f"({num_str})"
        if "*" in down or "^" in down:
            down = f"({down})"
        return f"{num_str}/{down}"

    def to_json(self, names: Sequence[str] | None = None) -> dict:
        return {
            "num": self.num.to_json_terms(),
            "den": list(self.den),
            "display": self.display(names),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ReducedFraction":
        den = tuple(data["den"])
        num = IntPolynomial.from_json_terms(len(den), data["num"])
        return cls.normalized(num, den)

    def __repr__(self) -> str:
        return f"ReducedFraction({self.display()})"


def product(fractions: Iterator | Iterable, nvars: int) -> ReducedFraction:
    """Product of fractions, empty product = 1."""
    out = ReducedFraction.one(nvars)
    for f in fractions:
        out = out * f
    return out
