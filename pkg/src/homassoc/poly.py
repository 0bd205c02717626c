"""Sparse multivariate polynomials over Q and Buchberger's algorithm.

Coefficients are plain rationals: the variety generators this engine
exists for have integer coefficients, and Q(i)-valued points are
handled by evaluation rather than by extending the coefficient field.

The S-pair selection strategy is the normal one (smallest lcm in the
active order first, ties broken by pair creation index), which makes
every run deterministic; a hard step budget guards against blowup and
raises with the partial statistics attached.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

Exponent = tuple[int, ...]


class MonomialOrder:
    """A total order on monomials compatible with multiplication.

    ``names`` lists the variables in increasing precedence: later names
    are larger.  ``lex`` and ``degrevlex`` are provided.
    """

    def __init__(self, kind: str, names: Sequence[str]):
        if kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.names = tuple(names)

    @staticmethod
    def lex(names: Sequence[str]) -> "MonomialOrder":
        return MonomialOrder("lex", names)

    @staticmethod
    def degrevlex(names: Sequence[str]) -> "MonomialOrder":
        return MonomialOrder("degrevlex", names)

    def key(self, exp: Exponent):
        if self.kind == "lex":
            return tuple(reversed(exp))
        # degrevlex: compare total degree, then reversed exponents
        # negated, scanning from the largest variable downwards
        return (sum(exp), tuple(-e for e in exp))

    def greater(self, a: Exponent, b: Exponent) -> bool:
        return self.key(a) > self.key(b)

    def __repr__(self):
        return f"MonomialOrder({self.kind}, {self.names})"


def _exp_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _exp_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial: exponent vector -> nonzero rational."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: dict[Exponent, Fraction]):
        object.__setattr__(self, "names", tuple(names))
        clean = {e: Fraction(c) for e, c in terms.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def zero(names: Sequence[str]) -> "MultiPoly":
        return MultiPoly(names, {})

    @staticmethod
    def constant(names: Sequence[str], c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(names, {(0,) * len(names): c} if c else {})

    @staticmethod
    def variable(names: Sequence[str], name: str) -> "MultiPoly":
        idx = list(names).index(name)
        exp = [0] * len(names)
        exp[idx] = 1
        return MultiPoly(names, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.names, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return MultiPoly(self.names, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.names, {e: x * c for e, x in self.terms.items()})
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_mul(e1, e2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.names, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        return self * Fraction(c)

    def term_mul(self, exp: Exponent, coeff: Fraction) -> "MultiPoly":
        return MultiPoly(
            self.names, {_exp_mul(e, exp): c * coeff for e, c in self.terms.items()}
        )

    def leading(self, order: MonomialOrder) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def monic(self, order: MonomialOrder) -> "MultiPoly":
        if self.is_zero():
            return self
        _, c = self.leading(order)
        return self * (Fraction(1) / c)

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate at rational (or any ring-element) arguments."""
        total = None
        for e, c in self.terms.items():
            term = c
            for x, p in zip(values, e):
                for _ in range(p):
                    term = term * x
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.terms.items()))))

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def text(self, order: Optional[MonomialOrder] = None) -> str:
        if self.is_zero():
            return "0"
        order = order or MonomialOrder.degrevlex(self.names)
        chunks = []
        for exp, coeff in self.sorted_terms(order):
            mono = "*".join(
                name if p == 1 else f"{name}^{p}"
                for name, p in zip(self.names, exp)
                if p
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.text()})"


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+/\d+|\d+|\^|\*|\+|-|\(|\))")


def parse_poly(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse the report syntax, e.g. ``3*c112*a21 - a11^2*c222``.

    Supports +, -, *, ^, integer and fraction literals and parentheses.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad polynomial syntax at offset {pos}: {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    idx = 0

    def peek():
        return tokens[idx]

    def advance():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_atom() -> MultiPoly:
        tok = advance()
        if tok == "(":
            inner = parse_sum()
            if advance() != ")":
                raise ValueError("unbalanced parenthesis in polynomial")
            return inner
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        if re.fullmatch(r"\d+(/\d+)?", tok):
            base = MultiPoly.constant(names, Fraction(tok))
        else:
            if tok not in names:
                raise ValueError(f"unknown variable {tok!r}")
            base = MultiPoly.variable(names, tok)
        if peek() == "^":
            advance()
            power = advance()
            if power is None or not power.isdigit():
                raise ValueError("exponent must be a non-negative integer")
            result = MultiPoly.constant(names, 1)
            for _ in range(int(power)):
                result = result * base
            return result
        return base

    def parse_product() -> MultiPoly:
        result = parse_atom()
        while peek() == "*":
            advance()
            result = result * parse_atom()
        return result

    def parse_sum() -> MultiPoly:
        sign = 1
        while peek() in ("+", "-"):
            if advance() == "-":
                sign = -sign
        result = parse_product() * sign
        while peek() in ("+", "-"):
            sign = 1
            while peek() in ("+", "-"):
                if advance() == "-":
                    sign = -sign
            result = result + parse_product() * sign
        return result

    out = parse_sum()
    if peek() is not None:
        raise ValueError(f"trailing tokens in polynomial: {tokens[idx:]}")
    return out


def normal_form(
    p: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder
) -> MultiPoly:
    """Remainder of multivariate division of p by the list ``basis``."""
    leads = [(g.terms, *g.leading(order)) for g in basis if not g.is_zero()]
    work = dict(p.terms)
    remainder: dict[Exponent, Fraction] = {}
    key = order.key
    while work:
        exp = max(work, key=key)
        coeff = work[exp]
        reduced = False
        for gterms, gexp, gcoeff in leads:
            if _exp_divides(gexp, exp):
                shift = _exp_div(exp, gexp)
                factor = coeff / gcoeff
                for e, c in gterms.items():
                    target = _exp_mul(e, shift)
                    new = work.get(target, Fraction(0)) - factor * c
                    if new:
                        work[target] = new
                    else:
                        work.pop(target, None)
                reduced = True
                break
        if not reduced:
            remainder[exp] = coeff
            del work[exp]
    return MultiPoly(p.names, remainder)


class BudgetExceeded(RuntimeError):
    def __init__(self, stats: dict[str, int]):
        super().__init__(f"Groebner step budget exceeded: {stats}")
        self.stats = stats


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[MultiPoly, ...]
    order: MonomialOrder
    stats: dict[str, int] = field(default_factory=dict)

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant() and not self.generators[0].is_zero()

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        return normal_form(p, self.generators, self.order)

    def contains(self, p: MultiPoly) -> bool:
        return self.normal_form(p).is_zero()

    def rational_point_if_linear(self) -> Optional[list[Fraction]]:
        """If every generator has total degree <= 1, return one exact
        solution of the corresponding linear system (free variables 0)."""
        if self.is_unit_ideal():
            return None
        nvars = len(self.order.names)
        rows, rhs = [], []
        for g in self.generators:
            if g.total_degree() > 1:
                return None
            row = [Fraction(0)] * nvars
            const = Fraction(0)
            for e, c in g.terms.items():
                if sum(e) == 0:
                    const = c
                else:
                    row[e.index(1)] = c
            rows.append(row)
            rhs.append(-const)
        from .linalg import Matrix, solve as linsolve
        from .scalars import GaussianRational

        if not rows:
            return [Fraction(0)] * nvars
        m = Matrix([[GaussianRational(c) for c in row] for row in rows])
        sol = linsolve(m, tuple(GaussianRational(c) for c in rhs))
        if sol is None:
            return None
        return [x.re for x in sol]


def _spoly(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    fexp, fc = f.leading(order)
    gexp, gc = g.leading(order)
    lcm = _exp_lcm(fexp, gexp)
    return f.term_mul(_exp_div(lcm, fexp), Fraction(1) / fc) - g.term_mul(
        _exp_div(lcm, gexp), Fraction(1) / gc
    )


def _autoreduce(polys: list[MultiPoly], order: MonomialOrder) -> list[MultiPoly]:
    polys = [p.monic(order) for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            rest = polys[:i] + polys[i + 1 :]
            r = normal_form(polys[i], rest, order)
            if r != polys[i]:
                changed = True
                if r.is_zero():
                    polys = rest
                else:
                    polys = rest + [r.monic(order)]
                break
    return sorted(polys, key=lambda p: order.key(p.leading(order)[0]))


def _primitive(p: MultiPoly, order: MonomialOrder) -> MultiPoly:
    """Integer coefficients with content 1 and positive leading coefficient."""
    from math import gcd, lcm as int_lcm

    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = int_lcm(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, num)
    if p.leading(order)[1] < 0:
        scale = -scale
    return p * scale


class _Reducer:
    """Divisor lookup over the alive part of the working basis.

    Entries are kept in ascending order-key order; since that key leads
    with the total degree, the divisor scan can stop at the first entry
    whose leading degree exceeds the degree of the term at hand.
    """

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.entries: list[tuple[int, Exponent, dict, Fraction]] = []

    def add(self, p: MultiPoly):
        exp, coeff = p.leading(self.order)
        self.entries.append((sum(exp), exp, p.terms, coeff))
        self.entries.sort(key=lambda t: self.order.key(t[1]))

    def remove_multiples(self, exp: Exponent):
        self.entries = [
            e for e in self.entries if e[1] == exp or not _exp_divides(exp, e[1])
        ]

    def reduce(self, terms: dict[Exponent, Fraction]) -> dict[Exponent, Fraction]:
        key = self.order.key
        work = dict(terms)
        remainder: dict[Exponent, Fraction] = {}
        while work:
            exp = max(work, key=key)
            coeff = work[exp]
            deg = sum(exp)
            hit = None
            for gdeg, gexp, gterms, gcoeff in self.entries:
                if gdeg > deg:
                    break
                if _exp_divides(gexp, exp):
                    hit = (gexp, gterms, gcoeff)
                    break
            if hit is None:
                remainder[exp] = coeff
                del work[exp]
                continue
            gexp, gterms, gcoeff = hit
            shift = _exp_div(exp, gexp)
            factor = coeff / gcoeff
            for e, c in gterms.items():
                target = _exp_mul(e, shift)
                new = work.get(target, Fraction(0)) - factor * c
                if new:
                    work[target] = new
                else:
                    work.pop(target, None)
        return remainder


def buchberger(
    generators: Sequence[MultiPoly],
    order: MonomialOrder,
    budget: int = 1_000_000,
    degree_bound: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis with the normal selection strategy.

    One budget step is charged per S-pair reduction.  The pair queue is
    pruned with the Gebauer-Moeller criteria, new elements are fully
    reduced and kept with integer content-free coefficients, and basis
    members whose leading term becomes divisible by a newer one stop
    acting as reducers.  Selection is smallest lcm first with ties by
    creation index, so every run is deterministic; the final
    auto-reduction makes the output the unique reduced basis for the
    order.

    ``degree_bound`` discards S-pairs whose lcm degree exceeds the
    bound.  For homogeneous input the result is a truncated basis that
    decides ideal membership correctly for every polynomial of total
    degree up to the bound (pairs above the bound can only contribute
    basis elements of higher degree, which never divide lower-degree
    terms).
    """
    import heapq

    stats = {"s_pairs": 0, "reductions_to_zero": 0, "basis_growth": 0, "pairs_beyond_bound": 0}
    names = generators[0].names if generators else ()
    start = [_primitive(g, order) for g in generators if not g.is_zero()]
    if not start:
        return GroebnerBasis((), order, stats)

    basis: list[MultiPoly] = []
    leading: list[Exponent] = []
    reducer = _Reducer(order)
    heap: list[tuple[tuple, int, int, int]] = []
    pair_lcm: dict[tuple[int, int], Exponent] = {}
    dead_pairs: set[tuple[int, int]] = set()
    pair_counter = 0

    def add_element(p: MultiPoly):
        nonlocal pair_counter
        t = len(basis)
        e_t = p.leading(order)[0]
        # Gebauer-Moeller criterion B: old pairs whose lcm is inside the
        # new leading term become redundant
        for (i, j), lcm_ij in list(pair_lcm.items()):
            if (i, j) in dead_pairs:
                continue
            if (
                _exp_divides(e_t, lcm_ij)
                and _exp_lcm(e_t, leading[i]) != lcm_ij
                and _exp_lcm(e_t, leading[j]) != lcm_ij
            ):
                dead_pairs.add((i, j))
        # criteria M and F on the new pairs
        candidates = {}
        for i in range(t):
            candidates[i] = _exp_lcm(leading[i], e_t)
        keep: list[int] = []
        for i, lcm_i in candidates.items():
            dominated = False
            for j, lcm_j in candidates.items():
                if j == i:
                    continue
                if lcm_j != lcm_i and _exp_divides(lcm_j, lcm_i):
                    dominated = True
                    break
                if lcm_j == lcm_i and j < i:
                    # among equal lcms keep only the earliest, unless
                    # that one is killed by the product criterion below
                    dominated = not _exp_coprime(leading[j], e_t)
                    if dominated:
                        break
            if not dominated:
                keep.append(i)
        basis.append(p)
        leading.append(e_t)
        reducer.remove_multiples(e_t)
        reducer.add(p)
        for i in keep:
            if _exp_coprime(leading[i], e_t):
                continue
            lcm = candidates[i]
            pair_lcm[(i, t)] = lcm
            heapq.heappush(heap, (order.key(lcm), pair_counter, i, t))
            pair_counter += 1

    for g in start:
        reduced = reducer.reduce(g.terms)
        if reduced:
            add_element(_primitive(MultiPoly(names, reduced), order))

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) in dead_pairs:
            continue
        if degree_bound is not None and sum(pair_lcm[(i, j)]) > degree_bound:
            stats["pairs_beyond_bound"] += 1
            continue
        if stats["s_pairs"] >= budget:
            raise BudgetExceeded(stats)
        stats["s_pairs"] += 1
        s = _spoly(basis[i], basis[j], order)
        remainder = reducer.reduce(s.terms)
        if not remainder:
            stats["reductions_to_zero"] += 1
            continue
        stats["basis_growth"] += 1
        add_element(_primitive(MultiPoly(names, remainder), order))

    alive = [basis[k] for k in range(len(basis)) if _is_alive(leading, k)]
    reduced = _autoreduce(alive, order)
    return GroebnerBasis(tuple(reduced), order, stats)


def _is_alive(leading: list[Exponent], k: int) -> bool:
    ek = leading[k]
    for m in range(len(leading)):
        if m != k and _exp_divides(leading[m], ek) and leading[m] != ek:
            return False
        if m > k and leading[m] == ek:
            return False
    return True
