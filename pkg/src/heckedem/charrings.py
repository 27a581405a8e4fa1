"""Character rings of the dual side and their Demazure operators.

* ``GroupRingElement``: Laurent polynomials Z[Lambda] in e^{(a,b)}, the
  K-side model.  Invariants under the swap s are generated by
  xi1 = e^{(1,0)} + e^{(0,1)} and xi2 = e^{(1,1)} (invertible); the ring
  is free of rank 2 over the invariants on {1, e^{(-1,0)}}.
* ``SymElement``: polynomials in eta1, eta2 localized at xi2' = eta1*eta2,
  the Chow-side model.  Invariants are generated by xi1' = eta1 + eta2 and
  xi2'; basis {1, (eta1 - eta2)/2} over the invariants (2 must be
  invertible).

All Demazure quotients are computed by exact division with the remainder
asserted to vanish; no rational-function arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffs import FieldTower, GenericScalar, ZQ_ONE, ZQ_Q, ZQ_ZERO


# ---------------------------------------------------------------------------
# coefficient-ring adapters


class ZqRing:
    """Z[q] viewed as a coefficient ring."""

    is_field = False

    @property
    def zero(self):
        return ZQ_ZERO

    @property
    def one(self):
        return ZQ_ONE

    @property
    def q(self):
        return ZQ_Q

    def from_int(self, n: int):
        return GenericScalar.const(n)

    def __eq__(self, other):
        return isinstance(other, ZqRing)

    def __hash__(self):
        return hash("ZqRing")

    def __repr__(self):
        return "Z[q]"


ZQ = ZqRing()


@dataclass(frozen=True)
class FieldRing:
    """A level of a finite-field tower as a coefficient ring.

    The deformation variable q specializes to 0 here: q = p^f vanishes
    in characteristic p.
    """

    tower: FieldTower
    level: str = "ext"

    is_field = True

    @property
    def zero(self):
        return self.tower.zero(self.level)

    @property
    def one(self):
        return self.tower.one(self.level)

    @property
    def q(self):
        return self.tower.zero(self.level)

    def from_int(self, n: int):
        return self.tower.from_int(n, self.level)

    def __repr__(self):
        return f"GF({self.tower.q if self.level == 'base' else self.tower.q ** 2})"


# ---------------------------------------------------------------------------
# K-side: the group ring Z[Lambda]


class GroupRingElement:
    """Finite sum of c * e^{(a,b)} with coefficients in a fixed ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: dict | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if not c.is_zero():
                    clean[(int(exp[0]), int(exp[1]))] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    # constructors -----------------------------------------------------
    @staticmethod
    def zero(ring) -> "GroupRingElement":
        return GroupRingElement(ring, {})

    @staticmethod
    def one(ring) -> "GroupRingElement":
        return GroupRingElement(ring, {(0, 0): ring.one})

    @staticmethod
    def monomial(ring, a: int, b: int, coeff=None) -> "GroupRingElement":
        return GroupRingElement(ring, {(a, b): coeff if coeff is not None else ring.one})

    @staticmethod
    def from_scalar(ring, c) -> "GroupRingElement":
        return GroupRingElement(ring, {(0, 0): c})

    # ring operations ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out[exp] + c if exp in out else c
        return GroupRingElement(self.ring, out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.ring, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                exp = (a1 + a2, b1 + b2)
                prod = c1 * c2
                out[exp] = out[exp] + prod if exp in out else prod
        return GroupRingElement(self.ring, out)

    def scale(self, c) -> "GroupRingElement":
        return GroupRingElement(self.ring, {exp: c * v for exp, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def s_action(self) -> "GroupRingElement":
        return GroupRingElement(self.ring, {(b, a): c for (a, b), c in self.terms.items()})

    def is_invariant(self) -> bool:
        return self.s_action() == self

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c})*e^{exp}" for exp, c in sorted(self.terms.items())]
        return " + ".join(parts)

    def to_json(self) -> dict:
        def coeff_json(c):
            return list(c.coeffs)

        return {f"({a},{b})": coeff_json(c) for (a, b), c in sorted(self.terms.items())}


def _divide_by_one_minus_alpha(num: GroupRingElement) -> GroupRingElement:
    """Exact division by (1 - e^{(1,-1)}) in the Laurent group ring.

    Multiplication by e^{(1,-1)} preserves the level n = a + b, so the
    division splits into independent one-dimensional problems per level.
    With N_t the coefficient of e^{(t, n-t)}, the quotient satisfies
    N_t = Q_t - Q_{t-1}, so Q_t is a prefix sum; exactness means the
    full sum on each level vanishes.
    """
    ring = num.ring
    levels: dict[int, dict[int, object]] = {}
    for (a, b), c in num.terms.items():
        levels.setdefault(a + b, {})[a] = c
    out: dict = {}
    for n, line in levels.items():
        ts = sorted(line)
        acc = ring.zero
        for t in range(ts[0], ts[-1] + 1):
            if t in line:
                acc = acc + line[t]
            if not acc.is_zero():
                out[(t, n - t)] = acc
        if not acc.is_zero():
            raise ArithmeticError("division by 1 - e^{(1,-1)} left a remainder")
    return GroupRingElement(ring, out)


def demazure_k(a: GroupRingElement, variant: str = "D") -> GroupRingElement:
    """K-side Demazure operators D, D', D(q) = D - q*D'."""
    ring = a.ring
    alpha = GroupRingElement.monomial(ring, 1, -1)
    if variant == "D":
        return _divide_by_one_minus_alpha(a - a.s_action())
    if variant == "D'":
        return _divide_by_one_minus_alpha(a - a.s_action() * alpha)
    if variant == "D(q)":
        return demazure_k(a, "D") - demazure_k(a, "D'").scale(ring.q)
    raise ValueError(f"unknown variant {variant!r}")


def decompose_k(a: GroupRingElement) -> tuple[GroupRingElement, GroupRingElement]:
    """Write a = a0 + a1*e^{(-1,0)} with a0, a1 invariant under s."""
    ring = a.ring
    d = demazure_k(a, "D")
    a1 = d * GroupRingElement.monomial(ring, 1, 0)
    a0 = a - d
    assert a0.is_invariant() and a1.is_invariant(), "decompose_k produced non-invariant parts"
    return a0, a1


def xi1_k(ring) -> GroupRingElement:
    return GroupRingElement(ring, {(1, 0): ring.one, (0, 1): ring.one})


def xi2_k(ring, power: int = 1) -> GroupRingElement:
    return GroupRingElement.monomial(ring, power, power)


def xi_plus(ring, poly: dict) -> GroupRingElement:
    """Substitute xi1 for e^{(1,0)} and xi2 for e^{(1,1)}.

    ``poly`` maps (m, k) to a coefficient, encoding the Laurent monomial
    e^{(1,0)}^m * e^{(1,1)}^k with m >= 0 and k arbitrary.
    """
    out = GroupRingElement.zero(ring)
    x1 = xi1_k(ring)
    for (m, k), c in poly.items():
        if m < 0:
            raise ValueError("e^{(1,0)} is not invertible in the invariant ring")
        term = GroupRingElement.from_scalar(ring, c) * xi2_k(ring, k)
        for _ in range(m):
            term = term * x1
        out = out + term
    return out


def to_xi_poly(a: GroupRingElement) -> dict:
    """Inverse of xi_plus on invariant elements: express a as a Laurent
    polynomial {(m, k): coeff} in xi1, xi2.

    Peels the extreme term: xi1^m * xi2^k has the unique maximal-spread
    monomial e^{(m+k, k)} with coefficient 1.
    """
    if not a.is_invariant():
        raise ValueError("to_xi_poly needs an s-invariant element")
    ring = a.ring
    rest = a
    out: dict = {}
    while not rest.is_zero():
        (aa, bb) = max(rest.terms, key=lambda e: (e[0] - e[1], e[0]))
        if aa < bb:
            raise ArithmeticError("invariant element has no dominant term; bug")
        c = rest.terms[(aa, bb)]
        m, k = aa - bb, bb
        key = (m, k)
        out[key] = out[key] + c if key in out else c
        rest = rest - xi_plus(ring, {key: c})
    return {key: c for key, c in out.items() if not c.is_zero()}


# ---------------------------------------------------------------------------
# Chow side: Sym(Lambda) localized at xi2' = eta1*eta2


class SymElement:
    """Polynomial in eta1, eta2 divided by (eta1*eta2)^denom.

    terms: map (i, j) -> coeff for eta1^i * eta2^j of the numerator;
    denom: the localization exponent, kept minimal.
    """

    __slots__ = ("ring", "terms", "denom")

    def __init__(self, ring, terms: dict | None = None, denom: int = 0):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if not c.is_zero():
                    clean[(int(exp[0]), int(exp[1]))] = c
        # canonical form: strip common eta1*eta2 factors into the denominator
        while denom > 0 and clean and all(i > 0 and j > 0 for (i, j) in clean):
            clean = {(i - 1, j - 1): c for (i, j), c in clean.items()}
            denom -= 1
        if not clean:
            denom = 0
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "denom", denom)

    def __setattr__(self, name, value):
        raise AttributeError("SymElement is immutable")

    @staticmethod
    def zero(ring) -> "SymElement":
        return SymElement(ring, {})

    @staticmethod
    def one(ring) -> "SymElement":
        return SymElement(ring, {(0, 0): ring.one})

    @staticmethod
    def monomial(ring, i: int, j: int, coeff=None) -> "SymElement":
        return SymElement(ring, {(i, j): coeff if coeff is not None else ring.one})

    @staticmethod
    def from_scalar(ring, c) -> "SymElement":
        return SymElement(ring, {(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def _raised(self, extra: int) -> dict:
        return {(i + extra, j + extra): c for (i, j), c in self.terms.items()}

    def __add__(self, other: "SymElement") -> "SymElement":
        d = max(self.denom, other.denom)
        out = self._raised(d - self.denom)
        for exp, c in other._raised(d - other.denom).items():
            out[exp] = out[exp] + c if exp in out else c
        return SymElement(self.ring, out, d)

    def __neg__(self) -> "SymElement":
        return SymElement(self.ring, {e: -c for e, c in self.terms.items()}, self.denom)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other: "SymElement") -> "SymElement":
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                exp = (i1 + i2, j1 + j2)
                prod = c1 * c2
                out[exp] = out[exp] + prod if exp in out else prod
        return SymElement(self.ring, out, self.denom + other.denom)

    def scale(self, c) -> "SymElement":
        return SymElement(self.ring, {e: c * v for e, v in self.terms.items()}, self.denom)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymElement)
            and self.ring == other.ring
            and self.denom == other.denom
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.denom, frozenset(self.terms.items())))

    def s_action(self) -> "SymElement":
        return SymElement(self.ring, {(j, i): c for (i, j), c in self.terms.items()}, self.denom)

    def is_invariant(self) -> bool:
        return self.s_action() == self

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c})*n1^{i}*n2^{j}" for (i, j), c in sorted(self.terms.items())]
        body = " + ".join(parts)
        return body if self.denom == 0 else f"({body}) / (n1*n2)^{self.denom}"


def _divide_by_root(num_terms: dict, ring) -> dict:
    """Exact division of a polynomial {(i,j): c} by (eta1 - eta2).

    Synthetic division in eta1 over Z[eta2]; the remainder is the
    evaluation at eta1 = eta2 and must vanish.
    """
    if not num_terms:
        return {}
    rows: dict[int, dict[int, object]] = {}
    for (i, j), c in num_terms.items():
        rows.setdefault(i, {})[j] = c
    imax = max(rows)
    quot: dict = {}
    carry: dict[int, object] = {}  # coefficient row of eta1^i in the quotient
    for i in range(imax, 0, -1):
        row = dict(rows.get(i, {}))
        for j, c in carry.items():
            row[j] = row[j] + c if j in row else c
        for j, c in row.items():
            if not c.is_zero():
                quot[(i - 1, j)] = c
        carry = {j + 1: c for j, c in row.items() if not c.is_zero()}
    rem = dict(rows.get(0, {}))
    for j, c in carry.items():
        rem[j] = rem[j] + c if j in rem else c
    if any(not c.is_zero() for c in rem.values()):
        raise ArithmeticError("division by eta1 - eta2 left a remainder")
    return quot


def demazure_ch(a: SymElement, variant: str = "D") -> SymElement:
    """Chow-side Demazure operators D, D', D(q) = D - q*D'."""
    ring = a.ring
    root = SymElement(ring, {(1, 0): ring.one, (0, 1): -ring.one})
    if variant == "D":
        num = a - a.s_action()
    elif variant == "D'":
        num = a - a.s_action() * (SymElement.one(ring) - root)
    elif variant == "D(q)":
        return demazure_ch(a, "D") - demazure_ch(a, "D'").scale(ring.q)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return SymElement(ring, _divide_by_root(num.terms, ring), num.denom)


def delta_ch(ring) -> SymElement:
    """The basis element (eta1 - eta2)/2; needs 2 invertible."""
    half = _half(ring)
    return SymElement(ring, {(1, 0): half, (0, 1): -half})


def _half(ring):
    two = ring.from_int(2)
    if not ring.is_field:
        raise ValueError("decomposition basis needs 2 invertible in the coefficient ring")
    if two.is_zero():
        raise ValueError("coefficient ring has characteristic 2")
    return two.inverse()


def decompose_ch(a: SymElement) -> tuple[SymElement, SymElement]:
    """Write a = a0 + a1*(eta1-eta2)/2 with a0, a1 invariant."""
    a1 = demazure_ch(a, "D")
    a0 = a - a1 * delta_ch(a.ring)
    assert a0.is_invariant() and a1.is_invariant(), "decompose_ch produced non-invariant parts"
    return a0, a1


def xi1_ch(ring) -> SymElement:
    return SymElement(ring, {(1, 0): ring.one, (0, 1): ring.one})


def xi2_ch(ring, power: int = 1) -> SymElement:
    if power >= 0:
        return SymElement(ring, {(power, power): ring.one})
    return SymElement(ring, {(0, 0): ring.one}, -power)


def to_xi_poly_ch(a: SymElement) -> dict:
    """Express an invariant SymElement as {(m, k): coeff} for
    xi1'^m * xi2'^k (k may be negative via the localization)."""
    if not a.is_invariant():
        raise ValueError("to_xi_poly_ch needs an s-invariant element")
    ring = a.ring
    rest = a
    out: dict = {}
    while not rest.is_zero():
        (i, j) = max(rest.terms, key=lambda e: (e[0] - e[1], e[0]))
        if i < j:
            raise ArithmeticError("invariant element has no dominant term; bug")
        c = rest.terms[(i, j)]
        m, k = i - j, j - rest.denom
        key = (m, k)
        out[key] = out[key] + c if key in out else c
        mono = xi2_ch(ring, k)
        x1 = xi1_ch(ring)
        for _ in range(m):
            mono = mono * x1
        rest = rest - mono.scale(c)
    return {key: c for key, c in out.items() if not c.is_zero()}
