"""Sparse exact multivariate Laurent polynomials in x1..xn, y1..yn, t and L.

Coefficients are Python ints (arbitrary precision); identity verification is
always an exact equality of term maps.  A monomial is stored as a sorted tuple
of ((kind_rank, index), exponent) pairs with zero exponents never kept, where
the kinds rank x < y < t < L.  L is a spare scalar indeterminate used where an
identity needs a deformation parameter distinct from t.
"""

from __future__ import annotations

from dataclasses import dataclass

_KINDS = {"x": 0, "y": 1, "t": 2, "L": 3}
_NAMES = {v: k for k, v in _KINDS.items()}

Monomial = tuple  # tuple[((rank, index), exp), ...] sorted by variable


def _mono(items) -> Monomial:
    return tuple(sorted((v, e) for v, e in items if e != 0))


class LaurentPoly:
    """Immutable-by-convention dict of monomial -> nonzero int coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def integer(cls, c: int) -> "LaurentPoly":
        return cls({(): c}) if c else cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.integer(1)

    @classmethod
    def variable(cls, kind: str, index: int = 0, exp: int = 1) -> "LaurentPoly":
        if kind not in _KINDS:
            raise ValueError(f"unknown variable kind {kind!r}")
        return cls({_mono([((_KINDS[kind], index), exp)]): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "LaurentPoly":
        """Build c * x1^a ... from keyword names like x1=2, y3=-1, t=4."""
        items = []
        for name, e in exps.items():
            kind = name[0]
            idx = int(name[1:]) if len(name) > 1 else 0
            items.append(((_KINDS[kind], idx), e))
        return cls({_mono(items): coeff}) if coeff else cls()

    # -- ring operations ----------------------------------------------

    def _coerced(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.integer(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                merged = dict(d1)
                for v, e in m2:
                    merged[v] = merged.get(v, 0) + e
                key = _mono(merged.items())
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.integer(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- substitution --------------------------------------------------

    def substitute_y(self, scale=1) -> "LaurentPoly":
        """Replace every y_i by scale * x_i, where scale is 1, -1, or a kind name.

        scale="t" maps y_i -> t*x_i and scale="L" maps y_i -> L*x_i; the scalar
        exponent follows the (possibly negative) y exponent.
        """
        out: dict = {}
        for m, c in self.terms.items():
            merged: dict = {}
            coeff = c
            for (rank, idx), e in m:
                if rank == _KINDS["y"]:
                    merged[(_KINDS["x"], idx)] = merged.get((_KINDS["x"], idx), 0) + e
                    if scale == -1:
                        coeff = coeff if e % 2 == 0 else -coeff
                    elif scale in ("t", "L"):
                        key = (_KINDS[scale], 0)
                        merged[key] = merged.get(key, 0) + e
                    elif scale != 1:
                        raise ValueError(f"unsupported scale {scale!r}")
                else:
                    merged[(rank, idx)] = merged.get((rank, idx), 0) + e
            key = _mono(merged.items())
            out[key] = out.get(key, 0) + coeff
        return LaurentPoly(out)

    def substitute_scalar(self, kind: str, value: int) -> "LaurentPoly":
        """Evaluate t or L at an integer; rejects 0 against negative exponents."""
        rank = _KINDS[kind]
        out: dict = {}
        for m, c in self.terms.items():
            coeff = c
            rest = []
            for v, e in m:
                if v[0] == rank:
                    if value == 0 and e < 0:
                        raise ZeroDivisionError(f"{kind}^{e} at {kind}=0")
                    coeff *= value ** e if e >= 0 else _int_inv_pow(value, -e)
                else:
                    rest.append((v, e))
            key = _mono(rest)
            out[key] = out.get(key, 0) + coeff
        return LaurentPoly(out)

    def substitute_point(self, kind: str, values: tuple[int, ...]) -> "LaurentPoly":
        """Evaluate x (or y) at an integer point; index i reads values[i-1]."""
        rank = _KINDS[kind]
        out: dict = {}
        for m, c in self.terms.items():
            coeff = c
            rest = []
            for (r, idx), e in m:
                if r == rank:
                    if idx < 1 or idx > len(values):
                        raise ValueError(f"no value supplied for {kind}{idx}")
                    v = values[idx - 1]
                    if v == 0 and e < 0:
                        raise ZeroDivisionError(f"{kind}{idx}^{e} at 0")
                    coeff *= v ** e if e >= 0 else _int_inv_pow(v, -e)
                else:
                    rest.append(((r, idx), e))
            key = _mono(rest)
            out[key] = out.get(key, 0) + coeff
        return LaurentPoly(out)

    # -- presentation ---------------------------------------------------

    def variables(self) -> list[tuple[int, int]]:
        seen = {v for m in self.terms for v, _ in m}
        return sorted(seen)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Graded ordering: total degree first, then exponents on x1..xn, y1..yn, t, L."""
        universe = self.variables()

        def key(item):
            m, _ = item
            d = dict(m)
            return (sum(d.values()), tuple(d.get(v, 0) for v in universe))

        return sorted(self.terms.items(), key=key, reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for (rank, idx), e in sorted(m):
                name = _NAMES[rank] + (str(idx) if rank <= 1 else "")
                factors.append(name if e == 1 else f"{name}^{e}")
            body = " ".join(factors)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = f"{abs(c)} * {body}"
            pieces.append((" - " if c < 0 else " + ") + piece)
        first = pieces[0]
        text = ("-" if first.startswith(" - ") else "") + first[3:]
        return text + "".join(pieces[1:])

    def to_json(self) -> list[dict]:
        out = []
        for m, c in self.sorted_terms():
            exps = {}
            for (rank, idx), e in sorted(m):
                name = _NAMES[rank] + (str(idx) if rank <= 1 else "")
                exps[name] = e
            out.append({"coeff": c, "exps": exps})
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> "LaurentPoly":
        out: dict = {}
        for term in data:
            items = []
            for name, e in term["exps"].items():
                kind = name[0]
                idx = int(name[1:]) if len(name) > 1 else 0
                items.append(((_KINDS[kind], idx), e))
            key = _mono(items)
            out[key] = out.get(key, 0) + int(term["coeff"])
        return cls(out)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"


def _int_inv_pow(value: int, k: int) -> int:
    """value^-k for integer value; only +-1 stay integral."""
    if value == 1:
        return 1
    if value == -1:
        return -1 if k % 2 else 1
    raise ValueError(f"1/{value}^{k} is not an integer")


def x_(i: int, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.variable("x", i, exp)


def y_(i: int, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.variable("y", i, exp)


def t_(exp: int = 1) -> LaurentPoly:
    return LaurentPoly.variable("t", 0, exp)


def L_(exp: int = 1) -> LaurentPoly:
    return LaurentPoly.variable("L", 0, exp)


def xy_factor(i: int, j: int, mode: str) -> LaurentPoly:
    """One product factor: x_i + y_j, or its deformed symplectic counterpart."""
    if mode == "gl":
        return x_(i) + y_(j)
    if mode == "sp":
        return x_(i) + t_(2) * x_(i, -1) + y_(j) + t_(2) * y_(j, -1)
    raise ValueError(f"unknown mode {mode!r}")


def product_xy(n: int, rng: str, mode: str) -> LaurentPoly:
    """Product of xy_factor(i, j) over i < j (strict) or i <= j (weak)."""
    if n < 1:
        raise ValueError("n must be positive")
    if rng not in ("strict", "weak"):
        raise ValueError(f"range must be 'strict' or 'weak', got {rng!r}")
    out = LaurentPoly.one()
    for i in range(1, n + 1):
        for j in range(i if rng == "weak" else i + 1, n + 1):
            out = out * xy_factor(i, j, mode)
    return out


def substitute(p: LaurentPoly, rule: str) -> LaurentPoly:
    """Apply a named substitution rule.

    Accepted forms: "y=x", "y=t*x", "y=-x", "y=L*x", "t=<int>", "L=<int>",
    and "x=(c1,...,cn)" / "y=(c1,...,cn)" for integer points.
    """
    rule = rule.replace(" ", "")
    if rule == "y=x":
        return p.substitute_y(1)
    if rule == "y=t*x":
        return p.substitute_y("t")
    if rule == "y=L*x":
        return p.substitute_y("L")
    if rule == "y=-x":
        return p.substitute_y(-1)
    if rule.startswith(("t=", "L=")):
        return p.substitute_scalar(rule[0], int(rule[2:]))
    if rule.startswith(("x=(", "y=(")) and rule.endswith(")"):
        values = tuple(int(v) for v in rule[3:-1].split(",") if v != "")
        return p.substitute_point(rule[0], values)
    raise ValueError(f"unsupported substitution rule {rule!r}")
