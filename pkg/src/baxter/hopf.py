"""The Hopf-algebra layer.

The permutation algebra carries the fundamental basis ``F`` (product =
shifted shuffle, coproduct = deconcatenate and standardize).  Summing
``F`` over baxter congruence classes gives the basis ``P`` of a Hopf
subalgebra indexed by twin pairs, with the order-sum bases ``E`` and
``H`` on top of it.  The graded dual carries ``Fstar`` and the quotient
basis ``Pstar``.  ``Psylv`` indexes class sums of the sylvester
congruence (shapes of single right trees), which embed via ``rho``.

Elements are finite rational linear combinations of keys in one named
basis; all coefficients are exact ``fractions.Fraction`` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import config
from .errors import InternalInvariantError, NotInSubalgebraError
from .exactlin import RationalMatrix, kernel_basis, rational_str
from .insertion import (
    baxter_representative,
    class_of_pair,
    is_twin_pair,
    min_perm,
    p_shape,
    sylvester_class_of_tree,
)
from .lattice import baxter_leq, enumerate_tbt
from .perms import check_permutation, inverse as perm_inverse, is_connected
from .trees import (
    canopy,
    complement_canopy,
    graft_over,
    graft_under,
    pair_str,
    size as tree_size,
    tree_str,
    trees_by_canopy,
)
from .words import shifted_shuffle, standardize, word_str

# basis name -> what its keys are
_KEY_KIND = {
    "F": "perm",
    "Fstar": "perm",
    "P": "pair",
    "E": "pair",
    "H": "pair",
    "Pstar": "pair",
    "Psylv": "tree",
}


def key_degree(basis: str, key) -> int:
    kind = _KEY_KIND[basis]
    if kind == "perm":
        return len(key)
    if kind == "pair":
        return tree_size(key[0])
    return tree_size(key)


def key_str(basis: str, key) -> str:
    kind = _KEY_KIND[basis]
    if kind == "perm":
        return word_str(key)
    if kind == "pair":
        return pair_str(key)
    return tree_str(key)


def _sort_key(basis, key):
    return (key_degree(basis, key), key_str(basis, key))


class Element:
    """A finitely supported map from basis keys to nonzero rationals.

    Keys of one element all live in one named basis; mixed degrees are
    fine.  Terms are kept sorted by (degree, key text), so equal elements
    print identically.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=()):
        if basis not in _KEY_KIND:
            raise ValueError(f"unknown basis {basis!r}")
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for key, coeff in items:
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self.basis = basis
        self.terms = {
            k: acc[k] for k in sorted(acc, key=lambda k: _sort_key(basis, k)) if acc[k]
        }

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Element) or other.basis != self.basis:
            raise ValueError("can only add elements of the same basis")
        return Element(
            self.basis, list(self.terms.items()) + list(other.terms.items())
        )

    def __neg__(self):
        return Element(self.basis, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return Element(self.basis, {k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return element_product(self, other)
        return self.__rmul__(other)

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def support(self):
        return set(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"<0 in {self.basis}>"
        bits = []
        for k, c in self.terms.items():
            coeff = "" if c == 1 else ("-" if c == -1 else rational_str(c) + "*")
            bits.append(f"{coeff}{self.basis}[{key_str(self.basis, k)}]")
        return "<" + " + ".join(bits).replace("+ -", "- ") + ">"

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [
                {"coeff": rational_str(c), "key": key_str(self.basis, k)}
                for k, c in self.terms.items()
            ],
        }


class TensorElement:
    """A rational combination of pure tensors of basis keys."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases, terms=()):
        bases = tuple(bases)
        for b in bases:
            if b not in _KEY_KIND:
                raise ValueError(f"unknown basis {b!r}")
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for key, coeff in items:
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self.bases = bases

        def order(key):
            return (
                tuple(key_degree(b, k) for b, k in zip(bases, key)),
                tuple(key_str(b, k) for b, k in zip(bases, key)),
            )

        self.terms = {k: acc[k] for k in sorted(acc, key=order) if acc[k]}

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.bases == other.bases
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.bases, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, TensorElement) or other.bases != self.bases:
            raise ValueError("can only add tensors over the same bases")
        return TensorElement(
            self.bases, list(self.terms.items()) + list(other.terms.items())
        )

    def __neg__(self):
        return TensorElement(self.bases, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return TensorElement(self.bases, {k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_product(self, other)
        return self.__rmul__(other)

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __repr__(self):
        if not self.terms:
            return f"<0 in {'x'.join(self.bases)}>"
        bits = []
        for key, c in self.terms.items():
            coeff = "" if c == 1 else ("-" if c == -1 else rational_str(c) + "*")
            body = " (x) ".join(
                f"{b}[{key_str(b, k)}]" for b, k in zip(self.bases, key)
            )
            bits.append(f"{coeff}{body}")
        return "<" + " + ".join(bits).replace("+ -", "- ") + ">"

    def to_json(self):
        return {
            "basis": list(self.bases),
            "terms": [
                {
                    "coeff": rational_str(c),
                    "key": [key_str(b, k) for b, k in zip(self.bases, key)],
                }
                for key, c in self.terms.items()
            ],
        }


def one(basis: str) -> Element:
    """The unit element (empty key) of a basis."""
    kind = _KEY_KIND[basis]
    key = () if kind == "perm" else (None, None) if kind == "pair" else None
    return Element(basis, {key: 1})


def f_element(sigma, coeff=1) -> Element:
    return Element("F", {check_permutation(sigma): coeff})


def p_element(pair, coeff=1) -> Element:
    if not is_twin_pair(pair):
        raise ValueError(f"not a twin pair: {pair_str(pair)}")
    return Element("P", {pair: coeff})


def fstar_element(sigma, coeff=1) -> Element:
    return Element("Fstar", {check_permutation(sigma): coeff})


def sylv_element(t, coeff=1) -> Element:
    return Element("Psylv", {t: coeff})


# ---------------------------------------------------------------------------
# the F basis: shifted shuffle / deconcatenation


def _f_key_product(s, t) -> Element:
    return Element("F", {p: 1 for p in shifted_shuffle(s, t)})


def f_product(x: Element, y: Element) -> Element:
    """Product in the F basis: shifted shuffle, extended bilinearly."""
    if x.basis != "F" or y.basis != "F":
        raise ValueError("f_product needs F-basis elements")
    return element_product(x, y)


def f_coproduct(x: Element) -> TensorElement:
    """Coproduct in the F basis: deconcatenate and standardize each part."""
    if x.basis != "F":
        raise ValueError("f_coproduct needs an F-basis element")
    acc = []
    for s, c in x.terms.items():
        for i in range(len(s) + 1):
            acc.append(((standardize(s[:i]), standardize(s[i:])), c))
    return TensorElement(("F", "F"), acc)


def f_prec(x: Element, y: Element) -> Element:
    """Half product keeping the last letter on the left factor's side."""
    if x.basis != "F" or y.basis != "F":
        raise ValueError("dendriform operations need F-basis elements")
    acc = []
    for s, c in x.terms.items():
        if not s:
            continue
        for t, d in y.terms.items():
            for p in shifted_shuffle(s, t):
                if p[-1] == s[-1]:
                    acc.append((p, c * d))
    return Element("F", acc)


def f_succ(x: Element, y: Element) -> Element:
    """Half product keeping the last letter on the right factor's side."""
    if x.basis != "F" or y.basis != "F":
        raise ValueError("dendriform operations need F-basis elements")
    acc = []
    for s, c in x.terms.items():
        for t, d in y.terms.items():
            if not t:
                continue
            last = t[-1] + len(s)
            for p in shifted_shuffle(s, t):
                if p[-1] == last:
                    acc.append((p, c * d))
    return Element("F", acc)


def f_coproduct_left(x: Element) -> TensorElement:
    """Half coproduct: proper splits keeping the maximal letter left."""
    if x.basis != "F":
        raise ValueError("dendriform operations need F-basis elements")
    acc = []
    for s, c in x.terms.items():
        if not s:
            continue
        pos_max = s.index(len(s)) + 1
        for i in range(pos_max, len(s)):
            acc.append(((standardize(s[:i]), standardize(s[i:])), c))
    return TensorElement(("F", "F"), acc)


def f_coproduct_right(x: Element) -> TensorElement:
    """Half coproduct: proper splits keeping the maximal letter right."""
    if x.basis != "F":
        raise ValueError("dendriform operations need F-basis elements")
    acc = []
    for s, c in x.terms.items():
        if not s:
            continue
        pos_max = s.index(len(s)) + 1
        for i in range(1, pos_max):
            acc.append(((standardize(s[:i]), standardize(s[i:])), c))
    return TensorElement(("F", "F"), acc)


# ---------------------------------------------------------------------------
# the P basis: class sums over twin pairs


def p_to_f(pair) -> Element:
    """Expand P over a twin pair as the class sum of F terms."""
    return Element("F", {s: 1 for s in class_of_pair(pair)})


def theta(x: Element) -> Element:
    """Expand a P-element into the F basis (the subalgebra inclusion)."""
    if x.basis != "P":
        raise ValueError("theta needs a P-basis element")
    acc = []
    for j, c in x.terms.items():
        for s in class_of_pair(j):
            acc.append((s, c))
    return Element("F", acc)


def f_collect_to_p(x: Element) -> Element:
    """Rewrite an F-element as a P-element, or raise.

    Raises :class:`NotInSubalgebraError` (naming an offending class) when
    some congruence class does not carry a constant coefficient.
    """
    if x.basis != "F":
        raise ValueError("f_collect_to_p needs an F-basis element")
    remaining = dict(x.terms)
    out = {}
    while remaining:
        s = next(iter(remaining))
        j = p_shape(s)
        c = remaining[s]
        for member in class_of_pair(j):
            if remaining.get(member) != c:
                raise NotInSubalgebraError(
                    f"coefficients not constant on the class of {pair_str(j)}",
                    pair=j,
                )
            del remaining[member]
        out[j] = c
    return Element("P", out)


def tensor_collect_to_p(tx: TensorElement) -> TensorElement:
    """Rewrite an F(x)F tensor as a P(x)P tensor, or raise."""
    if tx.bases != ("F", "F"):
        raise ValueError("tensor_collect_to_p needs an F(x)F tensor")
    remaining = dict(tx.terms)
    out = {}
    while remaining:
        s, t = next(iter(remaining))
        j0, j1 = p_shape(s), p_shape(t)
        c = remaining[(s, t)]
        for a in class_of_pair(j0):
            for b in class_of_pair(j1):
                if remaining.get((a, b)) != c:
                    raise NotInSubalgebraError(
                        "coefficients not constant on the class pair "
                        f"{pair_str(j0)} (x) {pair_str(j1)}",
                        pair=(j0, j1),
                    )
                del remaining[(a, b)]
        out[(j0, j1)] = c
    return TensorElement(("P", "P"), out)


@lru_cache(maxsize=None)
def p_product(j0, j1) -> Element:
    """Product of two P basis elements, collected back into P."""
    config.check_product_degree(tree_size(j0[0]) + tree_size(j1[0]))
    expanded = element_product(p_to_f(j0), p_to_f(j1))
    try:
        return f_collect_to_p(expanded)
    except NotInSubalgebraError as exc:
        raise InternalInvariantError(
            f"product of class sums failed to collect: {exc}"
        ) from exc


@lru_cache(maxsize=None)
def p_coproduct(j) -> TensorElement:
    """Coproduct of a P basis element, collected into P(x)P."""
    config.check_product_degree(tree_size(j[0]))
    try:
        return tensor_collect_to_p(f_coproduct(p_to_f(j)))
    except NotInSubalgebraError as exc:
        raise InternalInvariantError(
            f"coproduct of a class sum failed to collect: {exc}"
        ) from exc


# ---------------------------------------------------------------------------
# the order-sum bases E and H


def _pairs_sorted(n):
    return sorted(enumerate_tbt(n), key=pair_str)


@lru_cache(maxsize=None)
def e_from_p(n: int):
    """Table expanding each degree-n E basis element in the P basis."""
    pairs = _pairs_sorted(n)
    return {
        j: Element("P", {j2: 1 for j2 in pairs if baxter_leq(j, j2)}) for j in pairs
    }


@lru_cache(maxsize=None)
def h_from_p(n: int):
    """Table expanding each degree-n H basis element in the P basis."""
    pairs = _pairs_sorted(n)
    return {
        j: Element("P", {j2: 1 for j2 in pairs if baxter_leq(j2, j)}) for j in pairs
    }


@lru_cache(maxsize=None)
def p_from_e(n: int):
    """Table expanding each degree-n P basis element in the E basis."""
    pairs = _pairs_sorted(n)
    memo = {}

    def expand(j):
        if j not in memo:
            terms = {j: Fraction(1)}
            for j2 in pairs:
                if j2 != j and baxter_leq(j, j2):
                    for k, c in expand(j2).terms.items():
                        terms[k] = terms.get(k, Fraction(0)) - c
            memo[j] = Element("E", terms)
        return memo[j]

    for j in pairs:
        expand(j)
    return memo


@lru_cache(maxsize=None)
def p_from_h(n: int):
    """Table expanding each degree-n P basis element in the H basis."""
    pairs = _pairs_sorted(n)
    memo = {}

    def expand(j):
        if j not in memo:
            terms = {j: Fraction(1)}
            for j2 in pairs:
                if j2 != j and baxter_leq(j2, j):
                    for k, c in expand(j2).terms.items():
                        terms[k] = terms.get(k, Fraction(0)) - c
            memo[j] = Element("H", terms)
        return memo[j]

    for j in pairs:
        expand(j)
    return memo


def _change_basis(x: Element, table, basis: str) -> Element:
    acc = []
    for j, c in x.terms.items():
        for k, d in table[key_degree(x.basis, j)][j].terms.items():
            acc.append((k, c * d))
    return Element(basis, acc)


def e_product(j0, j1) -> Element:
    """Product of two E basis elements, computed honestly: expand to P,
    multiply, and re-express in E."""
    n0, n1 = tree_size(j0[0]), tree_size(j1[0])
    config.check_product_degree(n0 + n1)
    total = Element("P", ())
    for ja, ca in e_from_p(n0)[j0].terms.items():
        for jb, cb in e_from_p(n1)[j1].terms.items():
            total = total + (ca * cb) * p_product(ja, jb)
    return _change_basis(total, {n0 + n1: p_from_e(n0 + n1)}, "E")


def h_product(j0, j1) -> Element:
    """Product of two H basis elements, re-expressed in H."""
    n0, n1 = tree_size(j0[0]), tree_size(j1[0])
    config.check_product_degree(n0 + n1)
    total = Element("P", ())
    for ja, ca in h_from_p(n0)[j0].terms.items():
        for jb, cb in h_from_p(n1)[j1].terms.items():
            total = total + (ca * cb) * p_product(ja, jb)
    return _change_basis(total, {n0 + n1: p_from_h(n0 + n1)}, "H")


# ---------------------------------------------------------------------------
# pair grafting and connected pairs


def pair_over(j0, j1):
    """Graft twin pairs: left trees under, right trees over."""
    out = (graft_under(j0[0], j1[0]), graft_over(j0[1], j1[1]))
    if not is_twin_pair(out):
        raise InternalInvariantError("grafting twin pairs lost complementarity")
    return out


def pair_under(j0, j1):
    """Graft twin pairs: left trees over, right trees under."""
    out = (graft_over(j0[0], j1[0]), graft_under(j0[1], j1[1]))
    if not is_twin_pair(out):
        raise InternalInvariantError("grafting twin pairs lost complementarity")
    return out


@lru_cache(maxsize=None)
def connected_pairs(n: int) -> frozenset:
    """Twin pairs whose Baxter representative is connected.

    >>> [len(connected_pairs(k)) for k in range(1, 5)]
    [1, 1, 3, 11]
    """
    if n == 0:
        return frozenset()
    config.check_enum_degree(n)
    return frozenset(
        j for j in enumerate_tbt(n) if is_connected(baxter_representative(j))
    )


# ---------------------------------------------------------------------------
# the sylvester (single right tree) algebra and its embedding


def sylv_to_f(t) -> Element:
    """Expand the sylvester class sum over a right-tree shape into F."""
    return Element("F", {s: 1 for s in sylvester_class_of_tree(t)})


def f_collect_to_sylv(x: Element) -> Element:
    """Rewrite an F-element as sylvester class sums, or raise."""
    if x.basis != "F":
        raise ValueError("f_collect_to_sylv needs an F-basis element")
    remaining = dict(x.terms)
    out = {}
    while remaining:
        s = next(iter(remaining))
        t = p_shape(s)[1]
        c = remaining[s]
        for member in sylvester_class_of_tree(t):
            if remaining.get(member) != c:
                raise NotInSubalgebraError(
                    f"coefficients not constant on the sylvester class of {tree_str(t)}"
                )
            del remaining[member]
        out[t] = c
    return Element("Psylv", out)


@lru_cache(maxsize=None)
def _sylv_key_product(t0, t1) -> Element:
    config.check_product_degree(tree_size(t0) + tree_size(t1))
    return f_collect_to_sylv(element_product(sylv_to_f(t0), sylv_to_f(t1)))


def rho(t) -> Element:
    """Embed a sylvester class: the sum of P over all twin partners of ``t``.

    ``t`` plays the right-tree role; the sum runs over every left tree
    with the complementary canopy.
    """
    n = tree_size(t)
    if n == 0:
        return Element("P", {(None, None): 1})
    partners = trees_by_canopy(n).get(complement_canopy(canopy(t)), ())
    return Element("P", {(t2, t): 1 for t2 in partners})


def rho_linear(x: Element) -> Element:
    """Apply ``rho`` linearly to a Psylv element."""
    if x.basis != "Psylv":
        raise ValueError("rho_linear needs a Psylv-basis element")
    out = Element("P", ())
    for t, c in x.terms.items():
        out = out + c * rho(t)
    return out


# ---------------------------------------------------------------------------
# the graded dual


@lru_cache(maxsize=None)
def _fstar_key_product(s, t) -> Element:
    m, n = len(s), len(t)
    out = {}
    universe = range(1, m + n + 1)
    for chosen in itertools.combinations(universe, m):
        rest = [v for v in universe if v not in set(chosen)]
        prefix = tuple(chosen[a - 1] for a in s)
        suffix = tuple(rest[a - 1] for a in t)
        out[prefix + suffix] = 1
    return Element("Fstar", out)


def fstar_product(x: Element, y: Element) -> Element:
    """Product in Fstar: all ways to spread values over prefix/suffix
    standardizing to the factors (dual to deconcatenation)."""
    if x.basis != "Fstar" or y.basis != "Fstar":
        raise ValueError("fstar_product needs Fstar-basis elements")
    return element_product(x, y)


def fstar_coproduct(x: Element) -> TensorElement:
    """Coproduct in Fstar: split by value intervals (dual to the shifted
    shuffle)."""
    if x.basis != "Fstar":
        raise ValueError("fstar_coproduct needs an Fstar-basis element")
    acc = []
    for s, c in x.terms.items():
        for k in range(len(s) + 1):
            left = tuple(a for a in s if a <= k)
            right = standardize(tuple(a for a in s if a > k))
            acc.append(((left, right), c))
    return TensorElement(("Fstar", "Fstar"), acc)


def phi(x: Element) -> Element:
    """Project Fstar onto Pstar: each permutation maps to its class's
    dual basis element, coefficients adding."""
    if x.basis != "Fstar":
        raise ValueError("phi needs an Fstar-basis element")
    return Element("Pstar", [(p_shape(s), c) for s, c in x.terms.items()])


def psi(x: Element) -> Element:
    """The isomorphism F -> Fstar inverting each permutation."""
    if x.basis != "F":
        raise ValueError("psi needs an F-basis element")
    return Element("Fstar", [(perm_inverse(s), c) for s, c in x.terms.items()])


def dual_product(j0, j1) -> Element:
    """Product of Pstar basis elements via any class representatives."""
    config.check_product_degree(tree_size(j0[0]) + tree_size(j1[0]))
    return phi(_fstar_key_product(min_perm(j0), min_perm(j1)))


def dual_coproduct(j) -> TensorElement:
    """Coproduct of a Pstar basis element via any class representative."""
    tx = fstar_coproduct(fstar_element(min_perm(j)))
    acc = [(((p_shape(a), p_shape(b))), c) for (a, b), c in tx.terms.items()]
    return TensorElement(("Pstar", "Pstar"), acc)


def phi_psi_theta(x: Element) -> Element:
    """The composite P -> F -> Fstar -> Pstar (not injective)."""
    return phi(psi(theta(x)))


# ---------------------------------------------------------------------------
# primitive elements and dimension series


def totally_primitive_basis(n: int):
    """A basis of degree-n P-combinations killed by both half coproducts.

    Computed exactly: stack the two half-coproduct matrices in F(x)F
    coordinates over all degree-n twin pairs, and take the kernel.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    config.check_enum_degree(n)
    return list(_totally_primitive_cached(n))


@lru_cache(maxsize=None)
def _totally_primitive_cached(n: int):
    if n == 0:
        return ()
    pairs = _pairs_sorted(n)
    rows = {}
    entries = {}
    for col, j in enumerate(pairs):
        for s in class_of_pair(j):
            pos_max = s.index(n) + 1
            for side, split_range in (
                ("G", range(pos_max, n)),
                ("D", range(1, pos_max)),
            ):
                for i in split_range:
                    key = (side, standardize(s[:i]), standardize(s[i:]))
                    row = rows.setdefault(key, len(rows))
                    entries[(row, col)] = entries.get((row, col), Fraction(0)) + 1
    matrix = RationalMatrix(len(rows), len(pairs), entries)
    return tuple(
        Element("P", {pairs[i]: v for i, v in enumerate(vec) if v})
        for vec in kernel_basis(matrix)
    )


def baxter_numbers(nmax: int):
    """Twin pair counts for n = 0..nmax.

    >>> baxter_numbers(5)
    [1, 1, 2, 6, 22, 92]
    """
    return [len(enumerate_tbt(k)) for k in range(nmax + 1)]


def _series_mul(a, b, nmax):
    out = [Fraction(0)] * (nmax + 1)
    for i, ai in enumerate(a[: nmax + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: nmax + 1 - i]):
            out[i + j] += ai * bj
    return out


def _series_inv(a, nmax):
    if not a[0]:
        raise ValueError("series with zero constant term has no inverse")
    inv = [Fraction(0)] * (nmax + 1)
    inv[0] = 1 / Fraction(a[0])
    for k in range(1, nmax + 1):
        s = sum(Fraction(a[i]) * inv[k - i] for i in range(1, k + 1))
        inv[k] = -inv[0] * s
    return inv


@dataclass
class SeriesReport:
    """Outcome of the generating-series consistency check."""

    ok: bool
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)


def series_check(nmax: int, tp_nmax=None) -> SeriesReport:
    """Check the enumeration against the generating-series identities.

    With B(z) the twin-pair series, connected pairs must match
    1 - 1/B(z) degree by degree up to ``nmax``, and totally primitive
    dimensions must match (B(z) - 1) / B(z)^2 up to ``tp_nmax`` (the
    kernel computation is the costly part, so it gets its own bound,
    defaulting to min(nmax, 5)).
    """
    config.check_enum_degree(nmax)
    if tp_nmax is None:
        tp_nmax = min(nmax, 5)
    b = [Fraction(v) for v in baxter_numbers(nmax)]
    inv_b = _series_inv(b, nmax)
    conn_series = [Fraction(int(k == 0)) - c for k, c in enumerate(inv_b)]
    bm1 = list(b)
    bm1[0] -= 1
    tot_series = _series_mul(bm1, _series_mul(inv_b, inv_b, nmax), nmax)
    report = SeriesReport(ok=True)
    for n in range(1, nmax + 1):
        conn = len(connected_pairs(n))
        row = {
            "n": n,
            "baxter": int(b[n]),
            "connected": conn,
            "connected_series": conn_series[n],
        }
        if conn_series[n] != conn:
            report.ok = False
            report.failures.append(
                f"degree {n}: connected count {conn} != series value {conn_series[n]}"
            )
        if n <= tp_nmax:
            tot = len(totally_primitive_basis(n))
            row["totally_primitive"] = tot
            row["totally_primitive_series"] = tot_series[n]
            if tot_series[n] != tot:
                report.ok = False
                report.failures.append(
                    f"degree {n}: totally primitive dimension {tot} "
                    f"!= series value {tot_series[n]}"
                )
        report.rows.append(row)
    return report


# ---------------------------------------------------------------------------
# generic bilinear machinery


def element_product(x: Element, y: Element) -> Element:
    """Multiply two elements of the same basis, bilinearly."""
    if not isinstance(y, Element) or x.basis != y.basis:
        raise ValueError("can only multiply elements of the same basis")
    fn = _KEY_PRODUCTS[x.basis]
    acc = []
    for k0, c0 in x.terms.items():
        for k1, c1 in y.terms.items():
            scale = c0 * c1
            for k, c in fn(k0, k1).terms.items():
                acc.append((k, scale * c))
    return Element(x.basis, acc)


def tensor_product(tx: TensorElement, ty: TensorElement) -> TensorElement:
    """Componentwise product of tensors over the same bases."""
    if not isinstance(ty, TensorElement) or tx.bases != ty.bases:
        raise ValueError("can only multiply tensors over the same bases")
    f0, f1 = (_KEY_PRODUCTS[b] for b in tx.bases)
    acc = []
    for (a0, a1), c in tx.terms.items():
        for (b0, b1), d in ty.terms.items():
            scale = c * d
            left = f0(a0, b0)
            right = f1(a1, b1)
            for k0, c0 in left.terms.items():
                for k1, c1 in right.terms.items():
                    acc.append(((k0, k1), scale * c0 * c1))
    return TensorElement(tx.bases, acc)


_KEY_PRODUCTS = {
    "F": _f_key_product,
    "Fstar": _fstar_key_product,
    "P": p_product,
    "E": e_product,
    "H": h_product,
    "Pstar": dual_product,
    "Psylv": _sylv_key_product,
}
