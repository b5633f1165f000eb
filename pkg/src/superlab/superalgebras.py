"""Finite-dimensional Z2-graded algebras presented by structure constants.

An algebra is a list of basis labels with parities plus a sparse product
table over Q or Q(E).  On top of that sit the operations the rest of the
package leans on: bilinear multiplication, evaluation of superpolynomials,
exhaustive identity and superidentity checking with witness reporting,
Grassmann algebras and lazy Grassmann envelopes, split null extensions with
a symmetry completion rule, subalgebra closure, graded operator relations,
and a JSON exchange format.
"""

from __future__ import annotations

import itertools
import json
from collections import namedtuple
from fractions import Fraction

from .linalg import Echelon
from .polynomials import Poly, SuperPoly, koszul_sign
from .scalars import ONE, ZERO, QEps, format_scalar, parse_scalar

__all__ = [
    "SuperAlgebra",
    "Element",
    "Witness",
    "RelationWitness",
    "ValidationReport",
    "validate",
    "mul",
    "evaluate",
    "is_identity",
    "is_superidentity",
    "grassmann",
    "GrassmannEnvelope",
    "envelope",
    "split_null_extension",
    "subalgebra_closure",
    "pair_products",
    "operator_relation_holds",
    "to_json",
    "from_json",
]

_EMPTY: dict = {}


def _scalar(c) -> QEps:
    if isinstance(c, QEps):
        return c
    if isinstance(c, (int, Fraction)):
        return QEps(c)
    if isinstance(c, str):
        return parse_scalar(c)
    raise TypeError(f"bad coefficient {c!r}")


def _add_into(acc: dict, key, c: QEps):
    nv = acc.get(key, ZERO) + c
    if nv:
        acc[key] = nv
    else:
        acc.pop(key, None)


def _scalar_is_negative(c: QEps) -> bool:
    return c.a < 0 or (c.a == 0 and c.b < 0)


# ---------------------------------------------------------------------------
# SuperAlgebra and Element
# ---------------------------------------------------------------------------

class SuperAlgebra:
    """Structure-constant algebra; treat instances as immutable once built.

    `basis` is a sequence of (label, parity) pairs, `products` a mapping
    (i, j) -> {k: coefficient} where keys may be indices or labels and
    missing pairs multiply to zero.
    """

    __slots__ = (
        "name",
        "field",
        "associative",
        "labels",
        "parities",
        "products",
        "_index",
        "_right",
        "_left",
    )

    def __init__(self, name, basis, products, field="Q", associative=False):
        self.name = str(name)
        if field not in ("Q", "Q(eps)"):
            raise ValueError(f"unknown field {field!r}")
        self.field = field
        self.associative = bool(associative)
        labels = []
        parities = []
        for lab, par in basis:
            if par not in (0, 1):
                raise ValueError(f"basis element {lab!r} has parity {par!r}")
            labels.append(str(lab))
            parities.append(par)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate basis labels")
        self.labels = tuple(labels)
        self.parities = tuple(parities)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        table = {}
        for (li, lj), combo in products.items():
            i = self.index(li)
            j = self.index(lj)
            row = {}
            for lk, c in combo.items():
                c = _scalar(c)
                if c:
                    _add_into(row, self.index(lk), c)
            if row:
                table[(i, j)] = row
        self.products = table
        right: dict = {}
        left: dict = {}
        for (i, j), row in table.items():
            right.setdefault(i, {})[j] = row
            left.setdefault(j, {})[i] = row
        self._right = right
        self._left = left

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def ungraded(self) -> bool:
        return not any(self.parities)

    def index(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < len(self.labels):
                raise ValueError(f"basis index {key} out of range")
            return key
        i = self._index.get(key)
        if i is None:
            raise ValueError(f"no basis element {key!r} in {self.name}")
        return i

    def mul_basis(self, i: int, j: int) -> dict:
        """Product of basis elements i and j as {k: coefficient}; not a copy."""
        return self.products.get((i, j), _EMPTY)

    def element(self, coords) -> "Element":
        return Element(self, {self.index(k): _scalar(c) for k, c in coords.items()})

    def basis_element(self, key) -> "Element":
        return Element(self, {self.index(key): ONE})

    def zero(self) -> "Element":
        return Element(self, {})

    def __eq__(self, other):
        return (
            isinstance(other, SuperAlgebra)
            and self.name == other.name
            and self.field == other.field
            and self.associative == other.associative
            and self.labels == other.labels
            and self.parities == other.parities
            and self.products == other.products
        )

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, dim {self.dim})"


class Element:
    """Sparse vector over an algebra's basis; zero coefficients are pruned."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        clean = {}
        for k, c in coords.items():
            if not isinstance(k, int) or not 0 <= k < algebra.dim:
                raise ValueError(f"bad basis index {k!r}")
            c = _scalar(c)
            if c:
                clean[k] = c
        self.coords = clean

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def parity(self):
        """0 or 1 for homogeneous elements, None for zero; error otherwise."""
        ps = {self.algebra.parities[k] for k in self.coords}
        if not ps:
            return None
        if len(ps) > 1:
            raise ValueError(f"element {self} is not homogeneous")
        return ps.pop()

    def _binary(self, other, flip):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise ValueError("elements live in different algebras")
        out = dict(self.coords)
        for k, c in other.coords.items():
            _add_into(out, k, -c if flip else c)
        return Element(self.algebra, out)

    def __add__(self, other):
        return self._binary(other, False)

    def __sub__(self, other):
        return self._binary(other, True)

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.coords.items()})

    def scale(self, c) -> "Element":
        c = _scalar(c)
        return Element(self.algebra, {k: c * v for k, v in self.coords.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __bool__(self):
        return bool(self.coords)

    def __repr__(self):
        if not self.coords:
            return "0"
        parts = []
        for k in sorted(self.coords):
            c = self.coords[k]
            if parts:
                if _scalar_is_negative(c):
                    parts.append(" - ")
                    c = -c
                else:
                    parts.append(" + ")
            elif _scalar_is_negative(c):
                parts.append("-")
                c = -c
            s = format_scalar(c)
            if "+" in s[1:] or "-" in s[1:]:
                s = f"({s})"
            parts.append(f"{s}*{self.algebra.labels[k]}")
        return "".join(parts)


Witness = namedtuple("Witness", ["parities", "labels", "value"])
RelationWitness = namedtuple("RelationWitness", ["seed", "assignment", "lhs", "rhs"])


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

class ValidationReport:
    """Grading and (optional) associativity violations, by basis label."""

    __slots__ = ("algebra", "grading", "associativity", "checked_associativity")

    def __init__(self, algebra, grading, associativity, checked_associativity):
        self.algebra = algebra
        self.grading = grading
        self.associativity = associativity
        self.checked_associativity = checked_associativity

    @property
    def ok(self) -> bool:
        return not self.grading and not self.associativity

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        if self.ok:
            extra = " (associativity checked)" if self.checked_associativity else ""
            return f"{self.algebra.name}: ok{extra}"
        parts = [f"{self.algebra.name}:"]
        if self.grading:
            parts.append(f"{len(self.grading)} grading violations, first {self.grading[0]}")
        if self.associativity:
            parts.append(
                f"{len(self.associativity)} associativity violations,"
                f" first {self.associativity[0]}"
            )
        return " ".join(parts)


def _mul_dicts(A, u: dict, v: dict) -> dict:
    out: dict = {}
    for i, ci in u.items():
        for j, cj in v.items():
            row = A.mul_basis(i, j)
            if row:
                f = ci * cj
                for k, ck in row.items():
                    _add_into(out, k, f * ck)
    return out


def validate(A, check_associativity=None) -> ValidationReport:
    """Check grading closure and, when requested, associativity of the table.

    `check_associativity` defaults to the algebra's own `associative` flag.
    """
    grading = []
    for (i, j) in sorted(A.products):
        want = (A.parities[i] + A.parities[j]) % 2
        for k in sorted(A.products[(i, j)]):
            if A.parities[k] != want:
                grading.append((A.labels[i], A.labels[j], A.labels[k]))
    if check_associativity is None:
        check_associativity = A.associative
    assoc = []
    if check_associativity:
        dim = A.dim
        for i in range(dim):
            for j in range(dim):
                row = A.mul_basis(i, j)
                for k in range(dim):
                    lhs: dict = {}
                    for t, c in row.items():
                        for s, cs in A.mul_basis(t, k).items():
                            _add_into(lhs, s, c * cs)
                    rhs: dict = {}
                    for t, c in A.mul_basis(j, k).items():
                        for s, cs in A.mul_basis(i, t).items():
                            _add_into(rhs, s, c * cs)
                    if lhs != rhs:
                        assoc.append((A.labels[i], A.labels[j], A.labels[k]))
    return ValidationReport(A, grading, assoc, bool(check_associativity))


# ---------------------------------------------------------------------------
# Multiplication and evaluation
# ---------------------------------------------------------------------------

def mul(A, u: Element, v: Element) -> Element:
    """Bilinear product of two elements of A."""
    if u.algebra is not A or v.algebra is not A:
        raise ValueError("elements do not belong to this algebra")
    return Element(A, _mul_dicts(A, u.coords, v.coords))


def _eval_tree(A, tree, coords_of):
    if isinstance(tree, int):
        return coords_of[tree]
    l, r = tree
    return _mul_dicts(A, _eval_tree(A, l, coords_of), _eval_tree(A, r, coords_of))


def evaluate(sp: SuperPoly, A, assignment) -> Element:
    """Value of a superpolynomial under a homogeneous substitution.

    Every variable of sp must be assigned an element of A whose parity
    matches the declared one (the zero element passes for either parity).
    Non-homogeneous substitutions are refused; expand them bilinearly at
    the call site, one parity pattern at a time.
    """
    if not isinstance(sp, SuperPoly):
        raise TypeError("evaluate expects a SuperPoly")
    missing = sorted(sp.poly.varset - set(assignment))
    if missing:
        raise ValueError(f"unassigned variables {missing}")
    coords_of = {}
    for v in sp.poly.varset:
        el = assignment[v]
        if not isinstance(el, Element) or el.algebra is not A:
            raise ValueError(f"variable x{v} is not assigned an element of {A.name}")
        par = el.parity()
        if par is not None and par != sp.parities[v]:
            raise ValueError(
                f"variable x{v} expects parity {sp.parities[v]}"
                f" but was given parity {par}"
            )
        coords_of[v] = el.coords
    total: dict = {}
    for m, c in sp.poly.terms.items():
        for k, ck in _eval_tree(A, m.tree, coords_of).items():
            _add_into(total, k, c * ck)
    return Element(A, total)


# ---------------------------------------------------------------------------
# Identity and superidentity checking
# ---------------------------------------------------------------------------

def _assignments(A, tree):
    """Yield (variable -> basis index, product coords) with nonzero product.

    Enumerates only assignments whose partial products survive, walking the
    tree and extending through the nonzero-product adjacency of the table.
    """
    if isinstance(tree, int):
        for b in range(A.dim):
            yield {tree: b}, {b: ONE}
        return
    l, r = tree
    lleaf = isinstance(l, int)
    rleaf = isinstance(r, int)
    if lleaf and rleaf:
        for (i, j), row in A.products.items():
            yield {l: i, r: j}, row
        return
    if rleaf:
        for assign, val in _assignments(A, l):
            cand: dict = {}
            for i, ci in val.items():
                partners = A._right.get(i)
                if not partners:
                    continue
                for j, row in partners.items():
                    acc = cand.get(j)
                    if acc is None:
                        acc = cand[j] = {}
                    for k, ck in row.items():
                        _add_into(acc, k, ci * ck)
            for j, acc in cand.items():
                if acc:
                    a2 = dict(assign)
                    a2[r] = j
                    yield a2, acc
        return
    if lleaf:
        for assign, val in _assignments(A, r):
            cand = {}
            for j, cj in val.items():
                partners = A._left.get(j)
                if not partners:
                    continue
                for i, row in partners.items():
                    acc = cand.get(i)
                    if acc is None:
                        acc = cand[i] = {}
                    for k, ck in row.items():
                        _add_into(acc, k, cj * ck)
            for i, acc in cand.items():
                if acc:
                    a2 = dict(assign)
                    a2[l] = i
                    yield a2, acc
        return
    right_items = list(_assignments(A, r))
    for la, lv in _assignments(A, l):
        for ra, rv in right_items:
            prod = _mul_dicts(A, lv, rv)
            if prod:
                merged = dict(la)
                merged.update(ra)
                yield merged, prod


def _check_vanishing(A, f: Poly, signed: bool):
    f.require_multilinear("identity check")
    if not f.terms:
        return True, None
    vs = sorted(f.varset)
    totals: dict = {}
    for m, c in f.terms.items():
        for assign, val in _assignments(A, m.tree):
            cc = c
            if signed:
                par = {v: A.parities[b] for v, b in assign.items()}
                if koszul_sign(m, par) < 0:
                    cc = -c
            key = tuple(assign[v] for v in vs)
            acc = totals.get(key)
            if acc is None:
                acc = totals[key] = {}
            for k, ck in val.items():
                _add_into(acc, k, cc * ck)
    for key in sorted(totals):
        acc = totals[key]
        if acc:
            if signed:
                pattern = tuple(A.parities[b] for b in key)
            else:
                pattern = (0,) * len(key)
            labels = tuple(A.labels[b] for b in key)
            return False, Witness(pattern, labels, Element(A, acc))
    return True, None


def is_superidentity(A, f: Poly):
    """Does the superization of f vanish on A for every parity pattern?

    Returns (True, None) or (False, witness) where the witness carries the
    parity pattern, the basis tuple (in variable order), and the value.
    """
    if isinstance(A, GrassmannEnvelope):
        return is_identity(A, f)
    return _check_vanishing(A, f, signed=True)


def is_identity(A, f: Poly):
    """Does f vanish on A literally, with every variable treated as even?"""
    if isinstance(A, GrassmannEnvelope):
        return _envelope_identity(A, f)
    return _check_vanishing(A, f, signed=False)


# ---------------------------------------------------------------------------
# Grassmann algebras and envelopes
# ---------------------------------------------------------------------------

def _word_label(word) -> str:
    return "".join(f"e{i}" for i in word) if word else "1"


def _merge_sign(w1, w2) -> int:
    """Sign of sorting the concatenation of two disjoint ascending words."""
    t = 0
    for a in w1:
        for b in w2:
            if a > b:
                t += 1
    return -1 if t % 2 else 1


def grassmann(n: int, with_unit: bool = True) -> SuperAlgebra:
    """Grassmann algebra on n anticommuting generators, unit optional."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    words = []
    for size in range(0 if with_unit else 1, n + 1):
        words.extend(itertools.combinations(range(1, n + 1), size))
    index = {w: t for t, w in enumerate(words)}
    basis = [(_word_label(w), len(w) % 2) for w in words]
    products = {}
    for w1 in words:
        s1 = set(w1)
        for w2 in words:
            if s1 & set(w2):
                continue
            merged = tuple(sorted(w1 + w2))
            if merged not in index:
                continue  # no unit: the empty product is absent
            c = ONE if _merge_sign(w1, w2) > 0 else -ONE
            products[(index[w1], index[w2])] = {index[merged]: c}
    name = f"G{n}" if with_unit else f"Gbar{n}"
    return SuperAlgebra(name, basis, products, field="Q", associative=True)


def _mask_sign(m1: int, m2: int) -> int:
    t = 0
    m = m2
    while m:
        b = m & -m
        t += bin(m1 >> b.bit_length()).count("1")
        m ^= b
    return -1 if t % 2 else 1


def _mask_label(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"e{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


class GrassmannEnvelope:
    """G0 tensor A0 + G1 tensor A1 inside G(n) tensor A, products on demand.

    Behaves like an ungraded algebra: basis labels, all parities even, and
    `mul_basis` computed lazily from the two factors instead of a stored
    table.  `to_table` materializes it when a plain algebra is needed.
    """

    __slots__ = ("algebra", "n", "name", "labels", "parities", "_pairs", "_pos",
                 "_cache")

    def __init__(self, A, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.algebra = A
        self.n = n
        self.name = f"G({A.name},{n})"
        masks = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))
        pairs = []
        for m in masks:
            gpar = bin(m).count("1") % 2
            for a in range(A.dim):
                if A.parities[a] == gpar:
                    pairs.append((m, a))
        self._pairs = pairs
        self._pos = {p: t for t, p in enumerate(pairs)}
        self.labels = tuple(
            f"{_mask_label(m)}*{A.labels[a]}" for m, a in pairs
        )
        self.parities = (0,) * len(pairs)
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self._pairs)

    @property
    def ungraded(self) -> bool:
        return True

    def index(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < self.dim:
                raise ValueError(f"basis index {key} out of range")
            return key
        try:
            return self.labels.index(key)
        except ValueError:
            raise ValueError(f"no basis element {key!r} in {self.name}") from None

    def mul_basis(self, i: int, j: int) -> dict:
        key = (i, j)
        out = self._cache.get(key)
        if out is None:
            m1, a1 = self._pairs[i]
            m2, a2 = self._pairs[j]
            if m1 & m2:
                out = _EMPTY
            else:
                row = self.algebra.mul_basis(a1, a2)
                if not row:
                    out = _EMPTY
                else:
                    sign = _mask_sign(m1, m2)
                    u = m1 | m2
                    out = {
                        self._pos[(u, k)]: (c if sign > 0 else -c)
                        for k, c in row.items()
                    }
            self._cache[key] = out
        return out

    def element(self, coords) -> Element:
        return Element(self, {self.index(k): _scalar(c) for k, c in coords.items()})

    def basis_element(self, key) -> Element:
        return Element(self, {self.index(key): ONE})

    def zero(self) -> Element:
        return Element(self, {})

    def tensor(self, word, key) -> Element:
        """Basis element g_word tensor a_key, word an iterable of 1-based ints."""
        mask = 0
        for i in word:
            bit = 1 << (i - 1)
            if not 1 <= i <= self.n or mask & bit:
                raise ValueError(f"bad Grassmann word {tuple(word)}")
            mask |= bit
        pos = self._pos.get((mask, self.algebra.index(key)))
        if pos is None:
            raise ValueError("parities of the two legs disagree")
        return Element(self, {pos: ONE})

    def to_table(self, name=None) -> SuperAlgebra:
        basis = [(lab, 0) for lab in self.labels]
        products = {}
        for i in range(self.dim):
            for j in range(self.dim):
                row = self.mul_basis(i, j)
                if row:
                    products[(i, j)] = dict(row)
        return SuperAlgebra(
            name or self.name,
            basis,
            products,
            field=self.algebra.field,
            associative=self.algebra.associative,
        )

    def __repr__(self):
        return f"GrassmannEnvelope({self.algebra.name!r}, n={self.n}, dim {self.dim})"


def envelope(A, n: int) -> GrassmannEnvelope:
    """Grassmann envelope of A over the n-generator Grassmann algebra."""
    return GrassmannEnvelope(A, n)


def _size_vectors(budget: int, parities):
    """Yield tuples of Grassmann-word sizes matching parities, sum <= budget."""
    if not parities:
        yield ()
        return
    first = parities[0]
    for s in range(first, budget + 1, 2):
        for rest in _size_vectors(budget - s, parities[1:]):
            yield (s,) + rest


def _envelope_identity(E: GrassmannEnvelope, f: Poly):
    """Literal identity check on an envelope, by direct evaluation.

    Two exact facts about the Grassmann factor cut the enumeration without
    touching the sign rule under test: tuples whose words share a generator
    vanish in every monomial (e*e = 0 in G whatever the order), and
    relabeling generators is an automorphism of G, so one representative
    per word-size vector decides the whole orbit.  Each representative is
    evaluated by actual lazy envelope multiplication.
    """
    f.require_multilinear("identity check")
    if not f.terms:
        return True, None
    vs = sorted(f.varset)
    A = E.algebra
    terms = list(f.terms.items())
    for atuple in itertools.product(range(A.dim), repeat=len(vs)):
        pars = tuple(A.parities[a] for a in atuple)
        for sizes in _size_vectors(E.n, pars):
            start = 0
            idxs = []
            for s, a in zip(sizes, atuple):
                mask = ((1 << s) - 1) << start
                start += s
                idxs.append(E._pos[(mask, a)])
            coords_of = {v: {i: ONE} for v, i in zip(vs, idxs)}
            total: dict = {}
            for m, c in terms:
                for k, ck in _eval_tree(E, m.tree, coords_of).items():
                    _add_into(total, k, c * ck)
            if total:
                labels = tuple(E.labels[i] for i in idxs)
                pattern = (0,) * len(vs)
                return False, Witness(pattern, labels, Element(E, total))
    return True, None


# ---------------------------------------------------------------------------
# Split null extensions
# ---------------------------------------------------------------------------

_RULES = ("none", "supersymmetric", "superskew")


def split_null_extension(U, module, right=None, left=None, rule="none",
                         name=None, field=None, associative=False):
    """U + M with M*M = 0 and the given module action, one side completed.

    `module` lists (label, parity) pairs; `right` maps (m, u) to the coords
    of m*u over module labels, `left` maps (u, m) likewise.  Under rule
    'supersymmetric' the missing side is filled as q*m = (-1)^{|q||m|} m*q,
    under 'superskew' with the opposite sign; explicit entries on both sides
    must then agree with the rule.
    """
    if rule not in _RULES:
        raise ValueError(f"unknown completion rule {rule!r}")
    right = dict(right or {})
    left = dict(left or {})
    mod_labels = [lab for lab, _ in module]
    mod_parity = {lab: par for lab, par in module}
    if len(mod_parity) != len(mod_labels):
        raise ValueError("duplicate module labels")
    offset = U.dim
    mod_index = {lab: offset + t for t, lab in enumerate(mod_labels)}

    def mod_row(combo):
        row = {}
        for lk, c in combo.items():
            if lk not in mod_index:
                raise ValueError(f"action value {lk!r} is not a module label")
            c = _scalar(c)
            if c:
                _add_into(row, mod_index[lk], c)
        return row

    products = {key: dict(row) for key, row in U.products.items()}
    right_rows = {}
    for (m, u), combo in right.items():
        right_rows[(mod_index[m], U.index(u))] = mod_row(combo)
    left_rows = {}
    for (u, m), combo in left.items():
        left_rows[(U.index(u), mod_index[m])] = mod_row(combo)

    if rule != "none":
        flip = -1 if rule == "superskew" else 1
        for (mi, uj), row in list(right_rows.items()):
            upar = U.parities[uj]
            mpar = mod_parity[mod_labels[mi - offset]]
            sign = flip * (-1 if upar and mpar else 1)
            derived = {k: (c if sign > 0 else -c) for k, c in row.items()}
            key = (uj, mi)
            if key in left_rows:
                if left_rows[key] != derived:
                    raise ValueError(
                        f"left action for ({U.labels[uj]}, {mod_labels[mi - offset]})"
                        f" conflicts with the {rule} completion"
                    )
            else:
                left_rows[key] = derived
        for (ui, mj), row in list(left_rows.items()):
            upar = U.parities[ui]
            mpar = mod_parity[mod_labels[mj - offset]]
            sign = flip * (-1 if upar and mpar else 1)
            derived = {k: (c if sign > 0 else -c) for k, c in row.items()}
            key = (mj, ui)
            if key in right_rows:
                if right_rows[key] != derived:
                    raise ValueError(
                        f"right action for ({mod_labels[mj - offset]}, {U.labels[ui]})"
                        f" conflicts with the {rule} completion"
                    )
            else:
                right_rows[key] = derived

    for key, row in right_rows.items():
        if row:
            products[key] = row
    for key, row in left_rows.items():
        if row:
            products[key] = row

    basis = list(zip(U.labels, U.parities)) + list(module)
    return SuperAlgebra(
        name or f"{U.name}+M",
        basis,
        products,
        field=field or U.field,
        associative=associative,
    )


# ---------------------------------------------------------------------------
# Subalgebra closure
# ---------------------------------------------------------------------------

def subalgebra_closure(A, gens):
    """Dimension and a basis of the subalgebra the given elements generate."""
    ech = Echelon()
    pool = []
    for g in gens:
        if not isinstance(g, Element) or g.algebra is not A:
            raise ValueError("generators must be elements of the algebra")
        v = ech.reduce(g.coords)
        if v:
            ech.add(v)
            pool.append(v)
    i = 0
    while i < len(pool):
        for j in range(len(pool)):
            for u, v in ((pool[i], pool[j]), (pool[j], pool[i])):
                p = _mul_dicts(A, u, v)
                w = ech.reduce(p)
                if w:
                    ech.add(w)
                    pool.append(w)
        i += 1
    rows = [dict(ech.rows[lead]) for lead in sorted(ech.rows)]
    return ech.dim, [Element(A, row) for row in rows]


# ---------------------------------------------------------------------------
# Graded operator relations
# ---------------------------------------------------------------------------

def pair_products(A):
    """Distinct nonzero products of basis pairs, as (label, Element) seeds."""
    out = []
    seen = set()
    for (i, j) in sorted(A.products):
        row = A.products[(i, j)]
        key = frozenset(row.items())
        if key in seen:
            continue
        seen.add(key)
        out.append((f"{A.labels[i]}.{A.labels[j]}", Element(A, dict(row))))
    return out


def _apply_letter(A, val: dict, side: str, b: int) -> dict:
    if side == "R":
        return _mul_dicts(A, val, {b: ONE})
    if side == "L":
        return _mul_dicts(A, {b: ONE}, val)
    raise ValueError(f"bad operator side {side!r}")


def _collect_chains(A, start: dict, preset: dict, word, slot_pos, allowed):
    """Run one operator word; map full slot assignments to nonzero values."""
    key0 = [None] * len(slot_pos)
    for nm, b in preset.items():
        key0[slot_pos[nm]] = b
    states = {tuple(key0): start}
    for side, nm in word:
        pos = slot_pos[nm]
        new: dict = {}
        for key, val in states.items():
            if key[pos] is not None:
                v2 = _apply_letter(A, val, side, key[pos])
                if v2:
                    new[key] = v2
            else:
                for b in allowed[nm]:
                    v2 = _apply_letter(A, val, side, b)
                    if v2:
                        k2 = list(key)
                        k2[pos] = b
                        new[tuple(k2)] = v2
        states = new
        if not states:
            break
    return states


def operator_relation_holds(A, lhs, rhs, slots, seeds="pairs", sign=None):
    """Check seed.lhs = (-1)^sign * seed.rhs over all basis substitutions.

    `slots` lists (name, parity-or-None); `lhs`/`rhs` are operator words of
    (side, slot-name) letters with side 'R' or 'L'.  `seeds` is either
    'pairs' (every distinct nonzero product of two basis elements),
    ('square', slot) to start each chain from that slot's square, or
    ('pair', slot_a, slot_b) to start from every nonzero ordered product of
    the two slots' allowed elements with both slots preset.  `sign`
    maps a {slot: parity} dict to an exponent; omitted means exponent 0.
    Slots never touched by a word must be preset by the seed mode; values
    are compared literally, with no Koszul bookkeeping.
    """
    slot_pos = {nm: t for t, (nm, _) in enumerate(slots)}
    allowed = {}
    for nm, par in slots:
        allowed[nm] = [
            b for b in range(A.dim) if par is None or A.parities[b] == par
        ]
    if seeds == "pairs":
        seed_items = [
            (lab, el.coords, {}) for lab, el in pair_products(A)
        ]
    elif isinstance(seeds, tuple) and len(seeds) == 2 and seeds[0] == "square":
        nm = seeds[1]
        seed_items = []
        for b in allowed[nm]:
            sq = _mul_dicts(A, {b: ONE}, {b: ONE})
            if sq:
                seed_items.append((f"{A.labels[b]}^2", sq, {nm: b}))
    elif isinstance(seeds, tuple) and len(seeds) == 3 and seeds[0] == "pair":
        na, nb = seeds[1], seeds[2]
        seed_items = []
        for ba in allowed[na]:
            for bb in allowed[nb]:
                prod = _mul_dicts(A, {ba: ONE}, {bb: ONE})
                if prod:
                    seed_items.append((
                        f"{A.labels[ba]}.{A.labels[bb]}",
                        prod,
                        {na: ba, nb: bb},
                    ))
    else:
        raise ValueError(f"bad seed mode {seeds!r}")

    for seed_label, start, preset in seed_items:
        lstates = _collect_chains(A, start, preset, lhs, slot_pos, allowed)
        rstates = _collect_chains(A, start, preset, rhs, slot_pos, allowed)
        for key in sorted(set(lstates) | set(rstates), key=_none_last):
            lval = lstates.get(key, _EMPTY)
            rval = rstates.get(key, _EMPTY)
            if sign is not None:
                pars = {
                    nm: A.parities[key[slot_pos[nm]]]
                    for nm, _ in slots
                    if key[slot_pos[nm]] is not None
                }
                exp = sign(pars)
            else:
                exp = 0
            if exp % 2:
                rval = {k: -c for k, c in rval.items()}
            if lval != rval:
                assignment = {
                    nm: (A.labels[key[slot_pos[nm]]]
                         if key[slot_pos[nm]] is not None else None)
                    for nm, _ in slots
                }
                return False, RelationWitness(
                    seed_label,
                    assignment,
                    Element(A, dict(lval)),
                    Element(A, dict(rval)),
                )
    return True, None


def _none_last(key):
    return tuple((b is None, b if b is not None else -1) for b in key)


# ---------------------------------------------------------------------------
# JSON exchange format
# ---------------------------------------------------------------------------

def to_json(A) -> str:
    """Canonical JSON for an algebra: stable key order, sorted products."""
    basis = [
        {"label": lab, "parity": par}
        for lab, par in zip(A.labels, A.parities)
    ]
    prods = []
    for (i, j) in sorted(A.products):
        row = A.products[(i, j)]
        prods.append({
            "l": A.labels[i],
            "r": A.labels[j],
            "value": [
                {"b": A.labels[k], "c": format_scalar(row[k])}
                for k in sorted(row)
            ],
        })
    obj = {
        "name": A.name,
        "field": A.field,
        "associative": A.associative,
        "basis": basis,
        "products": prods,
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> SuperAlgebra:
    obj = json.loads(text)
    try:
        basis = [(b["label"], b["parity"]) for b in obj["basis"]]
        products = {}
        for entry in obj["products"]:
            products[(entry["l"], entry["r"])] = {
                term["b"]: parse_scalar(term["c"]) for term in entry["value"]
            }
        return SuperAlgebra(
            obj["name"],
            basis,
            products,
            field=obj["field"],
            associative=obj["associative"],
        )
    except KeyError as exc:
        raise ValueError(f"algebra JSON is missing key {exc}") from None
