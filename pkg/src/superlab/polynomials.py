"""Nonassociative multilinear polynomials and their superization.

A monomial is a full binary tree whose leaves are variable indices x1, x2, ...
(plain ints).  A polynomial is a finite QEps-combination of monomials.  The
central operation is `superize`: given a parity for every variable, each
monomial picks up the Koszul sign (-1)^t where t is the number of pairs of odd
variables standing out of ascending-index order in the monomial's
left-to-right leaf sequence.  That is exactly the sign produced by evaluating
the monomial in a Grassmann envelope with one fresh generator per odd slot,
so a multilinear identity holds in the envelope iff its superization vanishes.
"""

from __future__ import annotations

from itertools import permutations

from .scalars import ONE, ZERO, QEps

__all__ = [
    "Monomial",
    "Poly",
    "SuperPoly",
    "monomial",
    "poly",
    "koszul_sign",
    "odd_inversion_sign",
    "superize",
    "expand_operator_word",
    "right_chain",
    "left_chain",
    "linearize_full",
    "linearize_partial",
    "multilinearize",
    "commutator",
    "jordan_product",
    "associator",
    "jacobian",
    "eps_bracket",
    "identity_library",
    "format_poly",
    "parse_poly",
]

Tree = "int | tuple"  # leaf = variable index, node = (left, right)


def _leaves(tree):
    if isinstance(tree, int):
        return (tree,)
    out = []
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, int):
            out.append(t)
        else:
            stack.append(t[1])
            stack.append(t[0])
    return tuple(out)


def _tree_str(tree):
    if isinstance(tree, int):
        return f"x{tree}"
    return f"({_tree_str(tree[0])} {_tree_str(tree[1])})"


def _rename_tree(tree, mapping):
    if isinstance(tree, int):
        return mapping.get(tree, tree)
    return (_rename_tree(tree[0], mapping), _rename_tree(tree[1], mapping))


class Monomial:
    """One parenthesized product of distinct-or-repeated variables."""

    __slots__ = ("tree", "leaves", "_key")

    def __init__(self, tree):
        if not isinstance(tree, (int, tuple)):
            raise TypeError(f"bad monomial tree: {tree!r}")
        self.tree = tree
        self.leaves = _leaves(tree)
        self._key = _tree_str(tree)

    @property
    def key(self) -> str:
        return self._key

    @property
    def degree(self) -> int:
        return len(self.leaves)

    @property
    def varset(self) -> frozenset:
        return frozenset(self.leaves)

    def is_multilinear(self) -> bool:
        return len(self.varset) == len(self.leaves)

    def graft(self, other: "Monomial") -> "Monomial":
        return Monomial((self.tree, other.tree))

    def rename(self, mapping) -> "Monomial":
        return Monomial(_rename_tree(self.tree, mapping))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.tree == other.tree

    def __hash__(self):
        return hash(self.tree)

    def __repr__(self):
        return f"Monomial({self._key})"


def monomial(tree) -> Monomial:
    return Monomial(tree)


class Poly:
    """QEps-combination of monomials; zero coefficients are pruned."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Monomial, QEps] = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    m = Monomial(m)
                if c:
                    cur = self.terms.get(m)
                    s = cur + c if cur is not None else c
                    if s:
                        self.terms[m] = s
                    else:
                        self.terms.pop(m, None)

    @property
    def varset(self) -> frozenset:
        vs = frozenset()
        for m in self.terms:
            vs |= m.varset
        return vs

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def is_multilinear(self) -> bool:
        """Every monomial multilinear, all on the same variable set."""
        vs = None
        for m in self.terms:
            if not m.is_multilinear():
                return False
            if vs is None:
                vs = m.varset
            elif m.varset != vs:
                return False
        return True

    def require_multilinear(self, what="polynomial"):
        if not self.is_multilinear():
            raise ValueError(f"{what} is not multilinear on a common variable set")
        return self

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    def __neg__(self):
        p = Poly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Poly":
        if not isinstance(c, QEps):
            c = QEps(c)
        p = Poly()
        if c:
            p.terms = {m: c * v for m, v in self.terms.items()}
        return p

    def __mul__(self, other):
        """Graft product: every monomial of self times every one of other."""
        p = Poly()
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.graft(m2)
                s = out.get(m, ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        p.terms = out
        return p

    def rename(self, mapping) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            m2 = m.rename(mapping)
            s = out.get(m2, ZERO) + c
            if s:
                out[m2] = s
            else:
                out.pop(m2, None)
        p = Poly()
        p.terms = out
        return p

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def poly(*pairs) -> Poly:
    """Build a Poly from (coeff, tree) pairs."""
    p = Poly()
    for c, tree in pairs:
        if not isinstance(c, QEps):
            c = QEps(c)
        m = tree if isinstance(tree, Monomial) else Monomial(tree)
        if c:
            s = p.terms.get(m, ZERO) + c
            if s:
                p.terms[m] = s
            else:
                p.terms.pop(m, None)
    return p


def var(i: int) -> Poly:
    return poly((1, i))


# ---------------------------------------------------------------------------
# Koszul signs and superization
# ---------------------------------------------------------------------------

def odd_inversion_sign(indices, parity) -> int:
    """(-1)^t for t = inversions among odd variables in the given sequence.

    `parity` maps a variable index to 0/1.  Only pairs where both variables
    are odd and stand out of ascending order count.
    """
    odd = [i for i in indices if parity[i]]
    t = 0
    for p in range(len(odd)):
        for q in range(p + 1, len(odd)):
            if odd[p] > odd[q]:
                t += 1
    return -1 if t % 2 else 1


def koszul_sign(m: Monomial, parity) -> int:
    """Sign of m's leaf order under the Koszul rule for the given parities."""
    return odd_inversion_sign(m.leaves, parity)


class SuperPoly:
    """A multilinear polynomial together with a parity per variable.

    `poly` already carries whatever signs the construction demanded: for a
    superized classical identity those are the Koszul signs, for a literal
    graded relation they are the relation's own coefficients.
    """

    __slots__ = ("poly", "parities")

    def __init__(self, p: Poly, parities):
        p.require_multilinear("superpolynomial base")
        missing = p.varset - set(parities)
        if missing:
            raise ValueError(f"no parity for variables {sorted(missing)}")
        self.poly = p
        self.parities = dict(parities)

    def __eq__(self, other):
        return (
            isinstance(other, SuperPoly)
            and self.poly == other.poly
            and self.parities == other.parities
        )

    def __repr__(self):
        pat = "".join(str(self.parities[v]) for v in sorted(self.parities))
        return f"SuperPoly({format_poly(self.poly)}; parities {pat})"


def superize(p: Poly, parities) -> SuperPoly:
    """Multiply every monomial by its Koszul sign for the given parities."""
    p.require_multilinear("superize input")
    missing = p.varset - set(parities)
    if missing:
        raise ValueError(f"no parity for variables {sorted(missing)}")
    out = Poly()
    out.terms = {
        m: c if koszul_sign(m, parities) > 0 else -c for m, c in p.terms.items()
    }
    return SuperPoly(out, parities)


# ---------------------------------------------------------------------------
# Operator words
# ---------------------------------------------------------------------------

def expand_operator_word(seed, letters) -> Monomial:
    """Apply right/left multiplication letters to a seed monomial.

    `letters` is a sequence of (side, index) with side 'R' or 'L'; index None
    means implicit.  Implicit indices are the smallest positive integers not
    used anywhere in the word, assigned to the missing slots left to right
    (so (x2 x4) L R R reads (x2x4) L_{x1} R_{x3} R_{x5}).
    """
    if isinstance(seed, Monomial):
        tree = seed.tree
    else:
        tree = seed
    used = set(_leaves(tree))
    explicit = [idx for _, idx in letters if idx is not None]
    if len(set(explicit)) != len(explicit) or used & set(explicit):
        raise ValueError("operator letter index collides with an existing variable")
    used.update(explicit)
    fresh = []
    k = 1
    need = sum(1 for _, idx in letters if idx is None)
    while len(fresh) < need:
        if k not in used:
            fresh.append(k)
        k += 1
    it = iter(fresh)
    for side, idx in letters:
        if idx is None:
            idx = next(it)
        if side == "R":
            tree = (tree, idx)
        elif side == "L":
            tree = (idx, tree)
        else:
            raise ValueError(f"bad operator side {side!r}")
    return Monomial(tree)


def right_chain(tree, indices) -> Monomial:
    """seed R_{i1} R_{i2} ... as a monomial."""
    for i in indices:
        tree = (tree, i)
    return Monomial(tree)


def left_chain(tree, indices) -> Monomial:
    """seed L_{i1} L_{i2} ... as a monomial (each letter wraps on the left)."""
    for i in indices:
        tree = (i, tree)
    return Monomial(tree)


# ---------------------------------------------------------------------------
# Linearization
# ---------------------------------------------------------------------------

def _occurrence_count(tree, v):
    return _leaves(tree).count(v)


def _replace_occurrences(tree, v, replacements):
    """Rebuild tree replacing the k-th occurrence of v with replacements[k]."""
    counter = [0]

    def rec(t):
        if isinstance(t, int):
            if t == v:
                r = replacements[counter[0]]
                counter[0] += 1
                return r
            return t
        return (rec(t[0]), rec(t[1]))

    return rec(tree)


def linearize_monomial(m: Monomial, v: int, fresh) -> Poly:
    """Full linearization of one monomial in the variable v."""
    k = _occurrence_count(m.tree, v)
    if k != len(fresh):
        raise ValueError(
            f"variable x{v} occurs {k} times but {len(fresh)} fresh indices given"
        )
    out = Poly()
    for perm in permutations(fresh):
        t = _replace_occurrences(m.tree, v, list(perm))
        mm = Monomial(t)
        s = out.terms.get(mm, ZERO) + ONE
        if s:
            out.terms[mm] = s
        else:
            out.terms.pop(mm, None)
    return out


def multilinearize(p: Poly, fresh: dict) -> Poly:
    """Full linearization in every listed variable (no normalization).

    `fresh[v]` lists the replacement indices for v, one per occurrence; the
    sum runs over all assignments, so a variable occurring k times contributes
    k! terms per monomial.
    """
    out = p
    for v, idxs in fresh.items():
        acc = Poly()
        for m, c in out.terms.items():
            acc = acc + linearize_monomial(m, v, idxs).scale(c)
        out = acc
    return out


def linearize_full(p: Poly, v: int, fresh) -> Poly:
    """Full linearization in the single repeated variable v.

    Errors if any other variable repeats: this operation is only defined for
    polynomials with exactly one repeated variable (use `multilinearize` to
    iterate it when several repeat).
    """
    for m in p.terms:
        seen = {}
        for leaf in m.leaves:
            seen[leaf] = seen.get(leaf, 0) + 1
        repeated = {x for x, n in seen.items() if n > 1}
        if repeated - {v}:
            raise ValueError(
                f"more than one repeated variable in {m.key}: {sorted(repeated)}"
            )
    out = multilinearize(p, {v: list(fresh)})
    out.require_multilinear("linearize_full output")
    return out


def linearize_partial(p: Poly, v: int, new: int) -> Poly:
    """Replace one occurrence of v with `new`, summed over occurrences.

    Only defined when v really repeats: every monomial must contain v at
    least twice, otherwise "one occurrence" is not a linearization step.
    """
    out = Poly()
    acc = out.terms
    for m, c in p.terms.items():
        k = _occurrence_count(m.tree, v)
        if k < 2:
            raise ValueError(
                f"variable x{v} occurs {k} time(s) in {m.key}; need at least 2"
            )
        for pos in range(k):
            repl = [v] * k
            repl[pos] = new
            mm = Monomial(_replace_occurrences(m.tree, v, repl))
            s = acc.get(mm, ZERO) + c
            if s:
                acc[mm] = s
            else:
                acc.pop(mm, None)
    return out


# ---------------------------------------------------------------------------
# Standard brackets and the identity library
# ---------------------------------------------------------------------------

def commutator(i: int, j: int) -> Poly:
    return poly((1, (i, j)), (-1, (j, i)))


def jordan_product(i: int, j: int) -> Poly:
    return poly((1, (i, j)), (1, (j, i)))


def associator(i: int, j: int, k: int) -> Poly:
    return poly((1, ((i, j), k)), (-1, (i, (j, k))))


def jacobian(i: int, j: int, k: int) -> Poly:
    return poly((1, ((i, j), k)), (1, ((j, k), i)), (1, ((k, i), j)))


def eps_bracket(i: int, j: int, eps) -> Poly:
    if not isinstance(eps, QEps):
        eps = QEps(eps)
    return poly((1, (i, j))) + poly((1, (j, i))).scale(-eps)


def _cube_left_normed() -> Poly:
    return poly((1, ((1, 1), 1)))


def _phi() -> Poly:
    """Sum over S3 of (x_{s1} x_{s2}) x_{s3}: the linearized left cube."""
    return linearize_full(_cube_left_normed(), 1, [1, 2, 3])


def _linearized_jordan() -> Poly:
    """Full linearization of the Jordan identity (x*x, y, x) in x.

    x occurrences become x1, x2, x3 and y becomes x4.
    """
    raw = poly((1, (((1, 1), 4), 1)), (-1, ((1, 1), (4, 1))))
    return linearize_full(raw, 1, [1, 2, 3])


_C4 = [(1, 2, 3, 4), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3)]


def _sagle_reduced() -> Poly:
    out = Poly()
    for a, b, c, d in _C4:
        out = out + poly((1, (((a, b), c), d)))
    return out


def _sagle_full() -> Poly:
    return _sagle_reduced() - poly((1, ((1, 3), (2, 4))))


def identity_library(name: str) -> list[Poly]:
    """Multilinear defining identities for the supported varieties.

    Names: alternative, jordan, malcev, metabelian, nil3, eps_symm+,
    eps_symm-, eps_nil2+, eps_nil2-.  Identities with repeated variables are
    returned fully linearized (characteristic zero makes that equivalent).
    """
    if name == "alternative":
        return [
            associator(1, 2, 3) + associator(2, 1, 3),
            associator(1, 2, 3) + associator(1, 3, 2),
        ]
    if name == "jordan":
        return [commutator(1, 2), _linearized_jordan()]
    if name == "malcev":
        return [jordan_product(1, 2), _sagle_reduced(), _sagle_full()]
    if name == "metabelian":
        return [poly((1, ((1, 2), (3, 4))))]
    if name == "nil3":
        return [_phi()]
    if name in ("eps_symm+", "eps_symm-"):
        e = 1 if name.endswith("+") else -1
        return [associator(1, 2, 3) - associator(1, 3, 2).scale(e)]
    if name in ("eps_nil2+", "eps_nil2-"):
        e = QEps(1 if name.endswith("+") else -1)
        xy = eps_bracket(1, 2, e)
        zz = poly((1, 3))
        return [xy * zz - (zz * xy).scale(e)]
    raise KeyError(f"unknown identity library entry {name!r}")


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def _scalar_is_negative(c: QEps) -> bool:
    if c.a:
        return c.a < 0
    return c.b < 0


def format_poly(p: Poly) -> str:
    """Canonical text: '1/1*((x1 x2) x3) - 1/1*(x1 (x2 x3))'."""
    from .scalars import format_scalar

    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=lambda kv: (kv[0].degree, kv[0].key))
    parts = []
    for n, (m, c) in enumerate(items):
        neg = _scalar_is_negative(c)
        shown = -c if neg else c
        chunk = f"{format_scalar(shown)}*{m.key}"
        if n == 0:
            parts.append(("-" if neg else "") + chunk)
        else:
            parts.append(("- " if neg else "+ ") + chunk)
    return " ".join(parts)


_TOKEN_RE = None


def _tokenize(text):
    import re

    global _TOKEN_RE
    if _TOKEN_RE is None:
        _TOKEN_RE = re.compile(
            r"\s*(?:(?P<lp>\()|(?P<rp>\))|(?P<op>[RL]\d+)|(?P<var>x\d+)"
            r"|(?P<star>\*)|(?P<sign>[+-])"
            r"|(?P<num>\d+(?:/\d+)?E|\d+(?:/\d+)?(?:[+-]\d+(?:/\d+)?E)?))"
        )
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad polynomial text at {text[pos:]!r}")
            break
        out.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse_tree(self):
        kind, val = self.take()
        if kind == "var":
            tree = int(val[1:])
        elif kind == "lp":
            left = self.parse_tree()
            right = self.parse_tree()
            kind2, _ = self.take()
            if kind2 != "rp":
                raise ValueError("expected ')'")
            tree = (left, right)
        else:
            raise ValueError(f"expected monomial, got {val!r}")
        while self.peek()[0] == "op":
            _, opv = self.take()
            idx = int(opv[1:])
            tree = (tree, idx) if opv[0] == "R" else (idx, tree)
        return tree

    def parse_poly(self):
        from .scalars import parse_scalar

        out = Poly()
        first = True
        while self.peek()[0] is not None:
            sign = 1
            while self.peek()[0] == "sign":
                _, sv = self.take()
                if sv == "-":
                    sign = -sign
            if self.peek()[0] is None:
                if not first:
                    raise ValueError("dangling sign")
                break
            kind, val = self.peek()
            coeff = ONE
            if kind == "num":
                self.take()
                coeff = parse_scalar(val)
                if self.peek()[0] == "star":
                    self.take()
            tree = self.parse_tree()
            c = coeff if sign > 0 else -coeff
            m = Monomial(tree)
            s = out.terms.get(m, ZERO) + c
            if s:
                out.terms[m] = s
            else:
                out.terms.pop(m, None)
            first = False
        return out


def parse_poly(text: str) -> Poly:
    """Parse the polynomial text format, including R/L operator sugar."""
    if text.strip() == "0":
        return Poly()
    return _Parser(_tokenize(text)).parse_poly()
