"""Rectangular Young tables and their endomorphisms of multilinear words.

A table is a rectangular filling by the symbols 1..k*m.  The two word
endomorphisms phi and psi run over the column stabilizer against the row
stabilizer of the relabeled table (in the two possible orders), with the
column permutation contributing its parity as a sign.  On top of them sit
substitution into a free associative superalgebra and the three operator
word families used by the metabelian and epsilon vanishing arguments.
"""

from __future__ import annotations

import itertools

from .polynomials import Monomial, Poly, odd_inversion_sign
from .scalars import ONE, QEps, ZERO, format_scalar

__all__ = [
    "YoungTable",
    "AssocPoly",
    "assoc_word",
    "format_assoc_poly",
    "row_stabilizer",
    "column_stabilizer",
    "stabilizers",
    "phi",
    "psi",
    "substitute_super",
    "phi_row",
    "psi_col",
    "eps_fkn",
    "rect_family",
]


class YoungTable:
    """Rectangular k x m table filled bijectively with 1..k*m.

    The default filling writes 1..k*m row by row, left to right; that is
    the filling whose worked 2x2 examples the endomorphism conventions are
    pinned to.  `column_major` builds the other standard filling.
    """

    __slots__ = ("rows", "cols", "filling")

    def __init__(self, rows, cols, filling=None):
        if rows < 1 or cols < 1:
            raise ValueError("table dimensions must be positive")
        self.rows = rows
        self.cols = cols
        if filling is None:
            filling = tuple(
                tuple(i * cols + j + 1 for j in range(cols))
                for i in range(rows)
            )
        else:
            filling = tuple(tuple(row) for row in filling)
            if len(filling) != rows or any(len(r) != cols for r in filling):
                raise ValueError("filling does not match the table shape")
            if sorted(e for r in filling for e in r) != list(
                range(1, rows * cols + 1)
            ):
                raise ValueError("filling is not a bijection onto 1..k*m")
        self.filling = filling

    @classmethod
    def column_major(cls, rows, cols):
        return cls(rows, cols, tuple(
            tuple(j * rows + i + 1 for j in range(cols)) for i in range(rows)
        ))

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def row_sets(self):
        return [tuple(row) for row in self.filling]

    def col_sets(self):
        return [
            tuple(self.filling[i][j] for i in range(self.rows))
            for j in range(self.cols)
        ]

    def relabel(self, perm) -> "YoungTable":
        """The table with each entry e replaced by perm[e-1]."""
        return YoungTable(self.rows, self.cols, tuple(
            tuple(perm[e - 1] for e in row) for row in self.filling
        ))

    def __eq__(self, other):
        return (
            isinstance(other, YoungTable)
            and self.filling == other.filling
        )

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.filling)
        return f"YoungTable({self.rows}x{self.cols}: {body})"


def _perm_parity(base, image) -> int:
    """Parity (0/1) of the permutation sending base[i] to image[i]."""
    pos = {b: i for i, b in enumerate(base)}
    seq = [pos[x] for x in image]
    t = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                t += 1
    return t % 2


def _set_stabilizer(sets, n, signed):
    """Permutations of 1..n preserving each given symbol set, lazily.

    Yields (perm, sign) with perm a tuple (perm[c-1] = image of c) and sign
    +1/-1 the permutation parity; sign is constant +1 when not requested.
    """
    sets = [tuple(sorted(s)) for s in sets]
    streams = [itertools.permutations(s) for s in sets]
    for choice in itertools.product(*streams):
        perm = list(range(1, n + 1))
        par = 0
        for base, image in zip(sets, choice):
            for b, x in zip(base, image):
                perm[b - 1] = x
            if signed:
                par ^= _perm_parity(base, image)
        yield tuple(perm), (-1 if par else 1)


def row_stabilizer(t: YoungTable):
    """Permutations preserving each row of t setwise."""
    for perm, _ in _set_stabilizer(t.row_sets(), t.size, signed=False):
        yield perm


def column_stabilizer(t: YoungTable):
    """(permutation, parity sign) pairs preserving each column setwise."""
    return _set_stabilizer(t.col_sets(), t.size, signed=True)


def stabilizers(t: YoungTable):
    """The lazy (row iterator, signed column iterator) pair for t."""
    return row_stabilizer(t), column_stabilizer(t)


# ---------------------------------------------------------------------------
# Associative multilinear polynomials
# ---------------------------------------------------------------------------

class AssocPoly:
    """QEps-combination of associative words (tuples of variable indices)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple, QEps] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    cur = self.terms.get(w)
                    s = cur + c if cur is not None else c
                    if s:
                        self.terms[w] = s
                    else:
                        self.terms.pop(w, None)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, AssocPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        p = AssocPoly()
        p.terms = out
        return p

    def __neg__(self):
        p = AssocPoly()
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AssocPoly":
        if not isinstance(c, QEps):
            c = QEps(c)
        p = AssocPoly()
        if c:
            p.terms = {w: c * v for w, v in self.terms.items()}
        return p

    def __mul__(self, other):
        """Concatenation product of words, bilinearly."""
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, ZERO) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        p = AssocPoly()
        p.terms = out
        return p

    def rename(self, mapping) -> "AssocPoly":
        """Replace every letter c by mapping.get(c, c), collecting words."""
        out = AssocPoly()
        acc = out.terms
        for w, c in self.terms.items():
            w2 = tuple(mapping.get(x, x) for x in w)
            s = acc.get(w2, ZERO) + c
            if s:
                acc[w2] = s
            else:
                acc.pop(w2, None)
        return out

    def __repr__(self):
        return f"AssocPoly({format_assoc_poly(self)})"


def assoc_word(*letters) -> AssocPoly:
    return AssocPoly({tuple(letters): ONE})


def format_assoc_poly(p: AssocPoly) -> str:
    """Canonical text: '1/1*x1 x2 - 1/1*x2 x1', words sorted as tuples."""
    if not p.terms:
        return "0"
    parts = []
    for n, w in enumerate(sorted(p.terms)):
        c = p.terms[w]
        neg = c.a < 0 or (c.a == 0 and c.b < 0)
        shown = -c if neg else c
        chunk = f"{format_scalar(shown)}*" + " ".join(f"x{x}" for x in w)
        if n == 0:
            parts.append(("-" if neg else "") + chunk)
        else:
            parts.append(("- " if neg else "+ ") + chunk)
    return " ".join(parts)


def _check_word(w, size):
    n = len(w)
    if n < size:
        raise ValueError(f"word length {n} is below the table size {size}")
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError("word must be a permutation of 1..n")


def _mapped(w, outer, inner):
    """Word with each letter c replaced by outer(inner(c)), identity beyond."""
    n = len(outer)
    out = []
    for c in w:
        if c <= n:
            c = outer[inner[c - 1] - 1]
        out.append(c)
    return tuple(out)


def phi(t: YoungTable, w) -> AssocPoly:
    """Signed column-against-row symmetrization of the word w.

    Sum over sigma in the column stabilizer of t and rho in the row
    stabilizer of the relabeled table sigma.t, with sign the parity of
    sigma; each letter c of w up to the table size becomes rho(sigma(c)).
    The result is skew-symmetric in every pair of symbols sharing a column
    of t.
    """
    w = tuple(w)
    _check_word(w, t.size)
    out = AssocPoly()
    acc = out.terms
    for sigma, sign in column_stabilizer(t):
        t2 = t.relabel(sigma)
        c = ONE if sign > 0 else -ONE
        for rho in row_stabilizer(t2):
            word = _mapped(w, rho, sigma)
            s = acc.get(word, ZERO) + c
            if s:
                acc[word] = s
            else:
                acc.pop(word, None)
    return out


def psi(t: YoungTable, w) -> AssocPoly:
    """Row-against-signed-column symmetrization of the word w.

    Sum over rho in the row stabilizer of t and sigma in the column
    stabilizer of rho.t, with sign the parity of sigma; each letter c
    becomes sigma(rho(c)).  The result is symmetric in every pair of
    symbols sharing a row of t.
    """
    w = tuple(w)
    _check_word(w, t.size)
    out = AssocPoly()
    acc = out.terms
    for rho in row_stabilizer(t):
        t2 = t.relabel(rho)
        for sigma, sign in column_stabilizer(t2):
            word = _mapped(w, sigma, rho)
            c = ONE if sign > 0 else -ONE
            s = acc.get(word, ZERO) + c
            if s:
                acc[word] = s
            else:
                acc.pop(word, None)
    return out


def substitute_super(p, xi) -> dict:
    """Image of p in a free associative superalgebra under x -> xi(x).

    `xi` maps every variable index to a (label, parity) pair.  The
    polynomial is superized first, with the parity each variable inherits
    from its image (the Koszul sign of each word is computed on the still
    distinct variables), and only then are the letters renamed; words with
    equal letter sequences are collected.  Nonassociative input is accepted
    and flattened, since the target algebra is associative.  Returns the
    word -> coefficient mapping; an identically zero image is {}.
    """
    if isinstance(p, AssocPoly):
        items = list(p.terms.items())
    elif isinstance(p, Poly):
        p.require_multilinear("substitution input")
        items = [(m.leaves, c) for m, c in p.terms.items()]
    else:
        raise TypeError("substitute_super expects an AssocPoly or Poly")
    parity = {}
    label = {}
    for v, (lab, par) in xi.items():
        if par not in (0, 1):
            raise ValueError(f"generator {lab!r} has parity {par!r}")
        parity[v] = par
        label[v] = lab
    out: dict = {}
    for w, c in items:
        missing = [v for v in w if v not in parity]
        if missing:
            raise ValueError(f"xi is not defined on variables {sorted(set(missing))}")
        if odd_inversion_sign(w, parity) < 0:
            c = -c
        key = tuple(label[v] for v in w)
        s = out.get(key, ZERO) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# Operator word families over rectangular tables
# ---------------------------------------------------------------------------
#
# Each family returns (poly, roles): the multilinear polynomial and the map
# from the construction's roles to variable indices.  Indices are assigned
# in the leaf order of the leading (identity permutation) monomial, so the
# seed pair u, v sits wherever that order puts it; this is the assignment
# under which the families' known nonzero evaluations come out with the
# signs they are quoted with.

def phi_row(r: int, k: int):
    """(uv) R-chain symmetrized phi-style over the r x k column-major table.

    Variables: u = 1, v = 2, table symbol c = c + 2.  Chain position c
    carries x_{rho(sigma(c))}.
    """
    t = YoungTable.column_major(r, k)
    size = t.size
    roles = {"u": 1, "v": 2, "x": {c: c + 2 for c in range(1, size + 1)}}
    out = Poly()
    acc = out.terms
    for sigma, sign in column_stabilizer(t):
        t2 = t.relabel(sigma)
        c = ONE if sign > 0 else -ONE
        for rho in row_stabilizer(t2):
            tree = (1, 2)
            for pos in range(1, size + 1):
                tree = (tree, rho[sigma[pos - 1] - 1] + 2)
            m = Monomial(tree)
            s = acc.get(m, ZERO) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return out, roles


def psi_col(s: int, k: int):
    """(uv) R-chain symmetrized psi-style over the k x s row-major table.

    Variables: u = 1, v = 2, table symbol c = c + 2.  Chain position c
    carries x_{sigma(rho(c))}.
    """
    t = YoungTable(k, s)
    size = t.size
    roles = {"u": 1, "v": 2, "x": {c: c + 2 for c in range(1, size + 1)}}
    out = Poly()
    acc = out.terms
    for rho in row_stabilizer(t):
        t2 = t.relabel(rho)
        for sigma, sign in column_stabilizer(t2):
            c = ONE if sign > 0 else -ONE
            tree = (1, 2)
            for pos in range(1, size + 1):
                tree = (tree, sigma[rho[pos - 1] - 1] + 2)
            m = Monomial(tree)
            s2 = acc.get(m, ZERO) + c
            if s2:
                acc[m] = s2
            else:
                acc.pop(m, None)
    return out, roles


def eps_fkn(k: int, n: int):
    """(uv) left-multiplication chain psi-style over the k x n row-major table.

    The chain interleaves the table letters with fixed spacers:
    L_{x_{sigma rho(1)}} L_{z_1} L_{x_{sigma rho(2)}} ... L_{x_{sigma rho(kn)}}.
    Leaf order of the leading monomial runs x_kn, z_{kn-1}, ..., z_1, x_1,
    u, v, so the variable indices are x_c = 2(kn-c)+1, z_i = 2(kn-i),
    u = 2kn, v = 2kn+1.
    """
    t = YoungTable(k, n)
    size = t.size
    xvar = {c: 2 * (size - c) + 1 for c in range(1, size + 1)}
    zvar = {i: 2 * (size - i) for i in range(1, size)}
    u, v = 2 * size, 2 * size + 1
    roles = {"u": u, "v": v, "x": xvar, "z": zvar}
    out = Poly()
    acc = out.terms
    for rho in row_stabilizer(t):
        t2 = t.relabel(rho)
        for sigma, sign in column_stabilizer(t2):
            c = ONE if sign > 0 else -ONE
            tree = (u, v)
            for pos in range(1, size + 1):
                tree = (xvar[sigma[rho[pos - 1] - 1]], tree)
                if pos < size:
                    tree = (zvar[pos], tree)
            m = Monomial(tree)
            s = acc.get(m, ZERO) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return out, roles


_FAMILIES = {"phi_row": phi_row, "psi_col": psi_col, "eps_fkn": eps_fkn}


def rect_family(kind: str, a: int, b: int):
    """Dispatch to phi_row(r, k), psi_col(s, k) or eps_fkn(k, n) by name."""
    fam = _FAMILIES.get(kind)
    if fam is None:
        raise KeyError(f"unknown family {kind!r}")
    return fam(a, b)
