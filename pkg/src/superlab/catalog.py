"""Worked finite-dimensional superalgebras, one entry per construction.

Every entry couples an algebra with the varieties it is claimed to lie in
and a generator set whose closure spans the whole algebra.  `conformance`
replays the claims mechanically: grading, the superized defining identities
of each declared variety, the superized metabelian identity, and the
generator closure.  The module also builds the polynomial families that the
entries were designed to separate (`nilalt_basis_words`, `jord_fn`,
`malc_fn`, `malc_gn`, ...) and a small battery of smoke equations and
operator relations per variety.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .polynomials import (
    Poly,
    identity_library,
    linearize_partial,
    multilinearize,
    poly,
)
from .scalars import qeps
from .superalgebras import (
    SuperAlgebra,
    is_superidentity,
    operator_relation_holds,
    split_null_extension,
    subalgebra_closure,
    validate,
)

__all__ = [
    "CatalogEntry",
    "ConformanceReport",
    "conformance",
    "defining_identities",
    "alt_A",
    "alt_B",
    "alt_Bp",
    "nilalt_basis_words",
    "jord_A",
    "jord_core",
    "jord_Bn",
    "jord_fn",
    "jordan_basis_monomials",
    "malc_A",
    "malc_An",
    "malc_fn",
    "malc_gn",
    "malc_superAn",
    "malc_barAn",
    "metab_Ar",
    "metab_As",
    "eps_A",
    "smoke_equations",
    "smoke_relations",
    "run_smoke",
    "standard_entries",
    "CONSTRUCTORS",
    "FAMILIES",
]


# ---------------------------------------------------------------------------
# Entries and conformance
# ---------------------------------------------------------------------------

_VARIETY_IDENTITIES = {
    "alternative": ("alternative",),
    "jordan": ("jordan",),
    "malcev": ("malcev",),
    "metabelian": (),
    "eps+": ("eps_symm+", "eps_nil2+"),
    "eps-": ("eps_symm-", "eps_nil2-"),
}


class CatalogEntry:
    """An algebra together with its variety claims and a generator set."""

    __slots__ = ("name", "algebra", "varieties", "generators", "notes")

    def __init__(self, name, algebra, varieties, generators, notes=""):
        self.name = str(name)
        self.algebra = algebra
        self.varieties = tuple(varieties)
        for v in self.varieties:
            if v not in _VARIETY_IDENTITIES:
                raise ValueError(f"unknown variety {v!r}")
        self.generators = list(generators)
        self.notes = str(notes)

    def generator_profile(self):
        """(even count, odd count); mixed-parity generators count on both."""
        even = odd = 0
        for g in self.generators:
            ps = {self.algebra.parities[k] for k in g.coords}
            if 0 in ps:
                even += 1
            if 1 in ps:
                odd += 1
        return even, odd

    def __repr__(self):
        return f"CatalogEntry({self.name!r}, dim {self.algebra.dim})"


def defining_identities(varieties):
    """Named multilinear identities an entry must satisfy superized.

    The metabelian identity is appended unconditionally; every catalog
    construction is a (quotient of a) split null extension or a truncation
    and is metabelian by design.
    """
    names = []
    for v in varieties:
        if v not in _VARIETY_IDENTITIES:
            raise ValueError(f"unknown variety {v!r}")
        names.extend(_VARIETY_IDENTITIES[v])
    names.append("metabelian")
    out = []
    for nm in names:
        ps = identity_library(nm)
        if len(ps) == 1:
            out.append((nm, ps[0]))
        else:
            out.extend((f"{nm}[{t}]", p) for t, p in enumerate(ps))
    return out


class ConformanceReport:
    """Outcome of replaying one entry's claims."""

    __slots__ = ("name", "dim", "grading_ok", "identity_results", "closure_dim")

    def __init__(self, name, dim, grading_ok, identity_results, closure_dim):
        self.name = name
        self.dim = dim
        self.grading_ok = grading_ok
        self.identity_results = identity_results
        self.closure_dim = closure_dim

    @property
    def ok(self) -> bool:
        return (
            self.grading_ok
            and all(ok for _, ok, _ in self.identity_results)
            and self.closure_dim == self.dim
        )

    def summary(self) -> str:
        bad = [nm for nm, ok, _ in self.identity_results if not ok]
        bits = [
            "grading ok" if self.grading_ok else "grading BROKEN",
            f"identities {len(self.identity_results) - len(bad)}"
            f"/{len(self.identity_results)}",
            f"closure {self.closure_dim}/{self.dim}",
        ]
        if bad:
            bits.append("failing: " + ", ".join(bad))
        state = "pass" if self.ok else "FAIL"
        return f"{self.name}: {state} ({'; '.join(bits)})"

    def __repr__(self):
        return f"ConformanceReport({self.summary()!r})"


def conformance(entry: CatalogEntry) -> ConformanceReport:
    """Grading, superized variety identities, metabelian law, closure."""
    A = entry.algebra
    rep = validate(A, check_associativity=False)
    results = []
    for nm, p in defining_identities(entry.varieties):
        ok, wit = is_superidentity(A, p)
        results.append((nm, ok, wit))
    dim, _ = subalgebra_closure(A, entry.generators)
    return ConformanceReport(entry.name, A.dim, not rep.grading, results, dim)


# ---------------------------------------------------------------------------
# Shared tree helpers
# ---------------------------------------------------------------------------

def _rtail(tree, indices):
    for i in indices:
        tree = (tree, i)
    return tree


def _perm_sign(seq) -> int:
    t = 0
    seq = list(seq)
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                t += 1
    return -1 if t % 2 else 1


def _merge_word(word, k):
    """Append generator k to an ascending word: (sign, new word) or None."""
    if k in word:
        return None
    sign = -1 if sum(1 for i in word if i > k) % 2 else 1
    return sign, tuple(sorted(word + (k,)))


def _gword_label(word, bar=False) -> str:
    if not word:
        return "[1]"
    body = "".join(f"e{i}" for i in word)
    return f"[~{body}]" if bar else f"[{body}]"


# ---------------------------------------------------------------------------
# Alternative examples
# ---------------------------------------------------------------------------

def alt_A() -> CatalogEntry:
    """Three-dimensional alternative superalgebra over Q(eps).

    One odd generator a1 + x; the products a_i*x = a_{1-i} and
    x*a_i = (i + eps) a_{1-i} make the cube of the generator nonzero while
    the full linearization of x^3 still vanishes superized.
    """
    A = SuperAlgebra(
        "alt_A",
        [("x", 1), ("a0", 0), ("a1", 1)],
        {
            ("a0", "x"): {"a1": 1},
            ("a1", "x"): {"a0": 1},
            ("x", "a0"): {"a1": qeps(0, 1)},
            ("x", "a1"): {"a0": qeps(1, 1)},
        },
        field="Q(eps)",
    )
    gens = [A.element({"a1": 1, "x": 1})]
    return CatalogEntry(
        "alt_A", A, ("alternative",), gens,
        "one odd generator with a nonzero cube",
    )


def alt_B() -> CatalogEntry:
    """alt_A extended by an even idempotent-free element e.

    Only e*x, x*e, (ex)*e and e*(xe) are nonzero among the new products, so
    the full linearization of x^3 takes the value 2 exe: the algebra needs
    one even and one odd generator, not one odd.
    """
    A = SuperAlgebra(
        "alt_B",
        [
            ("x", 1), ("a0", 0), ("a1", 1),
            ("e", 0), ("ex", 1), ("xe", 1), ("exe", 1),
        ],
        {
            ("a0", "x"): {"a1": 1},
            ("a1", "x"): {"a0": 1},
            ("x", "a0"): {"a1": qeps(0, 1)},
            ("x", "a1"): {"a0": qeps(1, 1)},
            ("e", "x"): {"ex": 1},
            ("x", "e"): {"xe": 1},
            ("ex", "e"): {"exe": 1},
            ("e", "xe"): {"exe": 1},
        },
        field="Q(eps)",
    )
    gens = [A.basis_element("e"), A.element({"a1": 1, "x": 1})]
    return CatalogEntry(
        "alt_B", A, ("alternative",), gens,
        "one even and one odd generator; linearized cube is nonzero",
    )


def alt_Bp() -> CatalogEntry:
    """alt_A extended by two odd elements y, z with y(xz) = (yx)z nonzero."""
    A = SuperAlgebra(
        "alt_Bp",
        [
            ("x", 1), ("a0", 0), ("a1", 1),
            ("y", 1), ("z", 1), ("yx", 0), ("xz", 0), ("yxz", 1),
        ],
        {
            ("a0", "x"): {"a1": 1},
            ("a1", "x"): {"a0": 1},
            ("x", "a0"): {"a1": qeps(0, 1)},
            ("x", "a1"): {"a0": qeps(1, 1)},
            ("y", "x"): {"yx": 1},
            ("x", "z"): {"xz": 1},
            ("yx", "z"): {"yxz": 1},
            ("y", "xz"): {"yxz": 1},
        },
        field="Q(eps)",
    )
    gens = [
        A.element({"a1": 1, "x": 1}),
        A.basis_element("y"),
        A.basis_element("z"),
    ]
    return CatalogEntry(
        "alt_Bp", A, ("alternative",), gens,
        "three odd generators; linearized cube is nonzero",
    )


def nilalt_basis_words(n: int) -> list[Poly]:
    """Spanning multilinear words of degree n for nilpotent-cube products.

    Two shapes, each with the third factor multiplied on either side and the
    remaining factors appended on the right: (x1 x2) itself, and the
    symmetrized pairs x1 o xi for i = 2..n.  2n polynomials in all.
    """
    if n < 3:
        raise ValueError("degree must be at least 3")
    out = [
        poly((1, _rtail((1, 2), range(3, n + 1)))),
        poly((1, _rtail((3, (1, 2)), range(4, n + 1)))),
    ]
    for i in range(2, n + 1):
        rest = [j for j in range(2, n + 1) if j != i]
        t, tail = rest[0], rest[1:]
        out.append(poly(
            (1, _rtail(((1, i), t), tail)),
            (1, _rtail(((i, 1), t), tail)),
        ))
        out.append(poly(
            (1, _rtail((t, (1, i)), tail)),
            (1, _rtail((t, (i, 1)), tail)),
        ))
    return out


# ---------------------------------------------------------------------------
# Jordan examples
# ---------------------------------------------------------------------------

def jord_A() -> CatalogEntry:
    """Four-dimensional Jordan superalgebra: a*x = v, v*y = a, rest null."""
    U = SuperAlgebra("U", [("x", 1), ("y", 1)], {})
    A = split_null_extension(
        U,
        [("a", 0), ("v", 1)],
        right={("a", "x"): {"v": 1}, ("v", "y"): {"a": 1}},
        rule="supersymmetric",
        name="jord_A",
    )
    gens = [A.element({"v": 1, "x": 1}), A.basis_element("y")]
    return CatalogEntry(
        "jord_A", A, ("jordan",), gens,
        "two odd generators; alternating right multiplications stay nonzero",
    )


def _jord_reduce(letters):
    """Normal form of a word in y (letter 0) and e_i (letter i).

    Rules: yy cancels, adjacent e's kill the word, equal e-indices kill the
    word, and the surviving e-indices are sorted with the sign of the
    permutation.  Returns (sign, word) or None for zero.
    """
    stack = []
    for c in letters:
        if stack and stack[-1] == 0 and c == 0:
            stack.pop()
        elif stack and stack[-1] != 0 and c != 0:
            return None
        else:
            stack.append(c)
    es = [c for c in stack if c]
    if len(set(es)) != len(es):
        return None
    srt = iter(sorted(es))
    word = tuple(next(srt) if c else 0 for c in stack)
    return _perm_sign(es), word


def _jord_words(n: int):
    """All normal words, sorted by length then lexicographically."""
    words = [(), (0,)]
    for k in range(1, n + 1):
        for sub in combinations(range(1, n + 1), k):
            inner = []
            for t, c in enumerate(sub):
                if t:
                    inner.append(0)
                inner.append(c)
            for d0 in (0, 1):
                for d1 in (0, 1):
                    words.append(tuple([0] * d0 + inner + [0] * d1))
    words.sort(key=lambda w: (len(w), w))
    return words


def _jord_label(word) -> str:
    if not word:
        return "[1]"
    return "[" + "".join("y" if c == 0 else f"e{c}" for c in word) + "]"


def jord_core(n: int) -> SuperAlgebra:
    """Unital associative superalgebra on alternating words in y and e_i.

    Defining rules: y^2 = 1, e_i e_j = 0, and e-indices anticommute across
    a single y.  The basis is the set of normal words y^d0 e_{i_1} y ...
    e_{i_k} y^d1 with ascending indices, of dimension 4*2^n - 2; parity is
    the y-count mod 2.  Products concatenate and reduce, and associativity
    of the table is checkable exhaustively.
    """
    if n < 1:
        raise ValueError("need at least one even letter")
    words = _jord_words(n)
    labels = {w: _jord_label(w) for w in words}
    products = {}
    for w1 in words:
        for w2 in words:
            red = _jord_reduce(w1 + w2)
            if red is None:
                continue
            sign, w = red
            products[(labels[w1], labels[w2])] = {labels[w]: sign}
    basis = [(labels[w], sum(1 for c in w if c == 0) % 2) for w in words]
    return SuperAlgebra(f"jord_core({n})", basis, products, associative=True)


def jord_Bn(n: int) -> CatalogEntry:
    """Split null extension of null U = <e_1..e_n, y> by the word algebra.

    The module is jord_core(n) with its own multiplication killed; e_i and
    y act by appending the matching letter, except that the unit word
    refuses e_i.  Words that start with an e-letter can never be produced
    by the action (products only append on the right), so spanning the
    whole algebra needs the singleton words [ei] among the generators on
    top of the expected [1]+e1, e2..en, y.
    """
    core = jord_core(n)
    words = _jord_words(n)
    U = SuperAlgebra(
        "U",
        [(f"e{i}", 0) for i in range(1, n + 1)] + [("y", 1)],
        {},
    )
    letters = [(f"e{i}", i) for i in range(1, n + 1)] + [("y", 0)]
    right = {}
    for w in words:
        for ulab, c in letters:
            if w == () and c != 0:
                continue
            red = _jord_reduce(w + (c,))
            if red is None:
                continue
            sign, res = red
            right[(_jord_label(w), ulab)] = {_jord_label(res): sign}
    A = split_null_extension(
        U,
        list(zip(core.labels, core.parities)),
        right=right,
        rule="supersymmetric",
        name=f"jord_Bn({n})",
    )
    gens = [A.element({"[1]": 1, "e1": 1})]
    gens += [A.basis_element(f"e{i}") for i in range(2, n + 1)]
    gens.append(A.basis_element("y"))
    gens += [A.basis_element(f"[e{i}]") for i in range(1, n + 1)]
    return CatalogEntry(
        f"jord_Bn({n})", A, ("jordan",), gens,
        "the subalgebra of interest is generated by [1]+e1, e2..en, y; the "
        "words starting with an e-letter are unreachable from it and need "
        "their own generators",
    )


def jord_fn(n: int) -> Poly:
    """(ab) followed by n symmetrized pairs of right multiplications.

    Variables: a = 1, b = 2, x_i = i + 2; degree 2n + 2, 2^n monomials.
    """
    if n < 1:
        raise ValueError("need at least one pair")
    trees = [(1, 2)]
    for t in range(n):
        u, v = 2 * t + 3, 2 * t + 4
        trees = [((s, u), v) for s in trees] + [((s, v), u) for s in trees]
    return poly(*((1, s) for s in trees))


def jordan_basis_monomials(n: int) -> list[Poly]:
    """Multilinear spanning monomials (x_k x_{i_1}) R_{x_{j_1}} R_{x_{i_2}}...

    The i-indices ascend, the j-indices ascend, k > i_1, and right
    multiplications alternate j, i, j, i, ... after the initial pair.  Each
    monomial uses ceil(n/2) i-slots and floor((n-1)/2) j-slots.
    """
    if n < 2:
        raise ValueError("degree must be at least 2")
    m = n // 2
    out = []
    for iset in combinations(range(1, n + 1), m):
        rest = [c for c in range(1, n + 1) if c not in iset]
        for k in rest:
            if k <= iset[0]:
                continue
            js = [c for c in rest if c != k]
            ops = []
            ii, jj = 1, 0
            while ii < len(iset) or jj < len(js):
                if jj < len(js):
                    ops.append(js[jj])
                    jj += 1
                if ii < len(iset):
                    ops.append(iset[ii])
                    ii += 1
            out.append(poly((1, _rtail((k, iset[0]), ops))))
    return out


# ---------------------------------------------------------------------------
# Malcev examples
# ---------------------------------------------------------------------------

def malc_A() -> CatalogEntry:
    """Five-dimensional Malcev superalgebra: a*y = v, v*y = a, w*e = w."""
    U = SuperAlgebra("U", [("e", 0), ("y", 1)], {})
    A = split_null_extension(
        U,
        [("a", 0), ("v", 1), ("w", 1)],
        right={
            ("a", "y"): {"v": 1},
            ("v", "y"): {"a": 1},
            ("w", "e"): {"w": 1},
        },
        rule="superskew",
        name="malc_A",
    )
    gens = [A.element({"a": 1, "e": 1}), A.element({"w": 1, "y": 1})]
    return CatalogEntry(
        "malc_A", A, ("malcev",), gens,
        "one even and one odd generator",
    )


def malc_An(n: int) -> CatalogEntry:
    """Null algebra on e_1..e_{n-1} acting on Grassmann words, ungraded.

    The module is the unital Grassmann algebra on n - 1 generators with all
    parities forced even; e_k appends itself with the Grassmann sign and
    the completion makes the product anticommutative.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    U = SuperAlgebra(
        "U", [(f"e{i}", 0) for i in range(1, n)], {},
    )
    module_words = []
    for k in range(n):
        module_words.extend(combinations(range(1, n), k))
    module_words.sort(key=lambda w: (len(w), w))
    right = {}
    for w in module_words:
        for k in range(1, n):
            res = _merge_word(w, k)
            if res is None:
                continue
            sign, new = res
            right[(_gword_label(w), f"e{k}")] = {_gword_label(new): sign}
    A = split_null_extension(
        U,
        [(_gword_label(w), 0) for w in module_words],
        right=right,
        rule="superskew",
        name=f"malc_An({n})",
    )
    gens = [A.basis_element("[1]")]
    gens += [A.basis_element(f"e{i}") for i in range(1, n)]
    return CatalogEntry(
        f"malc_An({n})", A, ("malcev",), gens,
        "ungraded; generated by the unit word and the acting letters",
    )


def malc_fn(n: int) -> Poly:
    """Alternating sum over all n! right-combed monomials, degree n."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    terms = []
    for perm in permutations(range(1, n + 1)):
        terms.append((
            _perm_sign(perm),
            _rtail((perm[0], perm[1]), perm[2:]),
        ))
    return poly(*terms)


def malc_gn(n: int) -> Poly:
    """(ab) R_{x_s(1)} ... R_{x_s(n)} summed without signs over all s.

    Variables: a = 1, b = 2, x_i = i + 2; degree n + 2.
    """
    if n < 1:
        raise ValueError("need at least one letter")
    terms = []
    for perm in permutations(range(3, n + 3)):
        terms.append((1, _rtail((1, 2), perm)))
    return poly(*terms)


def _super_an_parts(n: int):
    """Basis and right action shared by malc_superAn and malc_barAn.

    Returns (module basis as (label, parity) pairs, right action dict,
    plain words list, barred words list).
    """
    words = []
    for k in range(n + 1):
        words.extend(combinations(range(1, n + 1), k))
    words.sort(key=lambda w: (len(w), w))
    barred = [w for w in words if w]
    module = [(_gword_label(w), len(w) % 2) for w in words]
    module += [(_gword_label(w, bar=True), (len(w) + 1) % 2) for w in barred]
    right = {}
    for w in words:
        for k in range(1, n + 1):
            res = _merge_word(w, k)
            if res is None:
                continue
            sign, new = res
            right[(_gword_label(w), f"y{k}")] = {_gword_label(new): sign}
            if w:
                right[(_gword_label(w, bar=True), f"y{k}")] = {
                    _gword_label(new, bar=True): sign,
                }
    return module, right, words, barred


def malc_superAn(n: int) -> CatalogEntry:
    """Null odd letters y_1..y_n acting on two Grassmann copies.

    Plain words [w] keep their length parity, barred words [~w] carry the
    opposite one; y_k appends e_k to either copy with the Grassmann sign
    and the completion is superskew.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    module, right, _, _ = _super_an_parts(n)
    U = SuperAlgebra(
        "U", [(f"y{i}", 1) for i in range(1, n + 1)], {},
    )
    A = split_null_extension(
        U, module, right=right, rule="superskew",
        name=f"malc_superAn({n})",
    )
    gens = [A.basis_element("[1]")]
    gens += [A.basis_element(f"[~e{i}]") for i in range(1, n + 1)]
    gens += [A.basis_element(f"y{i}") for i in range(1, n + 1)]
    return CatalogEntry(
        f"malc_superAn({n})", A, ("malcev",), gens,
        "the barred copy is reachable only from its own length-one words",
    )


def malc_barAn(k: int) -> CatalogEntry:
    """malc_superAn(k - 1) extended by one odd element x with x^2 = [1].

    x pairs with y_i into the barred length-one words and halves barred
    words back to plain ones; everything is generated by the k odd
    elements x, y_1..y_{k-1}.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    n = k - 1
    module, right, words, barred = _super_an_parts(n)
    basis = [("x", 1)]
    basis += [(f"y{i}", 1) for i in range(1, n + 1)]
    basis += module
    products = {(mlab, ulab): dict(combo) for (mlab, ulab), combo in right.items()}
    # Superskew completion by hand: y_i*m = -(-1)^{|m|} m*y_i.
    parity = dict(basis)
    for (mlab, ulab), combo in right.items():
        sgn = 1 if parity[mlab] else -1
        products[(ulab, mlab)] = {
            lab: c if sgn > 0 else -c for lab, c in combo.items()
        }
    products[("x", "x")] = {"[1]": 1}
    for i in range(1, n + 1):
        products[("x", f"y{i}")] = {f"[~e{i}]": 1}
        products[(f"y{i}", "x")] = {f"[~e{i}]": 1}
    for w in barred:
        blab = _gword_label(w, bar=True)
        wlab = _gword_label(w)
        products[("x", blab)] = {wlab: Fraction(1, 2)}
        products[(blab, "x")] = {
            wlab: Fraction(1, 2) if len(w) % 2 == 0 else Fraction(-1, 2),
        }
    A = SuperAlgebra(f"malc_barAn({k})", basis, products)
    gens = [A.basis_element("x")]
    gens += [A.basis_element(f"y{i}") for i in range(1, n + 1)]
    return CatalogEntry(
        f"malc_barAn({k})", A, ("malcev",), gens,
        "generated by k odd elements",
    )


# ---------------------------------------------------------------------------
# Metabelian examples
# ---------------------------------------------------------------------------

def metab_Ar(r: int) -> CatalogEntry:
    """Cyclic right action of r even letters on r even module elements.

    a_m * e_i steps the module index by one exactly when m = i mod r; the
    left action is zero.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    U = SuperAlgebra("U", [(f"e{i}", 0) for i in range(1, r + 1)], {})
    right = {}
    for m in range(r):
        i = r if m == 0 else m
        right[(f"a{m}", f"e{i}")] = {f"a{(m + 1) % r}": 1}
    A = split_null_extension(
        U,
        [(f"a{m}", 0) for m in range(r)],
        right=right,
        rule="none",
        name=f"metab_Ar({r})",
    )
    gens = [A.element({"a0": 1, f"e{r}": 1})]
    gens += [A.basis_element(f"e{i}") for i in range(1, r)]
    return CatalogEntry(
        f"metab_Ar({r})", A, ("metabelian",), gens,
        "ungraded; r even generators, one-sided cyclic action",
    )


def metab_As(s: int) -> CatalogEntry:
    """Cyclic right action of s odd letters on 2s module elements.

    a_m * y_i steps the index by one exactly when m = i mod s; parities
    alternate along the cycle, so the action letters stay odd.
    """
    if s < 1:
        raise ValueError("need s >= 1")
    U = SuperAlgebra("U", [(f"y{i}", 1) for i in range(1, s + 1)], {})
    right = {}
    for m in range(2 * s):
        for i in range(1, s + 1):
            if m % s == i % s:
                right[(f"a{m}", f"y{i}")] = {f"a{(m + 1) % (2 * s)}": 1}
    A = split_null_extension(
        U,
        [(f"a{m}", m % 2) for m in range(2 * s)],
        right=right,
        rule="none",
        name=f"metab_As({s})",
    )
    gens = [A.element({"a1": 1, "y1": 1})]
    gens += [A.basis_element(f"y{i}") for i in range(2, s + 1)]
    return CatalogEntry(
        f"metab_As({s})", A, ("metabelian",), gens,
        "s odd generators, one-sided cyclic action",
    )


# ---------------------------------------------------------------------------
# Epsilon-commutative examples
# ---------------------------------------------------------------------------

def eps_A(eps: int, N: int) -> CatalogEntry:
    """Truncated chain algebra for the eps-commutative varieties.

    Basis y_i (odd), a_i (even), w_i (odd) for i = 1..N with y_i a_i =
    w_{i+1}, a_i y_i = eps w_{i+1}, y_i w_i = a_i; indices above N are cut,
    which is a quotient, so the defining identities survive truncation.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if N < 2:
        raise ValueError("need N >= 2")
    basis = [(f"y{i}", 1) for i in range(1, N + 1)]
    basis += [(f"a{i}", 0) for i in range(1, N + 1)]
    basis += [(f"w{i}", 1) for i in range(1, N + 1)]
    products = {}
    for i in range(1, N):
        products[(f"y{i}", f"a{i}")] = {f"w{i + 1}": 1}
        products[(f"a{i}", f"y{i}")] = {f"w{i + 1}": eps}
    for i in range(1, N + 1):
        products[(f"y{i}", f"w{i}")] = {f"a{i}": 1}
    A = SuperAlgebra(f"eps_A({eps:+d},{N})", basis, products)
    gens = [A.basis_element("w1")]
    gens += [A.basis_element(f"y{i}") for i in range(1, N + 1)]
    variety = "eps+" if eps == 1 else "eps-"
    return CatalogEntry(
        f"eps_A({eps:+d},{N})", A, (variety,), gens,
        "truncated chain; all generators odd",
    )


# ---------------------------------------------------------------------------
# Smoke equations and operator relations per variety
# ---------------------------------------------------------------------------

def smoke_equations(variety: str):
    """Multilinearized consequences every member of the variety satisfies."""
    if variety == "alternative":
        cube_r = poly((1, (((1, 1), 1), 4)))
        cube_l = poly((1, (4, ((1, 1), 1))))
        quad_r = poly((1, (((1, 2), 1), 2)))
        quad_l = poly((1, ((1, (1, 2)), 2)))
        return [
            ("quasinil-r", multilinearize(cube_r, {1: [1, 2, 3]})),
            ("quasinil-l", multilinearize(cube_l, {1: [1, 2, 3]})),
            ("quadrnilp-r", multilinearize(quad_r, {1: [1, 3], 2: [2, 4]})),
            ("quadrnilp-l", multilinearize(quad_l, {1: [1, 3], 2: [2, 4]})),
        ]
    if variety == "jordan":
        jordr = poly((1, (((1, 1), 2), 1)))
        cos = poly((1, ((((1, 2), 3), 4), 3)))
        kv = poly((1, (((((1, 2), 3), 2), 4), 1)))
        lin = linearize_partial(jordr, 1, 3)
        return [
            ("square-r", multilinearize(jordr, {1: [1, 3, 4]})),
            ("cos-r", multilinearize(cos, {3: [3, 5]})),
            ("kv-r", multilinearize(kv, {2: [2, 5], 1: [1, 6]})),
            ("square-r-lin", multilinearize(lin, {1: [1, 4]})),
        ]
    if variety == "malcev":
        w_sagle = poly(
            (1, _rtail((4, 5), [1, 2, 3])),
            (-1, _rtail((4, 5), [3, 1, 2])),
        )
        sqr = poly((1, (((1, 2), 1), 2)), (-1, (((1, 2), 2), 1)))
        gen_r = poly(
            (1, ((((1, 2), 3), 1), 2)), (-1, ((((1, 2), 3), 2), 1)),
        )
        gen_e = poly(
            (1, ((((1, 2), 1), 3), 2)), (-1, ((((1, 2), 2), 3), 1)),
        )
        gen_rr = poly(
            (1, (((((1, 2), 3), 1), 4), 2)),
            (-1, (((((1, 2), 3), 2), 4), 1)),
        )
        return [
            ("sagle-w", w_sagle),
            ("sagle-sqr", multilinearize(sqr, {1: [1, 3], 2: [2, 4]})),
            ("sagle-gen(-;-)", multilinearize(sqr, {1: [1, 3], 2: [2, 4]})),
            ("sagle-gen(z;-)", multilinearize(gen_r, {1: [1, 4], 2: [2, 5]})),
            ("sagle-gen(-;z)", multilinearize(gen_e, {1: [1, 4], 2: [2, 5]})),
            ("sagle-gen(z;t)",
             multilinearize(gen_rr, {1: [1, 5], 2: [2, 6]})),
        ]
    if variety in ("metabelian", "eps+", "eps-"):
        return []
    raise ValueError(f"unknown variety {variety!r}")


def smoke_relations(variety: str):
    """Operator relations as keyword packs for operator_relation_holds."""
    if variety == "jordan":
        return [(
            "sup-cos",
            dict(
                lhs=[("R", "x"), ("R", "y"), ("R", "z")],
                rhs=[("R", "z"), ("R", "y"), ("R", "x")],
                slots=[("x", None), ("y", None), ("z", None)],
                seeds="pairs",
                sign=lambda p: (
                    p["x"] * p["y"] + p["x"] * p["z"] + p["y"] * p["z"] + 1
                ),
            ),
        )]
    if variety == "malcev":
        return [
            (
                "sup-sagle-w",
                dict(
                    lhs=[("R", "x"), ("R", "y"), ("R", "z")],
                    rhs=[("R", "z"), ("R", "x"), ("R", "y")],
                    slots=[("x", 1), ("y", 1), ("z", 1)],
                    seeds="pairs",
                ),
            ),
            (
                "sup-sagle-22",
                dict(
                    lhs=[("R", "z"), ("R", "x"), ("R", "y")],
                    rhs=[("R", "z"), ("R", "y"), ("R", "x")],
                    slots=[("x", 1), ("y", 1), ("z", 1)],
                    seeds=("pair", "x", "y"),
                ),
            ),
            (
                "sup-sagle-31",
                dict(
                    lhs=[("R", "x"), ("R", "z"), ("R", "y")],
                    rhs=[("R", "y"), ("R", "z"), ("R", "x")],
                    slots=[("x", 1), ("y", 1), ("z", 1)],
                    seeds=("square", "x"),
                ),
            ),
        ]
    if variety in ("alternative", "metabelian", "eps+", "eps-"):
        return []
    raise ValueError(f"unknown variety {variety!r}")


def run_smoke(entry: CatalogEntry):
    """All smoke equations and relations matching the entry's varieties."""
    results = []
    for v in entry.varieties:
        for nm, p in smoke_equations(v):
            ok, wit = is_superidentity(entry.algebra, p)
            results.append((nm, ok, wit))
        for nm, kw in smoke_relations(v):
            ok, wit = operator_relation_holds(entry.algebra, **kw)
            results.append((nm, ok, wit))
    return results


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

CONSTRUCTORS = {
    "alt_A": alt_A,
    "alt_B": alt_B,
    "alt_Bp": alt_Bp,
    "jord_A": jord_A,
    "jord_Bn": jord_Bn,
    "malc_A": malc_A,
    "malc_An": malc_An,
    "malc_superAn": malc_superAn,
    "malc_barAn": malc_barAn,
    "metab_Ar": metab_Ar,
    "metab_As": metab_As,
    "eps_A": eps_A,
}

FAMILIES = {
    "nilalt_basis_words": nilalt_basis_words,
    "jord_fn": jord_fn,
    "jordan_basis_monomials": jordan_basis_monomials,
    "malc_fn": malc_fn,
    "malc_gn": malc_gn,
}


def standard_entries() -> list[CatalogEntry]:
    """The fixed roster of catalog entries, in conformance order."""
    entries = [alt_A(), alt_B(), alt_Bp(), jord_A()]
    entries += [jord_Bn(n) for n in range(1, 5)]
    entries.append(malc_A())
    entries += [malc_An(n) for n in range(1, 7)]
    entries += [malc_superAn(n) for n in range(1, 6)]
    entries += [malc_barAn(k) for k in range(1, 6)]
    entries += [metab_Ar(r) for r in range(1, 5)]
    entries += [metab_As(s) for s in range(1, 4)]
    entries += [eps_A(1, 10), eps_A(-1, 10)]
    return entries
