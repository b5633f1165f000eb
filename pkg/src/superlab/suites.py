"""Declarative check suites replayed from a TOML manifest.

A check is data, not code: an identifier, a kind, references to an algebra
and a polynomial or a named recipe, and the expected outcome.
`load_manifest` parses the packaged manifest (or any compatible file),
`run_suite` executes one named suite across an optional thread pool, and
the resulting report serializes to JSON whose content is deterministic for
a fixed seed; wall clock timings live under a single top-level key that the
content hash excludes.

Algebra references are `catalog:NAME`, `catalog:NAME(ARGS)`,
`catalog:NAME:ARG:...`, or `file:PATH` (the JSON format of
`superlab.superalgebras.to_json`).  Polynomial references are `lib:NAME`
(optionally `lib:NAME:INDEX`), `family:NAME(ARGS)`, or plain polynomial
text parsed by `superlab.polynomials.parse_poly`.  Symmetric-sum families
are capped at argument 6 unless the caller raises `max_degree`.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from itertools import product as iproduct
from math import factorial
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

from .catalog import (
    CONSTRUCTORS,
    alt_A,
    alt_B,
    alt_Bp,
    conformance,
    eps_A,
    jord_A,
    jord_Bn,
    jord_fn,
    jordan_basis_monomials,
    malc_An,
    malc_barAn,
    malc_fn,
    malc_gn,
    metab_Ar,
    metab_As,
    nilalt_basis_words,
    run_smoke,
)
from .linalg import Echelon
from .polynomials import identity_library, parse_poly, poly, superize
from .scalars import format_scalar, parse_scalar, qeps
from .superalgebras import (
    SuperAlgebra,
    envelope,
    evaluate,
    from_json,
    is_identity,
    is_superidentity,
    mul,
    subalgebra_closure,
)
from .tableaux import (
    YoungTable,
    eps_fkn,
    format_assoc_poly,
    phi,
    phi_row,
    psi,
    psi_col,
    substitute_super,
)

__all__ = [
    "SuiteError",
    "CheckSpec",
    "CheckResult",
    "Report",
    "SUITE_NAMES",
    "KINDS",
    "DEFAULT_SEED",
    "DEFAULT_MAX_DEGREE",
    "load_manifest",
    "run_suite",
    "resolve_entry",
    "resolve_algebra",
    "resolve_polys",
    "parse_element",
    "nilpotence_rank",
    "alternation_values",
    "jordan_chain_value",
    "malcev_f_value",
    "malcev_g_value",
    "bar_case_residuals",
    "rect_value",
    "eps_f_value",
    "endo_vanishing",
    "witness_str",
    "random_graded_algebra",
    "random_multilinear",
    "transfer_agreement",
]

SUITE_NAMES = (
    "alt",
    "jordan",
    "malcev",
    "metabelian",
    "epsilon",
    "young",
    "transfer",
)

DEFAULT_SEED = 20260819
DEFAULT_MAX_DEGREE = 6


class SuiteError(ValueError):
    """A reference, manifest entry, or argument that cannot be used."""


# ---------------------------------------------------------------------------
# Reference resolution
# ---------------------------------------------------------------------------

def _split_call(text: str):
    """``"name"``, ``"name(1,+2)"``, or ``"name:1:2"`` to (name, int args)."""
    text = text.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise SuiteError(f"unbalanced call syntax in {text!r}")
        name, _, inner = text.partition("(")
        inner = inner[:-1]
        parts = [p for p in inner.split(",") if p.strip()]
    else:
        name, *parts = text.split(":")
    try:
        args = tuple(int(p.strip()) for p in parts)
    except ValueError:
        raise SuiteError(f"non-integer argument in {text!r}") from None
    return name.strip(), args


def resolve_entry(ref: str):
    """A ``catalog:`` reference to the catalog entry it names."""
    if not ref.startswith("catalog:"):
        raise SuiteError(f"expected a catalog reference, got {ref!r}")
    name, args = _split_call(ref[len("catalog:"):])
    ctor = CONSTRUCTORS.get(name)
    if ctor is None:
        known = ", ".join(sorted(CONSTRUCTORS))
        raise SuiteError(f"unknown catalog name {name!r} (known: {known})")
    try:
        return ctor(*args)
    except TypeError:
        raise SuiteError(f"wrong argument count for catalog:{name}") from None


def resolve_algebra(ref: str):
    """An algebra reference (``catalog:`` or ``file:``) to a SuperAlgebra."""
    if ref.startswith("catalog:"):
        return resolve_entry(ref).algebra
    if ref.startswith("file:"):
        path = Path(ref[len("file:"):])
        try:
            text = path.read_text()
        except OSError as exc:
            raise SuiteError(f"cannot read algebra file {path}: {exc}") from None
        try:
            return from_json(text)
        except (ValueError, KeyError) as exc:
            raise SuiteError(f"bad algebra JSON in {path}: {exc}") from None
    raise SuiteError(f"unknown algebra reference {ref!r}")


_FAMILY_POLYS = {
    "jord_fn": lambda n: [jord_fn(n)],
    "malc_fn": lambda n: [malc_fn(n)],
    "malc_gn": lambda n: [malc_gn(n)],
    "jordan_basis_monomials": lambda n: list(jordan_basis_monomials(n)),
    "nilalt_basis_words": lambda n: list(nilalt_basis_words(n)),
    "phi_row": lambda r, k: [phi_row(r, k)[0]],
    "psi_col": lambda s, k: [psi_col(s, k)[0]],
    "eps_fkn": lambda k, n: [eps_fkn(k, n)[0]],
}


def resolve_polys(ref: str, max_degree: int = DEFAULT_MAX_DEGREE):
    """A polynomial reference to the list of polynomials it names.

    ``lib:NAME`` is the whole library entry, ``lib:NAME:I`` one member;
    ``family:NAME(ARGS)`` calls a polynomial family, with every argument
    capped at `max_degree` to keep symmetric-group sums bounded; anything
    else is parsed as polynomial text.
    """
    if ref.startswith("lib:"):
        name, args = _split_call(ref[len("lib:"):])
        try:
            polys = identity_library(name)
        except (KeyError, ValueError):
            raise SuiteError(f"unknown identity library {name!r}") from None
        if not args:
            return list(polys)
        if len(args) != 1 or not 0 <= args[0] < len(polys):
            raise SuiteError(f"bad library index in {ref!r}")
        return [polys[args[0]]]
    if ref.startswith("family:"):
        name, args = _split_call(ref[len("family:"):])
        fn = _FAMILY_POLYS.get(name)
        if fn is None:
            known = ", ".join(sorted(_FAMILY_POLYS))
            raise SuiteError(f"unknown family {name!r} (known: {known})")
        if args and max(args) > max_degree:
            raise SuiteError(
                f"family argument {max(args)} exceeds the degree cap "
                f"{max_degree}; raise max_degree to allow it"
            )
        try:
            return fn(*args)
        except TypeError:
            raise SuiteError(f"wrong argument count for family:{name}") from None
    if ref.startswith(("catalog:", "file:")):
        raise SuiteError(f"{ref!r} names an algebra, not a polynomial")
    try:
        return [parse_poly(ref)]
    except ValueError as exc:
        raise SuiteError(f"cannot parse polynomial {ref!r}: {exc}") from None


def parse_element(A, text: str):
    """``"a1"`` or ``"a1+x"`` to the sum of the named basis elements."""
    out = None
    for part in text.split("+"):
        term = A.basis_element(part.strip())
        out = term if out is None else out + term
    if out is None:
        raise SuiteError(f"empty element expression {text!r}")
    return out


# ---------------------------------------------------------------------------
# Named recipes
# ---------------------------------------------------------------------------
#
# Each recipe replays one substitution computation against a catalog entry.
# They are plain functions so that the manifest, the command line, and the
# test suite all drive the same code path.

def _coords_by_label(A, elem) -> dict:
    return {A.labels[k]: c for k, c in sorted(elem.coords.items())}


def _coords_str(coords: dict) -> str:
    if not coords:
        return "0"
    return ", ".join(f"{lab}: {format_scalar(c)}" for lab, c in coords.items())


def nilpotence_rank(n: int, with_cube_term: bool = False):
    """Rank and row count of the nilpotence evaluation matrix.

    Rows are the 2n basis words of degree n (plus, optionally, the summed
    degree-three term) evaluated over the one-odd-generator alternative
    algebra under the substitution family sending one variable at a time to
    a0 or a1 and all others to x.  With the extra term, two more column
    blocks from the degree-three witnesses are appended so the enlarged
    family stays independent.
    """
    words = list(nilalt_basis_words(n))
    if with_cube_term:
        words.append(identity_library("nil3")[0])
    A = alt_A().algebra
    x = A.basis_element("x")
    rows = [{} for _ in words]
    col = 0
    for i in range(1, n + 1):
        for lab, par in (("a0", 0), ("a1", 1)):
            parities = {j: 1 for j in range(1, n + 1)}
            parities[i] = par
            assign = {j: x for j in range(1, n + 1)}
            assign[i] = A.basis_element(lab)
            for r, w in enumerate(words):
                val = evaluate(superize(w, parities), A, assign)
                for k, c in val.coords.items():
                    rows[r][col + k] = c
            col += A.dim
    if with_cube_term:
        blocks = (
            (alt_B().algebra, ("e", "x", "e"), (0, 1, 0)),
            (alt_Bp().algebra, ("y", "x", "z"), (1, 1, 1)),
        )
        for alg, labs, pars in blocks:
            parities = {j + 1: pars[j] for j in range(n)}
            assign = {j + 1: alg.basis_element(labs[j]) for j in range(n)}
            for r, w in enumerate(words):
                val = evaluate(superize(w, parities), alg, assign)
                for k, c in val.coords.items():
                    rows[r][col + k] = c
            col += alg.dim
    ech = Echelon()
    rank = sum(1 for row in rows if ech.add(row))
    return rank, len(words)


def alternation_values(n: int):
    """Each degree-n special monomial under the alternating substitution.

    The lead variable goes to the even element a, the rest alternate
    between the odd elements x and y along the leaf order.  Returns
    (tree, coords) pairs over the four-dimensional bound witness algebra.
    """
    A = jord_A().algebra
    a = A.basis_element("a")
    xy = (A.basis_element("x"), A.basis_element("y"))
    out = []
    for p in jordan_basis_monomials(n):
        m = next(iter(p.terms))
        lv = m.leaves
        assign, parities = {lv[0]: a}, {lv[0]: 0}
        for pos, v in enumerate(lv[1:], start=1):
            assign[v] = xy[(pos + 1) % 2]
            parities[v] = 1
        val = evaluate(superize(p, parities), A, assign)
        out.append((m.tree, _coords_by_label(A, val)))
    return out


def jordan_chain_value(n: int) -> dict:
    """The superized chain polynomial evaluated down the y-e-y ladder.

    In the rank-n Jordan extension the arguments are the unit, then the
    alternating chain y, e1, y, ..., en, y; the expected value is the full
    chain word with coefficient one.
    """
    A = jord_Bn(n).algebra
    f = jord_fn(n)
    y = A.basis_element("y")
    assign = {1: A.basis_element("[1]"), 2: y}
    parities = {1: 0, 2: 1}
    for t in range(1, n + 1):
        assign[2 * t + 1] = A.basis_element(f"e{t}")
        parities[2 * t + 1] = 0
        assign[2 * t + 2] = y
        parities[2 * t + 2] = 1
    val = evaluate(superize(f, parities), A, assign)
    return _coords_by_label(A, val)


def jordan_chain_label(n: int) -> str:
    return "[" + "y" + "".join(f"e{t}y" for t in range(1, n + 1)) + "]"


def malcev_f_value(n: int) -> dict:
    """f_{n+1}(unit, e1, ..., en) in the (n+1)-generator Malcev extension."""
    A = malc_An(n + 1).algebra
    f = malc_fn(n + 1)
    assign = {1: A.basis_element("[1]")}
    for i in range(1, n + 1):
        assign[i + 1] = A.basis_element(f"e{i}")
    val = evaluate(superize(f, {v: 0 for v in assign}), A, assign)
    return _coords_by_label(A, val)


def malcev_g_value(n: int) -> dict:
    """g_n(x, x, y1, ..., yn) in the (n+1)-generator barred extension."""
    A = malc_barAn(n + 1).algebra
    g = malc_gn(n)
    assign = {1: A.basis_element("x"), 2: A.basis_element("x")}
    for i in range(1, n + 1):
        assign[i + 2] = A.basis_element(f"y{i}")
    val = evaluate(superize(g, {v: 1 for v in assign}), A, assign)
    return _coords_by_label(A, val)


def bracket_word_label(n: int) -> str:
    return "[" + "".join(f"e{i}" for i in range(1, n + 1)) + "]"


def bar_case_residuals(k: int):
    """Nonzero residuals of the five operator-word identities, barred case.

    Each residual combines right multiplications by x and the odd
    generators with a barred module word so that a well-defined superized
    product law forces it to vanish; an empty list means all five families
    of case equations hold in the k-generator barred extension.
    """
    A = malc_barAn(k).algebra

    def R(m, lab):
        return mul(A, m, A.basis_element(lab))

    def B(l1, l2):
        return mul(A, A.basis_element(l1), A.basis_element(l2))

    x = A.basis_element("x")
    ys = [l for l in A.labels if l.startswith("y")]
    words = [l for l in A.labels if l.startswith("[~")]
    bad = []
    for i, j in iproduct(ys, repeat=2):
        c1 = R(R(mul(A, x, x), i), j) - R(R(B("x", i), j), "x") - R(
            R(B(j, "x"), "x"), i
        )
        c2 = (
            R(R(B("x", i), "x"), j) - R(R(B(i, "x"), j), "x")
            + R(R(B("x", j), "x"), i) - R(R(B(j, "x"), i), "x")
        )
        if c1.coords:
            bad.append(("square", i, j))
        if c2.coords:
            bad.append(("mixed", i, j))
        for wl in words:
            sg = 1 if wl.count("e") % 2 == 0 else -1
            c3 = R(R(B("x", wl), i), j) - R(R(B(wl, i), j), "x").scale(sg)
            c4 = R(R(B(wl, "x"), i), j) - R(R(B(j, wl), "x"), i).scale(sg)
            c5 = R(R(B(wl, i), "x"), j) - R(R(B(j, wl), i), "x").scale(sg)
            for tag, c in (("xw", c3), ("wx", c4), ("wi", c5)):
                if c.coords:
                    bad.append((tag, i, j, wl))
    return bad


def rect_value(kind: str, size: int, k: int) -> dict:
    """A rectangular symmetrizer polynomial on the matching split extension.

    The row flavor evaluates over the r-row even extension with u -> a0,
    v -> e_r, and the column variables cycling through e1..er; the column
    flavor evaluates over the s-column odd extension with u -> a0,
    v -> y_s, and the column variables cycling through y1..ys.
    """
    if kind == "phi":
        A = metab_Ar(size).algebra
        f, roles = phi_row(size, k)
        vlab, base, par = f"e{size}", "e", 0
    elif kind == "psi":
        A = metab_As(size).algebra
        f, roles = psi_col(size, k)
        vlab, base, par = f"y{size}", "y", 1
    else:
        raise SuiteError(f"unknown rectangular flavor {kind!r}")
    assign = {roles["u"]: A.basis_element("a0"),
              roles["v"]: A.basis_element(vlab)}
    parities = {roles["u"]: 0, roles["v"]: par}
    for c, var in roles["x"].items():
        assign[var] = A.basis_element(f"{base}{((c - 1) % size) + 1}")
        parities[var] = par
    val = evaluate(superize(f, parities), A, assign)
    return _coords_by_label(A, val)


def eps_f_value(k: int, n: int, sign: int) -> dict:
    """The epsilon chain polynomial down the y-w ladder of eps_A(sign, N)."""
    A = eps_A(sign, k * n + 4).algebra
    f, roles = eps_fkn(k, n)
    assign = {roles["u"]: A.basis_element("y1"),
              roles["v"]: A.basis_element("w1")}
    for c, var in roles["x"].items():
        assign[var] = A.basis_element(f"y{c}")
    for i, var in roles["z"].items():
        assign[var] = A.basis_element(f"y{i + 1}")
    val = evaluate(superize(f, {v: 1 for v in assign}), A, assign)
    return _coords_by_label(A, val)


def endo_vanishing(kind: str, r: int, s: int, trials: int, rng) -> int:
    """How many random substitutions fail to kill the threshold symmetrizer.

    For the row flavor the table shape is (r+1) x (rs+s+1); for the column
    flavor it is (rs+r+1) x (s+1).  Substitutions send each letter to one
    of r even and s odd generators of a free metabelian quotient; on shapes
    past the threshold every image must vanish, so any nonzero image counts
    as a failure.
    """
    if kind == "phi":
        rows, cols = r + 1, r * s + s + 1
        op = phi
    elif kind == "psi":
        rows, cols = r * s + r + 1, s + 1
        op = psi
    else:
        raise SuiteError(f"unknown symmetrizer flavor {kind!r}")
    n = rows * cols
    gens = [(f"b{i}", 0) for i in range(r)]
    gens += [(f"c{j}", 1) for j in range(s)]
    t = YoungTable(rows, cols)
    bad = 0
    for _ in range(trials):
        w = list(range(1, n + 1))
        rng.shuffle(w)
        xi = {v: rng.choice(gens) for v in range(1, n + 1)}
        if substitute_super(op(t, tuple(w)), xi) != {}:
            bad += 1
    return bad


def random_graded_algebra(rng, dim: int) -> SuperAlgebra:
    """A sparse graded product table with unit structure coefficients."""
    pars = [rng.randint(0, 1) for _ in range(dim)]
    products = {}
    for i in range(dim):
        for j in range(dim):
            if rng.random() < 0.45:
                want = (pars[i] + pars[j]) % 2
                ks = [k for k in range(dim) if pars[k] == want]
                if ks:
                    products[(i, j)] = {rng.choice(ks): rng.choice([1, -1, 2])}
    labels = [(f"b{i}", pars[i]) for i in range(dim)]
    return SuperAlgebra(f"R{dim}", labels, products)


def _random_tree(rng, leaves):
    if len(leaves) == 1:
        return leaves[0]
    cut = rng.randint(1, len(leaves) - 1)
    return (_random_tree(rng, leaves[:cut]), _random_tree(rng, leaves[cut:]))


def random_multilinear(rng, degree: int):
    """A nonzero multilinear polynomial with one or two signed monomials."""
    while True:
        terms = []
        for _ in range(rng.randint(1, 2)):
            perm = list(range(1, degree + 1))
            rng.shuffle(perm)
            terms.append((rng.choice([1, -1]), _random_tree(rng, tuple(perm))))
        f = poly(*terms)
        if f:
            return f


def transfer_agreement(pairs: int, max_dim: int, max_degree: int, rng):
    """Counts of agreement between the graded check and the envelope check.

    For each random (algebra, polynomial) pair the superized evaluation
    over the graded basis must return the same verdict as the sign-free
    evaluation over a Grassmann envelope of order twice the degree.
    Returns (checked, holding, mismatches).
    """
    checked = holding = mismatches = 0
    for _ in range(pairs):
        A = random_graded_algebra(rng, rng.randint(2, max_dim))
        f = random_multilinear(rng, rng.randint(2, max_degree))
        sup = is_superidentity(A, f)[0]
        env = is_identity(envelope(A, 2 * f.degree), f)[0]
        checked += 1
        holding += sup
        mismatches += sup != env
    return checked, holding, mismatches


# ---------------------------------------------------------------------------
# Check specs and runners
# ---------------------------------------------------------------------------

class CheckSpec:
    """One manifest check: a kind plus its parameters and provenance."""

    __slots__ = ("id", "suite", "kind", "source", "params")

    def __init__(self, id, suite, kind, source="computed", params=None):
        self.id = id
        self.suite = suite
        self.kind = kind
        self.source = source
        self.params = dict(params or {})

    def __repr__(self):
        return f"CheckSpec({self.id!r}, kind={self.kind!r})"


class CheckResult:
    """Outcome of one check: pass flag, a printable detail, and timing."""

    __slots__ = ("id", "suite", "kind", "source", "ok", "detail", "seconds")

    def __init__(self, spec, ok, detail, seconds):
        self.id = spec.id
        self.suite = spec.suite
        self.kind = spec.kind
        self.source = spec.source
        self.ok = bool(ok)
        self.detail = detail
        self.seconds = seconds

    def row(self) -> dict:
        return {
            "id": self.id,
            "suite": self.suite,
            "kind": self.kind,
            "source": self.source,
            "ok": self.ok,
            "detail": self.detail,
        }


class _Ctx:
    __slots__ = ("seed", "max_degree")

    def __init__(self, seed, max_degree):
        self.seed = seed
        self.max_degree = max_degree

    def rng(self, check_id: str) -> random.Random:
        digest = hashlib.sha256(f"{self.seed}:{check_id}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))


def witness_str(w) -> str:
    value = w.value
    if isinstance(value, dict):
        shown = _coords_str(value)
    else:
        shown = repr(value)
    return (f"parities={list(w.parities)} labels={list(w.labels)} "
            f"value=({shown})")


def _expect(params) -> str:
    expect = params.get("expect", "holds")
    if expect not in ("holds", "fails"):
        raise SuiteError(f"expect must be 'holds' or 'fails', got {expect!r}")
    return expect


def _run_vanishing(spec, ctx, checker):
    p = spec.params
    A = resolve_algebra(p["algebra"])
    polys = resolve_polys(p["poly"], ctx.max_degree)
    expect = _expect(p)
    first = None
    for f in polys:
        ok, w = checker(A, f)
        if not ok:
            first = w
            break
    if expect == "holds":
        if first is None:
            return True, f"{len(polys)} polynomial(s) vanish identically"
        return False, "witness " + witness_str(first)
    if first is None:
        return False, "holds, but a witness was expected"
    return True, "fails as expected; witness " + witness_str(first)


def _run_identity(spec, ctx):
    return _run_vanishing(spec, ctx, is_identity)


def _run_superidentity(spec, ctx):
    return _run_vanishing(spec, ctx, is_superidentity)


def _run_evaluation(spec, ctx):
    p = spec.params
    A = resolve_algebra(p["algebra"])
    polys = resolve_polys(p["poly"], ctx.max_degree)
    if len(polys) != 1:
        raise SuiteError(f"{spec.id}: evaluation needs a single polynomial")
    assign, parities = {}, {}
    raw_par = p.get("parities", {})
    for key, expr in p["assign"].items():
        v = int(key)
        assign[v] = parse_element(A, str(expr))
        parities[v] = int(raw_par.get(key, 0))
    val = evaluate(superize(polys[0], parities), A, assign)
    got = _coords_by_label(A, val)
    want = {lab: parse_scalar(s) for lab, s in p.get("equals", {}).items()}
    return got == want, _coords_str(got)


def _run_closure(spec, ctx):
    p = spec.params
    A = resolve_algebra(p["algebra"])
    gens = [parse_element(A, g) for g in p["generators"]]
    dim, _ = subalgebra_closure(A, gens)
    return dim == int(p["equals"]), f"closure dimension {dim} of {A.dim}"


def _run_conformance(spec, ctx):
    entry = resolve_entry(spec.params["algebra"])
    rep = conformance(entry)
    return rep.ok, rep.summary()


def _run_smoke(spec, ctx):
    entry = resolve_entry(spec.params["algebra"])
    rows = run_smoke(entry)
    bad = [nm for nm, ok, _ in rows if not ok]
    if bad:
        return False, "failed: " + ", ".join(bad)
    return True, f"{len(rows)} smoke relation(s) hold"


def _run_kernel(spec, ctx):
    p = spec.params
    rank, nrows = nilpotence_rank(int(p["n"]), bool(p.get("with_cube_term")))
    return rank == nrows, f"rank {rank} of {nrows} rows"


def _run_alternation(spec, ctx):
    n = int(spec.params["n"])
    targets = set(spec.params.get("targets", ["v", "a"]))
    one = qeps(1, 0)
    signs = {1: 0, -1: 0}
    for tree, coords in alternation_values(n):
        if len(coords) != 1:
            return False, f"{tree} gave {_coords_str(coords)}"
        (lab, c), = coords.items()
        if lab not in targets or c not in (one, -one):
            return False, f"{tree} gave {_coords_str(coords)}"
        signs[1 if c == one else -1] += 1
    return True, (f"all {signs[1] + signs[-1]} monomials hit a signed "
                  f"generator (+{signs[1]}/-{signs[-1]})")


def _run_cases(spec, ctx):
    k = int(spec.params["k"])
    bad = bar_case_residuals(k)
    if bad:
        return False, f"{len(bad)} nonzero residuals, first {bad[0]}"
    return True, "all five case families vanish"


def _run_jordan_chain(spec, ctx):
    n = int(spec.params["n"])
    got = jordan_chain_value(n)
    want = {jordan_chain_label(n): qeps(1, 0)}
    return got == want, _coords_str(got)


def _run_malcev_f(spec, ctx):
    n = int(spec.params["n"])
    got = malcev_f_value(n)
    want = {bracket_word_label(n): qeps(2 * factorial(n), 0)}
    return got == want, _coords_str(got)


def _run_malcev_g(spec, ctx):
    n = int(spec.params["n"])
    got = malcev_g_value(n)
    want = {bracket_word_label(n): qeps(factorial(n), 0)}
    return got == want, _coords_str(got)


def _run_rect_value(spec, ctx):
    p = spec.params
    got = rect_value(p["flavor"], int(p["size"]), int(p["k"]))
    want = {lab: parse_scalar(s) for lab, s in p["equals"].items()}
    return got == want, _coords_str(got)


def _run_epsilon_f(spec, ctx):
    p = spec.params
    k, n, sign = int(p["k"]), int(p["n"]), int(p["sign"])
    got = eps_f_value(k, n, sign)
    want = {f"w{k * n + 1}": qeps(1, 0)}
    return got == want, _coords_str(got)


def _run_endo(spec, ctx):
    p = spec.params
    trials = int(p.get("trials", 50))
    rng = ctx.rng(spec.id)
    bad = endo_vanishing(p["flavor"], int(p["r"]), int(p["s"]), trials, rng)
    if bad:
        return False, f"{bad} of {trials} substitutions survived"
    return True, f"all {trials} random substitutions vanish"


def _run_tableau(spec, ctx):
    p = spec.params
    op = {"phi": phi, "psi": psi}.get(p["fn"])
    if op is None:
        raise SuiteError(f"unknown symmetrizer {p['fn']!r}")
    word = tuple(int(tk) for tk in str(p["word"]).split())
    t = YoungTable(int(p["rows"]), int(p["cols"]))
    got = format_assoc_poly(op(t, word))
    ok = got == p["equals"]
    detail = got if len(got) <= 100 else got[:97] + "..."
    return ok, detail


def _run_tableau_sym(spec, ctx):
    p = spec.params
    trials = int(p.get("trials", 4))
    rng = ctx.rng(spec.id)
    shapes = [tuple(sh) for sh in p["shapes"]]
    failures = []
    for k, m in shapes:
        size = k * m
        for _ in range(trials):
            cells = list(range(1, size + 1))
            rng.shuffle(cells)
            filling = [cells[i * m:(i + 1) * m] for i in range(k)]
            t = YoungTable(k, m, filling)
            word = list(range(1, size + 1))
            rng.shuffle(word)
            if k > 1:
                col = t.col_sets()[rng.randrange(m)]
                a, b = rng.sample(col, 2)
                q = phi(t, word)
                if q.rename({a: b, b: a}) != -q:
                    failures.append(("phi", k, m))
            if m > 1:
                row = t.row_sets()[rng.randrange(k)]
                a, b = rng.sample(row, 2)
                q = psi(t, word)
                if q.rename({a: b, b: a}) != q:
                    failures.append(("psi", k, m))
    if failures:
        return False, f"{len(failures)} swaps broke symmetry, first {failures[0]}"
    total = len(shapes) * trials
    return True, (f"column swaps flip phi, row swaps fix psi "
                  f"({total} fillings per flavor)")


def _run_transfer(spec, ctx):
    p = spec.params
    rng = ctx.rng(spec.id)
    checked, holding, mismatches = transfer_agreement(
        int(p.get("pairs", 200)), int(p.get("max_dim", 4)),
        int(p.get("max_degree", 4)), rng,
    )
    if mismatches:
        return False, f"{mismatches} of {checked} verdicts disagree"
    return True, (f"{checked} pairs agree between graded and envelope "
                  f"checks ({holding} hold)")


KINDS = {
    "identity": _run_identity,
    "superidentity": _run_superidentity,
    "evaluation": _run_evaluation,
    "closure": _run_closure,
    "transfer": _run_transfer,
    "tableau": _run_tableau,
    "conformance": _run_conformance,
    "smoke": _run_smoke,
    "kernel": _run_kernel,
    "alternation": _run_alternation,
    "cases": _run_cases,
    "jordan_chain": _run_jordan_chain,
    "malcev_f": _run_malcev_f,
    "malcev_g": _run_malcev_g,
    "rect_value": _run_rect_value,
    "epsilon_f": _run_epsilon_f,
    "endo": _run_endo,
    "tableau_sym": _run_tableau_sym,
}

_SOURCES = ("stated", "computed", "definition")


# ---------------------------------------------------------------------------
# Manifest loading
# ---------------------------------------------------------------------------

def _packaged_manifest_text() -> str:
    return resources.files("superlab").joinpath("suites.toml").read_text()


def load_manifest(path=None) -> list:
    """Parse a manifest into CheckSpecs, expanding `algebras` lists."""
    if path is None:
        text = _packaged_manifest_text()
        where = "packaged manifest"
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise SuiteError(f"cannot read manifest {path}: {exc}") from None
        where = str(path)
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SuiteError(f"bad TOML in {where}: {exc}") from None
    if data.get("schema") != 1:
        raise SuiteError(f"{where}: unsupported manifest schema "
                         f"{data.get('schema')!r}")
    specs = []
    seen = set()
    for raw in data.get("check", []):
        raw = dict(raw)
        try:
            cid = raw.pop("id")
            suite = raw.pop("suite")
            kind = raw.pop("kind")
        except KeyError as exc:
            raise SuiteError(f"{where}: check missing field {exc}") from None
        source = raw.pop("source", "computed")
        if suite not in SUITE_NAMES:
            raise SuiteError(f"{where}: {cid}: unknown suite {suite!r}")
        if kind not in KINDS:
            raise SuiteError(f"{where}: {cid}: unknown kind {kind!r}")
        if source not in _SOURCES:
            raise SuiteError(f"{where}: {cid}: unknown source {source!r}")
        targets = raw.pop("algebras", None)
        expanded = [raw]
        if targets is not None:
            expanded = []
            for ref in targets:
                short = ref.split(":", 1)[-1]
                expanded.append(dict(raw, algebra=ref, _suffix=f"[{short}]"))
        for params in expanded:
            suffix = params.pop("_suffix", "")
            full = cid + suffix
            if full in seen:
                raise SuiteError(f"{where}: duplicate check id {full!r}")
            seen.add(full)
            specs.append(CheckSpec(full, suite, kind, source, params))
    if not specs:
        raise SuiteError(f"{where}: no checks declared")
    return specs


# ---------------------------------------------------------------------------
# Running and reporting
# ---------------------------------------------------------------------------

class Report:
    """Deterministic summary of one suite run.

    `payload` holds everything a fixed seed pins byte for byte; `to_json`
    appends the content hash of the payload and a timing block that the
    hash does not cover.
    """

    __slots__ = ("suite", "seed", "max_degree", "results", "elapsed")

    def __init__(self, suite, seed, max_degree, results, elapsed):
        self.suite = suite
        self.seed = seed
        self.max_degree = max_degree
        self.results = results
        self.elapsed = elapsed

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def payload(self) -> dict:
        from . import __version__
        passed = sum(r.ok for r in self.results)
        return {
            "schema": 1,
            "tool": "superlab",
            "version": __version__,
            "suite": self.suite,
            "seed": self.seed,
            "max_degree": self.max_degree,
            "counts": {
                "checks": len(self.results),
                "passed": passed,
                "failed": len(self.results) - passed,
            },
            "ok": self.ok,
            "checks": [r.row() for r in self.results],
        }

    def content_hash(self) -> str:
        canon = json.dumps(self.payload(), sort_keys=True,
                           separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()

    def to_json(self) -> str:
        obj = self.payload()
        obj["hash"] = self.content_hash()
        obj["timing"] = {
            "total": round(self.elapsed, 3),
            "checks": {r.id: round(r.seconds, 3) for r in self.results},
        }
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"

    def summary(self) -> str:
        passed = sum(r.ok for r in self.results)
        word = "pass" if self.ok else "FAIL"
        return (f"suite {self.suite}: {word} "
                f"({passed}/{len(self.results)} checks, "
                f"{self.elapsed:.2f}s)")


def _run_one(spec, ctx) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = KINDS[spec.kind](spec, ctx)
    except SuiteError:
        raise
    except Exception as exc:  # a crashed check is a failed check
        ok, detail = False, f"error: {type(exc).__name__}: {exc}"
    return CheckResult(spec, ok, detail, time.perf_counter() - start)


def run_suite(suite="all", manifest=None, jobs=1, seed=None,
              max_degree=DEFAULT_MAX_DEGREE) -> Report:
    """Run one named suite (or every suite) and assemble its report.

    `manifest` is a path to a TOML manifest, or None for the packaged one.
    Checks may run across `jobs` worker threads; results keep manifest
    order either way, so reports are canonical.
    """
    if suite != "all" and suite not in SUITE_NAMES:
        known = ", ".join(("all",) + SUITE_NAMES)
        raise SuiteError(f"unknown suite {suite!r} (known: {known})")
    specs = load_manifest(manifest)
    if suite != "all":
        specs = [s for s in specs if s.suite == suite]
        if not specs:
            raise SuiteError(f"suite {suite!r} has no checks in the manifest")
    if seed is None:
        seed = DEFAULT_SEED
    ctx = _Ctx(int(seed), int(max_degree))
    start = time.perf_counter()
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=int(jobs)) as pool:
            results = list(pool.map(lambda s: _run_one(s, ctx), specs))
    else:
        results = [_run_one(s, ctx) for s in specs]
    return Report(suite, ctx.seed, ctx.max_degree, results,
                  time.perf_counter() - start)
