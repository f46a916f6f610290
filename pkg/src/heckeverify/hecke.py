"""Extended affine Weyl group and exact Hecke arithmetic at small rank.

An element here is a pair (w, x) standing for w * t_x, with w in the finite
Weyl group and x a weight-lattice vector in fundamental-weight coordinates.
Lengths come from the positive-root double sum, so the affine simple
reflection is the reflection through the wall of the highest short root and
the length-zero subgroup is found by brute search over forced candidates.

Hecke coefficients are integer Laurent polynomials in a formal v with
v^2 = q, which keeps the half-integer powers of the normalized translation
elements exact.  Products fold reduced words one generator at a time, from
whichever side is cheaper; everything stays in the generic Laurent ring and
numeric specialization is left to callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import build, parse_type
from .weyl import WeylElement, enumerate_group


class HeckeError(ValueError):
    """Raised for unsupported ranks, blown budgets, or bad scalar patterns."""


DEFAULT_TERM_BUDGET = 100_000
PRODUCT_RANK_CAP = 2
DD_RANK_CAP = 3


# ---------------------------------------------------------------------------
# scalars


class Laurent:
    """Integer Laurent polynomial in v, where v^2 = q."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {e: k for e, k in (c or {}).items() if k}

    @classmethod
    def unit(cls) -> "Laurent":
        return cls({0: 1})

    @classmethod
    def q_power(cls, e) -> "Laurent":
        """q^e as a monomial; e may be a half-integer times 2 staying whole."""
        two = 2 * e
        if two != int(two):
            raise HeckeError(f"exponent {e} is not a half-integer")
        return cls({int(two): 1})

    def __add__(self, o: "Laurent") -> "Laurent":
        out = dict(self.c)
        for e, k in o.c.items():
            out[e] = out.get(e, 0) + k
        return Laurent(out)

    def __sub__(self, o: "Laurent") -> "Laurent":
        out = dict(self.c)
        for e, k in o.c.items():
            out[e] = out.get(e, 0) - k
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -k for e, k in self.c.items()})

    def __mul__(self, o: "Laurent") -> "Laurent":
        out = {}
        for e1, k1 in self.c.items():
            for e2, k2 in o.c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + k1 * k2
        return Laurent(out)

    def shift(self, k: int) -> "Laurent":
        """Multiply by v^k."""
        return Laurent({e + k: c for e, c in self.c.items()})

    def __eq__(self, o) -> bool:
        return isinstance(o, Laurent) and self.c == o.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __bool__(self) -> bool:
        return bool(self.c)

    def at_q1(self) -> int:
        return sum(self.c.values())

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for e, k in sorted(self.c.items()):
            if e == 0:
                bits.append(f"{k}")
            elif e % 2 == 0:
                bits.append(f"{k}*q^{e // 2}")
            else:
                bits.append(f"{k}*q^({e}/2)")
        return " + ".join(bits)


L_ONE = Laurent({0: 1})
L_Q = Laurent({2: 1})
L_QINV = Laurent({-2: 1})
L_QM1 = Laurent({2: 1, 0: -1})          # q - 1
L_QINV_M1 = Laurent({-2: 1, 0: -1})     # q^-1 - 1


# ---------------------------------------------------------------------------
# the extended affine Weyl group


@dataclass(frozen=True)
class ExtAffine:
    """w * t_x with x in fundamental-weight coordinates."""

    w: WeylElement
    x: tuple

    def __mul__(self, o: "ExtAffine") -> "ExtAffine":
        # (w, x)(w', x') = (ww', w'^{-1}(x) + x')
        pre = _weight_preimage(o.w, self.x)
        return ExtAffine(self.w * o.w, tuple(a + b for a, b in zip(pre, o.x)))

    def inverse(self) -> "ExtAffine":
        wx = self.w.apply_weight(self.x)
        return ExtAffine(self.w.inverse(), tuple(-int(a) for a in wx))

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.x)


def _weight_preimage(w: WeylElement, x):
    """w^{-1}(x) in weight coordinates, via <w^{-1}x, a_j^> = <x, w(a_j)^>."""
    rs = w.rs
    cr = _coroot_rows(rs.rstype)
    return tuple(sum(a * c for a, c in zip(x, cr[w.images[j]]))
                 for j in range(rs.rank))


@lru_cache(maxsize=None)
def _coroot_rows(rstype):
    rs = build(rstype)
    return {r: rs.coroot_coords(r) for r in rs.all_roots}


def ext_identity(rs) -> ExtAffine:
    return ExtAffine(WeylElement.identity(rs), (0,) * rs.rank)


def ext_translation(rs, x) -> ExtAffine:
    return ExtAffine(WeylElement.identity(rs), tuple(int(a) for a in x))


# Weyl elements compare by their images alone, so same-rank elements from
# different root systems can collide; every cache key carries the type.
_LENGTH_CACHE: dict = {}


def length(elem: ExtAffine) -> int:
    """Sum over positive roots of |<x,a^>+1| or |<x,a^>| by the sign of w(a)."""
    rs = elem.w.rs
    key = (rs.rstype, elem)
    got = _LENGTH_CACHE.get(key)
    if got is not None:
        return got
    cr = _coroot_rows(rs.rstype)
    tot = 0
    for a in rs.positive_roots:
        img = elem.w.apply_root(a)
        pair = sum(xi * ci for xi, ci in zip(elem.x, cr[a]))
        if any(c < 0 for c in img):
            tot += abs(pair + 1)
        else:
            tot += abs(pair)
    _LENGTH_CACHE[key] = tot
    return tot


def is_dominant(rs, x) -> bool:
    """Nonnegative pairing with every simple coroot; in weight coordinates
    that is just coordinatewise nonnegativity."""
    return all(int(a) >= 0 for a in x)


def highest_short_root(rs):
    short = min(rs.norm2(s) for s in rs.simples)
    hi = None
    for r in rs.positive_roots:         # ordered by height
        if rs.norm2(r) == short:
            hi = r
    return hi


@lru_cache(maxsize=None)
def affine_generators(rstype):
    """(r_0, r_1, ..., r_n); index i >= 1 is the finite reflection in a_i,
    r_0 reflects through the affine wall of the highest short root."""
    rs = build(rstype)
    zero = (0,) * rs.rank
    gens = [None]
    for j in range(rs.rank):
        gens.append(ExtAffine(WeylElement.simple(rs, j), zero))
    beta = highest_short_root(rs)
    cb = rs.coroot_coords(beta)
    images = []
    for j in range(rs.rank):
        k = sum(cb[i] * rs.cartan[j][i] for i in range(rs.rank))
        images.append(tuple(a - k * b for a, b in
                            zip(rs.simples[j], beta)))
    minus_beta = tuple(-rs.pairing(beta, j) for j in range(rs.rank))
    gens[0] = ExtAffine(WeylElement(rs, images), minus_beta)
    for g in gens:
        assert length(g) == 1
    return tuple(gens)


@lru_cache(maxsize=None)
def omega_group(rstype):
    """The length-zero subgroup, one element per weight/root lattice coset.

    A length-zero (w, x) forces <x, a_j^> to be 0 on each simple root kept
    positive by w and -1 on each simple root inverted, so there is exactly
    one candidate x per w and a sweep over the finite group finds all of
    them.  The count must equal the Cartan determinant."""
    rs = build(rstype)
    target = rs.center_order()
    out = [ext_identity(rs)]
    if target > 1:
        for w in enumerate_group(rs):
            if w.is_identity():
                continue
            x = tuple(0 if all(c >= 0 for c in w.images[j]) else -1
                      for j in range(rs.rank))
            e = ExtAffine(w, x)
            if length(e) == 0:
                out.append(e)
    if len(out) != target:
        raise HeckeError(
            f"found {len(out)} length-zero elements in {rstype}, "
            f"expected {target}")
    out.sort(key=lambda e: (e.x, e.w.images))
    return tuple(out)


def _factor(elem: ExtAffine):
    """elem = omega * r_{j_1} ... r_{j_m} with the word reduced."""
    return _factor_for(elem.w.rs.rstype, elem)


@lru_cache(maxsize=1 << 18)
def _factor_for(rstype, elem: ExtAffine):
    gens = affine_generators(rstype)
    tail = []
    e = elem
    le = length(e)
    while le:
        for i in range(len(gens)):
            er = e * gens[i]
            ler = length(er)
            if ler < le:
                assert ler == le - 1
                e, le = er, ler
                tail.append(i)
                break
        else:
            raise AssertionError("element of positive length with no descent")
    return e, tuple(reversed(tail))


def tau_rotation(rstype):
    """The length-zero element rotating the affine diagram one step.

    In this module's apply-right-first composition its conjugation sends
    r_{i+1} to r_i (indices mod n+1); read with composition in the opposite
    order that is the usual shift of every generator index up by one."""
    gens = affine_generators(rstype)
    n1 = len(gens)
    for om in omega_group(rstype):
        if om.is_identity():
            continue
        inv = om.inverse()
        if all(om * gens[(i + 1) % n1] * inv == gens[i] for i in range(n1)):
            return om
    raise HeckeError(f"no one-step diagram rotation in {rstype}")


# ---------------------------------------------------------------------------
# Hecke elements


class HeckeElement:
    """Finitely supported map from extended-affine elements to scalars."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs, terms=None):
        self.rs = rs
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, rs) -> "HeckeElement":
        return cls(rs, {ext_identity(rs): L_ONE})

    @classmethod
    def basis(cls, rs, elem: ExtAffine, coeff: Laurent = L_ONE) -> "HeckeElement":
        return cls(rs, {elem: coeff})

    def scale(self, coeff: Laurent) -> "HeckeElement":
        return HeckeElement(self.rs, {e: c * coeff for e, c in self.terms.items()})

    def __add__(self, o: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for e, c in o.terms.items():
            got = out.get(e)
            out[e] = c if got is None else got + c
        return HeckeElement(self.rs, out)

    def __sub__(self, o: "HeckeElement") -> "HeckeElement":
        return self + o.scale(Laurent({0: -1}))

    def __mul__(self, o: "HeckeElement") -> "HeckeElement":
        return hecke_mul(self, o)

    def __eq__(self, o) -> bool:
        return (isinstance(o, HeckeElement) and self.rs is o.rs
                and self.terms == o.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def at_q1(self):
        """Specialize q to 1: a plain group-algebra element over the integers."""
        out = {}
        for e, c in self.terms.items():
            k = c.at_q1()
            if k:
                out[e] = k
        return out

    def __repr__(self):
        return f"HeckeElement({len(self.terms)} terms)"


# one-generator moves recur across every fold, so they are memoized as
# (neighbor, length went up) pairs
_STEP_CACHE: dict = {}


def _step(rs, e, i, left):
    key = (rs.rstype, e, i, left)
    got = _STEP_CACHE.get(key)
    if got is None:
        r = affine_generators(rs.rstype)[i]
        er = (r * e) if left else (e * r)
        got = (er, length(er) > length(e))
        _STEP_CACHE[key] = got
    return got


def _fold_gen(rs, terms, i, left=False):
    """terms * T_{r_i} (or the mirror product) by the quadratic relation."""
    out = {}
    for e, c in terms.items():
        er, up = _step(rs, e, i, left)
        if up:
            got = out.get(er)
            out[er] = c if got is None else got + c
        else:
            got = out.get(e)
            add = c.shift(2) - c          # times q - 1
            out[e] = add if got is None else got + add
            got = out.get(er)
            add = c.shift(2)              # times q
            out[er] = add if got is None else got + add
    return out


def hecke_mul(a: HeckeElement, b: HeckeElement,
              term_budget: int = DEFAULT_TERM_BUDGET) -> HeckeElement:
    """Exact product; folds the factor with the shorter total word length."""
    if a.rs is not b.rs:
        raise HeckeError("factors live over different root systems")
    rs = a.rs
    cost_a = sum(length(e) for e in a.terms)
    cost_b = sum(length(e) for e in b.terms)
    out: dict = {}
    if cost_b <= cost_a:
        for eb, cb in b.terms.items():
            om, word = _factor(eb)
            part = {e * om: c * cb for e, c in a.terms.items()}
            for j in word:
                part = _fold_gen(rs, part, j)
            for e, c in part.items():
                got = out.get(e)
                out[e] = c if got is None else got + c
            if len(out) > term_budget:
                raise HeckeError(
                    f"product support exceeded the {term_budget}-term budget")
    else:
        for ea, ca in a.terms.items():
            om, word = _factor(ea)
            part = {e: c * ca for e, c in b.terms.items()}
            for j in reversed(word):
                part = _fold_gen(rs, part, j, left=True)
            part = {om * e: c for e, c in part.items()}
            for e, c in part.items():
                got = out.get(e)
                out[e] = c if got is None else got + c
            if len(out) > term_budget:
                raise HeckeError(
                    f"product support exceeded the {term_budget}-term budget")
    return HeckeElement(rs, out)


@lru_cache(maxsize=4096)
def _basis_inverse(rstype, elem: ExtAffine) -> HeckeElement:
    """T_elem^{-1}, from T_r^{-1} = q^{-1} T_r + (q^{-1} - 1)."""
    rs = build(rstype)
    om, word = _factor(elem)
    h = HeckeElement.unit(rs)
    for j in reversed(word):
        folded = _fold_gen(rs, h.terms, j)
        part = {e: c.shift(-2) for e, c in folded.items()}
        for e, c in h.terms.items():
            add = c.shift(-2) - c
            got = part.get(e)
            part[e] = add if got is None else got + add
        h = HeckeElement(rs, part)
    inv = om.inverse()
    return HeckeElement(rs, {e * inv: c for e, c in h.terms.items()})


def basis_inverse(rs, elem: ExtAffine) -> HeckeElement:
    return _basis_inverse(rs.rstype, elem)


# ---------------------------------------------------------------------------
# Bernstein elements


def _theta_parts(rs, x):
    """Canonical decomposition x = y - z with y, z dominant."""
    x = tuple(int(a) for a in x)
    z = tuple(max(0, -a) for a in x)
    y = tuple(a + b for a, b in zip(x, z))
    return y, z


@lru_cache(maxsize=4096)
def _theta(rstype, x) -> HeckeElement:
    rs = build(rstype)
    y, z = _theta_parts(rs, x)
    ty = ext_translation(rs, y)
    tz = ext_translation(rs, z)
    head = HeckeElement.basis(rs, ty, Laurent({length(tz) - length(ty): 1}))
    if not any(z):
        return head
    return hecke_mul(head, basis_inverse(rs, tz))


def theta(rs, x) -> HeckeElement:
    """theta_x = q^{(l(z)-l(y))/2} T_y T_z^{-1} for the canonical y, z."""
    if rs.rank > PRODUCT_RANK_CAP:
        raise HeckeError(
            f"rank {rs.rank} is over the rank-{PRODUCT_RANK_CAP} product cap")
    return _theta(rs.rstype, tuple(int(a) for a in x))


def weyl_orbit(rs, x):
    """The finite-group orbit of a weight, sorted for determinism."""
    out = {tuple(int(a) for a in w.apply_weight(x)) for w in enumerate_group(rs)}
    return sorted(out)


def central_sum(rs, x) -> HeckeElement:
    """S_x, the orbit sum of theta over the finite-group orbit of x."""
    if not is_dominant(rs, x):
        raise HeckeError(f"{x} is not dominant")
    out = HeckeElement(rs)
    for y in weyl_orbit(rs, x):
        out = out + theta(rs, y)
    return out


def build_D_Dprime(rs):
    """The two spanning sums over the finite group, with their eigen-relations
    under every finite generator checked in the generic ring."""
    if rs.rank > DD_RANK_CAP:
        raise HeckeError(f"rank {rs.rank} is over the rank-{DD_RANK_CAP} cap")
    zero = (0,) * rs.rank
    d_terms = {}
    dp_terms = {}
    for w in enumerate_group(rs):
        lw = w.length()
        e = ExtAffine(w, zero)
        d_terms[e] = L_ONE
        dp_terms[e] = Laurent({-2 * lw: (-1) ** lw})
    d = HeckeElement(rs, d_terms)
    dp = HeckeElement(rs, dp_terms)
    minus = Laurent({0: -1})
    for j in range(rs.rank):
        tr = HeckeElement.basis(rs, affine_generators(rs.rstype)[j + 1])
        if hecke_mul(tr, d) != d.scale(L_Q) or hecke_mul(d, tr) != d.scale(L_Q):
            raise HeckeError(f"spanning sum failed the q eigen-relation at {j}")
        if (hecke_mul(tr, dp) != dp.scale(minus)
                or hecke_mul(dp, tr) != dp.scale(minus)):
            raise HeckeError(f"alternating sum failed the -1 eigen-relation at {j}")
    return d, dp


# ---------------------------------------------------------------------------
# one-dimensional characters


@lru_cache(maxsize=None)
def _bond_orders(rstype):
    """m(i, j) for the affine generators; None when the product never closes
    (the rank-one affine group, where the two walls are parallel)."""
    gens = affine_generators(rstype)
    out = {}
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            prod = gens[i] * gens[j]
            e = prod
            m = 1
            while m <= 6 and not e.is_identity():
                e = e * prod
                m += 1
            out[(i, j)] = m if m <= 6 else None
    return out


def braid_classes(rstype):
    """Affine generator indices grouped by odd-bond connectivity; a
    one-dimensional character must be constant on each group."""
    gens = affine_generators(rstype)
    bonds = _bond_orders(rstype)
    parent = list(range(len(gens)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (i, j), m in bonds.items():
        if m is not None and m % 2 == 1:
            parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(len(gens)):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(g) for g in groups.values())


def one_dim_character(rstype, assignment) -> dict:
    """Scalar of theta on each simple root under T_{r_i} -> assignment[i].

    assignment maps every affine generator index (0 = affine node) to "q" or
    "-1".  The translation by a simple root has equal length-zero parts in
    both halves of its canonical decomposition, so the scalar is read off the
    two reduced words with no Hecke arithmetic:
    q^{(l(z)-l(y))/2} * prod(word of y) / prod(word of z)."""
    rstype = parse_type(rstype) if isinstance(rstype, str) else rstype
    rs = build(rstype)
    n1 = rs.rank + 1
    if sorted(assignment) != list(range(n1)):
        raise HeckeError(f"assignment must cover generator indices 0..{rs.rank}")
    vals = {}
    for i, v in assignment.items():
        if v not in ("q", "-1"):
            raise HeckeError(f"scalar at index {i} must be 'q' or '-1'")
        vals[i] = v
    for group in braid_classes(rstype):
        if len({vals[i] for i in group}) > 1:
            raise HeckeError(
                f"generators {group} are braid-linked by an odd bond and "
                f"must act by the same scalar")
    out = {}
    for i in range(rs.rank):
        x = tuple(rs.cartan[i])     # the simple root in weight coordinates
        y, z = _theta_parts(rs, x)
        ty = ext_translation(rs, y)
        tz = ext_translation(rs, z)
        om_y, word_y = _factor(ty)
        om_z, word_z = _factor(tz)
        if om_y != om_z:
            raise AssertionError(
                "translations by weights in the same root-lattice coset "
                "must share their length-zero part")
        sign = 1
        qexp2 = length(tz) - length(ty)     # twice the exponent of q
        for j in word_y:
            if vals[j] == "q":
                qexp2 += 2
            else:
                sign = -sign
        for j in word_z:
            if vals[j] == "q":
                qexp2 -= 2
            else:
                sign = -sign
        out[i + 1] = Laurent({qexp2: sign})
    return out


# ---------------------------------------------------------------------------
# recorded word identities


def _a_type_word(n, i):
    """Letters (1-based finite generators) of the recorded type-A word for
    the i-th fundamental translation: blocks [a .. a+i-1] for a = n+1-i
    down to 1."""
    word = []
    for a in range(n + 1 - i, 0, -1):
        word.extend(range(a, a + i))
    return word


F4_WORD = (0, 4, 3, 2, 1, 3, 4, 2, 3, 2, 4, 3, 1, 2, 3, 4)
G2_WORDS = {1: (0, 1, 2, 1, 2, 1), 2: (0, 1, 2, 1, 2, 0, 1, 2, 1, 2)}


def _word_product(rs, gens, word, prefix=None):
    e = prefix if prefix is not None else ext_identity(rs)
    for j in word:
        e = e * gens[j]
    return e


def verify_translation_words():
    """Check every recorded translation word against the group law.

    Each record confirms the word lands on the right translation and that
    its letter count equals the translation's length, so the corresponding
    Hecke product is length-additive and the operator identity follows."""
    records = []

    def rec(name, ok, statement):
        records.append({"name": name, "status": "pass" if ok else "fail",
                        "statement": statement})

    for n in range(1, 5):
        rstype = parse_type(f"A{n}")
        rs = build(rstype)
        gens = affine_generators(rstype)
        tau = tau_rotation(rstype)
        for i in range(1, n + 1):
            word = _a_type_word(n, i)
            prefix = ext_identity(rs)
            for _ in range(n + 1 - i):
                prefix = prefix * tau
            got = _word_product(rs, gens, word, prefix)
            target = ext_translation(rs, tuple(int(j == i - 1)
                                               for j in range(n)))
            ok = (got == target and length(target) == len(word)
                  and len(word) == i * (n + 1 - i))
            rec(f"A{n} word x{i}", ok,
                f"rotation power {n + 1 - i} then {len(word)} letters lands "
                f"on the fundamental translation x{i}, length {i * (n + 1 - i)}")
    rstype = parse_type("F4")
    rs = build(rstype)
    gens = affine_generators(rstype)
    got = _word_product(rs, gens, F4_WORD)
    target = ext_translation(rs, (0, 0, 0, 1))
    rec("F4 word x4", got == target and length(target) == len(F4_WORD),
        "the recorded 16-letter word is a reduced expression of the fourth "
        "fundamental translation")
    rstype = parse_type("G2")
    rs = build(rstype)
    gens = affine_generators(rstype)
    for i, word in sorted(G2_WORDS.items()):
        got = _word_product(rs, gens, word)
        target = ext_translation(rs, tuple(int(j == i - 1) for j in range(2)))
        rec(f"G2 word x{i}", got == target and length(target) == len(word),
            f"the recorded {len(word)}-letter word is a reduced expression "
            f"of the fundamental translation x{i}")
    fw = build(parse_type("G2")).fundamental_weights
    rec("G2 lattice", tuple(fw[0]) == (2, 1) and tuple(fw[1]) == (3, 2),
        "in root coordinates the fundamental weights are 2a1+a2 and 3a1+2a2")
    g0, g2 = gens[0], gens[2]
    rec("G2 commuting wall", g0 * g2 == g2 * g0,
        "the affine generator commutes with the long-root generator")
    return records


# ---------------------------------------------------------------------------
# ball verification


def _ball(rank, radius):
    out = [()]
    for _ in range(rank):
        out = [t + (c,) for t in out for c in range(-radius, radius + 1)]
    return sorted(out)


def _cleared_theta_product(rs, x, y, zc):
    """theta_x * theta_y * T_{t_zc} with zc dominating y's denominator:
    the right factor collapses to honest basis folds."""
    yy, zy = _theta_parts(rs, y)
    shift = tuple(a + b - c for a, b, c in zip(yy, zc, zy))
    head = theta(rs, x).scale(
        Laurent({length(ext_translation(rs, zy)) -
                 length(ext_translation(rs, yy)): 1}))
    return hecke_mul(head, HeckeElement.basis(rs, ext_translation(rs, shift)))


def verify_bernstein(rstype, radius=2):
    """Exercise the commuting-basis identities on a ball of weights.

    For each pair x, y the products theta_x theta_y and theta_y theta_x are
    compared with theta_{x+y} after clearing the one shared denominator by a
    dominant translation (an invertible basis element, so equality before
    and after clearing agree).  Decomposition independence of theta and
    centrality of the orbit sums over the fundamental weights are checked
    directly."""
    rstype = parse_type(rstype) if isinstance(rstype, str) else rstype
    rs = build(rstype)
    if rs.rank > PRODUCT_RANK_CAP:
        raise HeckeError(
            f"rank {rs.rank} is over the rank-{PRODUCT_RANK_CAP} product cap")
    records = []
    ball = _ball(rs.rank, radius)
    bad = []
    pairs = 0
    for ix, x in enumerate(ball):
        for y in ball[ix:]:
            s = tuple(a + b for a, b in zip(x, y))
            ys, zs = _theta_parts(rs, s)
            orders = ((x, y),) if x == y else ((x, y), (y, x))
            pairs += 1
            for a, b in orders:
                _, zb = _theta_parts(rs, b)
                zc = tuple(max(p, q) for p, q in zip(zb, zs))
                target = HeckeElement.basis(
                    rs,
                    ext_translation(rs, tuple(p + q - r for p, q, r
                                              in zip(ys, zc, zs))),
                    Laurent({length(ext_translation(rs, zs)) -
                             length(ext_translation(rs, ys)): 1}))
                if _cleared_theta_product(rs, a, b, zc) != target:
                    bad.append((a, b))
    records.append({
        "name": f"{rstype} theta ball",
        "status": "pass" if not bad else "fail",
        "statement": f"products and transposes of {pairs} weight pairs at "
                     f"radius {radius} all match the sum weight",
        "detail": {"failing_pairs": bad[:5]}})

    probe = [tuple(int(j == i) for j in range(rs.rank))
             for i in range(rs.rank)]
    probe += [tuple(-1 for _ in range(rs.rank)),
              tuple(1 if j == 0 else -1 for j in range(rs.rank))]
    rho = (1,) * rs.rank
    indep_bad = []
    for x in probe:
        base = theta(rs, x)
        y0, z0 = _theta_parts(rs, x)
        for k in (1, 2):
            y = tuple(a + k * b for a, b in zip(y0, rho))
            z = tuple(a + k * b for a, b in zip(z0, rho))
            ty, tz = ext_translation(rs, y), ext_translation(rs, z)
            alt = hecke_mul(
                HeckeElement.basis(rs, ty,
                                   Laurent({length(tz) - length(ty): 1})),
                basis_inverse(rs, tz))
            if alt != base:
                indep_bad.append((x, k))
    records.append({
        "name": f"{rstype} theta independence",
        "status": "pass" if not indep_bad else "fail",
        "statement": f"{len(probe)} weights rebuilt from 3 decompositions "
                     f"each give one value",
        "detail": {"failures": indep_bad}})

    central_bad = []
    for i in range(rs.rank):
        s = central_sum(rs, tuple(int(j == i) for j in range(rs.rank)))
        for j in range(rs.rank + 1):
            tr = HeckeElement.basis(rs, affine_generators(rs.rstype)[j])
            if hecke_mul(tr, s) != hecke_mul(s, tr):
                central_bad.append((i + 1, j))
        for om in omega_group(rs.rstype):
            to = HeckeElement.basis(rs, om)
            if hecke_mul(to, s) != hecke_mul(s, to):
                central_bad.append((i + 1, om))
    records.append({
        "name": f"{rstype} central sums",
        "status": "pass" if not central_bad else "fail",
        "statement": "orbit sums over every fundamental weight commute with "
                     "every affine generator and every length-zero element",
        "detail": {"failures": central_bad}})
    return records
