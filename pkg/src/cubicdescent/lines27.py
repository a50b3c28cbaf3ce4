"""Combinatorial model of the 27 lines on a cubic surface with a marked
rational line, and the sign-permutation group acting on them.

Labels: the marked line L0; ten "pair" lines (i, s) for i in 0..4 and
s = +-1, two on each of the five tritangent planes through L0; sixteen
lines labelled by even sign vectors in {+-1}^5.  The group is the
semidirect product of the even sign group T (order 16) by S5, order 1920:
(t, sigma) sends (i, s) to (sigma(i), s * t[sigma(i)]) and eps to
j -> t[j] * eps[sigma^-1(j)].

Each label carries a class in the blow-up basis (l, e1..e6) of the Picard
lattice; the action preserves the intersection pairing, L0 = e6 meets
exactly the pair lines, and each plane's trio sums to the anticanonical
class 3l - e1 - ... - e6.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from .linalg import Matrix, inverse

# ---------------------------------------------------------------------------
# labels and Picard vectors

def _even_vectors():
    out = []
    for eps in product((1, -1), repeat=5):
        if eps.count(-1) % 2 == 0:
            out.append(eps)
    out.sort(key=lambda e: tuple(-x for x in e))
    return out


EVEN_VECTORS = _even_vectors()
_EVEN_INDEX = {e: i for i, e in enumerate(EVEN_VECTORS)}

#: label list: 0 = L0; 1..10 = (i, s) pairs; 11..26 = even sign vectors
LABELS = (["L0"]
          + [(i, s) for i in range(5) for s in (1, -1)]
          + EVEN_VECTORS)
LABEL_INDEX = {lab: k for k, lab in enumerate(LABELS)}
N_LINES = 27


def _pic_vector(label):
    """Class in the basis (l, e1, ..., e6)."""
    if label == "L0":
        return (0, 0, 0, 0, 0, 0, 1)
    if isinstance(label, tuple) and len(label) == 2 and label[0] in range(5):
        i, s = label
        if s == 1:
            v = [1, 0, 0, 0, 0, 0, -1]
            v[1 + i] = -1
            return tuple(v)
        v = [2, -1, -1, -1, -1, -1, -1]
        v[1 + i] = 0
        return tuple(v)
    eps = label
    minus = [i for i in range(5) if eps[i] == -1]
    if len(minus) == 4:
        # e_j for the unique plus position j
        j = next(i for i in range(5) if eps[i] == 1)
        v = [0, 0, 0, 0, 0, 0, 0]
        v[1 + j] = 1
        return tuple(v)
    if len(minus) == 2:
        a, b = minus
        v = [1, 0, 0, 0, 0, 0, 0]
        v[1 + a] = -1
        v[1 + b] = -1
        return tuple(v)
    if len(minus) == 0:
        return (2, -1, -1, -1, -1, -1, 0)
    raise AssertionError("odd sign vector in the 16-line labels")


PIC_VECTORS = tuple(_pic_vector(lab) for lab in LABELS)


def pairing(u, v) -> int:
    """Intersection pairing: l^2 = 1, e_i^2 = -1, mixed 0."""
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def intersection_matrix():
    return [[pairing(PIC_VECTORS[i], PIC_VECTORS[j]) for j in range(N_LINES)]
            for i in range(N_LINES)]


def anticanonical_check() -> bool:
    """Each tritangent trio L0 + (i,+) + (i,-) sums to 3l - e1 - ... - e6."""
    target = (3, -1, -1, -1, -1, -1, -1)
    l0 = PIC_VECTORS[LABEL_INDEX["L0"]]
    for i in range(5):
        p = PIC_VECTORS[LABEL_INDEX[(i, 1)]]
        m = PIC_VECTORS[LABEL_INDEX[(i, -1)]]
        s = tuple(a + b + c for a, b, c in zip(l0, p, m))
        if s != target:
            return False
    return True


# ---------------------------------------------------------------------------
# the group T x| S5

class GroupElt:
    """(t, sigma): t an even sign vector, sigma a permutation of 0..4
    given as the tuple (sigma(0), ..., sigma(4))."""

    __slots__ = ("t", "sigma")

    def __init__(self, t, sigma):
        t = tuple(int(x) for x in t)
        sigma = tuple(int(x) for x in sigma)
        if len(t) != 5 or any(x not in (1, -1) for x in t):
            raise ValueError("t must be a vector of five signs")
        if t.count(-1) % 2 != 0:
            raise ValueError("sign vector must be even")
        if sorted(sigma) != [0, 1, 2, 3, 4]:
            raise ValueError("sigma must be a permutation of 0..4")
        self.t = t
        self.sigma = sigma

    @classmethod
    def identity(cls):
        return cls((1, 1, 1, 1, 1), (0, 1, 2, 3, 4))

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        # (t, s) * (t', s'): apply other first, then self
        sigma = tuple(self.sigma[other.sigma[i]] for i in range(5))
        inv_self = _inv_perm(self.sigma)
        t = tuple(self.t[j] * other.t[inv_self[j]] for j in range(5))
        return GroupElt(t, sigma)

    def inv(self) -> "GroupElt":
        inv_sigma = _inv_perm(self.sigma)
        t = tuple(self.t[self.sigma[j]] for j in range(5))
        return GroupElt(t, inv_sigma)

    def __eq__(self, other):
        return isinstance(other, GroupElt) and self.t == other.t \
            and self.sigma == other.sigma

    def __hash__(self):
        return hash((self.t, self.sigma))

    def __repr__(self):
        return f"GroupElt(t={self.t}, sigma={self.sigma})"

    def frob_class(self) -> tuple:
        """Conjugacy invariant: sorted multiset of (cycle length, product
        of t over the cycle)."""
        seen = [False] * 5
        parts = []
        for i in range(5):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.sigma[j]
            sgn = 1
            for j in cyc:
                sgn *= self.t[j]
            parts.append((len(cyc), sgn))
        return tuple(sorted(parts))


def _inv_perm(sigma):
    inv = [0] * 5
    for i, v in enumerate(sigma):
        inv[v] = i
    return tuple(inv)


def act_on_27(g: GroupElt) -> tuple:
    """Permutation of the 27 labels induced by g, as an index tuple:
    result[k] is the index of the image of label k."""
    inv_sigma = _inv_perm(g.sigma)
    out = [0] * N_LINES
    out[LABEL_INDEX["L0"]] = LABEL_INDEX["L0"]
    for i in range(5):
        for s in (1, -1):
            ni = g.sigma[i]
            out[LABEL_INDEX[(i, s)]] = LABEL_INDEX[(ni, s * g.t[ni])]
    for eps in EVEN_VECTORS:
        img = tuple(g.t[j] * eps[inv_sigma[j]] for j in range(5))
        out[LABEL_INDEX[eps]] = LABEL_INDEX[img]
    return tuple(out)


def full_group():
    """All 1920 elements (even sign vectors times S5)."""
    out = []
    for sigma in permutations(range(5)):
        for t in EVEN_VECTORS:
            out.append(GroupElt(t, sigma))
    return out


def orbits(generators) -> list:
    """Sorted orbit-length multiset of the generated subgroup on the 27
    labels."""
    perms = [act_on_27(g) for g in generators]
    perms += [act_on_27(g.inv()) for g in generators]
    seen = [False] * N_LINES
    sizes = []
    for start in range(N_LINES):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        size = 0
        while stack:
            k = stack.pop()
            size += 1
            for p in perms:
                nk = p[k]
                if not seen[nk]:
                    seen[nk] = True
                    stack.append(nk)
        sizes.append(size)
    return sorted(sizes)


def subgroup_closure(generators, cap: int | None = None) -> list | None:
    """All elements generated; stops and returns None past cap."""
    elems = {GroupElt.identity()}
    frontier = list(generators)
    for g in generators:
        elems.add(g)
    while frontier:
        nxt = []
        for g in frontier:
            for h in list(elems):
                for prod_ in (g * h, h * g):
                    if prod_ not in elems:
                        elems.add(prod_)
                        nxt.append(prod_)
                        if cap is not None and len(elems) > cap:
                            return None
        frontier = nxt
    return list(elems)


def class_members(cls: tuple, group=None) -> list:
    """All elements of T x| S5 with the given (length, sign) multiset."""
    if group is None:
        group = full_group()
    return [g for g in group if g.frob_class() == cls]


def _blocks_from_sizes(sizes) -> list:
    out = []
    pos = 0
    for s in sizes:
        out.append(tuple(range(pos, pos + s)))
        pos += s
    assert pos == 5
    return out


def anchored_frob_data(g: GroupElt, blocks) -> tuple:
    """Per-block sorted (cycle length, sign product) multisets, or None
    when sigma does not preserve the blocks."""
    for block in blocks:
        bs = set(block)
        if any(g.sigma[i] not in bs for i in block):
            return None
    out = []
    seen = [False] * 5
    per_block = {id(b): [] for b in blocks}
    lookup = {}
    for b in blocks:
        for i in b:
            lookup[i] = id(b)
    for i in range(5):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = g.sigma[j]
        sgn = 1
        for j in cyc:
            sgn *= g.t[j]
        per_block[lookup[i]].append((len(cyc), sgn))
    return tuple(tuple(sorted(per_block[id(b)])) for b in blocks)


def anchored_class_members(anchored: tuple, block_sizes, group=None) -> list:
    """Elements whose block-anchored cycle data matches `anchored`, the
    plane blocks being consecutive index ranges of the given sizes."""
    if group is None:
        group = full_group()
    blocks = _blocks_from_sizes(block_sizes)
    return [g for g in group if anchored_frob_data(g, blocks) == anchored]


def class_representative(cls: tuple) -> GroupElt:
    """Canonical representative: cycles laid out on consecutive letters in
    multiset order, one -1 at the first letter of each minus cycle."""
    t = [1, 1, 1, 1, 1]
    sigma = list(range(5))
    pos = 0
    for (length, sgn) in cls:
        letters = list(range(pos, pos + length))
        for a, b in zip(letters, letters[1:] + letters[:1]):
            sigma[a] = b
        if sgn == -1:
            t[pos] = -1
        pos += length
    return GroupElt(tuple(t), tuple(sigma))


def minimal_cover_subgroup(classes, cap: int = 1920):
    """Smallest subgroup containing an element of every given conjugacy
    class, by backtracking over class representatives.

    When a branch's subgroup already meets the next class, the branch
    continues without growth (adding an outside representative can only
    enlarge the closure, so this is sound for minimality).  Returns
    (sorted elements, chosen representatives).

    `classes` may be plain (length, sign) multisets or prebuilt candidate
    element lists.
    """
    group = full_group()
    members = [c if isinstance(c, list) else class_members(c, group)
               for c in classes]
    members.sort(key=len)
    best_elems: set | None = None
    best_chosen: list | None = None

    def grow(chosen, elems, k):
        nonlocal best_elems, best_chosen
        if best_elems is not None and len(elems) >= len(best_elems):
            return
        if k == len(members):
            best_elems = set(elems)
            best_chosen = list(chosen)
            return
        inside = next((c for c in members[k] if c in elems), None)
        if inside is not None:
            grow(chosen + [inside], elems, k + 1)
            return
        tried = set()
        for cand in members[k]:
            limit = (len(best_elems) - 1) if best_elems is not None else cap
            closure = subgroup_closure(chosen + [cand], cap=limit)
            if closure is None:
                continue
            key = frozenset(closure)
            if key in tried:
                continue
            tried.add(key)
            grow(chosen + [cand], set(closure), k + 1)

    grow([], {GroupElt.identity()}, 0)
    if best_elems is None:
        return None, None
    return sorted(best_elems, key=lambda g: (g.sigma, g.t)), best_chosen


def pic_matrix_of(perm: tuple) -> Matrix:
    """Linear map induced on Pic x Q by a permutation of the 27 lines,
    solved from seven spanning line classes."""
    span_labels = (["L0"]
                   + [eps for eps in EVEN_VECTORS if eps.count(-1) == 4]
                   + [(1, 1, 1, 1, 1)])
    idxs = [LABEL_INDEX[lab] for lab in span_labels]
    b = Matrix(7, 7, [Fraction(PIC_VECTORS[idx][i])
                      for i in range(7) for idx in idxs])
    bp = Matrix(7, 7, [Fraction(PIC_VECTORS[perm[idx]][i])
                       for i in range(7) for idx in idxs])
    return bp @ inverse(b)


def pic_trace_of_class(cls: tuple) -> int:
    """Trace of the Picard action of any element in the class."""
    g = class_representative(cls)
    m = pic_matrix_of(act_on_27(g))
    tr = m.trace()
    assert tr.denominator == 1
    return int(tr)


# startup self-check: label count and the anticanonical trios through L0
assert len(LABELS) == N_LINES == 27
assert anticanonical_check(), "Picard dictionary is inconsistent"
