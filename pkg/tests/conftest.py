import itertools
from functools import lru_cache

import pytest

import admshell as ash
from admshell.admissible import canonical_K, is_spherical
from admshell.affine import AffineElement, covers_down, simple_reflection


@lru_cache(maxsize=None)
def datum(name):
    return ash.build_root_datum(name)


@lru_cache(maxsize=None)
def affine_ball(name, radius):
    """All elements of W_aff with length <= radius, plus a Bruhat-order oracle.

    Grown from the identity by simple affine reflections, so this is the right
    ball for the simply-connected presets (where the extended group has no
    extra length-zero part).
    """
    d = datum(name)
    simples = [simple_reflection(d, ar) for ar in d.simple_affine_roots()]
    seen = {AffineElement.identity(d)}
    frontier = list(seen)
    while frontier:
        new = []
        for w in frontier:
            if w.length >= radius:
                continue
            for s in simples:
                t = w * s
                if t.length == w.length + 1 and t not in seen:
                    seen.add(t)
                    new.append(t)
        frontier = new
    elems = sorted(seen, key=lambda w: w.key())
    idx = {w: i for i, w in enumerate(elems)}
    down = [1 << i for i in range(len(elems))]
    for i in sorted(range(len(elems)), key=lambda i: elems[i].length):
        for u, _ in covers_down(elems[i]):
            j = idx.get(u)
            if j is not None:
                down[i] |= down[j]

    def leq(w1, w2):
        return bool(down[idx[w2]] >> idx[w1] & 1)

    return elems, leq


def spherical_subsets(d):
    out = []
    n = len(d.simple_affine_roots())
    for r in range(n + 1):
        for K in itertools.combinations(range(n), r):
            Kc = canonical_K(d, K)
            if is_spherical(d, Kc):
                out.append(Kc)
    return out


def dominant_mus(name, bound, regular_bound=None):
    """Dominant coweights with <mu, 2rho> <= bound, one per central orbit."""
    d = datum(name)
    out = []
    if name.startswith("GL"):
        n = d.rank
        for mu in itertools.product(range(bound + 1), repeat=n):
            if any(mu[i] < mu[i + 1] for i in range(n - 1)) or mu[-1] != 0:
                continue
            h = d.pairing(mu, d.two_rho)
            regular = all(mu[i] > mu[i + 1] for i in range(n - 1))
            cut = regular_bound if (regular and regular_bound) else bound
            if h <= cut:
                out.append(mu)
    else:
        for coeffs in itertools.product(range(bound + 1), repeat=d.nsimple):
            mu = tuple(sum(c * av[i] for c, av in zip(coeffs, d.simple_coroots))
                       for i in range(d.rank))
            if d.pairing(mu, d.two_rho) <= bound and d.is_dominant(mu):
                out.append(mu)
    return sorted(set(out))


@lru_cache(maxsize=None)
def pipeline(name, mu, K):
    """(poset, label order, labeled poset) for one matrix entry."""
    d = datum(name)
    poset = ash.build_admissible(d, mu, K)
    order = ash.build_label_order(poset)
    lp = ash.label_edges(poset, order)
    return poset, order, lp


# the theorem matrix: datum -> (height bound, bound for regular GL coweights)
MATRIX = {
    "A1": (8, None),
    "A2": (8, None),
    "A3": (6, None),
    "B2": (8, None),
    "C2": (8, None),
    "G2": (8, None),
    "GL2": (8, None),
    "GL3": (8, 6),
    "A1xA1": (8, None),
}


def matrix_entries():
    for name, (bound, rb) in MATRIX.items():
        d = datum(name)
        for mu in dominant_mus(name, bound, rb):
            for K in spherical_subsets(d):
                yield name, mu, K


@pytest.fixture(scope="session")
def gl3_case():
    d = datum("GL3")
    return pipeline("GL3", (1, 0, 0), canonical_K(d, ["a1"]))
