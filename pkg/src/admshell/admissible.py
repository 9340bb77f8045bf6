"""Admissible sets: enumeration, quotient poset, gateway data, Coxeter subsets.

The poset holds the minimal coset representatives below the extreme
translations, together with a formal top element.  The full (unquotiented)
admissible set is kept alongside for cross-checks that need it.
"""

from .errors import InputError, PropertyViolation
from .exact import vec_add, vec_sub
from .affine import (AffineElement, acute_presentation_K, affine_reflection,
                     affine_word, covers_down, reflection_root)


def is_spherical(datum, K):
    """K generates a finite group iff it misses a node in every affine component."""
    simples = datum.simple_affine_roots()
    kset = set(K)
    for c, (comp, theta, _) in enumerate(datum.components):
        nodes = {simples[i] for i in comp} | {simples[datum.nsimple + c]}
        if nodes <= kset:
            return False
    return True


def canonical_K(datum, K):
    """Normalize K given as affine roots, indices, or CLI tokens."""
    simples = datum.simple_affine_roots()
    out = []
    for item in K:
        if isinstance(item, str):
            out.append(datum.parse_affine_token(item))
        elif isinstance(item, int):
            if not 0 <= item < len(simples):
                raise InputError(f"simple affine index {item} out of range")
            out.append(simples[item])
        else:
            if item not in simples:
                raise InputError(f"{item} is not a simple affine root")
            out.append(item)
    out = sorted(set(out), key=simples.index)
    return tuple(out)


class AdmissiblePoset:
    """Augmented poset of K-minimal elements below the mu-translations.

    elements[i] are sorted by (length, translation, word); the formal top
    element is index len(elements).  covers are (upper, lower, root) with the
    top-edges carrying root=None (they get their own labels later).
    """

    def __init__(self, datum, mu, K):
        mu = tuple(int(c) for c in mu)
        if not datum.is_dominant(mu):
            raise InputError(f"{mu} is not dominant")
        K = canonical_K(datum, K)
        if not is_spherical(datum, K):
            raise InputError("K is not spherical")
        self.datum = datum
        self.mu = mu
        self.K = K
        W = datum.weyl_group()
        self.J = tuple(i for i, a in enumerate(datum.simple_roots)
                       if datum.pairing(mu, a) == 0)
        self.WJ = W.min_coset_reps(self.J)
        self.WJK = [a for a in self.WJ
                    if all(datum.pairing(a.apply_coweight(mu), ar.root) <= 0
                           for ar in K)]
        self.WJK.sort(key=lambda a: (a.length, a.word))

        # downward closure of the extreme translations = the full admissible set
        maxima_full = [AffineElement.translation_of(datum, a.apply_coweight(mu))
                       for a in self.WJ]
        full_covers = {}
        frontier = list(dict.fromkeys(maxima_full))
        for w in frontier:
            full_covers[w] = None
        while frontier:
            new = []
            for w in frontier:
                cov = covers_down(w)
                full_covers[w] = cov
                for u, _ in cov:
                    if u not in full_covers:
                        full_covers[u] = None
                        new.append(u)
            frontier = new
        self.full_elements = sorted(full_covers, key=lambda w: w.key())
        self.full_covers = full_covers

        members = [w for w in self.full_elements if w.is_min_rep(K)]
        self.elements = members
        self.index = {w: i for i, w in enumerate(members)}
        self.top = len(members)
        self.covers = []
        for w in members:
            i = self.index[w]
            for u, ar in full_covers[w]:
                j = self.index.get(u)
                if j is not None:
                    self.covers.append((i, j, ar))
        self.maximal_ids = [self.index[AffineElement.translation_of(
            datum, a.apply_coweight(mu))] for a in self.WJK]
        for m in self.maximal_ids:
            self.covers.append((self.top, m, None))
        self.covers.sort(key=lambda c: (c[0], c[1]))
        self._verify_shape()
        self._down_bits = None
        self._up_bits = None

    def _verify_shape(self):
        n = len(self.elements)
        height = self.datum.pairing(self.mu, self.datum.two_rho)
        has_lower = [False] * n
        has_upper = [False] * n
        for up, lo, _ in self.covers:
            if up != self.top:
                has_lower[up] = True
                has_upper[lo] = True
                if self.elements[up].length != self.elements[lo].length + 1:
                    raise PropertyViolation("cover with a length gap")
        minimal = [i for i in range(n) if not has_lower[i]]
        if len(minimal) != 1 or self.elements[minimal[0]].length != 0:
            raise PropertyViolation("expected a unique length-zero minimum")
        self.tau_id = minimal[0]
        top_covered = set(self.maximal_ids)
        for i in range(n):
            if not has_upper[i] and i not in top_covered:
                raise PropertyViolation("non-extreme element with no upper cover")
        for m in self.maximal_ids:
            if self.elements[m].length != height:
                raise PropertyViolation("extreme translation of wrong length")

    # -- order queries -------------------------------------------------------

    def _bits(self):
        if self._down_bits is None:
            n = len(self.elements) + 1
            down = [1 << i for i in range(n)]
            up = [1 << i for i in range(n)]
            by_len = sorted(range(len(self.elements)),
                            key=lambda i: self.elements[i].length)
            lower_of = [[] for _ in range(n)]
            upper_of = [[] for _ in range(n)]
            for u, l, _ in self.covers:
                lower_of[u].append(l)
                upper_of[l].append(u)
            for i in by_len:
                for l in lower_of[i]:
                    down[i] |= down[l]
            for l in lower_of[self.top]:
                down[self.top] |= down[l]
            for i in reversed(by_len):
                for u in upper_of[i]:
                    up[i] |= up[u]
            self._down_bits = down
            self._up_bits = up
        return self._down_bits, self._up_bits

    def leq_ids(self, i, j):
        down, _ = self._bits()
        return bool(down[j] >> i & 1)

    def leq(self, w1, w2):
        return self.leq_ids(self.index[w1], self.index[w2])

    def tau(self):
        return self.elements[self.tau_id]

    def eta_order(self):
        """The total order on W^{J,K} used for the top-edge labels."""
        return list(self.WJK)

    def translation_of(self, a):
        return AffineElement.translation_of(self.datum,
                                            a.apply_coweight(self.mu))

    def full_leq(self, w1, w2):
        """Bruhat order inside the full admissible set (both members)."""
        if w1 == w2:
            return True
        if w1.length >= w2.length:
            return False
        frontier = {w2}
        depth = w2.length
        while depth > w1.length:
            depth -= 1
            nxt = set()
            for w in frontier:
                nxt.update(u for u, _ in self.full_covers[w])
            frontier = nxt
        return w1 in frontier

    def element_names(self):
        return [w.name() for w in self.elements] + ["1^"]

    def to_json_dict(self):
        d = self.datum
        eta_of = dict(zip(self.maximal_ids, self.WJK))
        cov = []
        for up, lo, ar in self.covers:
            label = d.format_affine(ar) if ar is not None else \
                f"eta({eta_of[lo].word_str()})"
            cov.append({"upper": up, "lower": lo, "label": label})
        return {
            "datum": d.name,
            "mu": list(self.mu),
            "K": [d.simple_affine_roots().index(ar) for ar in self.K],
            "elements": [dict(id=i, **w.describe())
                         for i, w in enumerate(self.elements)],
            "top": self.top,
            "covers": cov,
            "maximal": [a.word_str() for a in self.WJK],
        }


def build_admissible(datum, mu, K):
    return AdmissiblePoset(datum, mu, canonical_K(datum, K))


def adm_membership(pres, mu, qbg=None):
    """Membership in the mu-admissible set from one acute presentation."""
    if not pres.is_acute():
        raise InputError("adm_membership needs an acute presentation")
    d = pres.datum
    if qbg is None:
        qbg = d.qbg()
    _, w = qbg.distance_and_weight(pres.x, pres.y.inverse())
    return d.in_coroot_cone(vec_sub(vec_sub(mu, pres.lam), w))


class SigmaData:
    __slots__ = ("w", "presentation", "sigma_w", "z_min", "sigma_w_JK", "a_min_K")

    def __init__(self, **kw):
        for k, v in kw.items():
            setattr(self, k, v)


def _unique_min(W, elems, what):
    minimal = [z for z in elems
               if not any(x != z and W.bruhat_leq(x, z) for x in elems)]
    if len(minimal) != 1:
        raise PropertyViolation(f"{what} has {len(minimal)} minimal elements")
    return minimal[0]


def compute_sigma(poset, w):
    """Gateway data for one poset element: Sigma_w, z_min, a_min^K."""
    d = poset.datum
    W = d.weyl_group()
    qbg = d.qbg()
    pres = acute_presentation_K(w, poset.K)
    gap = vec_sub(poset.mu, pres.lam)
    yinv = pres.y.inverse()

    def fits(z):
        _, w1 = qbg.distance_and_weight(pres.x, z)
        _, w2 = qbg.distance_and_weight(z, yinv)
        return d.in_coroot_cone(vec_sub(gap, vec_add(w1, w2)))

    sigma_w = [z for z in W if fits(z)]
    reach = [z for z in W
             if d.in_coroot_cone(vec_sub(gap, qbg.wt(pres.x, z)))]
    z_min = _unique_min(W, reach, "{z : wt(x,z) <= mu - lam}")
    if z_min != _unique_min(W, sigma_w, "Sigma_w"):
        raise PropertyViolation("minimum of Sigma_w differs from z_min")

    sigma_w_JK = [a for a in poset.WJK
                  if poset.leq(w, poset.translation_of(a))]
    if not sigma_w_JK:
        raise PropertyViolation("poset element below no extreme translation")

    # iterative gateway search: walk K-descents of the candidate translation
    a = W.min_coset_rep(z_min, poset.J)
    seen = 0
    while True:
        t = poset.translation_of(a)
        bad = next((ar for ar in poset.K
                    if not d.is_positive_affine(t.act(ar))), None)
        if bad is None:
            break
        seen += 1
        if seen > len(W):
            raise PropertyViolation("gateway search failed to terminate")
        s = W.reflection(bad.root)
        a = W.min_coset_rep(s * a, poset.J)
    a_min_K = a

    brute = _unique_min(W, sigma_w_JK, "Sigma_w^{J,K}")
    if brute != a_min_K:
        raise PropertyViolation("gateway loop disagrees with the brute minimum")
    pr_WK = W.subgroup([W.reflection(ar.root) for ar in poset.K])
    WJ_group = W.subgroup([W.simples[j] for j in poset.J])
    coset = {p * z_min * u for p in pr_WK for u in WJ_group}
    hit = [b for b in coset if b in set(poset.WJK)]
    if len(hit) != 1 or hit[0] != a_min_K:
        raise PropertyViolation("double-coset characterization failed")
    return SigmaData(w=w, presentation=pres, sigma_w=sigma_w, z_min=z_min,
                     sigma_w_JK=sigma_w_JK, a_min_K=a_min_K)


def top_two_layer_report(poset, classify=None):
    """Check the description of the next-to-top layer; report per element.

    classify(ar) -> 1|2 tags the label on the minimal-gateway cover; any failed
    claim raises PropertyViolation.
    """
    from .labeling import make_classifier
    if classify is None:
        classify = make_classifier(poset.datum, poset.K)
    d = poset.datum
    qbg = d.qbg()
    height = d.pairing(poset.mu, d.two_rho)
    report = []
    translations = {poset.translation_of(a): a for a in poset.WJ}
    for w in poset.elements:
        if w.length != height - 1:
            continue
        pres = acute_presentation_K(w, poset.K)
        z1 = pres.x
        z2 = pres.y.inverse()
        dist, wt = qbg.distance_and_weight(z1, z2)
        if dist != 1:
            raise PropertyViolation("next-to-top element without a graph edge")
        if tuple(pres.lam) != vec_sub(poset.mu, wt):
            raise PropertyViolation("translation part off by the edge weight")
        if any(wt):
            beta = next((b for b, bv in zip(d.positive_roots, d.positive_coroots)
                         if bv == wt), None)
            if beta is None:
                raise PropertyViolation("edge weight is not a coroot")
            if d.root_support(beta) <= set(poset.J):
                raise PropertyViolation("edge weight lies in the J-span")
        above = [t for t in translations
                 if t.length == height and poset.full_leq(w, t)]
        expect = {poset.translation_of(z1), poset.translation_of(z2)}
        if set(above) != expect or len(expect) != 2:
            raise PropertyViolation("covering translations are not the expected two")
        gates = [a for a in poset.WJK if poset.leq(w, poset.translation_of(a))]
        W = d.weyl_group()
        a_min = _unique_min(W, gates, "gateway set")
        t_min = poset.translation_of(a_min)
        refl = w.inverse() * t_min
        ar = reflection_root(d, refl)
        if ar is None or (w * affine_reflection(d, ar)) != t_min:
            raise PropertyViolation("minimal-gateway edge is not a reflection step")
        if classify(ar) != 2:
            raise PropertyViolation("minimal-gateway label failed its class check")
        report.append({
            "element": w.name(),
            "z1": z1.word_str(), "z2": z2.word_str(),
            "edge_quantum": bool(any(wt)),
            "covering_translations": sorted(t.name() for t in above),
            "gateway": a_min.word_str(),
            "gateway_label": d.format_affine(ar),
        })
    return report


def _ad_tau_permutation(datum, tau):
    simples = datum.simple_affine_roots()
    perm = []
    for ar in simples:
        img = tau.act(ar)
        if img not in simples:
            raise PropertyViolation("length-zero conjugation left the simples")
        perm.append(simples.index(img))
    return perm


def _validate_sigma_perm(datum, sigma):
    simples = datum.simple_affine_roots()
    n = len(simples)
    if sorted(sigma) != list(range(n)):
        raise InputError("sigma is not a permutation of the simple affine roots")

    def pair(i, j):
        a, b = simples[i], simples[j]
        return (datum.pairing(datum.coroot(a.root), b.root),
                datum.pairing(datum.coroot(b.root), a.root))

    for i in range(n):
        for j in range(n):
            if pair(i, j) != pair(sigma[i], sigma[j]):
                raise InputError("sigma does not preserve the Coxeter matrix")


def coxeter_subset(poset, sigma=None):
    """Elements whose reduced-word letters sit in distinct orbit classes.

    sigma: permutation (list of indices) of the simple affine roots; identity
    by default.  Orbits are those of sigma composed with conjugation by the
    length-zero part; at least one orbit must stay unused.
    """
    d = poset.datum
    nsimp = len(d.simple_affine_roots())
    if sigma is None:
        sigma = list(range(nsimp))
    _validate_sigma_perm(d, sigma)
    members = []
    for w in poset.elements:
        tau, letters = affine_word(w)
        ad = _ad_tau_permutation(d, tau)
        comp = [sigma[ad[i]] for i in range(nsimp)]
        orbit_of = _orbit_classes(comp)
        used = [orbit_of[i] for i in letters]
        if len(set(used)) == len(used) and len(set(used)) < len(set(orbit_of)):
            members.append(w)
    member_ids = [poset.index[w] for w in members]
    cov = []
    for j in member_ids:
        for i in member_ids:
            if i != j and poset.leq_ids(i, j):
                if not any(poset.leq_ids(i, k) and poset.leq_ids(k, j)
                           for k in member_ids if k not in (i, j)):
                    cov.append((j, i))
    return {"element_ids": member_ids,
            "elements": members,
            "covers": sorted(cov)}


def _orbit_classes(perm):
    n = len(perm)
    cls = [None] * n
    c = 0
    for i in range(n):
        if cls[i] is not None:
            continue
        j = i
        while cls[j] is None:
            cls[j] = c
            j = perm[j]
        c += 1
    return cls
