"""Extended affine Weyl group X_* x| W_0, stored as pairs t^lambda * z.

Covers, Bruhat order, minimal coset representatives for a spherical subset of
the simple affine roots, length-zero representatives, acute presentations, and
the weight-function Bruhat criterion.
"""

from .errors import InputError, PropertyViolation
from .exact import vec_add, vec_neg, vec_sub
from .rootdata import AffineRoot


class AffineElement:
    """t^translation * finite, acting on affine roots."""

    __slots__ = ("datum", "translation", "finite", "_len")

    def __init__(self, datum, translation, finite):
        self.datum = datum
        self.translation = tuple(translation)
        self.finite = finite
        self._len = None

    @classmethod
    def identity(cls, datum):
        return cls(datum, (0,) * datum.rank, datum.weyl_group().identity)

    @classmethod
    def translation_of(cls, datum, lam):
        return cls(datum, lam, datum.weyl_group().identity)

    @classmethod
    def from_finite(cls, finite):
        return cls(finite.group.datum, (0,) * finite.group.datum.rank, finite)

    def __eq__(self, other):
        return (isinstance(other, AffineElement)
                and self.translation == other.translation
                and self.finite == other.finite)

    def __hash__(self):
        return hash((self.translation, self.finite.wm))

    def __mul__(self, other):
        if self.datum is not other.datum:
            raise InputError("cannot multiply elements over different data")
        return AffineElement(
            self.datum,
            vec_add(self.translation, self.finite.apply_coweight(other.translation)),
            self.finite * other.finite)

    def inverse(self):
        zinv = self.finite.inverse()
        return AffineElement(self.datum,
                             vec_neg(zinv.apply_coweight(self.translation)), zinv)

    def act(self, ar):
        beta = self.finite.apply_weight(ar.root)
        return AffineRoot(beta, ar.level - self.datum.pairing(self.translation, beta))

    @property
    def length(self):
        if self._len is None:
            d = self.datum
            zinv = self.finite.inverse()
            total = 0
            for a in d.positive_roots:
                delta = 1 if d.root_sign(zinv.apply_weight(a)) < 0 else 0
                total += abs(d.pairing(self.translation, a) - delta)
            self._len = total
        return self._len

    def is_min_rep(self, K):
        """Is this the minimal-length element of its coset modulo W_K?"""
        return all(self.datum.is_positive_affine(self.act(ar)) for ar in K)

    def key(self):
        return (self.length, self.translation, self.finite.word)

    def describe(self):
        return {"translation": list(self.translation),
                "word": self.finite.word_str(),
                "length": self.length}

    def name(self):
        w = self.finite.word_str()
        t = ",".join(str(c) for c in self.translation)
        return f"t[{t}]" + ("" if w == "e" else f" {w}")

    def __repr__(self):
        return f"Affine({self.name()})"


def affine_reflection(datum, ar):
    """The reflection s_(alpha,k) = s_alpha t^{k alpha^vee}."""
    if not datum.is_positive_affine(ar):
        raise InputError("reflection wants a positive affine root")
    W = datum.weyl_group()
    s = W.reflection(ar.root)
    coroot = datum.coroot(ar.root)
    trans = tuple(-ar.level * c for c in coroot)
    return AffineElement(datum, trans, s)


def simple_reflection(datum, ar):
    if ar not in datum.simple_affine_roots():
        raise InputError(f"{ar} is not a simple affine root")
    return affine_reflection(datum, ar)


def reflection_root(datum, w):
    """The positive affine root whose reflection is w, or None."""
    d = datum
    z = w.finite
    neg = [a for a in d.positive_roots if d.root_sign(z.apply_weight(a)) < 0]
    for a in neg:
        if z == d.weyl_group().reflection(a):
            coroot = d.coroot(a)
            ks = {-w.translation[i] // coroot[i]
                  for i in range(d.rank) if coroot[i] != 0}
            if len(ks) != 1:
                return None
            k = ks.pop()
            if tuple(-k * c for c in coroot) != w.translation:
                return None
            ar = AffineRoot(a, k)
            return ar if d.is_positive_affine(ar) else -ar
    return None


def inversions(w):
    """Positive affine roots sent to negative ones; size == length."""
    d = w.datum
    z = w.finite
    out = []
    for a, sign_a in d._sign.items():
        beta = z.apply_weight(a)
        c = d.pairing(w.translation, beta)
        k_min = 0 if sign_a > 0 else 1
        k_max = c - 1 if d.root_sign(beta) > 0 else c
        out.extend(AffineRoot(a, k) for k in range(k_min, k_max + 1))
    if len(out) != w.length:
        raise AssertionError("inversion count disagrees with the length formula")
    return out


def covers_down(w):
    """All pairs (w*s_ar, ar) one Bruhat step below w."""
    lw = w.length
    out = []
    for ar in inversions(w):
        u = w * affine_reflection(w.datum, ar)
        if u.length == lw - 1:
            out.append((u, ar))
    out.sort(key=lambda p: (p[0].translation, p[0].finite.word))
    return out


def right_ascent(w, ar):
    """True iff w * s_ar > w (equivalently w(ar) is positive)."""
    return w.datum.is_positive_affine(w.act(ar))


def length_zero_rep(w):
    """The length-zero element of W_aff * w, by greedy left descent."""
    d = w.datum
    simples = d.simple_affine_roots()
    refls = [simple_reflection(d, ar) for ar in simples]
    while w.length > 0:
        winv = w.inverse()
        for ar, s in zip(simples, refls):
            if not d.is_positive_affine(winv.act(ar)):
                w = s * w
                break
        else:
            raise AssertionError("positive-length element with no left descent")
    return w


def affine_word(w):
    """(tau, letters): w = tau * s_i1 ... s_ik with tau of length zero.

    The letter sequence is the lexicographically least reduced word of the
    W_aff-part.
    """
    d = w.datum
    tau = length_zero_rep(w)
    u = tau.inverse() * w
    if u.length != w.length:
        raise AssertionError("length-zero factor did not preserve length")
    simples = d.simple_affine_roots()
    refls = [simple_reflection(d, ar) for ar in simples]
    letters = []
    while u.length > 0:
        uinv = u.inverse()
        for i, ar in enumerate(simples):
            if not d.is_positive_affine(uinv.act(ar)):
                letters.append(i)
                u = refls[i] * u
                break
    return tau, tuple(letters)


def bruhat_leq(w1, w2):
    """Bruhat order on the extended group; False across W_aff-cosets."""
    if w1.datum is not w2.datum:
        raise InputError("elements live over different data")
    if w1.length > w2.length:
        return False
    if w1.length == w2.length:
        return w1 == w2
    if length_zero_rep(w1) != length_zero_rep(w2):
        return False
    frontier = {w2}
    depth = w2.length
    while depth > w1.length:
        depth -= 1
        frontier = {u for w in frontier for u, _ in covers_down(w)}
    return w1 in frontier


class AcutePresentation:
    """Factorisation w = x t^lam y with the separating-hyperplane count tight."""

    __slots__ = ("datum", "x", "lam", "y")

    def __init__(self, x, lam, y):
        self.datum = x.group.datum
        self.x = x
        self.lam = tuple(lam)
        self.y = y

    def element(self):
        x_aff = AffineElement.from_finite(self.x)
        y_aff = AffineElement.from_finite(self.y)
        return x_aff * AffineElement.translation_of(self.datum, self.lam) * y_aff

    def slack(self, alpha):
        d = self.datum
        yinv = self.y.inverse()
        dx = 1 if d.root_sign(self.x.apply_weight(alpha)) < 0 else 0
        dy = 1 if d.root_sign(yinv.apply_weight(alpha)) < 0 else 0
        return dx + d.pairing(self.lam, alpha) - dy

    def is_acute(self):
        return all(self.slack(a) >= 0 for a in self.datum.positive_roots)

    def length_value(self):
        return (self.x.length + self.datum.pairing(self.lam, self.datum.two_rho)
                - self.y.length)

    def __repr__(self):
        return (f"AcutePresentation({self.x.word_str()}, {list(self.lam)}, "
                f"{self.y.word_str()})")


def factorizations(w):
    """All factorizations w = x t^lam y, one per y in W_0."""
    d = w.datum
    out = []
    for y in d.weyl_group():
        part = w * AffineElement.from_finite(y.inverse())
        x = part.finite
        lam = x.inverse().apply_coweight(part.translation)
        out.append(AcutePresentation(x, lam, y))
    out.sort(key=lambda p: (p.y.length, p.y.word))
    return out


def acute_presentations(w):
    res = [p for p in factorizations(w) if p.is_acute()]
    if not res:
        raise AssertionError("every element admits an acute presentation")
    return res


def acute_presentation_K(w, K):
    """An acute presentation with y(alpha) negative for every (alpha, k) in K."""
    d = w.datum
    if not w.is_min_rep(K):
        raise InputError("element is not a minimal coset representative for K")
    for p in acute_presentations(w):
        if all(d.root_sign(p.y.apply_weight(ar.root)) < 0 for ar in K):
            return p
    raise PropertyViolation("no K-compatible acute presentation found")


def bruhat_leq_via_wt(pres, w2, qbg=None):
    """Bruhat comparison through quantum-Bruhat-graph weights.

    pres: a fixed acute presentation of the smaller candidate; w2: the other
    element.  True iff some factorization w2 = x' t^{lam'} y' satisfies
    wt(x, x') + wt(y'^{-1}, y^{-1}) <= lam' - lam in the coroot cone.
    """
    d = pres.datum
    if w2.datum is not d:
        raise InputError("elements live over different data")
    if qbg is None:
        qbg = d.qbg()
    yinv = pres.y.inverse()
    for xp in d.weyl_group():
        rest = AffineElement.from_finite(xp.inverse()) * w2
        lamp = rest.translation
        yp = rest.finite
        _, wt1 = qbg.distance_and_weight(pres.x, xp)
        _, wt2 = qbg.distance_and_weight(yp.inverse(), yinv)
        gap = vec_sub(vec_sub(lamp, pres.lam), vec_add(wt1, wt2))
        if d.in_coroot_cone(gap):
            return True
    return False
