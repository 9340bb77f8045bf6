"""Edge labels and the total order on them.

Interior edges are labeled by positive affine roots; the edges to the formal
top element get one symbol per extreme translation.  The root order is built
in three steps:

1. collect a finite "relevant" set: every edge label, the K-subsystem, closed
   under the K-reflections and under positive rational pair combinations (with
   a level cap, logged when it bites);
2. sort it by a lexicographic sequence of linear-functional ratios.  Ratios of
   linear forms turn positive combinations into convex combinations of key
   vectors, so any such sort respects betweenness; the leading functional is
   chosen to put all class-1 roots first;
3. repair the order so the K-subsystem forms a prefix, by the front-insertion
   move that re-sorts the displaced prefix through the reflection.

The result is verified invariant-by-invariant; failure is a hard error.
"""

from fractions import Fraction

from .errors import InputError, PropertyViolation
from .exact import dot, solve_linear, vec_neg
from .rootdata import AffineRoot
from .affine import affine_reflection, simple_reflection


class RootLabel:
    __slots__ = ("root",)

    def __init__(self, root):
        self.root = root

    def __eq__(self, other):
        return isinstance(other, RootLabel) and self.root == other.root

    def __hash__(self):
        return hash(("root", self.root))

    def __repr__(self):
        return f"RootLabel({self.root})"


class EtaLabel:
    __slots__ = ("element",)

    def __init__(self, element):
        self.element = element

    def __eq__(self, other):
        return isinstance(other, EtaLabel) and self.element == other.element

    def __hash__(self):
        return hash(("eta", self.element))

    def __repr__(self):
        return f"EtaLabel({self.element.word_str()})"


def format_label(datum, label):
    if isinstance(label, RootLabel):
        return datum.format_affine(label.root)
    return f"eta({label.element.word_str()})"


def subsystem_positive(datum, K):
    """Positive affine roots of the subsystem spanned by K (orbit closure)."""
    if not K:
        return frozenset()
    from .affine import AffineElement
    refls = [simple_reflection(datum, ar) for ar in K]
    ident = AffineElement.identity(datum)
    group = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for s in refls:
                t = w * s
                if t not in group:
                    group.add(t)
                    new.append(t)
        frontier = new
    orbit = {w.act(ar) for w in group for ar in K}
    return frozenset(ar for ar in orbit if datum.is_positive_affine(ar))


def finite_subsystem_indices(datum, K):
    """Indices of the simple finite roots appearing in K."""
    simples = datum.simple_affine_roots()
    return frozenset(i for i in range(datum.nsimple) if simples[i] in set(K))


def make_classifier(datum, K, phi_K=None):
    """classify(ar) -> 1 or 2; class-1 roots precede everything else."""
    if phi_K is None:
        phi_K = subsystem_positive(datum, K)
    Jp = finite_subsystem_indices(datum, K)

    def classify(ar):
        if not datum.is_positive_affine(ar):
            raise InputError("classification wants a positive affine root")
        if ar in phi_K:
            return 1
        if ar.level >= 1 and datum.root_sign(ar.root) < 0 \
                and not datum.root_support(ar.root) <= Jp:
            return 1
        return 2

    return classify


def _pair_combinations(datum, a1, a2, cap):
    """All c = s*a1 + t*a2 (s,t > 0 rational) in the positive affine roots.

    Returns (combos, overflow): combos with level <= cap, plus a list of the
    capped-out ones.
    """
    combos, overflow = [], []

    def push(ar):
        if not datum.is_root(ar.root) or not datum.is_positive_affine(ar):
            return
        (combos if ar.level <= cap else overflow).append(ar)

    if a1.root == a2.root:
        lo, hi = sorted((a1.level, a2.level))
        for m in range(lo + 1, hi):
            push(AffineRoot(a1.root, m))
    elif a1.root == vec_neg(a2.root):
        for base in (a1, a2):
            for m in range(base.level + 1, cap + 1):
                push(AffineRoot(base.root, m))
        # combos past the cap exist at every level; record one witness
        overflow.append(AffineRoot(a1.root, cap + 1))
    else:
        # distinct non-opposite roots are independent: the finite parts fix
        # (s, t), which then fixes the level
        r1, r2 = a1.root, a2.root
        n = len(r1)
        ij = next(((i, j) for i in range(n) for j in range(i + 1, n)
                   if r1[i] * r2[j] - r1[j] * r2[i] != 0), None)
        if ij is None:
            return combos, overflow
        i, j = ij
        det = r1[i] * r2[j] - r1[j] * r2[i]
        for gamma in datum._sign:
            s = Fraction(gamma[i] * r2[j] - gamma[j] * r2[i], det)
            t = Fraction(r1[i] * gamma[j] - r1[j] * gamma[i], det)
            if s <= 0 or t <= 0:
                continue
            if any(s * r1[k] + t * r2[k] != gamma[k] for k in range(n)):
                continue
            m = s * a1.level + t * a2.level
            if m.denominator != 1:
                continue
            push(AffineRoot(gamma, int(m)))
    return combos, overflow


def relevant_closure(datum, K, seeds, phi_K):
    """Close the seed labels under K-reflections and pair combinations."""
    refls = [affine_reflection(datum, ar) for ar in K]
    base = set(seeds) | set(phi_K)
    cap = max([1] + [ar.level for ar in base])
    cap = 2 * cap + 1
    S = set(base)
    capped = []
    changed = True
    while changed:
        changed = False
        for w in refls:
            for ar in list(S):
                img = w.act(ar)
                if not datum.is_positive_affine(img):
                    img = -img
                if img not in S:
                    if img.level <= cap or img in phi_K:
                        S.add(img)
                        changed = True
                    else:
                        capped.append(img)
        items = sorted(S, key=lambda ar: (ar.level, ar.root))
        for i, x in enumerate(items):
            for y in items[i + 1:]:
                combos, over = _pair_combinations(datum, x, y, cap)
                capped.extend(c for c in over if c not in S)
                for c in combos:
                    if c not in S:
                        S.add(c)
                        changed = True
    return S, cap, capped


class LabelOrder:
    """Total order on the relevant roots plus the top-edge symbols.

    In the constructed order the class-1 roots come first, then the eta
    symbols (by length and word, a linear extension of Bruhat order), then the
    class-2 roots.  An arbitrary interleaving can be wrapped through
    from_labels, e.g. to validate a hand-written order.
    """

    def __init__(self, datum, K, ordered_roots, etas, phi_K=None, capped=(),
                 sequence=None):
        self.datum = datum
        self.K = tuple(K)
        self.roots = tuple(ordered_roots)
        self.phi_K = subsystem_positive(datum, K) if phi_K is None else phi_K
        classify = make_classifier(datum, K, self.phi_K)
        self.root_class = {ar: classify(ar) for ar in self.roots}
        self.etas = tuple(etas)
        self.capped = tuple(capped)
        if sequence is None:
            n1 = sum(1 for ar in self.roots if self.root_class[ar] == 1)
            if any(self.root_class[ar] == 2 for ar in self.roots[:n1]):
                raise InputError("constructed root order is not separated")
            sequence = ([RootLabel(ar) for ar in self.roots[:n1]]
                        + [EtaLabel(a) for a in self.etas]
                        + [RootLabel(ar) for ar in self.roots[n1:]])
        self.sequence = tuple(sequence)
        self._pos = {lbl: i for i, lbl in enumerate(self.sequence)}
        if len(self._pos) != len(self.sequence):
            raise InputError("duplicate label in the order")

    @classmethod
    def from_labels(cls, datum, K, sequence):
        roots = [l.root for l in sequence if isinstance(l, RootLabel)]
        etas = [l.element for l in sequence if isinstance(l, EtaLabel)]
        return cls(datum, K, roots, etas, sequence=sequence)

    def rank(self, label):
        return self._pos[label]

    def labels_ascending(self):
        return list(self.sequence)

    def serialize(self):
        return [format_label(self.datum, lbl) for lbl in self.sequence]

    # -- invariants ----------------------------------------------------------

    def violations(self):
        """All violated order invariants, as human-readable strings."""
        d = self.datum
        out = []
        pos = {ar: i for i, ar in enumerate(self.roots)}
        cls = self.root_class
        cap = max([0] + [ar.level for ar in self.roots])
        for i, x in enumerate(self.roots):
            for y in self.roots[i + 1:]:
                combos, _ = _pair_combinations(d, x, y, cap)
                lo, hi = pos[x], pos[y]
                for c in combos:
                    p = pos.get(c)
                    if p is not None and not lo < p < hi:
                        out.append(f"convexity: {d.format_affine(c)} not between "
                                   f"{d.format_affine(x)} and {d.format_affine(y)}")
        seen2 = False
        for ar in self.roots:
            if cls[ar] == 2:
                seen2 = True
            elif seen2:
                out.append(f"separation: class-1 root {d.format_affine(ar)} "
                           "after a class-2 root")
        seen_out = False
        for ar in self.roots:
            if ar not in self.phi_K:
                seen_out = True
            elif seen_out:
                out.append(f"K-compatibility: {d.format_affine(ar)} after a root "
                           "outside the K-subsystem")
        for ar in self.phi_K:
            if ar in cls and cls[ar] != 1:
                out.append(f"classification: {d.format_affine(ar)} in the "
                           "K-subsystem but not class 1")
        for i, lbl in enumerate(self.sequence):
            if not isinstance(lbl, EtaLabel):
                continue
            for other in self.sequence[i + 1:]:
                if isinstance(other, RootLabel) and cls[other.root] == 1:
                    out.append("sandwich: a class-1 root after a top-edge label")
            for other in self.sequence[:i]:
                if isinstance(other, RootLabel) and cls[other.root] == 2:
                    out.append("sandwich: a class-2 root before a top-edge label")
        W = d.weyl_group()
        for i, a in enumerate(self.etas):
            for b in self.etas[i + 1:]:
                if W.bruhat_leq(b, a) and b != a:
                    out.append("eta order does not refine Bruhat order")
        return out

    def check(self):
        bad = self.violations()
        if bad:
            raise PropertyViolation("; ".join(bad[:10]))
        return True


def defect(order_list, phi_K):
    """K-subsystem roots preceded by an outsider."""
    out = set()
    seen_outsider = False
    for ar in order_list:
        if ar in phi_K:
            if seen_outsider:
                out.add(ar)
        else:
            seen_outsider = True
    return out


def repair_step(datum, K, order_list, s_root):
    """Move s_root to the front, re-sorting the displaced prefix through s.

    s_root must be a member of K whose root is in the defect set.  The block
    that preceded it is reordered by the old positions of its reflections;
    everything after keeps its order.
    """
    if s_root not in set(K):
        raise InputError("repair step wants a simple reflection from K")
    pos = {ar: i for i, ar in enumerate(order_list)}
    if s_root not in pos:
        raise InputError("reflection root missing from the order")
    s = affine_reflection(datum, s_root)
    cut = pos[s_root]
    before, after = order_list[:cut], order_list[cut + 1:]

    def image_pos(ar):
        img = s.act(ar)
        if not datum.is_positive_affine(img):
            img = -img
        p = pos.get(img)
        if p is None:
            raise PropertyViolation("reflection image escaped the relevant set")
        return p

    reordered = sorted(before, key=image_pos)
    return [s_root] + reordered + list(after)


def _separating_vector(datum, Jp, cap):
    """Rational v with <v,.> + level negative exactly on the class-1 roots."""
    ns = datum.nsimple
    cols = [tuple(a[i] for a in datum.simple_roots) for i in range(datum.rank)]
    target = tuple(0 if j in Jp else 1 for j in range(ns))
    lam = solve_linear(cols, target)
    if lam is None:
        raise PropertyViolation("no coweight separates the K-directions")
    rho_p = [0] * datum.rank
    for a, av in zip(datum.positive_roots, datum.positive_coroots):
        if datum.root_support(a) <= Jp:
            rho_p = [x + y for x, y in zip(rho_p, av)]
    finite_parts = {ar for ar in datum._sign}
    R = max([1] + [abs(dot(rho_p, a)) for a in finite_parts])
    vs = Fraction(1, 2 * (R + 1))
    vb = Fraction(cap + 1)
    return tuple(vb * l - vs * r for l, r in zip(lam, rho_p))


def build_label_order(poset):
    """Construct and verify the label order for an admissible poset."""
    datum = poset.datum
    K = poset.K
    phi_K = subsystem_positive(datum, K)
    seeds = {ar for _, _, ar in poset.covers if ar is not None}
    S, cap, capped = relevant_closure(datum, K, seeds, phi_K)
    classify = make_classifier(datum, K, phi_K)
    Jp = finite_subsystem_indices(datum, K)
    v = _separating_vector(datum, Jp, cap)

    def g1(ar):
        return dot(v, ar.root) + ar.level

    for ar in S:
        if (g1(ar) < 0) != (classify(ar) == 1):
            raise PropertyViolation(
                f"separating functional misclassifies {datum.format_affine(ar)}")

    def key(ar):
        L = datum.affine_height(ar)
        return tuple(Fraction(g, 1) / L
                     for g in (g1(ar), ar.level) + ar.root)

    ordered = sorted(S, key=key)
    for x, y in zip(ordered, ordered[1:]):
        if key(x) == key(y):
            raise PropertyViolation("tied sort keys in the label order")

    guard = len(S) * len(S) + 1
    while True:
        D = defect(ordered, phi_K)
        if not D:
            break
        guard -= 1
        if guard < 0:
            raise PropertyViolation("defect repair failed to terminate")
        s_root = next((ar for ar in K if ar in D), None)
        if s_root is None:
            raise PropertyViolation("defect set contains no simple K-root")
        ordered = repair_step(datum, K, ordered, s_root)
        if len(defect(ordered, phi_K)) >= len(D):
            raise PropertyViolation("defect repair did not shrink the defect")

    order = LabelOrder(datum, K, ordered, poset.eta_order(),
                       phi_K=phi_K, capped=capped)
    order.check()
    return order


def label_edges(poset, order):
    """Attach ranks and display strings to every cover; build the checkable poset."""
    from .shellcheck import LabeledPoset
    datum = poset.datum
    eta_of = dict(zip(poset.maximal_ids, poset.WJK))
    covers = []
    for up, lo, ar in poset.covers:
        if ar is None:
            label = EtaLabel(eta_of[lo])
        else:
            if not datum.is_positive_affine(ar):
                raise InputError("cover carries a non-positive affine root")
            label = RootLabel(ar)
        covers.append((up, lo, order.rank(label), format_label(datum, label)))
    lengths = [w.length for w in poset.elements]
    lengths.append(max(lengths) + 1 if lengths else 1)
    names = poset.element_names()
    return LabeledPoset(len(poset.elements) + 1, poset.top, poset.tau_id,
                        lengths, covers, names)
