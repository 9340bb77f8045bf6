"""Based root data in ambient lattice coordinates, plus affine roots.

A datum holds dual lattices X^* and X_* realised as Z^n with the standard dot
pairing.  Roots live in X^*, coroots in X_*.  Presets cover the classical
series in simply-connected or adjoint lattices, GL_n, and binary products;
explicit simple roots/coroots are accepted too.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .exact import dot, solve_linear, vec_add, vec_neg, vec_sub


class AffineRoot:
    """Pair (finite root, integer level), compared structurally."""

    __slots__ = ("root", "level", "_hash")

    def __init__(self, root, level):
        self.root = tuple(root)
        self.level = int(level)
        self._hash = hash((self.root, self.level))

    def __eq__(self, other):
        return (isinstance(other, AffineRoot)
                and self.root == other.root and self.level == other.level)

    def __hash__(self):
        return self._hash

    def __neg__(self):
        return AffineRoot(vec_neg(self.root), -self.level)

    def __repr__(self):
        return f"AffineRoot({self.root}, {self.level})"


def _cartan_matrix(series, n):
    # C[i][j] = <alpha_i^vee, alpha_j>
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if series == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif series == "B":
        if n < 2:
            raise InputError("B_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # alpha_n short
    elif series == "C":
        if n < 2:
            raise InputError("C_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # alpha_n long
    elif series == "D":
        if n < 3:
            raise InputError("D_n needs n >= 3")
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif series == "G":
        if n != 2:
            raise InputError("G_n only exists for n = 2")
        link(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
    else:
        raise InputError(f"unknown series {series!r}")
    return C


class RootDatum:
    def __init__(self, simple_roots, simple_coroots, name="custom"):
        simple_roots = [tuple(int(c) for c in v) for v in simple_roots]
        simple_coroots = [tuple(int(c) for c in v) for v in simple_coroots]
        if len(simple_roots) != len(simple_coroots):
            raise InputError("need as many simple coroots as simple roots")
        if simple_roots:
            ranks = {len(v) for v in simple_roots} | {len(v) for v in simple_coroots}
            if len(ranks) != 1:
                raise InputError("mismatched vector lengths in lattice data")
            self.rank = ranks.pop()
        else:
            raise InputError("need at least one simple root")
        self.name = name
        self.simple_roots = tuple(simple_roots)
        self.simple_coroots = tuple(simple_coroots)
        self.nsimple = len(simple_roots)
        self.cartan = tuple(
            tuple(dot(cv, a) for a in simple_roots) for cv in simple_coroots)
        for i in range(self.nsimple):
            if self.cartan[i][i] != 2:
                raise InputError("<alpha_i^vee, alpha_i> must equal 2")
        self._build_roots()
        self._build_components()
        self.two_rho = tuple(
            sum(a[i] for a in self.positive_roots) for i in range(self.rank))
        for i in range(self.nsimple):
            if dot(self.simple_coroots[i], self.two_rho) != 2:
                raise InputError("lattice data is not a valid based root datum "
                                 "(<alpha_i^vee, 2rho> != 2)")
        self.two_rho_coroot = tuple(
            sum(cv[i] for cv in self.positive_coroots) for i in range(self.rank))
        self._L_scale = 1 + max(dot(self.two_rho_coroot, a)
                                for a in self.positive_roots)

    # -- construction ------------------------------------------------------

    def _build_roots(self):
        simple = list(zip(self.simple_roots, self.simple_coroots))
        seen = dict(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for root, coroot in frontier:
                for a, av in simple:
                    r2 = vec_sub(root, tuple(dot(av, root) * c for c in a))
                    c2 = vec_sub(coroot, tuple(dot(coroot, a) * c for c in av))
                    if r2 not in seen:
                        seen[r2] = c2
                        new.append((r2, c2))
                    elif seen[r2] != c2:
                        raise InputError("inconsistent root/coroot data")
            frontier = new
        pos = []
        for root, coroot in seen.items():
            coords = solve_linear(self.simple_roots, root)
            if coords is None:
                raise InputError("generated root outside the simple-root span")
            if any(c.denominator != 1 for c in coords):
                raise InputError("non-integral root coordinates")
            if all(c >= 0 for c in coords):
                pos.append((root, coroot, tuple(int(c) for c in coords)))
            elif not all(c <= 0 for c in coords):
                raise InputError("root with mixed-sign coordinates; "
                                 "not a valid based root datum")
        for root, _, _ in pos:
            if tuple(2 * c for c in root) in seen:
                raise InputError("non-reduced root system")
            if vec_neg(root) not in seen:
                raise InputError("root system not closed under negation")
        pos.sort(key=lambda t: (sum(t[2]), t[2]))
        self.positive_roots = tuple(p[0] for p in pos)
        self.positive_coroots = tuple(p[1] for p in pos)
        self._simple_coords = {p[0]: p[2] for p in pos}
        self.num_positive = len(pos)
        self._sign = {}
        self._coroot = {}
        for root, coroot in seen.items():
            if root in self._simple_coords:
                self._sign[root] = 1
            else:
                self._sign[root] = -1
                self._simple_coords[root] = tuple(
                    -c for c in self._simple_coords[vec_neg(root)])
            self._coroot[root] = coroot

    def _build_components(self):
        n = self.nsimple
        comp_of = [None] * n
        comps = []
        for i in range(n):
            if comp_of[i] is not None:
                continue
            stack, comp = [i], []
            comp_of[i] = len(comps)
            while stack:
                a = stack.pop()
                comp.append(a)
                for b in range(n):
                    if comp_of[b] is None and self.cartan[a][b] != 0:
                        comp_of[b] = len(comps)
                        stack.append(b)
            comps.append(tuple(sorted(comp)))
        self._comp_of_simple = tuple(comp_of)
        components = []
        for comp in comps:
            member = [r for r in self.positive_roots
                      if all(c == 0 or j in comp
                             for j, c in enumerate(self._simple_coords[r]))]
            theta = max(member, key=lambda r: sum(self._simple_coords[r]))
            for r in member:
                diff = vec_sub(theta, r)
                dc = solve_linear(self.simple_roots, diff)
                if dc is None or any(c < 0 for c in dc):
                    raise InputError("highest root is not highest; "
                                     "component data inconsistent")
            components.append((comp, theta, self._coroot[theta]))
        self.components = tuple(components)

    # -- basic queries -----------------------------------------------------

    def pairing(self, coweight, weight):
        if len(coweight) != self.rank or len(weight) != self.rank:
            raise InputError("vector length does not match the lattice rank")
        return dot(coweight, weight)

    def is_root(self, vec):
        return tuple(vec) in self._sign

    def root_sign(self, vec):
        return self._sign[tuple(vec)]

    def coroot(self, vec):
        return self._coroot[tuple(vec)]

    def simple_coords(self, vec):
        return self._simple_coords[tuple(vec)]

    def root_support(self, vec):
        return frozenset(i for i, c in enumerate(self._simple_coords[tuple(vec)])
                         if c != 0)

    def is_dominant(self, mu):
        return all(dot(mu, a) >= 0 for a in self.simple_roots)

    # -- affine roots ------------------------------------------------------

    def simple_affine_roots(self):
        out = [AffineRoot(a, 0) for a in self.simple_roots]
        out.extend(AffineRoot(vec_neg(theta), 1) for _, theta, _ in self.components)
        return tuple(out)

    def is_positive_affine(self, ar):
        if not self.is_root(ar.root):
            raise InputError(f"{ar.root} is not a root")
        if self._sign[ar.root] > 0:
            return ar.level >= 0
        return ar.level >= 1

    def affine_root_arith(self, ar1, c1, ar2, c2):
        """c1*ar1 + c2*ar2 if it lands in the affine root system, else None."""
        c1, c2 = Fraction(c1), Fraction(c2)
        vec = tuple(c1 * a + c2 * b for a, b in zip(ar1.root, ar2.root))
        lvl = c1 * ar1.level + c2 * ar2.level
        if lvl.denominator != 1 or any(v.denominator != 1 for v in vec):
            return None
        vec = tuple(int(v) for v in vec)
        if not self.is_root(vec):
            return None
        return AffineRoot(vec, int(lvl))

    # level part scaled into (0,1) so this is positive on all of Phi+_aff
    def affine_height(self, ar):
        return Fraction(dot(self.two_rho_coroot, ar.root), self._L_scale) + ar.level

    def in_coroot_cone(self, vec):
        """Is vec a nonnegative integer combination of simple coroots?"""
        return self._cone_cached(tuple(vec))

    @lru_cache(maxsize=None)
    def _cone_cached(self, vec):
        from .exact import nonneg_integer_coords
        return nonneg_integer_coords(self.simple_coroots, vec) is not None

    # -- groups (lazily built, cached) --------------------------------------

    def weyl_group(self):
        if not hasattr(self, "_weyl"):
            from .weyl import WeylGroup
            self._weyl = WeylGroup(self)
        return self._weyl

    def qbg(self):
        if not hasattr(self, "_qbg"):
            from .qbg import QuantumBruhatGraph
            self._qbg = QuantumBruhatGraph(self)
        return self._qbg

    # -- rendering ----------------------------------------------------------

    def format_root(self, vec):
        coords = self._simple_coords[tuple(vec)]
        parts = []
        for i, c in enumerate(coords):
            if c == 0:
                continue
            mag = f"a{i + 1}" if abs(c) == 1 else f"{abs(c)}a{i + 1}"
            parts.append(("-" if c < 0 else ("+" if parts else "")) + mag)
        return "".join(parts) if parts else "0"

    def format_affine(self, ar):
        return f"({self.format_root(ar.root)},{ar.level})"

    def format_coweight(self, vec):
        coords = solve_linear(self.simple_coroots, vec)
        if coords is None or any(c.denominator != 1 for c in coords):
            return "(" + ",".join(str(c) for c in vec) + ")"
        parts = []
        for i, c in enumerate(coords):
            if c == 0:
                continue
            mag = f"a{i + 1}^" if abs(c) == 1 else f"{abs(c)}a{i + 1}^"
            parts.append(("-" if c < 0 else ("+" if parts else "")) + mag)
        return "".join(parts) if parts else "0"

    def affine_token(self, ar):
        """CLI token of a simple affine root: a1..an, a0 (a0.c for products)."""
        simples = self.simple_affine_roots()
        idx = simples.index(ar)
        if idx < self.nsimple:
            return f"a{idx + 1}"
        c = idx - self.nsimple
        return "a0" if len(self.components) == 1 else f"a0.{c + 1}"

    def parse_affine_token(self, token):
        simples = self.simple_affine_roots()
        token = token.strip()
        if token.startswith("a0"):
            if token == "a0":
                if len(self.components) != 1:
                    raise InputError("a0 is ambiguous for products; use a0.<k>")
                return simples[self.nsimple]
            try:
                c = int(token.split(".", 1)[1])
            except (IndexError, ValueError):
                raise InputError(f"bad affine-root token {token!r}") from None
            if not 1 <= c <= len(self.components):
                raise InputError(f"component out of range in {token!r}")
            return simples[self.nsimple + c - 1]
        if token.startswith("a"):
            try:
                i = int(token[1:])
            except ValueError:
                raise InputError(f"bad affine-root token {token!r}") from None
            if not 1 <= i <= self.nsimple:
                raise InputError(f"simple-root index out of range in {token!r}")
            return simples[i - 1]
        raise InputError(f"bad affine-root token {token!r}")

    def __repr__(self):
        return f"RootDatum({self.name!r}, rank={self.rank})"


def _semisimple(series, n, adjoint=False):
    C = _cartan_matrix(series, n)
    if adjoint:
        roots = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        coroots = [tuple(C[i]) for i in range(n)]
    else:
        roots = [tuple(C[i][j] for i in range(n)) for j in range(n)]
        coroots = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return roots, coroots


def _gl(n):
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(tuple(v))
    return roots, list(roots)


def _product(d1, d2, name):
    r1, r2 = d1.rank, d2.rank
    roots = [tuple(v) + (0,) * r2 for v in d1.simple_roots]
    roots += [(0,) * r1 + tuple(v) for v in d2.simple_roots]
    coroots = [tuple(v) + (0,) * r2 for v in d1.simple_coroots]
    coroots += [(0,) * r1 + tuple(v) for v in d2.simple_coroots]
    return RootDatum(roots, coroots, name=name)


def build_root_datum(spec):
    """Build a datum from a preset name, a product "AxB", or explicit data."""
    if isinstance(spec, RootDatum):
        return spec
    if isinstance(spec, dict):
        return RootDatum(spec["simple_roots"], spec["simple_coroots"],
                         name=spec.get("name", "custom"))
    if not isinstance(spec, str):
        raise InputError(f"cannot build a root datum from {spec!r}")
    name = spec.strip()
    if "x" in name:
        parts = name.split("x")
        datum = build_root_datum(parts[0])
        for p in parts[1:]:
            datum = _product(datum, build_root_datum(p), name)
        return datum
    base, _, variant = name.partition("-")
    adjoint = variant == "adjoint"
    if variant not in ("", "adjoint"):
        raise InputError(f"unknown lattice variant {variant!r}")
    base = base.upper()
    if base.startswith("GL"):
        try:
            n = int(base[2:])
        except ValueError:
            raise InputError(f"unknown preset {spec!r}") from None
        if n < 2:
            raise InputError("GL_n needs n >= 2")
        if adjoint:
            raise InputError("GL_n has no adjoint variant here")
        roots, coroots = _gl(n)
        return RootDatum(roots, coroots, name=name)
    series, num = base[:1], base[1:]
    try:
        n = int(num)
    except ValueError:
        raise InputError(f"unknown preset {spec!r}") from None
    roots, coroots = _semisimple(series, n, adjoint=adjoint)
    return RootDatum(roots, coroots, name=name)
