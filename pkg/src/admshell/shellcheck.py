"""Graded labeled posets: chain machinery and shellability verification.

Works on plain integer ids so it can host both the admissible posets and
hand-built fixtures.  The central routine walks every interval, counts the
weakly-increasing maximal chains by dynamic programming, and compares the
unique one against the lexicographically least chain.
"""

import itertools
import json
from multiprocessing import get_context

from .errors import InputError, PropertyViolation


class LabeledPoset:
    """Covers carry an integer rank (position in the label order) and a display
    string.  Element 'top' is the formal maximum, 'zero' the minimum."""

    def __init__(self, n, top, zero, lengths, covers, names=None):
        self.n = n
        self.top = top
        self.zero = zero
        self.lengths = list(lengths)
        self.covers = sorted(covers, key=lambda c: (c[0], c[1]))
        self.names = list(names) if names else [str(i) for i in range(n)]
        self.down_adj = [[] for _ in range(n)]
        self.up_adj = [[] for _ in range(n)]
        ranks_seen = {}
        for up, lo, rank, label in self.covers:
            if self.lengths[up] != self.lengths[lo] + 1:
                raise InputError("cover with a length gap")
            if (up, rank) in ranks_seen:
                raise InputError("two covers of one element share a label")
            ranks_seen[(up, rank)] = lo
            self.down_adj[up].append((lo, rank, label))
            self.up_adj[lo].append((up, rank))
        for i in range(n):
            self.down_adj[i].sort(key=lambda t: t[1])
        self._down_bits = None
        self._up_bits = None
        self._check_shape()

    def _check_shape(self):
        minimal = [i for i in range(self.n)
                   if not self.down_adj[i] and i != self.top]
        if self.n > 1 and (len(minimal) != 1 or minimal[0] != self.zero):
            raise InputError("poset needs a unique minimal element")
        orphan = [i for i in range(self.n)
                  if not self.up_adj[i] and i != self.top]
        if orphan:
            raise InputError("element neither covered nor the top")

    def __eq__(self, other):
        return (isinstance(other, LabeledPoset) and self.n == other.n
                and self.top == other.top and self.zero == other.zero
                and self.lengths == other.lengths and self.covers == other.covers
                and self.names == other.names)

    def bits(self):
        if self._down_bits is None:
            down = [1 << i for i in range(self.n)]
            up = [1 << i for i in range(self.n)]
            order = sorted(range(self.n), key=lambda i: self.lengths[i])
            for i in order:
                for lo, _, _ in self.down_adj[i]:
                    down[i] |= down[lo]
            for i in reversed(order):
                for upp, _ in self.up_adj[i]:
                    up[i] |= up[upp]
            self._down_bits = down
            self._up_bits = up
        return self._down_bits, self._up_bits

    def leq(self, i, j):
        down, _ = self.bits()
        return bool(down[j] >> i & 1)

    def length_of_poset(self):
        return self.lengths[self.top] - self.lengths[self.zero]

    # -- chains --------------------------------------------------------------

    def all_maximal_chains(self, u, v, cap=None):
        """Every maximal chain of [u, v], as edge lists top-down."""
        _, up = self.bits()
        out = []

        def extend(z, acc):
            if cap is not None and len(out) >= cap:
                return
            if z == u:
                out.append(list(acc))
                return
            for lo, rank, label in self.down_adj[z]:
                if self.leq(u, lo):
                    acc.append((z, lo, rank, label))
                    extend(lo, acc)
                    acc.pop()

        extend(v, [])
        return out

    def _interval_engine(self, u):
        """Per-bottom DP: counting increasing chains down to u."""
        memo = {}
        down_adj = self.down_adj
        leq = self.leq

        def count(z, r):
            if z == u:
                return 1
            key = (z, r)
            got = memo.get(key)
            if got is None:
                got = 0
                for lo, rank, _ in down_adj[z]:
                    if rank >= r and leq(u, lo):
                        got += count(lo, rank)
                memo[key] = got
            return got

        def extract(v):
            chain = []
            z, r = v, -1
            while z != u:
                step = None
                for lo, rank, label in down_adj[z]:
                    if rank >= r and leq(u, lo) and count(lo, rank) > 0:
                        step = (z, lo, rank, label)
                        break
                if step is None:
                    raise AssertionError("lost the increasing chain")
                chain.append(step)
                z, r = step[1], step[2]
            return chain

        def lexmin(v):
            chain = []
            z = v
            while z != u:
                lo, rank, label = next((lo, rank, label)
                                       for lo, rank, label in down_adj[z]
                                       if leq(u, lo))
                chain.append((z, lo, rank, label))
                z = lo
            return chain

        return count, extract, lexmin

    def _verify_bottoms(self, bottoms):
        checked = 0
        violations = []
        for u in bottoms:
            count, extract, lexmin = self._interval_engine(u)
            _, up_bits = self.bits()
            tops = [v for v in range(self.n) if v != u and up_bits[u] >> v & 1]
            for v in tops:
                checked += 1
                c = count(v, -1)
                bad = None
                if c != 1:
                    bad = f"{c} label-increasing maximal chains"
                else:
                    inc = extract(v)
                    lex = lexmin(v)
                    if inc != lex:
                        bad = ("the increasing chain is not lexicographically "
                               "least")
                if bad is not None:
                    chains = self.all_maximal_chains(u, v, cap=24)
                    violations.append({
                        "w": self.names[u],
                        "w_prime": self.names[v],
                        "reason": bad,
                        "chains": [[e[3] for e in ch] for ch in chains],
                    })
        return checked, violations

    def verify_dual_el(self, jobs=1):
        """Check every interval for the two chain conditions."""
        bottoms = [u for u in range(self.n) if u != self.top]
        if jobs and jobs > 1:
            chunks = [bottoms[i::jobs] for i in range(jobs)]
            ctx = get_context("fork")
            global _POOL_POSET
            _POOL_POSET = self
            with ctx.Pool(jobs) as pool:
                parts = pool.map(_pool_verify, chunks)
            checked = sum(p[0] for p in parts)
            violations = [v for p in parts for v in p[1]]
        else:
            checked, violations = self._verify_bottoms(bottoms)
        violations.sort(key=lambda v: (v["w"], v["w_prime"]))
        return {"status": "PASS" if not violations else "FAIL",
                "intervals_checked": checked,
                "violations": violations}

    def distinguished_chain(self, w, gateway):
        """The increasing chain of [w, gateway] with the top edge prepended.

        gateway must be a coatom; the interval chain must be unique.
        """
        top_edge = next(((self.top, lo, rank, label)
                         for lo, rank, label in self.down_adj[self.top]
                         if lo == gateway), None)
        if top_edge is None:
            raise InputError("gateway is not covered by the top element")
        count, extract, _ = self._interval_engine(w)
        if gateway == w:
            return [top_edge]
        if not self.leq(w, gateway):
            raise InputError("element does not sit below the gateway")
        c = count(gateway, -1)
        if c != 1:
            raise PropertyViolation(
                f"interval below the gateway has {c} increasing chains")
        return [top_edge] + extract(gateway)

    # -- recursive coatom orderings -------------------------------------------

    def recursive_coatom_check(self):
        down, _ = self.bits()
        covers_of = {}
        for up, lo, rank, _ in self.covers:
            covers_of.setdefault(up, []).append((lo, rank))
        direct = {(up, lo) for up, lo, _, _ in self.covers}
        memo = {}

        def chain_len(top_el):
            return self.lengths[top_el] - self.lengths[self.zero]

        def attempt(top_el, first):
            key = (top_el, first)
            got = memo.get(key)
            if got is not None:
                return got
            memo[key] = True  # provisional, cycles impossible in a poset
            if chain_len(top_el) <= 1:
                memo[key] = True
                return True
            coatoms = covers_of.get(top_el, [])
            ordering = sorted(
                coatoms, key=lambda t: (t[0] not in first, t[1], t[0]))
            ids = [c for c, _ in ordering]
            ok = _coatom_conditions(ids, down, direct, attempt)
            memo[key] = ok
            return ok

        def _coatom_conditions(ids, down, direct, rec):
            for j, xj in enumerate(ids):
                earlier = ids[:j]
                fj = frozenset(z for z, _ in covers_of.get(xj, [])
                               if any((xi, z) in direct for xi in earlier))
                if not rec(xj, fj):
                    return False
                if j == 0:
                    continue
                union_prev = 0
                for xi in earlier:
                    union_prev |= down[xi]
                common = union_prev & down[xj] & ~(1 << xj)
                reachable = 0
                for z in fj:
                    reachable |= down[z]
                if common & ~reachable:
                    return False
            return True

        coatoms = covers_of.get(self.top, [])
        ordering = sorted(coatoms, key=lambda t: (t[1], t[0]))
        ids = [c for c, _ in ordering]
        ok = attempt(self.top, frozenset())
        return ok, [self.names[i] for i in ids]

    # -- N-Cohen-Macaulay ------------------------------------------------------

    def ncm_check(self, order_hint=None):
        """Recursive purity of the poset without its formal top element."""
        down, up = self.bits()
        full = 0
        for i in range(self.n):
            if i != self.top:
                full |= 1 << i
        if order_hint is None:
            order_hint = [lo for lo, _, _ in self.down_adj[self.top]]
        hint_pos = {x: i for i, x in enumerate(order_hint)}
        target = self.lengths[self.top] - self.lengths[self.zero] - 1
        memo = {}

        def induced_chain_lengths(mask):
            lens = {}
            order = sorted((i for i in range(self.n) if mask >> i & 1),
                           key=lambda i: self.lengths[i])
            for i in order:
                below = down[i] & mask & ~(1 << i)
                if not below:
                    lens[i] = (0, 0)
                    continue
                cov = [j for j in _bits_iter(below)
                       if not (up[j] & below & ~(1 << j))]
                lo = min(lens[j][0] for j in cov) + 1
                hi = max(lens[j][1] for j in cov) + 1
                lens[i] = (lo, hi)
            return lens

        def maxima(mask):
            return [i for i in _bits_iter(mask)
                    if not (up[i] & mask & ~(1 << i))]

        def rec(mask, N):
            key = (mask, N)
            got = memo.get(key)
            if got is not None:
                return got
            if not mask >> self.zero & 1:
                memo[key] = False
                return False
            lens = induced_chain_lengths(mask)
            if any(a != b for a, b in lens.values()):
                memo[key] = False
                return False
            tops = maxima(mask)
            if len(tops) == 1:
                ok = lens[tops[0]][0] == N
                memo[key] = ok
                return ok
            if any(lens[x][0] != N for x in tops):
                memo[key] = False
                return False

            def try_order(seq):
                for j in range(1, len(seq)):
                    inter = down[seq[j]] & mask
                    prev = 0
                    for i in range(j):
                        prev |= down[seq[i]]
                    if not rec(inter & prev, N - 1):
                        return False
                return True

            seq = sorted(tops, key=lambda x: (hint_pos.get(x, self.n), x))
            ok = try_order(seq)
            if not ok and len(tops) <= 6:
                ok = any(try_order(list(p))
                         for p in itertools.permutations(tops))
            memo[key] = ok
            return ok

        return rec(full, target)

    # -- ideal restriction ------------------------------------------------------

    def ideal_restriction(self, gateway_ids):
        """Sub-poset below a rank-downward-closed set of coatoms, plus the top."""
        chosen = list(dict.fromkeys(gateway_ids))
        if not chosen:
            raise InputError("the restriction needs at least one coatom")
        top_rank = {lo: rank for lo, rank, _ in self.down_adj[self.top]}
        for c in chosen:
            if c not in top_rank:
                raise InputError("restriction member is not a coatom")
        cut = max(top_rank[c] for c in chosen)
        if any(lo not in chosen
               for lo, rank in top_rank.items() if rank <= cut):
            raise InputError("restriction set is not downward closed "
                             "in the label order")
        down, _ = self.bits()
        keep = 0
        for c in chosen:
            keep |= down[c]
        keep_ids = sorted(_bits_iter(keep)) + [self.top]
        remap = {old: i for i, old in enumerate(keep_ids)}
        covers = []
        for up, lo, rank, label in self.covers:
            if up == self.top:
                if lo in chosen:
                    covers.append((remap[self.top], remap[lo], rank, label))
            elif up in remap and lo in remap:
                covers.append((remap[up], remap[lo], rank, label))
        return LabeledPoset(len(keep_ids), remap[self.top], remap[self.zero],
                            [self.lengths[i] for i in keep_ids], covers,
                            [self.names[i] for i in keep_ids])

    # -- serialization ------------------------------------------------------------

    def to_json_dict(self):
        return {"n": self.n, "top": self.top, "zero": self.zero,
                "lengths": self.lengths,
                "covers": [list(c) for c in self.covers],
                "names": self.names}

    @classmethod
    def from_json_dict(cls, data):
        covers = [tuple(c) for c in data["covers"]]
        return cls(data["n"], data["top"], data["zero"], data["lengths"],
                   covers, data["names"])

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def to_dot(self):
        lines = ["digraph poset {", '  rankdir="BT";']
        for i in range(self.n):
            lines.append(f'  "{self.names[i]}";')
        for up, lo, _, label in self.covers:
            lines.append(f'  "{self.names[lo]}" -> "{self.names[up]}" '
                         f'[label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _bits_iter(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


_POOL_POSET = None


def _pool_verify(bottoms):
    return _POOL_POSET._verify_bottoms(bottoms)
