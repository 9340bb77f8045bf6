"""Command-line front end: build, label, verify, and export.

Subcommands: adm, verify, qbg, cox, shell-order.  Exit codes: 0 success /
verification passed, 1 verification failed, 2 bad input.
"""

import argparse
import json
import sys

from .errors import InputError, PropertyViolation
from .rootdata import build_root_datum
from .admissible import build_admissible, coxeter_subset
from .labeling import build_label_order, label_edges
from .exact import solve_linear


def _parse_mu(datum, text, basis):
    try:
        coords = [int(c) for c in text.split(",")] if text else []
    except ValueError:
        raise InputError(f"bad coweight {text!r}") from None
    if basis == "ambient":
        if len(coords) != datum.rank:
            raise InputError(f"mu needs {datum.rank} ambient coordinates")
        return tuple(coords)
    if len(coords) != datum.nsimple:
        raise InputError(f"mu needs {datum.nsimple} coordinates in basis {basis}")
    if basis == "coroot":
        mu = [0] * datum.rank
        for c, av in zip(coords, datum.simple_coroots):
            mu = [m + c * a for m, a in zip(mu, av)]
        return tuple(mu)
    if basis == "fw":
        cols = [tuple(a[i] for a in datum.simple_roots)
                for i in range(datum.rank)]
        sol = solve_linear(cols, tuple(coords))
        if sol is None or any(c.denominator != 1 for c in sol):
            raise InputError("those fundamental-coweight coordinates do not "
                             "give a lattice point")
        return tuple(int(c) for c in sol)
    raise InputError(f"unknown mu basis {basis!r}")


def _parse_K(datum, text):
    if not text:
        return ()
    return tuple(datum.parse_affine_token(tok)
                 for tok in text.split(",") if tok.strip())


def _parse_sigma(datum, text):
    if not text:
        return None
    try:
        perm = [int(c) for c in text.split(",")]
    except ValueError:
        raise InputError(f"bad sigma {text!r}") from None
    return perm


def _emit(args, text):
    if args.out_file and args.out_file != "-":
        with open(args.out_file, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build(args):
    datum = build_root_datum(args.datum)
    mu = _parse_mu(datum, args.mu, args.mu_basis)
    K = _parse_K(datum, args.K)
    return datum, build_admissible(datum, mu, K)


def _labeled_dot(poset, lp):
    return lp.to_dot()


def cmd_adm(args):
    datum, poset = _build(args)
    order = build_label_order(poset)
    lp = label_edges(poset, order)
    if args.out == "dot":
        _emit(args, _labeled_dot(poset, lp))
    elif args.out == "json":
        data = poset.to_json_dict()
        data["label_order"] = order.serialize()
        _emit(args, json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        lines = [f"admissible poset over {datum.name}: "
                 f"{len(poset.elements)} elements + top"]
        for i, w in enumerate(poset.elements):
            lines.append(f"  [{i}] {w.name()}  (length {w.length})")
        lines.append("  top: 1^")
        for up, lo, rank, label in lp.covers:
            lines.append(f"  {lp.names[up]} > {lp.names[lo]}  [{label}]")
        lines.append("label order: " + " < ".join(order.serialize()))
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args):
    datum, poset = _build(args)
    order = build_label_order(poset)
    lp = label_edges(poset, order)
    if args.ideal:
        W = datum.weyl_group()
        chosen = []
        for wtext in args.ideal.split("/"):
            a = W.identity
            for tok in wtext.split():
                if tok != "e":
                    a = a * W.simple(int(tok[1:]) - 1)
            if a not in poset.WJK:
                raise InputError(f"{wtext!r} does not index a maximal element")
            chosen.append(poset.maximal_ids[poset.WJK.index(a)])
        cut = max(rank for lo, rank, _ in lp.down_adj[lp.top] if lo in chosen)
        prefix = [lo for lo, rank, _ in lp.down_adj[lp.top] if rank <= cut]
        lp = lp.ideal_restriction(prefix)
    report = lp.verify_dual_el(jobs=args.jobs)
    ncm_ok = lp.ncm_check()
    coatom_ok, ordering = lp.recursive_coatom_check()
    out = {"dual_el": report,
           "ncm": ncm_ok,
           "recursive_coatom": {"ok": coatom_ok, "ordering": ordering}}
    if args.check == "full" and not args.ideal:
        # heavyweight property sweep: gateway data and the top-layer claims
        from .admissible import compute_sigma, top_two_layer_report
        for w in poset.elements:
            compute_sigma(poset, w)
        out["top_two"] = top_two_layer_report(poset)
        out["label_order_violations"] = order.violations()
    _emit(args, json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0 if report["status"] == "PASS" and ncm_ok and coatom_ok else 1


def cmd_qbg(args):
    datum = build_root_datum(args.datum)
    graph = datum.qbg()
    W = datum.weyl_group()

    def parse_word(text):
        w = W.identity
        for tok in text.split():
            if tok == "e":
                continue
            if not tok.startswith("s"):
                raise InputError(f"bad word token {tok!r}")
            w = w * W.simple(int(tok[1:]) - 1)
        return w

    if args.wt:
        u, v = (parse_word(t) for t in args.wt)
        d, wt = graph.distance_and_weight(u, v)
        _emit(args, json.dumps({"d": d, "wt": list(wt),
                                "wt_coroots": datum.format_coweight(wt)},
                               sort_keys=True) + "\n")
        return 0
    if args.downup:
        u, v = (parse_word(t) for t in args.downup)
        path = graph.downup_path(u, v)
        steps = [{"to": W.elements[e.dst].word_str(),
                  "root": datum.format_root(datum.positive_roots[e.root_idx]),
                  "kind": "quantum" if e.quantum else "bruhat"} for e in path]
        _emit(args, json.dumps(steps, sort_keys=True) + "\n")
        return 0
    if args.updown:
        u, v = (parse_word(t) for t in args.updown)
        path = graph.updown_path(u, v)
        steps = [{"to": W.elements[e.dst].word_str(),
                  "root": datum.format_root(datum.positive_roots[e.root_idx]),
                  "kind": "quantum" if e.quantum else "bruhat"} for e in path]
        _emit(args, json.dumps(steps, sort_keys=True) + "\n")
        return 0
    _emit(args, graph.to_dot())
    return 0


def cmd_cox(args):
    datum, poset = _build(args)
    sigma = _parse_sigma(datum, args.sigma)
    sub = coxeter_subset(poset, sigma)
    if args.out == "dot":
        lines = ["digraph cox {", '  rankdir="BT";']
        for w in sub["elements"]:
            lines.append(f'  "{_cox_name(w)}";')
        for upper, lower in sub["covers"]:
            lines.append(f'  "{_cox_name(poset.elements[lower])}" -> '
                         f'"{_cox_name(poset.elements[upper])}";')
        lines.append("}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        data = {"elements": [_cox_name(w) for w in sub["elements"]],
                "covers": [[_cox_name(poset.elements[u]),
                            _cox_name(poset.elements[l])]
                           for u, l in sub["covers"]]}
        _emit(args, json.dumps(data, sort_keys=True, indent=2) + "\n")
    return 0


def _cox_name(w):
    from .affine import affine_word
    tau, letters = affine_word(w)
    word = " ".join(f"s{i}" for i in _letters_display(w.datum, letters))
    if tau.length == 0 and tau == type(tau).identity(w.datum):
        return word or "e"
    return (tau.name() + " " + word).strip()


def _letters_display(datum, letters):
    # simple finite roots print as 1..n, the extra node(s) as 0 (0.k for products)
    out = []
    for i in letters:
        if i < datum.nsimple:
            out.append(str(i + 1))
        else:
            c = i - datum.nsimple
            out.append("0" if len(datum.components) == 1 else f"0.{c + 1}")
    return out


def cmd_shell_order(args):
    _, poset = _build(args)
    _emit(args, "\n".join(a.word_str() for a in poset.WJK) + "\n")
    return 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="admshell",
        description="admissible sets, quantum Bruhat graphs, and shellability "
                    "verification")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, mu=True):
        sp.add_argument("--datum", required=True,
                        help="preset name (A2, GL3, B2-adjoint, A1xA1) or JSON")
        if mu:
            sp.add_argument("--mu", required=True,
                            help="dominant coweight, comma separated")
            sp.add_argument("--mu-basis", default="ambient",
                            choices=["ambient", "coroot", "fw"])
            sp.add_argument("--K", default="",
                            help="comma separated simple affine roots, "
                                 "e.g. a1,a0")
        sp.add_argument("--out", default="text",
                        choices=["json", "dot", "text"])
        sp.add_argument("--out-file", default="-")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--check", default="fast", choices=["fast", "full"])

    sp = sub.add_parser("adm", help="build and print the labeled poset")
    common(sp)
    sp.set_defaults(fn=cmd_adm)

    sp = sub.add_parser("verify", help="run the full verification pipeline")
    common(sp)
    sp.add_argument("--ideal", default="",
                    help="restrict to the order ideal of these maximal "
                         "elements, words joined by '/'")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("qbg", help="quantum Bruhat graph queries")
    common(sp, mu=False)
    sp.add_argument("--wt", nargs=2, metavar=("U", "V"))
    sp.add_argument("--downup", nargs=2, metavar=("U", "V"))
    sp.add_argument("--updown", nargs=2, metavar=("U", "V"))
    sp.set_defaults(fn=cmd_qbg)

    sp = sub.add_parser("cox", help="the Coxeter-element sub-poset")
    common(sp)
    sp.add_argument("--sigma", default="",
                    help="permutation of the simple affine roots, "
                         "comma separated images")
    sp.set_defaults(fn=cmd_cox)

    sp = sub.add_parser("shell-order",
                        help="component order of the maximal elements")
    common(sp)
    sp.set_defaults(fn=cmd_shell_order)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if args.datum.strip().startswith("{"):
            args.datum = json.loads(args.datum)
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
