"""Command-line front end: ``polysym <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage errors.  Symbol indices on the command line are 1-based.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import charring, ideal_lab, schur, verify
from .free_algebra import is_highest_weight
from .notation import tpoly
from .polycore import DomainError

SCHEMA = ideal_lab.REPORT_SCHEMA
MAX_N = 6
MAX_M = 6
MAX_DEGREE = 12


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    fmt: str = "text"
    jobs: int = None
    output: str = None

    def validate(self):
        a = self.args
        for name, cap in (("n", MAX_N), ("m", MAX_M)):
            v = getattr(a, name, None)
            if v is not None and not 1 <= v <= cap:
                raise UsageError("--%s must be between 1 and %d" % (name, cap))
        for name in ("degree", "max_degree", "truncate"):
            v = getattr(a, name, None)
            if v is not None and not 0 <= v <= MAX_DEGREE:
                raise UsageError("--%s must be between 0 and %d" % (name.replace("_", "-"), MAX_DEGREE))
        if self.jobs is not None and self.jobs < 1:
            raise UsageError("--jobs must be positive")


# ---------------------------------------------------------------------------
# command handlers: each returns (ok, payload, text lines[, table report])

def _rows_from(payload):
    return [(k, json.dumps(v, sort_keys=True)) for k, v in sorted(payload.items())]


def cmd_verify(cfg):
    a = cfg.args
    if a.what == "psi":
        r = verify.verify_psi(a.n, a.m, a.max_degree, cfg.jobs)
        lines = ["psi_%d vanishing, m=%d, total degree <= %d: %d tuples checked, %d failures"
                 % (a.n + 1, a.m, a.max_degree, r["checked"], len(r["failures"]))]
    elif a.what == "gram":
        results = [verify.verify_gram(n) for n in range(2, a.n + 1)]
        r = {"results": results, "ok": all(x["ok"] for x in results)}
        lines = ["%s: phi(J)=0 %s, highest weight %s, weight %s"
                 % (x["name"], x["phi_zero"], x["highest_weight"], tuple(x["weight"] or ()))
                 for x in results]
    else:
        r = verify.verify_explicit(a.what)
        lines = ["%s: forms equal %s, phi=0 %s, highest weight %s of weight %s"
                 % (r["name"], r["forms_equal"], r["phi_zero"], r["highest_weight"],
                    tuple(r["weight"] or ()))]
    return r["ok"], r, lines


def _element_from_args(a):
    if a.expr:
        return tpoly(a.expr, a.m)
    return verify.relation_in(a.relation, a.m)


def cmd_hwv(cfg):
    a = cfg.args
    f = _element_from_args(a)
    hw, weight = is_highest_weight(f)
    r = {"highest_weight": hw, "weight": list(weight) if weight else None,
         "m": f.space.m, "ok": hw}
    return hw, r, ["highest weight vector: %s, weight %s" % (hw, tuple(weight or ()))]


def cmd_orbit_span(cfg):
    a = cfg.args
    names = [a.relation] if a.relation else ["j32", "j42"] + (["j222"] if a.m >= 3 else [])
    results = [verify.orbit_span_report(nm, a.m) for nm in names]
    r = {"m": a.m, "results": results, "ok": all(x["ok"] for x in results)}
    lines = ["%s: gl_%d-span dimension %d, all phi-killed %s"
             % (x["relation"], a.m, x["dimension"], x["phi_zero"]) for x in results]
    return r["ok"], r, lines


def cmd_decompose(cfg):
    a = cfg.args
    mults = schur.decompose_slice(a.kind, a.n, a.m, a.degree)
    r = {"kind": a.kind, "n": a.n, "m": a.m, "degree": a.degree,
         "decomposition": schur.to_json(mults),
         "dimension": schur.total_dimension(mults, a.m), "ok": True}
    return True, r, ["%s(n=%d, m=%d, degree %d) = %s"
                     % (a.kind, a.n, a.m, a.degree, schur.format_mults(mults))]


def cmd_hilbert(cfg):
    a = cfg.args
    if a.kind != "molien" and a.n != 3:
        raise DomainError("%s is only available for n = 3" % a.kind)
    if a.kind == "secondary":
        s = charring.secondary_hilbert(a.m, a.truncate)
        r = {"series": s.to_json(), "text": str(s), "ok": True}
        return True, r, [str(s)]
    if a.kind == "molien":
        s = charring.molien_hilbert_R(a.n, a.m, a.truncate)
        r = {"series": s.to_json(), "ok": True}
        return True, r, [str(s)]
    ok, lhs, rhs = charring.hironaka_check(a.m, a.truncate)
    r = {"m": a.m, "truncate": a.truncate, "ok": ok,
         "by_degree": lhs.by_degree()}
    return ok, r, ["Hironaka identity for m=%d through degree %d: %s" % (a.m, a.truncate, ok),
                   "dim R by degree: %s" % lhs.by_degree()]


def _report_lines(rep):
    c = rep.counts()
    lines = ["%s: %d verified, %d failed, %d without claim"
             % (rep.table, c["verified"], c["failed"], c["skipped"])]
    for e in rep.entries:
        if e.status == "skipped":
            continue
        extra = ""
        if "constants" in e.detail:
            extra = " constants " + ",".join(e.detail["constants"])
        if "translates" in e.detail:
            extra = " translates " + " ".join("%s=%d" % (k, v[0])
                                              for k, v in e.detail["translates"].items())
        if "reason" in e.detail:
            extra += " (%s)" % e.detail["reason"]
        lines.append("  (%s) %s %s: %s%s" % (",".join(map(str, e.multidegree)), e.kind,
                                            e.key, e.status, extra))
    lines.extend("  note: " + n for n in rep.notes)
    return lines


def cmd_tables(cfg):
    a = cfg.args
    t = a.id
    if t in (2, 4):
        rep = ideal_lab.verify_congruence_table(t, with_certificates=a.certificates)
    elif t in (1, 6):
        rep = ideal_lab.verify_monomial_table(t, with_certificates=a.certificates)
    else:
        _, rep = ideal_lab.build_secondary_generators(3 if t == 3 else 4,
                                                      descending_only=(t == 5))
        rep.table = "table%d" % t
    return rep.ok, rep.to_json(), _report_lines(rep), rep


def cmd_secondary(cfg):
    a = cfg.args
    chosen, rep = ideal_lab.build_secondary_generators(a.m, a.max_degree)
    payload = rep.to_json()
    payload["chosen"] = [{"multidegree": list(k), "monomials": v}
                         for k, v in chosen.items() if v]
    return rep.ok, payload, _report_lines(rep), rep


def cmd_generation(cfg):
    a = cfg.args
    G = ideal_lab.orbit_generators(a.m)
    res = ideal_lab.check_generation(G, 3, a.m, a.max_degree, cfg.jobs)
    r = res.to_json()
    r["provenance"] = G.provenance
    lines = ["generator set: %d elements %s" % (len(G), _prov(G)),
             "generation through degree %d: %s" % (a.max_degree, res.ok)]
    lines += ["  degree %d: %s (dim K = %d)" % (d, v, res.info["kernel_dims"][d])
              for d, v in sorted(res.per_degree.items())]
    lines += ["  deficit at %s: %s" % (f["multidegree"], f["deficit"]) for f in res.failures]
    return res.ok, r, lines


def _prov(G):
    return "(" + ", ".join("%s: %d" % kv for kv in G.provenance.items()) + ")"


def cmd_minimality(cfg):
    a = cfg.args
    G = ideal_lab.orbit_generators(a.m)
    res = ideal_lab.check_minimality(G, 3, a.m, jobs=cfg.jobs)
    r = res.to_json()
    r["provenance"] = G.provenance
    counts = res.info["per_degree_count"]
    lines = ["generator set: %d elements %s" % (len(G), _prov(G)),
             "minimal: %s" % res.ok,
             "per degree: " + ", ".join("%d in degree %d" % (c, d) for d, c in sorted(counts.items())),
             "beta(3,%d) = %d" % (a.m, res.info["beta"])]
    return res.ok, r, lines


def cmd_lowerbound(cfg):
    a = cfg.args
    r = ideal_lab.lowerbound_check(a.n, time_budget=a.time_budget, jobs=cfg.jobs)
    r["ok"] = r["status"] == "pass"
    lines = ["n=%d: %s" % (a.n, r["status"])]
    if "J_in_FK" in r:
        lines.append("J in kernel: %s; J in F^+K: %s; dim (F^+K) = %d of dim K = %d"
                     % (r["J_in_kernel"], r["J_in_FK"], r["FK_dim"], r["kernel_dim"]))
    elif "reason" in r:
        lines.append(r["reason"])
    return r["ok"], r, lines


# ---------------------------------------------------------------------------
# parser

def _global_options(default):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "tsv"], default=default)
    common.add_argument("--jobs", type=int, default=default,
                        help="worker processes (default: $POLYSYM_THREADS or 1)")
    common.add_argument("--output", "-o", default=default, help="write the report here")
    return common


def build_parser():
    # options may appear before or after the command; the copy attached to
    # the subcommands must not reset values given before it
    common = _global_options(argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="polysym", parents=[_global_options(None)],
                                description="Exact checks on multisymmetric polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check named relations")
    v.add_argument("what", choices=["psi", "gram", "j32", "j42"])
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--m", type=int, default=4)
    v.add_argument("--max-degree", type=int, default=8)
    v.set_defaults(handler=cmd_verify)

    for name, handler, helptext in (("hwv", cmd_hwv, "highest weight test"),
                                    ("orbit-span", cmd_orbit_span, "gl_m orbit span")):
        h = sub.add_parser(name, parents=[common], help=helptext)
        h.add_argument("--relation", choices=["j32", "j42", "j222", "gram"], default=None)
        h.add_argument("--expr", default=None,
                       help="element of F, e.g. '6t(x^2y)t(xy) - 4t(xy)^2t(x)'")
        h.add_argument("--m", type=int, default=3)
        h.set_defaults(handler=handler)

    d = sub.add_parser("decompose", parents=[common], help="Schur decomposition of a slice")
    d.add_argument("kind", choices=["kernel", "F", "R"])
    d.add_argument("--n", type=int, default=3)
    d.add_argument("--m", type=int, default=4)
    d.add_argument("--degree", type=int, default=6)
    d.set_defaults(handler=cmd_decompose)

    hs = sub.add_parser("hilbert", parents=[common], help="Hilbert series")
    hs.add_argument("kind", choices=["secondary", "molien", "hironaka-check"])
    hs.add_argument("--n", type=int, default=3)
    hs.add_argument("--m", type=int, default=2)
    hs.add_argument("--truncate", type=int, default=10)
    hs.set_defaults(handler=cmd_hilbert)

    t = sub.add_parser("tables", parents=[common], help="verify the reference tables")
    t.add_argument("action", choices=["verify"])
    t.add_argument("--id", type=int, required=True, choices=range(1, 7), metavar="{1..6}")
    t.add_argument("--certificates", action="store_true", help="embed certificates in JSON")
    t.set_defaults(handler=cmd_tables)

    s = sub.add_parser("secondary", parents=[common], help="secondary generators")
    s.add_argument("action", choices=["build"])
    s.add_argument("--m", type=int, default=3)
    s.add_argument("--max-degree", type=int, default=ideal_lab.N3_DEGREE_BOUND)
    s.set_defaults(handler=cmd_secondary)

    g = sub.add_parser("generation", parents=[common], help="ideal generation check")
    g.add_argument("action", choices=["check"])
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--max-degree", type=int, default=ideal_lab.N3_DEGREE_BOUND)
    g.set_defaults(handler=cmd_generation)

    mn = sub.add_parser("minimality", parents=[common], help="minimality check")
    mn.add_argument("action", choices=["check"])
    mn.add_argument("--m", type=int, default=2)
    mn.set_defaults(handler=cmd_minimality)

    lb = sub.add_parser("lowerbound", parents=[common], help="Gram relation lower bound")
    lb.add_argument("--n", type=int, required=True)
    lb.add_argument("--time-budget", type=float, default=None, help="seconds")
    lb.set_defaults(handler=cmd_lowerbound)
    return p


def _check_ranges(cmd, a):
    if cmd in ("secondary", "generation", "minimality") and a.m > 4:
        raise UsageError("--m must be at most 4 for %s" % cmd)
    if cmd in ("secondary", "generation") and a.max_degree > ideal_lab.N3_DEGREE_BOUND:
        raise UsageError("--max-degree must be at most %d" % ideal_lab.N3_DEGREE_BOUND)
    if cmd == "generation" and a.m < 2 or cmd == "minimality" and a.m < 2:
        raise UsageError("--m must be at least 2")
    if cmd in ("hwv", "orbit-span") and a.expr and a.relation:
        raise UsageError("give --relation or --expr, not both")
    if cmd == "hwv" and not (a.expr or a.relation):
        raise UsageError("give --relation or --expr")


def render(fmt, command, ok, payload, lines, report=None):
    if fmt == "json":
        doc = {"schema": SCHEMA, "command": command, "ok": ok, "result": payload}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "tsv":
        if report is not None:
            return report.to_tsv()
        return "key\tvalue\n" + "".join("%s\t%s\n" % kv for kv in _rows_from(payload))
    return "\n".join(lines + ["PASS" if ok else "FAIL"]) + "\n"


def run(cfg):
    """Execute one command; returns (exit status, report text)."""
    cfg.validate()
    _check_ranges(cfg.command, cfg.args)
    out = cfg.args.handler(cfg)
    ok, payload, lines = out[:3]
    report = out[3] if len(out) > 3 else None
    text = render(cfg.fmt, cfg.command, ok, payload, lines, report)
    return (0 if ok else 1), text


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    cfg = RunConfig(command, args, args.format or "text", args.jobs, args.output)
    try:
        status, text = run(cfg)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print("polysym: error: %s" % exc, file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
