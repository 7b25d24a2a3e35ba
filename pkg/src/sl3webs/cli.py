"""Batch command line interface.

Exit status: 0 on success, 1 on a domain error (bad web, mismatched
boundaries, budget exhaustion, ...), 2 on a usage error.  With
--format json every subcommand prints a single JSON document; the
schemas are listed in the README.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, foams
from .enumeration import (enumerate_non_elliptic,
                          enumerate_superficial_non_elliptic, invariant_dim)
from .certify import certify_indecomposable, certify_not_isomorphic, verify_key_lemma
from .errors import WebError
from .skein import graded_hom_dim, kuperberg_bracket, reduce_to_nonelliptic
from .webio import load_webs, web_to_text
from .webs import SignSequence


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sl3webs",
        description="evaluate, reduce, classify, enumerate and certify "
                    "trivalent webs; evaluate closed pre-foams")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for batch checks")
    parser.add_argument("--seed", type=int, default=None, metavar="S",
                        help="seed for randomised search order")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check web files for structural problems")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("bracket", help="evaluate closed webs to Laurent polynomials")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("reduce", help="expand webs over circle/bigon/square-free webs")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("classify", help="face profile, blocks, nesting and shape flags")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("enum", help="enumerate non-elliptic webs with a given boundary")
    p.add_argument("signs", help="sign sequence, e.g. +--+")
    p.add_argument("--budget", type=int, default=None, metavar="N",
                   help="vertex budget (default 2*len(signs)^2)")
    p.add_argument("--superficial", action="store_true",
                   help="keep only webs with no nested face")

    p = sub.add_parser("invdim", help="invariant-space dimension for a boundary")
    p.add_argument("signs")

    p = sub.add_parser("homdim", help="graded hom dimension between two webs")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("certify", help="witness-polynomial certificates")
    csub = p.add_subparsers(dest="certify_command", required=True)
    ci = csub.add_parser("indec", help="indecomposability of each web in a file")
    ci.add_argument("file")
    cn = csub.add_parser("noniso", help="non-isomorphy of two webs")
    cn.add_argument("file1")
    cn.add_argument("file2")

    p = sub.add_parser("keylemma", help="check all superficial pairs up to a length")
    p.add_argument("--max-len", type=int, required=True, metavar="N")
    p.add_argument("--budget", type=int, default=None, metavar="N")

    p = sub.add_parser("foam", help="closed pre-foam operations")
    fsub = p.add_subparsers(dest="foam_command", required=True)
    fe = fsub.add_parser("eval", help="evaluate closed pre-foams")
    fe.add_argument("files", nargs="+")

    return parser


def _labelled_webs(paths):
    out = []
    for path in paths:
        webs = load_webs(path)
        for i, w in enumerate(webs):
            label = w.name or f"{path}[{i}]"
            out.append((label, w))
    return out


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_validate(args):
    records = []
    ok = True
    for path in args.files:
        for i, w in enumerate(load_webs(path)):
            problems = w.validate()
            ok = ok and not problems
            records.append({"file": path, "index": i, "name": w.name,
                            "valid": not problems, "problems": problems})
    lines = []
    for r in records:
        label = r["name"] or f"{r['file']}[{r['index']}]"
        if r["valid"]:
            lines.append(f"{label}: ok")
        else:
            lines.append(f"{label}: INVALID")
            lines.extend(f"  {p}" for p in r["problems"])
    _emit(args, {"webs": records}, lines)
    return 0 if ok else 1


def cmd_bracket(args):
    records = []
    lines = []
    for label, w in _labelled_webs(args.files):
        value = kuperberg_bracket(w)
        records.append({"web": label, "bracket": str(value),
                        "coefficients": value.coefficient_list()})
        lines.append(f"{label}: {value}")
    _emit(args, {"brackets": records}, lines)
    return 0


def cmd_reduce(args):
    records = []
    lines = []
    for label, w in _labelled_webs(args.files):
        elem = reduce_to_nonelliptic(w)
        terms = [{"coefficient": str(c), "web": web_to_text(t)}
                 for t, c in elem.items()]
        records.append({"web": label, "boundary": str(SignSequence(w.signs)),
                        "terms": terms})
        lines.append(f"{label}: {len(terms)} term(s)")
        for t, c in elem.items():
            lines.append(f"  ({c}) *")
            lines.extend("    " + ln for ln in web_to_text(t).splitlines())
    _emit(args, {"reductions": records}, lines)
    return 0


def cmd_classify(args):
    records = []
    lines = []
    for label, w in _labelled_webs(args.files):
        info = classify.classify_web(w)
        records.append({"web": label, **info})
        flags = [k for k in ("non_elliptic", "superficial", "semi_non_elliptic",
                             "one_elliptic", "semi_superficial") if info[k]]
        lines.append(f"{label}: profile={info['profile']} "
                     f"blocks={info['blocks']} nested={info['nested_faces']} "
                     f"flags={','.join(flags) or '-'}")
    _emit(args, {"webs": records}, lines)
    return 0


def cmd_enum(args):
    signs = SignSequence.parse(args.signs)
    fn = (enumerate_superficial_non_elliptic if args.superficial
          else enumerate_non_elliptic)
    webs = fn(signs, args.budget, seed=args.seed)
    payload = {"signs": str(signs), "count": len(webs), "complete": True,
               "webs": [web_to_text(w) for w in webs]}
    lines = [f"{len(webs)} web(s) with boundary {signs}"]
    for i, w in enumerate(webs):
        lines.append("")
        lines.append(f"web {signs}#{i}")
        lines.extend(web_to_text(w).splitlines())
    _emit(args, payload, lines)
    return 0


def cmd_invdim(args):
    signs = SignSequence.parse(args.signs)
    dim = invariant_dim(signs)
    _emit(args, {"signs": str(signs), "dim": dim}, [str(dim)])
    return 0


def cmd_homdim(args):
    w1 = load_webs(args.file1)[0]
    w2 = load_webs(args.file2)[0]
    value = graded_hom_dim(w1, w2)
    _emit(args, {"homdim": str(value), "coefficients": value.coefficient_list()},
          [str(value)])
    return 0


def cmd_certify(args):
    if args.certify_command == "indec":
        records = []
        lines = []
        for label, w in _labelled_webs([args.file]):
            cert = certify_indecomposable(w)
            records.append({"web": label, **cert.describe()})
            lines.append(f"{label}: {cert.kind} witness={cert.witness}")
        _emit(args, {"certificates": records}, lines)
        return 0
    w1 = load_webs(args.file1)[0]
    w2 = load_webs(args.file2)[0]
    cert = certify_not_isomorphic(w1, w2)
    _emit(args, {"certificates": [cert.describe()]},
          [f"{cert.kind} witness={cert.witness}"])
    return 0


def cmd_keylemma(args):
    report = verify_key_lemma(args.max_len, args.budget, jobs=args.jobs)
    lines = [f"sequences {report['sequences']}  webs {report['webs']}  "
             f"pairs {report['pairs']}  nice {report['nice']}  "
             f"counterexamples {len(report['counterexamples'])}"]
    for c in report["counterexamples"]:
        lines.append(f"NOT NICE for {c['signs']}: witness {c['witness']}")
    _emit(args, report, lines)
    return 0 if not report["counterexamples"] else 1


def cmd_foam(args):
    records = []
    lines = []
    for path in args.files:
        foam = foams.load_foam(path)
        label = foam.name or path
        deg = foams.degree(foam)
        value = foams.evaluate(foam)
        records.append({"foam": label, "degree": deg, "value": str(value)})
        lines.append(f"{label}: degree={deg} value={value}")
    _emit(args, {"foams": records}, lines)
    return 0


_HANDLERS = {
    "validate": cmd_validate,
    "bracket": cmd_bracket,
    "reduce": cmd_reduce,
    "classify": cmd_classify,
    "enum": cmd_enum,
    "invdim": cmd_invdim,
    "homdim": cmd_homdim,
    "certify": cmd_certify,
    "keylemma": cmd_keylemma,
    "foam": cmd_foam,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except WebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
