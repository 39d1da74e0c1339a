"""Command-line interface: catalog access, involution tables, classification,
theorem verification, sweeps, coset enumeration, decompositions and
isomorphism queries.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 internal
engine error (order collapse etc., surfaced with context).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import cache, catalog, expected, fp, involutions, iso, search, subgroups
from .engine import EngineError, OrderMismatch
from .words import parse_word

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_ENGINE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("error: %s" % message, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    command: str = ""
    m_values: tuple[int, ...] = ()
    family: str | None = None
    fmt: str = "md"
    cache_dir: str | None = None
    workers: int = 1
    seed: int = 0
    verbosity: int = 1
    extra: dict = field(default_factory=dict)


def parse_m_range(text: str) -> tuple[int, ...]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = tuple(range(int(lo), int(hi) + 1))
    else:
        values = (int(text),)
    for m in values:
        if not 5 <= m <= 10:
            raise ValueError("m must lie in 5..10, got %d" % m)
    return values


def load_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


# rendering -------------------------------------------------------------------


def render(rows, columns, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, quoting=csv.QUOTE_MINIMAL)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _flat(row.get(k)) for k in columns})
        return buf.getvalue().rstrip("\n")
    widths = {c: max(len(c), *(len(str(_flat(r.get(c)))) for r in rows))
              if rows else len(c) for c in columns}
    lines = ["| " + " | ".join(c.ljust(widths[c]) for c in columns) + " |",
             "|" + "|".join("-" * (widths[c] + 2) for c in columns) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(
            str(_flat(row.get(c))).ljust(widths[c]) for c in columns) + " |")
    return "\n".join(lines)


def _flat(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if value is None:
        return ""
    return value


def _emit(text, cfg):
    if cfg.verbosity > 0 or True:
        print(text)


# subcommands -----------------------------------------------------------------


def cmd_catalog(cfg, args):
    if args.catalog_action == "list":
        families = [args.family] if args.family else list(catalog.FAMILIES)
        rows = []
        for fam in families:
            for n, row in sorted(catalog.table_rows(fam).items()):
                spec_u = ""
                if args.m and fam in ("M_II-B", "M_II-D"):
                    spec_u = catalog.FamilySpec(fam, n, args.m).u
                rows.append({
                    "family": fam, "n": n,
                    "params": list(row.params),
                    "u": spec_u,
                    "flags": " ".join(filter(None, [
                        "dup=%d" % row.duplicate_of if row.duplicate_of else "",
                        row.provenance if row.provenance != "original" else "",
                        "has-historical" if row.historical_params else ""])),
                })
        _emit(render(rows, ["family", "n", "params", "u", "flags"], cfg.fmt), cfg)
        return EXIT_OK
    # build
    spec = catalog.FamilySpec(args.family, args.n, args.m,
                              historical=args.historical)
    pres = catalog.family_presentation(spec.family, spec.m, spec.params,
                                       u=spec.u, label=spec.label)
    g = cache.materialize_cached(pres, cfg.cache_dir, family=spec.family,
                                 n=spec.n, params=spec.params)
    rows = [{
        "label": g.label, "order": g.order, "exponent": g.exponent,
        "rank": g.rank, "center": len(g.center_codes),
        "involutions": len(g.involution_codes),
    }]
    _emit(render(rows, list(rows[0]), cfg.fmt), cfg)
    return EXIT_OK


def cmd_involutions(cfg, args):
    targets = []
    families = [args.family] if args.family else list(catalog.FAMILIES)
    for fam in families:
        ns = [args.n] if args.n else sorted(catalog.table_rows(fam))
        targets.extend(catalog.FamilySpec(fam, n, args.m) for n in ns)
    rows = []
    for spec in targets:
        g = catalog.build(spec)
        rep = involutions.enumerate_involutions(g)
        rows.append({
            "family": spec.family, "n": spec.n, "m": spec.m,
            "central": len(rep.central),
            "noncentral": len(rep.noncentral),
            "total": rep.total,
            "phi": "" if rep.phi_witness is None
                   else "phi_{%s}" % ",".join(sorted(rep.phi_witness)),
        })
    _emit(render(rows, ["family", "n", "m", "central", "noncentral",
                        "total", "phi"], cfg.fmt), cfg)
    return EXIT_OK


def _classify_one(spec_tuple):
    family, n, m = spec_tuple
    g = catalog.build(catalog.FamilySpec(family, n, m))
    rec = search.classify_group(g)
    rec["family"], rec["n"], rec["m"] = family, n, m
    return rec


def cmd_classify(cfg, args):
    mismatch = False
    all_records = []
    for m in cfg.m_values:
        specs = [(s.family, s.n, s.m) for s in catalog.catalog_specs(m)]
        if args.family:
            specs = [s for s in specs if s[0] == args.family]
        if cfg.workers > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                records = list(pool.map(_classify_one, specs))
        else:
            records = [_classify_one(s) for s in specs]
        records.sort(key=lambda r: (r["m"], r["family"], r["n"]))
        all_records.extend(records)
        if not args.family:
            gamma = sorted((r["family"], r["n"]) for r in records
                           if r["generated_by_involutions"])
            winners = sorted((r["family"], r["n"]) for r in records
                             if r["certificates"])
            if gamma != sorted(expected.GAMMA) or winners != sorted(expected.WINNERS):
                mismatch = True
    summary = {
        "winners": sorted({(r["family"], r["n"]) for r in all_records
                           if r["certificates"]}),
        "gamma_count": len({(r["family"], r["n"]) for r in all_records
                            if r["generated_by_involutions"]}),
        "records": len(all_records),
    }
    if cfg.fmt == "json":
        _emit(json.dumps({"records": all_records,
                          "summary": {k: _jsonable(v) for k, v in summary.items()}},
                         indent=2, sort_keys=True, default=_jsonable), cfg)
    else:
        cols = ["m", "family", "n", "order", "exponent", "rank",
                "central_involutions", "noncentral_involutions",
                "generated_by_involutions", "phi_witness", "schlafli_types",
                "certificate_count"]
        rows = [{**r, "certificate_count": len(r["certificates"]),
                 "schlafli_types": [list(t) for t in r["schlafli_types"]]}
                for r in all_records]
        _emit(render(rows, cols, cfg.fmt), cfg)
        _emit("winners: %s" % summary["winners"], cfg)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _jsonable(v):
    if isinstance(v, (set, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    return v


def cmd_verify_theorem(cfg, args):
    ok = True
    for m in cfg.m_values:
        report = search.verify_theorem(m)
        ok = ok and report["ok"]
        if cfg.fmt == "json":
            slim = dict(report)
            slim.pop("records", None)
            _emit(json.dumps(slim, indent=2, sort_keys=True, default=_jsonable), cfg)
        else:
            _emit("m=%d: %s" % (m, "PASS" if report["ok"] else "FAIL"), cfg)
            for name, part in report["parts"].items():
                info = {k: v for k, v in part.items() if k != "ok"}
                _emit("  %-30s %s %s" % (name, "ok" if part["ok"] else "FAIL",
                                         info if cfg.verbosity > 1 else ""), cfg)
            if "part5_winners" in report["parts"]:
                _emit("  winners: %s" %
                      report["parts"]["part5_winners"]["winners"], cfg)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_sweep(cfg, args):
    report = iso.sweep_report(args.family, args.m)
    payload = {
        "family": args.family, "m": args.m,
        "tuples_tried": report.result.tried,
        "tuples_kept": report.result.kept,
        "classes": len(report.result.classes),
        "in_family_classes": report.in_family_count,
        "cross_family": [[list(rep[0]), rep[1], list(key)]
                         for rep, key in report.cross_family],
        "unmatched": [list(r[0]) for r in report.unmatched],
        "table_matches": {str(n): [list(rep[0]), rep[1]]
                          for n, rep in report.table_matches.items()},
    }
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
        _emit("wrote %s (%d classes, %d in-family)" %
              (args.report, payload["classes"], report.in_family_count), cfg)
    else:
        _emit(text, cfg)
    want = expected.SWEEP_CLASS_COUNTS.get(args.family)
    if want is not None and (report.in_family_count != want or report.unmatched):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_fp(cfg, args):
    if args.fp_action != "order":
        raise SystemExit(EXIT_USAGE)
    if args.preset:
        if args.preset != "thm5":
            print("unknown preset %r" % args.preset, file=sys.stderr)
            return EXIT_USAGE
        pres = fp.quotient_presentation(args.m, args.e)
    else:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        gens = args.generators.split()
        pres = fp.FpPresentation.from_text(gens, text)
    limit = args.max_cosets or 2 ** (args.m + 4 if args.m else 16)
    try:
        ct = fp.coset_enumerate(pres, max_cosets=limit)
    except fp.Exceeded as exc:
        print("inconclusive: %s" % exc, file=sys.stderr)
        return EXIT_ENGINE
    rows = [{"order": ct.order, "cosets_defined": ct.cosets_defined}]
    _emit(render(rows, ["order", "cosets_defined"], cfg.fmt), cfg)
    return EXIT_OK


def cmd_decompose(cfg, args):
    spec = catalog.FamilySpec(args.family, args.n, args.m)
    g = catalog.build(spec)
    rows = []
    if spec.family == "M_III":
        kind, left, right = expected.RANK4_DECOMPOSITIONS[spec.n]
        pattern = (kind, tuple(g.gens[x] for x in left),
                   tuple(g.gens[x] for x in right))
        verdict = subgroups.verify_decomposition(g, pattern)
        rows.append({"group": g.label, "decomposition":
                     "<%s> %s <%s>" % (",".join(left),
                                       {"direct": "x", "semidirect": "x|",
                                        "product": "*"}[kind], ",".join(right)),
                     "ok": verdict.ok, "detail": verdict.detail})
    elif spec.family == "M_II-D" and spec.n in (3, 19):
        from .words import Word
        s0 = g.evaluate(Word((("r", 1),)))
        s1 = g.evaluate(Word((("q", 3), ("r", 1))))
        s2 = g.evaluate(Word((("p", -1), ("q", 3), ("r", 1))))
        s1s2s1 = g.mul(g.mul(s1, s2), s1)
        h2 = (s2, s1s2s1)
        h0 = (s0, g.mul(g.mul(s1, s0), s1))
        inner = "direct" if spec.n == 19 else "semidirect"
        pattern = ("semidirect", (inner, h2, h0), (s1,))
        verdict = subgroups.verify_decomposition(g, pattern)
        label = "(D_%d %s D_2) x| Z_2" % (2 ** (spec.m - 4),
                                          "x" if spec.n == 19 else "x|")
        rows.append({"group": g.label, "decomposition": label,
                     "ok": verdict.ok, "detail": verdict.detail})
    else:
        print("no decomposition on file for %s" % g.label, file=sys.stderr)
        return EXIT_USAGE
    _emit(render(rows, ["group", "decomposition", "ok", "detail"], cfg.fmt), cfg)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_MISMATCH


def cmd_iso(cfg, args):
    a = catalog.build(catalog.FamilySpec(args.family, args.n, args.m))
    b = catalog.build(catalog.FamilySpec(args.family2 or args.family,
                                         args.n2, args.m))
    fa, fb = iso.fingerprint(a), iso.fingerprint(b)
    witness = iso.find_isomorphism(a, b) if fa == fb else None
    rows = [{
        "a": a.label, "b": b.label,
        "fingerprints_equal": fa == fb,
        "isomorphic": witness is not None,
        "images": {k: b.name_of(v) for k, v in witness.images.items()}
                  if witness else None,
    }]
    if cfg.fmt == "json":
        _emit(json.dumps(rows[0], indent=2, sort_keys=True), cfg)
    else:
        _emit(render(rows, ["a", "b", "fingerprints_equal", "isomorphic",
                            "images"], cfg.fmt), cfg)
    return EXIT_OK


# entry -----------------------------------------------------------------------


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value config file")
    common.add_argument("--format", dest="fmt", choices=("md", "json", "csv"))
    common.add_argument("--cache-dir")
    common.add_argument("--workers", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("-q", "--quiet", action="store_true")

    parser = _Parser(prog="stringc",
                     description="2-group catalog and string C-group classifier")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or build catalog rows")
    ps = p.add_subparsers(dest="catalog_action", required=True)
    pl = ps.add_parser("list", parents=[common])
    pl.add_argument("--family")
    pl.add_argument("--m", type=int)
    pb = ps.add_parser("build", parents=[common])
    pb.add_argument("--family", required=True)
    pb.add_argument("--n", type=int, required=True)
    pb.add_argument("--m", type=int, required=True)
    pb.add_argument("--historical", action="store_true")

    p = sub.add_parser("involutions", parents=[common],
                       help="involution counts, table-shaped")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="full per-group classification")
    p.add_argument("--m", required=True)
    p.add_argument("--family")

    p = sub.add_parser("verify-theorem", parents=[common],
                       help="verify the classification")
    p.add_argument("--m", required=True)

    p = sub.add_parser("sweep", parents=[common],
                       help="parameter sweep and deduplication")
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--report")

    p = sub.add_parser("fp", help="finitely presented group utilities")
    ps = p.add_subparsers(dest="fp_action", required=True)
    po = ps.add_parser("order", parents=[common])
    po.add_argument("--preset")
    po.add_argument("--m", type=int)
    po.add_argument("--e", type=int, default=0)
    po.add_argument("--file", help="relator file, one word per line ('-': stdin)")
    po.add_argument("--generators", default="s0 s1 s2")
    po.add_argument("--max-cosets", type=int)

    p = sub.add_parser("decompose", parents=[common],
                       help="verify a product decomposition")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("iso", parents=[common],
                       help="isomorphism test between two rows")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family2")
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    return parser


def make_config(args) -> RunConfig:
    file_values = load_config_file(args.config) if args.config else {}
    cfg = RunConfig(command=args.command)
    cfg.fmt = args.fmt or file_values.get("format", "md")
    cfg.cache_dir = args.cache_dir or file_values.get("cache_dir") or \
        os.environ.get(cache.ENV_VAR)
    cfg.workers = args.workers or int(file_values.get("workers", 1))
    cfg.seed = args.seed if args.seed is not None else int(file_values.get("seed", 0))
    cfg.verbosity = 0 if args.quiet else 1 + args.verbose
    if getattr(args, "m", None) is not None and isinstance(args.m, str):
        cfg.m_values = parse_m_range(args.m)
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(args)
        handler = {
            "catalog": cmd_catalog,
            "involutions": cmd_involutions,
            "classify": cmd_classify,
            "verify-theorem": cmd_verify_theorem,
            "sweep": cmd_sweep,
            "fp": cmd_fp,
            "decompose": cmd_decompose,
            "iso": cmd_iso,
        }[args.command]
        return handler(cfg, args)
    except OrderMismatch as exc:
        print("engine error: %s (found order %d, expected %d)"
              % (exc, exc.found, exc.expected), file=sys.stderr)
        return EXIT_ENGINE
    except EngineError as exc:
        print("engine error: %s" % exc, file=sys.stderr)
        return EXIT_ENGINE
    except (ValueError, catalog.UnknownFamily) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
