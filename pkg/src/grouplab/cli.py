"""Command-line front end.

Subcommands: analyze, subgroups, sections, verify, witness, suite.
Exit codes: 0 success, 1 theorem mismatch or nilpotency-test
disagreement, 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._kernels import BACKEND
from .errors import (
    CapExceeded,
    GroupLabError,
    InvalidSpec,
    LatticeCapExceeded,
    NilpotencyTestDisagreement,
    NotSchmidt,
)
from .groups import DEFAULT_CAP, build_group
from .invariants import profile
from .lattice import DEFAULT_LATTICE_CAP, all_subgroups
from .nilpotency import is_nilpotent_lcs, is_nilpotent_sylow, is_schmidt, schmidt_certificate
from .sections import sections
from .specs import parse_spec
from .verify import (
    DEFAULT_CATALOG,
    check_condition2,
    find_witness,
    run_suite,
    verify_theorem,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.json else text
    if args.out:
        Path(args.out).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)


def _group_header(group, spec_text: str) -> dict:
    return {"name": group.name, "order": group.order, "spec": spec_text}


def _build(args):
    spec = parse_spec(args.spec)
    return spec, build_group(spec, cap=args.cap)


def cmd_analyze(args) -> int:
    spec, group = _build(args)
    lattice = all_subgroups(group, cap=args.lattice_cap)
    prof = profile(group)
    by_sylow = is_nilpotent_sylow(group, lattice)
    by_lcs, nil_class = is_nilpotent_lcs(group)
    if by_sylow != by_lcs:
        raise NilpotencyTestDisagreement(
            f"{group.name}: Sylow test {by_sylow}, lower-central test {by_lcs}"
        )
    schmidt = is_schmidt(group, lattice)
    certificate = schmidt_certificate(group, lattice).to_json_dict() if schmidt else None
    condition2 = check_condition2(group, lattice)
    payload = {
        "conditions": {"condition2": condition2, "condition3": prof.phi != 0},
        "group": _group_header(group, spec.text()),
        "nilpotent": {
            "agree": True,
            "class": nil_class,
            "lower_central": by_lcs,
            "sylow": by_sylow,
        },
        "profile": prof.to_json_dict(),
        "schmidt": {"certificate": certificate, "is_schmidt": schmidt},
    }
    hist = " ".join(f"{k}:{v}" for k, v in prof.histogram)
    lines = [
        f"group {group.name}  order {group.order}",
        f"  exponent {prof.exponent}",
        f"  phi {prof.phi}",
        f"  order histogram: {hist}",
        f"  nilpotent: {'yes' if by_sylow else 'no'}"
        + (f" (class {nil_class})" if nil_class is not None else ""),
        f"  condition (2) all subgroups phi != 0: {'yes' if condition2 else 'no'}",
        f"  minimal non-nilpotent: {'yes' if schmidt else 'no'}",
    ]
    if certificate:
        checks = " ".join(
            f"({letter}){'+' if entry['ok'] else '-'}"
            for letter, entry in certificate["checklist"].items()
        )
        lines.append(
            f"  certificate: p={certificate['p']} q={certificate['q']} "
            f"r={certificate['r']}  {checks}"
        )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_subgroups(args) -> int:
    spec, group = _build(args)
    lattice = all_subgroups(group, cap=args.lattice_cap)
    summary = lattice.summary()
    payload = {"group": _group_header(group, spec.text()), "lattice": summary}
    by_order = " ".join(f"{k}:{v}" for k, v in summary["by_order"].items())
    text = "\n".join(
        [
            f"group {group.name}  order {group.order}",
            f"  subgroups: {summary['subgroup_count']}",
            f"  by order: {by_order}",
            f"  normal: {summary['normal_count']}  maximal: {summary['maximal_count']}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sections(args) -> int:
    spec, group = _build(args)
    lattice = all_subgroups(group, cap=args.lattice_cap)
    rows = []
    for section in sections(group, lattice):
        prof = profile(section.quotient)
        rows.append(
            {
                "h_order": section.h.order,
                "identifier": section.identifier,
                "n_order": section.n.order,
                "profile": prof.to_json_dict(),
            }
        )
    payload = {"group": _group_header(group, spec.text()), "sections": rows}
    lines = [f"group {group.name}  order {group.order}  sections {len(rows)}"]
    lines += [
        f"  {row['identifier']}  |H|={row['h_order']} |N|={row['n_order']} "
        f"|H/N|={row['profile']['order']} exp={row['profile']['exponent']} "
        f"phi={row['profile']['phi']}"
        for row in rows
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec, group = _build(args)
    lattice = all_subgroups(group, cap=args.lattice_cap)
    report = verify_theorem(group, lattice)
    payload = report.to_json_dict()
    witness = payload["witness"]
    lines = [
        f"group {group.name}  order {group.order}",
        f"  nilpotent: {'yes' if report.nilpotent else 'no'}",
        f"  sections checked: {report.sections_checked}",
        f"  all sections phi nonzero: {'yes' if report.all_sections_phi_nonzero else 'no'}",
        f"  condition (2) all subgroups: {'yes' if report.condition2 else 'no'}",
        f"  condition (3) phi(G) != 0: {'yes' if report.condition3 else 'no'}",
        "  witness: "
        + (
            f"{witness['section']} (order {witness['profile']['order']}, "
            f"exp {witness['profile']['exponent']}, phi 0)"
            if witness
            else "none"
        ),
        f"  theorem consistent: {'yes' if report.theorem_consistent else 'NO'}",
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.theorem_consistent else EXIT_MISMATCH


def cmd_witness(args) -> int:
    spec, group = _build(args)
    lattice = all_subgroups(group, cap=args.lattice_cap)
    section = find_witness(group, lattice)
    if section is None:
        payload = {"group": _group_header(group, spec.text()), "witness": None}
        _emit(args, payload, f"group {group.name}: no phi = 0 section (nilpotent)")
        return EXIT_OK
    prof = profile(section.quotient)
    payload = {
        "group": _group_header(group, spec.text()),
        "witness": {"profile": prof.to_json_dict(), "section": section.identifier},
    }
    text = (
        f"group {group.name}: witness {section.identifier}  "
        f"|H|={section.h.order} |N|={section.n.order} quotient order {prof.order} "
        f"exp {prof.exponent} phi {prof.phi}"
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_suite(args) -> int:
    if args.default:
        catalog = list(DEFAULT_CATALOG)
    else:
        if not args.catalog:
            raise InvalidSpec("suite needs a catalog file or --default")
        try:
            raw = Path(args.catalog).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidSpec(f"cannot read catalog {args.catalog}: {exc}") from None
        catalog = [
            line.strip()
            for line in raw.splitlines()
            if line.strip() and not line.strip().startswith("#")
        ]
        if not catalog:
            print("warning: empty catalog, nothing to verify", file=sys.stderr)
    suite = run_suite(
        catalog, cap=args.cap, lattice_cap=args.lattice_cap, jobs=args.jobs
    )
    out = json.dumps(suite, indent=2)
    if args.out:
        Path(args.out).write_text(out + "\n", encoding="utf-8")
        summary = suite["summary"]
        print(
            f"suite: {summary['groups']} groups, {summary['failures']} failures, "
            f"{summary['disagreements']} disagreements -> {args.out}"
        )
    else:
        print(out)
    return EXIT_OK if suite["summary"]["failures"] == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouplab",
        description="Finite-group engine: invariants, subgroup lattices, "
        "section-based nilpotency verification",
    )
    parser.add_argument(
        "--backend-info",
        action="store_true",
        help="print the active kernel backend and exit",
    )
    sub = parser.add_subparsers(dest="command")

    def add_common(p, with_spec=True):
        if with_spec:
            p.add_argument("spec", help="group expression, e.g. 'S(3)' or 'prod(C(6), S(3))'")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--out", metavar="PATH", help="write the report to a file")
        p.add_argument(
            "--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (elements)"
        )
        p.add_argument(
            "--lattice-cap",
            type=int,
            default=DEFAULT_LATTICE_CAP,
            help="subgroup enumeration cap",
        )

    for name, func, help_text in [
        ("analyze", cmd_analyze, "profile, nilpotency and Schmidt verdicts"),
        ("subgroups", cmd_subgroups, "subgroup lattice summary"),
        ("sections", cmd_sections, "enumerate sections H/N with quotient profiles"),
        ("verify", cmd_verify, "full nilpotency-criterion verification"),
        ("witness", cmd_witness, "first phi = 0 section, if any"),
    ]:
        p = sub.add_parser(name, help=help_text)
        add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("suite", help="verify a catalog of groups")
    p.add_argument("catalog", nargs="?", help="file with one group expression per line")
    p.add_argument("--default", action="store_true", help="use the built-in catalog")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    add_common(p, with_spec=False)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend_info:
        print(f"kernel backend: {BACKEND}")
        return EXIT_OK
    if not getattr(args, "command", None):
        parser.print_help()
        return EXIT_INPUT
    try:
        return args.func(args)
    except (CapExceeded, LatticeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NilpotencyTestDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InvalidSpec, NotSchmidt, GroupLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
