"""Command-line front end: parse structure documents, run axiom checks and
constructions, print deterministic machine-readable reports.

Exit codes: 0 all checks pass, 1 a check failed (witnesses printed),
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .coalgebra import AXIOMS, AxiomReport, LStructure, check_axiom
from .complexes import check_boundary_forms_agree, check_complex
from .constructions import achiral_entangle, self_entangle
from .convolution import structure_constants
from .dsl import (
    DslError,
    SpecDocument,
    document_from_structure,
    parse_document,
    unparse_document,
)
from .fixtures import (
    fixture_cibils,
    fixture_debruijn,
    fixture_f,
    fixture_group,
    fixture_petersen,
    fixture_quantum_matrix,
    fixture_quantum_sphere,
)
from .graphs import (
    covering_check,
    dot_export,
    geometric_support,
    natural_lift,
    parse_undirected_edges,
)
from .scalars import ScalarSyntaxError, parse_scalar

FIXTURE_NAMES = (
    "F",
    "slq2",
    "su2q-coalg",
    "cibils",
    "debruijn",
    "petersen",
    "group",
)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _read_document(path: str) -> SpecDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_document(handle.read())


def _pick_space(doc: SpecDocument, requested: Optional[str]) -> str:
    if requested is not None:
        if requested not in doc.spaces:
            raise DslError(f"unknown space {requested!r}", 0)
        return requested
    if len(doc.spaces) == 1:
        return next(iter(doc.spaces))
    raise DslError(
        "document declares several spaces; pass --space", 0,
        expected=sorted(doc.spaces),
    )


def print_report(report: AxiomReport) -> None:
    print(f"check\t{report.axiom}\t{report.verdict}\t{len(report.witnesses)}")
    for label, eq, _, _ in report.witnesses:
        print(f"witness\t{report.axiom}\t{eq}\t{label}")
    for note in report.notes:
        print(f"note\t{report.axiom}\t{note}")


def _parse_bindings(raw: Sequence[str]) -> Dict[str, str]:
    bindings: Dict[str, str] = {}
    for item in raw:
        for piece in item.split(","):
            piece = piece.strip()
            if not piece:
                continue
            if "=" not in piece:
                raise ValueError(f"binding {piece!r} is not of the form role=name")
            role, name = piece.split("=", 1)
            bindings[role.strip()] = name.strip()
    return bindings


# -- subcommands -----------------------------------------------------------


def cmd_check(args) -> int:
    doc = _read_document(args.file)
    space = _pick_space(doc, args.space)
    structure = doc.structure(space)
    bindings = _parse_bindings(args.bind or [])
    report = check_axiom(structure, args.axiom, bindings)
    print_report(report)
    return 0 if report.passed else 1


def cmd_support(args) -> int:
    doc = _read_document(args.file)
    space = _pick_space(doc, args.space)
    structure = doc.structure(space)
    names = [n.strip() for n in args.coproducts.split(",") if n.strip()]
    graph = geometric_support(structure, names)
    if args.dot:
        sys.stdout.write(dot_export(graph, name=space))
    else:
        for (s, t) in sorted(graph.arrows):
            print(f"arrow\t{s}\t{t}\t{graph.arrows[(s, t)]}")
    return 0


def cmd_entangle(args) -> int:
    doc = _read_document(args.file)
    space = _pick_space(doc, args.space)
    structure = doc.structure(space)
    channel = doc.channel(args.channel)
    try:
        if args.kind == "self":
            entangled = self_entangle(
                structure, args.coproduct, channel, eps_name=args.counit
            )
        elif args.kind == "achiral":
            if not args.cotilde:
                raise DslError("--kind achiral needs --cotilde NAME", 0)
            entangled = achiral_entangle(
                structure,
                args.coproduct,
                args.cotilde,
                channel,
                transported=args.transport,
            )
        else:
            raise DslError(f"unknown entanglement kind {args.kind!r}", 0)
    except ValueError as exc:
        if isinstance(exc, DslError):
            raise
        # A construction that refuses its input is a failed check, not a
        # usage error: the message carries the witnesses.
        print(f"check\tconstruction\tfail\t{exc}")
        return 1
    out_doc = document_from_structure(args.out_space, entangled.structure)
    sys.stdout.write(unparse_document(out_doc))
    return 0


def cmd_bracket(args) -> int:
    doc = _read_document(args.file)
    space = _pick_space(doc, args.space)
    structure = doc.structure(space)
    labels = structure.space.labels
    table = structure_constants(
        structure, labels, labels, left_name=args.left, right_name=args.right
    )
    for (i, j) in sorted(table):
        value = table[(i, j)]
        if not value:
            rendered = "0"
        else:
            rendered = " + ".join(
                f"({value[k]}) {k}*" for k in sorted(value)
            )
        print(f"bracket\t{i}*\t{j}*\t{rendered}")
    return 0


def cmd_complex(args) -> int:
    doc = _read_document(args.file)
    space = _pick_space(doc, args.space)
    structure = doc.structure(space)
    report = check_complex(
        structure, args.coproduct, args.unit,
        max_degree=args.max_degree, form=args.form,
    )
    print_report(report)
    agree = check_boundary_forms_agree(
        structure, args.coproduct, args.unit, max_degree=args.max_degree
    )
    print_report(agree)
    return 0 if report.passed and agree.passed else 1


def cmd_embed(args) -> int:
    with open(args.edges, "r", encoding="utf-8") as handle:
        graph = parse_undirected_edges(handle.read())
    digraph, structure, family = natural_lift(graph)
    loops = sum(1 for (s, t) in digraph.arrows if s == t)
    print(f"lift\tvertices\t{len(digraph.vertices)}")
    print(f"lift\tloops\t{loops}")
    print(f"lift\tarrows\t{len(digraph.arrows) - loops}")
    print(f"lift\tbridges\t{len(family) - 1}")
    report = covering_check(digraph, structure, family)
    print_report(report)
    return 0 if report.passed else 1


def _fixture_document(name: str, n: int, q_text: str) -> str:
    if name == "F":
        data = fixture_f()
        structure: LStructure = data["structure"]  # type: ignore[assignment]
        doc = document_from_structure("F", structure)
        channel = data["channel"]
        doc.spaces["F2"] = channel.c2.labels
        doc.channels["Phi"] = ("F", "F2", dict(channel.forward))
        return unparse_document(doc)
    if name == "slq2":
        data = fixture_quantum_matrix()
        base: LStructure = data["base"]["structure"]  # type: ignore[index]
        doc = document_from_structure("C1", base)
        channel = data["channel"]
        doc.spaces["C2"] = channel.c2.labels
        doc.channels["M"] = ("C1", "C2", dict(channel.forward))
        return unparse_document(doc)
    if name == "su2q-coalg":
        data = fixture_quantum_sphere()
        structure = data["structure"]
        doc = document_from_structure("C1", structure)
        channel = data["channel"]
        doc.spaces["C2"] = channel.c2.labels
        doc.channels["M"] = ("C1", "C2", dict(channel.forward))
        return unparse_document(doc)
    if name == "cibils":
        q = parse_scalar(q_text)
        data = fixture_cibils(n, q)
        return unparse_document(
            document_from_structure("E", data["structure"])
        )
    if name == "debruijn":
        data = fixture_debruijn(n)
        return unparse_document(
            document_from_structure("G", data["codialgebra"])
        )
    if name == "petersen":
        graph = fixture_petersen()
        lines = [f"{u} -- {v}" for (u, v) in sorted(graph.edges)]
        return "\n".join(lines) + "\n"
    if name == "group":
        return unparse_document(
            document_from_structure("G", fixture_group(n))
        )
    raise ValueError(f"unknown fixture {name!r}")


def cmd_fixtures(args) -> int:
    if args.name is None:
        for name in FIXTURE_NAMES:
            print(name)
        return 0
    sys.stdout.write(_fixture_document(args.name, args.n, args.q))
    return 0


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcoalg",
        description="Exact checks and constructions for finite-dimensional "
        "coalgebras with several coproducts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify one axiom system on a document")
    p.add_argument("file")
    p.add_argument("--space")
    p.add_argument("--axiom", required=True, choices=sorted(AXIOMS))
    p.add_argument("--bind", action="append", metavar="ROLE=NAME")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("support", help="geometric support of coproducts")
    p.add_argument("file")
    p.add_argument("--space")
    p.add_argument("--coproducts", required=True, metavar="NAME[,NAME...]")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("entangle", help="run an entanglement construction")
    p.add_argument("file")
    p.add_argument("--space")
    p.add_argument("--kind", default="self", choices=("self", "achiral"))
    p.add_argument("--coproduct", default="Delta")
    p.add_argument("--cotilde", help="second coproduct for --kind achiral")
    p.add_argument("--channel", default="Phi")
    p.add_argument("--counit")
    p.add_argument("--transport", default="Delta")
    p.add_argument("--out-space", default="E")
    p.set_defaults(func=cmd_entangle)

    p = sub.add_parser("bracket", help="dual-basis bracket table")
    p.add_argument("file")
    p.add_argument("--space")
    p.add_argument("--left", default="deltahat1")
    p.add_argument("--right", default="delta1")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("complex", help="verify the boundary complex")
    p.add_argument("file")
    p.add_argument("--space")
    p.add_argument("--coproduct", default="Delta")
    p.add_argument("--unit", required=True)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--form", default="primary",
                   choices=("primary", "prime", "alternative"))
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("embed", help="natural lift and covering check")
    p.add_argument("--edges", required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("fixtures", help="emit a built-in fixture document")
    p.add_argument("name", nargs="?", choices=FIXTURE_NAMES)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", default="q")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (DslError, ScalarSyntaxError) as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(str(exc))
    except (KeyError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
