"""Command-line front end: ``srtor betti|verify|nerve|corpus``.

Inputs are JSON complex documents (a path, ``-`` for stdin) or corpus names.
Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 builder
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .complement import DEFAULT_MAX_GENS, ComplexTooLargeError, build_nerve_complex, injected_sign_fault
from .complexes import Complement, InvalidComplementError, maximal_complement, members, minimal_complement
from .io import ComplexDocument, DocumentError, parse_complex, serialize
from .linalg import QQ, ZZ, Coefficients, GF, HomologyGroup, NonComposableError
from .tor import betti_table, complement_groups, nerve_groups, poincare_polynomial, verify

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_document(source: str) -> ComplexDocument:
    if source == "-":
        return parse_complex(sys.stdin.read())
    path = Path(source)
    if path.is_file():
        return parse_complex(path.read_text())
    if source in corpus.corpus_names():
        return corpus.load(source)
    raise InputError(f"{source!r} is neither a readable file nor a corpus name")


def choose_complement(doc: ComplexDocument, how: str) -> Complement:
    K = doc.complex
    if how == "minimal":
        return minimal_complement(K)
    if how == "maximal":
        return maximal_complement(K)
    if doc.complement is None:
        raise InputError("--complement given needs a document with a complement field")
    return doc.given_complement()


def parse_coeffs(values: list[str] | None, default: list[Coefficients]) -> list[Coefficients]:
    if not values:
        return default
    out = []
    for v in values:
        try:
            c = Coefficients.parse(v)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if c not in out:
            out.append(c)
    return out


def _torsion(H: HomologyGroup) -> list[int]:
    return list(H.torsion)


def _group_record(H: HomologyGroup) -> dict:
    return {"rank": H.free_rank, "torsion": _torsion(H)}


def cmd_betti(args, out) -> int:
    doc = load_document(args.input)
    coeffs = parse_coeffs(args.coeffs, [QQ])
    if len(coeffs) != 1:
        raise InputError("betti takes a single --coeffs value")
    (c,) = coeffs
    P = choose_complement(doc, args.complement) if args.route == "complement" else None
    table = betti_table(doc.complex, c, args.route, complement=P, max_gens=args.max_gens)
    poly = poincare_polynomial(table) if c.is_field else None
    if args.format == "machine":
        for i, J, rank, tors in table.rows():
            out.write(json.dumps({"i": i, "J": list(J), "rank": rank, "torsion": list(tors)}) + "\n")
        if poly is not None:
            out.write(json.dumps({"poincare": {str(e): k for e, k in poly.coeffs.items()}, "text": str(poly)}) + "\n")
        return EXIT_OK
    out.write(f"# {doc.label()}  m={doc.m}  coeffs={c}  route={args.route}\n")
    out.write("i | J | rank | torsion\n")
    for i, J, rank, tors in table.rows():
        out.write(f"{i} | {list(J)} | {rank} | {list(tors)}\n")
    if poly is not None:
        out.write(f"poincare: {poly}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    doc = load_document(args.input)
    coeffs = parse_coeffs(args.coeffs, [ZZ, QQ, GF(2)])
    P = choose_complement(doc, args.complement)
    if args.inject_fault:
        with injected_sign_fault():
            report = verify(doc.complex, P, coeffs, args.max_gens)
    else:
        report = verify(doc.complex, P, coeffs, args.max_gens)
    counts: dict[str, int] = {}
    for comp in report.comparisons:
        counts[comp.check] = counts.get(comp.check, 0) + 1
    bad = report.mismatches()
    if args.format == "machine":
        out.write(json.dumps({"verdict": report.verdict, "comparisons": counts, "skipped": report.skipped}) + "\n")
        for comp in bad:
            out.write(json.dumps({
                "check": comp.check, "coeffs": str(comp.coeffs), "i": comp.i, "J": list(members(comp.J)),
                "results": {k: (v if isinstance(v, str) else _group_record(v)) for k, v in comp.results.items()},
            }) + "\n")
    else:
        out.write(f"# {doc.label()}  m={doc.m}  coeffs={','.join(map(str, coeffs))}  |P|={len(P)}\n")
        for check, n in counts.items():
            out.write(f"{check}: {n} comparisons\n")
        for note in report.skipped:
            out.write(f"skipped {note}\n")
        for comp in bad:
            out.write(f"MISMATCH {comp.describe()}\n")
        out.write(f"verdict: {report.verdict}\n")
    if any(note.startswith("complement route") for note in report.skipped):
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_nerve(args, out) -> int:
    doc = load_document(args.input)
    coeffs = parse_coeffs(args.coeffs, [ZZ])
    if len(coeffs) != 1:
        raise InputError("nerve takes a single --coeffs value")
    (c,) = coeffs
    P = choose_complement(doc, args.complement)
    if not len(P):
        raise InputError("K is a simplex: the complement is empty and there is no nerve to compare")
    N = build_nerve_complex(P)
    via_nerve = nerve_groups(P, c)
    via_complement = complement_groups(P, (1 << doc.m) - 1, c, args.max_gens)
    degrees = sorted(set(via_nerve) | set(via_complement))
    rows = [(n, via_complement.get(n, HomologyGroup()), via_nerve.get(n, HomologyGroup())) for n in degrees]
    ok = all(a == b for _, a, b in rows)
    fvec = {k: N.rank(k) for k in sorted(N.degrees)}
    if args.format == "machine":
        out.write(json.dumps({"f_vector": {str(k): v for k, v in fvec.items()}}) + "\n")
        for n, a, b in rows:
            out.write(json.dumps({"n": n, "complement": _group_record(a), "nerve": _group_record(b)}) + "\n")
    else:
        out.write(f"# {doc.label()}  m={doc.m}  coeffs={c}  |P|={len(P)}\n")
        out.write("nerve faces by dimension: " + ", ".join(f"{k}:{v}" for k, v in fvec.items()) + "\n")
        out.write("n | H_n(complement, [m]) | H~_{n-2}(nerve)\n")
        for n, a, b in rows:
            out.write(f"{n} | {a} | {b}\n")
        out.write(f"shift: {'agrees' if ok else 'DISAGREES'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_corpus(args, out) -> int:
    if args.action == "list":
        for name in corpus.corpus_names():
            doc = corpus.load(name)
            if args.format == "machine":
                out.write(serialize(doc) + "\n")
            else:
                out.write(f"{name}\tm={doc.m}\tfacets={len(doc.facets)}\n")
    else:
        if not args.name:
            raise InputError("corpus show needs a name")
        out.write(serialize(load_document(args.name)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srtor", description="Bigraded Tor of face rings by three routes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="JSON document path, '-' for stdin, or a corpus name")
        p.add_argument("--coeffs", action="append", metavar="{Z|Q|Fp:<p>}")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--max-gens", type=int, default=DEFAULT_MAX_GENS)
        p.add_argument("--complement", choices=("minimal", "maximal", "given"), default="minimal")

    p = sub.add_parser("betti", help="print the sparse Betti table")
    common(p)
    p.add_argument("--route", choices=("complement", "hochster"), default="complement")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="cross-check all routes")
    common(p)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nerve", help="compare the top-degree complement homology with the nerve")
    common(p)
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("corpus", help="list or show the bundled complexes")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, DocumentError, InvalidComplementError, OSError) as exc:
        print(f"srtor: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComplexTooLargeError as exc:
        print(f"srtor: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NonComposableError as exc:
        print(f"srtor: broken differential: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
