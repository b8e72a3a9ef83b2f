"""Command-line front end.  Exit codes: 0 pass, 1 mathematical failure, 2 input error."""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path

from . import __version__, linalg
from .algebra import InputError, LYError, validate_lya
from .files import load_algebra, load_matrix, load_module, load_point_images, sha256
from .hopf import antipode_check, hopf_envelope, involution_check, universal_coaction
from .poly import YES
from .rep import (
    DimensionMismatch,
    induced_module,
    universal_module_presentation,
    validate_module,
    verify_matrix_point,
)
from .symmetry import (
    FiniteAbelianGroup,
    GroupTooLarge,
    automorphism_equivalence_check,
    enumerate_diagonal_gradings,
)
from .universal import (
    bialgebra_structure,
    phi_map,
    presentation,
    verify_coideal,
    verify_comodule,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Report:
    """Ordered key/value report rendered as text lines or JSON."""

    def __init__(self, command: str, args: argparse.Namespace, inputs: dict):
        self.data: dict = {
            "command": command,
            "version": __version__,
            "seed": args.seed,
            "order": args.order,
            "degree_cap": args.degree_cap,
            "inputs": {name: {"path": str(p), "sha256": sha256(p)} for name, p in sorted(inputs.items())},
        }
        self.passed = True

    def set(self, key: str, value) -> None:
        self.data[key] = value

    def fail(self) -> None:
        self.passed = False

    def render(self, fmt: str) -> str:
        self.data["result"] = "pass" if self.passed else "fail"
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        lines = []
        for key, value in self.data.items():
            if key == "inputs":
                for name, info in value.items():
                    lines.append(f"input {name}: {info['path']} sha256={info['sha256']}")
            elif isinstance(value, list):
                lines.append(f"{key}:")
                lines += [f"  {v if isinstance(v, str) else json.dumps(v, sort_keys=True)}" for v in value]
            elif isinstance(value, dict):
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


# ------------------------------------------------------------------ commands


def cmd_validate(args) -> Report:
    L = load_algebra(args.algebra)
    rep = Report("validate", args, {"algebra": args.algebra})
    r = validate_lya(L)
    rep.set("axioms", r.lines(L.label))
    if not r.passed:
        rep.fail()
    return rep


def _eager_validate(rep: Report, L, name: str) -> bool:
    r = validate_lya(L)
    if not r.passed:
        rep.set(f"{name}_axioms", r.lines(L.label))
        rep.fail()
    return r.passed


def cmd_universal(args) -> Report:
    L = load_algebra(args.L)
    K = load_algebra(args.K) if args.K else L
    inputs = {"L": args.L}
    if args.K:
        inputs["K"] = args.K
    rep = Report("universal", args, inputs)
    if not (_eager_validate(rep, L, "L") and _eager_validate(rep, K, "K")):
        return rep
    pres = presentation(L, K, args.order)
    text = pres.dump_text() if args.format == "text" else json.dumps(pres.dump_json(), indent=2) + "\n"
    _write(args.dump, text)
    rep.set("variables", len(pres.vs))
    rep.set("generators", len(pres.generators))
    entries = phi_map(L, K, pres).verify(args.degree_cap)
    bad = [f"{e.kind}{list(e.index)}: {e.status}" for e in entries if e.status != YES]
    rep.set("phi_morphism", "certified" if not bad else "not certified")
    if bad:
        rep.set("phi_failures", bad)
        rep.fail()
    if not args.dump:
        rep.set("presentation", [f"{g.name} = {g.poly.format(args.order)}" for g in pres.generators])
    return rep


def cmd_bialgebra(args) -> Report:
    L = load_algebra(args.algebra)
    rep = Report("bialgebra", args, {"algebra": args.algebra})
    if not _eager_validate(rep, L, "algebra"):
        return rep
    B = bialgebra_structure(L, args.order)
    _write(args.dump, B.dump_text())
    r = verify_coideal(B, args.degree_cap)
    rep.set("generators", len(r.entries))
    rep.set("epsilon_zero", all(e.epsilon_zero for e in r.entries))
    rep.set("certified", sum(e.status == YES for e in r.entries))
    rep.set("unknown", [format_entry(e) for e in r.unknown])
    bad = [format_entry(e) for e in r.entries if e.status != YES or not e.epsilon_zero or not e.identity_certificate]
    if bad:
        rep.set("failures", bad)
        rep.fail()
    return rep


def format_entry(e) -> str:
    from .universal import format_label

    return f"{format_label(e.label)}: {e.status} ({e.method})"


def cmd_comodule(args) -> Report:
    L = load_algebra(args.algebra)
    rep = Report("comodule", args, {"algebra": args.algebra})
    if not _eager_validate(rep, L, "algebra"):
        return rep
    r = verify_comodule(bialgebra_structure(L, args.order))
    rep.set("coassociativity", "pass" if r.coassociative else "fail")
    rep.set("counit", "pass" if r.counit else "fail")
    if not r.passed:
        rep.set("mismatches", [list(m) for m in r.mismatches])
        rep.fail()
    return rep


def cmd_hopf(args) -> Report:
    L = load_algebra(args.algebra)
    rep = Report("hopf", args, {"algebra": args.algebra})
    rep.set("depth", args.depth)
    if not _eager_validate(rep, L, "algebra"):
        return rep
    H = hopf_envelope(bialgebra_structure(L, args.order), args.depth)
    _write(args.dump, H.dump_text())
    rep.set("variables", len(H.vs))
    rep.set("generators", len(H.generators))
    rep.set("convolution_generators", len(H.convolution_generators()))
    checks = [("antipode", antipode_check(H, args.degree_cap)),
              ("coaction", universal_coaction(H).verify(args.degree_cap))]
    if args.involution:
        checks.append(("involution", involution_check(H, args.degree_cap)))
    for name, r in checks:
        rep.set(name, f"{sum(e.status == YES for e in r.entries)}/{len(r.entries)} certified")
        if not r.passed:
            rep.set(f"{name}_failures", [format_entry(e) for e in r.entries if e.status != YES])
            rep.fail()
    rep.set("note", "depth is a truncation chosen by the user; stabilization is not inferred")
    return rep


def cmd_module_validate(args) -> Report:
    over = load_algebra(args.algebra) if args.algebra else None
    M = load_module(args.module, over)
    inputs = {"module": args.module}
    if args.algebra:
        inputs["algebra"] = args.algebra
    rep = Report("module-validate", args, inputs)
    r = validate_module(M)
    rep.set("axioms", r.lines())
    if not r.passed:
        rep.fail()
    return rep


def cmd_induce(args) -> Report:
    U = load_module(args.module)
    K = load_algebra(args.K) if args.K else U.over
    inputs = {"module": args.module, "point": args.point}
    if args.K:
        inputs["K"] = args.K
    rep = Report("induce", args, inputs)
    pres = presentation(U.over, K, args.order)
    images = load_point_images(args.point)
    if not images:
        raise InputError("at least one image is required", "images")
    w = len(next(iter(images.values())))
    n, k = pres.shape
    for key in itertools.product(range(1, n + 1), range(1, k + 1)):
        images.setdefault(key, linalg.zeros(w, w))
    W = verify_matrix_point(pres, images)
    M = induced_module(U, W)
    r = validate_module(M)
    rep.set("dimension", M.dim)
    rep.set("axioms", r.lines())
    if args.dump:
        _write(args.dump, json.dumps(M.to_json(), indent=2) + "\n")
    if not r.passed:
        rep.fail()
    return rep


def cmd_universal_module(args) -> Report:
    U = load_module(args.U)
    V = load_module(args.V)
    rep = Report("universal-module", args, {"U": args.U, "V": args.V})
    presn, _ = universal_module_presentation(U, V)
    _write(args.dump, presn.dump_text())
    rep.set("generators", len(presn.generators))
    rep.set("relations", len(presn.relations))
    rep.set("free", presn.is_free())
    if not args.dump:
        rep.set("presentation", presn.dump_text().splitlines())
    return rep


def cmd_autocheck(args) -> Report:
    L = load_algebra(args.algebra)
    M = load_matrix(args.matrix)
    rep = Report("autocheck", args, {"algebra": args.algebra, "matrix": args.matrix})
    if len(M) != L.dim or any(len(r) != L.dim for r in M):
        raise InputError(f"expected a {L.dim}x{L.dim} matrix", args.matrix)
    r = automorphism_equivalence_check(L, M)
    rep.set("summary", r.lines()[0])
    rep.set("determinant", str(linalg.det(M)))
    if r.witness:
        rep.set("witness", " ".join(map(str, r.witness)))
    rep.set("agreement", "yes" if r.agree else "no")
    if not (r.agree and r.direct):
        rep.fail()
    return rep


def cmd_gradings(args) -> Report:
    L = load_algebra(args.algebra)
    if not args.group:
        raise InputError("--group is required", "group")
    G = FiniteAbelianGroup.parse(args.group)
    rep = Report("gradings", args, {"algebra": args.algebra})
    rep.set("group", list(G.orders))
    rep.set("scope", "diagonal-only")
    if not _eager_validate(rep, L, "algebra"):
        return rep
    gs = enumerate_diagonal_gradings(L, G)
    rep.set("count", len(gs))
    rep.set("gradings", [g.to_json() for g in gs])
    return rep


def cmd_export(args) -> Report:
    L = load_algebra(args.algebra)
    K = load_algebra(args.K) if args.K else L
    inputs = {"algebra": args.algebra}
    if args.K:
        inputs["K"] = args.K
    rep = Report("export", args, inputs)
    if args.hopf:
        obj = hopf_envelope(bialgebra_structure(L, args.order), args.depth)
    else:
        obj = presentation(L, K, args.order)
    if args.target == "cas-script":
        text = obj.cas_script()
    elif args.target == "json" and not args.hopf:
        text = json.dumps(obj.dump_json(), indent=2) + "\n"
    else:
        text = obj.dump_text()
    if args.dump:
        _write(args.dump, text)
    else:
        rep.set("export", text.splitlines())
    rep.set("target", args.target)
    return rep


COMMANDS = {
    "validate": cmd_validate,
    "universal": cmd_universal,
    "bialgebra": cmd_bialgebra,
    "comodule": cmd_comodule,
    "hopf": cmd_hopf,
    "module-validate": cmd_module_validate,
    "induce": cmd_induce,
    "universal-module": cmd_universal_module,
    "autocheck": cmd_autocheck,
    "gradings": cmd_gradings,
    "export": cmd_export,
}


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=["degrevlex", "lex"], default="degrevlex")
    common.add_argument("--degree-cap", type=_positive, default=None)
    common.add_argument("--depth", type=_positive, default=2)
    common.add_argument("--group", default=None, help="cyclic orders, e.g. 2x2")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--output", "-o", default=None, help="write the report here")

    parser = argparse.ArgumentParser(prog="lyalg", description="Lie-Yamaguti universal algebra toolkit")
    parser.add_argument("--version", action="version", version=f"lyalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check LY1-LY6")
    p.add_argument("--algebra", required=True)

    p = sub.add_parser("universal", parents=[common], help="emit A(L, K)")
    p.add_argument("--L", required=True)
    p.add_argument("--K", default=None)
    p.add_argument("--dump", default=None)

    for name, helptext in (("bialgebra", "coideal check on A(L)"), ("comodule", "comodule identities")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--algebra", required=True)
        if name == "bialgebra":
            p.add_argument("--dump", default=None)

    p = sub.add_parser("hopf", parents=[common], help="truncated Hopf envelope")
    p.add_argument("--algebra", required=True)
    p.add_argument("--dump", default=None)
    p.add_argument("--involution", action="store_true", help="also check S^2 = id on the truncation")

    p = sub.add_parser("module-validate", parents=[common], help="check R1-R7")
    p.add_argument("--module", required=True)
    p.add_argument("--algebra", default=None)

    p = sub.add_parser("induce", parents=[common], help="module on U (x) W")
    p.add_argument("--module", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--K", default=None)
    p.add_argument("--dump", default=None)

    p = sub.add_parser("universal-module", parents=[common], help="presentation of U(U, V)")
    p.add_argument("--U", required=True)
    p.add_argument("--V", required=True)
    p.add_argument("--dump", default=None)

    p = sub.add_parser("autocheck", parents=[common], help="automorphism dual-path check")
    p.add_argument("--algebra", required=True)
    p.add_argument("--matrix", required=True)

    p = sub.add_parser("gradings", parents=[common], help="diagonal gradings by a finite abelian group")
    p.add_argument("--algebra", required=True)

    p = sub.add_parser("export", parents=[common], help="export a presentation")
    p.add_argument("--algebra", required=True)
    p.add_argument("--K", default=None)
    p.add_argument("--target", choices=["cas-script", "text", "json"], default="cas-script")
    p.add_argument("--hopf", action="store_true", help="export the Hopf envelope instead")
    p.add_argument("--dump", default=None)
    return parser


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), ""
    random.seed(args.seed)
    try:
        rep = COMMANDS[args.command](args)
    except (InputError, DimensionMismatch, GroupTooLarge) as exc:
        return EXIT_INPUT, f"input error: {exc}\n"
    except LYError as exc:
        return EXIT_FAIL, f"failure: {exc}\n"
    except ValueError as exc:
        return EXIT_INPUT, f"input error: {exc}\n"
    text = rep.render(args.format)
    if args.output:
        Path(args.output).write_text(text)
    return (EXIT_OK if rep.passed else EXIT_FAIL), text


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stderr if text.startswith(("input error", "failure")) else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
