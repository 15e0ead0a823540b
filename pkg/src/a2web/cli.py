"""Command line interface: ``a2web <command> ...``.

Exit status is 0 on success, 1 when well-formed input is outside the domain of
an operation, and 2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from pathlib import Path

from .bijection import phi_inverse, phi_trace
from .flow import FlowError, flow_from_pair, format_flow
from .m_diagrams import format_m_diagram
from .render import render_svg
from .rs_perm import PermutationError, diagram, format_matching, parse_permutation, psi, rs, temperley_lieb
from .tableaux import Tableau, TableauError, decompose, enumerate_semistandard, format_tableau, parse_tableau
from .verify import run_verify
from .web_algebra import verify_relations, word_product
from .web_core import WebError, format_web, parse_web, short_id


class InputError(Exception):
    """Malformed command line input (exit status 2)."""


def _color(text: str, code: str) -> str:
    if os.environ.get("A2WEB_COLOR") == "1":
        return f"\033[{code}m{text}\033[0m"
    return text


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.strip().strip("[]").split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma separated list of integers, got {text!r}") from None


def read_tableau(text: str) -> Tableau:
    """Accept ``1,1,3/2,2,4`` or ``shape=3,3;type=1,1,2,2,3,4;rows=1,1,3/2,2,4``."""
    text = text.strip()
    try:
        if text.startswith("shape="):
            fields = dict(part.split("=", 1) for part in text.split(";"))
            t = parse_tableau(fields["rows"])
            shape = tuple(_int_list(fields["shape"]))
            if t.shape != shape:
                raise InputError(f"rows have shape {t.shape}, header says {shape}")
            if "type" in fields and t.content() != Counter(_int_list(fields["type"])):
                raise InputError("rows do not match the declared type")
            return t
        return parse_tableau(text)
    except (TableauError, KeyError, ValueError) as exc:
        raise InputError(f"malformed tableau: {exc}") from exc


def _perm(text: str):
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise InputError(str(exc)) from exc


def _write_svg(path: str | None, obj, depths: bool = False) -> None:
    if path:
        Path(path).write_text(render_svg(obj, depths))


def _check_nk(t: Tableau, n: int | None) -> None:
    if n is not None and len(t.rows) != n:
        raise TableauError(f"tableau has {len(t.rows)} rows, expected n={n}")


def cmd_phi(args) -> str:
    t = read_tableau(_read(args.tableau))
    _check_nk(t, args.n)
    trace = phi_trace(t, args.k)
    _write_svg(args.svg, trace.web, args.depths)
    return format_web(trace.web)


def cmd_inverse(args) -> str:
    try:
        w = parse_web(_read(args.web))
    except WebError as exc:
        raise InputError(str(exc)) from exc
    return format_tableau(phi_inverse(w, args.n, args.k)) + "\n"


def cmd_rs(args) -> str:
    r, q = rs(_perm(args.perm))
    return f"R={format_tableau(r)}\nQ={format_tableau(q)}\n"


def cmd_psi(args) -> str:
    sigma = _perm(args.perm)
    s_plus, s_minus = psi(sigma)
    _write_svg(args.svg, diagram(sigma))
    return f"S+={format_tableau(s_plus)}\nS-={format_tableau(s_minus)}\n"


def cmd_tl(args) -> str:
    return format_matching(temperley_lieb(_perm(args.perm))) + "\n"


def cmd_multiply(args) -> str:
    word = [w.strip() for w in args.word.split(",") if w.strip()]
    for name in word:
        if len(name) < 2 or name[0] not in "fg" or not name[1:].isdigit():
            raise InputError(f"bad generator {name!r}")
    total = word_product(word, args.k)
    lines = [repr(total)]
    for coef, w in total.items():
        lines.append(f"<web#{short_id(w)}>")
        lines.append(format_web(w).rstrip("\n"))
    return "\n".join(lines) + "\n"


def cmd_relations(args) -> tuple[str, int]:
    results = verify_relations(args.k)
    lines = []
    for r in results:
        tag = _color("PASS", "32") if r.passed else _color("FAIL", "31")
        lines.append(f"{tag} {r.name} {r.instance}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} relation instances hold")
    return "\n".join(lines) + "\n", 1 if failed else 0


def cmd_flow(args) -> str:
    t = read_tableau(_read(args.tableau))
    _check_nk(t, args.n)
    d = flow_from_pair(decompose(t, args.k))
    _write_svg(args.svg, d)
    return format_flow(d) + "\n"


def cmd_mdiagram(args) -> str:
    from .m_diagrams import build_m_diagram

    m = build_m_diagram(read_tableau(_read(args.tableau)))
    _write_svg(args.svg, m)
    return format_m_diagram(m) + "\n"


def cmd_enumerate(args) -> str:
    shape = _int_list(args.shape)
    type_ = _int_list(args.type)
    out = enumerate_semistandard(shape, type_)
    return "".join(format_tableau(t) + "\n" for t in out) + f"count={len(out)}\n"


def cmd_verify(args) -> tuple[str, int]:
    for name in ("max_n", "max_k", "max_ell"):
        if getattr(args, name) < 0:
            raise InputError(f"--{name.replace('_', '-')} must be nonnegative")
    report = run_verify(args.max_n, args.max_k, args.max_ell, jobs=args.jobs)
    lines = [
        line.replace("PASS", _color("PASS", "32"), 1).replace("FAIL", _color("FAIL", "31"), 1)
        for line in report.lines()
    ]
    return "".join(line + "\n" for line in lines), 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="a2web", description="Tableaux, A2-webs and the bijection between them.")
    sub = p.add_subparsers(dest="command", required=True)

    def nk(sp, need_k=True):
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int, required=need_k)

    sp = sub.add_parser("phi", help="web of a semistandard tableau")
    nk(sp)
    sp.add_argument("--tableau", required=True)
    sp.add_argument("--svg")
    sp.add_argument("--depths", action="store_true", help="write face depths into the SVG")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("inverse", help="tableau of a web")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--web", required=True)
    sp.set_defaults(func=cmd_inverse)

    for name, func, help_ in (
        ("rs", cmd_rs, "Robinson-Schensted tableaux"),
        ("psi", cmd_psi, "tableaux from the permutation diagram"),
        ("tl", cmd_tl, "Temperley-Lieb matching from trips"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--perm", required=True)
        if name == "psi":
            sp.add_argument("--svg")
        sp.set_defaults(func=func)

    sp = sub.add_parser("multiply", help="reduced product of generators")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_multiply)

    sp = sub.add_parser("relations", help="check algebra relations")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("flow", help="flow diagram of a tableau")
    nk(sp)
    sp.add_argument("--tableau", required=True)
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_flow)

    sp = sub.add_parser("mdiagram", help="m-diagram of a standard tableau")
    sp.add_argument("--tableau", required=True)
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_mdiagram)

    sp = sub.add_parser("enumerate", help="semistandard tableaux of a shape and type")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--type", required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the small-case checks")
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--max-k", type=int, default=4)
    sp.add_argument("--max-ell", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"a2web: error: {exc}", file=sys.stderr)
        return 2
    except (TableauError, WebError, PermutationError, FlowError, ValueError) as exc:
        print(f"a2web: {exc}", file=sys.stderr)
        return 1
    text, status = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
