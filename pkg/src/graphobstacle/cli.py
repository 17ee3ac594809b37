"""Batch command-line interface.

Exit status: 0 success, 1 a well-formed mathematical "no" (inconsistent
constant-shift system, failed verification), 2 usage or validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import genpoly as gp
from .graph import (
    Graph,
    GraphError,
    GraphFamily,
    attach_pendant,
    from_edge_list_text,
    from_json as graph_from_json,
    generate,
    laplacian,
    star_of,
    to_edge_list_text,
    to_json as graph_to_json,
)
from .linalg import charpoly, format_fraction, jacobi_eigenvalues, rref, LinalgError
from .obstacle import (
    Mode,
    ObstacleError,
    ObstacleProblem,
    problem_from_json,
    solution_from_json,
    solution_to_json,
    solve,
    verify_solution,
)
from .spectral import CYCLE, PATH, CosForm, closed_form_spectrum, star_charpoly, tridiagonal_charpoly

VERBS = ("gen", "laplacian", "rref", "charpoly", "spectrum", "genpoly", "obstacle", "star", "verify")
DEFAULT_FORMAT = {"genpoly": "json", "obstacle": "json", "verify": "json", "star": "text"}


class UsageError(ValueError):
    pass


# ------------------------------------------------------- family descriptors

@dataclass(frozen=True)
class FamilyDescriptor:
    """``[star+|pendant@v+]... base`` where base is path:n, cycle:n, complete:n or kbip:m,n.

    Prefixes are applied to the base graph in left-to-right order.
    """

    base: GraphFamily
    transforms: tuple[tuple[str, int], ...] = ()

    @property
    def order(self) -> int:
        return self.base.order + len(self.transforms)

    def build(self) -> Graph:
        g = generate(self.base)
        for kind, v in self.transforms:
            g = star_of(g) if kind == "star" else attach_pendant(g, v)
        return g

    def __str__(self) -> str:
        pre = "".join("star+" if k == "star" else f"pendant@{v + 1}+" for k, v in self.transforms)
        return pre + str(self.base)


def parse_family(text: str) -> FamilyDescriptor:
    parts = text.strip().split("+")
    base_text, prefixes = parts[-1], parts[:-1]
    tag, sep, params_text = base_text.partition(":")
    if not sep:
        raise UsageError(f"malformed family descriptor {text!r}: expected e.g. 'path:4'")
    try:
        params = tuple(int(x) for x in params_text.split(","))
        base = GraphFamily(tag, params)
    except ValueError as exc:
        raise UsageError(f"malformed family descriptor {base_text!r}: {exc}") from None
    order = base.order
    transforms = []
    for p in prefixes:
        if p == "star":
            transforms.append(("star", -1))
        elif p.startswith("pendant@"):
            try:
                v = int(p[len("pendant@"):])
            except ValueError:
                raise UsageError(f"malformed pendant prefix {p!r}") from None
            if not 1 <= v <= order:
                raise UsageError(f"pendant vertex {v} out of range 1..{order} in {text!r}")
            transforms.append(("pendant", v - 1))
        else:
            raise UsageError(f"unknown family prefix {p!r} in {text!r}")
        order += 1
    return FamilyDescriptor(base, tuple(transforms))


def load_graph_file(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read graph file {path!r}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return from_edge_list_text(text)


# ------------------------------------------------------------------ parsing

@dataclass
class Command:
    verb: str
    family: FamilyDescriptor | None = None
    graph_file: str | None = None
    zeros: list[int] = field(default_factory=list)
    mode: Mode = Mode.RESTRICTED
    fmt: str = "text"
    use: str = "faddeev"
    jacobi: bool = False
    problem_file: str | None = None
    solution_file: str | None = None

    def graph(self) -> Graph:
        if self.family is not None:
            return self.family.build()
        return load_graph_file(self.graph_file)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="graphobstacle", description=__doc__.splitlines()[0])
    ap.add_argument("verb", help="one of: " + ", ".join(VERBS))
    ap.add_argument("--family", help="family descriptor, e.g. path:4, kbip:2,3, star+path:2")
    ap.add_argument("--graph", dest="graph_file", help="graph file (edge-list text or JSON, 1-based)")
    ap.add_argument("--zeros", help="comma-separated 1-based zero-set vertices")
    ap.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.RESTRICTED.value)
    ap.add_argument("--format", dest="fmt", choices=["json", "text"])
    ap.add_argument("--use", choices=["faddeev", "recurrence", "genpoly"], default="faddeev",
                    help=f"charpoly method (genpoly is capped at n <= {gp.GENPOLY_MAX_N})")
    ap.add_argument("--jacobi", action="store_true", help="spectrum: add numeric Jacobi eigenvalues")
    ap.add_argument("--problem", dest="problem_file", help="obstacle problem JSON file")
    ap.add_argument("--solution", dest="solution_file", help="obstacle solution JSON file (verify)")
    return ap


def parse_args(argv: list[str]) -> Command:
    ns = _parser().parse_args(argv)
    if ns.verb not in VERBS:
        raise UsageError(f"unknown verb {ns.verb!r}; expected one of {', '.join(VERBS)}")
    family = parse_family(ns.family) if ns.family else None
    uses_problem_file = ns.verb in ("obstacle", "verify") and ns.problem_file
    if uses_problem_file:
        if family is not None or ns.graph_file:
            raise UsageError("--problem already names the graph; drop --family/--graph")
    elif (family is None) == (ns.graph_file is None):
        raise UsageError("exactly one graph source is required: --family or --graph")

    cmd = Command(
        verb=ns.verb,
        family=family,
        graph_file=ns.graph_file,
        mode=Mode(ns.mode),
        fmt=ns.fmt or DEFAULT_FORMAT.get(ns.verb, "text"),
        use=ns.use,
        jacobi=ns.jacobi,
        problem_file=ns.problem_file,
        solution_file=ns.solution_file,
    )
    if ns.zeros:
        try:
            cmd.zeros = [int(z) - 1 for z in ns.zeros.split(",") if z.strip()]
        except ValueError:
            raise UsageError(f"--zeros must be comma-separated integers, got {ns.zeros!r}") from None

    if cmd.verb in ("obstacle", "verify") and not uses_problem_file and not ns.zeros:
        raise UsageError(f"{cmd.verb} needs --zeros (or --problem)")
    if cmd.verb == "verify" and not cmd.solution_file:
        raise UsageError("verify needs --solution")
    if cmd.verb == "spectrum" and (family is None or family.transforms):
        raise UsageError("spectrum needs a plain --family (path, cycle, complete or kbip)")
    if cmd.verb == "charpoly" and cmd.use == "recurrence":
        if family is None or family.transforms or family.base.tag not in (PATH, CYCLE):
            raise UsageError("--use recurrence needs --family path:n or cycle:n")
    if cmd.verb == "genpoly" or (cmd.verb == "charpoly" and cmd.use == "genpoly"):
        if family is not None and family.order > gp.GENPOLY_MAX_N:
            raise UsageError(
                f"genpoly cap exceeded: {family} has {family.order} vertices, limit is {gp.GENPOLY_MAX_N}"
            )
    return cmd


# ---------------------------------------------------------------- execution

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":")) + "\n"


def _matrix_json(m) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[format_fraction(x) for x in m.row(i)] for i in range(m.rows)]}


def _poly_json(p) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def render(result: dict, fmt: str) -> str:
    """Serialize an execute() payload: ``json`` as-is, ``text`` via its ``text`` field."""
    if fmt == "json":
        return _dump(result["json"])
    return result["text"]


def _run(cmd: Command) -> tuple[dict, int]:
    verb = cmd.verb
    if verb in ("obstacle", "verify"):
        return _run_obstacle(cmd)
    g = cmd.graph()
    if g.n > gp.GENPOLY_MAX_N and (verb == "genpoly" or (verb == "charpoly" and cmd.use == "genpoly")):
        raise UsageError(f"genpoly cap exceeded: graph has {g.n} vertices, limit is {gp.GENPOLY_MAX_N}")

    if verb == "gen":
        return {"json": graph_to_json(g), "text": to_edge_list_text(g)}, 0
    if verb == "laplacian":
        m = laplacian(g)
        return {"json": _matrix_json(m), "text": m.to_text()}, 0
    if verb == "rref":
        m, rank = rref(laplacian(g))
        return {"json": {**_matrix_json(m), "rank": rank}, "text": m.to_pretty() + f"rank {rank}\n"}, 0
    if verb == "charpoly":
        if cmd.use == "recurrence":
            p = tridiagonal_charpoly(cmd.family.base.params[0], cmd.family.base.tag)
        elif cmd.use == "genpoly":
            p = gp.collapse(gp.generalized_charpoly(g))
        else:
            p = charpoly(laplacian(g))
        return {"json": _poly_json(p), "text": p.to_text() + "\n"}, 0
    if verb == "spectrum":
        return _spectrum(cmd, g), 0
    if verb == "genpoly":
        mp = gp.generalized_charpoly(g)
        return {"json": mp.to_json(), "text": str(mp) + "\n"}, 0
    if verb == "star":
        transformed = star_charpoly(charpoly(laplacian(g)), g.n)
        direct = charpoly(laplacian(star_of(g)))
        agree = transformed == direct
        payload = {"graph": graph_to_json(star_of(g)), "charpoly": _poly_json(transformed)["coeffs"],
                   "direct": _poly_json(direct)["coeffs"], "agree": agree}
        return {"json": payload, "text": transformed.to_text() + "\n"}, 0 if agree else 1
    raise UsageError(f"unknown verb {verb!r}")


def _spectrum(cmd: Command, g: Graph) -> dict:
    spec = closed_form_spectrum(cmd.family.base)
    rows, lines = [], []
    for e in spec.entries:
        row = {"value": str(e.descriptor), "mult": e.multiplicity}
        if isinstance(e.descriptor, CosForm):
            row["value_approx"] = e.value
        rows.append(row)
        lines.append(f"{str(e.descriptor):>20}  x{e.multiplicity:<3} {e.value:.15g}")
    payload: dict = {"eigenvalues": rows}
    if cmd.jacobi:
        approx = jacobi_eigenvalues(laplacian(g))
        payload["jacobi_approx"] = approx
        lines.append("jacobi: " + " ".join(f"{x:.12g}" for x in approx))
    return {"json": payload, "text": "\n".join(lines) + "\n"}


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path!r}: {exc.strerror}") from None


def _run_obstacle(cmd: Command) -> tuple[dict, int]:
    if cmd.problem_file:
        problem, mode = problem_from_json(_read_json(cmd.problem_file))
    else:
        problem, mode = ObstacleProblem(cmd.graph(), cmd.zeros), cmd.mode

    if cmd.verb == "obstacle":
        sol = solve(problem, mode)
        payload = solution_to_json(sol)
        text = _solution_text(payload)
        return {"json": payload, "text": text}, 1 if sol.consistent is False else 0

    sol = solution_from_json(_read_json(cmd.solution_file))
    report = verify_solution(problem, sol)
    payload = {
        "ok": report.ok,
        "violations": [
            {"row": v.row + 1, "lhs": format_fraction(v.lhs), "rhs": format_fraction(v.rhs), "check": v.what}
            for v in report.violations
        ],
    }
    if report.note:
        payload["note"] = report.note
    text = "pass\n" if report.ok else "fail\n" + "".join(f"  {v}\n" for v in report.violations)
    if report.note:
        text += f"  {report.note}\n"
    return {"json": payload, "text": text}, 0 if report.ok else 1


def _solution_text(payload: dict) -> str:
    lines = [f"mode {payload['mode']}"]
    if "consistent" in payload:
        lines.append(f"consistent {str(payload['consistent']).lower()}")
    for key in ("u", "b"):
        if key in payload:
            val = payload[key]
            lines.append(f"{key} " + (" ".join(val) if isinstance(val, list) else val))
    return "\n".join(lines) + "\n"


def execute(cmd: Command) -> tuple[str, int]:
    """Run ``cmd``; returns the rendered standard output and the exit status."""
    try:
        result, status = _run(cmd)
    except (GraphError, LinalgError, ObstacleError, gp.GenpolyError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from None
    return render(result, cmd.fmt), status


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        out, status = execute(parse_args(argv))
    except UsageError as exc:
        print(f"graphobstacle: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
