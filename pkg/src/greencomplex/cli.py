"""Command-line front end.

Every subcommand prints one report, either JSON (``schema: 1``) or an aligned
text table. Exit status: 0 success, 1 an identity failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .arithmetic import additive_prime_decompose, graph_euler_polynomial
from .complex import (
    EdgeListError,
    Graph,
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    fermi_characteristic,
    inductive_dimension,
    parse_edge_list,
    unit_sphere,
    validate,
    whitney_complex,
)
from .expr import ExpressionError, evaluate
from .fredholm import full_subcomplex, green_report, psi_attach_cell, psi_remove_cell
from .homology import betti, hodge_nullities
from .primegraphs import build_panel, mertens_euler, prime_green_check, sphere_at
from .refinement import (
    DEFAULT_SIMPLEX_BUDGET,
    RefinementOverflow,
    barycentric,
    barycentric2,
    connection,
    refined_inductive_dimension,
)
from .spectral import MAX_VERTICES, vertex_laplacian_spectrum
from .spheres import DEFAULT_NODE_BUDGET, is_sphere, sphere_spectrum
from .verify import verify_all

SCHEMA = 1
DEFAULT_MATRIX_CAP = 300
ATTACH_SAMPLES = 5
REFINED_DIMENSION_CAP = 60


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[Path] = None
    expression: Optional[str] = None
    n: Optional[int] = None
    seed: int = 0
    fmt: str = "json"
    budget_simplices: int = DEFAULT_SIMPLEX_BUDGET
    budget_nodes: int = DEFAULT_NODE_BUDGET
    matrix_cap: int = DEFAULT_MATRIX_CAP
    strict_spheres: bool = False
    twice: bool = False
    green: bool = False
    mertens: bool = False
    sphere: Optional[int] = None
    simplex: Optional[tuple[int, ...]] = None
    along: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        for name in ("budget_simplices", "budget_nodes", "matrix_cap"):
            if getattr(self, name) <= 0:
                raise UsageError(f"{name.replace('_', '-')} must be positive")


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.input is None:
        raise UsageError("--input is required")
    try:
        text = cfg.input.read_text()
    except OSError as exc:
        raise UsageError(f"{cfg.input}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except EdgeListError as exc:
        raise UsageError(f"{cfg.input}:{exc.line}: {str(exc).split(': ', 1)[1]}") from None


def _load_complex(cfg: RunConfig) -> SimplicialComplex:
    return whitney_complex(_load_graph(cfg))


def _parse_labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(t) for t in text.replace(",", " ").split()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer labels, got {text!r}") from None


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def _complex_summary(c: SimplicialComplex) -> dict:
    return {
        "f_vector": list(f_vector(c)),
        "chi": euler_characteristic(c),
        "psi": fermi_characteristic(c),
        "dimension": c.dimension,
    }


def cmd_complex(cfg: RunConfig) -> tuple[dict, bool]:
    g = _load_graph(cfg)
    c = whitney_complex(g)
    out = {"vertices": len(g), "edges": len(g.edges), "valid": validate(c)}
    out.update(_complex_summary(c))
    out["facets"] = len(c.facets())
    out["inductive_dimension"] = str(inductive_dimension(g))
    if len(c) <= REFINED_DIMENSION_CAP:
        out["refined_inductive_dimension"] = str(refined_inductive_dimension(c))
    return out, out["valid"]


def cmd_refine(cfg: RunConfig) -> tuple[dict, bool]:
    c = _load_complex(cfg)
    if cfg.twice:
        try:
            r = barycentric2(c, cfg.budget_simplices)
        except RefinementOverflow as exc:
            raise UsageError(str(exc)) from None
    else:
        r = barycentric(c)
    return {"twice": cfg.twice, **r.to_dict()}, True


def cmd_connection(cfg: RunConfig) -> tuple[dict, bool]:
    return connection(_load_complex(cfg)).to_dict(), True


def _check_matrix(c: SimplicialComplex, cfg: RunConfig) -> None:
    if len(c) > cfg.matrix_cap:
        raise UsageError(f"matrix of order {len(c)} exceeds cap {cfg.matrix_cap}")


def cmd_green(cfg: RunConfig) -> tuple[dict, bool]:
    c = _load_complex(cfg)
    _check_matrix(c, cfg)
    report = green_report(c)
    return report.to_dict(), report.ok


def cmd_remove(cfg: RunConfig) -> tuple[dict, bool]:
    c = _load_complex(cfg)
    _check_matrix(c, cfg)
    targets = [cfg.simplex] if cfg.simplex else sorted(c.facets())
    rows = []
    for x in targets:
        try:
            det, predicted = psi_remove_cell(c, x)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rows.append({"simplex": list(x), "det": det, "predicted": predicted, "match": det == predicted})
    ok = all(r["match"] for r in rows)
    return {"psi": fermi_characteristic(c), "ok": ok, "rows": rows}, ok


def cmd_attach(cfg: RunConfig) -> tuple[dict, bool]:
    g = _load_graph(cfg)
    c = whitney_complex(g)
    _check_matrix(c, cfg)
    if cfg.along is not None:
        unknown = set(cfg.along) - set(g.vertices)
        if unknown:
            raise UsageError(f"unknown vertices {sorted(unknown)}")
        supports = [cfg.along]
    else:
        rng = random.Random(cfg.seed)
        supports = [tuple(v for v in g.vertices if rng.random() < 0.5) for _ in range(ATTACH_SAMPLES)]
    rows = []
    for vs in supports:
        h = full_subcomplex(c, vs)
        det, predicted = psi_attach_cell(c, h)
        rows.append({
            "along": list(vs),
            "chi_h": euler_characteristic(h),
            "det": det,
            "predicted": predicted,
            "match": det == predicted,
        })
    ok = all(r["match"] for r in rows)
    return {"psi": fermi_characteristic(c), "ok": ok, "rows": rows}, ok


def cmd_betti(cfg: RunConfig) -> tuple[dict, bool]:
    c = _load_complex(cfg)
    b = betti(c)
    chi = euler_characteristic(c)
    alt = sum((-1) ** k * x for k, x in enumerate(b))
    out = {"betti": list(b), "chi": chi, "euler_poincare": alt == chi}
    if len(c) <= cfg.matrix_cap:
        out["hodge_nullities"] = list(hodge_nullities(c))
    ok = alt == chi and out.get("hodge_nullities", out["betti"]) == out["betti"]
    return out, ok


def cmd_spheres(cfg: RunConfig) -> tuple[dict, bool]:
    g = _load_graph(cfg)
    c = whitney_complex(g)
    spectra = sphere_spectrum(c)
    verdict = is_sphere(g, cfg.budget_nodes, cfg.strict_spheres)
    unit = []
    for v in g.vertices:
        uv = is_sphere(unit_sphere(g, v), cfg.budget_nodes, cfg.strict_spheres)
        unit.append({"vertex": v, **uv.to_dict()})
    out = {
        "spectrum": spectra.spectrum,
        "vertex_spectrum": spectra.vertex_spectrum,
        "betti_spectrum": [list(b) for b in spectra.betti_spectrum],
        "verdict": verdict.to_dict(),
        "unit_spheres": unit,
    }
    return out, True


def _describe(g: Graph) -> str:
    n, m = len(g), len(g.edges)
    if m == n * (n - 1) // 2:
        return f"K{n}"
    if m == 0:
        return f"P{n}"
    if n >= 3 and m == n and g.is_connected() and all(g.degree(v) == 2 for v in g.vertices):
        return f"C{n}"
    return f"G(v={n},e={m})"


def cmd_arith(cfg: RunConfig) -> tuple[dict, bool]:
    if not cfg.expression:
        raise UsageError("an expression is required")
    try:
        g = evaluate(cfg.expression)
    except ExpressionError as exc:
        raise UsageError(f"expression: {exc}") from None
    if len(g) > MAX_VERTICES:
        raise UsageError(f"result has {len(g)} vertices; limit is {MAX_VERTICES}")
    c = whitney_complex(g)
    spectrum = vertex_laplacian_spectrum(g)
    out = {
        "expression": cfg.expression,
        "vertices": len(g),
        "edges": len(g.edges),
        **_complex_summary(c),
        "i": 1 - euler_characteristic(c),
        "euler_polynomial": list(graph_euler_polynomial(g)),
        "prime_factors": [_describe(f) for f in additive_prime_decompose(g)],
        "max_eigenvalue": round(spectrum.maximum, 10),
    }
    return out, True


def cmd_primegraph(cfg: RunConfig) -> tuple[dict, bool]:
    if cfg.n is None:
        raise UsageError("--n is required")
    if cfg.n < 2:
        raise UsageError("--n must be at least 2")
    out: dict = {"n": cfg.n}
    ok = True
    if cfg.mertens:
        chi, rhs = mertens_euler(cfg.n)
        out["mertens"] = {"chi": chi, "one_minus_mertens": rhs, "match": chi == rhs}
        ok &= chi == rhs
    needs_panel = cfg.green or cfg.sphere is not None or not cfg.mertens
    if needs_panel:
        try:
            panel = build_panel(cfg.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.update(
            vertices=len(panel.squarefree),
            g_edges=len(panel.g_n.edges),
            h_edges=len(panel.h_n.edges),
            **_complex_summary(panel.complex),
        )
        if cfg.green:
            try:
                report = prime_green_check(panel, cfg.matrix_cap)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            out["green"] = report.to_dict()
            ok &= report.ok
        if cfg.sphere is not None:
            try:
                s = sphere_at(panel, cfg.sphere)
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
            out["sphere"] = {
                "x": s.x,
                "vertices": list(s.vertices),
                "edges": s.edges,
                "betti": list(s.betti),
                "chi": s.chi,
                "i": s.index,
                "green": s.green,
                "match": s.index == s.green,
            }
            ok &= s.index == s.green
    return out, ok


def cmd_spectrum(cfg: RunConfig) -> tuple[dict, bool]:
    g = _load_graph(cfg)
    try:
        spectrum = vertex_laplacian_spectrum(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"vertices": len(g), **spectrum.to_dict()}, True


def cmd_verify_all(cfg: RunConfig) -> tuple[dict, bool]:
    results = verify_all(cfg.seed)
    ok = all(r.passed for r in results)
    return {"ok": ok, "checks": [r.to_dict() for r in results]}, ok


COMMANDS: dict[str, Callable[[RunConfig], tuple[dict, bool]]] = {
    "complex": cmd_complex,
    "refine": cmd_refine,
    "connection": cmd_connection,
    "green": cmd_green,
    "attach": cmd_attach,
    "remove": cmd_remove,
    "betti": cmd_betti,
    "spheres": cmd_spheres,
    "arith": cmd_arith,
    "primegraph": cmd_primegraph,
    "spectrum": cmd_spectrum,
    "verify-all": cmd_verify_all,
}


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "NO"
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}={_cell(x)}" for k, x in v.items()) + "}"
    return "-" if v is None else str(v)


def _table(rows: list[dict]) -> list[str]:
    header = list(rows[0])
    body = [[_cell(r.get(h)) for h in header] for r in rows]
    widths = [max(len(h), *(len(b[i]) for b in body)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(b, widths)) for b in body]
    return lines


def render_table(report: dict, indent: str = "") -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            lines.append(f"{indent}{key}:")
            lines += [indent + "  " + t for t in _table(value)]
        elif isinstance(value, dict) and value and any(isinstance(v, (list, dict)) for v in value.values()):
            lines.append(f"{indent}{key}:")
            lines.append(render_table(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
    return "\n".join(lines)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return render_table(report)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def run(cfg: RunConfig) -> tuple[int, str]:
    try:
        body, ok = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        return 2, f"error: {exc}"
    report = {"schema": SCHEMA, "command": cfg.command, "seed": cfg.seed, **body}
    return (0 if ok else 1), render(report, cfg.fmt)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", type=Path, help="edge-list file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    common.add_argument("--budget-simplices", type=_positive, default=DEFAULT_SIMPLEX_BUDGET)
    common.add_argument("--budget-nodes", type=_positive, default=DEFAULT_NODE_BUDGET)
    common.add_argument("--matrix-cap", type=_positive, default=DEFAULT_MATRIX_CAP)
    common.add_argument("--strict-spheres", action="store_true")

    parser = argparse.ArgumentParser(prog="greencomplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "complex": "validate and summarize the Whitney complex",
        "refine": "Barycentric refinement",
        "connection": "connection graph",
        "green": "Green function diagonal against sphere indices",
        "attach": "determinant after attaching a cell",
        "remove": "determinant after removing a facet",
        "betti": "Betti numbers and Hodge nullities",
        "spheres": "sphere spectrum and sphere verdicts",
        "arith": "evaluate a graph arithmetic expression",
        "primegraph": "graphs on square-free integers",
        "spectrum": "Laplacian spectrum of the input graph",
        "verify-all": "run the invariant suite over the built-in corpus",
    }
    subs = {name: sub.add_parser(name, parents=[common], help=h) for name, h in helps.items()}
    subs["refine"].add_argument("--twice", action="store_true")
    subs["remove"].add_argument("--simplex", type=_parse_labels, help="e.g. 0,1,2")
    subs["attach"].add_argument("--along", type=_parse_labels, help="vertex set of the full subcomplex")
    subs["arith"].add_argument("expression")
    p = subs["primegraph"]
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--green", action="store_true")
    p.add_argument("--mertens", action="store_true")
    p.add_argument("--sphere", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**fields)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code, text = run(cfg)
    print(text, file=sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
