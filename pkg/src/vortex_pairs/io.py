"""Solution files (JSON, schema version 1) and boundary exports."""

import datetime
import io as _io
import json

import numpy as np

from . import __version__
from .boundary import CircleGrid, scale_to_physical
from .functionals import ProblemSpec, Velocity
from .solver import PairSolution
from .validation import ValidationReport

SCHEMA_VERSION = 1


class SolutionFileError(ValueError):
    pass


def solution_to_dict(sol):
    # json writes floats with repr, which round-trips every double exactly
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": sol.spec.to_dict(),
        "velocity": {"kind": sol.vel.kind, "value": float(sol.vel.value)},
        "coefficients": [float(x) for x in sol.coeffs],
        "residual_inf": float(sol.residual_inf),
        "newton_iters": int(sol.newton_iters),
        "diagnostics": {k: float(v) for k, v in sol.diagnostics.items()},
        "validation": sol.report.to_dict() if sol.report is not None else None,
        "provenance": {
            "tool": "vortex_pairs",
            "version": __version__,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
            "determinism": "no random numbers are used; identical inputs give identical results",
        },
    }


def solution_from_dict(data):
    try:
        if data["schema_version"] != SCHEMA_VERSION:
            raise SolutionFileError(f"unsupported schema version {data['schema_version']!r}")
        spec = ProblemSpec(**data["spec"])
        vel = Velocity(data["velocity"]["kind"], data["velocity"]["value"])
        coeffs = np.array(data["coefficients"], dtype=float)
        if coeffs.size != spec.N:
            raise SolutionFileError("coefficient count does not match N")
        report = data.get("validation")
        return PairSolution(
            spec, coeffs, vel, data["residual_inf"], data.get("newton_iters", 0),
            dict(data.get("diagnostics", {})),
            ValidationReport.from_dict(report) if report else None,
        )
    except (KeyError, TypeError) as exc:
        raise SolutionFileError(f"ill-formed solution file: {exc}") from exc
    except ValueError as exc:
        raise SolutionFileError(str(exc)) from exc


def save_solution(sol, path):
    with open(path, "w") as fh:
        json.dump(solution_to_dict(sol), fh, indent=1)
        fh.write("\n")


def load_solution(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SolutionFileError(f"cannot read {path}: {exc}") from exc
    return solution_from_dict(data)


def boundary_points(sol, points=None):
    grid = CircleGrid(points or sol.spec.M)
    z1, z2 = scale_to_physical(sol.coeffs, sol.spec.rule, grid, sol.spec.d)
    return grid.theta, z1, z2


def export_csv(sol, points=None):
    theta, z1, z2 = boundary_points(sol, points)
    out = _io.StringIO()
    out.write("curve_id,theta,x,y\n")
    for cid, z in ((1, z1), (2, z2)):
        for t, p in zip(theta, z):
            out.write(f"{cid},{float(t)!r},{float(p.real)!r},{float(p.imag)!r}\n")
    return out.getvalue()


def export_svg(sol, points=None, size=600):
    theta, z1, z2 = boundary_points(sol, points)
    d = sol.spec.d
    r = max(np.max(np.abs(z1)), 1e-3 * d)
    pad = 0.15 * (2 * d + 2 * r)
    x0, x1 = -r - pad, 2 * d + r + pad
    y0, y1 = -r - pad, r + pad
    scale = size / (x1 - x0)
    height = (y1 - y0) * scale

    def tx(z):
        return (z.real - x0) * scale, (y1 - z.imag) * scale

    def path(z):
        pts = [tx(p) for p in z]
        head = "M {:.4f} {:.4f} ".format(*pts[0])
        return head + " ".join("L {:.4f} {:.4f}".format(*p) for p in pts[1:]) + " Z"

    (ax, ay), (bx, by) = tx(complex(-r - pad / 2, 0)), tx(complex(2 * d + r + pad / 2, 0))
    cx, cy = tx(complex(d, 0))
    sp = sol.spec
    title = f"{sp.model} {sp.pair} d={sp.d:g} eps={sp.epsilon:g}"
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{height:.1f}" '
        f'viewBox="0 0 {size} {height:.4f}">\n'
        f"<title>{title}</title>\n"
        f'<line x1="{ax:.4f}" y1="{ay:.4f}" x2="{bx:.4f}" y2="{by:.4f}" '
        f'stroke="gray" stroke-dasharray="4 3" stroke-width="0.8"/>\n'
        f'<circle cx="{cx:.4f}" cy="{cy:.4f}" r="2.5" fill="gray"/>\n'
        f'<path d="{path(z1)}" fill="none" stroke="black" stroke-width="1"/>\n'
        f'<path d="{path(z2)}" fill="none" stroke="black" stroke-width="1"/>\n'
        "</svg>\n"
    )

