"""Full analysis of one ring document, as a JSON-ready report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import char_solver, group_recovery, subrings
from .document import RingDocument
from .errors import FusionScopeError, ResourceLimitError
from .fusion_core import validate
from .group_recovery import format_factors

__all__ = ["AnalysisReport", "analyze"]

TRUNCATION_WARNING = ("ring is a truncation: only products p x q with p + q <= {b} are used; "
                      "results describe the truncated data")


def _num(x: float) -> float:
    return round(float(x), 10) + 0.0


def _cplx(z: complex) -> list[float]:
    return [_num(z.real), _num(z.imag)]


@dataclass
class AnalysisReport:
    """Ordered mapping of section name -> result dict (each with a ``status``)."""

    ring_name: str
    seed: int
    tol: float
    sections: dict[str, dict] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.sections["validation"]["status"] == "ok"

    def to_dict(self) -> dict:
        return {"ring": self.ring_name, "seed": self.seed, "tol": self.tol, "sections": self.sections}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"analysis of {self.ring_name} (seed {self.seed}, tol {self.tol:g})"]
        for name, sec in self.sections.items():
            lines.append(f"[{name}] {sec['status']}")
            for key in ("summary", "meaning", "message"):
                if key in sec:
                    lines.append(f"  {sec[key]}")
            for w in sec.get("warnings", []):
                lines.append(f"  warning: {w}")
        return "\n".join(lines) + "\n"


def _section(fn):
    try:
        out = fn()
        out.setdefault("status", "ok")
        return out
    except ResourceLimitError as exc:
        return {"status": "resource-limit", "message": str(exc)}
    except FusionScopeError as exc:
        return {"status": "error", "message": f"{type(exc).__name__}: {exc}"}


def analyze(doc: RingDocument, seed: int | None = None, tol: float = char_solver.DEFAULT_TOL,
            max_rank: int = subrings.DEFAULT_MAX_RANK) -> AnalysisReport:
    """Run every analysis on ``doc``; deterministic for fixed ``seed`` and ``tol``."""
    seed = char_solver.default_seed() if seed is None else seed
    ring = doc.to_ring()
    labels = ring.labels
    report = AnalysisReport(ring.name, seed, tol)
    warn = [TRUNCATION_WARNING.format(b=ring.complete_below)] if ring.is_truncated else []

    v = validate(ring)
    report.sections["validation"] = {
        "status": "ok" if v.ok else "violated",
        "summary": "all axioms hold" if v.ok else f"violated: {', '.join(v.axioms_violated())}",
        "violations": [{"axiom": x.axiom, "witness": list(x.witness), "detail": x.detail} for x in v.violations],
        "warnings": list(warn),
    }
    if not v.ok:
        return report

    def invertibles():
        g = group_recovery.invertible_characters(ring)
        return {"elements": [labels[p] for p in g.elements], "invariant_factors": list(g.invariant_factors),
                "summary": f"one-dimensional characters form {g}",
                "meaning": "dual of the abelianization G/[G,G]", "warnings": list(warn)}

    def chain():
        res = group_recovery.chain_group(ring)
        return {"classes": [[labels[p] for p in c] for c in res.classes()],
                "invariant_factors": list(res.group.invariant_factors),
                "summary": f"chain group {res.group} with {len(res.classes())} classes",
                "meaning": "dual of the center Z(G)", "warnings": list(warn)}

    def lattice():
        lat = subrings.enumerate_subrings(ring, max_rank)
        return {"count": len(lat), "subrings": [s.labels() for s in lat.subrings], "covers": lat.covers(),
                "summary": f"{len(lat)} representation subrings",
                "meaning": "count of closed normal subgroups of G", "warnings": list(warn)}

    def adjoint():
        sub = subrings.adjoint_subring(ring)
        char = subrings.characteristic_check(ring, sub, max_rank)
        meaning = "corresponds to the center Z(G); spans the representation ring of G/Z(G)"
        if ring.connected:
            meaning += ("; G connected, so the ring-level invariance " +
                        ("shows Z(G) is characteristic" if char else "fails"))
        else:
            meaning += "; characteristic-subgroup reading needs connected: true"
        return {"basis": sub.labels(), "invariant_under_automorphisms": char,
                "summary": f"adjoint subring spanned by {', '.join(sub.labels())}",
                "meaning": meaning, "warnings": list(warn)}

    def automorphisms():
        autos = subrings.order_automorphisms(ring, max_rank)
        return {"count": len(autos), "permutations": [list(a.perm) for a in autos],
                "summary": f"{len(autos)} order automorphisms", "warnings": list(warn)}

    def characters():
        sols = char_solver.solve_character_system(ring, tol=tol, seed=seed)
        worst = max((s.residual for s in sols), default=0.0)
        note = ("columns of the character table" if not ring.is_truncated
                else "formal solutions of the complete equations")
        return {"solutions": [[_cplx(z) for z in s.values] for s in sols],
                "max_residual": float(f"{worst:.3e}"),
                "summary": f"{len(sols)} solutions, max residual {worst:.2e}",
                "meaning": note, "warnings": list(warn)}

    def fpdims():
        d = char_solver.fp_dimensions(ring)
        res = char_solver.verify_solution(ring, d)
        return {"values": [_num(x) for x in d], "residual": float(f"{res:.3e}"),
                "summary": "FP dimension " + ", ".join(f"{lab}: {x:.6g}" for lab, x in zip(labels, d)),
                "warnings": list(warn) + (["truncation artifact: not the true dimensions"] if ring.is_truncated else [])}

    report.sections["invertible_characters"] = _section(invertibles)
    report.sections["chain_group"] = _section(chain)
    report.sections["subring_lattice"] = _section(lattice)
    report.sections["adjoint_subring"] = _section(adjoint)
    report.sections["automorphisms"] = _section(automorphisms)
    report.sections["character_solutions"] = _section(characters)
    report.sections["fp_dimensions"] = _section(fpdims)

    if doc.fs_indicators:
        def oddfusion():
            r = group_recovery.check_oddfusion_pseudoreal_center(ring, doc.fs_indicators)
            out = {"status": r.status, "summary": r.message,
                   "pseudoreal": [labels[p] for p in r.pseudoreal]}
            if r.chain_group is not None:
                out["chain_group"] = format_factors(r.chain_group)
            return out
        report.sections["oddfusion_pseudoreal_center"] = _section(oddfusion)
    return report

