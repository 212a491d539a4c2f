"""Ratio audit: run the approximation over a corpus and compare to the exact optimum."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .assemble import approx_mist
from .graph import Graph
from .oracle import DEFAULT_ORACLE_BOUND, exact_mist


@dataclass
class AuditRecord:
    instance: str
    n: int
    m: int
    alg: int | None = None
    oracle: int | None = None
    cover_edges: int | None = None
    unconstrained_edges: int | None = None
    route: str = ""
    lossy_repairs: int = 0
    alpha_violations: int = 0
    error: str | None = None

    @property
    def ratio(self) -> Fraction | None:
        """oracle / alg as an exact fraction (None without an oracle)."""
        if self.oracle is None or self.alg is None:
            return None
        if self.alg == 0:
            return Fraction(1) if self.oracle == 0 else None
        return Fraction(self.oracle, self.alg)

    @property
    def violation(self) -> bool:
        if self.oracle is None or self.alg is None:
            return False
        return 3 * self.oracle > 4 * self.alg

    def line(self) -> str:
        parts = [self.instance, f"n={self.n}", f"m={self.m}"]
        if self.error is not None:
            return " ".join(parts + [f"ERROR {self.error}"])
        parts.append(f"alg={self.alg}")
        if self.oracle is not None:
            parts.append(f"oracle={self.oracle}")
            r = self.ratio
            if r is not None:
                parts.append(f"ratio={r.numerator}/{r.denominator}")
        parts += [f"cover={self.cover_edges}", f"unconstrained={self.unconstrained_edges}",
                  f"route={self.route}", f"lossy_repairs={self.lossy_repairs}"]
        if self.alpha_violations:
            parts.append(f"alpha_violations={self.alpha_violations}")
        if self.violation:
            parts.append("VIOLATION")
        return " ".join(parts)


@dataclass
class AuditSummary:
    records: list[AuditRecord] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(r.violation for r in self.records)

    @property
    def errors(self) -> int:
        return sum(r.error is not None for r in self.records)

    @property
    def alpha_violations(self) -> int:
        return sum(r.alpha_violations for r in self.records)

    @property
    def max_ratio(self) -> Fraction | None:
        rs = [r.ratio for r in self.records if r.ratio is not None]
        return max(rs) if rs else None

    def line(self) -> str:
        mr = self.max_ratio
        mr_text = "none" if mr is None else f"{mr.numerator}/{mr.denominator}"
        return (f"instances={len(self.records)} max_ratio={mr_text} "
                f"violations={self.violations} alpha_violations={self.alpha_violations} "
                f"errors={self.errors}")


def audit_instance(name: str, g: Graph, oracle: bool = False, cover_mode: str = "exact",
                   oracle_bound: int = DEFAULT_ORACLE_BOUND) -> AuditRecord:
    rec = AuditRecord(name, g.n, g.m)
    try:
        t, stats = approx_mist(g, cover_mode)
        rec.alg = t.internal_count
        rec.cover_edges = stats.get("cover_edges")
        rec.unconstrained_edges = stats.get("unconstrained_edges")
        rec.route = stats["route"]
        rec.lossy_repairs = stats.get("lossy_repairs", 0)
        rec.alpha_violations = stats.get("alpha_violations", 0)
        if oracle:
            rec.oracle = exact_mist(g, oracle_bound)[1]
    except Exception as exc:  # recorded, the run continues
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def ratio_audit(instances, oracle: bool = False, cover_mode: str = "exact",
                oracle_bound: int = DEFAULT_ORACLE_BOUND, on_record=None) -> AuditSummary:
    """Audit (name, graph) pairs; records keep corpus order."""
    summary = AuditSummary()
    for name, g in instances:
        rec = audit_instance(name, g, oracle, cover_mode, oracle_bound)
        summary.records.append(rec)
        if on_record is not None:
            on_record(rec)
    return summary
