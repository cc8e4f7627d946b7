"""Report structures and their deterministic serializations.

The JSON schema is stable, field order included:

    {"scenario", "prime", "max_degree",
     "checks": [{"name", "status", "detail"} ...],
     "tables": {"column", "abutment", "invariants",
                "candidate", "singular", "de_rham"},
     "discovered_relations": [{"degree", "polynomial"} ...]}

Dimension tables are plain lists indexed by degree; polynomials are
sorted lists of [exponent-vector, coefficient].  Identical inputs
produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

TABLE_KEYS = ("column", "abutment", "invariants", "candidate", "singular", "de_rham")


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail"
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def check(name: str, ok: bool, detail: str) -> Check:
    return Check(name, "pass" if ok else "fail", detail)


@dataclass(frozen=True)
class Report:
    scenario: str
    prime: int
    max_degree: int
    checks: tuple[Check, ...]
    tables: dict[str, list[int]]
    discovered_relations: tuple[tuple[int, list], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "prime": self.prime,
            "max_degree": self.max_degree,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                       for c in self.checks],
            "tables": {key: list(self.tables.get(key, [])) for key in TABLE_KEYS},
            "discovered_relations": [{"degree": d, "polynomial": poly}
                                     for d, poly in self.discovered_relations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        """Tab-delimited rendering for terminals and flat files."""
        lines = [f"scenario\t{self.scenario}",
                 f"prime\t{self.prime}",
                 f"max_degree\t{self.max_degree}",
                 "",
                 "check\tstatus\tdetail"]
        for c in self.checks:
            lines.append(f"{c.name}\t{c.status}\t{c.detail}")
        lines.append("")
        lines.append("table\t" + "\t".join(str(d) for d in range(self.max_degree + 1)))
        for key in TABLE_KEYS:
            values = self.tables.get(key, [])
            if values:
                lines.append(key + "\t" + "\t".join(str(v) for v in values))
        if self.discovered_relations:
            lines.append("")
            lines.append("discovered_relation_degree\tpolynomial")
            for d, poly in self.discovered_relations:
                lines.append(f"{d}\t{json.dumps(poly)}")
        overall = "pass" if self.passed else "fail"
        lines.append("")
        lines.append(f"overall\t{overall}")
        return "\n".join(lines) + "\n"


__all__ = ["Check", "check", "Report", "TABLE_KEYS"]
