# src/qopolars/verify/types.py
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

MATCH = "match"
MISMATCH = "mismatch"
INCONCLUSIVE = "inconclusive"
SKIPPED = "skipped"


@dataclass
class VerificationEntry:
    claim: str
    predicted: Optional[str]
    oracle: Optional[str]
    status: str
    substitution: Optional[Tuple[int, ...]] = None
    theorem_backed: bool = True
    detail: Optional[str] = None
    # the oracle ran out of precision rather than disagreeing
    indeterminate: bool = False

    def to_json(self) -> Dict:
        return {
            "claim": self.claim,
            "predicted": self.predicted,
            "oracle": self.oracle,
            "status": self.status,
            "substitution": None if self.substitution is None else list(self.substitution),
            "theorem_backed": self.theorem_backed,
            "detail": self.detail,
            "indeterminate": self.indeterminate,
        }


@dataclass
class VerificationReport:
    entries: List[VerificationEntry] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    def add(self, entry: VerificationEntry) -> VerificationEntry:
        self.entries.append(entry)
        return entry

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.entries.extend(other.entries)
        self.notes.extend(other.notes)
        self.violations.extend(other.violations)
        return self

    def count(self, status: str) -> int:
        return sum(1 for e in self.entries if e.status == status)

    @property
    def mismatches(self) -> List[VerificationEntry]:
        return [e for e in self.entries if e.status == MISMATCH]

    @property
    def indeterminate(self) -> bool:
        """Inconclusive overall, with at least one claim blocked by missing precision."""
        return self.status == INCONCLUSIVE and any(e.indeterminate for e in self.entries)

    @property
    def status(self) -> str:
        if self.mismatches:
            return MISMATCH
        if not self.entries or all(e.status in (INCONCLUSIVE, SKIPPED) for e in self.entries):
            return INCONCLUSIVE
        return MATCH

    def to_json(self) -> Dict:
        return {
            "status": self.status,
            "counts": {s: self.count(s) for s in (MATCH, MISMATCH, INCONCLUSIVE, SKIPPED)},
            "entries": [e.to_json() for e in self.entries],
            "notes": list(self.notes),
            "violations": list(self.violations),
        }
