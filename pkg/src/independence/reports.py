from dataclasses import dataclass, field
from typing import Dict, List, Optional

NO_RELATION = "no relation"
INDEPENDENCE_CONFIRMED = "independence confirmed"
ASSUMPTIONS_NOT_MET = "assumptions not met"
NOT_APPLICABLE = "not applicable"
COUNTEREXAMPLE = "counterexample"
CONCLUSION_HOLDS = "conclusion holds"
HYPOTHESIS_FAILS = "hypothesis fails"


@dataclass
class VerifierReport:
    """
    Outcome of one theorem instance. `passed` is False only when a checked
    implication is violated, which the CLI maps to exit code 1.
    """

    hypothesis_holds: bool
    hypothesis_mode: str
    conclusion_holds: Optional[bool]
    verdict: str
    witnesses: List[str] = field(default_factory=list)
    assumptions: List[Dict] = field(default_factory=list)
    details: Dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict != COUNTEREXAMPLE

    def to_dict(self):
        return {
            "hypothesis": {"holds": self.hypothesis_holds, "mode": self.hypothesis_mode},
            "conclusion": {"holds": self.conclusion_holds, "witnesses": list(self.witnesses)},
            "assumptions": list(self.assumptions),
            "verdict": self.verdict,
            **self.details,
        }
