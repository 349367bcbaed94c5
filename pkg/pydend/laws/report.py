import json
import typing as t
import typing_extensions as te


TCounterexample = te.TypedDict(
    "TCounterexample",
    {
        "relation": str,
        "inputs": t.List[t.Any],
        "residual": t.Any,
    },
)

TPlan = te.TypedDict(
    "TPlan",
    {
        "mode": str,
        "max_degree": t.Optional[int],
        "count": int,
        "seed": int,
        "terms": int,
        "x_degree": t.Optional[int],
        "y_max_degree": t.Optional[int],
    },
)

TLawReport = te.TypedDict(
    "TLawReport",
    {
        "law": str,
        "plan": TPlan,
        "seed": int,
        "verdict": str,
        "checked": int,
        "violations": int,
        "notes": t.List[str],
        "counterexamples": t.List[TCounterexample],
    },
)


class PlanMode:
    EXHAUSTIVE: te.Final = "exhaustive"
    RANDOM: te.Final = "random"


class Verdict:
    PASS: te.Final = "pass"
    FAIL: te.Final = "fail"


class SamplingPlan:
    """
    Which inputs a verifier evaluates. Exhaustive plans walk basis tuples (their
    combined degree bounded by max_degree on graded algebras); random plans draw
    `count` seeded tuples. Both are recorded inside every report.
    """

    _mode: str = PlanMode.EXHAUSTIVE
    _max_degree: t.Optional[int] = None
    _count: int = 100
    _seed: int = 0
    _terms: int = 3
    _x_degree: t.Optional[int] = None
    _y_max_degree: t.Optional[int] = None

    @classmethod
    def exhaustive(cls, max_degree: t.Optional[int] = None) -> "SamplingPlan":
        return cls().set_mode(PlanMode.EXHAUSTIVE).set_max_degree(max_degree)

    @classmethod
    def random(cls, count: int, seed: int = 0, max_degree: t.Optional[int] = None) -> "SamplingPlan":
        return cls().set_mode(PlanMode.RANDOM).set_count(count).set_seed(seed).set_max_degree(max_degree)

    def get_mode(self) -> str:
        return self._mode

    def set_mode(self, mode: str) -> "SamplingPlan":
        if mode not in (PlanMode.EXHAUSTIVE, PlanMode.RANDOM):
            raise ValueError(f"Unknown sampling mode: {mode}")
        self._mode = mode
        return self

    def is_exhaustive(self) -> bool:
        return self._mode == PlanMode.EXHAUSTIVE

    def get_max_degree(self) -> t.Optional[int]:
        return self._max_degree

    def set_max_degree(self, value: t.Optional[int]) -> "SamplingPlan":
        self._max_degree = value
        return self

    def get_count(self) -> int:
        return self._count

    def set_count(self, value: int) -> "SamplingPlan":
        self._count = value
        return self

    def get_seed(self) -> int:
        return self._seed

    def set_seed(self, value: int) -> "SamplingPlan":
        self._seed = value
        return self

    def get_terms(self) -> int:
        return self._terms

    def set_terms(self, value: int) -> "SamplingPlan":
        self._terms = value
        return self

    def get_x_degree(self) -> t.Optional[int]:
        """
        Degree of the p-map argument x for graded algebras (None: any degree).
        """
        return self._x_degree

    def set_x_degree(self, value: t.Optional[int]) -> "SamplingPlan":
        self._x_degree = value
        return self

    def get_y_max_degree(self) -> t.Optional[int]:
        return self._y_max_degree

    def set_y_max_degree(self, value: t.Optional[int]) -> "SamplingPlan":
        self._y_max_degree = value
        return self

    def to_dict(self) -> TPlan:
        return {
            "mode": self._mode,
            "max_degree": self._max_degree,
            "count": self._count,
            "seed": self._seed,
            "terms": self._terms,
            "x_degree": self._x_degree,
            "y_max_degree": self._y_max_degree,
        }


class LawReport:
    _law: str
    _plan: SamplingPlan
    _checked: int
    _violations: int
    _notes: t.List[str]
    _counterexamples: t.List[TCounterexample]
    _max_stored: int

    def __init__(self, law: str, plan: t.Optional[SamplingPlan] = None, max_stored: int = 50):
        self._law = law
        self._plan = plan or SamplingPlan()
        self._checked = 0
        self._violations = 0
        self._notes = []
        self._counterexamples = []
        self._max_stored = max_stored

    def get_law(self) -> str:
        return self._law

    def get_plan(self) -> SamplingPlan:
        return self._plan

    def get_checked(self) -> int:
        return self._checked

    def get_violations(self) -> int:
        return self._violations

    def get_counterexamples(self) -> t.List[TCounterexample]:
        return sorted(self._counterexamples, key=_canonical_key)

    def get_notes(self) -> t.List[str]:
        return list(self._notes)

    def add_note(self, note: str) -> "LawReport":
        if note not in self._notes:
            self._notes.append(note)
        return self

    def record(self, relation: str, inputs: t.List[t.Any], residual: t.Any, ok: bool) -> bool:
        self._checked += 1
        if ok:
            return True
        self._violations += 1
        if len(self._counterexamples) < self._max_stored:
            self._counterexamples.append({"relation": relation, "inputs": inputs, "residual": residual})
        return False

    def merge(self, other: "LawReport") -> "LawReport":
        self._checked += other._checked
        self._violations += other._violations
        for note in other._notes:
            self.add_note(note)
        room = self._max_stored - len(self._counterexamples)
        self._counterexamples.extend(other.get_counterexamples()[: max(room, 0)])
        return self

    @property
    def verdict(self) -> str:
        return Verdict.PASS if self._violations == 0 else Verdict.FAIL

    def passed(self) -> bool:
        return self._violations == 0

    def relations_failed(self) -> t.List[str]:
        return sorted({c["relation"] for c in self._counterexamples})

    def to_dict(self) -> TLawReport:
        return {
            "law": self._law,
            "plan": self._plan.to_dict(),
            "seed": self._plan.get_seed(),
            "verdict": self.verdict,
            "checked": self._checked,
            "violations": self._violations,
            "notes": list(self._notes),
            "counterexamples": self.get_counterexamples(),
        }

    def get_value(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def __repr__(self) -> str:
        return f"<LawReport {self._law}: {self.verdict} ({self._checked} checked, {self._violations} violations)>"


def _canonical_key(item: TCounterexample) -> str:
    return json.dumps(item, sort_keys=True, ensure_ascii=False)
