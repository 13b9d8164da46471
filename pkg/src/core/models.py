# src/core/models.py
"""
Result models returned by the closure tests, radical checks and ascent chains.

Witness ideals are kept as canonical generator strings so that every report is
an immutable value that serializes straight to JSON.
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class ClosednessMethod(str, Enum):
    RADICAL_FORMULA = "radical-formula"
    JACOBIAN = "jacobian"
    GORENSTEIN = "gorenstein"
    AUTO = "auto"


class Verdict(str, Enum):
    CLOSED = "closed"
    NOT_CLOSED = "not-closed"
    INCONCLUSIVE = "inconclusive"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ERROR = "error"


class RadicalStatus(str, Enum):
    VERIFIED_PARTIAL = "verified-partial"
    REFUTED = "refuted"


class AscentStatus(str, Enum):
    FIXED_POINT = "fixed-point"
    PARTIAL = "partial"
    MAX_ROUNDS = "max-rounds"


class JacobianVariant(str, Enum):
    MINORS_ONLY = "minors-only"
    IDEAL_PLUS_MINORS = "ideal-plus-minors"


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class HypothesisCheck(_Frozen):
    """代表一个假设检查 (unmixed, generically-ci, ...) 的结果。"""

    status: CheckStatus
    detail: str | None = None


class ClosednessReport(_Frozen):
    """
    Outcome of ``is_integrally_closed``.

    verdict is ``closed`` only when the raw equality holds and every required
    hypothesis passed; ``not-closed`` only with a certified witness.
    """

    method: ClosednessMethod
    hypothesis_checks: dict[str, HypothesisCheck] = Field(default_factory=dict)
    required_hypotheses: list[str] = Field(default_factory=list)
    raw_result: bool | None = None
    verdict: Verdict = Verdict.INCONCLUSIVE
    witnesses: dict[str, list[str]] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)

    def hypotheses_pass(self, names: list[str] | None = None) -> bool:
        names = self.required_hypotheses if names is None else names
        return all(
            name in self.hypothesis_checks and self.hypothesis_checks[name].status == CheckStatus.PASS
            for name in names
        )


class RadicalCheck(_Frozen):
    status: RadicalStatus
    offending: str | None = None
    reason: str | None = None


class GotoCheck(_Frozen):
    """L^2 = IL and I*rad = L*rad, reported separately; ``holds`` is their conjunction."""

    l_squared_equals_il: bool
    im_equals_lm: bool
    out_of_hypothesis: bool = False

    @property
    def holds(self) -> bool:
        return self.l_squared_equals_il and self.im_equals_lm

