# src/cli/runner.py
"""
Command runner: one handler per CLI command, each returning a JSON-ready
payload. Exit codes: 0 success, 2 parse error, 3 inconclusive verdict or
failed hypothesis gate, 4 resource limit, 1 anything else.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Any, Callable

from src.closure.ascent import closure_ascent, grow_integral_elements
from src.closure.criteria import (
    gorenstein_gci_test,
    integrality_reduction_number,
    is_integrally_closed,
    jacobian_test,
)
from src.core.errors import AlgebraError, DegenerateInputError
from src.core.matrix import pfaffians
from src.core.models import JacobianVariant, Verdict
from src.core.ring import MonomialOrder
from src.cli.problem import ProblemFile
from src.ideals.calculus import colon, intersect, saturate
from src.ideals.dimension import dimension, height
from src.ideals.handle import IdealHandle
from src.ideals.hypotheses import is_generically_ci, is_unmixed
from src.ideals.radical import radical_zero_dim
from src.monomial.closure import monomial_integral_closure
from src.rees.rees import (
    colon_ascent_chain,
    hypersurface_normality,
    is_reduction,
    kernel_of_ring_map,
    power_closure_check,
    rees_presentation,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 3


@dataclass
class Outcome:
    result: Any
    report: dict | None = None
    exit_code: int = EXIT_OK


@dataclass
class Options:
    """Command options; names follow the CLI flags."""

    ideal: str = "I"
    radical: str | None = None
    num: str | None = None
    den: str | None = None
    other: str | None = None
    over: str | None = None
    closure: str | None = None
    matrix: str | None = None
    poly: str | None = None
    order: str | None = None
    method: str = "auto"
    variant: str = JacobianVariant.IDEAL_PLUS_MINORS.value
    assert_gorenstein: bool = False
    assert_irreducible: bool = True
    size: int = 4
    seed: int | None = None
    max_rounds: int = 5


def _require(value, flag: str):
    if value is None:
        raise DegenerateInputError(f"missing required option {flag}")
    return value


def _radical(problem: ProblemFile, opts: Options) -> IdealHandle:
    return problem.ideal(_require(opts.radical, "--radical"))


# --- 各命令 ---
def _gb(problem: ProblemFile, opts: Options) -> Outcome:
    I = problem.ideal(opts.ideal)
    if opts.order:
        ring = I.ring.with_order(MonomialOrder.parse(opts.order))
        I = IdealHandle(ring, I.gens)
    return Outcome({"order": str(I.ring.order), "basis": I.render()})


def _colon(problem: ProblemFile, opts: Options) -> Outcome:
    I = problem.ideal(_require(opts.num, "--num"))
    J = problem.ideal(_require(opts.den, "--den"))
    return Outcome(colon(I, J).render())


def _intersect(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(intersect(problem.ideal(opts.ideal), problem.ideal(_require(opts.other, "--other"))).render())


def _saturate(problem: ProblemFile, opts: Options) -> Outcome:
    I = problem.ideal(_require(opts.num, "--num"))
    J = problem.ideal(_require(opts.den, "--den"))
    return Outcome(saturate(I, J).render())


def _dim(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(dimension(problem.ideal(opts.ideal)))


def _height(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(height(problem.ideal(opts.ideal)))


def _unmixed(problem: ProblemFile, opts: Options) -> Outcome:
    seed = _require(opts.seed, "--seed")
    return Outcome(is_unmixed(problem.ideal(opts.ideal), seed))


def _gci(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(is_generically_ci(problem.ideal(opts.ideal)))


def _radical0(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(radical_zero_dim(problem.ideal(opts.ideal)).render())


def _closed(problem: ProblemFile, opts: Options) -> Outcome:
    radI = problem.ideal(opts.radical) if opts.radical else None
    report = is_integrally_closed(problem.ideal(opts.ideal), radI, opts.method,
                                  assert_gen_gorenstein=opts.assert_gorenstein,
                                  variant=JacobianVariant(opts.variant), seed=opts.seed)
    code = EXIT_INCONCLUSIVE if report.verdict == Verdict.INCONCLUSIVE else EXIT_OK
    return Outcome({"verdict": report.verdict.value}, report.model_dump(mode="json"), code)


def _grow(problem: ProblemFile, opts: Options) -> Outcome:
    H, certified = grow_integral_elements(problem.ideal(opts.ideal), _radical(problem, opts), opts.seed)
    return Outcome({"H": H.render(), "certified": certified})


def _ascend(problem: ProblemFile, opts: Options) -> Outcome:
    result = closure_ascent(problem.ideal(opts.ideal), _radical(problem, opts), opts.max_rounds, opts.seed)
    return Outcome({"chain": [I.render() for I in result.chain], "status": result.status.value,
                    "detail": result.detail})


def _jacobian(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(jacobian_test(problem.ideal(opts.ideal), JacobianVariant(opts.variant), opts.seed))


def _gorenstein(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(gorenstein_gci_test(problem.ideal(opts.ideal)))


def _mono_closure(problem: ProblemFile, opts: Options) -> Outcome:
    return Outcome(monomial_integral_closure(problem.ideal(opts.ideal)).render())


def _rees_present(problem: ProblemFile, opts: Options) -> Outcome:
    P = rees_presentation(problem.ideal(opts.ideal))
    return Outcome({
        "variables": list(P.ring.variables),
        "relations": P.ideal.render(),
        "degree_one": [str(q.primitive()) for q in P.degree_one_part()],
    })


def _rees_ascend(problem: ProblemFile, opts: Options) -> Outcome:
    chain = colon_ascent_chain(problem.ideal(opts.ideal), _radical(problem, opts))
    return Outcome([{"k": k, "ideal": Ik.render(), "reduction_ok": ok} for k, (Ik, ok) in enumerate(chain, start=1)])


def _reduction(problem: ProblemFile, opts: Options) -> Outcome:
    J = problem.ideal(opts.ideal)
    I = problem.ideal(_require(opts.over, "--over"))
    return Outcome(is_reduction(J, I))


def _power_check(problem: ProblemFile, opts: Options) -> Outcome:
    ci = problem.ideal(opts.ideal)
    if len(ci.gens) != 2:
        raise DegenerateInputError("power-check needs an ideal with exactly two generators (a, b)")
    a, b = ci.gens
    Jbar = problem.ideal(_require(opts.closure, "--closure"))
    return Outcome(power_closure_check(a, b, Jbar))


def _pfaffians(problem: ProblemFile, opts: Options) -> Outcome:
    M = problem.matrix(_require(opts.matrix, "--matrix"))
    return Outcome([str(p.primitive()) for p in pfaffians(M, opts.size)])


def _kernel(problem: ProblemFile, opts: Options) -> Outcome:
    I = problem.ideal(opts.ideal)
    K = kernel_of_ring_map(list(I.gens), I.ring)
    return Outcome({"variables": list(K.ring.variables), "kernel": K.render()})


def _hyp_normal(problem: ProblemFile, opts: Options) -> Outcome:
    g = problem.polynomial(_require(opts.poly, "--poly"))
    return Outcome(hypersurface_normality(g, opts.assert_irreducible))


def _witness(problem: ProblemFile, opts: Options) -> Outcome:
    f = problem.polynomial(_require(opts.poly, "--poly"))
    r = integrality_reduction_number(f, problem.ideal(opts.ideal))
    return Outcome({"integral": r is not None, "reduction_number": r})


COMMANDS: dict[str, Callable[[ProblemFile, Options], Outcome]] = {
    "gb": _gb,
    "colon": _colon,
    "intersect": _intersect,
    "saturate": _saturate,
    "dim": _dim,
    "height": _height,
    "unmixed": _unmixed,
    "gci": _gci,
    "radical0": _radical0,
    "closed": _closed,
    "grow": _grow,
    "ascend": _ascend,
    "jacobian-test": _jacobian,
    "gorenstein-test": _gorenstein,
    "mono-closure": _mono_closure,
    "rees-present": _rees_present,
    "rees-ascend": _rees_ascend,
    "reduction": _reduction,
    "power-check": _power_check,
    "pfaffians": _pfaffians,
    "kernel": _kernel,
    "hyp-normal": _hyp_normal,
    "witness": _witness,
}


def run(command: str, options: Options, problem: ProblemFile) -> tuple[dict, int]:
    """Run one command; returns the JSON document and the exit code. Library errors become error documents."""
    if command not in COMMANDS:
        raise DegenerateInputError(f"unknown command '{command}'")
    try:
        outcome = COMMANDS[command](problem, options)
    except AlgebraError as e:
        logger.error(f"{command} failed: {e}")
        return error_document(command, e), e.exit_code
    document = {
        "ok": outcome.exit_code == EXIT_OK,
        "command": command,
        "result": outcome.result,
        "report": outcome.report,
    }
    return document, outcome.exit_code


def error_document(command: str, error: AlgebraError) -> dict:
    return {"ok": False, "command": command, "result": None, "report": None,
            "error": {"type": type(error).__name__, "message": str(error)}}


def render(document: dict) -> str:
    """Canonical JSON text: sorted keys, two-space indent."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)
