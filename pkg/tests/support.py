# tests/support.py
from pathlib import Path

from src.cli.problem import ProblemFile, parse_file, parse_polynomial
from src.core.config import Config, set_config
from src.core.ring import RingDescriptor, polynomial_ring
from src.ideals.handle import IdealHandle

PROBLEMS_DIR = Path(__file__).resolve().parent.parent / "problems"


def use_default_config(**overrides) -> Config:
    """Defaults only: no .env, no config.yaml."""
    cfg = Config(_env_file=None, **overrides)
    set_config(cfg)
    return cfg


def load_problem(name: str) -> ProblemFile:
    return parse_file(str(PROBLEMS_DIR / name))


def ring(variables: str = "x,y", characteristic: int = 0, order: str = "grevlex") -> RingDescriptor:
    return polynomial_ring(variables, characteristic, order)


def P(R: RingDescriptor, text: str):
    return parse_polynomial(text, R)


def ideal(R: RingDescriptor, *texts: str) -> IdealHandle:
    return IdealHandle(R, [parse_polynomial(t, R) for t in texts])
