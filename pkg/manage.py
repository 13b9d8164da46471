# manage.py
import logging
import sys
from pathlib import Path
from typing import Optional

import typer

from src.core.config import load_config, set_config
from src.core.errors import AlgebraError
from src.cli.problem import parse_file
from src.cli.runner import EXIT_ERROR, Options, error_document, render, run

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# --- Logging Setup ---
# 日志统一写到 stderr, stdout 只输出 JSON
logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
logger = logging.getLogger(__name__)

# --- Typer App ---
app = typer.Typer(help="理想的整闭包判定与相关计算 (Gröbner 基, 商理想, Rees 代数)。")

PROBLEM_ARG = typer.Argument(..., exists=True, dir_okay=False, help="问题文件路径")
IDEAL_OPT = typer.Option("I", "--ideal", help="问题文件中的理想名")
RADICAL_OPT = typer.Option(None, "--radical", help="根理想候选的名字")
SEED_OPT = typer.Option(None, "--seed", help="随机完全交的种子")


@app.callback()
def main(
    config: Optional[Path] = typer.Option(None, "--config", help="YAML 配置文件 (settings: 段)"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG / INFO / WARNING / ERROR"),
    max_pairs: Optional[int] = typer.Option(None, "--max-pairs", min=1, help="Buchberger 临界对上限"),
    max_terms: Optional[int] = typer.Option(None, "--max-terms", min=1, help="中间多项式项数上限"),
    rmax: Optional[int] = typer.Option(None, "--rmax", min=0, help="约化数搜索上界"),
    kmax: Optional[int] = typer.Option(None, "--kmax", min=1, help="colon 升链长度"),
    nmax: Optional[int] = typer.Option(None, "--nmax", min=2, help="幂闭包检查上界"),
    oracle_k: Optional[int] = typer.Option(None, "--oracle-k", "--oracle-K", min=1, help="暴力 oracle 上界"),
):
    """
    全局选项: 加载配置并应用命令行覆盖。
    """
    cfg = load_config(str(config)) if config else load_config()
    overrides = {
        "max_pairs": max_pairs, "max_terms": max_terms, "rmax": rmax,
        "kmax": kmax, "nmax": nmax, "oracle_k": oracle_k, "log_level": log_level,
    }
    cfg = cfg.model_copy(update={k: v for k, v in overrides.items() if v is not None})
    set_config(cfg)
    logging.basicConfig(level=cfg.log_level.upper(), format=LOG_FORMAT, stream=sys.stderr, force=True)
    logger.debug(f"Active configuration: {cfg.model_dump()}")


def _execute(command: str, problem: Path, **options) -> None:
    """Parse, run, print canonical JSON, exit with the command's code."""
    try:
        parsed = parse_file(str(problem))
        document, code = run(command, Options(**options), parsed)
    except AlgebraError as e:
        logger.error(f"{command}: {e}")
        document, code = error_document(command, e), e.exit_code
    except Exception as e:
        logger.error(f"{command} failed unexpectedly: {e}", exc_info=True)
        document = {"ok": False, "command": command, "result": None, "report": None,
                    "error": {"type": type(e).__name__, "message": str(e)}}
        code = EXIT_ERROR
    typer.echo(render(document))
    if code:
        raise typer.Exit(code=code)


# --- Gröbner 基与理想运算 ---
@app.command(name="gb")
def gb_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
               order: Optional[str] = typer.Option(None, "--order", help="grevlex | lex | block(k)")):
    """约化 Gröbner 基。"""
    _execute("gb", problem, ideal=ideal, order=order)


@app.command(name="colon")
def colon_command(problem: Path = PROBLEM_ARG,
                  num: str = typer.Option(..., "--num", help="被除理想"),
                  den: str = typer.Option(..., "--den", help="除理想")):
    """商理想 I : J。"""
    _execute("colon", problem, num=num, den=den)


@app.command(name="intersect")
def intersect_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                      other: str = typer.Option(..., "--other", help="另一个理想")):
    """理想的交。"""
    _execute("intersect", problem, ideal=ideal, other=other)


@app.command(name="saturate")
def saturate_command(problem: Path = PROBLEM_ARG,
                     num: str = typer.Option(..., "--num"),
                     den: str = typer.Option(..., "--den")):
    """饱和 I : J^∞。"""
    _execute("saturate", problem, num=num, den=den)


@app.command(name="dim")
def dim_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """Krull 维数 dim(R/I)。"""
    _execute("dim", problem, ideal=ideal)


@app.command(name="height")
def height_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """理想的高度。"""
    _execute("height", problem, ideal=ideal)


@app.command(name="unmixed")
def unmixed_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                    seed: int = typer.Option(..., "--seed", help="随机完全交的种子 (必填)")):
    """无嵌入分支检查 I = J : (J : I)。"""
    _execute("unmixed", problem, ideal=ideal, seed=seed)


@app.command(name="gci")
def gci_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """一般完全交检查 (Fitting 理想的高度)。"""
    _execute("gci", problem, ideal=ideal)


@app.command(name="radical0")
def radical0_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """零维理想的根。"""
    _execute("radical0", problem, ideal=ideal)


# --- 整闭性判定 ---
@app.command(name="closed")
def closed_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT, radical: Optional[str] = RADICAL_OPT,
                   method: str = typer.Option("auto", "--method", help="radical-formula | jacobian | gorenstein | auto"),
                   variant: str = typer.Option("ideal-plus-minors", "--variant", help="minors-only | ideal-plus-minors"),
                   assert_gorenstein: bool = typer.Option(False, "--assert-gorenstein", help="调用者断言一般 Gorenstein"),
                   seed: Optional[int] = SEED_OPT):
    """整闭性判定, 输出 ClosednessReport。不确定时退出码为 3。"""
    _execute("closed", problem, ideal=ideal, radical=radical, method=method, variant=variant,
             assert_gorenstein=assert_gorenstein, seed=seed)


@app.command(name="grow")
def grow_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT, radical: str = typer.Option(..., "--radical"),
                 seed: Optional[int] = SEED_OPT):
    """生成整元: H = I : C。"""
    _execute("grow", problem, ideal=ideal, radical=radical, seed=seed)


@app.command(name="ascend")
def ascend_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT, radical: str = typer.Option(..., "--radical"),
                   max_rounds: int = typer.Option(5, "--max-rounds", min=0), seed: Optional[int] = SEED_OPT):
    """闭包升链。"""
    _execute("ascend", problem, ideal=ideal, radical=radical, max_rounds=max_rounds, seed=seed)


@app.command(name="jacobian-test")
def jacobian_test_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                          variant: str = typer.Option("ideal-plus-minors", "--variant"),
                          seed: Optional[int] = SEED_OPT):
    """Jacobian 判定 IJ : J = I。"""
    _execute("jacobian-test", problem, ideal=ideal, variant=variant, seed=seed)


@app.command(name="gorenstein-test")
def gorenstein_test_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """I² : I = I。"""
    _execute("gorenstein-test", problem, ideal=ideal)


@app.command(name="witness")
def witness_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                    poly: str = typer.Option(..., "--poly", help="待检验的元素 f")):
    """用约化数证明 f 在 I 上整。"""
    _execute("witness", problem, ideal=ideal, poly=poly)


# --- 单项式闭包 ---
@app.command(name="mono-closure")
def mono_closure_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """单项式理想的整闭包 (Newton 多面体)。"""
    _execute("mono-closure", problem, ideal=ideal)


# --- Rees 代数 ---
@app.command(name="rees-present")
def rees_present_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """Rees 代数的表示。"""
    _execute("rees-present", problem, ideal=ideal)


@app.command(name="rees-ascend")
def rees_ascend_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                        radical: str = typer.Option(..., "--radical")):
    """I_k = J : (√J)^k 升链。"""
    _execute("rees-ascend", problem, ideal=ideal, radical=radical)


@app.command(name="reduction")
def reduction_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                      over: str = typer.Option(..., "--over", help="较大的理想 I")):
    """约化数: I^(r+1) = J I^r。"""
    _execute("reduction", problem, ideal=ideal, over=over)


@app.command(name="power-check")
def power_check_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT,
                        closure: str = typer.Option(..., "--closure", help="(a, b) 的整闭包")):
    """(a, b)^(n-1) J̄ = J̄^n 检查。"""
    _execute("power-check", problem, ideal=ideal, closure=closure)


@app.command(name="pfaffians")
def pfaffians_command(problem: Path = PROBLEM_ARG, matrix: str = typer.Option(..., "--matrix"),
                      size: int = typer.Option(4, "--size", min=2)):
    """斜对称矩阵的 Pfaffian。"""
    _execute("pfaffians", problem, matrix=matrix, size=size)


@app.command(name="kernel")
def kernel_command(problem: Path = PROBLEM_ARG, ideal: str = IDEAL_OPT):
    """环同态 T_i -> f_i 的核 (f_i 取理想的生成元)。"""
    _execute("kernel", problem, ideal=ideal)


@app.command(name="hyp-normal")
def hyp_normal_command(problem: Path = PROBLEM_ARG, poly: str = typer.Option(..., "--poly"),
                       assert_irreducible: bool = typer.Option(True, "--assert-irreducible/--no-assert-irreducible")):
    """超曲面的正规性 (Jacobian 判别)。"""
    _execute("hyp-normal", problem, poly=poly, assert_irreducible=assert_irreducible)


if __name__ == "__main__":
    app()
