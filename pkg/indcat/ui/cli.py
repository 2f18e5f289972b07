"""
indcat - 命令行界面

本模块提供 indcat 的命令行界面: 计算独立多项式、分类系数序列、检查定理条件、
运行单项核对与批量核对。

退出码: 0 表示全部一致或只做了计算；1 表示至少有一条 nonconform 记录；
2 表示用法或输入错误；3 表示未预期的内部错误 (堆栈写入日志)。
"""

import argparse
import io
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Dict, Iterator, List, Optional

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from indcat import __version__
from indcat.core.caterpoly import check_conditions, instance_report, p_recursion
from indcat.core.errors import IndcatError
from indcat.core.polyalg import Polynomial
from indcat.core.shape import ShapeReport, analyze_shape
from indcat.core.treegraph import (
    INDPOLY_METHODS,
    CaterpillarSpec,
    Tree,
    build_caterpillar,
    indpoly,
)
from indcat.data.loader import (
    check_cap,
    load_settings,
    load_spec_file,
    parse_int_list,
    parse_range,
)
from indcat.reports.generator import (
    records_dataframe,
    records_document,
    sweep_dataframe,
    sweep_lines,
    to_json,
    write_csv,
)
from indcat.verify.generators import generate_lemma_cases
from indcat.verify.harness import (
    check_base_case,
    check_diff_bounds,
    check_shift_lemma,
    check_symmetric_multiplier,
    cross_validate_instance,
    verify_theorem_instance,
)
from indcat.verify.records import CONFORM, NONCONFORM, ConformanceRecord
from indcat.verify.sweep import SweepConfig, SweepResult, default_workers, sweep_family

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")
VERDICT_STYLES = {CONFORM: "green", NONCONFORM: "bold red"}

EXIT_OK = 0
EXIT_NONCONFORM = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """参数组合错误"""


def setup_logging(verbose: bool = False, log_dir: str = "logs") -> logging.Logger:
    """
    设置日志记录

    文件日志写到 log_dir/indcat_cli.log；控制台日志写到 stderr，
    非 verbose 时只输出 WARNING 及以上，保证 stdout 只有结果。

    参数:
        verbose: 是否启用详细日志
        log_dir: 日志目录

    返回:
        配置好的日志记录器
    """
    directory = Path(log_dir)
    directory.mkdir(parents=True, exist_ok=True)

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(directory / "indcat_cli.log", encoding='utf-8'),
            stream_handler,
        ],
        force=True,
    )

    return logging.getLogger("indcat_cli")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="输出格式")
    common.add_argument("--output", help="输出文件路径，默认写到标准输出")
    common.add_argument("--verbose", action="store_true", help="启用详细日志")
    common.add_argument("--log-dir", default=None, help="日志目录")
    common.add_argument("--cap", type=int, default=None, help="暴力枚举顶点数上限")
    return common


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器"""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="indcat",
        description="毛毛虫树独立多项式的计算与核对工具",
    )
    parser.add_argument("--version", action="version", version=f"indcat {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("indpoly", parents=[common], help="计算独立多项式")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--m", help="毛毛虫参数，逗号分隔，例如 3,4")
    target.add_argument("--prufer", help="一般树的 Prüfer 序列，逗号分隔")
    p.add_argument("--method", choices=INDPOLY_METHODS + ("recursion",), default="treedp",
                   help="计算方法")

    p = sub.add_parser("analyze", parents=[common], help="分类一个系数序列")
    p.add_argument("--coeffs", required=True, help="系数，逗号分隔，例如 1,6,7,4,1")

    p = sub.add_parser("conditions", parents=[common], help="检查定理条件 (1)-(3)")
    p.add_argument("--m", required=True, help="毛毛虫参数")
    p.add_argument("--cond3-range", help="条件 (3) 检查的 k 闭区间 A,B")

    p = sub.add_parser("verify", parents=[common], help="核对单个毛毛虫实例")
    p.add_argument("--m", required=True, help="毛毛虫参数")
    p.add_argument("--cond3-range", help="条件 (3) 检查的 k 闭区间 A,B")
    p.add_argument("--no-brute", action="store_true", help="不使用暴力枚举对照")

    p = sub.add_parser("lemma", parents=[common], help="核对平移引理与差分下界")
    p.add_argument("--q", help="多项式 q 的系数")
    p.add_argument("--t", type=int, help="幂次 t")
    p.add_argument("--sym", help="对称乘子 p_sym 的系数，代替 (1+x)^t")
    p.add_argument("--generate", type=int, help="生成 N 组满足前提的输入")
    p.add_argument("--seed", type=int, default=0, help="生成器种子")

    p = sub.add_parser("sweep", parents=[common], help="批量核对一族实例")
    p.add_argument("--m-range", default="1,4", help="m_i 的取值区间 A,B")
    p.add_argument("--n-range", default="1,4", help="n 的取值区间 A,B")
    p.add_argument("--monotone", action="store_true", help="只保留非递减的 m")
    p.add_argument("--input", help="实例列表文件，每行一个 m")
    p.add_argument("--no-brute", action="store_true", help="不使用暴力枚举对照")
    p.add_argument("--no-theorem", action="store_true", help="只做交叉核对")
    p.add_argument("--cond3-range", help="条件 (3) 检查的 k 闭区间 A,B")
    p.add_argument("--workers", type=int, default=None, help="进程数，0 表示物理核心数")
    p.add_argument("--progress", action="store_true", help="在 stderr 显示进度条")

    p = sub.add_parser("basecase", parents=[common], help="核对 q_1 = (1+x)^m1 + x")
    p.add_argument("--m1-range", default="3,12", help="m_1 的取值区间 A,B")

    return parser


@contextmanager
def _open_output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as f:
        yield f


def _console(stream: IO[str]) -> Console:
    return Console(file=stream, highlight=False, width=100)


def _exit_code(records: List[ConformanceRecord]) -> int:
    return EXIT_NONCONFORM if any(r.is_failure for r in records) else EXIT_OK


def _spec_arg(text: str) -> CaterpillarSpec:
    return CaterpillarSpec(tuple(parse_int_list(text)))


def _cond3_arg(args: argparse.Namespace, settings: Dict) -> tuple:
    if getattr(args, "cond3_range", None):
        return parse_range(args.cond3_range)
    return (settings["cond3_start"], None)


def _shape_table(shape: ShapeReport, title: str) -> Table:
    table = Table(title=title, show_header=False, box=box.ROUNDED, border_style="blue")
    table.add_column("性质", style="cyan")
    table.add_column("结果", style="green")
    table.add_row("次数", str(shape.degree))
    table.add_row("峰位", ", ".join(str(i) for i in shape.modes))
    table.add_row("单峰", "是" if shape.unimodal else "否")
    table.add_row("严格单峰", "是" if shape.strictly_unimodal else "否")
    table.add_row("占优类", ", ".join(shape.to_dict()["dominance"]) or "无")
    table.add_row("平衡", {True: "是", False: "否", None: "不适用"}[shape.balanced])
    table.add_row("对称", "是" if shape.symmetric else "否")
    return table


def _records_table(records: List[ConformanceRecord], title: str) -> Table:
    table = Table(title=title, show_header=True, box=box.ROUNDED, border_style="blue")
    table.add_column("核对", style="cyan")
    table.add_column("输入", style="white")
    table.add_column("判定")
    table.add_column("发现", style="yellow")
    for r in records:
        shown = {k: (",".join(str(x) for x in v) if isinstance(v, list) else v)
                 for k, v in r.inputs.items()}
        style = VERDICT_STYLES.get(r.verdict, "dim")
        table.add_row(r.check_name, str(shown), f"[{style}]{r.verdict}[/{style}]",
                      "\n".join(r.findings))
    return table


def _emit_records(records: List[ConformanceRecord], fmt: str, stream: IO[str], title: str) -> None:
    if fmt == "json":
        stream.write(to_json(records_document(records)) + "\n")
    elif fmt == "csv":
        write_csv(records_dataframe(records), stream)
    else:
        _console(stream).print(_records_table(records, title))


def cmd_indpoly(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    if args.m:
        spec = _spec_arg(args.m)
        tree = build_caterpillar(spec)
        subject = {"spec": spec.to_dict()}
    else:
        if args.method == "recursion":
            raise UsageError("recursion 方法只适用于毛毛虫参数 --m")
        tree = Tree.from_prufer(parse_int_list(args.prufer))
        subject = {"tree": tree.to_dict()}
    if args.method == "recursion":
        result = p_recursion(spec.m)[-1]
    else:
        result = indpoly(tree, args.method, settings["bruteforce_cap"],
                        settings["bruteforce_chunk_bits"])

    if args.format == "json":
        document = {**subject, "method": args.method, "vertex_count": tree.vertex_count,
                    "indpoly": result.to_strings()}
        stream.write(to_json(document) + "\n")
    elif args.format == "csv":
        stream.write("i,coefficient\n")
        for i, c in enumerate(result.coeffs):
            stream.write(f"{i},{c}\n")
    else:
        stream.write(str(result) + "\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    poly = Polynomial(tuple(parse_int_list(args.coeffs)))
    shape = analyze_shape(poly)
    if args.format == "json":
        stream.write(to_json({"coeffs": poly.to_strings(), **shape.to_dict()}) + "\n")
    elif args.format == "csv":
        row = shape.to_dict()
        stream.write("coeffs,degree,modes,unimodal,strictly_unimodal,dominance,balanced,symmetric\n")
        stream.write(",".join([
            " ".join(poly.to_strings()), str(row["degree"]),
            " ".join(str(i) for i in row["modes"]), str(row["unimodal"]),
            str(row["strictly_unimodal"]), " ".join(row["dominance"]),
            str(row["balanced"]), str(row["symmetric"]),
        ]) + "\n")
    else:
        _console(stream).print(_shape_table(shape, f"系数 {poly}"))
    return EXIT_OK


def cmd_conditions(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    spec = _spec_arg(args.m)
    report = check_conditions(spec, _cond3_arg(args, settings))
    if args.format == "json":
        stream.write(to_json({"spec": spec.to_dict(), **report.to_dict()}) + "\n")
    elif args.format == "csv":
        stream.write("k,lhs,rhs,holds,sufficient\n")
        for k in sorted(report.cond3_results):
            c = report.cond3_results[k]
            stream.write(f"{k},{c.lhs},{c.rhs},{c.holds},{report.sufficient_variant[k]}\n")
    else:
        console = _console(stream)
        table = Table(title=f"m = ({spec}) 的定理条件", box=box.ROUNDED, border_style="blue")
        table.add_column("条件", style="cyan")
        table.add_column("结果", style="green")
        table.add_row("(1) 非递减", str(report.cond1_nondecreasing))
        table.add_row("(2) 基本条件", str(report.cond2_base))
        for k in sorted(report.cond3_results):
            c = report.cond3_results[k]
            table.add_row(f"(3) k={k}", f"{c.lhs} < {c.rhs}: {c.holds}")
        console.print(table)
        console.print(f"全部成立: {report.all_pass}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    spec = _spec_arg(args.m)
    cond3_range = _cond3_arg(args, settings)
    theorem = verify_theorem_instance(spec, cond3_range)
    cross = cross_validate_instance(spec, cap=settings["bruteforce_cap"],
                                    use_bruteforce=not args.no_brute)
    records = [theorem, cross]
    if args.format == "json":
        document = {"instance": instance_report(spec, cond3_range), **records_document(records)}
        stream.write(to_json(document) + "\n")
    elif args.format == "csv":
        write_csv(records_dataframe(records), stream)
    else:
        console = _console(stream)
        console.print(Panel(f"m = ({spec})，n = {spec.n}，p_n 峰位 "
                            f"{theorem.observed.get('p_mode')}", border_style="cyan"))
        _emit_records(records, "text", stream, "核对结果")
    return _exit_code(records)


def cmd_lemma(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    records: List[ConformanceRecord] = []
    if args.generate is not None:
        for case in generate_lemma_cases(args.generate, args.seed):
            records.append(check_shift_lemma(case.q, case.t, seed=case.seed))
            records.append(check_diff_bounds(case.q, case.t, seed=case.seed))
    elif args.q is not None and args.sym is not None:
        q = Polynomial(tuple(parse_int_list(args.q)))
        records.append(check_symmetric_multiplier(q, Polynomial(tuple(parse_int_list(args.sym)))))
    elif args.q is not None and args.t is not None:
        q = Polynomial(tuple(parse_int_list(args.q)))
        records.append(check_shift_lemma(q, args.t))
        records.append(check_diff_bounds(q, args.t))
    else:
        raise UsageError("lemma 需要 --q 与 --t、--q 与 --sym，或 --generate N")
    _emit_records(records, args.format, stream, "引理核对")
    return _exit_code(records)


def _sweep_text(result: SweepResult, stream: IO[str]) -> None:
    console = _console(stream)
    summary = result.summary
    table = Table(title=f"批量核对: {summary.instances} 个实例", box=box.ROUNDED,
                  border_style="blue")
    table.add_column("核对", style="cyan")
    for verdict in summary.cross_validation:
        table.add_column(verdict, justify="right")
    table.add_row("cross_validate_instance", *[str(v) for v in summary.cross_validation.values()])
    table.add_row("verify_theorem_instance", *[str(v) for v in summary.theorem.values()])
    console.print(table)
    if summary.nonconform_specs:
        console.print(f"[bold red]不一致的实例:[/bold red] {'; '.join(summary.nonconform_specs)}")


def cmd_sweep(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    m_min, m_max = parse_range(args.m_range)
    n_min, n_max = parse_range(args.n_range)
    workers = settings["workers"] if args.workers is None else args.workers
    if workers == 0:
        workers = default_workers()
    config = SweepConfig(
        m_min=m_min, m_max=m_max, n_min=n_min, n_max=n_max,
        monotone_only=args.monotone,
        use_bruteforce=not args.no_brute,
        cap=settings["bruteforce_cap"],
        cond3_range=_cond3_arg(args, settings),
        workers=workers,
        run_theorem=not args.no_theorem,
        specs=load_spec_file(args.input) if args.input else None,
        progress=args.progress,
    )
    result = sweep_family(config)
    if args.format == "json":
        for line in sweep_lines(result):
            stream.write(line + "\n")
    elif args.format == "csv":
        write_csv(sweep_dataframe(result), stream)
    else:
        _sweep_text(result, stream)
    return EXIT_NONCONFORM if result.summary.has_failures else EXIT_OK


def cmd_basecase(args: argparse.Namespace, settings: Dict, stream: IO[str]) -> int:
    low, high = parse_range(args.m1_range)
    if low < 1 or high < low:
        raise UsageError(f"m1 区间无效: {args.m1_range}")
    records = [check_base_case(m1) for m1 in range(low, high + 1)]
    _emit_records(records, args.format, stream, "基本情形 q_1")
    return _exit_code(records)


COMMANDS = {
    "indpoly": cmd_indpoly,
    "analyze": cmd_analyze,
    "conditions": cmd_conditions,
    "verify": cmd_verify,
    "lemma": cmd_lemma,
    "sweep": cmd_sweep,
    "basecase": cmd_basecase,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    命令行主入口

    参数:
        argv: 参数列表，默认 sys.argv[1:]

    返回:
        int: 退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 在 --help/--version 时以 0 退出，参数错误时以 2 退出
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings()
        if args.cap is not None:
            settings["bruteforce_cap"] = check_cap(args.cap, settings["bruteforce_ceiling"])
        setup_logging(args.verbose, args.log_dir or settings["log_dir"])
        buffer = io.StringIO()
        code = COMMANDS[args.command](args, settings, buffer)
        with _open_output(args.output) as stream:
            stream.write(buffer.getvalue())
        return code
    except (IndcatError, UsageError, ValueError, OSError) as e:
        logger.debug("命令执行失败", exc_info=True)
        print(f"indcat {args.command}: 错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception("命令 %s 内部错误", args.command)
        print(f"indcat {args.command}: 内部错误: {e!r}", file=sys.stderr)
        return EXIT_INTERNAL
