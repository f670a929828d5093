# main.py
import argparse
import json
import os
try:
    from pyfiglet import Figlet
except Exception:
    Figlet = None
import sys
import time

from typing import Any, Dict, List, Optional, Sequence

from app_context import RunConfig
from certificates import ClassCertificate, to_json
from class_registry import CLASS_DESCRIPTIONS, SOLVE_TARGETS
from config_validation import DEFAULT_LIMITS, METHODS, load_settings, parse_limit_override
from generators import GENERATORS, generate
from graph_core import (
    FORMATS,
    GRAPH6,
    BaseGraphError,
    CertificateError,
    Graph,
    GraphParseError,
    InfeasibleError,
    PreconditionError,
    SpanningSolution,
    is_connected,
    parse_graph,
    serialize_graph,
)
from loghandler import clear_old_logs, get_logger, log_result, setup_logging
from oracle import BudgetedAnswer, hamiltonian_path, max_matching, max_spanning_in_class, min_dominating_set, partition_into_p3
from recognizers import RECOGNIZERS, SIZE_LIMITED, in_target_class, is_chordal, is_quasi_threshold, verify_certificate
from reductions import load_bundle, save_bundle
from reductions.caterpillar import caterpillar_to_hampath, hampath_to_caterpillar_instance, hampath_to_caterpillar_solution
from reductions.constellation import domset_to_constellation_instance, translate_backward, translate_forward
from reductions.instance import DOMSET_TO_CONSTELLATION, HAMPATH_TO_CATERPILLAR, PIP3_TO_CACTUS, REDUCTIONS
from reductions.pip3_cactus import cactus_to_pip3_solution, cycle_accounting, pip3_solution_to_cactus, pip3_to_cactus_instance
from reductions.structural import AGREE, BUILTIN_PI, pi_deletion_equiv_hampath, resolve_pi
from utils import parse_vertex_list, pretty_duration

# On Windows terminals, force UTF-8 so witnesses and banners render OK.
if os.name == "nt":
    try:
        sys.stdout.reconfigure(encoding="utf-8", errors="replace")
        sys.stderr.reconfigure(encoding="utf-8", errors="replace")
    except Exception:
        pass

PROGRAM_NAME = "cactuskit"
CURRENT_VERSION = "0.4.2"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2

ORACLE_PROBLEMS = ("hampath", "domset", "pip3", "max-spanning", "matching", "pi-equiv")

logger = None


class CliUsageError(BaseGraphError):
    """Bad command line; reported like any other error (exit 1)."""
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise CliUsageError(f"{self.prog}: {message}")


def banner(title: str = "CACTUSKIT") -> str:
    """Figlet rendering of title; plain text when NO_FIGLET=1 or pyfiglet fails."""
    if os.getenv("NO_FIGLET") != "1" and Figlet is not None:
        try:
            return Figlet(font="slant", width=100).renderText(title)
        except Exception as e:
            get_logger().debug(f"figlet rendering failed: {e}")
    return f"\n{title}\n"


# -------------------------
# Input / output
# -------------------------
def read_input(path: Optional[str]) -> bytes:
    """Raw bytes of a file, or of standard input for '-'."""
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def read_json(path: Optional[str]) -> Dict[str, Any]:
    raw = read_input(path)
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise GraphParseError(f"{path}: expected a JSON record: {e}")
    if not isinstance(data, dict):
        raise GraphParseError(f"{path}: expected a JSON object, got {type(data).__name__}")
    return data


def load_graph(cfg: RunConfig) -> Graph:
    g = parse_graph(read_input(cfg.input), cfg.format)
    cfg.logger.debug(f"Loaded graph from {cfg.input}: n={g.n} m={g.m}")
    return g


def emit(cfg: RunConfig, payload: Any) -> None:
    """Write a result to -o or standard output; dicts go out as sorted JSON."""
    text = payload if isinstance(payload, str) else to_json(payload)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as f:
            f.write(text)
        cfg.logger.info(f"Wrote {cfg.output}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _field(data: Dict[str, Any], *names: str) -> Any:
    for name in names:
        if name in data and data[name] is not None:
            return data[name]
    raise GraphParseError(f"record has none of the fields {', '.join(names)}")


# -------------------------
# Commands
# -------------------------
def choose_method(g: Graph, target: str, method: str) -> str:
    """Resolve --method auto and reject methods the target does not offer."""
    methods = SOLVE_TARGETS[target]["methods"]
    if method == "auto":
        if target == "cactus":
            if is_quasi_threshold(g):
                return "qt"
            if is_chordal(g):
                return "chordal"
            return "oracle"
        if target == "constellation":
            return "domset"
        return "oracle"
    if method not in methods:
        raise PreconditionError(
            f"method {method!r} does not apply to {target}; available: auto, {', '.join(methods)}"
        )
    return method


def run_solve(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    target = cfg.target
    method = choose_method(g, target, cfg.method)
    solver = SOLVE_TARGETS[target]["methods"][method]
    per_component = not cfg.connected_only
    cfg.logger.info(f"Solving {target} with method '{method}' (n={g.n}, m={g.m})")

    started = time.perf_counter()
    if method == "oracle":
        label = target
        if target == "cactus" and per_component and not is_connected(g):
            label = "forest-of-cacti"
        solution = solver(g, label, limits=cfg.limits)
    elif method == "domset":
        solution = solver(g, limits=cfg.limits)
    elif method == "chordal":
        solution = solver(
            g,
            limits=cfg.limits,
            per_component=per_component,
            self_check=cfg.self_check,
            order_seed=cfg.seed if cfg.options.get("shuffle_joins") else None,
        )
    else:
        solution = solver(g, per_component=per_component, limits=cfg.limits, self_check=cfg.self_check)
    elapsed = time.perf_counter() - started

    # Never print a solution the recognizer has not re-accepted.
    cert = in_target_class(solution.as_graph(), solution.label, cfg.limits)
    if not cert or not verify_certificate(solution.as_graph(), cert):
        raise CertificateError(f"{method} solution failed re-verification as {solution.label}: {cert.witness}")

    payload = solution.to_dict()
    payload["target"] = target
    payload["method"] = method
    payload["certificate"] = cert.to_dict()
    emit(cfg, payload)

    log_result("solve", solution.label, method, g.n, g.m, len(solution.kept), solution.deletions, elapsed)
    cfg.logger.info(
        f"Kept {len(solution.kept)} of {g.m} edges ({solution.deletions} deletions) in {pretty_duration(elapsed)}"
    )
    return EXIT_OK


def run_reduce(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    name = cfg.target
    started = time.perf_counter()
    chosen: Optional[List[int]] = cfg.options.get("set")

    if name == PIP3_TO_CACTUS:
        inst = pip3_to_cactus_instance(g)
    elif name == HAMPATH_TO_CATERPILLAR:
        inst = hampath_to_caterpillar_instance(g)
    else:
        k = cfg.options.get("k")
        if k is None and chosen is not None:
            k = len(set(chosen))
        inst = domset_to_constellation_instance(g, k, cfg.limits)

    payload: Dict[str, Any] = inst.to_dict()
    payload["gadget_text"] = serialize_graph(inst.gadget, cfg.format).decode("ascii")
    if chosen is not None:
        if name != DOMSET_TO_CONSTELLATION:
            raise CliUsageError("--set only applies to domset-to-constellation")
        payload["solution"] = translate_forward(inst, chosen).to_dict()

    bundle = cfg.options.get("bundle")
    if bundle:
        save_bundle(inst, bundle)
        cfg.logger.info(f"Saved reduction bundle to {bundle}")
    emit(cfg, payload)

    log_result("reduce", name, "-", inst.gadget.n, inst.gadget.m, 0, inst.budget, time.perf_counter() - started)
    cfg.logger.info(f"[REDUCE] {name}: gadget n={inst.gadget.n} m={inst.gadget.m} budget={inst.budget}")
    return EXIT_OK


def run_translate(cfg: RunConfig) -> int:
    bundle = cfg.options.get("bundle")
    if not bundle:
        raise CliUsageError("translate needs --bundle")
    inst = load_bundle(bundle)
    data = read_json(cfg.input)
    direction = cfg.options.get("direction", "forward")

    if direction == "forward":
        if inst.reduction == PIP3_TO_CACTUS:
            solution = pip3_solution_to_cactus(inst, _field(data, "partition", "witness"))
            payload = solution.to_dict()
            payload["cycle_accounting"] = cycle_accounting(inst, solution)
        elif inst.reduction == HAMPATH_TO_CATERPILLAR:
            payload = hampath_to_caterpillar_solution(inst, _field(data, "path", "witness")).to_dict()
        else:
            payload = translate_forward(inst, _field(data, "set", "witness")).to_dict()
    else:
        solution = SpanningSolution.from_dict(inst.gadget, data)
        if inst.reduction == PIP3_TO_CACTUS:
            payload = {"partition": cactus_to_pip3_solution(inst, solution)}
        elif inst.reduction == HAMPATH_TO_CATERPILLAR:
            payload = {"path": caterpillar_to_hampath(inst, solution)}
        else:
            payload = {"set": translate_backward(inst, solution)}

    payload["reduction"] = inst.reduction
    payload["direction"] = direction
    emit(cfg, payload)
    return EXIT_OK


def run_oracle(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    problem = cfg.target
    started = time.perf_counter()
    status = EXIT_OK

    if problem == "hampath":
        path = hamiltonian_path(g, cfg.limits)
        answer = BudgetedAnswer("hampath", g.n if path is not None else None, path)
    elif problem == "domset":
        d = min_dominating_set(g, cfg.limits)
        answer = BudgetedAnswer("domset", len(d), d)
    elif problem == "pip3":
        induced = bool(cfg.options.get("induced"))
        blocks = partition_into_p3(g, induced=induced, limits=cfg.limits)
        answer = BudgetedAnswer("pip3", len(blocks) if blocks is not None else None, blocks, {"induced": induced})
    elif problem == "max-spanning":
        label = cfg.options.get("label") or "cactus"
        solution = max_spanning_in_class(g, label, cfg.limits)
        answer = BudgetedAnswer(
            "max-spanning",
            len(solution.kept),
            [list(e) for e in solution.kept],
            {"label": label, "deletions": solution.deletions},
        )
    elif problem == "matching":
        matching = max_matching(g)
        answer = BudgetedAnswer("matching", len(matching), [list(e) for e in matching])
    else:
        pi_name = cfg.options.get("pi") or "linear-forest"
        verdict = pi_deletion_equiv_hampath(
            g, resolve_pi(pi_name, cfg.limits), cfg.limits, check_conditions=bool(cfg.options.get("check_conditions"))
        )
        answer = BudgetedAnswer("pi-equiv", None, verdict.to_dict(), {"pi": pi_name})
        if verdict.verdict != AGREE:
            status = EXIT_ERROR

    emit(cfg, answer.to_dict())
    cfg.logger.info(f"[ORACLE] {problem}: optimum {answer.optimum} in {pretty_duration(time.perf_counter() - started)}")
    return status


def run_recognize(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    labels: Sequence[str] = cfg.options.get("classes") or sorted(RECOGNIZERS)
    explicit = bool(cfg.options.get("classes"))
    certificates: List[Dict[str, Any]] = []
    for label in labels:
        if label in SIZE_LIMITED and not explicit:
            cap = cfg.limits.get(SIZE_LIMITED[label], DEFAULT_LIMITS[SIZE_LIMITED[label]])
            if g.n > cap:
                cfg.logger.warning(f"[RECOGNIZE] skipping {label}: n={g.n} exceeds {SIZE_LIMITED[label]}={cap}")
                continue
        certificates.append(in_target_class(g, label, cfg.limits).to_dict())
    emit(cfg, {"n": g.n, "m": g.m, "certificates": certificates})
    return EXIT_OK


def run_generate(cfg: RunConfig) -> int:
    family = cfg.target
    n = cfg.options["n"]
    graphs = generate(family, n, cfg.seed)
    certify = GENERATORS[family]["certify"]
    for g in graphs:
        if certify and not in_target_class(g, certify):
            raise CertificateError(f"{family} produced a graph outside {certify}")
        if family == "bipartite-subcubic" and g.max_degree() > 3:
            raise CertificateError(f"{family} produced a vertex of degree {g.max_degree()}")

    fmt = GRAPH6 if family == "labeled-catalog" else cfg.format
    text = "".join(serialize_graph(g, fmt).decode("ascii") for g in graphs)
    if fmt == GRAPH6 and not text.endswith("\n"):
        text += "\n"
    emit(cfg, text)
    cfg.logger.info(f"Generated {len(graphs)} graph(s) of family {family} (n={n}, seed={cfg.seed})")
    return EXIT_OK


def run_verify(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    solution_path = cfg.options.get("solution")
    certificate_path = cfg.options.get("certificate")
    if bool(solution_path) == bool(certificate_path):
        raise CliUsageError("verify needs exactly one of --solution or --certificate")

    if solution_path:
        data = read_json(solution_path)
        solution = SpanningSolution.from_dict(g, data)
        cert = in_target_class(solution.as_graph(), solution.label, cfg.limits)
        result = {
            "label": solution.label,
            "valid": cert.verdict,
            "kept_count": len(solution.kept),
            "deletions": solution.deletions,
        }
        if not cert:
            result["witness"] = cert.witness
    else:
        cert = ClassCertificate.from_dict(read_json(certificate_path))
        result = {"label": cert.label, "valid": verify_certificate(g, cert)}

    emit(cfg, result)
    if not result["valid"]:
        raise CertificateError(f"{result['label']} record does not verify against the graph")
    return EXIT_OK


def run_info(cfg: RunConfig) -> int:
    print(banner())
    print(f"{PROGRAM_NAME} - v{CURRENT_VERSION}")
    print("\nEffective limits:")
    for name in sorted(DEFAULT_LIMITS):
        value = cfg.limits.get(name, DEFAULT_LIMITS[name])
        marker = "" if value == DEFAULT_LIMITS[name] else "  (overridden)"
        print(f"  - {name}: {value}{marker}")
    print("\nSolve targets:")
    for target, entry in SOLVE_TARGETS.items():
        print(f"  - {target}: {entry['description']} [methods: {', '.join(entry['methods'])}]")
    print("\nRecognized classes:")
    for label in sorted(CLASS_DESCRIPTIONS):
        print(f"  - {label}: {CLASS_DESCRIPTIONS[label]}")
    print("\nGenerators:")
    for family, entry in GENERATORS.items():
        print(f"  - {family}: {entry['description']}")
    return EXIT_OK


COMMANDS = {
    "solve": run_solve,
    "reduce": run_reduce,
    "translate": run_translate,
    "oracle": run_oracle,
    "recognize": run_recognize,
    "gen": run_generate,
    "verify": run_verify,
    "info": run_info,
}


# -------------------------
# Argument parsing
# -------------------------
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, help="Graph text format (default from settings)")
    common.add_argument("--seed", type=int, help="Random seed (default from settings)")
    common.add_argument("--limit", action="append", default=[], metavar="NAME=VALUE", help="Override a size limit")
    common.add_argument("--settings", help="Settings file (default: ./settings.yml if present)")
    common.add_argument("-o", "--output", help="Write the result here instead of standard output")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    parser = _Parser(prog=PROGRAM_NAME, description="Spanning cacti, constellations and caterpillars: solvers, oracles and reductions")
    parser.add_argument("--clear-logs", action="store_true", help="Delete old log files and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("solve", parents=[common], help="Maximum spanning subgraph in a target class")
    p.add_argument("target", choices=sorted(SOLVE_TARGETS))
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--method", choices=METHODS, help="Solver (default from settings)")
    p.add_argument("--per-component", action="store_true", help="Allow disconnected hosts (forest-of-cacti result)")
    p.add_argument("--self-check", action="store_true", help="Cross-check pipeline optima against the oracle")
    p.add_argument("--shuffle-joins", action="store_true", help="Randomize the chordal join order by --seed")

    p = sub.add_parser("reduce", parents=[common], help="Build a hardness gadget with budget and provenance")
    p.add_argument("reduction", choices=REDUCTIONS)
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--set", type=parse_vertex_list, help="Dominating set to map forward, e.g. 0,2")
    p.add_argument("--k", type=int, help="Dominating set size bound (default: domination number)")
    p.add_argument("--bundle", help="Save the reduction instance as a JSON bundle")

    p = sub.add_parser("translate", parents=[common], help="Map a certificate across a stored reduction")
    p.add_argument("input", nargs="?", default="-", help="Certificate or solution JSON")
    p.add_argument("--bundle", required=True, help="Reduction bundle written by 'reduce --bundle'")
    p.add_argument("--direction", choices=("forward", "backward"), default="forward")

    p = sub.add_parser("oracle", parents=[common], help="Exact exponential solvers")
    p.add_argument("problem", choices=ORACLE_PROBLEMS)
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--class", dest="label", choices=sorted(RECOGNIZERS), help="Class for max-spanning (default cactus)")
    p.add_argument("--pi", help=f"Predicate for pi-equiv: {', '.join(BUILTIN_PI)} or module:function")
    p.add_argument("--induced", action="store_true", help="pip3: blocks must induce P3")
    p.add_argument("--check-conditions", action="store_true", help="pi-equiv: probe the predicate's conditions first")

    p = sub.add_parser("recognize", parents=[common], help="Class membership with certificates")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--class", dest="classes", action="append", choices=sorted(RECOGNIZERS), help="Class to test (repeatable; default all)")

    p = sub.add_parser("gen", parents=[common], help="Generate instances of a graph family")
    p.add_argument("family", choices=list(GENERATORS))
    p.add_argument("--n", type=int, required=True, help="Number of vertices")

    p = sub.add_parser("verify", parents=[common], help="Re-verify a solution or certificate against a graph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--solution", help="Solution JSON written by 'solve'")
    p.add_argument("--certificate", help="Certificate JSON (label, verdict, witness)")

    sub.add_parser("info", parents=[common], help="Show version, limits and available classes")
    return parser


def create_config(args: argparse.Namespace, settings: Dict[str, Any], logger_in) -> RunConfig:
    """Merge command-line flags over the validated settings."""
    defaults = settings["defaults"]
    limits = dict(settings["limits"])
    for text in args.limit:
        limits.update(parse_limit_override(text))

    target = getattr(args, "target", None) or getattr(args, "reduction", None) or getattr(args, "problem", None) or getattr(args, "family", None)
    options: Dict[str, Any] = {}
    for key in ("set", "k", "bundle", "direction", "label", "pi", "induced", "check_conditions",
                "classes", "n", "solution", "certificate", "shuffle_joins"):
        if hasattr(args, key):
            options[key] = getattr(args, key)

    return RunConfig(
        command=args.command,
        logger=logger_in,
        input=getattr(args, "input", None),
        format=args.format or defaults["format"],
        method=getattr(args, "method", None) or defaults["method"],
        limits=limits,
        seed=args.seed if args.seed is not None else defaults["seed"],
        output=args.output,
        self_check=getattr(args, "self_check", False) or defaults["self_check"],
        connected_only=defaults["connected_only"] and not getattr(args, "per_component", False),
        target=target,
        options=options,
    )


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    global logger
    # Console-only until the settings name a log directory.
    logger, _ = setup_logging(log_dir=None)
    parser = build_parser()
    args = parser.parse_args(argv)

    # --clear-logs: purge old logs and exit without running anything else
    if args.clear_logs:
        log_dir = load_settings(getattr(args, "settings", None))["logging"]["dir"]
        removed = clear_old_logs(log_dir) if log_dir else 0
        print(f"[logs] {removed} old log files deleted.")
        return EXIT_OK
    if not args.command:
        raise CliUsageError("a command is required; see --help")

    settings = load_settings(args.settings)
    log_cfg = settings["logging"]
    logger, _ = setup_logging(log_dir=log_cfg["dir"], debug=args.debug or log_cfg["debug"])
    logger.debug(f"{PROGRAM_NAME} v{CURRENT_VERSION}: {args.command}")

    cfg = create_config(args, settings, logger)
    return COMMANDS[cfg.command](cfg)


def _fail(e: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
    sys.stderr.flush()
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit code (0 solved, 2 infeasible, 1 error)."""
    log = logger or get_logger()
    try:
        return dispatch(argv)
    except InfeasibleError as e:
        (logger or log).warning(f"[INFEASIBLE] {e}")
        return _fail(e, EXIT_INFEASIBLE)
    except BaseGraphError as e:
        (logger or log).error(f"[FATAL] {type(e).__name__}: {e}")
        return _fail(e, EXIT_ERROR)
    except (OSError, ValueError) as e:
        (logger or log).error(f"[FATAL] {e}")
        return _fail(e, EXIT_ERROR)
    except Exception as e:
        (logger or log).exception("[FATAL] Unexpected error occurred")
        return _fail(e, EXIT_ERROR)


if __name__ == "__main__":
    sys.exit(main())
