import argparse
import json

from colorama import Fore, Style
from prettytable import PrettyTable

import alert
import configuration
from cache import Cache, DEFAULT_BUILD
from errors import CliffhcError, UsageError
from logger_config import get_logger, set_level
from principal import verify_main2
from support import format_fraction, parse_hbar_list, vector_to_json
from verify import FAILED, PASSED, SCHEMA, SKIPPED, SUITE_NAMES, build_report, run_suite

logger = get_logger('main')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="Cartan type such as A2, B2, G2 or A1xA1")
    common.add_argument("--form", default=configuration.defaultForm, help="trace or killing")
    common.add_argument("--cache-dir", dest="cacheDir", default=configuration.cacheDir)
    common.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    common.add_argument("--out", help="write the JSON report to this file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")

    parser = argparse.ArgumentParser(prog="cliffhc", description="Harish-Chandra maps for Clifford algebras, checked exactly")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="run an assertion suite")
    verify.add_argument("--suite", default=configuration.defaultSuite, choices=SUITE_NAMES)
    verify.add_argument("--hbar", action="append", help="ħ values, e.g. --hbar 0,1,2,1/2")

    commands.add_parser("table", parents=[common], help="print the principal basis of h")

    cache = commands.add_parser("cache", parents=[common], help="manage the structure-constant cache")
    cache.add_argument("action", choices=("build", "list", "clear"))
    return parser


def emit(args, document):
    text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.debug(f"Report written to {args.out}")
    if args.json:
        print(text)


VERDICT_COLORS = {PASSED: Fore.GREEN, FAILED: Fore.RED, SKIPPED: Fore.YELLOW}


def verdict(status):
    text = "FAILED" if status == FAILED else status
    return f"{VERDICT_COLORS[status]}{text}{Style.RESET_ALL}"


def require_algebra(args):
    if not args.algebra:
        raise UsageError(f"{args.command} needs --algebra")
    return args.algebra


def cmd_verify(args):
    hbars = parse_hbar_list(args.hbar or configuration.defaultHbars)
    cache = Cache(args.cacheDir)
    g = cache.algebra(require_algebra(args), args.form)
    cache.generators(g)

    assertions = run_suite(g, args.suite, hbars)
    report = build_report(g, args.suite, hbars, assertions)
    emit(args, report)

    if not args.json:
        table = PrettyTable()
        table.field_names = ["Assertion", "Verdict", "Claim"]
        table.align["Claim"] = "l"
        for a in assertions:
            table.add_row([a.name, verdict(a.status), a.claim])
        print(table)

    failed = [a.name for a in assertions if a.status == FAILED]
    if failed:
        alert.botFailed(str(g.cartanType), f"{len(failed)} assertion(s) failed: {', '.join(failed)}")
    if args.json:
        return
    skipped = [a.name for a in assertions if a.status == SKIPPED]
    if skipped:
        print(f"{Fore.YELLOW}{len(assertions) - len(skipped)} assertions of {args.suite} passed for {g} ({g.formChoice}), "
              f"{len(skipped)} skipped: {', '.join(skipped)}{Style.RESET_ALL}")
    else:
        print(f"{Fore.GREEN}All {len(assertions)} assertions of {args.suite} passed for {g} ({g.formChoice}){Style.RESET_ALL}")


def cmd_table(args):
    cache = Cache(args.cacheDir)
    g = cache.algebra(require_algebra(args), args.form)
    cache.generators(g)
    report = verify_main2(g)
    emit(args, {"schema": SCHEMA, "table": report.to_json()})

    if not args.json:
        table = PrettyTable()
        table.field_names = ["m", "Degree", "Dual principal basis", "Φ(p)", "ι_S(ρ)^m f", "Constant"]
        for piece in report.pieces:
            for k, basis in enumerate(piece.basis):
                phi = piece.phiVectors[k] if k < len(piece.phiVectors) else None
                formula = piece.formulaVectors[k] if k < len(piece.formulaVectors) else None
                constant = piece.constants[k] if k < len(piece.constants) else None
                table.add_row([
                    piece.exponent,
                    piece.degree,
                    " ".join(vector_to_json(basis)),
                    " ".join(vector_to_json(phi)) if phi is not None else "-",
                    " ".join(vector_to_json(formula)) if formula is not None else "-",
                    format_fraction(constant) if constant is not None else "-",
                ])
        print(table)
        if report.phiSkipped:
            print(f"{Fore.YELLOW}Φ side skipped: dim {g.dim} > {configuration.exteriorMaxDim}{Style.RESET_ALL}")

    if not report.passed:
        failed = sorted(k for k, v in report.checks.items() if not v)
        alert.botFailed(str(g.cartanType), f"Grading checks failed: {', '.join(failed)}")


def cmd_cache(args):
    cache = Cache(args.cacheDir)
    if args.action == "build":
        types = [args.algebra] if args.algebra else list(DEFAULT_BUILD)
        document = {"built": cache.build(types)}
    elif args.action == "list":
        document = {"entries": cache.entries()}
    else:
        document = {"cleared": cache.clear()}
    emit(args, document)
    if args.json:
        return

    if args.action == "clear":
        print(f"Removed {document['cleared']} cache entries from {cache.path}")
        return
    rows = document.get("built") or document.get("entries") or []
    table = PrettyTable()
    if args.action == "build":
        table.field_names = ["Type", "Form", "Identical to stored", "Bytes"]
        for r in rows:
            table.add_row([r["type"], r["form"], r["identical"], r["bytes"]])
    else:
        table.field_names = ["Table", "Type", "Form"]
        for r in rows:
            table.add_row([r["table"], r["type"], r["form"]])
    print(table)


COMMANDS = {"verify": cmd_verify, "table": cmd_table, "cache": cmd_cache}


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_level("DEBUG" if args.verbose > 1 else "INFO")
    try:
        COMMANDS[args.command](args)
    except UsageError as e:
        alert.usageFailed(args.algebra, str(e))
    except CliffhcError as e:
        alert.botFailed(args.algebra, str(e))
    except KeyboardInterrupt:
        alert.botFailed(args.algebra, "Interrupted")
    except Exception as e:
        alert.botFailed(args.algebra, "Uncaught exception: " + str(e))


if __name__ == "__main__":
    main()
