"""Command implementations behind the CLI. Each returns a RunReport."""
import time
from typing import Optional, Tuple

from algebra.eigen import eigen_relations
from algebra.matrices import matrix_identities
from curve.checks import (
    check_arc_isometry,
    check_dyadic_intervals,
    check_self_similarity,
    first_coordinate_min,
)
from curve.partial_sums import partial_sum
from extremal.lemmas import hoelder_constants, lemma_one, lemma_two
from extremal.search import (
    check_block_shift_law,
    check_period_shift,
    conjecture_scan,
    hoelder_upper_check,
    window_min,
)
from genfun.columns import (
    coefficient_check,
    decomposition_check,
    functional_equation_check,
    norm_identity_check,
)
from sequence.generators import prefix, verify_equivalence
from sequence.signs import format_digits, link_count
from sequence.substitution import S0, fixed_point, format_word
from spherical.double_point import double_point_check
from spherical.export import export_samples
from utils.errors import InvalidInputError
from utils.export_helpers import generate_json, write_output
from utils.logger import logger
from utils.reports import OUTCOME_INFO, CheckReport, RunReport

# Constants
GEN_FORMS = ("signs", "letters", "digits")
ARC_SHIFTS = range(8)
ARC_SAMPLES = 8
SELF_SIMILARITY_SAMPLES = 200


def render_report(report: RunReport) -> str:
    """meta holds the command and parameters; data holds outcome, witnesses and the results."""
    body = report.to_dict()
    meta = {"command": body["command"], "parameters": body["parameters"]}
    data = {"outcome": body["outcome"], "witnesses": body["witnesses"], **body["data"]}
    return generate_json(meta, data)


def _timed(report: RunReport, start: float) -> RunReport:
    report.timing = time.perf_counter() - start
    logger.info("Command finished", extra={"command": report.command, "outcome": report.outcome,
                                           "elapsed_s": round(report.timing, 4)})
    return report


def cmd_gen(length: int, form: str = "signs", out: Optional[str] = None) -> RunReport:
    if length < 1:
        raise InvalidInputError("--len must be at least 1")
    start = time.perf_counter()
    if form == "signs":
        text = " ".join(s.symbol for s in prefix(length)) + "\n"
    elif form == "letters":
        text = format_word(fixed_point(S0, length)) + "\n"
    elif form == "digits":
        text = "".join(f"{n} {format_digits(n)} {link_count(n)} {s.symbol}\n"
                       for n, s in enumerate(prefix(length)))
    else:
        raise InvalidInputError(f"Unknown form {form!r}; choose from {', '.join(GEN_FORMS)}")
    write_output(text, out)
    return _timed(RunReport("gen", {"len": length, "form": form}, OUTCOME_INFO), start)


def _positivity(limit: int) -> CheckReport:
    minimum, where = first_coordinate_min(limit)
    early = [n for n in range(1, min(8, limit) + 1) if partial_sum(n)[0] < 1]
    witnesses = []
    if minimum < 0:
        witnesses.append({"min": minimum, "at": where[:10]})
    witnesses.extend({"n": n, "reason": "S_0(n) < 1"} for n in early)
    return CheckReport(name="first_coordinate", passed=not witnesses,
                       details={"limit": limit, "min": minimum, "argmin": where[:10]},
                       witnesses=witnesses)


def cmd_selfcheck(length: int = 4096) -> RunReport:
    """Every exact identity the library knows, on the first ``length`` terms."""
    if length < 1:
        raise InvalidInputError("--len must be at least 1")
    start = time.perf_counter()
    coefficients = min(length, 1024)
    checks = [
        verify_equivalence(length),
        matrix_identities(),
        eigen_relations(),
        functional_equation_check(coefficients),
        decomposition_check(coefficients),
        coefficient_check(),
        norm_identity_check(),
        *(check_arc_isometry(j, ARC_SAMPLES) for j in ARC_SHIFTS),
        check_self_similarity(samples=SELF_SIMILARITY_SAMPLES, int_limit=min(length, 10_000)),
        check_dyadic_intervals(limit=min(length, 4096)),
        check_block_shift_law(),
        check_period_shift(),
        double_point_check(),
        _positivity(length),
    ]
    report = RunReport.from_checks("selfcheck", {"len": length}, checks)
    return _timed(report, start)


def cmd_bounds(n_max: int = 256, window: Tuple[int, int] = (16, 64),
               threads: Optional[int] = None) -> RunReport:
    start = time.perf_counter()
    lo, hi = window
    found = window_min(lo, hi, n_max, threads=threads)
    scan = conjecture_scan(n_max, threads=threads)
    data = {
        "window": {"d_lo": lo, "d_hi": hi, "min_sq_dist": found.min_sq_dist, "pairs": found.pairs},
        "ratios": {
            "min_sq_ratio": scan.min_ratio,
            "min_pairs": scan.min_witnesses,
            "max_sq_ratio": scan.max_ratio,
            "max_pairs": scan.max_witnesses,
        },
        "conjecture": {
            "min_ratio_one_fifth_survives": scan.conjecture_survives,
            "below_one_fifth": scan.below_conjectured_min,
            "max_ratio_above_25_17": scan.above_known_max,
        },
    }
    report = RunReport("bounds", {"nmax": n_max, "window": f"{lo}:{hi}"}, OUTCOME_INFO, data=data)
    return _timed(report, start)


def cmd_lemmas(scan_max: int = 4096, threads: Optional[int] = None) -> RunReport:
    start = time.perf_counter()
    first = lemma_one()
    checks = [
        first.report,
        lemma_two(scan_max=scan_max, threads=threads),
        hoelder_upper_check(scan_max, threads=threads),
    ]
    report = RunReport.from_checks("lemmas", {"scan_max": scan_max}, checks,
                                   data={"constants": hoelder_constants()})
    return _timed(report, start)


def cmd_export(kind: str, fmt: str = "csv", out: Optional[str] = None, **params) -> RunReport:
    start = time.perf_counter()
    frame = export_samples(kind, fmt, out, **params)
    report = RunReport("export", {"kind": kind, "format": fmt, **params}, OUTCOME_INFO,
                       data={"records": len(frame)})
    return _timed(report, start)
