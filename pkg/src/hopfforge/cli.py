"""
Command line front end.

    hopfforge build DATUM [--out FILE]
    hopfforge verify STRUCTURE [--rmatrix FILE]
    hopfforge classify (--group 2,2 | --datum FILE) [--samples K]
    hopfforge rmatrix DATUM [--seed S] [--choice FILE] [--choice-out FILE]
    hopfforge recognize STRUCTURE RMATRIX GENERATORS [--choice-out FILE]

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 bound exceeded.
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional

from .abgroup import FiniteAbelianGroup, enumerate_forms, enumerate_phi, forms_up_to_automorphism
from .base import JobRunner
from .configuration import bounds_from_environment
from .enums.exit_code_enum import ExitCode_Enum
from .enums.report_format_enum import ReportFormat_Enum
from .enums.severity_enum import Severity_Enum
from .exceptions import DatumValidationError, DeserializationError, PreconditionError
from .forge_logging import log_failed_checks, log_info
from .hd_builder import build_hd, validate_datum
from .hopf_core import verify_hopf_axioms
from .models.engine_bounds import EngineBoundsModel
from .models.job_config import JobConfigModel
from .models.verdict import VerdictReportModel
from .resources import (
    DatumFile,
    GeneratorsFile,
    LabelMapFile,
    ReportFile,
    RMatrixData,
    RMatrixFile,
    StructureChoiceFile,
    StructureFile,
)
from .resources.datum_file import form_to_model
from .triangular import (
    build_f_T,
    drinfeld_analysis,
    extract_datum,
    minimality_rank,
    rmatrix_from_f,
    sample_structure_choices,
    structure_parameter_count,
    verify_triangular,
)

NO_STRUCTURE_MESSAGE = "no minimal triangular structure"


def render_report(report: VerdictReportModel, report_format: ReportFormat_Enum) -> str:
    """Machine reports are canonical JSON; human reports list one check per line."""
    if report_format == ReportFormat_Enum.Machine:
        return ReportFile.dumps(report)
    lines = []
    for name in sorted(report.checks):
        verdict = report.checks[name]
        line = f"{name}: {'PASS' if verdict.passed else 'FAIL'}"
        if not verdict.passed and verdict.witness is not None:
            line += f" (witness: {verdict.witness})"
        lines.append(line)
    failed = len(report.failures())
    lines.append(f"{len(report.checks)} checks, {failed} failed")
    return "\n".join(lines) + "\n"


def _stem(path: str) -> str:
    return path[: -len(".json")] if path.endswith(".json") else path


def _load_datum(path: str):
    datum = DatumFile.load(path)
    log_info(Severity_Enum.Info.value, f"Loaded datum {datum!r}")
    return datum


def _parse_group(text: str) -> FiniteAbelianGroup:
    try:
        factors = [int(part) for part in text.replace("x", ",").split(",") if part.strip()]
    except ValueError as error:
        raise DeserializationError(f"Group spec must look like '2,2': {text!r}") from error
    if not factors or any(d < 2 for d in factors):
        raise DeserializationError(f"Cyclic factors must be integers >= 2: {text!r}")
    return FiniteAbelianGroup(factors)


# ---------------------------------------------------------------------- commands


def cmd_build(runner: JobRunner) -> ExitCode_Enum:
    """Datum file -> structure file, with label map and generators next to it."""
    config = runner.config
    hd = build_hd(_load_datum(config.inputs[0]), runner.bounds)
    runner.emit(StructureFile.dumps(hd.structure), config.output)
    if config.output is not None:
        stem = _stem(config.output)
        LabelMapFile.dump(hd, f"{stem}.labels.json")
        GeneratorsFile.dump(GeneratorsFile.from_algebra(hd), f"{stem}.generators.json")
    return ExitCode_Enum.Passed


def cmd_verify(runner: JobRunner) -> ExitCode_Enum:
    """Hopf axioms, and with an R-matrix the triangular and Drinfeld checks."""
    config = runner.config
    H = StructureFile.load(config.inputs[0])
    report = VerdictReportModel().merge(verify_hopf_axioms(H), "hopf.")
    rmatrix_path = config.options.get("rmatrix")
    if rmatrix_path is not None:
        data = RMatrixFile.load(rmatrix_path)
        if data.dimension != H.dimension:
            raise DeserializationError(
                f"R-matrix dimension {data.dimension} does not match structure dimension "
                f"{H.dimension}"
            )
        triangular = verify_triangular(H, data.rmatrix, runner.bounds)
        report.merge(triangular, "triangular.")
        if triangular.all_passed:
            report.merge(drinfeld_analysis(H, data.rmatrix).verdicts, "drinfeld.")
        else:
            value, minimal = minimality_rank(data.rmatrix, H.dimension)
            report.record(
                "drinfeld.minimal", minimal, {"rank": value, "dimension": H.dimension}
            )
    runner.emit(render_report(report, config.report_format), config.output)
    if not report.all_passed:
        log_failed_checks(report, "Check")
        return ExitCode_Enum.VerificationFailed
    return ExitCode_Enum.Passed


def _classify_group(runner: JobRunner, group: FiniteAbelianGroup) -> dict:
    forms = enumerate_forms(group, runner.bounds)
    if runner.config.up_to_automorphism:
        forms = forms_up_to_automorphism(group, forms)
    return {
        "cyclic_factors": list(group.cyclic_factors),
        "count": len(forms),
        "forms": [form_to_model(form).model_dump(mode="json") for form in forms],
        "up_to_automorphism": runner.config.up_to_automorphism,
    }


def _classify_datum(runner: JobRunner, path: str) -> dict:
    config = runner.config
    datum = _load_datum(path)
    report = validate_datum(datum, runner.bounds)
    if not report.valid:
        raise DatumValidationError(f"Invalid datum: violated {sorted(report.report.failures())}")
    free = structure_parameter_count(datum)
    result = {
        "dimension": datum.dimension,
        "feasible": free is not None,
        "free_parameters": free,
        "i_f_prime": [list(g) for g in datum.i_f_prime],
    }
    if free is None:
        result["message"] = NO_STRUCTURE_MESSAGE
        return result
    phis = enumerate_phi(datum.group, datum.form, datum.i_f_prime, runner.bounds)
    seeds = list(range(config.seed, config.seed + config.samples))
    result["phi"] = [[list(image) for image in phi.images] for phi in phis]
    result["phi_count"] = len(phis)
    result["samples"] = [
        {"seed": seed, "structure_choice": StructureChoiceFile.serialize(choice)}
        for seed, choice in zip(seeds, sample_structure_choices(datum, seeds, bounds=runner.bounds))
    ]
    return result


def _render_classification(result: dict) -> str:
    if "forms" in result:
        group = " x ".join(f"Z_{d}" for d in result["cyclic_factors"])
        lines = [f"{group}: {result['count']} non-degenerate skew forms"]
        lines += [f"  E = {form['exponent_matrix']}" for form in result["forms"]]
        return "\n".join(lines) + "\n"
    if not result["feasible"]:
        return f"{NO_STRUCTURE_MESSAGE}\n"
    lines = [
        f"dim H(D) = {result['dimension']}",
        f"|Phi| = {result['phi_count']}",
        f"S(k): {result['free_parameters']} free parameters",
    ]
    for sample in result["samples"]:
        choice = sample["structure_choice"]
        lines.append(f"  seed {sample['seed']}: phi = {choice['phi']}")
    return "\n".join(lines) + "\n"


def cmd_classify(runner: JobRunner) -> ExitCode_Enum:
    """Forms of a group, or Phi and S(k) of a datum."""
    config = runner.config
    group_spec = config.options.get("group")
    if group_spec is not None:
        result = _classify_group(runner, _parse_group(group_spec))
    else:
        result = _classify_datum(runner, config.inputs[0])
    if config.report_format == ReportFormat_Enum.Machine:
        runner.emit_json(result, config.output)
    else:
        runner.emit(_render_classification(result), config.output)
    return ExitCode_Enum.Passed


def cmd_rmatrix(runner: JobRunner) -> ExitCode_Enum:
    """Datum file and a seed (or a structure choice file) -> R_T."""
    config = runner.config
    datum = _load_datum(config.inputs[0])
    choice_path = config.options.get("choice")
    if choice_path is not None:
        choice = StructureChoiceFile.load(choice_path)
    else:
        choices = sample_structure_choices(datum, [config.seed], bounds=runner.bounds)
        if not choices:
            raise PreconditionError(NO_STRUCTURE_MESSAGE)
        choice = choices[0]
    hd = build_hd(datum, runner.bounds)
    f = build_f_T(hd, choice)
    R = rmatrix_from_f(hd.structure, f)
    runner.emit(RMatrixFile.dumps(RMatrixData(hd.dimension, R)), config.output)
    choice_out = config.options.get("choice_out")
    if choice_out is not None:
        StructureChoiceFile.dump(choice, choice_out)
    return ExitCode_Enum.Passed


def cmd_recognize(runner: JobRunner) -> ExitCode_Enum:
    """Structure, R-matrix and generators files -> datum file."""
    config = runner.config
    structure_path, rmatrix_path, generators_path = config.inputs
    H = StructureFile.load(structure_path)
    data = RMatrixFile.load(rmatrix_path)
    if data.dimension != H.dimension:
        raise DeserializationError(
            f"R-matrix dimension {data.dimension} does not match structure dimension "
            f"{H.dimension}"
        )
    generators = GeneratorsFile.load(generators_path)
    result = extract_datum(
        H, data.rmatrix, generators.grouplikes, generators.skew_primitives, runner.bounds
    )
    runner.emit(DatumFile.dumps(result.datum), config.output)
    choice_out = config.options.get("choice_out")
    if choice_out is not None:
        StructureChoiceFile.dump(result.choice, choice_out)
    return ExitCode_Enum.Passed


COMMANDS: Dict[str, Callable[[JobRunner], ExitCode_Enum]] = {
    "build": cmd_build,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "rmatrix": cmd_rmatrix,
    "recognize": cmd_recognize,
}


# ---------------------------------------------------------------------- arguments


def _add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=0, help="Sampling seed (default: 0)")
    parser.add_argument("--max-order", type=int, default=None, help="Largest group order")
    parser.add_argument("--max-dim", type=int, default=None, help="Largest algebra dimension")
    parser.add_argument(
        "--max-hexagon-dim",
        type=int,
        default=None,
        help="Largest dimension for the hexagon checks",
    )
    parser.add_argument(
        "--format",
        dest="report_format",
        choices=[member.value for member in ReportFormat_Enum],
        default=ReportFormat_Enum.Human.value,
        help="Report format (default: human)",
    )
    parser.add_argument("--out", default=None, help="Output file (default: stdout)")
    parser.add_argument("--log-level", default="WARNING", help="Log level (default: WARNING)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfforge",
        description="Pointed Hopf algebras H(D) and their minimal triangular structures.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="Build H(D) from a datum file")
    build.add_argument("datum")

    verify = commands.add_parser("verify", help="Verify a structure file")
    verify.add_argument("structure")
    verify.add_argument("--rmatrix", default=None, help="R-matrix file to verify as well")

    classify = commands.add_parser("classify", help="Enumerate forms or structure choices")
    source = classify.add_mutually_exclusive_group(required=True)
    source.add_argument("--group", default=None, help="Cyclic factors, e.g. 2,2")
    source.add_argument("--datum", default=None, help="Datum file")
    classify.add_argument("--samples", type=int, default=1, help="Sampled T instances")
    classify.add_argument(
        "--up-to-automorphism",
        action="store_true",
        help="Keep one form per Aut(G)-orbit",
    )

    rmatrix = commands.add_parser("rmatrix", help="Build R_T for a datum")
    rmatrix.add_argument("datum")
    rmatrix.add_argument("--choice", default=None, help="Structure choice file to use")
    rmatrix.add_argument("--choice-out", default=None, help="Write the structure choice used")

    recognize = commands.add_parser("recognize", help="Recover a datum from (H, R)")
    recognize.add_argument("structure")
    recognize.add_argument("rmatrix")
    recognize.add_argument("generators")
    recognize.add_argument("--choice-out", default=None, help="Write the recovered choice")

    for sub in (build, verify, classify, rmatrix, recognize):
        _add_common_arguments(sub)
    return parser


def _bounds_from_args(args: argparse.Namespace) -> EngineBoundsModel:
    defaults = bounds_from_environment()
    return EngineBoundsModel(
        max_group_order=args.max_order or defaults.max_group_order,
        max_dimension=args.max_dim or defaults.max_dimension,
        max_hexagon_dimension=args.max_hexagon_dim or defaults.max_hexagon_dimension,
    )


def job_config_from_args(args: argparse.Namespace) -> JobConfigModel:
    inputs: List[str] = []
    options: Dict[str, str] = {}
    if args.command in ("build", "rmatrix"):
        inputs = [args.datum]
    elif args.command == "verify":
        inputs = [args.structure]
    elif args.command == "recognize":
        inputs = [args.structure, args.rmatrix, args.generators]
    elif args.command == "classify":
        inputs = [args.datum] if args.datum else []
    for name in ("group", "choice", "choice_out"):
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    if args.command == "verify" and args.rmatrix is not None:
        options["rmatrix"] = args.rmatrix
    return JobConfigModel(
        command=args.command,
        inputs=inputs,
        options=options,
        seed=args.seed,
        bounds=_bounds_from_args(args),
        output=args.out,
        report_format=ReportFormat_Enum(args.report_format),
        samples=getattr(args, "samples", 1),
        up_to_automorphism=getattr(args, "up_to_automorphism", False),
        log_level=args.log_level,
    )


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return int(ExitCode_Enum.InputError if error.code else ExitCode_Enum.Passed)
    try:
        config = job_config_from_args(args)
    except ValueError as error:
        (stderr or sys.stderr).write(f"hopfforge {args.command}: {error}\n")
        return int(ExitCode_Enum.InputError)
    runner = JobRunner(config, stdout=stdout, stderr=stderr)
    return runner.run(COMMANDS[config.command])


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
