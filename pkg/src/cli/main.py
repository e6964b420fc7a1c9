"""
Command-line front end.

Run as:
    python -m src.cli classify --p 7 --m 1 --alpha 1,2,3,4 --k 3 --eta 2 --extended
    python -m src.cli build trace --p 3 --m 2 --r 1
    python -m src.cli refute --q 5 --k 3

Exit codes: 0 success, 1 domain error, 2 usage error.
"""
import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

import structlog
from pydantic import BaseModel, TypeAdapter, ValidationError

from src.core.config import get_settings
from src.core.exceptions import CliUsageError, InconsistencyError, TwistedCodesError
from src.core.logging import configure_logging
from src.analysis.classification import (
    classification_census,
    etgrs_classify,
    etgrs_weight_distribution,
    verify_against_brute_force,
)
from src.analysis.schur import non_grs_certificate, schur_square_closed
from src.cli.formatting import format_matrix, format_pairs, format_table
from src.cli.schemas import (
    CensusDocument,
    CertificateDocument,
    ClassificationDocument,
    CodeDocument,
    CodeSpecModel,
    ConstructionDocument,
    DistributionDocument,
    FieldDocument,
    FieldModel,
    RefutationDocument,
    SchurDocument,
    WeightsDocument,
)
from src.codes.linear_code import schur_square
from src.codes.weights import WeightDistribution
from src.gf.field import FieldCtx, element_table, field_create, field_from_order, field_generator, parse_codes
from src.selfdual.constructions import (
    BuildTarget,
    ConstructionResult,
    EtaRegime,
    OddVariant,
    construct_even,
    construct_odd_pcd1,
    construct_trace,
)
from src.selfdual.refutation import refute_self_dual_etgrs
from src.selfdual.solver import certify_self_dual_2k, solve_self_orth
from src.tgrs.parity import etgrs_parity_check
from src.tgrs.spec import CodeSpec, tgrs_generator

logger = structlog.get_logger(__name__)

# --spec accepts a bare CodeSpec or the document printed by `construct --json`
_SPEC_INPUT = TypeAdapter(Union[CodeDocument, CodeSpecModel])


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting."""

    def error(self, message: str):
        raise CliUsageError(message, {"prog": self.prog})


def _add_field_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", type=int, help="field order (prime power)")
    parser.add_argument("--p", type=int, help="characteristic")
    parser.add_argument("--m", type=int, help="extension degree")


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    _add_field_args(parser)
    parser.add_argument("--spec", type=Path, help="CodeSpec JSON file")
    parser.add_argument("--alpha", help="evaluation points, e.g. 1,2,3,4")
    parser.add_argument("--v", help="column multipliers (default all ones)")
    parser.add_argument("--eta", type=int, default=1, help="twist coefficient code")
    parser.add_argument("--k", type=int, help="dimension")
    parser.add_argument("--extended", action="store_true", help="append the coordinate at infinity")


def _add_output_args(parser: argparse.ArgumentParser, verify: bool = False) -> None:
    parser.add_argument("--json", action="store_true", help="print JSON")
    if verify:
        parser.add_argument("--verify", action="store_true", help="cross-check against brute force")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twisted-codes", description="(+)-TGRS and (+)-ETGRS codes over finite fields")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    field = sub.add_parser("field", help="describe GF(q)")
    _add_field_args(field)
    field.add_argument("--table", action="store_true", help="print the element/polynomial table")
    _add_output_args(field)

    for name, help_text, verify in (
        ("construct", "generator (and parity-check) matrices", False),
        ("classify", "MDS/NMDS classification", True),
        ("weights", "weight distributions of the code and its dual", True),
        ("dual", "parity-check matrix of the extended code", False),
        ("schur", "Schur square and non-GRS certificate", True),
        ("check-so", "self-orthogonality witness", False),
    ):
        command = sub.add_parser(name, help=help_text)
        _add_spec_args(command)
        _add_output_args(command, verify)

    build = sub.add_parser("build", help="self-dual and almost self-dual constructions")
    build.add_argument("construction", choices=["even", "odd", "trace"])
    _add_field_args(build)
    build.add_argument("--k", type=int)
    build.add_argument("--eta", type=int)
    build.add_argument("--target", choices=[t.value for t in BuildTarget], default=BuildTarget.SELF_DUAL.value)
    build.add_argument("--subset", help="evaluation set for the even construction")
    build.add_argument("--variant", choices=[v.value for v in OddVariant], default=OddVariant.PLAIN.value)
    build.add_argument("--i0", type=int)
    build.add_argument("--regime", choices=[r.value for r in EtaRegime])
    build.add_argument("--r", type=int, help="trace subfield degree")
    _add_output_args(build)

    search = sub.add_parser("search", help="MDS/NMDS census over all evaluation sets and eta")
    _add_field_args(search)
    search.add_argument("--k", type=int, required=True)
    search.add_argument("--n", type=int, required=True)
    _add_output_args(search)

    refute = sub.add_parser("refute", help="exhaustive search for self-dual (+)-ETGRS codes")
    _add_field_args(refute)
    refute.add_argument("--k", type=int, required=True)
    _add_output_args(refute)
    return parser


def _field(args: argparse.Namespace) -> FieldCtx:
    if args.q is not None:
        if args.p is not None or args.m is not None:
            raise CliUsageError("give either --q or --p/--m", {"flag": "--q"})
        return field_from_order(args.q)
    if args.p is None:
        raise CliUsageError("field required: --q or --p with --m", {"flag": "--p"})
    return field_create(args.p, args.m if args.m is not None else 1)


def _parse_list(text: str, flag: str) -> list[int]:
    try:
        return parse_codes(text)
    except ValueError as exc:
        raise CliUsageError(f"{flag} expects comma-separated integers", {"flag": flag, "value": text}) from exc


def _spec(args: argparse.Namespace) -> CodeSpec:
    if args.spec is not None:
        try:
            document = _SPEC_INPUT.validate_json(args.spec.read_text())
        except OSError as exc:
            raise CliUsageError("cannot read spec file", {"flag": "--spec", "path": str(args.spec)}) from exc
        except ValidationError as exc:
            raise CliUsageError("malformed spec file", {"flag": "--spec", "errors": exc.errors()}) from exc
        model = document.spec if isinstance(document, CodeDocument) else document
        return model.to_spec()
    if args.alpha is None:
        raise CliUsageError("--alpha or --spec is required", {"flag": "--alpha"})
    if args.k is None:
        raise CliUsageError("--k is required", {"flag": "--k"})
    ctx = _field(args)
    alpha = _parse_list(args.alpha, "--alpha")
    v = _parse_list(args.v, "--v") if args.v is not None else None
    return CodeSpec.from_codes(ctx, alpha, v, args.eta, args.k, args.extended)


def _distribution(dist: WeightDistribution) -> DistributionDocument:
    return DistributionDocument(
        length=dist.length,
        dimension=dist.dimension,
        q=dist.q,
        classification=dist.classification.value,
        min_distance=dist.min_distance,
        counts=[str(c) for c in dist.counts],
    )


def cmd_field(args: argparse.Namespace) -> tuple[BaseModel, str]:
    ctx = _field(args)
    table = element_table(ctx) if args.table else None
    doc = FieldDocument(
        field=FieldModel.from_ctx(ctx), order=ctx.q, generator=int(field_generator(ctx)), elements=table
    )
    text = format_pairs([("field", ctx.describe()), ("generator", doc.generator)])
    if table is not None:
        text += "\n\n" + format_table(["code", "polynomial"], table)
    return doc, text


def cmd_construct(args: argparse.Namespace) -> tuple[BaseModel, str]:
    spec = _spec(args)
    generator = tgrs_generator(spec).generator.codes()
    parity = etgrs_parity_check(spec).codes() if spec.extended else None
    doc = CodeDocument(
        spec=CodeSpecModel.from_spec(spec),
        length=spec.length,
        dimension=spec.k,
        generator=generator,
        parity_check=parity,
    )
    text = f"[{spec.length}, {spec.k}] code over {spec.ctx.name}\n\nG =\n{format_matrix(generator)}"
    if parity is not None:
        text += f"\n\nH =\n{format_matrix(parity)}"
    return doc, text


def _require_extended(spec: CodeSpec) -> None:
    if not spec.extended:
        raise CliUsageError("this command needs --extended", {"flag": "--extended"})


def cmd_classify(args: argparse.Namespace) -> tuple[BaseModel, str]:
    spec = _spec(args)
    _require_extended(spec)
    result = etgrs_classify(spec, with_witness=True)
    if args.verify:
        verify_against_brute_force(spec)
    doc = ClassificationDocument(
        classification=result.classification.value,
        a_min=str(result.a_min),
        subset_count=result.subset_count,
        target=result.target,
        witness_subset=list(result.witness_subset) if result.witness_subset else None,
        verified=args.verify,
    )
    text = f"{result.classification.value}, A_min={result.a_min}"
    if result.witness_subset:
        text += f"\nwitness subset: {','.join(map(str, result.witness_subset))}"
    return doc, text


def cmd_weights(args: argparse.Namespace) -> tuple[BaseModel, str]:
    spec = _spec(args)
    _require_extended(spec)
    primal, dual = verify_against_brute_force(spec) if args.verify else etgrs_weight_distribution(spec)
    doc = WeightsDocument(
        spec=CodeSpecModel.from_spec(spec),
        code=_distribution(primal),
        dual=_distribution(dual),
        verified=args.verify,
    )
    rows = [
        (w, primal.counts[w], dual.counts[w])
        for w in range(primal.length + 1)
        if primal.counts[w] or dual.counts[w]
    ]
    text = (
        f"{primal.classification.value} [{primal.length}, {primal.dimension}, {primal.min_distance}]\n\n"
        + format_table(["w", "A_w", "dual A_w"], rows)
    )
    return doc, text


def cmd_dual(args: argparse.Namespace) -> tuple[BaseModel, str]:
    spec = _spec(args)
    _require_extended(spec)
    parity = etgrs_parity_check(spec).codes()
    doc = CodeDocument(
        spec=CodeSpecModel.from_spec(spec),
        length=spec.length,
        dimension=spec.length - spec.k,
        generator=parity,
    )
    return doc, f"H =\n{format_matrix(parity)}"


def cmd_schur(args: argparse.Namespace) -> tuple[BaseModel, str]:
    spec = _spec(args)
    _require_extended(spec)
    square = schur_square_closed(spec)
    if args.verify and not square.same_code(schur_square(tgrs_generator(spec))):
        raise InconsistencyError("closed Schur square differs from C*C", {"spec": spec.to_dict()})
    certificate = None
    if spec.k <= spec.n - 2:
        certificate = CertificateDocument.from_dict(non_grs_certificate(spec).to_dict())
    doc = SchurDocument(
        square_dimension=square.dimension,
        full_space=square.dimension == spec.length,
        certificate=certificate,
    )
    pairs = [("dim C^2", square.dimension), ("full space", doc.full_space)]
    if certificate is not None:
        pairs.append(("non-GRS", certificate.details["kind"]))
    return doc, format_pairs(pairs)


def cmd_check_so(args: argparse.Namespace) -> tuple[BaseModel, str]:
    spec = _spec(args)
    witness = solve_self_orth(spec)
    if witness is None:
        doc = CertificateDocument(type="not-self-orthogonal", verified=True)
        return doc, "not self-orthogonal"
    data = witness.to_dict()
    text = f"self-orthogonal ({witness.condition.value})\nwitness g: {data['witness_poly']}"
    if spec.n == 2 * spec.k:
        certificate = certify_self_dual_2k(spec)
        if certificate is not None:
            data.update(certificate.to_dict())
            text += f"\n{certificate.verdict.value}, lambda={int(certificate.lam)}"
    return CertificateDocument.from_dict(data), text


def _construction_doc(result: ConstructionResult) -> ConstructionDocument:
    data = result.to_dict()
    return ConstructionDocument(
        construction=data["construction"],
        spec=CodeSpecModel.model_validate(data["spec"]),
        length=data["length"],
        dimension=data["dimension"],
        certificate=CertificateDocument.from_dict(data["certificate"]),
        classification=data.get("classification"),
        a_min=data.get("A_min"),
    )


def cmd_build(args: argparse.Namespace) -> tuple[BaseModel, str]:
    if args.construction == "even":
        if args.k is None:
            raise CliUsageError("--k is required", {"flag": "--k"})
        subset = _parse_list(args.subset, "--subset") if args.subset is not None else None
        result = construct_even(_field(args), args.k, subset, BuildTarget(args.target), args.eta)
    elif args.construction == "odd":
        if args.p is None or args.m is None or args.k is None:
            raise CliUsageError("odd construction needs --p, --m and --k", {"flag": "--p"})
        regime = EtaRegime(args.regime) if args.regime else None
        result = construct_odd_pcd1(args.p, args.m, args.k, OddVariant(args.variant), args.eta, args.i0, regime)
    else:
        if args.p is None or args.m is None or args.r is None:
            raise CliUsageError("trace construction needs --p, --m and --r", {"flag": "--r"})
        result = construct_trace(args.p, args.r, args.m, args.eta)

    doc = _construction_doc(result)
    spec = result.spec
    pairs = [
        ("construction", result.name),
        ("field", spec.ctx.name),
        ("code", f"[{spec.length}, {spec.k}]"),
        ("verdict", result.certificate.verdict.value),
        ("lambda", int(result.certificate.lam)),
        ("alpha", ",".join(map(str, doc.spec.alpha))),
        ("v", ",".join(map(str, doc.spec.v or []))),
        ("eta", doc.spec.eta),
    ]
    if doc.classification is not None:
        pairs.append(("classification", f"{doc.classification}, A_min={doc.a_min}"))
    return doc, format_pairs(pairs)


def cmd_search(args: argparse.Namespace) -> tuple[BaseModel, str]:
    census = classification_census(_field(args), args.k, args.n)
    doc = CensusDocument(
        q=census.q,
        k=census.k,
        n=census.n,
        total=census.total,
        tallies=dict(census.tallies),
        witnesses={label: CodeSpecModel.from_spec(spec) for label, spec in census.witnesses.items()},
    )
    rows = [(label, count) for label, count in sorted(census.tallies.items())]
    text = f"{census.total} specs over GF({census.q}), k={census.k}, n={census.n}\n\n"
    text += format_table(["class", "count"], rows)
    return doc, text


def cmd_refute(args: argparse.Namespace) -> tuple[BaseModel, str]:
    report = refute_self_dual_etgrs(_field(args), args.k)
    data = report.to_dict()
    doc = RefutationDocument(
        q=data["q"],
        k=data["k"],
        n=data["n"],
        gram_classes_checked=data["gram_classes_checked"],
        specs_covered=data["specs_covered"],
        found=CodeSpecModel.model_validate(data["found"]) if data["found"] else None,
        note=data["note"],
        summary=report.summary(),
    )
    text = report.summary()
    if report.note:
        text += f"\nnote: {report.note}"
    return doc, text


COMMANDS: dict[str, Callable[[argparse.Namespace], tuple[BaseModel, str]]] = {
    "field": cmd_field,
    "construct": cmd_construct,
    "classify": cmd_classify,
    "weights": cmd_weights,
    "dual": cmd_dual,
    "schur": cmd_schur,
    "check-so": cmd_check_so,
    "build": cmd_build,
    "search": cmd_search,
    "refute": cmd_refute,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliUsageError as exc:
        print(f"usage error: {exc.message}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    configure_logging(args.log_level)
    try:
        doc, text = COMMANDS[args.command](args)
    except CliUsageError as exc:
        logger.warning("cli_usage_error", command=args.command, **exc.to_dict())
        print(f"usage error: {exc.message}", file=sys.stderr)
        return 2
    except TwistedCodesError as exc:
        logger.warning("cli_command_failed", command=args.command, **exc.to_dict())
        print(f"error: {exc.message}", file=sys.stderr)
        return 1

    if args.json:
        print(doc.model_dump_json(indent=get_settings().json_indent))
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
