# ------------------------------------------------------------------------------
#  Copyright 2022 Upstream Data Inc                                            -
#                                                                              -
#  Licensed under the Apache License, Version 2.0 (the "License");             -
#  you may not use this file except in compliance with the License.            -
#  You may obtain a copy of the License at                                     -
#                                                                              -
#      http://www.apache.org/licenses/LICENSE-2.0                              -
#                                                                              -
#  Unless required by applicable law or agreed to in writing, software         -
#  distributed under the License is distributed on an "AS IS" BASIS,           -
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.    -
#  See the License for the specific language governing permissions and         -
#  limitations under the License.                                              -
# ------------------------------------------------------------------------------

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from pycommutator.algebra import AlgebraKind, LinearFunctional
from pycommutator.cli.schema import (
    COMMANDS,
    CommandEnvelope,
    load_json,
    read_bundle,
    read_certificate,
    read_count,
    read_element,
    read_points,
    read_polynomial,
    split_point,
)
from pycommutator.config import EngineConfig
from pycommutator.engine import decompose, t_catalog
from pycommutator.errors import (
    CommutatorError,
    DescriptorError,
    DimensionError,
    SchemaError,
)
from pycommutator.euler import (
    certify_cm_failure,
    certify_subequivalence_obstruction,
    is_projection,
    tensor_projection_eval,
    villadsen_plan,
)
from pycommutator.hyperplane import hyperplane_factorize, kronecker_component
from pycommutator.linear import QQ, QQI, ExactMatrix, FieldKind
from pycommutator.logger import init_logger
from pycommutator.ncpoly import commutator_ideal_decompose
from pycommutator.oracle import cross_check, enumerate_products, prime_matrix_algebra, verify_certificate
from pycommutator.settings import CommutatorSettings

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_MALFORMED = 2

MALFORMED = (SchemaError, DescriptorError, DimensionError)

Result = Tuple[int, dict]


def _refusal(name: str, message: str, **extra) -> Result:
    return EXIT_REFUSED, {"error": name, "message": message, **extra}


def _info(envelope: CommandEnvelope) -> Result:
    return EXIT_OK, {
        "name": "pycommutator",
        "commands": list(COMMANDS),
        "algebra_kinds": [kind.value for kind in AlgebraKind],
        "fields": [kind.value for kind in FieldKind],
        "settings": asdict(CommutatorSettings()),
    }


def _decompose(envelope: CommandEnvelope) -> Result:
    payload = envelope.payload
    a = read_element(payload)
    max_retries = read_count(payload, "max_retries", minimum=0, required=False)
    certificate = decompose(a, seed=envelope.seed, max_retries=max_retries)
    return EXIT_OK, certificate.as_dict()


def _verify(envelope: CommandEnvelope) -> Result:
    certificate = read_certificate(envelope.payload)
    verified = verify_certificate(certificate)
    if not verified:
        return _refusal("VerificationFailed", "a != [b, c][d, e]", verified=False)
    return EXIT_OK, {"verified": True, "path": certificate.path.value}


def _hyperplane(envelope: CommandEnvelope) -> Result:
    payload = envelope.payload
    a = read_element(payload)
    algebra = a.algebra
    if not algebra.is_quaternionic:
        raise DescriptorError(f"hyperplane factorization needs a quaternionic algebra, got {algebra}")
    shift = read_count(payload, "t_shift", minimum=1, required=False)
    if algebra.kind == AlgebraKind.QUATERNION:
        t = ExactMatrix.identity(1, QQ)
    elif shift is not None:
        t = ExactMatrix.identity(algebra.m, QQ) + ExactMatrix.unit(algebra.m, 0, 1, QQ).scale(shift)
    else:
        for _, t in t_catalog(algebra.m, QQ):
            if kronecker_component(a, t) is None:
                break
    factorization = hyperplane_factorize(a, LinearFunctional.reduced_trace(algebra), t)
    return EXIT_OK, factorization.as_dict()


def _ncpoly(envelope: CommandEnvelope) -> Result:
    f = read_polynomial(envelope.payload)
    return EXIT_OK, commutator_ideal_decompose(f).as_dict()


def _euler(envelope: CommandEnvelope) -> Result:
    payload = envelope.payload
    spec = read_bundle(payload)
    if payload.get("power") is not None:
        certificate = certify_subequivalence_obstruction(spec, read_count(payload, "power"))
    else:
        certificate = certify_cm_failure(spec, read_count(payload, "m"))
    if not certificate.certified:
        return _refusal(
            "Inconclusive",
            "the Euler class of the direct sum vanishes",
            certificate=certificate.as_dict(),
        )
    return EXIT_OK, certificate.as_dict()


def _villadsen(envelope: CommandEnvelope) -> Result:
    payload = envelope.payload
    m = read_count(payload, "m")
    stages = read_count(payload, "stages")
    k = payload.get("k")
    if k is not None and (
        not isinstance(k, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in k)
    ):
        raise SchemaError("k must be a list of integers", path="$.payload.k")
    plan = villadsen_plan(m, stages, k)
    if not plan.all_certified:
        return _refusal("Inconclusive", "some stage carries no Euler obstruction", plan=plan.as_dict())
    return EXIT_OK, plan.as_dict()


def _oracle(envelope: CommandEnvelope) -> Result:
    payload = envelope.payload
    if payload.get("trials") is not None:
        report = cross_check(seed=envelope.seed, trials=read_count(payload, "trials"))
        if not report.all_verified:
            return _refusal("VerificationFailed", "cross-check found failures", report=report.as_dict())
        return EXIT_OK, report.as_dict()
    try:
        descriptor = prime_matrix_algebra(read_count(payload, "p", minimum=2), read_count(payload, "m"))
    except DescriptorError as e:
        raise SchemaError(str(e), path="$.payload.p")
    report = enumerate_products(descriptor)
    if not report.covers_all:
        return _refusal("NotCovered", "some elements are not products of two commutators", report=report.as_dict())
    return EXIT_OK, report.as_dict()


def _bott(envelope: CommandEnvelope) -> Result:
    points = read_points(envelope.payload)
    p = tensor_projection_eval(points)
    return EXIT_OK, {
        "points": [point.as_list() for point in points],
        "projection": [[QQI.dump(x) for x in row] for row in p.rows],
        "is_projection": is_projection(p),
        "rank": p.rank(),
        "trace": QQI.dump(p.trace()),
    }


HANDLERS: Dict[str, Callable[[CommandEnvelope], Result]] = {
    "info": _info,
    "decompose": _decompose,
    "verify": _verify,
    "hyperplane": _hyperplane,
    "ncpoly": _ncpoly,
    "euler": _euler,
    "villadsen": _villadsen,
    "oracle": _oracle,
    "bott": _bott,
}


def run(envelope: CommandEnvelope) -> Result:
    """Execute one command and map failures to exit codes.

    Returns:
        The exit code and the JSON document for standard output.
    """
    try:
        return HANDLERS[envelope.command](envelope)
    except MALFORMED as e:
        logging.debug(f"{envelope.command} - (Run) - malformed input: {e}")
        return EXIT_MALFORMED, {"error": e.__class__.__name__, "message": str(e)}
    except CommutatorError as e:
        logging.debug(f"{envelope.command} - (Run) - refused: {e}")
        return _refusal(e.__class__.__name__, str(e))


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=None, help="Unsigned 64-bit seed of the searches.")
    parent.add_argument("--config", type=str, default=None, help="A .toml or .yaml run configuration.")
    parent.add_argument("--debug", action="store_true", help="Log search progress to standard error.")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="pycommutator",
        description="Exact products of two commutators, Euler obstructions and their certificates.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("info", parents=[common], help="Supported algebras and current settings.")

    sub = commands.add_parser("decompose", parents=[common], help="Write an element as [b, c][d, e].")
    sub.add_argument("input", nargs="?", help="Element JSON file, standard input when omitted.")
    sub.add_argument("--max-retries", type=int, default=None)

    sub = commands.add_parser("verify", parents=[common], help="Re-verify a certificate.")
    sub.add_argument("input", nargs="?", help="Certificate JSON file, standard input when omitted.")

    sub = commands.add_parser("hyperplane", parents=[common], help="Factor a into two reduced-trace-zero elements.")
    sub.add_argument("input", nargs="?", help="Element JSON file, standard input when omitted.")
    sub.add_argument("--t-shift", type=int, default=None, help="Use t = I + shift * e12.")

    sub = commands.add_parser("ncpoly", parents=[common], help="Decompose a polynomial into the commutator ideal.")
    sub.add_argument("input", nargs="?", help="Polynomial JSON file, standard input when omitted.")

    sub = commands.add_parser("euler", parents=[common], help="Euler obstruction for a direct sum power.")
    sub.add_argument("--stage", action="append", required=True, metavar="N:L", help="Stage n_i:l_i, repeatable.")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--power", type=int)
    group.add_argument("--m", type=int, help="Shorthand for --power 8m.")

    sub = commands.add_parser("villadsen", parents=[common], help="Plan the stages of the inductive system.")
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--stages", type=int, required=True)
    sub.add_argument("--k", type=int, nargs="+", default=None, help="Explicit sphere counts k_1..k_N.")

    sub = commands.add_parser("oracle", parents=[common], help="Exhaustive check over M_m(F_p) or a cross-check run.")
    sub.add_argument("--p", type=int)
    sub.add_argument("--m", type=int, default=2)
    sub.add_argument("--trials", type=int)

    sub = commands.add_parser("bott", parents=[common], help="Evaluate the tensor product of Bott projections.")
    sub.add_argument("--point", action="append", required=True, metavar="X,Y,Z")
    return parser


def _read_document(source: Optional[str]):
    if source is None or source == "-":
        return load_json(sys.stdin.read())
    try:
        text = Path(source).read_text()
    except OSError as e:
        raise SchemaError(f"cannot read {source}: {e.strerror}")
    return load_json(text)


def envelope_from_args(args: argparse.Namespace) -> CommandEnvelope:
    command = args.command
    if command == "decompose":
        payload = {"element": _read_document(args.input), "max_retries": args.max_retries}
    elif command == "verify":
        payload = {"certificate": _read_document(args.input)}
    elif command == "hyperplane":
        payload = {"element": _read_document(args.input), "t_shift": args.t_shift}
    elif command == "ncpoly":
        payload = {"polynomial": _read_document(args.input)}
    elif command == "euler":
        payload = {"stages": args.stage, "power": args.power, "m": args.m}
    elif command == "villadsen":
        payload = {"m": args.m, "stages": args.stages, "k": args.k}
    elif command == "oracle":
        if args.trials is None and args.p is None:
            raise SchemaError("oracle needs --p or --trials", path="--p")
        payload = {"p": args.p, "m": args.m, "trials": args.trials}
    elif command == "bott":
        payload = {"points": [split_point(raw) for raw in args.point]}
    else:
        payload = {}
    return CommandEnvelope(command=command, payload=payload, seed=args.seed)


def _configure(args: argparse.Namespace) -> None:
    config = EngineConfig()
    if args.config is not None:
        try:
            config.from_file(args.config)
        except OSError as e:
            raise SchemaError(f"cannot read {args.config}: {e.strerror}", path="--config")
    if args.debug:
        config.debug = True
    if args.seed is None and config.seed is not None:
        args.seed = config.seed
    config.apply()
    init_logger()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure(args)
        envelope = envelope_from_args(args)
    except SchemaError as e:
        code, result = EXIT_MALFORMED, {"error": e.__class__.__name__, "message": str(e)}
    else:
        code, result = run(envelope)
    print(json.dumps(result, indent=2, sort_keys=True))
    return code


__all__ = ["CommandEnvelope", "HANDLERS", "build_parser", "envelope_from_args", "main", "run"]
