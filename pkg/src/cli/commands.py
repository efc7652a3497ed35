"""
The `coalg` command line: one subcommand per computation, JSON with sorted
keys on standard output, diagnostics on standard error.

Exit codes: 0 computed or verified, 1 a checked property failed (the payload
holds the counterexample), 2 unreadable input.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple

import yaml

from bialgebra import iterated_delta
from convolution import degree_upper_bound, eta_eps_minus_id_power, id_power_sequence
from dual_filtration import (
    character_independence_system,
    dump_matrix,
    infiltration_character_product,
    is_invertible_character,
)
from global_variables import (
    CONFIG_FILE,
    DEFAULT_HORIZON,
    DEFAULT_SEED,
    DEFAULT_TRUNCATION,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    BadParameter,
    CoalgebraError,
    ParseError,
    report,
)
from independence import check_grouplike_relation, check_unipotent_independence
from monoid_series import (
    TraceMonoid,
    character_series,
    character_series_via_mobius,
    free_abelian_character_star,
    kleene_star,
    mobius,
    parse_series,
)
from scalars import parse_ring, parse_scalar

from .instances import Instance, family_from_flags, load_instance
from .suites import print_summary, run_suites

COMMANDS = ("delta", "conv", "unipotent", "mobius", "star", "character", "verify", "independence")
SERIES_LENGTH = 6

Payload = Tuple[Dict, bool]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", type=str, default=None, help="JSON instance file")
    common.add_argument("--ring", type=str, default=None, help="Coefficient ring: ZZ, QQ, ZZ/n, QQ[q], ...")
    common.add_argument("--family", type=str, default=None, help="Bialgebra family when no file is given")
    common.add_argument("--q", type=str, default=None, help="Deformation parameter q")
    common.add_argument("--p", type=int, default=None, help="Prime of the Frobenius quotient")
    common.add_argument("--alphabet", type=str, default=None, help="Comma separated letters")
    common.add_argument("--edges", type=str, default=None, help="Commutation edges such as x-y,y-z")
    common.add_argument("--element", type=str, default=None, help="Element name or expression")
    common.add_argument("--k", type=int, default=None, help="Order of the iterated coproduct")
    common.add_argument("--n", type=int, default=None, help="Convolution power")
    common.add_argument("--horizon", type=int, default=None, help="Number of powers computed")
    common.add_argument("--trunc", dest="truncation", type=int, default=None, help="Truncation degree or length")
    common.add_argument("--maxdeg", type=int, default=None, help="Degree of the unknown coefficient polynomials")
    common.add_argument("--chars", type=str, default=None, help="Character values, e.g. 1,2,5 or a=1,b=2;a=0,b=1")
    common.add_argument("--suite", type=str, default=None, help="Suite name, list of names, or all")
    common.add_argument("--seed", type=int, default=None, help="Seed of the randomized suites")
    common.add_argument("--dump_matrix", type=str, default=None, help="Write the linear system to this file")
    common.add_argument(
        "--progress", action="store_true", default=None, help="Show a progress bar while suites run"
    )
    common.add_argument("--config_file", type=str, default=str(CONFIG_FILE), help="Path to the config file")

    parser = argparse.ArgumentParser(prog="coalg", description="Exact coalgebra and bialgebra computations.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "delta": "Iterated coproduct of an element",
        "conv": "Convolution powers of id and of eta eps - id on an element",
        "unipotent": "Degree-upper bound for id-unipotence",
        "mobius": "Mobius function of a trace monoid",
        "star": "Kleene star of a proper series",
        "character": "Character series of a trace monoid, or products of characters in the dual",
        "verify": "Run verification suites",
        "independence": "Independence systems and relation checks",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=descriptions[command])
    return parser


def load_config(path) -> Dict:
    if path is None or not Path(path).exists():
        return {}
    with open(path, "r") as config_file:
        return yaml.safe_load(config_file) or {}


def merge_config(args: argparse.Namespace) -> Dict:
    """Config file values, overridden by every flag that was given."""
    config = load_config(args.config_file)
    for arg in vars(args):
        if getattr(args, arg) is not None:
            config[arg] = getattr(args, arg)
    return config


def _require(config: Mapping, key: str):
    if config.get(key) is None:
        raise BadParameter(f"--{key} is required")
    return config[key]


def _instance(config: Mapping) -> Instance:
    if config.get("file"):
        return load_instance(config["file"])
    ring = parse_ring(config.get("ring") or "QQ")
    B = family_from_flags(
        ring,
        config.get("family"),
        config.get("q"),
        config.get("p"),
        config.get("alphabet"),
        config.get("truncation"),
    )
    return Instance(ring, B)


def _trace_monoid(config: Mapping) -> TraceMonoid:
    return TraceMonoid.from_text(_require(config, "alphabet"), config.get("edges") or "")


def _series_length(args: argparse.Namespace, config: Mapping) -> int:
    if args.truncation is not None:
        return args.truncation
    return int(config.get("series_length", SERIES_LENGTH))


def parse_characters(text: str, generators: List[str], ring) -> List[Dict]:
    """
    "1,2,5" gives one-generator characters; "a=1,b=2;a=0,b=1" gives one
    character per semicolon separated group.
    """
    if "=" not in text:
        if len(generators) != 1:
            raise ParseError(f"characters of a family with generators {generators} need name=value pairs")
        return [{generators[0]: parse_scalar(v.strip(), ring)} for v in text.split(",") if v.strip()]
    characters = []
    for group in filter(None, (g.strip() for g in text.split(";"))):
        values = {}
        for pair in filter(None, (p.strip() for p in group.split(","))):
            name, _, value = pair.partition("=")
            values[name.strip()] = parse_scalar(value.strip(), ring)
        characters.append(values)
    return characters


def run_delta(args, config) -> Payload:
    instance = _instance(config)
    e = instance.element(_require(config, "element"))
    k = 1 if config.get("k") is None else int(config["k"])
    return {"element": str(e), "k": k, "delta": str(iterated_delta(e, k))}, True


def run_conv(args, config) -> Payload:
    instance = _instance(config)
    b = instance.element(_require(config, "element"))
    n = int(_require(config, "n"))
    reduced = eta_eps_minus_id_power(b, n)
    return {
        "element": str(b),
        "n": n,
        "id_power": str(id_power_sequence(b, n)[n]),
        "eta_eps_minus_id_power": str(reduced),
    }, True


def run_unipotent(args, config) -> Payload:
    instance = _instance(config)
    b = instance.element(_require(config, "element"))
    bound = degree_upper_bound(b, int(config.get("horizon", DEFAULT_HORIZON)))
    payload = bound.to_dict()
    payload["element"] = str(b)
    return payload, True


def run_mobius(args, config) -> Payload:
    ring = parse_ring(config.get("ring") or "ZZ")
    return {"series": str(mobius(_trace_monoid(config), ring))}, True


def run_star(args, config) -> Payload:
    ring = parse_ring(config.get("ring") or "QQ")
    M = _trace_monoid(config)
    length = _series_length(args, config)
    series = parse_series(_require(config, "element"), M, ring, length)
    return {"series": str(series), "star": str(kleene_star(series, length)), "length": length}, True


def run_character(args, config) -> Payload:
    ring = parse_ring(config.get("ring") or "QQ")
    if config.get("alphabet") is not None:
        M = _trace_monoid(config)
        length = _series_length(args, config)
        characters = parse_characters(_require(config, "chars").replace(";", ","), list(M.alphabet), ring)
        if len(characters) != 1:
            raise ParseError(f"a character series takes one value per letter, got {len(characters)} characters")
        [chi] = characters
        missing, unknown = set(M.alphabet) - set(chi), set(chi) - set(M.alphabet)
        if missing or unknown:
            raise ParseError(f"character values: missing letters {sorted(missing)}, unknown letters {sorted(unknown)}")
        series = character_series(chi, M, ring, length)
        via_mobius = character_series_via_mobius(chi, M, ring, length)
        payload = {"series": str(series), "via_mobius": str(via_mobius), "length": length}
        matches = series == via_mobius
        if M.is_commutative:
            product_form = free_abelian_character_star(chi, M, ring, length)
            payload["product_form"] = str(product_form)
            matches = matches and series == product_form
        payload["matches"] = matches
        return payload, matches

    values = [parse_scalar(v.strip(), ring) for v in _require(config, "chars").split(",")]
    if len(values) != 2:
        raise BadParameter("character products take two values alpha,beta")
    alpha, beta = values
    q = parse_scalar(config.get("q") or "0", ring)
    truncation = int(config.get("truncation") or DEFAULT_TRUNCATION)
    product, matches = infiltration_character_product(alpha, beta, q, truncation, ring)
    payload = {
        "alpha": str(alpha),
        "beta": str(beta),
        "q": str(q),
        "product": product.to_json()["on"],
        "expected": str(q * alpha * beta + alpha + beta),
        "invertible": [is_invertible_character(alpha, q), is_invertible_character(beta, q)],
        "matches": matches,
    }
    return payload, matches


def run_independence(args, config) -> Payload:
    instance = _instance(config)
    B = instance.bialgebra
    if config.get("chars") is not None:
        characters = parse_characters(config["chars"], list(B.generators()), B.ring)
        truncation = args.truncation if args.truncation is not None else B.truncation
        system = character_independence_system(B, characters, int(config.get("maxdeg", 3)), truncation)
        if config.get("dump_matrix"):
            with open(config["dump_matrix"], "w") as matrix_file:
                matrix_file.write(dump_matrix(system))
        payload = system.to_dict()
        return payload, payload.get("witness_vanishes") is not False

    horizon = int(config.get("horizon", DEFAULT_HORIZON))
    if "unipotents" in instance.raw:
        result = check_unipotent_independence(
            B, instance.element_list("grouplikes"), instance.element_list("unipotents"), horizon
        )
    elif "coefficients" in instance.raw:
        result = check_grouplike_relation(B, instance.element_list("grouplikes"), instance.scalar_list("coefficients"))
    else:
        raise BadParameter("give --chars, or an instance with grouplikes and unipotents or coefficients")
    return result.to_dict(), result.passed


def run_verify(args, config) -> Payload:
    seed = int(config.get("seed", DEFAULT_SEED))
    results = run_suites(config.get("suite") or "all", seed, config.get("suite_cases"), bool(config.get("progress")))
    print_summary(results)
    payload = {"seed": seed, "suites": {result.name: result.to_dict() for result in results}}
    return payload, all(result.passed for result in results)


HANDLERS = {
    "delta": run_delta,
    "conv": run_conv,
    "unipotent": run_unipotent,
    "mobius": run_mobius,
    "star": run_star,
    "character": run_character,
    "verify": run_verify,
    "independence": run_independence,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else EXIT_INPUT_ERROR

    try:
        config = merge_config(args)
        payload, ok = HANDLERS[args.command](args, config)
    except (CoalgebraError, OSError, yaml.YAMLError) as error:
        report(f"coalg {args.command}: {type(error).__name__}: {error}")
        return EXIT_INPUT_ERROR

    print(json.dumps(payload, sort_keys=True))
    if not ok:
        report(f"coalg {args.command}: check failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
