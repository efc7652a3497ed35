import sys
from pathlib import Path

ROOT_DIR = Path(__file__).resolve().parents[2]
INSTANCE_DIR = ROOT_DIR / "instances"
CONFIG_FILE = ROOT_DIR / "coalgebra_config.yaml"

DEFAULT_HORIZON = 12
DEFAULT_TRUNCATION = 12
DEFAULT_SEED = 42

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

CERTIFIED = "Certified"
HORIZON_ONLY = "HorizonOnly"


def report(*message):
    """
    Prints a diagnostic line on standard error; standard output carries JSON only.
    """
    print(*message, file=sys.stderr)


def stylish_stat_print(cases):
    """
    Reports each failing case as an indented block of its context values.
    """
    for name, context in cases.items():
        report(f"{name}:")
        for key in sorted(context):
            report(f"    {key} = {context[key]}")
