"""Reading input JSON files and writing canonical JSON reports."""

from braidfold.algebra.cartan import CartanDatum, validate_cartan, \
    minimal_symmetrizer, finite_type
from braidfold.algebra.freealg import Element
from braidfold.quiver.quiver import QuiverAut
from braidfold.exceptions import InvalidInputError

from typing import Dict, Union
import json
import logging
import os
import sys


def canonical_dumps(data) -> str:
    """JSON text with sorted keys and fixed separators, newline-terminated."""
    return json.dumps(data, sort_keys=True, separators=(',', ':')) + '\n'


def load_json(path: str):
    """Parse a JSON file, turning every failure into an input error."""
    path = os.path.expanduser(path)
    if not os.path.isfile(path):
        raise InvalidInputError(f"The file {path} is not accessible.")
    logging.info(f"Loading {path}")
    with open(path, 'r') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"{path} is not valid JSON: {e}")


def datum_from_json(data: Dict) -> CartanDatum:
    """Cartan datum from {"A": ..., "eps": ...} or {"type": "B", "rank": 3}.

    When "eps" is omitted the minimal symmetrizers are used.

    """
    if not isinstance(data, dict):
        raise InvalidInputError("Cartan datum JSON must be an object.")
    if "type" in data:
        try:
            return finite_type(str(data["type"]), int(data["rank"]))
        except (KeyError, ValueError, AssertionError) as e:
            raise InvalidInputError(f"Bad finite-type datum {data}: {e}")
    if "A" not in data:
        raise InvalidInputError("Cartan datum JSON is missing key 'A'.")
    eps = data.get("eps")
    if eps is None:
        try:
            eps = minimal_symmetrizer(data["A"])
        except InvalidInputError:
            raise
        except (TypeError, ValueError, IndexError):
            raise InvalidInputError(f"Cartan matrix {data['A']} is malformed.")
    return validate_cartan(data["A"], eps)


def read_datum(path: str) -> CartanDatum:
    return datum_from_json(load_json(path))


def read_quiver(path: str) -> QuiverAut:
    data = load_json(path)
    if not isinstance(data, dict):
        raise InvalidInputError("Quiver JSON must be an object.")
    return QuiverAut.from_json(data)


def read_element(path: str, datum: CartanDatum) -> Element:
    data = load_json(path)
    if not isinstance(data, dict):
        raise InvalidInputError("Element JSON must be an object.")
    return Element.from_json(datum, data)


def write_report(report, output: Union[str, None] = '-'):
    """Write a report as canonical JSON to a file, or stdout for '-'."""
    text = canonical_dumps(report)
    if output is None or output == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    output = os.path.expanduser(output)
    with open(output, 'w') as f:
        f.write(text)
    logging.info(f"Report written to {output}")
