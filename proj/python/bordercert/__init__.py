import json

from ._core import (
    ArgumentError,
    InternalError,
    OrderIdeal,
    __version__,
    gamma_formula,
    modify,
    shape_to_signature,
    tangent_dimension,
)
from . import _core


def _sig(signature):
    if isinstance(signature, str):
        return signature
    return ",".join(str(int(v)) for v in signature)


def inspect(signature):
    return json.loads(_core.inspect_json(_sig(signature)))


def certify(signature, trials=3, seed=1, field="exact", timings=True):
    return json.loads(_core.certify_json(_sig(signature), trials, seed, field, timings=timings))


__all__ = [
    "ArgumentError",
    "InternalError",
    "OrderIdeal",
    "certify",
    "gamma_formula",
    "inspect",
    "modify",
    "shape_to_signature",
    "tangent_dimension",
]
