"""Exact ideal membership for polynomials in s and Gamma(s + a_k)."""

import json

from . import _core
from ._core import (
    DomainError,
    ParseError,
    SamplingError,
    ShiftSystem,
    UsageError,
    canonical,
    evaluate,
    gamma,
    normal_form,
)

__all__ = [
    "DomainError",
    "ParseError",
    "SamplingError",
    "ShiftSystem",
    "UsageError",
    "canonical",
    "certify",
    "decide",
    "evaluate",
    "gamma",
    "is_member",
    "normal_form",
    "selftest",
    "verify",
]


def _system(shifts):
    return shifts if isinstance(shifts, ShiftSystem) else ShiftSystem(shifts)


def decide(shifts, poly):
    """Verdict for ``poly`` as a dict, including a certificate when it is a member."""
    return json.loads(_core.decide(_system(shifts), poly))


def is_member(shifts, poly):
    return decide(shifts, poly)["verdict"] == "member"


def certify(shifts, poly):
    return json.loads(_core.certify(_system(shifts), poly))


def verify(shifts, poly, samples=20, seed=0, tol=1e-8):
    """Numeric cross-check of the symbolic verdict at seeded sample points."""
    return json.loads(_core.verify(_system(shifts), poly, samples, seed, tol))


def selftest(seed=0):
    return json.loads(_core.selftest(seed))
