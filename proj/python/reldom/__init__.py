"""Exact computations for bound quiver algebras: relative (co)dominant
dimensions, canonical tilting-cotilting modules, and relative
Auslander-Gorenstein pairs.

Every function shells into the same engine as the ``reldom`` CLI and returns
the parsed JSON report. Dimensions are exact: integers, the string ``"inf"``,
or a lower bound ``">=<cap>"`` when an open-ended computation hit its cap.
"""

import json

from ._reldom import run

__all__ = [
    "ReldomError",
    "Undetermined",
    "analyze",
    "cover",
    "domdim",
    "pair",
    "reproduce",
    "run",
    "tilt",
    "unique",
]


class ReldomError(RuntimeError):
    """An invocation failed (bad input or a failed certificate)."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class Undetermined(ReldomError):
    """The computation ran out of budget before reaching a certificate."""


def _common(field=None, cap=None, seed=None, cache_dir=None, mod=()):
    args = ["--format", "json"]
    if field is not None:
        args += ["--field", str(field)]
    if cap is not None:
        args += ["--cap", str(cap)]
    if seed is not None:
        args += ["--seed", str(seed)]
    if cache_dir is not None:
        args += ["--cache-dir", str(cache_dir)]
    for m in mod:
        args += ["--mod", str(m)]
    return args


def _invoke(args, ok_codes=(0,)):
    code, out, err = run(args)
    if code == 3:
        raise Undetermined(code, err.strip() or "undetermined at cap")
    if code not in ok_codes:
        raise ReldomError(code, err.strip() or out.strip() or f"exit code {code}")
    return json.loads(out), code


def analyze(alg, **kw):
    """Homological dimensions of the algebra in ``alg`` (an .alg file path)."""
    report, _ = _invoke(["analyze", str(alg)] + _common(**kw))
    return report


def domdim(alg, module, wrt, co=False, **kw):
    """Relative (co)dominant dimension of ``module`` with respect to ``wrt``."""
    args = ["domdim", str(alg), "--module", module, "--wrt", wrt]
    if co:
        args.append("--co")
    report, _ = _invoke(args + _common(**kw))
    return report


def pair(alg, wrt, **kw):
    """Classify the pair (algebra, ``wrt``)."""
    report, _ = _invoke(["pair", str(alg), "--wrt", wrt] + _common(**kw))
    return report


def tilt(alg, wrt, d, **kw):
    """The canonical tilting-cotilting module for the pair at parameter ``d``."""
    report, _ = _invoke(["tilt", str(alg), "--wrt", wrt, "--d", str(d)] + _common(**kw))
    return report


def unique(alg, wrt, d, pool=None, **kw):
    """Brute-force uniqueness search over a pool of indecomposables."""
    args = ["unique", str(alg), "--wrt", wrt, "--d", str(d)]
    for p in pool or ():
        args += ["--pool", p]
    report, _ = _invoke(args + _common(**kw))
    return report


def cover(alg, wrt, d, testset=None, **kw):
    """Ext comparison across the Schur functor Hom(Q, -)."""
    args = ["cover", str(alg), "--wrt", wrt, "--d", str(d)]
    for t in testset or ():
        args += ["--testset", t]
    report, code = _invoke(args + _common(**kw), ok_codes=(0, 1))
    report["all_checks_pass"] = code == 0
    return report


def reproduce(fixtures=None, **kw):
    """Run the bundled worked-example suite; returns the full check list."""
    args = ["reproduce"]
    if fixtures is not None:
        args += ["--fixtures", str(fixtures)]
    report, code = _invoke(args + _common(**kw), ok_codes=(0, 1))
    report["all_checks_pass"] = code == 0
    return report
