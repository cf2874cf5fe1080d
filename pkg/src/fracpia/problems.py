"""Problem-file I/O.

A problem is a UTF-8 JSON document:

    {
      "k": 2,
      "alphas": ["7/10", "9/10"],
      "init": [0.0, 1.0],
      "rhs": [
        [{"coeff": 1.0, "t_exp": "0", "powers": [1, 0]},
         {"coeff": 1.0, "t_exp": "0", "powers": [0, 1]}],
        [{"coeff": -1.0, "t_exp": "0", "powers": [1, 0]},
         {"coeff": 1.0, "t_exp": "0", "powers": [0, 1]}]
      ],
      "pia": {"iterations": 5, "prune_threshold": 1e-15, "term_cap": 10000}
    }

Orders and time exponents are rational *strings* ("7/10"), parsed exactly;
integer JSON numbers are also accepted for them, but non-integer floats are
rejected so that a value like 0.7 can never silently turn into its binary
approximation.  The optional "pia" object fills a ``PiaConfig``.

``save_problem`` writes this same canonical form, and a load/save/load round
trip reproduces the system exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .exceptions import ProblemError
from .pia import PiaConfig
from .system import FdeSystem, RhsExpr, RhsMonomial

_BUNDLED = ("example1.fde", "example2.fde")


def bundled_problem_path(name):
    """Path to a bundled problem file; ``name`` may omit the .fde suffix."""
    filename = name if name.endswith(".fde") else name + ".fde"
    if filename not in _BUNDLED:
        raise ProblemError(f"no bundled problem named {name!r} (have {', '.join(_BUNDLED)})")
    return resources.files("fracpia.data").joinpath(filename)


def _parse_rational(value, where):
    if isinstance(value, bool):
        raise ProblemError(f"{where}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise ProblemError(
            f"{where}: non-integer numbers are ambiguous in binary; "
            f'write {value!r} as a rational string like "7/10"'
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemError(f"{where}: not a rational: {value!r}") from exc
    raise ProblemError(f"{where}: expected a rational string, got {type(value).__name__}")


def _expect(doc, field, kind, where="problem"):
    if field not in doc:
        raise ProblemError(f"{where}: missing field {field!r}")
    value = doc[field]
    if not isinstance(value, kind):
        raise ProblemError(
            f"{where}.{field}: expected {kind.__name__}, got {type(value).__name__}"
        )
    return value


def load_problem(path):
    """Read a problem file; returns ``(FdeSystem, PiaConfig)``.

    Raises ``ProblemError`` with field context on malformed input, including
    any violations reported by ``FdeSystem.validate``.
    """
    try:
        if hasattr(path, "read_text"):
            text = path.read_text(encoding="utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ProblemError(f"cannot read problem file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(
            f"problem file {path} is not valid JSON "
            f"(line {exc.lineno}, column {exc.colno}: {exc.msg})"
        ) from exc
    if not isinstance(doc, dict):
        raise ProblemError(f"problem file {path}: top level must be an object")

    k = _expect(doc, "k", int)
    if k < 1:
        raise ProblemError(f"problem.k: must be >= 1, got {k}")
    alphas = _expect(doc, "alphas", list)
    init = _expect(doc, "init", list)
    rhs_doc = _expect(doc, "rhs", list)
    for field, values in (("alphas", alphas), ("init", init), ("rhs", rhs_doc)):
        if len(values) != k:
            raise ProblemError(f"problem.{field}: expected {k} entries, got {len(values)}")

    orders = [_parse_rational(a, f"problem.alphas[{i}]") for i, a in enumerate(alphas)]
    for i, c in enumerate(init):
        if not isinstance(c, (int, float)) or isinstance(c, bool):
            raise ProblemError(f"problem.init[{i}]: expected a number, got {c!r}")

    rhs = []
    for i, expr_doc in enumerate(rhs_doc):
        where = f"problem.rhs[{i}]"
        if not isinstance(expr_doc, list):
            raise ProblemError(f"{where}: expected an array of monomials")
        monomials = []
        for j, mono in enumerate(expr_doc):
            mwhere = f"{where}[{j}]"
            if not isinstance(mono, dict):
                raise ProblemError(f"{mwhere}: expected a monomial object")
            coeff = _expect(mono, "coeff", (int, float), mwhere)
            powers = _expect(mono, "powers", list, mwhere)
            if len(powers) != k:
                raise ProblemError(f"{mwhere}.powers: expected {k} entries, got {len(powers)}")
            if not all(isinstance(p, int) and not isinstance(p, bool) for p in powers):
                raise ProblemError(f"{mwhere}.powers: entries must be integers")
            t_exp = _parse_rational(mono.get("t_exp", 0), f"{mwhere}.t_exp")
            try:
                monomials.append(RhsMonomial(float(coeff), t_exp, tuple(powers)))
            except ValueError as exc:
                raise ProblemError(f"{mwhere}: {exc}") from exc
        rhs.append(RhsExpr(monomials))

    try:
        system = FdeSystem(orders=tuple(orders), rhs=tuple(rhs), init=tuple(init))
    except ValueError as exc:
        raise ProblemError(f"problem file {path}: {exc}") from exc
    violations = system.validate()
    if violations:
        raise ProblemError(f"problem file {path}: " + "; ".join(violations))

    pia_doc = doc.get("pia", {})
    if not isinstance(pia_doc, dict):
        raise ProblemError("problem.pia: expected an object")
    known = {"iterations", "prune_threshold", "term_cap"}
    unknown = set(pia_doc) - known
    if unknown:
        raise ProblemError(f"problem.pia: unknown fields {sorted(unknown)}")
    try:
        config = PiaConfig(**pia_doc)
    except (TypeError, ValueError) as exc:
        raise ProblemError(f"problem.pia: {exc}") from exc
    return system, config


def save_problem(path, system: FdeSystem, config: PiaConfig | None = None):
    """Write the canonical JSON form of a system (and optional config)."""
    doc = {
        "k": system.size,
        "alphas": [str(a) for a in system.orders],
        "init": list(system.init),
        "rhs": [
            [
                {"coeff": m.coeff, "t_exp": str(m.t_exp), "powers": list(m.powers)}
                for m in expr.monomials
            ]
            for expr in system.rhs
        ],
    }
    if config is not None:
        doc["pia"] = {
            "iterations": config.iterations,
            "prune_threshold": config.prune_threshold,
            "term_cap": config.term_cap,
        }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
