"""Command-line front end.

Every invocation prints one JSON object ``{"ok", "result", "error"}`` on stdout
and exits 0 (success), 2 (malformed input), 3 (precondition or applicability
failure) or 4 (internal inconsistency).

Classes are JSON integer arrays ``[a, b1, ..., br]`` for ``aH - sum b_i E_i``;
a trailing ``...`` repeats the last entry, so ``"[3,1,...]"`` is ``-K`` on any
model.  ``--model`` takes a path or the name of a shipped fixture.
Finite-field elements are integer codes (base-p digits of the residue
polynomial) or expressions in the Conway root ``g`` such as ``"g^2+1"``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import fixtures
from .adjoint import adjoint_analyze, classify_breaking_cases, fujita_invariant
from .curves import ade_type, enum_minus1_classes, enum_root_classes
from .errors import (
    DelPezzoError,
    InternalInconsistency,
    InvalidInput,
    InvalidModel,
    MismatchedLattice,
    PreconditionFailed,
)
from .ffcover import criteria as ffc
from .ffcover.field import GF
from .ffcover.poly import parse_poly
from .lattice import DivisorClass, format_rational
from .manin import (
    PathologyFlags,
    classify_low_degree,
    component_census,
    excess_family_predicate,
    pathology_from_roots,
    tri,
)
from .surface import (
    SurfaceModel,
    cone_coefficients,
    is_nef,
    nef_decompose,
    zariski_decompose,
)


class NotApplicable(PreconditionFailed):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


# input parsing


def load_model(spec: str) -> SurfaceModel:
    if os.path.exists(spec):
        return SurfaceModel.load(spec)
    name = os.path.basename(spec)
    if name.removesuffix(".json") + ".json" in fixtures.names():
        return SurfaceModel.from_json(fixtures.load(name))
    raise InvalidModel(f"no model file or fixture named {spec!r}")


def parse_class(text: str, r: int | None = None) -> DivisorClass:
    raw = text.strip()
    ellipsis = False
    if raw.startswith("[") and raw.endswith("]"):
        body = raw[1:-1].rstrip().rstrip(",").rstrip()
        if body.endswith("..."):
            ellipsis = True
            raw = "[" + body[:-3].rstrip().rstrip(",") + "]"
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"class {text!r} is not a JSON integer array") from exc
    if not isinstance(data, list) or not data or not all(isinstance(v, int) and not isinstance(v, bool) for v in data):
        raise InvalidInput(f"class {text!r} is not a nonempty JSON integer array")
    if ellipsis:
        if r is None:
            raise InvalidInput("'...' needs a model to fix the length")
        if len(data) > r + 1:
            raise MismatchedLattice(f"class {text!r} is longer than r+1 = {r + 1}")
        data = data + [data[-1]] * (r + 1 - len(data))
    c = DivisorClass.from_json(data)
    if r is not None and c.r != r:
        raise MismatchedLattice(f"class has length {len(data)}, the model needs {r + 1}")
    return c


def rational_json(x: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in x]


def _field(args):
    return GF(args.char, args.ext)


def _element(F, text) -> int:
    if isinstance(text, int) and not isinstance(text, bool):
        return F.check(text)
    s = str(text).strip()
    if s.lstrip("-").isdigit():
        return F.check(int(s))
    c = parse_poly(s, F, ())
    if not c.terms:
        return 0
    return c.coefficient(())


def _vector(F, text: str, n: int) -> list[int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [t for t in text.strip("[]").split(",")]
    if not isinstance(data, list) or len(data) != n:
        raise InvalidInput(f"expected {n} field elements, got {text!r}")
    return [_element(F, v) for v in data]


# commands


def cmd_enum(args):
    fn = enum_minus1_classes if args.kind == "minus1" else enum_root_classes
    classes = fn(args.r)
    out = {"r": args.r, "kind": args.kind, "count": len(classes)}
    if not args.count_only:
        out["classes"] = [c.to_json() for c in classes]
    return out


def cmd_nef(args):
    S = load_model(args.model)
    D = parse_class(args.cls, S.r)
    return {"class": D.to_json(), "nef": is_nef(S, D)}


def cmd_pseff(args):
    S = load_model(args.model)
    D = parse_class(args.cls, S.r)
    lam = cone_coefficients(S, D.coeffs)
    out = {"class": D.to_json(), "pseudo_effective": lam is not None}
    if lam is not None:
        out["certificate"] = [{"generator": g.to_json(), "weight": format_rational(w)}
                              for g, w in zip(S.generators, lam) if w]
    return out


def zariski_json(zd) -> dict:
    return {"positive": rational_json(zd.positive),
            "negative": [{"curve": c.to_json(), "coefficient": format_rational(x)} for c, x in zd.negative]}


def cmd_zariski(args):
    S = load_model(args.model)
    D = parse_class(args.cls, S.r)
    return zariski_json(zariski_decompose(S, D))


def cmd_nefdec(args):
    S = load_model(args.model)
    D = parse_class(args.cls, S.r)
    nd = nef_decompose(S, D)
    if nd.reconstruct() != D:
        raise InternalInconsistency("nef decomposition does not reconstruct the input")
    return nd.to_json()


def cmd_fujita(args):
    S = load_model(args.model)
    L = parse_class(args.cls, S.r)
    if not args.analyze:
        a = fujita_invariant(S, L)
        return {"a": "inf" if a == float("inf") else format_rational(a)}
    res = adjoint_analyze(S, L)
    out = res.to_json()
    out["boundary"] = zariski_json(res.zariski)
    return out


def _flags(args, S) -> PathologyFlags:
    derived = pathology_from_roots(S, args.char)
    given = {k: getattr(args, k) for k in ("type1", "type2", "type3") if getattr(args, k) is not None}
    if not given:
        return derived
    values = {k: tri(given.get(k, getattr(derived, k))) for k in ("type1", "type2", "type3")}
    flags = PathologyFlags(**values, source="asserted")
    flags.validate(args.char, S.degree)
    return flags


def cmd_pathology(args):
    S = load_model(args.model)
    flags = _flags(args, S)
    return {"ade": ade_type(S.effective_roots), "flags": flags.to_json(),
            "excess_family": str(excess_family_predicate(flags))}


def cmd_breaking(args):
    S = load_model(args.model)
    flags = _flags(args, S)
    return {"flags": flags.to_json(), "cases": [c.to_json() for c in classify_breaking_cases(S, args.char, flags)]}


def cmd_lowdeg(args):
    S = load_model(args.model)
    C = parse_class(args.cls, S.r)
    return classify_low_degree(S, C, _flags(args, S)).to_json()


def cmd_census(args):
    S = load_model(args.model)
    beta = parse_class(args.cls, S.r)
    exceptional = args.exceptional
    detection = None
    if args.branch_quartic is not None:
        if args.char != 3 or S.degree != 2:
            raise InvalidInput("--branch-quartic describes a degree 2 model in characteristic 3")
        q4 = parse_poly(args.branch_quartic, GF(3, args.ext))
        detected = ffc.is_klein_branch(q4, max(args.ext, 3))
        detection = {"branch_quartic": str(q4), "klein": detected}
        exceptional = exceptional or detected
    census = component_census(S, args.char, beta, exceptional)
    if not census.applicable:
        raise NotApplicable(census.reason)
    out = census.to_json()
    if detection is not None:
        out["detection"] = detection
    return out


# ffcover commands


def cmd_case2a(args):
    g4 = parse_poly(args.g4, _field(args))
    return {"g4": str(g4), "conditions_hold": ffc.case2a_insep_conditions(g4)}


def cmd_case2b(args):
    g4 = parse_poly(args.g4, _field(args))
    return {"g4": str(g4), "conditions_hold": ffc.case2b_insep_conditions(g4)}


def cmd_case2c(args):
    F = _field(args)
    g4 = parse_poly(args.g4, F)
    b = _element(F, args.b)
    return {"g4": str(g4), "b": b, "c": ffc.case2c_cusp_slope(g4, b)}


def cmd_c4(args):
    F = _field(args)
    S = ffc.CubicSurface(parse_poly(args.cubic, F, ffc.SPACE_VARS))
    out = {"cubic": str(S.equation), "all_cuspidal": ffc.cubic_all_cuspidal_condition(S)}
    if args.z is not None:
        out["z"] = _vector(F, args.z, 4)
        out["c4"] = ffc.cubic_c4(S, out["z"])
    return out


def cmd_flex(args):
    F = _field(args)
    q4 = parse_poly(args.q4, F)
    if args.point is not None:
        pt = _vector(F, args.point, 3)
        m = ffc.tangent_flex_multiplicity(q4, pt)
        return {"point": pt, "multiplicity": "inf" if m == float("inf") else m, "flex": m >= 3}
    return ffc.nonreflexive_sample_test(q4, args.sample_ext or args.ext).to_json()


def cmd_singsearch(args):
    F = _field(args)
    cover = ffc.DoublePlaneCover(parse_poly(args.g2, F), parse_poly(args.g4, F))
    return {"witness": ffc.double_cover_singular_search(cover, args.max_ext), "max_ext": args.max_ext}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="delpezzo", description="Curve classes and rational curves on del Pezzo surfaces.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def model_cmd(name, fn, help_, cls=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--model", required=True, help="model JSON path or fixture name")
        if cls:
            sp.add_argument("--class", dest="cls", required=True, help='class as "[a,b1,...,br]"')
        sp.set_defaults(func=fn)
        return sp

    def flag_opts(sp, char_required=True):
        sp.add_argument("--char", type=int, required=char_required, default=0)
        for t in ("type1", "type2", "type3"):
            sp.add_argument(f"--{t}", choices=["yes", "no", "unknown"], default=None)

    sp = sub.add_parser("enum", help="(-1)-classes or (-2)-roots")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--kind", choices=["minus1", "roots"], default="minus1")
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_enum)

    model_cmd("nef", cmd_nef, "nefness test")
    model_cmd("pseff", cmd_pseff, "pseudo-effectivity with a certificate")
    model_cmd("zariski", cmd_zariski, "Zariski decomposition")
    model_cmd("nefdec", cmd_nefdec, "decompose a nef class into pulled-back anticanonical classes")
    sp = model_cmd("fujita", cmd_fujita, "Fujita invariant a(S, L)")
    sp.add_argument("--analyze", action="store_true", help="also report rigidity, case label and fiber")
    sp = model_cmd("lowdeg", cmd_lowdeg, "classify a class of anticanonical degree at most 2")
    flag_opts(sp, char_required=False)
    flag_opts(model_cmd("pathology", cmd_pathology, "Type 1/2/3 flags", cls=False))
    flag_opts(model_cmd("breaking", cmd_breaking, "compatible breaking-map cases", cls=False))
    sp = model_cmd("census", cmd_census, "components of rational curves in a nef class")
    sp.add_argument("--char", type=int, required=True)
    sp.add_argument("--exceptional", action="store_true", help="the surface is the excluded char-3 Klein double plane")
    sp.add_argument("--branch-quartic", default=None, help="branch quartic of a degree 2 model; runs the Klein detector")
    sp.add_argument("--ext", type=int, default=1, help="field of definition F_{3^ext} for --branch-quartic")

    ff = sub.add_parser("ffcover", help="finite-field criteria")
    ffsub = ff.add_subparsers(dest="criterion", parser_class=_Parser)
    ffsub.required = True

    def ff_cmd(name, fn, help_, char=2):
        sp = ffsub.add_parser(name, help=help_)
        sp.add_argument("--char", type=int, default=char)
        sp.add_argument("--ext", type=int, default=1)
        sp.set_defaults(func=fn)
        return sp

    ff_cmd("case2a", cmd_case2a, "coefficient conditions with g2 = yz - x^2").add_argument("--g4", required=True)
    ff_cmd("case2b", cmd_case2b, "coefficient conditions with g2 = yz").add_argument("--g4", required=True)
    sp = ff_cmd("case2c", cmd_case2c, "cusp slope with g2 = y^2")
    sp.add_argument("--g4", required=True)
    sp.add_argument("--b", required=True)
    sp = ff_cmd("c4", cmd_c4, "cubic surface in x0..x3")
    sp.add_argument("--cubic", required=True)
    sp.add_argument("--z", default=None, help="four field elements")
    sp = ff_cmd("flex", cmd_flex, "tangent multiplicity or non-reflexivity sampling", char=3)
    sp.add_argument("--q4", required=True)
    sp.add_argument("--point", default=None, help="three field elements; omit to sample all points")
    sp.add_argument("--sample-ext", type=int, default=None)
    sp = ff_cmd("singsearch", cmd_singsearch, "search for singular points of w^2 + w g2 + g4")
    sp.add_argument("--g2", required=True)
    sp.add_argument("--g4", required=True)
    sp.add_argument("--max-ext", type=int, default=3)
    return p


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, InternalInconsistency):
        return 4
    if isinstance(exc, InvalidInput):
        return 2
    if isinstance(exc, PreconditionFailed):
        return 3
    return 4


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
        envelope = {"ok": True, "result": result, "error": None}
        code = 0
    except (DelPezzoError, ZeroDivisionError, ValueError) as exc:
        code = _exit_code(exc) if isinstance(exc, DelPezzoError) else 2
        envelope = {"ok": False, "result": None,
                    "error": {"code": type(exc).__name__, "message": str(exc)}}
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    stdout.write(json.dumps(envelope, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
