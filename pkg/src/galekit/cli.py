"""Command-line front end: JSON files in, sorted-key JSON reports out.

Exit status is 0 for a positive verdict (or plain output), 1 for a negative
verdict and 2 for errors, which are printed as {"error": code, "detail": text}.
"""

import argparse
import json
import sys
import time

from . import fans, lvmb, quadrics, retraction, toric
from .complexes import SimplicialComplex
from .cones import relint_contains
from .errors import GalekitError, BAD_INPUT, GALE_MISMATCH, NOT_INTEGRAL
from .gale import VectorConfiguration, PointConfiguration, gale_dual
from .linalg import Matrix
from .rational import to_rat, format_rat
from .sets import sorted_sets
from .snf import smith_normal_form

POSITIVE, NEGATIVE, FAILURE = 0, 1, 2


# ---------------------------------------------------------------- readers

def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GalekitError(BAD_INPUT, f"{path}: {exc}") from exc


def _field(doc, key, path):
    if key not in doc:
        raise GalekitError(BAD_INPUT, f"{path}: missing key {key!r}")
    return doc[key]


def read_config(path):
    doc = _load(path)
    dim = int(_field(doc, "dim", path))
    columns = [[to_rat(x) for x in col] for col in _field(doc, "columns", path)]
    cfg = VectorConfiguration(dim, tuple(columns), str(doc.get("name", "")))
    if doc.get("lattice") and not cfg.is_integral():
        raise GalekitError(NOT_INTEGRAL, f"{path}: lattice configuration has fractions")
    return cfg


def read_points(path):
    cfg = read_config(path)
    return PointConfiguration(cfg.dim, cfg.columns)


def read_complex(path):
    doc = _load(path)
    return SimplicialComplex(int(_field(doc, "m", path)),
                             tuple(frozenset(f) for f in _field(doc, "facets", path)))


def read_family(path, config):
    """Explicit ``members`` are used as given; ``facets`` are closed under faces."""
    doc = _load(path)
    if "members" in doc:
        return frozenset(frozenset(s) for s in doc["members"])
    return fans.face_closure(_field(doc, "facets", path), config)


def read_polyhedron(path):
    doc = _load(path)
    cfg = read_config(path)
    return fans.Polyhedron(cfg, tuple(to_rat(x) for x in _field(doc, "b", path)))


def read_datum(path):
    doc = _load(path)
    m, k = int(_field(doc, "m", path)), int(_field(doc, "k", path))
    pts = [[to_rat(x) for x in p] for p in _field(doc, "points", path)]
    points = PointConfiguration(k - 1, tuple(pts))
    return lvmb.LVMBDatum(m, k, _field(doc, "E", path), points)


def read_zmat(path):
    doc = _load(path)
    rows = _field(doc, "rows", path) if isinstance(doc, dict) else doc
    return Matrix.from_rows(rows, integral=True)


def parse_vector(text):
    try:
        return tuple(to_rat(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, TypeError) as exc:
        raise GalekitError(BAD_INPUT, f"bad rational vector {text!r}") from exc


def parse_floats(text, as_complex):
    conv = complex if as_complex else float
    try:
        return [conv(x.strip().replace(" ", "")) for x in text.split(",")]
    except ValueError as exc:
        raise GalekitError(BAD_INPUT, f"bad numeric vector {text!r}") from exc


# ---------------------------------------------------------------- writers

def rats(values):
    return [format_rat(x) for x in values]


def sets_json(family):
    return [list(t) for t in sorted_sets(family)]


def config_json(cfg):
    return {"name": cfg.label, "dim": cfg.dim, "columns": [rats(c) for c in cfg.columns]}


def float17(x):
    return float(f"{x:.17g}")


# ---------------------------------------------------------------- commands

def cmd_gale(args):
    return POSITIVE, config_json(gale_dual(read_config(args.config)))


def _fan_inputs(args):
    config = read_config(args.a)
    if getattr(args, "general", None):
        collection = read_family(args.general, config)
    elif getattr(args, "complex", None):
        collection = read_complex(args.complex)
    else:
        raise GalekitError(BAD_INPUT, "give --complex or --general")
    gamma = read_config(args.gamma) if getattr(args, "gamma", None) else None
    return fans.FanData(collection, config), gamma


def cmd_check_fan(args):
    fd, gamma = _fan_inputs(args)
    verdict = fans.is_fan_data(fd, gamma)
    report = {"verdict": "fan" if verdict.is_fan else "not_fan"}
    if not verdict.is_fan:
        first, second = verdict.pair
        report.update(pair=[sorted(first), sorted(second)], reason=verdict.reason)
        if verdict.witness is not None:
            for s in verdict.pair:
                if not relint_contains(fd.cone(s), verdict.witness):
                    raise GalekitError(GALE_MISMATCH, "overlap witness failed re-verification")
            report["witness"] = rats(verdict.witness)
    return (POSITIVE if verdict.is_fan else NEGATIVE), report


def cmd_complete(args):
    fd, gamma = _fan_inputs(args)
    ok = fans.is_complete(fd, gamma)
    return (POSITIVE if ok else NEGATIVE), {"verdict": "complete" if ok else "incomplete"}


def cmd_polytopal(args):
    fd, gamma = _fan_inputs(args)
    delta = fans.is_polytopal(fd, gamma)
    if delta is None:
        return NEGATIVE, {"delta": "none", "verdict": "not_polytopal"}
    return POSITIVE, {"delta": rats(delta), "verdict": "polytopal"}


def cmd_normal_fan(args):
    poly = read_polyhedron(args.poly)
    gamma = read_config(args.gamma) if args.gamma else None
    fd, generic = fans.normal_fan(poly, gamma)
    report = {"generic": generic, "members": sets_json(fd.members()),
              "maximal_cones": sets_json(fd.maximal_members())}
    if generic:
        cx = fd.collection
        report["dual_complex"] = {"m": cx.m, "facets": sets_json(cx.facets),
                                  "ghost_vertices": sorted(cx.ghost_vertices)}
    return POSITIVE, report


def _cone_json(cone, equations, inequalities):
    return {"generators": [rats(g) for g in cone.generators],
            "equations": [rats(e) for e in equations],
            "inequalities": [rats(h) for h in inequalities]}


def cmd_gkz(args):
    gamma = read_config(args.gamma)
    chamber = fans.gkz_chamber(gamma, parse_vector(args.delta))
    report = _cone_json(chamber.cone, chamber.equations, chamber.inequalities)
    report["supports"] = sets_json(chamber.supports)
    return POSITIVE, report


def _faces_inputs(args):
    config = read_config(args.a)
    family = read_family(args.faces, config)
    gamma = read_config(args.gamma) if getattr(args, "gamma", None) else None
    return config, family, gamma


def cmd_nef(args):
    config, family, gamma = _faces_inputs(args)
    cone = toric.nef_cone(family, config, gamma)
    return POSITIVE, _cone_json(cone, *toric.nef_cone_hrep(cone))


def cmd_ample(args):
    config, family, gamma = _faces_inputs(args)
    ok = toric.ample_contains(family, config, parse_vector(args.delta), gamma)
    return (POSITIVE if ok else NEGATIVE), {"verdict": "ample" if ok else "not_ample"}


def cmd_projective(args):
    config, family, gamma = _faces_inputs(args)
    ok = toric.is_projective(family, config, gamma)
    return (POSITIVE if ok else NEGATIVE), {"verdict": "projective" if ok else "not_projective"}


def cmd_cartier(args):
    config, family, _ = _faces_inputs(args)
    ld = toric.lattice_span(config)
    ok = toric.is_cartier(family, config, ld, parse_vector(args.b))
    return (POSITIVE if ok else NEGATIVE), {"verdict": "cartier" if ok else "not_cartier"}


def cmd_quadrics(args):
    system = quadrics.build_quadrics(read_config(args.gamma), parse_vector(args.delta))
    return (POSITIVE if system.nondegenerate else NEGATIVE), system.to_json()


def cmd_link(args):
    return POSITIVE, quadrics.link_system(read_points(args.points)).to_json()


def cmd_lvmb(args):
    datum = read_datum(args.datum)
    report = lvmb.validate_lvmb(datum)
    agreed = lvmb.lvmb_fan_crosscheck(datum)
    body = {"minimal_gen": report.minimal_gen, "imbrication": report.imbrication,
            "substitute_existence": report.substitute_existence, "lvmb": agreed}
    return (POSITIVE if agreed else NEGATIVE), body


def cmd_is_lvm(args):
    cert = lvmb.lvm_certificate(read_datum(args.datum))
    body = {"lvm": cert.is_lvm, "origin_presentation": cert.origin_presentation}
    if cert.shift is not None:
        body["shift"] = rats(cert.shift)
    return (POSITIVE if cert.is_lvm else NEGATIVE), body


def cmd_euler(args):
    return POSITIVE, {"euler_characteristic": quadrics.euler_characteristic_RK(
        read_complex(args.complex))}


def cmd_retract(args):
    fd = fans.FanData(read_complex(args.complex), read_config(args.a))
    gamma = read_config(args.gamma) if args.gamma else None
    engine = retraction.Retraction(fd, gamma)
    point = parse_floats(args.point, args.complex_coords)
    if args.complex_coords:
        out = engine.complex(point)
        coords = [[float17(c.real), float17(c.imag)] for c in out.coords]
    else:
        out = engine.real(point)
        coords = [float17(c) for c in out.coords]
    return POSITIVE, {"point": coords, "face": sorted(out.face), "zero_set": sorted(out.zero_set)}


def cmd_snf(args):
    mat = read_zmat(args.zmat)
    u, s, v = smith_normal_form(mat)
    if u @ mat @ v != s:
        raise GalekitError(GALE_MISMATCH, "Smith form failed re-verification")
    return POSITIVE, {"U": u.tolist(), "S": s.tolist(), "V": v.tolist()}


def cmd_stabilizer(args):
    gamma = read_config(args.gamma)
    indices = frozenset(int(x) for x in args.i.split(",") if x.strip())
    return POSITIVE, {"dim": fans.stabilizer_dim(gamma, indices),
                      "order": toric.stabilizer_order(gamma, indices)}


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    """Usage errors become BAD_INPUT reports instead of argparse's own exit."""

    def error(self, message):
        raise GalekitError(BAD_INPUT, message)


def build_parser():
    parser = _Parser(prog="galekit", description=__doc__.splitlines()[0])
    parser.add_argument("--timings", action="store_true", help="add wall-clock seconds")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *options):
        """Options are flags; a trailing '!' marks a required one."""
        p = sub.add_parser(name)
        p.error = parser.error
        for opt in options:
            if opt.startswith("-"):
                p.add_argument(opt.rstrip("!"), required=opt.endswith("!"))
            else:
                p.add_argument(opt)
        p.set_defaults(func=func)
        return p

    add("gale", cmd_gale, "config")
    for name, func in (("check-fan", cmd_check_fan), ("complete", cmd_complete),
                       ("polytopal", cmd_polytopal)):
        add(name, func, "--a!", "--complex", "--general", "--gamma")
    add("normal-fan", cmd_normal_fan, "--poly!", "--gamma")
    add("gkz", cmd_gkz, "--gamma!", "--delta!")
    add("nef", cmd_nef, "--a!", "--faces!", "--gamma")
    add("ample", cmd_ample, "--a!", "--faces!", "--gamma", "--delta!")
    add("projective", cmd_projective, "--a!", "--faces!", "--gamma")
    add("cartier", cmd_cartier, "--a!", "--faces!", "--b!")
    add("quadrics", cmd_quadrics, "--gamma!", "--delta!")
    add("link", cmd_link, "--points!")
    add("lvmb", cmd_lvmb, "--datum!")
    add("is-lvm", cmd_is_lvm, "--datum!")
    add("euler", cmd_euler, "--complex!")
    retract = add("retract", cmd_retract, "--a!", "--complex!", "--gamma", "--point!")
    retract.add_argument("--complex-coords", action="store_true")
    add("snf", cmd_snf, "zmat")
    add("stabilizer", cmd_stabilizer, "--gamma!", "--i!")
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except GalekitError as exc:
        return _emit(out, {"error": exc.code, "detail": exc.detail}, FAILURE)
    try:
        status, body = args.func(args)
    except GalekitError as exc:
        status, body = FAILURE, {"error": exc.code, "detail": exc.detail}
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        # structurally malformed input files surface here
        status, body = FAILURE, {"error": BAD_INPUT, "detail": f"{type(exc).__name__}: {exc}"}
    if args.timings:
        body["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    if status != FAILURE:
        body.setdefault("command", args.command)
    return _emit(out, body, status)


def _emit(out, body, status):
    out.write(json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
