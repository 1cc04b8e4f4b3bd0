"""Declarative scenario files: named fixtures plus an ordered command list.

A scenario is one JSON document::

    {
      "laminations": {"R": [["0", "1/2"], ["1/4", "1/2"]]},
      "maps": {"phi": {"collapse": ["1/4", "1/2"]}},
      "commands": [{"op": "pullback", "map": "phi", "lamination": "R", "as": "P"}]
    }

Rationals are written as ``"p/q"`` strings.  Every declaration is built and
validated before the first command runs; a failure there is a validation
error.  Commands run in order and may refer to earlier results by their
``"as"`` names.
"""

import json
import time
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

from . import dynamics, laminations, leafspace, monotone, oracles, universal
from .circle import Chord, chords_relate, cyclic_order, point
from .generators import random_lamination, random_monotone_map
from .laminations import LaminarRelation
from .monotone import MonotoneMap
from .svg import render_svg

EXIT_OK, EXIT_CHECK, EXIT_INVALID = 0, 1, 2

SECTIONS = ("points", "laminations", "maps", "homeos", "posets", "markers", "charts")


class ScenarioError(ValueError):
    """Parse or validation failure; ``detail`` goes into the report."""

    def __init__(self, message, **detail):
        super().__init__(message)
        self.detail = detail


class CheckFailed(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# -- serialization --------------------------------------------------------------


def to_jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool) or v is None or isinstance(v, (int, float, str)):
        return v
    if isinstance(v, Chord):
        return [str(v.a), str(v.b)]
    if isinstance(v, (LaminarRelation, MonotoneMap, leafspace.NadicLeafPoint)):
        return v.to_json()
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, laminations.Gap):
        return {"vertices": [str(p) for p in v.vertices], "sides": v.n_sides, "polygon": v.is_polygon}
    if isinstance(v, dynamics.IntervalEstimate):
        return {"lo": str(v.lo), "hi": str(v.hi)}
    if isinstance(v, dynamics.FixedPoint):
        return {"p": str(v.p), "kind": v.kind.value}
    if isinstance(v, universal.UniversalCircle):
        return {"top": v.top, "phi": {k: m.to_json() for k, m in sorted(v.phi.items())}}
    if is_dataclass(v):
        return {f.name: to_jsonable(getattr(v, f.name)) for f in fields(v)}
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [to_jsonable(x) for x in v]
        return sorted(items, key=json.dumps) if isinstance(v, (set, frozenset)) else items
    return repr(v)


def error_detail(e: Exception) -> dict:
    out = {"type": type(e).__name__, "message": str(e)}
    for attr in ("l1", "l2", "witness", "word", "point", "mu", "nu", "lam"):
        if hasattr(e, attr):
            out[attr] = to_jsonable(getattr(e, attr))
    return out


# -- declarations ---------------------------------------------------------------


def _rational(x) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ScenarioError(f"not a rational: {x!r}") from None


def _lamination(form, env) -> LaminarRelation:
    if isinstance(form, str):
        return env.get("laminations", form)
    if isinstance(form, dict):
        if "hull" in form:
            return laminations.hull_boundary(_rational(p) for p in form["hull"])
        if "sticky" in form:
            n, cap = form["sticky"]
            return dynamics.sticky_build(int(n), int(cap))
        if "random" in form:
            r = form["random"]
            return random_lamination(int(r["seed"]), int(r.get("max_leaves", 12)), int(r.get("denominator", 48)))
        if "leaves" in form:
            form = form["leaves"]
        else:
            raise ScenarioError(f"unknown lamination form {sorted(form)}")
    return LaminarRelation(Chord(_rational(a), _rational(b)) for a, b in form)


def _pairs(form):
    return [(_rational(x), _rational(y)) for x, y in form]


def _map(form, env) -> MonotoneMap:
    if isinstance(form, str):
        return env.get("maps", form)
    if isinstance(form, dict):
        if "identity" in form:
            return MonotoneMap.identity()
        if "rotation" in form:
            return MonotoneMap.rotation(_rational(form["rotation"]))
        if "collapse" in form:
            return MonotoneMap.collapse(*(_rational(x) for x in form["collapse"]))
        if "compose" in form:
            outer, inner = form["compose"]
            return monotone.compose(_map(outer, env), _map(inner, env))
        if "random" in form:
            r = form["random"]
            return random_monotone_map(int(r["seed"]), int(r.get("max_flats", 6)))
        if "pairs" in form:
            form = form["pairs"]
        else:
            raise ScenarioError(f"unknown map form {sorted(form)}")
    return MonotoneMap(_pairs(form))


def _homeo(form, env) -> dynamics.PLCircleHomeo:
    if isinstance(form, str):
        return env.get("homeos", form)
    if isinstance(form, dict):
        if "rotation" in form:
            return dynamics.rotation(_rational(form["rotation"]))
        if "pseudo_anosov" in form:
            return dynamics.pseudo_anosov(int(form["pseudo_anosov"]))
        if "north_south" in form:
            return dynamics.north_south()
        if "alternating" in form:
            return dynamics.alternating_homeo([_rational(p) for p in form["alternating"]],
                                              bool(form.get("first_repelling", True)))
        if "pairs" in form:
            form = form["pairs"]
        else:
            raise ScenarioError(f"unknown homeomorphism form {sorted(form)}")
    return dynamics.PLCircleHomeo(_pairs(form))


def _poset(form, env) -> universal.LeafPoset:
    if isinstance(form, str):
        return env.get("posets", form)
    return universal.LeafPoset.from_edges(form["leaves"], [tuple(e) for e in form.get("covers", [])])


def _markers(form, env) -> universal.MonotoneSystem:
    if isinstance(form, str):
        return env.get("markers", form)
    poset = _poset(form["poset"], env)
    family = {}
    for key, data in form.get("pairs", {}).items():
        if isinstance(data, dict):
            family[key] = universal.PairMarkers(_pairs(data["markers"]), data.get("gaps"))
        else:
            family[key] = universal.PairMarkers(_pairs(data))
    return universal.build_monotone_system(poset, family, check=bool(form.get("check", True)))


def _chart(form, env) -> leafspace.BranchingChart:
    if isinstance(form, str):
        return env.get("charts", form)
    return leafspace.BranchingChart(int(form.get("n", 2)))


def _leaf_point(form, env):
    if isinstance(form, str) and form in env.decl["points"]:
        return env.decl["points"][form]
    if isinstance(form, dict) or isinstance(form, list):
        return leafspace.NadicLeafPoint.from_json(form)
    return point(_rational(form))


BUILDERS = {
    "points": _leaf_point,
    "laminations": _lamination,
    "maps": _map,
    "homeos": _homeo,
    "posets": _poset,
    "markers": _markers,
    "charts": _chart,
}


class Env:
    def __init__(self):
        self.decl = {s: {} for s in SECTIONS}
        self.results = {}

    def get(self, section, name):
        if name in self.results:
            return self.results[name]
        if name in self.decl[section]:
            return self.decl[section][name]
        raise ScenarioError(f"unresolved reference {name!r} in {section}", reference=name)


def load(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(f"parse error: {e.msg}", line=e.lineno, column=e.colno) from None
    if not isinstance(data, dict):
        raise ScenarioError("a scenario must be a JSON object")
    unknown = set(data) - set(SECTIONS) - {"commands", "description"}
    if unknown:
        raise ScenarioError(f"unknown sections {sorted(unknown)}")
    return data


def declare(data: dict) -> Env:
    env = Env()
    for section in SECTIONS:
        for name, form in data.get(section, {}).items():
            try:
                env.decl[section][name] = BUILDERS[section](form, env)
            except ScenarioError:
                raise
            except (ValueError, TypeError, KeyError) as e:
                raise ScenarioError(f"{section}.{name}: {e}", declaration=f"{section}.{name}",
                                    **{"error": error_detail(e)}) from None
    for i, cmd in enumerate(data.get("commands", [])):
        if not isinstance(cmd, dict) or cmd.get("op") not in COMMANDS:
            raise ScenarioError(f"command {i}: unknown op {cmd.get('op') if isinstance(cmd, dict) else cmd!r}")
    return env


# -- commands -------------------------------------------------------------------


def _chord(form, env) -> Chord:
    if isinstance(form, str):
        v = env.results.get(form)
        if isinstance(v, Chord):
            return v
    a, b = form
    return Chord(_rational(a), _rational(b))


def _generators(form, env) -> dict:
    return {name: _homeo(h, env) for name, h in form.items()}


def _check(ok: bool, message: str, witness=None):
    if not ok:
        raise CheckFailed(message, witness)
    return True


def _roundtrip(c, env):
    seed, count = int(c["seed"]), int(c.get("count", 100))
    for i in range(count):
        phi = random_monotone_map(seed * 100003 + i, int(c.get("max_flats", 6)))
        rel = random_lamination(seed * 100019 + i, int(c.get("max_leaves", 12)))
        for mode in ("min", "max"):
            back = monotone.pushforward(phi, monotone.pullback(phi, rel, mode))
            _check(back == rel, f"round trip ({mode}) fails on fixture {i}",
                   {"map": phi, "lamination": rel, "image": back})
    return {"fixtures": count, "ok": True}


def _functoriality(c, env):
    seed, count = int(c["seed"]), int(c.get("count", 100))
    for i in range(count):
        f = random_monotone_map(seed * 100003 + i, int(c.get("max_flats", 4)))
        g = random_monotone_map(seed * 100043 + i, int(c.get("max_flats", 4)))
        rel = random_lamination(seed * 100019 + i, int(c.get("max_leaves", 12)))
        lhs = monotone.pushforward(monotone.compose(g, f), rel)
        rhs = monotone.pushforward(g, monotone.pushforward(f, rel))
        _check(lhs == rhs, f"functoriality fails on fixture {i}", {"f": f, "g": g, "lamination": rel})
    return {"fixtures": count, "ok": True}


def _line_map(form, env):
    """A map of the real line: ``{"affine": [a, b]}`` is ``x -> a x + b``,
    anything else is read as a circle map and acts through its lift."""
    if isinstance(form, dict) and "affine" in form:
        a, b = (_rational(v) for v in form["affine"])
        if a <= 0:
            raise ScenarioError("affine maps of the line must have positive slope")
        return lambda x: a * x + b
    return _map(form, env).lift


def _compress(c, env):
    n = int(c.get("max_word_len", 6))
    if "chart" in c:
        chart = _chart(c["chart"], env)
        p, q = (_leaf_point(x, env) for x in c["interval"])
        return leafspace.compressibility_search(leafspace.MapAction.from_chart(chart), (p, q), n)
    action = leafspace.MapAction.real_line({name: _line_map(m, env) for name, m in c["maps"].items()})
    p, q = (_rational(x) for x in c["interval"])
    return leafspace.compressibility_search(action, (p, q), n)


def _oracle(c, env):
    kind = c["kind"]
    if kind == "linking":
        n = int(c.get("n", 12))
        table = oracles.linking_table(n)
        bad = [k for k, v in table.items() if v != (chords_relate(Chord(*k[0]), Chord(*k[1])).value == "linked")]
        _check(not bad, "linking disagrees", bad[:1])
        return {"pairs": len(table), "ok": True}
    if kind == "hull":
        pts = [_rational(p) for p in c["points"]]
        expect = {tuple(sorted(e)) for e in oracles.hull_edges(pts)}
        got = {(l.a, l.b) for l in laminations.hull_boundary(pts).leaves}
        _check(expect == got, "hull disagrees", {"oracle": expect, "main": got})
        return {"edges": len(got), "ok": True}
    if kind == "faces":
        rel = _lamination(c["lamination"], env)
        n = oracles.face_count([(l.a, l.b) for l in rel.leaves])
        _check(n == len(laminations.gaps(rel)), "face count disagrees")
        return {"faces": n, "ok": True}
    if kind == "map-identity":
        outer, inner, direct = (_map(c[k], env) for k in ("outer", "inner", "direct"))
        ok = oracles.composite_agrees(outer.pairs(), inner.pairs(), direct.pairs(),
                                      set(direct.xs) | set(inner.xs), int(c.get("grid", 24)))
        _check(ok, "composite disagrees with direct map")
        return {"ok": True}
    if kind == "word-search":
        chart = _chart(c.get("chart", {"n": 2}), env)
        p, q = (_leaf_point(x, env) for x in c["interval"])
        n = int(c.get("max_word_len", 6))
        step = {"x": chart.act_x, "X": chart.act_x_inv, "t": chart.act_t, "T": chart.act_t_inv}
        word = oracles.first_compressing_word("xXtT", lambda a, z: step[a](z), chart.leq, (p, q), n)
        main = leafspace.compressibility_search(leafspace.MapAction.from_chart(chart), (p, q), n)
        main_word = main.word if isinstance(main, leafspace.Compressible) else None
        _check(word == main_word, "word search disagrees", {"oracle": word, "main": main_word})
        return {"word": word, "ok": True}
    raise ScenarioError(f"unknown oracle kind {kind!r}")


def _expect(c, env):
    value = env.results[c["ref"]]
    want = c["equals"]
    if isinstance(value, LaminarRelation):
        # leaf order in the file is irrelevant
        ok = value == _lamination(want, env)
        _check(ok, f"{c['ref']} differs from expectation", {"got": value, "expected": want})
        return True
    got = to_jsonable(value)
    _check(got == want, f"{c['ref']} differs from expectation", {"got": got, "expected": want})
    return True


def _push_check(c, env):
    rep = universal.pushforward_consistency(_markers(c["markers"], env), c["upper"], c["lower"])
    if c.get("expect_ok", True):
        _check(rep.ok, "pushforward mismatch", rep)
    return rep


COMMANDS = {
    "declarations": lambda c, e: {s: sorted(e.decl[s]) for s in SECTIONS if e.decl[s]},
    "relate": lambda c, e: chords_relate(_chord(c["a"], e), _chord(c["b"], e)),
    "cyclic-order": lambda c, e: cyclic_order(*(_rational(p) for p in c["points"])),
    "validate": lambda c, e: _lamination(c["lamination"], e),
    "hull": lambda c, e: laminations.hull_boundary(_rational(p) for p in c["points"]),
    "gaps": lambda c, e: laminations.gaps(_lamination(c["lamination"], e)),
    "census": lambda c, e: laminations.gap_census(_lamination(c["lamination"], e)),
    "union": lambda c, e: laminations.union(_lamination(c["a"], e), _lamination(c["b"], e)),
    "hausdorff": lambda c, e: laminations.hausdorff_distance(_lamination(c["a"], e), _lamination(c["b"], e)),
    "sublamination": lambda c, e: laminations.is_sublamination(_lamination(c["a"], e), _lamination(c["b"], e)),
    "apply": lambda c, e: _map(c["map"], e)(_rational(c["point"])),
    "preimage": lambda c, e: _map(c["map"], e).preimage(_rational(c["point"])),
    "pushforward": lambda c, e: monotone.pushforward(_map(c["map"], e), _lamination(c["lamination"], e)),
    "pullback": lambda c, e: monotone.pullback(_map(c["map"], e), _lamination(c["lamination"], e),
                                               c.get("mode", "min")),
    "compose": lambda c, e: monotone.compose(_map(c["outer"], e), _map(c["inner"], e)),
    "roundtrip-check": _roundtrip,
    "functoriality-check": _functoriality,
    "fixed-points": lambda c, e: dynamics.fixed_points(_homeo(c["homeo"], e)),
    "classify": lambda c, e: dynamics.classify(_homeo(c["homeo"], e), int(c.get("max_period", 12))),
    "rot": lambda c, e: dynamics.rotation_number(_homeo(c["homeo"], e), int(c.get("max_period", 12))),
    "dual": lambda c, e: dynamics.dual_polygon(_homeo(c["homeo"], e), [_rational(p) for p in c["vertices"]]),
    "cocycle": lambda c, e: dynamics.rotation_cocycle(*(_homeo(h, e) for h in c["homeos"]),
                                                      int(c.get("max_period", 12))),
    "orbit": lambda c, e: dynamics.orbit_closure(_generators(c["generators"], e),
                                                 _lamination(c["seed"], e), int(c["depth"])),
    "saturation": lambda c, e: dynamics.orbit_saturation(_generators(c["generators"], e),
                                                         _lamination(c["seed"], e), int(c["max_depth"])),
    "sticky-build": lambda c, e: dynamics.sticky_build(int(c["n_levels"]), int(c["arity_cap"])),
    "sticky-detect": lambda c, e: dynamics.sticky_detect(_lamination(c["lamination"], e), int(c.get("min_chain", 2))),
    "validate-markers": lambda c, e: universal.validate_markers(
        _poset(c["poset"], e), {k: universal.PairMarkers(_pairs(v["markers"]), v.get("gaps"))
                                 for k, v in c["pairs"].items()}) is not None,
    "universal": lambda c, e: universal.universal_circle(_markers(c["markers"], e)),
    "pinch": lambda c, e: universal.pinching_lamination(_markers(c["markers"], e), c["upper"], c["lower"],
                                                        c.get("mode", "closure")),
    "pinch-total": lambda c, e: universal.pinching_total(_markers(c["markers"], e), c["leaf"], c.get("mode", "closure")),
    "push-check": _push_check,
    "classify-polygon": lambda c, e: universal.classify_polygon_image(_map(c["map"], e),
                                                                      [_rational(p) for p in c["vertices"]]),
    "zmap": lambda c, e: _chart(c["chart"], e).zmap(_leaf_point(c["point"], e)),
    "sup": lambda c, e: _chart(c["chart"], e).sup([_leaf_point(p, e) for p in c["points"]]),
    "act": lambda c, e: _chart(c["chart"], e).act_word(c["word"], _leaf_point(c["point"], e), c.get("digits")),
    "slither": lambda c, e: _chart(c["chart"], e).slither(_leaf_point(c["point"], e)),
    "compress-search": _compress,
    "oracle": _oracle,
    "expect": _expect,
}


def run_scenario(data: dict, out_dir=None, svg: bool = False, seed=None) -> tuple:
    """Run a parsed scenario; returns ``(exit_code, report)``."""
    report = {"commands": []}
    try:
        env = declare(data)
    except ScenarioError as e:
        report.update(status="invalid", error={"message": str(e), **to_jsonable(e.detail)})
        return EXIT_INVALID, report
    code = EXIT_OK
    for i, cmd in enumerate(data.get("commands", [])):
        cmd = dict(cmd)
        if seed is not None and "seed" in cmd:
            cmd["seed"] = seed
        entry = {"op": cmd["op"]}
        if "as" in cmd:
            entry["as"] = cmd["as"]
        start = time.perf_counter()
        try:
            value = COMMANDS[cmd["op"]](cmd, env)
            entry.update(status="ok", result=to_jsonable(value))
            env.results[cmd.get("as", f"#{i}")] = value
            if svg and out_dir is not None and isinstance(value, LaminarRelation):
                name = cmd.get("as", f"command{i}")
                Path(out_dir, f"{name}.svg").write_text(render_svg(value, geodesic=cmd.get("geodesic", True)))
        except CheckFailed as e:
            entry.update(status="fail", error=str(e), witness=to_jsonable(e.witness))
            code = EXIT_CHECK
        except ScenarioError as e:
            entry.update(status="invalid", error={"message": str(e), **to_jsonable(e.detail)})
            return EXIT_INVALID, {**report, "commands": report["commands"] + [entry], "status": "invalid"}
        except (ValueError, KeyError, TypeError, ZeroDivisionError) as e:
            entry.update(status="error", error=error_detail(e))
            code = EXIT_CHECK
        entry["wall_time"] = round(time.perf_counter() - start, 6)
        report["commands"].append(entry)
    report["status"] = "ok" if code == EXIT_OK else "fail"
    return code, report


def run_file(path, out_dir=None, svg: bool = False, seed=None) -> tuple:
    try:
        text = Path(path).read_text()
    except OSError as e:
        return EXIT_INVALID, {"status": "invalid", "error": {"message": str(e)}, "commands": []}
    try:
        data = load(text)
    except ScenarioError as e:
        return EXIT_INVALID, {"status": "invalid", "error": {"message": str(e), **e.detail}, "commands": []}
    if out_dir is not None:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
    code, report = run_scenario(data, out_dir, svg, seed)
    report = {"scenario": str(path), **report}
    if out_dir is not None:
        Path(out_dir, "report.json").write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return code, report


def bundled_path(name: str) -> Path:
    """Path of a scenario shipped in ``laminar/data``."""
    return Path(__file__).parent / "data" / f"{name}.json"


def bundled(name: str) -> Env:
    """Declarations of a bundled scenario, built and validated."""
    return declare(load(bundled_path(name).read_text()))
