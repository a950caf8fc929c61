"""Command-line front end.

Every subcommand prints one JSON document (sorted keys, two-space indent)
to stdout or to ``-o``.  Vertices and nodes in JSON are 1-indexed, like the
files.  Exit codes: 0 success, 1 contract or validation failure (with a JSON
error object), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import config
from .coloring import bfs_layering, color_with_bound
from .decomposition import alpha_of, mu_of, validate
from .errors import BaseCaseViolation, ImtwError
from .formats import parse_gr, parse_td, read_text, write_gr, write_td, write_text
from .generators import FAMILIES, GenSpec, generate
from .graph import find_induced_biclique, find_t_obstruction, max_induced_matching_touching
from .oracles import OracleConfig, induced_matching_treewidth, tree_independence_number
from .ramsey import bound_C, bound_f, bound_K, bound_M, bound_N, ramsey_upper
from .transform import theorem3_pipeline

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    inputs: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None
    output: Optional[str] = None
    caps: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"schemaVersion": SCHEMA_VERSION, **asdict(self)}

    @classmethod
    def from_json(cls, data: dict) -> "RunManifest":
        data = dict(data)
        version = data.pop("schemaVersion", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported manifest schemaVersion {version}")
        return cls(**data)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "RunManifest":
        return cls.from_json(json.loads(text))


def dumps(doc: dict) -> str:
    return json.dumps({"schemaVersion": SCHEMA_VERSION, **doc}, sort_keys=True, indent=2) + "\n"


def _ints(text: str, count: Optional[int] = None) -> list:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} comma-separated integers, got {text!r}")
    return vals


def _vertex_set(text: str, n: int) -> list:
    vs = _ints(text)
    bad = [v for v in vs if not 1 <= v <= n]
    if bad:
        raise UsageError(f"vertex {bad[0]} outside 1..{n}")
    return [v - 1 for v in vs]


def _load(args):
    G = parse_gr(read_text(args.graph))
    T = parse_td(read_text(args.td)) if getattr(args, "td", None) else None
    return G, T


def _oracle_cfg(args) -> OracleConfig:
    return OracleConfig(max_n=args.max_n, workers=args.workers, symmetry_pruning=args.symmetry)


# -- subcommands --------------------------------------------------------------


def cmd_validate(args):
    G, T = _load(args)
    problem = validate(G, T)
    if problem is not None:
        return 1, {"command": "validate", "valid": False, "violation": problem.to_json(1)}
    return 0, {"command": "validate", "valid": True, "nodes": T.node_count, "maxBag": T.max_bag_size()}


def cmd_params(args):
    G, T = _load(args)
    return 0, {"command": "params", "alpha": alpha_of(G, T), "mu": mu_of(G, T)}


def cmd_exact(args):
    G, _ = _load(args)
    fn = tree_independence_number if args.param == "treealpha" else induced_matching_treewidth
    res = fn(G, _oracle_cfg(args))
    if args.witness:
        write_text(args.witness, write_td(res.witness, G.n))
    if args.plain:
        return 0, str(res.value)
    return 0, {
        "command": "exact",
        "param": args.param,
        "value": res.value,
        "order": [v + 1 for v in res.order],
        "exploredOrderings": res.explored_orderings,
    }


def cmd_transform(args):
    G, T = _load(args)
    threshold = None if args.threshold is None else int(args.threshold)
    tprime, report = theorem3_pipeline(G, T, args.mu, args.t, threshold)
    text = write_td(tprime, G.n)
    if args.out_td:
        write_text(args.out_td, text)
    doc = {"command": "transform", "report": report.to_json(1)}
    if not args.out_td:
        doc["td"] = text
    return 0, doc


def cmd_color(args):
    G, T = _load(args)
    col, trace = color_with_bound(G, T, args.mu, args.omega)
    return 0, {
        "command": "color",
        "coloring": {str(v + 1): c for v, c in col.assignment.items()},
        "colorCount": col.color_count,
        "bound": str(bound_f(args.mu, args.omega)),
        "trace": trace.to_json(),
    }


def cmd_layering(args):
    G, _ = _load(args)
    u, v = _ints(args.edge, 2)
    if not (1 <= u <= G.n and 1 <= v <= G.n):
        raise UsageError(f"edge endpoint outside 1..{G.n}")
    lay = bfs_layering(G, u - 1, v - 1)
    return 0, {"command": "layering", "layers": [[x + 1 for x in sorted(layer)] for layer in lay.layers]}


def cmd_find(args):
    G, _ = _load(args)
    if args.biclique is not None:
        w = find_induced_biclique(G, args.biclique)
        return 0, {"command": "find", "kind": "biclique", "t": args.biclique,
                   "found": w is not None, "witness": w.to_json(1) if w else None}
    if args.obstruction is not None:
        w = find_t_obstruction(G, args.obstruction)
        return 0, {"command": "find", "kind": "obstruction", "t": args.obstruction,
                   "found": w is not None, "witness": w.to_json(1) if w else None}
    X = _vertex_set(args.induced_matching_touching, G.n)
    size, matching = max_induced_matching_touching(G, X)
    return 0, {"command": "find", "kind": "induced-matching-touching", "set": [x + 1 for x in sorted(X)],
               "size": size, "matching": [[a + 1, b + 1] for a, b in matching]}


def _gen_value(key: str, raw: str):
    if key == "policy":
        return raw
    try:
        return int(raw)
    except ValueError:
        try:
            return float(raw)
        except ValueError:
            raise UsageError(f"parameter {key} needs a number, got {raw!r}") from None


def cmd_gen(args):
    params = {}
    for item in args.params:
        key, sep, raw = item.partition("=")
        if not sep:
            raise UsageError(f"generator parameters look like key=value, got {item!r}")
        params[key] = _gen_value(key, raw)
    try:
        spec = GenSpec(args.family, params, args.seed)
    except ImtwError as exc:
        raise UsageError(str(exc)) from None
    G = generate(spec)
    return 0, ("gr", "c " + json.dumps(spec.to_json(), sort_keys=True) + "\n" + write_gr(G))


def cmd_bounds(args):
    out = {}
    if args.R:
        vals = _ints(args.R)
        if not vals:
            raise UsageError("--R needs at least one target")
        out["R(" + ",".join(map(str, vals)) + ")"] = ramsey_upper(vals)
    for name, fn, arity in (("M", bound_M, 2), ("N", bound_N, 3), ("C", bound_C, 2), ("K", bound_K, 2), ("f", bound_f, 2)):
        raw = getattr(args, name)
        if raw:
            vals = _ints(raw, arity)
            floor = 0 if name == "f" else 1
            if any(v < floor for v in vals) or (name == "f" and vals[1] < 1):
                raise UsageError(f"--{name} arguments out of range")
            out[f"{name}(" + ",".join(map(str, vals)) + ")"] = fn(*vals)
    if not out:
        raise UsageError("bounds needs at least one of --R --M --N --C --K --f")
    if args.plain:
        return 0, "\n".join(str(v) for v in out.values())
    return 0, {"command": "bounds", "bounds": {k: str(v) for k, v in out.items()}}


def cmd_replay(args):
    manifest = RunManifest.loads(read_text(args.manifest))
    return run_manifest(manifest)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", default=None, help="size caps, e.g. n=18,oracle_n=10")
    common.add_argument("-o", "--output", default=None, help="write output here instead of stdout")
    common.add_argument("--manifest-out", default=None, help="record this run as a JSON manifest")

    p = argparse.ArgumentParser(prog="imtw", description="Tree decompositions, induced matching treewidth and coloring.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, graph=True, td=False):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if graph:
            sp.add_argument("graph")
        if td:
            sp.add_argument("td")
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check a .td against a .gr", td=True)
    add("params", cmd_params, "alpha(T) and mu(T) of a decomposition", td=True)

    sp = add("exact", cmd_exact, "exact tree-alpha or induced matching treewidth")
    sp.add_argument("--param", choices=["treealpha", "yolov"], required=True)
    sp.add_argument("--witness", default=None, help="write the optimal decomposition to this .td")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=9)
    sp.add_argument("--symmetry", action="store_true", help="prune first vertices by automorphism orbits")
    sp.add_argument("--plain", action="store_true", help="print only the value")

    sp = add("transform", cmd_transform, "rewrite a small-mu decomposition into a small-alpha one", td=True)
    sp.add_argument("--mu", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--threshold", default=None, help="light/heavy threshold (default C(mu,t))")
    sp.add_argument("--out-td", default=None)

    sp = add("color", cmd_color, "proper coloring within f(mu,omega) colors", td=True)
    sp.add_argument("--mu", type=int, required=True)
    sp.add_argument("--omega", type=int, required=True)

    sp = add("layering", cmd_layering, "BFS layering grown from an edge")
    sp.add_argument("--edge", required=True, help="u,v (1-indexed)")

    sp = add("find", cmd_find, "search for bicliques, obstructions or touching induced matchings")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--biclique", type=int, metavar="T")
    grp.add_argument("--obstruction", type=int, metavar="T")
    grp.add_argument("--induced-matching-touching", metavar="SET", help="comma-separated 1-indexed vertices")

    sp = add("gen", cmd_gen, "write a generated graph as .gr", graph=False)
    sp.add_argument("family", choices=sorted(FAMILIES))
    sp.add_argument("params", nargs="*", help="key=value, e.g. n=8 p=0.3")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("bounds", cmd_bounds, "evaluate the bound formulas", graph=False)
    sp.add_argument("--R", default=None, metavar="t1,...,tk")
    sp.add_argument("--M", default=None, metavar="s,t")
    sp.add_argument("--N", default=None, metavar="s,t,m")
    sp.add_argument("--C", default=None, metavar="mu,t")
    sp.add_argument("--K", default=None, metavar="mu,t")
    sp.add_argument("--f", default=None, metavar="mu,omega")
    sp.add_argument("--plain", action="store_true", help="print bare decimal strings")

    sp = add("replay", cmd_replay, "rerun a recorded manifest", graph=False)
    sp.add_argument("manifest")
    return p


_RECORDED = ("graph", "td", "manifest")
_SKIPPED = {"func", "command", "caps", "output", "manifest_out", "seed"} | set(_RECORDED)


def manifest_from_args(args) -> RunManifest:
    params = {k: v for k, v in vars(args).items() if k not in _SKIPPED}
    caps = {} if args.caps is None else asdict(config.parse_caps(args.caps))
    return RunManifest(
        subcommand=args.command,
        inputs=[getattr(args, k) for k in _RECORDED if getattr(args, k, None)],
        params=params,
        seed=getattr(args, "seed", None),
        output=args.output,
        caps=caps,
    )


def argv_from_manifest(m: RunManifest) -> list:
    argv = [m.subcommand, *m.inputs]
    if m.subcommand == "gen":
        argv = ["gen", m.params["family"], *m.params.get("params", [])]
    for key, value in m.params.items():
        if m.subcommand == "gen" and key in ("family", "params"):
            continue
        flag = "--" + key.replace("_", "-")
        if value is None or value is False:
            continue
        if value is True:
            argv.append(flag)
        else:
            argv += [flag, str(value)]
    if m.seed is not None:
        argv += ["--seed", str(m.seed)]
    if m.caps:
        argv += ["--caps", ",".join(f"{k}={v}" for k, v in sorted(m.caps.items()))]
    if m.output:
        argv += ["-o", m.output]
    return argv


def run_manifest(m: RunManifest):
    args = build_parser().parse_args(argv_from_manifest(m))
    return _execute(args)


def _execute(args):
    old = config.get_caps()
    try:
        if args.caps:
            try:
                config.set_caps(config.parse_caps(args.caps))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        return args.func(args)
    finally:
        config.set_caps(old)


def _render(result) -> str:
    if isinstance(result, str):
        return result if result.endswith("\n") else result + "\n"
    if isinstance(result, tuple) and result[0] == "gr":
        return result[1]
    return dumps(result)


def _error_doc(exc: BaseException) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    violation = getattr(exc, "violation", None)
    if violation is not None:
        err["violation"] = violation.to_json(1)
        err["message"] = f"axiom {violation.axiom}: {violation.text(1)}"
    if isinstance(exc, BaseCaseViolation):
        u, v = exc.edge
        err["edge"] = [u + 1, v + 1]
        err["message"] = f"edge ({u + 1}, {v + 1}) present in a subgraph colored with mu={exc.mu}, omega={exc.omega}"
    return {"error": err}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, result = _execute(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"imtw: error: {exc}", file=sys.stderr)
        return 2
    except (ImtwError, ValueError, OSError) as exc:
        sys.stdout.write(dumps(_error_doc(exc)))
        return 1
    text = _render(result)
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)
    if args.manifest_out:
        write_text(args.manifest_out, manifest_from_args(args).dumps())
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
