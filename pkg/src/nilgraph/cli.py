"""Command-line interface.

Subcommands: ``ring`` (inspect a finite ring), ``graph`` (build a graph
and print or write it), ``compat`` (compatibility report for a spec's
map family), ``verify`` (run the verification suite), ``export`` (write
a graph file, nothing on stdout).  Subjects are names from the built-in
corpus or from a JSON config given with ``--config``.

Exit codes: 0 success, 1 check or precondition failure, 2 config error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceeded, ConfigError, PolyParseError, PreconditionUnverified
from .graphs import (SamplerParams, build_nilpotent_graph, build_zero_divisor_graph,
                     export_graph, graph_metrics, sample_spbw_graph)
from .harness import (CorpusEntry, Expected, SuiteConfig, builtin_corpus, run_suite)
from .maps import (DerivationMap, RingMap, compatibility_report, frobenius_map,
                   identity_map, swap_map, validate_derivation, validate_endo,
                   zero_derivation)
from .rings import (FiniteRing, element_sets, make_matrix_ring, make_product,
                    make_quotient_poly, make_zmod, radicals, ring_properties)
from .skew import SPBWSpec, validate_spec

INF_NAMES = {"inf", "infinity"}


def _build_ring(node, location: str) -> FiniteRing:
    if not isinstance(node, dict) or "kind" not in node:
        raise ConfigError("ring construction must be an object with a 'kind'", location)
    kind = node["kind"]
    try:
        if kind == "zmod":
            return make_zmod(int(node["n"]))
        if kind == "product":
            factors = node.get("of", [])
            if len(factors) < 2:
                raise ConfigError("product needs at least two factors", location)
            rings = [_build_ring(f, f"{location}.of[{i}]") for i, f in enumerate(factors)]
            out = rings[0]
            for r in rings[1:]:
                out = make_product(out, r)
            return out
        if kind == "matrix":
            return make_matrix_ring(_build_ring(node["base"], f"{location}.base"),
                                    int(node["k"]))
        if kind == "quotient_poly":
            return make_quotient_poly(_build_ring(node["base"], f"{location}.base"),
                                      [int(c) for c in node["modulus"]])
    except KeyError as exc:
        raise ConfigError(f"missing field {exc} for ring kind {kind!r}", location) from None
    except (ValueError, CapExceeded) as exc:
        raise ConfigError(str(exc), location) from None
    raise ConfigError(f"unknown ring kind {kind!r}", location)


def _resolve_element(ring: FiniteRing, value, location: str) -> int:
    if isinstance(value, int):
        if 0 <= value < ring.order:
            return value
        raise ConfigError(f"element index {value} out of range for {ring.label}", location)
    try:
        return ring.element_by_label(str(value))
    except ValueError as exc:
        raise ConfigError(str(exc), location) from None


def _build_map(ring: FiniteRing, node, location: str) -> RingMap:
    if isinstance(node, str):
        preset = node
        try:
            if preset == "identity":
                return identity_map(ring)
            if preset == "frobenius":
                return frobenius_map(ring)
            if preset == "swap":
                return swap_map(ring)
        except ValueError as exc:
            raise ConfigError(str(exc), location) from None
        raise ConfigError(f"unknown map preset {preset!r}", location)
    if isinstance(node, dict) and "sigma" in node:
        node = node["sigma"]
    if not isinstance(node, list):
        raise ConfigError("map must be a preset name or an image table", location)
    try:
        return validate_endo(ring, node)
    except ValueError as exc:
        raise ConfigError(str(exc), location) from None


def _build_derivation(ring: FiniteRing, sigma: RingMap, node, location: str) -> DerivationMap:
    if node is None or node == "zero":
        return zero_derivation(ring, sigma)
    if isinstance(node, dict) and "table" in node:
        node = node["table"]
    if not isinstance(node, list):
        raise ConfigError("derivation must be null, 'zero', or an image table", location)
    try:
        return validate_derivation(ring, sigma, node)
    except ValueError as exc:
        raise ConfigError(str(exc), location) from None


def _build_spec(name: str, rings: dict, node, location: str) -> SPBWSpec:
    if not isinstance(node, dict) or "ring" not in node:
        raise ConfigError("spec must be an object naming its 'ring'", location)
    ring_name = node["ring"]
    if ring_name not in rings:
        raise ConfigError(f"spec references undefined ring {ring_name!r}", location)
    ring = rings[ring_name]
    n = int(node.get("vars", 1))
    sigma_nodes = node.get("sigma") or ["identity"] * n
    sigma = [_build_map(ring, s, f"{location}.sigma[{i}]") for i, s in enumerate(sigma_nodes)]
    delta_nodes = node.get("delta") or [None] * n
    delta = [_build_derivation(ring, sigma[i], d, f"{location}.delta[{i}]")
             for i, d in enumerate(delta_nodes)]
    q = {}
    for key, value in (node.get("q") or {}).items():
        i, j = (int(p) for p in str(key).split(","))
        q[(i, j)] = _resolve_element(ring, value, f"{location}.q[{key}]")
    lower = {}
    for key, value in (node.get("lower") or {}).items():
        i, j = (int(p) for p in str(key).split(","))
        lower[(i, j)] = [_resolve_element(ring, v, f"{location}.lower[{key}]") for v in value]
    try:
        spec = SPBWSpec(name, ring, n, sigma, delta, q, lower,
                        degree_cap=int(node.get("degree_cap", 12)))
    except ValueError as exc:
        raise ConfigError(str(exc), location) from None
    report = validate_spec(spec)
    if not report.passed:
        raise ConfigError(f"spec invalid: {report.failure} witness={report.witness}", location)
    return spec


def _parse_expected(value):
    if isinstance(value, str) and value.lower() in INF_NAMES:
        return float("inf")
    return value


def load_config(path: str | None):
    """Returns (entries, sampler, output) merging built-ins with the config file."""
    entries = builtin_corpus()
    sampler = SamplerParams()
    output = {}
    if path is None:
        return entries, sampler, output
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc.msg}",
                          f"line {exc.lineno} column {exc.colno}")
    if not isinstance(raw, dict):
        raise ConfigError("config root must be an object")

    rings = {e.name: e.ring for e in entries}
    user_entries = {}
    for name, node in (raw.get("rings") or {}).items():
        ring = _build_ring(node, f"rings.{name}")
        rings[name] = ring
        user_entries[name] = CorpusEntry(name=name, ring=ring)
    specs_by_entry: dict[str, list] = {}
    for name, node in (raw.get("specs") or {}).items():
        spec = _build_spec(name, rings, node, f"specs.{name}")
        ring_name = node["ring"]
        if ring_name not in user_entries:
            user_entries[ring_name] = CorpusEntry(name=f"{ring_name}+{name}",
                                                  ring=rings[ring_name])
        specs_by_entry.setdefault(ring_name, []).append(spec)
    for ring_name, specs in specs_by_entry.items():
        entry = user_entries[ring_name]
        entry.specs = tuple(list(entry.specs) + specs)
    builtin_by_name = {e.name: e for e in entries}
    for name, metrics in (raw.get("expected") or {}).items():
        if not isinstance(metrics, dict):
            raise ConfigError("expected values must map metric names to values",
                              f"expected.{name}")
        entry = user_entries.get(name) or builtin_by_name.get(name)
        if entry is None:
            if name in rings:
                entry = CorpusEntry(name=name, ring=rings[name])
                user_entries[name] = entry
            else:
                raise ConfigError(f"expected values reference undefined ring {name!r}",
                                  f"expected.{name}")
        merged = dict(entry.expected)
        merged.update({k: Expected(_parse_expected(v), "user") for k, v in metrics.items()})
        entry.expected = merged
    entries.extend(user_entries.values())

    node = raw.get("sampler") or {}
    sampler = SamplerParams(max_degree=int(node.get("max_degree", sampler.max_degree)),
                            max_vertices=int(node.get("max_vertices", sampler.max_vertices)),
                            include_witnesses=bool(node.get("include_witnesses", True)))
    output = raw.get("output") or {}
    return entries, sampler, output


def _find_ring(entries, name):
    for e in entries:
        if e.name == name:
            return e.ring
    return None


def _find_spec(entries, name):
    for e in entries:
        for spec in e.specs:
            if spec.label == name:
                return spec
    return None


def _fmt_set(ring, items):
    return "{" + ", ".join(ring.label_of(x) for x in sorted(items)) + "}"


def cmd_ring(args) -> int:
    entries, _, _ = load_config(args.config)
    ring = _find_ring(entries, args.subject)
    if ring is None:
        raise ConfigError(f"unknown ring {args.subject!r}")
    sets = element_sets(ring)
    print(f"ring {args.subject}: {ring.label}, order {ring.order}")
    print(f"  commutative: {ring.is_commutative}")
    print(f"  nilpotents: {_fmt_set(ring, sets.nil)}")
    print(f"  units: {_fmt_set(ring, sets.units)}")
    print(f"  nonzero zero divisors: {_fmt_set(ring, sets.zd_star)}")
    print(f"  nilpotent-graph vertex set: {_fmt_set(ring, sets.z_nil - {0})}")
    try:
        rad = radicals(ring)
    except CapExceeded as exc:
        rad = None
        print(f"  radicals: unavailable ({exc})")
    if rad is not None:
        print(f"  minimal primes: {len(rad.minimal_primes)}")
        for P in rad.minimal_primes:
            print(f"    {_fmt_set(ring, P)}")
        print(f"  prime radical: {_fmt_set(ring, rad.prime_radical)}")
        print(f"  upper nilradical: {_fmt_set(ring, rad.upper_nilradical)}")
    props = ring_properties(ring, sets, rad)
    for name in ("reduced", "reversible", "symmetric", "two_primal", "ni"):
        value = getattr(props, name)
        shown = "unknown" if value is None else ("yes" if value else "no")
        line = f"  {name}: {shown}"
        if name in props.witnesses:
            witness = props.witnesses[name]
            labels = tuple(ring.label_of(x) for x in witness)
            line += f" (witness {labels})"
        print(line)
    return 0


def _build_subject_graph(args, entries, sampler):
    kind = "zero_divisor" if args.zero_divisor else "nilpotent"
    ring = _find_ring(entries, args.subject)
    if ring is not None:
        if kind == "zero_divisor":
            return build_zero_divisor_graph(ring)
        return build_nilpotent_graph(ring)
    spec = _find_spec(entries, args.subject)
    if spec is None:
        raise ConfigError(f"unknown ring or spec {args.subject!r}")
    if kind == "zero_divisor":
        raise ConfigError("zero-divisor graphs are only built for rings, not sampled specs")
    if args.max_degree is not None or args.max_vertices is not None:
        sampler = SamplerParams(
            max_degree=args.max_degree if args.max_degree is not None else sampler.max_degree,
            max_vertices=args.max_vertices if args.max_vertices is not None else sampler.max_vertices,
            include_witnesses=sampler.include_witnesses)
    return sample_spbw_graph(spec, sampler)


def cmd_graph(args) -> int:
    entries, sampler, output = load_config(args.config)
    graph = _build_subject_graph(args, entries, sampler)
    metrics = graph_metrics(graph)
    fmt = "dot" if args.dot else "json"
    text = export_graph(graph, fmt)
    out_path = args.out or output.get("path")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {fmt} to {out_path}")
    else:
        sys.stdout.write(text)
    if not args.quiet:
        diameter = "undefined" if metrics.diameter is None else metrics.diameter
        print(f"# {graph.kind}: {graph.vertex_count} vertices, {graph.edge_count} edges, "
              f"connected={metrics.connected}, diameter={diameter}, girth={metrics.girth}, "
              f"complete={metrics.complete}, truncated={graph.truncated}",
              file=sys.stderr)
    return 0


def cmd_export(args) -> int:
    args.quiet = True
    if not args.out:
        raise ConfigError("export requires --out PATH")
    entries, sampler, _ = load_config(args.config)
    graph = _build_subject_graph(args, entries, sampler)
    graph_metrics(graph)
    fmt = "dot" if args.dot else "json"
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(export_graph(graph, fmt))
    return 0


def cmd_compat(args) -> int:
    entries, _, _ = load_config(args.config)
    spec = _find_spec(entries, args.subject)
    if spec is None:
        raise ConfigError(f"unknown spec {args.subject!r}")
    report = compatibility_report(spec.base, spec.sigma, spec.delta)
    print(f"compatibility report for {spec.label} over {spec.base.label}:")
    for name in ("sigma_compatible", "delta_compatible", "sigma_rigid",
                 "weak_sigma_compatible", "weak_delta_compatible"):
        line = f"  {name}: {getattr(report, name)}"
        if name in report.witnesses:
            line += f" (witness {report.witnesses[name]})"
        print(line)
    return 0


def cmd_verify(args) -> int:
    entries, sampler, output = load_config(args.config)
    config = SuiteConfig(entries=entries, sampler=sampler)
    report = run_suite(config)
    counts = report.counts
    json_path = args.json_out or output.get("path", "verify_report.json")
    md_path = args.md_out or "verify_report.md"
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(report.to_json())
    with open(md_path, "w", encoding="utf-8") as fh:
        fh.write(report.to_markdown())
    print(f"checks: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['vacuous']} vacuous, {counts['unknown']} unknown")
    for r in report.failed:
        print(f"FAIL {r.check_id}: {dict(r.witnesses)}")
    print(f"wrote {json_path} and {md_path}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilgraph",
                                     description="Finite rings, skew extensions, "
                                                 "and their nilpotent graphs")
    parser.add_argument("--config", metavar="PATH", default=None,
                        help="JSON config with extra rings, maps, specs, expectations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ring = sub.add_parser("ring", help="inspect a ring")
    p_ring.add_argument("subject")
    p_ring.set_defaults(func=cmd_ring)

    for name, func in (("graph", cmd_graph), ("export", cmd_export)):
        p = sub.add_parser(name, help=f"{name} a graph")
        p.add_argument("subject", help="ring name (exact graph) or spec name (sampled)")
        kind = p.add_mutually_exclusive_group()
        kind.add_argument("--nilpotent", action="store_true", default=True)
        kind.add_argument("--zero-divisor", dest="zero_divisor", action="store_true")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", default=True)
        fmt.add_argument("--dot", action="store_true")
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--max-vertices", type=int, default=None)
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument("--quiet", action="store_true")
        p.set_defaults(func=func)

    p_compat = sub.add_parser("compat", help="compatibility report for a spec")
    p_compat.add_argument("subject")
    p_compat.set_defaults(func=cmd_compat)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--json-out", metavar="PATH", default=None)
    p_verify.add_argument("--md-out", metavar="PATH", default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except PolyParseError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionUnverified, CapExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
