"""Analysis reports: JSON-ready dictionaries plus a text renderer.

Each analyzer builds one dict (stable key order, snake_case keys) and the
text format is rendered from that same dict, so both output formats always
carry identical numbers.

The checks list holds one entry per verifiable statement. A statement whose
hypotheses fail on the given input is reported as ``not_applicable`` with
the violated hypothesis named -- never as a failure.
"""

from __future__ import annotations

import itertools
from math import inf

from . import arrangements as arr_mod
from . import graphs as graph_mod
from . import homology
from . import lines as lines_mod
from .complexes import SimplicialComplex
from .errors import HypothesisError, ResourceCapError
from .graphs import Graph, HirschVerdict
from .linalg import QQ, FieldSpec

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_NA = "not_applicable"


def _check(check_id, statement, status, detail, field=None):
    return {
        "id": check_id,
        "statement": statement,
        "field": field,
        "status": status,
        "detail": detail,
    }


def _diam_value(d):
    return "infinite" if d == inf else d


def _graph_stats(g: Graph) -> dict:
    stats = {
        "vertices": [str(v) for v in g.vertices],
        "n_vertices": g.n,
        "n_edges": g.m,
        "edges": [[str(u), str(v)] for u, v in g.edges],
        "diameter": _diam_value(graph_mod.diameter(g)) if g.n else None,
        "vertex_connectivity": None,
        "edge_connectivity": None,
        "min_vertex_cut": None,
        "min_edge_cut": None,
    }
    if g.n >= 2:
        kappa, vcut = graph_mod.vertex_connectivity(g)
        lam, ecut = graph_mod.edge_connectivity(g)
        stats["vertex_connectivity"] = kappa
        stats["edge_connectivity"] = lam
        stats["min_vertex_cut"] = None if vcut is None else [str(v) for v in vcut]
        stats["min_edge_cut"] = None if ecut is None else [[str(u), str(v)] for u, v in ecut]
    return stats


# -- complexes ----------------------------------------------------------------


def build_complex_report(
    cx: SimplicialComplex,
    fields: tuple[FieldSpec, ...] = (QQ,),
    max_hochster_n: int = homology.DEFAULT_MAX_HOCHSTER_VERTICES,
    descriptor: str = "complex",
) -> dict:
    report = {
        "kind": "complex",
        "input": descriptor,
        "n_vertices": cx.n_vertices,
        "n_facets": cx.n_facets,
        "vertices": [str(v) for v in cx.vertices],
        "facets": [[str(v) for v in f] for f in cx.facet_labels()],
    }
    warnings: list[str] = []
    if cx.is_void:
        report.update(
            dimension=None, pure=None, flag=None, f_vector=None, h_vector=None,
            height=None, multiplicity=None, minimal_nonfaces=None,
            max_generator_degree=None, fields={}, normal=None, dual_graph=None,
            hirsch=None, checks=[],
            warnings=["void complex: nothing to analyze"],
        )
        return report

    if cx.n_vertices > max_hochster_n:
        raise ResourceCapError(
            f"{cx.n_vertices} vertices exceed the regularity sweep cap"
            f" {max_hochster_n} (2^n restrictions); raise --max-hochster-n"
        )

    pure = cx.is_pure
    report["dimension"] = cx.dimension
    report["pure"] = pure
    report["f_vector"] = list(cx.f_vector)
    report["minimal_nonfaces"] = [[str(v) for v in nf] for nf in cx.minimal_nonfaces]
    report["max_generator_degree"] = cx.max_generator_degree()
    report["flag"] = cx.is_flag
    if pure:
        report["h_vector"] = list(cx.h_vector)
        report["height"] = cx.height()
        report["multiplicity"] = cx.multiplicity()
    else:
        report["h_vector"] = None
        report["height"] = None
        report["multiplicity"] = None
        warnings.append("complex is not pure: h-vector, height, and dual graph skipped")

    field_results = {}
    for field in fields:
        cert = homology.regularity(cx, field, max_vertices=max_hochster_n)
        betti = homology.reduced_betti_numbers(cx, field)
        entry = {
            "cohen_macaulay": homology.is_cohen_macaulay(cx, field),
            "gorenstein": homology.is_gorenstein(cx, field),
            "homology_sphere": homology.is_homology_sphere(cx, field) if pure else None,
            "regularity": cert.value,
            "regularity_witness": {
                "vertices": [str(v) for v in cert.witness_vertices],
                "index": cert.witness_index,
            },
            "reduced_betti": list(betti.reduced),
        }
        field_results[str(field)] = entry
    report["fields"] = field_results
    report["normal"] = homology.is_normal(cx) if pure else None

    dual = hirsch = None
    if pure:
        g = graph_mod.dual_graph(cx)
        dual = _graph_stats(g)
        diam = graph_mod.diameter(g)
        verdict = graph_mod.hirsch_verdict(diam, cx.height())
        hirsch = {
            "diameter": _diam_value(diam),
            "height": cx.height(),
            "verdict": verdict.value,
        }
    report["dual_graph"] = dual
    report["hirsch"] = hirsch

    report["checks"] = _complex_checks(cx, report, fields)
    report["warnings"] = warnings
    return report


def _complex_checks(cx, report, fields) -> list[dict]:
    checks: list[dict] = []
    pure = report["pure"]
    dual = report["dual_graph"]
    s = dual["n_vertices"] if dual else None
    t = dual["n_edges"] if dual else None
    kappa = dual["vertex_connectivity"] if dual else None
    lam = dual["edge_connectivity"] if dual else None
    diam = None
    if dual:
        diam = inf if dual["diameter"] == "infinite" else dual["diameter"]
    height = report["height"]
    gen_degree = report["max_generator_degree"]
    n = report["n_vertices"]
    not_pure = "complex is not pure"

    if pure:
        checks.append(
            _check(
                "multiplicity_facet_count",
                "multiplicity equals the facet count for nonface ideals",
                STATUS_PASS if report["multiplicity"] == report["n_facets"] else STATUS_FAIL,
                f"h(1) = {report['multiplicity']}, facets = {report['n_facets']}",
            )
        )
    else:
        checks.append(
            _check("multiplicity_facet_count",
                   "multiplicity equals the facet count for nonface ideals",
                   STATUS_NA, not_pure)
        )

    for field in fields:
        fname = str(field)
        fr = report["fields"][fname]
        cm = fr["cohen_macaulay"]
        reg = fr["regularity"]

        # Cohen-Macaulay quotients have connected dual graphs.
        if not pure:
            checks.append(_check("cm_connected_dual",
                                 "Cohen-Macaulay quotients have connected dual graphs",
                                 STATUS_NA, not_pure, field=fname))
        elif not cm:
            checks.append(_check("cm_connected_dual",
                                 "Cohen-Macaulay quotients have connected dual graphs",
                                 STATUS_NA, f"not Cohen-Macaulay over {fname}", field=fname))
        else:
            ok = diam != inf
            checks.append(_check("cm_connected_dual",
                                 "Cohen-Macaulay quotients have connected dual graphs",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"diameter = {_diam_value(diam)}", field=fname))

        # Gorenstein arrangements of regularity r have r-connected dual graphs.
        if not pure:
            checks.append(_check("gorenstein_regularity_connectivity",
                                 "Gorenstein quotients of regularity r have r-connected dual graphs",
                                 STATUS_NA, not_pure, field=fname))
        elif not fr["gorenstein"]:
            checks.append(_check("gorenstein_regularity_connectivity",
                                 "Gorenstein quotients of regularity r have r-connected dual graphs",
                                 STATUS_NA, f"not Gorenstein over {fname}", field=fname))
        else:
            g = graph_mod.dual_graph(cx)
            ok = reg == 0 or graph_mod.is_k_connected(g, reg)
            checks.append(_check("gorenstein_regularity_connectivity",
                                 "Gorenstein quotients of regularity r have r-connected dual graphs",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"regularity {reg}, vertex connectivity {kappa}", field=fname))

        # Homology spheres of dimension d have (d+1)-connected dual graphs.
        if not pure or not fr["homology_sphere"]:
            why = not_pure if not pure else f"not a homology sphere over {fname}"
            checks.append(_check("sphere_connectivity",
                                 "homology d-spheres have (d+1)-connected dual graphs",
                                 STATUS_NA, why, field=fname))
        else:
            d = report["dimension"]
            g = graph_mod.dual_graph(cx)
            ok = graph_mod.is_k_connected(g, d + 1)
            checks.append(_check("sphere_connectivity",
                                 "homology d-spheres have (d+1)-connected dual graphs",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"dimension {d}, vertex connectivity {kappa}", field=fname))

        # For CM quotients the regularity equals the h-polynomial degree.
        if not pure or not cm:
            why = not_pure if not pure else f"not Cohen-Macaulay over {fname}"
            checks.append(_check("cm_regularity_h_degree",
                                 "for Cohen-Macaulay quotients the regularity is the h-polynomial degree",
                                 STATUS_NA, why, field=fname))
        else:
            h = report["h_vector"]
            h_degree = max((j for j, v in enumerate(h) if v), default=0)
            checks.append(_check("cm_regularity_h_degree",
                                 "for Cohen-Macaulay quotients the regularity is the h-polynomial degree",
                                 STATUS_PASS if reg == h_degree else STATUS_FAIL,
                                 f"regularity {reg}, h-degree {h_degree}", field=fname))

        # CM complexes are normal.
        if not pure or not cm:
            why = not_pure if not pure else f"not Cohen-Macaulay over {fname}"
            checks.append(_check("cm_normal",
                                 "Cohen-Macaulay complexes are normal",
                                 STATUS_NA, why, field=fname))
        else:
            ok = report["normal"]
            checks.append(_check("cm_normal",
                                 "Cohen-Macaulay complexes are normal",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"normal = {ok}", field=fname))

        # Flag + CM: non-revisiting dual paths exist and the ideal is Hirsch.
        if not pure or not report["flag"] or not cm:
            why = (not_pure if not pure
                   else "nonface ideal not generated in degree 2" if not report["flag"]
                   else f"not Cohen-Macaulay over {fname}")
            checks.append(_check("flag_cm_nonrevisiting",
                                 "flag Cohen-Macaulay complexes join facets by non-revisiting paths"
                                 " and satisfy the Hirsch bound",
                                 STATUS_NA, why, field=fname))
        else:
            missing = _nonrevisiting_gap(cx)
            ok = missing is None and diam <= height
            detail = (f"paths found for all {s * (s - 1) // 2} facet pairs,"
                      f" diameter {_diam_value(diam)} <= height {height}"
                      if ok else
                      (f"no non-revisiting path between {missing[0]} and {missing[1]}"
                       if missing else f"diameter {_diam_value(diam)} > height {height}"))
            checks.append(_check("flag_cm_nonrevisiting",
                                 "flag Cohen-Macaulay complexes join facets by non-revisiting paths"
                                 " and satisfy the Hirsch bound",
                                 STATUS_PASS if ok else STATUS_FAIL, detail, field=fname))

        # Vertex-count bound from regularity for CM quotients.
        if not pure or not cm or height is None or height < 1:
            why = not_pure if not pure else (
                f"not Cohen-Macaulay over {fname}" if not cm else "height 0")
            checks.append(_check("cm_regularity_vertex_bound",
                                 "CM quotients of height c and regularity r have at most"
                                 " sum_i C(c+i-1, i) minimal primes",
                                 STATUS_NA, why, field=fname))
        else:
            bound = graph_mod.regularity_vertex_bound(height, reg)
            checks.append(_check("cm_regularity_vertex_bound",
                                 "CM quotients of height c and regularity r have at most"
                                 " sum_i C(c+i-1, i) minimal primes",
                                 STATUS_PASS if s <= bound else STATUS_FAIL,
                                 f"{s} facets <= bound {bound}", field=fname))

        # Larman-type diameter bound for CM monomial quotients.
        if not pure or not cm or n - (height or 0) - 3 < 0:
            why = (not_pure if not pure
                   else f"not Cohen-Macaulay over {fname}" if not cm
                   else f"n-c-3 = {n - height - 3} < 0")
            checks.append(_check("cm_larman_diameter_bound",
                                 "CM monomial quotients satisfy diam <= 2^(n-c-3) * n",
                                 STATUS_NA, why, field=fname))
        else:
            bound = graph_mod.larman_diameter_bound(n, height)
            ok = diam != inf and diam <= bound
            checks.append(_check("cm_larman_diameter_bound",
                                 "CM monomial quotients satisfy diam <= 2^(n-c-3) * n",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"diameter {_diam_value(diam)} <= bound {bound}", field=fname))

        # Small-case Hirsch guarantees.
        cases = _small_hirsch_cases(report, fr, fname)
        if not pure:
            checks.append(_check("small_case_hirsch",
                                 "small-case guarantees force the Hirsch bound",
                                 STATUS_NA, not_pure, field=fname))
        elif not cases:
            checks.append(_check("small_case_hirsch",
                                 "small-case guarantees force the Hirsch bound",
                                 STATUS_NA, "no small case applies", field=fname))
        else:
            ok = report["hirsch"]["verdict"] == HirschVerdict.HIRSCH.value
            checks.append(_check("small_case_hirsch",
                                 "small-case guarantees force the Hirsch bound",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 "applicable: " + "; ".join(cases), field=fname))

    # Field-independent checks on the dual graph.
    if pure:
        # Complete intersections (pairwise-disjoint minimal nonfaces) with
        # minimal generator degree d have (d-1)c-connected dual graphs.
        nonfaces = [set(nf) for nf in report["minimal_nonfaces"]]
        disjoint = all(
            not (a & b) for a, b in itertools.combinations(nonfaces, 2)
        )
        if nonfaces and disjoint:
            d_min = min(len(nf) for nf in nonfaces)
            level = (d_min - 1) * height
            g = graph_mod.dual_graph(cx)
            ok = level == 0 or graph_mod.is_k_connected(g, level)
            checks.append(_check("complete_intersection_connectivity",
                                 "complete intersections of height c with minimal generator"
                                 " degree d have (d-1)c-connected dual graphs",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"(d-1)c = {level}, vertex connectivity {kappa}"))
        else:
            checks.append(_check("complete_intersection_connectivity",
                                 "complete intersections of height c with minimal generator"
                                 " degree d have (d-1)c-connected dual graphs",
                                 STATUS_NA,
                                 "nonface ideal is not a complete intersection"
                                 if nonfaces else "the nonface ideal is zero"))
        k = gen_degree
        if k >= 1 and height and height >= 1:
            bound = graph_mod.degree_vertex_bound(k, height)
            checks.append(_check("generator_degree_vertex_bound",
                                 "height-c ideals generated in degree <= k have at most k^c minimal primes",
                                 STATUS_PASS if s <= bound else STATUS_FAIL,
                                 f"{s} facets <= bound {bound} (k={k}, c={height})"))
        else:
            checks.append(_check("generator_degree_vertex_bound",
                                 "height-c ideals generated in degree <= k have at most k^c minimal primes",
                                 STATUS_NA, "the nonface ideal is zero"))

        if s >= 2 and kappa and kappa >= 1:
            bound_a, _ = graph_mod.menger_diameter_bounds(s, t, kappa)
            _, bound_b = graph_mod.menger_diameter_bounds(s, t, lam)
            ok = diam <= bound_a and diam <= bound_b
            checks.append(_check("connectivity_diameter_bounds",
                                 "connectivity bounds the diameter: floor((s-2)/k)+1 and floor(t/k)",
                                 STATUS_PASS if ok else STATUS_FAIL,
                                 f"diameter {_diam_value(diam)} <= {bound_a}, {bound_b}"))
        else:
            checks.append(_check("connectivity_diameter_bounds",
                                 "connectivity bounds the diameter: floor((s-2)/k)+1 and floor(t/k)",
                                 STATUS_NA, "dual graph disconnected or trivial"))

        if height is not None and height >= 2 and gen_degree >= 1 and diam != inf:
            bound = graph_mod.degree_diameter_bound(gen_degree, height)
            checks.append(_check("degree_diameter_bound",
                                 "connected height-c ideals generated in degree <= d have diam <= d^c - 2",
                                 STATUS_PASS if diam <= bound else STATUS_FAIL,
                                 f"diameter {diam} <= bound {bound}"))
        else:
            checks.append(_check("degree_diameter_bound",
                                 "connected height-c ideals generated in degree <= d have diam <= d^c - 2",
                                 STATUS_NA, "needs height >= 2 and a connected dual graph"))

        g = graph_mod.dual_graph(cx)
        witness = graph_mod.contains_forbidden_line_graph(g)
        checks.append(_check("forbidden_pattern_screen",
                             "dual graphs of pure complexes never contain the forbidden"
                             " 6-vertex pattern as an induced subgraph",
                             STATUS_PASS if witness is None else STATUS_FAIL,
                             "pattern absent" if witness is None else f"witness {witness}"))
    return checks


def _nonrevisiting_gap(cx):
    """First facet pair with no non-revisiting dual path, or None."""
    facets = cx.facet_labels()
    for f1, f2 in itertools.combinations(facets, 2):
        if graph_mod.non_revisiting_path(cx, f1, f2) is None:
            return (",".join(map(str, f1)), ",".join(map(str, f2)))
    return None


def _small_hirsch_cases(report, fr, fname) -> list[str]:
    cases = []
    if report["n_facets"] == 1:
        cases.append("prime ideal (single facet)")
    if report["dimension"] == 0:
        cases.append("finite set of points")
    if report["height"] == 1:
        cases.append("hypersurface (height 1)")
    if fr["cohen_macaulay"] and fr["regularity"] <= 1:
        cases.append(f"Cohen-Macaulay of regularity <= 1 over {fname}")
    if report["n_vertices"] <= 3:
        cases.append("at most 3 variables")
    if (report["height"] == 2 and report["max_generator_degree"] <= 2
            and fr["cohen_macaulay"]):
        cases.append(f"height-2 quadratic Cohen-Macaulay over {fname}")
    if fr["gorenstein"] and fr["regularity"] == 2:
        cases.append(f"Gorenstein of regularity 2 over {fname}")
    return cases


# -- arrangements ---------------------------------------------------------------


def build_arrangement_report(
    arr,
    descriptor: str = "arrangement",
    regularity_certificate: int | None = None,
    ds_subset=None,
    sections_applied: int = 0,
) -> dict:
    rep = arr_mod.analyze_arrangement(
        arr, regularity_certificate=regularity_certificate, ds_subset=ds_subset
    )
    out = {
        "kind": "arrangement",
        "input": descriptor,
        "n_vars": rep.n_vars,
        "n_components": arr.n_components,
        "heights": list(rep.heights),
        "unmixed": rep.unmixed,
        "height": rep.common_height,
        "multiplicity": rep.multiplicity,
        "sections_applied": sections_applied,
        "dual_graph": _graph_stats(rep.dual_graph) if rep.dual_graph else None,
        "hirsch": None,
        "derksen_sidman_bound": rep.derksen_sidman,
        "checks": [],
        "warnings": [],
    }
    checks = out["checks"]
    if not rep.unmixed:
        out["warnings"].append("arrangement is mixed: dual graph undefined")
        checks.append(_check("regularity_connectivity",
                             "Gorenstein arrangements of regularity r have r-connected dual graphs",
                             STATUS_NA, "arrangement is not height-unmixed"))
        return out

    out["hirsch"] = {
        "diameter": _diam_value(rep.diameter),
        "height": rep.common_height,
        "verdict": rep.verdict.value,
    }
    checks.append(_check("multiplicity_component_count",
                         "for subspace arrangements the multiplicity is the number of components",
                         STATUS_PASS if rep.multiplicity == arr.n_components else STATUS_FAIL,
                         f"{rep.multiplicity} = {arr.n_components}"))
    if rep.regularity_check is not None:
        rc = rep.regularity_check
        checks.append(_check("regularity_connectivity",
                             "Gorenstein arrangements of regularity r have r-connected dual graphs",
                             STATUS_PASS if rc.passed else STATUS_FAIL,
                             f"caller-certified regularity {rc.required}: {rc.note}"
                             + (f"; cut {list(map(str, rc.cut))}" if rc.cut else "")))
    else:
        checks.append(_check("regularity_connectivity",
                             "Gorenstein arrangements of regularity r have r-connected dual graphs",
                             STATUS_NA,
                             "no regularity certificate supplied"
                             " (Gorensteinness of arrangements is not computed here)"))
    if rep.common_height == 1:
        ok = rep.dual_graph.is_complete()
        checks.append(_check("height_one_complete",
                             "height-1 ideals have complete dual graphs",
                             STATUS_PASS if ok else STATUS_FAIL,
                             f"complete = {ok}"))
    if rep.common_height == rep.n_vars - 1:
        ok = rep.dual_graph.is_complete()
        checks.append(_check("points_complete",
                             "ideals of finite point sets have complete dual graphs",
                             STATUS_PASS if ok else STATUS_FAIL,
                             f"complete = {ok}"))
    small = []
    if arr.n_components == 1:
        small.append("prime ideal")
    if rep.common_height == 1:
        small.append("hypersurface")
    if rep.common_height == rep.n_vars - 1:
        small.append("finite set of points")
    if rep.n_vars <= 3:
        small.append("at most 3 variables")
    if small:
        ok = out["hirsch"]["verdict"] == HirschVerdict.HIRSCH.value
        checks.append(_check("small_case_hirsch",
                             "small-case guarantees force the Hirsch bound",
                             STATUS_PASS if ok else STATUS_FAIL,
                             "applicable: " + "; ".join(small)))
    else:
        checks.append(_check("small_case_hirsch",
                             "small-case guarantees force the Hirsch bound",
                             STATUS_NA, "no small case applies"))
    dual = out["dual_graph"]
    if dual["n_vertices"] >= 2 and dual["vertex_connectivity"] >= 1:
        s, t = dual["n_vertices"], dual["n_edges"]
        bound_a, _ = graph_mod.menger_diameter_bounds(s, t, dual["vertex_connectivity"])
        _, bound_b = graph_mod.menger_diameter_bounds(s, t, dual["edge_connectivity"])
        diam = rep.diameter
        ok = diam <= bound_a and diam <= bound_b
        checks.append(_check("connectivity_diameter_bounds",
                             "connectivity bounds the diameter: floor((s-2)/k)+1 and floor(t/k)",
                             STATUS_PASS if ok else STATUS_FAIL,
                             f"diameter {_diam_value(diam)} <= {bound_a}, {bound_b}"))
    return out


# -- lines ------------------------------------------------------------------------


def build_lines_report(arr, descriptor: str = "lines") -> dict:
    pairs = arr.intersection_pairs()
    ok, pt = lines_mod.no_triple_points(arr)
    out = {
        "kind": "lines",
        "input": descriptor,
        "ambient_dim": arr.ambient_dim,
        "n_lines": arr.n_lines,
        "n_intersections": len(pairs),
        "triple_point_free": ok,
        "offending_point": None if ok else list(pt),
        "genus": None,
        "height": None,
        "dual_graph": _graph_stats(lines_mod.dual_graph(arr)),
        "three_edge_connected": None,
        "verdict": None,
        "branch": None,
        "trivalent_three_connected": None,
        "checks": [],
        "warnings": [],
    }
    checks = out["checks"]
    statement = ("canonically embedded triple-point-free line arrangements"
                 " satisfy diam <= height = genus - 2")
    try:
        report = lines_mod.canonical_hirsch_verdict(arr)
    except HypothesisError as exc:
        out["warnings"].append(str(exc))
        if ok:
            out["genus"] = lines_mod.genus(arr)
            out["height"] = out["genus"] - 2
        checks.append(_check("canonical_hirsch", statement, STATUS_NA, str(exc)))
        return out
    out["genus"] = report.genus
    out["height"] = report.height
    out["three_edge_connected"] = report.three_edge_connected
    out["verdict"] = report.verdict
    out["branch"] = report.branch
    out["trivalent_three_connected"] = report.trivalent_three_connected
    if report.verdict == lines_mod.VERDICT_NOT_EMBEDDABLE:
        checks.append(_check("canonical_hirsch", statement, STATUS_NA,
                             f"dual graph is only {report.edge_connectivity}-edge-connected:"
                             " not canonically embeddable"))
    else:
        ok_h = report.verdict == lines_mod.VERDICT_HIRSCH
        checks.append(_check("canonical_hirsch", statement,
                             STATUS_PASS if ok_h else STATUS_FAIL,
                             f"diameter {_diam_value(report.diameter)} vs height {report.height}"
                             f" ({report.branch} branch)"))
        if report.branch == "trivalent":
            checks.append(_check("trivalent_three_connected",
                                 "3-edge-connected trivalent graphs are 3-connected",
                                 STATUS_PASS if report.trivalent_three_connected else STATUS_FAIL,
                                 f"3-connected = {report.trivalent_three_connected}"))
    return out


# -- graphs -------------------------------------------------------------------------


def build_graph_report(g: Graph, descriptor: str = "graph") -> dict:
    out = {
        "kind": "graph",
        "input": descriptor,
        "n_vertices": g.n,
        "n_edges": g.m,
        "min_degree": g.min_degree() if g.n else None,
        "diameter": _diam_value(graph_mod.diameter(g)) if g.n else None,
        "vertex_connectivity": None,
        "edge_connectivity": None,
        "forbidden_subgraph_witness": None,
        "line_realizability": "unknown",
        "checks": [],
        "warnings": [],
    }
    if g.n >= 2:
        kappa, _ = graph_mod.vertex_connectivity(g)
        lam, _ = graph_mod.edge_connectivity(g)
        out["vertex_connectivity"] = kappa
        out["edge_connectivity"] = lam
    checks = out["checks"]
    witness = graph_mod.contains_forbidden_line_graph(g)
    if witness is not None:
        out["forbidden_subgraph_witness"] = {str(k): str(v) for k, v in witness.items()}
        out["line_realizability"] = "not_realizable"
        detail = ("contains the forbidden 6-vertex pattern: not realizable as the"
                  " dual graph of a line arrangement or of a pure simplicial complex")
        status = STATUS_FAIL
    else:
        detail = ("pattern absent: realizability unknown"
                  " (only the necessary condition is checked)")
        status = STATUS_PASS
    checks.append(_check("forbidden_pattern_screen",
                         "dual graphs of line arrangements never contain the forbidden"
                         " 6-vertex pattern as an induced subgraph",
                         status, detail))
    try:
        cg = lines_mod.check_canonical_graph(g)
        checks.append(_check("canonical_graph_diameter",
                             "3-edge-connected graphs on s >= 4 vertices modelling canonical"
                             " curves satisfy diam <= t - s - 1",
                             STATUS_PASS if cg.passed else STATUS_FAIL,
                             f"diameter {_diam_value(cg.diameter)} vs t-s-1 = {cg.height}"
                             f" ({cg.branch} branch)"))
    except HypothesisError as exc:
        checks.append(_check("canonical_graph_diameter",
                             "3-edge-connected graphs on s >= 4 vertices modelling canonical"
                             " curves satisfy diam <= t - s - 1",
                             STATUS_NA, str(exc)))
    if g.n >= 2 and out["vertex_connectivity"] >= 1:
        bound_a, _ = graph_mod.menger_diameter_bounds(g.n, g.m, out["vertex_connectivity"])
        _, bound_b = graph_mod.menger_diameter_bounds(g.n, g.m, out["edge_connectivity"])
        diam = graph_mod.diameter(g)
        ok = diam <= bound_a and diam <= bound_b
        checks.append(_check("connectivity_diameter_bounds",
                             "connectivity bounds the diameter: floor((s-2)/k)+1 and floor(t/k)",
                             STATUS_PASS if ok else STATUS_FAIL,
                             f"diameter {_diam_value(diam)} <= {bound_a}, {bound_b}"))
    return out


# -- text rendering ------------------------------------------------------------------


def _fmt(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def _render_checks(checks, lines):
    if not checks:
        return
    lines.append("checks:")
    for c in checks:
        tag = {"pass": "pass", "fail": "FAIL", "not_applicable": "not applicable"}[c["status"]]
        field = f" [{c['field']}]" if c["field"] else ""
        lines.append(f"  [{tag}] {c['id']}{field}: {c['detail']}")


def render_text(report: dict) -> str:
    kind = report["kind"]
    lines = [f"== {kind} analysis: {report['input']}"]
    if kind == "complex":
        lines.append(
            f"vertices: {report['n_vertices']}   facets: {report['n_facets']}"
            f"   dimension: {_fmt(report.get('dimension'))}"
            f"   pure: {_fmt(report.get('pure'))}   flag: {_fmt(report.get('flag'))}"
        )
        lines.append(f"f-vector: {_fmt(report.get('f_vector'))}")
        lines.append(f"h-vector: {_fmt(report.get('h_vector'))}")
        lines.append(
            f"height: {_fmt(report.get('height'))}"
            f"   multiplicity: {_fmt(report.get('multiplicity'))}"
            f"   max generator degree: {_fmt(report.get('max_generator_degree'))}"
        )
        nf = report.get("minimal_nonfaces")
        if nf is not None:
            lines.append("minimal nonfaces: " + (" ".join(",".join(f) for f in nf) or "-"))
        for fname, fr in (report.get("fields") or {}).items():
            lines.append(
                f"[{fname}] Cohen-Macaulay: {_fmt(fr['cohen_macaulay'])}"
                f"   Gorenstein: {_fmt(fr['gorenstein'])}"
                f"   homology sphere: {_fmt(fr['homology_sphere'])}"
            )
            wit = fr["regularity_witness"]
            lines.append(
                f"[{fname}] regularity: {fr['regularity']}"
                f"   witness: W={{{','.join(wit['vertices'])}}} index {wit['index']}"
                f"   reduced betti: {_fmt(fr['reduced_betti'])}"
            )
        lines.append(f"normal: {_fmt(report.get('normal'))}")
    elif kind == "arrangement":
        lines.append(
            f"variables: {report['n_vars']}   components: {report['n_components']}"
            f"   heights: {_fmt(report['heights'])}   unmixed: {_fmt(report['unmixed'])}"
        )
        lines.append(
            f"height: {_fmt(report['height'])}   multiplicity: {report['multiplicity']}"
            f"   derksen-sidman bound: {report['derksen_sidman_bound']}"
            f"   sections applied: {report['sections_applied']}"
        )
    elif kind == "lines":
        lines.append(
            f"ambient: P^{report['ambient_dim']}   lines: {report['n_lines']}"
            f"   intersections: {report['n_intersections']}"
            f"   triple-point free: {_fmt(report['triple_point_free'])}"
        )
        if report["offending_point"]:
            lines.append(f"offending point: {report['offending_point']}")
        lines.append(
            f"genus: {_fmt(report['genus'])}   height: {_fmt(report['height'])}"
            f"   3-edge-connected: {_fmt(report['three_edge_connected'])}"
            f"   verdict: {_fmt(report['verdict'])}"
        )
    elif kind == "graph":
        lines.append(
            f"vertices: {report['n_vertices']}   edges: {report['n_edges']}"
            f"   min degree: {_fmt(report['min_degree'])}"
        )
        lines.append(
            f"kappa: {_fmt(report['vertex_connectivity'])}"
            f"   lambda: {_fmt(report['edge_connectivity'])}"
            f"   diameter: {_fmt(report['diameter'])}"
        )
        lines.append(f"line realizability: {report['line_realizability']}")

    dual = report.get("dual_graph")
    if dual:
        lines.append(
            f"dual graph: {dual['n_vertices']} vertices, {dual['n_edges']} edges,"
            f" kappa={_fmt(dual['vertex_connectivity'])},"
            f" lambda={_fmt(dual['edge_connectivity'])},"
            f" diameter={_fmt(dual['diameter'])}"
        )
    hirsch = report.get("hirsch")
    if hirsch:
        lines.append(
            f"hirsch: diameter {hirsch['diameter']} vs height {hirsch['height']}"
            f" -> {hirsch['verdict']}"
        )
    for w in report.get("warnings", ()):
        lines.append(f"warning: {w}")
    _render_checks(report.get("checks", ()), lines)
    return "\n".join(lines) + "\n"
