"""Rational linear subspace arrangements.

A component is a list of linear forms (exact rational coefficient vectors);
its height is the rank of that coefficient matrix. Components are compared
as row spaces, so listing redundant or rescaled forms changes nothing. Two
components are adjacent in the dual graph exactly when stacking their forms
raises the rank by one over the common height.

Everything is exact; the only randomness is the seeded generic hyperplane
section, which verifies its own postconditions and retries with the next
seed rather than arguing genericity symbolically.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex
from .errors import HypothesisError, InputError, NotUnmixedError, SectionError
from .graphs import Graph, HirschVerdict, diameter, hirsch_verdict, is_k_connected, vertex_connectivity
from .linalg import QQ, RationalMatrix, rank

_SECTION_COEFF_MAX = 2**16
_SECTION_MAX_ATTEMPTS = 32


def _as_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"coefficient {x!r} is not an exact rational")


class SubspaceArrangement:
    """A list of components, each a list of length-n rational linear forms."""

    def __init__(self, n_vars: int, components):
        if n_vars < 1:
            raise InputError("need at least one variable")
        self.n_vars = n_vars
        comps = []
        for forms in components:
            rows = []
            for form in forms:
                row = tuple(_as_fraction(c) for c in form)
                if len(row) != n_vars:
                    raise InputError(
                        f"form has {len(row)} coefficients, expected {n_vars}"
                    )
                rows.append(row)
            if not rows or all(not any(r) for r in rows):
                raise InputError("every component needs a nonzero form")
            comps.append(tuple(rows))
        if not comps:
            raise InputError("arrangement needs at least one component")
        self.components = tuple(comps)
        self._heights = tuple(
            rank(RationalMatrix(c, cols=n_vars)) for c in self.components
        )
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if self._heights[i] == self._heights[j] == self._stacked_rank(i, j):
                    raise InputError(
                        f"components {i + 1} and {j + 1} have the same row space"
                    )

    @property
    def n_components(self) -> int:
        return len(self.components)

    def _stacked_rank(self, i: int, j: int) -> int:
        stacked = list(self.components[i]) + list(self.components[j])
        return rank(RationalMatrix(stacked, cols=self.n_vars))

    def component_height(self, i: int) -> int:
        return self._heights[i]

    @property
    def heights(self) -> tuple[int, ...]:
        return self._heights

    def is_unmixed(self) -> bool:
        return len(set(self._heights)) == 1

    def common_height(self) -> int:
        if not self.is_unmixed():
            raise NotUnmixedError(f"component heights differ: {self._heights}")
        return self._heights[0]

    def multiplicity(self) -> int:
        """For subspace arrangements the multiplicity is the component count."""
        return self.n_components

    def dimension(self) -> int:
        """Krull dimension n - c of the quotient (unmixed only)."""
        return self.n_vars - self.common_height()

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceArrangement)
            and self.n_vars == other.n_vars
            and self.components == other.components
        )

    def __repr__(self):
        return f"SubspaceArrangement({self.n_components} components in {self.n_vars} variables)"


def dual_edge_indices(arr: SubspaceArrangement) -> set[tuple[int, int]]:
    """Pairs (i, j) whose stacked coefficient rank is exactly height + 1."""
    c = arr.common_height()
    out = set()
    for i in range(arr.n_components):
        for j in range(i + 1, arr.n_components):
            if arr._stacked_rank(i, j) == c + 1:
                out.add((i, j))
    return out


def dual_graph(arr: SubspaceArrangement) -> Graph:
    """Dual graph on components 1..s, edges where the pairwise sum has
    height exactly one more than the common height."""
    labels = [str(i + 1) for i in range(arr.n_components)]
    edges = [(labels[i], labels[j]) for i, j in sorted(dual_edge_indices(arr))]
    return Graph(labels, edges)


def from_complex(cx: SimplicialComplex) -> SubspaceArrangement:
    """Coordinate arrangement of a pure complex: one component per facet,
    generated by the coordinates outside the facet.

    Postcondition (checked): its dual graph coincides with the dual graph
    of the complex under the facet order.
    """
    from .graphs import dual_adjacency

    if not cx.is_pure:
        raise HypothesisError("coordinate arrangements need a pure complex")
    n = cx.n_vertices
    components = []
    for f in cx.facets:
        forms = []
        for i in range(n):
            if not f >> i & 1:
                row = [Fraction(0)] * n
                row[i] = Fraction(1)
                forms.append(tuple(row))
        if not forms:
            raise HypothesisError("the full simplex has the zero ideal")
        components.append(tuple(forms))
    arr = SubspaceArrangement(n, components)
    if dual_edge_indices(arr) != dual_adjacency(cx):
        raise AssertionError("coordinate arrangement dual graph mismatch")
    return arr


def generic_hyperplane_section(
    arr: SubspaceArrangement,
    seed: int = 0,
    max_attempts: int = _SECTION_MAX_ATTEMPTS,
) -> SubspaceArrangement:
    """Substitute the last variable by a random combination of the others.

    Requires an unmixed arrangement of quotient dimension >= 3, which is
    what guarantees the dual graph survives the cut. Coefficients are drawn
    from a seeded PRNG as integers in [1, 2^16]; the stated postconditions
    (component count, all heights, dual graph) are verified and a failed
    draw retries with the incremented seed.
    """
    c = arr.common_height()
    n = arr.n_vars
    if any(h >= n for h in arr.heights):
        raise HypothesisError("a component already has full height")
    if n - c < 3:
        raise HypothesisError(
            f"quotient dimension {n - c} < 3: the section need not preserve the dual graph"
        )
    want_edges = dual_edge_indices(arr)
    last_error = "no attempts made"
    for attempt in range(max_attempts):
        rng = random.Random(seed + attempt)
        coeffs = [rng.randint(1, _SECTION_COEFF_MAX) for _ in range(n - 1)]
        components = []
        for forms in arr.components:
            new_forms = []
            for form in forms:
                head, tail = form[: n - 1], form[n - 1]
                new_forms.append(tuple(a + tail * k for a, k in zip(head, coeffs)))
            components.append(tuple(new_forms))
        try:
            sliced = SubspaceArrangement(n - 1, components)
        except InputError:
            last_error = "components collapsed to a common row space"
            continue
        if sliced.heights != arr.heights:
            last_error = f"component heights changed: {arr.heights} -> {sliced.heights}"
            continue
        if dual_edge_indices(sliced) != want_edges:
            last_error = "dual graph changed under the section"
            continue
        return sliced
    raise SectionError(
        f"no generic section found in {max_attempts} attempts (seed {seed}): {last_error}"
    )


def derksen_sidman_bound(arr: SubspaceArrangement, subset) -> int:
    """Regularity bound |B| - 1 for the sub-arrangement on component
    indices B (0-based)."""
    indices = sorted(set(subset))
    if not indices:
        raise InputError("subset of components must be nonempty")
    for i in indices:
        if not 0 <= i < arr.n_components:
            raise InputError(f"component index {i} out of range")
    return len(indices) - 1


@dataclass(frozen=True)
class ConnectivityCheck:
    """Outcome of an r-connectivity check on the dual graph."""

    required: int
    passed: bool
    cut: tuple | None
    note: str


def check_regularity_connectivity(arr: SubspaceArrangement, r: int) -> ConnectivityCheck:
    """Verify that the dual graph is r-connected.

    For arrangements with a Gorenstein quotient of regularity r this must
    hold; r is supplied by the caller as an external certificate, since
    Gorensteinness of non-coordinate arrangements is not computed here.
    """
    if r < 1:
        raise InputError("connectivity level r must be >= 1")
    if not arr.is_unmixed():
        raise NotUnmixedError("connectivity check requires an unmixed arrangement")
    g = dual_graph(arr)
    if g.n < r + 1:
        return ConnectivityCheck(
            r, False, None, f"only {g.n} components, need at least {r + 1}"
        )
    if is_k_connected(g, r):
        return ConnectivityCheck(r, True, None, f"dual graph is {r}-connected")
    if g.n >= 2:
        kappa, cut = vertex_connectivity(g)
        return ConnectivityCheck(
            r, False, cut, f"vertex connectivity is {kappa} < {r}"
        )
    return ConnectivityCheck(r, False, None, "single component")


@dataclass
class ArrangementReport:
    """Everything the analyzer derives from one arrangement."""

    n_vars: int
    heights: tuple[int, ...]
    unmixed: bool
    common_height: int | None
    multiplicity: int
    dual_graph: Graph | None
    diameter: float | int | None
    vertex_connectivity: int | None
    edge_connectivity: int | None
    verdict: HirschVerdict | None
    derksen_sidman: int
    regularity_check: ConnectivityCheck | None


def analyze_arrangement(
    arr: SubspaceArrangement,
    regularity_certificate: int | None = None,
    ds_subset=None,
) -> ArrangementReport:
    from .graphs import edge_connectivity

    unmixed = arr.is_unmixed()
    g = diam = kappa = lam = verdict = check = None
    common = None
    if unmixed:
        common = arr.common_height()
        g = dual_graph(arr)
        diam = diameter(g)
        if g.n >= 2:
            kappa, _ = vertex_connectivity(g)
            lam, _ = edge_connectivity(g)
        verdict = hirsch_verdict(diam, common)
        if regularity_certificate is not None:
            check = check_regularity_connectivity(arr, regularity_certificate)
    ds = derksen_sidman_bound(
        arr, range(arr.n_components) if ds_subset is None else ds_subset
    )
    return ArrangementReport(
        n_vars=arr.n_vars,
        heights=arr.heights,
        unmixed=unmixed,
        common_height=common,
        multiplicity=arr.multiplicity(),
        dual_graph=g,
        diameter=diam,
        vertex_connectivity=kappa,
        edge_connectivity=lam,
        verdict=verdict,
        derksen_sidman=ds,
        regularity_check=check,
    )


# -- JSON format ------------------------------------------------------------------


def _coeff_to_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def arrangement_to_json_dict(arr: SubspaceArrangement) -> dict:
    return {
        "variables": arr.n_vars,
        "components": [
            [[_coeff_to_json(c) for c in form] for form in comp]
            for comp in arr.components
        ],
    }


def arrangement_from_json_dict(data: dict) -> SubspaceArrangement:
    try:
        n = data["variables"]
        comps = data["components"]
    except (KeyError, TypeError):
        raise InputError(
            'arrangement JSON needs "variables" and "components"'
        ) from None
    if not isinstance(n, int):
        raise InputError('"variables" must be an integer')
    return SubspaceArrangement(n, comps)


def read_arrangement_file(path) -> SubspaceArrangement:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad arrangement JSON: {exc}") from None
    return arrangement_from_json_dict(data)


def write_arrangement_file(arr: SubspaceArrangement, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(arrangement_to_json_dict(arr), fh, indent=2)
        fh.write("\n")
