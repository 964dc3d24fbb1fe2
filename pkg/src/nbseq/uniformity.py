"""Recognition of k-uniform, total k-uniform and open k-uniform graphs.

``closed`` uniformity: every dominating CNS has the same length ``k``.
``total`` uniformity: every total dominating ONS has the same length.
``open`` uniformity: every dominating ONS has the same length.

Closed uniformity is decided in polynomial time from structure: after
collapsing true twins, a graph is k-uniform exactly when every connected
component is either complete (contributing 1) or has a complement that is a
disjoint union of complete bipartite graphs with both sides nonempty
(contributing 2).  The brute-force recognizers run the exact solvers from
:mod:`nbseq.sequences` and serve as the independent check.

Every report carries a certificate that :func:`verify_report` can replay
against the input graph.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Union

from .graph import (
    Graph,
    bits,
    component_masks,
    delete_closed_neighborhood,
    has_true_twins,
    induced_subgraph,
    mask_of,
    true_twin_class_masks,
)
from .sequences import (
    DEFAULT_SOLVER_CAP,
    CnsSolution,
    OnsSolution,
    SolverCapError,
    extend_to_dominating_cns,
    is_cns,
    is_dominating,
    is_ons,
    is_total_dominating,
)

KINDS = ("closed", "total", "open")
UNIFORM, NON_UNIFORM, UNDEFINED = "uniform", "non_uniform", "undefined"


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class ComponentPiece:
    """One connected component of a structural decomposition.

    ``k`` is 1 for a complete component, 2 otherwise; for ``k == 2``,
    ``pieces`` lists the complete bipartite pieces of the component's
    complement as ``(side_a, side_b)`` pairs.
    """

    vertices: tuple[int, ...]
    k: int
    pieces: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()


@dataclass(frozen=True)
class StructuralDecomposition:
    twin_classes: tuple[tuple[int, ...], ...]
    components: tuple[ComponentPiece, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "structural",
            "twin_classes": [list(c) for c in self.twin_classes],
            "components": [
                {
                    "vertices": list(c.vertices),
                    "k": c.k,
                    "pieces": [[list(a), list(b)] for a, b in c.pieces],
                }
                for c in self.components
            ],
        }


@dataclass(frozen=True)
class MultipartiteWitness:
    parts: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict[str, Any]:
        return {"type": "multipartite", "parts": [list(p) for p in self.parts]}


@dataclass(frozen=True)
class LengthWitness:
    """Two dominating sequences of different lengths.

    ``sequences`` may be empty when no solver run was affordable.
    """

    sequences: tuple[tuple[int, ...], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"type": "length_witness", "sequences": [list(s) for s in self.sequences]}


@dataclass(frozen=True)
class BruteForce:
    lengths: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"type": "brute_force", "lengths": list(self.lengths)}


Certificate = Union[StructuralDecomposition, MultipartiteWitness, LengthWitness, BruteForce]


@dataclass(frozen=True)
class UniformityReport:
    kind: str
    status: str
    k: int | None = None
    certificate: Certificate | None = field(default=None, compare=False)

    @property
    def is_uniform(self) -> bool:
        return self.status == UNIFORM

    def outcome(self) -> tuple[str, int | None]:
        return self.status, self.k

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "status": self.status,
            "k": self.k,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _tuples(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


def certificate_from_dict(d: dict[str, Any] | None) -> Certificate | None:
    if d is None:
        return None
    kind = d.get("type")
    if kind == "structural":
        comps = tuple(
            ComponentPiece(
                tuple(c["vertices"]),
                int(c["k"]),
                tuple((tuple(a), tuple(b)) for a, b in c.get("pieces", [])),
            )
            for c in d["components"]
        )
        return StructuralDecomposition(_tuples(d["twin_classes"]), comps)
    if kind == "multipartite":
        return MultipartiteWitness(_tuples(d["parts"]))
    if kind == "length_witness":
        return LengthWitness(_tuples(d["sequences"]))
    if kind == "brute_force":
        return BruteForce(tuple(int(x) for x in d["lengths"]))
    raise ValueError(f"unknown certificate type {kind!r}")


def report_from_dict(d: dict[str, Any]) -> UniformityReport:
    if d["kind"] not in KINDS or d["status"] not in (UNIFORM, NON_UNIFORM, UNDEFINED):
        raise ValueError(f"malformed report {d!r}")
    return UniformityReport(d["kind"], d["status"], d.get("k"), certificate_from_dict(d.get("certificate")))


def report_from_json(text: str) -> UniformityReport:
    return report_from_dict(json.loads(text))


# -- structural predicates ------------------------------------------------------

def _ids(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def _is_clique(g: Graph, mask: int) -> bool:
    closed = g.closed
    return all(closed[v] & mask == mask for v in bits(mask))


def is_complete(g: Graph) -> bool:
    """True for K_n with n >= 1."""
    return g.n >= 1 and _is_clique(g, g.full_mask)


def _anticlique_parts(g: Graph, within: int) -> list[int] | None:
    # parts of G[within] if its complement is a disjoint union of cliques
    parts = []
    left = within
    adj = g.adj
    while left:
        v = (left & -left).bit_length() - 1
        part = within & ~adj[v]
        for u in bits(part):
            if within & ~adj[u] != part:
                return None
        parts.append(part)
        left &= ~part
    return parts


def is_complete_multipartite(g: Graph) -> list[frozenset[int]] | None:
    """Parts of ``g`` if it is complete multipartite with at least 2 parts."""
    parts = _anticlique_parts(g, g.full_mask)
    if parts is None or len(parts) < 2:
        return None
    return [frozenset(bits(p)) for p in parts]


def is_complete_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    parts = is_complete_multipartite(g)
    if parts is None or len(parts) != 2:
        return None
    return parts[0], parts[1]


def _coverage_pieces(g: Graph, within: int) -> list[tuple[int, int]] | None:
    """Complete bipartite pieces of the complement of ``G[within]``.

    Returns ``None`` unless every component of that complement is complete
    bipartite with both sides nonempty.  Sides are masks; side A holds the
    smallest vertex of the piece.
    """
    closed = g.closed
    co = {v: within & ~closed[v] for v in bits(within)}
    pieces = []
    left = within
    while left:
        a = (left & -left).bit_length() - 1
        side_b = co[a]
        if not side_b:
            return None
        side_a = co[(side_b & -side_b).bit_length() - 1]
        if side_a & side_b or not side_a >> a & 1:
            return None
        for v in bits(side_a):
            if co[v] != side_b:
                return None
        for v in bits(side_b):
            if co[v] != side_a:
                return None
        pieces.append((side_a, side_b))
        left &= ~(side_a | side_b)
    return pieces if pieces else None


def is_2_uniform_structural(g: Graph) -> list[tuple[frozenset[int], frozenset[int]]] | None:
    """Complete bipartite pieces of the complement, when ``g`` is 2-uniform."""
    pieces = _coverage_pieces(g, g.full_mask)
    if pieces is None:
        return None
    return [(frozenset(bits(a)), frozenset(bits(b))) for a, b in pieces]


def reduce_true_twins(g: Graph) -> tuple[Graph, list[frozenset[int]]]:
    """Quotient by true twins: one vertex per class, ordered by minimum id."""
    classes = true_twin_class_masks(g)
    reps = [(c & -c).bit_length() - 1 for c in classes]
    quotient, _ = induced_subgraph(g, sum(1 << r for r in reps))
    return quotient, [frozenset(bits(c)) for c in classes]


# -- closed uniformity ------------------------------------------------------------

def _structural_parts(g: Graph):
    """Shared core of the structural recognizer.

    Works on the twin-free quotient represented by ``reps``, the mask of the
    smallest vertex of each true-twin class.  Returns ``(classes, results)``
    where ``classes`` maps each representative to its class mask and
    ``results`` holds one ``(component_mask, contribution, pieces)`` per
    quotient component; ``contribution`` is ``None`` for a component that is
    neither complete nor 2-uniform.
    """
    classes = {(c & -c).bit_length() - 1: c for c in true_twin_class_masks(g)}
    reps = 0
    for r in classes:
        reps |= 1 << r
    results = []
    for comp in component_masks(g, reps):
        if _is_clique(g, comp):
            results.append((comp, 1, None))
            continue
        pieces = _coverage_pieces(g, comp)
        results.append((comp, 2 if pieces is not None else None, pieces))
    return classes, results


def structural_k(g: Graph) -> int | None:
    """The k for which ``g`` is k-uniform, or ``None``; no certificate."""
    _, results = _structural_parts(g)
    total = 0
    for _, contribution, _ in results:
        if contribution is None:
            return None
        total += contribution
    return total


def _expand(mask: int, classes: dict[int, int]) -> tuple[int, ...]:
    m = 0
    for r in bits(mask):
        m |= classes[r]
    return _ids(m)


def recognize_uniform_structural(g: Graph, cap: int | None = None) -> UniformityReport:
    """Polynomial-time closed-uniformity recognizer.

    A non-uniform verdict carries a :class:`LengthWitness` obtained by
    solving the first offending component exactly, provided that component
    (after twin reduction) fits under ``cap``.
    """
    classes, results = _structural_parts(g)
    bad = [comp for comp, contribution, _ in results if contribution is None]
    if bad:
        return UniformityReport("closed", NON_UNIFORM, None, _component_witness(g, bad[0], cap))
    components = []
    for comp, contribution, pieces in results:
        expanded = tuple((_expand(a, classes), _expand(b, classes)) for a, b in pieces or ())
        components.append(ComponentPiece(_expand(comp, classes), contribution, expanded))
    cert = StructuralDecomposition(tuple(_ids(c) for c in sorted(classes.values(), key=lambda c: c & -c)), tuple(components))
    return UniformityReport("closed", UNIFORM, sum(c.k for c in components), cert)


def _component_witness(g: Graph, comp: int, cap: int | None) -> LengthWitness:
    # comp is a component of the twin-free quotient, given in representative ids
    cap = DEFAULT_SOLVER_CAP if cap is None else cap
    if comp.bit_count() > cap:
        return LengthWitness()
    sub, relabel = induced_subgraph(g, comp)
    back = {new: old for old, new in relabel.items()}
    sol = CnsSolution(sub, cap)
    lengths = sol.lengths
    if len(lengths) < 2:  # pragma: no cover - would contradict the characterization
        raise AssertionError(f"offending component is uniform: {sorted(lengths)}")
    seqs = []
    for length in (min(lengths), max(lengths)):
        prefix = tuple(back[v] for v in sol.witness(length))
        seqs.append(extend_to_dominating_cns(g, prefix))
    return LengthWitness(tuple(seqs))


def is_k_uniform_bruteforce(g: Graph, cap: int | None = None) -> UniformityReport:
    sol = CnsSolution(g, cap)
    lengths = sorted(sol.lengths)
    if len(lengths) == 1:
        return UniformityReport("closed", UNIFORM, lengths[0], BruteForce(tuple(lengths)))
    seqs = (sol.witness(lengths[0]), sol.witness(lengths[-1]))
    return UniformityReport("closed", NON_UNIFORM, None, LengthWitness(seqs))


def residual_uniformity_check(g: Graph, v: int) -> bool:
    """Check that deleting ``N[v]`` from a k-uniform graph leaves a (k-1)-uniform one.

    When ``g`` has no true twins the residual must not have any either.
    """
    k = structural_k(g)
    if k is None:
        raise ValueError("graph is not k-uniform")
    residual, _ = delete_closed_neighborhood(g, v)
    if structural_k(residual) != k - 1:
        return False
    if not has_true_twins(g) and has_true_twins(residual):
        return False
    return True


# -- total and open uniformity ----------------------------------------------------

def _dominating_vertex(g: Graph) -> int | None:
    full = g.full_mask
    for v, c in enumerate(g.closed):
        if c == full:
            return v
    return None


def _classify_ons(g: Graph, kind: str, cap: int | None) -> UniformityReport:
    if g.n == 0 or g.has_isolated_vertex():
        return UniformityReport(kind, UNDEFINED)
    parts = is_complete_multipartite(g)
    if parts is not None and (kind == "total" or min(map(len, parts)) >= 2):
        witness = MultipartiteWitness(tuple(tuple(sorted(p)) for p in parts))
        return UniformityReport(kind, UNIFORM, 2, witness)
    if kind == "open":
        v = _dominating_vertex(g)
        if v is not None:
            u = 1 if v == 0 else 0
            return UniformityReport(kind, NON_UNIFORM, None, LengthWitness(((v,), (v, u))))
    try:
        sol = OnsSolution(g, cap)
    except SolverCapError as exc:
        raise SolverCapError(f"{kind} uniformity undecided structurally: {exc}") from None
    if kind == "total":
        lengths, witness = sorted(sol.total_lengths), sol.total_witness
    else:
        lengths, witness = sorted(sol.dominating_lengths), sol.dominating_witness
    if len(lengths) == 1:
        return UniformityReport(kind, UNIFORM, lengths[0], BruteForce(tuple(lengths)))
    seqs = (witness(lengths[0]), witness(lengths[-1]))
    return UniformityReport(kind, NON_UNIFORM, None, LengthWitness(seqs))


def classify_total_uniform(g: Graph, cap: int | None = None) -> UniformityReport:
    return _classify_ons(g, "total", cap)


def classify_open_uniform(g: Graph, cap: int | None = None) -> UniformityReport:
    return _classify_ons(g, "open", cap)


# -- certificate replay -------------------------------------------------------------

def _verify_structural(g: Graph, k: int | None, cert: StructuralDecomposition) -> bool:
    if sorted(map(mask_of, cert.twin_classes)) != sorted(true_twin_class_masks(g)):
        return False
    comp_masks = [mask_of(c.vertices) for c in cert.components]
    if sorted(comp_masks) != sorted(component_masks(g)):
        return False
    for c, m in zip(cert.components, comp_masks):
        if c.k == 1:
            if c.pieces or not _is_clique(g, m):
                return False
        elif c.k == 2:
            if len(c.pieces) < 2:
                return False
            sides = [(mask_of(a), mask_of(b)) for a, b in c.pieces]
            covered = 0
            for a, b in sides:
                if not a or not b or a & b or covered & (a | b):
                    return False
                covered |= a | b
                if not _is_clique(g, a) or not _is_clique(g, b):
                    return False
                if any(g.adj[v] & b for v in bits(a)):
                    return False
            if covered != m:
                return False
            for a, b in sides:
                rest = m & ~(a | b)
                if any(g.adj[v] & rest != rest for v in bits(a | b)):
                    return False
        else:
            return False
    return k == sum(c.k for c in cert.components)


def _verify_multipartite(g: Graph, kind: str, cert: MultipartiteWitness) -> bool:
    masks = [mask_of(p) for p in cert.parts]
    if len(masks) < 2 or sum(m.bit_count() for m in masks) != g.n:
        return False
    actual = _anticlique_parts(g, g.full_mask)
    if actual is None or sorted(masks) != sorted(actual):
        return False
    return kind == "total" or min(m.bit_count() for m in masks) >= 2


def _valid_sequence(g: Graph, kind: str, seq: tuple[int, ...]) -> bool:
    if kind == "closed":
        return is_cns(g, seq) and is_dominating(g, seq)
    if not is_ons(g, seq):
        return False
    return is_total_dominating(g, seq) if kind == "total" else is_dominating(g, seq)


def _brute_lengths(g: Graph, kind: str, cap: int | None) -> frozenset[int]:
    if kind == "closed":
        return CnsSolution(g, cap).lengths
    sol = OnsSolution(g, cap)
    return sol.total_lengths if kind == "total" else sol.dominating_lengths


def verify_report(g: Graph, report: UniformityReport, cap: int | None = None) -> bool:
    """Replay a report's certificate against ``g``.

    Brute-force certificates are recomputed, so they are only checkable for
    graphs under the solver cap (:class:`SolverCapError` otherwise).  A
    non-uniform report with an empty length witness is not checkable and
    returns ``False``.
    """
    kind, status, k, cert = report.kind, report.status, report.k, report.certificate
    if status == UNDEFINED:
        return kind != "closed" and (g.n == 0 or g.has_isolated_vertex())
    if isinstance(cert, StructuralDecomposition):
        return kind == "closed" and status == UNIFORM and _verify_structural(g, k, cert)
    if isinstance(cert, MultipartiteWitness):
        return kind != "closed" and status == UNIFORM and k == 2 and _verify_multipartite(g, kind, cert)
    if isinstance(cert, LengthWitness):
        seqs = cert.sequences
        return (
            status == NON_UNIFORM
            and len(seqs) == 2
            and len(seqs[0]) != len(seqs[1])
            and all(_valid_sequence(g, kind, s) for s in seqs)
        )
    if isinstance(cert, BruteForce):
        lengths = _brute_lengths(g, kind, cap)
        if tuple(sorted(lengths)) != cert.lengths:
            return False
        if status == UNIFORM:
            return len(lengths) == 1 and k in lengths
        return len(lengths) > 1
    return False
