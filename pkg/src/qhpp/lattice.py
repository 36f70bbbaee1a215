"""Divisor-class bookkeeping for iterated blow-ups of the projective plane.

Curve classes live in the lattice ``Z H + Z E1 + ... + Z En`` with
intersection form ``H.H = 1``, ``Ei.Ei = -1`` and all cross terms zero,
and are written ``d*H - sum(m_i E_i)``.  A :class:`SurfaceModel` tracks
named classes through a script of blow-ups; each step records which tracked
curves pass through the center and with what local multiplicity.  Tangency
is encoded by consecutive centers lying on both proper transforms, never by
a flag.  Projective existence of a configuration is not checked: the model
is exactly the class-level data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .hjcf import HJFraction

__all__ = [
    "ChainShapeError",
    "CurveClass",
    "BlowupStep",
    "SurfaceModel",
    "DualGraph",
]


class ChainShapeError(ValueError):
    """A curve list does not form a contractible chain."""


@dataclass(frozen=True)
class CurveClass:
    """A divisor class ``degree*H - sum(mults[i] * E_{i+1})``."""

    degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    def dot(self, other: "CurveClass") -> int:
        if len(self.mults) != len(other.mults):
            raise ValueError(
                f"classes live on different surfaces "
                f"({len(self.mults)} vs {len(other.mults)} blow-ups)"
            )
        return self.degree * other.degree - sum(
            a * b for a, b in zip(self.mults, other.mults)
        )

    @property
    def self_intersection(self) -> int:
        return self.dot(self)


@dataclass(frozen=True)
class BlowupStep:
    """One blow-up: the tracked curves through the center with their local
    multiplicities there, plus a name for the new exceptional curve
    (``E<n>`` by default)."""

    incidences: tuple[tuple[str, int], ...] = ()
    name: str | None = None

    def __post_init__(self) -> None:
        inc = tuple((str(n), int(m)) for n, m in self.incidences)
        object.__setattr__(self, "incidences", inc)
        names = [n for n, _ in inc]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate curve in incidences: {names}")
        for n, m in inc:
            if m < 1:
                raise ValueError(f"multiplicity must be >= 1, got {m} for {n!r}")


@dataclass(frozen=True)
class DualGraph:
    """Vertices labeled by self-intersection, edges weighted by pairwise
    intersection numbers (only weights > 0 are kept)."""

    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str, int], ...]

    def to_text(self) -> str:
        """One ``name self_int`` line per vertex, then one
        ``nameA nameB weight`` line per edge."""
        lines = [f"{name} {label}" for name, label in self.vertices]
        lines += [f"{a} {b} {w}" for a, b, w in self.edges]
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        out = ["graph dual {"]
        for name, label in self.vertices:
            out.append(f'  "{name}" [label="{name} ({label})"];')
        for a, b, w in self.edges:
            attr = f' [label="{w}"]' if w != 1 else ""
            out.append(f'  "{a}" -- "{b}"{attr};')
        out.append("}")
        return "\n".join(out) + "\n"

    def _adjacency(self) -> dict[str, dict[str, int]]:
        adj: dict[str, dict[str, int]] = {name: {} for name, _ in self.vertices}
        for a, b, w in self.edges:
            adj[a][b] = w
            adj[b][a] = w
        return adj

    def is_isomorphic_to(self, other: "DualGraph") -> bool:
        """Label- and weight-preserving graph isomorphism.

        Plain backtracking with signature pruning; fine for the small
        configurations that arise here.
        """
        if len(self.vertices) != len(other.vertices):
            return False
        if len(self.edges) != len(other.edges):
            return False
        labels_s = dict(self.vertices)
        labels_o = dict(other.vertices)
        adj_s = self._adjacency()
        adj_o = other._adjacency()

        def signature(v, labels, adj):
            return (labels[v], tuple(sorted((w, labels[n]) for n, w in adj[v].items())))

        sig_s = {v: signature(v, labels_s, adj_s) for v in labels_s}
        sig_o = {v: signature(v, labels_o, adj_o) for v in labels_o}
        if sorted(sig_s.values()) != sorted(sig_o.values()):
            return False
        candidates: dict[tuple, list[str]] = {}
        for v in labels_o:
            candidates.setdefault(sig_o[v], []).append(v)
        order = sorted(labels_s, key=lambda v: (len(candidates[sig_s[v]]), v))
        mapping: dict[str, str] = {}
        used: set[str] = set()

        def extend(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            for w in candidates[sig_s[v]]:
                if w in used:
                    continue
                if all(adj_s[v].get(u, 0) == adj_o[w].get(mapping[u], 0) for u in mapping):
                    mapping[v] = w
                    used.add(w)
                    if extend(i + 1):
                        return True
                    del mapping[v]
                    used.discard(w)
            return False

        return extend(0)


@dataclass(frozen=True)
class SurfaceModel:
    """Immutable Picard-lattice model of a blown-up plane.

    ``tracked`` maps curve names to classes (each with ``blowup_count``
    multiplicities); ``smooth`` lists the curves declared smooth rational,
    for which ``C.C + C.K = -2`` is enforced through every blow-up.
    """

    blowup_count: int
    tracked: Mapping[str, CurveClass]
    smooth: frozenset[str] = frozenset()

    @classmethod
    def plane(
        cls, degrees: Mapping[str, int], singular: Iterable[str] = ()
    ) -> "SurfaceModel":
        """The plane with named curves of the given degrees.

        Curves listed in ``singular`` (e.g. a nodal cubic) are exempt from
        the smooth-rational genus check until :meth:`declare_smooth`.
        """
        singular = frozenset(singular)
        unknown = singular - set(degrees)
        if unknown:
            raise ValueError(f"singular names not among curves: {sorted(unknown)}")
        tracked: dict[str, CurveClass] = {}
        for name, d in degrees.items():
            if d < 1:
                raise ValueError(f"curve degree must be >= 1, got {d} for {name!r}")
            if d > 2 and name not in singular:
                raise ValueError(
                    f"a smooth plane curve of degree {d} is not rational; "
                    f"list {name!r} as singular"
                )
            tracked[name] = CurveClass(d, ())
        return cls(0, tracked, frozenset(degrees) - singular)

    @property
    def canonical(self) -> CurveClass:
        """The canonical class ``-3H + E1 + ... + En``."""
        return CurveClass(-3, (-1,) * self.blowup_count)

    def curve(self, name: str) -> CurveClass:
        try:
            return self.tracked[name]
        except KeyError:
            raise KeyError(f"no tracked curve named {name!r}") from None

    def intersect(self, name_a: str, name_b: str) -> int:
        return self.curve(name_a).dot(self.curve(name_b))

    def self_int(self, name: str) -> int:
        return self.curve(name).self_intersection

    def k_dot(self, name: str) -> int:
        return self.curve(name).dot(self.canonical)

    def genus_term(self, name: str) -> int:
        """``C.C + C.K``; equals -2 exactly for smooth rational curves."""
        c = self.curve(name)
        return c.dot(c) + c.dot(self.canonical)

    def declare_smooth(self, name: str) -> "SurfaceModel":
        """Mark a tracked curve as smooth rational (requires genus 0)."""
        g = self.genus_term(name)
        if g != -2:
            raise ValueError(f"{name!r} has C.C + C.K = {g}, not -2")
        return SurfaceModel(self.blowup_count, dict(self.tracked), self.smooth | {name})

    def blow_up(self, step: BlowupStep) -> "SurfaceModel":
        """Blow up one point and return the new model.

        Each incident curve class C with multiplicity m becomes
        ``C - m * E_new``.  Over-assigned incidences are rejected: no
        pairwise intersection of tracked curves may go negative and no
        declared-smooth curve may fall below ``C.C + C.K = -2``.
        """
        n = self.blowup_count
        incident = dict(step.incidences)
        missing = sorted(set(incident) - set(self.tracked))
        if missing:
            raise KeyError(f"unknown curves in incidences: {missing}")
        name = step.name if step.name is not None else f"E{n + 1}"
        if name in self.tracked:
            raise ValueError(f"curve name {name!r} is already tracked")
        tracked: dict[str, CurveClass] = {}
        for nm, c in self.tracked.items():
            tracked[nm] = CurveClass(c.degree, c.mults + (incident.get(nm, 0),))
        tracked[name] = CurveClass(0, (0,) * n + (-1,))
        model = SurfaceModel(n + 1, tracked, self.smooth | {name})
        changed = list(incident) + [name]
        for a in changed:
            ca = tracked[a]
            for b, cb in tracked.items():
                if b == a:
                    continue
                if ca.dot(cb) < 0:
                    raise ValueError(
                        f"over-assigned incidences: {a!r}.{b!r} = {ca.dot(cb)} "
                        f"after blowing up {name!r}"
                    )
        for nm in incident:
            if nm in self.smooth and model.genus_term(nm) < -2:
                raise ValueError(
                    f"smooth curve {nm!r} would get C.C + C.K = "
                    f"{model.genus_term(nm)} < -2"
                )
        return model

    def dual_graph(self, names: Sequence[str] | None = None) -> DualGraph:
        """Dual graph of the named curves (all tracked curves by default)."""
        if names is None:
            names = sorted(self.tracked)
        curves = [(nm, self.curve(nm)) for nm in names]
        vertices = tuple((nm, c.self_intersection) for nm, c in curves)
        edges = []
        for i in range(len(curves)):
            for j in range(i + 1, len(curves)):
                w = curves[i][1].dot(curves[j][1])
                if w > 0:
                    edges.append((curves[i][0], curves[j][0], w))
        return DualGraph(vertices, tuple(edges))

    def extract_chain(self, names: Sequence[str]) -> HJFraction:
        """Read an ordered curve chain as ``[-C1.C1, ..., -Cl.Cl]``.

        Every listed curve must have self-intersection <= -2, consecutive
        curves must meet exactly once and non-consecutive ones not at all.
        """
        if not names:
            raise ChainShapeError("empty chain")
        if len(set(names)) != len(names):
            raise ChainShapeError(f"repeated curve in chain: {list(names)}")
        curves = [self.curve(nm) for nm in names]
        entries = []
        for nm, c in zip(names, curves):
            s = c.self_intersection
            if s > -2:
                raise ChainShapeError(f"{nm!r} has self-intersection {s} > -2")
            entries.append(-s)
        for i in range(len(curves)):
            for j in range(i + 1, len(curves)):
                w = curves[i].dot(curves[j])
                want = 1 if j == i + 1 else 0
                if w != want:
                    raise ChainShapeError(
                        f"{names[i]!r}.{names[j]!r} = {w}, expected {want}"
                    )
        return HJFraction(tuple(entries))
