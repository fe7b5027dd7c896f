"""Immersion certificates: a map sending vertices of a small graph to
distinct host vertices and edges to edge-disjoint host paths, with optional
refinements (essential, embedding, v-immersion, onto) checked by an
independent verifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class ImmersionCertificate:
    small: Graph
    host: Graph
    vertex_map: tuple  # small vertex id -> host vertex id
    edge_paths: tuple  # parallel to small.edges; each a tuple of host vertices
    center: int | None = None  # host vertex whose incident images are single edges

    def path_for(self, u: int, v: int) -> tuple:
        idx = self.small.edge_index[(min(u, v), max(u, v))]
        return self.edge_paths[idx]


def explain_immersion(cert: ImmersionCertificate, *, essential: bool = False,
                      v_immersion: bool = False, embedding: bool = False,
                      onto: bool = False) -> str | None:
    """Return the first violated clause as text, or None if all hold."""
    small, host = cert.small, cert.host
    vmap = cert.vertex_map
    if len(vmap) != small.vertex_count:
        return "vertex-map: wrong length"
    if any(not (0 <= x < host.vertex_count) for x in vmap):
        return "vertex-map: image out of range"
    if len(set(vmap)) != len(vmap):
        return "vertex-map: not injective"
    if len(cert.edge_paths) != small.edge_count:
        return "edge-paths: wrong count"

    path_edges = []
    path_verts = []
    for idx, (a, b) in enumerate(small.edges):
        path = cert.edge_paths[idx]
        if len(path) < 2:
            return f"edge-paths: path for ({a},{b}) has fewer than two vertices"
        if len(set(path)) != len(path):
            return f"edge-paths: path for ({a},{b}) repeats a vertex"
        if path[0] != vmap[a] or path[-1] != vmap[b]:
            return f"edge-paths: path for ({a},{b}) does not join the endpoint images"
        pe = set()
        for x, y in zip(path, path[1:]):
            if not host.has_edge(x, y):
                return f"edge-paths: ({x},{y}) is not a host edge"
            pe.add((min(x, y), max(x, y)))
        path_edges.append(pe)
        path_verts.append(set(path))

    edges = small.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if path_edges[i] & path_edges[j]:
                return f"immersion: paths for {edges[i]} and {edges[j]} share an edge"

    if essential or v_immersion:
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if set(edges[i]) & set(edges[j]):
                    continue  # adjacent small edges may share vertices
                if path_verts[i] & path_verts[j]:
                    return (f"essential: non-adjacent edges {edges[i]} and "
                            f"{edges[j]} have paths sharing a vertex")

    if embedding:
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                allowed = {vmap[v] for v in set(edges[i]) & set(edges[j])}
                common = path_verts[i] & path_verts[j]
                if common - allowed:
                    return (f"embedding: paths for {edges[i]} and {edges[j]} "
                            f"meet outside their shared endpoint")

    if v_immersion:
        if cert.center is None:
            return "v-immersion: no center vertex recorded"
        if cert.center not in vmap:
            return "v-immersion: center is not an image vertex"
        u = vmap.index(cert.center)
        for idx, (a, b) in enumerate(edges):
            if u in (a, b) and len(cert.edge_paths[idx]) != 2:
                return f"v-immersion: edge ({a},{b}) at the center is not a single edge"

    if onto:
        covered_v = set(vmap)
        covered_e = set()
        for pv in path_verts:
            covered_v |= pv
        for pe in path_edges:
            covered_e |= pe
        if covered_v != set(range(host.vertex_count)):
            return "onto: some host vertex is not covered"
        if covered_e != set(host.edges):
            return "onto: some host edge is not covered"

    return None


def verify_immersion(cert: ImmersionCertificate, *, essential: bool = False,
                     v_immersion: bool = False, embedding: bool = False,
                     onto: bool = False) -> bool:
    return explain_immersion(cert, essential=essential, v_immersion=v_immersion,
                             embedding=embedding, onto=onto) is None


def identity_immersion(g: Graph, center: int | None = None) -> ImmersionCertificate:
    """The identity map of g into itself; every edge is a single-edge path."""
    return ImmersionCertificate(
        small=g,
        host=g,
        vertex_map=tuple(range(g.vertex_count)),
        edge_paths=tuple((u, v) for u, v in g.edges),
        center=center,
    )


def immersion_image_subgraph(cert: ImmersionCertificate) -> Graph:
    """Host subgraph covered by the certificate, restricted to covered vertices
    and relabeled densely. Returns (graph); relabeling is by ascending host id."""
    verts = set(cert.vertex_map)
    edges = set()
    for path in cert.edge_paths:
        verts.update(path)
        for x, y in zip(path, path[1:]):
            edges.add((min(x, y), max(x, y)))
    label = {v: i for i, v in enumerate(sorted(verts))}
    return Graph(len(verts), tuple(sorted((label[a], label[b]) for a, b in edges)))


def immersion_to_json_dict(cert: ImmersionCertificate) -> dict:
    return {
        "small": {"n": cert.small.vertex_count,
                  "edges": [list(e) for e in cert.small.edges]},
        "host": {"n": cert.host.vertex_count,
                 "edges": [list(e) for e in cert.host.edges]},
        "vmap": list(cert.vertex_map),
        "paths": [list(p) for p in cert.edge_paths],
        "center": cert.center,
    }


def immersion_from_json_dict(obj: dict) -> ImmersionCertificate:
    try:
        small = Graph.make(obj["small"]["n"], obj["small"]["edges"])
        host = Graph.make(obj["host"]["n"], obj["host"]["edges"])
        vmap = tuple(int(x) for x in obj["vmap"])
        paths = tuple(tuple(int(x) for x in p) for p in obj["paths"])
        center = obj.get("center")
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed immersion certificate: {exc}") from exc
    return ImmersionCertificate(small, host, vmap, paths,
                                None if center is None else int(center))
