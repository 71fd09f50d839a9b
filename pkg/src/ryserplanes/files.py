"""JSON-shaped storage for hypergraphs and certificates.

Instances are tiny, so the format optimizes for diffability: sorted keys,
stable ordering, one top-level object per file.  Certificates carry a
digest of the hypergraph file they were computed from, so a certificate
cannot be replayed against a different input.
"""

import hashlib
import json

from .hypergraph import Certificate, Hypergraph, Vertex

FORMAT_VERSION = 1


def hypergraph_to_dict(h: Hypergraph, meta: dict = None) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "r": h.r,
        "vertices": [
            {"id": v.id, "label": v.label, "side": v.side} for v in h.vertices
        ],
        "edges": [list(e) for e in h.edges],
        "meta": meta or {},
    }


def hypergraph_from_dict(d: dict):
    if d.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {d.get('format_version')!r}")
    verts = [Vertex(v["id"], v["label"], v["side"]) for v in d["vertices"]]
    h = Hypergraph(d["r"], verts, [tuple(e) for e in d["edges"]])
    return h, d.get("meta", {})


def save_hypergraph(path, h: Hypergraph, meta: dict = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(hypergraph_to_dict(h, meta), f, indent=2, sort_keys=True)
        f.write("\n")


def load_hypergraph(path):
    with open(path, encoding="utf-8") as f:
        return hypergraph_from_dict(json.load(f))


def file_digest(path) -> str:
    with open(path, "rb") as f:
        return "sha256:" + hashlib.sha256(f.read()).hexdigest()


def certificate_to_dict(cert: Certificate, input_digest: str = None) -> dict:
    return {
        "claim": cert.kind,
        "values": dict(cert.value),
        "witness": cert.witness,
        "exhaustive": cert.exhaustive,
        "input_digest": input_digest,
    }


def save_certificate(path, cert: Certificate, input_path=None) -> None:
    digest = file_digest(input_path) if input_path else None
    with open(path, "w", encoding="utf-8") as f:
        json.dump(certificate_to_dict(cert, digest), f, indent=2, sort_keys=True)
        f.write("\n")


def load_certificate(path) -> dict:
    with open(path, encoding="utf-8") as f:
        return json.load(f)
