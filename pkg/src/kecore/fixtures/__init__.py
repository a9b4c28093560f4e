"""Named example graphs, stored as edge-list files next to this module.

Each file may carry a ``# labels: name=id ...`` comment mapping the
vertex names of the drawn graphs to 0-based ids.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

from ..graph import Graph, parse_graph

NAMES = (
    "FIG1-H1",
    "FIG1-H3",
    "FIG3-G1",
    "FIG3-G2",
    "FIG4-G1",
    "FIG4-G2",
    "FIG111-H1",
    "FIG111-H2",
    "FIG5-G1",
    "FIG5-G2",
)

_LABEL = re.compile(r"([A-Za-z]\w*)=(\d+)")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.el").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load(name: str) -> Graph:
    return parse_graph(fixture_text(name))


def labels(name: str) -> dict[str, int]:
    """Map vertex labels to ids, e.g. ``labels("FIG4-G1")["v5"] == 4``."""
    out: dict[str, int] = {}
    for line in fixture_text(name).splitlines():
        if line.startswith("# labels:"):
            out.update((k, int(v)) for k, v in _LABEL.findall(line))
    return out
