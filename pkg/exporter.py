import logging
import os

import pandas as pd

from enumeration import EnumeratedMonoid

logger = logging.getLogger(__name__)


class EdgeListExporter:
    def __init__(self, monoid: EnumeratedMonoid):
        """Initialize the exporter with an enumerated monoid."""
        self.monoid = monoid

    def edge_frame(self) -> pd.DataFrame:
        """One row per right Cayley edge: source index, generator name, target index."""
        em = self.monoid
        count = len(em.generator_names)
        return pd.DataFrame({
            'src': [i for i in range(em.size) for _ in range(count)],
            'gen': list(em.generator_names) * em.size,
            'dst': em.right.reshape(-1),
        })

    def export(self, path: str) -> int:
        """Write ``<src> <gen> <dst>`` lines; return the number of edges written."""
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        frame = self.edge_frame()
        frame.to_csv(path, sep=' ', header=False, index=False)
        logger.info(f"Exported {len(frame)} edges to {path}")
        return len(frame)
