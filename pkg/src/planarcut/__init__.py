"""Global minimum cut and shortest directed cycle in planar graphs."""

from .embed import Embedding, DualEmbedding, build_embedding, dual, triangulate_infinite

__version__ = "0.1.0"

__all__ = ["Embedding", "DualEmbedding", "build_embedding", "dual", "triangulate_infinite"]
