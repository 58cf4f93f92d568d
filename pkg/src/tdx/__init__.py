"""tdx: static analysis of MiniSrc code under several technical-debt models."""

__version__ = "0.1.0"
