"""Post-network core for multi-language scene text spotting."""

__version__ = "0.1.0"
