"""Illumination-adaptive raw-to-raw colour mapping between cameras."""

__version__ = "0.1.0"
