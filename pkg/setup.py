"""
Setup script for the km-satake package.

Kept for older pip versions; pyproject.toml holds the configuration.
"""

from setuptools import setup

if __name__ == "__main__":
    setup()
