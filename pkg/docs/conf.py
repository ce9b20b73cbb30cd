# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

# The package lives in src/ and is imported as ``src`` from the repository root
sys.path.insert(0, os.path.abspath(".."))

# -- Project information -----------------------------------------------------

project = "km-satake"
copyright_notice = "2026, km-satake developers"
author = "km-satake developers"

release = "0.3.0"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.autosummary",
    "sphinx_rtd_theme",
]

templates_path = ["_templates"]

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = []
htmlhelp_basename = "KmSatakedoc"

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (
        "index",
        "KmSatake.tex",
        "km-satake Documentation",
        "km-satake developers",
        "manual",
    ),
]

man_pages = [("index", "km-satake", "km-satake Documentation", [author], 1)]

# -- Options for intersphinx extension ---------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

# -- Options for autodoc extension -------------------------------------------

autodoc_member_order = "bysource"

autodoc_default_options = {
    "members": True,
    "undoc-members": True,
    "show-inheritance": True,
    "private-members": False,
    "special-members": "__init__",
}

autodoc_class_signature = "mixed"
autoclass_content = "both"
