# Sphinx configuration for gridhom.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

project = "gridhom"
copyright = "2025, Jamie A. Kennea"
author = "Jamie A. Kennea"

try:
    from gridhom._version import __version__

    release = __version__
    version = ".".join(__version__.split(".")[:2])
except ImportError:
    release = "0.0.0"
    version = "0.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.doctest",
    "sphinx_autodoc_typehints",
]

# Google style docstrings with Args/Raises/Example sections
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_use_admonition_for_examples = True
napoleon_attr_annotations = True

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
master_doc = "index"

html_theme = "sphinx_rtd_theme"
html_theme_options = {"navigation_depth": 3, "collapse_navigation": False}

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pydantic": ("https://docs.pydantic.dev/latest/", None),
}

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": True,
    "exclude-members": "__weakref__, model_config, model_fields",
}
autodoc_mock_imports = ["tqdm"]

# Package __init__ modules re-export their submodules' names.
PAGE_PREFIX = "api/"


def skip_reexports(app, what, name, obj, skip, options):
    """Document classes and functions only on the page of their own module."""
    if what not in ("class", "function", "exception"):
        return skip
    module = getattr(obj, "__module__", None) or ""
    docname = getattr(getattr(app, "env", None), "docname", "")
    if module.startswith("gridhom.") and docname.startswith(PAGE_PREFIX + "gridhom."):
        if not module.startswith(docname[len(PAGE_PREFIX):]):
            return True
    return skip


def setup(app):
    app.connect("autodoc-skip-member", skip_reexports)
