# Sphinx configuration for the hopfforge documentation.
# API pages are regenerated from src/hopfforge on every build.

import os
import shutil
import sys

__location__ = os.path.dirname(__file__)
sys.path.insert(0, os.path.join(__location__, "../src"))

from sphinx.ext import apidoc  # noqa: E402

output_dir = os.path.join(__location__, "api")
module_dir = os.path.join(__location__, "../src/hopfforge")
shutil.rmtree(output_dir, ignore_errors=True)
try:
    apidoc.main(["--implicit-namespaces", "-f", "-o", output_dir, module_dir])
except Exception as e:
    print(f"Running `sphinx-apidoc` failed!\n{e}")

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "myst_parser",
]
myst_enable_extensions = ["amsmath", "colon_fence", "deflist", "dollarmath"]

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "hopfforge"
copyright = "2025, Shubra Gadhwala"

try:
    from hopfforge import __version__ as version
except ImportError:
    version = ""
if not version or version.lower() == "unknown":
    version = os.getenv("READTHEDOCS_VERSION", "unknown")
release = version

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store", ".venv"]
pygments_style = "sphinx"

html_theme = "alabaster"
html_theme_options = {"sidebar_width": "300px", "page_width": "1200px"}
html_static_path = ["_static"]
htmlhelp_basename = "hopfforge-doc"

python_version = ".".join(map(str, sys.version_info[0:2]))
intersphinx_mapping = {
    "python": ("https://docs.python.org/" + python_version, None),
    "pydantic": ("https://docs.pydantic.dev/latest", None),
    "sympy": ("https://docs.sympy.org/latest", None),
}
