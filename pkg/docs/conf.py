# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'tracezero'
author = 'Axelancerr'
copyright = '2020 - Axelancerr'
version = '0.1.0'
release = version

# -- General configuration ---------------------------------------------------

needs_sphinx = '3.4.0'

extensions = [
    'faculty_sphinx_theme',
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
]

napoleon_include_init_with_doc = True

autodoc_typehints = 'signature'
autodoc_member_order = 'bysource'

intersphinx_mapping = {
    'py':    ('https://docs.python.org/3.9', None),
    'sympy': ('https://docs.sympy.org/latest/', None),
}

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'faculty-sphinx-theme'
html_static_path = ['_static']
html_experimental_html5_writer = True
