# -*- coding: utf-8 -*-
#
# bditestgen documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.mathjax', 'sphinx.ext.autodoc'
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'bditestgen'
copyright = u'2020, bditestgen developers'
author = u'bditestgen developers'

# The short X.Y version.
version = u'0.1'
# The full version, including alpha/beta/rc tags.
release = u'0.1.0'

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

htmlhelp_basename = 'bditestgendoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'bditestgen.tex', u'bditestgen Documentation',
     u'bditestgen developers', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'bditestgen', u'bditestgen Documentation',
     [author], 1)
]


# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'bditestgen', u'bditestgen Documentation',
     author, 'bditestgen', 'Coverage-directed test generation with BDI agents.',
     'Miscellaneous'),
]
