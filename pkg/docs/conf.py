# -*- coding: utf-8 -*-
#
# rankint documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Document the package from the source tree
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'rankint'
copyright = u'2026, The rankint developers'
author = u'The rankint developers'

version = '0.1'
release = '0.1.0'

language = 'en'

exclude_patterns = ['_build']

pygments_style = 'friendly'

modindex_common_prefix = ['rankint.']

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_show_sourcelink = False

html_show_sphinx = False

htmlhelp_basename = 'rankintdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  (master_doc, 'rankint.tex', u'rankint Documentation',
   u'The rankint developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'rankint', u'rankint Documentation',
     [author], 1)
]
