# -*- coding: utf-8 -*-
#
# gossipsim documentation build configuration file.
#

# Imports
import os
import sys
import sphinx_bootstrap_theme
sys.path.insert(0, os.path.abspath('../..'))
import gossipsim


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.githubpages']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'gossipsim'
copyright = u'2025, the gossipsim developers'
author = u'the gossipsim developers'
version = u'0.1'
release = u'0.1'
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
html_static_path = ['_static']
htmlhelp_basename = 'gossipsimdoc'


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'gossipsim', u'gossipsim Documentation',
     [author], 1)
]
