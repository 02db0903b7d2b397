# -*- coding: utf-8 -*-
#
# Shimura Atlas documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'shimura_atlas.settings')

on_rtd = os.environ.get('READTHEDOCS') == 'True'
if on_rtd:
    html_theme = 'default'
else:
    html_theme = 'nature'

extensions = [
    'sphinx.ext.autodoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'Shimura Atlas'
copyright = '2026, Shimura Atlas developers'
author = 'Shimura Atlas developers'

version = '0.3'
release = '0.3.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_static_path = []
htmlhelp_basename = 'ShimuraAtlasdoc'

latex_documents = [
    (master_doc, 'ShimuraAtlas.tex', 'Shimura Atlas Documentation',
     'Shimura Atlas developers', 'manual'),
]

man_pages = [
    (master_doc, 'shimura-atlas', 'Shimura Atlas Documentation',
     [author], 1)
]
