"""
Django settings for the shimura_atlas project.

Every value can be set from the environment; a site may also drop a
``settings_local.py`` next to this file to override anything.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/3.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


SECRET_KEY = os.environ.get("SECRET_KEY", 'k3v!shimura-atlas-local-only-0x2f7c1d')

DEBUG = int(os.environ.get("DEBUG", default=0))

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'atlas.apps.AtlasConfig',
]


# Nothing is stored, the atlas works from flat files
DATABASES = {}

USE_TZ = True

REST_FRAMEWORK = {
    'UNICODE_JSON': True,
    'COMPACT_JSON': False,
    'STRICT_JSON': True,
}

# Log records go to stderr, reports to stdout
LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING")

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'atlas': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}


# Atlas settings, see docs/settings.rst

# Directory holding the bundled TSV fixtures and allcurves.fixture
ATLAS_DATA_DIR = os.environ.get("SHIMURA_ATLAS_DATA", os.path.join(BASE_DIR, "data"))

# Elliptic curve database, None means ATLAS_DATA_DIR/allcurves.fixture
ATLAS_CREMONA = os.environ.get("SHIMURA_ATLAS_CREMONA") or None

# Worker pool size for scans, 0 uses every available core
ATLAS_JOBS = int(os.environ.get("SHIMURA_ATLAS_JOBS", 0))

ATLAS_DEFAULT_FORMAT = os.environ.get("SHIMURA_ATLAS_FORMAT", 'tsv')

# Hurwitz class numbers H(n) are tabulated for n up to this bound
ATLAS_HURWITZ_BOUND = int(os.environ.get("SHIMURA_ATLAS_HURWITZ_BOUND", 800))

ATLAS_SCAN_MAX = 5000
ATLAS_PROP6_MAX = 20000

# Class number one fundamental discriminants are searched up to |d| <= this
ATLAS_HEEGNER_BOUND = 10000

ATLAS_PARITY_PRIME = 109
ATLAS_PARITY_EXCEPTIONS = {267: 67, 411: 103}
ATLAS_PARITY_SEARCH_BOUND = 200
ATLAS_PARITY_MAX_D = 546

# Largest number of vertices per side the dual graph search attempts
ATLAS_CD_SEARCH_SIDE = 4

# Load our local settings
try:
    LOCAL_SETTINGS
except NameError:
    try:
        from shimura_atlas.settings_local import *
    except ImportError:
        pass
