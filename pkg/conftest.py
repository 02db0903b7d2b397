import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "shimura_atlas.settings")
django.setup()
