from importlib import import_module

from django.apps import AppConfig


class AtlasConfig(AppConfig):
    name = 'atlas'
    verbose_name = 'Shimura curve atlas'

    def ready(self):
        # Registers the data path system checks
        import_module("atlas.checks")
