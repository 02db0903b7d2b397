import os

from django.conf import settings
from django.core.checks import Error, Warning, register

from .fixtures import CD_FIBRES, HYPERELLIPTIC_Q, TABLE1, TABLE2, TABLE3
from .utility import resolve_cremona_path


@register()
def data_dir_check(app_configs, **kwargs):
    errors = []
    data_dir = settings.ATLAS_DATA_DIR
    if not os.path.isdir(data_dir):
        errors.append(Error(
            'ATLAS_DATA_DIR {} is not a directory'.format(data_dir),
            hint='Set SHIMURA_ATLAS_DATA or pass --data',
            id='atlas.E001',
        ))
        return errors
    for name in (TABLE1, TABLE2, HYPERELLIPTIC_Q, TABLE3, CD_FIBRES):
        if not os.path.isfile(os.path.join(data_dir, name)):
            errors.append(Warning(
                'fixture {} is missing from {}'.format(name, data_dir),
                id='atlas.W001',
            ))
    return errors


@register()
def cremona_check(app_configs, **kwargs):
    path = resolve_cremona_path()
    if not os.path.isfile(path):
        return [Warning(
            'curve database {} does not exist'.format(path),
            hint='Set SHIMURA_ATLAS_CREMONA or pass --cremona',
            id='atlas.W002',
        )]
    return []
