"""
Render serialized rows as TSV, JSON or a Markdown table.
"""
from rest_framework.renderers import JSONRenderer

from .choices import FORMAT_JSON, FORMAT_MD, FORMAT_TSV
from .exceptions import BadInput


def cell(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, dict):
        return ','.join('{}={}'.format(key, cell(item)) for key, item in value.items()) or '-'
    if isinstance(value, (list, tuple)):
        return ','.join(cell(item) for item in value) or '-'
    return str(value)


def to_tsv(columns, rows):
    lines = ['\t'.join(columns)]
    lines.extend('\t'.join(cell(row[column]) for column in columns) for row in rows)
    return '\n'.join(lines) + '\n'


def to_markdown(columns, rows):
    lines = ['| {} |'.format(' | '.join(columns)),
             '|{}|'.format('|'.join('---' for _ in columns))]
    lines.extend('| {} |'.format(' | '.join(cell(row[column]) for column in columns)) for row in rows)
    return '\n'.join(lines) + '\n'


def to_json(rows):
    return JSONRenderer().render(rows, renderer_context={'indent': 2}).decode('utf-8') + '\n'


def render(serializer_class, objects, fmt=FORMAT_TSV):
    columns = list(serializer_class().fields)
    rows = serializer_class(list(objects), many=True).data
    if fmt == FORMAT_TSV:
        return to_tsv(columns, rows)
    if fmt == FORMAT_JSON:
        return to_json(rows)
    if fmt == FORMAT_MD:
        return to_markdown(columns, rows)
    raise BadInput('unknown format {!r}'.format(fmt))
