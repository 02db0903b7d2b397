"""
One serializer per report row type.  Field order is the column order of
every output format.
"""
from rest_framework import serializers
from rest_framework.fields import SerializerMethodField

from . import choices


class CurveInvariantsSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    genus = serializers.IntegerField()
    e2 = serializers.IntegerField()
    e3 = serializers.IntegerField()
    fixed_points = SerializerMethodField()

    def get_fixed_points(self, obj):
        return {'n(w_{})'.format(m): n for m, n in sorted(obj.fixed_counts.items())}


class BiellipticReportSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    genus = serializers.IntegerField()
    bielliptic_m = serializers.ListField(child=serializers.IntegerField())
    hyperelliptic_m = serializers.ListField(child=serializers.IntegerField())


class AutCertificateSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    conclusion = serializers.ChoiceField(choices=choices.AUT_CHOICES)
    rule = serializers.ChoiceField(choices=choices.RULE_CHOICES, allow_null=True)
    lower_rank = serializers.IntegerField()
    fired = SerializerMethodField()

    def get_fired(self, obj):
        return list(obj.evidence)


class FrobeniusCountSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    ell = serializers.IntegerField()
    k = serializers.IntegerField()
    count = serializers.IntegerField()


class ParityWitnessSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    ell = serializers.IntegerField()
    count = serializers.IntegerField()
    residue = serializers.IntegerField()
    source = serializers.CharField()


class UnderdeterminedSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    p = serializers.IntegerField()
    vertices = serializers.IntegerField()
    edges = serializers.IntegerField()
    degree = serializers.IntegerField(allow_null=True)
    torsion = serializers.BooleanField()
    candidates = serializers.IntegerField(allow_null=True)


class EdgeSerializer(serializers.Serializer):
    u = serializers.CharField()
    v = serializers.CharField()
    length = serializers.IntegerField()


class DualGraphSerializer(serializers.Serializer):
    vertices = serializers.ListField(child=serializers.CharField())
    edges = EdgeSerializer(many=True)


class VerdictSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    status = serializers.ChoiceField(choices=choices.VERDICT_CHOICES)
    m = serializers.IntegerField(allow_null=True)
    quotient = serializers.CharField(allow_null=True)
    rank = serializers.IntegerField(allow_null=True)
    witness = serializers.CharField(allow_null=True)
    justification = serializers.ListField(child=serializers.CharField())


class DeficiencyRowSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    m = serializers.IntegerField()
    places = serializers.ListField(child=serializers.CharField())


class Table3RowSerializer(serializers.Serializer):
    D = serializers.IntegerField()
    m = serializers.IntegerField()
    quotient = serializers.CharField()


class AuditResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.ChoiceField(choices=choices.CHECK_CHOICES)
    detail = serializers.CharField()
