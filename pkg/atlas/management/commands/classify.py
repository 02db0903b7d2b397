from django.conf import settings

from atlas.classifier import aut_certificate, hyperelliptic_scan, scan_bielliptic
from atlas.management.base import AtlasCommand, atlas_errors
from atlas.serializers import AutCertificateSerializer, BiellipticReportSerializer


class Command(AtlasCommand):
    help = 'Scan the Shimura discriminants up to --max for bielliptic Atkin-Lehner involutions'

    def add_arguments(self, parser):
        parser.add_argument(
            '--max',
            type=int,
            dest='D_max',
            default=settings.ATLAS_SCAN_MAX,
            help='Largest discriminant scanned',
        )
        parser.add_argument(
            '--hyperelliptic',
            action='store_true',
            default=False,
            help='List the hyperelliptic curves instead',
        )
        parser.add_argument(
            '--certificates',
            action='store_true',
            default=False,
            help='Certify Aut(V_D) = W for every curve found',
        )
        self.add_jobs_argument(parser)
        super().add_arguments(parser)

    def handle(self, *args, **options):
        classify(self, options)


def classify(self, options):
    with atlas_errors():
        if options['hyperelliptic']:
            reports = hyperelliptic_scan(options['D_max'], options['jobs'])
        else:
            reports = scan_bielliptic(options['D_max'], options['jobs'])
        if options['certificates']:
            certificates = [aut_certificate(report.D) for report in reports]
            self.write_report(AutCertificateSerializer, certificates, options)
            return
    self.write_report(BiellipticReportSerializer, reports, options)
