from apwen.models import Certificate
from apwen.patterns import parse_pattern
from apwen.prover import APWENIAN, prove
from apwen.reports import render_certificate_pdf, render_certificate_text
from apwen.serializers import certificate_document, to_json

from ._base import ApwenCommand


class Command(ApwenCommand):
    help = 'Generate, validate and close the recurrences of a pattern, then print the verdict'
    command_name = 'analyze'

    def add_arguments(self, parser):
        parser.add_argument('pattern', help="Sign word ('+--'), list ('1,-1,-1') or name ('F5')")
        self.add_jobs_argument(parser)
        self.add_output_arguments(parser)
        parser.add_argument('--fast', action='store_true', help='Use the subset-mask DP generator')
        parser.add_argument('--check-depth', dest='check_depth', type=int, default=None)
        parser.add_argument('--resume', default='', help='Checkpoint file for the naive generator')
        parser.add_argument('--save', action='store_true', help='Archive the certificate in the database')
        parser.add_argument('--pdf', default='', help='Also export the certificate as PDF')

    def run(self, cfg, **options):
        p = parse_pattern(cfg.pattern)
        cert = prove(
            p,
            jobs=cfg.jobs,
            fast=cfg.fast,
            check_depth=cfg.check_depth,
            checkpoint=self.checkpoint_for(p, cfg),
        )
        document = certificate_document(cert)

        if cfg.output == 'json':
            self.emit(cfg, to_json(document))
        else:
            self.emit(cfg, render_certificate_text(document))

        if options.get('save'):
            row = Certificate.from_document(document, fast_path=cfg.fast)
            self.status(cfg, f'✓ Archived certificate #{row.pk}')
        if options.get('pdf'):
            render_certificate_pdf(document, options['pdf'])
            self.status(cfg, f"✓ PDF written to {options['pdf']}")

        if cert.verdict == APWENIAN:
            self.status(cfg, f'✓ {p.word} is Apwenian')
        self.finish(cert.verdict, cert.witness)
