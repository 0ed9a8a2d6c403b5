from apwen.models import Certificate
from apwen.search import search_patterns
from apwen.serializers import certificate_document, to_json

from ._base import ApwenCommand


class Command(ApwenCommand):
    help = 'Screen every pattern of length d and prove the survivors'
    command_name = 'search'

    def add_arguments(self, parser):
        parser.add_argument('d', type=int)
        self.add_jobs_argument(parser)
        self.add_output_arguments(parser)
        parser.add_argument('--scan', type=int, default=None, help='Prefilter depth for the δ-matrix oracle')
        parser.add_argument('--save', action='store_true', help='Archive every certificate in the database')

    def run(self, cfg, **options):
        d = options['d']
        report = search_patterns(d, scan=cfg.apwenian_scan, jobs=cfg.jobs)
        documents = {word: certificate_document(cert) for word, cert in report.certificates.items()}

        if options.get('save'):
            for document in documents.values():
                Certificate.from_document(document, fast_path=True)
            self.status(cfg, f'✓ Archived {len(documents)} certificates')

        if cfg.output == 'json':
            self.emit(cfg, to_json({
                'd': d,
                'scan': report.scan,
                'screened': len(report.screened),
                'survivors': report.survivors,
                'verdicts': {word: documents[word]['verdict'] for word in sorted(documents)},
                'proven': report.proven,
                'partners': report.partners(),
            }))
            return

        lines = [
            f"d = {d}     patterns = {len(report.screened)}     scan m <= {report.scan}",
            f"survivors = {len(report.survivors)}",
        ]
        for word in report.survivors:
            cert = report.certificates[word]
            witness = f"     witness = {cert.witness}" if cert.witness is not None else ''
            lines.append(f"  {word}: {cert.verdict}{witness}")
        lines.append(f"proven = {report.proven}")
        for word, note in report.partners().items():
            status = 'proven' if note['partner_proven'] else 'not proven'
            lines.append(f"  {word} <-> {note['partner']} (x -> -x, {status})")
        self.emit(cfg, '\n'.join(lines))
