from apwen.fastgen import fast_generate_system
from apwen.patterns import parse_pattern
from apwen.recgen import generate_system
from apwen.reports import render_system_text
from apwen.serializers import RecurrenceSystemSerializer, to_json

from ._base import ApwenCommand


class Command(ApwenCommand):
    help = 'Print the generated recurrence system of a pattern'
    command_name = 'recurrences'

    def add_arguments(self, parser):
        parser.add_argument('pattern')
        self.add_jobs_argument(parser)
        self.add_output_arguments(parser)
        parser.add_argument('--fast', action='store_true')
        parser.add_argument('--verbose', action='store_true', help='List every contributing type with its atoms')
        parser.add_argument('--resume', default='')

    def run(self, cfg, **options):
        p = parse_pattern(cfg.pattern)
        if cfg.fast:
            system = fast_generate_system(p)
        else:
            system = generate_system(p, jobs=cfg.jobs, checkpoint=self.checkpoint_for(p, cfg))

        if cfg.output == 'json':
            self.emit(cfg, to_json(RecurrenceSystemSerializer(system).data))
        else:
            self.emit(cfg, render_system_text(system, verbose=cfg.verbose))
