"""
Shared plumbing for the prover management commands.
"""
import logging
import os

from django.core.management.base import BaseCommand, CommandError

from apwen.conf import RunConfig, apwen_setting
from apwen.dispatch import Checkpoint
from apwen.exceptions import ApwenError
from apwen.prover import EXIT_CODES

logger = logging.getLogger(__name__)

ERROR_EXIT = 2


class ApwenCommand(BaseCommand):
    """
    Base for every prover command.

    Subclasses implement run(cfg, **options). Any ApwenError becomes a
    CommandError with exit code 2, and a verdict other than APWENIAN becomes
    a CommandError carrying the verdict's exit code.
    """
    command_name = ''

    def add_jobs_argument(self, parser):
        parser.add_argument('--jobs', type=int, default=None, help='Worker processes (output never depends on it)')

    def add_output_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Print the JSON document instead of text')
        parser.add_argument('--out', default='', help='Write the report to this file instead of stdout')

    def handle(self, *args, **options):
        try:
            cfg = RunConfig.from_options(self.command_name, options)
            self.run(cfg, **options)
        except ApwenError as exc:
            logger.error(f"{self.command_name} failed: {exc}")
            raise CommandError(str(exc), returncode=ERROR_EXIT) from exc

    def run(self, cfg, **options):
        raise NotImplementedError

    def emit(self, cfg, text):
        if cfg.out_path:
            with open(cfg.out_path, 'w') as handle:
                handle.write(text + '\n')
            self.status(cfg, f'✓ Report written to {cfg.out_path}')
            return
        self.stdout.write(text)

    def status(self, cfg, message):
        """Progress line; goes to stderr when stdout carries a JSON document."""
        stream = self.stderr if cfg.output == 'json' else self.stdout
        stream.write(message, style_func=self.style.SUCCESS)

    def finish(self, verdict, witness=None):
        """Map a verdict onto the process exit code."""
        code = EXIT_CODES[verdict]
        if code:
            detail = f" (witness {witness})" if witness is not None else ''
            raise CommandError(f"Verdict {verdict}{detail}", returncode=code)

    def checkpoint_for(self, p, cfg):
        """Checkpoint from --resume, or an automatic one for long runs."""
        if cfg.resume:
            return Checkpoint(cfg.resume, p)
        if cfg.fast or p.d < apwen_setting('CHECKPOINT_MIN_D'):
            return None
        directory = apwen_setting('CHECKPOINT_DIR')
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, f"{p.word}.ckpt")
        logger.info(f"Checkpointing work units to {path}")
        return Checkpoint(path, p)
