from django.core.management.base import CommandError

from apwen.exceptions import ApwenError
from apwen.recgen import DEFAULT_PSI, override_psi
from apwen.selftest import run_selftest

from ._base import ApwenCommand


def parse_corruption(text):
    """'G:001:Ym' -> ('G', (0, 0, 1), 'Ym'); a value of '-' blanks the entry."""
    try:
        nu, eta, value = text.split(':')
        eta = tuple(int(bit) for bit in eta)
    except ValueError as exc:
        raise ApwenError(f"Invalid Ψ corruption {text!r}, expected NU:BITS:SYMBOL") from exc
    if nu not in DEFAULT_PSI:
        raise ApwenError(f"Unknown Ψ table {nu!r}")
    return nu, eta, None if value == '-' else value


class Command(ApwenCommand):
    help = 'Run the invariant suite at desk scale'
    command_name = 'selftest'

    def add_arguments(self, parser):
        parser.add_argument('--quick', action='store_true', help='Smaller sizes, skips the slowest verdicts')
        parser.add_argument(
            '--corrupt-psi', dest='corrupt_psi', default='',
            help="Fault injection: replace one Ψ entry, e.g. 'G:001:Ym'",
        )

    def run(self, cfg, **options):
        if options.get('corrupt_psi'):
            nu, eta, value = parse_corruption(options['corrupt_psi'])
            self.stdout.write(self.style.WARNING(f"Running with Ψ_{nu}{eta} replaced by {value}"))
            with override_psi(nu, eta, value):
                results = run_selftest(quick=options.get('quick', False))
        else:
            results = run_selftest(quick=options.get('quick', False))

        for result in results:
            if result.passed:
                self.stdout.write(self.style.SUCCESS(f'✓ {result.name}'))
            else:
                self.stdout.write(self.style.ERROR(f'✗ {result.name}: {result.detail}'))

        failed = [result.name for result in results if not result.passed]
        if failed:
            raise CommandError(f"Failing properties: {', '.join(failed)}", returncode=1)
        self.stdout.write(self.style.SUCCESS(f'All {len(results)} properties hold'))
