import re
from math import isqrt

from apwen.exceptions import ApwenError, OracleConsistencyError
from apwen.oracle import (
    apwenian_bit,
    exact_state,
    hankel_exact_sequence,
    hankel_mod_sequence,
    mod_six_law,
    mod_three_law,
    normalized_hankel,
    state_parity,
)
from apwen.patterns import j_prefix, k_prefix, parse_pattern
from apwen.serializers import StateVecSerializer, to_json

from ._base import ApwenCommand

_RANGE = re.compile(r'^(\d+)(?:\.\.(\d+))?$')

F3_WORD = '+--'


def parse_range(text, minimum=1):
    """'1..10' -> (1, 10); '20' -> (1, 20)."""
    match = _RANGE.match(text.strip())
    if not match:
        raise ApwenError(f"Invalid range {text!r}, expected 'N' or 'A..B'")
    if match.group(2) is None:
        low, high = 1, int(match.group(1))
    else:
        low, high = int(match.group(1)), int(match.group(2))
    if low < minimum or high < low:
        raise ApwenError(f"Invalid range {text!r}")
    return low, high


def _is_prime(q):
    return q >= 2 and all(q % f for f in range(2, isqrt(q) + 1))


class Command(ApwenCommand):
    help = 'Tabulate oracle values: Hankel determinants, state parities or the J/K sets'
    command_name = 'oracle'

    def add_arguments(self, parser):
        parser.add_argument('sub', choices=['hankel', 'state', 'sets'])
        parser.add_argument('pattern')
        parser.add_argument('range', help="'N' or 'A..B'")
        self.add_output_arguments(parser)
        parser.add_argument('--mod', type=int, default=None, help='Reduce Hankel determinants modulo q')
        parser.add_argument('--law', action='store_true', help='Check the mod 3 and mod 6 laws of F3')
        parser.add_argument('--exact', action='store_true', help='Exact counts instead of parities')
        parser.add_argument('--max-brute', dest='max_brute', type=int, default=None)

    def run(self, cfg, **options):
        p = parse_pattern(cfg.pattern)
        minimum = 0 if options['sub'] == 'sets' else 1
        low, high = parse_range(options['range'], minimum)
        handler = getattr(self, f"run_{options['sub']}")
        document, lines = handler(p, low, high, cfg, options)
        document = {'pattern': p.word, 'sub': options['sub'], **document}
        self.emit(cfg, to_json(document) if cfg.output == 'json' else '\n'.join(lines))

    # ------------------------------------------------------------------------

    def run_hankel(self, p, low, high, cfg, options):
        q = options.get('mod')
        if q is not None:
            if q < 2:
                raise ApwenError(f"--mod must be at least 2, got {q}")
            if _is_prime(q):
                values = hankel_mod_sequence(p, high, q)[low - 1:]
            else:
                values = [value % q for value in hankel_exact_sequence(p, high)[low - 1:]]
            lines = [f"{n:>4}  H mod {q} = {value}" for n, value in zip(range(low, high + 1), values)]
            lines.append('values = ' + ','.join(str(v) for v in values))
            return {'mod': q, 'values': values}, lines

        exact = hankel_exact_sequence(p, high)[low - 1:]
        rows = []
        lines = []
        for n, value in zip(range(low, high + 1), exact):
            normalized = normalized_hankel(value, n)
            bit = normalized % 2
            if bit != apwenian_bit(p, n):
                raise OracleConsistencyError(f"Parity of H_{n} / 2^{n - 1} disagrees with the δ-matrix bit")
            row = {'n': n, 'H': value, 'normalized': normalized, 'bit': bit}
            line = f"{n:>4}  H = {value}  H/2^(n-1) = {normalized}  bit = {bit}"
            if options.get('law'):
                row['law'] = self._check_laws(p, n, value, normalized)
                line += '  laws ok'
            rows.append(row)
            lines.append(line)
        lines.append('values = ' + ','.join(str(v) for v in exact))
        return {'values': exact, 'rows': rows}, lines

    def _check_laws(self, p, n, value, normalized):
        if p.word != F3_WORD:
            raise ApwenError('The mod 3 and mod 6 laws are stated for F3 only')
        if value % 3 != mod_three_law(n):
            raise OracleConsistencyError(f"H_{n} mod 3 = {value % 3}, expected {mod_three_law(n)}")
        if normalized % 6 != mod_six_law(n):
            raise OracleConsistencyError(
                f"H_{n} / 2^{n - 1} mod 6 = {normalized % 6}, expected {mod_six_law(n)}"
            )
        return {'mod3': value % 3, 'mod6': normalized % 6}

    def run_state(self, p, low, high, cfg, options):
        if options.get('exact'):
            states = [exact_state(p, m, bound=cfg.oracle_bound) for m in range(low, high + 1)]
            rows = []
            for state in states:
                row = {'n': state.m, 'X': state.x, 'Y': state.y, 'Z': state.z, 'T': state.t}
                if state.u is not None:
                    row.update({'U': state.u, 'V': state.v, 'W': state.w, 'R': state.r})
                rows.append(row)
        else:
            rows = [dict(StateVecSerializer(state_parity(p, n)).data) for n in range(low, high + 1)]
        keys = [key for key in rows[0] if key != 'n']
        lines = ['   n  ' + '  '.join(f"{key:>8}" for key in keys)]
        for row in rows:
            lines.append(f"{row['n']:>4}  " + '  '.join(f"{row[key]:>8}" for key in keys))
        return {'exact': bool(options.get('exact')), 'states': rows}, lines

    def run_sets(self, p, low, high, cfg, options):
        # A bare 'N' lists t < N; 'A..B' lists A <= t <= B.
        if '..' in options['range']:
            start, stop = low, high + 1
        else:
            start, stop = 0, high
        j_set = [t for t in j_prefix(p, stop) if t >= start]
        k_set = [t for t in k_prefix(p, stop) if t >= start]
        lines = [
            f"P= {sorted(p.P)}",
            f"Q= {sorted(p.Q)}",
            f"J= {j_set}",
            f"K= {k_set}",
        ]
        return {'P': sorted(p.P), 'Q': sorted(p.Q), 'J': j_set, 'K': k_set}, lines
