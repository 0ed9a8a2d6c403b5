import pytest

from apwen import dispatch
from apwen.dispatch import Checkpoint, decode_monomials, encode_monomials, fan_out, run_work_units
from apwen.exceptions import CheckpointError
from apwen.patterns import parse_pattern
from apwen.recgen import evaluate_work_unit, generate_system, unit_id, work_unit_payloads


def test_monomial_hex_dump():
    assert encode_monomials([]) == '-'
    assert encode_monomials([0x821, 0x005]) == '005821'
    assert decode_monomials('005821') == [0x005, 0x821]
    assert decode_monomials('-') == []
    with pytest.raises(ValueError):
        decode_monomials('0058')


def test_no_broker_in_tests():
    assert not dispatch.broker_configured()


def test_fan_out_keeps_payload_order():
    seen = []
    results = fan_out(abs, None, [-3, 1, -2], jobs=1, on_result=lambda p, r: seen.append((p, r)))
    assert results == [3, 1, 2]
    assert seen == [(-3, 3), (1, 1), (-2, 2)]
    assert fan_out(abs, None, []) == []


class FakeTask:
    def s(self, payload):
        return payload


class FakeAsyncResult:
    def __init__(self, payload, log):
        self.payload = payload
        self.log = log

    def get(self):
        if self.payload == 'lost':
            raise RuntimeError('worker lost')
        self.log.append(('get', self.payload))
        return evaluate_work_unit(self.payload)


def test_celery_results_recorded_as_they_arrive(tmp_path, f3, monkeypatch):
    payloads = work_unit_payloads(f3)[:2]
    log = []

    class FakeGroup:
        def __init__(self, signatures):
            self.signatures = list(signatures)

        def apply_async(self):
            results = [FakeAsyncResult(payload, log) for payload in self.signatures]
            return type('GroupResult', (), {'results': results})()

    monkeypatch.setattr(dispatch, 'broker_configured', lambda: True)
    monkeypatch.setattr('celery.group', FakeGroup)
    checkpoint = Checkpoint(str(tmp_path / 'celery.ckpt'), f3)

    def record(payload, result):
        log.append(('record', payload))
        checkpoint.record(payload, result)

    with pytest.raises(RuntimeError):
        fan_out(evaluate_work_unit, FakeTask(), payloads + ['lost'], on_result=record)

    assert log == [
        ('get', payloads[0]), ('record', payloads[0]),
        ('get', payloads[1]), ('record', payloads[1]),
    ]
    assert set(checkpoint.load()) == {unit_id(p) for p in payloads[:2]}


def test_process_pool_matches_in_process(f3):
    payloads = work_unit_payloads(f3)
    assert fan_out(evaluate_work_unit, None, payloads, jobs=2) == [evaluate_work_unit(p) for p in payloads]


def test_checkpoint_resume(tmp_path, f3, monkeypatch):
    path = tmp_path / 'f3.ckpt'
    first = generate_system(f3, checkpoint=Checkpoint(str(path), f3))

    lines = path.read_text().splitlines()
    assert lines[0] == '# apwen checkpoint +--'
    assert len(lines) == len(work_unit_payloads(f3)) + 1

    def fail(payload):
        raise AssertionError(f"unit {unit_id(payload)} evaluated again")

    monkeypatch.setattr(dispatch, 'evaluate_work_unit', fail)
    second = generate_system(f3, checkpoint=Checkpoint(str(path), f3))
    assert second.same_recurrences(first)
    assert second.stats == first.stats


def test_partial_checkpoint(tmp_path, f3):
    path = tmp_path / 'partial.ckpt'
    payloads = work_unit_payloads(f3)
    checkpoint = Checkpoint(str(path), f3)
    for payload in payloads[:5]:
        checkpoint.record(payload, evaluate_work_unit(payload))
    assert len(checkpoint.load()) == 5
    results = run_work_units(payloads, checkpoint=checkpoint)
    assert results == [evaluate_work_unit(p) for p in payloads]


def test_checkpoint_of_another_pattern(tmp_path, f3):
    path = tmp_path / 'other.ckpt'
    path.write_text('# apwen checkpoint +---+\n')
    with pytest.raises(CheckpointError):
        Checkpoint(str(path), f3).load()


def test_malformed_checkpoint(tmp_path):
    p = parse_pattern('F3')
    path = tmp_path / 'bad.ckpt'
    path.write_text('# apwen checkpoint +--\nXYZ PX 0 0 1:2 zz\n')
    with pytest.raises(CheckpointError):
        Checkpoint(str(path), p).load()
