import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apwen.models import Certificate


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


def run_split(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue(), err.getvalue()


def exit_code(*args, **options):
    with pytest.raises(CommandError) as exc:
        run(*args, **options)
    return exc.value.returncode, str(exc.value)


# ============================================================================
# ANALYZE
# ============================================================================

def test_analyze_f3():
    output = run('analyze', '+--')
    assert 'Z(3n+2) = Wm' in output
    assert 'W(3n+2) = Zm' in output
    assert 'listed types = 24' in output
    assert 'listed types = 26' in output
    assert 'verdict = APWENIAN' in output


def test_analyze_by_name():
    document = json.loads(run('analyze', 'F5', '--json'))
    assert document['verdict'] == 'APWENIAN'
    assert document['recurrences'][0]['listed_types'] == 225


def test_analyze_refutes_constant_pattern():
    code, message = exit_code('analyze', '++')
    assert code == 1
    assert 'witness 2' in message


def test_analyze_rejects_bad_pattern():
    code, message = exit_code('analyze', '+x-')
    assert code == 2
    assert "'x'" in message


def test_analyze_rejects_zero_jobs():
    code, _ = exit_code('analyze', '+--', '--jobs', '0')
    assert code == 2


@pytest.mark.django_db
def test_analyze_save_and_pdf(tmp_path):
    pdf = tmp_path / 'f3.pdf'
    output = run('analyze', 'F3', '--save', '--pdf', str(pdf))
    assert 'Archived certificate' in output
    assert Certificate.objects.get().verdict == 'APWENIAN'
    assert pdf.exists()


@pytest.mark.django_db
def test_analyze_json_keeps_status_off_stdout():
    out, err = run_split('analyze', 'F3', '--json', '--save')
    assert json.loads(out)['verdict'] == 'APWENIAN'
    assert 'Archived certificate' in err
    assert '+-- is Apwenian' in err


def test_analyze_out_file(tmp_path):
    target = tmp_path / 'report.json'
    run('analyze', 'F3', '--json', '--out', str(target))
    assert json.loads(target.read_text())['pattern'] == '+--'


def test_jobs_do_not_change_reports():
    assert run('analyze', 'F3', '--json') == run('analyze', 'F3', '--json', '--jobs', '3')
    assert run('recurrences', 'F5', '--verbose') == run('recurrences', 'F5', '--verbose', '--jobs', '2')


# ============================================================================
# RECURRENCES
# ============================================================================

def test_recurrences():
    assert 'Z(3n+2) = Wm' in run('recurrences', 'F3')
    assert 'Y(5n+1) = Xn Zm + Yn Zm' in run('recurrences', 'F5', '--fast')


def test_recurrences_verbose():
    output = run('recurrences', 'F5', '--verbose')
    assert 'v= [1, -1, -1, -1, 1]     direction = XYZ -> XYZ' in output
    assert ' 168 adbca: [Zm:G100] [Yn:G001] [Xn:G000] [Xn:G000] [Zm:G011]' in output
    assert ' k : 5N+2' in output


def test_recurrences_json_matches_text():
    document = json.loads(run('recurrences', 'F3', '--json'))
    text = run('recurrences', 'F3')
    for run_document in document['runs']:
        for line in run_document['lines']:
            assert line in text


def test_recurrences_resume(tmp_path):
    path = tmp_path / 'f3.ckpt'
    first = run('recurrences', 'F3', '--resume', str(path))
    assert path.exists()
    assert run('recurrences', 'F3', '--resume', str(path)) == first


def test_recurrences_resume_from_other_pattern(tmp_path):
    path = tmp_path / 'f5.ckpt'
    run('recurrences', 'F5', '--resume', str(path))
    code, _ = exit_code('recurrences', 'F3', '--resume', str(path))
    assert code == 2


# ============================================================================
# ORACLE
# ============================================================================

def test_oracle_hankel():
    output = run('oracle', 'hankel', '+--', '1..10')
    assert 'values = 1,-2,-4,8,16,-32,-64,128,4864,-9728' in output


def test_oracle_hankel_mod():
    assert 'values = 1,1,2,2,1,1,2,2' in run('oracle', 'hankel', '+--', '1..8', '--mod', '3')
    assert 'values = 1,4,2,2,4,4,2,2' in run('oracle', 'hankel', '+--', '8', '--mod', '6')


def test_oracle_hankel_laws():
    document = json.loads(run('oracle', 'hankel', 'F3', '1..12', '--law', '--json'))
    assert [row['law']['mod3'] for row in document['rows']][:4] == [1, 1, 2, 2]
    code, _ = exit_code('oracle', 'hankel', 'F5', '4', '--law')
    assert code == 2


def test_oracle_sets():
    output = run('oracle', 'sets', '+--', '20')
    assert 'J= [0, 3, 5, 6, 8, 9, 12, 14, 15, 18]' in output
    assert 'P= [1]' in output


def test_oracle_state():
    document = json.loads(run('oracle', 'state', 'F11', '1..9', '--exact', '--json'))
    assert [row['Z'] for row in document['states']] == [1, 1, 3, 11, 13, 25, 39, 117, 739]
    parities = json.loads(run('oracle', 'state', 'F5', '5', '--json'))
    assert all(row['Z'] == 1 for row in parities['states'])
    assert 'U' not in parities['states'][0]


def test_oracle_bounds():
    code, message = exit_code('oracle', 'state', 'F3', '13', '--exact')
    assert code == 2
    assert 'brute-force bound' in message
    code, _ = exit_code('oracle', 'hankel', 'F3', '5..2')
    assert code == 2


# ============================================================================
# SEARCH
# ============================================================================

def test_search_length_three():
    output = run('search', '3')
    assert "proven = ['++-', '+--']" in output
    assert '+-- <-> ++- (x -> -x, proven)' in output


def test_search_length_five_finds_f5():
    document = json.loads(run('search', '5', '--json'))
    assert '+---+' in document['proven']


def test_search_length_seven_proves_nothing():
    document = json.loads(run('search', '7', '--json'))
    assert document['screened'] == 64
    assert document['proven'] == []


def test_search_bounds():
    code, _ = exit_code('search', '1')
    assert code == 2


@pytest.mark.django_db
def test_search_save():
    run('search', '3', '--save')
    assert set(Certificate.objects.values_list('pattern', flat=True)) >= {'+--', '++-'}
    assert Certificate.objects.filter(fast_path=True).count() == Certificate.objects.count()


@pytest.mark.django_db
def test_search_json_with_save():
    out, err = run_split('search', '3', '--save', '--json')
    assert json.loads(out)['proven'] == ['++-', '+--']
    assert 'Archived' in err


# ============================================================================
# SELFTEST
# ============================================================================

def test_selftest_quick():
    output = run('selftest', '--quick')
    assert 'All 10 properties hold' in output


def test_selftest_catches_corrupted_psi():
    code, message = exit_code('selftest', '--quick', '--corrupt-psi', 'G:001:Ym')
    assert code == 1
    assert 'recurrence-fixtures' in message


def test_selftest_rejects_bad_corruption():
    code, _ = exit_code('selftest', '--corrupt-psi', 'nonsense')
    assert code == 2
