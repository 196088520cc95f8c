import json

import jsonschema
import pytest

from report import CheckResult, CheckStatus, RunReport, load_schema, validate_report
from utils import LimitExceededError


def build_report():
    report = RunReport(command='order 5 5', n=5, m=5)
    with report.check('formula', expected=88798957515761812069376) as c:
        c.measure(order=88798957515761812069376)
        c.passed()
    with report.check('closure') as c:
        raise LimitExceededError('enumeration', 10)
    with report.check('separating relation') as c:
        c.expected_fail('(rho sigma)^2 = (rho sigma)^2 tauB')
    return report


def test_check_outcomes():
    report = build_report()
    assert [c.status for c in report.checks] == [CheckStatus.PASS, CheckStatus.SKIPPED, CheckStatus.EXPECTED_FAIL]
    assert 'limit exceeded (10)' in report.checks[1].detail
    assert report.passed and report.exit_code == 0


def test_a_failed_check_sets_the_exit_code():
    report = build_report()
    with report.check('mismatch') as c:
        c.expect(1 == 2)
    assert report.exit_code == 1
    assert report.summary() == {'pass': 1, 'fail': 1, 'skipped': 1, 'expected-fail': 1}


def test_a_check_without_an_outcome_fails():
    report = RunReport(command='noop')
    with report.check('forgotten'):
        pass
    assert report.checks[0].status is CheckStatus.FAIL


def test_other_errors_propagate():
    report = RunReport(command='noop')
    with pytest.raises(KeyError):
        with report.check('broken'):
            raise KeyError('x')
    assert report.checks == []


def test_json_document_validates():
    document = build_report().to_dict(timing=False)
    validate_report(document)
    assert 'elapsed' not in document['checks'][0]
    # exceeds a JSON double
    assert document['checks'][0]['measured']['order'] == '88798957515761812069376'
    assert json.loads(build_report().to_json(timing=False)) == document


def test_timing_is_reported_on_request():
    document = build_report().to_dict(timing=True)
    validate_report(document)
    assert all(check['elapsed'] >= 0 for check in document['checks'])


def test_schema_rejects_malformed_reports():
    with pytest.raises(jsonschema.ValidationError):
        validate_report({'command': 1})
    document = build_report().to_dict(timing=False)
    document['checks'][0]['status'] = 'maybe'
    with pytest.raises(jsonschema.ValidationError):
        validate_report(document, load_schema())


def test_render_text():
    report = build_report()
    report.emit('|PT_{5x5}| = 88798957515761812069376')
    text = report.render_text(timing=False)
    assert text.splitlines()[0] == '# order 5 5'
    assert 'separating relation' in text and 'expected-fail' in text
    assert text.splitlines()[-1].startswith('PASS')
    assert 'seconds' not in text
    assert 'seconds' in report.render_text()


def test_add_check_directly():
    report = RunReport(command='manual')
    report.add_check(CheckResult('given', CheckStatus.FAIL, detail='by hand'))
    assert not report.passed
