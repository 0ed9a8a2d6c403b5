from datetime import timedelta

import pytest
from django.utils import timezone

from apwen.models import Certificate
from apwen.patterns import parse_pattern
from apwen.prover import prove
from apwen.serializers import certificate_document

from .factories import CertificateFactory

pytestmark = pytest.mark.django_db


def test_factory_builds_certificates():
    cert = CertificateFactory()
    assert cert.d == len(cert.pattern)
    assert cert.is_apwenian
    assert str(cert) == f"{cert.pattern}: Apwenian"


def test_newest_first():
    first = CertificateFactory()
    Certificate.objects.filter(pk=first.pk).update(created_at=timezone.now() - timedelta(minutes=5))
    second = CertificateFactory(verdict='NOT_APWENIAN', witness=2)
    assert list(Certificate.objects.all()) == [second, first]
    assert str(second).endswith('Not Apwenian')


def test_from_document():
    document = certificate_document(prove(parse_pattern('++')))
    row = Certificate.from_document(document)
    row.refresh_from_db()
    assert row.verdict == 'NOT_APWENIAN'
    assert row.witness == 2
    assert row.d == 2
    assert row.closure_size is None
    assert row.document['pattern'] == '++'
    assert not row.fast_path
