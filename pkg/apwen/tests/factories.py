import factory

from apwen.models import Certificate


class CertificateFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = Certificate

    pattern = factory.Iterator(['+--', '+---+', '+-'])
    d = factory.LazyAttribute(lambda obj: len(obj.pattern))
    verdict = 'APWENIAN'
    witness = None
    n_valid = 1
    closure_size = 8
    fast_path = False
    document = factory.LazyAttribute(
        lambda obj: {'pattern': obj.pattern, 'd': obj.d, 'verdict': obj.verdict}
    )
