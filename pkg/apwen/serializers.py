import json

from rest_framework import serializers

from .recgen import generation_runs


# ============================================================================
# STATE SERIALIZERS
# ============================================================================

class StateVecSerializer(serializers.Serializer):
    """Parity bits at one index; U, V, W only when the pattern ends with -1."""
    n = serializers.IntegerField()
    X = serializers.IntegerField(source='x')
    Y = serializers.IntegerField(source='y')
    Z = serializers.IntegerField(source='z')
    U = serializers.IntegerField(source='u', allow_null=True)
    V = serializers.IntegerField(source='v', allow_null=True)
    W = serializers.IntegerField(source='w', allow_null=True)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if not instance.has_uvw:
            for key in ('U', 'V', 'W'):
                data.pop(key)
        return data


# ============================================================================
# RECURRENCE SERIALIZERS
# ============================================================================

def run_documents(system):
    listed = system.stats.get('listed_types', {})
    return [
        {
            'direction': f"{run.name} -> {run.bar_label}",
            'listed_types': listed.get(run.name, 0),
            'lines': system.lines(run.name),
        }
        for run in generation_runs(system.pattern)
    ]


class RecurrenceSystemSerializer(serializers.Serializer):
    pattern = serializers.CharField(source='pattern.word')
    d = serializers.IntegerField(source='pattern.d')
    last_sign = serializers.IntegerField(source='pattern.last_sign')
    n_valid = serializers.IntegerField(allow_null=True)
    runs = serializers.SerializerMethodField()

    def get_runs(self, system):
        return run_documents(system)


# ============================================================================
# CERTIFICATE SERIALIZERS
# ============================================================================

class CertificateSerializer(serializers.Serializer):
    """Full proof certificate with a stable field order."""
    pattern = serializers.CharField(source='pattern.word')
    d = serializers.IntegerField(source='pattern.d')
    last_sign = serializers.IntegerField(source='pattern.last_sign')
    P = serializers.SerializerMethodField()
    Q = serializers.SerializerMethodField()
    n_valid = serializers.IntegerField(allow_null=True)
    validation = serializers.SerializerMethodField()
    seed_window = StateVecSerializer(source='seeds', many=True)
    recurrences = serializers.SerializerMethodField()
    closure_size = serializers.SerializerMethodField()
    closure_iterations = serializers.SerializerMethodField()
    verdict = serializers.CharField()
    witness = serializers.IntegerField(allow_null=True)
    witness_confirmed = serializers.BooleanField(allow_null=True)
    stats = serializers.SerializerMethodField()

    def get_P(self, cert):
        return sorted(cert.pattern.P)

    def get_Q(self, cert):
        return sorted(cert.pattern.Q)

    def get_validation(self, cert):
        return cert.validation.as_dict()

    def get_recurrences(self, cert):
        return run_documents(cert.system)

    def get_closure_size(self, cert):
        return len(cert.closure) if cert.closure is not None else None

    def get_closure_iterations(self, cert):
        return cert.closure.iterations if cert.closure is not None else None

    def get_stats(self, cert):
        skip = {'closure_size', 'closure_iterations'}
        return {key: cert.stats[key] for key in sorted(cert.stats) if key not in skip}


def certificate_document(cert):
    return CertificateSerializer(cert).data


def to_json(document):
    return json.dumps(document, indent=2)
