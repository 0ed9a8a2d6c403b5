from django.db import models

# ============================================================================
# CERTIFICATE ARCHIVE
# ============================================================================

class Certificate(models.Model):
    """
    Archived proof certificate.
    The full serialized document is kept so reports can be re-rendered later.
    """
    VERDICT_CHOICES = [
        ('APWENIAN', 'Apwenian'),
        ('NOT_APWENIAN', 'Not Apwenian'),
        ('INCONCLUSIVE', 'Inconclusive'),
    ]

    pattern = models.CharField(max_length=64, db_index=True)
    d = models.PositiveIntegerField()
    verdict = models.CharField(max_length=20, choices=VERDICT_CHOICES)
    witness = models.PositiveIntegerField(null=True, blank=True)
    n_valid = models.PositiveIntegerField(null=True, blank=True)
    closure_size = models.PositiveIntegerField(null=True, blank=True)
    fast_path = models.BooleanField(default=False)
    document = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.pattern}: {self.get_verdict_display()}"

    @classmethod
    def from_document(cls, document, fast_path=False):
        """Create and save a Certificate row from a serialized certificate."""
        return cls.objects.create(
            pattern=document['pattern'],
            d=document['d'],
            verdict=document['verdict'],
            witness=document['witness'],
            n_valid=document['n_valid'],
            closure_size=document['closure_size'],
            fast_path=fast_path,
            document=document,
        )

    @property
    def is_apwenian(self):
        return self.verdict == 'APWENIAN'
