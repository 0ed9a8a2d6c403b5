from django.apps import AppConfig


class ApwenConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apwen'
    verbose_name = 'Apwenian prover'
