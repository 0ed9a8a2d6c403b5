import os

from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'apwenian_prover.settings')

app = Celery('apwenian_prover')
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()
