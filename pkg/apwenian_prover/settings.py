from pathlib import Path

from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='django-insecure-apwenian-prover-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'apwen',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': config('APWEN_DATABASE', default=str(BASE_DIR / 'db.sqlite3')),
    }
}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework is used for serialization only
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': False,
}

# ============================================================================
# PROVER CONFIGURATION
# ============================================================================

APWEN = {
    'JOBS': config('APWEN_JOBS', default=1, cast=int),
    'MAX_BRUTE': config('APWEN_MAX_BRUTE', default=12, cast=int),
    'CHECK_DEPTH': config('APWEN_CHECK_DEPTH', default=3, cast=int),
    'APWENIAN_SCAN': config('APWEN_SCAN', default=128, cast=int),
    'SEED_MIN': config('APWEN_SEED_MIN', default=16, cast=int),
    'WITNESS_BOUND': config('APWEN_WITNESS_BOUND', default=100000, cast=int),
    'WITNESS_CONFIRM_BOUND': config('APWEN_WITNESS_CONFIRM_BOUND', default=1024, cast=int),
    'SEARCH_MAX_D': config('APWEN_SEARCH_MAX_D', default=13, cast=int),
    'CHECKPOINT_MIN_D': config('APWEN_CHECKPOINT_MIN_D', default=13, cast=int),
    'CHECKPOINT_DIR': config('APWEN_CHECKPOINT_DIR', default=str(BASE_DIR / 'checkpoints')),
}

# ============================================================================
# CELERY CONFIGURATION
# ============================================================================

CELERY_BROKER_URL = config('CELERY_BROKER_URL', default='')
CELERY_RESULT_BACKEND = config('CELERY_RESULT_BACKEND', default='')
# Without a broker every task runs in-process
CELERY_TASK_ALWAYS_EAGER = config('CELERY_TASK_ALWAYS_EAGER', default=not CELERY_BROKER_URL, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_ACCEPT_CONTENT = ['json']

# ============================================================================
# LOGGING
# ============================================================================

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apwen': {
            'handlers': ['console'],
            'level': config('APWEN_LOG_LEVEL', default='INFO'),
            'propagate': False,
        },
    },
}
