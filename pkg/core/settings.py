import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("SECRET_KEY", "django-insecure-tightway-local-only")

DEBUG = os.getenv("DEBUG", "1") == "1"

ALLOWED_HOSTS = ["localhost", "127.0.0.1"]

# Application definition

INSTALLED_APPS = [
    "complexes",
    "homology",
    "flips",
    "sigmamu",
    "tightness",
    "theorems",
    "corpus",
]

# Everything lives in memory or in JSON files.
DATABASES = {}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Logging

LOG_LEVEL = os.getenv("LOG_LEVEL") or ("INFO" if DEBUG else "WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in ["core", *INSTALLED_APPS]
    },
}


# Topology engine

SIGMA_EXHAUSTIVE_CAP = int(os.getenv("SIGMA_EXHAUSTIVE_CAP", "16"))
SIGMA_CAP_LIMIT = int(os.getenv("SIGMA_CAP_LIMIT", "22"))

# 0 means one worker per core.
TOPOLOGY_WORKERS = int(os.getenv("TOPOLOGY_WORKERS", "0"))

CORPUS_DIR = Path(os.getenv("TOPOLOGY_CORPUS_DIR") or BASE_DIR / "corpus" / "assets")

REDUCTION_BUDGET = int(os.getenv("REDUCTION_BUDGET", "100000"))
SHELLING_BUDGET = int(os.getenv("SHELLING_BUDGET", "100000"))

TIGHTNESS_CROSS_CHECK = os.getenv("TIGHTNESS_CROSS_CHECK", "1" if DEBUG else "0") == "1"
TIGHTNESS_CROSS_CHECK_CAP = int(os.getenv("TIGHTNESS_CROSS_CHECK_CAP", "12"))

REPORT_SCHEMA_VERSION = 1
