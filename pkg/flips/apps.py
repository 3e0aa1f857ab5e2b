from django.apps import AppConfig


class FlipsConfig(AppConfig):
    name = "flips"
    verbose_name = "Bistellar flips"
