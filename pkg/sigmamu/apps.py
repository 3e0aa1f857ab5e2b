from django.apps import AppConfig


class SigmamuConfig(AppConfig):
    name = "sigmamu"
    verbose_name = "Sigma and mu vectors"
