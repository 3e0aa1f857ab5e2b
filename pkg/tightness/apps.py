from django.apps import AppConfig


class TightnessConfig(AppConfig):
    name = "tightness"
    verbose_name = "Tightness"
