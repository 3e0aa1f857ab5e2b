from django.apps import AppConfig


class HomologyConfig(AppConfig):
    name = "homology"
    verbose_name = "Field homology"
