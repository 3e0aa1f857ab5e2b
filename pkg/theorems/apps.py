from django.apps import AppConfig


class TheoremsConfig(AppConfig):
    name = "theorems"
    verbose_name = "Class membership and theorem checks"
