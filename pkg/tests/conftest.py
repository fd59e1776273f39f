from hypothesis import settings

settings.register_profile("powmon", deadline=None, max_examples=100)
settings.load_profile("powmon")
