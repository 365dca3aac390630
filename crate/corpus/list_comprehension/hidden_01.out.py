def pick_larger(a, b):
    if a >= b:
        return a
    return b
def render(settings):
    parts = [key + '=' + str(value) for key, value in settings.items()]
    return ';'.join(parts)
