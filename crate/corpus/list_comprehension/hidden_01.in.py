def pick_larger(a, b):
    if a >= b:
        return a
    return b

def render(settings):
    parts = []
    for key, value in settings.items():
        parts.append(key + '=' + str(value))
    return ';'.join(parts)
# probe: render({'a': 1, 'b': 2})
