def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def metric(name, value):
    pass

def score(hits, misses):
    metric('hits', 1)
    metric('misses', None)
    return hits - misses
# probe: score(8, 3)
