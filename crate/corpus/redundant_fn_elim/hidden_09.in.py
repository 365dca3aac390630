def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def setup():
    pass

def helper(x):
    return x + 1

def pipeline(values):
    setup()
    return [helper(v) for v in values]
# probe: pipeline([1, 2, 3])
