def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def helper(x):
    return x + 1
def pipeline(values):
    return [helper(v) for v in values]
