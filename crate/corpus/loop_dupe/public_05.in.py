def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def stats(values):
    lo = values[0]
    for v in values:
        lo = min(lo, v)
    hi = values[0]
    for v in values:
        hi = max(hi, v)
    return lo, hi
# probe: stats([4, 1, 9])
