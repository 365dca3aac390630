def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def total(values):
    s = 0
    for v in values:
        s += v
    if False:
        print('debug', s)
    return s
# probe: total([1, 2, 3])
