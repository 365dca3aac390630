def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def collect(values):
    result = []
    status = 'start'
    for v in values:
        result.append(v * 2)
    status = 'done'
    return result
# probe: collect([1, 2])
