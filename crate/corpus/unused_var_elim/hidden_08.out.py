def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def collect(values):
    result = []
    for v in values:
        result.append(v * 2)
    return result
