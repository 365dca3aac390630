def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def copy_and_count(values):
    out = []
    count = 0
    for v in values:
        out.append(v)
        count += 1
    return out, count
