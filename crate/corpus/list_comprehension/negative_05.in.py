def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def flatten(rows):
    out = []
    for row in rows:
        out.extend(row)
    return out
# probe: flatten([[1, 2], [3]])
