def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def drain(values):
    taken = 0
    while not len(values) == 0:
        values.pop()
        taken += 1
    return taken
