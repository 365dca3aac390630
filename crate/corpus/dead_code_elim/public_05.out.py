def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def average(values):
    if len(values) == 0:
        return 0
    return sum(values) // len(values)
