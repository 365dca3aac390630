def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def empty_or_zero(values):
    if not values:
        return True
    return sum(values) == 0
