def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def sign(n):
    if n < 0:
        return -1
    elif n == 0:
        return 0
    return 1
