def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def triangle_area(base, height):
    doubled = base * height + 0
    return doubled / 2
