def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def clean(lines):
    cleaned = [line.strip().lower() for line in lines]
    return cleaned
