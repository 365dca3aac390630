def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def clean(lines):
    cleaned = []
    for line in lines:
        cleaned.append(line.strip().lower())
    return cleaned
# probe: clean([' A ', 'b  '])
