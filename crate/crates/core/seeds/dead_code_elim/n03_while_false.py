def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def idle(x):
    while False:
        x += 1
    return x
# probe: idle(3)
