def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def add_into(a, b):
    for i in range(len(a)):
        a[i] = a[i] + b[i]
    return a
