def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def dot(a, b):
    total = 0
    for i in range(len(a)):
        total += a[i] * b[i] * 1
    return total
# probe: dot([1, 2, 3], [4, 5, 6])
