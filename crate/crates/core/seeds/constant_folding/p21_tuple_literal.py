def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def corners(size):
    half = 10 // 2
    return [(0, 0), (half * size, 0), (0, half * size), (half * size, 2 * 5 * size)]
# probe: corners(1)
# probe: corners(3)
